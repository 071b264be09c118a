//! Arithmetic in Q(zeta_p) and Z[zeta_p] on the power basis 1, zeta, ..., zeta^(p-2).
//!
//! Products are reduced with zeta^p = 1 followed by
//! zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{self, RingTag};
use crate::arith::Prime;
use crate::error::{Error, Result};

/// Element of Q(zeta_p): `(num_0 + num_1 zeta + ... + num_{p-2} zeta^{p-2}) / den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    p: Prime,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn dim(p: Prime) -> usize {
        p.get() as usize - 1
    }

    /// Builds from numerators on the power basis and a nonzero denominator.
    /// Shorter coefficient lists are zero-padded.
    pub fn new(p: Prime, num: Vec<BigInt>, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = Self::dim(p);
        if num.len() > d {
            return Err(Error::Shape(format!(
                "{} coefficients for Q(zeta_{p}) of degree {d}",
                num.len()
            )));
        }
        let mut num = num;
        num.resize(d, BigInt::zero());
        let mut x = CycNum { p, num, den };
        x.normalize();
        Ok(x)
    }

    pub fn from_ints(p: Prime, coeffs: &[i64]) -> Result<Self> {
        Self::new(p, coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn from_rational(p: Prime, r: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); Self::dim(p)];
        num[0] = r.numer().clone();
        let mut x = CycNum {
            p,
            num,
            den: r.denom().clone(),
        };
        x.normalize();
        x
    }

    /// Builds from an arbitrary-length integer vector indexed by exponent,
    /// reducing every power of zeta.
    fn from_exponent_vec(p: Prime, acc: Vec<BigInt>, den: BigInt) -> Self {
        let pp = p.get() as usize;
        let mut folded = vec![BigInt::zero(); pp];
        for (k, c) in acc.into_iter().enumerate() {
            folded[k % pp] += c;
        }
        let top = folded.pop().expect("p >= 2");
        let num = folded.into_iter().map(|c| c - &top).collect();
        let mut x = CycNum { p, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| g.gcd(c));
        if !g.is_one() && !g.is_zero() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
    }

    pub fn zero(p: Prime) -> Self {
        CycNum {
            p,
            num: vec![BigInt::zero(); Self::dim(p)],
            den: BigInt::one(),
        }
    }

    pub fn one(p: Prime) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: Prime, v: i64) -> Self {
        let mut x = Self::zero(p);
        x.num[0] = BigInt::from(v);
        x
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(p: Prime, k: i64) -> Self {
        let pp = p.get() as i64;
        let e = k.rem_euclid(pp) as usize;
        let mut acc = vec![BigInt::zero(); e + 1];
        acc[e] = BigInt::one();
        Self::from_exponent_vec(p, acc, BigInt::one())
    }

    pub fn zeta(p: Prime) -> Self {
        Self::zeta_pow(p, 1)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// If `self` is a rational number, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.p, o.p, "cyclotomic prime mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let num = self
            .num
            .iter()
            .zip(&o.num)
            .map(|(a, b)| a * &o.den + b * &self.den)
            .collect();
        let mut x = CycNum {
            p: self.p,
            num,
            den: &self.den * &o.den,
        };
        x.normalize();
        x
    }

    pub fn neg(&self) -> Self {
        CycNum {
            p: self.p,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let d = self.num.len();
        let mut acc = vec![BigInt::zero(); 2 * d];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] += a * b;
                }
            }
        }
        Self::from_exponent_vec(self.p, acc, &self.den * &o.den)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rational(self.p, r))
    }

    /// Image under the automorphism `zeta -> zeta^a` (`a` prime to `p`).
    pub fn galois(&self, a: u64) -> Self {
        let pp = self.p.get() as usize;
        let a = a as usize % pp;
        assert!(a != 0, "galois exponent must be prime to p");
        let mut acc = vec![BigInt::zero(); pp];
        for (k, c) in self.num.iter().enumerate() {
            acc[(k * a) % pp] += c;
        }
        Self::from_exponent_vec(self.p, acc, self.den.clone())
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois(self.p.get() - 1)
    }

    /// Field trace down to Q, using Tr(1) = p-1 and Tr(zeta^k) = -1.
    pub fn trace(&self) -> BigRational {
        let p1 = BigInt::from(self.p.get() - 1);
        let rest: BigInt = self.num[1..].iter().sum();
        BigRational::new(&self.num[0] * p1 - rest, self.den.clone())
    }

    /// Field norm down to Q, as the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = (1..self.p.get()).fold(Self::one(self.p), |acc, a| acc.mul(&self.galois(a)));
        prod.as_rational().expect("norm is rational")
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.num.len();
        let phi: Vec<BigRational> = vec![BigRational::one(); d + 1];
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = qpoly::inverse_mod(&a, &phi);
        // s * a = g (const) mod phi, so a^-1 = s / g; the den factor comes back in.
        let scale = BigRational::from_integer(self.den.clone()) / g;
        let coeffs: Vec<BigRational> = s.into_iter().map(|c| c * &scale).collect();
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::new(self.p, num, den)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: u64) -> Self {
        (0..k).fold(Self::one(self.p), |acc, _| acc.mul(self))
    }

    /// `Some(k)` with `0 <= k < p` if `self == zeta^k`.
    pub fn as_zeta_power(&self) -> Option<u64> {
        (0..self.p.get()).find(|&k| *self == Self::zeta_pow(self.p, k as i64))
    }
}

/// Minimal rational polynomial helpers for the Euclidean inverse.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (vec![], r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = &r[r.len() - 1] / &lead;
            for (i, bc) in b.iter().enumerate() {
                r[k + i] = &r[k + i] - &c * bc;
            }
            q[k] = c;
            r = trim(r);
        }
        (q, r)
    }

    fn sub_mul(s0: &[BigRational], q: &[BigRational], s1: &[BigRational]) -> Vec<BigRational> {
        let n = s0.len().max(q.len() + s1.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in s0.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, a) in q.iter().enumerate() {
            for (j, b) in s1.iter().enumerate() {
                out[i + j] = &out[i + j] - a * b;
            }
        }
        trim(out)
    }

    /// Returns `(g, s)` with `s * a == g (mod m)` and `g` a nonzero constant.
    /// `a` must be nonzero modulo the irreducible `m`.
    pub(super) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> (BigRational, Vec<BigRational>) {
        let (mut r0, mut r1) = (trim(m.to_vec()), trim(a.to_vec()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::from_integer(1.into())]);
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "gcd must be a constant");
        let (_, s) = divmod(&s0, m);
        (r0[0].clone(), s)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = match (body.is_empty(), c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coef = if k > 0 && mag.is_one() { String::new() } else if k > 0 { format!("{mag}*") } else { mag.to_string() };
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            body.push_str(&format!("{sign}{coef}{var}"));
        }
        if body.is_empty() {
            body.push('0');
        }
        if self.den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

impl ring::Ring for CycNum {
    type Ctx = Prime;
    const TAG: RingTag = RingTag::Qzeta;

    fn ctx(&self) -> Prime {
        self.p
    }
    fn zero(p: Prime) -> Self {
        CycNum::zero(p)
    }
    fn one(p: Prime) -> Self {
        CycNum::one(p)
    }
    fn from_int(p: Prime, v: i64) -> Self {
        CycNum::from_int(p, v)
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        CycNum::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        CycNum::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        CycNum::mul(self, o)
    }
    fn neg(&self) -> Self {
        CycNum::neg(self)
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.div(o).ok()
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
}

/// Element of the ring of integers Z[zeta_p].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt(CycNum);

impl CycInt {
    pub fn new(x: CycNum) -> Result<Self> {
        if x.is_integral() {
            Ok(CycInt(x))
        } else {
            Err(Error::InvalidArgument(format!("{x} is not in Z[zeta]")))
        }
    }

    pub fn from_ints(p: Prime, coeffs: &[i64]) -> Result<Self> {
        CycNum::from_ints(p, coeffs).map(CycInt)
    }

    pub fn zeta_pow(p: Prime, k: i64) -> Self {
        CycInt(CycNum::zeta_pow(p, k))
    }

    pub fn zeta(p: Prime) -> Self {
        Self::zeta_pow(p, 1)
    }

    pub fn as_num(&self) -> &CycNum {
        &self.0
    }

    pub fn into_num(self) -> CycNum {
        self.0
    }

    pub fn conj(&self) -> Self {
        CycInt(self.0.conj())
    }

    pub fn galois(&self, a: u64) -> Self {
        CycInt(self.0.galois(a))
    }

    pub fn as_zeta_power(&self) -> Option<u64> {
        self.0.as_zeta_power()
    }

    /// Integer value if `self` lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.0.as_rational().map(|r| r.numer().clone())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl ring::Ring for CycInt {
    type Ctx = Prime;
    const TAG: RingTag = RingTag::Zzeta;

    fn ctx(&self) -> Prime {
        self.0.p
    }
    fn zero(p: Prime) -> Self {
        CycInt(CycNum::zero(p))
    }
    fn one(p: Prime) -> Self {
        CycInt(CycNum::one(p))
    }
    fn from_int(p: Prime, v: i64) -> Self {
        CycInt(CycNum::from_int(p, v))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        CycInt(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        CycInt(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        CycInt(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        CycInt(self.0.neg())
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        self.0.div(&o.0).ok().and_then(|q| CycInt::new(q).ok())
    }
    fn is_unit(&self) -> bool {
        !self.0.is_zero() && One::is_one(&self.0.norm().abs())
    }
}
