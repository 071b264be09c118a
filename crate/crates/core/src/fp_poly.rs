//! Dense polynomials over the prime field F_p, together with the tools used to
//! decide when a split polynomial lives in F_p[X^n] and what shape `n` takes.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inv, Prime};
use crate::error::{Error, Result};

/// A residue modulo a prime, stored with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u64,
    p: Prime,
}

impl FpElem {
    pub fn new(value: i64, p: Prime) -> Self {
        let m = p.get() as i64;
        FpElem {
            value: value.rem_euclid(m) as u64,
            p,
        }
    }

    pub fn zero(p: Prime) -> Self {
        FpElem { value: 0, p }
    }

    pub fn one(p: Prime) -> Self {
        FpElem { value: 1 % p.get(), p }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        FpElem {
            value: (self.value + o.value) % self.p.get(),
            p: self.p,
        }
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub fn neg(self) -> Self {
        let p = self.p.get();
        FpElem {
            value: (p - self.value) % p,
            p: self.p,
        }
    }

    pub fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        FpElem {
            value: self.value * o.value % self.p.get(),
            p: self.p,
        }
    }

    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FpElem {
                value: mod_inv(self.value, self.p.get()),
                p: self.p,
            })
        }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Polynomial over F_p in ascending-degree order, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FpPolyJson", into = "FpPolyJson")]
pub struct FpPoly {
    p: Prime,
    coeffs: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct FpPolyJson {
    p: u64,
    coeffs: Vec<i64>,
}

impl TryFrom<FpPolyJson> for FpPoly {
    type Error = Error;
    fn try_from(j: FpPolyJson) -> Result<Self> {
        Ok(FpPoly::new(Prime::new(j.p)?, &j.coeffs))
    }
}

impl From<FpPoly> for FpPolyJson {
    fn from(f: FpPoly) -> Self {
        FpPolyJson {
            p: f.p.get(),
            coeffs: f.coeffs.iter().map(|&c| c as i64).collect(),
        }
    }
}

impl FpPoly {
    /// Builds a polynomial from integer coefficients, reducing each mod `p`.
    pub fn new(p: Prime, coeffs: &[i64]) -> Self {
        let m = p.get() as i64;
        Self::from_residues(p, coeffs.iter().map(|c| c.rem_euclid(m) as u64).collect())
    }

    fn from_residues(p: Prime, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: Prime) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: Prime) -> Self {
        Self::from_residues(p, vec![1])
    }

    /// `c * x^k`
    pub fn monomial(c: FpElem, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c.value();
        Self::from_residues(c.modulus(), coeffs)
    }

    /// The linear factor `1 + i*x`.
    pub fn one_plus(i: FpElem) -> Self {
        Self::from_residues(i.modulus(), vec![1, i.value()])
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> FpElem {
        FpElem {
            value: self.coeffs.get(k).copied().unwrap_or(0),
            p: self.p,
        }
    }

    /// Coefficients as residues in `[0, p)`, index = exponent.
    pub fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading(&self) -> FpElem {
        self.coeff(self.coeffs.len().saturating_sub(1))
    }

    pub fn eval(&self, x: FpElem) -> FpElem {
        let p = self.p.get();
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x.value() + c) % p);
        FpElem { value: v, p: self.p }
    }

    fn check(&self, other: &FpPoly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    pub fn add(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        let p = self.p.get();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| (self.coeffs.get(k).unwrap_or(&0) + other.coeffs.get(k).unwrap_or(&0)) % p)
            .collect();
        Ok(Self::from_residues(self.p, coeffs))
    }

    pub fn mul(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.p));
        }
        let p = self.p.get();
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Ok(Self::from_residues(self.p, out))
    }

    pub fn pow(&self, mut k: u64) -> FpPoly {
        let mut acc = Self::one(self.p);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same modulus");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same modulus");
            }
        }
        acc
    }

    /// Divides by `(X - r)` assuming `r` is a root; returns the quotient.
    fn deflate(&self, r: u64) -> FpPoly {
        let p = self.p.get();
        let d = self.coeffs.len() - 1;
        let mut q = vec![0u64; d];
        let mut carry = 0u64;
        for k in (1..=d).rev() {
            carry = (self.coeffs[k] + carry * r) % p;
            q[k - 1] = carry;
        }
        Self::from_residues(self.p, q)
    }

    /// Roots in F_p with multiplicity, plus the root-free residual factor.
    fn roots_and_residual(&self) -> (RootMultiset, FpPoly) {
        let mut f = self.clone();
        let mut roots = RootMultiset::empty(self.p);
        for r in 0..self.p.get() {
            let x = FpElem { value: r, p: self.p };
            while f.degree().unwrap_or(0) > 0 && f.eval(x).is_zero() {
                f = f.deflate(r);
                *roots.mult.entry(r).or_insert(0) += 1;
            }
        }
        (roots, f)
    }

    /// Root multiset when `self` is a product of linear factors over F_p.
    ///
    /// Returns `None` when some irreducible factor of degree > 1 remains.
    pub fn linear_split(&self) -> Result<Option<RootMultiset>> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "linear_split of the zero polynomial".into(),
            ));
        }
        let (roots, residual) = self.roots_and_residual();
        Ok(if residual.is_constant() { Some(roots) } else { None })
    }

    /// Largest `n` with `self(X) = g(X^n)`: the gcd of exponents carrying
    /// nonzero coefficients.
    pub fn support_gcd(&self) -> Result<u64> {
        if self.is_constant() {
            return Err(Error::Precondition(
                "support_gcd needs a non-constant polynomial".into(),
            ));
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c != 0)
            .fold(0u64, |g, (k, _)| gcd(g, k as u64)))
    }

    /// Classifies `self` against the divisibility shape of its support gcd.
    pub fn check_period_form(&self) -> Result<PeriodVerdict> {
        if self.is_constant() {
            return Err(Error::Precondition(
                "check_period_form needs a non-constant polynomial".into(),
            ));
        }
        if self.coeffs[0] == 0 {
            return Err(Error::Precondition(
                "check_period_form needs a nonzero constant term".into(),
            ));
        }
        let p = self.p.get();
        let (roots, residual) = self.roots_and_residual();
        let splits = residual.is_constant();
        let roots_nonzero = roots.multiplicity(0) == 0;
        let decomposition = decompose_mpq(self.support_gcd()?, self.p)?;
        let m = decomposition.m;
        let m_divides_p_minus_1 = (p - 1) % m == 0;
        let multiplicities_symmetric =
            (1..p).all(|i| roots.multiplicity(i) == roots.multiplicity(p - i));
        let m_even = m % 2 == 0;
        let hypotheses = splits && roots_nonzero;
        let implications_hold = (!hypotheses || m_divides_p_minus_1)
            && (!(hypotheses && multiplicities_symmetric && self.p.is_odd()) || m_even);
        Ok(PeriodVerdict {
            splits,
            roots_nonzero,
            roots,
            decomposition,
            m_divides_p_minus_1,
            multiplicities_symmetric,
            m_even,
            implications_hold,
        })
    }

    /// Parses `c0 + c1*x + c2*x^2 ...`; coefficients may be signed and are
    /// reduced mod `p`. Terms may appear in any order and repeat.
    pub fn parse(p: Prime, text: &str) -> Result<FpPoly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let bytes = s.as_bytes();
        let mut sign = 1i64;
        let lead = usize::from(bytes[0] == b'+' || bytes[0] == b'-');
        if bytes[0] == b'-' {
            sign = -1;
        }
        let mut start = lead;
        for i in lead..=bytes.len() {
            let at_end = i == bytes.len();
            let is_sep = !at_end && (bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^';
            if at_end || is_sep {
                terms.push((sign, &s[start..i]));
                if !at_end {
                    sign = if bytes[i] == b'-' { -1 } else { 1 };
                    start = i + 1;
                }
            }
        }
        let m = p.get() as i64;
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (sign, term) in terms {
            let (coef, exp) = parse_term(term)?;
            let e = acc.entry(exp).or_insert(0);
            *e = (*e + sign * coef.rem_euclid(m)).rem_euclid(m);
        }
        let deg = acc.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![0i64; deg + 1];
        for (k, c) in acc {
            coeffs[k] = c;
        }
        Ok(FpPoly::new(p, &coeffs))
    }
}

fn parse_term(term: &str) -> Result<(i64, usize)> {
    let bad = || Error::Parse(format!("bad term `{term}`"));
    if term.is_empty() {
        return Err(bad());
    }
    match term.find('x') {
        None => Ok((term.parse::<i64>().map_err(|_| bad())?, 0)),
        Some(pos) => {
            let coef_part = term[..pos].trim_end_matches('*');
            let coef = if coef_part.is_empty() {
                1
            } else {
                coef_part.parse::<i64>().map_err(|_| bad())?
            };
            let rest = &term[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?
            };
            Ok((coef, exp))
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Parses the `p:poly` shorthand, e.g. `5:1 + 4*x^4`.
impl FromStr for FpPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (p, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected `p:polynomial`".into()))?;
        let p = p
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad modulus `{p}`")))?;
        FpPoly::parse(Prime::new(p)?, body)
    }
}

/// Multiset of roots in F_p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootMultiset {
    #[serde(skip)]
    p: Prime,
    mult: BTreeMap<u64, usize>,
}

impl RootMultiset {
    fn empty(p: Prime) -> Self {
        RootMultiset {
            p,
            mult: BTreeMap::new(),
        }
    }

    pub fn multiplicity(&self, r: u64) -> usize {
        self.mult.get(&(r % self.p.get())).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    /// `(root, multiplicity)` pairs in increasing root order.
    pub fn iter(&self) -> impl Iterator<Item = (FpElem, usize)> + '_ {
        self.mult
            .iter()
            .map(|(&r, &k)| (FpElem { value: r, p: self.p }, k))
    }

    /// `c * prod (X - r)` over the multiset.
    pub fn reconstruct(&self, c: FpElem) -> FpPoly {
        let p = self.p;
        self.iter().fold(FpPoly::monomial(c, 0), |acc, (r, k)| {
            let lin = FpPoly::from_residues(p, vec![r.neg().value(), 1]);
            acc.mul(&lin.pow(k as u64)).expect("same modulus")
        })
    }
}

/// `n = m * p^q` with `p` not dividing `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodDecomposition {
    pub n_max: u64,
    pub m: u64,
    pub q: u32,
}

pub fn decompose_mpq(n: u64, p: Prime) -> Result<PeriodDecomposition> {
    if n == 0 {
        return Err(Error::Precondition("decompose_mpq needs n >= 1".into()));
    }
    let (mut m, mut q) = (n, 0u32);
    while m % p.get() == 0 {
        m /= p.get();
        q += 1;
    }
    Ok(PeriodDecomposition { n_max: n, m, q })
}

/// Outcome of [`FpPoly::check_period_form`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodVerdict {
    pub splits: bool,
    pub roots_nonzero: bool,
    /// Roots found in F_p (all of them when `splits`).
    pub roots: RootMultiset,
    pub decomposition: PeriodDecomposition,
    pub m_divides_p_minus_1: bool,
    pub multiplicities_symmetric: bool,
    pub m_even: bool,
    /// split with nonzero roots implies `m | p-1`; if moreover the root
    /// multiplicities are symmetric under `i -> -i` and `p` is odd, `m` is even.
    pub implications_hold: bool,
}

impl PeriodVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}
