//! Weight multisets of a cyclic subgroup of order `p` and their total Chern
//! classes in `F_p[x]`.

use serde::Serialize;

use super::ring_desc::{unit_cosets, RingDescriptor};
use crate::arith::{mod_pow, Prime};
use crate::error::{Error, Result};
use crate::fp_poly::{FpElem, FpPoly};

/// Multiplicity of each character `i in F_p` in a representation of `C_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightMultiset {
    #[serde(serialize_with = "ser_prime")]
    p: Prime,
    mult: Vec<u64>,
}

fn ser_prime<S: serde::Serializer>(p: &Prime, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(p.get())
}

impl WeightMultiset {
    pub fn new(p: Prime, mult: Vec<u64>) -> Result<Self> {
        if mult.len() != p.get() as usize {
            return Err(Error::Shape(format!(
                "weight multiset over F_{p} needs {p} entries, got {}",
                mult.len()
            )));
        }
        Ok(WeightMultiset { p, mult })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn mult(&self, i: u64) -> u64 {
        self.mult[(i % self.p.get()) as usize]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn dimension(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn is_faithful(&self) -> bool {
        self.mult[1..].iter().any(|&k| k > 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let p = self.p.get();
        (1..p).all(|i| self.mult(i) == self.mult(p - i))
    }

    /// Multiplicity constant on each coset of `H_l`.
    pub fn is_rational(&self, l: u64) -> bool {
        unit_cosets(self.p, l)
            .iter()
            .all(|c| c.iter().all(|&i| self.mult(i) == self.mult(c[0])))
    }

    /// `prod_i (1 + i x)^mult(i)`.
    pub fn chern_total(&self) -> FpPoly {
        let p = self.p;
        (1..p.get())
            .filter(|&i| self.mult(i) > 0)
            .fold(FpPoly::one(p), |acc, i| {
                let f = FpPoly::one_plus(FpElem::new(i as i64, p)).pow(self.mult(i));
                acc.mul(&f).expect("same modulus")
            })
    }
}

/// Upper bound `2 * support_gcd(c(rho))` for the Yagita contribution of one
/// cyclic subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernBound {
    pub chern: FpPoly,
    pub bound: u64,
}

impl ChernBound {
    pub fn of(w: &WeightMultiset) -> Result<Self> {
        let chern = w.chern_total();
        let bound = 2 * chern.support_gcd()?;
        Ok(ChernBound { chern, bound })
    }
}

/// A block of cosets whose multiplicities move together, with the allowed
/// step for their common multiplicity.
#[derive(Clone, Debug)]
struct Orbit {
    members: Vec<u64>,
    step: u64,
}

impl Orbit {
    fn width(&self) -> u64 {
        self.members.len() as u64 * self.step
    }
}

fn orbits(rd: &RingDescriptor, symplectic: bool) -> Vec<Orbit> {
    let p = rd.p.get();
    if p == 2 {
        // one nontrivial character; symplectic forces an even count
        let step = if symplectic { 2 } else { 1 };
        return vec![Orbit { members: vec![1], step }];
    }
    let cosets = rd.cosets();
    let mut taken = vec![false; cosets.len()];
    let mut out = Vec::new();
    for (a, c) in cosets.iter().enumerate() {
        if taken[a] {
            continue;
        }
        taken[a] = true;
        let mut members = c.clone();
        if symplectic {
            let neg = p - c[0];
            if let Some(b) = cosets.iter().position(|d| d.contains(&neg)) {
                if !taken[b] {
                    taken[b] = true;
                    members.extend_from_slice(&cosets[b]);
                    members.sort_unstable();
                }
            }
        }
        out.push(Orbit { members, step: 1 });
    }
    out
}

/// Number of faithful multisets, saturating at `u128::MAX`.
fn count(orbits: &[Orbit], budget: u64) -> u128 {
    // ways[d] = number of orbit multiplicity vectors using exactly d dimensions
    let mut ways = vec![0u128; budget as usize + 1];
    ways[0] = 1;
    for o in orbits {
        let w = o.width() as usize;
        for d in w..=budget as usize {
            ways[d] = ways[d].saturating_add(ways[d - w]);
        }
    }
    ways.iter().fold(0u128, |a, &b| a.saturating_add(b)) - 1
}

/// Iterator over faithful weight multisets of total dimension `2n`, in
/// lexicographic order of orbit multiplicities.
pub struct Multisets {
    p: Prime,
    orbits: Vec<Orbit>,
    budget: u64,
    ks: Vec<u64>,
    used: u64,
    done: bool,
}

impl Multisets {
    pub fn len_hint(&self) -> u128 {
        count(&self.orbits, self.budget)
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.orbits.len()).rev() {
            let w = self.orbits[i].width();
            if self.used + w <= self.budget {
                self.ks[i] += 1;
                self.used += w;
                return true;
            }
            self.used -= self.ks[i] * w;
            self.ks[i] = 0;
        }
        false
    }

    fn current(&self) -> WeightMultiset {
        let mut mult = vec![0u64; self.p.get() as usize];
        for (o, &k) in self.orbits.iter().zip(&self.ks) {
            for &i in &o.members {
                mult[i as usize] = k * o.step;
            }
        }
        mult[0] = self.budget - self.used;
        WeightMultiset { p: self.p, mult }
    }
}

impl Iterator for Multisets {
    type Item = WeightMultiset;

    fn next(&mut self) -> Option<WeightMultiset> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// All faithful `F`-rational multisets of dimension `2n`; with `symplectic`,
/// also `mult(i) = mult(-i)` and, for `p = 2`, an even number of nontrivial
/// summands. Fails when more than `cap` would be produced.
pub fn enumerate_multisets(
    n: u64,
    rd: &RingDescriptor,
    symplectic: bool,
    cap: usize,
) -> Result<Multisets> {
    let orbits = orbits(rd, symplectic);
    let budget = 2 * n;
    let it = Multisets {
        p: rd.p,
        ks: vec![0; orbits.len()],
        orbits,
        budget,
        used: 0,
        done: false,
    };
    if it.len_hint() > cap as u128 {
        return Err(Error::CapExceeded {
            what: "multiset enumeration",
            limit: cap,
        });
    }
    Ok(it)
}

/// Outcome of expanding the rational Chern classes coset by coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalChernVerdict {
    pub p: u64,
    pub l: u64,
    /// `(coset, i)` with `prod_{j in coset} (1 + j x) = 1 - i x^l`; `i` is
    /// `None` when the product has a different shape.
    pub cosets: Vec<(Vec<u64>, Option<u64>)>,
    /// Distinct realized values of `i`.
    pub realized: Vec<u64>,
    pub pass: bool,
}

pub fn rational_chern_check(p: Prime, l: u64) -> Result<RationalChernVerdict> {
    let pp = p.get();
    if l == 0 || (pp - 1) % l != 0 {
        return Err(Error::Precondition(format!("l = {l} must divide p - 1 = {}", pp - 1)));
    }
    let mut cosets = Vec::new();
    for c in unit_cosets(p, l) {
        let f = c.iter().fold(FpPoly::one(p), |acc, &j| {
            acc.mul(&FpPoly::one_plus(FpElem::new(j as i64, p))).expect("same modulus")
        });
        let shaped = f.degree() == Some(l as usize)
            && f.coeff(0).value() == 1
            && (1..l as usize).all(|k| f.coeff(k).is_zero());
        let i = shaped.then(|| f.coeff(l as usize).neg().value());
        cosets.push((c, i));
    }
    let mut realized: Vec<u64> = cosets.iter().filter_map(|(_, i)| *i).collect();
    realized.sort_unstable();
    realized.dedup();
    let pass = cosets.iter().all(|(_, i)| i.is_some());
    Ok(RationalChernVerdict {
        p: pp,
        l,
        cosets,
        realized,
        pass,
    })
}

/// The `l`-th powers in `F_p^*`, which is where the realized `i` must land.
pub fn lth_powers(p: Prime, l: u64) -> Vec<u64> {
    let pp = p.get();
    let mut v: Vec<u64> = (1..pp).map(|x| mod_pow(x, l, pp)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn all(n: u64, rd: &RingDescriptor, symplectic: bool) -> Vec<Vec<u64>> {
        enumerate_multisets(n, rd, symplectic, 1_000_000)
            .unwrap()
            .map(|w| w.multiplicities().to_vec())
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        let z3 = RingDescriptor::integers(pr(3));
        assert_eq!(all(2, &z3, true), vec![vec![2, 1, 1], vec![0, 2, 2]]);
        let z2 = RingDescriptor::integers(pr(2));
        assert_eq!(all(1, &z2, true), vec![vec![0, 2]]);
        assert_eq!(all(1, &z2, false), vec![vec![1, 1], vec![0, 2]]);
    }

    /// Brute force over every multiplicity vector of total `2n`.
    fn brute(n: u64, rd: &RingDescriptor, symplectic: bool) -> Vec<Vec<u64>> {
        let p = rd.p.get() as usize;
        let total = 2 * n;
        let mut out = Vec::new();
        let mut v = vec![0u64; p];
        fn rec(k: usize, left: u64, v: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if k + 1 == v.len() {
                v[k] = left;
                out.push(v.clone());
                return;
            }
            for x in 0..=left {
                v[k] = x;
                rec(k + 1, left - x, v, out);
            }
        }
        rec(0, total, &mut v, &mut out);
        let mut keep: Vec<Vec<u64>> = out
            .into_iter()
            .filter(|m| {
                let w = WeightMultiset::new(rd.p, m.clone()).unwrap();
                w.is_faithful()
                    && w.is_rational(rd.l)
                    && (!symplectic || w.is_symmetric())
                    && (!symplectic || p != 2 || m[1] % 2 == 0)
            })
            .collect();
        keep.sort();
        keep
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for p in [2u64, 3, 5, 7] {
            for rd in RingDescriptor::presets(pr(p))
                .into_iter()
                .chain((1..p).filter(|l| (p - 1) % l == 0).map(|l| RingDescriptor::custom(pr(p), l).unwrap()))
            {
                for n in 1..=3 {
                    for symplectic in [false, true] {
                        let mut got = all(n, &rd, symplectic);
                        let hint = enumerate_multisets(n, &rd, symplectic, usize::MAX).unwrap().len_hint();
                        assert_eq!(hint as usize, got.len());
                        got.sort();
                        assert_eq!(got, brute(n, &rd, symplectic), "p={p} l={} n={n}", rd.l);
                    }
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c7 = RingDescriptor::cyclotomic(pr(7));
        assert!(matches!(
            enumerate_multisets(10, &c7, false, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn chern_examples() {
        let w = WeightMultiset::new(pr(3), vec![2, 1, 1]).unwrap();
        assert_eq!(w.chern_total(), FpPoly::new(pr(3), &[1, 0, 2]));
        let w = WeightMultiset::new(pr(5), vec![0, 1, 1, 1, 1]).unwrap();
        assert_eq!(w.chern_total(), FpPoly::new(pr(5), &[1, 0, 0, 0, -1]));
        let w = WeightMultiset::new(pr(5), vec![6, 0, 0, 0, 0]).unwrap();
        assert_eq!(w.chern_total(), FpPoly::one(pr(5)));
        assert!(!w.is_faithful());
        let b = ChernBound::of(&WeightMultiset::new(pr(2), vec![0, 2]).unwrap()).unwrap();
        assert_eq!(b.bound, 4);
    }

    #[test]
    fn rational_chern_examples() {
        let v = rational_chern_check(pr(5), 4).unwrap();
        assert!(v.pass);
        assert_eq!(v.realized, vec![1]);
        let v = rational_chern_check(pr(5), 2).unwrap();
        assert_eq!(v.cosets[0], (vec![1, 4], Some(1)));
        assert_eq!(v.cosets[1], (vec![2, 3], Some(4)));
        for p in [3u64, 5, 7, 11, 13] {
            let v = rational_chern_check(pr(p), 1).unwrap();
            assert!(v.pass);
            // 1 + j x = 1 - (-j) x
            assert_eq!(v.realized, (1..p).collect::<Vec<_>>());
        }
        assert!(rational_chern_check(pr(7), 4).is_err());
    }

    #[test]
    fn realized_set_is_lth_powers() {
        for p in [3u64, 5, 7, 11, 13] {
            for l in (1..p).filter(|l| (p - 1) % l == 0) {
                let v = rational_chern_check(pr(p), l).unwrap();
                assert!(v.pass);
                assert_eq!(v.realized, lth_powers(pr(p), l), "p={p} l={l}");
                assert_eq!(v.realized.len() as u64, (p - 1) / l);
            }
        }
    }
}
