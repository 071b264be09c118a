//! Breadth-first closure of finite matrix groups and their basic structure.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, Ring};
use crate::arith::lcm;
use crate::error::{Error, Result};

/// Structure of a finite matrix group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: u64,
    pub center_order: u64,
    pub derived_order: u64,
    pub exponent: u64,
    /// Invariant factors `d_1 | d_2 | ...` of `G / [G, G]`.
    pub abelianization: Vec<u64>,
    /// `order == expected` when an expected order was supplied.
    pub faithful: Option<bool>,
}

/// All elements of the group generated by `gens`, identity first.
pub struct Closure<R: Ring> {
    elements: Vec<Matrix<R>>,
    index: HashMap<Matrix<R>, usize>,
    gens: Vec<Matrix<R>>,
}

impl<R: Ring> Closure<R> {
    pub fn new(gens: &[Matrix<R>], cap: usize) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidArgument("closure of an empty generator list".into()))?;
        if gens.iter().any(|g| !g.is_square() || g.rows() != first.rows()) {
            return Err(Error::Shape("generators of different sizes".into()));
        }
        let id = Matrix::identity(first.ctx(), first.rows());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let products: Vec<Matrix<R>> = frontier
                .par_iter()
                .flat_map_iter(|&k| gens.iter().map(move |g| (k, g)))
                .map(|(k, g)| elements[k].mul(g).expect("square of equal size"))
                .collect();
            let mut next = Vec::new();
            for m in products {
                if index.contains_key(&m) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { what: "group closure", limit: cap });
                }
                index.insert(m.clone(), elements.len());
                next.push(elements.len());
                elements.push(m);
            }
            frontier = next;
        }
        Ok(Closure {
            elements,
            index,
            gens: gens.to_vec(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<R>] {
        &self.elements
    }

    pub fn contains(&self, m: &Matrix<R>) -> bool {
        self.index.contains_key(m)
    }

    fn id_of(&self, m: &Matrix<R>) -> usize {
        self.index[m]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.id_of(&self.elements[a].mul(&self.elements[b]).expect("same size"))
    }

    fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn inverse(&self, a: usize) -> usize {
        let mut x = a;
        loop {
            let y = self.mul(x, a);
            if y == 0 {
                return x;
            }
            x = y;
        }
    }

    /// Indices of elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&k| {
                let x = &self.elements[k];
                self.gens.iter().all(|g| x.mul(g).ok() == g.mul(x).ok())
            })
            .collect()
    }

    /// Normal closure of the generator commutators.
    pub fn derived(&self) -> Vec<usize> {
        let gen_ids: Vec<usize> = self.gens.iter().map(|g| self.id_of(g)).collect();
        let gen_inv: Vec<usize> = gen_ids.iter().map(|&g| self.inverse(g)).collect();
        let mut comms = Vec::new();
        for (a, &g) in gen_ids.iter().enumerate() {
            for (b, &h) in gen_ids.iter().enumerate() {
                let c = self.mul(self.mul(g, h), self.mul(gen_inv[a], gen_inv[b]));
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let mut seen = HashSet::from([0usize]);
        let mut out = vec![0usize];
        let mut queue = vec![0usize];
        while let Some(d) = queue.pop() {
            let mut push = |x: usize| {
                if seen.insert(x) {
                    out.push(x);
                    queue.push(x);
                }
            };
            for &c in &comms {
                push(self.mul(d, c));
            }
            for (&g, &gi) in gen_ids.iter().zip(&gen_inv) {
                push(self.mul(self.mul(g, d), gi));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |e, k| lcm(e, self.element_order(k)))
    }

    /// Invariant factors of `G / N` for a normal subgroup `N` (given by indices).
    fn quotient_invariants(&self, normal: &[usize]) -> Vec<u64> {
        let nset: HashSet<usize> = normal.iter().copied().collect();
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if coset[x] != usize::MAX {
                continue;
            }
            for &d in normal {
                coset[self.mul(x, d)] = reps.len();
            }
            reps.push(x);
        }
        // order of xN in G/N
        let orders: Vec<u64> = reps
            .iter()
            .map(|&x| {
                let (mut y, mut k) = (x, 1u64);
                while !nset.contains(&y) {
                    y = self.mul(y, x);
                    k += 1;
                }
                k
            })
            .collect();
        abelian_invariants(&orders)
    }

    pub fn report(&self, expected: Option<u64>) -> GroupReport {
        let derived = self.derived();
        let order = self.order() as u64;
        GroupReport {
            order,
            center_order: self.center().len() as u64,
            derived_order: derived.len() as u64,
            exponent: self.exponent(),
            abelianization: self.quotient_invariants(&derived),
            faithful: expected.map(|e| e == order),
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn ilog(x: u64, r: u64) -> u32 {
    let (mut x, mut k) = (x, 0);
    while x > 1 {
        x /= r;
        k += 1;
    }
    k
}

/// Invariant factors of a finite abelian group from the list of its element orders.
pub fn abelian_invariants(orders: &[u64]) -> Vec<u64> {
    let n = orders.len() as u64;
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for r in prime_factors(n) {
        // c[k] = log_r #{x : x^(r^k) = 1}
        let mut c = vec![0u32];
        let mut rk = 1u64;
        loop {
            rk *= r;
            let cnt = orders.iter().filter(|&&o| rk % o == 0).count() as u64;
            c.push(ilog(cnt, r));
            if c[c.len() - 1] == c[c.len() - 2] {
                break;
            }
        }
        // factors of size >= r^k: c[k] - c[k-1]
        let ge: Vec<u32> = (1..c.len()).map(|k| c[k] - c[k - 1]).collect();
        let mut powers = Vec::new();
        for k in 0..ge.len() {
            let exact = ge[k] - ge.get(k + 1).copied().unwrap_or(0);
            for _ in 0..exact {
                powers.push(r.pow(k as u32 + 1));
            }
        }
        powers.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(powers);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<u64> = (0..len)
        .map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
        .collect();
    out.reverse();
    out
}

/// Closure plus structure report in one call.
pub fn group_closure<R: Ring>(gens: &[Matrix<R>], cap: usize, expected: Option<u64>) -> Result<GroupReport> {
    Ok(Closure::new(gens, cap)?.report(expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Zm = Matrix<BigInt>;

    #[test]
    fn cyclic_of_order_three() {
        let a = Zm::from_ints((), &[&[0, -1], &[1, -1]]);
        let r = group_closure(&[a], 100, Some(3)).unwrap();
        assert_eq!(r.order, 3);
        assert_eq!(r.center_order, 3);
        assert_eq!(r.derived_order, 1);
        assert_eq!(r.exponent, 3);
        assert_eq!(r.abelianization, vec![3]);
        assert_eq!(r.faithful, Some(true));
    }

    #[test]
    fn klein_and_dihedral() {
        let x = Zm::from_ints((), &[&[-1, 0], &[0, 1]]);
        let y = Zm::from_ints((), &[&[1, 0], &[0, -1]]);
        let r = group_closure(&[x.clone(), y], 100, None).unwrap();
        assert_eq!((r.order, r.exponent), (4, 2));
        assert_eq!(r.abelianization, vec![2, 2]);
        let s = Zm::from_ints((), &[&[0, 1], &[1, 0]]);
        let r = group_closure(&[x, s], 100, Some(8)).unwrap();
        assert_eq!(r.order, 8);
        assert_eq!((r.center_order, r.derived_order), (2, 2));
        assert_eq!(r.abelianization, vec![2, 2]);
    }

    #[test]
    fn cap_exceeded() {
        let a = Zm::from_ints((), &[&[0, -1], &[1, -1]]);
        assert!(matches!(group_closure(&[a], 2, None), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn invariants_from_orders() {
        // C2 x C4 x C3 = C2 x C12
        let mut orders = Vec::new();
        for a in 0..2u64 {
            for b in 0..4u64 {
                for c in 0..3u64 {
                    let oa = if a == 0 { 1 } else { 2 };
                    let ob = 4 / crate::arith::gcd(4, b);
                    let oc = if c == 0 { 1 } else { 3 };
                    orders.push(lcm(lcm(oa, ob), oc));
                }
            }
        }
        assert_eq!(abelian_invariants(&orders), vec![2, 12]);
        assert_eq!(abelian_invariants(&[1]), Vec::<u64>::new());
    }
}
