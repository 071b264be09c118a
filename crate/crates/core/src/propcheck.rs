//! Randomized checks of the period shape of split polynomials
//! `prod (1 + i x)^e_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arith::Prime;
use crate::error::Result;
use crate::fp_poly::{FpElem, FpPoly};
use crate::report::Report;

/// Largest random exponent.
const MAX_EXP: u64 = 4;

fn product(p: Prime, exps: &[u64]) -> FpPoly {
    exps.iter().enumerate().fold(FpPoly::one(p), |acc, (k, &e)| {
        let f = FpPoly::one_plus(FpElem::new(k as i64 + 1, p)).pow(e);
        acc.mul(&f).expect("same modulus")
    })
}

fn random_exponents(rng: &mut ChaCha8Rng, p: u64, symmetric: bool) -> Vec<u64> {
    let d = (p - 1) as usize;
    loop {
        let mut e: Vec<u64> = (0..d).map(|_| rng.gen_range(0..=MAX_EXP)).collect();
        if symmetric {
            // exponent of i at index i-1 must match that of p-i at index p-i-1
            for k in 0..d / 2 {
                e[d - 1 - k] = e[k];
            }
        }
        if e.iter().any(|&x| x > 0) {
            return e;
        }
    }
}

/// `trials` random products for each of the two regimes (arbitrary and
/// symmetric exponents), from a `ChaCha8` stream seeded by `seed` and `p`.
pub fn prop_check(p: Prime, trials: u64, seed: u64) -> Result<Report> {
    let pp = p.get();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ pp.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut report = Report::new(format!(
        "products of (1 + i x) over F_{pp} have support gcd m p^q with m | p - 1, and m even under i -> -i symmetry"
    ));
    let mut counts = [0u64; 4];
    let mut first_bad: [Option<Vec<u64>>; 4] = Default::default();
    let mut note = |k: usize, ok: bool, e: &[u64], counts: &mut [u64; 4]| {
        if ok {
            counts[k] += 1;
        } else if first_bad[k].is_none() {
            first_bad[k] = Some(e.to_vec());
        }
    };
    let mut symmetric_trials = 0;
    for t in 0..2 * trials {
        let symmetric = t % 2 == 1 && p.is_odd();
        let e = random_exponents(&mut rng, pp, symmetric);
        let f = product(p, &e);
        let v = f.check_period_form()?;
        note(0, v.splits && v.roots_nonzero && v.m_divides_p_minus_1, &e, &mut counts);
        if symmetric {
            symmetric_trials += 1;
            note(1, v.multiplicities_symmetric && v.m_even, &e, &mut counts);
        }
        let frob = f.pow(pp).support_gcd()? == pp * f.support_gcd()?;
        note(2, frob, &e, &mut counts);
        let split = f.linear_split()?;
        let rebuilt = split.map(|r| r.reconstruct(f.leading()) == f).unwrap_or(false);
        note(3, rebuilt, &e, &mut counts);
    }
    let names = [
        ("m divides p - 1", 2 * trials),
        ("symmetric exponents give even m", symmetric_trials),
        ("support gcd of f^p is p times that of f", 2 * trials),
        ("linear split reconstructs f", 2 * trials),
    ];
    for (k, (name, total)) in names.iter().enumerate() {
        let detail = match &first_bad[k] {
            None => format!("{} of {total}", counts[k]),
            Some(e) => format!("{} of {total}; first failure at exponents {e:?}", counts[k]),
        };
        report.check(*name, counts[k] == *total, detail);
    }
    report.witness(json!({ "p": pp, "trials": trials, "seed": seed }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass_and_repeat() {
        for p in [2u64, 3, 5, 7] {
            let p = Prime::new(p).unwrap();
            let a = prop_check(p, 20, 7).unwrap();
            assert!(a.passed(), "{a}");
            assert_eq!(a, prop_check(p, 20, 7).unwrap());
        }
    }

    #[test]
    fn symmetric_exponents() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = random_exponents(&mut rng, 7, true);
        // exponent of i sits at index i - 1
        for i in 1..7usize {
            assert_eq!(e[i - 1], e[7 - i - 1]);
        }
    }
}
