//! Desk-scale checks of both divisibilities behind the closed formula.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use super::formula::theorem_value;
use super::ring_desc::RingDescriptor;
use super::weights::{enumerate_multisets, ChernBound, WeightMultiset};
use crate::arith::lcm;
use crate::config::Caps;
use crate::constructions::{affine_relations_hold, affine_symplectic, cp_size, extraspecial_symplectic, AnyRep};
use crate::error::{Error, Result};
use crate::fp_poly::FpPoly;
use crate::report::Report;

const CHUNK: usize = 4096;
const MAX_COUNTEREXAMPLES: usize = 5;

/// Whether `f` lies in `F_p[x^k]`.
fn in_power_ring(f: &FpPoly, k: u64) -> bool {
    f.residues().iter().enumerate().all(|(e, &c)| c == 0 || e as u64 % k == 0)
}

struct Outcome {
    bound: u64,
    divides: bool,
    period_shape: bool,
    symmetric_shape: bool,
    rational_shape: bool,
}

fn examine(w: &WeightMultiset, rd: &RingDescriptor, target: u64) -> Result<Outcome> {
    let cb = ChernBound::of(w)?;
    let v = cb.chern.check_period_form()?;
    let odd = rd.p.is_odd();
    let period_shape = v.splits && v.roots_nonzero && v.m_divides_p_minus_1 && v.implications_hold && (!odd || v.m_even);
    let symmetric_shape = if odd {
        in_power_ring(&cb.chern, 2)
    } else {
        w.mult(1) % 2 == 0 && cb.chern.support_gcd()? % 2 == 0
    };
    Ok(Outcome {
        bound: cb.bound,
        divides: target % cb.bound == 0,
        period_shape,
        symmetric_shape,
        rational_shape: in_power_ring(&cb.chern, rd.l),
    })
}

#[derive(Default)]
struct Tally {
    count: u64,
    lcm: u64,
    first_by_bound: BTreeMap<u64, WeightMultiset>,
    bad: [Vec<Vec<u64>>; 4],
    bad_counts: [u64; 4],
}

impl Tally {
    fn absorb(&mut self, w: WeightMultiset, o: Outcome) {
        self.count += 1;
        self.lcm = if self.lcm == 0 { o.bound } else { lcm(self.lcm, o.bound) };
        let flags = [o.divides, o.period_shape, o.symmetric_shape, o.rational_shape];
        for (k, ok) in flags.into_iter().enumerate() {
            if !ok {
                self.bad_counts[k] += 1;
                if self.bad[k].len() < MAX_COUNTEREXAMPLES {
                    self.bad[k].push(w.multiplicities().to_vec());
                }
            }
        }
        self.first_by_bound.entry(o.bound).or_insert(w);
    }
}

fn enumeration_caps(n: u64, rd: &RingDescriptor, caps: &Caps) -> Result<()> {
    if rd.p.get() > caps.enum_prime {
        return Err(Error::CapExceeded {
            what: "enumeration prime",
            limit: caps.enum_prime as usize,
        });
    }
    if n > caps.enum_n {
        return Err(Error::CapExceeded {
            what: "enumeration n",
            limit: caps.enum_n as usize,
        });
    }
    Ok(())
}

/// Runs every symplectic `F`-rational weight multiset of dimension `2n`
/// through the Chern-class bound and compares with the closed formula.
pub fn verify_upper(n: u64, rd: &RingDescriptor, caps: &Caps) -> Result<Report> {
    let p = rd.p.get();
    let target = theorem_value(n, rd)?;
    enumeration_caps(n, rd, caps)?;
    let mut report = Report::new(format!(
        "every cyclic subgroup of order {p} in Sp({}, {rd}) has Chern bound dividing {target}, and the bounds reach it",
        2 * n
    ));
    report.check("theorem value", true, format!("p = {p}, l = {}, n = {n}: {target}", rd.l));

    let mut it = enumerate_multisets(n, rd, true, caps.enumeration)?;
    let mut tally = Tally::default();
    loop {
        let chunk: Vec<WeightMultiset> = it.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let outcomes = chunk
            .par_iter()
            .map(|w| examine(w, rd, target))
            .collect::<Result<Vec<_>>>()?;
        for (w, o) in chunk.into_iter().zip(outcomes) {
            tally.absorb(w, o);
        }
    }

    report.check("multisets enumerated", tally.count > 0, format!("{} symplectic multisets", tally.count));
    let names = [
        "chern bound divides theorem value".to_string(),
        "chern class has the split period shape".to_string(),
        if p == 2 {
            "even number of nontrivial summands".to_string()
        } else {
            "chern class lies in F_p[x^2]".to_string()
        },
        format!("chern class lies in F_p[x^l], l = {}", rd.l),
    ];
    for (k, name) in names.iter().enumerate() {
        let detail = if tally.bad_counts[k] == 0 {
            format!("{} of {}", tally.count, tally.count)
        } else {
            format!("{} failures, e.g. {:?}", tally.bad_counts[k], tally.bad[k])
        };
        report.check(name.clone(), tally.bad_counts[k] == 0, detail);
    }
    let bounds: Vec<u64> = tally.first_by_bound.keys().copied().collect();
    report.check(
        "lcm of bounds equals theorem value",
        tally.lcm == target,
        format!("bounds {bounds:?}, lcm {} vs {target}", tally.lcm),
    );
    for (b, w) in &tally.first_by_bound {
        report.witness(json!({
            "bound": b,
            "multiplicities": w.multiplicities(),
            "chern": w.chern_total().to_string(),
        }));
    }
    Ok(report)
}

fn log_p(mut x: u64, p: u64) -> u32 {
    let mut q = 0;
    while x > 1 {
        x /= p;
        q += 1;
    }
    q
}

/// Builds `E(p, q)` for `rd`, embeds it in `Sp(2n)` and records its checks.
/// Returns the witnessed period `2 p^q` when every check passed.
fn witness_extraspecial(q: u32, n: u64, rd: &RingDescriptor, caps: &Caps, report: &mut Report) -> Result<Option<u64>> {
    let p = rd.p.get();
    let tag = format!("E({p},{q})");
    let rep = match extraspecial_symplectic(rd, q, caps.size) {
        Ok(r) => r,
        Err(e @ Error::CapExceeded { .. }) => {
            report.check(format!("{tag}: constructed"), false, format!("skipped: {e}"));
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let sym = rep.padded(n as usize);
    let mut ok = report.check(
        format!("{tag}: symplectic in Sp({})", 2 * n),
        sym.is_ok(),
        match &sym {
            Ok(_) => format!("{} generators of size {} padded to {}", rep.generator_names().len(), rep.size(), 2 * n),
            Err(e) => e.to_string(),
        },
    );
    ok &= report.check(format!("{tag}: determinant 1"), rep.unimodular()?, "");
    let expect = p.pow(2 * q + 1);
    match rep.closure_report(caps.closure, Some(expect)) {
        Ok(g) => {
            ok &= report.check(
                format!("{tag}: closure order"),
                g.order == expect,
                format!("{} (expected {p}^{} = {expect})", g.order, 2 * q + 1),
            );
            ok &= report.check(
                format!("{tag}: center = derived subgroup of order p"),
                g.center_order == p && g.derived_order == p,
                format!("center {}, derived {}", g.center_order, g.derived_order),
            );
            ok &= report.check(
                format!("{tag}: abelianization C_p^{}", 2 * q),
                g.abelianization == vec![p; 2 * q as usize],
                format!("{:?}", g.abelianization),
            );
            report.witness(json!({
                "subgroup": tag,
                "module_rank": rep.size(),
                "group": g,
                "period": 2 * p.pow(q),
                "period_source": "trusted: E(p,m) has Yagita invariant 2p^m",
            }));
        }
        Err(e @ Error::CapExceeded { .. }) => {
            ok &= report.check(format!("{tag}: closure order"), false, format!("skipped: {e}"));
        }
        Err(e) => return Err(e),
    }
    Ok(ok.then(|| 2 * p.pow(q)))
}

/// Exhibits subgroups of `Sp(2n, O)` whose known invariants multiply up to
/// the closed formula: the affine group for `2(p-1)` and an extraspecial
/// group for the `p`-part.
pub fn verify_lower(n: u64, rd: &RingDescriptor, caps: &Caps) -> Result<Report> {
    let p = rd.p;
    let pp = p.get();
    let target = theorem_value(n, rd)?;
    let mut report = Report::new(format!(
        "Sp({}, {rd}) contains subgroups whose invariants have lcm {target}",
        2 * n
    ));
    report.check("theorem value", true, format!("p = {pp}, l = {}, n = {n}: {target}", rd.l));

    // affine group: 2(p-1)
    let aff = affine_symplectic(p)?;
    let padded = aff.padded(n as usize);
    let mut aff_ok = report.check(
        format!("affine: symplectic in Sp({})", 2 * n),
        padded.is_ok(),
        format!("generators a, b of size {} padded to {}", aff.size(), 2 * n),
    );
    let (a, b) = (aff.get("a").expect("a"), aff.get("b").expect("b"));
    aff_ok &= report.check(
        "affine: relations a^p = b^(p-1) = 1, b a b^-1 = a^g",
        affine_relations_hold(a, b, p)?,
        format!("g = {}", p.primitive_root()),
    );
    let aff_rep = AnyRep::Z(aff.clone());
    match aff_rep.closure_report(caps.closure, Some(pp * (pp - 1))) {
        Ok(g) => {
            aff_ok &= report.check(
                "affine: closure order p(p-1)",
                g.order == pp * (pp - 1),
                format!("{} (expected {})", g.order, pp * (pp - 1)),
            );
            report.witness(json!({
                "subgroup": "affine",
                "module_rank": aff.size(),
                "group": g,
                "period": 2 * (pp - 1),
                "period_source": "trusted: cohomology image generated by x^(p-1)",
            }));
        }
        Err(e @ Error::CapExceeded { .. }) => {
            aff_ok &= report.check("affine: closure order p(p-1)", false, format!("skipped: {e}"));
        }
        Err(e) => return Err(e),
    }
    let mut witnessed = if aff_ok { 2 * (pp - 1) } else { 1 };

    // p-part
    let p_part = target / (2 * (pp - 1));
    let q = log_p(p_part, pp);
    if q == 0 {
        report.check("p-part witnessed", true, "p-part is 1");
    } else {
        let s = cp_size(rd) as u64;
        let fits = |q: u32| s * pp.pow(q) <= 2 * n;
        if fits(q) {
            let got = witness_extraspecial(q, n, rd, caps, &mut report)?;
            report.check(
                "p-part witnessed",
                got.is_some(),
                format!("E({pp},{q}) on O^{}", s * p_part),
            );
            if let Some(w) = got {
                witnessed = lcm(witnessed, w);
            }
        } else {
            let q_fit = (0..q).rev().find(|&k| fits(k)).unwrap_or(0);
            report.check(
                "p-part witnessed",
                false,
                format!(
                    "E({pp},{q}) needs a module of rank {} > {}; largest embeddable is E({pp},{q_fit})",
                    s * p_part,
                    2 * n
                ),
            );
            if q_fit >= 1 {
                if let Some(w) = witness_extraspecial(q_fit, n, rd, caps, &mut report)? {
                    witnessed = lcm(witnessed, w);
                }
            }
        }
    }
    report.check(
        "witnessed periods reach theorem value",
        witnessed == target,
        format!("lcm of witnessed periods {witnessed} vs {target}"),
    );
    Ok(report)
}
