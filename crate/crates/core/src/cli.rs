//! Command-line front end: argument parsing, configuration merging and
//! report rendering. `main` only forwards to [`main_with_args`].

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::ExactMatrix;
use crate::arith::Prime;
use crate::config::{read_kv_file, Caps, DEFAULT_SEED};
use crate::constructions::{
    affine_relations_hold, affine_symplectic, cp_generator, cp_strategy, extraspecial_monomial,
    extraspecial_symplectic, group_closure, AnyRep,
};
use crate::error::{Error, Result};
use crate::fp_poly::FpPoly;
use crate::invariant::{gl_value, theorem_value, verify_lower, verify_upper, RingDescriptor};
use crate::propcheck::prop_check;
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "yagita", version, about = "Yagita invariants of integral symplectic groups, exactly")]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// `key=value` file with defaults for any flag; flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads for enumeration and closure.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the closed formula.
    Invariant(Params),
    /// Check every Chern-class bound against the formula.
    VerifyUpper(Params),
    /// Build subgroups witnessing the formula.
    VerifyLower(Params),
    /// Randomized period-shape checks for split polynomials.
    PropCheck(PropArgs),
    /// Build and close one of the explicit groups.
    Construct(ConstructArgs),
    /// Classify one polynomial over F_p.
    PeriodForm(PeriodArgs),
}

#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long)]
    p: Option<u64>,
    /// `N` or an inclusive range `A..B`.
    #[arg(long)]
    n: Option<String>,
    /// `Z`, `Zzeta`, `real` or `custom:L`.
    #[arg(long)]
    ring: Option<String>,
}

#[derive(Args, Debug, Default)]
struct PropArgs {
    /// Defaults to 3, 5, 7, 11 and 13.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Cp,
    Affine,
    Extraspecial,
}

#[derive(Args, Debug, Default)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    group: Option<GroupKind>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    ring: Option<String>,
    /// Number of factors of the extraspecial group.
    #[arg(long)]
    m: Option<u32>,
    /// Extraspecial only: the raw monomial model over Z[zeta_p].
    #[arg(long)]
    monomial: bool,
}

#[derive(Args, Debug, Default)]
struct PeriodArgs {
    #[arg(long)]
    p: Option<u64>,
    /// E.g. `1 + 4*x^4`.
    #[arg(long)]
    poly: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Invariant,
    VerifyUpper,
    VerifyLower,
    PropCheck,
    Construct,
    PeriodForm,
}

/// Fully resolved settings for one run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub p: Option<u64>,
    pub n: Vec<u64>,
    pub ring: String,
    pub caps: Caps,
    pub seed: u64,
    pub trials: u64,
    pub group: Option<GroupKind>,
    pub m: u32,
    pub monomial: bool,
    pub poly: Option<String>,
    pub json: bool,
    pub jobs: usize,
}

fn parse_n(text: &str) -> Result<Vec<u64>> {
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad n `{s}`")))
    };
    let out: Vec<u64> = match text.split_once("..") {
        Some((a, b)) => (num(a)?..=num(b.trim_start_matches('='))?).collect(),
        None => vec![num(text)?],
    };
    if out.is_empty() || out.contains(&0) {
        return Err(Error::InvalidArgument(format!("n must be a positive integer or range, got `{text}`")));
    }
    Ok(out)
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v.trim() {
        "1" | "true" | "yes" | "on" => Ok(true),
        "0" | "false" | "no" | "off" => Ok(false),
        _ => Err(Error::Parse(format!("bad boolean `{v}` for `{key}`"))),
    }
}

fn parse_u<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim().parse().map_err(|_| Error::Parse(format!("bad value `{v}` for `{key}`")))
}

impl RunConfig {
    fn defaults(command: CommandKind) -> Self {
        RunConfig {
            command,
            p: None,
            n: Vec::new(),
            ring: "Z".into(),
            caps: Caps::default(),
            seed: DEFAULT_SEED,
            trials: 500,
            group: None,
            m: 1,
            monomial: false,
            poly: None,
            json: false,
            jobs: 1,
        }
    }

    fn apply_kv(&mut self, kv: &BTreeMap<String, String>) -> Result<()> {
        for (k, v) in kv {
            match k.as_str() {
                "p" => self.p = Some(parse_u(k, v)?),
                "n" => self.n = parse_n(v)?,
                "ring" => self.ring = v.clone(),
                "seed" => self.seed = parse_u(k, v)?,
                "trials" => self.trials = parse_u(k, v)?,
                "m" => self.m = parse_u(k, v)?,
                "jobs" => self.jobs = parse_u(k, v)?,
                "json" => self.json = parse_bool(k, v)?,
                "monomial" => self.monomial = parse_bool(k, v)?,
                "poly" => self.poly = Some(v.clone()),
                "command" => {}
                "group" => {
                    self.group = Some(
                        GroupKind::from_str(v, true).map_err(|_| Error::Parse(format!("unknown group `{v}`")))?,
                    )
                }
                other => {
                    if !self.caps.set(other, v)? {
                        return Err(Error::Parse(format!("unknown config key `{other}`")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Defaults, then the `--config` file, then `YAGITA_CAPS`, then flags.
    pub fn resolve(cli: Cli) -> Result<Self> {
        let kind = match &cli.command {
            Command::Invariant(_) => CommandKind::Invariant,
            Command::VerifyUpper(_) => CommandKind::VerifyUpper,
            Command::VerifyLower(_) => CommandKind::VerifyLower,
            Command::PropCheck(_) => CommandKind::PropCheck,
            Command::Construct(_) => CommandKind::Construct,
            Command::PeriodForm(_) => CommandKind::PeriodForm,
        };
        let mut cfg = Self::defaults(kind);
        if let Some(path) = &cli.config {
            cfg.apply_kv(&read_kv_file(path)?)?;
        }
        if let Ok(overrides) = std::env::var(crate::config::CAPS_ENV) {
            cfg.caps.apply_overrides(&overrides)?;
        }
        cfg.json |= cli.json;
        if let Some(j) = cli.jobs {
            cfg.jobs = j;
        }
        match cli.command {
            Command::Invariant(a) | Command::VerifyUpper(a) | Command::VerifyLower(a) => {
                cfg.p = a.p.or(cfg.p);
                if let Some(n) = a.n {
                    cfg.n = parse_n(&n)?;
                }
                cfg.ring = a.ring.unwrap_or(cfg.ring);
            }
            Command::PropCheck(a) => {
                cfg.p = a.p.or(cfg.p);
                cfg.trials = a.trials.unwrap_or(cfg.trials);
                cfg.seed = a.seed.unwrap_or(cfg.seed);
            }
            Command::Construct(a) => {
                cfg.p = a.p.or(cfg.p);
                cfg.group = a.group.or(cfg.group);
                cfg.ring = a.ring.unwrap_or(cfg.ring);
                cfg.m = a.m.unwrap_or(cfg.m);
                cfg.monomial |= a.monomial;
            }
            Command::PeriodForm(a) => {
                cfg.p = a.p.or(cfg.p);
                cfg.poly = a.poly.or(cfg.poly);
            }
        }
        if cfg.jobs == 0 {
            return Err(Error::InvalidArgument("--jobs must be at least 1".into()));
        }
        Ok(cfg)
    }

    fn prime(&self) -> Result<Prime> {
        let p = self.p.ok_or_else(|| Error::InvalidArgument("--p is required".into()))?;
        Prime::with_bound(p, self.caps.prime)
    }

    fn ns(&self) -> Result<&[u64]> {
        if self.n.is_empty() {
            return Err(Error::InvalidArgument("--n is required".into()));
        }
        Ok(&self.n)
    }

    fn ring(&self) -> Result<RingDescriptor> {
        RingDescriptor::parse(self.prime()?, &self.ring)
    }
}

/// What a run produced: the report, a plain-text rendering and an exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.report.to_json()
        } else {
            self.text.clone()
        }
    }
}

fn plain(report: Report) -> Outcome {
    let text = report.to_string();
    Outcome { report, text }
}

/// Joins per-`n` reports, prefixing check names with `n = k`.
fn merge(claim: String, parts: Vec<(u64, Report)>) -> Report {
    if parts.len() == 1 {
        return parts.into_iter().next().expect("one part").1;
    }
    let mut out = Report::new(claim);
    for (n, r) in parts {
        for c in r.checks {
            out.check(format!("n = {n}: {}", c.name), c.pass, c.detail);
        }
        for mut w in r.witnesses {
            if let Some(obj) = w.as_object_mut() {
                obj.insert("n".into(), json!(n));
            }
            out.witness(w);
        }
    }
    out
}

fn run_invariant(cfg: &RunConfig) -> Result<Outcome> {
    let rd = cfg.ring()?;
    let mut report = Report::new(format!("closed formula for Sp(2n, {rd}) at p = {}", rd.p));
    let mut lines = Vec::new();
    for &n in cfg.ns()? {
        let v = theorem_value(n, &rd)?;
        let lo = gl_value(n, &rd)?;
        let hi = gl_value(2 * n, &rd)?;
        let advisory = if lo.advisory || hi.advisory { " (advisory range)" } else { "" };
        report.check(
            format!("n = {n}: GL(n) | Sp(2n) | GL(2n)"),
            v % lo.value == 0 && hi.value % v == 0,
            format!("{} | {v} | {}{advisory}", lo.value, hi.value),
        );
        report.witness(json!({
            "p": rd.p.get(), "l": rd.l, "n": n, "value": v,
            "gl_n": lo.value, "gl_2n": hi.value,
        }));
        lines.push(if cfg.n.len() == 1 { v.to_string() } else { format!("n = {n}: {v}") });
    }
    let mut text = lines.join("\n");
    if !report.passed() {
        text.push('\n');
        text.push_str(&report.to_string());
    }
    Ok(Outcome { report, text })
}

fn run_verify(cfg: &RunConfig, upper: bool) -> Result<Outcome> {
    let rd = cfg.ring()?;
    let parts = cfg
        .ns()?
        .iter()
        .map(|&n| {
            let r = if upper { verify_upper(n, &rd, &cfg.caps)? } else { verify_lower(n, &rd, &cfg.caps)? };
            Ok((n, r))
        })
        .collect::<Result<Vec<_>>>()?;
    let side = if upper { "upper" } else { "lower" };
    Ok(plain(merge(format!("{side} bounds for Sp(2n, {rd}) at p = {}, n in {:?}", rd.p, cfg.n), parts)))
}

fn run_prop_check(cfg: &RunConfig) -> Result<Outcome> {
    let primes: Vec<Prime> = match cfg.p {
        Some(_) => vec![cfg.prime()?],
        None => [3u64, 5, 7, 11, 13].iter().map(|&p| Prime::new(p)).collect::<Result<_>>()?,
    };
    let mut out = Report::new(format!(
        "period shape of random split products, {} trials per regime, seed {}",
        cfg.trials, cfg.seed
    ));
    for p in primes {
        let r = prop_check(p, cfg.trials, cfg.seed)?;
        for c in r.checks {
            out.check(format!("p = {p}: {}", c.name), c.pass, c.detail);
        }
        out.witnesses.extend(r.witnesses);
    }
    Ok(plain(out))
}

fn matrices_text(rep: &AnyRep) -> String {
    let mut s = String::new();
    match rep {
        AnyRep::Z(r) => {
            for (name, m) in r.generators() {
                s.push_str(&format!("{name} =\n{m}"));
            }
        }
        AnyRep::Zzeta(r) => {
            for (name, m) in r.generators() {
                s.push_str(&format!("{name} =\n{m}"));
            }
        }
    }
    s
}

fn push_generators(report: &mut Report, gens: Vec<(String, ExactMatrix)>) {
    for (name, m) in gens {
        report.witness(json!({ "name": name, "matrix": m }));
    }
}

fn run_construct(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.prime()?;
    let pp = p.get();
    let group = cfg.group.ok_or_else(|| Error::InvalidArgument("--group is required".into()))?;
    let cap = cfg.caps.closure;
    let mut report;
    let text_mats;
    match group {
        GroupKind::Cp => {
            let rd = cfg.ring()?;
            let rep = cp_generator(&rd)?;
            report = Report::new(format!("element of order {pp} in Sp({}, {rd})", rep.size()));
            report.check("strategy", true, format!("{:?}", cp_strategy(&rd)));
            report.check("generator symplectic", true, format!("size {}", rep.size()));
            report.check("determinant 1", rep.unimodular()?, "");
            let g = rep.closure_report(cap, Some(pp))?;
            report.check("order p", g.order == pp, format!("{}", g.order));
            push_generators(&mut report, rep.generators_json());
            report.witness(json!({ "group": g }));
            text_mats = matrices_text(&rep);
        }
        GroupKind::Affine => {
            let rep = affine_symplectic(p)?;
            report = Report::new(format!("affine group of F_{pp} in Sp({}, Z)", rep.size()));
            report.check("generators symplectic", true, format!("size {}", rep.size()));
            let ok = affine_relations_hold(rep.get("a").expect("a"), rep.get("b").expect("b"), p)?;
            report.check("relations a^p = b^(p-1) = 1, b a b^-1 = a^g", ok, format!("g = {}", p.primitive_root()));
            let g = group_closure(&rep.matrices(), cap, Some(pp * (pp - 1)))?;
            report.check("closure order p(p-1)", g.order == pp * (pp - 1), format!("{}", g.order));
            let any = AnyRep::Z(rep);
            push_generators(&mut report, any.generators_json());
            report.witness(json!({ "group": g }));
            text_mats = matrices_text(&any);
        }
        GroupKind::Extraspecial => {
            let m = cfg.m;
            let expect = pp
                .checked_pow(2 * m + 1)
                .ok_or_else(|| Error::InvalidArgument("extraspecial order overflows".into()))?;
            let (rep_size, g, gens, mats) = if cfg.monomial {
                let mono = extraspecial_monomial(p, m, cfg.caps.size)?;
                let mats: Vec<_> = mono.iter().map(|(_, x)| x.clone()).collect();
                let g = group_closure(&mats, cap, Some(expect))?;
                let mut s = String::new();
                for (name, x) in &mono {
                    s.push_str(&format!("{name} =\n{x}"));
                }
                let gens = mono.into_iter().map(|(n, x)| (n, ExactMatrix::from(x))).collect();
                (pp.pow(m) as usize, g, gens, s)
            } else {
                let rd = cfg.ring()?;
                let rep = extraspecial_symplectic(&rd, m, cfg.caps.size)?;
                let g = rep.closure_report(cap, Some(expect))?;
                (rep.size(), g, rep.generators_json(), matrices_text(&rep))
            };
            let kind = if cfg.monomial { "monomial model" } else { "symplectic" };
            report = Report::new(format!("E({pp},{m}), {kind}, on a module of rank {rep_size}"));
            if !cfg.monomial {
                report.check("generators symplectic", true, format!("size {rep_size}"));
            }
            report.check(format!("closure order p^{}", 2 * m + 1), g.order == expect, format!("{}", g.order));
            report.check(
                "center = derived subgroup of order p",
                g.center_order == pp && g.derived_order == pp,
                format!("center {}, derived {}", g.center_order, g.derived_order),
            );
            report.check(
                format!("abelianization C_p^{}", 2 * m),
                g.abelianization == vec![pp; 2 * m as usize],
                format!("{:?}", g.abelianization),
            );
            push_generators(&mut report, gens);
            report.witness(json!({ "group": g }));
            text_mats = mats;
        }
    }
    let text = format!("{report}\n{text_mats}").trim_end().to_string();
    Ok(Outcome { report, text })
}

fn run_period_form(cfg: &RunConfig) -> Result<Outcome> {
    let p = cfg.prime()?;
    let text = cfg.poly.as_deref().ok_or_else(|| Error::InvalidArgument("--poly is required".into()))?;
    let f = FpPoly::parse(p, text)?;
    let v = f.check_period_form()?;
    let d = v.decomposition;
    let mut report = Report::new(format!("period shape of {f} over F_{p}"));
    report.check("splits into linear factors", v.splits, "");
    report.check("roots avoid 0", v.roots_nonzero, "");
    report.check(
        "implications hold",
        v.implications_hold,
        format!("support gcd {} = {} * {p}^{}", d.n_max, d.m, d.q),
    );
    report.witness(serde_json::to_value(&v).expect("verdict serializes"));
    Ok(plain(report))
}

/// Runs a resolved configuration on a pool of `cfg.jobs` threads.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| match cfg.command {
        CommandKind::Invariant => run_invariant(cfg),
        CommandKind::VerifyUpper => run_verify(cfg, true),
        CommandKind::VerifyLower => run_verify(cfg, false),
        CommandKind::PropCheck => run_prop_check(cfg),
        CommandKind::Construct => run_construct(cfg),
        CommandKind::PeriodForm => run_period_form(cfg),
    })
}

/// Exit code for an error: bad input is a usage error, anything else a
/// failed computation.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_)
        | Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::NotPrime(_)
        | Error::PrimeTooLarge { .. }
        | Error::Unsupported(_)
        | Error::CapExceeded { .. } => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    }
}

/// Parses `args`, runs, and returns `(exit code, stdout, stderr)`.
pub fn main_with_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let msg = e.render().to_string();
            return if code == EXIT_OK { (code, msg, String::new()) } else { (code, String::new(), msg) };
        }
    };
    let outcome = RunConfig::resolve(cli).and_then(|cfg| run(&cfg).map(|o| (o, cfg.json)));
    match outcome {
        Ok((o, json)) => (o.exit_code(), o.render(json), String::new()),
        Err(e) => (error_exit_code(&e), String::new(), format!("error: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        main_with_args(std::iter::once("yagita").chain(args.iter().copied()))
    }

    #[test]
    fn invariant_prints_value() {
        let (code, out, _) = run_args(&["invariant", "--p", "3", "--n", "4", "--ring", "Z"]);
        assert_eq!((code, out.as_str()), (0, "12"));
    }

    #[test]
    fn small_n_is_usage_error() {
        let (code, _, err) = run_args(&["invariant", "--p", "3", "--n", "1", "--ring", "Z"]);
        assert_eq!(code, 2);
        assert!(err.contains("n >= p - 1"), "{err}");
    }

    #[test]
    fn n_ranges() {
        assert_eq!(parse_n("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_n("2..=3").unwrap(), vec![2, 3]);
        assert!(parse_n("0").is_err());
        assert!(parse_n("5..2").is_err());
    }

    #[test]
    fn bad_flags_are_usage_errors() {
        assert_eq!(run_args(&["invariant", "--p", "4", "--n", "4"]).0, 2);
        assert_eq!(run_args(&["invariant", "--bogus"]).0, 2);
        assert_eq!(run_args(&["construct", "--p", "3"]).0, 2);
        assert_eq!(run_args(&["invariant", "--p", "3", "--n", "4", "--ring", "Q"]).0, 2);
    }
}
