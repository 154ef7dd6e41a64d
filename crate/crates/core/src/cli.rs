//! The `cherednik` command line.
//!
//! Exit codes: 0 success, 1 internal error or failed check, 2 bad input or
//! a failed precondition (including the genericity guard).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::group::GroupSpec;
use crate::intertwine::{verify_action_lemma, verify_braid_and_quadratic};
use crate::jack::{compositions, compositions_up_to, jack_by_intertwiners, jack_by_solve, Composition, Eigenbasis, JackVector, Method};
use crate::pbw::{check_pbw, rca_forms};
use crate::poly::{check_relations, Fault, PolyRep};
use crate::reptheory::{
    catalan_series, coxeter_number, degrees, exponents_and_freeness, gordon_report, is_irreducible, ParamPoint,
};
use crate::scalar::{CycScalar, Params, Rational};

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Exact computations for the rational Cherednik algebra of G(r,p,n)")]
pub struct Cli {
    /// File of `key = value` lines supplying defaults for any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the parallel checks (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvectors f_μ of the z_i with their weights.
    Jack(JackArgs),
    /// Relation, PBW and intertwiner suites.
    Verify(VerifyArgs),
    /// The finite-dimensional quotient at c_s = (h+1)/h.
    Gordon(GroupArg),
    /// The q-Catalan series.
    Catalan(CatalanArgs),
    /// Exponents of C{x_1^m, ..., x_n^m} and the freeness determinants.
    Exponents(ExponentsArgs),
    /// Coxeter number and degrees.
    Coxeter(GroupArg),
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// The group as `r,p,n`.
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug, Default)]
pub struct PointArgs {
    /// `gordon` for κ = 1, c_s = (h+1)/h.
    #[arg(long)]
    pub point: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c0: Option<String>,
    /// Rational values of d_1, ..., d_{r/p-1}, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Solve,
    Intertwiners,
}

#[derive(Args, Debug)]
pub struct JackArgs {
    #[arg(long)]
    pub group: String,
    /// A composition such as `1,0`; may be repeated.
    #[arg(long)]
    pub mu: Vec<String>,
    /// Every composition of this size.
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = MethodArg::Solve)]
    pub method: MethodArg,
    /// Build with both methods and compare.
    #[arg(long)]
    pub check_both: bool,
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Relations,
    Pbw,
    Intertwiners,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 4)]
    pub max_deg: u32,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[command(flatten)]
    pub point: PointArgs,
    /// `dunkl-sign`, `pi-sign` or `pbw-class`.
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

#[derive(Args, Debug)]
pub struct CatalanArgs {
    #[arg(long)]
    pub group: String,
    /// Highest power of t printed (default: the degree of the polynomial).
    #[arg(long)]
    pub trunc: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ExponentsArgs {
    #[arg(long)]
    pub group: String,
    /// Defaults to h + 1.
    #[arg(long)]
    pub m: Option<u32>,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure carrying its exit code.
struct Fail {
    code: i32,
    msg: String,
    report: Option<Value>,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => 1,
            _ => 2,
        };
        Fail {
            code,
            msg: e.to_string(),
            report: None,
        }
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail {
        code: 2,
        msg: msg.into(),
        report: None,
    }
}

type Res<T> = std::result::Result<T, Fail>;

/// Boolean flags, which take no value on the command line.
const SWITCHES: &[&str] = &["check-both"];

fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

/// Appends `--key value` for every config entry whose flag is absent.
fn merge_config(mut args: Vec<String>, text: &str) -> Res<Vec<String>> {
    let present = |args: &[String], key: &str| {
        let flag = format!("--{key}");
        let eq = format!("--{key}=");
        args.iter().any(|a| *a == flag || a.starts_with(&eq))
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key = value", lineno + 1)))?;
        let (k, v) = (k.trim().replace('_', "-"), v.trim());
        if k == "config" || present(&args, &k) {
            continue;
        }
        if SWITCHES.contains(&k.as_str()) {
            match v {
                "true" => args.push(format!("--{k}")),
                "false" => {}
                _ => return Err(usage(format!("config key {k}: expected true or false"))),
            }
        } else {
            args.push(format!("--{k}={v}"));
        }
    }
    Ok(args)
}

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let args = match config_path(&args) {
        None => Ok(args),
        Some(p) => std::fs::read_to_string(&p)
            .map_err(|e| usage(format!("cannot read config {p}: {e}")))
            .and_then(|text| merge_config(args, &text)),
    };
    let cli = args.and_then(|a| {
        Cli::try_parse_from(a).map_err(|e| Fail {
            code: if e.use_stderr() { 2 } else { 0 },
            msg: e.to_string(),
            report: None,
        })
    });
    let cli = match cli {
        Ok(c) => c,
        Err(f) if f.code == 0 => {
            return Outcome {
                code: 0,
                stdout: f.msg,
                stderr: String::new(),
            }
        }
        Err(f) => {
            return Outcome {
                code: f.code,
                stdout: String::new(),
                stderr: f.msg,
            }
        }
    };
    let format = cli.format;
    let result = match cli.threads {
        None => dispatch(&cli),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Fail {
                code: 1,
                msg: e.to_string(),
                report: None,
            }),
        },
    };
    match result {
        Ok((code, value, text)) => Outcome {
            code,
            stdout: render(format, &value, text),
            stderr: String::new(),
        },
        Err(f) => {
            let stdout = match (&f.report, format) {
                (Some(v), Format::Json) => render(format, v, String::new()),
                (Some(v), Format::Text) => render(Format::Json, v, String::new()),
                (None, Format::Json) => render(format, &json!({"status": "error", "error": f.msg}), String::new()),
                (None, Format::Text) => String::new(),
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: format!("error: {}\n", f.msg),
            }
        }
    }
}

fn render(format: Format, value: &Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("json values serialize") + "\n",
        Format::Text => text,
    }
}

/// (exit code, json, text).
type Rendered = (i32, Value, String);

fn dispatch(cli: &Cli) -> Res<Rendered> {
    match &cli.command {
        Command::Jack(a) => cmd_jack(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gordon(a) => cmd_gordon(a),
        Command::Catalan(a) => cmd_catalan(a),
        Command::Exponents(a) => cmd_exponents(a),
        Command::Coxeter(a) => cmd_coxeter(a),
    }
}

fn parse_rational(s: &str) -> Res<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| usage(format!("bad rational {s:?}")))
}

fn build_params(spec: GroupSpec, p: &PointArgs) -> Res<Params> {
    let explicit = p.kappa.is_some() || p.c0.is_some() || p.d.is_some();
    match p.point.as_deref() {
        Some("gordon") if explicit => Err(usage("--point gordon cannot be combined with --kappa/--c0/--d")),
        Some("gordon") => Ok(Params::special(spec, ParamPoint::gordon(&spec)?)?),
        Some("generic") | None if !explicit => Ok(Params::generic(spec)),
        Some(other) if other != "generic" => Err(usage(format!("unknown point {other:?}"))),
        _ => {
            let kappa = p.kappa.as_deref().map(parse_rational).transpose()?.unwrap_or_else(|| Rational::from_integer(1.into()));
            let c0 = p.c0.as_deref().map(parse_rational).transpose()?.unwrap_or_default();
            let d = match p.d.as_deref() {
                None => vec![CycScalar::zero(spec.r); spec.m() as usize - 1],
                Some(s) => s
                    .split(',')
                    .map(|t| parse_rational(t).map(|q| CycScalar::from_rational(spec.r, q)))
                    .collect::<Res<Vec<_>>>()?,
            };
            Ok(Params::special(spec, ParamPoint { kappa, c0, d })?)
        }
    }
}

fn parse_fault(s: Option<&str>) -> Res<Option<Fault>> {
    s.map(|f| f.parse::<Fault>().map_err(Fail::from)).transpose()
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// `1 + 2t + t^2` from coefficient strings, lowest degree first.
fn fmt_series(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) if !m.contains(['+', '-']) => (true, m.to_string()),
            _ => (false, c.clone()),
        };
        let mag = if mag.contains(['+', '-', ' ']) { format!("({mag})") } else { mag };
        if !out.is_empty() {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let t = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        match (mag.as_str(), i) {
            (_, 0) => out.push_str(&mag),
            ("1", _) => out.push_str(&t),
            _ => out.push_str(&format!("{mag}{t}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn jack_text(v: &JackVector) -> String {
    let z: Vec<String> = v.weight.zvals.iter().map(|c| c.to_string()).collect();
    format!(
        "mu = {}\nf = {}\nz = [{}]\nzeta = {:?}\n",
        v.mu,
        v.poly,
        z.join(", "),
        v.weight.zeta_exps
    )
}

fn cmd_jack(a: &JackArgs) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let params = build_params(spec, &a.point)?;
    let rep = PolyRep::with_fault(params, parse_fault(a.inject_fault.as_deref())?);
    let mut mus: Vec<Composition> = a.mu.iter().map(|s| Composition::parse(s)).collect::<crate::Result<_>>()?;
    if let Some(d) = a.degree {
        mus.extend(compositions(spec.n, d));
    }
    if mus.is_empty() {
        return Err(usage("give --mu or --degree"));
    }
    if let Some(bad) = mus.iter().find(|m| m.n() != spec.n) {
        return Err(usage(format!("{bad} has {} parts but n = {}", bad.n(), spec.n)));
    }
    type Builder = fn(&PolyRep, &Composition) -> crate::Result<JackVector>;
    let (primary, other): (Builder, Builder) = match a.method {
        MethodArg::Solve => (jack_by_solve, jack_by_intertwiners),
        MethodArg::Intertwiners => (jack_by_intertwiners, jack_by_solve),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    let mut all_agree = true;
    for mu in &mus {
        let v = primary(&rep, mu).map_err(|e| non_generic(e, &rep))?;
        let mut j = v.to_json();
        let _ = write!(text, "{}", jack_text(&v));
        if a.check_both {
            let w = other(&rep, mu).map_err(|e| non_generic(e, &rep))?;
            let agree = v.poly == w.poly && v.weight == w.weight;
            all_agree &= agree;
            j["constructions_agree"] = json!(agree);
            text.push_str(if agree { "constructions agree\n" } else { "constructions differ\n" });
        }
        items.push(j);
    }
    let code = if all_agree { 0 } else { 1 };
    let value = if items.len() == 1 { items.pop().unwrap() } else { Value::Array(items) };
    Ok((code, value, text))
}

/// At a special point, a failed construction is reported with the guard.
fn non_generic(e: Error, rep: &PolyRep) -> Fail {
    let mut f = Fail::from(e);
    if let Some(pt) = rep.params().point() {
        f.report = Some(json!({
            "status": "non-generic",
            "error": f.msg,
            "point": pt.describe(),
        }));
        if let (Ok(h), true) = (coxeter_number(rep.params().spec()), pt.kappa == Rational::from_integer(1.into())) {
            let spec = rep.params().spec();
            let k = h + 1;
            if k % spec.r != 0 {
                if let Ok(g) = crate::reptheory::genericity_guard(spec, pt, k, crate::reptheory::default_bound(k, h)) {
                    f.report.as_mut().unwrap()["guard"] = serde_json::to_value(g).unwrap();
                }
            }
        }
    }
    f
}

fn suite_line(name: &str, pass: bool, checked: &[(String, usize)], witness: Option<Value>) -> String {
    let counts: Vec<String> = checked.iter().map(|(k, c)| format!("{k} {c}")).collect();
    let mut s = format!("{name}: {} ({})\n", status(pass), counts.join(", "));
    if let Some(w) = witness {
        let _ = writeln!(s, "  witness: {w}");
    }
    s
}

fn cmd_verify(a: &VerifyArgs) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let params = build_params(spec, &a.point)?;
    let (fault, pbw_fault) = match a.inject_fault.as_deref() {
        Some("pbw-class") => (None, true),
        other => (parse_fault(other)?, false),
    };
    let rep = PolyRep::with_fault(params.clone(), fault);
    let runs = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut suites = serde_json::Map::new();
    let mut text = if a.suite == Suite::Pbw {
        format!("{spec}\n")
    } else {
        format!("{spec}, degree <= {}\n", a.max_deg)
    };
    let mut ok = true;
    if runs(Suite::Relations) {
        let r = check_relations(&rep, a.max_deg);
        ok &= r.passed();
        text += &suite_line("relations", r.passed(), &r.checked, r.witness.as_ref().map(|w| json!(w)));
        suites.insert("relations".into(), json!(r));
    }
    if runs(Suite::Pbw) {
        let mut fam = rca_forms(&params);
        if pbw_fault {
            let s = fam
                .support()
                .into_iter()
                .find(|w| !w.is_identity())
                .cloned()
                .ok_or_else(|| Fail::from(Error::Internal("no reflection forms".into())))?;
            let f = fam.form(&s).unwrap().scale(&params.int(2));
            fam.insert(s, f);
        }
        let r = check_pbw(&fam, &spec);
        ok &= r.passed();
        let checked = vec![("a".to_string(), r.checked_a), ("b".to_string(), r.checked_b)];
        text += &suite_line("pbw", r.passed(), &checked, r.witness.as_ref().map(|w| json!(w)));
        suites.insert("pbw".into(), json!(r));
    }
    if runs(Suite::Intertwiners) {
        let grid = compositions_up_to(spec.n, a.max_deg);
        let basis = Eigenbasis::new(&rep, Method::Solve);
        for (name, r) in [
            ("action", verify_action_lemma(&basis, &grid)),
            ("braid", verify_braid_and_quadratic(&basis, &grid)),
        ] {
            ok &= r.passed();
            text += &suite_line(name, r.passed(), &r.checked, r.witness.as_ref().map(|w| json!(w)));
            suites.insert(name.into(), json!(r));
        }
    }
    text += &format!("status: {}\n", status(ok));
    let value = json!({
        "group": spec.to_string(),
        "max_deg": a.max_deg,
        "status": status(ok),
        "suites": suites,
    });
    Ok((if ok { 0 } else { 1 }, value, text))
}

fn cmd_gordon(a: &GroupArg) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let rep = gordon_report(&spec)?;
    let caveat = if (spec.r, spec.p, spec.n) == (2, 2, 2) {
        Some("n = 2 with p = r = 2 is excluded: G(2,2,2) acts reducibly".to_string())
    } else {
        (!is_irreducible(&spec)).then(|| format!("{spec} does not act irreducibly"))
    };
    let catalan = catalan_series(&spec, (spec.n as u32 * rep.coxeter_number) as usize).ok();
    let expo = exponents_and_freeness(&spec, rep.k).ok();
    let sing = &rep.singular;
    let mut text = String::new();
    let _ = writeln!(text, "group: {spec}");
    let _ = writeln!(text, "h = {}, k = {}", rep.coxeter_number, rep.k);
    let _ = writeln!(text, "point: {}", rep.point);
    let _ = writeln!(text, "guard: {}", status(sing.guard.passed));
    for v in &sing.guard.violations {
        let _ = writeln!(text, "  {v}");
    }
    let _ = writeln!(
        text,
        "singular vectors: {} (span {}, W-stable {}, annihilated {})",
        status(sing.passed()),
        sing.span_dim,
        sing.w_stable,
        sing.not_annihilated.is_empty()
    );
    let _ = writeln!(text, "dim L(1) = {}", rep.dim_count);
    let _ = writeln!(text, "character(1) = {}", fmt_series(&rep.hilbert_series));
    if let Some(c) = &catalan {
        let _ = writeln!(text, "catalan = {}", fmt_series(&c.coeffs));
        let _ = writeln!(text, "catalan(1) = {}", c.value_at_one);
    }
    if let Some(e) = &expo {
        let _ = writeln!(text, "exponents = {:?}, degrees = {:?}, match = {}", e.exponents, e.degrees, e.multiset_match == Some(true));
    }
    if let Some(c) = &caveat {
        let _ = writeln!(text, "caveat: {c}");
    }
    let ok = rep.passed() && caveat.is_none() && expo.as_ref().is_some_and(|e| e.passed());
    let _ = writeln!(text, "status: {}", status(ok));
    let value = json!({
        "group": spec.to_string(),
        "coxeter_number": rep.coxeter_number,
        "k": rep.k,
        "point": rep.point,
        "guard": sing.guard,
        "singular": sing,
        "dim_L1": rep.dim_count,
        "dim_character": rep.dim_character,
        "hilbert_series": rep.hilbert_series,
        "series_match": rep.series_match,
        "coinvariant_dominated": rep.coinvariant_dominated,
        "catalan": catalan,
        "exponents": expo,
        "caveat": caveat,
        "status": status(ok),
    });
    let code = if ok {
        0
    } else if caveat.is_some() || !sing.guard.passed {
        2
    } else {
        1
    };
    Ok((code, value, text))
}

fn cmd_catalan(a: &CatalanArgs) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let h = coxeter_number(&spec)?;
    let trunc = a.trunc.unwrap_or(spec.n * h as usize);
    let c = catalan_series(&spec, trunc)?;
    let text = format!("{}\nvalue at t=1: {}\n", fmt_series(&c.coeffs), c.value_at_one);
    Ok((0, json!(c), text))
}

fn cmd_exponents(a: &ExponentsArgs) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let m = match a.m {
        Some(m) => m,
        None => coxeter_number(&spec)? + 1,
    };
    let e = exponents_and_freeness(&spec, m)?;
    let mut text = format!("exponents = {:?}\ndet f: {}", e.exponents, status(e.det_f.verified));
    if e.det_f.verified {
        let _ = write!(text, " (sign {:+})", e.det_f.sign);
    }
    text.push('\n');
    if let Some(d) = &e.det_a {
        let _ = writeln!(text, "det A: {} (sign {:+})", status(d.verified), d.sign);
    }
    if let Some(mm) = e.multiset_match {
        let _ = writeln!(text, "m - e = degrees {:?}: {mm}", e.degrees);
    }
    Ok((if e.passed() { 0 } else { 1 }, json!(e), text))
}

fn cmd_coxeter(a: &GroupArg) -> Res<Rendered> {
    let spec = GroupSpec::parse(&a.group)?;
    let h = coxeter_number(&spec)?;
    let degs = degrees(&spec);
    let text = format!("h = {h}\ndegrees = {degs:?}\norder = {}\n", spec.order());
    let value = json!({
        "group": spec.to_string(),
        "coxeter_number": h,
        "degrees": degs,
        "order": spec.order(),
        "irreducible": is_irreducible(&spec),
    });
    Ok((0, value, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        std::iter::once("cherednik".to_string())
            .chain(s.split_whitespace().map(String::from))
            .collect()
    }

    #[test]
    fn series_format() {
        let c: Vec<String> = ["1", "0", "1", "0", "2", "-1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(fmt_series(&c), "1 + t^2 + 2t^4 - t^5");
        assert_eq!(fmt_series(&["0".to_string()]), "0");
    }

    #[test]
    fn config_fills_missing_flags() {
        let merged = merge_config(args("jack --mu 1,0"), "group = 2,1,2\nmu = 0,1\ncheck_both = true\n").ok().unwrap();
        assert!(merged.contains(&"--group=2,1,2".to_string()));
        assert!(merged.contains(&"--check-both".to_string()));
        assert!(!merged.iter().any(|a| a == "--mu=0,1"));
    }

    #[test]
    fn bad_group_is_exit_two() {
        let out = run(args("coxeter --group 3,2,2"));
        assert_eq!(out.code, 2);
    }

    #[test]
    fn point_flags() {
        let sp = GroupSpec::new(3, 1, 2).unwrap();
        let p = PointArgs {
            c0: Some("1/2".into()),
            d: Some("1,-1/3".into()),
            ..Default::default()
        };
        let ps = build_params(sp, &p).ok().unwrap();
        assert_eq!(ps.point().unwrap().c0, crate::scalar::rat(1, 2));
        let g = PointArgs {
            point: Some("gordon".into()),
            c0: Some("1".into()),
            ..Default::default()
        };
        assert!(build_params(sp, &g).is_err());
    }
}
