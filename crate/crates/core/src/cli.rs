//! Command-line front end: `fembed embed|rich|density|pr|verify`.
//!
//! Machine output is one JSON document on stdout. Diagnostics and timing go
//! to stderr. Exit codes: 0 when a query is answered (a "no" or "avoiding"
//! answer included), 1 when a checked property fails, 2 on usage or input
//! errors.
//!
//! Embeddability is read as: for every finite `F ⊆ A` some `f` in the
//! family maps every `n`-tuple over `F` into `B`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::carrier::{element_json, parse_element, GroundSet, SetBody, SetSpec, Window, WindowSpec};
use crate::density::{check_density_monotonicity, ratio_string, upper_density, DensityReport, Net};
use crate::embed::{fe_decide, fe_probe, EmbedVerdict, ProbeOptions};
use crate::families::{FamilyJson, FamilySpec, ParamEnumeration};
use crate::prsearch::{
    find_avoiding_coloring_with, homogeneous_pr_check, ps_solutions_experiment, ramsey_threshold_with,
    strong_pr_probe, ColoringCertificate, ColoringOutcome, Pattern, Polynomial, ProbeMode, SearchLimits,
    SearchOrder, StrongOutcome, StrongPrVerdict,
};
use crate::rich::{
    is_piecewise_syndetic_window, is_thick_window, longest_ap, longest_gap_grid, longest_poly_progression,
    maximality_probe,
};
use crate::verify::{run_suite, Budget, Suite};

/// Environment variable naming the default `verify` budget.
pub const BUDGET_ENV: &str = "FEMBED_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "fembed", version, about = "Finite-scale embeddability, richness, density and coloring search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide A <=_F B; repeat --family to split a union of families.
    Embed(EmbedArgs),
    /// Detect progressions, thickness, piecewise syndeticity or maximality.
    Rich(RichArgs),
    /// Upper density along a net, or check density monotonicity.
    Density(DensityArgs),
    /// Coloring search for monochromatic patterns.
    #[command(subcommand)]
    Pr(PrCommand),
    /// Run a seeded property suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct EmbedArgs {
    #[arg(long = "set-a")]
    set_a: PathBuf,
    #[arg(long = "set-b")]
    set_b: PathBuf,
    #[arg(long, required = true)]
    family: Vec<PathBuf>,
    /// Prefix sizes to probe; required in effect for predicate A (default 3,5,8).
    #[arg(long, value_delimiter = ',')]
    probes: Option<Vec<usize>>,
    /// Parameter enumeration bound override.
    #[arg(long)]
    bound: Option<u64>,
    /// Add COUNT seeded random subsets per probe size: SEED:COUNT.
    #[arg(long)]
    random: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Detect {
    Ap,
    Gap,
    Poly,
    Thick,
    Ps,
    Max,
}

#[derive(Debug, Args)]
struct RichArgs {
    #[arg(long)]
    set: PathBuf,
    #[arg(long, value_enum)]
    detect: Detect,
    /// GAP grid with indices from 0.
    #[arg(long)]
    zero_based: bool,
    /// Maximum degree for `poly`.
    #[arg(long)]
    d: Option<u32>,
    /// Degree set for `poly`.
    #[arg(long = "D", value_delimiter = ',')]
    degrees: Option<Vec<u32>>,
    /// Coefficient set for `poly`: a predicate or a comma list (default: the window).
    #[arg(long)]
    coeffs: Option<String>,
    /// Gap for `ps`.
    #[arg(long)]
    g: Option<u64>,
    /// Spans for `ps`.
    #[arg(long, value_delimiter = ',')]
    spans: Option<Vec<u64>>,
    /// Lengths for `thick`, sizes for `max`.
    #[arg(long, value_delimiter = ',')]
    probes: Option<Vec<u64>>,
    /// Family file for `max`.
    #[arg(long)]
    family: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct DensityArgs {
    #[command(subcommand)]
    command: Option<DensityCommand>,
    #[arg(long, required = true)]
    set: Option<PathBuf>,
    /// `interval:N`
    #[arg(long, required = true)]
    net: Option<String>,
    #[arg(long)]
    tail: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum DensityCommand {
    /// Check d*(A)/b <= d*(B) + tol for pairs A <= B under right translations.
    VerifyMonotone(MonotoneArgs),
}

#[derive(Debug, Args)]
struct MonotoneArgs {
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long)]
    family: PathBuf,
    /// Decimal (0.02) or fraction (1/50).
    #[arg(long, default_value = "0.02")]
    tol: String,
    /// Defaults to `interval:M` with M a tenth of the window bound.
    #[arg(long)]
    net: Option<String>,
    #[arg(long, value_delimiter = ',')]
    probes: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Asc,
    Desc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
    Backtrack,
}

#[derive(Debug, Subcommand)]
enum PrCommand {
    /// Least avoiding coloring of [1..N], or a forced record.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "asc")]
        order: Order,
    },
    /// Least N whose every coloring is forced.
    Threshold {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        nmax: u64,
    },
    /// Coloring search on the roots of a polynomial.
    Equation {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        colors: u8,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        distinct: bool,
        #[arg(long = "strict-homogeneous")]
        strict_homogeneous: bool,
    },
    /// Is every partition of the set forced?
    Strong {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        colors: u8,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
    },
    /// Roots of a polynomial inside a set.
    Solutions {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// tiny, small or medium (default from FEMBED_BUDGET, else small).
    #[arg(long)]
    budget: Option<String>,
}

/// Usage or input failure, reported on stderr with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res<T> = Result<T, InputError>;

/// Payload plus exit code.
struct Answer {
    payload: Value,
    code: i32,
}

impl Answer {
    fn ok(payload: Value) -> Res<Answer> {
        Ok(Answer { payload, code: 0 })
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let started = Instant::now();
    let result = match cli.command {
        Command::Embed(a) => embed(a),
        Command::Rich(a) => rich(a),
        Command::Density(a) => density(a),
        Command::Pr(c) => pr(c),
        Command::Verify(a) => verify(a, &echo, stderr),
    };
    match result {
        Ok(answer) => {
            let _ = writeln!(stdout, "{}", answer.payload);
            let _ = writeln!(stderr, "done in {:.1?}", started.elapsed());
            answer.code
        }
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Res<T> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let mut de = serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let at = e.path().to_string();
        if at == "." {
            InputError(format!("{}: {}", path.display(), e.inner()))
        } else {
            InputError(format!("{}: field `{at}`: {}", path.display(), e.inner()))
        }
    })
}

fn read_set(path: &Path) -> Res<GroundSet> {
    let spec: SetSpec = read_json(path)?;
    spec.build().map_err(|e| {
        // point at the first offending member when the window itself is fine
        let bad = match (&spec.set, spec.window.build()) {
            (SetBody::Explicit(items), Ok(w)) => items.iter().position(|v| parse_element(&w, v).is_err()),
            _ => None,
        };
        match bad {
            Some(i) => InputError(format!("{}: field `set.explicit[{i}]`: {e}", path.display())),
            None => InputError(format!("{}: {e}", path.display())),
        }
    })
}

fn read_family(path: &Path, window: Arc<Window>) -> Res<FamilySpec> {
    let spec: FamilyJson = read_json(path)?;
    spec.build(window).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn embed(a: EmbedArgs) -> Res<Answer> {
    let set_a = read_set(&a.set_a)?;
    let set_b = read_set(&a.set_b)?;
    if set_a.window() != set_b.window() && **set_a.window() != **set_b.window() {
        return Err(InputError("--set-a and --set-b use different windows".into()));
    }
    let window = set_b.window().clone();
    let mut families = Vec::new();
    for path in &a.family {
        let mut fam = read_family(path, window.clone())?;
        if let Some(bound) = a.bound {
            let mode = fam.enumeration().mode;
            fam = fam.with_enumeration(ParamEnumeration {
                mode,
                bound: Some(bound),
            });
        }
        families.push(fam);
    }
    let random = a.random.as_deref().map(parse_random).transpose()?;

    if a.probes.is_none() && set_a.is_explicit() {
        let verdicts = families
            .iter()
            .map(|f| fe_decide(&set_a, &set_b, f))
            .collect::<Result<Vec<_>, _>>()?;
        if let [v] = verdicts.as_slice() {
            return Answer::ok(v.to_json(&families[0]));
        }
        return Answer::ok(union_json(&verdicts, &families));
    }

    let sizes = a.probes.clone().unwrap_or_else(|| vec![3, 5, 8]);
    let opts = ProbeOptions {
        random,
        ..ProbeOptions::default()
    };
    let mut per_family = Vec::new();
    let mut outcomes = Vec::new();
    for fam in &families {
        let res = fe_probe(&set_a, &set_b, fam, &sizes, &opts)?;
        // a failing finite F refutes A <= B; passing probes are evidence only
        let refuted = res.iter().any(|p| p.verdict.is_no());
        outcomes.push(if refuted { "no" } else { "unknown" });
        per_family.push(json!({
            "outcome": if refuted { "no" } else { "unknown" },
            "probes": res.iter().map(|p| json!({
                "size": p.size,
                "random": p.random,
                "verdict": p.verdict.to_json(fam),
            })).collect::<Vec<_>>(),
        }));
    }
    if let [one] = per_family.as_slice() {
        let mut one = one.clone();
        one["complete"] = Value::Bool(false);
        return Answer::ok(one);
    }
    Answer::ok(json!({
        "outcome": if outcomes.iter().all(|&o| o == "no") { "no" } else { "unknown" },
        "complete": false,
        "families": per_family,
    }))
}

fn union_json(verdicts: &[EmbedVerdict], families: &[FamilySpec]) -> Value {
    let index = verdicts.iter().position(EmbedVerdict::is_yes);
    let outcome = match index {
        Some(_) => "yes",
        None if verdicts.iter().all(EmbedVerdict::is_no) => "no",
        None => "unknown",
    };
    json!({
        "outcome": outcome,
        "complete": verdicts.iter().all(|v| v.complete) || index.is_some(),
        "index": index.map(|i| i + 1),
        "verdicts": verdicts.iter().zip(families).map(|(v, f)| v.to_json(f)).collect::<Vec<_>>(),
    })
}

fn parse_random(s: &str) -> Res<(u64, usize)> {
    let bad = || InputError(format!("--random {s:?}: expected SEED:COUNT"));
    let (seed, count) = s.split_once(':').ok_or_else(bad)?;
    Ok((seed.parse().map_err(|_| bad())?, count.parse().map_err(|_| bad())?))
}

fn rich(a: RichArgs) -> Res<Answer> {
    let set = read_set(&a.set)?;
    let payload = match a.detect {
        Detect::Ap => serde_json::to_value(longest_ap(&set)?)?,
        Detect::Gap => serde_json::to_value(longest_gap_grid(&set, a.zero_based)?)?,
        Detect::Poly => {
            let degrees = a.degrees.ok_or_else(|| InputError("--detect poly needs --D".into()))?;
            let d = a.d.unwrap_or_else(|| degrees.iter().copied().max().unwrap_or(0));
            let window = set.window().clone();
            let coeffs = match a.coeffs.as_deref() {
                None => GroundSet::full(window),
                Some(s) if s.chars().next().is_some_and(|c| c.is_ascii_digit()) => {
                    let vals = s
                        .split(',')
                        .map(|t| t.trim().parse::<u64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| InputError(format!("--coeffs: {e}")))?;
                    GroundSet::from_values(window, vals)?
                }
                Some(p) => GroundSet::predicate(window, p.parse()?)?,
            };
            serde_json::to_value(longest_poly_progression(&set, d, &coeffs, &degrees)?)?
        }
        Detect::Thick => {
            let lengths = a.probes.unwrap_or_else(|| (0..=10).collect());
            serde_json::to_value(is_thick_window(&set, &lengths)?)?
        }
        Detect::Ps => {
            let g = a.g.ok_or_else(|| InputError("--detect ps needs --g".into()))?;
            let spans = a.spans.unwrap_or_else(|| vec![5, 10, 20]);
            serde_json::to_value(is_piecewise_syndetic_window(&set, g, &spans)?)?
        }
        Detect::Max => {
            let path = a.family.ok_or_else(|| InputError("--detect max needs --family".into()))?;
            let fam = read_family(&path, set.window().clone())?;
            let sizes: Vec<usize> = a.probes.unwrap_or_else(|| vec![1, 2, 3, 4, 5]).into_iter().map(|p| p as usize).collect();
            let probes = maximality_probe(&set, &fam, &sizes)?;
            json!({
                "maximal": probes.iter().all(|p| p.verdict.is_yes()),
                "probes": probes.iter().map(|p| json!({
                    "size": p.size,
                    "verdict": p.verdict.to_json(&fam),
                })).collect::<Vec<_>>(),
            })
        }
    };
    Answer::ok(payload)
}

fn parse_net(spec: &str, window: Arc<Window>) -> Res<Net> {
    let bad = || InputError(format!("--net {spec:?}: expected interval:N"));
    let (kind, n) = spec.split_once(':').ok_or_else(bad)?;
    if kind != "interval" {
        return Err(bad());
    }
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    Ok(Net::interval(window, n)?)
}

/// Decimal `0.02` or fraction `1/50`, non-negative.
pub fn parse_tolerance(s: &str) -> Option<Ratio<u64>> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.trim().parse().ok()?;
        let q: u64 = q.trim().parse().ok()?;
        return (q > 0).then(|| Ratio::new(p, q));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
        return None;
    }
    let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let scale = 10u64.pow(frac.len() as u32);
    let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    Some(Ratio::new(int.checked_mul(scale)?.checked_add(frac)?, scale))
}

fn density_json(report: &DensityReport, net: &Net) -> Value {
    let w = net.window();
    json!({
        "value": ratio_string(&report.value),
        "net": net.label(),
        "levels": net.len(),
        "tail_start": report.tail_start,
        "skipped": report.skipped,
        "witnesses": report.witnesses.iter().map(|x| json!({
            "tail": x.tail,
            "n": x.n,
            "shift": x.shift.map(|e| element_json(w, e)),
            "hits": x.hits,
            "size": x.size,
            "ratio": ratio_string(&x.ratio()),
        })).collect::<Vec<_>>(),
        "per_level": report.per_level.iter().map(ratio_string).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairsFile {
    window: WindowSpec,
    pairs: Vec<PairEntry>,
    #[serde(default)]
    probes: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairEntry {
    a: SetBody,
    b: SetBody,
}

fn density(a: DensityArgs) -> Res<Answer> {
    if let Some(DensityCommand::VerifyMonotone(m)) = a.command {
        return verify_monotone(m);
    }
    let (Some(path), Some(net)) = (a.set, a.net) else {
        return Err(InputError("density needs --set and --net".into()));
    };
    let set = read_set(&path)?;
    let net = parse_net(&net, set.window().clone())?;
    let report = upper_density(&set, &net, a.tail)?;
    Answer::ok(density_json(&report, &net))
}

fn verify_monotone(m: MonotoneArgs) -> Res<Answer> {
    let file: PairsFile = read_json(&m.pairs)?;
    let window = Arc::new(file.window.build()?);
    let build = |body: &SetBody, at: String| -> Res<GroundSet> {
        let spec = SetSpec {
            window: file.window.clone(),
            set: body.clone(),
            label: None,
        };
        spec.build_in(window.clone())
            .map_err(|e| InputError(format!("{}: field `{at}`: {e}", m.pairs.display())))
    };
    let mut pairs = Vec::with_capacity(file.pairs.len());
    for (i, p) in file.pairs.iter().enumerate() {
        pairs.push((build(&p.a, format!("pairs[{i}].a"))?, build(&p.b, format!("pairs[{i}].b"))?));
    }
    let fam = read_family(&m.family, window.clone())?;
    let tol = parse_tolerance(&m.tol).ok_or_else(|| InputError(format!("--tol {:?}: expected a decimal or p/q", m.tol)))?;
    let net_spec = m
        .net
        .unwrap_or_else(|| format!("interval:{}", (window.size() / 10).max(1)));
    let net = parse_net(&net_spec, window.clone())?;
    let probes = m.probes.or(file.probes).unwrap_or_else(|| vec![2, 4, 8]);
    let report = check_density_monotonicity(&pairs, &fam, &net, &probes, tol)?;
    let ok = report.all_hold();
    Ok(Answer {
        payload: json!({
            "b": report.b,
            "tolerance": ratio_string(&report.tolerance),
            "net": net.label(),
            "all_hold": ok,
            "entries": report.entries.iter().map(|e| json!({
                "d_a": ratio_string(&e.d_a),
                "d_b": ratio_string(&e.d_b),
                "margin": ratio_string(&e.margin),
                "shift": e.shift,
                "holds": e.holds(),
            })).collect::<Vec<_>>(),
        }),
        code: if ok { 0 } else { 1 },
    })
}

/// JSON form of a coloring certificate; colors are listed for `1..=N` and
/// also grouped into classes.
pub fn certificate_json(c: &ColoringCertificate) -> Value {
    let mut m = Map::new();
    m.insert("pattern".into(), c.pattern.to_string().into());
    m.insert("n".into(), c.n.into());
    m.insert("colors".into(), c.colors.into());
    match &c.outcome {
        ColoringOutcome::Avoiding(col) => {
            m.insert("outcome".into(), "avoiding".into());
            m.insert("coloring".into(), json!(col));
            let mut classes = vec![Vec::new(); c.colors as usize];
            for (i, &k) in col.iter().enumerate() {
                classes[k as usize].push(i as u64 + 1);
            }
            m.insert("classes".into(), json!(classes));
        }
        ColoringOutcome::Forced { nodes, exhaustive } => {
            m.insert("outcome".into(), "forced".into());
            m.insert("nodes".into(), (*nodes).into());
            m.insert("exhaustive".into(), (*exhaustive).into());
        }
    }
    m.insert("verified".into(), c.verify().into());
    Value::Object(m)
}

fn strong_json(v: &StrongPrVerdict) -> Value {
    let mut out = json!({
        "pattern": v.pattern.to_string(),
        "colors": v.colors,
        "set": v.set,
        "mode": v.mode,
        "verified": v.verify(),
    });
    match &v.outcome {
        StrongOutcome::Forced { examined, exhaustive } => {
            out["outcome"] = "forced".into();
            out["examined"] = (*examined).into();
            out["exhaustive"] = (*exhaustive).into();
        }
        StrongOutcome::Avoiding(part) => {
            out["outcome"] = "avoiding".into();
            out["partition"] = json!(part.iter().map(|(a, c)| [*a, u64::from(*c)]).collect::<Vec<_>>());
        }
    }
    out
}

fn pr(c: PrCommand) -> Res<Answer> {
    let payload = match c {
        PrCommand::Search { pattern, colors, n, order } => {
            let pattern: Pattern = pattern.parse()?;
            let limits = SearchLimits {
                order: match order {
                    Order::Asc => SearchOrder::Ascending,
                    Order::Desc => SearchOrder::Descending,
                },
                ..SearchLimits::default()
            };
            certificate_json(&find_avoiding_coloring_with(n, colors, &pattern, &limits)?)
        }
        PrCommand::Threshold { pattern, colors, nmax } => {
            let pattern: Pattern = pattern.parse()?;
            let t = ramsey_threshold_with(&pattern, colors, nmax, &SearchLimits::default())?;
            json!({
                "pattern": pattern.to_string(),
                "colors": colors,
                "nmax": nmax,
                "threshold": t.threshold,
                "below": t.below.as_ref().map(certificate_json),
                "at": t.at.as_ref().map(certificate_json),
            })
        }
        PrCommand::Equation { poly, colors, n, distinct, strict_homogeneous } => {
            let poly: Polynomial = poly.parse()?;
            let (cert, report) = homogeneous_pr_check(&poly, colors, n, distinct, strict_homogeneous)?;
            let mut v = certificate_json(&cert);
            v["polynomial"] = poly.to_string().into();
            v["homogeneous"] = report.homogeneous.into();
            v["degrees"] = json!(report.degrees);
            v
        }
        PrCommand::Strong { set, pattern, colors, mode } => {
            let set = read_set(&set)?;
            let pattern: Pattern = pattern.parse()?;
            let mode = match mode {
                Mode::Auto => ProbeMode::Auto,
                Mode::Exhaustive => ProbeMode::Exhaustive,
                Mode::Backtrack => ProbeMode::Backtrack,
            };
            strong_json(&strong_pr_probe(&set, &pattern, colors, mode)?)
        }
        PrCommand::Solutions { poly, set, n } => {
            let poly: Polynomial = poly.parse()?;
            let set = read_set(&set)?;
            let roots = ps_solutions_experiment(&poly, &set, n)?;
            json!({
                "polynomial": poly.to_string(),
                "variables": poly.variables().iter().map(char::to_string).collect::<Vec<_>>(),
                "n": n,
                "count": roots.len(),
                "solutions": roots,
            })
        }
    };
    Answer::ok(payload)
}

/// Hex SHA-256 of the canonical run inputs.
pub fn inputs_digest(suite: &str, seed: u64, budget: &str) -> String {
    let digest = Sha256::digest(format!("suite={suite};seed={seed};budget={budget}").as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn verify(a: VerifyArgs, echo: &[String], stderr: &mut dyn Write) -> Res<Answer> {
    let suite: Suite = a.suite.parse()?;
    let budget_name = match a.budget {
        Some(b) => b,
        None => std::env::var(BUDGET_ENV).unwrap_or_else(|_| "small".into()),
    };
    let budget: Budget = budget_name.parse()?;
    let started = Instant::now();
    let results = run_suite(suite, a.seed, budget);
    for r in &results {
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        let _ = writeln!(
            stderr,
            "{:<14} {} ({cases} cases)",
            r.suite,
            if r.passed { "pass" } else { "FAIL" }
        );
    }
    let _ = writeln!(stderr, "verify finished in {:.1?}", started.elapsed());
    let passed = results.iter().all(|r| r.passed);
    Ok(Answer {
        payload: json!({
            "command": echo,
            "inputs_digest": inputs_digest(suite.name(), a.seed, budget.name),
            "suite": suite.name(),
            "seed": a.seed,
            "budget": budget.name,
            "passed": passed,
            "results": results,
        }),
        code: if passed { 0 } else { 1 },
    })
}
