//! Command-line front end. Every command delegates to the library and
//! wraps the result in a JSON envelope
//! `{command, inputs, result, provenance}` whose numbers are all decimal
//! strings; `--format table` renders the same envelope as aligned text.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::chowring::{chern_dual, chern_twist, euler_characteristic, p_functor, schwarzenberger, ChernVector};
use crate::classifier::{filter_chern_records, verify_classification};
use crate::cohomtab::{
    bott_table, enumerate_spectra, h1_formulas, spectrum_h1, spectrum_h2, CohomologyTable, Spectrum,
};
use crate::exterior::{
    gg_omega12_check, horrocks_epi_check, horrocks_ker_gg_check, parse_multivector, sasakura_gg_check,
    skew_normal_form, GgVerdict,
};
use crate::monadlab::{complex_cohomology_bundle, monad_cohomology_table, parse_expr, ComplexExpr, ComplexKind};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN_COMMAND: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "pnbundles", version, about = "Chern classes, cohomology tables and classification data for bundles on P^n")]
struct Cli {
    /// Output format; defaults to $PNB_FORMAT, then json.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Dimension of the ambient projective space.
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Twist window `lmin:lmax` for cohomology tables.
    #[arg(long, global = true, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i64, i64)>,
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("expected lmin:lmax")?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad lmin '{a}'"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad lmax '{b}'"))?;
    if a > b {
        return Err(format!("empty window {a}:{b}"));
    }
    Ok((a, b))
}

/// A bundle given either as an expression or by rank and Chern classes.
#[derive(Args, Debug, Serialize)]
struct BundleArgs {
    /// Expression such as `2*O(1) + Om(1,2)`.
    #[arg(long, allow_hyphen_values = true)]
    expr: Option<String>,
    /// Chern classes `c1,c2,..`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    c: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    rank: Option<i64>,
}

impl BundleArgs {
    fn chern(&self, n: usize) -> crate::Result<ChernVector> {
        match (&self.expr, &self.c) {
            (Some(e), None) => parse_expr(e)?.chern(n),
            (None, Some(c)) => ChernVector::from_ints(n, self.rank.unwrap_or(n as i64), c),
            _ => Err(Error::Invalid("give exactly one of --expr and --c".into())),
        }
    }
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Cmd {
    /// Rank and Chern classes, optionally twisted or dualized.
    Chern {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        twist: i64,
        #[arg(long)]
        dual: bool,
    },
    /// Chern classes of P(E) given h^0(E).
    Pfun {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        h0: i64,
    },
    /// Euler characteristics over the window, or at one twist.
    Chi {
        #[command(flatten)]
        #[serde(flatten)]
        bundle: BundleArgs,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<i64>,
    },
    /// Schwarzenberger congruence on P^4 data.
    Congr {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        c: Vec<i64>,
    },
    /// Cohomology of Ω^p(t) over the window.
    Bott {
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        twist: i64,
    },
    /// Spectra of stable rank 3 bundles on P^3.
    Spectrum {
        #[command(subcommand)]
        cmd: SpectrumCmd,
    },
    /// h^1(F(-2)), h^1(F(-1)) for c1 = 5 bundles on P^3.
    H1 {
        #[arg(long)]
        c2: i64,
        #[arg(long)]
        c3: i64,
        #[arg(long, default_value_t = 0)]
        h0: i64,
    },
    /// Cohomology of a monad or short exact sequence.
    Monad {
        /// Left term (degree -1).
        #[arg(long, allow_hyphen_values = true)]
        left: Option<String>,
        /// Middle term (degree 0).
        #[arg(long, allow_hyphen_values = true)]
        middle: String,
        /// Right term (degree 1).
        #[arg(long, allow_hyphen_values = true)]
        right: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        twist: i64,
    },
    /// Exterior-algebra criteria for maps between twisted differentials.
    Omega {
        #[command(subcommand)]
        cmd: OmegaCmd,
    },
    /// Admissible Chern data with c1 = 5 and their constructions.
    Classify {
        #[arg(long, default_value_t = 12)]
        c2_max: i64,
    },
    /// Recompute the eight bundles of the main classification.
    Verify,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum SpectrumCmd {
    /// All spectra with the given c2, c3.
    Enum {
        #[arg(long)]
        c2g: i64,
        #[arg(long, allow_hyphen_values = true)]
        c3g: i64,
        /// Only spectra with non-positive entries.
        #[arg(long)]
        nonpositive: bool,
    },
    /// h^1(G(l)) and h^2(G(l)) from a spectrum.
    Cohom {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        k: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OmegaCmd {
    /// Whether Ω^3(3) -> Ω^1(1) on P^5 given by ω is onto.
    Horrocks {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = 6)]
        dim: usize,
    },
    /// Whether Ω^3(3) ⊕ Ω^2(2) -> Ω^1(1) on P^4 given by (ω, v) is onto.
    Sasakura {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 5)]
        dim: usize,
    },
    /// Whether the kernel of Ω^2(2) -> O on P^5, twisted by 1, is globally generated.
    KerGg {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long, default_value_t = 6)]
        dim: usize,
    },
    /// Skew normal form of a 2-vector.
    Normal {
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Whether a space of 2-forms generates Ω^1(2).
    Gg {
        /// One 2-form per flag.
        #[arg(long = "w", allow_hyphen_values = true, required = true)]
        w: Vec<String>,
        #[arg(long)]
        dim: usize,
    },
}

impl Cmd {
    fn name(&self) -> String {
        match self {
            Cmd::Chern { .. } => "chern".into(),
            Cmd::Pfun { .. } => "pfun".into(),
            Cmd::Chi { .. } => "chi".into(),
            Cmd::Congr { .. } => "congr".into(),
            Cmd::Bott { .. } => "bott".into(),
            Cmd::Spectrum { cmd: SpectrumCmd::Enum { .. } } => "spectrum enum".into(),
            Cmd::Spectrum { cmd: SpectrumCmd::Cohom { .. } } => "spectrum cohom".into(),
            Cmd::H1 { .. } => "h1".into(),
            Cmd::Monad { .. } => "monad".into(),
            Cmd::Omega { cmd } => format!(
                "omega {}",
                match cmd {
                    OmegaCmd::Horrocks { .. } => "horrocks",
                    OmegaCmd::Sasakura { .. } => "sasakura",
                    OmegaCmd::KerGg { .. } => "ker-gg",
                    OmegaCmd::Normal { .. } => "normal",
                    OmegaCmd::Gg { .. } => "gg",
                }
            ),
            Cmd::Classify { .. } => "classify".into(),
            Cmd::Verify => "verify".into(),
        }
    }
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn chern_json(c: &ChernVector) -> Value {
    json!({ "n": s(c.n()), "rank": s(c.rank()), "c": c.classes().iter().map(s).collect::<Vec<_>>() })
}

fn table_json(t: &CohomologyTable) -> Value {
    let (lmin, lmax) = t.window();
    let rows: Vec<Value> = (lmin..=lmax)
        .map(|l| {
            let mut m = Map::new();
            m.insert("l".into(), s(l));
            for (q, e) in t.row(l).expect("in window").iter().enumerate() {
                m.insert(format!("h{q}"), s(e));
            }
            Value::Object(m)
        })
        .collect();
    Value::Array(rows)
}

fn default_window(n: usize) -> (i64, i64) {
    (-(n as i64) - 2, 2)
}

type Outcome = crate::Result<(Value, Vec<String>)>;

fn dispatch(cli: &Cli) -> Outcome {
    let n = cli.n;
    let (lmin, lmax) = cli.window.unwrap_or_else(|| default_window(n));
    match &cli.cmd {
        Cmd::Chern { bundle, twist, dual } => {
            let mut c = bundle.chern(n)?;
            if *dual {
                c = chern_dual(&c);
            }
            c = chern_twist(&c, *twist);
            Ok((chern_json(&c), vec!["Whitney formula".into(), "splitting principle".into()]))
        }
        Cmd::Pfun { bundle, h0 } => {
            let c = bundle.chern(n)?;
            Ok((chern_json(&p_functor(&c, *h0)), vec!["P-functor Chern classes".into()]))
        }
        Cmd::Chi { bundle, l } => {
            let c = bundle.chern(n)?;
            let ls: Vec<i64> = match l {
                Some(l) => vec![*l],
                None => (lmin..=lmax).collect(),
            };
            let rows = ls
                .iter()
                .map(|&l| Ok(json!({ "l": s(l), "chi": s(euler_characteristic(&c, l)?) })))
                .collect::<crate::Result<Vec<_>>>()?;
            Ok((Value::Array(rows), vec!["Hirzebruch-Riemann-Roch".into()]))
        }
        Cmd::Congr { c } => {
            let cv = ChernVector::from_ints(n.max(4), 0, c)?;
            Ok((json!({ "holds": schwarzenberger(&cv)? }), vec!["Schwarzenberger congruence".into()]))
        }
        Cmd::Bott { p, twist } => {
            let t = bott_table(n, *p, *twist, lmin, lmax)?;
            Ok((table_json(&t), vec!["Bott formula".into()]))
        }
        Cmd::Spectrum { cmd: SpectrumCmd::Enum { c2g, c3g, nonpositive } } => {
            let v = enumerate_spectra(*c2g, *c3g, *nonpositive)?;
            let rows: Vec<Value> = v.iter().map(|sp| Value::Array(sp.values().iter().map(s).collect())).collect();
            Ok((json!({ "count": s(rows.len()), "spectra": rows }), vec!["spectrum enumeration".into()]))
        }
        Cmd::Spectrum { cmd: SpectrumCmd::Cohom { k, l } } => {
            let sp = Spectrum::new(k.clone())?;
            let h1 = spectrum_h1(&sp, *l).map(s).unwrap_or(Value::Null);
            let h2 = spectrum_h2(&sp, *l).map(s).unwrap_or(Value::Null);
            if h1.is_null() && h2.is_null() {
                return Err(Error::OutOfRange(format!("no spectrum formula at l = {l}")));
            }
            Ok((json!({ "l": s(l), "h1": h1, "h2": h2 }), vec!["spectrum cohomology".into()]))
        }
        Cmd::H1 { c2, c3, h0 } => {
            let v = h1_formulas(*c2, *c3, *h0)?;
            Ok((
                json!({ "h1_f_minus2": s(&v.h1_fm2), "h1_f_minus1": s(&v.h1_fm1), "consistent": v.consistent }),
                vec!["h1 identities on P^3".into()],
            ))
        }
        Cmd::Monad { left, middle, right, twist } => {
            let parse = |x: &Option<String>| x.as_deref().map(parse_expr).transpose();
            let (a, b, c) = (parse(left)?, parse_expr(middle)?, parse(right)?);
            let cx = match (a, c) {
                (Some(a), Some(c)) => ComplexExpr::monad(a, b, c),
                (Some(a), None) => ComplexExpr::cokernel(a, b),
                (None, Some(c)) => ComplexExpr::kernel(b, c),
                (None, None) => ComplexExpr::single(b),
            };
            let cx = cx.twist(*twist);
            let kind = match cx.kind {
                ComplexKind::Monad => "monad",
                ComplexKind::ShortExact => "short exact",
                ComplexKind::LeftResolution => "single",
            };
            let c = complex_cohomology_bundle(&cx, n)?;
            let t = monad_cohomology_table(&cx, n, lmin, lmax)?;
            Ok((
                json!({ "display": s(&cx), "kind": kind, "bundle": chern_json(&c), "table": table_json(&t) }),
                vec!["Bott formula".into(), "long exact sequences".into(), "Euler characteristic fill".into()],
            ))
        }
        Cmd::Omega { cmd } => omega(cmd),
        Cmd::Classify { c2_max } => {
            let recs = filter_chern_records(n, 0..=*c2_max)?;
            let mut prov: Vec<String> = Vec::new();
            let rows: Vec<Value> = recs
                .iter()
                .map(|r| {
                    for t in &r.rule_trace {
                        if !prov.iter().any(|p| p == t.name) {
                            prov.push(t.name.to_string());
                        }
                    }
                    let (c2, c3, c4) = r.triple();
                    json!({
                        "rank": s(r.rank), "c2": s(c2), "c3": s(c3), "c4": s(c4),
                        "construction": r.construction,
                        "rules": r.rule_trace.iter().map(|t| format!("{} [{}]", t.name, serde_json::to_value(t.kind).unwrap().as_str().unwrap())).collect::<Vec<_>>(),
                        "assumptions": r.assumptions,
                    })
                })
                .collect();
            Ok((Value::Array(rows), prov))
        }
        Cmd::Verify => {
            let rep = verify_classification()?;
            let items: Vec<Value> = rep
                .items
                .iter()
                .map(|it| {
                    json!({
                        "item": it.item, "n": s(it.n), "rank": s(it.chern.rank()),
                        "c": it.chern.classes().iter().map(s).collect::<Vec<_>>(),
                        "h0": it.h0.as_ref().map(s),
                        "passed": it.passed(),
                        "failed": it.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok((json!({ "passed": rep.passed(), "items": items }), vec!["P-functor pairing".into(), "Schwarzenberger congruence".into()]))
        }
    }
}

fn omega(cmd: &OmegaCmd) -> Outcome {
    let prov = |x: &str| vec![x.to_string()];
    match cmd {
        OmegaCmd::Horrocks { omega, dim } => {
            let w = parse_multivector(omega, Some(*dim))?;
            Ok((json!({ "epi": horrocks_epi_check(&w)? }), prov("epimorphism criterion via skew rank")))
        }
        OmegaCmd::Sasakura { omega, v, dim } => {
            let w = parse_multivector(omega, Some(*dim))?;
            let v = parse_multivector(v, Some(*dim))?;
            Ok((json!({ "epi": sasakura_gg_check(&w, &v)? }), prov("epimorphism criterion via normal form")))
        }
        OmegaCmd::KerGg { omega, dim } => {
            let w = parse_multivector(omega, Some(*dim))?;
            Ok((json!({ "globally_generated": horrocks_ker_gg_check(&w)? }), prov("kernel generation via skew rank")))
        }
        OmegaCmd::Normal { omega, dim } => {
            let w = parse_multivector(omega, *dim)?;
            let nf = skew_normal_form(&w)?;
            Ok((
                json!({ "rank": s(nf.rank), "normal_form": s(nf.reconstruct(w.is_covariant())) }),
                prov("skew normal form"),
            ))
        }
        OmegaCmd::Gg { w, dim } => {
            let ws = w.iter().map(|x| parse_multivector(x, Some(*dim))).collect::<crate::Result<Vec<_>>>()?;
            let (verdict, witness) = match gg_omega12_check(*dim, &ws)? {
                GgVerdict::GloballyGenerated => ("globally generated", Value::Null),
                GgVerdict::NotGloballyGenerated(x) => ("not globally generated", s(x)),
                GgVerdict::Undecided => ("undecided", Value::Null),
            };
            Ok((json!({ "verdict": verdict, "witness": witness }), prov("decomposable element in the orthogonal")))
        }
    }
}

/// Replaces every JSON number by its decimal string.
fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(x) => Value::String(x.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(..) => "dimension_mismatch",
        Error::Invalid(_) => "invalid",
        Error::Parse(_) => "parse",
        Error::NonIntegral(_) => "non_integral",
        Error::OutOfRange(_) => "out_of_range",
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => format!("({})", a.iter().map(scalar_text).collect::<Vec<_>>().join(",")),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

/// Cell text; long lists of words collapse to a count so rows stay readable.
fn cell_text(v: &Value) -> String {
    match v {
        Value::Array(a) if a.len() > 3 && a.iter().any(|x| x.as_str().is_some_and(|t| t.contains(' '))) => {
            format!("[{} entries]", a.len())
        }
        other => scalar_text(other),
    }
}

fn aligned(rows: &[Map<String, Value>]) -> String {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| r.get(c).map(cell_text).unwrap_or_default()).collect()).collect();
    let width: Vec<usize> =
        (0..cols.len()).map(|j| cells.iter().map(|r| r[j].len()).chain([cols[j].len()]).max().unwrap_or(0)).collect();
    let line = |xs: &[String]| {
        xs.iter().zip(&width).map(|(x, w)| format!("{x:>w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(&cols)];
    out.extend(cells.iter().map(|r| line(r)));
    out.join("\n")
}

fn render_table(v: &Value, key: &str, out: &mut Vec<String>) {
    match v {
        Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object) => {
            if !key.is_empty() {
                out.push(format!("{key}:"));
            }
            let rows: Vec<Map<String, Value>> = a.iter().map(|x| x.as_object().unwrap().clone()).collect();
            out.push(aligned(&rows));
        }
        Value::Object(m) => {
            for (k, x) in m {
                let full = if key.is_empty() { k.clone() } else { format!("{key}.{k}") };
                render_table(x, &full, out);
            }
        }
        other => out.push(format!("{key}: {}", scalar_text(other))),
    }
}

/// Text rendering of an envelope for `--format table`.
pub fn envelope_to_table(env: &Value) -> String {
    let mut out = Vec::new();
    if let Some(c) = env.get("command") {
        out.push(format!("command: {}", scalar_text(c)));
    }
    if let Some(r) = env.get("result") {
        render_table(r, "", &mut out);
    }
    if let Some(p) = env.get("provenance").and_then(Value::as_array) {
        out.push(format!("provenance: {}", p.iter().map(scalar_text).collect::<Vec<_>>().join("; ")));
    }
    out.join("\n") + "\n"
}

/// Runs the CLI on `argv` (program name first) with `default_format` used
/// when `--format` is absent.
pub fn run_with<I, T>(argv: I, default_format: Option<&str>) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::InvalidSubcommand => EXIT_UNKNOWN_COMMAND,
                _ => EXIT_INVALID,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = match (cli.format, default_format) {
        (Some(f), _) => f,
        (None, Some(d)) => match Format::from_str(d, true) {
            Ok(f) => f,
            Err(_) => {
                return RunOutput {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: format!("error: PNB_FORMAT must be json or table, got '{d}'\n"),
                }
            }
        },
        (None, None) => Format::Json,
    };
    let command = cli.cmd.name();
    let mut inputs = serde_json::to_value(&cli.cmd).unwrap_or(Value::Null);
    // strip subcommand tags so inputs hold just the arguments
    loop {
        let inner = match &inputs {
            Value::Object(m) if m.len() == 1 => m.values().next().filter(|v| v.is_object()).cloned(),
            Value::String(_) => Some(json!({})),
            _ => None,
        };
        match inner {
            Some(v) => inputs = v,
            None => break,
        }
    }
    let mut globals = Map::new();
    globals.insert("n".into(), s(cli.n));
    if let Some((a, b)) = cli.window {
        globals.insert("window".into(), s(format!("{a}:{b}")));
    }
    match dispatch(&cli) {
        Ok((result, provenance)) => {
            let env = stringify_numbers(json!({
                "command": command,
                "inputs": { "global": globals, "args": inputs },
                "result": result,
                "provenance": provenance,
            }));
            let stdout = match format {
                Format::Json => serde_json::to_string_pretty(&env).expect("serializable") + "\n",
                Format::Table => envelope_to_table(&env),
            };
            RunOutput { code: EXIT_OK, stdout, stderr: String::new() }
        }
        Err(e) => {
            let env = json!({ "command": command, "error": { "kind": error_kind(&e), "message": e.to_string() } });
            RunOutput {
                code: EXIT_INVALID,
                stdout: serde_json::to_string_pretty(&env).expect("serializable") + "\n",
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

/// Runs the CLI with the default format taken from `PNB_FORMAT`.
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let fmt = std::env::var("PNB_FORMAT").ok();
    run_with(argv, fmt.as_deref())
}

/// Entry point for the binary: runs on the process arguments, prints, and
/// returns the exit code.
pub fn main_exit_code() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
