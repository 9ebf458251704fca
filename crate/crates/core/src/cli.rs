//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `--strict` is set and a verification
//! reports DISAGREE or ERRATUM, 2 on usage, parse or input errors.
//!
//! `KNOT_GUARD_LIMIT` overrides the enumeration guards. A bare integer sets
//! both; `minors=N,enumeration=M` sets them separately.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coloring::{
    brute_force_count_with_guard, count_colorings, knot_determinant, DEFAULT_ENUMERATION_GUARD,
};
use crate::diagram::{pretzel_diagram, KnotDiagram, Parity, PretzelSpec};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::pretzel::{pretzel_coloring_matrix, pretzel_determinant, pretzel_diagonal};
use crate::seifert::{
    alexander_polynomial, check_odd_closed_form, check_one_even_closed_form,
    check_reference_fixture, reference_spec, seifert_odd_pretzel, seifert_one_even,
    ClosedFormCheck, OddClosedForm, OddPretzelSpec, OneEvenPretzelSpec, SeifertMatrix, Verdict,
};
use crate::smith::{minors_gcd_profile, normal_form, smith_normal_form, DEFAULT_MINOR_GUARD};

pub const GUARD_ENV: &str = "KNOT_GUARD_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "knotinv",
    version,
    about = "Exact Fox-coloring and Alexander-polynomial invariants"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Exit with status 1 when a verification disagrees.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smith normal form of an integer matrix (JSON file or `-` for stdin).
    Snf { input: String },
    /// Closed-form coloring invariants of a pretzel knot `P(n1,...,nN)`.
    Pretzel(PretzelArgs),
    /// Number of r-colorings of a diagram or pretzel knot.
    Colorings(ColoringArgs),
    /// Knot determinant of a diagram or pretzel knot.
    Determinant { input: String },
    /// Alexander polynomial of `Podd(...)`, `Peven(...;...)`, `P(...)` or a
    /// Seifert matrix file.
    Alexander(AlexanderArgs),
    /// Print a diagram, optionally after Reidemeister insertions.
    Diagram(DiagramArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["diagonal", "matrix", "determinant", "diagram"])))]
pub struct PretzelArgs {
    pub spec: String,
    #[arg(long)]
    pub diagonal: bool,
    #[arg(long)]
    pub matrix: bool,
    #[arg(long)]
    pub determinant: bool,
    #[arg(long)]
    pub diagram: bool,
}

#[derive(Debug, Args)]
pub struct ColoringArgs {
    pub input: String,
    /// Modulus r >= 2.
    #[arg(long = "mod")]
    pub modulus: u64,
    /// Also count by exhaustive search and compare.
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Args)]
pub struct AlexanderArgs {
    pub spec: String,
    /// Also evaluate the closed form and compare.
    #[arg(long)]
    pub closed_form: bool,
    /// Use the odd-family closed form exactly as displayed in print.
    #[arg(long, requires = "closed_form")]
    pub printed: bool,
    /// Compare with the published P(5,3,7,4) polynomial.
    #[arg(long = "check-paper-fixture")]
    pub check_reference: bool,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    pub input: String,
    /// Reidemeister I on this arc (repeatable, applied in order).
    #[arg(long = "r1", value_name = "ARC")]
    pub r1: Vec<usize>,
    /// Reidemeister II pushing arc A under arc B (repeatable).
    #[arg(long = "r2", value_name = "A,B", value_parser = parse_pair)]
    pub r2: Vec<(usize, usize)>,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected A,B")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

/// Guards for the exponential oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub minors: usize,
    pub enumeration: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            minors: DEFAULT_MINOR_GUARD,
            enumeration: DEFAULT_ENUMERATION_GUARD,
        }
    }
}

impl Guards {
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("{GUARD_ENV}: cannot parse {spec:?}"));
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<u64>() {
            return Ok(Self {
                minors: usize::try_from(n).map_err(|_| bad())?,
                enumeration: n,
            });
        }
        let mut g = Self::default();
        for part in spec.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            let v: u64 = v.trim().parse().map_err(|_| bad())?;
            match k.trim() {
                "minors" => g.minors = usize::try_from(v).map_err(|_| bad())?,
                "enumeration" => g.enumeration = v,
                _ => return Err(bad()),
            }
        }
        Ok(g)
    }

    pub fn from_env() -> Result<Self> {
        match std::env::var(GUARD_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Result of one command: output text and whether a verification failed.
struct Outcome {
    text: String,
    disagreement: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            disagreement: false,
        }
    }
}

enum Input {
    Pretzel(PretzelSpec),
    Odd(OddPretzelSpec),
    Even(OneEvenPretzelSpec),
    Text(String),
}

fn read_input(arg: &str, stdin: &mut dyn Read) -> Result<Input> {
    let t = arg.trim_start();
    if t.starts_with("Podd") {
        return Ok(Input::Odd(t.parse()?));
    }
    if t.starts_with("Peven") {
        return Ok(Input::Even(t.parse()?));
    }
    if t.starts_with("P(") || t.starts_with("P ") {
        return Ok(Input::Pretzel(t.parse()?));
    }
    let mut s = String::new();
    if arg == "-" {
        stdin.read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(arg)?;
    }
    Ok(Input::Text(s))
}

fn read_diagram(arg: &str, stdin: &mut dyn Read) -> Result<KnotDiagram> {
    match read_input(arg, stdin)? {
        Input::Pretzel(spec) => pretzel_diagram(&spec),
        Input::Text(s) => Ok(serde_json::from_str(&s)?),
        _ => Err(Error::InvalidSpec(format!(
            "{arg} does not describe a diagram"
        ))),
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn strs(v: &[BigInt]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn agree_word(b: bool) -> &'static str {
    if b {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn cmd_snf(input: &str, format: Format, guards: Guards, stdin: &mut dyn Read) -> Result<Outcome> {
    let m: IntMatrix = match read_input(input, stdin)? {
        Input::Text(s) => serde_json::from_str(&s)?,
        _ => {
            return Err(Error::Parse(format!(
                "expected a matrix file, got {input:?}"
            )))
        }
    };
    let smith = smith_normal_form(&m);
    let normal = normal_form(&smith);
    let size = m.rows().min(m.cols());
    let mut text = format!(
        "diag:{}\nnormal:{}\n",
        prefix_each(&smith.diag),
        prefix_each(&normal)
    );
    let deltas = match minors_gcd_profile(&m, size, guards.minors) {
        Ok(p) => {
            text.push_str(&format!("deltas:{}\n", prefix_each(&p.deltas)));
            strs(&p.deltas)
        }
        Err(Error::GuardExceeded { size, limit, .. }) => {
            text.push_str(&format!(
                "deltas: skipped (size {size} exceeds minor guard {limit})\n"
            ));
            Value::Null
        }
        Err(e) => return Err(e),
    };
    let value = json!({"diag": strs(&smith.diag), "normal": strs(&normal), "deltas": deltas});
    Ok(Outcome::ok(render(format, text, value)))
}

fn prefix_each(v: &[BigInt]) -> String {
    v.iter().map(|x| format!(" {x}")).collect()
}

fn cmd_pretzel(a: &PretzelArgs, format: Format) -> Result<Outcome> {
    let spec: PretzelSpec = a.spec.parse()?;
    if a.diagram {
        let d = pretzel_diagram(&spec)?;
        let mut s = serde_json::to_string(&d)?;
        s.push('\n');
        return Ok(Outcome::ok(s));
    }
    let (text, value) = if a.diagonal {
        let d = pretzel_diagonal(&spec)?;
        (
            format!("{}\n", join(&d)),
            json!({"spec": spec.to_string(), "diagonal": strs(&d)}),
        )
    } else if a.matrix {
        let m = pretzel_coloring_matrix(&spec)?;
        (
            m.to_string(),
            json!({"spec": spec.to_string(), "matrix": m}),
        )
    } else {
        let d = pretzel_determinant(&spec)?;
        (
            format!("{d}\n"),
            json!({"spec": spec.to_string(), "determinant": d.to_string()}),
        )
    };
    Ok(Outcome::ok(render(format, text, value)))
}

fn cmd_colorings(
    a: &ColoringArgs,
    format: Format,
    guards: Guards,
    stdin: &mut dyn Read,
) -> Result<Outcome> {
    if a.modulus < 2 {
        return Err(Error::InvalidModulus(a.modulus));
    }
    let d = read_diagram(&a.input, stdin)?;
    let count = count_colorings(&d, a.modulus)?;
    if !a.brute {
        let value = json!({"modulus": a.modulus, "count": count.to_string()});
        return Ok(Outcome::ok(render(format, format!("{count}\n"), value)));
    }
    let brute = brute_force_count_with_guard(&d, a.modulus, guards.enumeration)?;
    let agree = brute == count;
    let text = format!("{count} {brute} {}\n", agree_word(agree));
    let value = json!({
        "modulus": a.modulus,
        "count": count.to_string(),
        "brute_force": brute.to_string(),
        "verdict": agree_word(agree),
    });
    Ok(Outcome {
        text: render(format, text, value),
        disagreement: !agree,
    })
}

fn cmd_determinant(input: &str, format: Format, stdin: &mut dyn Read) -> Result<Outcome> {
    let d = read_diagram(input, stdin)?;
    let det = knot_determinant(&d);
    Ok(Outcome::ok(render(
        format,
        format!("{det}\n"),
        json!({"determinant": det.to_string()}),
    )))
}

enum AlexanderTarget {
    Odd(OddPretzelSpec),
    Even(OneEvenPretzelSpec),
    Matrix(SeifertMatrix),
}

fn alexander_target(arg: &str, stdin: &mut dyn Read) -> Result<AlexanderTarget> {
    Ok(match read_input(arg, stdin)? {
        Input::Odd(s) => AlexanderTarget::Odd(s),
        Input::Even(s) => AlexanderTarget::Even(s),
        Input::Pretzel(p) => match p.parity() {
            Parity::AllOdd => AlexanderTarget::Odd(OddPretzelSpec::from_pretzel(&p)?),
            Parity::OneEven(_) => AlexanderTarget::Even(OneEvenPretzelSpec::from_pretzel(&p)?),
            Parity::Other => {
                return Err(Error::InvalidSpec(format!(
                    "{p} is neither all-odd nor one-even"
                )))
            }
        },
        Input::Text(s) => AlexanderTarget::Matrix(serde_json::from_str(&s)?),
    })
}

fn closed_form_lines(c: &ClosedFormCheck, text: &mut String) -> Value {
    text.push_str(&format!("closed form: {}\n", c.closed_form));
    text.push_str(&format!("closed form check: {}\n", agree_word(c.agree)));
    json!({"polynomial": c.closed_form.to_string(), "verdict": agree_word(c.agree)})
}

fn cmd_alexander(a: &AlexanderArgs, format: Format, stdin: &mut dyn Read) -> Result<Outcome> {
    let target = alexander_target(&a.spec, stdin)?;
    let seifert = match &target {
        AlexanderTarget::Odd(s) => seifert_odd_pretzel(s),
        AlexanderTarget::Even(s) => seifert_one_even(s),
        AlexanderTarget::Matrix(m) => m.clone(),
    };
    let poly = alexander_polynomial(&seifert);
    let mut text = format!("{poly}\n");
    let mut value = json!({"polynomial": poly.to_string()});
    let mut disagreement = false;

    if a.closed_form {
        let check = match &target {
            AlexanderTarget::Odd(s) => {
                let variant = if a.printed {
                    OddClosedForm::AsPrinted
                } else {
                    OddClosedForm::Corrected
                };
                check_odd_closed_form(s, variant)
            }
            AlexanderTarget::Even(s) => {
                let mut c = check_one_even_closed_form(s);
                c.agree = c.agree && c.determinant == poly;
                c
            }
            AlexanderTarget::Matrix(_) => {
                return Err(Error::InvalidSpec(
                    "closed forms need a pretzel spec".into(),
                ))
            }
        };
        disagreement |= !check.agree;
        value["closed_form"] = closed_form_lines(&check, &mut text);
    }

    if a.check_reference {
        match &target {
            AlexanderTarget::Even(s) if *s == reference_spec() => {}
            _ => {
                return Err(Error::InvalidSpec(
                    "--check-paper-fixture applies to Peven(2,1,3;2) only".into(),
                ))
            }
        }
        let r = check_reference_fixture()?;
        let consistent = r.determinant_consistent();
        text.push_str(&format!(
            "reference matrix: {}\n",
            if r.matrix_matches {
                "MATCH"
            } else {
                "MISMATCH"
            }
        ));
        text.push_str(&format!(
            "determinant routes: {}\n",
            agree_word(r.routes_agree)
        ));
        text.push_str(&format!("published: {}\n", r.published));
        text.push_str(&format!("verdict: {}\n", r.verdict));
        text.push_str(&format!(
            "computed: Δ(1) = {}, Δ(-1) = {}\n",
            r.computed_at_one, r.computed_at_minus_one
        ));
        text.push_str(&format!(
            "published: Δ(1) = {}, Δ(-1) = {}\n",
            r.published_at_one, r.published_at_minus_one
        ));
        text.push_str(&format!(
            "coloring determinant: {} ({})\n",
            r.coloring_determinant,
            if consistent {
                "consistent with |Δ(-1)|"
            } else {
                "differs from |Δ(-1)|"
            }
        ));
        disagreement |= r.verdict == Verdict::Erratum || !r.routes_agree || !r.matrix_matches;
        value["reference_fixture"] = json!({
            "matrix_matches": r.matrix_matches,
            "routes_agree": r.routes_agree,
            "published": r.published.to_string(),
            "verdict": r.verdict,
            "computed_at_one": r.computed_at_one.to_string(),
            "computed_at_minus_one": r.computed_at_minus_one.to_string(),
            "published_at_one": r.published_at_one.to_string(),
            "published_at_minus_one": r.published_at_minus_one.to_string(),
            "coloring_determinant": r.coloring_determinant.to_string(),
            "determinant_consistent": consistent,
        });
    }
    Ok(Outcome {
        text: render(format, text, value),
        disagreement,
    })
}

fn cmd_diagram(a: &DiagramArgs, format: Format, stdin: &mut dyn Read) -> Result<Outcome> {
    let mut d = read_diagram(&a.input, stdin)?;
    for &arc in &a.r1 {
        d = d.reidemeister_one_insert(arc)?;
    }
    for &(x, y) in &a.r2 {
        d = d.reidemeister_two_insert(x, y)?;
    }
    d.validate()?;
    let det = knot_determinant(&d);
    let text = format!(
        "crossings: {}\ncomponents: {}\ndeterminant: {}\n{}\n",
        d.n(),
        d.component_count(),
        det,
        serde_json::to_string(&d)?
    );
    let value = json!({
        "crossings": d.n(),
        "components": d.component_count(),
        "determinant": det.to_string(),
        "diagram": d,
    });
    Ok(Outcome::ok(render(format, text, value)))
}

/// Runs the CLI on explicit arguments and streams; returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
    guards: Guards,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Snf { input } => cmd_snf(input, format, guards, stdin),
        Command::Pretzel(a) => cmd_pretzel(a, format),
        Command::Colorings(a) => cmd_colorings(a, format, guards, stdin),
        Command::Determinant { input } => cmd_determinant(input, format, stdin),
        Command::Alexander(a) => cmd_alexander(a, format, stdin),
        Command::Diagram(a) => cmd_diagram(a, format, stdin),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if cli.strict && o.disagreement {
                let _ = writeln!(err, "verification failed");
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary: process arguments, environment and stdio.
pub fn main() -> i32 {
    let guards = match Guards::from_env() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin,
        &mut stdout,
        &mut stderr,
        guards,
    )
}
