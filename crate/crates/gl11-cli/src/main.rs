//! Command-line front end: parse braid or Morse inputs, compute the
//! selected invariant, print exact results.
//!
//! Exit codes: 0 success, 1 parse error, 2 validation error, 3 internal
//! assertion (a cut tangle failed to be a scalar multiple of the
//! identity, which would indicate a bug rather than bad input).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use gl11::invariant::{
    braid_skein_triple, cut_independence_check, hat_q, q_closed, skein_check, InvariantError,
};
use gl11::rep::{Weight, EPS1};
use gl11::scalar::LaurentPoly;
use gl11::tangle::{parse_morse, BraidWord, Labeling, TangleDiagram, TangleError};

#[derive(Parser)]
#[command(
    name = "gl11",
    about = "Exact quantum gl(1|1) invariants of links: the vanishing invariant, \
             the cut invariant and the Alexander polynomial"
)]
struct Args {
    /// Inline braid word, e.g. "n=2: 1 1 1"
    #[arg(long, conflicts_with_all = ["morse", "batch"])]
    braid: Option<String>,

    /// Morse-word file (or a file whose first line is `braid n=...: ...`)
    #[arg(long, conflicts_with = "batch")]
    morse: Option<PathBuf>,

    /// Directory of input files, processed in name order
    #[arg(long)]
    batch: Option<PathBuf>,

    /// Golden report to compare the batch output against
    #[arg(long, requires = "batch")]
    golden: Option<PathBuf>,

    /// Which invariant to compute
    #[arg(long, value_enum, default_value_t = Invariant::Alexander)]
    invariant: Invariant,

    /// Labeling: a constant weight "(a,b)" or per-component
    /// "c0=(1,0),c1=(2,-1)"
    #[arg(long)]
    label: Option<String>,

    /// Weight of the component to cut for hatq/check-cuts; defaults to
    /// the labeling's first weight
    #[arg(long)]
    cut: Option<String>,

    /// Output variable for polynomial values
    #[arg(long, value_enum, default_value_t = Format::Q)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    /// The plain closed-diagram invariant (zero on nonempty links)
    Q,
    /// The cut invariant
    Hatq,
    /// The Alexander polynomial (forces the constant vector labeling)
    Alexander,
    /// Verify the skein relation at every crossing (braid inputs)
    CheckSkein,
    /// Verify that all cut sites give the same value
    CheckCuts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Q,
    T,
}

enum CliError {
    Parse(String),
    Validation(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Validation(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<TangleError> for CliError {
    fn from(e: TangleError) -> Self {
        match e {
            TangleError::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::NotScalar { .. } => CliError::Internal(e.to_string()),
            InvariantError::Tangle(t) => t.into(),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

/// One parsed input: a diagram, an optional braid presentation of it,
/// and any labeling carried by the file.
struct Input {
    diagram: TangleDiagram,
    braid: Option<BraidWord>,
    file_labeling: Option<Labeling>,
}

fn parse_weight(s: &str) -> Result<Weight, CliError> {
    Weight::parse(s).ok_or_else(|| CliError::Parse(format!("bad weight literal `{s}`")))
}

fn parse_labeling(s: &str) -> Result<Labeling, CliError> {
    let s = s.trim();
    if s.starts_with('(') {
        return Ok(Labeling::Constant(parse_weight(s)?));
    }
    let mut map = BTreeMap::new();
    for part in s.split(',').collect::<Vec<_>>().chunks(2) {
        // weights contain a comma, so stitch the split back together
        let joined = part.join(",");
        let (comp, wt) = joined
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("bad labeling part `{joined}`")))?;
        let comp = comp
            .trim()
            .strip_prefix('c')
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| CliError::Parse(format!("bad component id `{comp}`")))?;
        map.insert(comp, parse_weight(wt)?);
    }
    Ok(Labeling::PerComponent(map))
}

fn parse_input_text(text: &str) -> Result<Input, CliError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with("braid") || first.starts_with("n=") {
        let b = BraidWord::parse(first)?;
        Ok(Input {
            diagram: b.closure(),
            braid: Some(b),
            file_labeling: None,
        })
    } else {
        let (diagram, file_labeling) = parse_morse(text)?;
        Ok(Input {
            diagram,
            braid: None,
            file_labeling,
        })
    }
}

fn load_input(args: &Args, path: Option<&Path>) -> Result<Input, CliError> {
    if let Some(b) = &args.braid {
        let b = BraidWord::parse(b)?;
        return Ok(Input {
            diagram: b.closure(),
            braid: Some(b),
            file_labeling: None,
        });
    }
    let path =
        path.ok_or_else(|| CliError::Parse("no input given: --braid, --morse or --batch".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_input_text(&text)
}

fn render_poly(p: &LaurentPoly, format: Format) -> String {
    if format == Format::T {
        if let Some(t) = p.in_t() {
            return t.to_string_var("t");
        }
    }
    p.to_string()
}

fn run_job(args: &Args, input: &Input) -> Result<String, CliError> {
    let labeling = match &args.label {
        Some(s) => parse_labeling(s)?,
        None => input
            .file_labeling
            .clone()
            .unwrap_or(Labeling::Constant(EPS1)),
    };
    let cut_weight = match &args.cut {
        Some(s) => parse_weight(s)?,
        None => match &labeling {
            Labeling::Constant(w) => *w,
            Labeling::PerComponent(m) => *m
                .values()
                .next()
                .ok_or_else(|| CliError::Validation("empty labeling".into()))?,
        },
    };
    let mut out = String::new();
    match args.invariant {
        Invariant::Q => {
            let v = q_closed(&input.diagram, &labeling)?;
            writeln!(out, "{v}").unwrap();
        }
        Invariant::Hatq => {
            let res = hat_q(&input.diagram, &labeling, cut_weight)?;
            match res.value.as_laurent() {
                Some(p) => writeln!(out, "{}", render_poly(p, args.format)).unwrap(),
                None => writeln!(out, "{}", res.value).unwrap(),
            }
            if labeling != Labeling::Constant(EPS1) {
                for (c, w) in res.writhes.iter().enumerate() {
                    writeln!(out, "writhe c{c} = {w:+}").unwrap();
                }
            }
        }
        Invariant::Alexander => {
            if labeling != Labeling::Constant(EPS1) {
                return Err(CliError::Validation(
                    "alexander forces the constant (1,0) labeling".into(),
                ));
            }
            let p = gl11::invariant::alexander(&input.diagram)?;
            writeln!(out, "{}", render_poly(&p, args.format)).unwrap();
        }
        Invariant::CheckSkein => {
            let b = input
                .braid
                .as_ref()
                .ok_or_else(|| CliError::Validation("check-skein needs a braid input".into()))?;
            let mut sites = 0;
            for at in 0..b.word.len() {
                let (p, m, z) = braid_skein_triple(b, at);
                if !skein_check(&p, &m, &z)? {
                    return Err(CliError::Internal(format!(
                        "skein relation fails at crossing {at}"
                    )));
                }
                sites += 1;
            }
            writeln!(out, "skein relation holds at all {sites} crossings").unwrap();
        }
        Invariant::CheckCuts => {
            if !cut_independence_check(&input.diagram, &labeling, cut_weight)? {
                return Err(CliError::Internal("cut sites disagree".into()));
            }
            let res = hat_q(&input.diagram, &labeling, cut_weight)?;
            writeln!(out, "all cuts agree: {}", res.value).unwrap();
        }
    }
    Ok(out)
}

fn run_batch(args: &Args, dir: &Path) -> Result<String, CliError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Parse(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(
                    p.extension().and_then(|e| e.to_str()),
                    Some("braid") | Some("morse")
                )
        })
        .collect();
    files.sort();
    let mut report = String::new();
    for path in &files {
        let name = path.file_name().unwrap().to_string_lossy();
        let input = load_input(args, Some(path))?;
        let body = run_job(args, &input)?;
        for line in body.lines() {
            writeln!(report, "{name}: {line}").unwrap();
        }
    }
    Ok(report)
}

fn run(args: &Args) -> Result<String, CliError> {
    if let Some(dir) = &args.batch {
        let report = run_batch(args, dir)?;
        if let Some(golden) = &args.golden {
            let expected = std::fs::read_to_string(golden)
                .map_err(|e| CliError::Parse(format!("{}: {e}", golden.display())))?;
            if report != expected {
                let diff = report
                    .lines()
                    .zip(expected.lines())
                    .enumerate()
                    .find(|(_, (a, b))| a != b);
                let detail = match diff {
                    Some((i, (a, b))) => {
                        format!("first difference at line {}: got `{a}`, want `{b}`", i + 1)
                    }
                    None => "reports differ in length".to_string(),
                };
                return Err(CliError::Validation(format!(
                    "batch output does not match golden file: {detail}"
                )));
            }
        }
        return Ok(report);
    }
    let input = load_input(args, args.morse.as_deref())?;
    run_job(args, &input)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
