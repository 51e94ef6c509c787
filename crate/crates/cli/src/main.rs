mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgewise::homology::{chain_complex, homology, verdict};
use edgewise::selftest::{self, Fault, SelftestOptions};
use edgewise::simplicial::{materialize, skeleton, subdivide};
use edgewise::word::{decompose, oracle_of, SubdivisionOracle, Word};
use edgewise::Error;
use serde::Serialize;

const MAX_SIMPLEX: usize = 3;
const MAX_LEVEL: usize = 4;

#[derive(Parser)]
#[command(
    name = "edgewise",
    version,
    about = "Edgewise subdivisions of simplicial sets from endofunctors of Δ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide Δ^m by a word and export the result.
    Subdivide {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Recover the word of an endofunctor from its level 0 and 1 data.
    Decompose {
        /// JSON file with fields t0, t1, td0, td1, ts0.
        #[arg(long, conflicts_with = "word")]
        oracle: Option<PathBuf>,
        #[arg(long, required_unless_present = "oracle")]
        word: Option<String>,
        /// Re-derive the oracle from the recovered word and compare.
        #[arg(long)]
        roundtrip: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether the word's subdivision preserves weak equivalences.
    CheckWe {
        #[arg(long)]
        word: String,
        /// Largest n for the homology evidence on Δ^n.
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long)]
        unsafe_limits: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Integral homology of a subdivided simplex.
    Homology {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Run the bundled invariant sweeps.
    Selftest {
        /// Largest n for the homology sweep.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Seed for the random matrix check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        unsafe_limits: bool,
        /// Replace one composition rule by a wrong one.
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    word: String,
    /// Dimension m of the simplex Δ^m.
    #[arg(long)]
    simplex: usize,
    /// Highest level D to compute; defaults to m + 1.
    #[arg(long)]
    max_dim: Option<usize>,
    /// Lift the m ≤ 3, D ≤ 4 guards.
    #[arg(long)]
    unsafe_limits: bool,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

enum Failure {
    Failed(String),
    Parse(String),
    Limits(String),
    Malformed(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Failed(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Limits(_) => 3,
            Failure::Malformed(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Failed(m) | Failure::Parse(m) | Failure::Limits(m) | Failure::Malformed(m) => {
                m
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedOracle(_) => Failure::Malformed(e.to_string()),
            Error::WordParse(_) => Failure::Parse(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Parse(e.to_string()))
}

fn check_limit(name: &str, value: usize, max: usize, unsafe_limits: bool) -> Result<(), Failure> {
    if value > max && !unsafe_limits {
        return Err(Failure::Limits(format!(
            "{name} = {value} exceeds {max}; pass --unsafe-limits to override"
        )));
    }
    Ok(())
}

impl Target {
    fn resolve(&self) -> Result<(Word, usize, usize), Failure> {
        let word = parse_word(&self.word)?;
        let d = self.max_dim.unwrap_or(self.simplex + 1);
        check_limit(
            "simplex dimension",
            self.simplex,
            MAX_SIMPLEX,
            self.unsafe_limits,
        )?;
        check_limit("level bound", d, MAX_LEVEL, self.unsafe_limits)?;
        Ok((word, self.simplex, d))
    }
}

impl Output {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        let io_failure = |e: io::Error| Failure::Failed(format!("cannot write output: {e}"));
        match &self.out {
            Some(path) => fs::write(path, text).map_err(io_failure),
            None => io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(io_failure),
        }
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<(), Failure> {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        self.emit(&text)
    }

    fn reject_dot(&self) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(Failure::Parse(
                "--format dot is only available for subdivide".into(),
            ));
        }
        Ok(())
    }
}

fn cmd_subdivide(target: &Target, output: &Output) -> Outcome {
    let (word, m, d) = target.resolve()?;
    let x = subdivide(&word, m);
    match output.format {
        Format::Dot => output.emit(&render::dot(&word, m, &skeleton(&x)))?,
        Format::Json => output.emit_json(&materialize(&x, d))?,
        Format::Text => output.emit(&render::skeleton_text(&word, m, &skeleton(&x)))?,
    }
    Ok(true)
}

#[derive(Serialize)]
struct Decomposition {
    oracle: SubdivisionOracle,
    word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    roundtrip: Option<bool>,
}

fn read_oracle(path: &PathBuf) -> Result<SubdivisionOracle, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Failed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("malformed oracle: {e}")))
}

fn cmd_decompose(
    oracle_path: Option<&PathBuf>,
    word: Option<&str>,
    roundtrip: bool,
    output: &Output,
) -> Outcome {
    output.reject_dot()?;
    let (oracle, given) = match (oracle_path, word) {
        (Some(path), _) => (read_oracle(path)?, None),
        (None, Some(text)) => {
            let w = parse_word(text)?;
            (oracle_of(&w), Some(w))
        }
        (None, None) => {
            return Err(Failure::Parse(
                "either --oracle or --word is required".into(),
            ))
        }
    };
    let recovered = decompose(&oracle)?;
    let roundtrip = roundtrip
        .then(|| oracle_of(&recovered) == oracle && given.as_ref().is_none_or(|w| *w == recovered));
    match output.format {
        Format::Json => output.emit_json(&Decomposition {
            oracle,
            word: recovered.to_string(),
            roundtrip,
        })?,
        _ => {
            let mut text = format!("{recovered}\n");
            if let Some(ok) = roundtrip {
                text.push_str(if ok {
                    "roundtrip: pass\n"
                } else {
                    "roundtrip: FAIL\n"
                });
            }
            output.emit(&text)?;
        }
    }
    Ok(roundtrip.unwrap_or(true))
}

fn cmd_check_we(word: &str, max_n: usize, unsafe_limits: bool, output: &Output) -> Outcome {
    output.reject_dot()?;
    let word = parse_word(word)?;
    check_limit("max n", max_n, MAX_SIMPLEX, unsafe_limits)?;
    let v = verdict(&word, max_n)?;
    match output.format {
        Format::Json => output.emit_json(&v)?,
        _ => output.emit(&render::verdict_text(&v))?,
    }
    if !v.consistent {
        return Err(Failure::Failed(format!("inconsistent evidence for {word}")));
    }
    Ok(v.preserving)
}

#[derive(Serialize)]
struct HomologyOutput {
    word: String,
    simplex: usize,
    max_dim: usize,
    ranks: Vec<usize>,
    unreduced: edgewise::homology::HomologyReport,
    reduced: edgewise::homology::HomologyReport,
}

fn cmd_homology(target: &Target, output: &Output) -> Outcome {
    output.reject_dot()?;
    let (word, m, d) = target.resolve()?;
    let c = chain_complex(&subdivide(&word, m), d)?;
    let report = HomologyOutput {
        word: word.to_string(),
        simplex: m,
        max_dim: d,
        ranks: c.bases.iter().map(Vec::len).collect(),
        unreduced: homology(&c, false),
        reduced: homology(&c, true),
    };
    match output.format {
        Format::Json => output.emit_json(&report)?,
        _ => output.emit(&render::homology_text(
            &report.word,
            m,
            &report.ranks,
            &report.unreduced,
            &report.reduced,
        ))?,
    }
    Ok(true)
}

fn cmd_selftest(
    max_n: usize,
    seed: u64,
    unsafe_limits: bool,
    inject_fault: bool,
    output: &Output,
) -> Outcome {
    output.reject_dot()?;
    check_limit("max n", max_n, MAX_SIMPLEX, unsafe_limits)?;
    let report = selftest::run(&SelftestOptions {
        max_n,
        seed,
        fault: inject_fault.then_some(Fault::OpOpRule),
        ..Default::default()
    });
    match output.format {
        Format::Json => output.emit_json(&report)?,
        _ => output.emit(&report.table())?,
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Subdivide { target, output } => cmd_subdivide(target, output),
        Command::Decompose {
            oracle,
            word,
            roundtrip,
            output,
        } => cmd_decompose(oracle.as_ref(), word.as_deref(), *roundtrip, output),
        Command::CheckWe {
            word,
            max_n,
            unsafe_limits,
            output,
        } => cmd_check_we(word, *max_n, *unsafe_limits, output),
        Command::Homology { target, output } => cmd_homology(target, output),
        Command::Selftest {
            max_n,
            seed,
            unsafe_limits,
            inject_fault,
            output,
        } => cmd_selftest(*max_n, *seed, *unsafe_limits, *inject_fault, output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
