//! `moebius`: classify left-right pairs of SL₂(ℕ₀) transformations,
//! inspect slices, navigate the forest, verify the classifier against its
//! geometric oracle, and render slice geodesics as SVG.
//!
//! Exit codes are a stable contract: 0 success (and "is a pair"),
//! 1 non-pair or failed verification, 2 input error, 3 step-guard
//! exhaustion.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use moebius_forest::{
    disjointness_oracle, enumerate_sl2n, is_left_right_pair, Error, ExtendedRational, ForestConfig,
    Matrix, Mode, PathWord, Vertex, DEFAULT_MAX_STEPS,
};
use serde_json::json;

use render::{render_svg, RenderSpec};

/// Environment override for the root-search step guard.
const MAX_STEPS_ENV: &str = "MOEBIUS_MAX_STEPS";

const EXIT_NON_PAIR: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "moebius",
    version,
    about = "Left-right pairs of SL2(N0) Moebius transformations and the forests they generate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Interior,
    Boundary,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Interior => Mode::Interior,
            ModeArg::Boundary => Mode::Boundary,
        }
    }
}

#[derive(clap::Args)]
struct PairArgs {
    /// Left generator, "a b c d"
    #[arg(long)]
    left: String,
    /// Right generator, "a b c d"
    #[arg(long)]
    right: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two matrices form a left-right pair
    CheckPair {
        /// First matrix, "a b c d"
        a: String,
        /// Second matrix, "a b c d"
        b: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Print the slice of a single matrix
    Slice {
        /// Matrix, "a b c d"
        matrix: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Walk parent edges from a vertex up to its root
    Root {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Interior)]
        mode: ModeArg,
        /// Step guard (default 2^20; MOEBIUS_MAX_STEPS overrides)
        #[arg(long)]
        max_steps: Option<usize>,
        /// Vertex: "p/q+r/si" (interior) or "p/q" (boundary)
        vertex: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Apply a word to a vertex, innermost (last) letter first
    Descend {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Interior)]
        mode: ModeArg,
        /// Start vertex
        vertex: String,
        /// Word over {L, R}, outermost generator first (may be empty)
        word: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Level-order enumeration of the subtree below a vertex
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Interior)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Subtree root vertex
        root: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Compare the pair predicate against the geometric oracle over all
    /// ordered pairs of enumerated matrices
    Verify {
        #[arg(long)]
        max_entry: u64,
        #[arg(long)]
        pretty: bool,
    },
    /// Render the slice geodesics of all words up to a depth as SVG
    Render {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Window width as a rational
        #[arg(long, default_value = "4/1")]
        x_max: String,
        /// Window height as a rational
        #[arg(long, default_value = "2/1")]
        y_max: String,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::StepLimitExceeded(_) => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn parse_matrix(s: &str) -> Result<Matrix, Failure> {
    s.parse::<Matrix>().map_err(Failure::from)
}

fn parse_config(pair: &PairArgs, mode: Mode) -> Result<ForestConfig, Failure> {
    let left = parse_matrix(&pair.left)?;
    let right = parse_matrix(&pair.right)?;
    ForestConfig::new(left, right, mode).map_err(Failure::from)
}

fn resolve_max_steps(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_STEPS_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map_err(|_| Failure::input(format!("invalid {MAX_STEPS_ENV} value {raw:?}"))),
        Err(_) => Ok(DEFAULT_MAX_STEPS),
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::CheckPair { a, b, pretty } => cmd_check_pair(&a, &b, pretty),
        Command::Slice { matrix, pretty } => cmd_slice(&matrix, pretty),
        Command::Root {
            pair,
            mode,
            max_steps,
            vertex,
            pretty,
        } => cmd_root(&pair, mode.into(), max_steps, &vertex, pretty),
        Command::Descend {
            pair,
            mode,
            vertex,
            word,
            pretty,
        } => cmd_descend(&pair, mode.into(), &vertex, &word, pretty),
        Command::Enumerate {
            pair,
            mode,
            depth,
            root,
            pretty,
        } => cmd_enumerate(&pair, mode.into(), depth, &root, pretty),
        Command::Verify { max_entry, pretty } => cmd_verify(max_entry, pretty),
        Command::Render {
            pair,
            depth,
            out,
            x_max,
            y_max,
        } => cmd_render(&pair, depth, out.as_deref(), &x_max, &y_max),
    }
}

fn cmd_check_pair(a: &str, b: &str, pretty: bool) -> Result<u8, Failure> {
    let a = parse_matrix(a)?;
    let b = parse_matrix(b)?;
    let is_pair = is_left_right_pair(&a, &b);
    let verdict = disjointness_oracle(&a, &b);
    debug_assert_eq!(is_pair, verdict.is_pair);
    let witness = verdict.witness.map(|w| w.to_string());
    if pretty {
        println!("pair: {is_pair}");
        println!("left slice:  {}", a.slice());
        println!("right slice: {}", b.slice());
        if let Some(w) = &witness {
            println!("witness in both slices: {w}");
        }
    } else {
        println!(
            "{}",
            json!({
                "pair": is_pair,
                "left_slice": a.slice().to_string(),
                "right_slice": b.slice().to_string(),
                "witness": witness,
            })
        );
    }
    Ok(if is_pair { 0 } else { EXIT_NON_PAIR })
}

fn cmd_slice(matrix: &str, pretty: bool) -> Result<u8, Failure> {
    let m = parse_matrix(matrix)?;
    let slice = m.slice();
    if pretty {
        println!("slice: {slice}");
        println!("diam:  {}", slice.diam());
    } else {
        println!(
            "{}",
            json!({
                "matrix": m.to_string(),
                "slice": slice.to_string(),
                "lo": slice.lo().to_string(),
                "hi": slice.hi().to_string(),
                "diam": slice.diam().to_string(),
            })
        );
    }
    Ok(0)
}

fn cmd_root(
    pair: &PairArgs,
    mode: Mode,
    max_steps: Option<usize>,
    vertex: &str,
    pretty: bool,
) -> Result<u8, Failure> {
    let cfg = parse_config(pair, mode)?;
    let v = Vertex::parse(vertex, mode)?;
    let max_steps = resolve_max_steps(max_steps)?;
    let result = cfg.find_root(&v, max_steps)?;
    if pretty {
        println!("root:  {}", result.root);
        println!("word:  {}", result.word);
        println!("steps: {}", result.steps);
    } else {
        println!(
            "{}",
            json!({
                "root": result.root.to_string(),
                "word": result.word.to_string(),
                "steps": result.steps,
            })
        );
    }
    Ok(0)
}

fn cmd_descend(
    pair: &PairArgs,
    mode: Mode,
    vertex: &str,
    word: &str,
    pretty: bool,
) -> Result<u8, Failure> {
    let cfg = parse_config(pair, mode)?;
    let v = Vertex::parse(vertex, mode)?;
    let word: PathWord = word.parse()?;
    let target = cfg.descend(&v, &word)?;
    if pretty {
        println!("vertex: {target}");
    } else {
        println!("{}", json!({ "vertex": target.to_string() }));
    }
    Ok(0)
}

fn cmd_enumerate(
    pair: &PairArgs,
    mode: Mode,
    depth: u32,
    root: &str,
    pretty: bool,
) -> Result<u8, Failure> {
    let cfg = parse_config(pair, mode)?;
    let root = Vertex::parse(root, mode)?;
    for (word, vertex) in cfg.enumerate(&root, depth)? {
        if pretty {
            println!("{:<12} {}", word.to_string(), vertex);
        } else {
            println!(
                "{}",
                json!({ "word": word.to_string(), "vertex": vertex.to_string() })
            );
        }
    }
    Ok(0)
}

fn cmd_verify(max_entry: u64, pretty: bool) -> Result<u8, Failure> {
    let pool = enumerate_sl2n(max_entry);
    let mut pairs_found = 0usize;
    let mut mismatches = 0usize;
    for a in &pool {
        for b in &pool {
            let predicate = is_left_right_pair(a, b);
            let verdict = disjointness_oracle(a, b);
            if predicate {
                pairs_found += 1;
            }
            if predicate != verdict.is_pair {
                mismatches += 1;
                println!(
                    "{}",
                    json!({
                        "A": a.to_string(),
                        "B": b.to_string(),
                        "predicate": predicate,
                        "oracle": verdict.is_pair,
                        "witness": verdict.witness.map(|w| w.to_string()),
                    })
                );
            }
        }
    }
    let matrices = pool.len();
    let pairs_checked = matrices * matrices;
    if pretty {
        println!("matrices:     {matrices}");
        println!("pairs checked: {pairs_checked}");
        println!("pairs found:  {pairs_found}");
        println!("mismatches:   {mismatches}");
    } else {
        println!(
            "{}",
            json!({
                "matrices": matrices,
                "pairs_checked": pairs_checked,
                "pairs_found": pairs_found,
                "mismatches": mismatches,
            })
        );
    }
    Ok(if mismatches == 0 { 0 } else { EXIT_NON_PAIR })
}

fn cmd_render(
    pair: &PairArgs,
    depth: u32,
    out: Option<&std::path::Path>,
    x_max: &str,
    y_max: &str,
) -> Result<u8, Failure> {
    // render has no mode of its own; interior stands in for validation
    let cfg = parse_config(pair, Mode::Interior)?;
    let x_max: ExtendedRational = x_max.parse()?;
    let y_max: ExtendedRational = y_max.parse()?;
    let spec = RenderSpec::new(depth, x_max, y_max)?;
    let svg = render_svg(cfg.left(), cfg.right(), &spec);
    match out {
        Some(path) => std::fs::write(path, svg)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{svg}"),
    }
    Ok(0)
}
