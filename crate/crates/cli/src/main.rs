//! Command-line front end for shifted standard and balanced tableaux.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shifted_balanced::balanced::{enumerate_bs_bruteforce, is_balanced, DEFAULT_BS_BRUTEFORCE_CAP};
use shifted_balanced::bijection::{bs_to_syt_trace, syt_to_bs_trace, Trace};
use shifted_balanced::hook::hook_length_formula_count;
use shifted_balanced::kraskiewicz::{kraskiewicz_insert, reverse_insert, InsertionPair};
use shifted_balanced::standard::{enumerate_syt, is_standard};
use shifted_balanced::tableau::tableau;
use shifted_balanced::trapezoid::TrapezoidContext;
use shifted_balanced::typeb::{
    enumerate_reduced_words, reflection_order, SignedPermutation, Word, DEFAULT_REDUCED_WORD_CAP,
};
use shifted_balanced::verify::verify_shape;
use shifted_balanced::{Error, ShiftedTableau, StrictPartition};

const DEFAULT_SYT_CAP: usize = 12;

#[derive(Parser)]
#[command(name = "shifted-balanced", version, about = "Standard and balanced shifted tableaux")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Overrides the enumeration cap of the command (boxes for tableaux,
    /// length for reduced words).
    #[arg(long, global = true, env = "SHIFTED_BALANCED_MAX")]
    max: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Syt,
    Bs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Balanced,
    Standard,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    SytToBs,
    BsToSyt,
}

#[derive(clap::Args)]
struct Trapezoid {
    /// Number of rows of the ambient trapezoid (must equal the number of parts).
    #[arg(long)]
    d: Option<usize>,
    /// Width parameter of the ambient trapezoid (default: the smallest that fits).
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of standard or balanced tableaux of a shape.
    Count {
        kind: Kind,
        shape: String,
        /// Count by enumeration instead of the hook-length formula.
        #[arg(long)]
        oracle: bool,
    },
    /// List all standard or balanced tableaux of a shape.
    Enum { kind: Kind, shape: String },
    /// Test whether a tableau (file, or `-` for stdin) is balanced or standard.
    Check { property: Property, input: String },
    /// Insert a reduced word; prints the insertion and recording tableaux.
    Insert {
        word: String,
        /// Rank n of B_n (default: the smallest rank containing the letters).
        #[arg(short = 'n', long)]
        rank: Option<usize>,
    },
    /// Undo the last insertion of a P/Q pair given as JSON (file or `-`).
    Reverse { input: String },
    /// All reduced words of a signed permutation, e.g. "-2 -1 4 -3 5".
    Redwords {
        #[arg(allow_hyphen_values = true)]
        window: String,
    },
    /// Reflection order of a reduced word.
    Ro {
        word: String,
        #[arg(short = 'n', long)]
        rank: Option<usize>,
    },
    /// Apply the bijection to a tableau given inline, as a file, or `-`.
    Bijection {
        direction: Direction,
        shape: String,
        tableau: String,
        #[command(flatten)]
        trapezoid: Trapezoid,
        /// Print every intermediate stage.
        #[arg(long)]
        trace: bool,
    },
    /// The word a^λ, the element w^λ and its insertion tableau.
    Wlambda {
        shape: String,
        #[command(flatten)]
        trapezoid: Trapezoid,
    },
    /// Check the bijection exhaustively on one shape.
    Verify {
        shape: String,
        #[command(flatten)]
        trapezoid: Trapezoid,
    },
    /// Run the (6,2,1) example inside Z(3,2) and compare with stored output.
    Demo,
}

/// Failure of a command: the message and the exit code.
struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_validation() { 1 } else { 2 },
            message: e.to_string(),
        }
    }
}

type Outcome = Result<String, Failure>;

/// A negative verdict: the output is still printed, but the exit code is 1.
struct Verdict {
    output: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict { output, ok }) => {
            print!("{output}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Verdict, Failure> {
    let json = cli.format == Format::Json;
    let cap = |default: usize| cli.max.unwrap_or(default);
    let ok = |output: String| Ok(Verdict { output, ok: true });
    match &cli.command {
        Command::Count { kind, shape, oracle } => ok(count(*kind, &parse_shape(shape)?, *oracle, cap, json)?),
        Command::Enum { kind, shape } => ok(enumerate(*kind, &parse_shape(shape)?, cap, json)?),
        Command::Check { property, input } => check(*property, input, json),
        Command::Insert { word, rank } => {
            let w = parse_word(word, *rank)?;
            let pair = kraskiewicz_insert(&w).map_err(|e| e.at("insertion"))?;
            ok(if json { line(pair.to_json()) } else { pair.to_text() })
        }
        Command::Reverse { input } => ok(reverse(input, json)?),
        Command::Redwords { window } => ok(redwords(window, cap(DEFAULT_REDUCED_WORD_CAP), json)?),
        Command::Ro { word, rank } => {
            let w = parse_word(word, *rank)?;
            let ro = reflection_order(&w).map_err(|e| e.at("reflection_order"))?;
            ok(if json {
                line(json!(ro.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>()).to_string())
            } else {
                line(ro.to_string())
            })
        }
        Command::Bijection {
            direction,
            shape,
            tableau,
            trapezoid,
            trace,
        } => {
            let ctx = context(&parse_shape(shape)?, trapezoid)?;
            let t = read_tableau(tableau)?;
            let result = match direction {
                Direction::SytToBs => syt_to_bs_trace(&t, &ctx)?,
                Direction::BsToSyt => bs_to_syt_trace(&t, &ctx)?,
            };
            let image = match direction {
                Direction::SytToBs => &result.bs,
                Direction::BsToSyt => &result.syt,
            };
            ok(match (json, trace) {
                (true, true) => line(serde_json::to_string(&result).expect("trace serializes")),
                (true, false) => line(image.to_json()),
                (false, true) => result.to_text(),
                (false, false) => image.to_text(),
            })
        }
        Command::Wlambda { shape, trapezoid } => {
            let summary = context(&parse_shape(shape)?, trapezoid)?.summary();
            ok(if json {
                line(serde_json::to_string(&summary).expect("summary serializes"))
            } else {
                let p = summary
                    .p_lambda
                    .iter()
                    .map(|row| format!("{row:?}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                format!(
                    "d: {}\nr: {}\nlambda: {}\na_lambda: {}\nw_lambda: {}\np_lambda: {p}\n",
                    summary.d,
                    summary.r,
                    join(&summary.lambda),
                    summary
                        .a_lambda
                        .iter()
                        .map(|a| a.to_string())
                        .collect::<Vec<_>>()
                        .join(""),
                    join(&summary.w_lambda),
                )
            })
        }
        Command::Verify { shape, trapezoid } => {
            let lambda = parse_shape(shape)?;
            require_cap("shape size", lambda.size(), cap(DEFAULT_SYT_CAP))?;
            let ctx = context(&lambda, trapezoid)?;
            let report = verify_shape(&ctx, DEFAULT_BS_BRUTEFORCE_CAP)?;
            let output = if json {
                line(serde_json::to_string(&report).expect("report serializes"))
            } else {
                let mut out = line(report.summary());
                for f in &report.failures {
                    out.push_str(&format!("  {f}\n"));
                }
                out
            };
            Ok(Verdict {
                output,
                ok: report.passed(),
            })
        }
        Command::Demo => Ok(demo()?),
    }
}

fn line(s: String) -> String {
    s + "\n"
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_shape(s: &str) -> Result<StrictPartition, Failure> {
    s.parse::<StrictPartition>().map_err(|e| usage(e.at("parse shape")))
}

fn parse_word(s: &str, rank: Option<usize>) -> Result<Word, Failure> {
    Word::parse(s, rank).map_err(|e| usage(e.at("parse word")))
}

/// Malformed input is a usage error regardless of the underlying variant.
fn usage(e: Error) -> Failure {
    Failure {
        message: e.to_string(),
        code: 2,
    }
}

fn require_cap(what: &'static str, size: usize, cap: usize) -> Result<(), Failure> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap }.into())
    } else {
        Ok(())
    }
}

fn context(lambda: &StrictPartition, t: &Trapezoid) -> Result<TrapezoidContext, Failure> {
    TrapezoidContext::with_overrides(lambda, t.d, t.r).map_err(|e| Failure::from(e.at("trapezoid")))
}

/// Reads `-` from stdin, an existing path from disk, and otherwise treats
/// the argument itself as the content.
fn read_input(arg: &str, inline_ok: bool) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure {
            message: format!("read stdin: {e}"),
            code: 2,
        })?;
        Ok(s)
    } else if Path::new(arg).is_file() || !inline_ok {
        std::fs::read_to_string(arg).map_err(|e| Failure {
            message: format!("read {arg}: {e}"),
            code: 2,
        })
    } else {
        Ok(arg.to_string())
    }
}

fn read_tableau(arg: &str) -> Result<ShiftedTableau, Failure> {
    let content = read_input(arg, true)?;
    ShiftedTableau::parse(&content).map_err(|e| usage(e.at("parse tableau")))
}

fn count(kind: Kind, lambda: &StrictPartition, oracle: bool, cap: impl Fn(usize) -> usize, json: bool) -> Outcome {
    let (value, method) = match (kind, oracle) {
        (_, false) => (hook_length_formula_count(lambda).to_string(), "hook-length formula"),
        (Kind::Syt, true) => {
            require_cap("shape size", lambda.size(), cap(DEFAULT_SYT_CAP))?;
            (enumerate_syt(lambda).count().to_string(), "enumeration")
        }
        (Kind::Bs, true) => {
            let n = enumerate_bs_bruteforce(lambda, cap(DEFAULT_BS_BRUTEFORCE_CAP))?.len();
            (n.to_string(), "brute force")
        }
    };
    Ok(if json {
        let number: Value = serde_json::from_str(&value).unwrap_or(Value::String(value));
        let kind = match kind {
            Kind::Syt => "syt",
            Kind::Bs => "bs",
        };
        line(json!({"kind": kind, "shape": lambda.parts(), "count": number, "method": method}).to_string())
    } else {
        line(value)
    })
}

fn enumerate(kind: Kind, lambda: &StrictPartition, cap: impl Fn(usize) -> usize, json: bool) -> Outcome {
    let tableaux: Vec<ShiftedTableau> = match kind {
        Kind::Syt => {
            require_cap("shape size", lambda.size(), cap(DEFAULT_SYT_CAP))?;
            enumerate_syt(lambda).collect()
        }
        Kind::Bs => enumerate_bs_bruteforce(lambda, cap(DEFAULT_BS_BRUTEFORCE_CAP))?,
    };
    Ok(if json {
        tableaux.iter().map(|t| line(t.to_json())).collect()
    } else {
        tableaux.iter().map(|t| t.to_text()).collect::<Vec<_>>().join("\n")
    })
}

fn check(property: Property, input: &str, json: bool) -> Result<Verdict, Failure> {
    let t = ShiftedTableau::parse(&read_input(input, false)?).map_err(|e| usage(e.at("parse tableau")))?;
    t.require_bijective().map_err(|e| usage(e.at("input")))?;
    let (name, holds) = match property {
        Property::Balanced => ("balanced", is_balanced(&t)),
        Property::Standard => ("standard", is_standard(&t)),
    };
    let output = if json {
        line(json!({"property": name, "holds": holds}).to_string())
    } else if holds {
        format!("{name}\n")
    } else {
        format!("not {name}\n")
    };
    Ok(Verdict { output, ok: holds })
}

fn reverse(input: &str, json: bool) -> Outcome {
    let pair = InsertionPair::from_json(&read_input(input, false)?).map_err(|e| usage(e.at("parse pair")))?;
    let (shrunk, letter) = reverse_insert(&pair).map_err(|e| e.at("reverse_insertion"))?;
    Ok(if json {
        let shrunk: Value = serde_json::from_str(&shrunk.to_json()).expect("pair JSON is valid");
        line(json!({"letter": letter, "pair": shrunk}).to_string())
    } else {
        format!("letter: {letter}\n{}", shrunk.to_text())
    })
}

fn redwords(window: &str, cap: usize, json: bool) -> Outcome {
    let w: SignedPermutation = window.parse().map_err(|e: Error| usage(e.at("parse permutation")))?;
    let words: Vec<Word> = enumerate_reduced_words(&w, cap)?.collect();
    Ok(if json {
        line(json!(words.iter().map(|a| a.letters().to_vec()).collect::<Vec<_>>()).to_string())
    } else {
        words.iter().map(|a| line(a.to_string())).collect()
    })
}

/// Expected text trace of the demo, from the balanced tableau
/// `[[6,3,4,1,5,9],[7,8],[2]]` of shape (6,2,1) inside Z(3,2).
const DEMO_GOLDEN: &str = include_str!("demo_golden.txt");

fn demo() -> Result<Verdict, Failure> {
    let lambda = StrictPartition::new(vec![6, 2, 1])?;
    let ctx = TrapezoidContext::new(&lambda, 3, 2)?;
    let b = tableau(&[&[6, 3, 4, 1, 5, 9], &[7, 8], &[2]]);
    let trace: Trace = bs_to_syt_trace(&b, &ctx)?;
    let back = syt_to_bs_trace(&trace.syt, &ctx)?;
    let text = trace.to_text();
    let mut out = text.clone();
    let mut ok = true;
    if back != trace {
        ok = false;
        out.push_str("mismatch: the inverse direction produces a different trace\n");
    }
    for (k, (got, want)) in text.lines().zip(DEMO_GOLDEN.lines()).enumerate() {
        if got != want {
            ok = false;
            out.push_str(&format!("mismatch on line {}: got {got:?}, expected {want:?}\n", k + 1));
        }
    }
    if text.lines().count() != DEMO_GOLDEN.lines().count() {
        ok = false;
        out.push_str("mismatch: trace and stored output differ in length\n");
    }
    out.push_str(if ok { "demo: PASS\n" } else { "demo: FAIL\n" });
    Ok(Verdict { output: out, ok })
}
