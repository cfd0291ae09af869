use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ipd_classes::expand;
use ipd_cli::verify::{run_suite, Suite};
use ipd_core::{BoundedAffinePermutation, PartialPermutation};
use ipd_dreams::{enumerate, TheoryMode};
use ipd_puzzles::{enumerate_puzzles, PuzzleBoundary};
use ipd_shifts::{matroid_of, monk_components, safe_shift_components};
use serde::de::DeserializeOwned;

#[derive(Parser)]
#[command(name = "pipes", version, about = "Interval positroid classes from pipe dreams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    #[value(name = "H")]
    H,
    #[value(name = "HT")]
    Ht,
    #[value(name = "K")]
    K,
    #[value(name = "KT")]
    Kt,
}

impl From<Mode> for TheoryMode {
    fn from(m: Mode) -> TheoryMode {
        match m {
            Mode::H => TheoryMode::H,
            Mode::Ht => TheoryMode::HT,
            Mode::K => TheoryMode::K,
            Mode::Kt => TheoryMode::KT,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Schubert expansion of the class of Π_f
    Expand {
        #[arg(long, value_name = "JSON")]
        perm: String,
        #[arg(long, value_enum, ignore_case = true)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Every pipe dream of f with λ, sign and weight
    Dreams {
        #[arg(long, value_name = "JSON")]
        perm: String,
        #[arg(long, value_enum, ignore_case = true)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "ascii")]
        render: Render,
    },
    /// Puzzles with the given sides
    Puzzles {
        #[arg(long)]
        nw: String,
        #[arg(long)]
        ne: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        equivariant: bool,
    },
    /// Sweep, components and intersections of the shift i -> j
    Shift {
        #[arg(long, value_name = "JSON")]
        perm: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Bases of the matroid of Π_f
    Matroid {
        #[arg(long, value_name = "JSON")]
        perm: String,
    },
    /// Monk components of a bounded juggling pattern at a row
    Monk {
        #[arg(long, value_name = "JSON")]
        pattern: String,
        #[arg(long)]
        row: i64,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

fn parse<T: DeserializeOwned>(flag: &str, s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(cmd: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match cmd {
        Command::Expand { perm, mode, format } => {
            let f: PartialPermutation = parse("perm", &perm)?;
            let e = expand(&f, mode.into());
            out = match format {
                Format::Json => json(&e),
                Format::Text => e.to_string(),
            };
            out.push('\n');
        }
        Command::Dreams { perm, mode, render } => {
            let f: PartialPermutation = parse("perm", &perm)?;
            let dreams = enumerate(&f, mode.into());
            let e = expand(&f, mode.into());
            match render {
                Render::Ascii => {
                    out.push_str(&format!("{} dreams\n", dreams.len()));
                    for (d, rec) in dreams.iter().zip(&e.records) {
                        out.push_str(&format!(
                            "\ndream {}: lambda={} sign={} weight={}\n{}",
                            rec.index,
                            rec.lambda,
                            rec.sign,
                            rec.weight,
                            d.render_ascii()
                        ));
                    }
                }
                Render::Json => {
                    let list: Vec<_> = dreams
                        .iter()
                        .zip(&e.records)
                        .map(|(d, rec)| {
                            serde_json::json!({
                                "index": rec.index,
                                "lambda": rec.lambda,
                                "sign": rec.sign,
                                "fusing": rec.fusing,
                                "weight": rec.weight,
                                "dream": d,
                            })
                        })
                        .collect();
                    out = json(&list);
                    out.push('\n');
                }
            }
        }
        Command::Puzzles { nw, ne, s, equivariant } => {
            let b = PuzzleBoundary::parse(&nw, &ne, &s).map_err(|e| Failure::Usage(e.to_string()))?;
            let all = enumerate_puzzles(&b, equivariant);
            let total: ipd_classes::YPolynomial = all.iter().map(|(_, w)| w.clone()).sum();
            out.push_str(&format!("{}\ncount {}\ntotal {}\n", b, all.len(), total));
            for (x, (z, w)) in all.iter().enumerate() {
                out.push_str(&format!("\npuzzle {x}: weight {w}\n{}", z.render_ascii()));
            }
        }
        Command::Shift { perm, i, j } => {
            let f: PartialPermutation = parse("perm", &perm)?;
            let pattern = BoundedAffinePermutation::from_partial(&f);
            let s = safe_shift_components(&pattern, i, j).map_err(|e| Failure::Usage(e.to_string()))?;
            out = json(&s);
            out.push('\n');
        }
        Command::Matroid { perm } => {
            let f: PartialPermutation = parse("perm", &perm)?;
            let m = matroid_of(&f);
            out.push_str(&format!("{} bases\n{m}\n", m.len()));
        }
        Command::Monk { pattern, row } => {
            let j: BoundedAffinePermutation = parse("pattern", &pattern)?;
            out = json(&monk_components(&j, row));
            out.push('\n');
        }
        Command::Verify { suite, max_n } => {
            let report = run_suite(suite, max_n);
            let name = suite.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            print!("suite {name} (n <= {max_n}): {report}");
            return if report.passed() { Ok(String::new()) } else { Err(Failure::Verification) };
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("PIPES_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // fails only if the pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}
