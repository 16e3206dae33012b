use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use circdepth::pointfile;
use circdepth_cli::commands::exit;
use circdepth_cli::{analyze, generate, render, verify, CheckName, Failure, Generator, RenderWhat};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "circdepth", version, about = "Enclosing-circle depth of planar point sets")]
struct Cli {
    /// Worker threads for pair-level work; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Convex,
    TwoColoredConvex,
    SevenRegion,
    Halving,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Points,
    Profile,
    Construction,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated point set.
    Generate {
        kind: Kind,
        /// Point count; red count for colored random sets; group size for seven-region.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Blue count, makes a random set two-colored.
        #[arg(long)]
        blue: Option<usize>,
        /// Coordinates of random sets lie in `[0, range)`.
        #[arg(long, default_value_t = 1_000_000)]
        range: u64,
        /// Recursion depth for seven-region.
        #[arg(long, default_value_t = 1)]
        levels: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// JSON report of extremal pairs and count tables.
    Analyze {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run identity and bound checks; exit 4 if any fails.
    Verify {
        input: PathBuf,
        /// Comma separated: all, triple-symmetry, census, census-bound, census-equality,
        /// minimax, triple-bounds, unbounded-identity, leq-kset, bichromatic,
        /// bichromatic-bound.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// SVG of the points, a bisector profile, or a construction.
    Render {
        input: PathBuf,
        what: What,
        /// Pair for `profile`.
        pair: Vec<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    let r = if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut buf).map(|_| ())
    } else {
        std::fs::read(path).map(|b| buf = b)
    };
    r.map_err(|e| Failure::new(exit::PARSE, format!("{}: {e}", path.display())))?;
    Ok(buf)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    let r = match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    r.map_err(|e| Failure::new(exit::PARSE, e.to_string()))
}

fn run(cmd: Command) -> Result<i32, Failure> {
    match cmd {
        Command::Generate { kind, n, seed, blue, range, levels, output } => {
            let g = match kind {
                Kind::Random => Generator::Random { n, blue, seed, range },
                Kind::Convex => Generator::Convex { n, seed },
                Kind::TwoColoredConvex => Generator::TwoColoredConvex { n },
                Kind::SevenRegion => Generator::SevenRegion { group: n, levels },
                Kind::Halving => Generator::Halving { n },
            };
            let out = generate(&g)?;
            write_output(&output, &pointfile::format(&out.file))?;
            for line in &out.summary {
                if output.is_some() {
                    println!("{line}");
                } else {
                    eprintln!("{line}");
                }
            }
            Ok(exit::OK)
        }
        Command::Analyze { input, output } => {
            let json = analyze(&read_input(&input)?)?;
            write_output(&output, &json)?;
            Ok(exit::OK)
        }
        Command::Verify { input, checks, output } => {
            let mut names = Vec::new();
            for c in &checks {
                names.extend(CheckName::parse(c.trim()).ok_or_else(|| {
                    Failure::new(exit::PARSE, format!("unknown check `{c}`"))
                })?);
            }
            let v = verify(&read_input(&input)?, &names)?;
            write_output(&output, &v.json)?;
            Ok(if v.pass { exit::OK } else { exit::CHECK })
        }
        Command::Render { input, what, pair, output } => {
            let what = match (what, pair.as_slice()) {
                (What::Points, []) => RenderWhat::Points,
                (What::Construction, []) => RenderWhat::Construction,
                (What::Profile, &[p, q]) => RenderWhat::Profile(p, q),
                (What::Profile, _) => {
                    return Err(Failure::new(exit::PARSE, "profile takes two point indices"))
                }
                _ => return Err(Failure::new(exit::PARSE, "only profile takes point indices")),
            };
            let svg = render(&read_input(&input)?, what)?;
            write_output(&output, &svg)?;
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let jobs = cli.jobs.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::PARSE as u8);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code as u8)
        }
    }
}
