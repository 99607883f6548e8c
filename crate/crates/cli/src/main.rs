//! `mdcolor`: batch front end for the mdcolor library.
//!
//! Exit codes: 0 on success, 1 when a domain precondition fails, 2 on
//! malformed input, unreadable files or bad usage.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mdcolor::constructions::Family;
use mdcolor::experiments::md1_fraction;
use mdcolor::graph::{complement, io};
use mdcolor::nordhaus::{ng_pair, sampled_search, scan_order, NgRecord, Target};
use mdcolor::solver::{
    brute_force_oracle, md1_certificate, md_decide_with, md_exact_with, MdResult, SearchOptions,
    DEFAULT_ORACLE_CAP,
};
use mdcolor::{verify_md, EdgeColoring, Error, Graph};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "mdcolor",
    version,
    about = "Monochromatic disconnection colorings of graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Run searches sequentially so witnesses are stable across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Largest edge count the brute-force oracle accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Exact md with a witness coloring and per-block report.
    Md { graph: PathBuf },
    /// Check whether a coloring is an MD-coloring.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Search for an MD-coloring with at least K colors.
    Decide {
        graph: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Closure certificate for md = 1, or "none".
    Certify1 { graph: PathBuf },
    /// Exhaustive md over all edge partitions (small graphs only).
    Oracle { graph: PathBuf },
    /// Build a family graph and an extremal coloring, written to files.
    Construct {
        /// Family and parameters, e.g. `cycle 5` or `join complete 1 path 4`.
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        #[arg(long, default_value = "graph.txt")]
        graph: PathBuf,
        #[arg(long, default_value = "coloring.txt")]
        coloring: PathBuf,
    },
    /// Build a family graph and print it as an edge list.
    Generate {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the complement as an edge list.
    Complement {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// md of a graph and of its complement.
    Ng { graph: PathBuf },
    /// Extremes of md sums and products over all graphs of order n (4..=6).
    Scan {
        #[arg(short)]
        n: usize,
        /// Visit one graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Random search for a complement pair hitting a target sum or product.
    Search {
        #[arg(short)]
        n: usize,
        /// `sum=V` or `product=V`.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// G(n, p) trials: three-common-neighbors property vs closure certificates.
    Random {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        p: f64,
        #[arg(short)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write one CSV row per trial to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 1 },
            msg: e.to_string(),
        }
    }
}

fn input_failure(msg: String) -> Failure {
    Failure { code: 2, msg }
}

type Outcome = Result<String, Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    io::read_graph(path).map_err(|e| with_path(path, e))
}

fn with_path(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.msg = format!("{}: {}", path.display(), f.msg);
    f
}

fn parse_family(tokens: &[String]) -> Result<Family, Failure> {
    let tokens: Vec<&str> = tokens.iter().map(String::as_str).collect();
    Family::parse(&tokens).map_err(|e| input_failure(format!("invalid family: {e}")))
}

fn colors_text(c: &EdgeColoring) -> String {
    c.to_text().trim_end().to_string()
}

fn md_report(r: &MdResult, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Plain => {
            let mut s = format!("md {}\nwitness {}\n", r.value, colors_text(&r.witness));
            for (i, b) in r.blocks.iter().enumerate() {
                let method = serde_json::to_value(b.method).unwrap();
                let _ = writeln!(
                    s,
                    "block {i}: {} edges, {}, md {}",
                    b.edges.len(),
                    method.as_str().unwrap(),
                    b.value
                );
            }
            for (value, why) in &r.bounds {
                let _ = writeln!(s, "upper bound {value} ({why})");
            }
            s.trim_end().to_string()
        }
    }
}

fn ng_report(r: &NgRecord, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Plain => format!(
            "n {}\nmd {}\nmd complement {}\nsum {}\nproduct {}",
            r.n, r.md, r.md_complement, r.sum, r.product
        ),
    }
}

fn write_or_return(output: Option<&Path>, text: String, format: Format) -> Outcome {
    match output {
        None => Ok(text.trim_end().to_string()),
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| with_path(path, e.into()))?;
            Ok(match format {
                Format::Json => json!({ "written": path }).to_string(),
                Format::Plain => format!("wrote {}", path.display()),
            })
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    let opts = SearchOptions {
        parallel: !cli.deterministic,
        ..SearchOptions::default()
    };
    match cli.command {
        Command::Md { graph } => {
            let g = read_graph(&graph)?;
            Ok(md_report(&md_exact_with(&g, opts), format))
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(&graph)?;
            let c = EdgeColoring::read(&coloring).map_err(|e| with_path(&coloring, e))?;
            let v = verify_md(&g, &c)?;
            Ok(match format {
                Format::Json => serde_json::to_string(&v).unwrap(),
                Format::Plain => {
                    let mut s = format!("is_md {}", v.is_md);
                    for (a, b) in &v.uncovered_pairs {
                        let _ = write!(s, "\nuncovered {a} {b}");
                    }
                    s
                }
            })
        }
        Command::Decide { graph, k } => {
            let g = read_graph(&graph)?;
            let w = md_decide_with(&g, k, opts)?;
            Ok(match format {
                Format::Json => json!({
                    "k": k,
                    "found": w.is_some(),
                    "witness": w.as_ref().map(|c| c.colors()),
                })
                .to_string(),
                Format::Plain => match &w {
                    Some(c) => format!(
                        "found {} colors\nwitness {}",
                        c.palette_size(),
                        colors_text(c)
                    ),
                    None => format!("no MD-coloring with at least {k} colors"),
                },
            })
        }
        Command::Certify1 { graph } => {
            let g = read_graph(&graph)?;
            let cert = md1_certificate(&g)?;
            Ok(match (format, &cert) {
                (Format::Json, Some(c)) => serde_json::to_string(c).unwrap(),
                (Format::Json, None) => json!("none").to_string(),
                (Format::Plain, None) => "none".into(),
                (Format::Plain, Some(c)) => format!(
                    "certified md = 1\ngadgets {}\nmerges {}",
                    c.gadgets.len(),
                    c.merge_trace.len()
                ),
            })
        }
        Command::Oracle { graph } => {
            let g = read_graph(&graph)?;
            Ok(md_report(&brute_force_oracle(&g, cli.oracle_cap)?, format))
        }
        Command::Construct {
            family,
            graph,
            coloring,
        } => {
            let (g, c) = parse_family(&family)?.build_colored()?;
            io::write_graph(&graph, &g).map_err(|e| with_path(&graph, e))?;
            c.write(&coloring).map_err(|e| with_path(&coloring, e))?;
            Ok(match format {
                Format::Json => json!({
                    "family": family.join(" "),
                    "n": g.n(),
                    "m": g.m(),
                    "palette": c.palette_size(),
                    "coloring": c.colors(),
                    "graph_file": graph,
                    "coloring_file": coloring,
                })
                .to_string(),
                Format::Plain => format!(
                    "n {} m {}\npalette {}\ncoloring {}\nwrote {} and {}",
                    g.n(),
                    g.m(),
                    c.palette_size(),
                    colors_text(&c),
                    graph.display(),
                    coloring.display()
                ),
            })
        }
        Command::Generate { family, output } => {
            let g = parse_family(&family)?.build()?;
            write_or_return(output.as_deref(), io::to_edge_list(&g), format)
        }
        Command::Complement { graph, output } => {
            let g = read_graph(&graph)?;
            write_or_return(output.as_deref(), io::to_edge_list(&complement(&g)), format)
        }
        Command::Ng { graph } => {
            let g = read_graph(&graph)?;
            Ok(ng_report(&ng_pair(&g)?, format))
        }
        Command::Scan { n, dedup } => {
            let r = scan_order(n, dedup)?;
            Ok(match format {
                Format::Json => r.to_json(),
                Format::Plain => {
                    let mut s = format!(
                        "n {} ({} masks, {} qualifying{})\n",
                        r.n,
                        r.scanned,
                        r.qualified,
                        if r.dedup { " classes" } else { "" }
                    );
                    for (name, ex) in [
                        ("min sum", &r.min_sum),
                        ("max sum", &r.max_sum),
                        ("min product", &r.min_product),
                        ("max product", &r.max_product),
                    ] {
                        let _ = writeln!(
                            s,
                            "{name} {} (md {} + {}) witness {:?}",
                            ex.value,
                            ex.md,
                            ex.md_complement,
                            ex.witness.edges()
                        );
                    }
                    s.trim_end().to_string()
                }
            })
        }
        Command::Search {
            n,
            target,
            budget,
            seed,
        } => {
            let target: Target = target
                .parse()
                .map_err(|e: Error| input_failure(format!("--target: {e}")))?;
            let out = sampled_search(n, target, budget, seed)?;
            Ok(match format {
                Format::Json => serde_json::to_string(&out).unwrap(),
                Format::Plain => match &out.witness {
                    Some(w) => format!(
                        "found {target} after {} attempts\n{}\nedges {:?}",
                        out.attempts,
                        ng_report(w, Format::Plain),
                        w.graph.edges()
                    ),
                    None => format!("no pair with {target} in {} attempts", out.attempts),
                },
            })
        }
        Command::Random { n, p, t, seed, csv } => {
            let r = md1_fraction(n, p, t, seed)?;
            if let Some(path) = &csv {
                std::fs::write(path, r.to_csv()).map_err(|e| with_path(path, e.into()))?;
            }
            Ok(match format {
                Format::Json => r.to_json(),
                Format::Plain => format!(
                    "trials {}\nconnected {}\nproperty {} ({:.3})\ncertified {} ({:.3})",
                    r.trials,
                    r.count_connected,
                    r.count_property,
                    r.fraction_property,
                    r.count_certified,
                    r.fraction_certified
                ),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
