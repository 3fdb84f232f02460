//! Batch command-line surface: replay the worked example, print generating
//! polynomials from any of the three routes, verify the bijection, stream
//! enumerations, and describe graphs.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sandpark::bijection::{phi, verify_theorem_bounded};
use sandpark::graph::{CliqueIndependentGraph, ComponentKind, Composition};
use sandpark::parking::{enumerate_pf_bounded, pf_polynomial_bounded};
use sandpark::sandpile::{self, Configuration};
use sandpark::sorted::{enumerate_sortrec_bounded, lift, sortrec_polynomial_bounded, u_word, w_word};
use sandpark::symfunc::{SymFuncOracle, DEFAULT_ORACLE_MAX_N, HARD_ORACLE_MAX_N};
use sandpark::toppling::run;
use sandpark::QtPolynomial;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sandpark", version, about = "Sandpile statistics on clique-independent graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Clique composition, comma-separated parts; "-" for empty.
    #[arg(long)]
    mu: String,
    /// Independent composition, comma-separated parts; "-" for empty.
    #[arg(long)]
    nu: String,
    /// Size guard for the combinatorial enumerations.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

impl PairArgs {
    fn parse_pair(&self) -> Result<(Composition, Composition), String> {
        let mu = Composition::parse(&self.mu).map_err(|e| e.to_string())?;
        let nu = Composition::parse(&self.nu).map_err(|e| e.to_string())?;
        Ok((mu, nu))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Sandpile,
    Parking,
    Oracle,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Sandpile => "sandpile",
            Side::Parking => "parking",
            Side::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateSide {
    Sandpile,
    Parking,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the 12-vertex worked instance and check every quantity.
    Example {
        /// Replace the stock configuration (comma-separated display word).
        #[arg(long)]
        config: Option<String>,
        /// Machine-readable assertion list.
        #[arg(long)]
        json: bool,
    },
    /// Print the generating polynomial of one side.
    Poly {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "sandpile")]
        side: Side,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Size guard for the symbolic oracle (hard cap 6).
        #[arg(long, default_value_t = DEFAULT_ORACLE_MAX_N)]
        oracle_max_n: usize,
    },
    /// Verify the statistic-preserving bijection for one pair.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        /// Additionally compare both polynomials against this source.
        #[arg(long, value_parser = ["oracle"])]
        against: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_MAX_N)]
        oracle_max_n: usize,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Stream one object per line.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        side: EnumerateSide,
    },
    /// Describe the graph of a pair: blocks, degrees, edge count.
    GraphInfo {
        #[command(flatten)]
        pair: PairArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Example { config, json } => cmd_example(config, json),
        Command::Poly { pair, side, format, oracle_max_n } => {
            cmd_poly(&pair, side, format, oracle_max_n)
        }
        Command::Verify { pair, against, oracle_max_n, json } => {
            cmd_verify(&pair, against.as_deref(), oracle_max_n, json)
        }
        Command::Enumerate { pair, side } => cmd_enumerate(&pair, side),
        Command::GraphInfo { pair } => cmd_graph_info(&pair),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

// ---------------------------------------------------------------------------
// example
// ---------------------------------------------------------------------------

struct Assertion {
    name: &'static str,
    expected: String,
    actual: String,
}

impl Assertion {
    fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn join<T: std::fmt::Display>(values: &[T]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// The worked instance: every intermediate quantity is recomputed and checked
/// against its published value.
fn cmd_example(config: Option<String>, as_json: bool) -> Result<ExitCode, String> {
    let g = CliqueIndependentGraph::from_parts(&[4, 3], &[3, 2]).map_err(|e| e.to_string())?;
    let k = match config {
        Some(text) => Configuration::parse(&text).map_err(|e| e.to_string())?,
        None => Configuration::from_display_word(&[3, 10, 11, 11, 8, 10, 11, 10, 4, 9, 7, 3]),
    };
    if k.len() != g.n() {
        return Err(format!("expected {} values, got {}", g.n(), k.len()));
    }

    let mut assertions: Vec<Assertion> = Vec::new();
    let mut record = |name: &'static str, expected: String, actual: String| {
        assertions.push(Assertion { name, expected, actual });
    };

    let expected_sigma = [10, 9, 7, 6, 5, 3, 2, 11, 8, 4, 1, 12];
    match run(&g, &k) {
        Ok(res) => {
            record("sigma", join(&expected_sigma), join(res.sigma()));
            record("rounds", join(&[1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 2]), join(res.rounds()));
            record("delay", "6".into(), res.delay().to_string());
            record("level", "35".into(), sandpile::level(&g, &k).to_string());

            match lift(&g, &k) {
                Ok((k_tilde, _)) => {
                    record(
                        "kappa_tilde",
                        join(&[3, 10, 11, 11, 8, 10, 11, 11, 4, 11, 8, 3]),
                        join(&k_tilde.display_word()),
                    );
                    record(
                        "u_word",
                        join(&[0, 1, 1, 3, 4, 5, 3, 6, 5, 2, 2, 3]),
                        join(&u_word(res.sigma(), &k_tilde)),
                    );
                    record(
                        "w_word",
                        join(&[1, 2, 3, 4, 5, 6, 7, 7, 6, 4, 3, 4]),
                        join(&w_word(res.sigma())),
                    );
                }
                Err(e) => record("kappa_tilde", "computable".into(), format!("error: {e}")),
            }

            match phi(&g, &k) {
                Ok(d) => {
                    record(
                        "phi_columns",
                        join(&[9, 4, 1, 8, 1, 1, 2, 4, 1, 1, 2, 9]),
                        join(d.columns()),
                    );
                    let (area_word, area) = d.area_data();
                    record(
                        "area",
                        format!("{}={}", join(&[0, 1, 2, 3, 4, 4, 5, 4, 5, 2, 2, 3]), 35),
                        format!("{}={}", join(&area_word), area),
                    );
                    record("parking_word", join(res.sigma()), join(&d.parking_word()));
                    record("pmaj", "6".into(), d.pmaj().to_string());
                }
                Err(e) => record("phi_columns", "computable".into(), format!("error: {e}")),
            }
        }
        Err(e) => record("sigma", join(&expected_sigma), format!("error: {e}")),
    }

    let all_passed = assertions.iter().all(Assertion::passed);
    if as_json {
        let items: Vec<_> = assertions
            .iter()
            .map(|a| {
                json!({
                    "name": a.name,
                    "pass": a.passed(),
                    "expected": a.expected,
                    "actual": a.actual,
                })
            })
            .collect();
        println!("{}", json!({ "pass": all_passed, "assertions": items }));
    } else {
        for a in &assertions {
            if a.passed() {
                println!("PASS {:<13} {}", a.name, a.actual);
            } else {
                println!("FAIL {:<13} expected {} got {}", a.name, a.expected, a.actual);
            }
        }
        println!("{}", if all_passed { "all checks passed" } else { "MISMATCH" });
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

// ---------------------------------------------------------------------------
// poly
// ---------------------------------------------------------------------------

fn polynomial_for_side(
    mu: &Composition,
    nu: &Composition,
    side: Side,
    max_n: usize,
    oracle_max_n: usize,
) -> Result<QtPolynomial, String> {
    match side {
        Side::Sandpile => sortrec_polynomial_bounded(mu, nu, max_n).map_err(|e| e.to_string()),
        Side::Parking => pf_polynomial_bounded(mu, nu, max_n).map_err(|e| e.to_string()),
        Side::Oracle => {
            if oracle_max_n > HARD_ORACLE_MAX_N {
                return Err(format!("oracle bound capped at {HARD_ORACLE_MAX_N}"));
            }
            let oracle = SymFuncOracle::new(oracle_max_n).map_err(|e| e.to_string())?;
            oracle.pair_nabla_e(mu, nu).map_err(|e| e.to_string())
        }
    }
}

fn render_polynomial(
    poly: &QtPolynomial,
    mu: &Composition,
    nu: &Composition,
    side: Side,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let terms: Vec<_> =
                poly.terms().map(|(q, t, c)| json!({"q": q, "t": t, "c": c})).collect();
            json!({
                "n": mu.size() + nu.size(),
                "mu": mu.parts(),
                "nu": nu.parts(),
                "side": side.name(),
                "terms": terms,
            })
            .to_string()
        }
        Format::Csv => {
            let mut out = String::from("q,t,c\n");
            for (q, t, c) in poly.terms() {
                out.push_str(&format!("{q},{t},{c}\n"));
            }
            out.pop();
            out
        }
        Format::Latex => format!("{poly:#}"),
    }
}

fn cmd_poly(
    pair: &PairArgs,
    side: Side,
    format: Format,
    oracle_max_n: usize,
) -> Result<ExitCode, String> {
    let (mu, nu) = pair.parse_pair()?;
    let poly = polynomial_for_side(&mu, &nu, side, pair.max_n, oracle_max_n)?;
    println!("{}", render_polynomial(&poly, &mu, &nu, side, format));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(
    pair: &PairArgs,
    against: Option<&str>,
    oracle_max_n: usize,
    as_json: bool,
) -> Result<ExitCode, String> {
    let (mu, nu) = pair.parse_pair()?;
    let report = verify_theorem_bounded(&mu, &nu, pair.max_n).map_err(|e| e.to_string())?;
    let mut ok = report.passed();
    let oracle_poly = if against == Some("oracle") {
        Some(polynomial_for_side(&mu, &nu, Side::Oracle, pair.max_n, oracle_max_n)?)
    } else {
        None
    };
    if let Some(poly) = &oracle_poly {
        if *poly != report.sandpile_polynomial {
            ok = false;
        }
    }
    if as_json {
        let term_list = |p: &QtPolynomial| -> Vec<_> {
            p.terms().map(|(q, t, c)| json!({"q": q, "t": t, "c": c})).collect()
        };
        println!(
            "{}",
            json!({
                "n": report.n,
                "mu": report.mu.parts(),
                "nu": report.nu.parts(),
                "sortrec_count": report.sortrec_count,
                "pf_count": report.pf_count,
                "sandpile_terms": term_list(&report.sandpile_polynomial),
                "parking_terms": term_list(&report.parking_polynomial),
                "oracle_terms": oracle_poly.as_ref().map(term_list),
                "counterexample": report.counterexample,
                "pass": ok,
            })
        );
    } else {
        print!("{}", report.render_text());
        if let Some(poly) = &oracle_poly {
            if *poly == report.sandpile_polynomial {
                println!("oracle comparison: PASS ({poly})");
            } else {
                println!(
                    "oracle comparison: FAIL oracle {} vs combinatorial {}",
                    poly, report.sandpile_polynomial
                );
            }
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

// ---------------------------------------------------------------------------
// enumerate, graph-info
// ---------------------------------------------------------------------------

fn cmd_enumerate(pair: &PairArgs, side: EnumerateSide) -> Result<ExitCode, String> {
    let (mu, nu) = pair.parse_pair()?;
    match side {
        EnumerateSide::Sandpile => {
            for k in enumerate_sortrec_bounded(&mu, &nu, pair.max_n).map_err(|e| e.to_string())? {
                println!("{k}");
            }
        }
        EnumerateSide::Parking => {
            for d in enumerate_pf_bounded(&mu, &nu, pair.max_n).map_err(|e| e.to_string())? {
                println!("{d}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph_info(pair: &PairArgs) -> Result<ExitCode, String> {
    let (mu, nu) = pair.parse_pair()?;
    let g = CliqueIndependentGraph::new(mu, nu).map_err(|e| e.to_string())?;
    println!("graph for mu = {}, nu = {}", g.mu(), g.nu());
    println!("non-sink vertices: {}", g.n());
    println!("sink: vertex 0, degree {}", g.n());
    for block in g.blocks() {
        let kind = match block.kind {
            ComponentKind::Clique => "clique",
            ComponentKind::Independent => "independent",
        };
        println!(
            "{kind} block {{{}..{}}}, degree {}",
            block.lo,
            block.hi,
            g.degree(block.lo).map_err(|e| e.to_string())?
        );
    }
    println!("non-sink edges: {}", g.non_sink_edge_count());
    Ok(ExitCode::SUCCESS)
}
