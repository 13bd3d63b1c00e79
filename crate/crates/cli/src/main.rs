//! `simplex-forge`: exact verification of simplicial-complex identities.
//!
//! Exit codes: 0 when every check passes, 1 when any check fails or is
//! skipped as oversize, 2 on usage or parse errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use simplex_forge::curvature::{
    index_expectation, levitt_curvature, ph_index, ExpectationMode, VertexFunction,
};
use simplex_forge::hodge::{betti, euler_poincare_check};
use simplex_forge::SimplicialComplex;
use simplex_forge_cli::report::{rational_string, run_checks, CheckOptions};
use simplex_forge_cli::{experiment, source, CliError};

#[derive(Parser)]
#[command(name = "simplex-forge", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Read the complex from a file (facet text or JSON, auto-detected).
    #[arg(long)]
    input: Option<PathBuf>,

    /// Build a named complex, e.g. `--generate cross-polytope 3`.
    #[arg(long, num_args = 1..=2, value_name = "NAME [PARAM]")]
    generate: Option<Vec<String>>,

    /// Whitney complex of a seeded G(n, m) random graph: `--random <n> <m>`.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    random: Option<Vec<u64>>,

    /// Seed for --random and for randomized per-vertex data.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl SourceArgs {
    fn resolve(&self) -> simplex_forge_cli::Result<(SimplicialComplex, String)> {
        let random = match &self.random {
            Some(v) => Some((
                u32::try_from(v[0]).map_err(|_| CliError::Usage("n too large".into()))?,
                v[1],
            )),
            None => None,
        };
        source::resolve(
            self.input.as_deref(),
            self.generate.as_deref(),
            random,
            self.seed,
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite on one complex.
    Check {
        #[command(flatten)]
        source: SourceArgs,

        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,

        /// Skip dense matrix work above this element count.
        #[arg(long, default_value_t = 400)]
        max_elements: usize,

        /// Check the Hodge super trace up to this power.
        #[arg(long, default_value_t = 5)]
        mmax: u32,
    },

    /// Sample random complexes and record det(g) and nullity(s) as CSV.
    ExperimentNullity {
        /// Number of complexes to sample.
        #[arg(long, default_value_t = 10)]
        count: u64,

        /// Vertex count of each random graph.
        #[arg(long, default_value_t = 20)]
        vertices: u32,

        /// Edge count of each random graph.
        #[arg(long, default_value_t = 100)]
        edges: u64,

        /// Base seed; row i uses seed + i.
        #[arg(long, default_value_t = 1)]
        seed: u64,

        /// Write the CSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,

        /// Record NA instead of computing matrices above this size.
        #[arg(long, default_value_t = 400)]
        max_elements: usize,
    },

    /// Per-vertex Levitt curvature with the Gauss-Bonnet verdict.
    Curvature {
        #[command(flatten)]
        source: SourceArgs,

        /// Also estimate curvature as an index expectation with this many
        /// random orderings (small complexes are averaged exhaustively).
        #[arg(long)]
        trials: Option<u64>,
    },

    /// Betti numbers with the Euler-Poincaré verdict.
    Betti {
        #[command(flatten)]
        source: SourceArgs,
    },

    /// Poincaré-Hopf indices of a vertex function.
    Ph {
        #[command(flatten)]
        source: SourceArgs,

        /// Comma-separated integer values for the vertices in ascending
        /// label order, e.g. `--values 1,2,3,4`. Defaults to a random
        /// ordering from --seed.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<i64>>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) | CliError::Parse { .. } | CliError::Document(_) => {
                    ExitCode::from(2)
                }
                CliError::Core(inner) => match inner {
                    simplex_forge::Error::NotLocallyInjective(_, _)
                    | simplex_forge::Error::InvalidParameter(_)
                    | simplex_forge::Error::EdgeCountOutOfRange { .. }
                    | simplex_forge::Error::MissingVertexValue(_) => ExitCode::from(2),
                    _ => ExitCode::from(1),
                },
                CliError::Io(_) => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(cli: Cli) -> simplex_forge_cli::Result<ExitCode> {
    match cli.command {
        Command::Check {
            source,
            json,
            max_elements,
            mmax,
        } => {
            let (g, desc) = source.resolve()?;
            let opts = CheckOptions {
                max_elements,
                mckean_singer_power: mmax,
            };
            let report = run_checks(&g, &desc, &opts)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .expect("report serialization cannot fail")
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::ExperimentNullity {
            count,
            vertices,
            edges,
            seed,
            output,
            max_elements,
        } => {
            let params = experiment::ExperimentParams {
                count,
                vertices,
                edges,
                base_seed: seed,
                max_elements,
            };
            let outcome = experiment::run(&params)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, &outcome.csv)?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{}", outcome.csv),
            }
            eprint!("{}", outcome.render_summary());
            Ok(ExitCode::SUCCESS)
        }

        Command::Curvature { source, trials } => {
            let (g, desc) = source.resolve()?;
            let seed = source.seed;
            let profile = levitt_curvature(&g)?;
            println!("curvature of {desc}:");
            for (v, k) in profile.per_vertex() {
                println!("  vertex {v}: {}", rational_string(k));
            }
            println!("  total = {}", rational_string(profile.total()));
            let gb_ok = *profile.total()
                == num_rational::BigRational::from_integer(g.euler_characteristic().into());
            println!(
                "  gauss-bonnet (total = chi = {}): {}",
                g.euler_characteristic(),
                if gb_ok { "pass" } else { "FAIL" }
            );
            if let Some(trials) = trials {
                let e = index_expectation(&g, trials, seed)?;
                match e.mode {
                    ExpectationMode::Exhaustive => println!("  index expectation (exhaustive):"),
                    ExpectationMode::MonteCarlo { seed, trials } => {
                        println!("  index expectation (monte carlo, seed={seed}, trials={trials}):")
                    }
                }
                for (v, x) in &e.per_vertex {
                    println!("    vertex {v}: {}", rational_string(x));
                }
            }
            Ok(if gb_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Betti { source } => {
            let (g, desc) = source.resolve()?;
            let b = betti(&g)?;
            let ep_ok = euler_poincare_check(&g)?;
            println!("betti of {desc}: {b:?}");
            println!(
                "  euler-poincare (alternating sum = chi = {}): {}",
                g.euler_characteristic(),
                if ep_ok { "pass" } else { "FAIL" }
            );
            Ok(if ep_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Ph { source, values } => {
            let (g, desc) = source.resolve()?;
            let f = match values {
                Some(vals) => VertexFunction::from_values_in_order(&g, &vals)?,
                None => VertexFunction::random_seeded(&g, source.seed),
            };
            println!("poincare-hopf on {desc}:");
            let mut sum = 0i64;
            for v in g.vertex_labels() {
                let idx = ph_index(&g, &f, v)?;
                sum += idx;
                println!(
                    "  vertex {v} (f={}): index {idx}",
                    rational_string(f.value(v))
                );
            }
            let chi = g.euler_characteristic();
            let ok = sum == chi;
            println!(
                "  sum = {sum}, chi = {chi}: {}",
                if ok { "pass" } else { "FAIL" }
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
