use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use selfloop::harness::{self, CampaignConfig, SigmaPolicy};
use selfloop::loopline::{instance_lines, parse_loopline, print_loopline};
use selfloop::report::{IdentityJson, ReportJson};
use selfloop::{Result, ShellError};
use selfloop_core::bounds::{evaluate_many, BoundId, Verdict};
use selfloop_core::construct::{complement_with, line_graph, ComplementConvention};
use selfloop_core::graph::{Family, FamilyParams, LoopedGraph};
use selfloop_core::numerics::verify_linegraph_identity;

/// Spectra, energies and bound checks for graphs with self-loops.
///
/// Instances are read one per line as `<graph6> | <loops>`, where `<loops>`
/// is `-`, `*` or comma-separated vertex indices. Exit status is 2 on parse
/// or usage errors, 1 on violations or numeric failures, 0 otherwise.
#[derive(Parser)]
#[command(name = "selfloop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Input file; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency eigenvalues, descending.
    Spectrum(Input),
    /// Energy around the mean eigenvalue, with the spectrum.
    Energy(Input),
    /// Exact characteristic polynomial coefficients, ascending.
    Charpoly(Input),
    /// Line graph, as a LoopLine.
    Linegraph(Input),
    /// Complement, as a LoopLine.
    Complement {
        #[command(flatten)]
        input: Input,
        /// Put loops on the vertices that had none, instead of keeping them.
        #[arg(long)]
        complement_loops: bool,
    },
    /// Evaluate the bound catalog.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Comma-separated bound ids, e.g. `B7,B17`.
        #[arg(long, value_delimiter = ',')]
        only: Vec<BoundId>,
        #[arg(long, default_value_t = selfloop_core::SLACK_TOL)]
        tol: f64,
    },
    /// Check the characteristic polynomial identity relating L(G) and the
    /// line graph of the full-loop graph, on each base graph.
    Identity(Input),
    /// Run a verification campaign.
    Fuzz(FuzzArgs),
    /// Print a member of a named family.
    Family(FamilyArgs),
    /// Cross-check closed forms against the eigensolver.
    Oracle {
        /// Largest order for the energy-sum auxiliary matrix.
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Largest order for the complete-graph spectra.
        #[arg(long, default_value_t = 12)]
        kn_max: usize,
    },
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Random instances after the exhaustive part.
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Also enumerate every graph up to this order (at most 7).
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Loop subsets drawn per graph for exhaustive orders 6 and 7.
    #[arg(long, default_value_t = 1)]
    loop_samples: usize,
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.5,0.8")]
    edge_probs: Vec<f64>,
    /// `uniform`, `bernoulli:<q>` or `fixed:<k>`.
    #[arg(long, default_value = "uniform", value_parser = parse_sigma_policy)]
    sigma: SigmaPolicy,
    #[arg(long, value_delimiter = ',')]
    only: Vec<BoundId>,
    #[arg(long, default_value_t = selfloop_core::SLACK_TOL)]
    tol: f64,
    /// Include wall-clock runtime in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of kn_sigma, kn_hat, multipartite, kkxp, edgeless_full_loop, k32_s.
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    sigma: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    loops: Vec<usize>,
}

fn parse_sigma_policy(s: &str) -> std::result::Result<SigmaPolicy, String> {
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    match kind {
        "uniform" if arg.is_empty() => Ok(SigmaPolicy::Uniform),
        "bernoulli" => arg
            .parse()
            .map(SigmaPolicy::Bernoulli)
            .map_err(|e| format!("{e}")),
        "fixed" => arg.parse().map(SigmaPolicy::Fixed).map_err(|e| format!("{e}")),
        _ => Err(format!("unknown loop policy `{s}`")),
    }
}

/// The requested ids in catalog order, or the whole catalog.
fn catalog_subset(mut ids: Vec<BoundId>) -> Vec<BoundId> {
    if ids.is_empty() {
        return BoundId::ALL.to_vec();
    }
    ids.sort();
    ids.dedup();
    ids
}

fn read_input(input: &Input) -> Result<String> {
    let mut text = String::new();
    match &input.file {
        Some(p) if p.as_os_str() != "-" => text = std::fs::read_to_string(p)?,
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// Runs `f` on every instance line, printing its output lines. Errors are
/// reported per line and processing continues; the worst exit code wins.
fn per_line(input: &Input, mut f: impl FnMut(&LoopedGraph) -> Result<(String, u8)>) -> Result<u8> {
    let text = read_input(input)?;
    let mut out = io::stdout().lock();
    let mut code = 0u8;
    for (lineno, line) in instance_lines(&text) {
        let result = parse_loopline(line).and_then(|gs| f(&gs));
        match result {
            Ok((s, c)) => {
                writeln!(out, "{s}")?;
                code = code.max(c);
            }
            Err(e) => {
                eprintln!("error: line {lineno}: {e}");
                code = code.max(e.exit_code() as u8);
            }
        }
    }
    Ok(code)
}

fn json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Spectrum(input) => per_line(&input, |gs| {
            Ok((json(&ReportJson::new(gs)?.with_spectrum(gs)?)?, 0))
        }),
        Command::Energy(input) => per_line(&input, |gs| {
            Ok((
                json(&ReportJson::new(gs)?.with_spectrum(gs)?.with_energy(gs)?)?,
                0,
            ))
        }),
        Command::Charpoly(input) => per_line(&input, |gs| {
            Ok((json(&ReportJson::new(gs)?.with_charpoly(gs))?, 0))
        }),
        Command::Linegraph(input) => per_line(&input, |gs| Ok((print_loopline(&line_graph(gs)?.graph)?, 0))),
        Command::Complement {
            input,
            complement_loops,
        } => {
            let convention = if complement_loops {
                ComplementConvention::ComplementLoops
            } else {
                ComplementConvention::SameLoops
            };
            per_line(&input, |gs| {
                Ok((print_loopline(&complement_with(gs, convention))?, 0))
            })
        }
        Command::Bounds { input, only, tol } => {
            let ids = catalog_subset(only);
            per_line(&input, |gs| {
                let reports = evaluate_many(gs, &ids, tol)?;
                let violated = reports.iter().any(|r| r.verdict == Verdict::Violated);
                Ok((json(&ReportJson::new(gs)?.with_bounds(&reports))?, violated as u8))
            })
        }
        Command::Identity(input) => per_line(&input, |gs| {
            let id = verify_linegraph_identity(gs.base())?;
            Ok((json(&IdentityJson::new(gs, &id)?)?, (!id.equal) as u8))
        }),
        Command::Fuzz(args) => {
            let config = CampaignConfig {
                seed: args.seed,
                n_min: args.n_min,
                n_max: args.n_max,
                edge_probs: args.edge_probs,
                sigma_policy: args.sigma,
                count: args.count,
                bounds: catalog_subset(args.only),
                exhaustive: args.exhaustive,
                loop_samples: args.loop_samples,
                tol: args.tol,
                timing: args.timing,
            };
            let report = harness::run_campaign(&config)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok((report.total_violations() > 0) as u8)
        }
        Command::Family(args) => {
            let params = FamilyParams {
                n: args.n,
                sigma: args.sigma,
                k: args.k,
                p: args.p,
                parts: args.parts,
                loops: args.loops,
            };
            let gs = Family::from_id(&args.name, &params)?.build()?;
            println!("{}", print_loopline(&gs)?);
            Ok(0)
        }
        Command::Oracle { n_max, kn_max } => {
            let aux = harness::oracle_ng_aux(n_max)?;
            let kn = harness::oracle_kn_sigma(kn_max)?;
            let out = serde_json::json!({
                "version": selfloop::report::SCHEMA_VERSION,
                "ng_aux": aux,
                "kn_sigma": { "n_max": kn_max, "max_error": selfloop::report::fmt_real(kn) },
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let ShellError::HardGate { witness, .. } = &e {
                eprintln!("witness: {witness}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
