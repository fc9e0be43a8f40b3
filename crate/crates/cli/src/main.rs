use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lamclust::exact::exact_opt_curve;
use lamclust::graph::{gen_gnp, gen_path, gen_ring, gen_star, load_graph, Graph};
use lamclust::lp::{backend, build_lp};
use lamclust::objectives::Objective;
use lamclust::oracles::{ring_lower_bound, ring_sandwich};
use lamclust::rational::{format_rational, parse_rational, to_f64, Rational};
use lamclust::rounding::build_clustering_family;
use lamclust::sweeps::{certify_cover, strategy, CoverFamily, SweepOptions};
use lamclust::Error;

#[derive(Parser)]
#[command(
    name = "lamclust",
    version,
    about = "Parametric LambdaPrime / LambdaCC clustering across all λ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Exact optimum curves by partition enumeration
    Curve {
        #[command(subcommand)]
        kind: CurveKind,
    },
    /// Metric LP relaxation
    Lp {
        #[command(subcommand)]
        action: LpAction,
    },
    /// Build an ε-cover of LP solutions over the λ domain
    Sweep(SweepArgs),
    /// Round every member of a cover to a clustering
    Round {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certificates and audits
    Verify {
        #[command(subcommand)]
        what: VerifyKind,
    },
    /// Analytic bounds
    Bounds {
        #[command(subcommand)]
        what: BoundsKind,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Ring on 2^k nodes
    Ring {
        #[arg(long)]
        k: u32,
    },
    Star {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Erdős–Rényi G(n, p)
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CurveKind {
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the optimal family as JSON
        #[arg(long)]
        family: Option<PathBuf>,
        /// Emit `lambda,value` at piece endpoints plus this many uniform points
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Subcommand)]
enum LpAction {
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_parser = rational)]
        lambda: Rational,
        #[arg(long, default_value = "exact")]
        backend: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = rational)]
    epsilon: Rational,
    #[arg(long, default_value = "febe")]
    algo: String,
    #[arg(long, default_value = "lamprime", value_parser = objective)]
    objective: Objective,
    /// Lower end of the λ domain (default 4/n²)
    #[arg(long, value_parser = rational)]
    floor: Option<Rational>,
    /// Omit solution vectors from the JSON
    #[arg(long)]
    no_vectors: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Interval certificate and grid audit of a saved cover
    Cover {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
    /// q ≤ g ≤ LP ≤ √2·g ≤ M·q on the ring with 2^k nodes
    Ring {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
}

#[derive(Subcommand)]
enum BoundsKind {
    /// Minimum size of a p-approximate cover of the ring with 2^k nodes
    Ring {
        #[arg(long)]
        k: u32,
        #[arg(long, value_parser = rational)]
        p: Rational,
    },
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn objective(text: &str) -> Result<Objective, String> {
    Objective::parse(text).map_err(|e| e.to_string())
}

fn read_graph(path: &Path) -> lamclust::Result<Graph> {
    load_graph(&fs::read_to_string(path)?)
}

/// Writes through a sibling temp file so readers never see a partial file.
fn emit(out: Option<&Path>, text: &str) -> lamclust::Result<()> {
    let Some(path) = out else {
        print!("{text}");
        return Ok(());
    };
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("out");
    let tmp = path.with_file_name(format!(".{name}.tmp"));
    let mut file = fs::File::create(&tmp)?;
    file.write_all(text.as_bytes())?;
    file.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn run(cli: Cli) -> lamclust::Result<()> {
    match cli.command {
        Command::Gen { family, out } => {
            let g = match family {
                GenFamily::Ring { k } => gen_ring(k)?,
                GenFamily::Star { n } => gen_star(n)?,
                GenFamily::Path { n } => gen_path(n)?,
                GenFamily::Gnp { n, p, seed } => gen_gnp(n, p, seed)?,
            };
            emit(out.as_deref(), &g.to_edge_list())
        }
        Command::Curve {
            kind:
                CurveKind::Exact {
                    graph,
                    out,
                    family,
                    samples,
                },
        } => {
            let g = read_graph(&graph)?;
            let curve = exact_opt_curve(&g)?;
            if let Some(path) = family {
                emit(Some(&path), &curve.family_json())?;
            }
            let csv = match samples {
                Some(s) => curve.samples_csv(s),
                None => curve.to_csv(),
            };
            emit(out.as_deref(), &csv)
        }
        Command::Lp {
            action:
                LpAction::Solve {
                    graph,
                    lambda,
                    backend: name,
                    json,
                    out,
                },
        } => {
            let g = read_graph(&graph)?;
            let solver = backend(&name)?;
            let sol = solver.solve(&build_lp(&g, &lambda)?, &g)?;
            let text = if json {
                sol.to_json()
            } else {
                format!(
                    "λ = {}\nvalue = {} ≈ {:.6}\nP = {}, N = {}\ncertified = {}\n",
                    format_rational(&sol.lambda),
                    format_rational(&sol.value),
                    to_f64(&sol.value),
                    format_rational(&sol.line.p),
                    format_rational(&sol.line.n),
                    sol.certified
                )
            };
            emit(out.as_deref(), &text)
        }
        Command::Sweep(args) => {
            let g = read_graph(&args.graph)?;
            let mut opts = SweepOptions::new(args.epsilon).objective(args.objective);
            if let Some(f) = args.floor {
                opts = opts.floor(f);
            }
            let mut fam = strategy(&args.algo)?.build(&g, &opts)?;
            eprintln!(
                "{}: {} members from {} LP solves",
                args.algo,
                fam.members.len(),
                fam.lp_solve_count
            );
            if args.no_vectors {
                fam = fam.without_vectors();
            }
            emit(args.out.as_deref(), &fam.to_json())
        }
        Command::Round { cover, graph, out } => {
            let g = read_graph(&graph)?;
            let fam = CoverFamily::from_json(&fs::read_to_string(cover)?)?;
            let rounded = build_clustering_family(&fam, &g)?;
            emit(out.as_deref(), &serde_json::to_string_pretty(&rounded)?)
        }
        Command::Verify {
            what: VerifyKind::Cover { cover, graph, grid },
        } => {
            let g = read_graph(&graph)?;
            let fam = CoverFamily::from_json(&fs::read_to_string(cover)?)?;
            let report = certify_cover(&fam, &g, grid)?;
            println!("{}", report.summary());
            if report.passed {
                Ok(())
            } else {
                Err(Error::Verification("cover failed certification".into()))
            }
        }
        Command::Verify {
            what: VerifyKind::Ring { k, grid },
        } => {
            let points = ring_sandwich(k, grid)?;
            println!("lambda,q,g,lp,holds");
            for p in &points {
                println!(
                    "{},{},{},{},{}",
                    format_rational(&p.lambda),
                    p.q,
                    p.g,
                    p.lp,
                    p.holds
                );
            }
            let broken = points.iter().filter(|p| !p.holds).count();
            eprintln!("{} points, {broken} violations", points.len());
            if broken == 0 {
                Ok(())
            } else {
                Err(Error::Verification(format!(
                    "sandwich fails at {broken} points"
                )))
            }
        }
        Command::Bounds {
            what: BoundsKind::Ring { k, p },
        } => {
            let b = ring_lower_bound(k, &p)?;
            println!("B = {}\ngamma(pM) = {}\nM = {}", b.b, b.gamma, b.m);
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Json(_) => 2,
        Error::Precondition(_) => 3,
        Error::Verification(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lamclust: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
