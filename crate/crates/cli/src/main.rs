mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use umoo_core::benchmark::{
    run_evolution, run_sampling, EvolutionConfig, Metrics, Rect2, SamplingConfig, DEFAULT_EPSILON, DEFAULT_SIGMA,
    DEFAULT_THRESHOLD,
};
use umoo_core::check::Checker;
use umoo_core::pareto::{example_claims, example_points, pareto_opt};
use umoo_core::{suites, Exec, FinSet};

use output::{round3, write_artifacts};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Pareto fronts, uncertain minimization and the two-objective benchmark.
#[derive(Parser, Debug)]
#[command(name = "umoo", version)]
struct Cli {
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run property suites and compare against their expected verdicts.
    Props {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cases per property.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, env = "UMOO_SEED", default_value_t = 1)]
        seed: u64,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Label a uniform random sample of controls.
    Sample {
        #[arg(long, default_value_t = 250_000)]
        n: usize,
        #[arg(long, env = "UMOO_SEED", default_value_t = 137)]
        seed: u64,
        /// Control domain as "xlo,xhi,ylo,yhi".
        #[arg(long, default_value = "-5,5,-5,5", allow_hyphen_values = true)]
        rect: Rect2,
        /// Largest f2 value that counts as safe.
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
        #[arg(long, default_value = "umoo-out")]
        out: PathBuf,
    },
    /// Grow a front from a random seed grid.
    Evolve {
        /// Side of the seed grid; the grid has side² points.
        #[arg(long, default_value_t = 50)]
        grid: usize,
        #[arg(long, default_value_t = 22_500)]
        iters: usize,
        #[arg(long, env = "UMOO_SEED", default_value_t = 137)]
        seed: u64,
        /// Probability of sampling uniformly instead of mutating a front member.
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        /// Mutation standard deviation as a fraction of the domain width.
        #[arg(long, default_value_t = DEFAULT_SIGMA)]
        sigma: f64,
        #[arg(long, default_value = "-5,5,-5,5", allow_hyphen_values = true)]
        rect: Rect2,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
        /// Recheck the front invariant every k steps (0: only at the end).
        #[arg(long, default_value_t = 0)]
        check_every: usize,
        #[arg(long, default_value = "umoo-out")]
        out: PathBuf,
    },
    /// Print the seven-point dominance example and its front.
    Example,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.command {
        Command::Props { suite, n, seed, list } => props(exec, &suite, n, seed, list),
        Command::Sample {
            n,
            seed,
            rect,
            threshold,
            out,
        } => {
            let cfg = SamplingConfig {
                n,
                seed,
                rect,
                threshold,
            };
            let (points, metrics) = run_sampling(exec, &cfg);
            finish(&out, &points, &metrics)
        }
        Command::Evolve {
            grid,
            iters,
            seed,
            epsilon,
            sigma,
            rect,
            threshold,
            check_every,
            out,
        } => {
            let cfg = EvolutionConfig {
                grid,
                iters,
                seed,
                rect,
                threshold,
                epsilon,
                sigma,
                check_every,
            };
            let (run, metrics) = match run_evolution(exec, &cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE);
                }
            };
            let code = finish(&out, &run.labeled(threshold), &metrics);
            if run.invariant_failures > 0 {
                eprintln!(
                    "invariant violated in {} of {} checks",
                    run.invariant_failures, run.invariant_checks
                );
                return ExitCode::from(EXIT_FAILURE);
            }
            println!("invariant: held in {} checks", run.invariant_checks);
            code
        }
        Command::Example => example(),
    }
}

fn props(exec: Exec, name: &str, n: usize, seed: u64, list: bool) -> ExitCode {
    if list {
        for s in suites::registry() {
            println!("{:<14} {}", s.name, s.about);
        }
        return ExitCode::SUCCESS;
    }
    let Some(selected) = suites::select(name) else {
        let names: Vec<_> = suites::registry().iter().map(|s| s.name).collect();
        eprintln!(
            "error: unknown suite '{name}'; expected all or one of: {}",
            names.join(", ")
        );
        return ExitCode::from(EXIT_USAGE);
    };
    let checker = Checker::new(n, seed).with_exec(exec);
    let (mut total, mut good) = (0, 0);
    for suite in selected {
        for rep in suite.run(&checker) {
            total += 1;
            if rep.as_expected() {
                good += 1;
                println!("{rep}");
            } else {
                println!("UNEXPECTED {rep}");
            }
        }
    }
    println!("{good}/{total} properties met their expected verdict (n = {n}, seed = {seed})");
    if good == total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn finish(out: &std::path::Path, points: &[umoo_core::benchmark::LabeledPoint], m: &Metrics) -> ExitCode {
    print_metrics(m);
    match write_artifacts(out, points, m) {
        Ok(paths) => {
            for p in paths {
                println!("wrote {}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: writing to {}: {e}", out.display());
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn print_metrics(m: &Metrics) {
    let at = |c: Option<[f64; 2]>| c.map_or("-".into(), |[x, y]| format!("({}, {})", round3(x), round3(y)));
    let val = |v: Option<f64>| v.map_or("-".into(), round3);
    println!("evaluations: {}", m.evaluations);
    println!("f1min: {} at {}", val(m.f1min), at(m.argmin_f1));
    println!("f2min: {} at {}", val(m.f2min), at(m.argmin_f2));
    println!("f2 at argmin f1: {}", val(m.f2_at_argmin_f1));
    println!("f1 at argmin f2: {}", val(m.f1_at_argmin_f2));
    println!(
        "front size: {}, safe: {}, unsafe: {}",
        m.front_size, m.safe_count, m.unsafe_count
    );
}

fn example() -> ExitCode {
    let pts = example_points();
    for (name, p) in &pts {
        println!("{name} = ({}, {})", p.0[0], p.0[1]);
    }
    let all: FinSet<_> = pts.iter().map(|(_, p)| *p).collect();
    let front = pareto_opt(&all);
    let names: Vec<&str> = pts.iter().filter(|(_, p)| front.contains(p)).map(|(n, _)| *n).collect();
    println!("front: {}", names.join(" "));
    let mut ok = names == ["p1", "p2", "p3", "p4"] && front.len() == 4;
    for claim in example_claims() {
        let holds = claim.holds(&pts).unwrap_or(false);
        ok &= holds;
        println!("{claim}: {holds}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
