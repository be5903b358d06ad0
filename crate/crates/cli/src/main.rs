//! gapkit: build hardness instances for sequence-similarity measures from
//! vector sets and CNF formulas, solve them with reference algorithms, and
//! run the gap-verification suites.
//!
//! Exit codes: 0 success, 1 property failure, 2 usage or format error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gapkit_core::{BitVector, VectorFamily};
use gapkit_lcs::DEFAULT_EXPANSION_CAP;

use gapkit_cli::{config::SuiteConfig, gen, measures, suites};

#[derive(Parser)]
#[command(name = "gapkit", version, about = "Hardness-instance toolkit for LCS, k-LCS, DTWD and Frechet")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an instance and write it as JSON.
    Gen(GenArgs),
    /// Solve an instance file under a measure and print the score.
    Solve { measure: String, file: PathBuf },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Maximum satisfiable clause count of a DIMACS CNF file.
    Maxsat(MaxsatArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Instance kind: lcs, klcs, local-klcs, frechet or dtwd-gap.
    kind: String,
    /// Vector file (0/1 lines, blank-line-separated lists).
    #[arg(long)]
    vectors: Option<PathBuf>,
    /// Generate <N> random vectors of dimension <D> per list.
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    random: Option<Vec<usize>>,
    /// Number of lists for the k-sequence kinds.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Far threshold r.
    #[arg(long, default_value_t = 0)]
    r: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Weight schedule for lcs instances.
    #[arg(long, value_enum, default_value_t = ScheduleKind::Paper)]
    schedule: ScheduleKind,
    /// Expand an lcs instance to unit weights (compact schedule advised).
    #[arg(long)]
    expand: bool,
    /// Symbol expansion cap for expanded and windowed instances.
    #[arg(long, default_value_t = DEFAULT_EXPANSION_CAP)]
    expansion_cap: u64,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleKind {
    Paper,
    Compact,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: lcs-gap, klcs-gap, wlcs-expansion, dtwd-ineq,
    /// frechet-gap, metric-gap, solver-oracle or satlink.
    suite: String,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Run trials sequentially (parallel by default).
    #[arg(long)]
    sequential: bool,
    /// Print the report as JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Where to dump the first failing trial's repro payload.
    #[arg(long)]
    repro_out: Option<PathBuf>,
    /// Replay a previously dumped repro file instead of running trials.
    #[arg(long)]
    repro: Option<PathBuf>,
}

#[derive(Args)]
struct MaxsatArgs {
    file: PathBuf,
    /// Solution route: brute, mov or lcs.
    #[arg(long, value_enum, default_value_t = Via::Brute)]
    via: Via,
    /// Split width for the mov route.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Brute,
    Mov,
    Lcs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => {
            cmd_gen(args)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { measure, file } => {
            let measure = measures::Measure::parse(&measure).map_err(|e| anyhow!(e))?;
            let text = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let line = measures::solve_text(measure, &text).map_err(|e| anyhow!(e))?;
            println!("{line}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => cmd_verify(args),
        Command::Maxsat(args) => {
            cmd_maxsat(args)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_lists(args: &GenArgs, want_k: usize) -> Result<Vec<Vec<BitVector>>> {
    if let Some(path) = &args.vectors {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let lists = gen::parse_vector_lists(&text)?;
        if lists.len() != want_k {
            bail!("vector file has {} lists, this kind needs {want_k}", lists.len());
        }
        Ok(lists)
    } else if let Some(shape) = &args.random {
        let (n, d) = (shape[0], shape[1]);
        if n == 0 || d == 0 {
            bail!("--random needs positive N and D");
        }
        let mut rng = gen::rng_for(args.seed);
        Ok((0..want_k).map(|_| gen::random_list(&mut rng, n, d)).collect())
    } else {
        bail!("provide --vectors FILE or --random N D");
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{payload}"),
    }
    Ok(())
}

/// Thresholds go to stdout when the instance went to a file; when the
/// instance JSON occupies stdout they move to stderr.
fn report_threshold(out: &Option<PathBuf>, line: String) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    match args.kind.as_str() {
        "lcs" => {
            let lists = load_lists(&args, 2)?;
            let d = lists[0].first().map(|v| v.dim()).unwrap_or(0);
            let schedule = match args.schedule {
                ScheduleKind::Paper => gapkit_lcs::WeightSchedule::paper(d, args.r)?,
                ScheduleKind::Compact => gapkit_lcs::WeightSchedule::compact(d, args.r)?,
            };
            let inst = gapkit_lcs::build_instance(&lists[0], &lists[1], args.r, schedule)?;
            let inst = if args.expand { inst.expand(args.expansion_cap)? } else { inst };
            emit(&args.out, &inst.to_json())?;
            report_threshold(&args.out, format!("E_U = {}", inst.e_u));
            report_threshold(&args.out, format!("E_G = {}", inst.e_g));
        }
        "klcs" => {
            let lists = load_lists(&args, args.k)?;
            let family = VectorFamily::new(lists)?;
            let inst = gapkit_klcs::build_klcs_instance(&family, args.r)?;
            emit(&args.out, &inst.to_json())?;
            report_threshold(&args.out, format!("E_U = {}", inst.e_u));
            report_threshold(&args.out, format!("E_G = {}", inst.e_g));
        }
        "local-klcs" => {
            let lists = load_lists(&args, args.k)?;
            let family = VectorFamily::new(lists)?;
            let shape = (family.n(), family.dim());
            let inst =
                gapkit_klcs::build_local_klcs_instance(&family, args.r, args.expansion_cap)?;
            emit(&args.out, &inst.to_json(shape))?;
            report_threshold(&args.out, format!("L = {}", inst.window));
            report_threshold(&args.out, format!("E_o = {}", inst.e_o));
            report_threshold(&args.out, format!("E_n = {}", inst.e_n));
        }
        "frechet" | "dtwd-gap" => {
            let lists = load_lists(&args, 2)?;
            let inst = gapkit_dtwd::build_frechet_instance(&lists[0], &lists[1])?;
            emit(&args.out, &inst.to_json())?;
            report_threshold(&args.out, format!("expected frechet = {}", inst.expected_frechet));
            report_threshold(&args.out, format!("expected dtwd = {}", inst.expected_dtwd));
        }
        other => bail!("unknown kind {other:?}; expected lcs, klcs, local-klcs, frechet or dtwd-gap"),
    }
    Ok(())
}

fn default_trials(suite: &str) -> usize {
    match suite {
        "lcs-gap" => 200,
        "klcs-gap" => 50,
        "wlcs-expansion" => 300,
        "dtwd-ineq" => 1000,
        "frechet-gap" | "metric-gap" => 100,
        "solver-oracle" => 500,
        "satlink" => 50,
        _ => 100,
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    if let Some(path) = &args.repro {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let repro: serde_json::Value = serde_json::from_str(&text)?;
        let report = suites::replay(&args.suite, &repro).map_err(|e| anyhow!(e))?;
        print!("{}", report.render_text());
        return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }

    let trials = args.trials.unwrap_or_else(|| default_trials(&args.suite));
    let mut config = SuiteConfig::new(args.seed, trials);
    config.parallel = !args.sequential;
    let started = std::time::Instant::now();
    let report = suites::run_suite(&args.suite, &config).map_err(|e| anyhow!(e))?;
    // Elapsed time goes to stderr so reports stay byte-identical per seed.
    eprintln!("elapsed: {:?}", started.elapsed());

    if args.json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    if !report.passed() {
        let repro_path = args
            .repro_out
            .unwrap_or_else(|| PathBuf::from(format!("repro-{}.json", args.suite)));
        let payload = serde_json::to_string_pretty(&report.failures[0].repro)?;
        std::fs::write(&repro_path, payload)
            .with_context(|| format!("writing {}", repro_path.display()))?;
        eprintln!("first failing trial dumped to {}", repro_path.display());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maxsat(args: MaxsatArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let cnf = gapkit_satlink::parse_dimacs(&text)?;
    let count = match args.via {
        Via::Brute => gapkit_satlink::max_sat_bruteforce(&cnf)?,
        Via::Mov => {
            let mut oracle = gapkit_satlink::BruteForceMovOracle;
            gapkit_satlink::max_sat_via_mov(&cnf, args.k, &mut oracle)?.best
        }
        Via::Lcs => {
            if cnf.num_vars() > 8 || cnf.num_clauses() > 10 {
                bail!(
                    "the lcs route is limited to 8 variables and 10 clauses \
                     ({} vars, {} clauses given); use --via brute",
                    cnf.num_vars(),
                    cnf.num_clauses()
                );
            }
            if args.k != 2 {
                bail!("the lcs route uses a two-way split; drop --k or pass --k 2");
            }
            let mut oracle = gapkit_lcs::LcsMovOracle;
            gapkit_satlink::max_sat_via_mov(&cnf, 2, &mut oracle)?.best
        }
    };
    println!("{count}");
    Ok(())
}
