use std::io::{Read, Write};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};

use choosability::bench::{bench_orderings, BenchTable};
use choosability::decide::{decide_with_mode, DecideConfig, DecideMode, Decision, Findings};
use choosability::graph::{generate_family, order_vertices, parse_problem, Family, Heuristic, Problem};
use choosability::oracle::{brute_force_choosable, BruteLimits};
use choosability::poly::{final_terms, Mode, Monomial, RunConfig, RunStats, DEFAULT_BRANCH_LIMIT};
use choosability::report::{ProblemSummary, Report, RunSettings};
use choosability::Error;

const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "choosability", version, about = "Choosability of small graphs from graph polynomial coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide s-choosability (exit 0 choosable, 1 not choosable, 2 unknown).
    Decide {
        #[arg(long, value_enum, default_value_t = DecideArg::Pipeline)]
        mode: DecideArg,
        #[command(flatten)]
        opts: Opts,
        /// Problem file, or `-` for standard input.
        file: String,
    },
    /// Print the final truncated polynomial.
    Coefficients {
        #[arg(long, value_enum, default_value_t = ProductArg::Standard)]
        mode: ProductArg,
        #[command(flatten)]
        opts: Opts,
        file: String,
    },
    /// Decide by trying every list assignment (tiny problems only).
    Oracle {
        #[arg(long, default_value_t = BruteLimits::default().max_vertices)]
        max_vertices: usize,
        #[arg(long, default_value_t = BruteLimits::default().max_total_size)]
        max_total_size: u32,
        #[arg(long)]
        json: bool,
        file: String,
    },
    /// Compare vertex-ordering heuristics by total monomial count.
    Bench {
        /// Comma-separated heuristics; all of them by default.
        #[arg(long, value_delimiter = ',')]
        heuristics: Vec<String>,
        /// Skip the INPUT baseline run (no relative counts).
        #[arg(long)]
        no_baseline: bool,
        #[arg(long)]
        json: bool,
        file: String,
    },
    /// Print a problem from a test family.
    Gen {
        /// glued-cliques, glued-cliques-minus-edge, grid-diag or cycle-triangles
        family: String,
        params: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecideArg {
    Standard,
    Extended,
    Pipeline,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    Standard,
    Extended,
}

#[derive(Args)]
struct Opts {
    /// INPUT, VSEP, MD, MD+PROC, OVER, LIST, LIST+DEG or MDR
    #[arg(long, default_value = "MD+PROC")]
    heuristic: String,
    /// Live term count above which the product is split into branches.
    #[arg(long, default_value_t = DEFAULT_BRANCH_LIMIT)]
    branch_limit: usize,
    #[arg(long, default_value_t = choosability::decide::DEFAULT_PATTERN_CAP)]
    pattern_cap: usize,
    #[arg(long, default_value_t = choosability::decide::DEFAULT_FEASIBLE_CAP)]
    feasible_cap: usize,
    /// Drop terms that cannot reach a surviving monomial.
    #[arg(long)]
    prune_matching: bool,
    #[arg(long)]
    json: bool,
}

impl Opts {
    fn config(&self) -> Result<DecideConfig, Error> {
        let cfg = DecideConfig {
            heuristic: self.heuristic.parse().map_err(Error::InvalidArgument)?,
            branch_limit: self.branch_limit,
            pattern_cap: self.pattern_cap,
            feasible_cap: self.feasible_cap,
            prune_matching: self.prune_matching,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn format(&self) -> &'static str {
        if self.json {
            "json"
        } else {
            "text"
        }
    }
}

/// `println!` that drops output once stdout is closed.
macro_rules! outln {
    ($($arg:tt)*) => {
        emit(&format!("{}\n", format_args!($($arg)*)))
    };
}

static STDOUT_CLOSED: AtomicBool = AtomicBool::new(false);

fn emit(text: &str) {
    if STDOUT_CLOSED.load(Ordering::Relaxed) {
        return;
    }
    if let Err(e) = std::io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
        STDOUT_CLOSED.store(true, Ordering::Relaxed);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn read_problem(path: &str) -> Result<Problem, String> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    let p = parse_problem(&text).map_err(|e| format!("{path}: {e}"))?;
    if p.name().is_none() && path != "-" {
        return Ok(p.with_name(path));
    }
    Ok(p)
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Decide { mode, opts, file } => {
            let cfg = opts.config().map_err(|e| e.to_string())?;
            let p = read_problem(&file)?;
            let mode = match mode {
                DecideArg::Standard => DecideMode::Standard,
                DecideArg::Extended => DecideMode::Extended,
                DecideArg::Pipeline => DecideMode::Pipeline,
            };
            let decision = decide_with_mode(&p, &cfg, mode).map_err(|e| e.to_string())?;
            let mode_name = serde_json::to_value(mode).ok().and_then(|v| v.as_str().map(str::to_owned));
            let settings = RunSettings {
                command: "decide".into(),
                mode: mode_name,
                decide: cfg,
                format: opts.format().into(),
            };
            emit_decision(&p, decision, settings, opts.json)
        }
        Command::Coefficients { mode, opts, file } => {
            let cfg = opts.config().map_err(|e| e.to_string())?;
            let p = read_problem(&file)?;
            let run = RunConfig {
                mode: match mode {
                    ProductArg::Standard => Mode::Standard,
                    ProductArg::Extended => Mode::Extended,
                },
                branch_limit: cfg.branch_limit,
                early_stop: false,
                prune_matching: cfg.prune_matching,
            };
            let ordering = order_vertices(&p, cfg.heuristic);
            let (terms, stats) = final_terms(&p, &ordering, &run).map_err(|e| e.to_string())?;
            if opts.json {
                let out = serde_json::json!({ "terms": terms, "stats": stats });
                outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                print_terms(&terms, run.mode == Mode::Extended);
            }
            Ok(0)
        }
        Command::Oracle {
            max_vertices,
            max_total_size,
            json,
            file,
        } => {
            let p = read_problem(&file)?;
            let limits = BruteLimits {
                max_vertices,
                max_total_size,
            };
            let verdict = brute_force_choosable(&p, &limits).map_err(|e| e.to_string())?;
            let decision = Decision {
                verdict,
                findings: Findings::default(),
                stats: RunStats::default(),
            };
            let settings = RunSettings {
                command: "oracle".into(),
                mode: None,
                decide: DecideConfig::default(),
                format: if json { "json" } else { "text" }.into(),
            };
            emit_decision(&p, decision, settings, json)
        }
        Command::Bench {
            heuristics,
            no_baseline,
            json,
            file,
        } => {
            let p = read_problem(&file)?;
            let hs: Vec<Heuristic> = if heuristics.is_empty() {
                Heuristic::ALL.to_vec()
            } else {
                heuristics
                    .iter()
                    .map(|h| h.parse::<Heuristic>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            };
            let table = bench_orderings(&p, &hs, !no_baseline);
            if json {
                outln!("{}", serde_json::to_string_pretty(&table).expect("serializable"));
            } else {
                print_bench(&table);
            }
            Ok(if table.rows.iter().any(|r| r.error.is_some()) {
                EXIT_ERROR
            } else {
                0
            })
        }
        Command::Gen { family, params } => {
            let f = Family::from_args(&family, &params).map_err(|e| e.to_string())?;
            let p = generate_family(f).map_err(|e| e.to_string())?;
            emit(&p.to_text());
            Ok(0)
        }
    }
}

fn emit_decision(p: &Problem, d: Decision, config: RunSettings, json: bool) -> Result<u8, String> {
    let code = d.verdict.exit_code() as u8;
    let report = Report {
        problem: ProblemSummary::from(p),
        verdict: d.verdict,
        findings: d.findings,
        stats: d.stats,
        config,
        bench: None,
    };
    if json {
        outln!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    Ok(code)
}

fn print_report(r: &Report) {
    outln!("{}", r.verdict);
    print_findings(&r.findings, "");
    let s = &r.stats;
    if s.branches > 0 {
        outln!("monomials: {}  peak terms: {}  branches: {}", s.monomials, s.peak_terms, s.branches);
    }
}

fn print_findings(f: &Findings, indent: &str) {
    if let Some(rank) = f.constraint_rank {
        outln!("{indent}constraint rank: {rank} (from {} group(s))", f.constraint_groups.unwrap_or(0));
    }
    if let Some(v) = &f.feasible_vectors {
        let list: Vec<String> = v.iter().map(ToString::to_string).collect();
        outln!("{indent}feasible vectors ({}): {}", v.len(), list.join(" "));
    }
    if !f.deletable_edges.is_empty() {
        let list: Vec<String> = f.deletable_edges.iter().map(ToString::to_string).collect();
        outln!("{indent}deletable edges: {}", list.join(" "));
    }
    if let Some(c) = f.pattern_count {
        outln!("{indent}candidate assignments: {c}");
    }
    if let Some(inner) = &f.reduced {
        outln!("{indent}after deleting edges:");
        print_findings(inner, &format!("{indent}  "));
    }
}

fn print_terms(terms: &[Monomial], with_marker: bool) {
    for m in terms {
        let mut cols: Vec<String> = m.base.iter().map(u32::to_string).collect();
        if with_marker {
            cols.push(m.marker.map_or("-".into(), |w| w.to_string()));
        }
        cols.push(m.coefficient.to_string());
        outln!("{}", cols.join(" "));
    }
}

fn print_bench(t: &BenchTable) {
    outln!("{:<10} {:>14} {:>12} {:>9} {:>10}", "heuristic", "monomials", "peak", "branches", "vs INPUT");
    for row in &t.rows {
        match (&row.stats, &row.error) {
            (Some(s), _) => {
                let rel = row
                    .relative_percent
                    .map_or("-".to_string(), |r| format!("{r:.1}%"));
                outln!(
                    "{:<10} {:>14} {:>12} {:>9} {:>10}",
                    row.heuristic.name(),
                    s.monomials,
                    s.peak_terms,
                    s.branches,
                    rel
                );
            }
            (None, Some(e)) => outln!("{:<10} error: {e}", row.heuristic.name()),
            (None, None) => unreachable!("a row has stats or an error"),
        }
    }
}
