use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use committee_core::format::{read_file, write_election, write_instance, ApprFile};
use committee_core::graph::Graph;
use committee_core::portfolio::{
    bench, dispatch, generate, run_solver, verify, BenchRow, DispatchPolicy, GeneratorConfig, SolverId,
};
use committee_core::reductions::{
    ccav_phs_convert, ids_to_ccav, mvs_to_pav, parse_graph, parse_phs, pvc_to_ccav, vc_to_mav, PhsPayload,
};
use committee_core::{compute_params, score, Committee, Error, Instance, Rational, Rule};

const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "committee", version, about = "Exact winner determination for MAV, CCAV and PAV")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide an instance file. Exits 0 on yes, 1 on no.
    Solve {
        file: PathBuf,
        /// `auto` or a solver name such as brute, mav-classes, ccav-bb, pav-bb, ccav-tw, matching.
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Print the winning committee.
        #[arg(long)]
        witness: bool,
    },
    /// Score a committee.
    Score {
        file: PathBuf,
        /// Comma-separated candidate indices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        committee: Vec<usize>,
        /// Rule to use when the file has no instance line.
        #[arg(long)]
        rule: Option<Rule>,
    },
    /// Print structural parameters.
    Params {
        file: PathBuf,
        /// Committee size when the file has no instance line.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate a random election, or an instance when --rule is given.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_dv: Option<usize>,
        #[arg(long)]
        max_dc: Option<usize>,
        #[arg(long, default_value_t = 0)]
        min_vote: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        rule: Option<Rule>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Threshold such as `3` or `7/2`.
        #[arg(long, default_value = "0")]
        d: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a graph (or hitting set) problem into an instance file.
    Reduce {
        #[arg(long)]
        from: Source,
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        kappa: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every solver against brute force on a directory of instances.
    Verify {
        dir: PathBuf,
        /// Largest candidate count brute force may handle.
        #[arg(long, default_value_t = committee_core::oracle::DEFAULT_CANDIDATE_LIMIT)]
        budget: usize,
    },
    /// Time every applicable solver on a directory of instances.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Vc,
    Ids,
    Mvs,
    Pvc,
    Phs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let budget =
                matches!(err.downcast_ref::<Error>(), Some(Error::BudgetExceeded(_) | Error::AllSolversExceeded));
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_ERROR })
        }
    }
}

fn load(path: &Path) -> anyhow::Result<ApprFile> {
    read_file(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Solve { file, algo, witness } => {
            let inst = load(&file)?.into_instance()?;
            let r = if algo == "auto" {
                dispatch(&inst, &DispatchPolicy::default())?
            } else {
                let id: SolverId = algo.parse().map_err(|e: String| anyhow!(e))?;
                run_solver(id, &inst)?
            };
            println!("{}", if r.decision { "yes" } else { "no" });
            println!("algorithm {}", r.algorithm);
            if let Some(s) = r.opt_score {
                println!("optimum {s}");
            }
            if witness {
                if let Some(w) = &r.witness {
                    println!("committee {w}");
                }
            }
            Ok(if r.decision { 0 } else { EXIT_NO })
        }
        Cmd::Score { file, committee, rule } => {
            let f = load(&file)?;
            let rule = rule
                .or(f.header.map(|h| h.0))
                .ok_or_else(|| anyhow!("no rule: pass --rule or add an instance line"))?;
            if let Some(&c) = committee.iter().find(|&&c| c >= f.election.m()) {
                bail!("candidate {c} out of range for m = {}", f.election.m());
            }
            let w = Committee::new(committee);
            println!("{}", score(&f.election, rule, &w));
            Ok(0)
        }
        Cmd::Params { file, k } => {
            let f = load(&file)?;
            let inst = match (f.header, k) {
                (_, Some(k)) => Instance::new(f.election, Rule::Mav, k, Rational::ZERO)?,
                (Some((rule, k, d)), None) => Instance::new(f.election, rule, k, d)?,
                (None, None) => Instance::new(f.election, Rule::Mav, 0, Rational::ZERO)?,
            };
            println!("{}", compute_params(&inst));
            Ok(0)
        }
        Cmd::Gen { m, n, max_dv, max_dc, min_vote, seed, rule, k, d, out } => {
            let cfg = GeneratorConfig { m, n, max_dv, max_dc, min_vote };
            let e = generate(&cfg, seed)?;
            let text = match rule {
                Some(rule) => write_instance(&Instance::new(e, rule, k, d)?),
                None => write_election(&e),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Cmd::Reduce { from, file, kappa, ell, out } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let graph = || -> anyhow::Result<Graph> { Ok(parse_graph(&text)?) };
            let inst = match from {
                Source::Vc => vc_to_mav(&graph()?, kappa)?,
                Source::Ids => ids_to_ccav(&graph()?, kappa)?,
                Source::Mvs => mvs_to_pav(&graph()?, kappa, ell)?,
                Source::Pvc => pvc_to_ccav(&graph()?, kappa, ell)?,
                Source::Phs => match ccav_phs_convert(&PhsPayload::Phs(parse_phs(&text)?))? {
                    PhsPayload::Ccav(inst) => inst,
                    PhsPayload::Phs(_) => unreachable!("hitting set converts to ccav"),
                },
            };
            emit(&write_instance(&inst), out.as_deref())?;
            Ok(0)
        }
        Cmd::Verify { dir, budget } => {
            let report = verify(&dir, budget)?;
            print!("{report}");
            Ok(if report.is_clean() { 0 } else { EXIT_NO })
        }
        Cmd::Bench { dir, csv } => {
            let rows = bench(&dir, &DispatchPolicy::default())?;
            let mut w = csv::Writer::from_path(&csv).with_context(|| format!("writing {}", csv.display()))?;
            w.write_record(BenchRow::HEADER)?;
            for row in &rows {
                w.write_record(row.record())?;
            }
            w.flush()?;
            println!("{} rows written to {}", rows.len(), csv.display());
            Ok(0)
        }
    }
}
