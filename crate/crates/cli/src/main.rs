use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secantcat_cli::certificate::{EXIT_INVALID, EXIT_OK};
use secantcat_cli::run::{resolve_jobs, with_jobs};
use secantcat_cli::{run_suite, run_task, BudgetSpec, ModeSpec, ModelSpec, RunOptions, TaskKind, TaskSpec};

#[derive(Parser, Debug)]
#[command(name = "secantcat", version, about = "Certified ideal computations for catalecticants, secants and multisymmetric ideals")]
struct Cli {
    /// Write the certificate (or suite output) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// `qq` or `fp:<prime>` (screen only).
    #[arg(long, global = true, default_value = "qq")]
    mode: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, env = "SECANTCAT_JOBS")]
    jobs: Option<usize>,
    /// S-pair budget per Groebner computation.
    #[arg(long, global = true)]
    max_pairs: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true)]
    wall_clock: Option<u64>,
    /// Include timings in certificates.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    #[command(subcommand)]
    Multisym(MultisymCmd),
    #[command(subcommand)]
    Secant(SecantCmd),
    #[command(subcommand)]
    Rank3(Rank3Cmd),
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand, Debug)]
enum MultisymCmd {
    /// Is J_d equal to the ideal of the big diagonal?
    CheckDiagonal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dmax: Option<u32>,
    },
    Mappoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        emax: u32,
    },
    ProductTriple {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: Option<u32>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModelName {
    P1,
    Veronese,
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: ModelName,
    #[arg(long)]
    dega: Option<u32>,
    #[arg(long)]
    degb: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    d1: Option<u32>,
    #[arg(long)]
    d2: Option<u32>,
}

impl ModelArgs {
    fn to_spec(&self) -> Result<ModelSpec, String> {
        let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| format!("--{flag} is required for this model"));
        Ok(match self.model {
            ModelName::P1 => ModelSpec::P1 { dega: need(self.dega, "dega")?, degb: need(self.degb, "degb")? },
            ModelName::Veronese => ModelSpec::Veronese {
                n: need(self.n, "n")?,
                d1: self.d1.unwrap_or(1),
                d2: self.d2.unwrap_or(1),
            },
        })
    }
}

#[derive(Subcommand, Debug)]
enum SecantCmd {
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        k: u32,
        /// Screen in F_p before the rational run.
        #[arg(long)]
        screen_mod: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum Rank3Cmd {
    Veronese {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    Ideal {
        #[command(flatten)]
        model: ModelArgs,
        /// Write the rank-3 family as an ideal file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    /// Run a JSONL file of task specs.
    Run { path: PathBuf },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn real_main(cli: Cli) -> Result<i32, String> {
    let mut mode = ModeSpec::parse(&cli.mode)?;
    let budget = BudgetSpec { max_pairs: cli.max_pairs, wall_clock_seconds: cli.wall_clock };
    let opts = RunOptions { timings: cli.timings };
    let jobs = resolve_jobs(cli.jobs);

    let (kind, export) = match cli.command {
        Command::Suite(SuiteCmd::Run { path }) => {
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let report = run_suite(&text, opts, jobs);
            let body: String = report.lines.iter().map(|l| l.to_json() + "\n").collect();
            emit(&cli.out, &body)?;
            eprintln!("{}", report.summary());
            return Ok(report.exit_code());
        }
        Command::Multisym(MultisymCmd::CheckDiagonal { n, d, dmax }) => (TaskKind::CheckDiagonal { n, d, dmax }, None),
        Command::Multisym(MultisymCmd::Mappoly { n, d, ell, emax }) => (TaskKind::MapPoly { n, d, ell, emax }, None),
        Command::Multisym(MultisymCmd::ProductTriple { n, dmax }) => (TaskKind::ProductTriple { n, dmax }, None),
        Command::Secant(SecantCmd::Verify { model, k, screen_mod }) => {
            if let Some(p) = screen_mod {
                mode = ModeSpec { screen: Some(p), confirm: mode.confirm };
                mode.validate().map_err(|e| e.to_string())?;
            }
            (TaskKind::SecantVerify { model: model.to_spec()?, k }, None)
        }
        Command::Rank3(Rank3Cmd::Veronese { n, export }) => (TaskKind::Rank3Veronese { n }, export),
        Command::Rank3(Rank3Cmd::Ideal { model, export }) => (TaskKind::Rank3Ideal { model: model.to_spec()? }, export),
    };

    let spec = TaskSpec { kind, budget, mode, seed: cli.seed };
    let out = with_jobs(jobs, || run_task(&spec, opts)).map_err(|e| e.to_string())?;
    if let (Some(path), Some(text)) = (&export, &out.family_file) {
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let cert = out.certificate;
    let json = serde_json::to_string_pretty(&cert).map_err(|e| e.to_string())?;
    emit(&cli.out, &(json + "\n"))?;
    Ok(cert.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match real_main(cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("secantcat: {msg}");
            EXIT_INVALID
        }
    };
    ExitCode::from(code as u8)
}
