use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use turan_core::cyclic::build_family;
use turan_core::numerics::QuadratureConfig;
use turan_core::report::{self, OutputFormat, ReportConfig, TableArtifact};
use turan_core::{Error, SizeCaps};

#[derive(Parser)]
#[command(name = "turan", version, about = "Cyclic (k+1, k)-Turán families: tables, bounds and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Modulus n of Z_n.
    #[arg(long, global = true, default_value_t = 32)]
    n: usize,

    /// Single subset size k (overrides --k-min/--k-max).
    #[arg(long, global = true)]
    k: Option<usize>,

    #[arg(long, global = true)]
    k_min: Option<usize>,

    #[arg(long, global = true)]
    k_max: Option<usize>,

    /// Shift j; `verify` checks every shift when omitted.
    #[arg(long, global = true)]
    j: Option<usize>,

    /// csv, md or json.
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Absolute quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    /// Size-guard cap applied to every enumeration.
    #[arg(long, global = true)]
    cap: Option<u64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// c0(k) table.
    List1,
    /// c1(k) table.
    List2,
    /// Family sizes min_j |L_j|, mean and bound column at modulus n.
    List3,
    /// All bound coefficients side by side.
    Bounds,
    /// Coverage, occurrence and gap-sum checks.
    Verify,
    /// mu / lambda values at s = n - k.
    Mu,
    /// Export the member list of L_j.
    Family,
}

impl Command {
    fn default_k_range(self) -> (usize, usize) {
        match self {
            Command::List1 | Command::List2 => (2, 40),
            Command::List3 | Command::Bounds => (2, 10),
            Command::Verify => (2, 4),
            Command::Mu | Command::Family => (3, 3),
        }
    }
}

fn config(cmd: Command, opts: &Opts) -> Result<ReportConfig, Error> {
    let (lo, hi) = cmd.default_k_range();
    let (k_min, k_max) = match opts.k {
        Some(k) => (k, k),
        None => (opts.k_min.unwrap_or(lo), opts.k_max.unwrap_or(hi)),
    };
    Ok(ReportConfig {
        n: opts.n,
        k_min,
        k_max,
        j: opts.j,
        format: opts.format.parse::<OutputFormat>()?,
        output_path: opts.out.clone(),
        caps: opts.cap.map(SizeCaps::uniform).unwrap_or_default(),
        quadrature: QuadratureConfig::new(opts.tol, QuadratureConfig::default().max_depth)?,
    })
}

fn emit(cfg: &ReportConfig, text: &str) -> io::Result<()> {
    match &cfg.output_path {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let cfg = config(cli.command, &cli.opts)?;
    let table: TableArtifact = match cli.command {
        Command::List1 => report::cmd_list1(&cfg)?,
        Command::List2 => report::cmd_list2(&cfg)?,
        Command::List3 => report::cmd_list3(&cfg)?,
        Command::Bounds => report::cmd_bounds(&cfg)?,
        Command::Verify => report::cmd_verify(&cfg)?,
        Command::Mu => report::cmd_mu(&cfg)?,
        Command::Family => {
            let family = build_family(cfg.n, cfg.k_min, cfg.j.unwrap_or(0), &cfg.caps)?;
            let mut buf = Vec::new();
            family.write_to(&mut buf).expect("in-memory write");
            emit(&cfg, &String::from_utf8(buf).expect("ascii"))
                .map_err(|e| Error::Domain(format!("writing output: {e}")))?;
            return Ok(0);
        }
    };
    emit(&cfg, &table.render(cfg.format)).map_err(|e| Error::Domain(format!("writing output: {e}")))?;
    Ok(table.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
