use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qschur::cli::{run, Command, Format, RunConfig, Suite};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Exact checks for q-Schur superalgebras at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension of S(m|n, r), computed two ways.
    Dim(Common),
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// List the labels of the irreducible modules.
    Classify(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 3)]
    l: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow tensor spaces larger than 2^20.
    #[arg(long)]
    force: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, command) = match cli.command {
        Cmd::Dim(c) => (c, Command::Dim),
        Cmd::Verify { common, suite } => (common, Command::Verify(suite)),
        Cmd::Classify(c) => (c, Command::Classify),
    };
    let cfg = RunConfig {
        format: common.format,
        seed: common.seed,
        force: common.force,
        ..RunConfig::new(common.m, common.n, common.r, common.l, command)
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cfg) {
        Ok(report) => {
            print!("{}", report.render(cfg.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
