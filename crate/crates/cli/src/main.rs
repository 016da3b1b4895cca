mod commands;
mod report;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jacsyz_core::Field;

/// Jacobian syzygies, free and nearly free curves, and addition-deletion for
/// plane curves over Q(i).
#[derive(Parser, Debug)]
#[command(name = "jacsyz", version)]
struct Cli {
    #[command(flatten)]
    global: Global,

    /// Read one command per line from stdin.
    #[arg(long, global = true)]
    batch: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Coefficient field of the inputs.
    #[arg(long, value_enum, default_value = "qi", global = true)]
    pub field: FieldArg,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for line sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum FieldArg {
    Q,
    Qi,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Q => Field::Q,
            FieldArg::Qi => Field::QI,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Syzygy degrees, Tjurina number, Jacobian module and type of a curve.
    Analyze {
        poly: String,
    },
    /// Add a line to a curve.
    UnionLine {
        f1: String,
        /// The line, as "a,b,c" for a*x+b*y+c*z or as a linear form.
        #[arg(long)]
        line: String,
        /// Base point of the pencil, "1,0,0" by default.
        #[arg(long)]
        pencil_point: Option<String>,
        /// Assume all singularities of f1 and of the union are quasihomogeneous.
        #[arg(long)]
        assume_qh: bool,
    },
    /// Union of two curves.
    Union {
        f1: String,
        f2: String,
        /// Range of k for exact sequence rows, e.g. "1..4".
        #[arg(long)]
        exactseq: Option<String>,
        #[arg(long)]
        assume_qh: bool,
    },
    /// Splitting types along lines and jumping lines.
    Jumping {
        poly: String,
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        line: Option<String>,
        /// Scan this many lines of small height.
        #[arg(long)]
        scan: Option<usize>,
    },
}

/// Exit status of one command: 0 ok, 1 input error, 2 hypothesis violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    InputError = 1,
    Violation = 2,
}

fn run_one(args: &[String], out: &mut String) -> Status {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::InputError,
            };
            let _ = e.print();
            return status;
        }
    };
    if cli.batch {
        return run_batch(&cli.global, out);
    }
    let Some(command) = cli.command else {
        eprintln!("error: no command given (try --help)");
        return Status::InputError;
    };
    let status = match commands::run(&command, &cli.global) {
        Ok((text, status)) => {
            out.push_str(&text);
            status
        }
        Err(e) => {
            eprintln!("error: {e}");
            Status::InputError
        }
    };
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, std::mem::take(out)) {
            eprintln!("error: cannot write {path}: {e}");
            return Status::InputError;
        }
    }
    status
}

fn run_batch(global: &Global, out: &mut String) -> Status {
    let mut worst = Status::Ok;
    for line in io::stdin().lock().lines() {
        let Ok(line) = line else {
            return Status::InputError;
        };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(words) = shlex::split(line) else {
            eprintln!("error: cannot split batch line `{line}`");
            worst = worst.max(Status::InputError);
            continue;
        };
        let mut args = vec!["jacsyz".to_string()];
        args.extend(inherited_flags(global));
        args.extend(words);
        let mut chunk = String::new();
        worst = worst.max(run_one(&args, &mut chunk));
        out.push_str(&chunk);
    }
    if let Some(path) = &global.out {
        if let Err(e) = std::fs::write(path, std::mem::take(out)) {
            eprintln!("error: cannot write {path}: {e}");
            return Status::InputError;
        }
    }
    worst
}

/// Flags given on the batch command line apply to every batch entry.
fn inherited_flags(global: &Global) -> Vec<String> {
    let mut flags = vec![
        "--field".to_string(),
        match global.field {
            FieldArg::Q => "q",
            FieldArg::Qi => "qi",
        }
        .to_string(),
        "--seed".to_string(),
        global.seed.to_string(),
    ];
    if global.json {
        flags.push("--json".into());
    }
    flags
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut out = String::new();
    let status = run_one(&args, &mut out);
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(status as u8)
}
