use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use modlog_dsl::{
    check_all, parse_with_warnings, print, run_command, Command, ExitStatus, Model, Report,
};

/// Check modulus pairs, blowups, Q-divisors and curve correspondences.
///
/// Commands: check-admissible MAP, minimal-twist MAP, hom-log MAP,
/// check-minimal MAP, blowup SPEC, classify SPEC, corr-check CORR,
/// qdiv-normalize QPAIR, qdiv-eq Q1 Q2, cube PAIR N, twist PAIR N,
/// check-all, print.
///
/// Exit status: 0 all answered true, 1 some verdict false, 2 input error,
/// 3 unknown name, 4 dimension mismatch, 5 invalid blowup.
#[derive(Debug, Parser)]
#[command(name = "modlog", version)]
struct Cli {
    /// Command to run.
    command: String,

    /// Command arguments.
    args: Vec<String>,

    /// Model file; `-` or no file reads stdin. `check-all` accepts several.
    #[arg(long, short)]
    model: Vec<PathBuf>,

    /// One JSON record per command on stdout.
    #[arg(long, alias = "json")]
    machine: bool,
}

struct Loaded {
    label: String,
    model: Result<Model, ExitStatus>,
}

fn load(path: Option<&PathBuf>, machine: bool) -> Loaded {
    let (label, text) = match path {
        Some(p) if p.as_os_str() != "-" => (p.display().to_string(), std::fs::read_to_string(p)),
        _ => {
            let mut s = String::new();
            let r = std::io::stdin().read_to_string(&mut s).map(|_| s);
            ("<stdin>".to_string(), r)
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {label}: {e}");
            return Loaded {
                label,
                model: Err(ExitStatus::Input),
            };
        }
    };
    let out = parse_with_warnings(&text);
    for d in &out.diagnostics {
        if machine {
            let line = serde_json::json!({ "file": label, "diagnostic": d });
            eprintln!("{line}");
        } else {
            eprintln!("{label}: {d}");
        }
    }
    Loaded {
        label,
        model: out.model.ok_or(ExitStatus::Input),
    }
}

fn emit(report: &Report, machine: bool) {
    if machine {
        println!("{}", report.to_machine());
    } else {
        print!("{}", report.to_human());
    }
}

fn emit_error(err: &modlog_dsl::CommandError, machine: bool) {
    let d = err.to_diagnostic();
    if machine {
        eprintln!("{}", serde_json::json!({ "diagnostics": [d] }));
    } else {
        eprintln!("{d}");
    }
}

/// Runs every check of one model; returns the worst status.
fn run_all(model: &Model, machine: bool) -> ExitStatus {
    let mut status = ExitStatus::Ok;
    for r in check_all(model) {
        match r {
            Ok(report) => {
                emit(&report, machine);
                status = status.max(report.status());
            }
            Err(e) => {
                emit_error(&e, machine);
                status = status.max(e.status());
            }
        }
    }
    status
}

fn run(cli: &Cli) -> ExitStatus {
    if cli.command == "check-all" {
        if !cli.args.is_empty() {
            eprintln!("error: check-all takes no arguments");
            return ExitStatus::Input;
        }
        let paths: Vec<Option<&PathBuf>> = if cli.model.is_empty() {
            vec![None]
        } else {
            cli.model.iter().map(Some).collect()
        };
        // Files are independent; parse and check them in parallel, print in order.
        let loaded: Vec<Loaded> = std::thread::scope(|s| {
            let handles: Vec<_> = paths
                .iter()
                .map(|p| s.spawn(move || load(*p, cli.machine)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("loader thread"))
                .collect()
        });
        let mut status = ExitStatus::Ok;
        for l in loaded {
            match l.model {
                Ok(m) => {
                    if !cli.machine && paths.len() > 1 {
                        println!("== {}", l.label);
                    }
                    status = status.max(run_all(&m, cli.machine));
                }
                Err(s) => status = status.max(s),
            }
        }
        return status;
    }

    if cli.model.len() > 1 {
        eprintln!("error: only check-all accepts several models");
        return ExitStatus::Input;
    }
    let command = if cli.command == "print" {
        None
    } else {
        match Command::parse(&cli.command, &cli.args) {
            Ok(c) => Some(c),
            Err(e) => {
                emit_error(&e, cli.machine);
                return e.status();
            }
        }
    };
    let model = match load(cli.model.first(), cli.machine).model {
        Ok(m) => m,
        Err(s) => return s,
    };
    match command {
        None => {
            print!("{}", print(&model));
            ExitStatus::Ok
        }
        Some(c) => match run_command(&model, &c) {
            Ok(report) => {
                emit(&report, cli.machine);
                report.status()
            }
            Err(e) => {
                emit_error(&e, cli.machine);
                e.status()
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(&cli).code() as u8)
}
