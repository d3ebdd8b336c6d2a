use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::Parser;
use dagdiam_cli::{run, Cli};

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;
const EXIT_TIMEOUT: u8 = 124;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.timeout_ms {
        None => run(cli),
        Some(ms) => {
            // The estimators are not interruptible, so the worker is simply
            // abandoned when the deadline passes.
            let (tx, rx) = mpsc::channel();
            thread::spawn(move || {
                let _ = tx.send(run(cli));
            });
            match rx.recv_timeout(Duration::from_millis(ms)) {
                Ok(result) => result,
                Err(_) => {
                    println!("status=timeout\ntimeout_ms={ms}");
                    return ExitCode::from(EXIT_TIMEOUT);
                }
            }
        }
    };
    match result {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(outcome.stdout.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(EXIT_IO);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("dagdiam: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
