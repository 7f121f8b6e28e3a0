use std::io::Write;
use std::process::ExitCode;
use witgen_cli::{configure_threads, run, THREADS_ENV};

fn main() -> ExitCode {
    if let Err(e) = configure_threads(std::env::var(THREADS_ENV).ok().as_deref()) {
        eprintln!("{}", e.to_json());
        return ExitCode::from(e.exit);
    }
    let out = run(std::env::args_os());
    if !out.stdout.is_empty() {
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{}", out.stdout.trim_end());
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    ExitCode::from(out.code)
}
