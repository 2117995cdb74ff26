use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    codedim::cli::run(std::env::args_os(), &mut out, &mut io::stderr())
}
