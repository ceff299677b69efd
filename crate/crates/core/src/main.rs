use std::io::{self, Write};
use std::process::ExitCode;
use std::thread;

use clap::Parser;

use ait_core::cli::{execute, Cli};

// Deep terms recurse deeply in the reducer and printer.
const STACK_BYTES: usize = 512 << 20;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || {
            let stdout = io::stdout();
            let stderr = io::stderr();
            let (mut out, mut err) = (stdout.lock(), stderr.lock());
            let code = execute(cli, &mut out, &mut err);
            let _ = out.flush();
            code
        })
        .expect("spawn worker thread")
        .join()
        .unwrap_or(101);
    ExitCode::from(code as u8)
}
