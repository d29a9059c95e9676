use std::io::Write;
use std::panic;
use std::process::ExitCode;

use flca::frontend::cli::{run_cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let code = panic::catch_unwind(|| {
        let stdout = std::io::stdout();
        let stderr = std::io::stderr();
        run_cli(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
    })
    .unwrap_or(EXIT_INTERNAL);
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
