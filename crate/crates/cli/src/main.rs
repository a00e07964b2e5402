use std::io::{self, BufWriter, Write};
use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let _ = ctrlc::set_handler(|| {
        if !curvedist_cli::interrupt() {
            std::process::exit(130);
        }
    });
    let code = panic::catch_unwind(|| {
        let stdin = io::stdin();
        let mut input = stdin.lock();
        let mut stdout = BufWriter::new(io::stdout().lock());
        let mut stderr = io::stderr().lock();
        let code = curvedist_cli::batch::main_with(std::env::args_os(), &mut input, &mut stdout, &mut stderr);
        let _ = stdout.flush();
        code
    })
    .unwrap_or(2);
    ExitCode::from(code as u8)
}
