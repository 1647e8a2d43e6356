use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = twobridge_cli::run(std::env::args().skip(1));
    let _ = if code == twobridge_cli::EXIT_USAGE {
        std::io::stderr().write_all(out.as_bytes())
    } else {
        std::io::stdout().write_all(out.as_bytes())
    };
    ExitCode::from(code as u8)
}
