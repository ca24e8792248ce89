use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = hyperlandau::cli::run(
        std::env::args_os(),
        env!("CARGO_PKG_VERSION"),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
