use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = torus_nielsen::cli::run(std::env::args_os());
    if code == torus_nielsen::cli::EXIT_OK {
        println!("{out}");
    } else {
        eprintln!("{out}");
    }
    ExitCode::from(code as u8)
}
