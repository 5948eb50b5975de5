use std::process::ExitCode;

fn main() -> ExitCode {
    match clifford_ideals::cli::execute(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((0, msg)) => {
            print!("{msg}");
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("{}", msg.trim_end());
            ExitCode::from(code as u8)
        }
    }
}
