use std::process::ExitCode;

fn main() -> ExitCode {
    match symlab::experiments::cli::run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
