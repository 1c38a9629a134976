use std::process::ExitCode;

fn main() -> ExitCode {
    coordsim_cli::run()
}
