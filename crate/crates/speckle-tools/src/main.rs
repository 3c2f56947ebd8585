use std::process::ExitCode;

fn main() -> ExitCode {
    speckle_tools::cli::run()
}
