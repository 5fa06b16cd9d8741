use std::process::ExitCode;

fn main() -> ExitCode {
    tgs_core::cli::main(std::env::args_os())
}
