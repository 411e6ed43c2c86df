use std::process::ExitCode;

fn main() -> ExitCode {
    symcover::cli::main_with_args(std::env::args_os())
}
