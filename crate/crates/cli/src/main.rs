use std::process::ExitCode;

use severi_census_cli::{run, Status};

fn main() -> ExitCode {
    let result = run(std::env::args());
    match result.status {
        Status::Ok => print!("{}", result.output),
        Status::Error => eprint!("{}", result.output),
    }
    ExitCode::from(result.exit_code as u8)
}
