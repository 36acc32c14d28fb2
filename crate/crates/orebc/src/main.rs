use std::io::Write;

fn main() {
    let outcome = orebc::cli::run(std::env::args());
    print!("{}", outcome.stdout);
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
