use clap::Parser;
use std::io::Write;

use superjacobi::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            std::process::exit(out.code);
        }
        Err((code, e)) => {
            eprintln!("error: {e}");
            std::process::exit(code);
        }
    }
}
