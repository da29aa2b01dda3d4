use std::io::Write;

use clap::{CommandFactory, Parser};
use gtklr_cli::{run, RunConfig, Status};

fn main() {
    let cfg = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            eprintln!("\n{}", RunConfig::command().render_usage());
            std::process::exit(Status::Usage.code());
        }
        Err(e) => e.exit(),
    };
    let out = run(&cfg);
    match out.status {
        Status::Usage => {
            eprintln!("error: {}\n\n{}", out.output, RunConfig::command().render_usage());
        }
        // a closed pipe downstream is not an error of ours
        _ => {
            let _ = writeln!(std::io::stdout().lock(), "{}", out.output.trim_end());
        }
    }
    std::process::exit(out.status.code());
}
