use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use thetacf::cli::{run, Cli};
use thetacf::render::{summary_line, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let mut body = outcome.body;
    let mut code = ExitCode::SUCCESS;
    if let Some(rows) = &outcome.reports {
        // JSON output stays a single document; the summary goes to stderr
        let summary = summary_line(rows);
        match cli.format {
            Format::Text => body.push_str(&format!("{summary}\n")),
            Format::Json => eprintln!("{summary}"),
        }
        if rows.iter().any(|r| !r.pass) {
            code = ExitCode::from(2);
        }
    }
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(1);
    }
    code
}
