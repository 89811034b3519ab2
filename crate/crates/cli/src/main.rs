use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use grouplabel::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("grouplabel: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("grouplabel: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let doc = report.render(cli.global.format);
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, doc).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout().write_all(doc.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    };
    if let Err(e) = written {
        eprintln!("grouplabel: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.code)
}
