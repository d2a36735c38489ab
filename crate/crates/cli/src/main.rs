mod cli;
mod commands;
mod output;

use std::io::Write as _;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches};

use cli::Cli;
use output::{out_path, Verdict};

/// Usage errors carry the offending flag.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid value for {flag}: {source}")]
    Core {
        flag: &'static str,
        source: galq_core::Error,
    },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Attaches a flag name to a core error.
pub fn flag(flag: &'static str) -> impl FnOnce(galq_core::Error) -> CliError {
    move |source| CliError::Core { flag, source }
}

fn verb_path(matches: &clap::ArgMatches) -> Vec<String> {
    let mut path = Vec::new();
    let mut current = matches;
    while let Some((name, sub)) = current.subcommand() {
        path.push(name.to_string());
        current = sub;
    }
    path
}

fn verb_usage(path: &[String]) -> String {
    let mut command = Cli::command();
    command.build();
    let mut current = &command;
    for name in path {
        match current.find_subcommand(name) {
            Some(sub) => current = sub,
            None => break,
        }
    }
    current.clone().render_help().to_string()
}

fn main() -> ExitCode {
    let matches = match Cli::command().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let path = verb_path(&matches);
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match commands::execute(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}\n");
            eprintln!("{}", verb_usage(&path));
            return ExitCode::from(2);
        }
    };
    let Some(rendered) = report.render(cli.global.format) else {
        eprintln!(
            "error: invalid value for --format: `{}` has no csv output\n",
            path.join(" ")
        );
        eprintln!("{}", verb_usage(&path));
        return ExitCode::from(2);
    };
    let written = match &cli.global.out {
        Some(name) => {
            let target = out_path(name);
            std::fs::write(&target, rendered).map_err(|e| format!("{}: {e}", target.display()))
        }
        None => std::io::stdout()
            .write_all(rendered.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(2);
    }
    match report.verdict {
        Verdict::Fail => ExitCode::from(1),
        Verdict::Info | Verdict::Pass => ExitCode::SUCCESS,
    }
}
