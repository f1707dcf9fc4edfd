//! Command-line front end. [`run`] parses an argument vector, serves or
//! fills the result cache, and returns what the process should print.

mod args;
mod cache;
mod commands;
mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

pub use args::{Cli, Command, Format, LemmaCommand};
pub use cache::{CacheEntry, CACHE_ENV};

/// Exit code plus captured standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(code: i32, text: String) -> Self {
        if code == 0 {
            Self { exit_code: 0, stdout: text, stderr: String::new() }
        } else {
            Self { exit_code: code, stdout: String::new(), stderr: text }
        }
    }

    fn error(e: crate::Error) -> Self {
        let line = e.to_string().replace('\n', " ");
        Self { exit_code: 2, stdout: String::new(), stderr: format!("error: {line}\n") }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return Outcome::usage(code, e.render().to_string());
        }
    };

    let resuming = matches!(&cli.command, Command::VerifyTheorem { resume: Some(_), .. }
        | Command::VerifyTheorem { max_shards: Some(_), .. });
    let store = if cli.runtime.no_cache || resuming {
        None
    } else {
        cache::resolve_dir(cli.runtime.cache.as_deref()).map(cache::Cache::new)
    };
    let request = json!({"command": cli.command, "output": cli.output}).to_string();
    let key = cache::key(&request);
    if let Some(entry) = store.as_ref().and_then(|c| c.get(&key)) {
        return Outcome { exit_code: entry.exit_code, stdout: entry.payload, stderr: String::new() };
    }

    let ctx = commands::Context { symmetry: cli.output.symmetry, jobs: cli.runtime.jobs as usize };
    let report = match commands::execute(&cli.command, &ctx) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let stdout = report.render(cli.output.format);
    let mut stderr: String = report.notes.iter().map(|n| format!("{n}\n")).collect();
    if let Some(c) = &store {
        if let Err(e) = c.put(&key, report.exit_code, &stdout) {
            stderr.push_str(&format!("warning: cache not written: {e}\n"));
        }
    }
    Outcome { exit_code: report.exit_code, stdout, stderr }
}
