//! The `radialmaps` command line: radius tables, inequality checks and slice
//! dumps on top of `radial-core`.

pub mod commands;
pub mod config;
pub mod mapspec;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use clap::Parser;

use crate::config::{Cli, Command, Format, RunConfig};

/// Runs one invocation and returns the exit code: 0 when every record
/// passed or was skipped, 1 when a record failed, 2 on usage, parse or I/O
/// errors.
pub fn run<I, T>(
    args: I,
    env_seed: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let started = Instant::now();
    let result = RunConfig::from_cli(&cli, env_seed).and_then(|mut cfg| {
        let report = match &cli.command {
            Command::Radii(a) => commands::radii(a, &cfg),
            Command::Verify(a) => commands::verify(a, &mut cfg)?,
            Command::Slice(a) => commands::slice(a, &mut cfg)?,
        };
        Ok((cfg, report))
    });
    let (cfg, report) = match result {
        Ok(x) => x,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let wall = started.elapsed().as_secs_f64();
    let written = match &cfg.out {
        Some(path) => File::create(path)
            .map_err(|e| format!("{}: {e}", path.display()))
            .and_then(|f| {
                emit(&report, &cfg, wall, BufWriter::new(f))
                    .map_err(|e| format!("{}: {e}", path.display()))
            }),
        None => emit(&report, &cfg, wall, &mut *stdout).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 2;
    }
    i32::from(report.failed())
}

fn emit(
    report: &report::Report,
    cfg: &RunConfig,
    wall: f64,
    mut out: impl Write,
) -> std::io::Result<()> {
    match cfg.format {
        Format::Csv => report.write_csv(&mut out)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report.to_json(cfg, wall))?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()
}
