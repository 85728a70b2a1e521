//! Command-line interface.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
//! input error, 3 the input file could not be parsed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use brieskorn_core::kirby::{replay_trace, script_generator};
use brieskorn_core::plumbing::brieskorn_plumbing;
use brieskorn_core::seifert::validate_triple;
use brieskorn_core::FamilyId;
use clap::{Parser, Subcommand};

use crate::claims::ClaimTable;
use crate::formats::{parse_script, plumbing_to_dot, script_to_json, TraceLine};
use crate::info::{info, render_text};
use crate::report::{sweep, to_csv, SweepOptions, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "brieskorn", version, about = "Exact invariants and Kirby move replay for Brieskorn spheres")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Seifert data, plumbing, Wu class and mu-bar of one triple.
    Info {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(long)]
        json: bool,
        /// Also compute the Casson invariant (always on for Σ(2,3,6n+1)).
        #[arg(long)]
        casson: bool,
        /// Print the plumbing graph as DOT instead.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Check every admissible member n in from..=to against the claims table.
    Family {
        id: String,
        from: i64,
        to: i64,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        casson: bool,
        /// Generate and replay each member's move script.
        #[arg(long)]
        replay: bool,
    },
    /// Replay a move script file.
    Replay {
        file: PathBuf,
        /// Print one JSON object per step.
        #[arg(long)]
        trace: bool,
    },
    /// Write the move script of a family member.
    GenScript {
        id: String,
        n: i64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Failure> {
    match cmd {
        Command::Info { p, q, r, json, casson, dot } => {
            let t = validate_triple(p, q, r).map_err(usage)?;
            if dot {
                if t.is_degenerate() {
                    return Err(usage("S^3 has no plumbing to draw"));
                }
                let g = brieskorn_plumbing(&t).map_err(usage)?;
                write!(out, "{}", plumbing_to_dot(&g)).map_err(io)?;
                return Ok(EXIT_OK);
            }
            let report = info(&t, casson).map_err(|e| Failure { code: EXIT_FAILED, message: e.to_string() })?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("reports serialize")).map_err(io)?;
            } else {
                write!(out, "{}", render_text(&report)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Family { id, from, to, csv, json, casson, replay } => {
            let id: FamilyId = id.parse().map_err(usage)?;
            if from > to {
                return Err(usage(format!("empty range {from}..{to}")));
            }
            let opts = SweepOptions { casson, replay };
            let reports = sweep(id, from, to, opts, ClaimTable::builtin()).map_err(usage)?;
            if csv {
                write!(out, "{}", to_csv(&reports).map_err(usage)?).map_err(io)?;
            } else if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("reports serialize")).map_err(io)?;
            } else {
                for r in &reports {
                    writeln!(out, "{}", text_line(r)).map_err(io)?;
                }
            }
            let failed: Vec<i64> = reports.iter().filter(|r| !r.pass).map(|r| r.n).collect();
            if failed.is_empty() {
                Ok(EXIT_OK)
            } else {
                writeln!(err, "claims failed for n = {failed:?}").map_err(io)?;
                Ok(EXIT_FAILED)
            }
        }
        Command::Replay { file, trace } => {
            let text = std::fs::read_to_string(&file).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let script = parse_script(&text).map_err(|e| Failure { code: EXIT_PARSE, message: e.to_string() })?;
            let t = replay_trace(&script);
            if trace {
                for step in &t.steps {
                    writeln!(out, "{}", serde_json::to_string(&TraceLine::from(step)).expect("trace lines serialize"))
                        .map_err(io)?;
                }
            }
            match &t.outcome {
                Ok(()) => {
                    let summary = format!("{}: {} moves replayed, final state {}", script.name, t.steps.len(), t.final_state);
                    if trace {
                        writeln!(err, "{summary}").map_err(io)?;
                    } else {
                        writeln!(out, "{summary}").map_err(io)?;
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "{}: {e}", script.name).map_err(io)?;
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::GenScript { id, n, output } => {
            let id: FamilyId = id.parse().map_err(usage)?;
            let s = script_generator(id, n).map_err(usage)?;
            let text = script_to_json(&s);
            match output {
                Some(path) => std::fs::write(&path, text).map_err(io)?,
                None => write!(out, "{text}").map_err(io)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn text_line(r: &VerificationReport) -> String {
    let [p, q, rr] = r.triple;
    let mut line = format!(
        "{} n={} Σ({p},{q},{rr}) vertices={} det={} neg_def={} signature={} wu_square={} mubar={}",
        r.family, r.n, r.vertex_count, r.determinant, r.negative_definite, r.signature, r.wu_square, r.mubar
    );
    if let Some(c) = r.casson {
        line.push_str(&format!(" casson={c}"));
    }
    if let Some(s) = &r.script_replayed {
        line.push_str(&format!(" script={}", if s.pass { "ok" } else { "FAILED" }));
    }
    line.push_str(if r.pass { " PASS" } else { " FAIL" });
    for c in r.claims_checked.iter().filter(|c| !c.pass) {
        line.push_str(&format!(" [{}: expected {}, got {}]", c.claim, c.expected, c.actual));
    }
    for note in &r.notes {
        line.push_str(&format!(" (note: {note})"));
    }
    line
}
