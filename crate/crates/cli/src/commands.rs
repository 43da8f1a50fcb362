//! Subcommands. `run` is pure apart from file access, and returns what to print.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use skewtilt::graph::{build_graph, enumerate, export_csv, export_dot};
use skewtilt::wire::{write_snapshot, WireFlipRequest, WirePathRequest, WirePseudoTri, WireShiftRequest, WireSkewCurve};

use crate::api::{self, ApiError, ApiResult, MapRequest};

#[derive(Debug, Parser)]
#[command(name = "skewtilt", version, about = "Pseudo-triangulations, flips and tilting sheaves of type (2,2,n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map a skew-curve to its sheaf, or a sheaf name back to its skew-curve.
    Map {
        #[arg(long)]
        n: i64,
        #[arg(long, conflicts_with = "sheaf", required_unless_present = "sheaf")]
        arc: Option<String>,
        #[arg(long)]
        sheaf: Option<String>,
        /// Print the JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Validate a pseudo-triangulation file.
    Check { file: PathBuf },
    /// Flip one arc of a pseudo-triangulation.
    Flip {
        file: PathBuf,
        #[arg(long)]
        arc: String,
    },
    /// List pseudo-triangulations up to the x3-shift, one JSON record per line.
    Enumerate {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Flip sequence between two pseudo-triangulations.
    Path { from: PathBuf, to: PathBuf },
    /// Write the tilting graph as DOT and/or CSV (DOT on stdout when no file is given).
    Graph {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Shift every arc by an element of L(2,2,n), e.g. "x1 - x3".
    Shift {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        by: String,
    },
    /// Run the local JSON service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn failed(e: &ApiError) -> Self {
        let stdout = match e {
            ApiError::Domain { report: Some(r), .. } => format!("{}\n", api::to_json(r)),
            _ => String::new(),
        };
        Outcome { code: e.exit_code(), stdout, stderr: format!("error: {}\n", e.message()) }
    }
}

fn read_input(path: &Path) -> ApiResult<String> {
    let mut s = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| ApiError::Parse(format!("{}: {e}", path.display())))
}

fn read_tri(path: &Path) -> ApiResult<WirePseudoTri> {
    api::parse_json(&read_input(path)?)
}

fn write_output(path: &Path, text: &str) -> ApiResult<()> {
    fs::write(path, text).map_err(|e| ApiError::Domain { message: format!("{}: {e}", path.display()), report: None })
}

fn line<T: serde::Serialize>(v: &T) -> String {
    format!("{}\n", api::to_json(v))
}

fn dispatch(cmd: &Command) -> ApiResult<String> {
    match cmd {
        Command::Map { n, arc, sheaf, json } => {
            let arc = arc.as_deref().map(api::parse_json::<WireSkewCurve>).transpose()?;
            let from_arc = arc.is_some();
            let r = api::map(&MapRequest { n: *n, arc, sheaf: sheaf.clone() })?;
            Ok(if *json {
                line(&r)
            } else if from_arc {
                format!("{}\n{}\n", r.sheaf, r.equivariant)
            } else {
                format!("{}\n{}\n{}\n", r.curve, api::to_json(&r.arc), r.equivariant)
            })
        }
        Command::Check { file } => Ok(line(&api::validate(&read_tri(file)?)?)),
        Command::Flip { file, arc } => {
            let req = WireFlipRequest { tri: read_tri(file)?, arc: api::parse_json(arc)? };
            Ok(line(&api::flip_arc(&req)?))
        }
        Command::Enumerate { n, window } => {
            let e = enumerate(*n, window.unwrap_or(2 * n))?;
            Ok(write_snapshot(&e.nodes))
        }
        Command::Path { from, to } => {
            let req = WirePathRequest { from: read_tri(from)?, to: read_tri(to)? };
            Ok(line(&api::path(&req)?))
        }
        Command::Graph { n, window, dot, csv } => {
            let g = build_graph(*n, window.unwrap_or(2 * n))?;
            if dot.is_none() && csv.is_none() {
                return Ok(export_dot(&g));
            }
            if let Some(p) = dot {
                write_output(p, &export_dot(&g))?;
            }
            if let Some(p) = csv {
                write_output(p, &export_csv(&g))?;
            }
            Ok(format!("{} nodes, {} edges\n", g.nodes.len(), g.edges.len()))
        }
        Command::Shift { file, by } => {
            let req = WireShiftRequest { tri: read_tri(file)?, by: by.clone() };
            Ok(line(&api::shift(&req)?))
        }
        Command::Serve { .. } => Err(ApiError::Parse("serve is not a one-shot command".into())),
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match dispatch(cmd) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::failed(&e),
    }
}
