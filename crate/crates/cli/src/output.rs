use std::fmt;
use std::io::{self, Write};
use std::time::Instant;

use serde::Serialize;
use szeged_core::{Error, TOOL_VERSION};

/// Why a run stopped before producing its report.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(String),
    Usage(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e {
                Error::Disconnected => 3,
                Error::Infeasible(_) | Error::EmptyClass { .. } => 4,
                Error::CapExceeded { .. } | Error::TooManyEdges(_) | Error::Overflow => 5,
                _ => 2,
            },
            Failure::Io(_) | Failure::Usage(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(msg) | Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

/// Whether the run found what it was asked to confirm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Violation,
}

impl Verdict {
    pub fn code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Violation => 1,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Violation
        }
    }
}

/// Run metadata carried by every JSON document.
pub struct Meta {
    pub seed: u64,
    pub workers: usize,
    pub started: Instant,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool_version: &'static str,
    seed: u64,
    workers: usize,
    wall_ms: u128,
    #[serde(flatten)]
    body: &'a T,
}

impl Meta {
    pub fn write_json<T: Serialize>(&self, body: &T) -> Outcome<()> {
        let doc = Envelope {
            tool_version: TOOL_VERSION,
            seed: self.seed,
            workers: self.workers,
            wall_ms: self.started.elapsed().as_millis(),
            body,
        };
        let mut out = io::stdout().lock();
        serde_json::to_writer_pretty(&mut out, &doc).map_err(|e| Failure::Io(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    }
}

pub fn write_csv<R: Serialize>(rows: &[R]) -> Outcome<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_lines(lines: &[String]) -> Outcome<()> {
    let mut out = io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}
