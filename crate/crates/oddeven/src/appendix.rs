//! The published table of Hamiltonian cycles, shipped verbatim and checked
//! rather than trusted.
//!
//! Each record reads `n: <even>, cycle: <comma-separated evens>` with the
//! first vertex repeated at the end to close the cycle.

use oddeven_core::goldbach::{validate_cycle, BadStep};
use serde::Serialize;

use crate::Error;

pub const APPENDIX: &str = include_str!("../data/appendix.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendixRow {
    /// 1-based line in the source text.
    pub line: usize,
    pub n: u64,
    /// As printed, closing vertex included.
    pub cycle: Vec<u64>,
}

pub fn parse_appendix(text: &str) -> Result<Vec<AppendixRow>, Error> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let record = raw.trim();
        if record.is_empty() || record.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Input(format!("appendix line {line}: {what}"));
        let rest = record.strip_prefix("n:").ok_or_else(|| bad("expected `n:`"))?;
        let (n, cycle) = rest
            .split_once(", cycle:")
            .ok_or_else(|| bad("expected `, cycle:`"))?;
        let n: u64 = n.trim().parse().map_err(|_| bad("row size is not a number"))?;
        let cycle = cycle
            .split(',')
            .map(|v| v.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad(&format!("row n={n} has a non-numeric vertex")))?;
        rows.push(AppendixRow { line, n, cycle });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowProblem {
    /// The last vertex does not repeat the first.
    NotClosed { first: u64, last: u64 },
    Step(BadStep),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub n: u64,
    pub line: usize,
    pub valid: bool,
    pub first_bad_step: Option<RowProblem>,
}

pub fn validate_row(row: &AppendixRow) -> RowReport {
    let report = |problem: Option<RowProblem>| RowReport {
        n: row.n,
        line: row.line,
        valid: problem.is_none(),
        first_bad_step: problem,
    };
    let (first, last) = match (row.cycle.first(), row.cycle.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return report(Some(RowProblem::Step(BadStep::WrongLength { expected: row.n as usize, found: 0 }))),
    };
    if row.cycle.len() < 2 || first != last {
        return report(Some(RowProblem::NotClosed { first, last }));
    }
    let open = &row.cycle[..row.cycle.len() - 1];
    report(validate_cycle(row.n, open).first_bad_step.map(RowProblem::Step))
}

pub fn validate_appendix(text: &str) -> Result<Vec<RowReport>, Error> {
    Ok(parse_appendix(text)?.iter().map(validate_row).collect())
}

pub fn describe(problem: &RowProblem) -> String {
    match *problem {
        RowProblem::NotClosed { first, last } => format!("not closed: starts at {first}, ends at {last}"),
        RowProblem::Step(BadStep::DuplicateVertex { position, vertex }) => {
            format!("duplicate vertex {vertex} at position {position}")
        }
        RowProblem::Step(BadStep::OutOfRange { position, vertex }) => {
            format!("vertex {vertex} out of range at position {position}")
        }
        RowProblem::Step(BadStep::WrongLength { expected, found }) => {
            format!("{found} distinct vertices, expected {expected}")
        }
        RowProblem::Step(BadStep::NotAdjacent { position, from, to }) => {
            format!("{from} and {to} not adjacent (step {position})")
        }
    }
}
