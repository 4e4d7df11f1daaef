//! Matrix Market coordinate export of the floating-point image of a matrix.

use std::fmt::Write;

use crate::operators::{GeneratorSpec, OperatorMatrix};
use crate::patterns::Partition;

/// Entries with magnitude below this are left out of the file.
pub const DROP_BELOW: f64 = 1e-12;

pub fn write_matrix_market(m: &OperatorMatrix, partition: &Partition, spec: GeneratorSpec) -> String {
    let n = m.dim();
    let mut entries = Vec::new();
    for (r, row) in m.to_f64_rows().into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            if v.abs() >= DROP_BELOW {
                entries.push((r + 1, c + 1, v));
            }
        }
    }
    let mut out = String::new();
    out.push_str("%%MatrixMarket matrix coordinate real general\n");
    let _ = writeln!(out, "% partition {partition} generator {spec}");
    let _ = writeln!(out, "{n} {n} {}", entries.len());
    for (r, c, v) in entries {
        let _ = writeln!(out, "{r} {c} {v:.17e}");
    }
    out
}

/// `(row, col, value)`, 1-based.
pub type Entry = (usize, usize, f64);

/// Parses a coordinate file back into `(dim, entries)`.
pub fn read_matrix_market(text: &str) -> Option<(usize, Vec<Entry>)> {
    let mut lines = text.lines().filter(|l| !l.starts_with('%') && !l.trim().is_empty());
    let header: Vec<usize> = lines
        .next()?
        .split_whitespace()
        .map(|t| t.parse().ok())
        .collect::<Option<_>>()?;
    let [rows, cols, nnz] = header[..] else { return None };
    if rows != cols {
        return None;
    }
    let mut entries = Vec::with_capacity(nnz);
    for line in lines {
        let mut it = line.split_whitespace();
        let r = it.next()?.parse().ok()?;
        let c = it.next()?.parse().ok()?;
        let v = it.next()?.parse().ok()?;
        entries.push((r, c, v));
    }
    (entries.len() == nnz).then_some((rows, entries))
}
