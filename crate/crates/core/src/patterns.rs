//! Partitions, Gelfand-Tsetlin patterns, enumeration and the dimension formula.
//!
//! Row `k` of a pattern (1-based, `k = 1..=n`) has `k` entries; row `n` is the
//! partition. Entries satisfy the interleaving condition
//! `Λ[k+1][i] ≥ Λ[k][i] ≥ Λ[k+1][i+1]`.
//!
//! Patterns are ordered lexicographically on the entry sequence read
//! `row(1), row(2), …, row(n)`, each row left to right. That order is the
//! canonical basis order used by every matrix in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing integer tuple with last part normalized to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Accepts any weakly decreasing tuple of length ≥ 2 and shifts it so the
    /// last part is zero. Uniform shifts do not change the sl_n module.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::MalformedPartition(format!(
                "need at least 2 parts, got {}",
                parts.len()
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!(
                "parts must be weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        let shift = *parts.last().unwrap();
        Ok(Self {
            parts: parts.into_iter().map(|m| m - shift).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `n(n-1)/2`, the length of a raising exponent vector.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_int_list(s).map_err(Error::MalformedPartition)?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

/// One violated interleaving inequality, or a top-row mismatch (`k = n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub k: usize,
    pub i: usize,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {}", self.k, self.i, self.message)
    }
}

/// A valid Gelfand-Tsetlin pattern.
///
/// The derived `Ord` compares `rows` lexicographically with `row(1)` first,
/// which for patterns of one partition is exactly the canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>, // rows[k - 1] = row(k)
}

impl GtPattern {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row `k`, 1-based.
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - 1]
    }

    /// `Λ[k][i]`, both 1-based.
    pub fn entry(&self, k: usize, i: usize) -> i64 {
        self.rows[k - 1][i - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn partition(&self) -> Partition {
        Partition {
            parts: self.rows[self.n() - 1].clone(),
        }
    }

    pub fn row_sum(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.rows[k - 1].iter().sum()
        }
    }

    /// Sum of all entries below the top row.
    pub fn content(&self) -> i64 {
        (1..self.n()).map(|k| self.row_sum(k)).sum()
    }

    /// The pattern with `Λ[k][i]` moved by `delta`, if that is still valid.
    pub fn shifted(&self, k: usize, i: usize, delta: i64) -> Option<GtPattern> {
        let n = self.n();
        if k == 0 || k >= n || i == 0 || i > k {
            return None;
        }
        let v = self.entry(k, i) + delta;
        let above = &self.rows[k];
        if v > above[i - 1] || v < above[i] {
            return None;
        }
        if k > 1 {
            let below = &self.rows[k - 2];
            if i < k && v < below[i - 1] {
                return None;
            }
            if i >= 2 && v > below[i - 2] {
                return None;
            }
        }
        let mut rows = self.rows.clone();
        rows[k - 1][i - 1] = v;
        Some(GtPattern { rows })
    }

    /// Rows below the top, written `row(n-1); …; row(1)`.
    pub fn lower_rows_string(&self) -> String {
        let mut out = String::new();
        for k in (1..self.n()).rev() {
            if k != self.n() - 1 {
                out.push(';');
            }
            out.push_str(&join_list(&self.rows[k - 1]));
        }
        out
    }

    /// Parses the top-to-bottom text format and validates against `partition`.
    pub fn parse(s: &str, partition: &Partition) -> Result<GtPattern> {
        let mut rows = parse_rows_top_down(s)?;
        rows.reverse();
        validate(&rows, partition)
    }
}

impl fmt::Display for GtPattern {
    /// Top-to-bottom text format, e.g. `2,1,0;2,1;2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, ";")?;
            }
            write_list(f, row)?;
        }
        Ok(())
    }
}

impl FromStr for GtPattern {
    type Err = Error;
    /// Parses and validates, taking the partition from the top row.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = parse_rows_top_down(s)?;
        let top = rows
            .first()
            .cloned()
            .ok_or_else(|| Error::MalformedPattern("empty pattern".into()))?;
        let partition = Partition::new(top.clone())?;
        if partition.parts() != top.as_slice() {
            return Err(Error::MalformedPattern(format!(
                "top row {} is not normalized (last entry must be 0)",
                join_list(&top)
            )));
        }
        rows.reverse();
        validate(&rows, &partition)
    }
}

impl Serialize for GtPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GtPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "{}", join_list(xs))
}

fn join_list(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_int_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err("empty list".into());
    }
    cleaned
        .split(',')
        .map(|t| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

/// Splits the `;`/`,` text format into rows, top row first.
pub fn parse_rows_top_down(s: &str) -> Result<Vec<Vec<i64>>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    cleaned
        .split(';')
        .map(|r| parse_int_list(r).map_err(Error::MalformedPattern))
        .collect()
}

/// Checks a candidate triangular array (`rows[k-1]` = row `k`, bottom row
/// first) against `partition`. Reports every violated position.
pub fn validate(rows: &[Vec<i64>], partition: &Partition) -> Result<GtPattern> {
    let n = partition.n();
    if rows.len() != n {
        return Err(Error::Shape(format!("expected {n} rows, got {}", rows.len())));
    }
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != idx + 1 {
            return Err(Error::Shape(format!(
                "row {} has {} entries, expected {}",
                idx + 1,
                row.len(),
                idx + 1
            )));
        }
    }
    let mut violations = Vec::new();
    for (i, (&got, &want)) in rows[n - 1].iter().zip(partition.parts()).enumerate() {
        if got != want {
            violations.push(Violation {
                k: n,
                i: i + 1,
                message: format!("top row entry {got} differs from partition part {want}"),
            });
        }
    }
    for k in 1..n {
        let (row, above) = (&rows[k - 1], &rows[k]);
        for i in 1..=k {
            let v = row[i - 1];
            let mut msgs = Vec::new();
            if v > above[i - 1] {
                msgs.push(format!("Λ[{}][{i}]={} < Λ[{k}][{i}]={v}", k + 1, above[i - 1]));
            }
            if v < above[i] {
                msgs.push(format!("Λ[{k}][{i}]={v} < Λ[{}][{}]={}", k + 1, i + 1, above[i]));
            }
            if !msgs.is_empty() {
                violations.push(Violation {
                    k,
                    i,
                    message: msgs.join(", "),
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(GtPattern {
            rows: rows.to_vec(),
        })
    } else {
        Err(Error::InvalidPattern(violations))
    }
}

/// All patterns of `partition`, ascending in the canonical order.
pub fn enumerate_patterns(partition: &Partition) -> Vec<GtPattern> {
    let n = partition.n();
    let mut rows: Vec<Vec<i64>> = (1..=n).map(|k| vec![0; k]).collect();
    rows[n - 1] = partition.parts().to_vec();
    let mut out = Vec::new();
    fill(&mut rows, n - 1, 1, &mut out);
    out.sort();
    out
}

// depth-first over rows n-1 down to 1; entry i of row k ranges over
// [Λ[k+1][i+1], Λ[k+1][i]]
fn fill(rows: &mut Vec<Vec<i64>>, k: usize, i: usize, out: &mut Vec<GtPattern>) {
    if k == 0 {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    if i > k {
        fill(rows, k - 1, 1, out);
        return;
    }
    let (lo, hi) = (rows[k][i], rows[k][i - 1]);
    for v in lo..=hi {
        rows[k - 1][i - 1] = v;
        fill(rows, k, i + 1, out);
    }
}

/// `∏_{1≤i≤j≤n-1} (m_i − m_{j+1} + j − i + 1)/(j − i + 1)`.
pub fn dimension(partition: &Partition) -> u64 {
    let m = partition.parts();
    let n = m.len();
    let mut acc = BigRational::one();
    for i in 1..n {
        for j in i..n {
            let num = m[i - 1] - m[j] + (j - i + 1) as i64;
            let den = (j - i + 1) as i64;
            acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
        .to_u64()
        .expect("dimension fits in u64")
}

/// Canonical order on patterns of one partition.
pub fn compare(a: &GtPattern, b: &GtPattern) -> Result<Ordering> {
    if a.n() != b.n() || a.row(a.n()) != b.row(b.n()) {
        return Err(Error::PartitionMismatch);
    }
    Ok(a.cmp(b))
}

/// Every row equal to the partition truncated to its length. This is the
/// maximum of the canonical order.
pub fn highest_pattern(partition: &Partition) -> GtPattern {
    let m = partition.parts();
    GtPattern {
        rows: (1..=m.len()).map(|k| m[..k].to_vec()).collect(),
    }
}

/// The enumerated basis of a module with index lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternBasis {
    partition: Partition,
    patterns: Vec<GtPattern>,
}

impl PatternBasis {
    pub fn new(partition: &Partition) -> Self {
        Self {
            partition: partition.clone(),
            patterns: enumerate_patterns(partition),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn patterns(&self) -> &[GtPattern] {
        &self.patterns
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn index_of(&self, p: &GtPattern) -> Option<usize> {
        self.patterns.binary_search(p).ok()
    }

    pub fn highest_index(&self) -> usize {
        self.patterns.len() - 1
    }
}
