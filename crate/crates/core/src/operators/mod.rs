//! Actions of the sl_n generators on patterns and their matrix realization.
//!
//! `E_k` raises one entry of row `k`, `F_k` lowers one, and `H_i` acts
//! diagonally by `Σ row(i) − Σ row(i−1)`. The raising and lowering
//! coefficients are the square roots of
//!
//! ```text
//! a_j² = − ∏_{i=1}^{k+1}(l[i][k+1] − l[j][k]) ∏_{i=1}^{k−1}(l[i][k−1] − l[j][k] − 1)
//!          / ∏_{i≠j}(l[i][k] − l[j][k])(l[i][k] − l[j][k] − 1)
//! b_j² = − ∏_{i=1}^{k+1}(l[i][k+1] − l[j][k] + 1) ∏_{i=1}^{k−1}(l[i][k−1] − l[j][k])
//!          / ∏_{i≠j}(l[i][k] − l[j][k] + 1)(l[i][k] − l[j][k])
//! ```
//!
//! with shifted entries `l[i][r] = Λ[r][i] − i`. For a valid target the
//! numerator has an odd number of negative factors and the denominator is
//! positive, so the leading minus sign makes every radicand positive.

mod matrix;
mod relations;
mod vector;

use std::fmt;

use num::{BigInt, One};

pub use matrix::{
    commutator, general_element, operator_matrix, operator_matrix_in, OperatorMatrix, Realization,
};
pub use relations::{verify_sln_relations, Mismatch, RelationCheck, RelationReport};
pub use vector::ModuleVector;

use crate::error::{Error, Result};
use crate::patterns::GtPattern;
use crate::scalars::{sqrt_rational, RadicalScalar, Rational};

/// Which generator to realize.
///
/// `Raise(k)` is `E_{k,k+1}`, `Lower(k)` is `F_{k+1,k}`, `Diag(i)` is
/// `H_{i,i}` and `Cartan(i)` is `H_{i,i} − H_{i+1,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSpec {
    Raise(usize),
    Lower(usize),
    Diag(usize),
    Cartan(usize),
}

impl GeneratorSpec {
    pub fn index(&self) -> usize {
        match *self {
            Self::Raise(k) | Self::Lower(k) | Self::Diag(k) | Self::Cartan(k) => k,
        }
    }

    /// Short generator family name: `E`, `F`, `H` or `cartan`.
    pub fn family(&self) -> &'static str {
        match self {
            Self::Raise(_) => "E",
            Self::Lower(_) => "F",
            Self::Diag(_) => "H",
            Self::Cartan(_) => "cartan",
        }
    }

    pub fn from_family(family: &str, index: usize) -> Result<Self> {
        match family {
            "E" | "e" => Ok(Self::Raise(index)),
            "F" | "f" => Ok(Self::Lower(index)),
            "H" | "h" => Ok(Self::Diag(index)),
            "cartan" | "C" => Ok(Self::Cartan(index)),
            other => Err(Error::Domain(format!("unknown generator {other:?}"))),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let (what, ok) = match *self {
            Self::Raise(k) => ("raise", (1..n).contains(&k)),
            Self::Lower(k) => ("lower", (1..n).contains(&k)),
            Self::Diag(i) => ("diag", (1..=n).contains(&i)),
            Self::Cartan(i) => ("cartan", (1..n).contains(&i)),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what,
                index: self.index(),
                n,
            })
        }
    }

    /// The generator with the opposite root (`E_k ↔ F_k`); diagonal ones are fixed.
    pub fn mirror(&self) -> Self {
        match *self {
            Self::Raise(k) => Self::Lower(k),
            Self::Lower(k) => Self::Raise(k),
            other => other,
        }
    }
}

fn pair(a: usize, b: usize) -> String {
    if a < 10 && b < 10 {
        format!("{a}{b}")
    } else {
        format!("{a},{b}")
    }
}

impl fmt::Display for GeneratorSpec {
    /// `E12`, `F12` (lowering on row 1), `H11`, `C1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Raise(k) => write!(f, "E{}", pair(k, k + 1)),
            Self::Lower(k) => write!(f, "F{}", pair(k, k + 1)),
            Self::Diag(i) => write!(f, "H{}", pair(i, i)),
            Self::Cartan(i) => write!(f, "C{i}"),
        }
    }
}

fn l(p: &GtPattern, row: usize, i: usize) -> i64 {
    p.entry(row, i) - i as i64
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `a_j²` for raising `Λ[k][j]`; the target must already be known valid.
fn raise_radicand(p: &GtPattern, k: usize, j: usize) -> Result<Rational> {
    let lj = l(p, k, j);
    let mut num = BigInt::one();
    for i in 1..=k + 1 {
        num *= int(l(p, k + 1, i) - lj);
    }
    for i in 1..k {
        num *= int(l(p, k - 1, i) - lj - 1);
    }
    let mut den = BigInt::one();
    for i in (1..=k).filter(|&i| i != j) {
        let d = l(p, k, i) - lj;
        den *= int(d) * int(d - 1);
    }
    finish_radicand(num, den, "raise", p, k, j)
}

/// `b_j²` for lowering `Λ[k][j]`.
fn lower_radicand(p: &GtPattern, k: usize, j: usize) -> Result<Rational> {
    let lj = l(p, k, j);
    let mut num = BigInt::one();
    for i in 1..=k + 1 {
        num *= int(l(p, k + 1, i) - lj + 1);
    }
    for i in 1..k {
        num *= int(l(p, k - 1, i) - lj);
    }
    let mut den = BigInt::one();
    for i in (1..=k).filter(|&i| i != j) {
        let d = l(p, k, i) - lj;
        den *= int(d + 1) * int(d);
    }
    finish_radicand(num, den, "lower", p, k, j)
}

fn finish_radicand(
    num: BigInt,
    den: BigInt,
    what: &str,
    p: &GtPattern,
    k: usize,
    j: usize,
) -> Result<Rational> {
    if den == BigInt::from(0) {
        return Err(Error::Internal(format!(
            "{what} coefficient at ({k},{j}) of {p} has zero denominator"
        )));
    }
    let r = -Rational::new(num, den);
    if r <= Rational::from_integer(BigInt::from(0)) {
        return Err(Error::Internal(format!(
            "{what} coefficient at ({k},{j}) of {p} has nonpositive radicand {r}"
        )));
    }
    Ok(r)
}

fn check_row(what: &'static str, k: usize, n: usize) -> Result<()> {
    if (1..n).contains(&k) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { what, index: k, n })
    }
}

/// `E_{k,k+1} · ξ`.
pub fn act_raise(k: usize, xi: &GtPattern) -> Result<ModuleVector> {
    check_row("raise", k, xi.n())?;
    let mut out = ModuleVector::zero(&xi.partition());
    for j in 1..=k {
        // invalid targets are skipped before the formula is touched
        if let Some(target) = xi.shifted(k, j, 1) {
            let c = sqrt_rational(&raise_radicand(xi, k, j)?)?;
            out.add_term(target, &c)?;
        }
    }
    Ok(out)
}

/// `F_{k+1,k} · ξ`.
pub fn act_lower(k: usize, xi: &GtPattern) -> Result<ModuleVector> {
    check_row("lower", k, xi.n())?;
    let mut out = ModuleVector::zero(&xi.partition());
    for j in 1..=k {
        if let Some(target) = xi.shifted(k, j, -1) {
            let c = sqrt_rational(&lower_radicand(xi, k, j)?)?;
            out.add_term(target, &c)?;
        }
    }
    Ok(out)
}

/// Eigenvalue of `H_{i,i}` on `ξ`: `Σ row(i) − Σ row(i−1)`.
pub fn act_diag(i: usize, xi: &GtPattern) -> Result<i64> {
    let n = xi.n();
    if !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange {
            what: "diag",
            index: i,
            n,
        });
    }
    Ok(xi.row_sum(i) - xi.row_sum(i - 1))
}

/// Action of any generator on a single pattern.
pub fn act(spec: GeneratorSpec, xi: &GtPattern) -> Result<ModuleVector> {
    spec.check(xi.n())?;
    match spec {
        GeneratorSpec::Raise(k) => act_raise(k, xi),
        GeneratorSpec::Lower(k) => act_lower(k, xi),
        GeneratorSpec::Diag(i) => {
            let e = act_diag(i, xi)?;
            Ok(ModuleVector::basis(xi).scale(&RadicalScalar::from_integer(e)))
        }
        GeneratorSpec::Cartan(i) => {
            let e = act_diag(i, xi)? - act_diag(i + 1, xi)?;
            Ok(ModuleVector::basis(xi).scale(&RadicalScalar::from_integer(e)))
        }
    }
}
