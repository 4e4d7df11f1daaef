use serde::Serialize;

use crate::error::Result;
use crate::operators::{commutator, OperatorMatrix, Realization};
use crate::patterns::Partition;
use crate::scalars::RadicalScalar;

/// First differing entry of a failed relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub expected: RadicalScalar,
    pub actual: RadicalScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub partition: Vec<i64>,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn label(i: usize, j: usize) -> String {
    let sym = if i == j { 'H' } else { 'E' };
    if i >= 10 || j >= 10 {
        format!("{sym}{i},{j}")
    } else {
        format!("{sym}{i}{j}")
    }
}

fn compare(name: String, actual: &OperatorMatrix, expected: &OperatorMatrix) -> RelationCheck {
    let mismatch = actual.first_difference(expected).map(|(row, col)| Mismatch {
        row,
        col,
        expected: expected.get(row, col).clone(),
        actual: actual.get(row, col).clone(),
    });
    RelationCheck {
        name,
        passed: mismatch.is_none(),
        mismatch,
    }
}

fn trace_check(name: String, m: &OperatorMatrix) -> RelationCheck {
    let t = m.trace();
    let passed = t.is_zero();
    RelationCheck {
        name,
        passed,
        mismatch: (!passed).then(|| Mismatch {
            row: 0,
            col: 0,
            expected: RadicalScalar::zero(),
            actual: t,
        }),
    }
}

/// Exact check of the defining bracket relations of `gl_n` restricted to the
/// realization, plus the Cartan weight shifts and zero traces.
pub fn verify_sln_relations(partition: &Partition) -> Result<RelationReport> {
    let r = Realization::new(partition)?;
    let n = r.n();
    let dim = r.basis().dim();
    let zero = OperatorMatrix::zero(dim);
    let off: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut checks = Vec::new();

    for &(i, j) in &off {
        let eij = r.element(i, j)?;
        // [E_ij, E_jl] = E_il
        for l in (1..=n).filter(|&l| l != i && l != j) {
            let lhs = commutator(eij, r.element(j, l)?)?;
            checks.push(compare(
                format!("[{},{}]={}", label(i, j), label(j, l), label(i, l)),
                &lhs,
                r.element(i, l)?,
            ));
        }
        // [E_ij, E_ji] = H_ii - H_jj
        if i < j {
            let lhs = commutator(eij, r.element(j, i)?)?;
            let rhs = r.element(i, i)?.try_sub(r.element(j, j)?)?;
            checks.push(compare(
                format!("[{},{}]={}-{}", label(i, j), label(j, i), label(i, i), label(j, j)),
                &lhs,
                &rhs,
            ));
        }
        // [E_ij, E_kl] = 0 when j != k and i != l
        for &(k, l) in &off {
            if (k, l) <= (i, j) || j == k || i == l {
                continue;
            }
            let lhs = commutator(eij, r.element(k, l)?)?;
            checks.push(compare(format!("[{},{}]=0", label(i, j), label(k, l)), &lhs, &zero));
        }
    }

    // [H_aa, E_jk] = (δ_aj − δ_ak) E_jk and the Cartan version
    for a in 1..=n {
        let h = r.element(a, a)?;
        for &(j, k) in &off {
            let e = r.element(j, k)?;
            let c = i64::from(a == j) - i64::from(a == k);
            checks.push(compare(
                format!("[{},{}]={c}·{}", label(a, a), label(j, k), label(j, k)),
                &commutator(h, e)?,
                &e.scale(&RadicalScalar::from_integer(c)),
            ));
        }
        for b in a + 1..=n {
            checks.push(compare(
                format!("[{},{}]=0", label(a, a), label(b, b)),
                &commutator(h, r.element(b, b)?)?,
                &zero,
            ));
        }
    }
    for a in 1..n {
        let h = r.cartan(a)?;
        for &(j, k) in &off {
            let e = r.element(j, k)?;
            let c = i64::from(a == j) - i64::from(a == k) - i64::from(a + 1 == j)
                + i64::from(a + 1 == k);
            checks.push(compare(
                format!("[C{a},{}]={c}·{}", label(j, k), label(j, k)),
                &commutator(&h, e)?,
                &e.scale(&RadicalScalar::from_integer(c)),
            ));
        }
        checks.push(trace_check(format!("tr C{a}=0"), &h));
    }
    for &(i, j) in &off {
        checks.push(trace_check(format!("tr {}=0", label(i, j)), r.element(i, j)?));
    }

    Ok(RelationReport {
        partition: partition.parts().to_vec(),
        checks,
    })
}
