use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::operators::{act, GeneratorSpec, ModuleVector};
use crate::patterns::{Partition, PatternBasis};
use crate::scalars::RadicalScalar;

/// Dense `D × D` matrix over [`RadicalScalar`]. Column `j` is the image of
/// the `j`-th basis pattern in the canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<RadicalScalar>, // row-major
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![RadicalScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, RadicalScalar::one());
        }
        m
    }

    /// Builds from columns; every column must have length `columns.len()`.
    pub fn from_columns(columns: Vec<Vec<RadicalScalar>>) -> Result<Self> {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (c, col) in columns.into_iter().enumerate() {
            if col.len() != dim {
                return Err(Error::DimensionMismatch(col.len(), dim));
            }
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<RadicalScalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(row.len(), dim));
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &RadicalScalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: RadicalScalar) {
        self.entries[row * self.dim + col] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RadicalScalar]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn column(&self, col: usize) -> Vec<RadicalScalar> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn trace(&self) -> RadicalScalar {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &RadicalScalar) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim;
        // generator matrices are very sparse; walk nonzeros only
        let other_rows: Vec<Vec<(usize, &RadicalScalar)>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| (j, other.get(k, j)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Self::zero(n);
        for i in 0..n {
            for (k, row) in other_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in row {
                    let idx = i * n + j;
                    out.entries[idx] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.dim, idx % self.dim))
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows().take(self.dim).map(|r| r.iter().map(RadicalScalar::to_f64).collect()).collect()
    }

    /// Applies the matrix to a vector in the given basis.
    pub fn apply(&self, basis: &PatternBasis, v: &ModuleVector) -> Result<ModuleVector> {
        if basis.dim() != self.dim {
            return Err(Error::DimensionMismatch(basis.dim(), self.dim));
        }
        let x = v.to_dense(basis)?;
        let y: Vec<RadicalScalar> = (0..self.dim)
            .map(|r| {
                let mut acc = RadicalScalar::zero();
                for (c, xc) in x.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !xc.is_zero() {
                        acc += &(a * xc);
                    }
                }
                acc
            })
            .collect();
        ModuleVector::from_dense(basis, &y)
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OperatorMatrix({}x{})", self.dim, self.dim)?;
        for r in self.rows().take(self.dim) {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `A·B − B·A`.
pub fn commutator(a: &OperatorMatrix, b: &OperatorMatrix) -> Result<OperatorMatrix> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

pub fn operator_matrix_in(spec: GeneratorSpec, basis: &PatternBasis) -> Result<OperatorMatrix> {
    spec.check(basis.partition().n())?;
    let dim = basis.dim();
    let mut m = OperatorMatrix::zero(dim);
    for (col, p) in basis.patterns().iter().enumerate() {
        for (q, c) in act(spec, p)?.terms() {
            let row = basis
                .index_of(q)
                .ok_or_else(|| Error::Internal(format!("image pattern {q} not in basis")))?;
            m.set(row, col, c.clone());
        }
    }
    Ok(m)
}

pub fn operator_matrix(spec: GeneratorSpec, partition: &Partition) -> Result<OperatorMatrix> {
    operator_matrix_in(spec, &PatternBasis::new(partition))
}

/// Matrices of every `E_{i,j}` (`i ≠ j`) and `H_{i,i}` for one partition.
///
/// Non-adjacent elements come from `E_{i,j} = [E_{i,k}, E_{k,j}]` with
/// `k = i ± 1` stepping toward `j`.
#[derive(Clone, Debug)]
pub struct Realization {
    basis: PatternBasis,
    elements: HashMap<(usize, usize), OperatorMatrix>,
}

impl Realization {
    pub fn new(partition: &Partition) -> Result<Self> {
        Self::from_basis(PatternBasis::new(partition))
    }

    pub fn from_basis(basis: PatternBasis) -> Result<Self> {
        let n = basis.partition().n();
        let mut elements = HashMap::new();
        for i in 1..=n {
            elements.insert((i, i), operator_matrix_in(GeneratorSpec::Diag(i), &basis)?);
        }
        for k in 1..n {
            elements.insert((k, k + 1), operator_matrix_in(GeneratorSpec::Raise(k), &basis)?);
            elements.insert((k + 1, k), operator_matrix_in(GeneratorSpec::Lower(k), &basis)?);
        }
        for gap in 2..n {
            for i in 1..=n - gap {
                let j = i + gap;
                let up = commutator(&elements[&(i, i + 1)], &elements[&(i + 1, j)])?;
                let down = commutator(&elements[&(j, j - 1)], &elements[&(j - 1, i)])?;
                elements.insert((i, j), up);
                elements.insert((j, i), down);
            }
        }
        Ok(Self { basis, elements })
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.partition().n()
    }

    /// `E_{i,j}`; for `i = j` this is `H_{i,i}`.
    pub fn element(&self, i: usize, j: usize) -> Result<&OperatorMatrix> {
        self.elements.get(&(i, j)).ok_or(Error::IndexOutOfRange {
            what: "element",
            index: i.max(j),
            n: self.n(),
        })
    }

    pub fn cartan(&self, i: usize) -> Result<OperatorMatrix> {
        GeneratorSpec::Cartan(i).check(self.n())?;
        self.element(i, i)?.try_sub(self.element(i + 1, i + 1)?)
    }

    pub fn generator(&self, spec: GeneratorSpec) -> Result<OperatorMatrix> {
        spec.check(self.n())?;
        match spec {
            GeneratorSpec::Raise(k) => self.element(k, k + 1).cloned(),
            GeneratorSpec::Lower(k) => self.element(k + 1, k).cloned(),
            GeneratorSpec::Diag(i) => self.element(i, i).cloned(),
            GeneratorSpec::Cartan(i) => self.cartan(i),
        }
    }
}

/// `E_{i,j}` for `i ≠ j`.
pub fn general_element(i: usize, j: usize, partition: &Partition) -> Result<OperatorMatrix> {
    let n = partition.n();
    if i == j {
        return Err(Error::Domain(format!(
            "E_{{{i},{j}}} is diagonal; use the diag or cartan generators"
        )));
    }
    for idx in [i, j] {
        if !(1..=n).contains(&idx) {
            return Err(Error::IndexOutOfRange {
                what: "element",
                index: idx,
                n,
            });
        }
    }
    let basis = PatternBasis::new(partition);
    general_element_in(i, j, &basis)
}

fn general_element_in(i: usize, j: usize, basis: &PatternBasis) -> Result<OperatorMatrix> {
    if j == i + 1 {
        return operator_matrix_in(GeneratorSpec::Raise(i), basis);
    }
    if i == j + 1 {
        return operator_matrix_in(GeneratorSpec::Lower(j), basis);
    }
    let k = if i < j { i + 1 } else { i - 1 };
    commutator(
        &general_element_in(i, k, basis)?,
        &general_element_in(k, j, basis)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ints(rows: &[&[i64]]) -> OperatorMatrix {
        OperatorMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| RadicalScalar::from_integer(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sl2_matrices() {
        // basis order: q = 0 then q = 1
        let p = part("1,0");
        let e = operator_matrix(GeneratorSpec::Raise(1), &p).unwrap();
        assert_eq!(e, ints(&[&[0, 0], &[1, 0]]));
        let f = operator_matrix(GeneratorSpec::Lower(1), &p).unwrap();
        assert_eq!(f, ints(&[&[0, 1], &[0, 0]]));
        let h = operator_matrix(GeneratorSpec::Cartan(1), &p).unwrap();
        assert_eq!(h, ints(&[&[-1, 0], &[0, 1]]));
        assert_eq!(commutator(&e, &f).unwrap(), h);
        assert_eq!(e.nonzero_count(), 1);
    }

    #[test]
    fn diag_h33_on_210() {
        let m = operator_matrix(GeneratorSpec::Diag(3), &part("2,1,0")).unwrap();
        let diag: Vec<i64> = (0..8)
            .map(|i| m.get(i, i).as_rational().unwrap().to_integer().try_into().unwrap())
            .collect();
        // canonical order: (1,0;0) (2,0;0) (1,0;1) (1,1;1) (2,0;1) (2,1;1) (2,0;2) (2,1;2)
        assert_eq!(diag, vec![2, 1, 2, 1, 1, 0, 1, 0]);
        assert_eq!(m.nonzero_count(), 6);
    }

    #[test]
    fn commutator_of_self_vanishes() {
        let m = operator_matrix(GeneratorSpec::Raise(2), &part("3,1,0")).unwrap();
        assert!(commutator(&m, &m).unwrap().is_zero());
        let other = OperatorMatrix::identity(3);
        assert_eq!(commutator(&m, &other), Err(Error::DimensionMismatch(15, 3)));
    }

    #[test]
    fn general_elements_match_commutators() {
        let p = part("2,1,0");
        let e12 = operator_matrix(GeneratorSpec::Raise(1), &p).unwrap();
        let e23 = operator_matrix(GeneratorSpec::Raise(2), &p).unwrap();
        let f21 = operator_matrix(GeneratorSpec::Lower(1), &p).unwrap();
        let f32 = operator_matrix(GeneratorSpec::Lower(2), &p).unwrap();
        let e13 = general_element(1, 3, &p).unwrap();
        assert_eq!(e13, commutator(&e12, &e23).unwrap());
        assert!(!e13.is_zero());
        assert_eq!(general_element(3, 1, &p).unwrap(), commutator(&f32, &f21).unwrap());
        assert_eq!(general_element(2, 1, &part("1,0")).unwrap(), operator_matrix(GeneratorSpec::Lower(1), &part("1,0")).unwrap());
        assert!(matches!(general_element(2, 2, &p), Err(Error::Domain(_))));
        assert!(general_element(1, 4, &p).is_err());
    }

    #[test]
    fn realization_agrees_with_recursion() {
        let p = part("2,1,1,0");
        let r = Realization::new(&p).unwrap();
        for i in 1..=4 {
            for j in (1..=4).filter(|&j| j != i) {
                assert_eq!(r.element(i, j).unwrap(), &general_element(i, j, &p).unwrap());
            }
        }
    }

    #[test]
    fn matrix_apply_matches_vector_apply() {
        let p = part("3,1,0");
        let basis = PatternBasis::new(&p);
        let m = operator_matrix_in(GeneratorSpec::Lower(2), &basis).unwrap();
        for xi in basis.patterns() {
            let v = ModuleVector::basis(xi);
            assert_eq!(m.apply(&basis, &v).unwrap(), v.apply(GeneratorSpec::Lower(2)).unwrap());
        }
    }
}
