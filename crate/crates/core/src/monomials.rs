//! Lowering monomials applied to `β`, and exact rank of the resulting family.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::operators::{ModuleVector, OperatorMatrix};
use crate::patterns::{highest_pattern, GtPattern, Partition, PatternBasis};
use crate::raising::{apply_word, raising_word_with, GeneratorWord, Schedule};
use crate::scalars::RadicalScalar;

/// Relative singular-value cutoff for the floating-point rank.
pub const FLOAT_RANK_TOL: f64 = 1e-9;

/// The raising word reversed, with each `E_k` replaced by `F_k`.
pub fn monomial_word(xi: &GtPattern, schedule: &Schedule) -> Result<GeneratorWord> {
    Ok(raising_word_with(xi, schedule)?.mirrored())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialEntry {
    pub pattern: GtPattern,
    pub word: GeneratorWord,
    /// Index of the first earlier entry with the same word.
    pub duplicate_of: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFamily {
    pub basis: PatternBasis,
    pub schedule: Schedule,
    pub entries: Vec<MonomialEntry>,
}

impl MonomialFamily {
    pub fn partition(&self) -> &Partition {
        self.basis.partition()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &GeneratorWord> {
        self.entries.iter().map(|e| &e.word)
    }

    pub fn has_duplicates(&self) -> bool {
        self.entries.iter().any(|e| e.duplicate_of.is_some())
    }

    pub fn distinct_words(&self) -> usize {
        self.entries.iter().filter(|e| e.duplicate_of.is_none()).count()
    }

    /// `(first, repeat)` index pairs.
    pub fn duplicate_pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.duplicate_of.map(|j| (j, i)))
            .collect()
    }

    /// Column `i` is monomial `i` applied to `β`.
    pub fn basis_matrix(&self) -> Result<OperatorMatrix> {
        let beta = ModuleVector::basis(&highest_pattern(self.partition()));
        let columns = self
            .entries
            .iter()
            .map(|e| apply_word(&e.word, &beta)?.to_dense(&self.basis))
            .collect::<Result<Vec<_>>>()?;
        OperatorMatrix::from_columns(columns)
    }
}

pub fn monomial_family(partition: &Partition, schedule: &Schedule) -> Result<MonomialFamily> {
    let basis = PatternBasis::new(partition);
    let mut entries: Vec<MonomialEntry> = Vec::with_capacity(basis.dim());
    for p in basis.patterns() {
        let word = monomial_word(p, schedule)?;
        let duplicate_of = entries
            .iter()
            .position(|e| e.word == word && e.duplicate_of.is_none());
        entries.push(MonomialEntry {
            pattern: p.clone(),
            word,
            duplicate_of,
        });
    }
    Ok(MonomialFamily {
        basis,
        schedule: schedule.clone(),
        entries,
    })
}

pub fn basis_matrix(family: &MonomialFamily) -> Result<OperatorMatrix> {
    family.basis_matrix()
}

/// Gaussian elimination over the radical field.
pub fn exact_rank(m: &OperatorMatrix) -> Result<usize> {
    let n = m.dim();
    let mut rows: Vec<Vec<RadicalScalar>> = m.rows().take(n).map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..n {
        // pivot on the simplest nonzero entry to limit radicand growth
        let pivot = (rank..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].num_terms());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].invert()?;
        let pivot_row: Vec<RadicalScalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in &mut rows[rank + 1..] {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..n {
                if !pivot_row[c].is_zero() {
                    let d = &f * &pivot_row[c];
                    row[c] = &row[c] - &d;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    Ok(rank)
}

/// Numerical rank: singular values above `FLOAT_RANK_TOL · σ_max`.
pub fn float_rank(m: &OperatorMatrix) -> usize {
    let n = m.dim();
    if n == 0 {
        return 0;
    }
    let data = m.to_f64_rows();
    let dm = DMatrix::from_fn(n, n, |r, c| data[r][c]);
    let sv = dm.singular_values();
    let smax = sv.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > FLOAT_RANK_TOL * smax).count()
}

/// Exact rank, cross-checked against the floating-point rank.
pub fn rank(m: &OperatorMatrix) -> Result<usize> {
    let exact = exact_rank(m)?;
    let float = float_rank(m);
    if exact != float {
        return Err(Error::Internal(format!(
            "exact rank {exact} disagrees with floating-point rank {float}"
        )));
    }
    Ok(exact)
}
