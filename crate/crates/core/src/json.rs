//! JSON documents emitted by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::monomials::{rank, MonomialFamily};
use crate::operators::{GeneratorSpec, OperatorMatrix};
use crate::patterns::{GtPattern, Partition};
use crate::raising::{ExponentVector, GeneratorWord, Schedule};
use crate::scalars::RadicalScalar;
use crate::weights::{weight_of, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub partition: Vec<i64>,
    pub generator: String,
    pub index: usize,
    pub dim: usize,
    pub entries: Vec<Vec<RadicalScalar>>,
}

impl MatrixDoc {
    pub fn new(partition: &Partition, spec: GeneratorSpec, m: &OperatorMatrix) -> Self {
        Self {
            partition: partition.parts().to_vec(),
            generator: spec.family().to_string(),
            index: spec.index(),
            dim: m.dim(),
            entries: m.rows().take(m.dim()).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<OperatorMatrix> {
        OperatorMatrix::from_rows(self.entries.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDoc {
    pub kappa: Vec<i64>,
    pub fundamental: Vec<i64>,
    pub epsilon_string: String,
}

impl From<&WeightVector> for WeightDoc {
    fn from(w: &WeightVector) -> Self {
        Self {
            kappa: w.kappa.clone(),
            fundamental: w.fundamental(),
            epsilon_string: w.epsilon_string(),
        }
    }
}

/// One enumerated pattern with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDoc {
    pub index: usize,
    pub pattern: GtPattern,
    pub kappa: Vec<i64>,
    pub fundamental: Vec<i64>,
    pub epsilon_string: String,
}

impl PatternDoc {
    pub fn new(index: usize, p: &GtPattern) -> Self {
        let w = weight_of(p);
        Self {
            index,
            pattern: p.clone(),
            fundamental: w.fundamental(),
            epsilon_string: w.epsilon_string(),
            kappa: w.kappa,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntryDoc {
    pub pattern: GtPattern,
    /// Written-order text, e.g. `F12^2 F23^1 F12^0`.
    pub word: String,
    pub duplicate_of: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub partition: Vec<i64>,
    pub schedule: Schedule,
    pub entries: Vec<FamilyEntryDoc>,
    pub rank: usize,
    pub is_basis: bool,
}

impl FamilyDoc {
    /// Computes the rank of the family's basis matrix.
    pub fn new(family: &MonomialFamily) -> Result<Self> {
        let r = rank(&family.basis_matrix()?)?;
        Ok(Self {
            partition: family.partition().parts().to_vec(),
            schedule: family.schedule.clone(),
            entries: family
                .entries
                .iter()
                .map(|e| FamilyEntryDoc {
                    pattern: e.pattern.clone(),
                    word: e.word.to_string(),
                    duplicate_of: e.duplicate_of,
                })
                .collect(),
            rank: r,
            is_basis: r == family.len(),
        })
    }

    pub fn distinct_words(&self) -> usize {
        self.entries.iter().filter(|e| e.duplicate_of.is_none()).count()
    }
}

/// Output of the `raise` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaiseDoc {
    pub pattern: GtPattern,
    pub word: String,
    pub factors: GeneratorWord,
    /// Exponents in written order.
    pub exponents: Vec<u32>,
    pub lambda: RadicalScalar,
}

impl RaiseDoc {
    pub fn new(pattern: &GtPattern, exps: &ExponentVector, lambda: RadicalScalar) -> Self {
        let word = exps.raising_word();
        Self {
            pattern: pattern.clone(),
            word: word.to_string(),
            factors: word,
            exponents: exps.written(),
            lambda,
        }
    }
}
