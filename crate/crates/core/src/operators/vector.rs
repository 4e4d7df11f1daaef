use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::operators::{act, GeneratorSpec};
use crate::patterns::{GtPattern, Partition, PatternBasis};
use crate::scalars::RadicalScalar;

/// Sparse linear combination of patterns of one partition.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    partition: Partition,
    terms: BTreeMap<GtPattern, RadicalScalar>,
}

impl ModuleVector {
    pub fn zero(partition: &Partition) -> Self {
        Self {
            partition: partition.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `1 · ξ`.
    pub fn basis(pattern: &GtPattern) -> Self {
        let mut v = Self::zero(&pattern.partition());
        v.terms.insert(pattern.clone(), RadicalScalar::one());
        v
    }

    pub fn from_terms<I>(partition: &Partition, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GtPattern, RadicalScalar)>,
    {
        let mut v = Self::zero(partition);
        for (p, c) in terms {
            v.add_term(p, &c)?;
        }
        Ok(v)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    fn check(&self, p: &GtPattern) -> Result<()> {
        if p.n() != self.partition.n() || p.row(p.n()) != self.partition.parts() {
            return Err(Error::PartitionMismatch);
        }
        Ok(())
    }

    /// Adds `c · p`, dropping the entry if it cancels.
    pub fn add_term(&mut self, p: GtPattern, c: &RadicalScalar) -> Result<()> {
        self.check(&p)?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if self.partition != other.partition {
            return Err(Error::PartitionMismatch);
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RadicalScalar) -> ModuleVector {
        let mut out = Self::zero(&self.partition);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(p, x)| (p.clone(), x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        out
    }

    pub fn coefficient(&self, p: &GtPattern) -> RadicalScalar {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GtPattern, &RadicalScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GtPattern> {
        self.terms.keys()
    }

    /// Smallest pattern of the support in the canonical order.
    pub fn min_pattern(&self) -> Option<&GtPattern> {
        self.terms.keys().next()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies one generator, extended linearly.
    pub fn apply(&self, spec: GeneratorSpec) -> Result<ModuleVector> {
        spec.check(self.partition.n())?;
        let mut out = Self::zero(&self.partition);
        for (p, c) in &self.terms {
            for (q, a) in act(spec, p)?.terms {
                out.add_term(q, &(&a * c))?;
            }
        }
        Ok(out)
    }

    /// Coordinates in the canonical basis order.
    pub fn to_dense(&self, basis: &PatternBasis) -> Result<Vec<RadicalScalar>> {
        if basis.partition() != &self.partition {
            return Err(Error::PartitionMismatch);
        }
        let mut out = vec![RadicalScalar::zero(); basis.dim()];
        for (p, c) in &self.terms {
            let idx = basis
                .index_of(p)
                .ok_or_else(|| Error::Internal(format!("pattern {p} missing from basis")))?;
            out[idx] = c.clone();
        }
        Ok(out)
    }

    pub fn from_dense(basis: &PatternBasis, coords: &[RadicalScalar]) -> Result<ModuleVector> {
        if coords.len() != basis.dim() {
            return Err(Error::DimensionMismatch(coords.len(), basis.dim()));
        }
        let mut out = Self::zero(basis.partition());
        for (p, c) in basis.patterns().iter().zip(coords) {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (p, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c.num_terms() > 1 {
                write!(f, "({c})·[{p}]")?;
            } else {
                write!(f, "{c}·[{p}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector({self})")
    }
}
