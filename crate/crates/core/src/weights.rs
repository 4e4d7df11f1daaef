//! Weights of basis patterns: `κ_i` is the `H_{i,i}` eigenvalue.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::patterns::{enumerate_patterns, highest_pattern, GtPattern, Partition};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub kappa: Vec<i64>,
}

impl WeightVector {
    pub fn new(kappa: Vec<i64>) -> Self {
        Self { kappa }
    }

    pub fn n(&self) -> usize {
        self.kappa.len()
    }

    /// Pairings with `H_{i,i} − H_{i+1,i+1}`.
    pub fn fundamental(&self) -> Vec<i64> {
        fundamental_coords(self)
    }

    /// Raw `κ` coefficients in `ε` notation, e.g. `ε_2 + 2ε_3`.
    pub fn epsilon_string(&self) -> String {
        let mut out = String::new();
        for (idx, &c) in self.kappa.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!("ε_{}", idx + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `self + ε_k − ε_{k+1}`.
    pub fn shifted_by_root(&self, k: usize, sign: i64) -> WeightVector {
        let mut kappa = self.kappa.clone();
        kappa[k - 1] += sign;
        kappa[k] -= sign;
        WeightVector { kappa }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.epsilon_string())
    }
}

pub fn weight_of(xi: &GtPattern) -> WeightVector {
    let kappa = (1..=xi.n()).map(|i| xi.row_sum(i) - xi.row_sum(i - 1)).collect();
    WeightVector { kappa }
}

pub fn fundamental_coords(w: &WeightVector) -> Vec<i64> {
    w.kappa.windows(2).map(|p| p[0] - p[1]).collect()
}

pub fn highest_weight(partition: &Partition) -> WeightVector {
    weight_of(&highest_pattern(partition))
}

/// Patterns grouped by weight; each block keeps the canonical order.
pub fn weight_decomposition(partition: &Partition) -> BTreeMap<WeightVector, Vec<GtPattern>> {
    let mut out: BTreeMap<WeightVector, Vec<GtPattern>> = BTreeMap::new();
    for p in enumerate_patterns(partition) {
        out.entry(weight_of(&p)).or_default().push(p);
    }
    out
}
