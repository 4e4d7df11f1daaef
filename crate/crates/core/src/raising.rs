//! Raising words: every basis pattern is sent to a nonzero multiple of the
//! highest pattern `β` by an interleaved product of `E_{k,k+1}` powers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomials::{monomial_family, rank};
use crate::operators::{GeneratorSpec, ModuleVector};
use crate::patterns::{enumerate_patterns, highest_pattern, GtPattern, Partition};
use crate::scalars::RadicalScalar;

/// Exponents in application order (`a[0]` is applied first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    pub rows: Vec<usize>,
    pub a: Vec<u32>,
}

impl ExponentVector {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.a.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&e| e == 0)
    }

    /// Exponents in written order, as they appear left to right in the word.
    pub fn written(&self) -> Vec<u32> {
        self.a.iter().rev().copied().collect()
    }

    pub fn raising_word(&self) -> GeneratorWord {
        GeneratorWord::from_application(
            self.rows.iter().zip(&self.a).map(|(&k, &e)| (GeneratorSpec::Raise(k), e)),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordFactor {
    pub generator: GeneratorSpec,
    pub exponent: u32,
}

/// Product of generator powers in written order; the rightmost factor acts
/// first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    pub factors: Vec<WordFactor>,
}

impl GeneratorWord {
    pub fn new(factors: Vec<WordFactor>) -> Self {
        Self { factors }
    }

    /// Builds from factors listed in the order they act.
    pub fn from_application<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (GeneratorSpec, u32)>,
    {
        let mut factors: Vec<WordFactor> = factors
            .into_iter()
            .map(|(generator, exponent)| WordFactor { generator, exponent })
            .collect();
        factors.reverse();
        Self { factors }
    }

    pub fn total_exponent(&self) -> u64 {
        self.factors.iter().map(|f| u64::from(f.exponent)).sum()
    }

    /// Reverses factor order and swaps `E_k ↔ F_k`, keeping exponents.
    pub fn mirrored(&self) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|f| WordFactor {
                    generator: f.generator.mirror(),
                    exponent: f.exponent,
                })
                .collect(),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.factors.iter().try_for_each(|f| f.generator.check(n))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", factor.generator, factor.exponent)?;
        }
        Ok(())
    }
}

fn parse_generator(tok: &str) -> Result<GeneratorSpec> {
    let bad = || Error::MalformedWord(format!("bad generator {tok:?}"));
    let mut chars = tok.chars();
    let family = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str();
    let (a, b): (usize, usize) = if let Some((a, b)) = rest.split_once(',') {
        (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
    } else if rest.len() == 2 && rest.bytes().all(|c| c.is_ascii_digit()) {
        let d = rest.as_bytes();
        (usize::from(d[0] - b'0'), usize::from(d[1] - b'0'))
    } else {
        return Err(bad());
    };
    if b != a + 1 || a == 0 {
        return Err(bad());
    }
    match family {
        'E' => Ok(GeneratorSpec::Raise(a)),
        'F' => Ok(GeneratorSpec::Lower(a)),
        _ => Err(bad()),
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Accepts `E12^0 E23^1 E12^2`; a missing exponent means 1 and `1` is
    /// the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Self::default());
        }
        let factors = s
            .split_whitespace()
            .map(|tok| {
                let (g, e) = tok.split_once('^').unwrap_or((tok, "1"));
                let exponent = e
                    .parse()
                    .map_err(|_| Error::MalformedWord(format!("bad exponent in {tok:?}")))?;
                Ok(WordFactor {
                    generator: parse_generator(g)?,
                    exponent,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { factors })
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    gen: String,
    row: usize,
    exp: u32,
}

impl Serialize for GeneratorWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<FactorJson> = self
            .factors
            .iter()
            .map(|f| FactorJson {
                gen: f.generator.family().to_string(),
                row: f.generator.index(),
                exp: f.exponent,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<FactorJson>::deserialize(d)?;
        let factors = raw
            .into_iter()
            .map(|f| {
                let generator = match f.gen.as_str() {
                    "E" => GeneratorSpec::Raise(f.row),
                    "F" => GeneratorSpec::Lower(f.row),
                    other => return Err(serde::de::Error::custom(format!("bad gen {other:?}"))),
                };
                if f.row == 0 {
                    return Err(serde::de::Error::custom("row must be positive"));
                }
                Ok(WordFactor {
                    generator,
                    exponent: f.exp,
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self { factors })
    }
}

/// Order in which rows are raised.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Sweeps `1..n−1`, `1..n−2`, …, `1`.
    Canonical,
    /// `n = 3` only: rows 2, 1, 2.
    Alternate,
    /// Explicit rows in application order.
    Custom(Vec<usize>),
}

impl Schedule {
    pub fn rows(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            Schedule::Canonical => Ok((1..n).flat_map(|s| 1..=n - s).collect()),
            Schedule::Alternate if n == 3 => Ok(vec![2, 1, 2]),
            Schedule::Alternate => Err(Error::UnsupportedSchedule(format!(
                "the alternate schedule is defined for n = 3 only, got n = {n}"
            ))),
            Schedule::Custom(rows) => {
                for &k in rows {
                    GeneratorSpec::Raise(k).check(n)?;
                }
                Ok(rows.clone())
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Schedule::Canonical => "canonical".into(),
            Schedule::Alternate => "alternate".into(),
            Schedule::Custom(rows) => {
                let r: Vec<String> = rows.iter().map(|k| k.to_string()).collect();
                format!("custom:{}", r.join(","))
            }
        }
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "canonical" => Ok(Schedule::Canonical),
            "alternate" => Ok(Schedule::Alternate),
            other => {
                let body = other.strip_prefix("custom:").ok_or_else(|| {
                    Error::UnsupportedSchedule(format!("unknown schedule {other:?}"))
                })?;
                let rows = body
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| {
                            Error::UnsupportedSchedule(format!("bad row {t:?} in schedule"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Schedule::Custom(rows))
            }
        }
    }
}

impl Serialize for Schedule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Schedule {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical exponents by the sweep: raising row `k` all the way to the
/// truncation of row `k+1`.
pub fn raising_exponents(xi: &GtPattern) -> ExponentVector {
    let n = xi.n();
    let mut rows: Vec<Vec<i64>> = xi.rows().to_vec();
    let mut schedule = Vec::with_capacity(n * (n - 1) / 2);
    let mut a = Vec::with_capacity(n * (n - 1) / 2);
    for s in 1..n {
        for k in 1..=n - s {
            let upper = &rows[k];
            let lower = &rows[k - 1];
            let e: i64 = (0..k).map(|i| upper[i] - lower[i]).sum();
            a.push(u32::try_from(e).expect("interleaving keeps exponents nonnegative"));
            schedule.push(k);
            rows[k - 1] = upper[..k].to_vec();
        }
    }
    ExponentVector { rows: schedule, a }
}

/// Exponents for any schedule: each step raises row `k` as far as the
/// interleaving conditions allow against the current rows `k±1`.
pub fn raising_exponents_with(xi: &GtPattern, schedule: &Schedule) -> Result<ExponentVector> {
    let n = xi.n();
    let order = schedule.rows(n)?;
    let mut rows: Vec<Vec<i64>> = xi.rows().to_vec();
    let mut a = Vec::with_capacity(order.len());
    for &k in &order {
        let mut e = 0i64;
        for j in 0..k {
            let mut cap = rows[k][j];
            if k >= 2 && j >= 1 {
                cap = cap.min(rows[k - 2][j - 1]);
            }
            let cur = rows[k - 1][j];
            if cap > cur {
                e += cap - cur;
                rows[k - 1][j] = cap;
            }
        }
        a.push(u32::try_from(e).expect("raising never lowers an entry"));
    }
    Ok(ExponentVector { rows: order, a })
}

pub fn raising_word(xi: &GtPattern) -> GeneratorWord {
    raising_exponents(xi).raising_word()
}

pub fn raising_word_with(xi: &GtPattern, schedule: &Schedule) -> Result<GeneratorWord> {
    Ok(raising_exponents_with(xi, schedule)?.raising_word())
}

pub fn apply_word(word: &GeneratorWord, v: &ModuleVector) -> Result<ModuleVector> {
    word.check(v.partition().n())?;
    let mut out = v.clone();
    for f in word.factors.iter().rev() {
        for _ in 0..f.exponent {
            if out.is_zero() {
                return Ok(out);
            }
            out = out.apply(f.generator)?;
        }
    }
    Ok(out)
}

/// Coefficient of `β` when `v` is a nonzero multiple of it.
fn beta_multiple(v: &ModuleVector, beta: &GtPattern) -> Option<RadicalScalar> {
    match (v.len(), v.min_pattern()) {
        (1, Some(p)) if p == beta => Some(v.coefficient(beta)),
        _ => None,
    }
}

pub fn verify_raise(xi: &GtPattern) -> Result<RadicalScalar> {
    verify_raise_with(xi, &Schedule::Canonical)
}

pub fn verify_raise_with(xi: &GtPattern, schedule: &Schedule) -> Result<RadicalScalar> {
    let word = raising_word_with(xi, schedule)?;
    let image = apply_word(&word, &ModuleVector::basis(xi))?;
    let beta = highest_pattern(&xi.partition());
    beta_multiple(&image, &beta).ok_or_else(|| {
        Error::Certification(format!("{word} sends {xi} to {image}, not a multiple of β"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RaiseOutcome {
    Highest {
        lambda: RadicalScalar,
        word: GeneratorWord,
    },
    /// The minimal pattern's word left more than `β` behind.
    Residual {
        word: GeneratorWord,
        image: ModuleVector,
    },
}

impl RaiseOutcome {
    pub fn word(&self) -> &GeneratorWord {
        match self {
            RaiseOutcome::Highest { word, .. } | RaiseOutcome::Residual { word, .. } => word,
        }
    }

    pub fn lambda(&self) -> Option<&RadicalScalar> {
        match self {
            RaiseOutcome::Highest { lambda, .. } => Some(lambda),
            RaiseOutcome::Residual { .. } => None,
        }
    }
}

/// Applies the word of the smallest pattern in the support of `v`.
pub fn raise_sum_to_highest(v: &ModuleVector) -> Result<RaiseOutcome> {
    let xi = v
        .min_pattern()
        .ok_or_else(|| Error::Domain("cannot raise the zero vector".into()))?;
    let word = raising_word(xi);
    let image = apply_word(&word, v)?;
    let beta = highest_pattern(v.partition());
    Ok(match beta_multiple(&image, &beta) {
        Some(lambda) => RaiseOutcome::Highest { lambda, word },
        None => RaiseOutcome::Residual { word, image },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaiseFailure {
    pub pattern: GtPattern,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub partition: Vec<i64>,
    pub dim: usize,
    pub raised: usize,
    pub failures: Vec<RaiseFailure>,
    pub rank: usize,
}

impl SimplicityReport {
    pub fn certified(&self) -> bool {
        self.failures.is_empty() && self.raised == self.dim && self.rank == self.dim
    }
}

/// Every pattern raises to `β` and the canonical monomials span.
pub fn simplicity_certificate(partition: &Partition) -> Result<SimplicityReport> {
    let patterns = enumerate_patterns(partition);
    let mut failures = Vec::new();
    for p in &patterns {
        match verify_raise(p) {
            Ok(_) => {}
            Err(Error::Certification(reason)) => failures.push(RaiseFailure {
                pattern: p.clone(),
                reason,
            }),
            Err(e) => return Err(e),
        }
    }
    let family = monomial_family(partition, &Schedule::Canonical)?;
    let r = rank(&family.basis_matrix()?)?;
    Ok(SimplicityReport {
        partition: partition.parts().to_vec(),
        dim: patterns.len(),
        raised: patterns.len() - failures.len(),
        failures,
        rank: r,
    })
}
