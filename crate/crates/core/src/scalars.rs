//! Exact arithmetic in the field of rational linear combinations of square
//! roots of squarefree positive integers.
//!
//! A [`RadicalScalar`] is stored as a sorted list of `(radicand, coefficient)`
//! pairs with squarefree radicands and nonzero rational coefficients. Square
//! roots of distinct squarefree integers are linearly independent over the
//! rationals, so structural equality of that list is value equality.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Writes `n = s² · d` with `d` squarefree. Returns `(s, d)`.
///
/// Trial division; inputs are small products of pattern-entry differences.
pub fn squarefree_decompose(n: u64) -> (u64, u64) {
    assert!(n >= 1, "squarefree_decompose requires n >= 1");
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p <= rest / p {
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever is left is 1 or a prime
    (square, free * rest)
}

/// Prime divisors of a squarefree integer, ascending.
fn prime_divisors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= d / p {
        if d.is_multiple_of(p) {
            out.push(p);
            while d.is_multiple_of(p) {
                d /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Exact value `Σ c_d · √d`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    // sorted by radicand, squarefree keys, nonzero coefficients
    terms: Vec<(u64, Rational)>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(1, r)] }
        }
    }

    /// `coeff · √radicand`, with the radicand reduced to squarefree form.
    pub fn term(coeff: Rational, radicand: u64) -> Self {
        if radicand == 0 || coeff.is_zero() {
            return Self::zero();
        }
        let (s, d) = squarefree_decompose(radicand);
        Self {
            terms: vec![(d, coeff * BigInt::from(s))],
        }
    }

    /// `√radicand`.
    pub fn sqrt_of(radicand: u64) -> Self {
        Self::term(Rational::one(), radicand)
    }

    /// Builds a canonical value from an arbitrary radicand map; keys need not
    /// be squarefree.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (d, c) in terms {
            if d == 0 || c.is_zero() {
                continue;
            }
            let (s, free) = squarefree_decompose(d);
            *acc.entry(free).or_insert_with(Rational::zero) += c * BigInt::from(s);
        }
        Self::from_canonical_map(acc)
    }

    fn from_canonical_map(map: BTreeMap<u64, Rational>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Iterates `(radicand, coefficient)` in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (*d, c * r)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Negates every term whose radicand is divisible by `p`. For a prime `p`
    /// this is a field automorphism.
    fn conjugate_at(&self, p: u64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| if d % p == 0 { (*d, -c) } else { (*d, c.clone()) })
                .collect(),
        }
    }

    /// Multiplicative inverse by iterated conjugation: each round multiplies
    /// by the conjugate at one prime of the denominator, which removes that
    /// prime from every radicand of the denominator.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut numerator = Self::one();
        let mut denominator = self.clone();
        loop {
            if let Some(r) = denominator.as_rational() {
                return Ok(numerator.scale(&r.recip()));
            }
            let p = denominator
                .terms
                .iter()
                .filter(|(d, _)| *d > 1)
                .flat_map(|(d, _)| prime_divisors(*d))
                .min()
                .expect("irrational value has a radicand > 1");
            let conj = denominator.conjugate_at(p);
            numerator = &numerator * &conj;
            denominator = &denominator * &conj;
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.invert()?)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| rational_to_f64(c) * (*d as f64).sqrt())
            .sum()
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    })
}

/// Square root of a nonnegative rational, with the denominator rationalized:
/// `√(p/q) = (s/q)·√d` where `p·q = s²·d`.
pub fn sqrt_rational(r: &Rational) -> Result<RadicalScalar> {
    if r.is_negative() {
        return Err(Error::NegativeRadicand(r.to_string()));
    }
    if r.is_zero() {
        return Ok(RadicalScalar::zero());
    }
    let prod = r.numer() * r.denom();
    let n = prod
        .to_u64()
        .ok_or_else(|| Error::RadicandOverflow(prod.to_string()))?;
    let (s, d) = squarefree_decompose(n);
    let coeff = Rational::new(BigInt::from(s), r.denom().clone());
    Ok(RadicalScalar::term(coeff, d))
}

fn merge_add(a: &[(u64, Rational)], b: &[(u64, Rational)]) -> Vec<(u64, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &a[i].1 + &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Add<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        RadicalScalar {
            terms: merge_add(&self.terms, &rhs.terms),
        }
    }
}

impl Add for RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: RadicalScalar) -> RadicalScalar {
        &self + &rhs
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        if rhs.is_zero() {
            return;
        }
        self.terms = merge_add(&self.terms, &rhs.terms);
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        -&self
    }
}

impl Sub<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        self + &(-rhs)
    }
}

impl Sub for RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: RadicalScalar) -> RadicalScalar {
        &self - &rhs
    }
}

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        if self.is_zero() || rhs.is_zero() {
            return RadicalScalar::zero();
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                // √d1·√d2 = g·√((d1/g)(d2/g)) with g = gcd(d1, d2)
                let g = d1.gcd(d2);
                let d = (d1 / g)
                    .checked_mul(d2 / g)
                    .expect("radicand product overflows u64");
                let c = c1 * c2 * BigInt::from(g);
                *acc.entry(d).or_insert_with(Rational::zero) += c;
            }
        }
        RadicalScalar::from_canonical_map(acc)
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}

impl<'a> Sum<&'a RadicalScalar> for RadicalScalar {
    fn sum<I: Iterator<Item = &'a RadicalScalar>>(iter: I) -> Self {
        let mut acc = RadicalScalar::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl From<i64> for RadicalScalar {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (d, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            match (*d, mag.is_integer()) {
                (1, _) => write!(f, "{mag}")?,
                (_, true) if mag.is_one() => write!(f, "√{d}")?,
                (_, true) => write!(f, "{mag}√{d}")?,
                (_, false) => write!(f, "({mag})√{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalScalar({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    radicand: u64,
    num: String,
    den: String,
}

impl Serialize for RadicalScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let docs: Vec<TermDoc> = self
            .terms
            .iter()
            .map(|(d, c)| TermDoc {
                radicand: *d,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        docs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RadicalScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let docs = Vec::<TermDoc>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(docs.len());
        for doc in docs {
            if doc.radicand == 0 {
                return Err(D::Error::custom("radicand must be positive"));
            }
            let num: BigInt = doc.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = doc.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((doc.radicand, Rational::new(num, den)));
        }
        Ok(RadicalScalar::from_terms(terms))
    }
}
