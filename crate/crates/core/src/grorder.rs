//! The Gabriel-Roiter measure as a value: a finite strictly increasing set of
//! positive integers under the total order in which `I < J` exactly when the
//! smallest element of the symmetric difference lies in `J`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A GR measure. The empty measure stands for the zero module.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GrMeasure(Vec<u32>);

impl GrMeasure {
    pub fn empty() -> Self {
        GrMeasure(Vec::new())
    }

    /// Builds a measure from arbitrary elements; they must be positive and
    /// strictly increasing.
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        if elements.first() == Some(&0) {
            return Err(Error::InvalidMeasure("elements must be positive".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMeasure(format!("elements must be strictly increasing: {elements:?}")));
        }
        Ok(GrMeasure(elements))
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest element, which is the length of any module realizing the measure.
    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// `I ∪ {m}` for `m > max(I)`.
    pub fn extend(&self, m: u32) -> Result<Self> {
        if m == 0 || self.max().is_some_and(|top| m <= top) {
            return Err(Error::InvalidMeasure(format!(
                "cannot extend {self} by {m}: element must exceed the current maximum"
            )));
        }
        let mut elements = self.0.clone();
        elements.push(m);
        Ok(GrMeasure(elements))
    }

    /// True iff `other` starts with `self`: equal, or a proper subset whose
    /// elements all lie below the added ones.
    pub fn is_start_of(&self, other: &GrMeasure) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    /// The elements `≤ bound`, which is again a measure (a GR filtration prefix).
    pub fn truncate_to(&self, bound: u32) -> GrMeasure {
        GrMeasure(self.0.iter().copied().take_while(|&a| a <= bound).collect())
    }

    /// Exact `Σ 2^{-a}`.
    pub fn to_rational(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for &a in &self.0 {
            let den = BigInt::one() << (a as usize);
            acc += BigRational::new(BigInt::one(), den);
        }
        acc
    }

    /// Rational encoding in `num/den` form.
    pub fn rational_string(&self) -> String {
        let r = self.to_rational();
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Total order on finite subsets of the positive integers.
pub fn compare(lhs: &[u32], rhs: &[u32]) -> Ordering {
    let mut i = 0;
    let mut j = 0;
    while i < lhs.len() && j < rhs.len() {
        match lhs[i].cmp(&rhs[j]) {
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
            // the smaller element sits in exactly one set, and that set wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    match (i < lhs.len(), j < rhs.len()) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => Ordering::Equal,
    }
}

/// `J` starts with `I`.
pub fn starts_with(i: &GrMeasure, j: &GrMeasure) -> bool {
    i.is_start_of(j)
}

impl Ord for GrMeasure {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(&self.0, &other.0)
    }
}

impl PartialOrd for GrMeasure {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GrMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GrMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GrMeasure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GrMeasure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<u32>::deserialize(deserializer)?;
        GrMeasure::new(elements).map_err(serde::de::Error::custom)
    }
}

/// Infinite measure `prefix ∪ {tail_0, tail_0 + step_0, ...}` whose increments
/// repeat with a fixed period. This is the supremum of a tube chain whose
/// inclusions are all GR inclusions from some point on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicMeasure {
    pub prefix: GrMeasure,
    /// Increments added one after the other, cycling forever.
    pub steps: Vec<u32>,
}

impl PeriodicMeasure {
    /// Compares a finite measure with this infinite set. Never `Equal`.
    pub fn compare_finite(&self, finite: &GrMeasure) -> Ordering {
        let top = finite.max().unwrap_or(0);
        let mut expanded: Vec<u32> = self.prefix.elements().to_vec();
        let mut last = expanded.last().copied().unwrap_or(0);
        let mut k = 0;
        // one element past `top` decides any comparison with `finite`
        while last <= top && !self.steps.is_empty() {
            last += self.steps[k % self.steps.len()];
            expanded.push(last);
            k += 1;
        }
        match compare(finite.elements(), &expanded) {
            Ordering::Equal => Ordering::Less,
            other => other,
        }
    }
}
