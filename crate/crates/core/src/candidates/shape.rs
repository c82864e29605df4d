use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Degree data `(a; b)` of a minimal Horrocks monad
///
/// `⊕ O(-a_i - 1) -> ⊕ (O(b_j) ⊕ O(-b_j - 1)) -> ⊕ O(a_i)`
///
/// with `a` of length `t` and `b` of length `t + 1`, both kept in descending
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonadShape {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spectrum: Option<Spectrum>,
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

impl MonadShape {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.is_empty() || b.len() != a.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "shape needs t >= 1 entries in a and t + 1 in b, got a = {a:?}, b = {b:?}"
            )));
        }
        if b.iter().any(|&x| x < 0) {
            return Err(Error::InvalidArgument(format!("b must be non-negative, got {b:?}")));
        }
        Ok(MonadShape { a: sorted_desc(a), b: sorted_desc(b), spectrum: None })
    }

    pub fn with_spectrum(mut self, spectrum: Spectrum) -> Self {
        self.spectrum = Some(spectrum);
        self
    }

    /// Number of summands `t` of the right-hand term.
    pub fn rank_a(&self) -> usize {
        self.a.len()
    }

    /// `Σ a_i(a_i+1) - Σ b_j(b_j+1)`.
    pub fn c2(&self) -> i64 {
        self.a.iter().map(|x| x * (x + 1)).sum::<i64>() - self.b.iter().map(|x| x * (x + 1)).sum::<i64>()
    }

    /// Twists of the middle term: `{b_j} ∪ {-b_j - 1}`, descending.
    pub fn b_degrees(&self) -> Vec<i64> {
        sorted_desc(self.b.iter().flat_map(|&x| [x, -x - 1]).collect())
    }

    /// Twists of the left-hand term: `{-a_i - 1}`, descending.
    pub fn c_degrees(&self) -> Vec<i64> {
        sorted_desc(self.a.iter().map(|&x| -x - 1).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.a.iter().all(|&x| x > 0)
    }

    /// Same `(a, b)` irrespective of the attached spectrum.
    pub fn same_degrees(&self, other: &MonadShape) -> bool {
        self.a == other.a && self.b == other.b
    }
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for MonadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={}", tuple(&self.a), tuple(&self.b))
    }
}

pub fn format_tuple(v: &[i64]) -> String {
    tuple(v)
}

/// Elimination rules, in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// A middle summand `O(b_j)` with `b_j >= max a` has a zero column in β.
    R1,
    /// `(x,x,x,y; y^5)` with `6y + 1 >= 4x`: no such monad.
    #[serde(rename = "R2_NONEXIST")]
    R2NonExist,
    /// `(x,x,x,y; y^5)` with `6y + 1 >= 3x`: unstable cohomology.
    #[serde(rename = "R2_UNSTABLE")]
    R2Unstable,
    /// `(a2, a1^g; b, b, ...)` with `a2 >= b > a1 >= 0`, `2b >= a2`.
    R3,
    /// `(3,1,1; 1,1,1,0)`.
    R4,
    /// `(2,2,2,-1; 1,1,1,1,0)`.
    R5,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::R1 => "R1",
            Rule::R2NonExist => "R2_NONEXIST",
            Rule::R2Unstable => "R2_UNSTABLE",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
        };
        f.write_str(name)
    }
}

/// How an existing monad is known to exist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Method {
    Hartshorne,
    Ein,
    Extension { base: String, r: i64, u: i64, v: i64 },
    ExplicitMatrix,
    SerreCurve { curve: String },
    Aa1 { n: i64 },
    /// Listed in the earlier classification for `c2 <= 8`.
    Cited { label: String },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Hartshorne => f.write_str("hartshorne"),
            Method::Ein => f.write_str("ein"),
            Method::Extension { base, u, v, .. } => write!(f, "{base}, ({u},{v})"),
            Method::ExplicitMatrix => f.write_str("explicit matrix"),
            Method::SerreCurve { curve } => f.write_str(curve),
            Method::Aa1 { n } => write!(f, "negative family n={n}"),
            Method::Cited { label } => f.write_str(label),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Open,
    NoSolution,
    Eliminated { rule: Rule },
    Exists { how: Method },
}

impl Verdict {
    pub fn is_eliminated(&self) -> bool {
        matches!(self, Verdict::Eliminated { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Open => f.write_str("OPEN"),
            Verdict::NoSolution => f.write_str("NO_SOLUTION"),
            Verdict::Eliminated { rule } => write!(f, "ELIMINATED({rule})"),
            Verdict::Exists { how } => write!(f, "EXISTS({how})"),
        }
    }
}
