//! Spectra stored as multiplicity vectors.
//!
//! A spectrum for `c1 = -1` is a multiset symmetric under `k -> -k - 1`, so it
//! is determined by the multiplicities `s(0), ..., s(K)` of its non-negative
//! values. Symmetry is therefore structural and never checked on this type.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Spectrum {
    mult: Vec<u32>,
}

impl Spectrum {
    /// Builds a spectrum from `s(0), ..., s(K)`, enforcing connectedness and
    /// the tail rule (`s(j) = 1` for some `j >= 1` forces `s(j') = 1` for all
    /// `j' >= j`).
    pub fn new(mult: Vec<u32>) -> Result<Self> {
        if mult.is_empty() || mult.contains(&0) {
            return Err(Error::BadSpectrum(mult));
        }
        if let Some(first_one) = mult.iter().skip(1).position(|&m| m == 1) {
            if mult[first_one + 1..].iter().any(|&m| m != 1) {
                return Err(Error::BadSpectrum(mult));
            }
        }
        Ok(Spectrum { mult })
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// `s(k)`, zero outside `0..=K`.
    pub fn s(&self, k: i64) -> u32 {
        if k < 0 {
            return 0;
        }
        self.mult.get(k as usize).copied().unwrap_or(0)
    }

    /// Largest non-negative spectrum value `K`.
    pub fn top(&self) -> usize {
        self.mult.len() - 1
    }

    pub fn c2(&self) -> i64 {
        2 * self.mult.iter().map(|&m| m as i64).sum::<i64>()
    }

    /// The full multiset in non-descending order.
    pub fn expanded(&self) -> Vec<i64> {
        let mut values = Vec::with_capacity(self.c2() as usize);
        for (k, &m) in self.mult.iter().enumerate().rev() {
            values.extend(std::iter::repeat_n(-(k as i64) - 1, m as usize));
        }
        for (k, &m) in self.mult.iter().enumerate() {
            values.extend(std::iter::repeat_n(k as i64, m as usize));
        }
        values
    }

    /// Order used to list spectra of equal `c2`: compare the non-descending
    /// expansions and let the left-most nonzero difference decide.
    pub fn cmp_lex(&self, other: &Spectrum) -> Ordering {
        self.expanded().cmp(&other.expanded())
    }

    /// Parses the CLI syntax `"1,2,1,1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mult = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {part:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Spectrum::new(mult)
    }

    /// Compact notation with `r_j = {-j-1, j}`, e.g. `r0^2 r1 r2`.
    pub fn notation(&self) -> String {
        self.mult
            .iter()
            .enumerate()
            .map(|(j, &m)| if m == 1 { format!("r{j}") } else { format!("r{j}^{m}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl TryFrom<Vec<u32>> for Spectrum {
    type Error = Error;

    fn try_from(mult: Vec<u32>) -> Result<Self> {
        Spectrum::new(mult)
    }
}

impl From<Spectrum> for Vec<u32> {
    fn from(spec: Spectrum) -> Self {
        spec.mult
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mult.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
