//! Candidate monad shapes: generator bounds, the `c2` Diophantine equation,
//! elimination rules and the extension lemma.

mod extension;
mod known;
mod rules;
mod shape;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::spectra::enumerate_spectra;
use crate::spectrum::Spectrum;

pub use extension::{aa1_shape, extend_shape};
pub use known::{known_table, small_row, KnownRow};
pub use rules::eliminate;
pub use shape::{MonadShape, Method, Rule, Verdict};
pub use shape::format_tuple;

/// Number of minimal generators `ρ(d)` of the Rao module, per degree `d`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct RhoProfile {
    pub counts: BTreeMap<i64, u32>,
}

impl RhoProfile {
    pub fn get(&self, degree: i64) -> u32 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    fn set(&mut self, degree: i64, count: u32) {
        if count > 0 {
            self.counts.insert(degree, count);
        }
    }

    /// The right-hand twists: a generator in degree `d` is a summand `O(-d)`.
    pub fn a_entries(&self) -> Vec<i64> {
        let mut a: Vec<i64> = self
            .counts
            .iter()
            .flat_map(|(&d, &n)| std::iter::repeat_n(-d, n as usize))
            .collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        a
    }
}

/// Generator bounds for positive monads: `ρ(-K-1) = s(K)` and, for
/// `0 <= i < K`, `ρ(-i-1)` in `intervals[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoBounds {
    pub top_index: usize,
    pub top_value: u32,
    pub intervals: Vec<RangeInclusive<u32>>,
}

pub fn rho_bounds(spec: &Spectrum) -> RhoBounds {
    let k = spec.top();
    let mult = spec.mult();
    let intervals = (0..k)
        .map(|i| {
            let above: i64 = mult[i + 1..].iter().map(|&m| m as i64).sum();
            let lower = (mult[i] as i64 - 2 * above).max(0) as u32;
            lower..=mult[i] - 1
        })
        .collect();
    RhoBounds { top_index: k, top_value: mult[k], intervals }
}

/// Upper bounds `ρ(i) <= max(s(i) - 2, 0)` for `i >= 1`, listed for
/// `i = 1..=K` (all further bounds are zero).
pub fn negative_rho_bounds(spec: &Spectrum) -> BTreeMap<i64, u32> {
    (1..=spec.top() as i64)
        .map(|i| (i, spec.s(i).saturating_sub(2)))
        .collect()
}

/// All descending tuples `b_1 >= ... >= b_count >= 0` with
/// `Σ b_j(b_j+1) = target`, largest first.
pub fn solve_b(target: u64, count: usize) -> Vec<Vec<i64>> {
    fn rec(target: u64, count: usize, cap: u64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if count == 0 {
            if target == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let mut top = cap;
        while top * (top + 1) > target {
            top -= 1;
        }
        for b in (0..=top).rev() {
            let used = b * (b + 1);
            // the remaining entries are at most b each
            if used + (count as u64 - 1) * used < target {
                break;
            }
            prefix.push(b as i64);
            rec(target - used, count - 1, b, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    let mut cap = 0u64;
    while (cap + 1) * (cap + 2) <= target {
        cap += 1;
    }
    rec(target, count, cap, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum CandidateShape {
    Shape(MonadShape),
    NoSolution { a: Vec<i64> },
}

/// One line of a candidate listing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    pub spectrum: Spectrum,
    pub rho: RhoProfile,
    pub shape: CandidateShape,
}

impl Candidate {
    pub fn a(&self) -> &[i64] {
        match &self.shape {
            CandidateShape::Shape(s) => &s.a,
            CandidateShape::NoSolution { a } => a,
        }
    }

    pub fn shape(&self) -> Option<&MonadShape> {
        match &self.shape {
            CandidateShape::Shape(s) => Some(s),
            CandidateShape::NoSolution { .. } => None,
        }
    }

    pub fn verdict(&self) -> Verdict {
        match &self.shape {
            CandidateShape::Shape(s) => eliminate(s),
            CandidateShape::NoSolution { .. } => Verdict::NoSolution,
        }
    }
}

fn shapes_for(spec: &Spectrum, c2: i64, rho: RhoProfile) -> Vec<Candidate> {
    let a = rho.a_entries();
    let lhs: i64 = a.iter().map(|x| x * (x + 1)).sum();
    let target = lhs - c2;
    let solutions = if target < 0 { Vec::new() } else { solve_b(target as u64, a.len() + 1) };
    if solutions.is_empty() {
        return vec![Candidate {
            spectrum: spec.clone(),
            rho,
            shape: CandidateShape::NoSolution { a },
        }];
    }
    solutions
        .into_iter()
        .map(|b| {
            let shape = MonadShape::new(a.clone(), b)
                .expect("solve_b returns t + 1 non-negative entries")
                .with_spectrum(spec.clone());
            debug_assert_eq!(shape.c2(), c2);
            Candidate { spectrum: spec.clone(), rho: rho.clone(), shape: CandidateShape::Shape(shape) }
        })
        .collect()
}

/// Every positive generator profile allowed by `rho_bounds`, with `ρ(-1)`
/// varying fastest.
fn positive_profiles(spec: &Spectrum) -> Vec<RhoProfile> {
    let bounds = rho_bounds(spec);
    let k = bounds.top_index as i64;
    let ranges: Vec<Vec<u32>> = bounds.intervals.iter().rev().map(|r| r.clone().collect()).collect();
    let choices: Vec<Vec<u32>> = if ranges.is_empty() {
        vec![Vec::new()]
    } else {
        ranges.into_iter().multi_cartesian_product().collect()
    };
    choices
        .into_iter()
        .map(|choice| {
            let mut rho = RhoProfile::default();
            rho.set(-k - 1, bounds.top_value);
            // choice[0] belongs to i = K-1, the last entry to i = 0
            for (offset, &count) in choice.iter().enumerate() {
                let i = k - 1 - offset as i64;
                rho.set(-i - 1, count);
            }
            rho
        })
        .collect()
}

/// All positive candidate shapes for every spectrum with this `c2`,
/// including `NoSolution` records where the Diophantine equation fails.
pub fn positive_candidates(c2: i64) -> Result<Vec<Candidate>> {
    let spectra = enumerate_spectra(c2)?;
    Ok(spectra
        .par_iter()
        .map(|spec| {
            positive_profiles(spec)
                .into_iter()
                .flat_map(|rho| shapes_for(spec, c2, rho))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

/// Negative candidate shapes: at least one generator in a positive degree,
/// none in degrees 0 and -1, then filtered by rule R1.
pub fn negative_candidates(c2: i64) -> Result<Vec<Candidate>> {
    let spectra = enumerate_spectra(c2)?;
    Ok(spectra
        .par_iter()
        .map(|spec| negative_for(spec, c2))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

fn negative_for(spec: &Spectrum, c2: i64) -> Vec<Candidate> {
    let bounds = negative_rho_bounds(spec);
    if bounds.values().all(|&b| b == 0) {
        return Vec::new();
    }
    let degrees: Vec<i64> = bounds.keys().copied().collect();
    let ranges: Vec<Vec<u32>> = bounds.values().map(|&b| (0..=b).collect()).collect();
    let negative_choices: Vec<Vec<u32>> = ranges
        .into_iter()
        .multi_cartesian_product()
        .filter(|choice| choice.iter().any(|&n| n > 0))
        .collect();

    let mut out = Vec::new();
    for positive in positive_profiles(spec) {
        if positive.get(-1) > 0 {
            continue;
        }
        for choice in &negative_choices {
            let mut rho = positive.clone();
            for (&degree, &count) in degrees.iter().zip(choice) {
                rho.set(degree, count);
            }
            out.extend(
                shapes_for(spec, c2, rho)
                    .into_iter()
                    .filter(|c| c.shape().is_some())
                    .filter(|c| c.verdict() != Verdict::Eliminated { rule: Rule::R1 }),
            );
        }
    }
    out
}
