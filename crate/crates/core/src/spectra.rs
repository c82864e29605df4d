//! Enumeration and validation of admissible spectra.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Rules a candidate multiset can break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Violation {
    Empty,
    /// `{k_i} != {-k_i - 1}`
    Symmetry,
    /// a gap between two values of the multiset
    Connectedness,
    /// a value `u <= -2` occurs once but some value below it repeats
    SingleTail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid(Spectrum),
    Invalid(Vec<Violation>),
}

/// Checks the three spectrum properties directly on a raw multiset.
pub fn validate_spectrum(values: &[i64]) -> Validation {
    if values.is_empty() {
        return Validation::Invalid(vec![Violation::Empty]);
    }
    let mut counts: BTreeMap<i64, u32> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_default() += 1;
    }
    let mut violations = Vec::new();

    let symmetric = counts
        .iter()
        .all(|(&v, &c)| counts.get(&(-v - 1)).copied() == Some(c));
    if !symmetric {
        violations.push(Violation::Symmetry);
    }

    let lo = *counts.keys().next().unwrap();
    let hi = *counts.keys().next_back().unwrap();
    if (lo..=hi).any(|v| !counts.contains_key(&v)) {
        violations.push(Violation::Connectedness);
    }

    // k = max{-k_i}; if some u in [-k, -2] occurs once, every value in [-k, u]
    // occurs exactly once.
    let k = -lo;
    let single_tail_ok = (-k..=-2)
        .filter(|u| counts.get(u) == Some(&1))
        .all(|u| (-k..=u).all(|v| counts.get(&v).is_none_or(|&c| c == 1)));
    if !single_tail_ok {
        violations.push(Violation::SingleTail);
    }

    if !violations.is_empty() {
        return Validation::Invalid(violations);
    }
    let mult: Vec<u32> = (0..=hi).map(|v| counts[&v]).collect();
    match Spectrum::new(mult) {
        Ok(spec) => Validation::Valid(spec),
        // unreachable when the three checks pass; kept as data rather than a panic
        Err(_) => Validation::Invalid(vec![Violation::SingleTail]),
    }
}

/// Listing order: `s(0)` descending, then the lexicographic spectrum order
/// descending.
pub fn listing_order(a: &Spectrum, b: &Spectrum) -> Ordering {
    b.s(0).cmp(&a.s(0)).then_with(|| b.cmp_lex(a))
}

/// All spectra with the given second Chern class, in listing order.
pub fn enumerate_spectra(c2: i64) -> Result<Vec<Spectrum>> {
    if c2 < 2 || c2 % 2 != 0 {
        return Err(Error::BadChernClass(c2));
    }
    let n = (c2 / 2) as u32;
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    compositions(n, false, &mut prefix, &mut out);
    out.sort_by(listing_order);
    Ok(out)
}

// Compositions of `remaining` into positive parts; once a part equal to 1
// appears at index >= 1 every later part must be 1.
fn compositions(remaining: u32, ones_only: bool, prefix: &mut Vec<u32>, out: &mut Vec<Spectrum>) {
    if remaining == 0 {
        out.push(Spectrum::new(prefix.clone()).expect("composition obeys the tail rule"));
        return;
    }
    let max = if ones_only { 1 } else { remaining };
    for part in 1..=max {
        let locks = !prefix.is_empty() && part == 1;
        prefix.push(part);
        compositions(remaining - part, ones_only || locks, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mults(c2: i64) -> Vec<Vec<u32>> {
        enumerate_spectra(c2).unwrap().iter().map(|s| s.mult().to_vec()).collect()
    }

    #[test]
    fn ten_has_twelve_spectra_in_table_order() {
        let expected: Vec<Vec<u32>> = vec![
            vec![5],
            vec![4, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 3],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![1, 4],
            vec![1, 3, 1],
            vec![1, 2, 2],
            vec![1, 2, 1, 1],
            vec![1, 1, 1, 1, 1],
        ];
        assert_eq!(mults(10), expected);
    }

    #[test]
    fn small_counts() {
        assert_eq!(mults(2), vec![vec![1]]);
        assert_eq!(mults(4).len(), 2);
        assert_eq!(mults(6).len(), 4);
        assert_eq!(mults(8).len(), 7);
    }

    #[test]
    fn bad_c2_is_rejected() {
        assert_eq!(enumerate_spectra(7), Err(Error::BadChernClass(7)));
        assert_eq!(enumerate_spectra(0), Err(Error::BadChernClass(0)));
        assert!(enumerate_spectra(-4).is_err());
    }

    #[test]
    fn validate_examples() {
        assert_eq!(
            validate_spectrum(&[0, -1]),
            Validation::Valid(Spectrum::new(vec![1]).unwrap())
        );
        assert_eq!(
            validate_spectrum(&[1, 0, -1, -2]),
            Validation::Valid(Spectrum::new(vec![1, 1]).unwrap())
        );
        assert_eq!(
            validate_spectrum(&[0, 0, -1, -1, 1, -2, 2, 2, -3, -3]),
            Validation::Invalid(vec![Violation::SingleTail])
        );
        assert_eq!(
            validate_spectrum(&[0, 0, -1]),
            Validation::Invalid(vec![Violation::Symmetry])
        );
        assert_eq!(
            validate_spectrum(&[-3, -1, 0, 2]),
            Validation::Invalid(vec![Violation::Connectedness])
        );
        assert_eq!(validate_spectrum(&[]), Validation::Invalid(vec![Violation::Empty]));
    }

    fn all_compositions(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in all_compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn count_matches_filtered_compositions() {
        for n in 1..=8u32 {
            let brute = all_compositions(n)
                .into_iter()
                .filter(|c| {
                    // no 1 strictly before a part >= 2 among indices >= 1
                    !(1..c.len()).any(|i| c[i] == 1 && c[i + 1..].iter().any(|&p| p >= 2))
                })
                .count();
            assert_eq!(enumerate_spectra(2 * n as i64).unwrap().len(), brute, "n = {n}");
        }
    }

    // Every symmetric multiset with values in [-6, 5] of size 2n, n <= 6.
    fn symmetric_multisets(n: u32) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut counts = [0u32; 6];
        fn rec(idx: usize, left: u32, counts: &mut [u32; 6], out: &mut Vec<Vec<i64>>) {
            if idx == counts.len() {
                if left == 0 {
                    let mut values = Vec::new();
                    for (k, &c) in counts.iter().enumerate() {
                        for _ in 0..c {
                            values.push(k as i64);
                            values.push(-(k as i64) - 1);
                        }
                    }
                    out.push(values);
                }
                return;
            }
            for c in 0..=left {
                counts[idx] = c;
                rec(idx + 1, left - c, counts, out);
            }
            counts[idx] = 0;
        }
        rec(0, n, &mut counts, &mut out);
        out
    }

    #[test]
    fn validation_and_enumeration_agree() {
        for n in 1..=6u32 {
            let mut validated: Vec<Spectrum> = symmetric_multisets(n)
                .iter()
                .filter_map(|m| match validate_spectrum(m) {
                    Validation::Valid(s) => Some(s),
                    Validation::Invalid(_) => None,
                })
                .collect();
            validated.sort_by(listing_order);
            let enumerated = enumerate_spectra(2 * n as i64).unwrap();
            assert_eq!(validated, enumerated, "n = {n}");
            for spec in &enumerated {
                assert_eq!(spec.c2(), 2 * n as i64);
                assert_eq!(validate_spectrum(&spec.expanded()), Validation::Valid(spec.clone()));
            }
        }
    }
}
