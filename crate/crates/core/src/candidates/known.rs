//! Transcribed tables of existing positive minimal monads.

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

use super::shape::{Method, MonadShape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownRow {
    pub spectrum_label: String,
    pub spectrum: Spectrum,
    /// `M_i` for the `c2 <= 8` rows.
    pub label: Option<String>,
    pub shape: MonadShape,
    /// Twist `r` of the section used for the construction.
    pub r: Option<i64>,
    /// `None` for the rows whose cohomology is known not to be stable.
    pub method: Option<Method>,
}

impl KnownRow {
    pub fn blue(&self) -> bool {
        self.method.is_none()
    }
}

// (spectrum label, s(0..K), b, a, monad label)
#[allow(clippy::type_complexity)]
const SMALL: &[(&str, &[u32], &[i64], &[i64], &str)] = &[
    ("X_1^2", &[1], &[0, 0], &[1], "M_1"),
    ("X_1^4", &[2], &[0, 0, 0], &[1, 1], "M_2"),
    ("X_2^4", &[1, 1], &[1, 0], &[2], "M_3"),
    ("X_1^6", &[3], &[0, 0, 0, 0], &[1, 1, 1], "M_4"),
    ("X_2^6", &[2, 1], &[0, 0], &[2], "M_5"),
    ("X_2^6", &[2, 1], &[1, 0, 0], &[2, 1], "M_6"),
    ("X_3^6", &[1, 2], &[1, 1, 1], &[2, 2], "M_7"),
    ("X_4^6", &[1, 1, 1], &[2, 0], &[3], "M_8"),
    ("X_1^8", &[4], &[0, 0, 0, 0, 0], &[1, 1, 1, 1], "M_9"),
    ("X_2^8", &[3, 1], &[0, 0, 0], &[2, 1], "M_10"),
    ("X_2^8", &[3, 1], &[1, 0, 0, 0], &[2, 1, 1], "M_11"),
    ("X_3^8", &[2, 2], &[1, 1, 0], &[2, 2], "M_12"),
    ("X_3^8", &[2, 2], &[1, 1, 1, 0], &[2, 2, 1], "M_13"),
    ("X_4^8", &[2, 1, 1], &[2, 0, 0], &[3, 1], "M_14"),
    ("X_5^8", &[1, 2, 1], &[1, 1], &[3], "M_15"),
    ("X_5^8", &[1, 2, 1], &[2, 1, 1], &[3, 2], "M_16"),
    ("X_7^8", &[1, 1, 1, 1], &[3, 0], &[4], "M_17"),
];

enum How {
    Hartshorne,
    Ein,
    Ext(&'static str, i64, i64),
    Explicit,
    Curve(&'static str),
    Blue,
}

// (spectrum label, s(0..K), b, a, r, construction)
#[allow(clippy::type_complexity)]
const TEN: &[(&str, &[u32], &[i64], &[i64], i64, How)] = &[
    ("X_1^10", &[5], &[0, 0, 0, 0, 0, 0], &[1, 1, 1, 1, 1], 1, How::Hartshorne),
    ("X_2^10", &[4, 1], &[0, 0, 0, 0], &[2, 1, 1], 3, How::Ext("M_2", 3, 2)),
    ("X_2^10", &[4, 1], &[1, 0, 0, 0, 0], &[2, 1, 1, 1], 3, How::Ext("M_4", 4, 1)),
    ("X_3^10", &[3, 2], &[1, 0, 0], &[2, 2], 3, How::Ext("M_3", 3, 2)),
    ("X_3^10", &[3, 2], &[1, 1, 0, 0], &[2, 2, 1], 3, How::Ext("M_6", 4, 1)),
    ("X_3^10", &[3, 2], &[1, 1, 1, 0, 0], &[2, 2, 1, 1], 2, How::Ext("M_13", 2, 1)),
    ("X_4^10", &[3, 1, 1], &[1, 0], &[3], 2, How::Ein),
    ("X_4^10", &[3, 1, 1], &[1, 1, 0], &[3, 1], 2, How::Ext("M_15", 2, 1)),
    ("X_4^10", &[3, 1, 1], &[1, 1, 1, 0], &[3, 1, 1], 0, How::Blue),
    ("X_4^10", &[3, 1, 1], &[2, 0, 0, 0], &[3, 1, 1], 4, How::Ext("M_2", 6, 1)),
    ("X_5^10", &[2, 3], &[1, 1, 1, 1], &[2, 2, 2], 3, How::Ext("M_7", 4, 1)),
    ("X_6^10", &[2, 2, 1], &[1, 0], &[3], 2, How::Curve("C_{3,3}")),
    ("X_6^10", &[2, 2, 1], &[1, 1, 0], &[3, 1], 2, How::Ext("M_15", 2, 1)),
    ("X_6^10", &[2, 2, 1], &[2, 1, 0], &[3, 2], 3, How::Ext("M_8", 4, 1)),
    ("X_6^10", &[2, 2, 1], &[2, 1, 1, 0], &[3, 2, 1], 2, How::Ext("M_16", 2, 1)),
    ("X_7^10", &[2, 1, 1, 1], &[2, 2, 0], &[4, 1], 0, How::Blue),
    ("X_7^10", &[2, 1, 1, 1], &[3, 0, 0], &[4, 1], 2, How::Ext("M_17", 2, 1)),
    ("X_9^10", &[1, 3, 1], &[2, 1, 0], &[3, 2], 3, How::Ext("M_8", 4, 1)),
    ("X_9^10", &[1, 3, 1], &[2, 2, 1, 0], &[3, 2, 2], 1, How::Curve("P_2 ∪ P_3 joined by one point")),
    ("X_10^10", &[1, 2, 2], &[2, 2, 1], &[3, 3], 1, How::Explicit),
    ("X_10^10", &[1, 2, 2], &[2, 2, 2, 1], &[3, 3, 2], 1, How::Curve("P_2 ∪ P_3 joined by two points")),
    ("X_11^10", &[1, 2, 1, 1], &[3, 1, 1], &[4, 2], 1, How::Explicit),
    ("X_12^10", &[1, 1, 1, 1, 1], &[4, 0], &[5], 1, How::Curve("P_5")),
];

fn shape(spec: &Spectrum, a: &[i64], b: &[i64]) -> MonadShape {
    MonadShape::new(a.to_vec(), b.to_vec())
        .expect("fixture shapes are well formed")
        .with_spectrum(spec.clone())
}

/// Fixture rows for `c2` in `{2, 4, 6, 8, 10}`.
pub fn known_table(c2: i64) -> Result<Vec<KnownRow>> {
    match c2 {
        2 | 4 | 6 | 8 => Ok(SMALL
            .iter()
            .filter_map(|&(label, mult, b, a, m)| {
                let spectrum = Spectrum::new(mult.to_vec()).expect("fixture spectra are valid");
                (spectrum.c2() == c2).then(|| KnownRow {
                    spectrum_label: label.to_string(),
                    shape: shape(&spectrum, a, b),
                    spectrum,
                    label: Some(m.to_string()),
                    r: None,
                    method: Some(Method::Cited { label: m.to_string() }),
                })
            })
            .collect()),
        10 => Ok(TEN
            .iter()
            .map(|(label, mult, b, a, r, how)| {
                let spectrum = Spectrum::new(mult.to_vec()).expect("fixture spectra are valid");
                let method = match how {
                    How::Hartshorne => Some(Method::Hartshorne),
                    How::Ein => Some(Method::Ein),
                    How::Ext(base, u, v) => {
                        Some(Method::Extension { base: base.to_string(), r: *r, u: *u, v: *v })
                    }
                    How::Explicit => Some(Method::ExplicitMatrix),
                    How::Curve(curve) => Some(Method::SerreCurve { curve: curve.to_string() }),
                    How::Blue => None,
                };
                KnownRow {
                    spectrum_label: label.to_string(),
                    shape: shape(&spectrum, a, b),
                    spectrum,
                    label: None,
                    r: method.as_ref().map(|_| *r),
                    method,
                }
            })
            .collect()),
        _ => Err(Error::InvalidArgument(format!("no fixture table for c2 = {c2}"))),
    }
}

/// Looks up a `c2 <= 8` row by its monad label, e.g. `"M_15"`.
pub fn small_row(label: &str) -> Option<KnownRow> {
    [2, 4, 6, 8]
        .into_iter()
        .flat_map(|c2| known_table(c2).expect("fixture c2"))
        .find(|row| row.label.as_deref() == Some(label))
}
