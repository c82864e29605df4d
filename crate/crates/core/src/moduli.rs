//! Dimensions of families of homotopy-free minimal monads and the `h^1`
//! comparisons that separate moduli components.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::candidates::{known_table, MonadShape};
use crate::cohomology::{h0_p3, hom_dim, spectrum_h1};
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// `Hom(B, C) = Hom(A, B) = 0`.
pub fn homotopy_free(shape: &MonadShape) -> bool {
    let b = shape.b_degrees();
    hom_dim(&shape.a, &b).is_zero() && hom_dim(&b, &shape.c_degrees()).is_zero()
}

/// `dim V(a; b) = h - w - g - s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    /// `dim Hom(B, A)`
    #[serde(serialize_with = "decimal")]
    pub h: BigUint,
    /// twisted skew forms on `A`
    #[serde(serialize_with = "decimal")]
    pub w: BigUint,
    /// `dim gl(A)`
    #[serde(serialize_with = "decimal")]
    pub g: BigUint,
    /// symmetry group of the middle term
    #[serde(serialize_with = "decimal")]
    pub s_dim: BigUint,
    #[serde(serialize_with = "decimal")]
    pub dim: BigInt,
}

fn decimal<T: std::fmt::Display, S: serde::Serializer>(n: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

impl DimensionReport {
    pub fn is_negative(&self) -> bool {
        self.dim < BigInt::zero()
    }
}

pub fn dimension_report(shape: &MonadShape) -> Result<DimensionReport> {
    if !homotopy_free(shape) {
        return Err(Error::NotHomotopyFree { a: shape.a.clone(), b: shape.b.clone() });
    }
    let a = &shape.a;
    let middle = shape.b_degrees();
    let h = hom_dim(&middle, a);
    let g = hom_dim(a, a);
    let w: BigUint = (0..a.len())
        .flat_map(|i| (i + 1..a.len()).map(move |j| (i, j)))
        .map(|(i, j)| h0_p3(a[i] + a[j] + 1))
        .sum();
    let s_dim: BigUint = (0..middle.len())
        .flat_map(|i| (i..middle.len()).map(move |j| (i, j)))
        .map(|(i, j)| h0_p3(-middle[i] - middle[j] - 1))
        .sum();
    let dim = BigInt::from(h.clone()) - BigInt::from(w.clone()) - BigInt::from(g.clone())
        - BigInt::from(s_dim.clone());
    Ok(DimensionReport { h, w, g, s_dim, dim })
}

/// One row per distinct homotopy-free shape among the existing, stable
/// rows of the fixture table. A shape listed under two spectra keeps the
/// later label.
pub fn dimension_table(c2: i64) -> Result<Vec<(String, MonadShape, DimensionReport)>> {
    let rows: Vec<_> = known_table(c2)?
        .into_iter()
        .filter(|r| !r.blue() && homotopy_free(&r.shape))
        .collect();
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let repeated_later = rows[i + 1..].iter().any(|r| r.shape.same_degrees(&row.shape));
        if !repeated_later {
            out.push((row.spectrum_label.clone(), row.shape.clone(), dimension_report(&row.shape)?));
        }
    }
    Ok(out)
}

/// A family compared at one twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub family: String,
    pub spectrum: Spectrum,
    pub twist: i64,
    pub h1: u64,
    /// Value quoted in the original separation argument.
    pub cited: Option<u64>,
}

impl Probe {
    pub fn discrepant(&self) -> bool {
        self.cited.is_some_and(|c| c != self.h1)
    }
}

/// A family `F` cannot lie in a component whose generic member `G` has
/// `h^1(G(l)) >= 1` everywhere on it (lower semicontinuity) if `h^1(F(l)) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub family: String,
    pub component: String,
    pub twist: i64,
    pub family_h1: u64,
    pub component_h1: u64,
    pub separated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub probes: Vec<Probe>,
    pub separations: Vec<Separation>,
}

impl SeparationReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &Probe> {
        self.probes.iter().filter(|p| p.discrepant())
    }
}

struct Family {
    name: &'static str,
    mult: &'static [u32],
}

const M2_GENERIC: Family = Family { name: "M2 generic V(3;1,0)", mult: &[2, 2, 1] };
const M3_GENERIC: Family = Family { name: "M3 generic V(5;4,0)", mult: &[1, 1, 1, 1, 1] };
const V_2_1: Family = Family { name: "V(2^3;1^4)", mult: &[2, 3] };
const V_33_221: Family = Family { name: "V(3^2;2^2,1)", mult: &[1, 2, 2] };

fn probe(family: &Family, twist: i64, cited: Option<u64>) -> Result<Probe> {
    let spectrum = Spectrum::new(family.mult.to_vec())?;
    let h1 = spectrum_h1(&spectrum, twist)?;
    Ok(Probe {
        family: family.name.to_string(),
        spectrum,
        twist,
        h1,
        cited,
    })
}

/// The semicontinuity comparisons for `c2 = 10`.
pub fn component_separation(c2: i64) -> Result<SeparationReport> {
    if c2 != 10 {
        return Err(Error::InvalidArgument(format!(
            "component separation data exists only for c2 = 10, got {c2}"
        )));
    }
    let probes = vec![
        probe(&M3_GENERIC, -5, Some(1))?,
        probe(&V_2_1, -5, Some(0))?,
        probe(&M2_GENERIC, -3, Some(1))?,
        probe(&M3_GENERIC, -3, Some(6))?,
        probe(&V_33_221, -3, Some(0))?,
        probe(&V_2_1, -3, None)?,
    ];
    let pairs = [
        (&V_2_1, &M3_GENERIC, -5),
        (&V_33_221, &M2_GENERIC, -3),
        (&V_33_221, &M3_GENERIC, -3),
        (&V_2_1, &M2_GENERIC, -3),
    ];
    let separations = pairs
        .iter()
        .map(|(family, component, twist)| {
            let f = probe(family, *twist, None)?;
            let c = probe(component, *twist, None)?;
            Ok(Separation {
                family: family.name.to_string(),
                component: component.name.split(' ').next().unwrap_or(component.name).to_string(),
                twist: *twist,
                family_h1: f.h1,
                component_h1: c.h1,
                separated: f.h1 == 0 && c.h1 >= 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeparationReport { probes, separations })
}
