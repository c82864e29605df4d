//! Dimension counts for line bundles on P3, the spectrum dictionary, and the
//! dualizing-sheaf counts for the curves used to build bundles.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// `C(n, k)`, taken to be zero whenever `n < k` (including negative `n`).
pub fn binomial(n: i64, k: u32) -> BigUint {
    if n < k as i64 {
        return BigUint::zero();
    }
    let n = n as u64;
    let mut acc = BigUint::from(1u32);
    for i in 0..k as u64 {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `h^0(P3, O(d))`: the number of degree-`d` monomials in four variables.
pub fn h0_p3(d: i64) -> BigUint {
    if d < 0 {
        BigUint::zero()
    } else {
        binomial(d + 3, 3)
    }
}

/// `dim Hom(⊕ O(s), ⊕ O(t))`, summed over all pairs.
pub fn hom_dim(src: &[i64], dst: &[i64]) -> BigUint {
    src.iter()
        .flat_map(|&s| dst.iter().map(move |&t| h0_p3(t - s)))
        .sum()
}

/// `h^1(E(l))` read off the spectrum, valid for `l <= -1`.
pub fn spectrum_h1(spec: &Spectrum, l: i64) -> Result<u64> {
    if l >= 0 {
        return Err(Error::TwistOutOfRange { index: 1, l });
    }
    Ok(spec
        .expanded()
        .iter()
        .map(|&k| (k + l + 2).max(0) as u64)
        .sum())
}

/// `h^2(E(l))` read off the spectrum, valid for `l >= -2`.
pub fn spectrum_h2(spec: &Spectrum, l: i64) -> Result<u64> {
    if l < -2 {
        return Err(Error::TwistOutOfRange { index: 2, l });
    }
    Ok(spec
        .expanded()
        .iter()
        .map(|&k| (-k - l - 2).max(0) as u64)
        .sum())
}

/// Two plane curves of degrees `d1`, `d2` meeting in `r` collinear points,
/// evaluated at twist `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveUnionSpec {
    pub d1: u32,
    pub d2: u32,
    pub r: u32,
    pub m: i64,
}

fn small(n: BigUint) -> u64 {
    n.to_u64().expect("curve counts fit in u64")
}

/// `h^0(ω_P(m))` for a plane curve of degree `d`, using `ω_P = O_P(d - 3)`.
pub fn plane_curve_omega_dim(d: u32, m: i64) -> u64 {
    let d = d as i64;
    small(binomial(m + d - 1, 2)) - small(binomial(m - 1, 2))
}

/// Rank of the connecting map `H^0(ω_S(m)) -> H^1(ω_{X1}(m)) ⊕ H^1(ω_{X2}(m))`
/// for `r` collinear intersection points.
pub fn connecting_rank(r: u32, m: i64) -> u64 {
    let r = r as i64;
    if m > 0 {
        0
    } else if 2 - r <= m {
        (1 - m) as u64
    } else {
        r as u64
    }
}

/// `h^0(ω_X(m))` for `X = P_{d1} ∪ P_{d2}` meeting in `r >= 1` points.
pub fn plane_union_omega_dim(spec: CurveUnionSpec) -> Result<u64> {
    if spec.d1 == 0 || spec.d2 == 0 {
        return Err(Error::InvalidArgument("plane curve degrees must be positive".into()));
    }
    if spec.r == 0 {
        return Err(Error::InvalidArgument(
            "curves must meet in at least one point; use the plain sum for disjoint unions".into(),
        ));
    }
    let total = plane_curve_omega_dim(spec.d1, spec.m)
        + plane_curve_omega_dim(spec.d2, spec.m)
        + spec.r as u64;
    Ok(total - connecting_rank(spec.r, spec.m))
}

fn quadric_h0(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 {
        0
    } else {
        ((a + 1) * (b + 1)) as u64
    }
}

/// `h^0(ω_X(m))` for a divisor `X` of type `(1, n-1)` on a smooth quadric,
/// via `0 -> O_S(-2,-2) -> O_S(-1,n-3) -> ω_X -> 0`. Only valid for `m <= 2`,
/// where the `h^1` terms of the sequence vanish.
pub fn rational_quadric_omega_dim(n: i64, m: i64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2, got {n}")));
    }
    if m > 2 {
        return Err(Error::InvalidArgument(format!("twist m = {m} exceeds 2")));
    }
    Ok(quadric_h0(m - 1, m + n - 3) - quadric_h0(m - 2, m - 2))
}

/// Riemann–Roch: `χ(E(l))` for a rank-2 bundle on P3 with Chern classes
/// `c1`, `c2` and `c3 = 0`.
pub fn euler_characteristic(c1: i64, c2: i64, l: i64) -> BigInt {
    let c1 = BigInt::from(c1 + 2 * l);
    let c2 = BigInt::from(c2) + (c1.clone() - 2 * l) * l + l * l;
    let six_chi: BigInt = &c1 * &c1 * &c1 - 3 * &c1 * &c2 + 6 * (&c1 * &c1 - 2 * &c2) + 11 * &c1 + 12;
    debug_assert!((&six_chi % BigInt::from(6)).is_zero());
    six_chi / 6
}
