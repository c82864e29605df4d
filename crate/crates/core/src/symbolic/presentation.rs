//! Explicit monads `C --alpha--> B --beta--> A` given by matrices of forms.

use std::collections::HashMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Field, Rationals};
use super::linalg::{rank, Matrix};
use super::poly::{Monomial, Poly, VARIABLES};
use crate::cohomology::h0_p3;
use crate::error::{Error, Result};

pub type PolyMatrix = Vec<Vec<Poly<BigRational>>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonadPresentation {
    c_degrees: Vec<i64>,
    b_degrees: Vec<i64>,
    a_degrees: Vec<i64>,
    alpha: PolyMatrix,
    beta: PolyMatrix,
}

impl MonadPresentation {
    /// Checks only matrix sizes; degree bookkeeping is reported by
    /// [`MonadPresentation::validate`].
    pub fn new(
        c_degrees: Vec<i64>,
        b_degrees: Vec<i64>,
        a_degrees: Vec<i64>,
        alpha: PolyMatrix,
        beta: PolyMatrix,
    ) -> Result<Self> {
        check_size("alpha", &alpha, b_degrees.len(), c_degrees.len())?;
        check_size("beta", &beta, a_degrees.len(), b_degrees.len())?;
        Ok(MonadPresentation { c_degrees, b_degrees, a_degrees, alpha, beta })
    }

    pub fn c_degrees(&self) -> &[i64] {
        &self.c_degrees
    }

    pub fn b_degrees(&self) -> &[i64] {
        &self.b_degrees
    }

    pub fn a_degrees(&self) -> &[i64] {
        &self.a_degrees
    }

    pub fn matrix(&self, map: MapKind) -> &PolyMatrix {
        match map {
            MapKind::Alpha => &self.alpha,
            MapKind::Beta => &self.beta,
        }
    }

    /// (source, target) summand twists of a map.
    pub fn degrees(&self, map: MapKind) -> (&[i64], &[i64]) {
        match map {
            MapKind::Alpha => (&self.c_degrees, &self.b_degrees),
            MapKind::Beta => (&self.b_degrees, &self.a_degrees),
        }
    }

    pub fn rank(&self) -> i64 {
        self.b_degrees.len() as i64 - self.a_degrees.len() as i64 - self.c_degrees.len() as i64
    }

    pub fn c1(&self) -> i64 {
        let sum = |v: &[i64]| v.iter().sum::<i64>();
        sum(&self.b_degrees) - sum(&self.a_degrees) - sum(&self.c_degrees)
    }

    /// From additivity of the Chern character: `c1^2 - 2 c2 = sum of signed
    /// squared twists`.
    pub fn c2(&self) -> i64 {
        let sq = |v: &[i64]| v.iter().map(|d| d * d).sum::<i64>();
        let ch2 = sq(&self.b_degrees) - sq(&self.a_degrees) - sq(&self.c_degrees);
        (self.c1() * self.c1() - ch2) / 2
    }

    /// Degree, minimality and symmetry problems, empty when the presentation
    /// is a well-formed minimal monad of a rank 2 bundle with `c1 = -1`.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for map in [MapKind::Alpha, MapKind::Beta] {
            let (src, dst) = self.degrees(map);
            let name = match map {
                MapKind::Alpha => "alpha",
                MapKind::Beta => "beta",
            };
            for (i, row) in self.matrix(map).iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let want = dst[i] - src[j];
                    if want <= 0 {
                        problems.push(format!("{name}[{i}][{j}] must vanish (required degree {want})"));
                    } else if !p.is_homogeneous() || p.degree() != Some(want as u32) {
                        problems.push(format!("{name}[{i}][{j}] is not homogeneous of degree {want}"));
                    }
                }
            }
        }
        let mut b = self.b_degrees.clone();
        let mut dual: Vec<i64> = b.iter().map(|d| -d - 1).collect();
        b.sort_unstable();
        dual.sort_unstable();
        if b != dual {
            problems.push("bDegrees are not closed under d -> -d-1".into());
        }
        if self.rank() != 2 {
            problems.push(format!("cohomology has rank {}, expected 2", self.rank()));
        }
        if self.c1() != -1 {
            problems.push(format!("c1 = {}, expected -1", self.c1()));
        }
        problems
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Presentation(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawPresentation = serde_json::from_str(text).map_err(|e| Error::Presentation(e.to_string()))?;
        if raw.variables != VARIABLES {
            return Err(Error::Presentation(format!("variables must be {VARIABLES:?}, got {:?}", raw.variables)));
        }
        let alpha = raw.alpha.iter().map(|r| r.iter().map(|p| parse_poly(p)).collect()).collect::<Result<_>>()?;
        let beta = raw.beta.iter().map(|r| r.iter().map(|p| parse_poly(p)).collect()).collect::<Result<_>>()?;
        Self::new(raw.c_degrees, raw.b_degrees, raw.a_degrees, alpha, beta)
            .map_err(|e| Error::Presentation(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let dump = |m: &PolyMatrix| m.iter().map(|r| r.iter().map(dump_poly).collect()).collect();
        let raw = RawPresentation {
            variables: VARIABLES.iter().map(|v| v.to_string()).collect(),
            c_degrees: self.c_degrees.clone(),
            b_degrees: self.b_degrees.clone(),
            a_degrees: self.a_degrees.clone(),
            alpha: dump(&self.alpha),
            beta: dump(&self.beta),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }

    /// A matrix with every entry mapped into `field`.
    pub fn matrix_over<F: Field>(&self, field: &F, map: MapKind) -> Result<Vec<Vec<Poly<F::Elem>>>> {
        self.matrix(map)
            .iter()
            .map(|row| row.iter().map(|p| p.map(field, |c| field.from_rational(c))).collect())
            .collect()
    }

    /// Whether `beta * alpha` vanishes identically, in exact arithmetic.
    pub fn compose_is_zero(&self) -> bool {
        let q = Rationals;
        self.beta.iter().all(|row| {
            (0..self.c_degrees.len()).all(|j| {
                row.iter()
                    .zip(&self.alpha)
                    .fold(Poly::zero(), |acc, (b, arow)| acc.add(&q, &b.mul(&q, &arow[j])))
                    .is_zero()
            })
        })
    }

    /// Matrix of the map on degree-`l` global sections in monomial bases;
    /// summands without sections contribute no rows or columns.
    pub fn section_matrix<F: Field>(&self, field: &F, map: MapKind, l: i64) -> Result<Matrix<F::Elem>> {
        let (src, dst) = self.degrees(map);
        let entries = self.matrix_over(field, map)?;

        let mut row_index: Vec<HashMap<Monomial, usize>> = Vec::with_capacity(dst.len());
        let mut rows = 0;
        for &d in dst {
            let mut index = HashMap::new();
            if d + l >= 0 {
                for m in Monomial::all_of_degree((d + l) as u32) {
                    index.insert(m, rows);
                    rows += 1;
                }
            }
            row_index.push(index);
        }
        let cols: usize = src.iter().map(|&d| section_count(d + l)).sum();

        let mut out = Matrix::zeros(rows, cols, field.zero());
        let mut col = 0;
        for (j, &d) in src.iter().enumerate() {
            if d + l < 0 {
                continue;
            }
            for m in Monomial::all_of_degree((d + l) as u32) {
                for (i, index) in row_index.iter().enumerate() {
                    for (t, c) in entries[i][j].terms() {
                        let r = *index.get(&t.mul(&m)).ok_or_else(|| {
                            Error::DimensionMismatch(format!("entry ({i},{j}) has the wrong degree"))
                        })?;
                        let v = field.add(out.get(r, col), c);
                        out.set(r, col, v);
                    }
                }
                col += 1;
            }
        }
        Ok(out)
    }

    fn check_preconditions(&self) -> Result<()> {
        let problems = self.validate();
        if let Some(p) = problems.first() {
            return Err(Error::Presentation(p.clone()));
        }
        if !self.compose_is_zero() {
            return Err(Error::Presentation("beta * alpha is not zero".into()));
        }
        Ok(())
    }

    /// `h^0(E(l))` for the cohomology bundle `E`.
    pub fn h0_e<F: Field>(&self, field: &F, l: i64) -> Result<u64> {
        self.check_preconditions()?;
        let m = self.section_matrix(field, MapKind::Beta, l)?;
        let kernel = (m.cols() - rank(field, &m)) as u64;
        let c_sections: u64 = self.c_degrees.iter().map(|&d| section_count(d + l) as u64).sum();
        kernel
            .checked_sub(c_sections)
            .ok_or_else(|| Error::Presentation(format!("kernel of beta at twist {l} is smaller than the image of alpha")))
    }

    /// `h^1(E(l))`, the cokernel of `beta` on sections.
    pub fn h1_e<F: Field>(&self, field: &F, l: i64) -> Result<u64> {
        self.check_preconditions()?;
        let m = self.section_matrix(field, MapKind::Beta, l)?;
        Ok((m.rows() - rank(field, &m)) as u64)
    }

    /// `h^2(E(l)) = h^1(E(-l-3))` by Serre duality and `E* = E(1)`.
    pub fn h2_e<F: Field>(&self, field: &F, l: i64) -> Result<u64> {
        self.h1_e(field, -l - 3)
    }

    pub fn h3_e<F: Field>(&self, field: &F, l: i64) -> Result<u64> {
        self.h0_e(field, -l - 3)
    }
}

fn section_count(d: i64) -> usize {
    use num_traits::ToPrimitive;
    h0_p3(d).to_usize().expect("small twist")
}

fn check_size(name: &str, m: &PolyMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("{name} must be {rows}x{cols}")));
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct RawPresentation {
    variables: Vec<String>,
    c_degrees: Vec<i64>,
    b_degrees: Vec<i64>,
    a_degrees: Vec<i64>,
    alpha: Vec<Vec<Vec<RawTerm>>>,
    beta: Vec<Vec<Vec<RawTerm>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    c: String,
    e: [u16; 4],
}

fn parse_poly(terms: &[RawTerm]) -> Result<Poly<BigRational>> {
    let parsed = terms
        .iter()
        .map(|t| {
            let c = parse_coefficient(&t.c)?;
            Ok((Monomial::new(t.e), c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_terms(&Rationals, parsed))
}

fn parse_coefficient(s: &str) -> Result<BigRational> {
    let bad = || Error::Presentation(format!("bad coefficient {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn dump_poly(p: &Poly<BigRational>) -> Vec<RawTerm> {
    p.terms()
        .iter()
        .map(|(m, c)| RawTerm {
            c: if c.denom().is_one() { c.numer().to_string() } else { c.to_string() },
            e: m.exps(),
        })
        .collect()
}
