//! Buchberger's algorithm and the projective emptiness test built on it.

use itertools::Itertools;

use super::field::Field;
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<F: Field>(field: &F, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    let left = f.mul_term(field, &field.inv(fc), &fm.quotient_of(&lcm));
    let right_coeff = field.neg(&field.inv(gc));
    left.combine(field, g, &right_coeff, &gm.quotient_of(&lcm))
}

/// Fully reduced remainder of `f` modulo `basis`.
pub fn normal_form<F: Field>(field: &F, f: &Poly<F::Elem>, basis: &[Poly<F::Elem>]) -> Poly<F::Elem> {
    let mut p = f.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading().cloned() {
        match basis.iter().find(|g| g.lm().is_some_and(|gm| gm.divides(&m))) {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                let q = field.neg(&field.mul(&c, &field.inv(gc)));
                p = p.combine(field, g, &q, &gm.quotient_of(&m));
            }
            None => {
                rest.push((m, c));
                p = p.tail();
            }
        }
    }
    Poly::from_terms(field, rest)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Runs Buchberger until the basis is complete or `stop` accepts the current
/// generators. Returns the generators and whether the run completed.
fn buchberger<F: Field>(
    field: &F,
    gens: &[Poly<F::Elem>],
    stop: impl Fn(&[Poly<F::Elem>]) -> bool,
) -> (Vec<Poly<F::Elem>>, bool) {
    let mut basis: Vec<Poly<F::Elem>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<Poly<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(field)).collect();
    pending.sort_by_key(|p| std::cmp::Reverse(p.lm()));
    while let Some(g) = pending.pop() {
        let h = normal_form(field, &g, &basis);
        if !h.is_zero() {
            insert(&mut basis, &mut pairs, h.monic(field));
        }
    }

    loop {
        if stop(&basis) {
            return (basis, false);
        }
        // normal selection: smallest lcm first, ties broken deterministically
        let Some(pos) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| p.lcm.cmp(&q.lcm).then((p.i, p.j).cmp(&(q.i, q.j))))
            .map(|(k, _)| k)
        else {
            return (basis, true);
        };
        let pair = pairs.swap_remove(pos);
        let s = s_polynomial(field, &basis[pair.i], &basis[pair.j]);
        let h = normal_form(field, &s, &basis);
        if !h.is_zero() {
            insert(&mut basis, &mut pairs, h.monic(field));
        }
    }
}

/// Adds a new generator and updates the pair list with the Gebauer–Möller
/// criteria.
fn insert<E: Clone + PartialEq>(basis: &mut Vec<Poly<E>>, pairs: &mut Vec<Pair>, h: Poly<E>) {
    let t = basis.len();
    let hm = h.lm().expect("nonzero");
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().unwrap()).collect();

    pairs.retain(|p| {
        !(hm.divides(&p.lcm) && lms[p.i].lcm(&hm) != p.lcm && lms[p.j].lcm(&hm) != p.lcm)
    });

    let fresh: Vec<(usize, Monomial, bool)> = lms.iter().enumerate().map(|(i, m)| (i, m.lcm(&hm), m.coprime(&hm))).collect();
    // drop pairs whose lcm is a proper multiple of another new lcm
    let mut minimal: Vec<&(usize, Monomial, bool)> = fresh
        .iter()
        .filter(|(_, l, _)| !fresh.iter().any(|(_, o, _)| o != l && o.divides(l)))
        .collect();
    minimal.sort_by_key(|(_, l, _)| *l);
    // one pair per lcm, none at all if the lcm class contains a coprime pair
    for (_, group) in &minimal.iter().chunk_by(|(_, l, _)| *l) {
        let group: Vec<_> = group.collect();
        if group.iter().any(|(_, _, coprime)| *coprime) {
            continue;
        }
        let (i, lcm, _) = group[0];
        pairs.push(Pair { i: *i, j: t, lcm: *lcm });
    }
    basis.push(h);
}

/// Reduced Gröbner basis, monic and sorted by increasing leading monomial.
pub fn groebner_basis<F: Field>(field: &F, gens: &[Poly<F::Elem>]) -> Vec<Poly<F::Elem>> {
    let (basis, _) = buchberger(field, gens, |_| false);
    reduce_basis(field, basis)
}

fn reduce_basis<F: Field>(field: &F, basis: Vec<Poly<F::Elem>>) -> Vec<Poly<F::Elem>> {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().unwrap()).collect();
    let mut keep: Vec<Poly<F::Elem>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(j, m)| j != i && m.divides(&lms[i]) && (m != &lms[i] || j < i));
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly<F::Elem>> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let (m, c) = keep[i].leading().unwrap().clone();
        let tail = normal_form(field, &keep[i].tail(), &others);
        let g = Poly::monomial(field, c, m).add(field, &tail).monic(field);
        out.push(g);
    }
    out.sort_by_key(|g| g.lm());
    out
}

fn has_all_pure_powers<E>(basis: &[Poly<E>]) -> bool
where
    E: Clone + PartialEq,
{
    let mut seen = [false; 4];
    for g in basis {
        let Some(m) = g.lm() else { continue };
        if m.degree() == 0 {
            return true;
        }
        if let Some(v) = m.pure_power_of() {
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s)
}

/// Whether the homogeneous ideal has no zeros in projective 3-space.
pub fn ideal_is_irrelevant<F: Field>(field: &F, gens: &[Poly<F::Elem>]) -> bool {
    let (basis, _) = buchberger(field, gens, has_all_pure_powers);
    has_all_pure_powers(&basis)
}

pub fn determinant<F: Field>(field: &F, m: &[Vec<Poly<F::Elem>>]) -> Poly<F::Elem> {
    match m.len() {
        0 => Poly::monomial(field, field.one(), Monomial::one()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly<F::Elem>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = m[0][col].mul(field, &determinant(field, &minor));
                acc = if col % 2 == 0 { acc.add(field, &term) } else { acc.sub(field, &term) };
            }
            acc
        }
    }
}

/// All `k x k` minors, rows and columns taken in lexicographic order.
pub fn minors<F: Field>(field: &F, m: &[Vec<Poly<F::Elem>>], k: usize) -> Result<Vec<Poly<F::Elem>>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }
    if k == 0 || k > rows.min(cols) {
        return Err(Error::InvalidArgument(format!("no {k}x{k} minors in a {rows}x{cols} matrix")));
    }
    let mut out = Vec::new();
    for rs in (0..rows).combinations(k) {
        for cs in (0..cols).combinations(k) {
            let sub: Vec<Vec<Poly<F::Elem>>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
            out.push(determinant(field, &sub));
        }
    }
    Ok(out)
}

/// True iff the `k x k` minors of `matrix` have no common zero in projective
/// 3-space, decided over `field`. Emptiness over a prime field implies
/// emptiness in characteristic zero, the converse can fail at a bad prime.
pub fn degeneracy_locus_empty<F: Field>(field: &F, matrix: &[Vec<Poly<F::Elem>>], k: usize) -> Result<bool> {
    let gens = minors(field, matrix, k)?;
    Ok(ideal_is_irrelevant(field, &gens))
}

#[cfg(test)]
mod tests {
    use super::super::field::PrimeField;
    use super::*;

    fn var(f: &PrimeField, i: usize) -> Poly<u64> {
        Poly::monomial(f, 1, Monomial::var(i))
    }

    #[test]
    fn visible_common_zero() {
        let f = PrimeField::new(32003).unwrap();
        let m = vec![vec![var(&f, 0), var(&f, 1)]];
        assert!(!degeneracy_locus_empty(&f, &m, 1).unwrap());
        assert!(degeneracy_locus_empty(&f, &m, 2).is_err());
    }

    #[test]
    fn coordinate_ideal_is_irrelevant() {
        let f = PrimeField::new(101).unwrap();
        let gens: Vec<_> = (0..4).map(|i| var(&f, i).mul(&f, &var(&f, i))).collect();
        assert!(ideal_is_irrelevant(&f, &gens));
        assert!(!ideal_is_irrelevant(&f, &gens[..3]));
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x, y, z], [y, z, w]]
        let f = PrimeField::new(32003).unwrap();
        let m = vec![
            vec![var(&f, 0), var(&f, 1), var(&f, 2)],
            vec![var(&f, 1), var(&f, 2), var(&f, 3)],
        ];
        let gens = minors(&f, &m, 2).unwrap();
        let basis = groebner_basis(&f, &gens);
        assert_eq!(basis.len(), 3);
        for g in &gens {
            assert!(normal_form(&f, g, &basis).is_zero());
        }
        assert!(!degeneracy_locus_empty(&f, &m, 2).unwrap());
    }

    #[test]
    fn determinant_of_diagonal() {
        let f = PrimeField::new(7).unwrap();
        let z = Poly::zero();
        let m = vec![
            vec![var(&f, 0), z.clone(), z.clone()],
            vec![z.clone(), var(&f, 1), z.clone()],
            vec![z.clone(), z, var(&f, 2)],
        ];
        let d = determinant(&f, &m);
        assert_eq!(d, Poly::monomial(&f, 1, Monomial::new([1, 1, 1, 0])));
    }
}
