//! Sparse polynomials in `x, y, z, w` with terms kept in descending
//! degrevlex order (`x > y > z > w`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use crate::error::Result;

pub const VARIABLES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; 4],
}

impl Monomial {
    pub fn new(exps: [u16; 4]) -> Self {
        Monomial { exps }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; 4];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> [u16; 4] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut exps = other.exps;
        for (e, s) in exps.iter_mut().zip(self.exps) {
            *e -= s;
        }
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = (*e).max(o);
        }
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a == 0 || b == 0)
    }

    /// The variable index if this is `v^e` with `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..4).filter(|&i| self.exps[i] > 0).collect();
        match nonzero[..] {
            [i] => Some(i),
            _ => None,
        }
    }

    /// All monomials of total degree `d`, in descending order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let d = d as u16;
        let mut out = Vec::new();
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                for c in (0..=d - a - b).rev() {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort_by(|x, y| y.cmp(x));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // reverse lexicographic from the last variable: a smaller power
            // of the last differing variable is the larger monomial
            for i in (0..4).rev() {
                match self.exps[i].cmp(&other.exps[i]) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                f.write_str(VARIABLES[i])?;
            } else {
                write!(f, "{}^{}", VARIABLES[i], e)?;
            }
        }
        Ok(())
    }
}

/// Polynomial with nonzero coefficients only, terms in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn from_terms<F: Field<Elem = E>>(field: &F, terms: Vec<(Monomial, E)>) -> Self {
        let mut acc: BTreeMap<Monomial, E> = BTreeMap::new();
        for (m, c) in terms {
            let entry = acc.entry(m).or_insert_with(|| field.zero());
            *entry = field.add(entry, &c);
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !field.is_zero(c)).collect();
        Poly { terms }
    }

    pub fn monomial<F: Field<Elem = E>>(field: &F, c: E, m: Monomial) -> Self {
        Poly::from_terms(field, vec![(m, c)])
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Self {
        Poly { terms: self.terms.iter().skip(1).cloned().collect() }
    }

    pub fn lm(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.lm().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&E> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, field.mul(c, d))).collect() }
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(field, &field.inv(c)),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.combine(field, other, &field.one(), &Monomial::one())
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.combine(field, other, &field.neg(&field.one()), &Monomial::one())
    }

    /// `self + c * m * other`, by merging the sorted term lists.
    pub fn combine<F: Field<Elem = E>>(&self, field: &F, other: &Self, c: &E, m: &Monomial) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().map(|(t, d)| (t.mul(m), field.mul(c, d))).peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(left.next().unwrap().clone()),
                (None, Some(_)) => out.push(right.next().unwrap()),
                (Some((lm, _)), Some((rm, _))) => match lm.cmp(rm) {
                    Ordering::Greater => out.push(left.next().unwrap().clone()),
                    Ordering::Less => out.push(right.next().unwrap()),
                    Ordering::Equal => {
                        let (lm, lc) = left.next().unwrap();
                        let (_, rc) = right.next().unwrap();
                        let sum = field.add(lc, &rc);
                        if !field.is_zero(&sum) {
                            out.push((*lm, sum));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }

    pub fn mul_term<F: Field<Elem = E>>(&self, field: &F, c: &E, m: &Monomial) -> Self {
        if field.is_zero(c) {
            return Poly::zero();
        }
        // multiplication by a monomial preserves the term order
        Poly { terms: self.terms.iter().map(|(t, d)| (t.mul(m), field.mul(c, d))).collect() }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut acc: BTreeMap<Monomial, E> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let entry = acc.entry(m1.mul(m2)).or_insert_with(|| field.zero());
                *entry = field.add(entry, &field.mul(c1, c2));
            }
        }
        Poly { terms: acc.into_iter().rev().filter(|(_, c)| !field.is_zero(c)).collect() }
    }

    /// Coefficient-wise map into another field.
    pub fn map<G: Field>(&self, target: &G, f: impl Fn(&E) -> Result<G::Elem>) -> Result<Poly<G::Elem>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, f(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(target, terms))
    }
}

impl<E: fmt::Display> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{PrimeField, Rationals};
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn m(e: [u16; 4]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn degrevlex_order() {
        // x > y > z > w in degree one
        assert!(m([1, 0, 0, 0]) > m([0, 1, 0, 0]));
        assert!(m([0, 0, 1, 0]) > m([0, 0, 0, 1]));
        // x*w < y^2 in degrevlex (smaller power of w wins)
        assert!(m([0, 2, 0, 0]) > m([1, 0, 0, 1]));
        assert!(m([0, 0, 0, 3]) > m([2, 0, 0, 0]));
        assert_eq!(Monomial::all_of_degree(3).len(), 20);
        assert_eq!(Monomial::all_of_degree(0), vec![Monomial::one()]);
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m([0, 0, 5, 0]).pure_power_of(), Some(2));
        assert_eq!(m([1, 0, 5, 0]).pure_power_of(), None);
        assert_eq!(Monomial::one().pure_power_of(), None);
    }

    #[test]
    fn arithmetic_cancels() {
        let f = PrimeField::new(101).unwrap();
        let x = Poly::monomial(&f, 1, Monomial::var(0));
        let y = Poly::monomial(&f, 1, Monomial::var(1));
        let sum = x.add(&f, &y);
        let diff = x.sub(&f, &y);
        let prod = sum.mul(&f, &diff);
        let x2 = x.mul(&f, &x);
        let y2 = y.mul(&f, &y);
        assert_eq!(prod, x2.sub(&f, &y2));
        assert!(prod.sub(&f, &prod).is_zero());
        assert!(prod.is_homogeneous());
        assert_eq!(prod.to_string(), "(1)*x^2 + (100)*y^2");
    }

    type Dense = HashMap<[u16; 4], i64>;

    fn to_dense(p: &Poly<BigRational>) -> Dense {
        use num_traits::ToPrimitive;
        p.terms().iter().map(|(m, c)| (m.exps(), c.to_integer().to_i64().unwrap())).collect()
    }

    fn dense_mul(a: &Dense, b: &Dense) -> Dense {
        let mut out = Dense::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                *out.entry(e).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn homogeneous() -> impl Strategy<Value = Poly<BigRational>> {
        (0u32..=6, proptest::collection::vec((-5i64..=5, 0usize..84), 0..8)).prop_map(|(d, raw)| {
            let basis = Monomial::all_of_degree(d);
            let terms = raw
                .into_iter()
                .map(|(c, i)| (basis[i % basis.len()], BigRational::from_integer(c.into())))
                .collect();
            Poly::from_terms(&Rationals, terms)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in homogeneous(), b in homogeneous(), c in homogeneous()) {
            let q = Rationals;
            prop_assert_eq!(a.mul(&q, &b), b.mul(&q, &a));
            prop_assert_eq!(a.mul(&q, &b).mul(&q, &c), a.mul(&q, &b.mul(&q, &c)));
            prop_assert_eq!(a.add(&q, &b).add(&q, &c), a.add(&q, &b.add(&q, &c)));
            prop_assert_eq!(a.add(&q, &b), b.add(&q, &a));
            prop_assert!(a.sub(&q, &a).is_zero());
            let one = Poly::monomial(&q, q.one(), Monomial::one());
            prop_assert_eq!(a.mul(&q, &one), a.clone());
            // distributivity holds whenever the sum is defined
            prop_assert_eq!(
                a.mul(&q, &b.add(&q, &c)),
                a.mul(&q, &b).add(&q, &a.mul(&q, &c))
            );
            prop_assert_eq!(to_dense(&a.mul(&q, &b)), dense_mul(&to_dense(&a), &to_dense(&b)));
            prop_assert!(a.mul(&q, &b).is_homogeneous());
            for w in a.terms().windows(2) {
                prop_assert!(w[0].0 > w[1].0);
            }
        }
    }
}
