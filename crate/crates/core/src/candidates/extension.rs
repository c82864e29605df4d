use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

use super::shape::MonadShape;

/// Shape obtained by adjoining a complete intersection curve of type `(u, v)`
/// to the zero locus of a section of `E(r)`: the monad gains `O(-r)` on the
/// left, `O(r-1-u) ⊕ O(r-1-v)` in the middle and `O(r-1)` on the right.
/// `c2` grows by `u·v`.
pub fn extend_shape(base: &MonadShape, r: i64, u: i64, v: i64) -> Result<MonadShape> {
    if r < 1 || v < 1 || u < v {
        return Err(Error::InvalidArgument(format!(
            "need r >= 1 and u >= v >= 1, got r = {r}, u = {u}, v = {v}"
        )));
    }
    if u + v != 2 * r - 1 {
        return Err(Error::InvalidArgument(format!("u + v = {} but 2r - 1 = {}", u + v, 2 * r - 1)));
    }
    if v > r - 1 {
        return Err(Error::InvalidArgument(format!(
            "v = {v} > r - 1 = {} would give a negative b entry",
            r - 1
        )));
    }
    let mut a = base.a.clone();
    a.push(r - 1);
    let mut b = base.b.clone();
    // O(r-1-u) = O(-(r-1-v) - 1), so the pair contributes the single entry r-1-v
    b.push(r - 1 - v);
    MonadShape::new(a, b)
}

/// The negative monad realizing `{-2^(n-1), -1, 0, 1^(n-1)}`:
/// `a = (2^(n-1), (-1)^(n-3))`, `b = 1^(2n-3)`, `c2 = 2n`.
pub fn aa1_shape(n: i64) -> Result<MonadShape> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("the family starts at n = 4, got {n}")));
    }
    let n_usize = n as usize;
    let mut a = vec![2; n_usize - 1];
    a.extend(std::iter::repeat_n(-1, n_usize - 3));
    let b = vec![1; 2 * n_usize - 3];
    let spectrum = Spectrum::new(vec![1, (n - 1) as u32])?;
    Ok(MonadShape::new(a, b)?.with_spectrum(spectrum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(a: &[i64], b: &[i64]) -> MonadShape {
        MonadShape::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn extension_examples() {
        let m2 = shape(&[1, 1], &[0, 0, 0]);
        let ext = extend_shape(&m2, 3, 3, 2).unwrap();
        assert_eq!((ext.a.clone(), ext.b.clone()), (vec![2, 1, 1], vec![0, 0, 0, 0]));
        assert_eq!((m2.c2(), ext.c2()), (4, 10));

        let m7 = shape(&[2, 2], &[1, 1, 1]);
        let ext = extend_shape(&m7, 3, 4, 1).unwrap();
        assert_eq!((ext.a.clone(), ext.b.clone()), (vec![2, 2, 2], vec![1, 1, 1, 1]));
        assert_eq!(ext.c2(), 10);

        let m17 = shape(&[4], &[3, 0]);
        let ext = extend_shape(&m17, 2, 2, 1).unwrap();
        assert_eq!((ext.a.clone(), ext.b.clone()), (vec![4, 1], vec![3, 0, 0]));
        assert_eq!(ext.c2(), 10);
    }

    #[test]
    fn extension_rejects_bad_parameters() {
        let m2 = shape(&[1, 1], &[0, 0, 0]);
        assert!(extend_shape(&m2, 3, 3, 3).is_err());
        assert!(extend_shape(&m2, 2, 3, 0).is_err());
        // u + v = 2r - 1 but v = r
        assert!(extend_shape(&m2, 1, 0, 1).is_err());
    }

    #[test]
    fn aa1_examples() {
        let four = aa1_shape(4).unwrap();
        assert_eq!(four.a, vec![2, 2, 2, -1]);
        assert_eq!(four.b, vec![1; 5]);
        assert_eq!(four.c2(), 8);
        let five = aa1_shape(5).unwrap();
        assert_eq!(five.a, vec![2, 2, 2, 2, -1, -1]);
        assert_eq!(five.b, vec![1; 7]);
        assert_eq!(five.c2(), 10);
        assert_eq!(five.spectrum.unwrap().mult(), &[1, 4]);
        assert_eq!(aa1_shape(6).unwrap().c2(), 12);
        assert!(aa1_shape(3).is_err());
    }
}
