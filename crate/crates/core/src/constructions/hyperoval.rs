//! Hyperovals of PG(2,q), q even: (q+2)-arcs. The regular hyperoval is a
//! conic together with its nucleus.

use std::sync::Arc;

use crate::algebra::FiniteField;
use crate::{Error, Result};

/// A set of q+2 points of PG(2,q), no three collinear.
#[derive(Debug, Clone)]
pub struct Hyperoval {
    field: Arc<FiniteField>,
    /// Canonical projective representatives (first nonzero coordinate 1).
    points: Vec<[u64; 3]>,
}

impl Hyperoval {
    /// Validate an arbitrary candidate point set.
    pub fn new(field: Arc<FiniteField>, mut points: Vec<[u64; 3]>) -> Result<Hyperoval> {
        let q = field.order();
        if field.characteristic() != 2 {
            return Err(Error::OddCharacteristic("hyperoval", q));
        }
        points.sort_unstable();
        points.dedup();
        if points.len() as u64 != q + 2 {
            return Err(Error::NotAHyperoval(format!(
                "{} points, need q + 2 = {}",
                points.len(),
                q + 2
            )));
        }
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate().skip(i + 1) {
                for c in points.iter().skip(j + 1) {
                    if det3(a, b, c, &field) == 0 {
                        return Err(Error::NotAHyperoval(format!(
                            "collinear triple {a:?}, {b:?}, {c:?}"
                        )));
                    }
                }
            }
        }
        Ok(Hyperoval { field, points })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn points(&self) -> &[[u64; 3]] {
        &self.points
    }

    pub fn contains(&self, p: &[u64; 3]) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

fn det3(a: &[u64; 3], b: &[u64; 3], c: &[u64; 3], f: &FiniteField) -> u64 {
    let m = |x: u64, y: u64| f.mul(x, y);
    let pos = f.add(
        f.add(m(a[0], m(b[1], c[2])), m(a[1], m(b[2], c[0]))),
        m(a[2], m(b[0], c[1])),
    );
    let neg = f.add(
        f.add(m(a[2], m(b[1], c[0])), m(a[1], m(b[0], c[2]))),
        m(a[0], m(b[2], c[1])),
    );
    f.sub(pos, neg)
}

/// The regular hyperoval: the conic {(1 : x : x^2)} with its point at
/// infinity (0:0:1) and nucleus (0:1:0). Verified to be an arc.
pub fn regular_hyperoval(q: u64) -> Result<Hyperoval> {
    let field = FiniteField::of_order(q)?;
    if field.characteristic() != 2 {
        return Err(Error::OddCharacteristic("regular hyperoval", q));
    }
    let mut points: Vec<[u64; 3]> = field.elements().map(|x| [1, x, field.mul(x, x)]).collect();
    points.push([0, 0, 1]);
    points.push([0, 1, 0]);
    Hyperoval::new(field, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_hyperoval_q4() {
        let h = regular_hyperoval(4).unwrap();
        assert_eq!(h.points().len(), 6);
    }

    #[test]
    fn regular_hyperoval_q2_degenerate_but_valid() {
        let h = regular_hyperoval(2).unwrap();
        assert_eq!(h.points().len(), 4);
    }

    #[test]
    fn odd_q_rejected() {
        assert!(matches!(regular_hyperoval(3), Err(Error::OddCharacteristic(..))));
    }

    #[test]
    fn collinear_triple_rejected() {
        let field = FiniteField::of_order(4).unwrap();
        // replace a conic point by a point on a secant line
        let mut pts: Vec<[u64; 3]> = regular_hyperoval(4).unwrap().points().to_vec();
        pts.pop();
        pts.push([1, 0, 1]); // forces some collinear triple among 6 points
        assert!(Hyperoval::new(field, pts).is_err());
    }
}
