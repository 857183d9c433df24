//! Row reduction and small matrix utilities over a finite field.
//!
//! Vectors are `Vec<u64>` of element indices; every routine takes the field
//! by reference. Reduced row echelon form is the canonical representative
//! used for subspace identity throughout the crate.

use crate::algebra::FiniteField;

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// removed, so the result has exactly `rank` rows.
pub fn rref(rows: &mut Vec<Vec<u64>>, field: &FiniteField) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = field.inv(rows[pivot_row][col]).expect("pivot is nonzero");
        for x in rows[pivot_row].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    let sub = field.mul(factor, *p);
                    *x = field.sub(*x, sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    rows.sort_by_key(|r| r.iter().position(|&x| x != 0));
    rows.len()
}

/// Whether `v` lies in the row space of the RREF matrix `basis`.
pub fn in_row_space(basis: &[Vec<u64>], v: &[u64], field: &FiniteField) -> bool {
    let mut w = v.to_vec();
    for row in basis {
        let pivot = row.iter().position(|&x| x != 0).expect("basis rows nonzero");
        if w[pivot] != 0 {
            let factor = w[pivot];
            for (wc, rc) in w.iter_mut().zip(row) {
                let sub = field.mul(factor, *rc);
                *wc = field.sub(*wc, sub);
            }
        }
    }
    w.iter().all(|&x| x == 0)
}

/// Matrix-vector product M v.
pub fn mat_vec(m: &[Vec<u64>], v: &[u64], field: &FiniteField) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}

/// Matrix product A B.
pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], field: &FiniteField) -> Vec<Vec<u64>> {
    let ncols = b[0].len();
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    row.iter()
                        .enumerate()
                        .fold(0u64, |acc, (k, &x)| field.add(acc, field.mul(x, b[k][j])))
                })
                .collect()
        })
        .collect()
}

/// Rank of a matrix (copies, then reduces).
pub fn rank(m: &[Vec<u64>], field: &FiniteField) -> usize {
    let mut rows = m.to_vec();
    rref(&mut rows, field)
}

/// Scale a nonzero vector so its first nonzero coordinate is 1; the canonical
/// representative of a projective point.
pub fn normalize_projective(v: &[u64], field: &FiniteField) -> Vec<u64> {
    let pivot = v.iter().position(|&x| x != 0).expect("zero vector has no direction");
    let inv = field.inv(v[pivot]).unwrap();
    v.iter().map(|&x| field.mul(x, inv)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteField;

    #[test]
    fn rref_canonical_for_equal_row_spaces() {
        let f = FiniteField::of_order(3).unwrap();
        let mut a = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 1]];
        let mut b = vec![vec![1, 0, 1, 2], vec![2, 2, 1, 0]]; // row ops of the same space
        let ra = rref(&mut a, &f);
        let rb = rref(&mut b, &f);
        assert_eq!(ra, 2);
        assert_eq!(rb, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn row_space_membership() {
        let f = FiniteField::of_order(2).unwrap();
        let mut basis = vec![vec![1, 0, 1, 0], vec![0, 1, 1, 0]];
        rref(&mut basis, &f);
        assert!(in_row_space(&basis, &[1, 1, 0, 0], &f));
        assert!(!in_row_space(&basis, &[0, 0, 0, 1], &f));
    }

    #[test]
    fn normalization() {
        let f = FiniteField::of_order(9).unwrap();
        let v = vec![0, 2, 5];
        let n = normalize_projective(&v, &f);
        assert_eq!(n[1], 1);
    }
}
