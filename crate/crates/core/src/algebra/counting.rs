//! Exact counting of subspaces: Gaussian binomials and the closed formula
//! for the number of totally singular k-spaces of a classical form space.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::FormKind;
use crate::{Error, Result};

/// The q-ary Gaussian binomial coefficient: the number of k-dimensional
/// subspaces of an n-dimensional space over a field with q elements,
/// computed as an exact product of integers.
pub fn gaussian_binomial(n: u32, k: u32, q: &BigUint) -> Result<BigUint> {
    if k > n || q < &BigUint::from(2u32) {
        return Err(Error::BadGaussianArgs {
            n,
            k,
            q: q.try_into().unwrap_or(u64::MAX),
        });
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=k {
        num *= q.pow(n - k + i) - BigUint::one();
        den *= q.pow(i) - BigUint::one();
    }
    let (quot, rem) = num_integer::div_rem(num, den);
    debug_assert!(rem.is_zero(), "gaussian binomial division is exact");
    Ok(quot)
}

/// Number of totally singular k-spaces of the form space (kind, n) over
/// GF(q), where q is the field the Gram matrix lives over (so the ambient
/// field itself for hermitian spaces defined over GF(q0^2) is q = q0^2).
///
/// With d the Witt index, the count is the r-ary Gaussian binomial
/// [d choose k] times prod_{i=1..k} (r^{d+e-i} + 1), where r = q for
/// symplectic and quadratic kinds and r = q^2 with half-integral e for
/// hermitian kinds; the half-integral exponents stay integral as powers of q.
pub fn count_totally_singular(kind: FormKind, n: usize, k: usize, q: u64) -> Result<BigUint> {
    let d = kind.witt_index(n).ok_or(Error::UnsupportedForm { kind: kind.name(), n })?;
    if k > d {
        return Err(Error::WittIndexExceeded { k, witt: d });
    }
    if q < 2 {
        return Err(Error::BadGaussianArgs { n: n as u32, k: k as u32, q });
    }
    let e2 = kind.twice_e_for(n);
    // r = base^m with m = 1 (bilinear kinds) or m = 2 (hermitian over
    // GF(q0^2)); the base exponent of r^(d + e - i) is m(d - i) + m*e, and
    // m*e is always integral: e2 for m = 2, e2/2 for m = 1.
    let (base, m, me) = match kind {
        FormKind::Hermitian => {
            let q0 = integer_sqrt(q);
            if q0 * q0 != q {
                return Err(Error::NonSquareField(q));
            }
            (q0, 2u32, e2)
        }
        _ => (q, 1u32, e2 / 2),
    };
    let big_base = BigUint::from(base);
    let r = big_base.pow(m);
    let mut count = gaussian_binomial(d as u32, k as u32, &r)?;
    for i in 1..=k as u32 {
        let exp = m * (d as u32 - i) + me;
        count *= big_base.pow(exp) + BigUint::one();
    }
    Ok(count)
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gb(n: u32, k: u32, q: u64) -> BigUint {
        gaussian_binomial(n, k, &BigUint::from(q)).unwrap()
    }

    #[test]
    fn one_spaces_of_gf2_squared() {
        assert_eq!(gb(2, 1, 2), BigUint::from(3u32));
    }

    #[test]
    fn two_spaces_in_dimension_five_over_gf2() {
        assert_eq!(gb(5, 2, 2), BigUint::from(155u32));
    }

    #[test]
    fn two_spaces_in_dimension_four_over_gf3() {
        // frozen from the brute-force echelon enumeration in enumerate.rs tests
        assert_eq!(gb(4, 2, 3), BigUint::from(130u32));
    }

    #[test]
    fn symmetry() {
        for n in 0..=6u32 {
            for k in 0..=n {
                for q in [2u64, 3, 4, 5] {
                    assert_eq!(gb(n, k, q), gb(n, n - k, q));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gaussian_binomial(2, 3, &BigUint::from(2u32)).is_err());
        assert!(gaussian_binomial(3, 1, &BigUint::from(1u32)).is_err());
    }

    #[test]
    fn singular_point_counts() {
        // symplectic 4-space over GF(2): 15 points
        assert_eq!(
            count_totally_singular(FormKind::Symplectic, 4, 1, 2).unwrap(),
            BigUint::from(15u32)
        );
        // hermitian 5-space over GF(4): (q0^2+1)(q0^5+1) = 165 at q0 = 2
        assert_eq!(
            count_totally_singular(FormKind::Hermitian, 5, 1, 4).unwrap(),
            BigUint::from(165u32)
        );
        // minus-type 6-space over GF(2): 27 points
        assert_eq!(
            count_totally_singular(FormKind::QuadraticMinus, 6, 1, 2).unwrap(),
            BigUint::from(27u32)
        );
    }

    #[test]
    fn singular_line_counts_match_known_geometries() {
        // symplectic 4-space over GF(2): 15 lines
        assert_eq!(
            count_totally_singular(FormKind::Symplectic, 4, 2, 2).unwrap(),
            BigUint::from(15u32)
        );
        // minus-type 6-space over GF(2): 45 lines
        assert_eq!(
            count_totally_singular(FormKind::QuadraticMinus, 6, 2, 2).unwrap(),
            BigUint::from(45u32)
        );
        // hermitian 5-space over GF(4): 297 lines
        assert_eq!(
            count_totally_singular(FormKind::Hermitian, 5, 2, 4).unwrap(),
            BigUint::from(297u32)
        );
        // hermitian 4-space over GF(4): 45 points, 27 lines
        assert_eq!(
            count_totally_singular(FormKind::Hermitian, 4, 1, 4).unwrap(),
            BigUint::from(45u32)
        );
        assert_eq!(
            count_totally_singular(FormKind::Hermitian, 4, 2, 4).unwrap(),
            BigUint::from(27u32)
        );
    }

    #[test]
    fn witt_index_guard() {
        assert!(matches!(
            count_totally_singular(FormKind::Symplectic, 4, 3, 2),
            Err(Error::WittIndexExceeded { .. })
        ));
        assert!(count_totally_singular(FormKind::QuadraticMinus, 5, 1, 2).is_err());
    }
}
