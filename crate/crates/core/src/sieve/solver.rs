//! The order equation (s+1)(st+1) = N and its discriminant, solved exactly.

use num_bigint::BigUint;
use num_traits::Zero;

/// Floor integer square root, with the defining inequalities asserted.
pub fn isqrt(n: &BigUint) -> BigUint {
    let r = n.sqrt();
    debug_assert!(&r * &r <= *n && (&r + 1u32) * (&r + 1u32) > *n);
    r
}

/// Exact perfect-square test; returns the root when square.
pub fn is_perfect_square(n: &BigUint) -> (bool, BigUint) {
    let r = isqrt(n);
    (&r * &r == *n, r)
}

/// Outcome of solving ts^2 + (t+1)s + (1 - N) = 0 for a positive integer s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSolution {
    /// Delta = (t+1)^2 + 4t(N-1).
    pub delta: BigUint,
    pub delta_is_square: bool,
    /// The positive integer solution, when one exists.
    pub s: Option<BigUint>,
}

/// Solve (s+1)(st+1) = N for integer s >= 1, given t >= 1. The discriminant
/// is computed exactly and tested by integer square root; the root must then
/// make s = (sqrt(Delta) - (t+1)) / 2t a positive integer.
pub fn solve_order_equation(n: &BigUint, t: &BigUint) -> OrderSolution {
    let one = BigUint::from(1u32);
    let tp1 = t + &one;
    let delta = if *n >= one {
        &tp1 * &tp1 + BigUint::from(4u32) * t * (n - &one)
    } else {
        &tp1 * &tp1
    };
    let (square, root) = is_perfect_square(&delta);
    if !square {
        return OrderSolution { delta, delta_is_square: false, s: None };
    }
    if root <= tp1 {
        return OrderSolution { delta, delta_is_square: true, s: None };
    }
    let num = &root - &tp1;
    let den = BigUint::from(2u32) * t;
    let (s, rem) = num_integer::div_rem(num, den);
    if rem.is_zero() && !s.is_zero() {
        debug_assert_eq!((&s + &one) * (&s * t + &one), *n);
        OrderSolution { delta, delta_is_square: true, s: Some(s) }
    } else {
        OrderSolution { delta, delta_is_square: true, s: None }
    }
}

/// The equivalent discriminant (t-1)^2 + 4dt for degree d; algebraically
/// identical to the Delta of `solve_order_equation` at N = d.
pub fn discriminant_td(t: &BigUint, d: &BigUint) -> BigUint {
    let one = BigUint::from(1u32);
    let tm1 = if *t >= one { t - &one } else { BigUint::ZERO };
    &tm1 * &tm1 + BigUint::from(4u32) * d * t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn square_delta_without_integral_solution() {
        let sol = solve_order_equation(&b(57), &b(5));
        assert_eq!(sol.delta, b(1156));
        assert!(sol.delta_is_square);
        assert_eq!(sol.s, None); // 28/10 is not an integer
    }

    #[test]
    fn non_square_delta() {
        let sol = solve_order_equation(&b(57), &b(4));
        assert_eq!(sol.delta, b(921));
        assert!(!sol.delta_is_square);
        assert_eq!(sol.s, None);
    }

    #[test]
    fn doily_parameters_invert() {
        let sol = solve_order_equation(&b(15), &b(2));
        assert_eq!(sol.delta, b(121));
        assert_eq!(sol.s, Some(b(2)));
    }

    #[test]
    fn discriminant_identity() {
        // (t+1)^2 + 4t(N-1) = (t-1)^2 + 4Nt
        for t in 1..50u64 {
            for n in 1..200u64 {
                let lhs = solve_order_equation(&b(n), &b(t)).delta;
                let rhs = discriminant_td(&b(t), &b(n));
                assert_eq!(lhs, rhs, "t={t}, N={n}");
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant_td(&b(4), &b(36)), b(585));
        assert_eq!(discriminant_td(&b(3), &b(55)), b(664));
        assert_eq!(discriminant_td(&b(1), &b(1)), b(4));
        assert!(!is_perfect_square(&b(585)).0);
        assert!(!is_perfect_square(&b(664)).0);
    }

    #[test]
    fn agrees_with_exhaustive_scan() {
        // brute force: scan all s with (s+1)(st+1) <= N
        for n in 1..2000u64 {
            for t in 1..60u64 {
                let expected = (1..).map(|s| (s, (s + 1) * (s * t + 1)))
                    .take_while(|&(_, v)| v <= n)
                    .find(|&(_, v)| v == n)
                    .map(|(s, _)| b(s));
                let got = solve_order_equation(&b(n), &b(t)).s;
                assert_eq!(got, expected, "N={n}, t={t}");
            }
        }
    }

    #[test]
    fn isqrt_large_values_exact() {
        let big = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let sq = &big * &big;
        assert_eq!(isqrt(&sq), big);
        let (ok, _) = is_perfect_square(&(sq.clone() + 1u32));
        assert!(!ok);
    }
}
