//! Feasibility predicates for candidate quadrangle parameters.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::{Error, Result};

/// Verdict of the basic parameter tests for an order (s, t). Each subtest is
/// reported separately; `feasible` is their conjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub s: u64,
    pub t: u64,
    pub thick: bool,
    /// s + t divides st(s+1)(t+1).
    pub divisibility: bool,
    /// t <= s^2 and s <= t^2.
    pub square_bounds: bool,
    /// if s < t^2 then s <= t^2 - t, and dually.
    pub gap_bounds: bool,
    pub feasible: bool,
    /// Human-readable witness for the first failed subtest, if any.
    pub witness: Option<String>,
}

/// Apply the standard parameter tests to an order (s, t).
pub fn parameter_feasible(s: u64, t: u64) -> FeasibilityVerdict {
    let thick = s >= 2 && t >= 2;
    let sum = BigUint::from(s) + BigUint::from(t);
    let prod = BigUint::from(s) * BigUint::from(t) * BigUint::from(s + 1) * BigUint::from(t + 1);
    let divisibility = prod.mod_floor(&sum).is_zero();
    let square_bounds = t <= s * s && s <= t * t;
    let gap_lower = s >= t * t || s <= t * t - t;
    let gap_upper = t >= s * s || t <= s * s - s;
    let gap_bounds = gap_lower && gap_upper;
    let witness = if !thick {
        Some(format!("thin: ({s},{t})"))
    } else if !divisibility {
        Some(format!("{sum} does not divide {prod}"))
    } else if !square_bounds {
        Some(format!("square bounds fail for ({s},{t})"))
    } else if !gap_bounds {
        Some(format!("gap bounds fail for ({s},{t})"))
    } else {
        None
    };
    FeasibilityVerdict {
        s,
        t,
        thick,
        divisibility,
        square_bounds,
        gap_bounds,
        feasible: thick && divisibility && square_bounds && gap_bounds,
        witness,
    }
}

/// Verdict of the point-count window tests (assuming s <= t on the caller's
/// side): (t+1)^2 < N < (t+1)^3; with s known also s^2(t+1) < N < s(t+1)^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PBoundsVerdict {
    pub lower: bool,
    pub upper: bool,
    pub holds: bool,
}

pub fn pbounds_check(n: &BigUint, t: u64) -> PBoundsVerdict {
    let tp1 = BigUint::from(t + 1);
    let lower = tp1.pow(2) < *n;
    let upper = *n < tp1.pow(3);
    PBoundsVerdict { lower, upper, holds: lower && upper }
}

pub fn pbounds_with_s(n: &BigUint, s: u64, t: u64) -> PBoundsVerdict {
    let tp1 = BigUint::from(t + 1);
    let s = BigUint::from(s);
    let lower = &s * &s * &tp1 < *n;
    let upper = *n < s * tp1.pow(2);
    PBoundsVerdict { lower, upper, holds: lower && upper }
}

/// Exact test of (s+1) |G_P| = (t+1) |G_l|, the stabilizer-ratio identity
/// for groups transitive on points and lines.
pub fn ratio_check(s: u64, t: u64, stab_point: &BigUint, stab_line: &BigUint) -> bool {
    BigUint::from(s + 1) * stab_point == BigUint::from(t + 1) * stab_line
}

/// Verdicts of the stabilizer-size bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerVerdict {
    /// |G| < |G_P|^2 when s < t, |G|^9 < |G_P|^19 when s = t.
    pub bound_holds: bool,
    /// |T| < |T_P|^3 (the large-subgroup criterion).
    pub large_subgroup: bool,
}

/// Check the stabilizer bounds for total order |G| and point stabilizer
/// order |G_P| at parameters (s, t) with s <= t. The 19/9 exponent is
/// evaluated with integer powers only.
pub fn stabilizer_bounds(total: &BigUint, stab: &BigUint, s: u64, t: u64) -> StabilizerVerdict {
    let bound_holds = if s < t {
        *total < stab.pow(2)
    } else {
        total.pow(9) < stab.pow(19)
    };
    let large_subgroup = *total < stab.pow(3);
    StabilizerVerdict { bound_holds, large_subgroup }
}

/// The p-part of N for the prime p underlying the prime power q: the largest
/// power of p dividing N.
pub fn q_part(n: &BigUint, q: u64) -> Result<BigUint> {
    let (p, _) = algebra_split(q)?;
    let big_p = BigUint::from(p);
    let mut part = BigUint::from(1u32);
    if n.is_zero() {
        return Ok(part);
    }
    let mut m = n.clone();
    loop {
        let (quot, rem) = m.div_rem(&big_p);
        if !rem.is_zero() {
            break;
        }
        part *= &big_p;
        m = quot;
    }
    Ok(part)
}

fn algebra_split(q: u64) -> Result<(u64, u32)> {
    crate::algebra::split_prime_power(q).ok_or(Error::NotAPrimePower(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doily_parameters_pass() {
        assert!(parameter_feasible(2, 2).feasible);
    }

    #[test]
    fn order_two_three_fails_divisibility() {
        let v = parameter_feasible(2, 3);
        assert!(!v.divisibility);
        assert!(!v.feasible);
        assert!(v.witness.unwrap().contains("5"));
    }

    #[test]
    fn order_three_five_passes() {
        assert!(parameter_feasible(3, 5).feasible);
    }

    #[test]
    fn pbounds_examples() {
        // N = 357, t+1 = 6: upper bound fails (357 > 216)
        let v = pbounds_check(&BigUint::from(357u32), 5);
        assert!(!v.upper);
        // N = 4745, t+1 = 28: both hold
        assert!(pbounds_check(&BigUint::from(4745u32), 27).holds);
        // N = 68, t+1 = 6: both hold
        assert!(pbounds_check(&BigUint::from(68u32), 5).holds);
    }

    #[test]
    fn ratio_examples() {
        let b = BigUint::from;
        assert!(ratio_check(2, 2, &b(48u32), &b(48u32)));
        assert!(ratio_check(3, 5, &b(2160u32), &b(1440u32)));
        assert!(!ratio_check(2, 4, &b(48u32), &b(48u32)));
    }

    #[test]
    fn stabilizer_bound_examples() {
        let b = |x: u64| BigUint::from(x);
        let v = stabilizer_bounds(&b(720), &b(48), 2, 4);
        assert!(v.bound_holds); // 720 < 2304
        let v = stabilizer_bounds(&b(720), &b(8), 2, 4);
        assert!(!v.bound_holds); // 720 > 64
        // large subgroup: |Sp6(2)|^3 > |POmega7(3)|
        let t = b(4_585_351_680);
        let tp = b(1_451_520);
        assert!(stabilizer_bounds(&t, &tp, 2, 4).large_subgroup);
    }

    #[test]
    fn q_part_examples() {
        let b = |x: u64| BigUint::from(x);
        assert_eq!(q_part(&b(48), 2).unwrap(), b(16));
        assert_eq!(q_part(&b(155), 2).unwrap(), b(1));
        assert_eq!(q_part(&b(2880), 2).unwrap(), b(64));
        assert_eq!(q_part(&b(162), 9).unwrap(), b(81)); // p-part for p = 3
        assert!(q_part(&b(10), 12).is_err());
    }
}
