//! Exact orders of the finite simple groups consumed by the sieve, plus a
//! few non-simple relatives that appear as stabilizers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

/// A group named by family and parameters, as used in the elimination
/// tables. Orders evaluate exactly in arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrderSpec {
    PSL { n: u32, q: u64 },
    PSU { n: u32, q: u64 },
    /// PSp_n(q), n even.
    PSp { n: u32, q: u64 },
    /// POmega_n(q), n odd.
    POmegaOdd { n: u32, q: u64 },
    POmegaPlus { n: u32, q: u64 },
    POmegaMinus { n: u32, q: u64 },
    /// Sz(q) = 2B2(q), q = 2^(2m+1).
    Sz { q: u64 },
    /// Ree(q) = 2G2(q), q = 3^(2m+1).
    Ree { q: u64 },
    G2 { q: u64 },
    TriD4 { q: u64 },
    TwoF4 { q: u64 },
    F4 { q: u64 },
    E6 { q: u64 },
    TwoE6 { q: u64 },
    E7 { q: u64 },
    E8 { q: u64 },
    Alt { n: u32 },
    Sym { n: u32 },
    /// Sporadic and other named groups with tabulated orders.
    Named(&'static str),
    /// An explicit order, for solvable stabilizers like 5:4.
    Literal(u64),
    /// A scaled order, for extensions like PSU3(3).2.
    Scaled(Box<GroupOrderSpec>, u64),
}

const NAMED_ORDERS: &[(&str, u64)] = &[
    ("M10", 720),
    ("M11", 7_920),
    ("M12", 95_040),
    ("M22", 443_520),
    ("M23", 10_200_960),
    ("M24", 244_823_040),
];

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Exact group order. Classical formulas include the usual gcd center
/// divisors; the division is checked to be exact.
pub fn simple_group_order(spec: &GroupOrderSpec) -> Result<BigUint> {
    use GroupOrderSpec::*;
    let val = match spec {
        PSL { n, q } => {
            check(*n >= 2 && *q >= 2, spec)?;
            let b = BigUint::from(*q);
            let mut o = b.pow(n * (n - 1) / 2);
            for i in 2..=*n {
                o *= b.pow(i) - BigUint::one();
            }
            exact_div(o, gcd_u(*n as u64, q - 1), spec)?
        }
        PSU { n, q } => {
            check(*n >= 3 && *q >= 2, spec)?;
            let b = BigUint::from(*q);
            let mut o = b.pow(n * (n - 1) / 2);
            for i in 2..=*n {
                let f = b.pow(i);
                o *= if i % 2 == 0 { f - BigUint::one() } else { f + BigUint::one() };
            }
            exact_div(o, gcd_u(*n as u64, q + 1), spec)?
        }
        PSp { n, q } => {
            check(*n >= 2 && *n % 2 == 0 && *q >= 2, spec)?;
            let m = n / 2;
            let b = BigUint::from(*q);
            let mut o = b.pow(m * m);
            for i in 1..=m {
                o *= b.pow(2 * i) - BigUint::one();
            }
            exact_div(o, gcd_u(2, q - 1), spec)?
        }
        POmegaOdd { n, q } => {
            check(*n >= 3 && *n % 2 == 1 && *q >= 2, spec)?;
            let m = (n - 1) / 2;
            let b = BigUint::from(*q);
            let mut o = b.pow(m * m);
            for i in 1..=m {
                o *= b.pow(2 * i) - BigUint::one();
            }
            exact_div(o, gcd_u(2, q - 1), spec)?
        }
        POmegaPlus { n, q } => {
            check(*n >= 6 && *n % 2 == 0 && *q >= 2, spec)?;
            let m = n / 2;
            let b = BigUint::from(*q);
            let mut o = b.pow(m * (m - 1)) * (b.pow(m) - BigUint::one());
            for i in 1..=m - 1 {
                o *= b.pow(2 * i) - BigUint::one();
            }
            let d = gcd_big(&BigUint::from(4u32), &(b.pow(m) - BigUint::one()));
            exact_div_big(o, d, spec)?
        }
        POmegaMinus { n, q } => {
            check(*n >= 4 && *n % 2 == 0 && *q >= 2, spec)?;
            let m = n / 2;
            let b = BigUint::from(*q);
            let mut o = b.pow(m * (m - 1)) * (b.pow(m) + BigUint::one());
            for i in 1..=m - 1 {
                o *= b.pow(2 * i) - BigUint::one();
            }
            let d = gcd_big(&BigUint::from(4u32), &(b.pow(m) + BigUint::one()));
            exact_div_big(o, d, spec)?
        }
        Sz { q } => {
            check(is_odd_power_of(*q, 2), spec)?;
            let b = BigUint::from(*q);
            b.pow(2) * (b.pow(2) + BigUint::one()) * (&b - BigUint::one())
        }
        Ree { q } => {
            check(is_odd_power_of(*q, 3), spec)?;
            let b = BigUint::from(*q);
            b.pow(3) * (b.pow(3) + BigUint::one()) * (&b - BigUint::one())
        }
        G2 { q } => {
            let b = BigUint::from(*q);
            b.pow(6) * (b.pow(6) - BigUint::one()) * (b.pow(2) - BigUint::one())
        }
        TriD4 { q } => {
            let b = BigUint::from(*q);
            b.pow(12)
                * (b.pow(8) + b.pow(4) + BigUint::one())
                * (b.pow(6) - BigUint::one())
                * (b.pow(2) - BigUint::one())
        }
        TwoF4 { q } => {
            check(is_odd_power_of(*q, 2), spec)?;
            let b = BigUint::from(*q);
            b.pow(12)
                * (b.pow(6) + BigUint::one())
                * (b.pow(4) - BigUint::one())
                * (b.pow(3) + BigUint::one())
                * (&b - BigUint::one())
        }
        F4 { q } => {
            let b = BigUint::from(*q);
            b.pow(24)
                * (b.pow(12) - BigUint::one())
                * (b.pow(8) - BigUint::one())
                * (b.pow(6) - BigUint::one())
                * (b.pow(2) - BigUint::one())
        }
        E6 { q } => {
            let b = BigUint::from(*q);
            let o = b.pow(36)
                * (b.pow(12) - BigUint::one())
                * (b.pow(9) - BigUint::one())
                * (b.pow(8) - BigUint::one())
                * (b.pow(6) - BigUint::one())
                * (b.pow(5) - BigUint::one())
                * (b.pow(2) - BigUint::one());
            exact_div(o, gcd_u(3, q - 1), spec)?
        }
        TwoE6 { q } => {
            let b = BigUint::from(*q);
            let o = b.pow(36)
                * (b.pow(12) - BigUint::one())
                * (b.pow(9) + BigUint::one())
                * (b.pow(8) - BigUint::one())
                * (b.pow(6) - BigUint::one())
                * (b.pow(5) + BigUint::one())
                * (b.pow(2) - BigUint::one());
            exact_div(o, gcd_u(3, q + 1), spec)?
        }
        E7 { q } => {
            let b = BigUint::from(*q);
            let o = [18u32, 14, 12, 10, 8, 6, 2]
                .iter()
                .fold(b.pow(63), |acc, &i| acc * (b.pow(i) - BigUint::one()));
            exact_div(o, gcd_u(2, q - 1), spec)?
        }
        E8 { q } => {
            let b = BigUint::from(*q);
            [30u32, 24, 20, 18, 14, 12, 8, 2]
                .iter()
                .fold(b.pow(120), |acc, &i| acc * (b.pow(i) - BigUint::one()))
        }
        Alt { n } => {
            check(*n >= 3, spec)?;
            exact_div(factorial(*n), 2, spec)?
        }
        Sym { n } => factorial(*n),
        Named(name) => NAMED_ORDERS
            .iter()
            .find(|(k, _)| k == name)
            .map(|&(_, o)| BigUint::from(o))
            .ok_or_else(|| Error::UnsupportedOrderSpec(name.to_string()))?,
        Literal(o) => BigUint::from(*o),
        Scaled(inner, k) => simple_group_order(inner)? * BigUint::from(*k),
    };
    Ok(val)
}

fn check(cond: bool, spec: &GroupOrderSpec) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::UnsupportedOrderSpec(format!("{spec:?}")))
    }
}

fn gcd_u(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u(b, a % b) }
}

fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

fn exact_div(num: BigUint, den: u64, spec: &GroupOrderSpec) -> Result<BigUint> {
    exact_div_big(num, BigUint::from(den), spec)
}

fn exact_div_big(num: BigUint, den: BigUint, spec: &GroupOrderSpec) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if r == BigUint::ZERO {
        Ok(q)
    } else {
        Err(Error::UnsupportedOrderSpec(format!("inexact center division in {spec:?}")))
    }
}

fn is_odd_power_of(q: u64, p: u64) -> bool {
    let mut m = q;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    m == 1 && e % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupOrderSpec::*;

    fn ord(s: GroupOrderSpec) -> BigUint {
        simple_group_order(&s).unwrap()
    }

    #[test]
    fn symplectic_small() {
        assert_eq!(ord(PSp { n: 4, q: 2 }), BigUint::from(720u32));
        assert_eq!(ord(PSp { n: 4, q: 3 }), BigUint::from(25_920u32));
        assert_eq!(ord(PSp { n: 6, q: 2 }), BigUint::from(1_451_520u32));
    }

    #[test]
    fn odd_orthogonal_and_its_symplectic_twin() {
        assert_eq!(ord(POmegaOdd { n: 7, q: 3 }), BigUint::from(4_585_351_680u64));
        // index of Sp6(2) inside
        let idx = ord(POmegaOdd { n: 7, q: 3 }) / ord(PSp { n: 6, q: 2 });
        assert_eq!(idx, BigUint::from(3159u32));
    }

    #[test]
    fn linear_small() {
        assert_eq!(ord(PSL { n: 2, q: 19 }), BigUint::from(3420u32));
        assert_eq!(ord(PSL { n: 3, q: 4 }), BigUint::from(20_160u32));
        assert_eq!(ord(PSL { n: 2, q: 19 }) / ord(Alt { n: 5 }), BigUint::from(57u32));
    }

    #[test]
    fn exceptional_isomorphisms_at_the_order_level() {
        assert_eq!(ord(PSp { n: 4, q: 3 }), ord(PSU { n: 4, q: 2 }));
        assert_eq!(ord(PSL { n: 2, q: 4 }), ord(PSL { n: 2, q: 5 }));
        assert_eq!(ord(PSL { n: 2, q: 4 }), ord(Alt { n: 5 }));
        assert_eq!(ord(PSL { n: 2, q: 7 }), ord(PSL { n: 3, q: 2 }));
        assert_eq!(ord(PSL { n: 4, q: 2 }), ord(Alt { n: 8 }));
        assert_eq!(ord(POmegaOdd { n: 3, q: 11 }), ord(PSL { n: 2, q: 11 }));
    }

    #[test]
    fn unitary_small() {
        assert_eq!(ord(PSU { n: 4, q: 2 }), BigUint::from(25_920u32));
        assert_eq!(ord(PSU { n: 3, q: 5 }), BigUint::from(126_000u32));
        assert_eq!(ord(PSU { n: 6, q: 2 }), BigUint::from(9_196_830_720u64));
        assert_eq!(ord(PSU { n: 4, q: 3 }), BigUint::from(3_265_920u32));
    }

    #[test]
    fn suzuki_and_ree() {
        assert_eq!(ord(Sz { q: 8 }), BigUint::from(29_120u32));
        assert!(simple_group_order(&Sz { q: 4 }).is_err());
        assert_eq!(ord(Ree { q: 27 }), BigUint::from(10_073_444_472u64));
    }

    #[test]
    fn named_and_composite() {
        assert_eq!(ord(Named("M10")), BigUint::from(720u32));
        assert_eq!(ord(Literal(20)), BigUint::from(20u32));
        assert_eq!(
            ord(Scaled(Box::new(PSU { n: 3, q: 3 }), 2)),
            BigUint::from(12_096u32)
        );
    }

    #[test]
    fn even_orthogonal() {
        // POmega8+(3) has the well-known order 4952179814400
        assert_eq!(ord(POmegaPlus { n: 8, q: 3 }), BigUint::from(4_952_179_814_400u64));
        // POmega6-(q) = PSU4(q)
        assert_eq!(ord(POmegaMinus { n: 6, q: 2 }), ord(PSU { n: 4, q: 2 }));
        assert_eq!(ord(POmegaMinus { n: 6, q: 3 }), ord(PSU { n: 4, q: 3 }));
        // POmega6+(q) = PSL4(q)
        assert_eq!(ord(POmegaPlus { n: 6, q: 3 }), ord(PSL { n: 4, q: 3 }));
    }
}
