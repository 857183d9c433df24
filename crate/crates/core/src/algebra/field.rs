//! GF(p^f) with table-driven arithmetic.
//!
//! Elements are stored as indices in `0..p^f`: the base-p digits of an index
//! are the coefficients of the element on the power basis of the modulus.
//! Index 0 is zero and index 1 is one in every field. Multiplication runs on
//! discrete-log tables built from a verified generator, addition on digit
//! arithmetic (plain XOR when p = 2).

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Shipped moduli, Conway-polynomial convention. Coefficients are listed from
/// the constant term up to the leading term.
const MODULI: &[(u64, u32, &[u64])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 4, &[2, 4, 4, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (11, 1, &[9, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 1, &[11, 1]),
    (13, 2, &[2, 12, 1]),
];

/// A finite field GF(p^f), p prime, with verified irreducible modulus.
pub struct FiniteField {
    p: u64,
    f: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: u64,
    /// exp[i] = g^i for 0 <= i < 2(q-1), so sums of two logs index directly.
    exp: Vec<u64>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u64>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "GF({})", self.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest primitive root mod p, used for the degree-1 Conway modulus x - g.
fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let mut primes = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    'outer: for g in 2..p {
        for r in &primes {
            if pow_mod(g, phi / r, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

// ---- polynomial helpers over GF(p), used only during construction ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial m.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = i + shift;
            let sub = lead * c % p;
            r[idx] = (r[idx] + p - sub % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 0 || *m.last().unwrap() != 1 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // iterate monic polynomials c_0 + c_1 x + ... + x^d
        let total = p.pow(d as u32);
        for idx in 0..total {
            let mut g = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                g.push(t % p);
                t /= p;
            }
            g.push(1);
            if poly_rem(m, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The field GF(p^f) with the shipped modulus.
    pub fn new(p: u64, f: u32) -> Result<Arc<FiniteField>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus: Vec<u64> = if f == 1 {
            let g = smallest_primitive_root(p);
            vec![(p - g) % p, 1]
        } else {
            MODULI
                .iter()
                .find(|&&(mp, mf, _)| mp == p && mf == f)
                .map(|&(_, _, m)| m.to_vec())
                .ok_or(Error::NoModulus { p, f })?
        };
        Self::with_modulus(p, f, modulus)
    }

    /// The field of order q = p^f (q must be a prime power with a shipped modulus).
    pub fn of_order(q: u64) -> Result<Arc<FiniteField>> {
        let (p, f) = split_prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        Self::new(p, f)
    }

    /// Construct with an explicit monic modulus; verified irreducible.
    pub fn with_modulus(p: u64, f: u32, modulus: Vec<u64>) -> Result<Arc<FiniteField>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() != f as usize + 1 || !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p, degree: f as usize });
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= 1 << 20)
            .ok_or(Error::ResourceCap { what: "field order", q: p, max: 1 << 20 })?;
        let mut field = FiniteField {
            p,
            f,
            q,
            modulus,
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables()?;
        Ok(Arc::new(field))
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c % self.p;
        }
        idx
    }

    fn decode(&self, mut idx: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.f as usize];
        for slot in out.iter_mut() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        out
    }

    /// Slow multiplication via polynomial arithmetic; only used to build tables.
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let pa = self.decode(a);
        let pb = self.decode(b);
        let prod = poly_mul(&pa, &pb, self.p);
        let rem = poly_rem(&prod, &self.modulus, self.p);
        self.encode(&rem)
    }

    fn element_order(&self, a: u64) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul_slow(x, a);
            n += 1;
        }
        n
    }

    fn build_tables(&mut self) -> Result<()> {
        let qm1 = self.q - 1;
        // find a generator and certify its order is exactly q - 1
        let mut gen = 0;
        for cand in 2..self.q {
            if self.element_order(cand) == qm1 {
                gen = cand;
                break;
            }
        }
        if gen == 0 {
            if self.q == 2 {
                gen = 1; // GF(2)*: the identity generates the trivial group
            } else {
                return Err(Error::ReducibleModulus { p: self.p, degree: self.f as usize });
            }
        }
        self.generator = gen;
        let mut exp = Vec::with_capacity(2 * qm1 as usize);
        let mut log = vec![0u64; self.q as usize];
        let mut x = 1u64;
        for i in 0..qm1 {
            exp.push(x);
            log[x as usize] = i;
            x = self.mul_slow(x, gen);
        }
        debug_assert_eq!(x, 1, "generator order certified above");
        exp.extend_from_within(0..qm1 as usize);
        self.exp = exp;
        self.log = log;
        Ok(())
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// Element count p^f.
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// A certified generator of the multiplicative group.
    pub fn multiplicative_generator(&self) -> u64 {
        self.generator
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut out, mut mult) = (0u64, 1u64);
        let (mut x, mut y) = (a, b);
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * mult;
            x /= self.p;
            y /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let (mut out, mut mult) = (0u64, 1u64);
        let mut x = a;
        while x > 0 {
            out += (self.p - x % self.p) % self.p * mult;
            x /= self.p;
            mult *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.q == 2 {
            return 1;
        }
        // log values are < q-1 and exp holds two periods, so no reduction needed
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.q));
        }
        let qm1 = self.q - 1;
        if qm1 == 1 {
            return Ok(1);
        }
        Ok(self.exp[((qm1 - self.log[a as usize]) % qm1) as usize])
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let qm1 = self.q - 1;
        if qm1 == 1 {
            return 1;
        }
        let l = (self.log[a as usize] as u128 * e as u128 % qm1 as u128) as u64;
        self.exp[l as usize]
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// The involution x -> x^q0 on a field of order q0^2.
    pub fn conjugate(&self, a: u64) -> Result<u64> {
        if self.f % 2 != 0 {
            return Err(Error::NonSquareField(self.q));
        }
        Ok(self.pow(a, self.p.pow(self.f / 2)))
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }
}

/// Split q into (p, f) with q = p^f, p prime.
pub(crate) fn split_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut f = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                f += 1;
            }
            return if m == 1 { Some((p, f)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// An element tagged with its owning field. Arithmetic panics on field
/// mismatch; the raw `u64` API on [`FiniteField`] is what hot loops use.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<FiniteField>,
    val: u64,
}

impl FieldElement {
    pub fn new(field: Arc<FiniteField>, val: u64) -> Self {
        assert!(val < field.order(), "element index out of range");
        FieldElement { field, val }
    }

    pub fn value(&self) -> u64 {
        self.val
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(self.field.clone(), self.field.add(self.val, other.val)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(self.field.clone(), self.field.mul(self.val, other.val)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::new(self.field.clone(), self.field.sub(self.val, other.val)))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::new(self.field.clone(), self.field.inv(self.val)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(self.field.clone(), self.field.pow(self.val, e))
    }

    pub fn frobenius(&self) -> Self {
        Self::new(self.field.clone(), self.field.frobenius(self.val))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}#GF({})", self.val, self.field.order())
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}
impl Eq for FieldElement {}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("field mismatch")
    }
}
