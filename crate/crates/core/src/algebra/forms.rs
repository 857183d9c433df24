//! Vector spaces carrying a symplectic, quadratic, or hermitian form.
//!
//! The shipped Gram data is canonical: symplectic forms are block-diagonal
//! with antidiagonal [0 1 / -1 0] blocks, quadratic forms pair consecutive
//! coordinates hyperbolically plus a kind-dependent tail, and hermitian forms
//! use the full antidiagonal identity. In each case an explicit maximal
//! totally singular subspace sits on standard basis vectors, so the Witt
//! index is visible by construction.
//!
//! Quadratic kinds store the quadratic form as an upper-triangular
//! coefficient matrix separately from its polarization, since in even
//! characteristic Q is not recoverable from the (alternating) bilinear form.

use std::fmt;
use std::sync::Arc;

use crate::algebra::linalg::{self, rank};
use crate::algebra::{FieldElement, FiniteField};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symplectic,
    /// Nondegenerate quadratic in odd dimension.
    QuadraticParabolic,
    /// Hyperbolic (plus-type) quadratic in even dimension.
    QuadraticPlus,
    /// Elliptic (minus-type) quadratic in even dimension.
    QuadraticMinus,
    Hermitian,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Symplectic => "symplectic",
            FormKind::QuadraticParabolic => "quadratic-parabolic",
            FormKind::QuadraticPlus => "quadratic-plus",
            FormKind::QuadraticMinus => "quadratic-minus",
            FormKind::Hermitian => "hermitian",
        }
    }

    pub fn is_quadratic(self) -> bool {
        matches!(
            self,
            FormKind::QuadraticParabolic | FormKind::QuadraticPlus | FormKind::QuadraticMinus
        )
    }

    /// Witt index for this kind in dimension n, if the parity is admissible.
    pub fn witt_index(self, n: usize) -> Option<usize> {
        match self {
            FormKind::Symplectic | FormKind::QuadraticPlus => {
                (n % 2 == 0 && n >= 2).then_some(n / 2)
            }
            FormKind::QuadraticParabolic => (n % 2 == 1 && n >= 3).then_some((n - 1) / 2),
            FormKind::QuadraticMinus => (n % 2 == 0 && n >= 4).then_some(n / 2 - 1),
            FormKind::Hermitian => (n >= 2).then_some(n / 2),
        }
    }

    /// Twice the counting parameter e, so fractional values stay integral.
    pub(crate) fn twice_e(self) -> u32 {
        match self {
            FormKind::Symplectic | FormKind::QuadraticParabolic => 2,
            FormKind::QuadraticPlus => 0,
            FormKind::QuadraticMinus => 4,
            FormKind::Hermitian => 0, // resolved per dimension parity below
        }
    }

    pub(crate) fn twice_e_for(self, n: usize) -> u32 {
        if self == FormKind::Hermitian {
            if n % 2 == 1 { 3 } else { 1 }
        } else {
            self.twice_e()
        }
    }
}

/// A vector space over GF(q) equipped with a classical form.
pub struct FormSpace {
    field: Arc<FiniteField>,
    kind: FormKind,
    n: usize,
    /// Gram matrix of the bilinear (or sesquilinear) form.
    gram: Vec<Vec<u64>>,
    /// Upper-triangular coefficients of Q for quadratic kinds.
    quad: Option<Vec<Vec<u64>>>,
    witt: usize,
}

impl fmt::Debug for FormSpace {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            fm,
            "FormSpace({}, n={}, GF({}))",
            self.kind.name(),
            self.n,
            self.field.order()
        )
    }
}

impl FormSpace {
    /// The standard symplectic space of even dimension n.
    pub fn symplectic(field: Arc<FiniteField>, n: usize) -> Result<FormSpace> {
        let witt = FormKind::Symplectic
            .witt_index(n)
            .ok_or(Error::UnsupportedForm { kind: "symplectic", n })?;
        let mut gram = vec![vec![0u64; n]; n];
        for i in 0..witt {
            gram[2 * i][2 * i + 1] = field.one();
            gram[2 * i + 1][2 * i] = field.neg(field.one());
        }
        let space = FormSpace { field, kind: FormKind::Symplectic, n, gram, quad: None, witt };
        space.check_invariants()?;
        Ok(space)
    }

    /// The standard quadratic space of the given type.
    pub fn quadratic(field: Arc<FiniteField>, n: usize, kind: FormKind) -> Result<FormSpace> {
        if !kind.is_quadratic() {
            return Err(Error::UnsupportedForm { kind: kind.name(), n });
        }
        let witt = kind.witt_index(n).ok_or(Error::UnsupportedForm { kind: kind.name(), n })?;
        let mut quad = vec![vec![0u64; n]; n];
        for i in 0..witt {
            quad[2 * i][2 * i + 1] = field.one();
        }
        match kind {
            FormKind::QuadraticParabolic => {
                quad[n - 1][n - 1] = field.one();
            }
            FormKind::QuadraticMinus => {
                // tail x^2 + xy + a y^2 with z^2 + z + a irreducible over GF(q)
                let a = irreducible_tail_coefficient(&field);
                quad[n - 2][n - 2] = field.one();
                quad[n - 2][n - 1] = field.one();
                quad[n - 1][n - 1] = a;
            }
            _ => {}
        }
        // polarization b(u,v) = Q(u+v) - Q(u) - Q(v), i.e. gram = quad + quad^T
        let mut gram = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = field.add(quad[i][j], quad[j][i]);
            }
        }
        let space = FormSpace { field, kind, n, gram, quad: Some(quad), witt };
        space.check_invariants()?;
        Ok(space)
    }

    /// The standard hermitian space; the field must have square order and
    /// carries the involution x -> x^q0.
    pub fn hermitian(field: Arc<FiniteField>, n: usize) -> Result<FormSpace> {
        if field.degree() % 2 != 0 {
            return Err(Error::NonSquareField(field.order()));
        }
        let witt = FormKind::Hermitian
            .witt_index(n)
            .ok_or(Error::UnsupportedForm { kind: "hermitian", n })?;
        let mut gram = vec![vec![0u64; n]; n];
        for i in 0..n {
            gram[i][n - 1 - i] = field.one();
        }
        let space = FormSpace { field, kind: FormKind::Hermitian, n, gram, quad: None, witt };
        space.check_invariants()?;
        Ok(space)
    }

    fn check_invariants(&self) -> Result<()> {
        let f = &self.field;
        let n = self.n;
        match self.kind {
            FormKind::Symplectic => {
                for i in 0..n {
                    if self.gram[i][i] != 0 {
                        return Err(Error::DegenerateForm("symplectic gram not alternating"));
                    }
                    for j in 0..n {
                        if self.gram[i][j] != f.neg(self.gram[j][i]) {
                            return Err(Error::DegenerateForm("symplectic gram not antisymmetric"));
                        }
                    }
                }
                if rank(&self.gram, f) != n {
                    return Err(Error::DegenerateForm("symplectic gram degenerate"));
                }
            }
            FormKind::Hermitian => {
                for i in 0..n {
                    for j in 0..n {
                        if self.gram[i][j] != f.conjugate(self.gram[j][i])? {
                            return Err(Error::DegenerateForm("gram not conjugate-symmetric"));
                        }
                    }
                }
                if rank(&self.gram, f) != n {
                    return Err(Error::DegenerateForm("hermitian gram degenerate"));
                }
            }
            _ => {
                // radical behavior of the polarization depends on (n, epsilon, p)
                let r = rank(&self.gram, f);
                let odd_dim_char2 = f.characteristic() == 2 && n % 2 == 1;
                if odd_dim_char2 {
                    if n - r > 1 {
                        return Err(Error::DegenerateForm("radical larger than a point"));
                    }
                    // Q must not vanish on the radical
                    if r == n - 1 {
                        let rad = self.bilinear_radical();
                        if self.quadratic_value_raw(&rad) == 0 {
                            return Err(Error::DegenerateForm("quadratic form vanishes on radical"));
                        }
                    }
                } else if r != n {
                    return Err(Error::DegenerateForm("polarization degenerate"));
                }
            }
        }
        // a totally singular witness of dimension equal to the Witt index:
        // the first d basis vectors for the antidiagonal hermitian Gram, the
        // even-indexed ones for the consecutive hyperbolic pairings
        let witness: Vec<Vec<u64>> = (0..self.witt)
            .map(|i| {
                let mut v = vec![0u64; n];
                let slot = if self.kind == FormKind::Hermitian { i } else { 2 * i };
                v[slot] = f.one();
                v
            })
            .collect();
        if !self.is_totally_singular(&witness) {
            return Err(Error::DegenerateForm("canonical Witt witness not singular"));
        }
        Ok(())
    }

    fn bilinear_radical(&self) -> Vec<u64> {
        // only called for a 1-dimensional radical: solve gram * v = 0
        let f = &self.field;
        let n = self.n;
        let mut rows = self.gram.clone();
        linalg::rref(&mut rows, f);
        // find the non-pivot coordinate
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect();
        let free = (0..n).find(|c| !pivots.contains(c)).expect("radical exists");
        let mut v = vec![0u64; n];
        v[free] = f.one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = f.neg(row[free]);
        }
        v
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn witt_index(&self) -> usize {
        self.witt
    }

    pub fn gram(&self) -> &[Vec<u64>] {
        &self.gram
    }

    /// b(u, v) on raw element indices.
    pub fn bilinear_raw(&self, u: &[u64], v: &[u64]) -> u64 {
        let f = &self.field;
        let mut acc = 0u64;
        if self.kind == FormKind::Hermitian {
            for (i, &ui) in u.iter().enumerate() {
                if ui == 0 {
                    continue;
                }
                for (j, &g) in self.gram[i].iter().enumerate() {
                    if g != 0 && v[j] != 0 {
                        let c = f.conjugate(v[j]).expect("square-order field");
                        acc = f.add(acc, f.mul(ui, f.mul(g, c)));
                    }
                }
            }
        } else {
            for (i, &ui) in u.iter().enumerate() {
                if ui == 0 {
                    continue;
                }
                for (j, &g) in self.gram[i].iter().enumerate() {
                    if g != 0 && v[j] != 0 {
                        acc = f.add(acc, f.mul(ui, f.mul(g, v[j])));
                    }
                }
            }
        }
        acc
    }

    /// Q(u) for quadratic kinds, b(u,u) for hermitian, 0 for symplectic.
    pub fn singular_value_raw(&self, u: &[u64]) -> u64 {
        match self.kind {
            FormKind::Symplectic => 0,
            FormKind::Hermitian => self.bilinear_raw(u, u),
            _ => self.quadratic_value_raw(u),
        }
    }

    fn quadratic_value_raw(&self, u: &[u64]) -> u64 {
        let f = &self.field;
        let quad = self.quad.as_ref().expect("quadratic kinds carry Q");
        let mut acc = 0u64;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &c) in quad[i].iter().enumerate() {
                if c != 0 && u[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(ui, u[j])));
                }
            }
        }
        acc
    }

    fn check_len(&self, v: &[u64]) -> Result<()> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.n, got: v.len() })
        }
    }

    /// Evaluate the bilinear/sesquilinear form b(u, v).
    pub fn evaluate_form(&self, u: &[u64], v: &[u64]) -> Result<FieldElement> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(FieldElement::new(self.field.clone(), self.bilinear_raw(u, v)))
    }

    /// Evaluate the singularity functional at u.
    pub fn singular_value(&self, u: &[u64]) -> Result<FieldElement> {
        self.check_len(u)?;
        Ok(FieldElement::new(self.field.clone(), self.singular_value_raw(u)))
    }

    pub fn is_singular_vector(&self, u: &[u64]) -> bool {
        self.singular_value_raw(u) == 0
    }

    /// Whether the rows span a totally singular subspace: the form and, where
    /// present, the quadratic form vanish on it.
    pub fn is_totally_singular(&self, rows: &[Vec<u64>]) -> bool {
        for (i, u) in rows.iter().enumerate() {
            if !self.is_singular_vector(u) {
                return false;
            }
            for v in rows.iter().skip(i + 1) {
                if self.bilinear_raw(u, v) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Smallest a in index order with z^2 + z + a irreducible over GF(q).
fn irreducible_tail_coefficient(field: &FiniteField) -> u64 {
    'cand: for a in 1..field.order() {
        for z in 0..field.order() {
            let val = field.add(field.add(field.mul(z, z), z), a);
            if val == 0 {
                continue 'cand;
            }
        }
        return a;
    }
    unreachable!("an irreducible binary quadratic exists over every finite field")
}

/// A subspace of a [`FormSpace`], stored as its unique reduced row echelon
/// basis; two subspaces are equal iff their canonical bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<Vec<u64>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "Subspace(dim {}, {:?})", self.basis.len(), self.basis)
    }
}

impl Subspace {
    /// Canonicalize a spanning set into a subspace.
    pub fn from_spanning(rows: &[Vec<u64>], field: &FiniteField) -> Subspace {
        let mut basis = rows.to_vec();
        linalg::rref(&mut basis, field);
        Subspace { basis }
    }

    /// Wrap rows already in reduced echelon form (debug-checked).
    pub(crate) fn from_rref(basis: Vec<Vec<u64>>) -> Subspace {
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u64], field: &FiniteField) -> bool {
        linalg::in_row_space(&self.basis, v, field)
    }

    /// The canonical representatives of the projective points in this
    /// subspace, in lexicographic order.
    pub fn projective_points(&self, field: &FiniteField) -> Vec<Vec<u64>> {
        let k = self.basis.len();
        let q = field.order();
        let mut out = Vec::new();
        // iterate nonzero coefficient tuples whose first nonzero entry is 1
        let mut coeffs = vec![0u64; k];
        loop {
            // advance
            let mut i = 0;
            loop {
                if i == k {
                    out.sort();
                    return out;
                }
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
                continue; // not the canonical scaling of this point
            }
            let n = self.basis[0].len();
            let mut v = vec![0u64; n];
            for (c, row) in coeffs.iter().zip(&self.basis) {
                if *c != 0 {
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi = field.add(*vi, field.mul(*c, *ri));
                    }
                }
            }
            out.push(v);
        }
    }
}
