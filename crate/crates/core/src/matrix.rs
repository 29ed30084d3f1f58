//! Sparse square matrices over a ring, with graded tensor products and
//! multi-site embeddings.
//!
//! R-matrices and mode matrices are overwhelmingly sparse, so entries live
//! in a `BTreeMap` keyed by (row, col); zero entries are never stored, which
//! makes structural equality canonical.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CoreError;
use crate::poly::Ring;

use crate::signature::{Parity, Signature};

/// One tensor factor of a composite space: its dimension and the parity of
/// each basis vector (1-based access via slice indexing with `idx`).
#[derive(Clone, Debug)]
pub struct SlotSpec {
    pub dim: usize,
    pub parities: Vec<Parity>,
}

impl SlotSpec {
    pub fn from_signature(sig: &Signature) -> Self {
        SlotSpec {
            dim: sig.total(),
            parities: sig.parities(),
        }
    }

    pub fn even(dim: usize) -> Self {
        SlotSpec {
            dim,
            parities: vec![0; dim],
        }
    }
}

/// Square sparse matrix over `R`.
#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<R: Ring> {
    dim: usize,
    unit: R,
    entries: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> RingMatrix<R> {
    /// `unit` is the coefficient-ring one, used to mint constants.
    pub fn zero(dim: usize, unit: R) -> Self {
        RingMatrix {
            dim,
            unit,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, unit: R) -> Self {
        let mut m = Self::zero(dim, unit.clone());
        for i in 0..dim {
            m.set(i, i, unit.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_entry(&self) -> &R {
        &self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &R)> {
        self.entries.iter()
    }

    pub fn get(&self, row: usize, col: usize) -> R {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| self.unit.zero())
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        debug_assert!(row < self.dim && col < self.dim);
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: R) {
        if value.is_zero() {
            return;
        }
        let cur = self.get(row, col);
        self.set(row, col, cur.add(&value));
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = Self::zero(self.dim, self.unit.clone());
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut rows: BTreeMap<usize, Vec<(usize, &R)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            rows.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.dim, self.unit.clone());
        for (&(r, k), a) in &self.entries {
            if let Some(row) = rows.get(&k) {
                for &(c, b) in row {
                    out.add_to(r, c, a.mul(b));
                }
            }
        }
        out
    }

    pub fn map_entries<S: Ring>(&self, unit: S, mut f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        let mut out = RingMatrix::zero(self.dim, unit);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, f(v));
        }
        out
    }

    /// First nonzero entry of `self - other`, if any.
    pub fn first_difference(&self, other: &Self) -> Option<((usize, usize), R)> {
        let diff = self.sub(other);
        diff.entries.iter().next().map(|(&k, v)| (k, v.clone()))
    }

    /// Graded Kronecker product. Row/column parities of each factor are
    /// supplied explicitly; the composite entry at ((i,k),(j,l)) is
    /// `(-1)^{(p(i)+p(j)) q(k)} A[i,j] B[k,l]`, which reduces to the
    /// ordinary Kronecker product when every parity is even.
    pub fn kron_graded(
        &self,
        other: &Self,
        self_par: &[Parity],
        other_par: &[Parity],
    ) -> Result<Self, CoreError> {
        if self_par.len() != self.dim || other_par.len() != other.dim {
            return Err(CoreError::DimensionMismatch {
                context: "graded tensor parity data".into(),
            });
        }
        let db = other.dim;
        let mut out = Self::zero(self.dim * db, self.unit.clone());
        for (&(i, j), a) in &self.entries {
            let pa = self_par[i] ^ self_par[j];
            for (&(k, l), b) in &other.entries {
                let v = a.mul(b);
                let v = if pa & other_par[k] == 1 { v.neg() } else { v };
                out.set(i * db + k, j * db + l, v);
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let pa = vec![0; self.dim];
        let pb = vec![0; other.dim];
        self.kron_graded(other, &pa, &pb)
            .expect("parity data consistent")
    }

    /// Embed a two-site operator into slots `(s, t)` (s < t) of the tensor
    /// product described by `slots`. In the graded case the operator's
    /// second leg picks up the Koszul sign for passing the slots strictly
    /// between `s` and `t`.
    pub fn embed_two_site(
        &self,
        s: usize,
        t: usize,
        slots: &[SlotSpec],
    ) -> Result<Self, CoreError> {
        assert!(s < t && t < slots.len());
        let dims: Vec<usize> = slots.iter().map(|sl| sl.dim).collect();
        let total: usize = dims.iter().product();
        if self.dim != dims[s] * dims[t] {
            return Err(CoreError::DimensionMismatch {
                context: format!("embedding a {}-dim operator at slots ({s},{t})", self.dim),
            });
        }
        // strides for the big-endian composite index
        let mut strides = vec![1usize; dims.len()];
        for i in (0..dims.len() - 1).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        // enumerate the spectator configurations
        let spectators: Vec<usize> = (0..dims.len()).filter(|&i| i != s && i != t).collect();
        let spec_count: usize = spectators.iter().map(|&i| dims[i]).product();
        let mut out = Self::zero(total, self.unit.clone());
        for (&(rc, cc), v) in &self.entries {
            // decompose composite (s,t) operator indices
            let (rs, rt) = (rc / dims[t], rc % dims[t]);
            let (cs, ct) = (cc / dims[t], cc % dims[t]);
            for mut spec in 0..spec_count {
                let mut row = rs * strides[s] + rt * strides[t];
                let mut col = cs * strides[s] + ct * strides[t];
                let mut between_parity = 0u8;
                for &i in &spectators {
                    let digit = spec % dims[i];
                    spec /= dims[i];
                    row += digit * strides[i];
                    col += digit * strides[i];
                    if i > s && i < t {
                        between_parity ^= slots[i].parities[digit];
                    }
                }
                let leg_parity = slots[t].parities[rt] ^ slots[t].parities[ct];
                let val = if leg_parity & between_parity == 1 {
                    v.neg()
                } else {
                    v.clone()
                };
                out.add_to(row, col, val);
            }
        }
        Ok(out)
    }
}

/// Graded Kronecker product with parities derived from a signature: each
/// factor's dimension must be a tensor power of `sig.total()`, and a
/// composite index carries the sum of its digit parities. With an all-even
/// signature this is the ordinary Kronecker product.
pub fn graded_tensor<R: Ring>(
    a: &RingMatrix<R>,
    b: &RingMatrix<R>,
    sig: &Signature,
) -> Result<RingMatrix<R>, CoreError> {
    let pa = signature_power_parities(a.dim(), sig)?;
    let pb = signature_power_parities(b.dim(), sig)?;
    a.kron_graded(b, &pa, &pb)
}

fn signature_power_parities(dim: usize, sig: &Signature) -> Result<Vec<Parity>, CoreError> {
    let d = sig.total();
    let mut k = 0u32;
    let mut acc = 1usize;
    while acc < dim {
        acc *= d;
        k += 1;
    }
    if acc != dim {
        return Err(CoreError::DimensionMismatch {
            context: format!("{dim} is not a power of the signature dimension {d}"),
        });
    }
    Ok(sig.tensor_parities(k as usize))
}

/// Entrywise exact division of a polynomial matrix by a scalar-coefficient
/// polynomial; a non-divisible entry is reported with its location and
/// remainder (the upstream identity is then broken).
pub fn divide_matrix_exact<R: Ring>(
    num: &RingMatrix<crate::poly::BiPoly<R>>,
    den: &crate::poly::BiPoly<crate::scalar::Scalar>,
) -> Result<RingMatrix<crate::poly::BiPoly<R>>, CoreError> {
    let mut out = RingMatrix::zero(num.dim(), num.unit_entry().clone());
    for (&(r, c), v) in num.entries() {
        let q = v
            .divide_exact(den)
            .map_err(|e| CoreError::NonDivisibleEntry {
                row: r,
                col: c,
                remainder: e.remainder.to_string(),
            })?;
        out.set(r, c, q);
    }
    Ok(out)
}

impl<R: Ring> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} matrix]", self.dim, self.dim)?;
        for (&(r, c), v) in &self.entries {
            writeln!(f, "  ({r},{c}) = {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::signature::Signature;

    fn unit_mat(dim: usize, entries: &[(usize, usize, i64)]) -> RingMatrix<Scalar> {
        let mut m = RingMatrix::zero(dim, Scalar::one());
        for &(r, c, v) in entries {
            m.set(r, c, Scalar::from_int(v));
        }
        m
    }

    #[test]
    fn ungraded_tensor_of_matrix_units() {
        // E12 (x) E21 for sig (2|0)
        let e12 = unit_mat(2, &[(0, 1, 1)]);
        let e21 = unit_mat(2, &[(1, 0, 1)]);
        let sig = Signature::plain(2);
        let k = e12
            .kron_graded(&e21, &sig.parities(), &sig.parities())
            .unwrap();
        assert_eq!(k, unit_mat(4, &[(1, 2, 1)]));
    }

    #[test]
    fn graded_tensor_signs_for_one_one() {
        let sig = Signature::graded(1, 1);
        let p = sig.parities();
        let e22 = unit_mat(2, &[(1, 1, 1)]);
        let e21 = unit_mat(2, &[(1, 0, 1)]);
        // E22 (x) E22 gets no extra sign
        let a = e22.kron_graded(&e22, &p, &p).unwrap();
        assert_eq!(a.get(3, 3), Scalar::one());
        // E21 (x) E22 acquires (-1)^{([2]+[1])[2]} = -1
        let b = e21.kron_graded(&e22, &p, &p).unwrap();
        assert_eq!(b.get(3, 1), Scalar::from_int(-1));
    }

    #[test]
    fn identity_tensor_identity() {
        let sig = Signature::graded(1, 2);
        let p = sig.parities();
        let id = RingMatrix::identity(3, Scalar::one());
        let k = id.kron_graded(&id, &p, &p).unwrap();
        assert_eq!(k, RingMatrix::identity(9, Scalar::one()));
    }

    #[test]
    fn two_site_embedding_matches_kron_for_adjacent_slots() {
        let a = unit_mat(2, &[(0, 1, 2)]);
        let b = unit_mat(2, &[(1, 1, 3)]);
        let op = a.kron(&b);
        let slots = vec![SlotSpec::even(2), SlotSpec::even(2), SlotSpec::even(2)];
        let emb = op.embed_two_site(0, 1, &slots).unwrap();
        let direct = op.kron(&RingMatrix::identity(2, Scalar::one()));
        assert_eq!(emb, direct);
    }

    #[test]
    fn middle_slot_embedding_permutes_correctly() {
        let a = unit_mat(2, &[(0, 1, 1)]);
        let b = unit_mat(2, &[(1, 0, 1)]);
        let op = a.kron(&b); // acts on slots (0, 2)
        let slots = vec![SlotSpec::even(2); 3];
        let emb = op.embed_two_site(0, 2, &slots).unwrap();
        let id = RingMatrix::identity(2, Scalar::one());
        let direct = a.kron(&id).kron(&b);
        assert_eq!(emb, direct);
    }

    #[test]
    fn graded_tensor_signature_helper() {
        let sig = Signature::plain(2);
        let a = unit_mat(2, &[(0, 1, 1)]);
        let b = unit_mat(4, &[(2, 1, 1)]);
        // 4 = 2^2 is a valid tensor power; 3 is not
        assert!(graded_tensor(&a, &b, &sig).is_ok());
        let c = unit_mat(3, &[(0, 0, 1)]);
        assert!(graded_tensor(&a, &c, &sig).is_err());
    }

    #[test]
    fn matrix_division_reports_offending_entry() {
        use crate::poly::BiPoly;
        let unit = BiPoly::constant(Scalar::one(), Scalar::one());
        let x = BiPoly::var_x(Scalar::one());
        let y = BiPoly::var_y(Scalar::one());
        let den = x.sub(&y);
        let mut m = RingMatrix::zero(2, unit.clone());
        m.set(0, 0, den.mul(&x)); // divisible
        m.set(1, 1, x.clone()); // not divisible
        let err = divide_matrix_exact(&m, &den).unwrap_err();
        match err {
            CoreError::NonDivisibleEntry { row, col, .. } => {
                assert_eq!((row, col), (1, 1));
            }
            other => panic!("unexpected error {other}"),
        }
        m.set(1, 1, den.mul(&y));
        let q = divide_matrix_exact(&m, &den).unwrap();
        assert_eq!(q.get(0, 0), x);
        assert_eq!(q.get(1, 1), y);
    }
}
