//! Rational R-matrices and their exact identities.
//!
//! The rational R-matrix is `R(x) = I - P/x` with `P` the (graded)
//! permutation operator; the primed variant replaces `P` by the theta
//! twisted tensor `Q`. All identity checks clear denominators first and
//! compare polynomial matrices, so there is no expansion-region ambiguity.

use crate::error::CoreError;
use crate::matrix::{RingMatrix, SlotSpec};
use crate::poly::{BiPoly, Ring};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// Sign data for the twisting automorphism: one sign per index plus the
/// class label `theta0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaVector {
    pub theta: Vec<i8>,
    pub theta0: i8,
    pub sig: Signature,
}

/// Which of the two automorphism classes a twist belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThetaClass {
    Plus,
    Minus,
}

impl std::fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThetaClass::Plus => write!(f, "plus"),
            ThetaClass::Minus => write!(f, "minus"),
        }
    }
}

impl ThetaVector {
    /// Orthogonal-type twist: all signs +1, any plain N; in the graded case
    /// the odd block must have even size and the signs follow the
    /// orthosymplectic pattern.
    pub fn plus(sig: Signature) -> Result<Self, CoreError> {
        if sig.is_plain() {
            return Ok(ThetaVector {
                theta: vec![1; sig.total()],
                theta0: 1,
                sig,
            });
        }
        if !sig.odd.is_multiple_of(2) {
            return Err(CoreError::InvalidTheta(format!(
                "graded twist with theta0=+1 requires an even odd block, got {sig}"
            )));
        }
        let m = sig.even;
        let total = sig.total();
        let mut theta = vec![1i8; total];
        // odd indices: sign of (2M+N+1)/2 - i, written with doubled
        // numerators to stay in integers
        for (i, t) in theta.iter_mut().enumerate().take(total).skip(m) {
            let idx = i + 1;
            let twice_center = 2 * m + sig.odd + 1; // 2*((2M+N+1)/2) with N = odd part
            *t = if 2 * idx < twice_center { 1 } else { -1 };
        }
        let v = ThetaVector {
            theta,
            theta0: 1,
            sig,
        };
        v.validate()?;
        Ok(v)
    }

    /// Symplectic-type twist: requires an even number of indices.
    pub fn minus(sig: Signature) -> Result<Self, CoreError> {
        if !sig.is_plain() {
            return Err(CoreError::InvalidTheta(
                "theta0=-1 twists are only built for plain signatures".into(),
            ));
        }
        let n = sig.total();
        if !n.is_multiple_of(2) {
            return Err(CoreError::InvalidTheta(format!(
                "theta0=-1 requires an even number of indices, got N={n}"
            )));
        }
        let theta = (1..=n)
            .map(|i| if 2 * i < n + 1 { 1 } else { -1 })
            .collect();
        Ok(ThetaVector {
            theta,
            theta0: -1,
            sig,
        })
    }

    pub fn for_class(sig: Signature, class: ThetaClass) -> Result<Self, CoreError> {
        match class {
            ThetaClass::Plus => Self::plus(sig),
            ThetaClass::Minus => Self::minus(sig),
        }
    }

    /// 1-based sign lookup.
    pub fn sign(&self, index: usize) -> i8 {
        self.theta[index - 1]
    }

    /// The bar involution on indices: reversal within each parity block.
    pub fn bar(&self, index: usize) -> usize {
        let m = self.sig.even;
        if index <= m {
            m + 1 - index
        } else {
            2 * m + self.sig.odd + 1 - index
        }
    }

    /// Consistency: `(-1)^{[i]} theta_i theta_{bar i} = theta0` for all i.
    pub fn validate(&self) -> Result<(), CoreError> {
        for i in 1..=self.sig.total() {
            let lhs = if self.sig.parity(i) == 1 { -1 } else { 1 }
                * self.sign(i)
                * self.sign(self.bar(i));
            if lhs != self.theta0 {
                return Err(CoreError::InvalidTheta(format!(
                    "parity constraint fails at index {i}: (-1)^[i] theta_i theta_bar(i) = {lhs} != {}",
                    self.theta0
                )));
            }
        }
        Ok(())
    }
}

/// Graded permutation operator `P = sum (-1)^{[i][j]} E_ij (x) E_ji` as a
/// d^2 x d^2 matrix (operator convention: `P(v (x) w) = (-1)^{[v][w]} w (x) v`).
pub fn build_permutation(sig: &Signature) -> RingMatrix<Scalar> {
    let d = sig.total();
    let mut p = RingMatrix::zero(d * d, Scalar::one());
    for i in 1..=d {
        for j in 1..=d {
            let sign = sig.parity(i) & sig.parity(j);
            // E_ij (x) E_ji: row (i,j), column (j,i), 0-based composite
            p.set(
                (i - 1) * d + (j - 1),
                (j - 1) * d + (i - 1),
                Scalar::one().negate_if(sign == 1),
            );
        }
    }
    p
}

/// Theta-twisted tensor `Q = sum theta^i theta^j E_ij (x) E_{bar i, bar j}`.
pub fn build_q_tensor(theta: &ThetaVector) -> RingMatrix<Scalar> {
    let d = theta.sig.total();
    let mut q = RingMatrix::zero(d * d, Scalar::one());
    for i in 1..=d {
        for j in 1..=d {
            let coeff = Scalar::from_int((theta.sign(i) * theta.sign(j)) as i64);
            let (bi, bj) = (theta.bar(i), theta.bar(j));
            q.add_to((i - 1) * d + (bi - 1), (j - 1) * d + (bj - 1), coeff);
        }
    }
    q
}

/// The theta transpose on the auxiliary space applied to the first leg of a
/// two-leg tensor: `(tau (x) 1) M` where `tau(E_ij) = theta^i theta^j
/// E_{bar j, bar i}`. Used to check `Q = (tau (x) 1)(P)` as a matrix
/// identity.
pub fn theta_transpose_first_leg(
    m: &RingMatrix<Scalar>,
    theta: &ThetaVector,
) -> RingMatrix<Scalar> {
    let d = theta.sig.total();
    assert_eq!(m.dim(), d * d);
    let mut out = RingMatrix::zero(d * d, Scalar::one());
    for (&(row, col), v) in m.entries() {
        // first-leg indices (1-based)
        let (i, k) = (row / d + 1, row % d);
        let (j, l) = (col / d + 1, col % d);
        let sign = (theta.sign(i) * theta.sign(j)) as i64;
        // E_ij -> theta^i theta^j E_{bar j, bar i} on the first leg
        let (bi, bj) = (theta.bar(i), theta.bar(j));
        out.add_to(
            (bj - 1) * d + k,
            (bi - 1) * d + l,
            v * &Scalar::from_int(sign),
        );
    }
    out
}

type PolyMat = RingMatrix<BiPoly<Scalar>>;

fn poly_unit() -> BiPoly<Scalar> {
    BiPoly::constant(Scalar::one(), Scalar::one())
}

fn scalar_to_poly(m: &RingMatrix<Scalar>) -> PolyMat {
    m.map_entries(poly_unit(), |v| BiPoly::constant(Scalar::one(), v.clone()))
}

/// `arg * I - P_embedded` where `arg` is a polynomial in (x, y): the
/// denominator-cleared form of `R(arg) = I - P/arg`.
fn cleared_r(
    p: &RingMatrix<Scalar>,
    slots_pair: (usize, usize),
    slots: &[SlotSpec],
    arg: &BiPoly<Scalar>,
) -> Result<PolyMat, CoreError> {
    let embedded = p.embed_two_site(slots_pair.0, slots_pair.1, slots)?;
    let total: usize = slots.iter().map(|s| s.dim).product();
    let id = RingMatrix::identity(total, poly_unit());
    Ok(id
        .scale(&BiPoly::constant(Scalar::one(), Scalar::one()).mul(arg))
        .sub(&scalar_to_poly(&embedded)))
}

/// The rational R-matrix as a (numerator, denominator) pair:
/// `R(x) = (x I - P) / x`. The numerator is returned; the denominator is
/// the variable `x` itself, so `R(x) - I = -P/x` has a single simple pole
/// at `x = 0` by construction.
pub fn rational_r_numerator(sig: &Signature) -> RingMatrix<BiPoly<Scalar>> {
    let p = scalar_to_poly(&build_permutation(sig));
    let x = BiPoly::var_x(Scalar::one());
    RingMatrix::identity(p.dim(), poly_unit())
        .scale(&x)
        .sub(&p)
}

/// The primed variant `R'(x) = (x I - Q) / x` with the theta-twisted
/// tensor in place of the permutation.
pub fn primed_r_numerator(theta: &ThetaVector) -> RingMatrix<BiPoly<Scalar>> {
    let q = scalar_to_poly(&build_q_tensor(theta));
    let x = BiPoly::var_x(Scalar::one());
    RingMatrix::identity(q.dim(), poly_unit())
        .scale(&x)
        .sub(&q)
}

/// Outcome of an exact matrix identity check.
pub type IdentityResult = Result<(), ((usize, usize), String)>;

fn compare(lhs: &PolyMat, rhs: &PolyMat) -> IdentityResult {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((at, diff)) => Err((at, diff.to_string())),
    }
}

/// Yang-Baxter identity `R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)`
/// for `R(x) = I - P/x`, checked after clearing all three denominators.
pub fn check_ybe(sig: &Signature) -> IdentityResult {
    check_ybe_for(sig, &build_permutation(sig))
}

/// Same check with `P` scaled by a constant. A scaled permutation is still
/// a solution (the scale absorbs into the spectral parameter), so this is a
/// scaling-invariance probe, not a negative control.
pub fn check_ybe_scaled(sig: &Signature, scale_p: &Scalar) -> IdentityResult {
    check_ybe_for(sig, &build_permutation(sig).scale(scale_p))
}

/// Negative control: double one off-diagonal entry of `P`, which breaks
/// the permutation structure and with it the Yang-Baxter identity.
pub fn check_ybe_perturbed(sig: &Signature) -> IdentityResult {
    let d = sig.total();
    assert!(d >= 2, "perturbation needs at least two indices");
    let mut p = build_permutation(sig);
    // the E_12 (x) E_21 term sits at row (1,2), column (2,1)
    let (row, col) = (1, d);
    let doubled = &p.get(row, col) * &Scalar::from_int(2);
    p.set(row, col, doubled);
    check_ybe_for(sig, &p)
}

fn check_ybe_for(sig: &Signature, p: &RingMatrix<Scalar>) -> IdentityResult {
    let slot = SlotSpec::from_signature(sig);
    let slots = vec![slot.clone(), slot.clone(), slot];
    let unit = Scalar::one();
    let x = BiPoly::var_x(unit.clone());
    let y = BiPoly::var_y(unit.clone());
    let xmy = x.sub(&y);
    let r12 = cleared_r(p, (0, 1), &slots, &xmy).expect("embedding");
    let r13 = cleared_r(p, (0, 2), &slots, &x).expect("embedding");
    let r23 = cleared_r(p, (1, 2), &slots, &y).expect("embedding");
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    compare(&lhs, &rhs)
}

/// Unitarity `R(x) R(-x) = (1 - x^{-2}) I`, cleared to
/// `(xI - P)(-xI - P) = (1 - x^2) I`.
pub fn check_unitarity(sig: &Signature) -> IdentityResult {
    let p = scalar_to_poly(&build_permutation(sig));
    let d = p.dim();
    let unit = Scalar::one();
    let x = BiPoly::var_x(unit.clone());
    let id = RingMatrix::identity(d, poly_unit());
    let lhs = id.scale(&x).sub(&p).mul(&id.scale(&x.neg()).sub(&p));
    let rhs = id.scale(&BiPoly::constant(unit.clone(), unit.clone()).sub(&x.mul(&x)));
    compare(&lhs, &rhs)
}

/// Classical Yang-Baxter identity
/// `[r12, r13] + [r12, r23] + [r13, r23] = 0` for `r(x) = P/x` with
/// arguments `(u-v, u, v)`, cleared by `(u-v) u v`:
/// `[P12,P13] v + [P12,P23] u + [P13,P23] (u-v) = 0`.
/// `core` selects the numerator operator (the permutation by default; the
/// negative control passes `Q`).
pub fn check_classical_ybe_with(sig: &Signature, core: &RingMatrix<Scalar>) -> IdentityResult {
    let slot = SlotSpec::from_signature(sig);
    let slots = vec![slot.clone(), slot.clone(), slot];
    let p12 = scalar_to_poly(&core.embed_two_site(0, 1, &slots).expect("embedding"));
    let p13 = scalar_to_poly(&core.embed_two_site(0, 2, &slots).expect("embedding"));
    let p23 = scalar_to_poly(&core.embed_two_site(1, 2, &slots).expect("embedding"));
    let unit = Scalar::one();
    let x = BiPoly::var_x(unit.clone());
    let y = BiPoly::var_y(unit.clone());
    let comm = |a: &PolyMat, b: &PolyMat| a.mul(b).sub(&b.mul(a));
    let lhs = comm(&p12, &p13)
        .scale(&y)
        .add(&comm(&p12, &p23).scale(&x))
        .add(&comm(&p13, &p23).scale(&x.sub(&y)));
    let zero = RingMatrix::zero(lhs.dim(), poly_unit());
    compare(&lhs, &zero)
}

pub fn check_classical_ybe(sig: &Signature) -> IdentityResult {
    check_classical_ybe_with(sig, &build_permutation(sig))
}

/// `P^2 = I` (also exact in the graded case with the operator convention).
pub fn check_permutation_square(sig: &Signature) -> IdentityResult {
    let p = build_permutation(sig);
    let id = RingMatrix::identity(p.dim(), Scalar::one());
    match p.mul(&p).first_difference(&id) {
        None => Ok(()),
        Some((at, diff)) => Err((at, diff.to_string())),
    }
}

/// `Q = (tau (x) 1)(P)` entrywise.
pub fn check_q_is_twisted_permutation(theta: &ThetaVector) -> IdentityResult {
    let p = build_permutation(&theta.sig);
    let q = build_q_tensor(theta);
    let twisted = theta_transpose_first_leg(&p, theta);
    match q.first_difference(&twisted) {
        None => Ok(()),
        Some((at, diff)) => Err((at, diff.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_matrix_plain_two() {
        let p = build_permutation(&Signature::plain(2));
        // rows (1000),(0010),(0100),(0001)
        assert_eq!(p.get(0, 0), Scalar::one());
        assert_eq!(p.get(1, 2), Scalar::one());
        assert_eq!(p.get(2, 1), Scalar::one());
        assert_eq!(p.get(3, 3), Scalar::one());
        assert_eq!(p.entries().count(), 4);
    }

    #[test]
    fn graded_permutation_has_odd_odd_sign() {
        let p = build_permutation(&Signature::graded(1, 1));
        assert_eq!(p.get(3, 3), Scalar::from_int(-1));
    }

    #[test]
    fn permutation_squares_to_identity() {
        for sig in [
            Signature::plain(2),
            Signature::plain(3),
            Signature::graded(1, 1),
            Signature::graded(2, 1),
        ] {
            assert!(check_permutation_square(&sig).is_ok(), "sig {sig}");
        }
    }

    #[test]
    fn rational_r_at_x_equal_one() {
        // R(1) = I - P for sig (2|0): diagonal blocks (0, 1, 1, 0) pattern
        let num = rational_r_numerator(&Signature::plain(2));
        let at_one: Vec<Scalar> = (0..4)
            .map(|i| {
                let e = num.get(i, i);
                &e.coeff(0, 0) + &e.coeff(1, 0)
            })
            .collect();
        let expect: Vec<Scalar> = [0i64, 1, 1, 0].iter().map(|&v| Scalar::from_int(v)).collect();
        assert_eq!(at_one, expect);
        assert_eq!(num.get(1, 2).coeff(0, 0), Scalar::from_int(-1));
    }

    #[test]
    fn ybe_scaling_invariance_and_negative_control() {
        // scaling P absorbs into the spectral parameter: still a solution
        assert!(check_ybe_scaled(&Signature::plain(2), &Scalar::from_int(2)).is_ok());
        // doubling a single entry of P genuinely breaks the identity
        let err = check_ybe_perturbed(&Signature::plain(2));
        assert!(err.is_err());
        let ((r, c), diff) = err.unwrap_err();
        assert!(!diff.is_empty(), "counterexample payload at ({r},{c})");
    }

    #[test]
    fn classical_ybe_is_homogeneous_but_not_q_invariant() {
        let sig = Signature::plain(2);
        // scaling r by a constant still passes
        let scaled = build_permutation(&sig).scale(&Scalar::from_int(5));
        assert!(check_classical_ybe_with(&sig, &scaled).is_ok());
        // replacing P by Q breaks it
        let theta = ThetaVector::plus(sig).unwrap();
        let q = build_q_tensor(&theta);
        assert!(check_classical_ybe_with(&sig, &q).is_err());
    }

    #[test]
    fn q_tensor_of_both_classes() {
        let sig = Signature::plain(2);
        let plus = ThetaVector::plus(sig).unwrap();
        let q = build_q_tensor(&plus);
        // Q = sum E_ij (x) E_{3-i,3-j}: all coefficients +1
        assert_eq!(q.get(1, 1), Scalar::one());
        let minus = ThetaVector::minus(sig).unwrap();
        assert_eq!(minus.theta, vec![1, -1]);
        let qm = build_q_tensor(&minus);
        assert_eq!(qm.get(1, 1), Scalar::one()); // theta^1 theta^1 E_11 x E_22 block sign
        assert!(check_q_is_twisted_permutation(&plus).is_ok());
        assert!(check_q_is_twisted_permutation(&minus).is_ok());
    }

    #[test]
    fn theta_validation() {
        assert!(ThetaVector::minus(Signature::plain(3)).is_err());
        assert!(ThetaVector::plus(Signature::graded(1, 2)).is_ok());
        assert!(ThetaVector::plus(Signature::graded(1, 1)).is_err());
        let sup = ThetaVector::plus(Signature::graded(1, 2)).unwrap();
        assert_eq!(sup.theta, vec![1, 1, -1]);
        assert_eq!(sup.bar(1), 1);
        assert_eq!(sup.bar(2), 3);
        assert_eq!(sup.bar(3), 2);
    }
}
