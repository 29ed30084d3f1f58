//! Finite-dimensional modules from evaluation representations and the
//! coproduct, with highest-weight extraction and Drinfeld polynomial data.
//!
//! The generator matrix acts on `aux (x) module`; a module stores the whole
//! action as one polynomial matrix in `x = u^{-1}` after renormalizing each
//! evaluation factor by `(1 - a x)`, so a `k`-fold tensor product is a
//! polynomial of degree `<= k`: concretely a module of the level-`k`
//! truncated algebra. The exchange identity is verified exactly at
//! construction.
//!
//! The evaluation coupling convention is not an input: a small candidate
//! family (`delta^{ij} + e^{ij}`-type couplings with sign and parity-weight
//! variants) is tested against the exchange identity once per build and the
//! first surviving convention is used. For plain signatures the survivor
//! is `T^{ij}(u) = delta^{ij} + e^{ij}/(u - a)`, which also matches the
//! classical ratio formula with polynomial roots equal to the evaluation
//! parameters.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::linalg;
use crate::matrix::{RingMatrix, SlotSpec};
use crate::poly::{BiPoly, Ring, ScalarPoly};
use crate::rmatrix::build_permutation;
use crate::scalar::Scalar;
use crate::signature::{Parity, Signature};

type PolyMat = RingMatrix<BiPoly<Scalar>>;

fn poly_unit() -> BiPoly<Scalar> {
    BiPoly::constant(Scalar::one(), Scalar::one())
}

fn const_poly(s: Scalar) -> BiPoly<Scalar> {
    BiPoly::constant(Scalar::one(), s)
}

/// One evaluation factor: the vector representation twisted to the rational
/// point `param`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationDatum {
    pub sig: Signature,
    pub param: Scalar,
}

/// A finite-dimensional module: the full `aux (x) module` action as a
/// polynomial matrix in `x = u^{-1}`, plus the data needed to grade and
/// slice it.
#[derive(Clone, Debug)]
pub struct ModuleData {
    pub sig: Signature,
    /// module dimension
    pub dim: usize,
    /// number of evaluation factors; modes above this level vanish
    pub level: u32,
    pub params: Vec<Scalar>,
    pub parities: Vec<Parity>,
    /// label of the coupling convention selected by the exchange arbiter
    pub coupling: String,
    op: PolyMat,
}

type ParityWeight = fn(Parity, Parity) -> Parity;

/// Candidate couplings for one evaluation factor, in the order they are
/// offered to the exchange-identity arbiter.
fn coupling_candidates(sig: &Signature) -> Vec<(String, RingMatrix<Scalar>)> {
    let d = sig.total();
    let mut out = Vec::new();
    let weights: &[(&str, ParityWeight)] = &[
        ("", |_, _| 0),
        ("*(-1)^[i]", |pi, _| pi),
        ("*(-1)^[j]", |_, pj| pj),
        ("*(-1)^[i][j]", |pi, pj| pi & pj),
    ];
    for sign in [1i64, -1] {
        for (wname, w) in weights {
            if sig.is_plain() && !wname.is_empty() {
                continue;
            }
            // e^{ji} placement: sum E_ij (x) E_ji
            let mut c_ji = RingMatrix::zero(d * d, Scalar::one());
            // e^{ij} placement: sum E_ij (x) E_ij
            let mut c_ij = RingMatrix::zero(d * d, Scalar::one());
            for i in 0..d {
                for j in 0..d {
                    let parity_sign = w(sig.parity(i + 1), sig.parity(j + 1));
                    let v = Scalar::from_int(sign).negate_if(parity_sign == 1);
                    c_ji.set(i * d + j, j * d + i, v.clone());
                    c_ij.set(i * d + i, j * d + j, v);
                }
            }
            let s = if sign == 1 { "+" } else { "-" };
            out.push((format!("{s}e^{{ji}}{wname}"), c_ji));
            out.push((format!("{s}e^{{ij}}{wname}"), c_ij));
        }
    }
    out
}

/// `(1 - a x) I + x C` on `aux (x) C^d`: one renormalized evaluation factor.
fn factor_matrix(coupling: &RingMatrix<Scalar>, a: &Scalar) -> PolyMat {
    let d2 = coupling.dim();
    let x = BiPoly::var_x(Scalar::one());
    let scalar_part = const_poly(Scalar::one()).add(&x.scale(&-a));
    let mut m = RingMatrix::identity(d2, poly_unit()).scale(&scalar_part);
    for (&(r, c), v) in coupling.entries() {
        m.add_to(r, c, x.scale(v));
    }
    m
}

impl ModuleData {
    pub fn op(&self) -> &PolyMat {
        &self.op
    }

    /// Slot layout of `aux (x) module`.
    pub fn slots(&self) -> [SlotSpec; 2] {
        [
            SlotSpec::from_signature(&self.sig),
            SlotSpec {
                dim: self.dim,
                parities: self.parities.clone(),
            },
        ]
    }

    /// The `d x d` module matrix of the mode `T_n^{ij}` (1-based `i`, `j`).
    pub fn mode_block(&self, n: u32, i: usize, j: usize) -> RingMatrix<Scalar> {
        let d = self.dim;
        let mut out = RingMatrix::zero(d, Scalar::one());
        for (&(r, c), v) in self.op.entries() {
            if r / d == i - 1 && c / d == j - 1 {
                let coeff = v.coeff(n, 0);
                if !coeff.is_zero() {
                    out.add_to(r % d, c % d, coeff);
                }
            }
        }
        out
    }

    /// Exchange identity `R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v)` as
    /// an exact cleared polynomial identity (graded embeddings in the
    /// graded case).
    pub fn rtt_check(&self) -> Result<(), ((usize, usize), String)> {
        rtt_check_op(&self.sig, &self.op, self.dim, &self.parities)
    }

    /// Every entry is polynomial in `x` of degree at most `bound`.
    pub fn truncation_check(&self, bound: u32) -> Result<(), ((usize, usize), String)> {
        for (&at, v) in self.op.entries() {
            for (&(xe, ye), c) in v.terms() {
                if ye != 0 {
                    return Err((at, format!("unexpected second variable: {c}")));
                }
                if xe > bound {
                    return Err((at, format!("mode x^{xe} survives: {c}")));
                }
            }
        }
        Ok(())
    }
}

fn rtt_check_op(
    sig: &Signature,
    op: &PolyMat,
    dim: usize,
    parities: &[Parity],
) -> Result<(), ((usize, usize), String)> {
    let aux = SlotSpec::from_signature(sig);
    let module = SlotSpec {
        dim,
        parities: parities.to_vec(),
    };
    let slots = [aux.clone(), aux, module];
    let t1 = op.embed_two_site(0, 2, &slots).expect("embed T1");
    let t2 = op
        .map_entries(poly_unit(), |v| {
            // swap the variable: T(v) lives in y
            let mut out = BiPoly::zero(Scalar::one());
            for (&(xe, ye), c) in v.terms() {
                debug_assert_eq!(ye, 0);
                out = out.add(&BiPoly::term(Scalar::one(), 0, xe, c.clone()));
            }
            out
        })
        .embed_two_site(1, 2, &slots)
        .expect("embed T2");
    let p12 = build_permutation(sig)
        .map_entries(poly_unit(), |s| const_poly(s.clone()))
        .embed_two_site(0, 1, &slots)
        .expect("embed P12");
    let total = p12.dim();
    let x = BiPoly::var_x(Scalar::one());
    let y = BiPoly::var_y(Scalar::one());
    let xy = x.mul(&y);
    // (v - u) I - u v P12: the cleared R12(u - v)
    let r12 = RingMatrix::identity(total, poly_unit())
        .scale(&y.sub(&x))
        .sub(&p12.scale(&xy));
    let lhs = r12.mul(&t1).mul(&t2);
    let rhs = t2.mul(&t1).mul(&r12);
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some((at, diff)) => Err((at, diff.to_string())),
    }
}

/// Single evaluation module at a rational point. The coupling convention
/// is chosen by the exchange arbiter described in the module docs.
pub fn evaluation_module(sig: Signature, param: Scalar) -> Result<ModuleData, CoreError> {
    tensor_modules(sig, vec![param])
}

/// The one-dimensional module on which the generator matrix acts as the
/// identity scalar series: every polynomial datum is trivial.
pub fn trivial_module(sig: Signature) -> ModuleData {
    let n = sig.total();
    ModuleData {
        sig,
        dim: 1,
        level: 0,
        params: Vec::new(),
        parities: vec![0],
        coupling: "trivial".into(),
        op: RingMatrix::identity(n, poly_unit()),
    }
}

/// Tensor product of evaluation modules through the coproduct (generator
/// matrices compose by auxiliary-space multiplication, leftmost factor
/// first), renormalized so every entry is polynomial of degree `<= k`.
pub fn tensor_modules(sig: Signature, params: Vec<Scalar>) -> Result<ModuleData, CoreError> {
    assert!(!params.is_empty(), "need at least one factor");
    let k = params.len();
    let n = sig.total();
    let dim = n.pow(k as u32);
    let parities = sig.tensor_parities(k);
    let mut last_err = None;
    for (label, coupling) in coupling_candidates(&sig) {
        let op = assemble_tensor(&sig, &coupling, &params, dim);
        match rtt_check_op(&sig, &op, dim, &parities) {
            Ok(()) => {
                return Ok(ModuleData {
                    sig,
                    dim,
                    level: k as u32,
                    params,
                    parities,
                    coupling: label,
                    op,
                })
            }
            Err((at, diff)) => {
                last_err = Some(format!("coupling {label}: mismatch at {at:?}: {diff}"));
            }
        }
    }
    Err(CoreError::InvalidInput(format!(
        "no evaluation coupling satisfies the exchange identity for {sig}: {}",
        last_err.unwrap_or_default()
    )))
}

fn assemble_tensor(
    sig: &Signature,
    coupling: &RingMatrix<Scalar>,
    params: &[Scalar],
    dim: usize,
) -> PolyMat {
    let aux = SlotSpec::from_signature(sig);
    let factor_slot = SlotSpec::from_signature(sig);
    let k = params.len();
    let mut slots = vec![aux];
    slots.extend(std::iter::repeat_n(factor_slot, k));
    let total = sig.total() * dim;
    let mut op = RingMatrix::identity(total, poly_unit());
    for (s, a) in params.iter().enumerate() {
        let f = factor_matrix(coupling, a)
            .embed_two_site(0, s + 1, &slots)
            .expect("factor embedding");
        op = op.mul(&f);
    }
    op
}

/// Highest-weight data: eigenvalue polynomials of the diagonal generator
/// series on the joint kernel of the strictly-upper series.
#[derive(Clone, Debug)]
pub struct HighestWeightSeries {
    /// `mu[i][n]` = coefficient of `u^{-n}` in `mu^{i+1}(u)`, `n = 0..=level`
    pub mu: Vec<Vec<Scalar>>,
    pub xi: Vec<Scalar>,
    pub level: u32,
}

impl HighestWeightSeries {
    /// `mu^i` as a monic polynomial in `u` of degree `level`
    /// (`u^{level} mu^i(1/u)`), `i` 0-based.
    pub fn mu_poly_in_u(&self, i: usize) -> ScalarPoly {
        let l = self.level as usize;
        let coeffs: Vec<Scalar> = (0..=l).map(|n| self.mu[i][l - n].clone()).collect();
        ScalarPoly::from_coeffs(coeffs)
    }
}

/// Outcome when a module is not highest-weight-cyclic in the tested sense.
#[derive(Clone, Debug)]
pub struct NotHighestWeight {
    pub kernel_dimension: usize,
}

pub fn extract_highest_weight(
    m: &ModuleData,
) -> Result<Result<HighestWeightSeries, NotHighestWeight>, CoreError> {
    let n = m.sig.total();
    let d = m.dim;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for lvl in 1..=m.level {
        for i in 1..=n {
            for j in (i + 1)..=n {
                let block = m.mode_block(lvl, i, j);
                for r in 0..d {
                    let row: Vec<Scalar> = (0..d).map(|c| block.get(r, c)).collect();
                    if row.iter().any(|v| !v.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let kernel = linalg::kernel_basis(&rows, d);
    if kernel.len() != 1 {
        return Ok(Err(NotHighestWeight {
            kernel_dimension: kernel.len(),
        }));
    }
    let xi = kernel.into_iter().next().unwrap();
    let pivot = xi
        .iter()
        .position(|v| !v.is_zero())
        .expect("kernel vector nonzero");
    let mut mu = Vec::with_capacity(n);
    for i in 1..=n {
        let mut coeffs = Vec::with_capacity(m.level as usize + 1);
        for lvl in 0..=m.level {
            let block = if lvl == 0 {
                RingMatrix::identity(d, Scalar::one())
            } else {
                m.mode_block(lvl, i, i)
            };
            // block * xi must be proportional to xi
            let mut image = vec![Scalar::zero(); d];
            for (&(r, c), v) in block.entries() {
                image[r] += &(v * &xi[c]);
            }
            let ratio = &image[pivot] / &xi[pivot];
            for (r, val) in image.iter().enumerate() {
                if !(val - &(&ratio * &xi[r])).is_zero() {
                    return Err(CoreError::InvalidInput(format!(
                        "diagonal series T^{{{i},{i}}} does not act diagonally on the \
                         highest vector (level {lvl}, coordinate {r})"
                    )));
                }
            }
            coeffs.push(ratio);
        }
        mu.push(coeffs);
    }
    Ok(Ok(HighestWeightSeries {
        mu,
        xi,
        level: m.level,
    }))
}

/// Drinfeld-type classification data recovered from highest weights.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DrinfeldDatum {
    /// roots of `P_1 .. P_{N-1}`, each sorted with multiplicity
    pub roots: Vec<Vec<Scalar>>,
    pub degrees: Vec<usize>,
    /// scalar series common to all weights under the normalization
    /// `mu-hat^N = 1`, expanded to `N * p` coefficients of `u^{-n}`
    pub rho: Vec<Scalar>,
}

impl DrinfeldDatum {
    pub fn total_degree(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Solve `mu^i(u) / mu^{i+1}(u) = P_i(u+1) / P_i(u)` for monic `P_i` with
/// rational roots, by matching shifted-root chains of the reduced ratio.
pub fn drinfeld_from_weights(hw: &HighestWeightSeries, p: u32) -> Result<DrinfeldDatum, CoreError> {
    let n = hw.mu.len();
    let mut roots_all = Vec::new();
    let mut degrees = Vec::new();
    for i in 0..n - 1 {
        let num = hw.mu_poly_in_u(i);
        let den = hw.mu_poly_in_u(i + 1);
        let g = num.gcd(&den);
        let (num_red, r1) = num.div_rem(&g);
        let (den_red, r2) = den.div_rem(&g);
        debug_assert!(r1.is_zero() && r2.is_zero());
        let p_i = telescoping_roots(&num_red, &den_red)?;
        degrees.push(p_i.len());
        roots_all.push(p_i);
    }
    let total: usize = degrees.iter().sum();
    if total > p as usize {
        return Err(CoreError::InvalidInput(format!(
            "total polynomial degree {total} exceeds the truncation level {p}"
        )));
    }
    // rho = mu^N under the normalization mu-hat^N = 1, padded to N*p terms
    let mut rho: Vec<Scalar> = hw.mu[n - 1].clone();
    rho.resize(n * p as usize + 1, Scalar::zero());
    rho.remove(0); // leading 1 dropped; report c_1..c_{Np}
    Ok(DrinfeldDatum {
        roots: roots_all,
        degrees,
        rho,
    })
}

/// Given the reduced monic fraction `num/den`, find the root multiset `S`
/// with `prod_{s in S} (u + 1 - s) / (u - s) = num / den` after
/// cancellation. Errors if the fraction does not telescope over rational
/// roots.
fn telescoping_roots(num: &ScalarPoly, den: &ScalarPoly) -> Result<Vec<Scalar>, CoreError> {
    if num.degree() != den.degree() {
        return Err(CoreError::InvalidInput(
            "weight ratio numerator and denominator degrees differ".into(),
        ));
    }
    let (num_roots, rest_n) = num.rational_roots();
    let (den_roots, rest_d) = den.rational_roots();
    if rest_n.degree().unwrap_or(0) > 0 || rest_d.degree().unwrap_or(0) > 0 {
        return Err(CoreError::Unsupported(
            "weight ratio has irrational roots".into(),
        ));
    }
    // pair each denominator root b with a numerator root a, b - a a positive
    // integer; the chain a+1..b joins the root multiset
    let mut available = num_roots;
    let mut roots = Vec::new();
    let mut den_sorted = den_roots;
    den_sorted.sort();
    for b in den_sorted {
        // largest available a < b with integer difference
        let mut best: Option<usize> = None;
        for (idx, a) in available.iter().enumerate() {
            let diff = &b - a;
            if diff.is_integer() && !diff.is_zero() && !diff.is_negative() {
                match best {
                    None => best = Some(idx),
                    Some(cur) if *a > available[cur] => best = Some(idx),
                    _ => {}
                }
            }
        }
        let Some(idx) = best else {
            return Err(CoreError::InvalidInput(format!(
                "weight ratio does not telescope: denominator root {b} has no partner"
            )));
        };
        let a = available.remove(idx);
        // chain of consecutive roots a+1, a+2, .., b
        let mut r = &a + &Scalar::one();
        loop {
            roots.push(r.clone());
            if r == b {
                break;
            }
            r = &r + &Scalar::one();
        }
    }
    if !available.is_empty() {
        return Err(CoreError::InvalidInput(
            "weight ratio does not telescope: unmatched numerator roots".into(),
        ));
    }
    // final arbiter: rebuild the ratio and compare exactly
    let p_poly = ScalarPoly::from_roots(&roots);
    let shifted = p_poly.compose_shift(&Scalar::one());
    if shifted.mul(den).sub(&p_poly.mul(num)).is_zero() {
        roots.sort();
        Ok(roots)
    } else {
        Err(CoreError::InvalidInput(
            "telescoping reconstruction failed verification".into(),
        ))
    }
}

/// Dimension of the commutant (matrices commuting with every mode matrix).
/// The module is irreducible exactly when this is 1.
pub fn commutant_dimension(m: &ModuleData) -> usize {
    let d = m.dim;
    let n = m.sig.total();
    // incremental sparse row reduction over the d^2 unknowns Z_{rc}
    let mut pivots: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, Scalar>> =
        std::collections::BTreeMap::new();
    let mut blocks = Vec::new();
    for lvl in 1..=m.level {
        for i in 1..=n {
            for j in 1..=n {
                let b = m.mode_block(lvl, i, j);
                if !b.is_zero() {
                    blocks.push(b);
                }
            }
        }
    }
    for a in &blocks {
        for r in 0..d {
            for c in 0..d {
                // equation: sum_k Z_{rk} A_{kc} - A_{rk} Z_{kc} = 0
                let mut row: std::collections::BTreeMap<usize, Scalar> =
                    std::collections::BTreeMap::new();
                for k in 0..d {
                    let akc = a.get(k, c);
                    if !akc.is_zero() {
                        let e = row.entry(r * d + k).or_insert_with(Scalar::zero);
                        *e += &akc;
                    }
                    let ark = a.get(r, k);
                    if !ark.is_zero() {
                        let e = row.entry(k * d + c).or_insert_with(Scalar::zero);
                        *e -= &ark;
                    }
                }
                row.retain(|_, v| !v.is_zero());
                // reduce against existing pivots
                while let Some((&lead, _)) = row.iter().next() {
                    let Some(pivot_row) = pivots.get(&lead) else {
                        break;
                    };
                    let factor = row[&lead].clone();
                    for (col, pv) in pivot_row {
                        let e = row.entry(*col).or_insert_with(Scalar::zero);
                        *e -= &(&factor * pv);
                    }
                    row.retain(|_, v| !v.is_zero());
                }
                if let Some((&lead, _)) = row.iter().next() {
                    let inv = row[&lead].recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(lead, row);
                    if pivots.len() == d * d - 1 {
                        // only the scalars remain
                        return 1;
                    }
                }
            }
        }
    }
    d * d - pivots.len()
}

pub fn irreducible(m: &ModuleData) -> (bool, usize) {
    let dim = commutant_dimension(m);
    (dim == 1, dim)
}

/// Serializable export: dimension plus mode matrices as sparse rational
/// triplets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub signature: String,
    pub dimension: usize,
    pub level: u32,
    pub parameters: Vec<String>,
    pub coupling: String,
    pub modes: Vec<ModeJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModeJson {
    pub level: u32,
    pub row: usize,
    pub col: usize,
    /// (module row, module col, value) triplets
    pub entries: Vec<(usize, usize, String)>,
}

pub fn export_module(m: &ModuleData) -> ModuleJson {
    let n = m.sig.total();
    let mut modes = Vec::new();
    for lvl in 1..=m.level {
        for i in 1..=n {
            for j in 1..=n {
                let block = m.mode_block(lvl, i, j);
                if block.is_zero() {
                    continue;
                }
                let entries = block
                    .entries()
                    .map(|(&(r, c), v)| (r, c, v.to_string()))
                    .collect();
                modes.push(ModeJson {
                    level: lvl,
                    row: i,
                    col: j,
                    entries,
                });
            }
        }
    }
    ModuleJson {
        signature: m.sig.to_string(),
        dimension: m.dim,
        level: m.level,
        parameters: m.params.iter().map(|p| p.to_string()).collect(),
        coupling: m.coupling.clone(),
        modes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn evaluation_module_passes_rtt_with_the_arbitrated_coupling() {
        let m = evaluation_module(Signature::plain(2), s(0)).unwrap();
        assert_eq!(m.coupling, "+e^{ij}");
        m.rtt_check().unwrap();
        m.truncation_check(1).unwrap();
    }

    #[test]
    fn highest_weight_of_basic_module() {
        let m = evaluation_module(Signature::plain(2), s(0)).unwrap();
        let hw = extract_highest_weight(&m).unwrap().unwrap();
        // mu^1(u) = 1 + 1/u, mu^2(u) = 1
        assert_eq!(hw.mu[0], vec![Scalar::one(), Scalar::one()]);
        assert_eq!(hw.mu[1], vec![Scalar::one(), Scalar::zero()]);
        let dd = drinfeld_from_weights(&hw, 1).unwrap();
        assert_eq!(dd.roots, vec![vec![Scalar::zero()]]);
        assert_eq!(dd.degrees, vec![1]);
    }

    #[test]
    fn two_fold_tensor_recovers_parameters() {
        let m = tensor_modules(Signature::plain(2), vec![s(0), s(5)]).unwrap();
        assert_eq!(m.dim, 4);
        m.rtt_check().unwrap();
        m.truncation_check(2).unwrap();
        let hw = extract_highest_weight(&m).unwrap().unwrap();
        let dd = drinfeld_from_weights(&hw, 2).unwrap();
        assert_eq!(dd.roots, vec![vec![s(0), s(5)]]);
        assert!(dd.total_degree() <= 2);
    }

    #[test]
    fn trivial_ratio_gives_empty_polynomials() {
        // second ratio of a rank-3 evaluation module is 1: P_2 = 1
        let m = evaluation_module(Signature::plain(3), s(2)).unwrap();
        let hw = extract_highest_weight(&m).unwrap().unwrap();
        let dd = drinfeld_from_weights(&hw, 1).unwrap();
        assert_eq!(dd.roots[0], vec![s(2)]);
        assert!(dd.roots[1].is_empty());
    }

    #[test]
    fn graded_single_factor_passes_rtt() {
        let m = evaluation_module(Signature::graded(1, 1), s(0)).unwrap();
        m.rtt_check().unwrap();
    }

    #[test]
    fn trivial_module_has_unit_weights() {
        let m = trivial_module(Signature::plain(2));
        assert_eq!(m.dim, 1);
        m.rtt_check().unwrap();
        let hw = extract_highest_weight(&m).unwrap().unwrap();
        // mu^i(u) = 1 for all i, so every polynomial is 1 and rho = 1
        let dd = drinfeld_from_weights(&hw, 1).unwrap();
        assert!(dd.roots.iter().all(|r| r.is_empty()));
        assert!(dd.rho.iter().all(Scalar::is_zero));
    }

    #[test]
    fn evaluation_module_is_irreducible() {
        let m = evaluation_module(Signature::plain(2), s(0)).unwrap();
        let (irr, dim) = irreducible(&m);
        assert!(irr);
        assert_eq!(dim, 1);
    }

    #[test]
    fn chain_telescoping_with_adjacent_roots() {
        // parameters 0 and 1 form a chain: the ratio collapses to a single
        // fraction but reconstruction must still recover {0, 1}
        let m = tensor_modules(Signature::plain(2), vec![s(0), s(1)]).unwrap();
        if let Ok(hw) = extract_highest_weight(&m).unwrap() {
            let dd = drinfeld_from_weights(&hw, 2).unwrap();
            let all: Vec<Scalar> = dd.roots.into_iter().flatten().collect();
            assert_eq!(all, vec![s(0), s(1)]);
        }
    }

    #[test]
    fn export_has_sparse_triplets() {
        let m = evaluation_module(Signature::plain(2), Scalar::ratio(1, 2)).unwrap();
        let json = export_module(&m);
        assert_eq!(json.dimension, 2);
        assert_eq!(json.parameters, vec!["1/2".to_string()]);
        assert!(!json.modes.is_empty());
    }
}
