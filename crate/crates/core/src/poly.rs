//! Polynomial utilities over exact rings.
//!
//! - [`Ring`] is the minimal commutative-ring interface the matrix and
//!   polynomial code computes in (implemented by [`Scalar`],
//!   [`SuperPolyElement`] and [`BiPoly`] itself).
//! - [`BiPoly`] is a sparse bivariate polynomial. Identity checks always
//!   clear denominators first, so rational functions never appear: both the
//!   cleared Yang-Baxter forms in `x, y` and mode expansions in
//!   `x = u^{-1}, y = v^{-1}` live here.
//! - [`ScalarPoly`] is a dense univariate polynomial over [`Scalar`] with
//!   the Euclidean operations (gcd, shift, rational roots) used by the
//!   highest-weight machinery.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;
use crate::superpoly::SuperPolyElement;

/// Commutative ring interface for matrix/polynomial entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: &Scalar) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for Scalar {
    fn zero(&self) -> Self {
        Scalar::zero()
    }
    fn one(&self) -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: &Scalar) -> Self {
        self * k
    }
}

impl Ring for SuperPolyElement {
    fn zero(&self) -> Self {
        SuperPolyElement::zero(self.signature())
    }
    fn one(&self) -> Self {
        SuperPolyElement::one(self.signature())
    }
    fn is_zero(&self) -> bool {
        SuperPolyElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SuperPolyElement::add(self, other)
    }
    fn neg(&self) -> Self {
        SuperPolyElement::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        SuperPolyElement::mul(self, other)
    }
    fn scale(&self, k: &Scalar) -> Self {
        SuperPolyElement::scale(self, k)
    }
}

/// Sparse bivariate polynomial in formal variables `x`, `y` with
/// coefficients in `R`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly<R: Ring> {
    /// Witness used to produce ring constants (relevant for rings like
    /// `SuperPolyElement` that carry a signature).
    unit: R,
    terms: BTreeMap<(u32, u32), R>,
}

impl<R: Ring> BiPoly<R> {
    /// `unit` must be the multiplicative unit of the coefficient ring.
    pub fn zero(unit: R) -> Self {
        BiPoly {
            unit,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(unit: R, c: R) -> Self {
        let mut p = Self::zero(unit);
        p.add_term((0, 0), c);
        p
    }

    pub fn term(unit: R, xe: u32, ye: u32, c: R) -> Self {
        let mut p = Self::zero(unit);
        p.add_term((xe, ye), c);
        p
    }

    /// The variable `x` (resp. `y` via `var_y`).
    pub fn var_x(unit: R) -> Self {
        let one = unit.one();
        Self::term(unit, 1, 0, one)
    }

    pub fn var_y(unit: R) -> Self {
        let one = unit.one();
        Self::term(unit, 0, 1, one)
    }

    pub fn unit_coeff(&self) -> &R {
        &self.unit
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, xe: u32, ye: u32) -> R {
        self.terms
            .get(&(xe, ye))
            .cloned()
            .unwrap_or_else(|| self.unit.zero())
    }

    fn add_term(&mut self, key: (u32, u32), c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Substitute `x -> -x` and/or `y -> -y`.
    pub fn flip_signs(&self, flip_x: bool, flip_y: bool) -> Self {
        let mut out = Self::zero(self.unit.clone());
        for (&(a, b), c) in &self.terms {
            let neg = (flip_x && a % 2 == 1) ^ (flip_y && b % 2 == 1);
            out.add_term((a, b), if neg { c.neg() } else { c.clone() });
        }
        out
    }

    /// Multiply by the monomial `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        let mut out = Self::zero(self.unit.clone());
        for (&(xe, ye), c) in &self.terms {
            out.add_term((xe + a, ye + b), c.clone());
        }
        out
    }

    /// Drop all terms of total degree exceeding `max`.
    pub fn truncate_total_degree(&self, max: u32) -> Self {
        let mut out = Self::zero(self.unit.clone());
        for (&(a, b), c) in &self.terms {
            if a + b <= max {
                out.add_term((a, b), c.clone());
            }
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Exact division by a divisor with scalar coefficients whose leading
    /// term (in the lex order x > y) has an invertible scalar coefficient.
    /// Errors if a nonzero remainder survives.
    pub fn divide_exact(&self, den: &BiPoly<Scalar>) -> Result<Self, DivisionRemainder<R>> {
        assert!(!den.terms.is_empty(), "division by the zero polynomial");
        // leading term of the divisor under lex order (x, then y)
        let (&lead_key, lead_coeff) = den
            .terms
            .iter()
            .max_by_key(|(&(a, b), _)| (a, b))
            .expect("nonzero divisor");
        let lead_inv = lead_coeff.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.unit.clone());
        loop {
            // largest remaining term divisible by the leading monomial
            let candidate = rem
                .terms
                .iter()
                .rev()
                .find(|(&(a, b), _)| a >= lead_key.0 && b >= lead_key.1)
                .map(|(&k, c)| (k, c.clone()));
            let Some(((a, b), c)) = candidate else { break };
            let qkey = (a - lead_key.0, b - lead_key.1);
            let qc = c.scale(&lead_inv);
            quot.add_term(qkey, qc.clone());
            for (&(da, db), dc) in &den.terms {
                rem.add_term(
                    (qkey.0 + da, qkey.1 + db),
                    qc.mul(&self.ring_from(dc)).neg(),
                );
            }
        }
        if rem.terms.is_empty() {
            Ok(quot)
        } else {
            Err(DivisionRemainder { remainder: rem })
        }
    }

    fn ring_from(&self, s: &Scalar) -> R {
        self.unit.scale(s)
    }
}

/// Nonzero remainder from [`BiPoly::divide_exact`]; carries the offending
/// remainder so failures upstream can be reported with a payload.
#[derive(Debug, Clone)]
pub struct DivisionRemainder<R: Ring> {
    pub remainder: BiPoly<R>,
}

impl<R: Ring> Ring for BiPoly<R> {
    fn zero(&self) -> Self {
        BiPoly::zero(self.unit.clone())
    }
    fn one(&self) -> Self {
        BiPoly::constant(self.unit.clone(), self.unit.one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.add_term(k, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero(self.unit.clone());
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1.mul(c2));
            }
        }
        out
    }
    fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return BiPoly::zero(self.unit.clone());
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.scale(k);
        }
        out
    }
}

impl<R: Ring> fmt::Display for BiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if a > 0 {
                write!(f, "*x^{a}")?;
            }
            if b > 0 {
                write!(f, "*y^{b}")?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial over `Scalar`, coefficients low to high.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ScalarPoly {
    coeffs: Vec<Scalar>,
}

impl ScalarPoly {
    pub fn zero() -> Self {
        ScalarPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        ScalarPoly { coeffs: vec![c] }.normalized()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        ScalarPoly { coeffs }.normalized()
    }

    /// Monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(roots: &[Scalar]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = p.mul(&Self::from_coeffs(vec![-r, Scalar::one()]));
        }
        p
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        ScalarPoly { coeffs }.normalized()
    }

    pub fn neg(&self) -> Self {
        ScalarPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        ScalarPoly { coeffs }.normalized()
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        ScalarPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
        .normalized()
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = den.degree().unwrap();
        let lead_inv = den.leading().unwrap().recip();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(den.coeffs.len()) + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            quot[shift] = q.clone();
            let mut sub = vec![Scalar::zero(); shift];
            sub.extend(den.coeffs.iter().map(|c| c * &q));
            rem = rem.sub(&ScalarPoly::from_coeffs(sub));
        }
        (ScalarPoly::from_coeffs(quot), rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitute `u -> u + shift`.
    pub fn compose_shift(&self, shift: &Scalar) -> Self {
        let mut acc = Self::zero();
        let lin = Self::from_coeffs(vec![shift.clone(), Scalar::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// All rational roots with multiplicity, plus the non-factorable
    /// remainder cofactor (constant iff the polynomial splits over Q).
    pub fn rational_roots(&self) -> (Vec<Scalar>, ScalarPoly) {
        let mut roots = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() {
            return (roots, rest);
        }
        // strip powers of u
        while rest.coeff(0).is_zero() && rest.degree().is_some_and(|d| d > 0) {
            roots.push(Scalar::zero());
            rest = rest
                .div_rem(&ScalarPoly::from_coeffs(vec![
                    Scalar::zero(),
                    Scalar::one(),
                ]))
                .0;
        }
        // rational root theorem on the primitive integer form
        'outer: while rest.degree().is_some_and(|d| d > 0) {
            let mut denom_lcm = num::BigInt::from(1);
            for c in rest.coeffs() {
                denom_lcm = num::Integer::lcm(&denom_lcm, c.denom());
            }
            let ints: Vec<num::BigInt> = rest
                .coeffs()
                .iter()
                .map(|c| c.numer() * (&denom_lcm / c.denom()))
                .collect();
            let a0 = ints[0].clone();
            let an = ints.last().unwrap().clone();
            if a0.is_zero() {
                // handled above; defensive
                break;
            }
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Scalar::from_big_ratio(&p * num::BigInt::from(sign), q.clone());
                        if rest.eval(&cand).is_zero() {
                            roots.push(cand.clone());
                            rest = rest
                                .div_rem(&ScalarPoly::from_coeffs(vec![-&cand, Scalar::one()]))
                                .0;
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        (roots, rest)
    }
}

fn divisors(n: &num::BigInt) -> Vec<num::BigInt> {
    use num::Signed;
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = num::BigInt::from(1);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

use num::Zero as _;

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(coeffs: &[i64]) -> ScalarPoly {
        ScalarPoly::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn bipoly_exact_division_by_x_minus_y() {
        let unit = Scalar::one();
        let x = BiPoly::var_x(unit.clone());
        let y = BiPoly::var_y(unit.clone());
        let num = x.mul(&x).sub(&y.mul(&y)); // x^2 - y^2
        let den = x.sub(&y);
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q, x.add(&y));
    }

    #[test]
    fn bipoly_division_reports_remainder() {
        let unit = Scalar::one();
        let one = BiPoly::constant(unit.clone(), Scalar::one());
        let den = BiPoly::var_x(unit.clone()).sub(&BiPoly::var_y(unit));
        assert!(one.divide_exact(&den).is_err());
    }

    #[test]
    fn scalar_poly_gcd_and_shift() {
        // (u-1)(u-2) and (u-2)(u-3) share (u-2)
        let a = ScalarPoly::from_roots(&[Scalar::from_int(1), Scalar::from_int(2)]);
        let b = ScalarPoly::from_roots(&[Scalar::from_int(2), Scalar::from_int(3)]);
        assert_eq!(a.gcd(&b), ScalarPoly::from_roots(&[Scalar::from_int(2)]));
        // (u+1)^2 via shift of u^2
        let sq = sp(&[0, 0, 1]).compose_shift(&Scalar::one());
        assert_eq!(sq, sp(&[1, 2, 1]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // u^2 (u - 3/2) (u + 2)
        let p = ScalarPoly::from_roots(&[
            Scalar::zero(),
            Scalar::zero(),
            Scalar::ratio(3, 2),
            Scalar::from_int(-2),
        ]);
        let (mut roots, rest) = p.rational_roots();
        roots.sort();
        assert_eq!(
            roots,
            vec![
                Scalar::from_int(-2),
                Scalar::zero(),
                Scalar::zero(),
                Scalar::ratio(3, 2)
            ]
        );
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn irrational_factor_left_in_cofactor() {
        let p = sp(&[-2, 0, 1]); // u^2 - 2
        let (roots, rest) = p.rational_roots();
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), Some(2));
    }
}
