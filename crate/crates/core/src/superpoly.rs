//! Free supercommutative polynomial ring over exact rationals in the
//! generators `T_n^{ij}`.
//!
//! Monomials are kept in canonical form: generators sorted by the fixed
//! total order on [`GeneratorIndex`], with a sign flip for every swap of two
//! odd generators and annihilation of any odd square. Even generators may
//! repeat (powers are stored as repeated entries).

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;
use crate::signature::{GeneratorIndex, Parity, Signature};

/// A normal-ordered product of generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    gens: Vec<GeneratorIndex>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { gens: Vec::new() }
    }

    pub fn single(g: GeneratorIndex) -> Self {
        Monomial { gens: vec![g] }
    }

    pub fn is_unit(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[GeneratorIndex] {
        &self.gens
    }

    pub fn degree(&self) -> usize {
        self.gens.len()
    }

    pub fn parity(&self, sig: &Signature) -> Parity {
        self.gens.iter().fold(0, |acc, g| acc ^ g.parity(sig))
    }

    pub fn max_level(&self) -> u32 {
        self.gens.iter().map(|g| g.level).max().unwrap_or(0)
    }

    /// Merge two canonical monomials, tracking the Koszul sign. Returns
    /// `None` when an odd generator squares to zero.
    fn merge(&self, other: &Monomial, sig: &Signature) -> Option<(Monomial, bool)> {
        let a = &self.gens;
        let b = &other.gens;
        // suffix counts of odd generators in `a`
        let mut odd_suffix = vec![0usize; a.len() + 1];
        for i in (0..a.len()).rev() {
            odd_suffix[i] = odd_suffix[i + 1] + usize::from(a[i].parity(sig) == 1);
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut flip = false;
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => {
                    if x == y && x.parity(sig) == 1 {
                        return None;
                    }
                    x <= y
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_a {
                out.push(a[i]);
                i += 1;
            } else {
                if b[j].parity(sig) == 1 && odd_suffix[i] % 2 == 1 {
                    flip = !flip;
                }
                out.push(b[j]);
                j += 1;
            }
        }
        Some((Monomial { gens: out }, flip))
    }

    /// Normal-order an arbitrary generator word. Returns the canonical
    /// monomial and the accumulated sign, or `None` if an odd generator
    /// repeats.
    pub fn normal_order(word: &[GeneratorIndex], sig: &Signature) -> Option<(Monomial, bool)> {
        let mut gens = word.to_vec();
        let mut flip = false;
        // insertion sort, counting odd-odd transpositions
        for i in 1..gens.len() {
            let mut j = i;
            while j > 0 && gens[j - 1] > gens[j] {
                if gens[j - 1].parity(sig) == 1 && gens[j].parity(sig) == 1 {
                    flip = !flip;
                }
                gens.swap(j - 1, j);
                j -= 1;
            }
        }
        for w in gens.windows(2) {
            if w[0] == w[1] && w[0].parity(sig) == 1 {
                return None;
            }
        }
        Some((Monomial { gens }, flip))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Element of the supercommutative polynomial ring: a map from canonical
/// monomials to nonzero rational coefficients. The zero element is the
/// empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperPolyElement {
    sig: Signature,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolyElement {
    pub fn zero(sig: Signature) -> Self {
        SuperPolyElement {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sig: Signature, c: Scalar) -> Self {
        let mut e = Self::zero(sig);
        e.add_term(Monomial::unit(), c);
        e
    }

    pub fn one(sig: Signature) -> Self {
        Self::constant(sig, Scalar::one())
    }

    pub fn generator(sig: Signature, g: GeneratorIndex) -> Self {
        let mut e = Self::zero(sig);
        e.add_term(Monomial::single(g), Scalar::one());
        e
    }

    /// Build from an arbitrary (possibly unsorted) generator word with a
    /// coefficient; the word is normal-ordered with Koszul signs.
    pub fn from_word(sig: Signature, word: &[GeneratorIndex], coeff: Scalar) -> Self {
        let mut e = Self::zero(sig);
        if let Some((m, flip)) = Monomial::normal_order(word, &sig) {
            e.add_term(m, coeff.negate_if(flip));
        }
        e
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading monomial in the fixed term order, if nonzero.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.sig, other.sig);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.sig);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.sig, other.sig);
        let mut out = Self::zero(self.sig);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, flip)) = ma.merge(mb, &self.sig) {
                    out.add_term(m, (ca * cb).negate_if(flip));
                }
            }
        }
        out
    }

    /// Parity if the element is homogeneous (the zero element is even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity(&self.sig));
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// Drop every monomial containing a generator of level exceeding `p`.
    pub fn truncate(&self, p: u32) -> Self {
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            if m.max_level() <= p {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Largest generator level occurring, 0 for constants.
    pub fn max_level(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::max_level)
            .max()
            .unwrap_or(0)
    }

    /// Apply a parity-preserving ring homomorphism defined on generators.
    pub fn map_generators<F>(&self, mut image: F) -> Self
    where
        F: FnMut(GeneratorIndex) -> SuperPolyElement,
    {
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(self.sig, c.clone());
            for g in m.generators() {
                acc = acc.mul(&image(*g));
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }
}

impl fmt::Display for SuperPolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(level: u32, row: usize, col: usize) -> GeneratorIndex {
        GeneratorIndex::new(level, row, col)
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        let sig = Signature::graded(1, 1);
        let odd = g(1, 1, 2); // parity [1]+[2] = 1
        let x = SuperPolyElement::generator(sig, odd);
        assert!(x.mul(&x).is_zero());
    }

    #[test]
    fn even_generators_sort_commutatively() {
        let sig = Signature::plain(2);
        let a = SuperPolyElement::generator(sig, g(1, 2, 2));
        let b = SuperPolyElement::generator(sig, g(1, 1, 1));
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn odd_generators_anticommute() {
        let sig = Signature::graded(1, 1);
        let a = SuperPolyElement::generator(sig, g(1, 1, 2));
        let b = SuperPolyElement::generator(sig, g(1, 2, 1));
        assert_eq!(a.mul(&b), b.mul(&a).neg());
    }

    #[test]
    fn normal_order_from_word_matches_product() {
        let sig = Signature::graded(1, 1);
        let w1 = [g(1, 2, 1), g(1, 1, 2)];
        let e = SuperPolyElement::from_word(sig, &w1, Scalar::one());
        let a = SuperPolyElement::generator(sig, g(1, 2, 1));
        let b = SuperPolyElement::generator(sig, g(1, 1, 2));
        assert_eq!(e, a.mul(&b));
    }

    #[test]
    fn supercommutativity_of_homogeneous_elements() {
        let sig = Signature::graded(1, 1);
        let gens = [g(1, 1, 1), g(1, 1, 2), g(1, 2, 1), g(1, 2, 2)];
        for x in &gens {
            for y in &gens {
                let ex = SuperPolyElement::generator(sig, *x);
                let ey = SuperPolyElement::generator(sig, *y);
                let sign = x.parity(&sig) & y.parity(&sig);
                let rhs = ey.mul(&ex);
                let rhs = if sign == 1 { rhs.neg() } else { rhs };
                assert_eq!(ex.mul(&ey), rhs, "pair {x}, {y}");
            }
        }
    }

    #[test]
    fn map_generators_is_a_homomorphism() {
        let sig = Signature::plain(2);
        let a = SuperPolyElement::generator(sig, g(1, 1, 2));
        let b = SuperPolyElement::generator(sig, g(2, 2, 1));
        let shift = |gen: GeneratorIndex| {
            SuperPolyElement::generator(sig, g(gen.level + 1, gen.row, gen.col))
        };
        let lhs = a.mul(&b).map_generators(shift);
        let rhs = a.map_generators(shift).mul(&b.map_generators(shift));
        assert_eq!(lhs, rhs);
    }
}
