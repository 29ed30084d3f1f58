//! Graded index bookkeeping.
//!
//! A [`Signature`] records how many basis indices of the defining space are
//! even and how many are odd. The plain `gl(N)` setting is the signature
//! `(N|0)`; every graded sign in the crate is derived from index parities
//! taken from a signature.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Index parity: 0 for even (bosonic), 1 for odd (fermionic).
pub type Parity = u8;

/// A `(M|N)` grading datum: the first `M` indices are even, the next `N` odd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    pub even: usize,
    pub odd: usize,
}

impl Signature {
    pub fn plain(n: usize) -> Self {
        Signature { even: n, odd: 0 }
    }

    pub fn graded(even: usize, odd: usize) -> Self {
        Signature { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn is_plain(&self) -> bool {
        self.odd == 0
    }

    /// Parity of a 1-based index.
    pub fn parity(&self, index: usize) -> Parity {
        debug_assert!(index >= 1 && index <= self.total(), "index out of range");
        u8::from(index > self.even)
    }

    /// Parities of all indices, in order.
    pub fn parities(&self) -> Vec<Parity> {
        (1..=self.total()).map(|i| self.parity(i)).collect()
    }

    /// Parity vector of the `k`-fold tensor power basis, where a composite
    /// index is a base-`total` word of 1-based digits.
    pub fn tensor_parities(&self, k: usize) -> Vec<Parity> {
        let d = self.total();
        let mut out = vec![0u8; d.pow(k as u32)];
        for (idx, p) in out.iter_mut().enumerate() {
            let mut rest = idx;
            let mut acc = 0u8;
            for _ in 0..k {
                acc ^= self.parity(rest % d + 1);
                rest /= d;
            }
            *p = acc;
        }
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_plain() {
            write!(f, "{}", self.even)
        } else {
            write!(f, "{}|{}", self.even, self.odd)
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid signature `{0}`: expected `N` or `M|N` with nonnegative parts and M+N >= 1")]
pub struct ParseSignatureError(String);

impl FromStr for Signature {
    type Err = ParseSignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let raw = s.trim();
        let err = || ParseSignatureError(raw.to_string());
        let sig = match raw.split_once('|') {
            Some((m, n)) => {
                let even = m.trim().parse::<usize>().map_err(|_| err())?;
                let odd = n.trim().parse::<usize>().map_err(|_| err())?;
                Signature { even, odd }
            }
            None => Signature::plain(raw.parse::<usize>().map_err(|_| err())?),
        };
        if sig.total() == 0 {
            return Err(err());
        }
        Ok(sig)
    }
}

/// One generator symbol `T_n^{ij}`: loop level `n >= 1` and matrix position.
///
/// Level-0 modes are the constants `delta^{ij}` and are never stored as
/// symbols. The derived ordering (level, then row, then column) is the fixed
/// total order defining monomial canonical form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GeneratorIndex {
    pub level: u32,
    pub row: usize,
    pub col: usize,
}

impl GeneratorIndex {
    pub fn new(level: u32, row: usize, col: usize) -> Self {
        debug_assert!(level >= 1, "level-0 modes are constants, not symbols");
        GeneratorIndex { level, row, col }
    }

    /// Parity of the generator under a signature: `[i] + [j]` mod 2.
    pub fn parity(&self, sig: &Signature) -> Parity {
        sig.parity(self.row) ^ sig.parity(self.col)
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}^{{{},{}}}", self.level, self.row, self.col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_by_enumeration() {
        let sig = Signature::graded(2, 3);
        for i in 1..=2 {
            assert_eq!(sig.parity(i), 0);
        }
        for i in 3..=5 {
            assert_eq!(sig.parity(i), 1);
        }
    }

    #[test]
    fn plain_case_has_no_odd_indices() {
        let sig = Signature::plain(4);
        assert!(sig.is_plain());
        assert!((1..=4).all(|i| sig.parity(i) == 0));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("3".parse::<Signature>().unwrap(), Signature::plain(3));
        assert_eq!("1|2".parse::<Signature>().unwrap(), Signature::graded(1, 2));
        assert!("".parse::<Signature>().is_err());
        assert!("2|-1".parse::<Signature>().is_err());
        assert!("0".parse::<Signature>().is_err());
    }

    #[test]
    fn generator_order_is_level_row_col() {
        let a = GeneratorIndex::new(1, 2, 2);
        let b = GeneratorIndex::new(2, 1, 1);
        let c = GeneratorIndex::new(2, 1, 2);
        assert!(a < b && b < c);
    }

    #[test]
    fn tensor_parities_compose() {
        let sig = Signature::graded(1, 1);
        // basis of C^{1|1} ⊗ C^{1|1}: indices (1,1),(2,1),(1,2),(2,2) in
        // little-endian digit order
        assert_eq!(sig.tensor_parities(2), vec![0, 1, 1, 0]);
    }
}
