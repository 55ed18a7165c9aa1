//! Algebraic normal form via the binary Möbius transform.

use alloc::vec::Vec;

use crate::function::var_bit;
use crate::{BooleanFunction, Error, Result};

/// ANF coefficients: bit `I` is set when the monomial `prod_{l in I} x_l`
/// appears, with `I` encoded like a table index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    n: u32,
    coefficients: BooleanFunction,
}

// Masks selecting bit positions whose index bit k is zero, k = 0..5.
const LOW: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place Möbius transform over packed words (an involution).
fn mobius_words(n: u32, words: &mut [u64]) {
    for k in 0..n.min(6) {
        let s = 1u32 << k;
        for w in words.iter_mut() {
            *w ^= (*w & LOW[k as usize]) << s;
        }
    }
    for k in 6..n {
        let stride = 1usize << (k - 6);
        for block in words.chunks_exact_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// ANF of a truth table.
pub fn mobius(f: &BooleanFunction) -> AnfPolynomial {
    let mut words = f.words().to_vec();
    mobius_words(f.n(), &mut words);
    AnfPolynomial {
        n: f.n(),
        coefficients: BooleanFunction::from_words(f.n(), words).expect("same shape"),
    }
}

/// Truth table of an ANF.
pub fn mobius_inv(a: &AnfPolynomial) -> BooleanFunction {
    let mut words = a.coefficients.words().to_vec();
    mobius_words(a.n, &mut words);
    BooleanFunction::from_words(a.n, words).expect("same shape")
}

impl AnfPolynomial {
    /// Wraps a coefficient table (bit `I` = coefficient `a_I`).
    pub fn from_coefficients(coefficients: BooleanFunction) -> Self {
        Self {
            n: coefficients.n(),
            coefficients,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &BooleanFunction {
        &self.coefficients
    }

    pub fn coefficient(&self, monomial: u32) -> bool {
        self.coefficients.get(monomial)
    }

    /// Monomials with nonzero coefficient, in index order.
    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        (0..1u32 << self.n).filter(move |&i| self.coefficients.get(i))
    }

    /// Algebraic degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.monomials().map(u32::count_ones).max().unwrap_or(0)
    }

    /// Size of the longest monomial containing `x_i` (0 if `x_i` is absent).
    pub fn degree_of_variable(&self, i: u32) -> Result<u32> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let bit = 1u32 << var_bit(self.n, i);
        Ok(self
            .monomials()
            .filter(|m| m & bit != 0)
            .map(u32::count_ones)
            .max()
            .unwrap_or(0))
    }

    /// Monomials as lists of 1-based variable indices.
    pub fn terms(&self) -> Vec<Vec<u32>> {
        self.monomials()
            .map(|m| (1..=self.n).filter(|&j| m >> var_bit(self.n, j) & 1 == 1).collect())
            .collect()
    }
}

pub fn degree(f: &BooleanFunction) -> u32 {
    mobius(f).degree()
}

pub fn degree_of_variable(f: &BooleanFunction, i: u32) -> Result<u32> {
    mobius(f).degree_of_variable(i)
}
