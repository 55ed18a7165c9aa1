//! Bit-packed truth tables and the elementary function algebra.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, MAX_VARS};

/// Pointwise combination used by [`BooleanFunction::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Xor,
    And,
}

/// A Boolean function `F_2^n -> F_2` stored as a packed truth table.
///
/// Bit `i` of the table (bit `i % 64` of word `i / 64`) is `f(x)` for the
/// vector `x` with index `i`; unused high bits of the last word are zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

fn check_vars(n: u32) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

fn word_count(n: u32) -> usize {
    (1usize << n).div_ceil(64)
}

fn tail_mask(n: u32) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << n)) - 1
    }
}

/// Encodes a vector `(x_1, ..., x_n)` as a table index (`x_n` least significant).
pub fn encode_vector(x: &[bool]) -> u32 {
    x.iter().fold(0, |acc, &b| (acc << 1) | b as u32)
}

/// Inverse of [`encode_vector`].
pub fn decode_vector(index: u32, n: u32) -> Vec<bool> {
    (1..=n).map(|j| index >> (n - j) & 1 == 1).collect()
}

/// Index bit position of variable `x_j` (1-based) among `n` variables.
#[inline]
pub fn var_bit(n: u32, j: u32) -> u32 {
    n - j
}

/// Removes index bit `pos`, shifting higher bits down.
#[inline]
#[cfg(test)]
pub(crate) fn drop_bit(index: u32, pos: u32) -> u32 {
    ((index >> (pos + 1)) << pos) | (index & ((1 << pos) - 1))
}

/// Inserts `bit` at index bit `pos`, shifting higher bits up.
#[inline]
pub(crate) fn insert_bit(index: u32, pos: u32, bit: bool) -> u32 {
    ((index >> pos) << (pos + 1)) | ((bit as u32) << pos) | (index & ((1 << pos) - 1))
}

impl BooleanFunction {
    /// The constant zero function.
    pub fn zero(n: u32) -> Result<Self> {
        check_vars(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    pub fn constant(n: u32, value: bool) -> Result<Self> {
        let f = Self::zero(n)?;
        Ok(if value { f.complement() } else { f })
    }

    /// Builds a function from its value at every table index.
    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        check_vars(n)?;
        let mut words = vec![0u64; word_count(n)];
        for i in 0..(1u32 << n) {
            if f(i) {
                words[(i >> 6) as usize] |= 1 << (i & 63);
            }
        }
        Ok(Self { n, words })
    }

    pub fn from_bits(n: u32, bits: &[bool]) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1usize << n {
            return Err(Error::TableLength { n, found: bits.len() });
        }
        Self::from_fn(n, |i| bits[i as usize])
    }

    /// Builds a function from packed words in the internal layout.
    pub fn from_words(n: u32, mut words: Vec<u64>) -> Result<Self> {
        check_vars(n)?;
        if words.len() != word_count(n) {
            return Err(Error::TableLength {
                n,
                found: words.len() * 64,
            });
        }
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(n);
        }
        Ok(Self { n, words })
    }

    /// The coordinate function `x_i` (1-based).
    pub fn variable(n: u32, i: u32) -> Result<Self> {
        check_vars(n)?;
        if !(1..=n).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let bit = var_bit(n, i);
        Self::from_fn(n, |x| x >> bit & 1 == 1)
    }

    /// The linear function `omega . x`.
    pub fn linear(n: u32, omega: u32) -> Result<Self> {
        check_vars(n)?;
        check_vector(n, omega)?;
        Self::from_fn(n, |x| crate::parity(x & omega))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of table entries, `2^n`.
    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, index: u32) -> bool {
        debug_assert!((index as usize) < self.len());
        self.words[(index >> 6) as usize] >> (index & 63) & 1 == 1
    }

    /// Table bits in index order.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..1u32 << self.n).map(move |i| self.get(i))
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.weight() == 1u64 << (self.n - 1)
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.len() as u64
    }

    /// Evaluates `f` at the vector `x = (x_1, ..., x_n)`.
    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n as usize {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len() as u32,
            });
        }
        Ok(self.get(encode_vector(x)))
    }

    fn same_dimension(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            })
        }
    }

    pub fn combine(&self, other: &Self, kind: Combine) -> Result<Self> {
        self.same_dimension(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| match kind {
                Combine::Xor => a ^ b,
                Combine::And => a & b,
            })
            .collect();
        Ok(Self { n: self.n, words })
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.combine(other, Combine::Xor)
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.combine(other, Combine::And)
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(self.n);
        }
        Self { n: self.n, words }
    }

    /// `x -> f(x + a)`.
    pub fn translate(&self, a: u32) -> Result<Self> {
        check_vector(self.n, a)?;
        if a == 0 {
            return Ok(self.clone());
        }
        Self::from_fn(self.n, |x| self.get(x ^ a))
    }

    /// The derivative `D_a f(x) = f(x) + f(x + a)`.
    pub fn derivative(&self, a: u32) -> Result<Self> {
        self.xor(&self.translate(a)?)
    }

    /// Fixes `x_j = value` (1-based `j`), keeping the remaining variables in order.
    pub fn restrict(&self, j: u32, value: bool) -> Result<Self> {
        if !(1..=self.n).contains(&j) {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::NoRemainingVariables);
        }
        let pos = var_bit(self.n, j);
        Self::from_fn(self.n - 1, |y| self.get(insert_bit(y, pos, value)))
    }

    /// Both restrictions at `x_j`: `(f|x_j=0, f|x_j=1)`.
    pub fn split(&self, j: u32) -> Result<(Self, Self)> {
        Ok((self.restrict(j, false)?, self.restrict(j, true)?))
    }

    /// Renames variables: output variable `k` reads input variable `perm[k-1]`.
    ///
    /// `perm` holds 1-based indices and must be a permutation of `1..=n`.
    pub fn permute_variables(&self, perm: &[u32]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n as usize {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: perm.len() as u32,
            });
        }
        let mut seen = 0u32;
        for &p in perm {
            if !(1..=n).contains(&p) || seen >> p & 1 == 1 {
                return Err(Error::premise("variable map is not a permutation"));
            }
            seen |= 1 << p;
        }
        Self::from_fn(n, |y| {
            let mut x = 0;
            for (k, &p) in perm.iter().enumerate() {
                if y >> var_bit(n, k as u32 + 1) & 1 == 1 {
                    x |= 1 << var_bit(n, p);
                }
            }
            self.get(x)
        })
    }

    /// `h(x, y) = op(f(x), g(y))` on `n + m` variables, `x` first.
    pub fn block_combine(&self, g: &Self, kind: Combine) -> Result<Self> {
        let m = g.n;
        Self::from_fn(self.n + m, |i| {
            let (a, b) = (self.get(i >> m), g.get(i & ((1 << m) - 1)));
            match kind {
                Combine::Xor => a ^ b,
                Combine::And => a & b,
            }
        })
    }

    /// Embeds `f` into `total` variables, placing its variables at offset
    /// `offset` (0-based) of the new variable list.
    pub fn embed(&self, total: u32, offset: u32) -> Result<Self> {
        if offset + self.n > total {
            return Err(Error::DimensionMismatch {
                expected: total,
                found: offset + self.n,
            });
        }
        let shift = total - offset - self.n;
        let mask = (1u32 << self.n) - 1;
        Self::from_fn(total, |i| self.get((i >> shift) & mask))
    }
}

pub(crate) fn check_vector(n: u32, a: u32) -> Result<()> {
    if n < 32 && a >> n != 0 {
        Err(Error::DimensionMismatch {
            expected: n,
            found: 32 - a.leading_zeros(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, ", self.n)?;
        if self.n <= 8 {
            for b in self.bits() {
                f.write_str(if b { "1" } else { "0" })?;
            }
        } else {
            write!(f, "weight={}", self.weight())?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1x2() -> BooleanFunction {
        BooleanFunction::from_bits(2, &[false, false, false, true]).unwrap()
    }

    #[test]
    fn index_convention_is_msb_first() {
        let x1 = BooleanFunction::variable(3, 1).unwrap();
        // x_1 is the most significant index bit
        assert_eq!(x1.bits().collect::<Vec<_>>(), [false, false, false, false, true, true, true, true]);
        let x3 = BooleanFunction::variable(3, 3).unwrap();
        assert_eq!(x3.bits().collect::<Vec<_>>(), [false, true, false, true, false, true, false, true]);
        for i in 0..64 {
            assert_eq!(encode_vector(&decode_vector(i, 6)), i);
        }
    }

    #[test]
    fn evaluate_checks_dimension() {
        let f = x1x2();
        assert!(f.evaluate(&[true, true]).unwrap());
        assert!(!f.evaluate(&[true, false]).unwrap());
        assert!(matches!(f.evaluate(&[true]), Err(Error::DimensionMismatch { .. })));
        let z = BooleanFunction::zero(5).unwrap();
        assert!(!z.evaluate(&[true; 5]).unwrap());
    }

    #[test]
    fn variable_count_limits() {
        assert_eq!(BooleanFunction::zero(0), Err(Error::VariableCount(0)));
        assert_eq!(BooleanFunction::zero(27), Err(Error::VariableCount(27)));
        assert!(BooleanFunction::zero(1).is_ok());
    }

    #[test]
    fn restrictions_of_x1x2() {
        let f = x1x2();
        assert_eq!(f.restrict(1, false).unwrap(), BooleanFunction::zero(1).unwrap());
        assert_eq!(f.restrict(1, true).unwrap(), BooleanFunction::variable(1, 1).unwrap());
        assert_eq!(f.restrict(3, true), Err(Error::IndexOutOfRange { index: 3, n: 2 }));
        let one = BooleanFunction::variable(1, 1).unwrap();
        assert_eq!(one.restrict(1, false), Err(Error::NoRemainingVariables));
    }

    #[test]
    fn restrict_keeps_relative_order() {
        // f = x1 x2 + x3 on 4 variables, fix x2 = 1 -> x1 + x3 in (x1, x3, x4)
        let f = BooleanFunction::from_fn(4, |i| {
            let v = decode_vector(i, 4);
            (v[0] & v[1]) ^ v[2]
        })
        .unwrap();
        let g = f.restrict(2, true).unwrap();
        let expect = BooleanFunction::from_fn(3, |i| {
            let v = decode_vector(i, 3);
            v[0] ^ v[1]
        })
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn algebra_identities() {
        let f = BooleanFunction::from_fn(7, |i| i.wrapping_mul(2654435761) >> 13 & 1 == 1).unwrap();
        assert_eq!(f.xor(&f).unwrap(), BooleanFunction::zero(7).unwrap());
        assert_eq!(f.and(&BooleanFunction::constant(7, true).unwrap()).unwrap(), f);
        assert_eq!(f.translate(0x55).unwrap().translate(0x55).unwrap(), f);
        assert_eq!(f.derivative(0).unwrap(), BooleanFunction::zero(7).unwrap());
        assert!(f.xor(&BooleanFunction::zero(6).unwrap()).is_err());
        assert!(f.translate(1 << 7).is_err());
        assert_eq!(f.complement().complement(), f);
        assert_eq!(f.weight() + f.complement().weight(), 128);
    }

    #[test]
    fn linear_derivative_is_constant() {
        let l = BooleanFunction::linear(5, 0b10110).unwrap();
        for a in 0..32 {
            let expect = crate::parity(a & 0b10110);
            assert_eq!(l.derivative(a).unwrap(), BooleanFunction::constant(5, expect).unwrap());
        }
    }

    #[test]
    fn small_tables_keep_tail_clear() {
        let f = BooleanFunction::constant(3, true).unwrap();
        assert_eq!(f.words(), &[0xff]);
        assert_eq!(f.weight(), 8);
        let g = BooleanFunction::from_words(2, vec![u64::MAX]).unwrap();
        assert_eq!(g.weight(), 4);
    }

    #[test]
    fn permutation_and_embedding() {
        let f = BooleanFunction::from_fn(3, |i| {
            let v = decode_vector(i, 3);
            v[0] & !v[2]
        })
        .unwrap();
        // g(y1, y2, y3) = f(y3, y1, y2)  i.e. output var 1 reads input var 2, ...
        let g = f.permute_variables(&[2, 3, 1]).unwrap();
        for i in 0..8 {
            let y = decode_vector(i, 3);
            assert_eq!(g.get(i), f.evaluate(&[y[2], y[0], y[1]]).unwrap());
        }
        assert_eq!(f.permute_variables(&[1, 2, 3]).unwrap(), f);
        assert!(f.permute_variables(&[1, 1, 3]).is_err());
        let e = f.embed(5, 1).unwrap();
        for i in 0..32 {
            let y = decode_vector(i, 5);
            assert_eq!(e.get(i), f.evaluate(&y[1..4]).unwrap());
        }
    }

    #[test]
    fn bit_helpers_round_trip() {
        for idx in 0..256u32 {
            for pos in 0..8 {
                let b = idx >> pos & 1 == 1;
                assert_eq!(insert_bit(drop_bit(idx, pos), pos, b), idx);
            }
        }
    }
}
