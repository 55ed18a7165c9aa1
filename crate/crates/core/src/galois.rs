//! GF(2^m) arithmetic in a polynomial basis, `1 <= m <= 16`.
//!
//! Each degree uses the irreducible polynomial with the smallest integer
//! encoding (`X^2+X+1`, `X^3+X+1`, `X^4+X+1`, ...). Division follows the
//! convention `x / 0 = 0`.

use alloc::vec::Vec;

use crate::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// A binary extension field; `reduction_poly` includes the `X^m` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisField {
    m: u32,
    reduction_poly: u32,
}

/// Field element; bit `j` of `bits` is the coefficient of `X^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: GaloisField,
    bits: u32,
}

/// Carry-less product of two polynomials of degree < 16.
fn clmul(a: u32, b: u32) -> u32 {
    let mut out = 0;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            out ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    out
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, p: u32) -> u32 {
    let dp = poly_degree(p);
    while a != 0 && poly_degree(a) >= dp {
        a ^= p << (poly_degree(a) - dp);
    }
    a
}

/// Irreducibility by trial division with every polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let d = poly_degree(p);
    (2u32..1 << (d / 2 + 1)).all(|q| poly_rem(p, q) != 0)
}

impl GaloisField {
    /// The field of degree `m` with its canonical reduction polynomial.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let reduction_poly = ((1u32 << m)..(2u32 << m))
            .find(|&p| is_irreducible(p))
            .expect("irreducible polynomials exist in every degree");
        Ok(Self { m, reduction_poly })
    }

    /// A field with a caller-chosen reduction polynomial (checked).
    pub fn with_polynomial(m: u32, reduction_poly: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        if reduction_poly >> m != 1 || !is_irreducible(reduction_poly) {
            return Err(Error::premise("reduction polynomial is not irreducible of degree m"));
        }
        Ok(Self { m, reduction_poly })
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn reduction_poly(&self) -> u32 {
        self.reduction_poly
    }

    pub fn order(&self) -> u32 {
        1 << self.m
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement> {
        if bits >> self.m != 0 {
            return Err(Error::ElementRange { value: bits, m: self.m });
        }
        Ok(FieldElement { field: *self, bits })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, bits: 1 }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |bits| FieldElement { field: *self, bits })
    }

    // Raw arithmetic on bit patterns; inputs are assumed in range.

    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        poly_rem(clmul(a, b), self.reduction_poly)
    }

    pub fn square_raw(&self, a: u32) -> u32 {
        self.mul_raw(a, a)
    }

    pub fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.square_raw(base);
            e >>= 1;
        }
        acc
    }

    /// Inverse as `a^(2^m - 2)`; maps 0 to 0.
    pub fn inv_raw(&self, a: u32) -> u32 {
        self.pow_raw(a, (1u64 << self.m) - 2)
    }

    /// `a / b` with `a / 0 = 0`.
    pub fn div_raw(&self, a: u32, b: u32) -> u32 {
        if b == 0 {
            0
        } else {
            self.mul_raw(a, self.inv_raw(b))
        }
    }

    /// Absolute trace `sum_{i<m} a^(2^i)`, as a bit.
    pub fn trace_raw(&self, a: u32) -> bool {
        let mut t = 0;
        let mut p = a;
        for _ in 0..self.m {
            t ^= p;
            p = self.square_raw(p);
        }
        debug_assert!(t <= 1);
        t == 1
    }

    /// `(x_1, ..., x_m) -> sum x_j X^(j-1)`.
    pub fn from_vector(&self, x: &[bool]) -> Result<FieldElement> {
        if x.len() != self.m as usize {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: x.len() as u32,
            });
        }
        let bits = x.iter().enumerate().fold(0, |acc, (j, &b)| acc | (b as u32) << j);
        Ok(FieldElement { field: *self, bits })
    }

    pub fn to_vector(&self, e: FieldElement) -> Vec<bool> {
        (0..self.m).map(|j| e.bits >> j & 1 == 1).collect()
    }

    /// Element whose vector has the given truth-table index (`x_1` most
    /// significant). This reverses the bit order.
    pub fn from_index(&self, index: u32) -> u32 {
        index.reverse_bits() >> (32 - self.m)
    }

    /// Inverse of [`GaloisField::from_index`].
    pub fn to_index(&self, bits: u32) -> u32 {
        bits.reverse_bits() >> (32 - self.m)
    }
}

impl FieldElement {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn field(&self) -> GaloisField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self { field: self.field, bits: self.bits ^ other.bits })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field,
            bits: self.field.mul_raw(self.bits, other.bits),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.bits == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(Self {
            field: self.field,
            bits: self.field.inv_raw(self.bits),
        })
    }

    /// `self / other`, zero when `other` is zero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field,
            bits: self.field.div_raw(self.bits, other.bits),
        })
    }

    pub fn trace(&self) -> bool {
        self.field.trace_raw(self.bits)
    }
}
