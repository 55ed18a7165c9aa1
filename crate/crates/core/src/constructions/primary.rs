//! Primary bent families: Maiorana–McFarland, partial spread `PS_ap` and
//! Carlet's class D.

use alloc::vec::Vec;

use super::{LinearSubspace, PermutationMap};
use crate::galois::GaloisField;
use crate::{parity, BooleanFunction, Error, Result};

/// A Boolean function on `GF(2^m)`, indexed by the element's polynomial bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldFunction {
    field: GaloisField,
    values: Vec<bool>,
}

impl FieldFunction {
    pub fn new(field: GaloisField, values: Vec<bool>) -> Result<Self> {
        if values.len() != field.order() as usize {
            return Err(Error::TableLength {
                n: field.degree(),
                found: values.len(),
            });
        }
        Ok(Self { field, values })
    }

    pub fn from_fn(field: GaloisField, mut f: impl FnMut(u32) -> bool) -> Self {
        let values = (0..field.order()).map(&mut f).collect();
        Self { field, values }
    }

    pub fn field(&self) -> GaloisField {
        self.field
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    #[inline]
    pub fn get(&self, element: u32) -> bool {
        self.values[element as usize]
    }

    pub fn is_balanced(&self) -> bool {
        self.values.iter().filter(|&&b| b).count() * 2 == self.values.len()
    }
}

/// `f(x, y) = x . phi(y) + u(y)`, with `x` the first `r` variables.
///
/// Bent when `phi` is a permutation (`r == s`). With `phi: F_2^s -> F_2^r`
/// injective and every image of weight at least `t + 1` the result is
/// `t`-resilient.
pub fn mm_function(phi: &PermutationMap, u: &BooleanFunction) -> Result<BooleanFunction> {
    let (r, s) = (phi.output_dim(), phi.input_dim());
    if u.n() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            found: u.n(),
        });
    }
    let mask = (1u32 << s) - 1;
    BooleanFunction::from_fn(r + s, |i| {
        let y = i & mask;
        parity((i >> s) & phi.apply(y)) ^ u.get(y)
    })
}

/// `f(x, y) = theta(x / y)` on `2m` variables, `x` the first `m`.
///
/// `theta` must be balanced with `theta(0) = 0`.
pub fn psap_bent(theta: &FieldFunction) -> Result<BooleanFunction> {
    if !theta.is_balanced() || theta.get(0) {
        return Err(Error::premise("theta must be balanced with theta(0) = 0"));
    }
    let field = theta.field();
    let m = field.degree();
    let mask = (1u32 << m) - 1;
    BooleanFunction::from_fn(2 * m, |i| {
        let x = field.from_index(i >> m);
        let y = field.from_index(i & mask);
        theta.get(field.div_raw(x, y))
    })
}

/// Class D: `f(x, y) = x . phi(y) + 1_E1(x) 1_E2(y)`, where `phi(E2)` must be
/// the orthogonal complement of `E1`.
pub fn class_d_bent(
    phi: &PermutationMap,
    e1: &LinearSubspace,
    e2: &LinearSubspace,
) -> Result<BooleanFunction> {
    if !phi.is_permutation() {
        return Err(Error::premise("phi is not a permutation"));
    }
    let k = phi.input_dim();
    if e1.ambient_dim() != k || e2.ambient_dim() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: if e1.ambient_dim() != k {
                e1.ambient_dim()
            } else {
                e2.ambient_dim()
            },
        });
    }
    let perp = e1.orthogonal_complement();
    if perp.dim() != e2.dim() || !e2.elements().iter().all(|&y| perp.contains(phi.apply(y))) {
        return Err(Error::premise("phi(E2) differs from the orthogonal complement of E1"));
    }
    let mask = (1u32 << k) - 1;
    BooleanFunction::from_fn(2 * k, |i| {
        let (x, y) = (i >> k, i & mask);
        parity(x & phi.apply(y)) ^ (e1.contains(x) & e2.contains(y))
    })
}
