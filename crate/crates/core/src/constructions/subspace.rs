use alloc::vec::Vec;

use crate::{parity, BooleanFunction, Error, Result};

/// A linear subspace of `F_2^k`, stored as a reduced row-echelon basis.
///
/// Pivots are leading (most significant, i.e. lowest-numbered variable)
/// bits, rows sorted by decreasing pivot, and every pivot column is clear in
/// the other rows, so equal subspaces have equal bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    k: u32,
    basis: Vec<u32>,
}

impl LinearSubspace {
    /// The span of `vectors` (dependent vectors are dropped).
    pub fn span(k: u32, vectors: &[u32]) -> Result<Self> {
        if k == 0 || k > 26 {
            return Err(Error::VariableCount(k));
        }
        if let Some(&v) = vectors.iter().find(|&&v| v >> k != 0) {
            return Err(Error::premise(alloc::format!("vector {v:#x} outside F_2^{k}")));
        }
        let mut basis: Vec<u32> = Vec::new();
        for &v in vectors {
            let mut v = reduce(&basis, v);
            if v == 0 {
                continue;
            }
            let pivot = 31 - v.leading_zeros();
            for b in basis.iter_mut() {
                if *b >> pivot & 1 == 1 {
                    *b ^= v;
                }
            }
            v = reduce(&basis, v);
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Self { k, basis })
    }

    pub fn zero(k: u32) -> Result<Self> {
        Self::span(k, &[])
    }

    pub fn full(k: u32) -> Result<Self> {
        let units: Vec<u32> = (0..k).map(|b| 1 << b).collect();
        Self::span(k, &units)
    }

    pub fn ambient_dim(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn contains(&self, v: u32) -> bool {
        v >> self.k == 0 && reduce(&self.basis, v) == 0
    }

    /// All `2^dim` elements.
    pub fn elements(&self) -> Vec<u32> {
        let mut out = alloc::vec![0u32];
        for &b in &self.basis {
            let extra: Vec<u32> = out.iter().map(|&e| e ^ b).collect();
            out.extend(extra);
        }
        out
    }

    /// `{w : w.v = 0 for all v in self}`.
    pub fn orthogonal_complement(&self) -> Self {
        let members: Vec<u32> = (0..1u32 << self.k)
            .filter(|&w| self.basis.iter().all(|&b| !parity(w & b)))
            .collect();
        Self::span(self.k, &members).expect("same ambient space")
    }

    /// Characteristic function `1_E` on `k` variables.
    pub fn indicator(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.k, |v| self.contains(v)).expect("k checked at construction")
    }
}

fn reduce(basis: &[u32], mut v: u32) -> u32 {
    for &b in basis {
        let pivot = 31 - b.leading_zeros();
        if v >> pivot & 1 == 1 {
            v ^= b;
        }
    }
    v
}
