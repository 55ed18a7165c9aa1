use alloc::vec::Vec;

use crate::{BooleanFunction, Error, Result};

/// A vectorial map `F_2^s -> F_2^r` given by its images, both sides in the
/// truth-table index encoding. Bijective when `s == r` and the images are
/// distinct, which is what the bent builders require.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationMap {
    input_dim: u32,
    output_dim: u32,
    images: Vec<u32>,
}

impl PermutationMap {
    /// A permutation of `F_2^k`.
    pub fn new(k: u32, images: Vec<u32>) -> Result<Self> {
        let map = Self::general(k, k, images)?;
        if !map.is_permutation() {
            return Err(Error::premise("map is not a permutation"));
        }
        Ok(map)
    }

    /// An arbitrary map `F_2^s -> F_2^r`.
    pub fn general(s: u32, r: u32, images: Vec<u32>) -> Result<Self> {
        if s == 0 || s > 16 || r > 26 {
            return Err(Error::premise("map dimensions out of range"));
        }
        if images.len() != 1usize << s {
            return Err(Error::TableLength { n: s, found: images.len() });
        }
        if images.iter().any(|&v| r < 32 && v >> r != 0) {
            return Err(Error::premise("map image outside F_2^r"));
        }
        Ok(Self {
            input_dim: s,
            output_dim: r,
            images,
        })
    }

    pub fn identity(k: u32) -> Result<Self> {
        Self::new(k, (0..1u32 << k).collect())
    }

    pub fn input_dim(&self) -> u32 {
        self.input_dim
    }

    pub fn output_dim(&self) -> u32 {
        self.output_dim
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, y: u32) -> u32 {
        self.images[y as usize]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; 1usize << self.output_dim.min(26)];
        self.images.iter().all(|&v| !core::mem::replace(&mut seen[v as usize], true))
    }

    pub fn is_permutation(&self) -> bool {
        self.input_dim == self.output_dim && self.is_injective()
    }

    /// Coordinate function `phi_i` (1-based) as a function of `s` variables.
    pub fn coordinate(&self, i: u32) -> Result<BooleanFunction> {
        if !(1..=self.output_dim).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.output_dim,
            });
        }
        let bit = self.output_dim - i;
        BooleanFunction::from_fn(self.input_dim, |y| self.apply(y) >> bit & 1 == 1)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_permutation() {
            return Err(Error::premise("map is not a permutation"));
        }
        let mut inv = alloc::vec![0u32; self.images.len()];
        for (y, &v) in self.images.iter().enumerate() {
            inv[v as usize] = y as u32;
        }
        Self::new(self.input_dim, inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_checks() {
        assert!(PermutationMap::new(2, alloc::vec![0, 1, 2, 3]).is_ok());
        assert!(PermutationMap::new(2, alloc::vec![0, 1, 1, 3]).is_err());
        assert!(PermutationMap::new(2, alloc::vec![0, 1, 2]).is_err());
        assert!(PermutationMap::general(1, 2, alloc::vec![3, 5]).is_err());
        let g = PermutationMap::general(1, 3, alloc::vec![3, 5]).unwrap();
        assert!(g.is_injective() && !g.is_permutation());
    }

    #[test]
    fn coordinates_and_inverse() {
        let p = PermutationMap::new(2, alloc::vec![2, 0, 3, 1]).unwrap();
        // phi_1 is the most significant output bit
        assert_eq!(p.coordinate(1).unwrap().bits().collect::<Vec<_>>(), [true, false, true, false]);
        assert_eq!(p.coordinate(2).unwrap().bits().collect::<Vec<_>>(), [false, false, true, true]);
        let inv = p.inverse().unwrap();
        for y in 0..4 {
            assert_eq!(inv.apply(p.apply(y)), y);
        }
        assert!(p.coordinate(3).is_err());
    }
}
