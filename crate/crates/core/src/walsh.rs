//! Walsh–Hadamard spectra.

use alloc::vec::Vec;

use crate::BooleanFunction;

/// The `2^n` Walsh coefficients `W_f(w) = sum_x (-1)^(f(x) + w.x)`, indexed
/// like truth tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    /// Wraps raw coefficients; `values.len()` must be `2^n`.
    pub fn from_values(n: u32, values: Vec<i64>) -> Option<Self> {
        (values.len() == 1usize << n).then_some(Self { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn get(&self, omega: u32) -> i64 {
        self.values[omega as usize]
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn parseval_holds(&self) -> bool {
        let total: i128 = self.values.iter().map(|&v| (v as i128) * (v as i128)).sum();
        total == 1i128 << (2 * self.n)
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }
}

/// Fast Walsh–Hadamard transform, `O(n 2^n)` additions in place.
pub fn walsh_transform(f: &BooleanFunction) -> WalshSpectrum {
    let mut values: Vec<i64> = f.bits().map(|b| if b { -1 } else { 1 }).collect();
    butterfly(&mut values);
    WalshSpectrum { n: f.n(), values }
}

/// Unnormalised in-place Hadamard butterfly over a power-of-two slice.
pub fn butterfly(data: &mut [i64]) {
    debug_assert!(data.len().is_power_of_two());
    let mut half = 1;
    while half < data.len() {
        for block in data.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*a + *b, *a - *b);
                *a = s;
                *b = d;
            }
        }
        half *= 2;
    }
}

/// Recovers the truth table from a spectrum (`f(x) = 1` where the inverse
/// transform gives `-2^n`). Returns `None` if the values are not the
/// spectrum of a Boolean function.
pub fn inverse_walsh(spectrum: &WalshSpectrum) -> Option<BooleanFunction> {
    let n = spectrum.n;
    let mut signs = spectrum.values.clone();
    butterfly(&mut signs);
    let scale = 1i64 << n;
    if signs.iter().any(|&v| v != scale && v != -scale) {
        return None;
    }
    BooleanFunction::from_fn(n, |x| signs[x as usize] < 0).ok()
}
