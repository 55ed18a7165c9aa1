//! Spectral classification: nonlinearity, bentness and duals, correlation
//! immunity and resiliency, plateaued order, and the resiliency bounds.

use crate::walsh::{walsh_transform, WalshSpectrum};
use crate::{anf, BooleanFunction, Error, Result};

/// Certification record for one function.
///
/// `resiliency` uses the extended convention: `-1` for unbalanced
/// functions, otherwise equal to `ci_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnalysisProfile {
    pub n: u32,
    pub weight: u64,
    pub balanced: bool,
    pub nonlinearity: u64,
    pub degree: u32,
    pub ci_order: u32,
    pub resiliency: i32,
    pub bent: bool,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub plateaued_order: Option<u32>,
    pub semi_bent: bool,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub sarkar_maitra_bound: Option<u64>,
}

impl AnalysisProfile {
    pub fn of(f: &BooleanFunction) -> Self {
        let spectrum = walsh_transform(f);
        Self::with_spectrum(f, &spectrum)
    }

    pub fn with_spectrum(f: &BooleanFunction, spectrum: &WalshSpectrum) -> Self {
        let n = f.n();
        let (ci_order, resiliency) = resiliency_from_spectrum(spectrum);
        let degree = anf::degree(f);
        let plateaued = plateaued_from_spectrum(spectrum);
        let sarkar_maitra_bound = if resiliency >= 0 && resiliency <= n as i32 - 2 {
            Some(bounds_report(n, resiliency, degree).nonlinearity_cap)
        } else {
            None
        };
        Self {
            n,
            weight: f.weight(),
            balanced: f.is_balanced(),
            nonlinearity: nonlinearity_from_spectrum(spectrum),
            degree,
            ci_order,
            resiliency,
            bent: bent_from_spectrum(spectrum),
            plateaued_order: plateaued,
            semi_bent: plateaued == Some(semi_bent_order(n)),
            sarkar_maitra_bound,
        }
    }
}

pub fn nonlinearity_from_spectrum(spectrum: &WalshSpectrum) -> u64 {
    let half = 1u64 << (spectrum.n() - 1);
    half - (spectrum.max_abs() as u64) / 2
}

/// `N_f = 2^(n-1) - max|W_f| / 2`.
pub fn nonlinearity(f: &BooleanFunction) -> u64 {
    nonlinearity_from_spectrum(&walsh_transform(f))
}

pub fn bent_from_spectrum(spectrum: &WalshSpectrum) -> bool {
    let n = spectrum.n();
    if n % 2 == 1 {
        return false;
    }
    let amp = 1i64 << (n / 2);
    spectrum.values().iter().all(|v| v.abs() == amp)
}

pub fn is_bent(f: &BooleanFunction) -> bool {
    bent_from_spectrum(&walsh_transform(f))
}

/// Dual of a bent function: `W_f(w) = 2^(n/2) (-1)^dual(w)`.
pub fn dual(f: &BooleanFunction) -> Result<BooleanFunction> {
    let spectrum = walsh_transform(f);
    if !bent_from_spectrum(&spectrum) {
        return Err(Error::NotBent);
    }
    BooleanFunction::from_fn(f.n(), |w| spectrum.get(w) < 0)
}

/// `(ci_order, resiliency)` read off the spectrum.
pub fn resiliency_from_spectrum(spectrum: &WalshSpectrum) -> (u32, i32) {
    let n = spectrum.n();
    // smallest nonzero weight carrying a nonzero coefficient
    let first = (1..1u32 << n)
        .filter(|&w| spectrum.get(w) != 0)
        .map(u32::count_ones)
        .min()
        .unwrap_or(n + 1);
    let ci_order = first - 1;
    let resiliency = if spectrum.get(0) == 0 { ci_order as i32 } else { -1 };
    (ci_order, resiliency)
}

pub fn resiliency_report(f: &BooleanFunction) -> (u32, i32) {
    resiliency_from_spectrum(&walsh_transform(f))
}

/// The order `r` of a plateaued function, or `None`.
pub fn plateaued_from_spectrum(spectrum: &WalshSpectrum) -> Option<u32> {
    let n = spectrum.n();
    let support = spectrum.support_size();
    if !support.is_power_of_two() {
        return None;
    }
    let r = support.trailing_zeros();
    if r % 2 == 1 {
        return None;
    }
    let amp = 1i64 << (n - r / 2);
    spectrum
        .values()
        .iter()
        .all(|&v| v == 0 || v.abs() == amp)
        .then_some(r)
}

/// Order at which a plateaued function in `n` variables is semi-bent.
pub fn semi_bent_order(n: u32) -> u32 {
    2 * (n.saturating_sub(2)).div_ceil(2)
}

/// `(plateaued order, semi-bent flag)`.
pub fn plateaued_order(f: &BooleanFunction) -> (Option<u32>, bool) {
    let r = plateaued_from_spectrum(&walsh_transform(f));
    (r, r == Some(semi_bent_order(f.n())))
}

/// Whether `g1`, `g2` are complementary `(p-1)`th-order plateaued functions
/// of an odd number `p` of variables.
pub fn complementary_plateaued(g1: &BooleanFunction, g2: &BooleanFunction) -> Result<bool> {
    let p = g1.n();
    if g2.n() != p {
        return Err(Error::DimensionMismatch { expected: p, found: g2.n() });
    }
    if p.is_multiple_of(2) {
        return Err(Error::premise("complementary plateaued pairs need an odd variable count"));
    }
    let (w1, w2) = (walsh_transform(g1), walsh_transform(g2));
    let order = Some(p - 1);
    Ok(plateaued_from_spectrum(&w1) == order
        && plateaued_from_spectrum(&w2) == order
        && w1.values().iter().zip(w2.values()).all(|(a, b)| (*a == 0) != (*b == 0)))
}

/// Degree and nonlinearity caps for a function with the given resiliency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bounds {
    /// Siegenthaler's degree cap.
    pub degree_cap: u32,
    /// Best applicable nonlinearity cap.
    pub nonlinearity_cap: u64,
    /// Power of two the nonlinearity must be divisible by (1 when no
    /// divisibility result applies).
    pub nonlinearity_divisor: u64,
}

/// Universal cap `floor(2^(n-1) - 2^(n/2-1))`.
pub fn universal_nonlinearity_cap(n: u32) -> u64 {
    let half = 1u64 << (n - 1);
    if n == 1 {
        0
    } else if n.is_multiple_of(2) {
        half - (1u64 << (n / 2 - 1))
    } else {
        // 2^(n/2 - 1) = sqrt(2^(n-2)) is irrational for odd n; subtract its ceiling
        half - isqrt_ceil(1u64 << (n - 2))
    }
}

fn isqrt_ceil(v: u64) -> u64 {
    let mut r = 0u64;
    while r * r < v {
        r += 1;
    }
    r
}

/// Siegenthaler and Sarkar et al. bounds.
///
/// `degree` feeds the refined divisibility `2^(m + 1 + floor((n-m-2)/d))`
/// for an `m`-resilient function of degree `d`.
pub fn bounds_report(n: u32, resiliency: i32, degree: u32) -> Bounds {
    let universal = universal_nonlinearity_cap(n);
    if resiliency < 0 {
        return Bounds {
            degree_cap: n,
            nonlinearity_cap: universal,
            nonlinearity_divisor: 1,
        };
    }
    let m = resiliency as u32;
    let degree_cap = if m + 1 >= n { 1 } else { n - m - 1 };
    if m + 2 > n {
        return Bounds {
            degree_cap,
            nonlinearity_cap: 0,
            nonlinearity_divisor: 1,
        };
    }
    let step = 1u64 << (m + 1);
    let half = 1u64 << (n - 1);
    let nonlinearity_cap = if n.is_multiple_of(2) {
        if m + 2 <= n / 2 {
            half - (1u64 << (n / 2 - 1)) - step
        } else {
            half - step
        }
    } else {
        universal / step * step
    };
    let extra = (n - m - 2).checked_div(degree).unwrap_or(0);
    Bounds {
        degree_cap,
        nonlinearity_cap,
        nonlinearity_divisor: 1u64 << (m + 1 + extra),
    }
}
