//! Resilient functions from a bent triple and a resilient triple via the
//! generalized indirect sum.

use alloc::vec::Vec;

use super::classical::indirect_sum;
use crate::analysis::{bent_from_spectrum, dual, nonlinearity_from_spectrum, resiliency_from_spectrum};
use crate::function::{check_vector, var_bit};
use crate::walsh::{walsh_transform, WalshSpectrum};
use crate::{BooleanFunction, Error, Result};

/// `h(x, y) = f1 + g1 + (f1 + f2)(g1 + g2) + (f2 + f3)(g2 + g3)`, `x` first.
pub fn generalized_indirect_sum(
    f: [&BooleanFunction; 3],
    g: [&BooleanFunction; 3],
) -> Result<BooleanFunction> {
    let (n, m) = (f[0].n(), g[0].n());
    for (side, dim) in [(&f, n), (&g, m)] {
        if let Some(h) = side.iter().find(|h| h.n() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.n(),
            });
        }
    }
    if n + m > crate::MAX_VARS {
        return Err(Error::VariableCount(n + m));
    }
    let mask = (1u32 << m) - 1;
    BooleanFunction::from_fn(n + m, |i| {
        let (x, y) = (i >> m, i & mask);
        let (f1, f2, f3) = (f[0].get(x), f[1].get(x), f[2].get(x));
        let (g1, g2, g3) = (g[0].get(y), g[1].get(y), g[2].get(y));
        f1 ^ g1 ^ ((f1 ^ f2) & (g1 ^ g2)) ^ ((f2 ^ f3) & (g2 ^ g3))
    })
}

fn xor3(a: &BooleanFunction, b: &BooleanFunction, c: &BooleanFunction) -> Result<BooleanFunction> {
    a.xor(b)?.xor(c)
}

/// Three bent functions `f1, f2, f3` on the same space.
///
/// Certified when `f1 + f2 + f3` is bent and its dual is `f1~ + f2~ + f3~`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BentTriple {
    f: [BooleanFunction; 3],
    certified: bool,
}

impl BentTriple {
    pub fn new(f1: BooleanFunction, f2: BooleanFunction, f3: BooleanFunction) -> Result<Self> {
        let nu = xor3(&f1, &f2, &f3)?;
        let certified = (|| -> Result<bool> {
            let duals = [dual(&f1)?, dual(&f2)?, dual(&f3)?, dual(&nu)?];
            Ok(duals[3] == xor3(&duals[0], &duals[1], &duals[2])?)
        })()
        .unwrap_or(false);
        Ok(Self {
            f: [f1, f2, f3],
            certified,
        })
    }

    /// Like [`BentTriple::new`] but rejects uncertified triples.
    pub fn certify(f1: BooleanFunction, f2: BooleanFunction, f3: BooleanFunction) -> Result<Self> {
        let t = Self::new(f1, f2, f3)?;
        if !t.certified {
            return Err(Error::premise("not a bent triple with dual-sum property"));
        }
        Ok(t)
    }

    pub fn n(&self) -> u32 {
        self.f[0].n()
    }

    pub fn functions(&self) -> &[BooleanFunction; 3] {
        &self.f
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// `f1 + f2 + f3`.
    pub fn nu(&self) -> BooleanFunction {
        xor3(&self.f[0], &self.f[1], &self.f[2]).expect("same n")
    }

    fn require_certified(&self) -> Result<()> {
        if self.certified {
            Ok(())
        } else {
            Err(Error::premise("bent triple is not certified"))
        }
    }
}

/// Which of the second-side functions multiplies `W_f1(alpha)` in the Walsh
/// spectrum of the generalized indirect sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Multiplier {
    G1,
    G2,
    G3,
    Nu2,
}

/// Sign pattern of `(W_f1, W_f2, W_f3)` at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WalshCase {
    /// `W1 = W2 = W3`
    AllEqual,
    /// `W1 = W2 != W3`
    FirstPair,
    /// `W1 != W2 = W3`
    LastPair,
    /// `W1 = W3 != W2`
    OuterPair,
}

impl WalshCase {
    pub const ALL: [WalshCase; 4] = [
        WalshCase::AllEqual,
        WalshCase::FirstPair,
        WalshCase::LastPair,
        WalshCase::OuterPair,
    ];

    fn of(w1: i64, w2: i64, w3: i64) -> Self {
        match (w1 == w2, w2 == w3, w1 == w3) {
            (true, true, _) => WalshCase::AllEqual,
            (true, false, _) => WalshCase::FirstPair,
            (false, true, _) => WalshCase::LastPair,
            _ => WalshCase::OuterPair,
        }
    }

    /// 1-based case number.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn multiplier(self) -> Multiplier {
        match self {
            WalshCase::AllEqual => Multiplier::G1,
            WalshCase::FirstPair => Multiplier::Nu2,
            WalshCase::LastPair => Multiplier::G2,
            WalshCase::OuterPair => Multiplier::G3,
        }
    }
}

/// Case at a single point `alpha`.
pub fn walsh_case_classify(triple: &BentTriple, alpha: u32) -> Result<WalshCase> {
    triple.require_certified()?;
    check_vector(triple.n(), alpha)?;
    let w: Vec<i64> = triple.f.iter().map(|f| walsh_transform(f).get(alpha)).collect();
    Ok(WalshCase::of(w[0], w[1], w[2]))
}

/// Cases at every point, indexed by `alpha`.
pub fn walsh_cases(triple: &BentTriple) -> Result<Vec<WalshCase>> {
    triple.require_certified()?;
    let s: Vec<WalshSpectrum> = triple.f.iter().map(walsh_transform).collect();
    Ok((0..1u32 << triple.n())
        .map(|a| WalshCase::of(s[0].get(a), s[1].get(a), s[2].get(a)))
        .collect())
}

/// `(theta1, theta1(x + a), theta2)` for bent `theta1, theta2` with equal
/// derivatives in direction `a`. The sum of the triple is `theta2(x + a)`.
pub fn bent_triple_derivative(
    theta1: &BooleanFunction,
    theta2: &BooleanFunction,
    a: u32,
) -> Result<BentTriple> {
    let (s1, s2) = (walsh_transform(theta1), walsh_transform(theta2));
    if !bent_from_spectrum(&s1) || !bent_from_spectrum(&s2) {
        return Err(Error::NotBent);
    }
    if theta1.derivative(a)? != theta2.derivative(a)? {
        return Err(Error::premise("derivatives in direction a differ"));
    }
    BentTriple::certify(theta1.clone(), theta1.translate(a)?, theta2.clone())
}

fn min_resiliency(spectra: &[&WalshSpectrum]) -> i32 {
    spectra.iter().map(|s| resiliency_from_spectrum(s).1).min().unwrap_or(-1)
}

/// Facts about a generalized indirect sum built from a certified bent triple.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResilientCertificate {
    pub n: u32,
    pub resiliency_claimed: i32,
    pub resiliency: i32,
    pub nonlinearity: u64,
    pub nonlinearity_bound: u64,
    pub equality: bool,
    /// Which Walsh cases occur over the first-side points, in
    /// [`WalshCase::ALL`] order.
    pub cases_observed: [bool; 4],
    /// Whether `g1, g2, g3, g1 + g2 + g3` are pairwise distinct up to
    /// complement.
    pub distinct_up_to_complement: bool,
}

/// Case pattern at `alpha = 0` plus the certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CaseCertificate {
    pub case_at_zero: WalshCase,
    pub certificate: ResilientCertificate,
}

struct Assembly {
    h: BooleanFunction,
    cases: [bool; 4],
    spectra: [WalshSpectrum; 4],
    distinct: bool,
}

fn assemble(triple: &BentTriple, g: [&BooleanFunction; 3]) -> Result<Assembly> {
    triple.require_certified()?;
    let f = triple.functions();
    let h = generalized_indirect_sum([&f[0], &f[1], &f[2]], g)?;
    let nu2 = xor3(g[0], g[1], g[2])?;
    let mut cases = [false; 4];
    for c in walsh_cases(triple)? {
        cases[c as usize] = true;
    }
    let all = [g[0], g[1], g[2], &nu2];
    let mut distinct = true;
    for i in 0..4 {
        for j in i + 1..4 {
            if all[i] == all[j] || *all[i] == all[j].complement() {
                distinct = false;
            }
        }
    }
    let spectra = [
        walsh_transform(g[0]),
        walsh_transform(g[1]),
        walsh_transform(g[2]),
        walsh_transform(&nu2),
    ];
    Ok(Assembly {
        h,
        cases,
        spectra,
        distinct,
    })
}

fn finish(a: Assembly, n: u32, claimed: i32, max_g: i64) -> Result<(BooleanFunction, ResilientCertificate)> {
    let total = a.h.n();
    let s = walsh_transform(&a.h);
    let nonlinearity = nonlinearity_from_spectrum(&s);
    let (_, resiliency) = resiliency_from_spectrum(&s);
    let bound = (1u64 << (total - 1)) - (1u64 << (n / 2 - 1)) * max_g as u64;
    if resiliency < claimed || nonlinearity < bound {
        return Err(Error::premise("constructed function misses its certified properties"));
    }
    let cert = ResilientCertificate {
        n: total,
        resiliency_claimed: claimed,
        resiliency,
        nonlinearity,
        nonlinearity_bound: bound,
        equality: nonlinearity == bound,
        cases_observed: a.cases,
        distinct_up_to_complement: a.distinct,
    };
    Ok((a.h, cert))
}

/// Generalized indirect sum of a certified bent triple with `g1, g2, g3`.
///
/// With `k` the least resiliency order among `g1, g2, g3, g1 + g2 + g3`, the
/// result is `k`-resilient with nonlinearity at least
/// `2^(n+m-1) - 2^(n/2-1) max |W_g|` over those four functions.
pub fn theorem42_build(
    triple: &BentTriple,
    g: [&BooleanFunction; 3],
) -> Result<(BooleanFunction, ResilientCertificate)> {
    let a = assemble(triple, g)?;
    let refs: Vec<&WalshSpectrum> = a.spectra.iter().collect();
    let claimed = min_resiliency(&refs);
    let max_g = a.spectra.iter().map(WalshSpectrum::max_abs).max().unwrap_or(0);
    finish(a, triple.n(), claimed, max_g)
}

/// Builds from two `k`-resilient functions `p, q` on `m` variables and a
/// coordinate `y_i`, choosing `(g1, g2, g3)` from the case at `alpha = 0`:
/// `(p, q, q + y_i)` when `W_f1(0) = W_f2(0)` is not the odd one out,
/// otherwise `(p + y_i, q + y_i, q)`.
pub fn proposition_cor41(
    triple: &BentTriple,
    p: &BooleanFunction,
    q: &BooleanFunction,
    i: u32,
) -> Result<(BooleanFunction, CaseCertificate)> {
    let m = p.n();
    if q.n() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: q.n(),
        });
    }
    if !(1..=m).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, n: m });
    }
    let case = walsh_case_classify(triple, 0)?;
    let yi = BooleanFunction::linear(m, 1 << var_bit(m, i))?;
    let g = match case {
        WalshCase::AllEqual | WalshCase::LastPair => [p.clone(), q.clone(), q.xor(&yi)?],
        WalshCase::FirstPair | WalshCase::OuterPair => [p.xor(&yi)?, q.xor(&yi)?, q.clone()],
    };
    let (sp, sq) = (walsh_transform(p), walsh_transform(q));
    let claimed = min_resiliency(&[&sp, &sq]);
    let max_g = sp.max_abs().max(sq.max_abs());
    let a = assemble(triple, [&g[0], &g[1], &g[2]])?;
    let (h, certificate) = finish(a, triple.n(), claimed, max_g)?;
    Ok((
        h,
        CaseCertificate {
            case_at_zero: case,
            certificate,
        },
    ))
}

/// `h + indirect_sum(f1, f2, g1, g2)`; equals `(f2 + f3)(g2 + g3)`.
pub fn indirect_sum_difference(
    f: [&BooleanFunction; 3],
    g: [&BooleanFunction; 3],
) -> Result<BooleanFunction> {
    generalized_indirect_sum(f, g)?.xor(&indirect_sum(f[0], f[1], g[0], g[1])?)
}
