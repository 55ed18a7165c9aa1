//! Brute-force references for the fast paths. Nothing here shares code with
//! the butterfly transform or the spectral classifiers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::analysis;
use crate::walsh::{walsh_transform, WalshSpectrum};
use crate::{BooleanFunction, Error, Result};

pub const NAIVE_WALSH_CAP: u32 = 14;
pub const NONLINEARITY_CAP: u32 = 12;
pub const RESILIENCY_CAP: u32 = 14;

fn cap(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        Err(Error::OracleCap { n, cap: limit })
    } else {
        Ok(())
    }
}

/// Where a fast path and its oracle first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Divergence {
    /// Spectral point, affine-function index or resiliency order, by subject.
    pub index: u64,
    pub fast: i64,
    pub oracle: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OracleReport {
    pub subject: String,
    pub agreed: bool,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub first_divergence: Option<Divergence>,
}

impl OracleReport {
    fn new(subject: &str, first_divergence: Option<Divergence>) -> Self {
        Self {
            subject: subject.into(),
            agreed: first_divergence.is_none(),
            first_divergence,
        }
    }
}

/// `W_f(w)` by the defining double sum, `O(4^n)`.
pub fn naive_walsh(f: &BooleanFunction) -> Result<WalshSpectrum> {
    let n = f.n();
    cap(n, NAIVE_WALSH_CAP)?;
    let size = 1u32 << n;
    let signs: Vec<i64> = (0..size).map(|x| if f.get(x) { -1 } else { 1 }).collect();
    let values = (0..size)
        .map(|w| {
            signs
                .iter()
                .zip(0u32..)
                .map(|(&s, x)| if (w & x).count_ones() & 1 == 0 { s } else { -s })
                .sum::<i64>()
        })
        .collect();
    Ok(WalshSpectrum::from_values(n, values).expect("2^n values"))
}

/// Minimum Hamming distance to the `2^(n+1)` affine functions.
pub fn exhaustive_nonlinearity(f: &BooleanFunction) -> Result<u64> {
    let n = f.n();
    cap(n, NONLINEARITY_CAP)?;
    let total = 1u64 << n;
    // walk the linear functions in Gray-code order, one variable flip at a time
    let vars: Vec<BooleanFunction> = (1..=n)
        .rev()
        .map(|j| BooleanFunction::variable(n, j))
        .collect::<Result<_>>()?;
    let mut linear = BooleanFunction::zero(n)?;
    let mut best = total;
    for step in 0..(1u64 << n) {
        if step > 0 {
            linear = linear.xor(&vars[step.trailing_zeros() as usize])?;
        }
        let d = f.xor(&linear)?.weight();
        best = best.min(d).min(total - d);
    }
    Ok(best)
}

/// Whether every `r` input variables are jointly independent of the output.
///
/// Checked by conditioning on each `r`-subset of variables and each of its
/// `2^r` assignments.
pub fn correlation_immune_by_definition(f: &BooleanFunction, r: u32) -> Result<bool> {
    let n = f.n();
    cap(n, RESILIENCY_CAP)?;
    if r > n {
        return Err(Error::IndexOutOfRange { index: r, n });
    }
    let weight = f.weight();
    if !weight.is_multiple_of(1u64 << r) {
        return Ok(false);
    }
    let expected = weight >> r;
    let mut counts = vec![0u64; 1usize << r];
    for subset in (0..1u32 << n).filter(|s| s.count_ones() == r) {
        counts.iter_mut().for_each(|c| *c = 0);
        for x in 0..1u32 << n {
            if f.get(x) {
                counts[gather(x, subset) as usize] += 1;
            }
        }
        if counts.iter().any(|&c| c != expected) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Packs the bits of `x` selected by `mask` into the low bits.
fn gather(x: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        let bit = m.trailing_zeros();
        out |= (x >> bit & 1) << k;
        k += 1;
        m &= m - 1;
    }
    out
}

/// `r`-resiliency from the definition: balanced and correlation immune of
/// order `r`.
pub fn resiliency_by_definition(f: &BooleanFunction, r: u32) -> Result<bool> {
    cap(f.n(), RESILIENCY_CAP)?;
    Ok(f.is_balanced() && correlation_immune_by_definition(f, r)?)
}

/// Largest `r` with `resiliency_by_definition(f, r)`, or -1.
pub fn resiliency_order_by_definition(f: &BooleanFunction) -> Result<i32> {
    let mut order = -1;
    for r in 0..=f.n() {
        if resiliency_by_definition(f, r)? {
            order = r as i32;
        } else {
            break;
        }
    }
    Ok(order)
}

/// Bentness from the definition: `n` even and nonlinearity `2^(n-1) - 2^(n/2-1)`.
pub fn bent_by_definition(f: &BooleanFunction) -> Result<bool> {
    let n = f.n();
    cap(n, NONLINEARITY_CAP)?;
    Ok(n.is_multiple_of(2) && exhaustive_nonlinearity(f)? == (1u64 << (n - 1)) - (1u64 << (n / 2 - 1)))
}

pub fn check_walsh(f: &BooleanFunction) -> Result<OracleReport> {
    let oracle = naive_walsh(f)?;
    let fast = walsh_transform(f);
    let divergence = fast
        .values()
        .iter()
        .zip(oracle.values())
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| Divergence {
            index: i as u64,
            fast: *a,
            oracle: *b,
        });
    Ok(OracleReport::new("walsh", divergence))
}

pub fn check_nonlinearity(f: &BooleanFunction) -> Result<OracleReport> {
    let oracle = exhaustive_nonlinearity(f)?;
    let fast = analysis::nonlinearity(f);
    Ok(OracleReport::new(
        "nonlinearity",
        (fast != oracle).then_some(Divergence {
            index: 0,
            fast: fast as i64,
            oracle: oracle as i64,
        }),
    ))
}

pub fn check_resiliency(f: &BooleanFunction) -> Result<OracleReport> {
    let oracle = resiliency_order_by_definition(f)?;
    let (_, fast) = analysis::resiliency_report(f);
    Ok(OracleReport::new(
        "resiliency",
        (fast != oracle).then_some(Divergence {
            index: 0,
            fast: fast as i64,
            oracle: oracle as i64,
        }),
    ))
}

pub fn check_bent(f: &BooleanFunction) -> Result<OracleReport> {
    let oracle = bent_by_definition(f)?;
    let fast = analysis::is_bent(f);
    Ok(OracleReport::new(
        "bent",
        (fast != oracle).then_some(Divergence {
            index: 0,
            fast: fast as i64,
            oracle: oracle as i64,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::decode_vector;

    fn from_vec_fn(n: u32, g: impl Fn(&[bool]) -> bool) -> BooleanFunction {
        BooleanFunction::from_fn(n, |i| g(&decode_vector(i, n))).unwrap()
    }

    #[test]
    fn naive_walsh_examples() {
        let z = BooleanFunction::zero(3).unwrap();
        assert_eq!(naive_walsh(&z).unwrap().values(), &[8, 0, 0, 0, 0, 0, 0, 0]);
        let and = from_vec_fn(2, |x| x[0] & x[1]);
        assert_eq!(naive_walsh(&and).unwrap().values(), &[2, 2, 2, -2]);
        assert_eq!(
            naive_walsh(&BooleanFunction::zero(15).unwrap()),
            Err(Error::OracleCap { n: 15, cap: 14 })
        );
    }

    #[test]
    fn exhaustive_nonlinearity_examples() {
        assert_eq!(exhaustive_nonlinearity(&BooleanFunction::linear(6, 0b100101).unwrap()).unwrap(), 0);
        assert_eq!(exhaustive_nonlinearity(&BooleanFunction::constant(6, true).unwrap()).unwrap(), 0);
        let bent = from_vec_fn(4, |x| (x[0] & x[2]) ^ (x[1] & x[3]));
        assert_eq!(exhaustive_nonlinearity(&bent).unwrap(), 6);
        assert!(bent_by_definition(&bent).unwrap());
        assert!(exhaustive_nonlinearity(&BooleanFunction::zero(13).unwrap()).is_err());
    }

    #[test]
    fn resiliency_definition_examples() {
        let lin = BooleanFunction::linear(3, 0b111).unwrap();
        assert!(resiliency_by_definition(&lin, 2).unwrap());
        assert!(!resiliency_by_definition(&lin, 3).unwrap());
        assert_eq!(resiliency_order_by_definition(&lin).unwrap(), 2);
        let and = from_vec_fn(2, |x| x[0] & x[1]);
        assert!(!resiliency_by_definition(&and, 1).unwrap());
        assert_eq!(resiliency_order_by_definition(&and).unwrap(), -1);
        assert!(resiliency_by_definition(&lin, 4).is_err());
    }

    #[test]
    fn gather_packs_bits() {
        assert_eq!(gather(0b1011_0110, 0b1100_0100), 0b101);
        assert_eq!(gather(0xffff, 0), 0);
    }

    #[test]
    fn reports() {
        let f = from_vec_fn(5, |x| (x[0] & x[1]) ^ x[4] ^ (x[2] & x[3] & x[1]));
        assert!(check_walsh(&f).unwrap().agreed);
        assert!(check_nonlinearity(&f).unwrap().agreed);
        assert!(check_resiliency(&f).unwrap().agreed);
        let r = check_bent(&BooleanFunction::linear(4, 3).unwrap()).unwrap();
        assert!(r.agreed && r.first_divergence.is_none());
    }
}
