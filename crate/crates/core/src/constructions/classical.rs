use crate::analysis::is_bent;
use crate::{BooleanFunction, Combine, Error, Result};

fn same_n(fs: &[&BooleanFunction]) -> Result<u32> {
    let n = fs[0].n();
    match fs.iter().find(|f| f.n() != n) {
        Some(f) => Err(Error::DimensionMismatch {
            expected: n,
            found: f.n(),
        }),
        None => Ok(n),
    }
}

/// `h(x, y) = f(x) + g(y)`.
pub fn direct_sum(f: &BooleanFunction, g: &BooleanFunction) -> Result<BooleanFunction> {
    f.block_combine(g, Combine::Xor)
}

/// `h(x, y) = f1(x) + g1(y) + (f1 + f2)(x) (g1 + g2)(y)`.
pub fn indirect_sum(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    g1: &BooleanFunction,
    g2: &BooleanFunction,
) -> Result<BooleanFunction> {
    let n = same_n(&[f1, f2])?;
    let m = same_n(&[g1, g2])?;
    if n + m > crate::MAX_VARS {
        return Err(Error::VariableCount(n + m));
    }
    let mask = (1u32 << m) - 1;
    BooleanFunction::from_fn(n + m, |i| {
        let (x, y) = (i >> m, i & mask);
        let (a1, a2, b1, b2) = (f1.get(x), f2.get(x), g1.get(y), g2.get(y));
        a1 ^ b1 ^ ((a1 ^ a2) & (b1 ^ b2))
    })
}

/// Rothaus' construction on `n + 2` variables; the two new variables come last.
///
/// Requires `f1, f2, f3` and `f1 + f2 + f3` bent.
pub fn rothaus(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
) -> Result<BooleanFunction> {
    same_n(&[f1, f2, f3])?;
    if ![f1, f2, f3].iter().all(|f| is_bent(f)) {
        return Err(Error::NotBent);
    }
    if !is_bent(&f1.xor(f2)?.xor(f3)?) {
        return Err(Error::premise("f1 + f2 + f3 is not bent"));
    }
    rothaus_formula(f1, f2, f3)
}

pub(crate) fn rothaus_formula(
    f1: &BooleanFunction,
    f2: &BooleanFunction,
    f3: &BooleanFunction,
) -> Result<BooleanFunction> {
    let n = same_n(&[f1, f2, f3])?;
    if n + 2 > crate::MAX_VARS {
        return Err(Error::VariableCount(n + 2));
    }
    BooleanFunction::from_fn(n + 2, |i| {
        let x = i >> 2;
        let (u, v) = (i >> 1 & 1 == 1, i & 1 == 1);
        let (a, b, c) = (f1.get(x), f2.get(x), f3.get(x));
        (a & b) ^ (a & c) ^ (b & c) ^ ((a ^ b) & u) ^ ((a ^ c) & v) ^ (u & v)
    })
}
