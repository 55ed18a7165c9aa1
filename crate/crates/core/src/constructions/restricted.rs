//! Bent functions from restrictions of two bent functions to complementary
//! halves of a hyperplane, and the explicit families that follow from it.

use core::fmt;
use core::str::FromStr;

use super::classical::{indirect_sum, rothaus_formula};
use super::{class_d_bent, psap_bent, FieldFunction, LinearSubspace, PermutationMap};
use crate::analysis::{dual, is_bent};
use crate::function::{insert_bit, var_bit};
use crate::galois::GaloisField;
use crate::{parity, BooleanFunction, Error, Result};

/// Which restriction of `f` (first digit) and of `g` (second digit) plays the
/// role of the base function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Variant {
    #[default]
    #[cfg_attr(feature = "serde", serde(rename = "00"))]
    V00,
    #[cfg_attr(feature = "serde", serde(rename = "01"))]
    V01,
    #[cfg_attr(feature = "serde", serde(rename = "10"))]
    V10,
    #[cfg_attr(feature = "serde", serde(rename = "11"))]
    V11,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::V00, Variant::V01, Variant::V10, Variant::V11];

    pub fn from_bits(a: bool, b: bool) -> Self {
        match (a, b) {
            (false, false) => Variant::V00,
            (false, true) => Variant::V01,
            (true, false) => Variant::V10,
            (true, true) => Variant::V11,
        }
    }

    /// `(a, b)`: base restrictions are `f_a` and `g_b`.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Variant::V00 => (false, false),
            Variant::V01 => (false, true),
            Variant::V10 => (true, false),
            Variant::V11 => (true, true),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.bits();
        write!(f, "{}{}", a as u8, b as u8)
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "00" => Ok(Variant::V00),
            "01" => Ok(Variant::V01),
            "10" => Ok(Variant::V10),
            "11" => Ok(Variant::V11),
            _ => Err(Error::premise(alloc::format!("unknown variant {s:?}"))),
        }
    }
}

fn pick(pair: (BooleanFunction, BooleanFunction), first: bool) -> (BooleanFunction, BooleanFunction) {
    if first {
        (pair.1, pair.0)
    } else {
        pair
    }
}

/// `h = f_a + g_b + (f_0 + f_1)(g_0 + g_1)` on `(n - 1) + (m - 1)` variables,
/// where `f_c = f|x_mu=c` and `g_c = g|y_rho=c`.
///
/// Bent whenever `f` and `g` are; both are checked.
pub fn construction2(
    f: &BooleanFunction,
    mu: u32,
    g: &BooleanFunction,
    rho: u32,
    variant: Variant,
) -> Result<BooleanFunction> {
    if !is_bent(f) || !is_bent(g) {
        return Err(Error::NotBent);
    }
    construction2_unchecked(f, mu, g, rho, variant)
}

/// [`construction2`] without the bentness check.
pub fn construction2_unchecked(
    f: &BooleanFunction,
    mu: u32,
    g: &BooleanFunction,
    rho: u32,
    variant: Variant,
) -> Result<BooleanFunction> {
    let (a, b) = variant.bits();
    let (f0, f1) = pick(f.split(mu)?, a);
    let (g0, g1) = pick(g.split(rho)?, b);
    indirect_sum(&f0, &f1, &g0, &g1)
}

/// Dual of [`construction2`], assembled from restrictions of the duals of
/// `f` and `g`.
pub fn construction2_dual(
    f: &BooleanFunction,
    mu: u32,
    g: &BooleanFunction,
    rho: u32,
    variant: Variant,
) -> Result<BooleanFunction> {
    let (a, b) = variant.bits();
    let (fd, gd) = (dual(f)?, dual(g)?);
    let (f0, f1) = fd.split(mu)?;
    let (g0, g1) = gd.split(rho)?;
    // translating f by e_mu adds w_mu to its dual
    let f1 = if a { f1.complement() } else { f1 };
    let g1 = if b { g1.complement() } else { g1 };
    indirect_sum(&f0, &f1, &g0, &g1)
}

/// Restrictions of `f` to the hyperplane `{x : form . x = 0}` and its coset
/// `shift + H`, each as a function on `F_2^(n-1)`.
///
/// Coordinates on `H` use the basis `e_j + form_j e_p` for `j != p`, in
/// variable order, with `p` the first variable appearing in `form`.
pub fn hyperplane_split(
    f: &BooleanFunction,
    form: u32,
    shift: u32,
) -> Result<(BooleanFunction, BooleanFunction)> {
    let n = f.n();
    crate::function::check_vector(n, form)?;
    crate::function::check_vector(n, shift)?;
    if form == 0 {
        return Err(Error::premise("zero linear form"));
    }
    if !parity(form & shift) {
        return Err(Error::premise("shift lies in the hyperplane"));
    }
    if n == 1 {
        return Err(Error::NoRemainingVariables);
    }
    let p = 31 - form.leading_zeros();
    let lift = |v: u32| {
        let x = insert_bit(v, p, false);
        x | (parity(form & x) as u32) << p
    };
    Ok((
        BooleanFunction::from_fn(n - 1, |v| f.get(lift(v)))?,
        BooleanFunction::from_fn(n - 1, |v| f.get(lift(v) ^ shift))?,
    ))
}

/// `x_mu`-free M-M family on `(n - 1) + (m - 1)` variables:
/// `sum_{i != mu} phi_i(x'') x_i + sum_{j != rho} psi_j(y'') y_j
///  + phi_mu(x'') psi_rho(y'') + u(x'') + v(y'')`.
///
/// The `x`-block is `(x_1..x_{n/2} without x_mu, x'')`, likewise for `y`.
pub fn corollary_nmm(
    phi: &PermutationMap,
    psi: &PermutationMap,
    mu: u32,
    rho: u32,
    u: &BooleanFunction,
    v: &BooleanFunction,
) -> Result<BooleanFunction> {
    if !phi.is_permutation() || !psi.is_permutation() {
        return Err(Error::premise("phi and psi must be permutations"));
    }
    let (h, k) = (phi.input_dim(), psi.input_dim());
    for (idx, dim) in [(mu, h), (rho, k)] {
        if !(1..=dim).contains(&idx) {
            return Err(Error::IndexOutOfRange { index: idx, n: dim });
        }
    }
    for (func, dim) in [(u, h), (v, k)] {
        if func.n() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: func.n(),
            });
        }
    }
    let block = |map: &PermutationMap, sel: u32, aux: &BooleanFunction, z: u32| {
        let dim = map.input_dim();
        let low = z & ((1 << dim) - 1);
        let linear = insert_bit(z >> dim, var_bit(dim, sel), false);
        let image = map.apply(low);
        (
            parity(linear & image) ^ aux.get(low),
            image >> var_bit(dim, sel) & 1 == 1,
        )
    };
    let m1 = 2 * k - 1;
    let total = 2 * h - 1 + m1;
    if total > crate::MAX_VARS {
        return Err(Error::VariableCount(total));
    }
    BooleanFunction::from_fn(total, |i| {
        let (fx, a) = block(phi, mu, u, i >> m1);
        let (gy, b) = block(psi, rho, v, i & ((1 << m1) - 1));
        fx ^ gy ^ (a & b)
    })
}

/// Evaluates `Tr(a x + b y)` on the truth-table index of `(x, y)`.
fn trace_form(field: GaloisField, a: u32, b: u32) -> u32 {
    let m = field.degree();
    (0..2 * m).fold(0, |acc, bit| {
        let i = 1u32 << bit;
        let x = field.from_index(i >> m);
        let y = field.from_index(i & ((1 << m) - 1));
        let t = field.trace_raw(field.mul_raw(a, x) ^ field.mul_raw(b, y));
        acc | (t as u32) << bit
    })
}

/// Parameters of one `PS_ap` side of [`corollary_psab`]: the hyperplane
/// `Tr(a x + b y) = 0` and the shift `(alpha, beta)` off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hyperplane {
    pub a: u32,
    pub b: u32,
    pub alpha: u32,
    pub beta: u32,
}

/// Splits a `PS_ap` function on `GF(2^m)^2` along the hyperplane.
pub fn psap_split(
    theta: &FieldFunction,
    plane: Hyperplane,
) -> Result<(BooleanFunction, BooleanFunction)> {
    let field = theta.field();
    let m = field.degree();
    for e in [plane.a, plane.b, plane.alpha, plane.beta] {
        if e >= field.order() {
            return Err(Error::ElementRange { value: e, m });
        }
    }
    if plane.a == 0 && plane.b == 0 {
        return Err(Error::premise("(a, b) must be nonzero"));
    }
    let f = psap_bent(theta)?;
    let form = trace_form(field, plane.a, plane.b);
    let shift = field.to_index(plane.alpha) << m | field.to_index(plane.beta);
    hyperplane_split(&f, form, shift)
}

/// Restricted sum of two `PS_ap` functions split along trace hyperplanes.
pub fn corollary_psab(
    theta: &FieldFunction,
    f_plane: Hyperplane,
    vartheta: &FieldFunction,
    g_plane: Hyperplane,
) -> Result<BooleanFunction> {
    let (f0, f1) = psap_split(theta, f_plane)?;
    let (g0, g1) = psap_split(vartheta, g_plane)?;
    indirect_sum(&f0, &f1, &g0, &g1)
}

/// Restricted sum of two Rothaus functions, each split at its last new
/// variable, on `(n + 1) + (m + 1)` variables.
///
/// Variable order is `(x, x_{n+1}, y, y_{m+1})`.
pub fn corollary_rothaus(
    f: [&BooleanFunction; 3],
    g: [&BooleanFunction; 3],
) -> Result<BooleanFunction> {
    let rf = super::rothaus(f[0], f[1], f[2])?;
    let rg = super::rothaus(g[0], g[1], g[2])?;
    let (n, m) = (rf.n(), rg.n());
    construction2_unchecked(&rf, n, &rg, m, Variant::V00)
}

/// Displayed formula for [`corollary_rothaus`], without premise checks.
pub fn corollary_rothaus_formula(
    f: [&BooleanFunction; 3],
    g: [&BooleanFunction; 3],
) -> Result<BooleanFunction> {
    let (n, m) = (f[0].n(), g[0].n());
    let _ = rothaus_formula(f[0], f[1], f[2])?;
    let _ = rothaus_formula(g[0], g[1], g[2])?;
    let m1 = m + 1;
    BooleanFunction::from_fn(n + 1 + m1, |i| {
        let (xi, yi) = (i >> m1, i & ((1 << m1) - 1));
        let (x, u) = (xi >> 1, xi & 1 == 1);
        let (y, v) = (yi >> 1, yi & 1 == 1);
        let (f1, f2, f3) = (f[0].get(x), f[1].get(x), f[2].get(x));
        let (g1, g2, g3) = (g[0].get(y), g[1].get(y), g[2].get(y));
        (f1 & f2) ^ (f1 & f3) ^ (f2 & f3) ^ ((f1 ^ f2) & u)
            ^ (g1 & g2) ^ (g1 & g3) ^ (g2 & g3) ^ ((g1 ^ g2) & v)
            ^ ((f1 ^ f3 ^ u) & (g1 ^ g3 ^ v))
    })
}

/// One class-D side of [`corollary_class_d`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassD {
    pub phi: PermutationMap,
    pub e1: LinearSubspace,
    pub e2: LinearSubspace,
}

/// Restricted sum of two class-D functions split at `x_mu` and `y_rho`.
pub fn corollary_class_d(f: &ClassD, mu: u32, g: &ClassD, rho: u32) -> Result<BooleanFunction> {
    let fb = class_d_bent(&f.phi, &f.e1, &f.e2)?;
    let gb = class_d_bent(&g.phi, &g.e1, &g.e2)?;
    construction2_unchecked(&fb, mu, &gb, rho, Variant::V00)
}
