//! Seeded generators for test corpora. Everything is driven by a caller
//! supplied [`RngCore`], so a fixed seed reproduces the same functions.

use alloc::vec::Vec;

use rand_core::RngCore;

use crate::analysis::resiliency_report;
use crate::constructions::{
    class_d_bent, mm_function, psap_bent, BentTriple, FieldFunction, LinearSubspace, PermutationMap,
};
use crate::galois::GaloisField;
use crate::{BooleanFunction, Error, Result};

/// Uniform integer in `0..bound`.
pub fn below<R: RngCore + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0);
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % bound;
        }
    }
}

fn shuffle<R: RngCore + ?Sized, T>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, below(rng, i as u64 + 1) as usize);
    }
}

pub fn random_function<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    let words = (0..BooleanFunction::zero(n)?.words().len())
        .map(|_| rng.next_u64())
        .collect();
    BooleanFunction::from_words(n, words)
}

pub fn random_balanced<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    let size = 1usize << n;
    let mut bits: Vec<bool> = (0..size).map(|i| i < size / 2).collect();
    shuffle(rng, &mut bits);
    BooleanFunction::from_bits(n, &bits)
}

pub fn random_permutation<R: RngCore + ?Sized>(rng: &mut R, k: u32) -> Result<PermutationMap> {
    let mut images: Vec<u32> = (0..1u32 << k).collect();
    shuffle(rng, &mut images);
    PermutationMap::new(k, images)
}

fn check_even(n: u32) -> Result<()> {
    if n < 2 || n % 2 == 1 || n > crate::MAX_VARS {
        Err(Error::VariableCount(n))
    } else {
        Ok(())
    }
}

pub fn random_mm_bent<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    check_even(n)?;
    let phi = random_permutation(rng, n / 2)?;
    let u = random_function(rng, n / 2)?;
    mm_function(&phi, &u)
}

/// Balanced `theta` on `GF(2^m)` with `theta(0) = 0`.
pub fn random_field_function<R: RngCore + ?Sized>(rng: &mut R, field: GaloisField) -> FieldFunction {
    let size = field.order() as usize;
    let mut rest: Vec<bool> = (1..size).map(|i| i <= size / 2).collect();
    shuffle(rng, &mut rest);
    let mut values = alloc::vec![false];
    values.extend(rest);
    FieldFunction::new(field, values).expect("2^m values")
}

pub fn random_psap_bent<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    check_even(n)?;
    let field = GaloisField::new(n / 2)?;
    psap_bent(&random_field_function(rng, field))
}

pub fn random_subspace<R: RngCore + ?Sized>(rng: &mut R, k: u32, dim: u32) -> Result<LinearSubspace> {
    if dim > k {
        return Err(Error::premise("subspace dimension exceeds ambient dimension"));
    }
    let mut s = LinearSubspace::zero(k)?;
    while s.dim() < dim {
        let v = below(rng, 1u64 << k) as u32;
        let mut vectors = s.basis().to_vec();
        vectors.push(v);
        s = LinearSubspace::span(k, &vectors)?;
    }
    Ok(s)
}

/// Class-D parameters `(phi, E1, E2)` with `phi(E2) = E1^perp`.
pub fn random_class_d_params<R: RngCore + ?Sized>(
    rng: &mut R,
    k: u32,
) -> Result<(PermutationMap, LinearSubspace, LinearSubspace)> {
    let d = below(rng, k as u64 + 1) as u32;
    let e1 = random_subspace(rng, k, d)?;
    let e2 = random_subspace(rng, k, k - d)?;
    let perp = e1.orthogonal_complement();
    let (mut src_in, mut dst_in) = (e2.elements(), perp.elements());
    let mut src_out: Vec<u32> = (0..1u32 << k).filter(|&v| !e2.contains(v)).collect();
    let mut dst_out: Vec<u32> = (0..1u32 << k).filter(|&v| !perp.contains(v)).collect();
    shuffle(rng, &mut dst_in);
    shuffle(rng, &mut dst_out);
    src_in.append(&mut src_out);
    dst_in.append(&mut dst_out);
    let mut images = alloc::vec![0u32; 1 << k];
    for (s, d) in src_in.into_iter().zip(dst_in) {
        images[s as usize] = d;
    }
    Ok((PermutationMap::new(k, images)?, e1, e2))
}

pub fn random_class_d_bent<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    check_even(n)?;
    let (phi, e1, e2) = random_class_d_params(rng, n / 2)?;
    class_d_bent(&phi, &e1, &e2)
}

/// A bent function from a randomly chosen primary family.
pub fn random_bent<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BooleanFunction> {
    match below(rng, 3) {
        0 => random_mm_bent(rng, n),
        1 => random_psap_bent(rng, n),
        _ => random_class_d_bent(rng, n),
    }
}

/// Random `t`-resilient function: an affine function on at least `t + 1`
/// variables, or an M-M function whose `phi` avoids weights `<= t`.
pub fn random_resilient<R: RngCore + ?Sized>(rng: &mut R, n: u32, t: u32) -> Result<BooleanFunction> {
    if t + 1 > n {
        return Err(Error::premise("resiliency order too large"));
    }
    let candidates: Vec<u32> = (t + 1..n).collect();
    if candidates.is_empty() || below(rng, 4) == 0 {
        let mut omega;
        loop {
            omega = below(rng, 1u64 << n) as u32;
            if omega.count_ones() > t {
                break;
            }
        }
        let f = BooleanFunction::linear(n, omega)?;
        return Ok(if below(rng, 2) == 1 { f.complement() } else { f });
    }
    let r = candidates[below(rng, candidates.len() as u64) as usize];
    let s = n - r;
    let images: Vec<u32> = (0..1u32 << s)
        .map(|_| loop {
            let v = below(rng, 1u64 << r) as u32;
            if v.count_ones() > t {
                break v;
            }
        })
        .collect();
    let phi = PermutationMap::general(s, r, images)?;
    mm_function(&phi, &random_function(rng, s)?)
}

/// Three `t`-resilient functions whose XOR is also `t`-resilient.
pub fn random_resilient_triple<R: RngCore + ?Sized>(
    rng: &mut R,
    n: u32,
    t: u32,
) -> Result<[BooleanFunction; 3]> {
    for _ in 0..10_000 {
        let g1 = random_resilient(rng, n, t)?;
        let g2 = random_resilient(rng, n, t)?;
        let g3 = random_resilient(rng, n, t)?;
        let nu = g1.xor(&g2)?.xor(&g3)?;
        if resiliency_report(&nu).1 >= t as i32 {
            return Ok([g1, g2, g3]);
        }
    }
    Err(Error::premise("no resilient triple found"))
}

/// Bent triple by the derivative trick from two M-M functions
/// `x.phi(y) + r1(y)` and `x.phi(y) + r2(y)`, whose derivatives agree in any
/// direction `a = (a', 0)`. Returns the triple and `a`.
pub fn random_derivative_triple<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<(BentTriple, u32)> {
    check_even(n)?;
    let h = n / 2;
    let phi = random_permutation(rng, h)?;
    let r1 = random_function(rng, h)?;
    let r2 = random_function(rng, h)?;
    let theta1 = mm_function(&phi, &r1)?;
    let theta2 = mm_function(&phi, &r2)?;
    // D_a for a = (a', 0) is a'.phi(y), independent of r
    let a = (1 + below(rng, (1u64 << h) - 1) as u32) << h;
    let triple = crate::constructions::bent_triple_derivative(&theta1, &theta2, a)?;
    Ok((triple, a))
}

/// A random certified bent triple, either `(f, f + l1, f + l2)` for a bent
/// `f` and linear `l1, l2` or from the derivative trick.
pub fn random_bent_triple<R: RngCore + ?Sized>(rng: &mut R, n: u32) -> Result<BentTriple> {
    if below(rng, 2) == 0 {
        let f = random_bent(rng, n)?;
        for _ in 0..64 {
            let l1 = BooleanFunction::linear(n, below(rng, 1u64 << n) as u32)?;
            let l2 = BooleanFunction::linear(n, below(rng, 1u64 << n) as u32)?;
            let t = BentTriple::new(f.clone(), f.xor(&l1)?, f.xor(&l2)?)?;
            if t.is_certified() {
                return Ok(t);
            }
        }
    }
    Ok(random_derivative_triple(rng, n)?.0)
}

/// `(8, 1, -, 112)` M-M function: `phi: F_2^3 -> F_2^5` injective with image
/// weights at least 2, at least one of weight exactly 2.
pub fn random_mm_8_1_112<R: RngCore + ?Sized>(rng: &mut R) -> Result<BooleanFunction> {
    let mut heavy: Vec<u32> = (0..32u32).filter(|v| v.count_ones() >= 2).collect();
    loop {
        shuffle(rng, &mut heavy);
        if heavy[..8].iter().any(|v| v.count_ones() == 2) {
            break;
        }
    }
    let phi = PermutationMap::general(3, 5, heavy[..8].to_vec())?;
    mm_function(&phi, &random_function(rng, 3)?)
}
