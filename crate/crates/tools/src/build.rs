//! `build` dispatch: loads or samples inputs, runs one construction and checks
//! every property it claims.

use std::path::PathBuf;

use bentkit::analysis::{dual, is_bent, nonlinearity, resiliency_report};
use bentkit::constructions::{
    class_d_bent, construction2, construction2_dual, corollary_class_d, corollary_nmm,
    corollary_psab, corollary_rothaus, corollary_rothaus_formula, direct_sum,
    generalized_indirect_sum, indirect_sum, mm_function, proposition_cor41, psap_bent, rothaus,
    theorem42_build, BentTriple, ClassD, FieldFunction, Hyperplane, LinearSubspace,
    PermutationMap, ResilientCertificate, Variant,
};
use bentkit::corpus;
use bentkit::galois::GaloisField;
use bentkit::{AnalysisProfile, BooleanFunction};
use clap::ValueEnum;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256StarStar;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::read_truth_table;
use crate::params::{BuildParams, Element, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Maiorana-McFarland x.phi(y) + u(y)
    Mm,
    /// Partial spread theta(x/y)
    Psap,
    /// Carlet's class D
    ClassD,
    DirectSum,
    IndirectSum,
    Rothaus,
    /// Restricted sum of two bent functions
    Construction2,
    CorollaryNmm,
    CorollaryPsab,
    CorollaryRothaus,
    CorollaryClassD,
    /// Generalized indirect sum
    Gis,
    /// Resilient function from a bent triple and three resilient functions
    Theorem42,
    /// Resilient function from a bent triple and two resilient functions
    Cor41,
}

impl Construction {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Claim {
    pub property: String,
    pub expected: Value,
    pub observed: Value,
    pub verified: bool,
}

impl Claim {
    fn new(property: &str, expected: impl Serialize, observed: impl Serialize, verified: bool) -> Self {
        Self {
            property: property.into(),
            expected: json!(expected),
            observed: json!(observed),
            verified,
        }
    }

    fn equal<T: Serialize + PartialEq>(property: &str, expected: T, observed: T) -> Self {
        let verified = expected == observed;
        Self::new(property, expected, observed, verified)
    }

    fn at_least<T: Serialize + PartialOrd>(property: &str, expected: T, observed: T) -> Self {
        let verified = observed >= expected;
        Self::new(property, expected, observed, verified)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildSummary {
    pub construction: String,
    pub output: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub profile: AnalysisProfile,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

impl BuildSummary {
    pub fn all_verified(&self) -> bool {
        self.claims.iter().all(|c| c.verified)
    }
}

pub struct Built {
    pub function: BooleanFunction,
    pub claims: Vec<Claim>,
    pub certificate: Option<Value>,
}

type Res<T> = Result<T, CliError>;

struct Ctx {
    p: BuildParams,
    rng: Xoshiro256StarStar,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn log2_len(len: usize, what: &str) -> Res<u32> {
    if len < 2 || !len.is_power_of_two() {
        return Err(usage(format!("--{what} needs 2^k entries, got {len}")));
    }
    Ok(len.trailing_zeros())
}

fn vectors(v: &[Vector]) -> Vec<u32> {
    v.iter().map(|x| x.0).collect()
}

impl Ctx {
    fn load(&self, slot: &Option<PathBuf>) -> Res<Option<BooleanFunction>> {
        Ok(match slot {
            Some(path) => Some(read_truth_table(path)?),
            None => None,
        })
    }

    fn dim(&self, side: char, missing: &str) -> Res<u32> {
        let v = if side == 'n' { self.p.n } else { self.p.m };
        v.ok_or_else(|| usage(format!("missing {missing} (or --{side} for a seeded random instance)")))
    }

    /// A function from `slot`, or a random one of `--n`/`--m` variables.
    fn function(
        &mut self,
        slot: &Option<PathBuf>,
        flag: &str,
        side: char,
        random: fn(&mut Xoshiro256StarStar, u32) -> bentkit::Result<BooleanFunction>,
    ) -> Res<BooleanFunction> {
        if let Some(f) = self.load(slot)? {
            return Ok(f);
        }
        let n = self.dim(side, flag)?;
        Ok(random(&mut self.rng, n)?)
    }

    fn functions<const K: usize>(&self, slots: [&Option<PathBuf>; K]) -> Res<Option<[BooleanFunction; K]>> {
        let loaded: Vec<Option<BooleanFunction>> =
            slots.iter().map(|s| self.load(s)).collect::<Res<_>>()?;
        match loaded.iter().filter(|f| f.is_some()).count() {
            0 => Ok(None),
            c if c == K => Ok(Some(
                loaded.into_iter().map(Option::unwrap).collect::<Vec<_>>().try_into().expect("K"),
            )),
            _ => Err(usage(format!("give all {K} functions of a group or none"))),
        }
    }

    fn variant(&self) -> Res<Variant> {
        match &self.p.variant {
            Some(v) => v.parse().map_err(|_| usage(format!("invalid variant {v:?}"))),
            None => Ok(Variant::V00),
        }
    }

    fn field_function(&mut self, slot: &Option<PathBuf>, side: char) -> Res<FieldFunction> {
        match self.load(slot)? {
            Some(t) => {
                let field = GaloisField::new(t.n())?;
                Ok(FieldFunction::new(field, t.bits().collect())?)
            }
            None => {
                let n = self.dim(side, if side == 'n' { "--theta" } else { "--vartheta" })?;
                if n % 2 == 1 {
                    return Err(bentkit::Error::VariableCount(n).into());
                }
                let field = GaloisField::new(n / 2)?;
                Ok(corpus::random_field_function(&mut self.rng, field))
            }
        }
    }

    fn plane(&mut self, given: &Option<Vec<Element>>, field: GaloisField, flag: &str) -> Res<Hyperplane> {
        if let Some(e) = given {
            if e.len() != 4 {
                return Err(usage(format!("--{flag} takes four field elements")));
            }
            return Ok(Hyperplane {
                a: e[0].0,
                b: e[1].0,
                alpha: e[2].0,
                beta: e[3].0,
            });
        }
        let q = field.order() as u64;
        loop {
            let e: Vec<u32> = (0..4).map(|_| corpus::below(&mut self.rng, q) as u32).collect();
            let t = field.mul_raw(e[0], e[2]) ^ field.mul_raw(e[1], e[3]);
            if field.trace_raw(t) {
                return Ok(Hyperplane {
                    a: e[0],
                    b: e[1],
                    alpha: e[2],
                    beta: e[3],
                });
            }
        }
    }

    fn class_d(
        &mut self,
        phi: &Option<Vec<Vector>>,
        e1: &Option<Vec<Vector>>,
        e2: &Option<Vec<Vector>>,
        side: char,
        names: [&str; 3],
    ) -> Res<ClassD> {
        match (phi, e1, e2) {
            (Some(phi), Some(e1), Some(e2)) => {
                let k = log2_len(phi.len(), names[0])?;
                Ok(ClassD {
                    phi: PermutationMap::new(k, vectors(phi))?,
                    e1: LinearSubspace::span(k, &vectors(e1))?,
                    e2: LinearSubspace::span(k, &vectors(e2))?,
                })
            }
            (None, None, None) => {
                let n = self.dim(side, &format!("--{}/--{}/--{}", names[0], names[1], names[2]))?;
                if n % 2 == 1 {
                    return Err(bentkit::Error::VariableCount(n).into());
                }
                let (phi, e1, e2) = corpus::random_class_d_params(&mut self.rng, n / 2)?;
                Ok(ClassD { phi, e1, e2 })
            }
            _ => Err(usage(format!(
                "give all of --{}, --{}, --{} or none",
                names[0], names[1], names[2]
            ))),
        }
    }

    fn permutation(&mut self, given: &Option<Vec<Vector>>, side: char, flag: &str) -> Res<PermutationMap> {
        match given {
            Some(images) => {
                let k = log2_len(images.len(), flag)?;
                Ok(PermutationMap::new(k, vectors(images))?)
            }
            None => {
                let n = self.dim(side, &format!("--{flag}"))?;
                if n % 2 == 1 {
                    return Err(bentkit::Error::VariableCount(n).into());
                }
                Ok(corpus::random_permutation(&mut self.rng, n / 2)?)
            }
        }
    }

    fn triple(&mut self) -> Res<BentTriple> {
        let p = self.p.clone();
        match self.functions([&p.f1, &p.f2, &p.f3])? {
            Some([f1, f2, f3]) => {
                if let Some(a) = p.a {
                    // f1, f2 are the two bent functions of the derivative trick
                    return Ok(bentkit::constructions::bent_triple_derivative(&f1, &f2, a.0)?);
                }
                Ok(BentTriple::certify(f1, f2, f3)?)
            }
            None => {
                let n = self.dim('n', "--f1/--f2/--f3")?;
                Ok(corpus::random_derivative_triple(&mut self.rng, n)?.0)
            }
        }
    }
}

fn bent_claim(h: &BooleanFunction) -> Claim {
    Claim::equal("bent", true, is_bent(h))
}

fn certificate_claims(c: &ResilientCertificate) -> Vec<Claim> {
    vec![
        Claim::at_least("resiliency", c.resiliency_claimed, c.resiliency),
        Claim::at_least("nonlinearity", c.nonlinearity_bound, c.nonlinearity),
    ]
}

fn min_resiliency(fs: &[&BooleanFunction]) -> i32 {
    fs.iter().map(|f| resiliency_report(f).1).min().unwrap_or(-1)
}

pub fn build(
    construction: Construction,
    params: BuildParams,
    seed: Option<u64>,
) -> Res<Built> {
    let mut cx = Ctx {
        rng: Xoshiro256StarStar::seed_from_u64(seed.unwrap_or(0)),
        p: params,
    };
    let p = cx.p.clone();
    let mut claims = Vec::new();
    let mut certificate = None;
    let h = match construction {
        Construction::Mm => match &p.phi {
            Some(images) => {
                let s = log2_len(images.len(), "phi")?;
                let r = p.r.unwrap_or(s);
                let phi = PermutationMap::general(s, r, vectors(images))?;
                let u = match cx.load(&p.u)? {
                    Some(u) => u,
                    None => BooleanFunction::zero(s)?,
                };
                let h = mm_function(&phi, &u)?;
                if phi.is_permutation() {
                    claims.push(bent_claim(&h));
                } else if phi.is_injective() {
                    let t = images.iter().map(|v| v.0.count_ones()).min().unwrap_or(0) as i32 - 1;
                    if t >= 0 {
                        claims.push(Claim::at_least("resiliency", t, resiliency_report(&h).1));
                    }
                }
                h
            }
            None => {
                let h = cx.function(&None, "--phi", 'n', corpus::random_mm_bent)?;
                claims.push(bent_claim(&h));
                h
            }
        },
        Construction::Psap => {
            let theta = cx.field_function(&p.theta, 'n')?;
            let h = psap_bent(&theta)?;
            claims.push(bent_claim(&h));
            h
        }
        Construction::ClassD => {
            let d = cx.class_d(&p.phi, &p.e1, &p.e2, 'n', ["phi", "e1", "e2"])?;
            let h = class_d_bent(&d.phi, &d.e1, &d.e2)?;
            claims.push(bent_claim(&h));
            h
        }
        Construction::DirectSum => {
            let f = cx.function(&p.f, "--f", 'n', corpus::random_function)?;
            let g = cx.function(&p.g, "--g", 'm', corpus::random_function)?;
            let h = direct_sum(&f, &g)?;
            let (nf, ng) = (nonlinearity(&f), nonlinearity(&g));
            let formula = (ng << f.n()) + (nf << g.n()) - 2 * nf * ng;
            claims.push(Claim::equal("nonlinearity", formula, nonlinearity(&h)));
            if is_bent(&f) && is_bent(&g) {
                claims.push(bent_claim(&h));
            }
            h
        }
        Construction::IndirectSum => {
            let [f1, f2] = match cx.functions([&p.f1, &p.f2])? {
                Some(fs) => fs,
                None => {
                    let n = cx.dim('n', "--f1/--f2")?;
                    [corpus::random_bent(&mut cx.rng, n)?, corpus::random_bent(&mut cx.rng, n)?]
                }
            };
            let [g1, g2] = match cx.functions([&p.g1, &p.g2])? {
                Some(gs) => gs,
                None => {
                    let m = cx.dim('m', "--g1/--g2")?;
                    [corpus::random_bent(&mut cx.rng, m)?, corpus::random_bent(&mut cx.rng, m)?]
                }
            };
            let h = indirect_sum(&f1, &f2, &g1, &g2)?;
            if [&f1, &f2, &g1, &g2].iter().all(|f| is_bent(f)) {
                claims.push(bent_claim(&h));
            }
            h
        }
        Construction::Rothaus => {
            let [f1, f2, f3] = match cx.functions([&p.f1, &p.f2, &p.f3])? {
                Some(fs) => fs,
                None => {
                    let n = cx.dim('n', "--f1/--f2/--f3")?;
                    corpus::random_bent_triple(&mut cx.rng, n)?.functions().clone()
                }
            };
            let h = rothaus(&f1, &f2, &f3)?;
            claims.push(bent_claim(&h));
            h
        }
        Construction::Construction2 => {
            let f = cx.function(&p.f, "--f", 'n', corpus::random_bent)?;
            let g = cx.function(&p.g, "--g", 'm', corpus::random_bent)?;
            let (mu, rho) = (p.mu.unwrap_or(1), p.rho.unwrap_or(1));
            let variant = cx.variant()?;
            let h = construction2(&f, mu, &g, rho, variant)?;
            claims.push(bent_claim(&h));
            let predicted = construction2_dual(&f, mu, &g, rho, variant)?;
            claims.push(Claim::equal("dual", true, dual(&h).ok() == Some(predicted)));
            h
        }
        Construction::CorollaryNmm => {
            let phi = cx.permutation(&p.phi, 'n', "phi")?;
            let psi = cx.permutation(&p.psi, 'm', "psi")?;
            let (hf, hg) = (phi.input_dim(), psi.input_dim());
            let u = match cx.load(&p.u)? {
                Some(u) => u,
                None if p.phi.is_none() => corpus::random_function(&mut cx.rng, hf)?,
                None => BooleanFunction::zero(hf)?,
            };
            let v = match cx.load(&p.v)? {
                Some(v) => v,
                None if p.psi.is_none() => corpus::random_function(&mut cx.rng, hg)?,
                None => BooleanFunction::zero(hg)?,
            };
            let (mu, rho) = (p.mu.unwrap_or(1), p.rho.unwrap_or(1));
            let h = corollary_nmm(&phi, &psi, mu, rho, &u, &v)?;
            claims.push(bent_claim(&h));
            let composed =
                construction2(&mm_function(&phi, &u)?, mu, &mm_function(&psi, &v)?, rho, Variant::V00)?;
            claims.push(Claim::equal("matches_construction2", true, composed == h));
            h
        }
        Construction::CorollaryPsab => {
            let theta = cx.field_function(&p.theta, 'n')?;
            let vartheta = cx.field_function(&p.vartheta, 'm')?;
            let fp = cx.plane(&p.f_plane, theta.field(), "f-plane")?;
            let gp = cx.plane(&p.g_plane, vartheta.field(), "g-plane")?;
            let h = corollary_psab(&theta, fp, &vartheta, gp)?;
            claims.push(bent_claim(&h));
            h
        }
        Construction::CorollaryRothaus => {
            let f = match cx.functions([&p.f1, &p.f2, &p.f3])? {
                Some(fs) => fs,
                None => {
                    let n = cx.dim('n', "--f1/--f2/--f3")?;
                    corpus::random_bent_triple(&mut cx.rng, n)?.functions().clone()
                }
            };
            let g = match cx.functions([&p.g1, &p.g2, &p.g3])? {
                Some(gs) => gs,
                None => {
                    let m = cx.dim('m', "--g1/--g2/--g3")?;
                    corpus::random_bent_triple(&mut cx.rng, m)?.functions().clone()
                }
            };
            let fr = [&f[0], &f[1], &f[2]];
            let gr = [&g[0], &g[1], &g[2]];
            let h = corollary_rothaus(fr, gr)?;
            claims.push(bent_claim(&h));
            claims.push(Claim::equal("matches_formula", true, corollary_rothaus_formula(fr, gr)? == h));
            h
        }
        Construction::CorollaryClassD => {
            let f = cx.class_d(&p.phi, &p.e1, &p.e2, 'n', ["phi", "e1", "e2"])?;
            let g = cx.class_d(&p.psi, &p.xi1, &p.xi2, 'm', ["psi", "xi1", "xi2"])?;
            let h = corollary_class_d(&f, p.mu.unwrap_or(1), &g, p.rho.unwrap_or(1))?;
            claims.push(bent_claim(&h));
            h
        }
        Construction::Gis => {
            let f = match cx.functions([&p.f1, &p.f2, &p.f3])? {
                Some(fs) => fs,
                None => {
                    let n = cx.dim('n', "--f1/--f2/--f3")?;
                    corpus::random_resilient_triple(&mut cx.rng, n, 0)?
                }
            };
            let g = match cx.functions([&p.g1, &p.g2, &p.g3])? {
                Some(gs) => gs,
                None => {
                    let m = cx.dim('m', "--g1/--g2/--g3")?;
                    corpus::random_resilient_triple(&mut cx.rng, m, 0)?
                }
            };
            let fr = [&f[0], &f[1], &f[2]];
            let gr = [&g[0], &g[1], &g[2]];
            let h = generalized_indirect_sum(fr, gr)?;
            let nu1 = f[0].xor(&f[1])?.xor(&f[2])?;
            let nu2 = g[0].xor(&g[1])?.xor(&g[2])?;
            let t = min_resiliency(&[&f[0], &f[1], &f[2], &nu1]);
            let k = min_resiliency(&[&g[0], &g[1], &g[2], &nu2]);
            if t >= 0 && k >= 0 {
                claims.push(Claim::at_least("resiliency", t + k + 1, resiliency_report(&h).1));
            }
            let f_triple = BentTriple::new(f[0].clone(), f[1].clone(), f[2].clone())?;
            if f_triple.is_certified() && [&g[0], &g[1], &g[2], &nu2].iter().all(|g| is_bent(g)) {
                claims.push(bent_claim(&h));
            }
            h
        }
        Construction::Theorem42 => {
            let triple = cx.triple()?;
            let g = match cx.functions([&p.g1, &p.g2, &p.g3])? {
                Some(gs) => gs,
                None => {
                    let m = cx.dim('m', "--g1/--g2/--g3")?;
                    corpus::random_resilient_triple(&mut cx.rng, m, 1)?
                }
            };
            let (h, cert) = theorem42_build(&triple, [&g[0], &g[1], &g[2]])?;
            claims.extend(certificate_claims(&cert));
            certificate = Some(json!(cert));
            h
        }
        Construction::Cor41 => {
            let triple = cx.triple()?;
            let (pf, qf) = match (cx.load(&p.p)?, cx.load(&p.q)?) {
                (Some(pf), Some(qf)) => (pf, qf),
                (None, None) => {
                    let pf = corpus::random_mm_8_1_112(&mut cx.rng)?;
                    let qf = loop {
                        let q = corpus::random_mm_8_1_112(&mut cx.rng)?;
                        if q != pf {
                            break q;
                        }
                    };
                    (pf, qf)
                }
                _ => return Err(usage("give both --p and --q or neither")),
            };
            let (h, cert) = proposition_cor41(&triple, &pf, &qf, p.i.unwrap_or(1))?;
            claims.extend(certificate_claims(&cert.certificate));
            certificate = Some(json!(cert));
            h
        }
    };
    Ok(Built {
        function: h,
        claims,
        certificate,
    })
}
