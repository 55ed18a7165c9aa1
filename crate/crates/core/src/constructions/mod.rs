//! Primary bent families and the secondary constructions built on them.

mod classical;
mod maps;
mod primary;
mod resilient;
mod restricted;
mod subspace;

pub use classical::{direct_sum, indirect_sum, rothaus};
pub use maps::PermutationMap;
pub use primary::{class_d_bent, mm_function, psap_bent, FieldFunction};
pub use resilient::{
    bent_triple_derivative, generalized_indirect_sum, indirect_sum_difference, proposition_cor41,
    theorem42_build, walsh_case_classify, walsh_cases, BentTriple, CaseCertificate, Multiplier,
    ResilientCertificate, WalshCase,
};
pub use restricted::{
    construction2, construction2_dual, construction2_unchecked, corollary_class_d, corollary_nmm,
    corollary_psab, corollary_rothaus, corollary_rothaus_formula, hyperplane_split, psap_split,
    ClassD, Hyperplane, Variant,
};
pub use subspace::LinearSubspace;
