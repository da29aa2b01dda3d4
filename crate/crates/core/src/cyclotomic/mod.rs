//! Cyclotomic quotients R^λ(β) and the checks built on them.

pub mod block;
pub mod branch;
pub mod projection;
pub mod special;

pub use block::{
    cyclotomic_block, frobenius_check, frobenius_degree, graded_hom_dim, pair_block, BlockReport, CyclotomicBlock,
    FrobeniusCheck, PairBlock, PairQuotient,
};
pub use branch::{
    restriction_check, verify_branch, verify_cyclotomic_conjecture, BranchReport, ConjectureReport, ConjectureRow,
    RestrictedWeight, RestrictionCheck, SurjectionCase, SurjectionSum,
};
pub use projection::{verify_projection_identity, ProjectionReport};
pub use special::{map_word, pattern_idempotent, rule_shift, special_p, table_shift, PatternIdempotent, Sign};
