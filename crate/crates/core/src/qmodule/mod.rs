//! The irreducible highest-weight module V(λ) of U_q(g), realized as the
//! span of monomials F_{i_k}⋯F_{i_1} v_λ modulo the radical of the
//! q-Shapovalov form.

mod module;
mod shapovalov;

pub use module::{character_dim, default_depth_cap, WeightModule};
pub use shapovalov::{
    e_action, gram_block, seq_of, serre_radical_check, weight_of, weight_space_dim, FMonomial, GramBlock, Shapovalov,
};
