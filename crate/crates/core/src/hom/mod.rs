//! Tableau homomorphisms `Θ̂_T : S^λ → M^μ` over `F_p`: dominance, the Garnir-type
//! relations, semistandardization, composition, and the restrictisation and
//! Carter-Payne maps built from them.

mod compose;
mod expr;
pub mod field;
mod maps;
mod multiset;
mod tableau;

pub use compose::{compose, compose_exprs};
pub use expr::{garnir_relation, move_ones, pivot, semistandardize, semistandardize_with, HomExpr, Pivot};
pub use maps::{
    carter_payne_hom, carter_payne_tableau, carter_payne_target, composed_nonvanishing, full_ramps, insert_row,
    lambda_circ, magic_tableau, middle_runner_family, nice_values, re_tableau, restrictisation_hom, v_tableau,
    Composite,
};
pub use multiset::Multiset;
pub use tableau::{tab, Dominance, Tableau};
