//! The k[∂] layer: λ-brackets on free modules, conformal coalgebras and bialgebras,
//! the conformal Yang–Baxter defect, conformal modules and O-operators.
//!
//! R ⊗ R is stored as k[∂1, ∂2] ⊗ A ⊗ A with ∂ acting as ∂1 + ∂2, and R ⊗ R ⊗ R likewise
//! with three slot variables. Since R is free, the quotient by the image of ∂1 + ∂2 + ∂3
//! has the canonical representative obtained from ∂3 ↦ −∂1 − ∂2.

mod algebra;
mod coalgebra;
mod render;
mod reps;

pub use algebra::{
    affinize, bracket_with_param, check_conformal_algebra, lambda_bracket, ConformalStructure, PolyVector,
};
pub use coalgebra::{
    build_cobracket, ccybe_defect, check_conformal_bialgebra, check_conformal_coalgebra, coboundary_conformal,
};
pub use render::{
    render_bracket_table, render_cobracket_table, render_cotensor, render_poly_vector, render_product_table,
    render_structure,
};
pub use reps::{
    check_conformal_bilinear, check_conformal_module, check_conformal_o_operator, conformal_dual, conformal_rep,
    left_symmetric_conformal, ConformalRep,
};
