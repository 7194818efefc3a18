//! Rack, degenerate and quandle (co)homology of finite racks.

mod chain;
mod cochain;
mod groups;
pub mod modp;
pub mod snf;

pub use chain::{
    basis_budget, boundary_matrix, boundary_terms, index_tuple, is_degenerate, tuple_count, tuple_index, ChainBasis,
    Theory, BUDGET_ENV, DEFAULT_BASIS_BUDGET,
};
pub use cochain::{
    coboundary, cocycle_failure, format_cochain, is_cocycle, parse_cochain, parse_cochain_for, Cochain, CocycleFailure,
};
pub use groups::{
    cohomology, homology, homology_dim_mod_p, homology_with_coefficients, is_coboundary, structure_report, Cohomology,
    HomologyGroup, StructureCheck, StructureReport,
};
