//! Finite racks, quandles and keis given by operation tables.

mod alexander;
mod extension;
mod group;
pub mod io;
mod iso;
mod presentation;
mod rack;
mod word;

pub use alexander::make_alexander;
pub use extension::{abelian_extension, extension_element, extension_parts};
pub use group::{cyclic_group, make_conjugation, symmetric_group, FiniteGroup};
pub use io::{builtin, format_table, parse_table};
pub use iso::{find_isomorphism, is_isomorphism};
pub use presentation::{associated_group_presentation, GroupPresentation};
pub use rack::{
    check_axioms, make_dihedral, make_trivial, Axiom, Classification, Element, RackClass, RackTable, Violation,
};
pub use word::{evaluate_word, kei_normalize, rack_normalize, RackWord, Sign, WordTree};
