//! Homogeneous two-sided ideals: generator catalogs and degree components.

mod basis;
pub mod echelon;
mod spec;

pub use basis::{
    commutation_failure, commutation_suite, congruent, congruent_all, containment_failure, contains,
    degree_basis, intersect_degree, Block, DegreeBasis, Reduction,
};
pub use spec::{
    Family, Generators, IdealExpr, IdealSpec, MonomialIdeal, PairClass, Semimatched, TripleClass,
};
