//! Finite Coxeter groups: presentations, enumeration, lengths, descents and orders.

mod group;
mod spec;
mod todd_coxeter;

pub use group::{CoxeterGroup, GroupElement, Side, DEFAULT_CAP};
pub use spec::{CoxeterSpec, GenSet, Generator};
