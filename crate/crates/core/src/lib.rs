//! Exact Kazhdan-Lusztig theory for finite Coxeter groups: Hecke algebras in
//! the T- and C-bases, parabolic coset systems, the layered basis
//! `m_xy = T_x C_{w_J} T_y*`, generic Specht modules `S^J` with their relative
//! Kazhdan-Lusztig polynomials and W-graphs, and the type-A Murphy basis.

pub mod cellular;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod kl;
pub mod laurent;
pub mod linalg;
pub mod parabolic;
pub mod specht;
pub mod typea;
pub mod verify;
pub mod wgraph;

pub use cellular::{CellularDatum, RankReport};
pub use coxeter::{CoxeterGroup, CoxeterSpec, GenSet, Generator, GroupElement, Side};
pub use error::{Error, Result};
pub use hecke::HeckeVector;
pub use kl::KlTable;
pub use laurent::LaurentInt;
pub use linalg::{EchelonBasis, LMatrix};
pub use parabolic::{DjClass, EjClass, MJElement, ParabolicSystem};
pub use specht::{RelativeKl, SpechtModule};
pub use typea::{Partition, Tableau, TypeAContext};
pub use wgraph::{CellPartition, WGraph};
