//! Exact computations with the modular group `PSL(2,Z)`, its quotient
//! graphs and indefinite binary quadratic forms.
//!
//! * [`word`]: normal forms, matrices and conjugacy classes;
//! * [`graph`], [`fold`], [`congruence`]: modular graphs from permutation
//!   actions, from folding generators, and for congruence subgroups;
//! * [`cark`]: spines of hyperbolic elements and the bridge to forms;
//! * [`forms`]: reduction, cycles, class numbers, composition, Pell
//!   equations, minima and representations.

pub mod cark;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod fold;
pub mod forms;
pub mod graph;
pub mod json;
pub mod perm;
pub mod word;

pub use cark::{Block, Cark};
pub use congruence::{CongruenceSpec, Family};
pub use error::{Error, Result};
pub use fold::{farey_ball, fold_subgroup_graph};
pub use forms::{FormClass, PellSolution, QuadForm, Representation};
pub use graph::{Passport, RibbonGraph, VertexKind};
pub use word::{Letter, Mat, TraceClass, TraceKind, Word};
