//! Finite connectivity systems: efficient set families, their axioms and
//! constructions, exact branch-width and linear width, and exhaustive audits of
//! the duality and chain theorems.

pub mod audit;
pub mod cli;
pub mod closure;
pub mod connectivity;
pub mod construction;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graphs;
pub mod io;
pub mod limits;
pub mod order;
pub mod subset;

#[cfg(test)]
mod testkit;

pub use connectivity::{ConnectivityFunctionSpec, ConnectivitySystem, EfficiencyBound, Graph};
pub use error::{Error, Result};
pub use families::{check_family, FamilyKind, SetFamily, Verdict};
pub use subset::{GroundSet, Subset};
