//! Commuting graphs of 0-Rees matrix semigroups over finite groups: exact
//! formulas from the zero pattern of the sandwich matrix, and a brute-force
//! oracle to check them against.

pub mod closure;
pub mod engine;
pub mod extnat;
pub mod fixtures;
pub mod generators;
pub mod group;
pub mod instance;
pub mod matrix;
pub mod oracle;
pub mod pattern;
pub mod verify;

pub use closure::{all_closure_submatrices, run_closure, ClosureError, ClosureRun, ClosureSubmatrix};
pub use engine::{analyze, AnalysisReport, ComponentDescriptor, EngineError};
pub use extnat::ExtNat;
pub use group::{FiniteGroup, GroupError, GroupProfile};
pub use instance::{GroupSpec, Instance, InstanceError};
pub use matrix::{Cell, MatrixError, SandwichMatrix, StructuralMatrix};
pub use oracle::{OracleError, SimpleGraph};
