//! Symbolic algebra for locally compact abelian groups of finite ranks.
//!
//! Every such group is a finite sum of eleven indecomposable "atoms"
//! ([`Atom`]). The crate computes Pontryagin duals, structural invariants,
//! `Hom` and `⊗`, the derived `RHom` and derived tensor with their `Ext`
//! groups, and classes in the Grothendieck ring K₀. An expression language
//! ([`frontend`]) ties these together and backs the `flca` binary.
//!
//! ```
//! use flca::frontend::eval_str;
//!
//! assert_eq!(eval_str("dual(Z_5 + Q)").unwrap().canonical(), "Sol + Q_5/Z_5");
//! assert_eq!(eval_str("rhom(T, Z)").unwrap().canonical(), "Z[-1]");
//! ```

pub mod atom;
pub mod derived;
mod error;
pub mod frontend;
pub mod group;
pub mod hom;
pub mod k0;
pub mod selftest;
pub mod structure;

#[cfg(test)]
mod testing;

pub use atom::{Atom, Prime, PrimePower};
pub use derived::{derived_tensor, ext, rhom, DerivedObject, ExtResult, GradedObject, Indecomposable};
pub use error::{Error, Result};
pub use group::FlcaGroup;
pub use hom::{hom, tensor};
pub use k0::{k0_of, k0_of_derived, K0Class};
