//! Exact characters of local Weyl modules for the current algebras
//! `sl(r+1) ⊗ C[x^1, ..., x^d]` with highest weight `n ω_1`.
//!
//! Three independent routes compute the same weight characters:
//!
//! * [`coinvariants`]: ranks of graded pieces of the multisymmetric
//!   coinvariant ring and of its Young-subgroup invariants,
//! * [`combinat`]: enumeration of Raney sets by residue classes,
//! * [`symfunc`]: the Frobenius characteristic of the parking-function
//!   module pushed through the sign twist and the Frobenius transformation.
//!
//! [`weylmod`] assembles characters (including the `d = 1` model at
//! arbitrary point multisets) and [`uea`] performs the normal-ordering
//! computation in `U(sl_2 ⊗ A)` behind the cocktail-serving expansion.

pub mod character;
pub mod cli;
pub mod coinvariants;
pub mod combinat;
pub mod exactla;
pub mod polyring;
pub mod symfunc;
pub mod uea;
pub mod weylmod;
