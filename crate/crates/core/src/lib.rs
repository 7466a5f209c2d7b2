//! Finite dagger categories and dagger 2-categories as explicit tables, with
//! constructions for dagger Frobenius monads (Frobenius–Eilenberg–Moore and
//! Kleisli categories, the monad completions of a 2-category, dagger lax
//! functors) and exhaustive checkers for their laws and universal properties.

pub mod fincat;
pub mod fixtures;
pub mod functor;
pub mod kleisli;
pub mod lax;
pub mod monad;
pub mod oracle;
pub mod search;
pub mod two_cat;
pub mod verdict;

pub use fincat::{validate_category, CategoryDescription, CategoryError, FinDaggerCategory, Mor, MorphismDecl, Obj};
pub use verdict::{Verdict, Witness};
