//! Exact verification kernel for color algebras graded by a finite abelian
//! group: cyclotomic scalars, bicharacters, structure-constant algebras and
//! representations, an identity catalog with an exhaustive checker, and the
//! standard constructions on F-manifold color algebras.

pub mod constructions;
pub mod forms;
pub mod graded;
pub mod grading;
pub mod io;
pub mod identities;
pub mod scalars;
pub mod search;
