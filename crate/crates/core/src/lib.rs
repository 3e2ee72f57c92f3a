//! Groupoids built from the natural order of finite inverse semigroups.

pub mod cli;
pub mod completion;
pub mod corpus;
pub mod graphs;
pub mod groupoid;
pub mod ideals;
pub mod semigroup;
