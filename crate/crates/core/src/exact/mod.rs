//! Exact scalars: rationals and cyclotomic numbers.

pub mod cyclotomic;
pub mod literal;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, max_order, set_max_order, Cyclotomic};
pub use literal::{format_literal, parse_literal};
pub use rational::{int, rat, Rational};
