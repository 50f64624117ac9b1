pub mod arith;
pub mod error;
pub mod padic;
pub mod rational;
pub mod symbols;
pub mod jshadow;
pub mod imj;
pub mod exec;
pub mod sweep;
