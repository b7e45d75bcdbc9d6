pub mod cli;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod perm;
pub mod rational;
pub mod report;
pub mod scalar;
pub mod tableau;
pub mod suite;
pub mod tensor;
