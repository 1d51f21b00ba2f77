//! Exact computations with PSH algebras and the invariants built on them.

pub mod classfn;
pub mod combinat;
pub mod cyclo;
pub mod glfq;
pub mod hyperhecke;
pub mod invariants;
pub mod linalg;
pub mod psh;
pub mod report;
pub mod specht;
pub mod suites;
pub mod symgroup;
