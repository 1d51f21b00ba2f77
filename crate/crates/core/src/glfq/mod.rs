//! Finite fields, small general linear groups and their characters.

pub mod bruhat;
pub mod chartable;
pub mod field;
pub mod gauss;
pub mod group;
pub mod matrix;

use thiserror::Error;

pub use bruhat::{verify_bruhat_bijection, BruhatReport};
pub use chartable::CharacterTable;
pub use field::{field, field_of_order, Field, Fq};
pub use gauss::{hasse_davenport_check, kondo_gauss, psi_measure, weil_character, CyclicLog, WeilData};
pub use group::{induce, restrict, FiniteGroup, GroupElement};
pub use matrix::{gl_group, gl_subgroup, FqMatrix, GlGroup};

pub const DEFAULT_MAX_GROUP_ORDER: usize = 100_000;

/// Enumeration bound, overridable with `PSHLAB_MAX_GROUP_ORDER`.
pub fn max_group_order() -> usize {
    std::env::var("PSHLAB_MAX_GROUP_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP_ORDER)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("F_{{{p}^{d}}} exceeds the supported field size")]
    FieldTooLarge { p: u32, d: u32 },
    #[error("{name} has more than {bound} elements")]
    GroupTooLarge { name: String, bound: usize },
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("character of dimension zero")]
    ZeroDimension,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
