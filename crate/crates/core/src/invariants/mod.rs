//! Numerical invariants of representations: the symmetric-group W^x and its
//! wreath-product extension.

pub mod mezzadri;
pub mod poly;
pub mod wreath;

pub use mezzadri::{f_lambda, psi_x, verify_mezzadri, verify_psh_multiplicativity, w_x_brute_force, w_x_group};
pub use poly::{CycloPoly, QPoly};
pub use wreath::{wreath_group, wreath_invariant, Example74, WreathElement};
