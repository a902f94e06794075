//! Exact polynomial algebra over the rationals: univariate, bivariate and
//! multivariate polynomials, resultants, exact division, perfect-power
//! extraction, face polynomials and the triangular Newton-form predicate.

mod bi;
mod multi;
pub mod rat;
mod resultant;
mod uni;

pub use bi::{BiPoly, TriangularForm};
pub use multi::MultiPoly;
pub use rat::Rat;
pub use resultant::{resultant_t, TPoly};
pub use uni::UniPoly;

use num_traits::{One, Signed};

/// Appends `c*mono` to a sum being printed, taking care of signs and unit
/// coefficients. `mono` is empty for the constant term.
pub(crate) fn push_term(out: &mut String, c: &Rat, mono: &str) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if mono.is_empty() {
        out.push_str(&rat::fmt_rat(&a));
    } else if a.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&rat::fmt_rat(&a));
        out.push('*');
        out.push_str(mono);
    }
}

/// Implements the owned-operand arithmetic operators in terms of the
/// by-reference ones.
macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;
