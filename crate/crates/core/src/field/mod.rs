//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Three
//! implementations ship with the crate: [`BigRational`], the cyclotomic
//! fields [`Cyc`], and simple algebraic extensions [`PolyQuotient`] of any
//! of those.

mod cyclotomic;
mod poly;
mod quotient;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

pub use cyclotomic::{context, known_constant, minimal_conductor, Constant, Cyc, CycContext, CYCLOTOMIC_CAP};
pub use num_rational::BigRational;
pub use poly::UniPoly;
pub use quotient::{PolyQuotient, QuotientContext};

/// An exact commutative field whose elements carry a context (for example a
/// conductor) that determines where zero and one live.
///
/// Binary operators panic when the operands live in different contexts;
/// every public algorithm in the crate checks contexts first and reports
/// [`crate::Error::ConductorMismatch`] instead.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    type Context: Clone + Eq + fmt::Debug + Send + Sync;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: &Self::Context) -> Self;
    fn one_in(ctx: &Self::Context) -> Self;
    fn from_rational_in(ctx: &Self::Context, q: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;

    fn from_int_in(ctx: &Self::Context, n: i64) -> Self {
        Self::from_rational_in(ctx, &BigRational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.context())
    }

    fn same_context(&self, other: &Self) -> bool {
        self.context() == other.context()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.clone() * &inv)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.context());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents need an invertible base.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }
}
