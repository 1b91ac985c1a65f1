use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;

use super::{Field, UniPoly};

/// Context of `K[s]/(m(s))` for a monic modulus `m`.
///
/// The quotient is a field when `m` is irreducible over `K`. Ring
/// operations and zero tests are valid regardless, which is all that
/// vanishing checks need.
#[derive(Clone)]
pub struct QuotientContext<K: Field>(Arc<(K::Context, UniPoly<K>)>);

impl<K: Field> PartialEq for QuotientContext<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 .1 == other.0 .1
    }
}

impl<K: Field> Eq for QuotientContext<K> {}

impl<K: Field> fmt::Debug for QuotientContext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[s]/({:?})", self.0 .1)
    }
}

impl<K: Field> QuotientContext<K> {
    /// `modulus` must have positive degree; it is made monic.
    pub fn new(modulus: &UniPoly<K>) -> Self {
        assert!(
            modulus.degree().is_some_and(|d| d > 0),
            "quotient modulus must have positive degree"
        );
        QuotientContext(Arc::new((modulus.context().clone(), modulus.monic())))
    }

    /// The extension `K[s]/(s^2 - c)`.
    pub fn square_root_of(c: &K) -> Self {
        let ctx = c.context();
        let m = UniPoly::new(&ctx, vec![-c.clone(), K::zero_in(&ctx), K::one_in(&ctx)]);
        QuotientContext::new(&m)
    }

    pub fn modulus(&self) -> &UniPoly<K> {
        &self.0 .1
    }

    pub fn base(&self) -> &K::Context {
        &self.0 .0
    }

    pub fn degree(&self) -> usize {
        self.0 .1.degree().unwrap_or(0)
    }
}

/// Element of a simple extension `K[s]/(m(s))`.
#[derive(Clone)]
pub struct PolyQuotient<K: Field> {
    ctx: QuotientContext<K>,
    value: UniPoly<K>,
}

impl<K: Field> PartialEq for PolyQuotient<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.value == other.value
    }
}

impl<K: Field> Eq for PolyQuotient<K> {}

impl<K: Field> Hash for PolyQuotient<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl<K: Field> fmt::Debug for PolyQuotient<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> fmt::Display for PolyQuotient<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .value
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*s"),
                _ => format!("({c})*s^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl<K: Field> PolyQuotient<K> {
    pub fn new(ctx: &QuotientContext<K>, value: UniPoly<K>) -> Self {
        let value = value.rem(ctx.modulus()).expect("modulus is nonzero");
        PolyQuotient {
            ctx: ctx.clone(),
            value,
        }
    }

    pub fn from_base(ctx: &QuotientContext<K>, c: K) -> Self {
        PolyQuotient::new(ctx, UniPoly::constant(c))
    }

    /// The class of `s`.
    pub fn generator(ctx: &QuotientContext<K>) -> Self {
        PolyQuotient::new(ctx, UniPoly::monomial(K::one_in(ctx.base()), 1))
    }

    pub fn value(&self) -> &UniPoly<K> {
        &self.value
    }
}

impl<K: Field> Add<&PolyQuotient<K>> for PolyQuotient<K> {
    type Output = Self;
    fn add(self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "extension mismatch");
        PolyQuotient {
            value: self.value.add(&rhs.value),
            ctx: self.ctx,
        }
    }
}

impl<K: Field> Add for PolyQuotient<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<K: Field> Sub<&PolyQuotient<K>> for PolyQuotient<K> {
    type Output = Self;
    fn sub(self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "extension mismatch");
        PolyQuotient {
            value: self.value.sub(&rhs.value),
            ctx: self.ctx,
        }
    }
}

impl<K: Field> Sub for PolyQuotient<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<K: Field> Mul<&PolyQuotient<K>> for PolyQuotient<K> {
    type Output = Self;
    fn mul(self, rhs: &Self) -> Self {
        assert!(self.ctx == rhs.ctx, "extension mismatch");
        let value = self.value.mul(&rhs.value);
        PolyQuotient::new(&self.ctx, value)
    }
}

impl<K: Field> Mul for PolyQuotient<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<K: Field> Neg for PolyQuotient<K> {
    type Output = Self;
    fn neg(self) -> Self {
        let zero = UniPoly::zero(self.ctx.base());
        PolyQuotient {
            value: zero.sub(&self.value),
            ctx: self.ctx,
        }
    }
}

impl<K: Field> Field for PolyQuotient<K> {
    type Context = QuotientContext<K>;

    fn context(&self) -> Self::Context {
        self.ctx.clone()
    }

    fn zero_in(ctx: &Self::Context) -> Self {
        PolyQuotient {
            ctx: ctx.clone(),
            value: UniPoly::zero(ctx.base()),
        }
    }

    fn one_in(ctx: &Self::Context) -> Self {
        PolyQuotient::from_base(ctx, K::one_in(ctx.base()))
    }

    fn from_rational_in(ctx: &Self::Context, q: &BigRational) -> Self {
        PolyQuotient::from_base(ctx, K::from_rational_in(ctx.base(), q))
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        let inv = self.value.inverse_mod(self.ctx.modulus())?;
        Some(PolyQuotient {
            ctx: self.ctx.clone(),
            value: inv,
        })
    }
}
