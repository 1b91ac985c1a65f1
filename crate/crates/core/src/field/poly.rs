use std::fmt;

use super::Field;

/// Dense univariate polynomial over a field, lowest degree first, with no
/// trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<K: Field> {
    ctx: K::Context,
    coeffs: Vec<K>,
}

impl<K: Field> std::hash::Hash for UniPoly<K> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<K: Field> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl<K: Field> UniPoly<K> {
    pub fn new(ctx: &K::Context, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn zero(ctx: &K::Context) -> Self {
        UniPoly::new(ctx, Vec::new())
    }

    pub fn constant(c: K) -> Self {
        let ctx = c.context();
        UniPoly::new(&ctx, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: K, k: usize) -> Self {
        let ctx = c.context();
        let mut coeffs = vec![K::zero_in(&ctx); k];
        coeffs.push(c);
        UniPoly::new(&ctx, coeffs)
    }

    pub fn context(&self) -> &K::Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(|| K::zero_in(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + &other.coeff(k)).collect();
        UniPoly::new(&self.ctx, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - &other.coeff(k)).collect();
        UniPoly::new(&self.ctx, coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        UniPoly::new(&self.ctx, self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.ctx);
        }
        let mut out = vec![K::zero_in(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + &(a.clone() * b);
                }
            }
        }
        UniPoly::new(&self.ctx, out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero_in(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * &K::from_int_in(&self.ctx, k as i64))
            .collect();
        UniPoly::new(&self.ctx, coeffs)
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading()?.inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((UniPoly::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![K::zero_in(&self.ctx); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = rem[k].clone() * &lead_inv;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx].clone() - &(c.clone() * b);
                }
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Some((UniPoly::new(&self.ctx, quot), UniPoly::new(&self.ctx, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(|l| l.inverse()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let zero = UniPoly::zero(&self.ctx);
        let one = UniPoly::constant(K::one_in(&self.ctx));
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.leading().and_then(|l| l.inverse()) {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        let a = self.rem(modulus)?;
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(modulus);
        if g.degree() == Some(0) {
            s.rem(modulus)
        } else {
            None
        }
    }
}
