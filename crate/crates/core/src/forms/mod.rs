//! Homogeneous forms over exact fields and the linear action on them.

mod matrix;
mod monomial;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use matrix::{bareiss_det, SquareMatrix};
pub use monomial::{all_monomials, variable_names, Monomial, MAX_VARS};

use crate::error::{Error, Result};
use crate::field::{Cyc, CycContext, Field};

/// Homogeneous polynomial of degree `d` in `n` variables.
///
/// Terms are kept in canonical monomial order and never store a zero
/// coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Form<K: Field> {
    n: usize,
    d: u32,
    ctx: K::Context,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> fmt::Debug for Form<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> Form<K> {
    pub fn zero(n: usize, d: u32, ctx: &K::Context) -> Self {
        assert!((1..=MAX_VARS).contains(&n), "unsupported number of variables {n}");
        Form {
            n,
            d,
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<'a, I>(n: usize, ctx: &K::Context, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [u16], K)>,
    {
        let mut d = None;
        let mut out = Form::zero(n, 0, ctx);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "monomial with {} exponents in {n} variables",
                    exps.len()
                )));
            }
            if c.context() != *ctx {
                return Err(Error::mismatch(ctx, c.context()));
            }
            let m = Monomial::new(exps);
            match d {
                None => d = Some(m.degree()),
                Some(d0) if d0 != m.degree() => {
                    return Err(Error::InvalidInput(format!(
                        "inhomogeneous terms of degrees {d0} and {}",
                        m.degree()
                    )))
                }
                _ => {}
            }
            out.add_term(m, c);
        }
        out.d = d.unwrap_or(0);
        Ok(out)
    }

    /// `c * x_i` as a linear form.
    pub fn variable(n: usize, i: usize, ctx: &K::Context) -> Self {
        let mut f = Form::zero(n, 1, ctx);
        f.add_term(Monomial::variable(n, i), K::one_in(ctx));
        f
    }

    pub fn constant(n: usize, c: K) -> Self {
        let mut f = Form::zero(n, 0, &c.context());
        f.add_term(Monomial::one(n), c);
        f
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn context(&self) -> &K::Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(|| K::zero_in(&self.ctx))
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u16]) -> K {
        self.coeff(&Monomial::new(exps))
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().copied().collect()
    }

    pub fn map_coeffs<L: Field>(&self, ctx: &L::Context, f: impl Fn(&K) -> L) -> Form<L> {
        let mut out = Form::zero(self.n, self.d, ctx);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Form::zero(self.n, self.d, &self.ctx);
        if !c.is_zero() {
            for (m, a) in &self.terms {
                out.terms.insert(*m, a.clone() * c);
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {} variables", self.n, other.n)));
        }
        if self.ctx != other.ctx {
            return Err(Error::mismatch(&self.ctx, &other.ctx));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.d != other.d && !self.is_zero() && !other.is_zero() {
            return Err(Error::InvalidInput(format!(
                "cannot add forms of degrees {} and {}",
                self.d, other.d
            )));
        }
        let mut out = self.clone();
        if self.is_zero() {
            out.d = other.d;
        }
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Monomial, K> = HashMap::new();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let m = ma.mul(mb);
                let p = a.clone() * b;
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut out = Form::zero(self.n, self.d + other.d, &self.ctx);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Form::zero(self.n, self.d.saturating_sub(1), &self.ctx);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = *m.raw();
            exps[i] -= 1;
            out.add_term(
                Monomial::from_raw(self.n, exps),
                c.clone() * &K::from_int_in(&self.ctx, e as i64),
            );
        }
        out
    }

    pub fn partials(&self) -> Vec<Self> {
        (0..self.n).map(|i| self.partial(i)).collect()
    }

    /// Determinant of the matrix of second partial derivatives.
    pub fn hessian(&self) -> Self {
        let n = self.n;
        let second: Vec<Vec<Self>> = self.partials().iter().map(|p| p.partials()).collect();
        // minors[mask] = det of rows (n - |mask|).. restricted to columns in mask
        let full = (1usize << n) - 1;
        let mut minors: Vec<Option<Self>> = vec![None; full + 1];
        minors[0] = Some(Form::constant(n, K::one_in(&self.ctx)));
        for mask in 1..=full {
            let size = mask.count_ones() as usize;
            let row = n - size;
            let mut acc: Option<Self> = None;
            let mut sign_pos = 0usize;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = minors[mask & !(1 << j)].as_ref().expect("minor computed");
                let mut term = second[row][j].checked_mul(sub).expect("same context");
                if sign_pos % 2 == 1 {
                    term = -&term;
                }
                sign_pos += 1;
                acc = Some(match acc {
                    None => term,
                    Some(a) => force_add(&a, &term),
                });
            }
            minors[mask] = acc;
        }
        let mut h = minors[full].take().expect("full determinant");
        h.d = n as u32 * self.d.saturating_sub(2);
        h
    }

    /// `f(M x)`: substitutes `x_i -> sum_j M[i][j] x_j`.
    pub fn substitute(&self, m: &SquareMatrix<K>) -> Result<Self> {
        if m.dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a form in {} variables",
                m.dim(),
                m.dim(),
                self.n
            )));
        }
        if m.context() != self.ctx {
            return Err(Error::mismatch(&self.ctx, m.context()));
        }
        if m.is_monomial() {
            return Ok(self.substitute_monomial(m));
        }
        let max_e = self
            .terms
            .keys()
            .flat_map(|mo| mo.exps().iter().copied())
            .max()
            .unwrap_or(0);
        let mut sub = Substitution::new(m, max_e);
        let mut out = Form::zero(self.n, self.d, &self.ctx);
        for (mo, c) in &self.terms {
            let prod = sub.image(mo);
            for (m2, c2) in &prod.terms {
                out.add_term(*m2, c.clone() * c2);
            }
        }
        Ok(out)
    }

    fn substitute_monomial(&self, m: &SquareMatrix<K>) -> Self {
        let n = self.n;
        let images: Vec<Option<(usize, K)>> = (0..n)
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .find(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
            })
            .collect();
        let mut out = Form::zero(n, self.d, &self.ctx);
        'terms: for (mo, c) in &self.terms {
            let mut exps = [0u16; MAX_VARS];
            let mut coeff = c.clone();
            for (i, &e) in mo.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    None => continue 'terms,
                    Some((j, a)) => {
                        exps[*j] += e;
                        coeff = coeff * &a.pow(e as u64);
                    }
                }
            }
            out.add_term(Monomial::from_raw(n, exps), coeff);
        }
        out
    }

    /// The action `f_A(x) = f(A^-1 x)`, so that `f_{AB} = (f_B)_A`.
    pub fn act(&self, a: &SquareMatrix<K>) -> Result<Self> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix on a form in {} variables",
                a.dim(),
                a.dim(),
                self.n
            )));
        }
        if a.context() != self.ctx {
            return Err(Error::mismatch(&self.ctx, a.context()));
        }
        self.substitute(&a.inverse()?)
    }

    pub fn evaluate(&self, point: &[K]) -> Result<K> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.n
            )));
        }
        if let Some(p) = point.iter().find(|p| p.context() != self.ctx) {
            return Err(Error::mismatch(&self.ctx, p.context()));
        }
        Ok(self.evaluate_with(point, |c| c.clone()))
    }

    /// Evaluates at a point of another field, lifting coefficients with
    /// `lift`.
    pub fn evaluate_with<L: Field>(&self, point: &[L], lift: impl Fn(&K) -> L) -> L {
        let lctx = point[0].context();
        let max_e = self
            .terms
            .keys()
            .flat_map(|mo| mo.exps().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let powers: Vec<Vec<L>> = point
            .iter()
            .map(|p| {
                let mut v = vec![L::one_in(&lctx)];
                for k in 1..=max_e {
                    let next = v[k - 1].clone() * p;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = L::zero_in(&lctx);
        for (mo, c) in &self.terms {
            let mut t = lift(c);
            for (i, &e) in mo.exps().iter().enumerate() {
                if e > 0 {
                    t = t * &powers[i][e as usize];
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// `Some(c)` with `self = c * other`, `None` when the forms are not
    /// proportional, and an error when both are zero.
    pub fn proportionality(&self, other: &Self) -> Result<Option<K>> {
        self.check_compatible(other)?;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::Indeterminate),
            (true, false) | (false, true) => return Ok(None),
            _ => {}
        }
        if self.terms.len() != other.terms.len() {
            return Ok(None);
        }
        let (m0, b0) = other.terms.iter().next().expect("nonzero");
        let a0 = match self.terms.get(m0) {
            Some(a) => a,
            None => return Ok(None),
        };
        let c = a0.checked_div(b0).expect("nonzero coefficient");
        for (m, b) in &other.terms {
            match self.terms.get(m) {
                Some(a) if *a == b.clone() * &c => {}
                _ => return Ok(None),
            }
        }
        Ok(Some(c))
    }
}

fn force_add<K: Field>(a: &Form<K>, b: &Form<K>) -> Form<K> {
    let mut out = a.clone();
    for (m, c) in &b.terms {
        out.add_term(*m, c.clone());
    }
    out.d = a.d.max(b.d);
    out
}

/// Images of monomials under `x -> M x`, sharing powers of the linear
/// forms and partial products between calls.
pub(crate) struct Substitution<K: Field> {
    n: usize,
    powers: Vec<Vec<Form<K>>>,
    cache: HashMap<(usize, [u16; MAX_VARS]), Form<K>>,
}

impl<K: Field> Substitution<K> {
    pub(crate) fn new(m: &SquareMatrix<K>, max_exp: u16) -> Self {
        let n = m.dim();
        let ctx = m.context();
        let one = Form::constant(n, K::one_in(&ctx));
        let powers = (0..n)
            .map(|i| {
                let mut l = Form::zero(n, 1, &ctx);
                for j in 0..n {
                    l.add_term(Monomial::variable(n, j), m.get(i, j).clone());
                }
                let mut v = vec![one.clone()];
                for k in 1..=max_exp as usize {
                    let next = v[k - 1].checked_mul(&l).expect("same context");
                    v.push(next);
                }
                v
            })
            .collect();
        Substitution {
            n,
            powers,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn image(&mut self, mo: &Monomial) -> Form<K> {
        self.prefix(mo.raw(), self.n)
    }

    fn prefix(&mut self, exps: &[u16; MAX_VARS], k: usize) -> Form<K> {
        if k == 0 {
            return self.powers[0][0].clone();
        }
        let mut key = [0u16; MAX_VARS];
        key[..k].copy_from_slice(&exps[..k]);
        if let Some(f) = self.cache.get(&(k, key)) {
            return f.clone();
        }
        let prev = self.prefix(exps, k - 1);
        let e = exps[k - 1] as usize;
        let f = if e == 0 {
            prev
        } else {
            prev.checked_mul(&self.powers[k - 1][e]).expect("same context")
        };
        self.cache.insert((k, key), f.clone());
        f
    }
}

impl Form<Cyc> {
    /// The same form with coefficients embedded into a larger conductor.
    pub fn embed(&self, target: &CycContext) -> Result<Self> {
        let mut out = Form::zero(self.n, self.d, target);
        for (m, c) in &self.terms {
            out.add_term(*m, c.embed(target)?);
        }
        Ok(out)
    }
}

impl<K: Field> fmt::Display for Form<K> {
    /// Canonical text accepted back by the form parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.to_string();
            let cs = c.to_string();
            let compound = cs[1..].contains(" + ") || cs[1..].contains(" - ");
            let term = if mono.is_empty() {
                if compound {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if compound {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if k == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        write!(f, "{out}")
    }
}

impl<K: Field> Add<&Form<K>> for &Form<K> {
    type Output = Form<K>;
    /// Panics on incompatible operands; see [`Form::checked_add`].
    fn add(self, rhs: &Form<K>) -> Form<K> {
        self.checked_add(rhs).expect("compatible forms")
    }
}

impl<K: Field> Sub<&Form<K>> for &Form<K> {
    type Output = Form<K>;
    fn sub(self, rhs: &Form<K>) -> Form<K> {
        self.checked_add(&-rhs).expect("compatible forms")
    }
}

impl<K: Field> Mul<&Form<K>> for &Form<K> {
    type Output = Form<K>;
    fn mul(self, rhs: &Form<K>) -> Form<K> {
        self.checked_mul(rhs).expect("compatible forms")
    }
}

impl<K: Field> Neg for &Form<K> {
    type Output = Form<K>;
    fn neg(self) -> Form<K> {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

#[cfg(test)]
mod tests;
