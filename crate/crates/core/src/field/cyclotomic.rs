use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, UniPoly};
use crate::error::{Error, Result};

/// Largest conductor accepted by [`context`].
pub const CYCLOTOMIC_CAP: u32 = 5040;

struct CycData {
    n: u32,
    phi: usize,
    /// Monic integer coefficients of the cyclotomic polynomial, lowest first.
    modulus: Vec<BigInt>,
    /// Nonzero non-leading coefficients of the modulus.
    sparse: Vec<(usize, BigInt)>,
    modulus_q: UniPoly<BigRational>,
}

/// Handle on `Q(zeta_N)`; cheap to clone, compared by conductor.
#[derive(Clone)]
pub struct CycContext(Arc<CycData>);

impl PartialEq for CycContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.n == other.0.n
    }
}

impl Eq for CycContext {}

impl fmt::Debug for CycContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.n)
    }
}

impl CycContext {
    pub fn conductor(&self) -> u32 {
        self.0.n
    }

    /// Degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.0.phi
    }

    /// Coefficients of the cyclotomic polynomial, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    fn reduce(&self, poly: &mut Vec<BigInt>) {
        let phi = self.0.phi;
        for k in (phi..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for (i, m) in &self.0.sparse {
                poly[k - phi + i] -= &c * m;
            }
        }
        poly.resize(phi, BigInt::zero());
    }
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (db..rem.len()).rev() {
        let c = std::mem::take(&mut rem[k]);
        if c.is_zero() {
            continue;
        }
        for (i, m) in b.iter().enumerate().take(db) {
            rem[k - db + i] -= &c * m;
        }
        quot[k - db] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn moebius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn x_pow_minus_one(d: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d as usize + 1];
    v[0] = BigInt::from(-1);
    v[d as usize] = BigInt::one();
    v
}

/// Integer coefficients of the `n`-th cyclotomic polynomial.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let divisors: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut num = vec![BigInt::one()];
    for &d in &divisors {
        if moebius(n / d) == 1 {
            num = int_poly_mul(&num, &x_pow_minus_one(d));
        }
    }
    for &d in &divisors {
        if moebius(n / d) == -1 {
            num = int_poly_div_exact(&num, &x_pow_minus_one(d));
        }
    }
    num
}

fn registry() -> &'static Mutex<HashMap<u32, CycContext>> {
    static REG: OnceLock<Mutex<HashMap<u32, CycContext>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared context for `Q(zeta_n)`.
pub fn context(n: u32) -> Result<CycContext> {
    if n == 0 {
        return Err(Error::InvalidConductor);
    }
    if n > CYCLOTOMIC_CAP {
        return Err(Error::InvalidInput(format!(
            "conductor {n} exceeds the supported maximum {CYCLOTOMIC_CAP}"
        )));
    }
    if let Some(ctx) = registry().lock().unwrap().get(&n) {
        return Ok(ctx.clone());
    }
    let modulus = cyclotomic_poly(n);
    let phi = modulus.len() - 1;
    let sparse = modulus[..phi]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let modulus_q = UniPoly::new(
        &(),
        modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    );
    let ctx = CycContext(Arc::new(CycData {
        n,
        phi,
        modulus,
        sparse,
        modulus_q,
    }));
    Ok(registry().lock().unwrap().entry(n).or_insert(ctx).clone())
}

/// Element of `Q(zeta_N)` in the power basis `1, z, ..., z^(phi-1)`, stored
/// as integer numerators over one positive common denominator in lowest
/// terms.
#[derive(Clone)]
pub struct Cyc {
    ctx: CycContext,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyc {}

impl Hash for Cyc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.conductor().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {:?}", self.ctx)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyc {
    /// Canonical text accepted back by the scalar parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.ctx.conductor();
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if Zero::is_zero(&c) {
                continue;
            }
            let text = if k == 0 {
                fmt_rational(&c)
            } else {
                let z = format!("e({n},{k})");
                if One::is_one(&c) {
                    z
                } else if One::is_one(&-c.clone()) {
                    format!("-{z}")
                } else {
                    format!("{}*{z}", fmt_rational(&c))
                }
            };
            parts.push(text);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        write!(f, "{out}")
    }
}

impl Cyc {
    fn from_parts(ctx: &CycContext, mut num: Vec<BigInt>, mut den: BigInt) -> Cyc {
        if num.len() > ctx.degree() {
            ctx.reduce(&mut num);
        } else {
            num.resize(ctx.degree(), BigInt::zero());
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if num.iter().all(Zero::is_zero) {
            return Cyc {
                ctx: ctx.clone(),
                num,
                den: BigInt::one(),
            };
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        Cyc {
            ctx: ctx.clone(),
            num,
            den,
        }
    }

    /// Element with the given power-basis coefficients; longer inputs are
    /// reduced modulo the cyclotomic polynomial.
    pub fn from_coeffs(ctx: &CycContext, coeffs: &[BigRational]) -> Cyc {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Cyc::from_parts(ctx, num, den)
    }

    pub fn from_int_coeffs(ctx: &CycContext, coeffs: &[i64]) -> Cyc {
        Cyc::from_parts(ctx, coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn rational(ctx: &CycContext, q: &BigRational) -> Cyc {
        let mut num = vec![BigInt::zero(); ctx.degree()];
        num[0] = q.numer().clone();
        Cyc::from_parts(ctx, num, q.denom().clone())
    }

    pub fn int(ctx: &CycContext, n: i64) -> Cyc {
        Cyc::rational(ctx, &BigRational::from_integer(n.into()))
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn zeta(ctx: &CycContext, k: i64) -> Cyc {
        let n = ctx.conductor() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut num = vec![BigInt::zero(); k + 1];
        num[k] = BigInt::one();
        Cyc::from_parts(ctx, num, BigInt::one())
    }

    pub fn ctx(&self) -> &CycContext {
        &self.ctx
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.conductor()
    }

    /// Power-basis coefficients (length equals the field degree).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    fn scale_int(&self, num: &BigInt, den: &BigInt) -> Cyc {
        Cyc::from_parts(&self.ctx, self.num.iter().map(|c| c * num).collect(), &self.den * den)
    }

    fn check(&self, other: &Cyc) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::mismatch(&self.ctx, &other.ctx))
        }
    }

    pub fn checked_add(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_sub(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        Ok(self.add_unchecked(other, true))
    }

    pub fn checked_mul(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        let inv = other.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_unchecked(&inv))
    }

    fn add_unchecked(&self, other: &Cyc, negate: bool) -> Cyc {
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            return Cyc::from_parts(&self.ctx, num, self.den.clone());
        }
        let num = {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        Cyc::from_parts(&self.ctx, num, &self.den * &other.den)
    }

    fn mul_unchecked(&self, other: &Cyc) -> Cyc {
        if other.is_rational() {
            return self.scale_int(&other.num[0], &other.den);
        }
        if self.is_rational() {
            return other.scale_int(&self.num[0], &self.den);
        }
        let prod = int_poly_mul(&self.num, &other.num);
        Cyc::from_parts(&self.ctx, prod, &self.den * &other.den)
    }

    fn inverse_impl(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Cyc::from_parts(
                &self.ctx,
                {
                    let mut v = vec![BigInt::zero(); self.ctx.degree()];
                    v[0] = self.den.clone();
                    v
                },
                self.num[0].clone(),
            ));
        }
        let a = UniPoly::new(
            &(),
            self.num.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        );
        let inv = a.inverse_mod(&self.ctx.0.modulus_q)?;
        let mut coeffs = inv.coeffs().to_vec();
        let den = BigRational::from_integer(self.den.clone());
        for c in coeffs.iter_mut() {
            *c = &*c * &den;
        }
        Some(Cyc::from_coeffs(&self.ctx, &coeffs))
    }

    /// Image under `zeta_N -> zeta_M^(M/N)`; requires `N | M`.
    pub fn embed(&self, target: &CycContext) -> Result<Cyc> {
        let n = self.conductor();
        let m = target.conductor();
        if !m.is_multiple_of(n) {
            return Err(Error::NotDivisible {
                source_conductor: n,
                target: m,
            });
        }
        if n == m {
            return Ok(self.clone());
        }
        let step = (m / n) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (k, c) in self.num.iter().enumerate() {
            num[k * step] = c.clone();
        }
        Ok(Cyc::from_parts(target, num, self.den.clone()))
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Cyc {
        let mut acc = Cyc::zero_in(&self.ctx);
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                let z = Cyc::zeta(&self.ctx, -(k as i64));
                acc = acc + z.scale_int(c, &BigInt::one());
            }
        }
        acc.scale_int(&BigInt::one(), &self.den)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyc> for &Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &Cyc) -> Cyc {
                assert!(
                    self.ctx == rhs.ctx,
                    "conductor mismatch: {:?} vs {:?}",
                    self.ctx,
                    rhs.ctx
                );
                $body(self, rhs)
            }
        }
        impl $trait<&Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &Cyc) -> Cyc {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<Cyc> for &Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyc, b: &Cyc| a.add_unchecked(b, false));
forward_binop!(Sub, sub, |a: &Cyc, b: &Cyc| a.add_unchecked(b, true));
forward_binop!(Mul, mul, |a: &Cyc, b: &Cyc| a.mul_unchecked(b));

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Field for Cyc {
    type Context = CycContext;

    fn context(&self) -> CycContext {
        self.ctx.clone()
    }

    fn zero_in(ctx: &CycContext) -> Self {
        Cyc {
            ctx: ctx.clone(),
            num: vec![BigInt::zero(); ctx.degree()],
            den: BigInt::one(),
        }
    }

    fn one_in(ctx: &CycContext) -> Self {
        Cyc::int(ctx, 1)
    }

    fn from_rational_in(ctx: &CycContext, q: &BigRational) -> Self {
        Cyc::rational(ctx, q)
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.is_rational()
    }

    fn inverse(&self) -> Option<Self> {
        self.inverse_impl()
    }
}

/// Named algebraic constants with fixed cyclotomic expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    /// `zeta_4`.
    I,
    /// `zeta_3`.
    Omega,
    /// `zeta_8 + zeta_8^-1`.
    Sqrt2,
    /// `zeta_12 + zeta_12^-1`.
    Sqrt3,
    /// `1 + 2 zeta_5 + 2 zeta_5^4`.
    Sqrt5,
    /// `-e - e^2 + e^3 - e^4 + e^5 + e^6` with `e = zeta_7`.
    SqrtM7,
}

impl Constant {
    pub const ALL: [Constant; 6] = [
        Constant::I,
        Constant::Omega,
        Constant::Sqrt2,
        Constant::Sqrt3,
        Constant::Sqrt5,
        Constant::SqrtM7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::I => "i",
            Constant::Omega => "w",
            Constant::Sqrt2 => "sqrt2",
            Constant::Sqrt3 => "sqrt3",
            Constant::Sqrt5 => "sqrt5",
            Constant::SqrtM7 => "sqrtm7",
        }
    }

    pub fn from_name(name: &str) -> Option<Constant> {
        match name {
            "i" => Some(Constant::I),
            "w" | "omega" => Some(Constant::Omega),
            "sqrt2" => Some(Constant::Sqrt2),
            "sqrt3" => Some(Constant::Sqrt3),
            "sqrt5" => Some(Constant::Sqrt5),
            "sqrtm7" | "sqrt_m7" => Some(Constant::SqrtM7),
            _ => None,
        }
    }
}

pub fn minimal_conductor(c: Constant) -> u32 {
    match c {
        Constant::I => 4,
        Constant::Omega => 3,
        Constant::Sqrt2 => 8,
        Constant::Sqrt3 => 12,
        Constant::Sqrt5 => 5,
        Constant::SqrtM7 => 7,
    }
}

/// The named constant inside the given field.
pub fn known_constant(c: Constant, ctx: &CycContext) -> Result<Cyc> {
    let needed = minimal_conductor(c);
    if !ctx.conductor().is_multiple_of(needed) {
        return Err(Error::InsufficientConductor {
            name: c.name().to_string(),
            needed,
            conductor: ctx.conductor(),
        });
    }
    let base = context(needed)?;
    let z = |k: i64| Cyc::zeta(&base, k);
    let value = match c {
        Constant::I | Constant::Omega => z(1),
        Constant::Sqrt2 | Constant::Sqrt3 => z(1) + z(-1),
        Constant::Sqrt5 => Cyc::int(&base, 1) + (z(1) + z(4)) * Cyc::int(&base, 2),
        Constant::SqrtM7 => -z(1) - z(2) + z(3) - z(4) + z(5) + z(6),
    };
    value.embed(ctx)
}
