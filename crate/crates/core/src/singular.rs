//! Exact singularity criteria for the quartic families, resultants and
//! critical-point checks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{context, Cyc, CycContext, Field, UniPoly};
use crate::forms::{bareiss_det, Form};

/// Sylvester matrix of `p` and `q`: `deg q` shifted rows of the
/// coefficients of `p` (highest degree first), then `deg p` rows of `q`.
pub fn sylvester_matrix<K: Field>(p: &UniPoly<K>, q: &UniPoly<K>) -> Result<Vec<Vec<K>>> {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return Err(Error::InvalidInput("resultant of the zero polynomial".into()));
    };
    let ctx = p.context();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, shifts) in [(p, m, n), (q, n, m)] {
        for s in 0..shifts {
            let mut row = vec![K::zero_in(ctx); size];
            for k in 0..=deg {
                row[s + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Resultant of two univariate polynomials; zero iff they share a root over
/// the algebraic closure.
pub fn resultant<K: Field>(p: &UniPoly<K>, q: &UniPoly<K>) -> Result<K> {
    if p.context() != q.context() {
        return Err(Error::InvalidInput("polynomials over different fields".into()));
    }
    let rows = sylvester_matrix(p, q)?;
    if rows.is_empty() {
        return Ok(K::one_in(p.context()));
    }
    Ok(bareiss_det(rows))
}

/// The two halves of the quintic criterion, `R = R0^2 - R1^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticCriterion<K: Field> {
    pub r0: K,
    pub r1: K,
    pub r: K,
}

fn check_contexts<K: Field>(values: &[&K]) -> Result<()> {
    let ctx = values[0].context();
    for v in &values[1..] {
        if v.context() != ctx {
            return Err(Error::mismatch(&ctx, v.context()));
        }
    }
    Ok(())
}

/// R0(u,v,w) = 16 - 18(u+v)w + 48u^2v^2 + 20uvw^2.
pub fn r0<K: Field>(u: &K, v: &K, w: &K) -> K {
    let ctx = u.context();
    let c = |n: i64| K::from_int_in(&ctx, n);
    let s = u.clone() + v;
    let uv = u.clone() * v;
    c(16) - c(18) * &s * w + c(48) * &uv * &uv + c(20) * &uv * w * w
}

/// R1(u,v,w) = 27(u^2+v^2) + 6uv - w^2 - 36(u+v)uvw + (u+v)w^3 - 16u^3v^3
/// + 8u^2v^2w^2 - uvw^4.
pub fn r1<K: Field>(u: &K, v: &K, w: &K) -> K {
    let ctx = u.context();
    let c = |n: i64| K::from_int_in(&ctx, n);
    let s = u.clone() + v;
    let uv = u.clone() * v;
    let w2 = w.clone() * w;
    let uv2 = uv.clone() * &uv;
    c(27) * &(u.clone() * u + v.clone() * v) + c(6) * &uv - w2.clone() - c(36) * &s * &uv * w + s * &w2 * w
        - c(16) * &uv2 * &uv
        + c(8) * &uv2 * &w2
        - uv * &w2 * &w2
}

/// Exact value of the criterion polynomial at `(mu, nu, lam)`.
pub fn r_evaluate<K: Field>(mu: &K, nu: &K, lam: &K) -> Result<QuinticCriterion<K>> {
    check_contexts(&[mu, nu, lam])?;
    let r0 = r0(mu, nu, lam);
    let r1 = r1(mu, nu, lam);
    let r = r0.clone() * &r0 - r1.clone() * &r1;
    Ok(QuinticCriterion { r0, r1, r })
}

/// One of the three pencils with a closed-form singularity criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    /// x^3y + y^3z + z^3t + t^3x + mu x^2z^2 + nu y^2t^2 + lam xyzt
    F5 { mu: Cyc, nu: Cyc, lam: Cyc },
    /// x^3y + y^3z + z^3x + t^4 + lam xyzt
    F7 { lam: Cyc },
    /// x^4 + y^4 + z^4 + t^4 + lam xyzt
    M { lam: Cyc },
}

impl FamilyParams {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyParams::F5 { .. } => "F5",
            FamilyParams::F7 { .. } => "F7",
            FamilyParams::M { .. } => "M",
        }
    }

    pub fn context(&self) -> CycContext {
        match self {
            FamilyParams::F5 { mu, .. } => mu.ctx().clone(),
            FamilyParams::F7 { lam } | FamilyParams::M { lam } => lam.ctx().clone(),
        }
    }

    /// Parses `name` with comma-separated parameters already read as scalars.
    pub fn from_parts(name: &str, params: Vec<Cyc>) -> Result<Self> {
        let bad = |reason: &str| Error::BadParams {
            id: name.to_string(),
            reason: reason.to_string(),
        };
        match (name, params.as_slice()) {
            ("F5", [mu, nu, lam]) => {
                check_contexts(&[mu, nu, lam])?;
                Ok(FamilyParams::F5 {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    lam: lam.clone(),
                })
            }
            ("F5", _) => Err(bad("expected mu,nu,lam")),
            ("F7", [lam]) => Ok(FamilyParams::F7 { lam: lam.clone() }),
            ("M", [lam]) => Ok(FamilyParams::M { lam: lam.clone() }),
            ("F7" | "M", _) => Err(bad("expected lam")),
            _ => Err(Error::UnknownId(name.to_string())),
        }
    }

    pub fn form(&self) -> Form<Cyc> {
        let ctx = self.context();
        let one = Cyc::int(&ctx, 1);
        let terms: Vec<([u16; 4], Cyc)> = match self {
            FamilyParams::F5 { mu, nu, lam } => vec![
                ([3, 1, 0, 0], one.clone()),
                ([0, 3, 1, 0], one.clone()),
                ([0, 0, 3, 1], one.clone()),
                ([1, 0, 0, 3], one),
                ([2, 0, 2, 0], mu.clone()),
                ([0, 2, 0, 2], nu.clone()),
                ([1, 1, 1, 1], lam.clone()),
            ],
            FamilyParams::F7 { lam } => vec![
                ([3, 1, 0, 0], one.clone()),
                ([0, 3, 1, 0], one.clone()),
                ([1, 0, 3, 0], one.clone()),
                ([0, 0, 0, 4], one),
                ([1, 1, 1, 1], lam.clone()),
            ],
            FamilyParams::M { lam } => vec![
                ([4, 0, 0, 0], one.clone()),
                ([0, 4, 0, 0], one.clone()),
                ([0, 0, 4, 0], one.clone()),
                ([0, 0, 0, 4], one),
                ([1, 1, 1, 1], lam.clone()),
            ],
        };
        Form::from_terms(4, &ctx, terms.iter().map(|(e, c)| (&e[..], c.clone()))).expect("family terms are quartic")
    }

    /// The scalar whose vanishing is the criterion: `R` for F5 and
    /// `256 - lam^4` for the other two pencils.
    pub fn criterion_value(&self) -> Cyc {
        match self {
            FamilyParams::F5 { mu, nu, lam } => r_evaluate(mu, nu, lam).expect("contexts checked on construction").r,
            FamilyParams::F7 { lam } | FamilyParams::M { lam } => Cyc::int(lam.ctx(), 256) - lam.pow(4),
        }
    }
}

/// Closed-form singularity criterion of the family.
pub fn family_is_singular(fp: &FamilyParams) -> bool {
    fp.criterion_value().is_zero()
}

/// True iff every partial derivative of `f` vanishes at `point`.
pub fn critical_point_check<K: Field>(f: &Form<K>, point: &[K]) -> Result<bool> {
    if point.len() != f.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "point with {} coordinates for {} variables",
            point.len(),
            f.nvars()
        )));
    }
    if point.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidInput("the zero vector is not a point".into()));
    }
    for p in f.partials() {
        if !p.evaluate(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The cubics in `z` whose common roots give the singular points
/// `(y^3 z, y, z, 1)` of the quintic family for a fixed `y` with
/// `y^10 = 1`.
pub fn quintic_cubics(mu: &Cyc, nu: &Cyc, lam: &Cyc, y: &Cyc) -> (UniPoly<Cyc>, UniPoly<Cyc>) {
    let ctx = y.ctx();
    let c = |n: i64| Cyc::int(ctx, n);
    let yp = |k: u64| y.pow(k);
    let h2 = UniPoly::new(ctx, vec![c(2) * nu * &yp(2), c(3) * &yp(3), lam.clone() * &yp(4), c(1)]);
    let h3 = UniPoly::new(ctx, vec![yp(7), lam.clone() * &yp(8), c(3) * &yp(4), c(2) * mu]);
    (h2, h3)
}

/// Six by six Sylvester matrix of the two cubics, as displayed in the
/// derivation of the criterion.
pub fn quintic_sylvester(mu: &Cyc, nu: &Cyc, lam: &Cyc, y: &Cyc) -> Vec<Vec<Cyc>> {
    let (h2, h3) = quintic_cubics(mu, nu, lam, y);
    sylvester_matrix(&h2, &h3).expect("both cubics are nonzero")
}

fn is_tenth_root(y: &Cyc) -> bool {
    y.pow(10).is_one()
}

/// Checks `det S = 4y (R0 + y^5 R1)` for a tenth root of unity `y`.
pub fn det_s_identity_check(mu: &Cyc, nu: &Cyc, lam: &Cyc, y: &Cyc) -> Result<bool> {
    check_contexts(&[mu, nu, lam, y])?;
    if !is_tenth_root(y) {
        return Err(Error::InvalidInput("y must satisfy y^10 = 1".into()));
    }
    let det = bareiss_det(quintic_sylvester(mu, nu, lam, y));
    let q = r_evaluate(mu, nu, lam)?;
    let rhs = Cyc::int(y.ctx(), 4) * y * &(q.r0 + y.pow(5) * &q.r1);
    Ok(det == rhs)
}

/// Outcome of searching for an explicit singular point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A verified critical point, as scalar text.
    Point { coords: Vec<String> },
    /// The criterion says singular but the common roots lie outside the
    /// working field.
    CriterionOnly { reason: String },
    /// No candidate point; expected exactly when the criterion says
    /// nonsingular.
    None,
}

fn point_text(p: &[Cyc]) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

fn lcm(a: u32, b: u32) -> u32 {
    a / num_integer::gcd(a, b) * b
}

/// Searches for an explicit singular point of the family and verifies it
/// with [`critical_point_check`].
///
/// For F5, every `y` with `y^10 = 1` is tried and the common roots of the
/// two cubics come from their gcd; a linear gcd gives the point
/// `(y^3 z, y, z, 1)`. For F7 and M the candidate is `(1, 1, 1, -4/lam)`.
pub fn witness_search(fp: &FamilyParams) -> Result<Witness> {
    match fp {
        FamilyParams::F5 { mu, nu, lam } => {
            let ctx = context(lcm(mu.conductor(), 10))?;
            let (mu, nu, lam) = (mu.embed(&ctx)?, nu.embed(&ctx)?, lam.embed(&ctx)?);
            let f = FamilyParams::F5 {
                mu: mu.clone(),
                nu: nu.clone(),
                lam: lam.clone(),
            }
            .form();
            let step = i64::from(ctx.conductor() / 10);
            let mut nonlinear = None;
            for k in 0..10 {
                let y = Cyc::zeta(&ctx, k * step);
                let (h2, h3) = quintic_cubics(&mu, &nu, &lam, &y);
                let g = h2.gcd(&h3);
                match g.degree() {
                    Some(0) | None => continue,
                    Some(1) => {
                        let z = -g.coeff(0);
                        let point = vec![y.pow(3) * &z, y.clone(), z, Cyc::int(&ctx, 1)];
                        if critical_point_check(&f, &point)? {
                            return Ok(Witness::Point {
                                coords: point_text(&point),
                            });
                        }
                        return Err(Error::InvalidInput(format!("candidate {point:?} is not critical")));
                    }
                    Some(d) => nonlinear = Some((k, d)),
                }
            }
            Ok(match nonlinear {
                Some((k, d)) => Witness::CriterionOnly {
                    reason: format!("common factor of degree {d} at y = e(10,{k})"),
                },
                None => Witness::None,
            })
        }
        FamilyParams::F7 { lam } | FamilyParams::M { lam } => {
            if !family_is_singular(fp) {
                return Ok(Witness::None);
            }
            let ctx = lam.ctx();
            let one = Cyc::int(ctx, 1);
            let last = Cyc::int(ctx, -4).try_div(lam)?;
            let point = vec![one.clone(), one.clone(), one, last];
            if critical_point_check(&fp.form(), &point)? {
                Ok(Witness::Point {
                    coords: point_text(&point),
                })
            } else {
                Err(Error::InvalidInput(format!("candidate {point:?} is not critical")))
            }
        }
    }
}

/// JSON summary used by the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub singular: bool,
    #[serde(rename = "R")]
    pub r: String,
}

pub fn singular_report(fp: &FamilyParams) -> SingularReport {
    let value = fp.criterion_value();
    SingularReport {
        singular: value.is_zero(),
        r: value.to_string(),
    }
}

#[cfg(test)]
mod tests;
