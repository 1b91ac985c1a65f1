//! Presentations checked on explicit matrices.

use crate::error::{Error, Result};
use crate::field::{Cyc, Field};
use crate::forms::SquareMatrix;
use crate::projgroup::{proj_order, ProjMatrix};

/// The symmetric matrix
///
/// ```text
/// [α β γ τ]
/// [β γ α τ]
/// [γ α β τ]
/// [τ τ τ 1]
/// ```
pub fn make_z(tau: &Cyc, alpha: &Cyc, beta: &Cyc, gamma: &Cyc) -> Result<SquareMatrix<Cyc>> {
    for v in [alpha, beta, gamma] {
        if v.ctx() != tau.ctx() {
            return Err(Error::mismatch(tau.ctx(), v.ctx()));
        }
    }
    let one = Cyc::int(tau.ctx(), 1);
    let (a, b, g, t) = (alpha.clone(), beta.clone(), gamma.clone(), tau.clone());
    SquareMatrix::from_rows(vec![
        vec![a.clone(), b.clone(), g.clone(), t.clone()],
        vec![b.clone(), g.clone(), a.clone(), t.clone()],
        vec![g, a, b, t.clone()],
        vec![t.clone(), t.clone(), t, one],
    ])
}

/// True when the classes of `x`, `y`, `z` satisfy
/// `x^7 = y^3 = z^2 = 1`, `y^-1 x y = x^2`, `z^-1 y z = y^-1` and
/// `z x z = x^-1 z x^-1` with the stated orders exact. Singular or
/// mismatched inputs give `false`.
pub fn verify_psl27<K: Field>(x: &SquareMatrix<K>, y: &SquareMatrix<K>, z: &SquareMatrix<K>) -> bool {
    let (Ok(x), Ok(y), Ok(z)) = (ProjMatrix::new(x), ProjMatrix::new(y), ProjMatrix::new(z)) else {
        return false;
    };
    let n = x.rep().dim();
    if y.rep().dim() != n || z.rep().dim() != n {
        return false;
    }
    let ctx = x.rep().context();
    if y.rep().context() != ctx || z.rep().context() != ctx {
        return false;
    }
    let orders = [(&x, 7), (&y, 3), (&z, 2)];
    if !orders.iter().all(|(g, k)| proj_order(g, 8).ok() == Some(*k)) {
        return false;
    }
    let (xi, yi) = (x.inverse(), y.inverse());
    yi.mul(&x).mul(&y) == x.mul(&x) && z.inverse().mul(&y).mul(&z) == yi && z.mul(&x).mul(&z) == xi.mul(&z).mul(&xi)
}

/// Projective orders of each generator, in order; errors on singular input.
pub fn generator_orders<K: Field>(gens: &[SquareMatrix<K>], cap: usize) -> Result<Vec<usize>> {
    gens.iter().map(|g| proj_order(&ProjMatrix::new(g)?, cap)).collect()
}

/// True when `t` holds four involutions with `(t_i t_{i+1})` of order 3 and
/// `(t_i t_j)` of order 2 for `|i - j| >= 2`, all up to scalars.
pub fn verify_s5_coxeter<K: Field>(t: &[SquareMatrix<K>]) -> bool {
    if t.len() != 4 {
        return false;
    }
    let Ok(p) = t.iter().map(ProjMatrix::new).collect::<Result<Vec<_>>>() else {
        return false;
    };
    let n = p[0].rep().dim();
    let ctx = p[0].rep().context();
    if p.iter().any(|g| g.rep().dim() != n || g.rep().context() != ctx) {
        return false;
    }
    let ord = |g: &ProjMatrix<K>| proj_order(g, 8).ok();
    for i in 0..4 {
        if ord(&p[i]) != Some(2) {
            return false;
        }
        for j in i + 1..4 {
            let want = if j == i + 1 { 3 } else { 2 };
            if ord(&p[i].mul(&p[j])) != Some(want) {
                return false;
            }
        }
    }
    true
}
