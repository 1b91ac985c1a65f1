//! Eigenspace decompositions of spaces of forms under diagonal and general
//! finite-order actions, the column singularity screen, and the
//! classification of cyclic diagonal subgroups of PGL(4).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{all_monomials, Form, Monomial, SquareMatrix, Substitution};

/// Eigen-index of every degree-`d` monomial under
/// `diag[zeta_q^e_1, ..., zeta_q^e_n]`: the monomial `x^m` maps to
/// `zeta_q^(sum m_i e_i) x^m` under `f -> f(A x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTable {
    q: u64,
    d: u32,
    exps: Vec<u64>,
    entries: BTreeMap<Monomial, u64>,
}

pub fn index_table(exps: &[u64], q: u64, d: u32) -> Result<IndexTable> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be positive".into()));
    }
    if exps.is_empty() || exps.len() > crate::forms::MAX_VARS {
        return Err(Error::InvalidInput(format!(
            "expected 1 to 4 residues, got {}",
            exps.len()
        )));
    }
    let exps: Vec<u64> = exps.iter().map(|e| e % q).collect();
    let entries = all_monomials(exps.len(), d)
        .into_iter()
        .map(|m| {
            let idx = m
                .exps()
                .iter()
                .zip(&exps)
                .fold(0u64, |acc, (&k, &e)| (acc + k as u64 * e) % q);
            (m, idx)
        })
        .collect();
    Ok(IndexTable { q, d, exps, entries })
}

impl IndexTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn entries(&self) -> &BTreeMap<Monomial, u64> {
        &self.entries
    }

    pub fn index(&self, m: &Monomial) -> Option<u64> {
        self.entries.get(m).copied()
    }

    /// Index of the monomial with the given exponents.
    pub fn index_of(&self, exps: &[u16]) -> Option<u64> {
        self.index(&Monomial::new(exps))
    }

    /// Monomials grouped by index; every monomial appears exactly once.
    pub fn fibers(&self) -> BTreeMap<u64, Vec<Monomial>> {
        let mut out: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
        for (m, &j) in &self.entries {
            out.entry(j).or_default().push(*m);
        }
        out
    }
}

/// Monomials spanning the `zeta_q^j` eigenspace.
pub fn monomial_eigenspace(table: &IndexTable, j: u64) -> Vec<Monomial> {
    let j = j % table.q;
    table.entries.iter().filter(|(_, &k)| k == j).map(|(m, _)| *m).collect()
}

/// The monomials `x_i * x_j^(d-1)` whose absence makes the coordinate point
/// `e_j` singular, listed column by column.
pub fn singularity_checking_monomials(n: usize, d: u32) -> Vec<Vec<Monomial>> {
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let mut e = vec![0u16; n];
                    e[j] += (d - 1) as u16;
                    e[i] += 1;
                    Monomial::new(&e)
                })
                .collect()
        })
        .collect()
}

/// Columns `j` (1-based) for which no `x_i x_j^(d-1)` lies in the
/// support; every form with that support is singular at `e_j`.
pub fn singularity_screen(support: &[Monomial], n: usize, d: u32) -> Vec<usize> {
    let set: BTreeSet<&Monomial> = support.iter().collect();
    singularity_checking_monomials(n, d)
        .iter()
        .enumerate()
        .filter(|(_, col)| !col.iter().any(|m| set.contains(m)))
        .map(|(j, _)| j + 1)
        .collect()
}

/// Row-reduced kernel basis of a matrix with `ncols` columns, each vector
/// scaled so its first nonzero entry is 1.
pub fn kernel<K: Field>(mut rows: Vec<Vec<K>>, ncols: usize, ctx: &K::Context) -> Vec<Vec<K>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = v.clone() * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot).skip(c) {
                if p.is_zero() {
                    continue;
                }
                *v = v.clone() - &(f.clone() * p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![K::zero_in(ctx); ncols];
        v[free] = K::one_in(ctx);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[row][free].clone();
        }
        let lead = v.iter().find(|c| !c.is_zero()).cloned().expect("free entry is 1");
        let inv = lead.inverse().expect("nonzero");
        basis.push(v.into_iter().map(|c| c * &inv).collect());
    }
    basis
}

/// Rank of a matrix over a field.
pub fn rank<K: Field>(rows: Vec<Vec<K>>, ncols: usize, ctx: &K::Context) -> usize {
    ncols - kernel(rows, ncols, ctx).len()
}

/// Basis of `{f : f(g x) = rho(g) f(x) for every generator g}` among forms
/// of degree `d` in `n` variables, i.e. `f_{g^-1} = rho(g) f`.
pub fn eigenspace_basis<K: Field>(
    gens: &[SquareMatrix<K>],
    rho: &[K],
    n: usize,
    d: u32,
    ctx: &K::Context,
) -> Result<Vec<Form<K>>> {
    if gens.len() != rho.len() {
        return Err(Error::InvalidInput(format!(
            "{} generators but {} character values",
            gens.len(),
            rho.len()
        )));
    }
    for (g, r) in gens.iter().zip(rho) {
        if g.dim() != n {
            return Err(Error::DimensionMismatch(format!("{}x{} generator", g.dim(), g.dim())));
        }
        if g.context() != *ctx {
            return Err(Error::mismatch(ctx, g.context()));
        }
        if r.context() != *ctx {
            return Err(Error::mismatch(ctx, r.context()));
        }
    }
    let monos = all_monomials(n, d);
    let col_of: BTreeMap<Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut rows: Vec<Vec<K>> = Vec::new();
    for (g, r) in gens.iter().zip(rho) {
        let mut sub = Substitution::new(g, d as u16);
        let mut block = vec![vec![K::zero_in(ctx); monos.len()]; monos.len()];
        for (c, m) in monos.iter().enumerate() {
            for (m2, v) in sub.image(m).terms() {
                block[col_of[m2]][c] = v.clone();
            }
            block[c][c] = block[c][c].clone() - r;
        }
        rows.extend(block.into_iter().filter(|row| row.iter().any(|v| !v.is_zero())));
    }
    let basis = kernel(rows, monos.len(), ctx);
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut f = Form::zero(n, d, ctx);
            for (m, c) in monos.iter().zip(v) {
                f.add_term(*m, c);
            }
            f
        })
        .collect())
}

/// Conjugacy class of a cyclic diagonal subgroup of PGL(4), named by its
/// canonical generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CyclicClass {
    /// `diag[1, 1, z, 1]`.
    D0,
    /// `diag[1, 1, z, z^l]`, `l >= 1`.
    D(u64),
    /// `diag[1, z, z^j, z^l]` with `1 < j < l`.
    DPair(u64, u64),
    /// `diag[1, z, z^j, z^j]`.
    B(u64),
    /// Any other canonical residue vector.
    Other([u64; 4]),
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicClass::D0 => write!(f, "D_0"),
            CyclicClass::D(l) => write!(f, "D_{l}"),
            CyclicClass::DPair(j, l) => write!(f, "D_{{{j},{l}}}"),
            CyclicClass::B(j) => write!(f, "B_{j}"),
            CyclicClass::Other(e) => write!(f, "diag[{},{},{},{}]", e[0], e[1], e[2], e[3]),
        }
    }
}

impl CyclicClass {
    /// Residues of the standard generator of the class.
    pub fn representative(&self) -> [u64; 4] {
        match *self {
            CyclicClass::D0 => [0, 0, 1, 0],
            CyclicClass::D(l) => [0, 0, 1, l],
            CyclicClass::DPair(j, l) => [0, 1, j, l],
            CyclicClass::B(j) => [0, 1, j, j],
            CyclicClass::Other(e) => e,
        }
    }

    fn from_canonical(t: [u64; 4]) -> Self {
        match t {
            [0, 0, 0, 1] => CyclicClass::D0,
            [0, 0, 1, l] => CyclicClass::D(l),
            [0, 1, j, l] if 1 < j && j < l => CyclicClass::DPair(j, l),
            [0, 1, j, l] if 1 < j && j == l => CyclicClass::B(j),
            other => CyclicClass::Other(other),
        }
    }
}

/// Order of `diag[z^e_i]` in PGL with `z` a primitive `q`-th root of unity.
pub fn projective_order(q: u64, exps: &[u64]) -> u64 {
    let g = exps.iter().fold(q, |g, &e| g.gcd(&((e + q - exps[0] % q) % q)));
    q / g
}

/// Lexicographically least sorted residue vector among all permutations,
/// shifts by a constant and multiplications by units of `Z/q`.
pub fn canonical_residues(q: u64, exps: &[u64; 4]) -> [u64; 4] {
    let mut best: Option<[u64; 4]> = None;
    for u in (1..q.max(2)).filter(|u| u.gcd(&q) == 1) {
        let scaled = exps.map(|e| (u * (e % q)) % q);
        for &shift in &scaled {
            let mut t = scaled.map(|e| (e + q - shift) % q);
            t.sort_unstable();
            if best.is_none_or(|b| t < b) {
                best = Some(t);
            }
        }
    }
    best.expect("at least one unit")
}

/// Canonical class of the cyclic group generated by `diag[z^e_1, ..., z^e_4]`.
pub fn classify_cyclic(q: u64, exps: &[u64]) -> Result<CyclicClass> {
    let exps: [u64; 4] = exps
        .try_into()
        .map_err(|_| Error::InvalidInput(format!("expected 4 residues, got {}", exps.len())))?;
    if q < 2 {
        return Err(Error::InvalidInput("q must be at least 2".into()));
    }
    let ord = projective_order(q, &exps);
    if ord != q {
        return Err(Error::InvalidInput(format!(
            "generator has projective order {ord}, not {q}"
        )));
    }
    Ok(CyclicClass::from_canonical(canonical_residues(q, &exps)))
}

/// One canonical class per conjugacy class of cyclic diagonal subgroups of
/// order `q`, sorted.
pub fn class_representatives(q: u64) -> Vec<CyclicClass> {
    let mut out = BTreeSet::new();
    for a in 0..q {
        for b in a..q {
            for c in b..q {
                let t = [0, a, b, c];
                if projective_order(q, &t) == q && canonical_residues(q, &t) == t {
                    out.insert(CyclicClass::from_canonical(t));
                }
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnscreenedPair {
    pub class: String,
    pub index: u64,
}

/// Eigenspaces of every cyclic class of order `q` that pass the column
/// screen, i.e. could contain a nonsingular form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    pub q: u64,
    pub d: u32,
    #[serde(skip)]
    pub classes: usize,
    pub unscreened: Vec<UnscreenedPair>,
}

pub fn invariant_screen_report(q: u64, d: u32) -> Result<ScreenReport> {
    if q < 2 {
        return Err(Error::InvalidInput("q must be at least 2".into()));
    }
    let classes = class_representatives(q);
    let mut unscreened = Vec::new();
    for class in &classes {
        let table = index_table(&class.representative(), q, d)?;
        for (j, fiber) in table.fibers() {
            if singularity_screen(&fiber, 4, d).is_empty() {
                unscreened.push(UnscreenedPair {
                    class: class.to_string(),
                    index: j,
                });
            }
        }
    }
    Ok(ScreenReport {
        q,
        d,
        classes: classes.len(),
        unscreened,
    })
}
