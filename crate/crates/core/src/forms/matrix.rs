use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::field::{Cyc, CycContext, Field};

/// Dense square matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<K: Field> {
    n: usize,
    data: Vec<K>,
}

impl<K: Field> fmt::Debug for SquareMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> fmt::Display for SquareMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<K: Field> SquareMatrix<K> {
    /// Builds a matrix from rows; all rows must have length `rows.len()` and
    /// share one context.
    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let ctx = rows[0][0].context();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {n}x{n} matrix",
                    row.len()
                )));
            }
            for c in row {
                if c.context() != ctx {
                    return Err(Error::mismatch(&ctx, c.context()));
                }
                data.push(c);
            }
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn identity(n: usize, ctx: &K::Context) -> Self {
        SquareMatrix::diagonal(&vec![K::one_in(ctx); n])
    }

    pub fn diagonal(entries: &[K]) -> Self {
        let n = entries.len();
        let ctx = entries[0].context();
        let mut data = vec![K::zero_in(&ctx); n * n];
        for (i, c) in entries.iter().enumerate() {
            data[i * n + i] = c.clone();
        }
        SquareMatrix { n, data }
    }

    /// Matrix whose column `j` is `c_j * e_{r_j}` for `columns[j] = (r_j, c_j)`
    /// with 0-based row indices.
    pub fn from_columns(columns: &[(usize, K)]) -> Self {
        let n = columns.len();
        let ctx = columns[0].1.context();
        let mut data = vec![K::zero_in(&ctx); n * n];
        for (j, (r, c)) in columns.iter().enumerate() {
            data[r * n + j] = c.clone();
        }
        SquareMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> K::Context {
        self.data[0].context()
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<K>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> SquareMatrix<L> {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let data = (0..n * n).map(|k| self.data[(k % n) * n + k / n].clone()).collect();
        SquareMatrix { n, data }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|a| a.clone() * c)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, other.n)));
        }
        if self.context() != other.context() {
            return Err(Error::mismatch(self.context(), other.context()));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.n;
        let ctx = self.context();
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = K::zero_in(&ctx);
                for k in 0..n {
                    let a = &self.data[i * n + k];
                    let b = &other.data[k * n + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + &(a.clone() * b);
                    }
                }
                data.push(acc);
            }
        }
        SquareMatrix { n, data }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = SquareMatrix::identity(self.n, &self.context());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> K {
        bareiss_det(self.rows())
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let ctx = self.context();
        let mut a = self.rows();
        let mut inv = SquareMatrix::<K>::identity(n, &ctx).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = a[col][col].inverse().ok_or(Error::SingularMatrix)?;
            for j in 0..n {
                a[col][j] = a[col][j].clone() * &p_inv;
                inv[col][j] = inv[col][j].clone() * &p_inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..n {
                    let t = factor.clone() * &a[col][j];
                    a[r][j] = a[r][j].clone() - &t;
                    let t = factor.clone() * &inv[col][j];
                    inv[r][j] = inv[r][j].clone() - &t;
                }
            }
        }
        SquareMatrix::from_rows(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the matrix equals `c * E`.
    pub fn scalar_value(&self) -> Option<K> {
        let n = self.n;
        let c = self.data[0].clone();
        for i in 0..n {
            for j in 0..n {
                let e = &self.data[i * n + j];
                let ok = if i == j { *e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// `Some(c)` with `self = c * other`, when such a nonzero `c` exists.
    pub fn ratio_to(&self, other: &Self) -> Option<K> {
        if self.n != other.n || self.context() != other.context() {
            return None;
        }
        let k = other.data.iter().position(|c| !c.is_zero())?;
        let c = self.data[k].checked_div(&other.data[k])?;
        if c.is_zero() {
            return None;
        }
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| *a == b.clone() * &c)
            .then_some(c)
    }

    /// True when every row has at most one nonzero entry (diagonal and
    /// signed permutation matrices, among others).
    pub fn is_monomial(&self) -> bool {
        (0..self.n).all(|i| self.row(i).iter().filter(|c| !c.is_zero()).count() <= 1)
    }
}

impl SquareMatrix<Cyc> {
    pub fn embed(&self, target: &CycContext) -> Result<Self> {
        let data = self.data.iter().map(|c| c.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(SquareMatrix { n: self.n, data })
    }
}

impl<K: Field> Mul<&SquareMatrix<K>> for &SquareMatrix<K> {
    type Output = SquareMatrix<K>;

    /// Panics on dimension or context mismatch; see
    /// [`SquareMatrix::checked_mul`].
    fn mul(self, rhs: &SquareMatrix<K>) -> SquareMatrix<K> {
        self.checked_mul(rhs).expect("matrix product operands must agree")
    }
}

/// Determinant of a square array by Bareiss elimination with row pivoting.
pub fn bareiss_det<K: Field>(mut a: Vec<Vec<K>>) -> K {
    let n = a.len();
    let ctx = a[0][0].context();
    let mut sign_flip = false;
    let mut prev = K::one_in(&ctx);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return K::zero_in(&ctx),
            }
        }
        let prev_inv = prev.inverse().expect("Bareiss pivot is nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].clone() * &a[k][k] - a[i][k].clone() * &a[k][j];
                a[i][j] = t * &prev_inv;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}
