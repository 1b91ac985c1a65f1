//! Finite subgroups of PGL(n) given by exact generators.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::SquareMatrix;

/// Default bound on group orders and closure sizes.
pub const DEFAULT_CAP: usize = 10_000;

/// Invertible matrix up to scalars, stored with its first nonzero entry (in
/// row-major order) scaled to 1. Equality and hashing use that
/// representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMatrix<K: Field> {
    rep: SquareMatrix<K>,
}

impl<K: Field> fmt::Debug for ProjMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rep)
    }
}

fn scale_to_canonical<K: Field>(m: &SquareMatrix<K>) -> SquareMatrix<K> {
    let lead = m.entries().iter().find(|c| !c.is_zero()).expect("nonzero matrix");
    if lead.is_one() {
        m.clone()
    } else {
        m.scale(&lead.inverse().expect("nonzero entry"))
    }
}

impl<K: Field> ProjMatrix<K> {
    /// The class of `m`; fails for singular matrices.
    pub fn new(m: &SquareMatrix<K>) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(ProjMatrix {
            rep: scale_to_canonical(m),
        })
    }

    pub fn identity(n: usize, ctx: &K::Context) -> Self {
        ProjMatrix {
            rep: SquareMatrix::identity(n, ctx),
        }
    }

    pub fn rep(&self) -> &SquareMatrix<K> {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    /// Product of classes; both factors are invertible so no check is needed.
    pub fn mul(&self, other: &Self) -> Self {
        ProjMatrix {
            rep: scale_to_canonical(&(&self.rep * &other.rep)),
        }
    }

    pub fn inverse(&self) -> Self {
        ProjMatrix {
            rep: scale_to_canonical(&self.rep.inverse().expect("invertible representative")),
        }
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }
}

/// Smallest `k >= 1` with `g^k` scalar, up to `cap`.
pub fn proj_order<K: Field>(g: &ProjMatrix<K>, cap: usize) -> Result<usize> {
    let mut p = g.clone();
    let mut k = 1;
    while !p.is_identity() {
        k += 1;
        if k > cap {
            return Err(Error::OrderCapExceeded(cap));
        }
        p = p.mul(g);
    }
    Ok(k)
}

/// A finite group of projective matrices with its elements listed in
/// breadth-first order from the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup<K: Field> {
    generators: Vec<ProjMatrix<K>>,
    elements: Vec<ProjMatrix<K>>,
    index: HashMap<ProjMatrix<K>, usize>,
}

impl<K: Field> FiniteGroup<K> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMatrix<K>] {
        &self.elements
    }

    pub fn generators(&self) -> &[ProjMatrix<K>] {
        &self.generators
    }

    pub fn contains(&self, g: &ProjMatrix<K>) -> bool {
        self.index.contains_key(g)
    }

    /// Histogram of element orders.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut stats = BTreeMap::new();
        for g in &self.elements {
            let k = proj_order(g, self.order()).expect("orders divide the group order");
            *stats.entry(k).or_insert(0) += 1;
        }
        stats
    }

    /// True when `h g h^-1` stays in `sub` for every `g` in `sub` and `h` in
    /// `self`.
    pub fn is_normal(&self, sub: &FiniteGroup<K>) -> Result<bool> {
        if !sub.elements.iter().all(|g| self.contains(g)) {
            return Err(Error::NotSubgroup);
        }
        Ok(self
            .elements
            .iter()
            .all(|h| sub.elements.iter().all(|g| sub.contains(&g.conjugate_by(h)))))
    }

    pub fn intersection_size(&self, other: &FiniteGroup<K>) -> usize {
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.elements.iter().filter(|g| large.contains(g)).count()
    }
}

/// Group generated by `gens` (the identity when empty), enumerated
/// breadth-first; fails once more than `cap` elements appear.
pub fn closure<K: Field>(gens: &[SquareMatrix<K>], n: usize, ctx: &K::Context, cap: usize) -> Result<FiniteGroup<K>> {
    let mut generators = Vec::with_capacity(gens.len());
    for g in gens {
        if g.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} generator in degree {n}",
                g.dim(),
                g.dim()
            )));
        }
        if g.context() != *ctx {
            return Err(Error::mismatch(ctx, g.context()));
        }
        generators.push(ProjMatrix::new(g)?);
    }
    let id = ProjMatrix::identity(n, ctx);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for s in &generators {
            let h = elements[k].mul(s);
            if index.contains_key(&h) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::ClosureCapExceeded(cap));
            }
            index.insert(h.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }
    Ok(FiniteGroup {
        generators,
        elements,
        index,
    })
}
