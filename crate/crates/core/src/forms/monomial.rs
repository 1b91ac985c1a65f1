use std::cmp::Ordering;
use std::fmt;

pub const MAX_VARS: usize = 4;

/// Exponent vector of a monomial in at most [`MAX_VARS`] variables.
///
/// Ordered lexicographically with higher powers of earlier variables first,
/// so `x^4 < x^3*y < ... < t^4` in iteration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    exps: [u16; MAX_VARS],
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.exps.cmp(&self.exps).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names used for `n` variables.
pub fn variable_names(n: usize) -> &'static [&'static str] {
    const NAMES: [&str; 4] = ["x", "y", "z", "t"];
    if n == 4 {
        &NAMES
    } else {
        &NAMES[..n.min(3)]
    }
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut raw = [0u16; MAX_VARS];
        raw[..exps.len()].copy_from_slice(exps);
        Monomial {
            n: exps.len() as u8,
            exps: raw,
        }
    }

    pub(crate) fn from_raw(n: usize, exps: [u16; MAX_VARS]) -> Self {
        Monomial { n: n as u8, exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial::from_raw(n, [0; MAX_VARS])
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = [0u16; MAX_VARS];
        exps[i] = 1;
        Monomial::from_raw(n, exps)
    }

    pub fn nvars(&self) -> usize {
        self.n as usize
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.n as usize]
    }

    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps) {
            *a += b;
        }
        Monomial { n: self.n, exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            write!(f, "1")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Monomial {
    /// `x^3*y`; the empty string for the constant monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = variable_names(self.nvars());
        let parts: Vec<String> = self
            .exps()
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All monomials of degree `d` in `n` variables, in canonical order.
pub fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u16, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_raw(n, *cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, d as u16, &mut [0; MAX_VARS], &mut out);
    out
}
