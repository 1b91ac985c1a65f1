//! Bodies of the registry entries.

use std::collections::BTreeSet;

use crate::eigenmod::{
    class_representatives, eigenspace_basis, index_table, invariant_screen_report, monomial_eigenspace, rank,
};
use crate::error::Result;
use crate::field::{context, BigRational, Cyc, CycContext, Field};
use crate::field::{PolyQuotient, QuotientContext};
use crate::forms::{Form, SquareMatrix};
use crate::projgroup::{closure, proj_order, ProjMatrix, DEFAULT_CAP};
use crate::singular::{critical_point_check, det_s_identity_check, family_is_singular, r_evaluate, FamilyParams};
use crate::text::parse_form;

use super::catalog::{form_catalog, matrix_catalog, scalar, CatalogId, M12_P};
use super::registry::Checker;
use super::relations::{make_z, verify_psl27, verify_s5_coxeter};

fn form(name: &str, cond: u32) -> Result<Form<Cyc>> {
    form_catalog(&CatalogId::new(name), cond)
}

fn mat(name: &str, cond: u32) -> Result<SquareMatrix<Cyc>> {
    matrix_catalog(&CatalogId::new(name), cond)
}

fn mat_with(name: &str, params: &[i64], cond: u32) -> Result<SquareMatrix<Cyc>> {
    let ctx = context(cond)?;
    let p = params.iter().map(|&k| Cyc::int(&ctx, k)).collect();
    matrix_catalog(&CatalogId::with_params(name, p), cond)
}

fn order(m: &SquareMatrix<Cyc>) -> Result<usize> {
    proj_order(&ProjMatrix::new(m)?, 1000)
}

fn proj_eq(a: &SquareMatrix<Cyc>, b: &SquareMatrix<Cyc>) -> Result<bool> {
    Ok(ProjMatrix::new(a)? == ProjMatrix::new(b)?)
}

fn conj(s: &SquareMatrix<Cyc>, m: &SquareMatrix<Cyc>) -> Result<SquareMatrix<Cyc>> {
    Ok(&(&s.inverse()? * m) * s)
}

/// Rank of the coefficient vectors of `forms`.
fn span_rank<K: Field>(forms: &[Form<K>], ctx: &K::Context) -> usize {
    let monos: BTreeSet<_> = forms.iter().flat_map(|f| f.support()).collect();
    let monos: Vec<_> = monos.into_iter().collect();
    let rows = forms
        .iter()
        .map(|f| monos.iter().map(|m| f.coeff(m)).collect())
        .collect();
    rank(rows, monos.len(), ctx)
}

/// True when `basis` and `expected` span the same space of the same
/// dimension.
fn same_span<K: Field>(basis: &[Form<K>], expected: &[Form<K>], ctx: &K::Context) -> bool {
    let all: Vec<Form<K>> = basis.iter().chain(expected).cloned().collect();
    basis.len() == expected.len()
        && span_rank(expected, ctx) == expected.len()
        && span_rank(&all, ctx) == expected.len()
}

fn monomial_forms(texts: &[&str], n: usize, cond: u32) -> Result<Vec<Form<Cyc>>> {
    texts.iter().map(|t| parse_form(t, n, cond)).collect()
}

/// Columns of the `q = 5` and `q = 7` tables.
const COLS_FIXED: [[u16; 4]; 16] = [
    [4, 0, 0, 0],
    [3, 1, 0, 0],
    [3, 0, 1, 0],
    [3, 0, 0, 1],
    [1, 3, 0, 0],
    [0, 4, 0, 0],
    [0, 3, 1, 0],
    [0, 3, 0, 1],
    [1, 0, 3, 0],
    [0, 1, 3, 0],
    [0, 0, 4, 0],
    [0, 0, 3, 1],
    [1, 0, 0, 3],
    [0, 1, 0, 3],
    [0, 0, 1, 3],
    [0, 0, 0, 4],
];

/// Columns of the symbolic table for general primes.
const COLS_SYMBOLIC: [[u16; 4]; 16] = [
    [4, 0, 0, 0],
    [0, 4, 0, 0],
    [0, 0, 4, 0],
    [0, 0, 0, 4],
    [3, 1, 0, 0],
    [3, 0, 1, 0],
    [3, 0, 0, 1],
    [1, 3, 0, 0],
    [0, 3, 1, 0],
    [0, 3, 0, 1],
    [1, 0, 3, 0],
    [0, 1, 3, 0],
    [0, 0, 3, 1],
    [1, 0, 0, 3],
    [0, 1, 0, 3],
    [0, 0, 1, 3],
];

const Q5_TABLE: [(&str, [u64; 4], [u64; 16]); 5] = [
    ("D_0", [0, 0, 1, 0], [0, 0, 1, 0, 0, 0, 1, 0, 3, 3, 4, 3, 0, 0, 1, 0]),
    ("D_1", [0, 0, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 4, 4]),
    ("D_2", [0, 0, 1, 2], [0, 0, 1, 2, 0, 0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3]),
    ("D_4", [0, 0, 1, 4], [0, 0, 1, 4, 0, 0, 1, 4, 3, 3, 4, 3, 2, 2, 3, 1]),
    (
        "D_{2,3}",
        [0, 1, 2, 3],
        [0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3, 4, 4, 0, 1, 2],
    ),
];

const Q7_TABLE: [(&str, [u64; 4], [u64; 16]); 7] = [
    ("D_0", [0, 0, 1, 0], [0, 0, 1, 0, 0, 0, 1, 0, 3, 3, 4, 3, 0, 0, 1, 0]),
    ("D_1", [0, 0, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 4, 4]),
    ("D_2", [0, 0, 1, 2], [0, 0, 1, 2, 0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 0, 1]),
    ("D_3", [0, 0, 1, 3], [0, 0, 1, 3, 0, 0, 1, 3, 3, 3, 4, 6, 2, 2, 3, 5]),
    ("D_6", [0, 0, 1, 6], [0, 0, 1, 6, 0, 0, 1, 6, 3, 3, 4, 2, 4, 4, 5, 3]),
    (
        "D_{2,3}",
        [0, 1, 2, 3],
        [0, 1, 2, 3, 3, 4, 5, 6, 6, 0, 1, 2, 2, 3, 4, 5],
    ),
    (
        "D_{2,4}",
        [0, 1, 2, 4],
        [0, 1, 2, 4, 3, 4, 5, 0, 6, 0, 1, 3, 5, 6, 0, 2],
    ),
];

/// Printed symbolic rows, as affine functions `a + b*j + c*l` per column.
fn symbolic_row(kind: &str, j: i64, l: i64) -> [i64; 16] {
    match kind {
        "D_0" => [0, 0, 4, 0, 0, 1, 0, 0, 1, 0, 3, 3, 3, 0, 0, 0],
        "D_1" => [0, 0, 4, 4, 0, 1, 1, 0, 1, 1, 3, 3, 4, 3, 3, 4],
        "D_l" => [0, 0, 4, 4 * l, 0, 1, l, 0, 1, l, 3, 3, l + 3, 3 * l, 3 * l, 3 * l + 1],
        _ => [
            0,
            4,
            4 * j,
            4 * l,
            1,
            j,
            l,
            3,
            j + 3,
            l + 3,
            3 * j,
            3 * j + 1,
            3 * j + l,
            3 * l,
            3 * l + 1,
            3 * l + j,
        ],
    }
}

fn table_row(exps: &[u64], q: u64, cols: &[[u16; 4]; 16]) -> Result<Vec<u64>> {
    let t = index_table(exps, q, 4)?;
    Ok(cols.iter().map(|c| t.index_of(c).expect("quartic monomial")).collect())
}

pub(super) fn index_tables(c: &mut Checker) -> Result<()> {
    for (q, table) in [(5u64, &Q5_TABLE[..]), (7, &Q7_TABLE[..])] {
        for (name, exps, printed) in table {
            let row = table_row(exps, q, &COLS_FIXED)?;
            let diffs: Vec<usize> = (0..16).filter(|&k| row[k] != printed[k]).collect();
            // The D_4 row prints 3 under z^3 t; 3 + 4 = 2 mod 5.
            let known = q == 5 && *name == "D_4" && diffs == [11] && row[11] == 2 && printed[11] == 3;
            c.check(format!("q={q} {name} row"), diffs.is_empty() || known);
            if known {
                c.note("printed q=5 D_4 row has 3 under z^3t; the computed index is 2");
            }
        }
    }
    let p = 11i64;
    let mut mismatches = Vec::new();
    let mut rows = 0;
    let mut cases: Vec<(&str, i64, i64, [u64; 4])> = vec![("D_0", 0, 0, [0, 0, 1, 0]), ("D_1", 0, 1, [0, 0, 1, 1])];
    for l in 2..p {
        cases.push(("D_l", 0, l, [0, 0, 1, l as u64]));
        for j in 2..l {
            cases.push(("D_jl", j, l, [0, 1, j as u64, l as u64]));
        }
    }
    for (kind, j, l, exps) in cases {
        let row = table_row(&exps, p as u64, &COLS_SYMBOLIC)?;
        let printed = symbolic_row(kind, j, l);
        rows += 1;
        for (k, (&got, &want)) in row.iter().zip(&printed).enumerate() {
            if got != want.rem_euclid(p) as u64 {
                mismatches.push((kind, j, l, k, got, want));
            }
        }
    }
    c.value("symbolic rows compared at p=11", rows);
    // The D_0 row prints 0 under t^3 z; the index of z t^3 is 1.
    let known = mismatches
        .iter()
        .all(|&(kind, _, _, k, got, want)| kind == "D_0" && k == 15 && got == 1 && want == 0);
    c.check("symbolic rows agree apart from the D_0 t^3z entry", known);
    if !mismatches.is_empty() && known {
        c.note("printed D_0 row has 0 under t^3z; the computed index is 1");
    }
    Ok(())
}

pub(super) fn diagonal_eigenspaces(c: &mut Checker) -> Result<()> {
    let a5 = parse_monomials(&["x^3*y", "y^3*z", "z^3*t", "t^3*x", "x^2*z^2", "y^2*t^2", "x*y*z*t"]);
    let a7 = parse_monomials(&["x^3*y", "y^3*z", "z^3*x", "t^4", "x*y*z*t"]);
    for (name, exps, q, want) in [("A5", [4u64, 3, 1, 2], 5u64, &a5), ("A7", [4, 2, 1, 0], 7, &a7)] {
        let got: BTreeSet<_> = monomial_eigenspace(&index_table(&exps, q, 4)?, 0)
            .into_iter()
            .map(|m| m.exps().to_vec())
            .collect();
        c.check(format!("Form({name};1) monomials"), &got == want);
        let ctx = context(q as u32)?;
        let basis = eigenspace_basis(&[mat(name, q as u32)?], &[Cyc::int(&ctx, 1)], 4, 4, &ctx)?;
        c.check(
            format!("Form({name};1) dimension {}", want.len()),
            basis.len() == want.len(),
        );
    }
    let printed = monomial_eigenspace(&index_table(&[4, 3, 2, 1], 5, 4)?, 0);
    c.value("printed A5 invariant monomials", printed.len());
    if printed.len() != a5.len() {
        c.note("diag[e^4,e^3,e^2,e] as printed does not give the listed space; diag[e^4,e^3,e,e^2] does");
    }
    for q in [5u64, 7] {
        for class in class_representatives(q) {
            let t = index_table(&class.representative(), q, 4)?;
            let total: usize = t.fibers().values().map(Vec::len).sum();
            let distinct: BTreeSet<_> = t.fibers().values().flatten().copied().collect();
            c.check(
                format!("q={q} {class} fibers partition"),
                total == 35 && distinct.len() == 35,
            );
        }
    }
    Ok(())
}

fn parse_monomials(texts: &[&str]) -> BTreeSet<Vec<u16>> {
    texts
        .iter()
        .map(|t| {
            let f = parse_form(t, 4, 1).expect("monomial text");
            f.support()[0].exps().to_vec()
        })
        .collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(super) fn quintic_discriminant(c: &mut Checker) -> Result<()> {
    let z = rat(0, 1);
    let mut ok = [true; 4];
    let mut samples = 0;
    for a in -6..=6 {
        for b in [1, 2, 3, 5] {
            let u = rat(a, b);
            for w in [rat(-3, 2), rat(-1, 1), rat(1, 3), rat(2, 1), rat(5, 4)] {
                samples += 1;
                let c256 = rat(256, 1);
                let r = |x: &BigRational, y: &BigRational, z: &BigRational| r_evaluate(x, y, z).map(|q| q.r);
                ok[0] &= r(&z, &z, &u)? == c256.clone() - u.pow(4);
                ok[1] &= r(&u, &z, &z)? == c256.clone() - rat(729, 1) * u.pow(4);
                let l5 = (rat(16, 1) - rat(18, 1) * &u * &w).pow(2)
                    - (rat(27, 1) * u.pow(2) - w.pow(2) + u.clone() * w.pow(3)).pow(2);
                ok[2] &= r(&u, &z, &w)? == l5;
                let v = w.clone();
                let l6 = rat(256, 1) * (rat(1, 1) + rat(3, 1) * u.pow(2) * v.pow(2)).pow(2)
                    - (rat(27, 1) * u.pow(2) + rat(6, 1) * &u * &v + rat(27, 1) * v.pow(2)
                        - rat(16, 1) * u.pow(3) * v.pow(3))
                    .pow(2);
                ok[3] &= r(&u, &v, &z)? == l6;
            }
        }
    }
    c.value("rational samples", samples);
    c.check("R(0,0,l) = 256 - l^4", ok[0]);
    c.check("R(m,0,0) = 256 - 729 m^4", ok[1]);
    c.check("R(u,0,w) factorization", ok[2]);
    c.check("R(u,v,0) factorization", ok[3]);
    let ctx = context(10)?;
    let mut det_ok = true;
    let triples = (0..25i64).map(|k| ((7 * k) % 11 - 5, (13 * k + 3) % 9 - 4, (5 * k + 1) % 7 - 3));
    for (m, n, l) in triples {
        for k in 0..10 {
            let (m, n, l) = (Cyc::int(&ctx, m), Cyc::int(&ctx, n), Cyc::int(&ctx, l));
            det_ok &= det_s_identity_check(&m, &n, &l, &Cyc::zeta(&ctx, k))?;
        }
    }
    c.value("det S triples", 25);
    c.check("det S = 4y(R0 + y^5 R1) at every tenth root", det_ok);
    Ok(())
}

/// `[d^{s*(i+o)(j+o)}]` of size `n`.
fn power_matrix(ctx: &CycContext, q: u32, n: usize, offset: i64, sign: i64) -> SquareMatrix<Cyc> {
    let step = i64::from(ctx.conductor() / q);
    SquareMatrix::from_rows(
        (0..n as i64)
            .map(|i| {
                (0..n as i64)
                    .map(|j| Cyc::zeta(ctx, sign * step * (i + offset) * (j + offset)))
                    .collect()
            })
            .collect(),
    )
    .expect("square")
}

pub(super) fn dft_inverse(c: &mut Checker) -> Result<()> {
    for p in [5u32, 7] {
        let ctx = context(p)?;
        let n = p as usize - 1;
        let a = power_matrix(&ctx, p, n, 1, 1);
        let b = power_matrix(&ctx, p, n, 1, -1);
        let ones = SquareMatrix::from_rows(vec![vec![Cyc::int(&ctx, 1); n]; n])?;
        let diff = SquareMatrix::from_rows(
            b.rows()
                .into_iter()
                .zip(ones.rows())
                .map(|(r, s)| r.into_iter().zip(s).map(|(x, y)| x - y).collect())
                .collect(),
        )?;
        let prod = &a * &diff;
        c.check(
            format!("p={p}: A(B-C) = pE"),
            prod.scalar_value() == Some(Cyc::int(&ctx, p as i64)),
        );
        let full = power_matrix(&ctx, p, p as usize, 0, 1);
        let inv = power_matrix(&ctx, p, p as usize, 0, -1).scale(&Cyc::rational(&ctx, &rat(1, p as i64)));
        c.check(
            format!("p={p}: inverse of the full transform"),
            (&full * &inv).is_identity(),
        );
    }
    let t = mat("dft_T", 5)?;
    let ctx = context(5)?;
    let u = power_matrix(&ctx, 5, 4, 1, 1);
    let ones = SquareMatrix::from_rows(vec![vec![Cyc::int(&ctx, 1); 4]; 4])?;
    let u_minus = SquareMatrix::from_rows(
        u.rows()
            .into_iter()
            .zip(ones.rows())
            .map(|(r, s)| r.into_iter().zip(s).map(|(x, y)| x - y).collect())
            .collect(),
    )?;
    c.check(
        "(U - I)T = 5E",
        (&u_minus * &t).scalar_value() == Some(Cyc::int(&ctx, 5)),
    );
    Ok(())
}

pub(super) fn s5_tau_invariants(c: &mut Checker) -> Result<()> {
    let s = mat("tau_S", 5)?;
    let t12 = mat("tau_12", 5)?;
    let t5 = mat("tau_12345", 5)?;
    c.check(
        "S^-1 rho(s1s2s3) S = tau_12345",
        conj(&s, &mat("rho_s1s2s3", 5)?)? == t5,
    );
    c.check("S^-1 rho(t1) S = tau_12", conj(&s, &mat("rho_t1", 5)?)? == t12);
    for name in ["F0", "F1"] {
        let f = form(name, 5)?;
        for (tn, tau) in [("tau_12", &t12), ("tau_12345", &t5)] {
            c.check(format!("{name} fixed by {tn}"), f.act(&tau.inverse()?)? == f);
        }
    }
    let eta = scalar("(3+E+E^4)/5", 5, &context(5)?)?;
    c.check(
        "eta^2 - eta = -1/5",
        eta.clone() * &eta - eta == Cyc::rational(&context(5)?, &rat(-1, 5)),
    );
    let gens: Vec<_> = [t12.clone(), t5.clone()].to_vec();
    c.value(
        "order of <tau_12, tau_12345>",
        closure(&gens, 4, &context(5)?, DEFAULT_CAP)?.order(),
    );
    c.check(
        "<tau_12, tau_12345> has order 120",
        closure(&gens, 4, &context(5)?, DEFAULT_CAP)?.order() == 120,
    );
    Ok(())
}

fn character_ones(n: usize, ctx: &CycContext) -> Vec<Cyc> {
    vec![Cyc::int(ctx, 1); n]
}

pub(super) fn s5_r1_eigenspace(c: &mut Checker) -> Result<()> {
    let ctx = context(60)?;
    let gens: Vec<_> = ["R11", "R12", "R13", "R14"]
        .iter()
        .map(|n| mat(n, 60))
        .collect::<Result<_>>()?;
    let basis = eigenspace_basis(&gens, &character_ones(4, &ctx), 4, 4, &ctx)?;
    c.value("dimension", basis.len());
    c.check(
        "Form(R11..R14;1,1,1,1) = <h0,h1>",
        same_span(&basis, &[form("s5_h0", 60)?, form("s5_h1", 60)?], &ctx),
    );
    let order = closure(&gens, 4, &ctx, DEFAULT_CAP)?.order();
    c.value("group order", order);
    c.check("R11..R14 generate a group of order 120", order == 120);
    Ok(())
}

pub(super) fn s5_r2_eigenspaces(c: &mut Checker) -> Result<()> {
    let ctx = context(24)?;
    let gens: Vec<_> = ["R21", "R22", "R23", "R24"]
        .iter()
        .map(|n| mat(n, 24))
        .collect::<Result<_>>()?;
    let (f0, f1) = (form("s5_f0", 24)?, form("s5_f1", 24)?);
    let a5 = eigenspace_basis(&gens[..3], &character_ones(3, &ctx), 4, 4, &ctx)?;
    c.check(
        "Form(R21,R22,R23;1,1,1) = <f0,f1>",
        same_span(&a5, &[f0.clone(), f1.clone()], &ctx),
    );
    let plus = eigenspace_basis(&gens, &character_ones(4, &ctx), 4, 4, &ctx)?;
    c.check("Form(R21..R24;1,1,1,1) = <f0>", same_span(&plus, &[f0], &ctx));
    let mut rho = character_ones(3, &ctx);
    rho.push(Cyc::int(&ctx, -1));
    let minus = eigenspace_basis(&gens, &rho, 4, 4, &ctx)?;
    c.check("Form(R21..R24;1,1,1,-1) = <f1>", same_span(&minus, &[f1], &ctx));
    let a5_order = closure(&gens[..3], 4, &ctx, DEFAULT_CAP)?.order();
    let s5_order = closure(&gens, 4, &ctx, DEFAULT_CAP)?.order();
    c.check("R21,R22,R23 generate 60 classes", a5_order == 60);
    c.check("R21..R24 generate 120 classes", s5_order == 120);
    Ok(())
}

/// Entries of `5 sqrt3 W` named as in the product identities.
struct WLetters {
    u: Cyc,
    v: Cyc,
    w: Cyc,
    x: Cyc,
    l: Cyc,
    m: Cyc,
    y: Cyc,
    p: Cyc,
    n: Cyc,
    z: Cyc,
    q: Cyc,
    r: Cyc,
}

pub(super) fn r2_diagonalization(c: &mut Checker) -> Result<()> {
    let cond = 120;
    let ctx = context(cond)?;
    let e = |t: &str| scalar(t, 5, &ctx);
    let u = mat("r2_U", cond)?;
    c.check("U^5 = -E", u.pow(5).scalar_value() == Some(Cyc::int(&ctx, -1)));
    let s = mat("r2_S", cond)?;
    let d = SquareMatrix::diagonal(&[e("-E")?, e("-E^2")?, e("-E^3")?, e("-E^4")?]);
    c.check("S^-1 U S = -diag[e,e^2,e^3,e^4]", conj(&s, &u)? == d);
    let factored = &(&SquareMatrix::diagonal(&[
        scalar("sqrt2*sqrt3", 1, &ctx)?,
        scalar("sqrt2", 1, &ctx)?,
        Cyc::int(&ctx, 2),
        scalar("2*sqrt3", 1, &ctx)?,
    ]) * &mat("r2_Omega", cond)?)
        * &mat("r2_Sigma", cond)?;
    match s.ratio_to(&factored) {
        Some(k) => {
            c.value("S / (diag * Omega * Sigma)", &k);
            c.check("S is a multiple of diag[sqrt6,sqrt2,2,2sqrt3] Omega Sigma", true);
            if !k.is_one() {
                c.note(format!("S equals {k} times the displayed product"));
            }
        }
        None => {
            c.check("S is a multiple of diag[sqrt6,sqrt2,2,2sqrt3] Omega Sigma", false);
        }
    }
    let sigma = mat("r2_Sigma", cond)?;
    let five_inv = SquareMatrix::from_rows(
        (1..=4i64)
            .map(|i| {
                (1..=4i64)
                    .map(|j| Ok(Cyc::zeta(&ctx, -24 * i * j) - Cyc::int(&ctx, 1)))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?,
    )?;
    c.check(
        "5 Sigma^-1 as displayed",
        sigma.inverse()?.scale(&Cyc::int(&ctx, 5)) == five_inv,
    );
    let v = conj(&s, &mat("R21", cond)?)?;
    let w = conj(&s, &mat("R24", cond)?)?;
    c.check("V = S^-1 R21 S as displayed", v == mat("r2_V_displayed", cond)?);
    c.check("W = S^-1 R24 S as displayed", w == mat("r2_W_displayed", cond)?);
    let k = scalar("5*sqrt3", 1, &ctx)?;
    let g = |i: usize, j: usize| w.get(i, j).clone() * &k;
    let lt = WLetters {
        u: g(0, 1),
        v: g(0, 2),
        w: g(0, 3),
        x: g(1, 0),
        l: g(1, 2),
        m: g(1, 3),
        y: g(2, 0),
        p: g(2, 1),
        n: g(2, 3),
        z: g(3, 0),
        q: g(3, 1),
        r: g(3, 2),
    };
    let a = e("-9+12*(E^2+E^3)")?;
    let b = e("-9+12*(E+E^4)")?;
    c.check(
        "xu = rn = -9+12(e^2+e^3)",
        lt.x.clone() * &lt.u == a && lt.r.clone() * &lt.n == a,
    );
    c.check(
        "yv = qm = -9+12(e+e^4)",
        lt.y.clone() * &lt.v == b && lt.q.clone() * &lt.m == b,
    );
    for (name, prod, printed, squared) in [
        ("zw", lt.z.clone() * &lt.w, "9*(E-E^4)", "9*(E-E^4)^2"),
        ("pl", lt.p.clone() * &lt.l, "9*(E^2-E^3)", "9*(E^2-E^3)^2"),
    ] {
        let exact = prod == e(printed)?;
        let sq = prod == e(squared)?;
        c.check(
            format!("{name} = {}", squared.replace('*', "").replace('E', "e")),
            exact || sq,
        );
        if !exact && sq {
            c.note(format!("{name} equals {squared}, the printed value lacks the square"));
        }
    }
    c.check("-9+12(e^2+e^3) is a square", a == e("sqrt3*(1+2*E+2*E^2)")?.pow(2));
    c.check("-9+12(e+e^4) is a square", b == e("sqrt3*(1+2*E^2+2*E^4)")?.pow(2));
    let t = mat("r2_T", cond)?;
    let (al, be, ga) = (t.get(0, 0).clone(), t.get(1, 1).clone(), t.get(2, 2).clone());
    let three = e("3*(E-E^4)")?;
    let sq1 = e("sqrt3*(1+2*E^2+2*E^4)")?;
    let sq2 = e("sqrt3*(1+2*E+2*E^2)")?;
    let inv = |x: &Cyc| x.inverse().expect("nonzero");
    c.check(
        "alpha z = alpha^-1 w = 3(e-e^4)",
        al.clone() * &lt.z == three && inv(&al) * &lt.w == three,
    );
    c.check(
        "beta q = beta^-1 m",
        be.clone() * &lt.q == sq1 && inv(&be) * &lt.m == sq1,
    );
    c.check(
        "gamma r = gamma^-1 n",
        ga.clone() * &lt.r == sq2 && inv(&ga) * &lt.n == sq2,
    );
    c.check("alpha^-1 as displayed", inv(&al) == e("-(E+E^3)+w*(1-E)")?);
    c.check(
        "beta^-1 as displayed",
        inv(&be) == e("(4*E+2*E^3+3*E^4+w*(-3+2*E-2*E^3+3*E^4))/sqrt3")?,
    );
    c.check(
        "gamma^-1 as displayed",
        inv(&ga) == e("(-4+E-3*E^2-E^3+w*(-2-E-2*E^3))/sqrt3")?,
    );
    c.check(
        "beta gamma^-1 as displayed",
        be.clone() * &inv(&ga) == e("E^3+E^4+w*(-1+E^3)")?,
    );
    Ok(())
}

pub(super) fn r2_normal_forms(c: &mut Checker) -> Result<()> {
    let cond = 120;
    let ctx = context(cond)?;
    let e = |t: &str| scalar(t, 5, &ctx);
    let st = &mat("r2_S", cond)? * &mat("r2_T", cond)?;
    c.check(
        "5 (ST)^-1 R24 (ST) as displayed",
        conj(&st, &mat("R24", cond)?)? == mat("r2_ST_R24_displayed", cond)?,
    );
    let c0 = e("-27*320*sqrt3*(10+21*E+18*E^2+6*E^3+w*(6+18*E+21*E^2+10*E^3))")?;
    let c1 = e("9*320*sqrt3*(-7*E-10*E^2-2*E^3+w*(2+10*E+7*E^2))")?;
    let f0 = form("s5_f0", cond)?.substitute(&st)?;
    let f1 = form("s5_f1", cond)?.substitute(&st)?;
    c.proportional("f0 under ST", &f0, &form("s5_f0_conjugated", cond)?, Some(&c0));
    c.proportional("f1 under ST", &f1, &form("s5_f1_conjugated", cond)?, Some(&c1));
    let sp = mat("r2_S_prime", cond)?;
    let d = SquareMatrix::diagonal(&[e("-E")?, e("-E^2")?, e("-E^4")?, e("-E^3")?]);
    c.check(
        "S'^-1 U S' = -diag[e,e^2,e^4,e^3]",
        conj(&sp, &mat("r2_U", cond)?)? == d,
    );
    c.check(
        "R24' as displayed",
        conj(&sp, &mat("R24", cond)?)? == mat("r2_R24_prime", cond)?,
    );
    let f0p = form("s5_f0", cond)?.substitute(&sp)?;
    let f1p = form("s5_f1", cond)?.substitute(&sp)?;
    c.proportional("f0 under S'", &f0p, &form("s5_f0_prime", cond)?, None);
    c.proportional("f1 under S'", &f1p, &form("s5_f1_prime", cond)?, None);
    let u_prime = SquareMatrix::diagonal(&[e("E")?, e("E^2")?, e("E^4")?, e("E^3")?]);
    let r24p = mat("r2_R24_prime", cond)?;
    let gens = [u_prime, r24p];
    let a5 = eigenspace_basis(&gens[..1], &[Cyc::int(&ctx, 1)], 4, 4, &ctx)?;
    c.value("Form(diag[e,e^2,e^4,e^3];1) dimension", a5.len());
    let plus = eigenspace_basis(&gens, &[Cyc::int(&ctx, 1), Cyc::int(&ctx, 1)], 4, 4, &ctx)?;
    let minus = eigenspace_basis(&gens, &[Cyc::int(&ctx, 1), Cyc::int(&ctx, -1)], 4, 4, &ctx)?;
    c.check(
        "<f0'> is the R24' eigenspace for 1",
        same_span(&plus, &[form("s5_f0_prime", cond)?], &ctx),
    );
    c.check(
        "<f1'> is the R24' eigenspace for -1",
        same_span(&minus, &[form("s5_f1_prime", cond)?], &ctx),
    );
    Ok(())
}

pub(super) fn stretched_normal_forms(c: &mut Checker) -> Result<()> {
    let cond = 480;
    let t0 = mat("stretch_T0", cond)?;
    let t1 = mat("stretch_T1", cond)?;
    let a = t0.get(0, 0).clone();
    c.check("alpha^80 = -1", a.pow(80) == Cyc::int(&context(cond)?, -1));
    let g0 = form("s5_f0_prime", cond)?.act(&t0.inverse()?)?;
    let g1 = form("s5_f1_prime", cond)?.act(&t1.inverse()?)?;
    let want0 = form("s5_f0_stretched", cond)?;
    let want1 = form("s5_f1_stretched", cond)?;
    let exact0 = g0 == want0;
    let exact1 = g1 == want1;
    c.check("f0' under T0 matches the stretched form", exact0);
    c.check("f1' under T1 matches the stretched form", exact1);
    if !exact0 {
        c.value("f0' under T0", format!("{g0}"));
        let ctx = context(cond)?;
        let fixed = SquareMatrix::diagonal(&[
            a.clone(),
            t0.get(1, 1).clone(),
            -t0.get(2, 2).clone(),
            t0.get(3, 3).clone(),
        ]);
        let theta = a.pow(20);
        let want = parse_form("x^3*y + y^3*z + z^3*t + t^3*x", 4, cond)?
            .checked_add(&parse_form("x^2*z^2 - y^2*t^2", 4, cond)?.scale(&(-scalar("sqrt3/2", 1, &ctx)? * &theta)))?;
        let ok = c.check(
            "f0' under diag[a, a^-3, -a^9, -a^-27] is the cyclic quartic minus (sqrt3/2) a^20 (x^2z^2 - y^2t^2)",
            form("s5_f0_prime", cond)?.act(&fixed.inverse()?)? == want,
        );
        if ok {
            c.note("T0 as displayed leaves -y^3z and -z^3t; negating its third entry gives the stated shape with theta replaced by -theta");
        }
    }
    if !exact1 {
        c.value("f1' under T1", format!("{g1}"));
    }
    Ok(())
}

pub(super) fn psl27_triples(c: &mut Checker) -> Result<()> {
    let a7 = mat("psl27_A", 7)?;
    let b7 = mat("psl27_B", 7)?;
    let c0 = mat("psl27_C0", 7)?;
    let ctx7 = context(7)?;
    c.check("C0^2 = E", (&c0 * &c0).is_identity());
    c.check(
        "C0 A C0 = A^-1 C0 A^-1",
        &(&c0 * &a7) * &c0 == &(&a7.inverse()? * &c0) * &a7.inverse()?,
    );
    c.check("(A, B, C0) satisfy the relations", verify_psl27(&a7, &b7, &c0));
    let cond = 56;
    let ctx = context(cond)?;
    let a = mat("psl27_A", cond)?;
    let b = mat("psl27_B", cond)?;
    let cs = mat("psl27_C_sqrt2", cond)?;
    c.check("C_sqrt2^2 = 7E", (&cs * &cs).scalar_value() == Some(Cyc::int(&ctx, 7)));
    let k = scalar("1+2*E+2*E^2+2*E^4", 7, &ctx)?;
    c.check(
        "C_sqrt2 A C_sqrt2 = (1+2e+2e^2+2e^4) A^-1 C_sqrt2 A^-1",
        &(&cs * &a) * &cs == (&(&a.inverse()? * &cs) * &a.inverse()?).scale(&k),
    );
    c.check("(A, B, C_sqrt2) satisfy the relations", verify_psl27(&a, &b, &cs));
    let z = Cyc::int(&ctx, 0);
    c.check("Z(0,0,0,0) is singular", make_z(&z, &z, &z, &z)?.det().is_zero());
    let delta = scalar("-E-E^2-E^4+E^3+E^5+E^6", 7, &ctx7)?;
    c.check("delta^2 = -7", delta.pow(2) == Cyc::int(&ctx7, -7));
    c.check("delta C0 as displayed", c0.scale(&delta) == mat("psl27_delta_C0", 7)?);
    let dd = scalar("7*(-3+E+E^2+E^4)", 7, &ctx7)?;
    c.check(
        "inverse of 7(-3+e+e^2+e^4)",
        dd.inverse() == Some(scalar("-(4+E+E^2+E^4)/98", 7, &ctx7)?),
    );
    let (a3, b3, c3) = (mat("klein_A3", 7)?, mat("klein_B3", 7)?, mat("klein_C3", 7)?);
    c.check("(A3, B3, C3) satisfy the relations", verify_psl27(&a3, &b3, &c3));
    c.check(
        "(A, B, E) fail the relations",
        !verify_psl27(&a7, &b7, &SquareMatrix::identity(4, &ctx7)),
    );
    let g = closure(&[a7, b7, c0], 4, &ctx7, DEFAULT_CAP)?;
    c.check("(A, B, C0) generate 168 classes", g.order() == 168);
    Ok(())
}

pub(super) fn psl27_conjugations(c: &mut Checker) -> Result<()> {
    let cond = 56;
    let ai = |i: i64| mat_with("psl27_A_i", &[i], cond);
    let ci = |i: i64| mat_with("psl27_C_sqrt2_i", &[i], cond);
    let b = mat("psl27_B", cond)?;
    let b2 = &b * &b;
    c.check("B^-1 A1 B = A2", conj(&b, &ai(1)?)? == ai(2)?);
    c.check("B^-1 C1 B = C2", conj(&b, &ci(1)?)? == ci(2)?);
    c.check("B^-2 A1 B^2 = A4", conj(&b2, &ai(1)?)? == ai(4)?);
    c.check("B^-2 C1 B^2 = C4", conj(&b2, &ci(1)?)? == ci(4)?);
    c.check("B^-1 A6 B = A5", conj(&b, &ai(6)?)? == ai(5)?);
    c.check("B^-1 C6 B = C5", conj(&b, &ci(6)?)? == ci(5)?);
    c.check("B^-2 A6 B^2 = A3", conj(&b2, &ai(6)?)? == ai(3)?);
    c.check("B^-2 C6 B^2 = C3", conj(&b2, &ci(6)?)? == ci(3)?);
    let tau = |m: &SquareMatrix<Cyc>| m.transpose().inverse();
    c.check("tau(A1) = A6", proj_eq(&tau(&ai(1)?)?, &ai(6)?)?);
    c.check("tau(B) = B", proj_eq(&tau(&b)?, &b)?);
    c.check("tau(C1) = C6", proj_eq(&tau(&ci(1)?)?, &ci(6)?)?);
    let a1 = [4i64, 2, 1, 0];
    let a6 = [3i64, 5, 6, 0];
    let mut similar = false;
    for perm in permutations4() {
        let shift = (a1[0] - a6[perm[0]]).rem_euclid(7);
        similar |= (0..4).all(|k| (a1[k] - a6[perm[k]]).rem_euclid(7) == shift);
    }
    c.check("eigenvalues of A1 and A6 differ up to scalar and order", !similar);
    let d = SquareMatrix::diagonal(&[-1i64, -1, -1, 1].map(|k| Cyc::int(&context(cond).unwrap(), k)));
    c.check(
        "C_-sqrt2 = D C_sqrt2 D",
        &(&d * &mat("psl27_C_sqrt2", cond)?) * &d == mat("psl27_C_minus_sqrt2", cond)?,
    );
    c.check(
        "D commutes with A and B",
        &d * &ai(1)? == &ai(1)? * &d && &d * &b == &b * &d,
    );
    Ok(())
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

pub(super) fn a6_eigenspace(c: &mut Checker) -> Result<()> {
    let ctx = context(7)?;
    let a6 = SquareMatrix::diagonal(&[0i64, 1, 2, 4].map(|k| Cyc::zeta(&ctx, k)));
    let basis = eigenspace_basis(std::slice::from_ref(&a6), &[Cyc::int(&ctx, 1)], 4, 4, &ctx)?;
    let want = monomial_forms(&["x^4", "y^3*t", "t^3*z", "z^3*y", "x*y*z*t"], 4, 7)?;
    c.check(
        "Form(A6;1) = <x^4, y^3t, t^3z, z^3y, xyzt>",
        same_span(&basis, &want, &ctx),
    );
    let t = SquareMatrix::from_columns(&[3usize, 2, 1, 0].map(|r| (r, Cyc::int(&ctx, 1))));
    c.check("T^-1 A6 T = diag[e^4,e^2,e,1]", conj(&t, &a6)? == mat("A7", 7)?);
    let p = ["1", "2", "3", "5", "-1"].map(|s| scalar(s, 7, &ctx).unwrap());
    let f = form_catalog(&CatalogId::with_params("a6_eigenform", p.to_vec()), 7)?;
    c.check("a6_eigenform lies in Form(A6;1)", f.substitute(&a6)? == f);
    Ok(())
}

pub(super) fn klein_plus_t4_invariance(c: &mut Checker) -> Result<()> {
    let ctx = context(7)?;
    let f = form("klein_plus_t4", 7)?;
    let cm = mat("psl27_delta_C0", 7)?;
    c.check(
        "f(Cx) = 49 f for C = delta C0",
        f.substitute(&cm)? == f.scale(&Cyc::int(&ctx, 49)),
    );
    let e = |t: &str| scalar(t, 7, &ctx);
    let (al, be, ga) = (e("E-E^6")?, e("E^2-E^5")?, e("E^4-E^3")?);
    let cyc = |f: &dyn Fn(&Cyc, &Cyc, &Cyc) -> Cyc| f(&al, &be, &ga) + f(&be, &ga, &al) + f(&ga, &al, &be);
    let int = |n| Cyc::int(&ctx, n);
    c.check("a^4 + b^4 + c^4 = 21", cyc(&|a, _, _| a.pow(4)) == int(21));
    c.check("a^3b + b^3c + c^3a = 0", cyc(&|a, b, _| a.pow(3) * b) == int(0));
    c.check(
        "ab^3 + bc^3 + ca^3 = 7",
        cyc(&|a, b, _| a.clone() * &b.pow(3)) == int(7),
    );
    c.check(
        "a^2b^2 + b^2c^2 + c^2a^2 = 14",
        cyc(&|a, b, _| a.pow(2) * &b.pow(2)) == int(14),
    );
    c.check(
        "a^2bc + ab^2c + abc^2 = -7",
        cyc(&|a, b, g| a.pow(2) * b * g) == int(-7),
    );
    let ks = parse_form("x^3*y + y^3*z + z^3*x", 3, 7)?;
    let circ = SquareMatrix::from_rows(vec![
        vec![al.clone(), be.clone(), ga.clone()],
        vec![be.clone(), ga.clone(), al.clone()],
        vec![ga.clone(), al.clone(), be.clone()],
    ])?;
    let g = ks.substitute(&circ)?;
    c.check("g'_310 = 49", g.coeff_of(&[3, 1, 0]) == int(49));
    let others = g
        .terms()
        .all(|(m, v)| m.exps() == [3, 1, 0] || m.exps() == [0, 3, 1] || m.exps() == [1, 0, 3] || v.is_zero());
    c.check("other coefficients vanish", others);
    let basis = eigenspace_basis(
        &[mat("psl27_A", 7)?, mat("psl27_B", 7)?, mat("psl27_C0", 7)?],
        &character_ones(3, &ctx),
        4,
        4,
        &ctx,
    )?;
    let want = monomial_forms(&["x^3*y + y^3*z + z^3*x", "t^4"], 4, 7)?;
    c.check(
        "invariant quartics of the fixed-point representation are <f, t^4>",
        same_span(&basis, &want, &ctx),
    );
    Ok(())
}

pub(super) fn psl27_sqrt2_eigenform(c: &mut Checker) -> Result<()> {
    let cond = 56;
    let ctx = context(cond)?;
    let f = form("psl27_sqrt2_invariant", cond)?;
    let gens = [
        mat("psl27_A", cond)?,
        mat("psl27_B", cond)?,
        mat("psl27_C_sqrt2", cond)?,
    ];
    let mut rho = Vec::new();
    for (name, g) in ["A", "B", "C_sqrt2"].iter().zip(&gens) {
        let k = c.proportional(&format!("f under {name}"), &f.substitute(g)?, &f, None);
        rho.push(k.unwrap_or_else(|| Cyc::int(&ctx, 1)));
    }
    let basis = eigenspace_basis(&gens, &rho, 4, 4, &ctx)?;
    c.value("eigenspace dimension", basis.len());
    c.check("eigenspace is spanned by f", same_span(&basis, &[f], &ctx));
    Ok(())
}

pub(super) fn klein_quartic_hessians(c: &mut Checker) -> Result<()> {
    let ctx = context(7)?;
    let f = form("klein_quartic", 7)?;
    for name in ["klein_A3", "klein_B3", "klein_C3"] {
        c.check(format!("f fixed by {name}"), f.substitute(&mat(name, 7)?)? == f);
    }
    let h1 = form("klein_hessian", 7)?;
    let h2 = form("klein_second_hessian", 7)?;
    c.proportional("Hess(f) / h1", &f.hessian(), &h1, Some(&Cyc::int(&ctx, -57)));
    c.proportional("Hess(h1) / h2", &h1.hessian(), &h2, Some(&Cyc::int(&ctx, 250)));
    let gens = [mat("klein_A3", 7)?, mat("klein_B3", 7)?, mat("klein_C3", 7)?];
    let sextics = eigenspace_basis(&gens, &character_ones(3, &ctx), 3, 6, &ctx)?;
    c.check("invariant sextics are <h1>", same_span(&sextics, &[h1], &ctx));
    Ok(())
}

pub(super) fn order63_sextic_hessian(c: &mut Checker) -> Result<()> {
    let ctx = context(21)?;
    let f = form("order63_sextic", 21)?;
    let h = form("order63_hessian", 21)?;
    c.proportional("Hess(f) / h", &f.hessian(), &h, Some(&Cyc::int(&ctx, 250)));
    let d = SquareMatrix::diagonal(&[1i64, 5, 0].map(|k| Cyc::zeta(&ctx, k)));
    let p = SquareMatrix::from_columns(&[2usize, 0, 1].map(|r| (r, Cyc::int(&ctx, 1))));
    for (name, g) in [("diag[d,d^5,1]", &d), ("[e3,e1,e2]", &p)] {
        c.proportional(&format!("f under {name}"), &f.substitute(g)?, &f, None);
    }
    let order = closure(&[d, p], 3, &ctx, DEFAULT_CAP)?.order();
    c.value("group order", order);
    c.check("generated group has order 63", order == 63);
    Ok(())
}

pub(super) fn klein_plus_t4_hessian(c: &mut Checker) -> Result<()> {
    let ctx = context(1)?;
    let f = form("klein_plus_t4", 1)?;
    c.proportional(
        "Hess(f + t^4) / h1 t^2",
        &f.hessian(),
        &form("klein_plus_t4_hessian", 1)?,
        Some(&Cyc::int(&ctx, -648)),
    );
    Ok(())
}

pub(super) fn g80_automorphisms(c: &mut Checker) -> Result<()> {
    let cond = 20;
    let ctx = context(cond)?;
    let f = form("cyclic_quartic", cond)?;
    let b = mat("g80_B", cond)?;
    let cm = mat("g80_C", cond)?;
    let beta = Cyc::zeta(&ctx, 1);
    c.check("f_{B^-1} = beta f", f.act(&b.inverse()?)? == f.scale(&beta));
    c.check("f_{C^-1} = f", f.act(&cm.inverse()?)? == f);
    c.check(
        "C B C^-1 = beta B^17",
        &(&cm * &b) * &cm.inverse()? == b.pow(17).scale(&beta),
    );
    c.check("ord(B) = 20", order(&b)? == 20);
    let g = closure(&[b.clone(), cm.clone()], 4, &ctx, DEFAULT_CAP)?;
    c.value("group order", g.order());
    c.check("|<(B),(C)>| = 80", g.order() == 80);
    let h = form("cyclic_hessian", cond)?;
    c.proportional("Hess(f) / h", &f.hessian(), &h, Some(&Cyc::int(&ctx, 81)));
    let one = Cyc::int(&ctx, 1);
    let zero = Cyc::int(&ctx, 0);
    let mut count = 0;
    let mut ok = true;
    for k in 0..4 {
        let mut p = vec![zero.clone(); 4];
        p[k] = one.clone();
        ok &= critical_point_check(&h, &p)?;
        count += 1;
    }
    c.check("S0 are singular points of V(h)", ok);
    // B^i (a, b, c, 1) rescaled to last coordinate 1.
    let shifts = |i: i64| [-7 * i, -6 * i, -9 * i, 0].map(|k| Cyc::zeta(&ctx, k));
    let s1: Vec<Vec<Cyc>> = (0..20).map(|i| shifts(i).to_vec()).collect();
    let mut ok = true;
    for p in &s1 {
        ok &= critical_point_check(&h, p)?;
        count += 1;
    }
    c.check("S1 = G20(1,1,1,1) are singular points of V(h)", ok);
    c.check("S1 has 20 points", distinct(&s1) == 20);
    let listed_ok = (0..20i64).filter(|&i| {
        let p = [
            Cyc::zeta(&ctx, -i),
            Cyc::zeta(&ctx, 2 * i),
            Cyc::zeta(&ctx, 3 * i),
            one.clone(),
        ];
        critical_point_check(&h, &p).unwrap_or(false)
    });
    let listed = listed_ok.count();
    c.value("listed S1 points that are singular", listed);
    if listed != 20 {
        c.note("the listing (beta^-i, beta^2i, beta^3i, 1) of S1 is singular for even i only; G20(1,1,1,1) has z = (-1)^i beta^3i");
    }
    let sqrt5 = scalar("sqrt5", 1, &ctx)?;
    for (label, w2) in [
        ("S2", Cyc::int(&ctx, -2) + &sqrt5),
        ("S3", Cyc::int(&ctx, -2) - sqrt5.clone()),
    ] {
        let qctx = QuotientContext::square_root_of(&w2);
        let lift = |x: &Cyc| PolyQuotient::from_base(&qctx, x.clone());
        let hq = h.map_coeffs(&qctx, lift);
        let w = PolyQuotient::generator(&qctx);
        let base = [w.clone(), lift(&one), -w.clone(), lift(&one)];
        let pts: Vec<Vec<_>> = (0..20)
            .map(|i| shifts(i).iter().zip(&base).map(|(b, q)| lift(b) * q).collect())
            .collect();
        let mut ok = true;
        for p in &pts {
            ok &= critical_point_check(&hq, p)?;
            count += 1;
        }
        c.check(format!("{label} are singular points of V(h)"), ok);
        c.check(format!("{label} has 20 points"), distinct(&pts) == 20);
    }
    c.value("singular points checked", count);
    Ok(())
}

/// Number of distinct affine points among `pts` (all scaled to `t = 1`).
fn distinct<K: Field>(pts: &[Vec<K>]) -> usize {
    let mut seen: Vec<&Vec<K>> = Vec::new();
    for p in pts {
        if !seen.contains(&p) {
            seen.push(p);
        }
    }
    seen.len()
}

pub(super) fn dwork_pencil_singularity(c: &mut Checker) -> Result<()> {
    let ctx = context(4)?;
    let i = Cyc::zeta(&ctx, 1);
    let mut agree = true;
    for lam in [-12i64, -4, -1, 0, 1, 3, 4, 8, 12] {
        for unit in [Cyc::int(&ctx, 1), i.clone()] {
            let l = Cyc::int(&ctx, lam) * &unit;
            let expect = l.pow(4) == Cyc::int(&ctx, 256);
            agree &= family_is_singular(&FamilyParams::M { lam: l.clone() }) == expect;
            if expect {
                let one = Cyc::int(&ctx, 1);
                let p = [one.clone(), one.clone(), Cyc::int(&ctx, -4).try_div(&l)?, one];
                let f = FamilyParams::M { lam: l }.form();
                agree &= critical_point_check(&f, &p)?;
            }
        }
    }
    c.check("M^lam singular exactly when lam^4 = 4^4", agree);
    Ok(())
}

pub(super) fn dwork_pencil_hessian(c: &mut Checker) -> Result<()> {
    let ctx = context(1)?;
    for lam in [1i64, 5, 24] {
        let l = Cyc::int(&ctx, lam);
        let m = form_catalog(&CatalogId::with_params("M", vec![l.clone()]), 1)?;
        let g = form_catalog(&CatalogId::with_params("pencil_hessian", vec![l]), 1)?;
        c.proportional(
            &format!("Hess(M^{lam}) / g"),
            &m.hessian(),
            &g,
            Some(&Cyc::int(&ctx, 12i64.pow(4))),
        );
    }
    Ok(())
}

pub(super) fn g1920_structure(c: &mut Checker) -> Result<()> {
    let cond = 4;
    let ctx = context(cond)?;
    let g96_gens: Vec<_> = ["g16_a", "g16_b", "s3_swap", "s3_cycle"]
        .iter()
        .map(|n| mat(n, cond))
        .collect::<Result<_>>()?;
    let b = mat("g384_B", cond)?;
    let cm = mat("g1920_C", cond)?;
    c.check("ord(B) = 4", order(&b)? == 4);
    c.check("ord(C) = 5", order(&cm)? == 5);
    let c2 = SquareMatrix::from_rows(
        [
            ["-i", "i", "-1", "-1"],
            ["i", "i", "-1", "1"],
            ["-i", "-i", "-1", "1"],
            ["i", "-i", "-1", "-1"],
        ]
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| scalar(&format!("({t})/2"), 1, &ctx))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?,
    )?;
    c.check("C^2 as displayed", cm.pow(2) == c2);
    let g96 = closure(&g96_gens, 4, &ctx, DEFAULT_CAP)?;
    c.check("|G96| = 96", g96.order() == 96);
    let mut g384_gens = g96_gens.clone();
    g384_gens.push(b.clone());
    let g384 = closure(&g384_gens, 4, &ctx, DEFAULT_CAP)?;
    c.check("|G384| = 384", g384.order() == 384);
    let mut all = g384_gens.clone();
    all.push(cm.clone());
    let g = closure(&all, 4, &ctx, DEFAULT_CAP)?;
    c.value("|G1920|", g.order());
    c.check("|G1920| = 1920", g.order() == 1920);
    let a16_gens: Vec<_> = ["H2", "H3", "K2", "K3"]
        .iter()
        .map(|n| mat(n, cond))
        .collect::<Result<_>>()?;
    let a16 = closure(&a16_gens, 4, &ctx, DEFAULT_CAP)?;
    c.check("|A16| = 16", a16.order() == 16);
    let stats = a16.order_statistics();
    c.check(
        "A16 has one identity and 15 involutions",
        stats.get(&1) == Some(&1) && stats.get(&2) == Some(&15),
    );
    c.check("A16 is normal in G1920", g.is_normal(&a16)?);
    let ts: Vec<_> = ["T1", "T2", "T3", "T4"]
        .iter()
        .map(|n| mat(n, cond))
        .collect::<Result<_>>()?;
    c.check("T1..T4 satisfy the Coxeter relations", verify_s5_coxeter(&ts));
    let h = closure(&ts, 4, &ctx, DEFAULT_CAP)?;
    c.check("|<T1..T4>| = 120", h.order() == 120);
    c.check("<T1..T4> meets A16 trivially", h.intersection_size(&a16) == 1);
    c.check("<T1..T4> lies in G1920", h.elements().iter().all(|x| g.contains(x)));
    let m12 = form_catalog(&CatalogId::with_params("M", vec![Cyc::int(&ctx, 12)]), cond)?;
    for (k, t) in ts.iter().enumerate() {
        c.check(format!("M^12 fixed by T{}", k + 1), m12.act(&t.inverse()?)? == m12);
    }
    c.check("M^12 is fixed up to scalar by every generator of G1920", {
        let mut ok = true;
        for gm in &all {
            ok &= m12.substitute(gm)?.proportionality(&m12)?.is_some();
        }
        ok
    });
    Ok(())
}

pub(super) fn m12_normal_form(c: &mut Checker) -> Result<()> {
    let cond = 20;
    let ctx = context(cond)?;
    let s = mat("m12_S", cond)?;
    let cm = mat("m12_C", cond)?;
    c.check(
        "C^-1 as displayed",
        cm.inverse()? == mat("m12_C_inverse_displayed", cond)?,
    );
    let t: Vec<_> = ["T1", "T2", "T3", "T4"]
        .iter()
        .map(|n| mat(n, cond))
        .collect::<Result<_>>()?;
    let prod = &(&(&t[0] * &t[1]) * &t[2]) * &t[3];
    c.check("T1T2T3T4 S = S tau_12345", &prod * &s == &s * &mat("tau_12345", cond)?);
    let m12 = form_catalog(&CatalogId::with_params("M", vec![Cyc::int(&ctx, 12)]), cond)?;
    let lhs = m12.act(&s.inverse()?)?;
    let p = scalar(M12_P, 5, &ctx)?;
    let rhs = form("m12_target", cond)?.scale(&(Cyc::int(&ctx, 80) * &p));
    c.value("p", &p);
    c.check("M^12_{S^-1} = 80p(F0 - 3/4(1+i)F1)", lhs == rhs);
    Ok(())
}

pub(super) fn prime_screens(c: &mut Checker) -> Result<()> {
    for q in [11u64, 13] {
        let r = invariant_screen_report(q, 4)?;
        c.value(format!("q={q} classes"), r.classes);
        c.check(format!("q={q}: every eigenspace is screened"), r.unscreened.is_empty());
    }
    Ok(())
}

fn unscreened(q: u64) -> Result<Vec<(String, u64)>> {
    Ok(invariant_screen_report(q, 4)?
        .unscreened
        .into_iter()
        .map(|p| (p.class, p.index))
        .collect())
}

pub(super) fn q5_screen(c: &mut Checker) -> Result<()> {
    let got = unscreened(5)?;
    c.value("unscreened", format!("{got:?}"));
    c.check("only (D_{2,3}, 1) survives", got == vec![("D_{2,3}".to_string(), 1)]);
    Ok(())
}

pub(super) fn q7_screen(c: &mut Checker) -> Result<()> {
    let got = unscreened(7)?;
    c.value("unscreened", format!("{got:?}"));
    c.check(
        "exactly (D_6, 3) and (D_{2,4}, 0) survive",
        got == vec![("D_6".to_string(), 3), ("D_{2,4}".to_string(), 0)],
    );
    Ok(())
}

pub(super) fn prime_power_screen(c: &mut Checker) -> Result<()> {
    let r = invariant_screen_report(49, 4)?;
    c.value("classes", r.classes);
    c.check("q=49: every eigenspace is screened", r.unscreened.is_empty());
    Ok(())
}
