//! Acceptance criteria, each checked exactly and reported as PASS or FAIL.
//!
//! Criteria whose printed data disagrees with exact computation are listed
//! in `KNOWN_FAILING`; the run fails if any other criterion fails or if one
//! of those starts passing.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use quartic::atlas::catalog::scalar;
use quartic::atlas::{form_catalog, matrix_catalog, verify_psl27, verify_s5_coxeter, CatalogId};
use quartic::eigenmod::{
    class_representatives, classify_cyclic, eigenspace_basis, index_table, invariant_screen_report,
};
use quartic::field::{context, PolyQuotient, QuotientContext};
use quartic::projgroup::{closure, proj_order, ProjMatrix, DEFAULT_CAP};
use quartic::singular::{critical_point_check, det_s_identity_check, family_is_singular, r_evaluate, FamilyParams};
use quartic::text::parse_form;
use quartic::{BigRational, Cyc, CycContext, Field, Form, SquareMatrix};

type Outcome = Result<(), String>;

const KNOWN_FAILING: [usize; 4] = [1, 5, 12, 14];

fn form(name: &str, cond: u32) -> Form<Cyc> {
    form_catalog(&CatalogId::new(name), cond).unwrap()
}

fn mat(name: &str, cond: u32) -> SquareMatrix<Cyc> {
    matrix_catalog(&CatalogId::new(name), cond).unwrap()
}

fn ensure(ok: bool, what: impl Into<String>, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn outcome(failures: Vec<String>) -> Outcome {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn conj(s: &SquareMatrix<Cyc>, m: &SquareMatrix<Cyc>) -> SquareMatrix<Cyc> {
    &(&s.inverse().unwrap() * m) * s
}

/// Residue of `sum e_k * m_k` for the quartic monomial `m`.
fn index_oracle(exps: &[u64; 4], m: &[u16; 4], q: u64) -> u64 {
    exps.iter().zip(m).map(|(e, &k)| e * k as u64).sum::<u64>() % q
}

fn criterion_1() -> Outcome {
    const FIXED: [[u16; 4]; 16] = [
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
    let printed5: [([u64; 4], [u64; 16]); 5] = [
        ([0, 0, 1, 0], [0, 0, 1, 0, 0, 0, 1, 0, 3, 3, 4, 3, 0, 0, 1, 0]),
        ([0, 0, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 4, 4]),
        ([0, 0, 1, 2], [0, 0, 1, 2, 0, 0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3]),
        ([0, 0, 1, 4], [0, 0, 1, 4, 0, 0, 1, 4, 3, 3, 4, 3, 2, 2, 3, 1]),
        ([0, 1, 2, 3], [0, 1, 2, 3, 3, 4, 0, 1, 1, 2, 3, 4, 4, 0, 1, 2]),
    ];
    let printed7: [([u64; 4], [u64; 16]); 7] = [
        ([0, 0, 1, 0], [0, 0, 1, 0, 0, 0, 1, 0, 3, 3, 4, 3, 0, 0, 1, 0]),
        ([0, 0, 1, 1], [0, 0, 1, 1, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 4, 4]),
        ([0, 0, 1, 2], [0, 0, 1, 2, 0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 0, 1]),
        ([0, 0, 1, 3], [0, 0, 1, 3, 0, 0, 1, 3, 3, 3, 4, 6, 2, 2, 3, 5]),
        ([0, 0, 1, 6], [0, 0, 1, 6, 0, 0, 1, 6, 3, 3, 4, 2, 4, 4, 5, 3]),
        ([0, 1, 2, 3], [0, 1, 2, 3, 3, 4, 5, 6, 6, 0, 1, 2, 2, 3, 4, 5]),
        ([0, 1, 2, 4], [0, 1, 2, 4, 3, 4, 5, 0, 6, 0, 1, 3, 5, 6, 0, 2]),
    ];
    let mut failures = Vec::new();
    for (q, rows) in [(5u64, &printed5[..]), (7, &printed7[..])] {
        for (exps, printed) in rows {
            let t = index_table(exps, q, 4).unwrap();
            for (k, m) in FIXED.iter().enumerate() {
                let got = t.index_of(m).unwrap();
                ensure(
                    got == index_oracle(exps, m, q),
                    format!("q={q} {exps:?} col {k} disagrees with oracle"),
                    &mut failures,
                );
                ensure(
                    got == printed[k],
                    format!("q={q} {exps:?} col {k}: computed {got}, printed {}", printed[k]),
                    &mut failures,
                );
            }
        }
    }
    // Symbolic rows at p = 11 over columns x^4,y^4,z^4,t^4,x^3y,x^3z,x^3t,y^3x,y^3z,y^3t,z^3x,z^3y,z^3t,t^3x,t^3y,t^3z.
    const SYMB: [[u16; 4]; 16] = [
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
    let p = 11i64;
    let mut rows: Vec<(String, [u64; 4], [i64; 16])> = vec![
        (
            "D_0".into(),
            [0, 0, 1, 0],
            [0, 0, 4, 0, 0, 1, 0, 0, 1, 0, 3, 3, 3, 0, 0, 0],
        ),
        (
            "D_1".into(),
            [0, 0, 1, 1],
            [0, 0, 4, 4, 0, 1, 1, 0, 1, 1, 3, 3, 4, 3, 3, 4],
        ),
    ];
    for l in 2..p {
        rows.push((
            format!("D_{l}"),
            [0, 0, 1, l as u64],
            [0, 0, 4, 4 * l, 0, 1, l, 0, 1, l, 3, 3, l + 3, 3 * l, 3 * l, 3 * l + 1],
        ));
        for j in 2..l {
            rows.push((
                format!("D_{{{j},{l}}}"),
                [0, 1, j as u64, l as u64],
                [
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
            ));
        }
    }
    for (name, exps, printed) in rows {
        let t = index_table(&exps, p as u64, 4).unwrap();
        for (k, m) in SYMB.iter().enumerate() {
            let got = t.index_of(m).unwrap();
            let want = printed[k].rem_euclid(p) as u64;
            ensure(
                got == want,
                format!("p=11 {name} col {k}: computed {got}, printed {want}"),
                &mut failures,
            );
        }
    }
    outcome(failures)
}

fn support(fs: &[Form<Cyc>]) -> BTreeSet<Vec<u16>> {
    fs.iter().flat_map(|f| f.support()).map(|m| m.exps().to_vec()).collect()
}

fn monomials(texts: &[&str]) -> BTreeSet<Vec<u16>> {
    texts
        .iter()
        .map(|t| parse_form(t, 4, 1).unwrap().support()[0].exps().to_vec())
        .collect()
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for (name, q, want) in [
        (
            "A5",
            5u32,
            monomials(&["x^3*y", "y^3*z", "z^3*t", "t^3*x", "x^2*z^2", "y^2*t^2", "x*y*z*t"]),
        ),
        ("A7", 7, monomials(&["x^3*y", "y^3*z", "z^3*x", "t^4", "x*y*z*t"])),
    ] {
        let ctx = context(q).unwrap();
        let basis = eigenspace_basis(&[mat(name, q)], &[Cyc::int(&ctx, 1)], 4, 4, &ctx).unwrap();
        let monomial_basis = basis.iter().all(|f| f.support().len() == 1);
        ensure(
            basis.len() == want.len() && monomial_basis && support(&basis) == want,
            format!("Form({name};1) differs from the displayed monomials"),
            &mut failures,
        );
    }
    for q in [5u64, 7] {
        for class in class_representatives(q) {
            let t = index_table(&class.representative(), q, 4).unwrap();
            let all: Vec<_> = t.fibers().into_values().flatten().collect();
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            ensure(
                all.len() == 35 && distinct.len() == 35,
                format!("q={q} {class} fibers"),
                &mut failures,
            );
        }
    }
    outcome(failures)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rand_q = |rng: &mut ChaCha8Rng| BigRational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=6).into());
    let mut failures = Vec::new();
    let r = |u: &BigRational, v: &BigRational, w: &BigRational| r_evaluate(u, v, w).unwrap().r;
    let z = q(0);
    for s in 0..220 {
        let (u, v, w) = (rand_q(&mut rng), rand_q(&mut rng), rand_q(&mut rng));
        ensure(
            r(&z, &z, &w) == q(256) - w.pow(4),
            format!("R(0,0,l) sample {s}"),
            &mut failures,
        );
        ensure(
            r(&u, &z, &z) == q(256) - q(729) * u.pow(4),
            format!("R(m,0,0) sample {s}"),
            &mut failures,
        );
        let l5 = (q(16) - q(18) * &u * &w).pow(2) - (q(27) * u.pow(2) - w.pow(2) + &u * w.pow(3)).pow(2);
        ensure(r(&u, &z, &w) == l5, format!("R(u,0,w) sample {s}"), &mut failures);
        let l6 = q(256) * (q(1) + q(3) * u.pow(2) * v.pow(2)).pow(2)
            - (q(27) * u.pow(2) + q(6) * &u * &v + q(27) * v.pow(2) - q(16) * u.pow(3) * v.pow(3)).pow(2);
        ensure(r(&u, &v, &z) == l6, format!("R(u,v,0) sample {s}"), &mut failures);
        ensure(
            r(&u, &v, &w) == r(&v, &u, &w),
            format!("R symmetry sample {s}"),
            &mut failures,
        );
    }
    let ctx = context(10).unwrap();
    for t in 0..25 {
        let triple: Vec<Cyc> = (0..3).map(|_| Cyc::rational(&ctx, &rand_q(&mut rng))).collect();
        for k in 0..10 {
            let ok = det_s_identity_check(&triple[0], &triple[1], &triple[2], &Cyc::zeta(&ctx, k)).unwrap();
            ensure(ok, format!("det S triple {t} root {k}"), &mut failures);
        }
    }
    outcome(failures)
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for f in ["F0", "F1"] {
        for tau in ["tau_12", "tau_12345"] {
            let t = mat(tau, 5);
            let g = form(f, 5);
            ensure(
                g.act(&t.inverse().unwrap()).unwrap() == g,
                format!("{f} under {tau}"),
                &mut failures,
            );
        }
    }
    outcome(failures)
}

fn criterion_5() -> Outcome {
    let cond = 120;
    let ctx = context(cond).unwrap();
    let e = |t: &str| scalar(t, 5, &ctx).unwrap();
    let mut failures = Vec::new();
    let s = mat("r2_S", cond);
    let si = s.inverse().unwrap();
    ensure((&s * &si).is_identity(), "S S^-1", &mut failures);
    let v = conj(&s, &mat("R21", cond));
    let w = conj(&s, &mat("R24", cond));
    ensure(v == mat("r2_V_displayed", cond), "V entries", &mut failures);
    ensure(w == mat("r2_W_displayed", cond), "W entries", &mut failures);
    let k = scalar("5*sqrt3", 1, &ctx).unwrap();
    let g = |i: usize, j: usize| w.get(i, j).clone() * &k;
    let (u, vv, ww) = (g(0, 1), g(0, 2), g(0, 3));
    let (x, l, m) = (g(1, 0), g(1, 2), g(1, 3));
    let (y, p, n) = (g(2, 0), g(2, 1), g(2, 3));
    let (z, qq, r) = (g(3, 0), g(3, 1), g(3, 2));
    let a = e("-9+12*(E^2+E^3)");
    let b = e("-9+12*(E+E^4)");
    ensure(
        x.clone() * &u == a && r.clone() * &n == a,
        "xu = rn = -9+12(e^2+e^3)",
        &mut failures,
    );
    ensure(
        y.clone() * &vv == b && qq.clone() * &m == b,
        "yv = qm = -9+12(e+e^4)",
        &mut failures,
    );
    ensure(z.clone() * &ww == e("9*(E-E^4)"), "zw = 9(e-e^4)", &mut failures);
    ensure(p.clone() * &l == e("9*(E^2-E^3)"), "pl = 9(e^2-e^3)", &mut failures);
    outcome(failures)
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let ctx = context(56).unwrap();
    let (a, b, c) = (mat("psl27_A", 56), mat("psl27_B", 56), mat("psl27_C_sqrt2", 56));
    ensure(
        (&c * &c).scalar_value() == Some(Cyc::int(&ctx, 7)),
        "C_sqrt2^2 = 7E",
        &mut failures,
    );
    let k = scalar("1+2*E+2*E^2+2*E^4", 7, &ctx).unwrap();
    let ai = a.inverse().unwrap();
    ensure(
        &(&c * &a) * &c == (&(&ai * &c) * &ai).scale(&k),
        "C_sqrt2 X C_sqrt2",
        &mut failures,
    );
    ensure(verify_psl27(&a, &b, &c), "relations for (A,B,C_sqrt2)", &mut failures);
    let (a, b, c) = (mat("psl27_A", 7), mat("psl27_B", 7), mat("psl27_C0", 7));
    ensure((&c * &c).is_identity(), "C0^2 = E", &mut failures);
    let ai = a.inverse().unwrap();
    ensure(&(&c * &a) * &c == &(&ai * &c) * &ai, "C0 X C0", &mut failures);
    ensure(verify_psl27(&a, &b, &c), "relations for (A,B,C0)", &mut failures);
    outcome(failures)
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let ctx = context(7).unwrap();
    let f = parse_form("x^3*y + y^3*z + z^3*x + t^4", 4, 7).unwrap();
    let delta = scalar("-E-E^2-E^4+E^3+E^5+E^6", 7, &ctx).unwrap();
    let c = mat("psl27_C0", 7).scale(&delta);
    ensure(
        f.act(&c.inverse().unwrap()).unwrap() == f.scale(&Cyc::int(&ctx, 49)),
        "f(Cx) = 49 f",
        &mut failures,
    );
    let ctx = context(56).unwrap();
    let g = parse_form("2*(x^3*y + y^3*z + z^3*x) + t^4 + 6*sqrt2*x*y*z*t", 4, 56).unwrap();
    let gens = [mat("psl27_A", 56), mat("psl27_B", 56), mat("psl27_C_sqrt2", 56)];
    let mut rho = Vec::new();
    for m in &gens {
        match g.substitute(m).unwrap().proportionality(&g).unwrap() {
            Some(k) => rho.push(k),
            None => failures.push("g not fixed up to scalar".into()),
        }
    }
    if rho.len() == 3 {
        let basis = eigenspace_basis(&gens, &rho, 4, 4, &ctx).unwrap();
        let spans = basis.len() == 1 && basis[0].proportionality(&g).unwrap().is_some();
        ensure(
            spans,
            format!("eigenspace has dimension {} and is not <g>", basis.len()),
            &mut failures,
        );
    }
    outcome(failures)
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let f = parse_form("x^3*y + y^3*z + z^3*x", 3, 7).unwrap();
    for m in ["klein_A3", "klein_B3", "klein_C3"] {
        ensure(
            f.substitute(&mat(m, 7)).unwrap() == f,
            format!("f fixed by {m}"),
            &mut failures,
        );
    }
    let h1 = form("klein_hessian", 7);
    let h2 = form("klein_second_hessian", 7);
    let c1 = f.hessian().proportionality(&h1).unwrap();
    let c2 = h1.hessian().proportionality(&h2).unwrap();
    let s = form("order63_sextic", 1);
    let c3 = s.hessian().proportionality(&form("order63_hessian", 1)).unwrap();
    println!("         constants: Hess(f)/h1 = {c1:?}, Hess(h1)/h2 = {c2:?}, Hess(x^5z+y^5x+z^5y)/(...) = {c3:?}");
    ensure(c1.is_some(), "Hess(f) ~ h1", &mut failures);
    ensure(c2.is_some(), "Hess(h1) ~ h2", &mut failures);
    ensure(c3.is_some(), "sextic Hessian", &mut failures);
    outcome(failures)
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let cond = 20;
    let ctx = context(cond).unwrap();
    let f = parse_form("x^3*y + y^3*z + z^3*t + t^3*x", 4, cond).unwrap();
    let (b, c) = (mat("g80_B", cond), mat("g80_C", cond));
    let beta = Cyc::zeta(&ctx, 1);
    ensure(
        f.act(&b.inverse().unwrap()).unwrap() == f.scale(&beta),
        "f_{B^-1} = beta f",
        &mut failures,
    );
    ensure(
        f.act(&c.inverse().unwrap()).unwrap() == f,
        "f_{C^-1} = f",
        &mut failures,
    );
    ensure(
        &(&c * &b) * &c.inverse().unwrap() == b.pow(17).scale(&beta),
        "C B C^-1",
        &mut failures,
    );
    let g = closure(&[b.clone(), c], 4, &ctx, DEFAULT_CAP).unwrap();
    ensure(g.order() == 80, format!("closure order {}", g.order()), &mut failures);
    let h = parse_form(
        "x^4*z^4 + y^4*t^4 - 4*(x^5*z*t^2 + x^2*y^5*t + x*y^2*z^5 + y*z^2*t^5) + 14*x^2*y^2*z^2*t^2",
        4,
        cond,
    )
    .unwrap();
    ensure(
        f.hessian().proportionality(&h).unwrap().is_some(),
        "Hess(f) ~ h",
        &mut failures,
    );
    let mut count = 0;
    for k in 0..4 {
        let mut p = vec![Cyc::int(&ctx, 0); 4];
        p[k] = Cyc::int(&ctx, 1);
        ensure(
            critical_point_check(&h, &p).unwrap(),
            format!("S0 point {k}"),
            &mut failures,
        );
        count += 1;
    }
    // Orbit of (a,b,c,1) under <B>, with B^i = diag[1, b^i, b^-2i, b^7i].
    let orbit = |i: i64| [0, i, -2 * i, 7 * i].map(|k| Cyc::zeta(&ctx, k));
    let mut s1 = BTreeSet::new();
    for i in 0..20 {
        let p = orbit(i);
        ensure(
            critical_point_check(&h, &p).unwrap(),
            format!("S1 point {i}"),
            &mut failures,
        );
        let t = p[3].inverse().unwrap();
        s1.insert(p.iter().map(|x| (x.clone() * &t).to_string()).collect::<Vec<_>>());
        count += 1;
    }
    ensure(s1.len() == 20, "S1 has 20 points", &mut failures);
    let root5 = scalar("sqrt5", 1, &ctx).unwrap();
    for (name, sq) in [
        ("S2", Cyc::int(&ctx, -2) + &root5),
        ("S3", Cyc::int(&ctx, -2) - root5.clone()),
    ] {
        let qc = QuotientContext::square_root_of(&sq);
        let lift = |x: &Cyc| PolyQuotient::from_base(&qc, x.clone());
        let hq = h.map_coeffs(&qc, lift);
        let u = PolyQuotient::generator(&qc);
        ensure(
            u.clone() * &u == lift(&sq),
            format!("{name} generator squares correctly"),
            &mut failures,
        );
        let base = [
            u.clone(),
            lift(&Cyc::int(&ctx, 1)),
            -u.clone(),
            lift(&Cyc::int(&ctx, 1)),
        ];
        for i in 0..20 {
            let p: Vec<_> = orbit(i).iter().zip(&base).map(|(a, q)| lift(a) * q).collect();
            ensure(
                critical_point_check(&hq, &p).unwrap(),
                format!("{name} point {i}"),
                &mut failures,
            );
            count += 1;
        }
    }
    ensure(count == 64, format!("{count} points checked"), &mut failures);
    outcome(failures)
}

fn criterion_10() -> Outcome {
    let mut failures = Vec::new();
    let ctx = context(4).unwrap();
    let i = Cyc::zeta(&ctx, 1);
    for lam in [-8i64, -4, -3, -1, 0, 1, 2, 4, 5, 16] {
        for unit in [Cyc::int(&ctx, 1), i.clone()] {
            let l = Cyc::int(&ctx, lam) * &unit;
            let special = l.pow(4) == Cyc::int(&ctx, 256);
            let fp = FamilyParams::M { lam: l.clone() };
            ensure(
                family_is_singular(&fp) == special,
                format!("criterion at lam={l}"),
                &mut failures,
            );
            if special {
                let one = Cyc::int(&ctx, 1);
                let p = [one.clone(), one.clone(), one, Cyc::int(&ctx, -4).try_div(&l).unwrap()];
                ensure(
                    critical_point_check(&fp.form(), &p).unwrap(),
                    format!("singular point at lam={l}"),
                    &mut failures,
                );
            }
        }
    }
    let ms = |names: &[&str]| names.iter().map(|n| mat(n, 4)).collect::<Vec<_>>();
    let mut gens = ms(&["g16_a", "g16_b", "s3_swap", "s3_cycle"]);
    let b = mat("g384_B", 4);
    let c = mat("g1920_C", 4);
    ensure(
        proj_order(&ProjMatrix::new(&b).unwrap(), 100).unwrap() == 4,
        "ord(B) = 4",
        &mut failures,
    );
    ensure(
        proj_order(&ProjMatrix::new(&c).unwrap(), 100).unwrap() == 5,
        "ord(C) = 5",
        &mut failures,
    );
    gens.push(b);
    let g384 = closure(&gens, 4, &ctx, DEFAULT_CAP).unwrap();
    ensure(g384.order() == 384, format!("|G384| = {}", g384.order()), &mut failures);
    gens.push(c);
    let g = closure(&gens, 4, &ctx, DEFAULT_CAP).unwrap();
    ensure(g.order() == 1920, format!("|G1920| = {}", g.order()), &mut failures);
    let a16 = closure(&ms(&["H2", "H3", "K2", "K3"]), 4, &ctx, DEFAULT_CAP).unwrap();
    ensure(a16.order() == 16, "A16 order", &mut failures);
    let stats = a16.order_statistics();
    ensure(
        stats.len() == 2 && stats[&1] == 1 && stats[&2] == 15,
        format!("A16 statistics {stats:?}"),
        &mut failures,
    );
    ensure(g.is_normal(&a16).unwrap(), "A16 normal", &mut failures);
    let ts = ms(&["T1", "T2", "T3", "T4"]);
    ensure(verify_s5_coxeter(&ts), "Coxeter relations", &mut failures);
    let h = closure(&ts, 4, &ctx, DEFAULT_CAP).unwrap();
    ensure(h.order() == 120, "|<T>| = 120", &mut failures);
    ensure(h.intersection_size(&a16) == 1, "<T> meets A16 trivially", &mut failures);
    let m12 = parse_form("x^4 + y^4 + z^4 + t^4 + 12*x*y*z*t", 4, 4).unwrap();
    for (k, t) in ts.iter().enumerate() {
        ensure(
            m12.act(&t.inverse().unwrap()).unwrap() == m12,
            format!("M12 fixed by T{}", k + 1),
            &mut failures,
        );
    }
    outcome(failures)
}

fn criterion_11() -> Outcome {
    let ctx = context(20).unwrap();
    let m12 = parse_form("x^4 + y^4 + z^4 + t^4 + 12*x*y*z*t", 4, 20).unwrap();
    let s = mat("m12_S", 20);
    let p = scalar("3+20*E+28*E^2+16*E^3+i*(17+20*E+4*E^2-8*E^3)", 5, &ctx).unwrap();
    let target = parse_form("x^3*y + y^3*z + z^3*t + t^3*x + 3*x*y*z*t", 4, 20)
        .unwrap()
        .checked_add(
            &parse_form("x^2*z^2 + y^2*t^2 + 2*x*y*z*t", 4, 20)
                .unwrap()
                .scale(&scalar("-3/4*(1+i)", 1, &ctx).unwrap()),
        )
        .unwrap()
        .scale(&(Cyc::int(&ctx, 80) * &p));
    let lhs = m12.act(&s.inverse().unwrap()).unwrap();
    if lhs == target {
        Ok(())
    } else {
        Err(format!("got {lhs}"))
    }
}

fn unscreened(q: u64) -> Vec<(String, u64)> {
    invariant_screen_report(q, 4)
        .unwrap()
        .unscreened
        .into_iter()
        .map(|u| (u.class, u.index))
        .collect()
}

fn criterion_12() -> Outcome {
    let mut failures = Vec::new();
    for q in [11, 13, 49] {
        let u = unscreened(q);
        ensure(u.is_empty(), format!("q={q} leaves {u:?}"), &mut failures);
    }
    let u5 = unscreened(5);
    ensure(
        u5 == [("D_{2,3}".to_string(), 1)],
        format!("q=5 leaves {u5:?}"),
        &mut failures,
    );
    let u7: BTreeSet<_> = unscreened(7).into_iter().collect();
    let want: BTreeSet<_> = [("D_6".to_string(), 3), ("D_{2,4}".to_string(), 0)]
        .into_iter()
        .collect();
    ensure(u7 == want, format!("q=7 leaves {u7:?}"), &mut failures);
    outcome(failures)
}

fn arb_cyc(ctx: CycContext) -> impl Strategy<Value = Cyc> {
    let deg = ctx.degree();
    (prop::collection::vec(-5i64..=5, deg), 1i64..=3).prop_map(move |(v, d)| {
        let c: Vec<BigRational> = v.iter().map(|&k| BigRational::new(k.into(), d.into())).collect();
        Cyc::from_coeffs(&ctx, &c)
    })
}

fn arb_invertible(ctx: CycContext) -> impl Strategy<Value = SquareMatrix<Cyc>> {
    prop::collection::vec(-3i64..=3, 16).prop_map(move |v| {
        let mut rows: Vec<Vec<Cyc>> = v
            .chunks(4)
            .map(|r| r.iter().map(|&k| Cyc::int(&ctx, k)).collect())
            .collect();
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = row[k].clone() + &Cyc::int(&ctx, 13);
        }
        SquareMatrix::from_rows(rows).unwrap()
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn criterion_13() -> Outcome {
    let mut failures = Vec::new();
    for n in [5u32, 7, 8, 12, 20, 56, 60, 120] {
        let ctx = context(n).unwrap();
        let one = Cyc::int(&ctx, 1);
        let strat = (arb_cyc(ctx.clone()), arb_cyc(ctx.clone()), arb_cyc(ctx.clone()));
        let r = runner(32).run(&strat, |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), one.clone());
            }
            Ok(())
        });
        ensure(r.is_ok(), format!("field axioms at N={n}: {r:?}"), &mut failures);
    }
    let ctx = context(1).unwrap();
    let forms = ["x^3*y + y^3*z + z^3*t + t^3*x", "x^4 - 2*x*y*z*t + 3*z^2*t^2"];
    let strat = (
        prop::sample::select(forms.to_vec()),
        arb_invertible(ctx.clone()),
        arb_invertible(ctx.clone()),
    );
    let r = runner(12).run(&strat, |(text, a, b)| {
        let f = parse_form(text, 4, 1).unwrap();
        prop_assert_eq!(f.act(&a).unwrap().act(&b).unwrap(), f.act(&(&b * &a)).unwrap());
        Ok(())
    });
    ensure(r.is_ok(), format!("act contravariance: {r:?}"), &mut failures);
    let ctx4 = context(4).unwrap();
    let pool: Vec<SquareMatrix<Cyc>> = ["g16_a", "g16_b", "s3_swap", "s3_cycle", "H2", "K3", "T2"]
        .iter()
        .map(|n| mat(n, 4))
        .collect();
    let strat = prop::sample::subsequence(pool, 1..=3);
    let r = runner(12).run(&strat, |gens| {
        let g = closure(&gens, 4, &ctx4, DEFAULT_CAP).unwrap();
        for x in g.elements() {
            for gen in g.generators() {
                prop_assert!(g.contains(&x.mul(gen)));
            }
        }
        Ok(())
    });
    ensure(r.is_ok(), format!("closure closedness: {r:?}"), &mut failures);
    for q in [5u64, 7] {
        let strat = (
            prop::collection::vec(0..q, 4),
            1..q,
            0..q,
            Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        );
        let r = runner(64).run(&strat, |(exps, unit, shift, perm)| {
            let Ok(base) = classify_cyclic(q, &exps) else {
                return Ok(());
            };
            let moved: Vec<u64> = perm.iter().map(|&k| (exps[k] * unit + shift) % q).collect();
            prop_assert_eq!(classify_cyclic(q, &moved).unwrap(), base);
            Ok(())
        });
        ensure(
            r.is_ok(),
            format!("classification invariance at q={q}: {r:?}"),
            &mut failures,
        );
        let count = class_representatives(q).len();
        ensure(count as u64 == q, format!("q={q} has {count} classes"), &mut failures);
    }
    outcome(failures)
}

fn criterion_14() -> Outcome {
    let mut failures = Vec::new();
    let cond = 480;
    let ctx = context(cond).unwrap();
    let a = Cyc::zeta(&ctx, 3);
    ensure(a.pow(80) == Cyc::int(&ctx, -1), "alpha^80 = -1", &mut failures);
    let ai = a.inverse().unwrap();
    let t0 = SquareMatrix::diagonal(&[a.clone(), ai.pow(3), a.pow(9), -ai.pow(27)]);
    let t1 = &t0 * &SquareMatrix::diagonal(&[1, 1, 1, -1].map(|k| Cyc::int(&ctx, k)));
    let theta = a.pow(20);
    let f0 = parse_form(
        "x^3*y - y^3*z + z^3*t + t^3*x - sqrt3/2*x^2*z^2 - sqrt3/2*y^2*t^2",
        4,
        cond,
    )
    .unwrap();
    let f1 = parse_form(
        "x^3*y + y^3*z + z^3*t - t^3*x + sqrt3*x^2*z^2 - sqrt3*y^2*t^2 + 3*sqrt3*x*y*z*t",
        4,
        cond,
    )
    .unwrap();
    let cyclic = parse_form("x^3*y + y^3*z + z^3*t + t^3*x", 4, cond).unwrap();
    let r3 = scalar("sqrt3", 1, &ctx).unwrap();
    let want0 = cyclic
        .checked_add(
            &parse_form("x^2*z^2 - y^2*t^2", 4, cond)
                .unwrap()
                .scale(&(r3.clone() * &theta * &Cyc::rational(&ctx, &BigRational::new(1.into(), 2.into())))),
        )
        .unwrap();
    let want1 = cyclic
        .checked_add(
            &parse_form("x^2*z^2 + y^2*t^2", 4, cond)
                .unwrap()
                .scale(&(r3.clone() * &theta)),
        )
        .unwrap()
        .checked_add(
            &parse_form("x*y*z*t", 4, cond)
                .unwrap()
                .scale(&(Cyc::int(&ctx, -3) * &r3 * &theta.pow(3))),
        )
        .unwrap();
    let g0 = f0.act(&t0.inverse().unwrap()).unwrap();
    let g1 = f1.act(&t1.inverse().unwrap()).unwrap();
    ensure(g0 == want0, format!("f0' under T0 gives {g0}"), &mut failures);
    ensure(g1 == want1, format!("f1' under T1 gives {g1}"), &mut failures);
    outcome(failures)
}

type Criterion = (usize, &'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        (1, "index tables", criterion_1),
        (2, "eigenspace bases and fibers", criterion_2),
        (3, "quintic discriminant identities", criterion_3),
        (4, "F0, F1 invariance", criterion_4),
        (5, "S, V, W and product identities", criterion_5),
        (6, "PSL(2,7) triples", criterion_6),
        (7, "order-168 invariants", criterion_7),
        (8, "Klein quartic Hessian chain", criterion_8),
        (9, "order-80 group and singular points", criterion_9),
        (10, "order-1920 group", criterion_10),
        (11, "M12 normal form", criterion_11),
        (12, "eigenspace screens", criterion_12),
        (13, "property suites", criterion_13),
        (14, "stretched normal forms", criterion_14),
    ];
    let results: Vec<(usize, &str, Outcome)> = criteria.par_iter().map(|(k, name, f)| (*k, *name, f())).collect();
    let mut failing = Vec::new();
    for (k, name, r) in &results {
        match r {
            Ok(()) => println!("PASS {k:>2} {name}"),
            Err(detail) => {
                println!("FAIL {k:>2} {name}: {detail}");
                failing.push(*k);
            }
        }
    }
    assert_eq!(failing, KNOWN_FAILING, "failing criteria differ from the recorded set");
}
