use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::field::BigRational;
use crate::text::parse_form;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rpoly(coeffs: &[i64]) -> UniPoly<BigRational> {
    UniPoly::new(&(), coeffs.iter().map(|&c| q(c, 1)).collect())
}

fn cyc(cond: u32, v: i64) -> Cyc {
    Cyc::int(&context(cond).unwrap(), v)
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// Leibniz expansion over all permutations.
fn det_by_permutations(m: &[Vec<Cyc>]) -> Cyc {
    fn go(m: &[Vec<Cyc>], row: usize, used: &mut Vec<bool>, sign: bool, acc: Cyc, out: &mut Cyc) {
        if acc.is_zero() {
            return;
        }
        if row == m.len() {
            *out = if sign { out.clone() - &acc } else { out.clone() + &acc };
            return;
        }
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            let flips = used[c + 1..].iter().filter(|&&u| u).count() % 2 == 1;
            used[c] = true;
            go(m, row + 1, used, sign ^ flips, acc.clone() * &m[row][c], out);
            used[c] = false;
        }
    }
    let ctx = m[0][0].ctx().clone();
    let mut out = Cyc::int(&ctx, 0);
    go(m, 0, &mut vec![false; m.len()], false, Cyc::int(&ctx, 1), &mut out);
    out
}

#[test]
fn resultant_examples() {
    // (x - 2), (x - 5)
    assert_eq!(resultant(&rpoly(&[-2, 1]), &rpoly(&[-5, 1])).unwrap(), q(-3, 1));
    assert_eq!(resultant(&rpoly(&[-1, 0, 1]), &rpoly(&[-1, 1])).unwrap(), q(0, 1));
    assert!(resultant(&rpoly(&[]), &rpoly(&[-1, 1])).is_err());
    assert_eq!(resultant(&rpoly(&[3]), &rpoly(&[1, 2, 1])).unwrap(), q(9, 1));
}

#[test]
fn resultant_is_the_product_of_root_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let a: Vec<i64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(-5..=5)).collect();
        let b: Vec<i64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(-5..=5)).collect();
        let from_roots = |roots: &[i64]| roots.iter().fold(rpoly(&[1]), |p, &r| p.mul(&rpoly(&[-r, 1])));
        let expected = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| q(x - y, 1)))
            .fold(q(1, 1), |acc, d| acc * d);
        assert_eq!(resultant(&from_roots(&a), &from_roots(&b)).unwrap(), expected);
    }
}

#[test]
fn criterion_values() {
    let c = |v| cyc(1, v);
    for lam in [-4, 0, 3, 4, 7] {
        let r = r_evaluate(&c(0), &c(0), &c(lam)).unwrap();
        assert_eq!(r.r, c(256 - lam.pow(4)));
    }
    for mu in [-2, 1, 5] {
        assert_eq!(r_evaluate(&c(mu), &c(0), &c(0)).unwrap().r, c(256 - 729 * mu.pow(4)));
    }
    assert_eq!(r_evaluate(&c(0), &c(0), &c(0)).unwrap().r, c(256));
    assert!(r_evaluate(&c(0), &cyc(5, 0), &c(0)).is_err());
}

#[test]
fn criterion_on_the_coordinate_planes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let zero = q(0, 1);
    let n = |k: i64| q(k, 1);
    for _ in 0..220 {
        let (u, v, w) = (
            random_rational(&mut rng),
            random_rational(&mut rng),
            random_rational(&mut rng),
        );
        let a = n(16) - n(18) * &u * &w;
        let b = n(27) * &u * &u - &w * &w + &u * &w * &w * &w;
        assert_eq!(r_evaluate(&u, &zero, &w).unwrap().r, &a * &a - &b * &b);
        let a = n(16) * (n(1) + n(3) * &u * &u * &v * &v);
        let b = n(27) * &u * &u + n(6) * &u * &v + n(27) * &v * &v - n(16) * &u * &u * &u * &v * &v * &v;
        assert_eq!(r_evaluate(&u, &v, &zero).unwrap().r, &a * &a - &b * &b);
        assert_eq!(r_evaluate(&u, &v, &w).unwrap().r, r_evaluate(&v, &u, &w).unwrap().r);
    }
}

#[test]
fn families() {
    let c = |v| cyc(4, v);
    assert!(family_is_singular(&FamilyParams::F7 { lam: c(-4) }));
    assert!(!family_is_singular(&FamilyParams::M { lam: c(12) }));
    assert!(!family_is_singular(&FamilyParams::F5 {
        mu: c(0),
        nu: c(0),
        lam: c(0)
    }));
    let i4 = Cyc::zeta(&context(4).unwrap(), 1) * &c(4);
    assert!(family_is_singular(&FamilyParams::M { lam: i4 }));
    assert_eq!(
        FamilyParams::F7 { lam: cyc(1, 2) }.form(),
        parse_form("x^3*y + y^3*z + z^3*x + t^4 + 2*x*y*z*t", 4, 1).unwrap()
    );
    assert!(matches!(
        FamilyParams::from_parts("F5", vec![c(1)]),
        Err(Error::BadParams { .. })
    ));
    assert!(matches!(
        FamilyParams::from_parts("G", vec![]),
        Err(Error::UnknownId(_))
    ));
    assert_eq!(
        serde_json::to_string(&singular_report(&FamilyParams::F5 {
            mu: c(0),
            nu: c(0),
            lam: c(0)
        }))
        .unwrap(),
        r#"{"singular":false,"R":"256"}"#
    );
}

#[test]
fn critical_points() {
    let ones = vec![cyc(1, 1); 4];
    let g = FamilyParams::F7 { lam: cyc(1, -4) }.form();
    assert!(critical_point_check(&g, &ones).unwrap());
    let m = FamilyParams::M { lam: cyc(1, -4) }.form();
    assert!(critical_point_check(&m, &ones).unwrap());
    let f = FamilyParams::F5 {
        mu: cyc(1, 0),
        nu: cyc(1, 0),
        lam: cyc(1, 0),
    }
    .form();
    let e1 = [1, 0, 0, 0].map(|v| cyc(1, v));
    assert!(!critical_point_check(&f, &e1).unwrap());
    assert!(critical_point_check(&f, &[0, 0, 0, 0].map(|v| cyc(1, v))).is_err());
    assert!(critical_point_check(&f, &ones[..3]).is_err());
}

#[test]
fn sylvester_determinant_identity() {
    let ctx = context(10).unwrap();
    let c = |v| Cyc::int(&ctx, v);
    for (mu, nu, lam) in [(1, 1, 1), (0, 0, 0), (2, -1, 3)] {
        for k in 0..10 {
            let y = Cyc::zeta(&ctx, k);
            let s = quintic_sylvester(&c(mu), &c(nu), &c(lam), &y);
            let r = r_evaluate(&c(mu), &c(nu), &c(lam)).unwrap();
            let expected = c(4) * &y * &(r.r0 + y.pow(5) * &r.r1);
            assert_eq!(det_by_permutations(&s), expected);
            let (h2, h3) = quintic_cubics(&c(mu), &c(nu), &c(lam), &y);
            assert_eq!(resultant(&h2, &h3).unwrap(), expected);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let [mu, nu, lam] = [0; 3].map(|_| Cyc::rational(&ctx, &random_rational(&mut rng)));
        for k in 0..10 {
            assert!(det_s_identity_check(&mu, &nu, &lam, &Cyc::zeta(&ctx, k)).unwrap());
        }
    }
    assert!(det_s_identity_check(&c(1), &c(1), &c(1), &c(2)).is_err());
}

/// Parameters for which `(y^3 z, y, z, 1)` is singular, solved from the two
/// linear conditions in `nu` and `lam`.
fn singular_params(mu: &Cyc, y: &Cyc, z: &Cyc) -> (Cyc, Cyc) {
    let ctx = y.ctx();
    let nu = (mu.clone() * &z.pow(4) + y.pow(4) * &z.pow(3) - y.pow(7) * z)
        .try_div(&y.pow(6))
        .unwrap();
    let lam = -(z.pow(3) + Cyc::int(ctx, 3) * &y.pow(3) * z + Cyc::int(ctx, 2) * &nu * &y.pow(2))
        .try_div(&(y.pow(4) * &z.pow(2)))
        .unwrap();
    (nu, lam)
}

#[test]
fn witness_search_agrees_with_the_criterion() {
    let ctx = context(10).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut found = 0;
    for _ in 0..30 {
        let mu = Cyc::rational(&ctx, &random_rational(&mut rng));
        let y = Cyc::zeta(&ctx, rng.gen_range(0..10));
        let z = Cyc::rational(&ctx, &random_rational(&mut rng));
        if z.is_zero() {
            continue;
        }
        let (nu, lam) = singular_params(&mu, &y, &z);
        let fp = FamilyParams::F5 { mu, nu, lam };
        let point = [y.pow(3) * &z, y.clone(), z.clone(), Cyc::int(&ctx, 1)];
        assert!(critical_point_check(&fp.form(), &point).unwrap());
        assert!(family_is_singular(&fp));
        match witness_search(&fp).unwrap() {
            Witness::Point { .. } => found += 1,
            Witness::CriterionOnly { .. } => {}
            Witness::None => panic!("no witness for {fp:?}"),
        }
    }
    assert!(found > 20);
    for _ in 0..30 {
        let [mu, nu, lam] = [0; 3].map(|_| Cyc::rational(&ctx, &random_rational(&mut rng)));
        let fp = FamilyParams::F5 { mu, nu, lam };
        if !family_is_singular(&fp) {
            assert_eq!(witness_search(&fp).unwrap(), Witness::None);
        }
    }
    for lam in [-4, 4] {
        let fp = FamilyParams::M { lam: cyc(4, lam) };
        assert!(matches!(witness_search(&fp).unwrap(), Witness::Point { .. }));
        let fp = FamilyParams::F7 {
            lam: Cyc::zeta(&context(4).unwrap(), 1) * &cyc(4, lam),
        };
        assert!(matches!(witness_search(&fp).unwrap(), Witness::Point { .. }));
    }
    assert_eq!(
        witness_search(&FamilyParams::M { lam: cyc(4, 12) }).unwrap(),
        Witness::None
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_swaps_with_sign(
        a in prop::collection::vec(-6i64..=6, 2..6),
        b in prop::collection::vec(-6i64..=6, 2..6),
    ) {
        let (p, r) = (rpoly(&a), rpoly(&b));
        prop_assume!(p.degree().unwrap_or(0) >= 1 && r.degree().unwrap_or(0) >= 1);
        let sign = if p.degree().unwrap() * r.degree().unwrap() % 2 == 1 { q(-1, 1) } else { q(1, 1) };
        prop_assert_eq!(resultant(&p, &r).unwrap(), sign * resultant(&r, &p).unwrap());
    }
}
