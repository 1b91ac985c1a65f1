use proptest::prelude::*;

use super::*;
use crate::field::{context, BigRational};
use crate::text::parse_form;

fn pf(text: &str, n: usize, cond: u32) -> Form<Cyc> {
    parse_form(text, n, cond).unwrap()
}

fn int(cond: u32, v: i64) -> Cyc {
    Cyc::int(&context(cond).unwrap(), v)
}

fn rat(cond: u32, n: i64, d: i64) -> Cyc {
    Cyc::rational(&context(cond).unwrap(), &BigRational::new(n.into(), d.into()))
}

fn unit(cond: u32) -> Cyc {
    int(cond, 1)
}

fn cycle_matrix(cond: u32) -> SquareMatrix<Cyc> {
    // columns e4, e1, e2, e3
    let one = unit(cond);
    SquareMatrix::from_columns(&[(3, one.clone()), (0, one.clone()), (1, one.clone()), (2, one)])
}

#[test]
fn substitution_examples() {
    let f = pf("x^3*y + 2*y^4 - x*y*z*t", 4, 1);
    let id = SquareMatrix::identity(4, &context(1).unwrap());
    assert_eq!(f.substitute(&id).unwrap(), f);

    let x2 = pf("x^2", 2, 1);
    let d = SquareMatrix::diagonal(&[int(1, 2), int(1, 1)]);
    assert_eq!(x2.substitute(&d).unwrap(), pf("4*x^2", 2, 1));

    let xy = pf("x*y", 2, 1);
    let swap = SquareMatrix::from_columns(&[(1, unit(1)), (0, unit(1))]);
    assert_eq!(xy.substitute(&swap).unwrap(), xy);
}

#[test]
fn action_on_the_cyclic_quartic() {
    let f = pf("x^3*y + y^3*z + z^3*t + t^3*x", 4, 20);
    let c = cycle_matrix(20);
    assert_eq!(f.act(&c.inverse().unwrap()).unwrap(), f);

    let ctx = context(20).unwrap();
    let beta = Cyc::zeta(&ctx, 1);
    let b = SquareMatrix::diagonal(&[unit(20), beta.clone(), Cyc::zeta(&ctx, -2), Cyc::zeta(&ctx, 7)]);
    assert_eq!(f.act(&b.inverse().unwrap()).unwrap(), f.scale(&beta));
}

#[test]
fn action_checks_inputs() {
    let f = pf("x^4", 4, 5);
    let m = SquareMatrix::identity(4, &context(7).unwrap());
    assert!(matches!(f.act(&m), Err(Error::ConductorMismatch { .. })));
    let singular = SquareMatrix::diagonal(&[unit(5), unit(5), unit(5), int(5, 0)]);
    assert_eq!(f.act(&singular), Err(Error::SingularMatrix));
}

#[test]
fn partial_derivatives() {
    let x4 = pf("x^4", 4, 1);
    let p = x4.partials();
    assert_eq!(p[0], pf("4*x^3", 4, 1));
    assert!(p[1].is_zero() && p[2].is_zero() && p[3].is_zero());

    for lam in [-4i64, 0, 3] {
        let g = pf(&format!("x^3*y + y^3*z + z^3*x + t^4 + ({lam})*x*y*z*t"), 4, 1);
        let p = g.partials();
        assert_eq!(p[0], pf(&format!("3*x^2*y + z^3 + ({lam})*y*z*t"), 4, 1));
        assert_eq!(p[1], pf(&format!("x^3 + 3*y^2*z + ({lam})*x*z*t"), 4, 1));
        assert_eq!(p[2], pf(&format!("y^3 + 3*z^2*x + ({lam})*x*y*t"), 4, 1));
        assert_eq!(p[3], pf(&format!("4*t^3 + ({lam})*x*y*z"), 4, 1));
    }
}

#[test]
fn euler_identity() {
    let f = pf("x^3*y - 7*y^2*z^2 + 5/3*x*y*z*t + e(5,2)*t^4", 4, 5);
    let mut acc = Form::zero(4, 4, &context(5).unwrap());
    for (i, p) in f.partials().iter().enumerate() {
        acc = &acc + &(&Form::variable(4, i, &context(5).unwrap()) * p);
    }
    assert_eq!(acc, f.scale(&int(5, 4)));
}

/// Leibniz expansion of the Hessian determinant, used as an oracle.
fn hessian_by_permutations(f: &Form<Cyc>) -> Form<Cyc> {
    let n = f.nvars();
    let h: Vec<Vec<Form<Cyc>>> = f.partials().iter().map(|p| p.partials()).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Form::zero(n, 0, f.context());
    let mut perms = Vec::new();
    permute(&mut perm, 0, &mut perms);
    for p in perms {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut t = Form::constant(n, Cyc::one_in(f.context()));
        for i in 0..n {
            t = &t * &h[i][p[i]];
        }
        if inversions % 2 == 1 {
            t = -&t;
        }
        out = force_add(&out, &t);
    }
    out
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

#[test]
fn hessian_of_fermat_quartic() {
    let f = pf("x^4 + y^4 + z^4 + t^4", 4, 1);
    assert_eq!(f.hessian(), pf("20736*x^2*y^2*z^2*t^2", 4, 1));
    assert_eq!(12i64.pow(4), 20736);
}

#[test]
fn hessian_of_the_cyclic_quartic() {
    let f = pf("x^3*y + y^3*z + z^3*t + t^3*x", 4, 1);
    let h = pf(
        "x^4*z^4 + y^4*t^4 - 4*(x^5*z*t^2 + x^2*y^5*t + x*y^2*z^5 + y*z^2*t^5) + 14*x^2*y^2*z^2*t^2",
        4,
        1,
    );
    let hess = f.hessian();
    assert_eq!(hess, h.scale(&int(1, 81)));
    assert_eq!(hess, hessian_by_permutations(&f));
}

#[test]
fn hessian_of_the_dwork_pencil() {
    for (num, den) in [(1i64, 1i64), (12, 1), (-5, 3), (7, 2)] {
        let lam = rat(1, num, den);
        let mu = rat(1, num, 12 * den);
        let m = pf(&format!("x^4 + y^4 + z^4 + t^4 + ({num}/{den})*x*y*z*t"), 4, 1);
        let g = {
            let a = unit(1) - int(1, 3) * mu.pow(4);
            let b = int(1, 2) * mu.pow(3);
            let c = -mu.pow(2);
            let p1 = pf("x^2*y^2*z^2*t^2", 4, 1).scale(&a);
            let p2 = pf("x*y*z*t*(x^4 + y^4 + z^4 + t^4)", 4, 1).scale(&b);
            let p3 = pf("x^4*(y^4 + z^4 + t^4) + y^4*(z^4 + t^4) + z^4*t^4", 4, 1).scale(&c);
            &(&p1 + &p2) + &p3
        };
        assert_eq!(m.hessian(), g.scale(&int(1, 20736)), "lambda = {lam}");
        let _ = lam;
    }
}

#[test]
fn proportionality_cases() {
    let f = pf("x^3*y + y^3*z + z^3*t + t^3*x + 3*x*y*z*t", 4, 1);
    let g = pf("x^2*z^2 + y^2*t^2 + 2*x*y*z*t", 4, 1);
    assert_eq!(f.scale(&int(1, 2)).proportionality(&f).unwrap(), Some(int(1, 2)));
    assert_eq!(f.proportionality(&g).unwrap(), None);
    let z = Form::zero(4, 4, &context(1).unwrap());
    assert_eq!(z.proportionality(&z), Err(Error::Indeterminate));
    assert_eq!(z.proportionality(&f).unwrap(), None);
}

#[test]
fn evaluation() {
    let f = pf("x^3*y + y^3*z + z^3*t + t^3*x", 4, 1);
    let ones = vec![unit(1); 4];
    assert_eq!(f.evaluate(&ones).unwrap(), int(1, 4));
    let g = pf("x^3*y + y^3*z + z^3*x + t^4 - 4*x*y*z*t", 4, 1);
    for p in g.partials() {
        assert!(p.evaluate(&ones).unwrap().is_zero());
    }
    assert!(matches!(f.evaluate(&ones[..3]), Err(Error::DimensionMismatch(_))));
}

#[test]
fn display_round_trips() {
    let f = pf("-x^4 + 1/2*x*y*z*t - (e(5,1) + 1)*t^4", 4, 5);
    assert_eq!(f.to_string(), "-x^4 + 1/2*x*y*z*t + (-1 - e(5,1))*t^4");
    assert_eq!(pf(&f.to_string(), 4, 5), f);
}

const COND: u32 = 12;

fn arb_scalar() -> impl Strategy<Value = Cyc> {
    let ctx = context(COND).unwrap();
    (prop::collection::vec(-3i64..=3, ctx.degree()), 1i64..=3).prop_map(move |(v, d)| {
        let coeffs: Vec<BigRational> = v.iter().map(|&k| BigRational::new(k.into(), d.into())).collect();
        Cyc::from_coeffs(&ctx, &coeffs)
    })
}

fn arb_matrix() -> impl Strategy<Value = SquareMatrix<Cyc>> {
    prop::collection::vec(arb_scalar(), 16)
        .prop_map(|v| SquareMatrix::from_rows(v.chunks(4).map(|r| r.to_vec()).collect()).unwrap())
        .prop_filter("invertible", |m| !m.det().is_zero())
}

fn arb_form(d: u32) -> impl Strategy<Value = Form<Cyc>> {
    let ms = all_monomials(4, d);
    prop::collection::vec(prop::option::weighted(0.3, arb_scalar()), ms.len()).prop_map(move |cs| {
        let ctx = context(COND).unwrap();
        let mut f = Form::zero(4, d, &ctx);
        for (m, c) in ms.iter().zip(cs) {
            if let Some(c) = c {
                f.add_term(*m, c);
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn action_is_contravariant(f in arb_form(4), a in arb_matrix(), b in arb_matrix()) {
        let ab = &a * &b;
        prop_assert_eq!(f.act(&ab).unwrap(), f.act(&b).unwrap().act(&a).unwrap());
    }

    #[test]
    fn substitution_composes(f in arb_form(3), a in arb_matrix(), b in arb_matrix()) {
        let ab = &a * &b;
        prop_assert_eq!(f.substitute(&ab).unwrap(), f.substitute(&a).unwrap().substitute(&b).unwrap());
    }

    #[test]
    fn hessian_is_covariant(f in arb_form(3), a in arb_matrix()) {
        let lhs = f.act(&a).unwrap().hessian();
        let det_inv = a.det().inverse().unwrap();
        let rhs = f.hessian().act(&a).unwrap().scale(&(det_inv.clone() * &det_inv));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(f in arb_form(4)) {
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
            }
        }
    }

    #[test]
    fn hessian_matches_permutation_expansion(f in arb_form(3)) {
        prop_assert_eq!(f.hessian(), hessian_by_permutations(&f));
    }
}
