use super::catalog::native_conductor;
use super::*;
use crate::error::Error;
use crate::field::{context, Cyc, Field};
use crate::forms::SquareMatrix;

#[test]
fn catalog_ids_resolve_at_native_conductor() {
    for name in form_ids() {
        let n = native_conductor(name).unwrap();
        let r = form_catalog(&CatalogId::new(name), n);
        if let Err(Error::BadParams { .. }) = r {
            continue;
        }
        assert!(r.is_ok(), "{name}: {r:?}");
    }
    for name in matrix_ids() {
        let n = native_conductor(name).unwrap();
        let r = matrix_catalog(&CatalogId::new(name), n);
        if let Err(Error::BadParams { .. }) = r {
            continue;
        }
        let m = r.unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!m.det().is_zero(), "{name} is singular");
    }
}

#[test]
fn catalog_rejects_small_conductor_and_unknown_ids() {
    assert!(matches!(
        matrix_catalog(&CatalogId::new("psl27_A"), 5),
        Err(Error::InsufficientConductor { .. })
    ));
    assert!(matches!(
        form_catalog(&CatalogId::new("no_such_form"), 5),
        Err(Error::UnknownId(_))
    ));
    assert!(matches!(
        form_catalog(&CatalogId::new("F5"), 5),
        Err(Error::BadParams { .. })
    ));
}

#[test]
fn catalog_embeds_consistently() {
    let small = matrix_catalog(&CatalogId::new("A7"), 7).unwrap();
    let big = matrix_catalog(&CatalogId::new("A7"), 56).unwrap();
    assert_eq!(small.embed(&context(56).unwrap()).unwrap(), big);
}

#[test]
fn a5_entries_are_fifth_roots() {
    let ctx = context(5).unwrap();
    let a = matrix_catalog(&CatalogId::new("A5"), 5).unwrap();
    let z = Cyc::zeta(&ctx, 1);
    let want = [z.pow(4), z.pow(3), z.clone(), z.pow(2)];
    for (k, w) in want.iter().enumerate() {
        assert_eq!(a.get(k, k), w);
    }
    assert!(a.pow(5).is_identity());
}

#[test]
fn psl27_relations_reject_wrong_orders() {
    let ctx = context(7).unwrap();
    let a = matrix_catalog(&CatalogId::new("psl27_A"), 7).unwrap();
    let b = matrix_catalog(&CatalogId::new("psl27_B"), 7).unwrap();
    let c = matrix_catalog(&CatalogId::new("psl27_C0"), 7).unwrap();
    assert!(verify_psl27(&a, &b, &c));
    let e = SquareMatrix::identity(4, &ctx);
    assert!(!verify_psl27(&a, &b, &e));
    assert!(!verify_psl27(&b, &a, &c));
    let zero = SquareMatrix::diagonal(&vec![Cyc::int(&ctx, 0); 4]);
    assert!(!verify_psl27(&a, &b, &zero));
}

#[test]
fn coxeter_relations() {
    let t: Vec<_> = ["T1", "T2", "T3", "T4"]
        .iter()
        .map(|n| matrix_catalog(&CatalogId::new(n), 4).unwrap())
        .collect();
    assert!(verify_s5_coxeter(&t));
    let same = vec![t[0].clone(); 4];
    assert!(!verify_s5_coxeter(&same));
    assert!(!verify_s5_coxeter(&t[..3]));
}

#[test]
fn make_z_shape() {
    let ctx = context(1).unwrap();
    let [t, a, b, g] = [5, 1, 2, 3].map(|k| Cyc::int(&ctx, k));
    let z = make_z(&t, &a, &b, &g).unwrap();
    assert_eq!(z.get(0, 1), &b);
    assert_eq!(z.get(1, 0), &b);
    assert_eq!(z.get(2, 0), &g);
    assert_eq!(z.get(3, 3), &Cyc::int(&ctx, 1));
    assert_eq!(z.transpose(), z);
}

#[test]
fn registry_ids_sorted_and_unique() {
    let ids = theorem_ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
    assert!(matches!(theorem_check("missing"), Err(Error::UnknownId(_))));
}

#[test]
fn registry_runs_a_cheap_entry() {
    let r = theorem_check("q5_screen").unwrap();
    assert_eq!(r.status, Status::Verified);
    assert!(r.failed_checks().is_empty());
}
