use std::time::Instant;

use hopfres::ncalg::*;
use hopfres::{Qi, QiMatrix};

fn geometric() -> QiMatrix {
    QiMatrix::diag_frac(&[(1, 2), (1, 1), (2, 1)])
}

fn reflection() -> QiMatrix {
    QiMatrix::from_ints(&[&[0, 0, 2], &[0, 1, 0], &[1, 0, 0]])
}

fn assert_passes(r: &VerificationReport) {
    assert!(r.passed(), "{:?}", r.clone().into_result().err());
    assert_eq!(r.audit().unwrap(), r.items.len());
}

#[test]
fn resolution_complexes_close_up() {
    let i2 = QiMatrix::identity(2);
    let i3 = QiMatrix::identity(3);
    for p in [
        presentation_b(&i2).unwrap(),
        presentation_b(&i3).unwrap(),
        presentation_a(&i2).unwrap(),
        presentation_a(&i3).unwrap(),
        presentation_h(&i2).unwrap(),
        presentation_h(&geometric()).unwrap(),
    ] {
        let t = Instant::now();
        let r = verify_resolution_complex(&p, 3).unwrap();
        assert_passes(&r);
        eprintln!("complex {:?}: {} items in {:?}", p.kind(), r.items.len(), t.elapsed());
    }
}

#[test]
fn mutated_resolution_is_rejected() {
    let h = presentation_h(&QiMatrix::identity(2)).unwrap();
    let mut res = resolution_matrices(&h).unwrap();
    let flipped = res.maps[1].get(4, 0).neg();
    res.maps[1].set(4, 0, flipped);
    let r = run_resolution_with(&h, &res, 3).unwrap();
    assert!(!r.passed());
    assert!(r.into_result().is_err());
}

#[test]
fn glued_embeddings() {
    for e in [QiMatrix::identity(2), QiMatrix::identity(3), reflection()] {
        let t = Instant::now();
        let r = verify_glued_embedding(&e, 4).unwrap();
        assert_passes(&r);
        eprintln!("glued {e:?}: {:?}", t.elapsed());
    }
    let r = run_glued_embedding(&QiMatrix::identity(2), 4, GluedVariant::WithoutG).unwrap();
    assert_eq!(r.status(), SuiteStatus::Failed);
}

#[test]
fn hopf_axioms() {
    let i2 = QiMatrix::identity(2);
    for p in [presentation_b(&i2).unwrap(), presentation_a(&i2).unwrap(), presentation_h(&i2).unwrap()] {
        let t = Instant::now();
        let r = verify_hopf(&p, 4).unwrap();
        assert_passes(&r);
        eprintln!("hopf {:?}: {:?}", p.kind(), t.elapsed());
    }
}

#[test]
fn hopf_negative_controls() {
    let h = presentation_h(&QiMatrix::identity(2)).unwrap();
    // drop vᵗu − I
    let dropped = h.without_relations(|i| (4..8).contains(&i)).unwrap();
    let r = run_hopf(&dropped, 4).unwrap();
    assert_ne!(r.status(), SuiteStatus::Passed);
    let mut maps = hopf_maps(&h).unwrap();
    let l = h.alphabet().letter("u12").unwrap() as usize;
    maps.antipode[l] = maps.antipode[l].neg();
    let r = run_hopf_with(&h, &maps, 4).unwrap();
    assert_ne!(r.status(), SuiteStatus::Passed);
}

#[test]
fn membership_is_monotone_in_the_bound() {
    let h = presentation_h(&QiMatrix::identity(2)).unwrap();
    let oracle = IdealOracle::new(h.clone());
    let p = &(&h.var("v21") * &h.relations()[5]) - &h.relations()[9].scale(&Qi::frac(1, 3));
    for d in 3..=5 {
        let m = oracle.member(&p, d).unwrap();
        assert_eq!(m.certificate().unwrap().replay(&h).unwrap(), p);
    }
}

#[test]
fn yd_colinearity() {
    let t = Instant::now();
    let r = verify_yd_colinearity(&QiMatrix::identity(2), 6).unwrap();
    assert_passes(&r);
    eprintln!("yd I2: {} items, {} cert terms, {:?}", r.items.len(), r.certificate_terms(), t.elapsed());
    let r = run_yd_colinearity(&QiMatrix::identity(2), 6, YdVariant::SwappedUV).unwrap();
    eprintln!("swapped: {:?}", r.status());
    assert_ne!(r.status(), SuiteStatus::Passed);
}

#[test]
fn yd_colinearity_non_identity_parameter() {
    let f = QiMatrix::diag_frac(&[(1, 1), (2, 1)]);
    let r = verify_yd_colinearity(&f, 6).unwrap();
    assert_passes(&r);
    // the scalar component is a relation, not literally zero
    let first = r.items.iter().find(|i| i.label.starts_with("Psi3[1,1] b=0 e=0")).unwrap();
    assert!(!first.poly.is_zero());
}
