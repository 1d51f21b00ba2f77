use pshlab::psh::{gl_instance, symmetric_instance, verify_fibred_grading, wreath_instance};

fn assert_all(reports: Vec<pshlab::report::CheckReport>) {
    for r in reports {
        assert!(r.passed(), "{} on {}: {:?}", r.check, r.instance, &r.failures[..r.failures.len().min(3)]);
        assert!(r.cases > 0);
    }
}

#[test]
fn symmetric_through_degree_six() {
    let r = symmetric_instance(6).unwrap();
    assert_all(r.verify_all(6));
    assert!(r.decompose(6).unwrap().is_tensor_product());
    assert_eq!(r.primitives(1).len(), 1);
    for n in 2..=6 {
        assert!(r.primitives(n).is_empty());
    }
}

#[test]
fn wreath_c2_through_degree_three() {
    let r = wreath_instance(3).unwrap();
    assert_eq!(r.dim(3), 10);
    assert_all(r.verify_all(3));
    let d = r.decompose(3).unwrap();
    assert_eq!(d.blocks.len(), 2);
    assert!(d.is_tensor_product(), "{d:?}");
}

#[test]
fn gl_through_degree_two() {
    for q in [2, 3] {
        let r = gl_instance(q, 2).unwrap();
        assert_all(r.verify_all(2));
        assert!(verify_fibred_grading(q, &r).unwrap().passed());
        let d = r.decompose(2).unwrap();
        assert!(d.is_tensor_product(), "q={q}: {d:?}");
    }
}

#[test]
fn gl_cuspidal_has_only_extreme_components() {
    let r = gl_instance(2, 2).unwrap();
    for w in r.primitives(2) {
        assert!(r.coproduct_rule(2, 1, w).iter().flatten().all(|&c| c == 0));
        assert_eq!(r.coproduct_rule(2, 0, w)[0][w], 1);
    }
}
