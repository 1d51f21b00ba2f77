use pshlab::combinat::partitions;
use pshlab::cyclo::rat;
use pshlab::invariants::mezzadri::verify_cyclic_inductivity;
use pshlab::invariants::wreath::{verify_theorem73, wreath_over_gl, expected_class_count};
use pshlab::invariants::{f_lambda, Example74, QPoly};

#[test]
fn node_polynomials_of_conjugates() {
    for n in 1..=8 {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        for lam in partitions(n) {
            let f = f_lambda(&lam);
            assert_eq!(f, f_lambda(&lam.conjugate()).negate_x().scale(&sign), "{lam}");
            let row: i64 = (1..=n as i64).product();
            assert_eq!(f.eval(&rat(1)), if lam.len() == 1 { rat(row) } else { rat(0) }, "{lam}");
        }
    }
}

#[test]
fn hook_node_product_example() {
    // (3,2): nodes contribute x, x+1, x+2, x−1, x
    let want = &(&(&(&QPoly::x() * &QPoly::linear(1)) * &QPoly::linear(2)) * &QPoly::linear(-1)) * &QPoly::x();
    assert_eq!(f_lambda(&"(3,2)".parse().unwrap()), want);
}

#[test]
fn symmetric_group_invariant_is_inductive() {
    for n in 1..=5 {
        let r = verify_cyclic_inductivity(n).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}

#[test]
fn induced_specht_modules_over_c2() {
    for n in 1..=3 {
        for case in verify_theorem73(n, 1, 3).unwrap() {
            assert!(case.equal, "n={n} λ={}: {} vs {}", case.lambda, case.computed, case.expected);
        }
    }
}

#[test]
fn wreath_class_counts() {
    for (n, m, q) in [(1, 1, 3), (2, 1, 3), (3, 1, 3), (2, 1, 4), (2, 2, 2)] {
        let g = wreath_over_gl(n, m, q).unwrap();
        let hc = pshlab::glfq::gl_group(m, q).unwrap().num_classes();
        assert_eq!(g.num_classes(), expected_class_count(n, hc), "n={n} GL({m},{q})");
    }
}

#[test]
fn example_over_c2_is_reported_in_full() {
    let ex = Example74::new(3).unwrap();
    let cases = ex.cases().unwrap();
    assert_eq!(cases.len(), ex.g.num_classes());
    // the first display is dim·W for every character
    assert!(cases.iter().all(|c| c.display_g_matches));
    assert!(cases.iter().any(|c| c.theorem72_differs));
}
