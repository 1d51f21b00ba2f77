use proptest::prelude::*;

use pshlab::combinat::{partitions, Partition};
use pshlab::cyclo::{rat, CycloNumber};
use pshlab::symgroup::Permutation;

fn cyclo(n: u32) -> impl Strategy<Value = CycloNumber> {
    prop::collection::vec(-4i64..=4, n as usize).prop_map(move |cs| {
        cs.iter()
            .enumerate()
            .fold(CycloNumber::zero(), |acc, (k, &c)| acc + CycloNumber::root_of_unity(n, k as i64).unwrap().scale(&rat(c)))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=8).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// Hook length formula, independent of the removable-node recursion.
fn hook_count(p: &Partition) -> u64 {
    let conj = p.conjugate();
    let mut num: u128 = (1..=p.n() as u128).product();
    let mut den: u128 = 1;
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            den *= (row - j + conj.part(j + 1) - i - 1) as u128;
        }
    }
    num /= den;
    num as u64
}

proptest! {
    #[test]
    fn ring_axioms(a in cyclo(12), b in cyclo(12), c in cyclo(12)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn inverses(a in cyclo(8)) {
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycloNumber::one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_map(a in cyclo(15), b in cyclo(15)) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        let norm = &a * &a.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn roots_of_unity(n in 1u32..30, j in -40i64..40, k in -40i64..40) {
        let z = |e: i64| CycloNumber::root_of_unity(n, e).unwrap();
        prop_assert_eq!(&z(j) * &z(k), z(j + k));
        prop_assert_eq!(z(j).pow(n), CycloNumber::one());
    }

    #[test]
    fn lifting_preserves_values(a in cyclo(6)) {
        prop_assert_eq!(a.lift(18), a.clone());
        prop_assert_eq!(a.lift(18).minimize(), a.minimize());
    }

    #[test]
    fn conjugate_partition_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().n(), p.n());
    }

    #[test]
    fn standard_tableaux_match_hook_lengths(p in partition()) {
        prop_assert_eq!(p.count_standard_tableaux(), hook_count(&p));
        if p.n() <= 6 {
            prop_assert_eq!(p.standard_tableaux().len() as u64, hook_count(&p));
        }
    }

    #[test]
    fn dominance_reverses_under_conjugation(a in partition(), b in partition()) {
        if a.n() == b.n() {
            prop_assert_eq!(a.dominates(&b).unwrap(), b.conjugate().dominates(&a.conjugate()).unwrap());
        }
    }

    #[test]
    fn permutation_group_laws(s in permutation(7), t in permutation(7), u in permutation(7)) {
        prop_assert_eq!(&(&s * &t) * &u, &s * &(&t * &u));
        prop_assert!((&s * &s.inverse()).is_identity());
        prop_assert_eq!(i64::from((&s * &t).sign()), i64::from(s.sign()) * i64::from(t.sign()));
        prop_assert_eq!((&(&s * &t) * &s.inverse()).cycle_type(), t.cycle_type());
        for i in 1..=7 {
            prop_assert_eq!((&s * &t).apply(i), s.apply(t.apply(i)));
        }
    }

    #[test]
    fn cycle_notation_roundtrip(s in permutation(6)) {
        let text = s.to_string();
        prop_assert_eq!(Permutation::from_cycles(&text, 6).unwrap(), s);
    }
}
