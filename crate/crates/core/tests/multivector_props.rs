mod common;

use clifford_ideals::multivector::rational;
use clifford_ideals::oracle::DenseTable;
use clifford_ideals::{parse_expression, Multivector, Nilpotency};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn ring_axioms_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for s in signatures_up_to(6) {
        let one = Multivector::one(s);
        let zero = Multivector::zero(s);
        for _ in 0..1000 {
            let a = random_mv(&mut rng, s, 4);
            let b = random_mv(&mut rng, s, 4);
            let c = random_mv(&mut rng, s, 4);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "associativity in {s}");
            assert_eq!(
                &a * &(&b + &c),
                &(&a * &b) + &(&a * &c),
                "left distributivity in {s}"
            );
            assert_eq!(
                &(&a + &b) * &c,
                &(&a * &c) + &(&b * &c),
                "right distributivity in {s}"
            );
            assert_eq!(&one * &a, a);
            assert_eq!(&a * &one, a);
            assert_eq!(&a + &zero, a);
            assert!((&a - &a).is_zero());
        }
    }
}

#[test]
fn products_agree_with_dense_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in signatures_up_to(5) {
        let table = DenseTable::new(&s).unwrap();
        for _ in 0..50 {
            let a = random_mv(&mut rng, s, 6);
            let b = random_mv(&mut rng, s, 6);
            assert_eq!(&a * &b, table.mul(&a, &b), "{s}: ({a}) * ({b})");
        }
    }
}

#[test]
fn radical_split_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in signatures_up_to(6).into_iter().filter(|s| s.z() > 0) {
        for _ in 0..100 {
            let u = random_body(&mut rng, s, 4);
            let v = random_body(&mut rng, s, 4);
            assert_eq!((&u * &v).body(), &u.body() * &v.body());

            let r = random_radical(&mut rng, s, 4);
            let w = random_mv(&mut rng, s, 4);
            assert!((&w * &r).body().is_zero());
            assert!((&r * &w).body().is_zero());

            let (body, rad) = w.radical_split();
            assert_eq!(&body + &rad, w);
            let graded = (1..=s.z())
                .map(|i| w.radical_grade_component(i).unwrap())
                .fold(body, |acc, g| &acc + &g);
            assert_eq!(graded, w);
            assert!(w.radical_grade_component(s.z() + 1).unwrap().is_zero());
        }
    }
}

#[test]
fn null_support_of_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for s in signatures_up_to(6) {
        for _ in 0..100 {
            let u = random_mv(&mut rng, s, 5);
            let v = random_mv(&mut rng, s, 5);
            let union: std::collections::BTreeSet<usize> =
                u.null_support().union(&v.null_support()).copied().collect();
            assert!((&u * &v).null_support().is_subset(&union));
        }
    }
}

#[test]
fn radical_elements_are_nilpotent_within_z_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for s in signatures_up_to(6) {
        for _ in 0..100 {
            let x = random_radical(&mut rng, s, 6);
            match x.nilpotency_index() {
                Nilpotency::Index(n) => assert!(n <= s.z() + 1, "{s}: {x} has index {n}"),
                Nilpotency::NotNilpotent => panic!("{s}: radical element {x} not nilpotent"),
            }
        }
    }
}

#[test]
fn unipotent_inverses_are_two_sided() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in signatures_up_to(6) {
        let one = Multivector::one(s);
        for _ in 0..50 {
            let u = &one + &random_radical(&mut rng, s, 6);
            let v = u.invert_unipotent().unwrap();
            assert!((&u * &v).is_one() && (&v * &u).is_one());
        }
    }
}

/// Brute-force powering through the dense table.
fn table_nilpotency(table: &DenseTable, u: &Multivector) -> Option<usize> {
    let mut power = u.clone();
    for n in 1..=table.size() + 1 {
        if power.is_zero() {
            return Some(n);
        }
        power = table.mul(&power, u);
    }
    None
}

#[test]
fn worked_examples_confirmed_by_table() {
    let s = sig(1, 0, 0);
    let table = DenseTable::new(&s).unwrap();
    let idem = parse_expression(&s, "1/2 + 1/2*e0").unwrap();
    assert_eq!(table.mul(&idem, &idem), idem);
    assert_eq!(&idem * &idem, idem);

    let s = sig(1, 1, 1);
    let table = DenseTable::new(&s).unwrap();
    let lhs = parse_expression(&s, "e0").unwrap();
    let rhs = parse_expression(&s, "e1*e2").unwrap();
    assert_eq!(table.mul(&lhs, &rhs), blade(s, &[0, 1, 2]));

    // two null generators: (e0 + e1)^2 = e0e1 + e1e0 = 0
    let s = sig(0, 0, 2);
    let table = DenseTable::new(&s).unwrap();
    let u = parse_expression(&s, "e0 + e1").unwrap();
    assert_eq!(table_nilpotency(&table, &u), Some(2));
    assert_eq!(u.nilpotency_index(), Nilpotency::Index(2));

    let u = parse_expression(&s, "1 + e0 + e0*e1").unwrap();
    let v = u.invert_unipotent().unwrap();
    assert!(table.mul(&u, &v).is_one() && table.mul(&v, &u).is_one());
    assert_eq!(v, parse_expression(&s, "1 - e0 - e0*e1").unwrap());
}

#[test]
fn element_nilpotency_matches_table_powering() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for s in signatures_up_to(4) {
        let table = DenseTable::new(&s).unwrap();
        for _ in 0..40 {
            let u = random_mv(&mut rng, s, 3);
            assert_eq!(
                u.nilpotency_index().index(),
                table_nilpotency(&table, &u),
                "{s}: {u}"
            );
        }
    }
}

fn arb_multivector() -> impl Strategy<Value = Multivector> {
    (0usize..4, 0usize..3, 0usize..3).prop_flat_map(|(p, q, z)| {
        let s = sig(p, q, z);
        let dim = s.dim() as u32;
        prop::collection::vec((0..dim, -20i64..20, 1i64..7), 0..8).prop_map(move |terms| {
            Multivector::from_terms(
                s,
                terms
                    .into_iter()
                    .map(|(m, n, d)| (clifford_ideals::BasisBlade::from_mask(m), rational(n, d))),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn canonical_text_round_trips(u in arb_multivector()) {
        let text = u.to_string();
        prop_assert_eq!(parse_expression(&u.sig(), &text).unwrap(), u);
    }

    #[test]
    fn negation_is_additive_inverse(u in arb_multivector()) {
        prop_assert!((&u + &-&u).is_zero());
    }
}
