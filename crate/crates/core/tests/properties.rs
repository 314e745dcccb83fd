//! Property-based invariants for the exact arithmetic layer.

use proptest::prelude::*;

use studydet::matrix::{perm_action, sigma_perm, Matrix};
use studydet::rings::cyclotomic::Cyclotomic;
use studydet::rings::poly::{Poly, Scalar, ScalarRing, VarSet};
use studydet::rings::rational::Rational;
use studydet::rings::{cyclo_reduce, Ring, Value};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::from_pair(n, d))
}

fn small_int() -> impl Strategy<Value = i64> {
    -3i64..=3
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn cyclotomic_ring_axioms(
        n in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
        av in prop::collection::vec(-5i64..=5, 1..6),
        bv in prop::collection::vec(-5i64..=5, 1..6),
        cv in prop::collection::vec(-5i64..=5, 1..6),
    ) {
        let mk = |v: &[i64]| {
            Cyclotomic::reduce(v.iter().map(|&x| Rational::from_integer(x)).collect(), n)
                .unwrap()
        };
        let (a, b, c) = (mk(&av), mk(&bv), mk(&cv));
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        // Nonzero elements of a field are invertible.
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert!(a.mul(&inv).unwrap().is_one());
        }
    }

    #[test]
    fn cyclo_reduce_is_a_homomorphism(
        n in prop::sample::select(vec![3u32, 4, 5, 6, 8]),
        p in prop::collection::vec(-4i64..=4, 1..8),
        q in prop::collection::vec(-4i64..=4, 1..8),
    ) {
        let rp: Vec<Rational> = p.iter().map(|&x| Rational::from_integer(x)).collect();
        let rq: Vec<Rational> = q.iter().map(|&x| Rational::from_integer(x)).collect();
        let mut conv = vec![Rational::zero(); rp.len() + rq.len() - 1];
        for (i, a) in rp.iter().enumerate() {
            for (j, b) in rq.iter().enumerate() {
                conv[i + j] = &conv[i + j] + &(a * b);
            }
        }
        let lhs = cyclo_reduce(conv, n).unwrap();
        let rhs = cyclo_reduce(rp, n).unwrap().mul(&cyclo_reduce(rq, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly_normalize_order_independent(
        terms in prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 1..8),
        shuffle_seed in 0u64..1000,
    ) {
        let vars = VarSet::new(vec!["x".into(), "y".into()]);
        let raw: Vec<(Vec<u32>, Scalar)> = terms
            .iter()
            .map(|((i, j), c)| (vec![*i, *j], Scalar::Rat(Rational::from_integer(*c))))
            .collect();
        let p1 = Poly::from_terms(vars.clone(), ScalarRing::Rational, raw.clone()).unwrap();
        // Deterministic shuffle.
        let mut shuffled = raw;
        let mut state = shuffle_seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state as usize) % (i + 1));
        }
        let p2 = Poly::from_terms(vars.clone(), ScalarRing::Rational, shuffled).unwrap();
        prop_assert_eq!(&p1, &p2);
        // Idempotence: re-normalizing the canonical terms is the identity.
        let back: Vec<(Vec<u32>, Scalar)> =
            p1.terms_desc().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        let p3 = Poly::from_terms(vars, ScalarRing::Rational, back).unwrap();
        prop_assert_eq!(&p1, &p3);
    }

    #[test]
    fn kron_reversal_property(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in prop::collection::vec(small_int(), 18),
    ) {
        let x = Matrix::from_fn(m, m, Ring::Rational, |i, j| {
            Value::Rat(Rational::from_integer(seed[(i * m + j) % seed.len()]))
        })
        .unwrap();
        let y = Matrix::from_fn(n, n, Ring::Rational, |i, j| {
            Value::Rat(Rational::from_integer(seed[(7 + i * n + j) % seed.len()]))
        })
        .unwrap();
        let lhs = perm_action(&sigma_perm(m, n), &x.kron(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, y.kron(&x).unwrap());
    }

    #[test]
    fn polynomial_text_round_trip(
        terms in prop::collection::vec(((0u32..3, 0u32..3), -9i64..=9), 1..6),
    ) {
        let vars = VarSet::new(vec!["x_a".into(), "x_b".into()]);
        let raw: Vec<(Vec<u32>, Scalar)> = terms
            .iter()
            .map(|((i, j), c)| (vec![*i, *j], Scalar::Rat(Rational::from_integer(*c))))
            .collect();
        let p = Poly::from_terms(vars.clone(), ScalarRing::Rational, raw).unwrap();
        let text = p.to_string();
        let parsed =
            studydet::rings::text::parse_poly(&text, &vars, &ScalarRing::Rational).unwrap();
        prop_assert_eq!(parsed, p);
    }
}
