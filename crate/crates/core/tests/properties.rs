use proptest::prelude::*;

use parcoal_core::bundle::Object;
use parcoal_core::multilinear::span_closure;
use parcoal_core::{Bundle, Coalgebra, FieldSpec, LinearMap, Scalar, Subspace};

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        prop::sample::select(vec![2u64, 3, 5, 7, 101, 65_537, 4_294_967_291]).prop_map(FieldSpec::PrimeField),
    ]
}

fn scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-1_000_000i64..1_000_000, 1i64..1000).prop_map(move |(n, d)| match f {
        FieldSpec::Rationals => f.fraction(n, d).unwrap(),
        FieldSpec::PrimeField(_) => f.from_i64(n),
    })
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    field().prop_flat_map(|f| (scalar(f), scalar(f), scalar(f)))
}

fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(-3i64..4, rows * cols)
        .prop_map(move |v| LinearMap::from_fn(f, rows, cols, |i, j| f.from_i64(v[i * cols + j])))
}

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::PrimeField(2)), Just(FieldSpec::PrimeField(7))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        let f = a.field();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn nonzero_elements_are_invertible((a, _, _) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a.inv().unwrap() * &a).is_one());
        }
    }

    #[test]
    fn display_parse_round_trip((a, _, _) in triple()) {
        prop_assert_eq!(a.field().parse(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(m in small_field().prop_flat_map(|f| (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| matrix(f, r, c)))) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.len(), m.domain_dim());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn transpose_preserves_rank(m in small_field().prop_flat_map(|f| matrix(f, 4, 3))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn span_closure_is_idempotent_and_monotone(
        (step, seed, extra) in small_field().prop_flat_map(|f| (matrix(f, 4, 4), matrix(f, 4, 2), matrix(f, 4, 1)))
    ) {
        let f = step.field();
        let go = |v: &[Scalar]| vec![step.apply(v)];
        let cols = |m: &LinearMap| (0..m.domain_dim()).map(|j| m.column(j)).collect::<Vec<_>>();
        let closed = span_closure(f, 4, &cols(&seed), go);
        let again = span_closure(f, 4, closed.basis(), go);
        prop_assert_eq!(&again, &closed);
        for b in closed.basis() {
            prop_assert!(closed.contains(&step.apply(b)));
        }
        let mut bigger_seed = cols(&seed);
        bigger_seed.extend(cols(&extra));
        let bigger = span_closure(f, 4, &bigger_seed, go);
        prop_assert!(closed.is_subspace_of(&bigger));
        let plain = Subspace::spanned_by(f, 4, bigger_seed.iter().map(Vec::as_slice));
        prop_assert!(plain.is_subspace_of(&bigger));
    }

    #[test]
    fn flip_is_a_permutation(a in 1usize..5, b in 1usize..5) {
        let f = FieldSpec::Rationals;
        let p = LinearMap::flip(f, a, b);
        for j in 0..a * b {
            let col = p.column(j);
            prop_assert_eq!(col.iter().filter(|x| x.is_one()).count(), 1);
            prop_assert_eq!(col.iter().filter(|x| x.is_zero()).count(), a * b - 1);
        }
        prop_assert_eq!(LinearMap::flip(f, b, a).compose(&p).unwrap(), LinearMap::identity(f, a * b));
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in small_field().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 3, 2), matrix(f, 3, 2), matrix(f, 2, 2)))
    ) {
        let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bundle_round_trip(
        (delta, eps, m) in small_field().prop_flat_map(|f| (matrix(f, 4, 2), matrix(f, 1, 2), matrix(f, 3, 5)))
    ) {
        let f = delta.field();
        let mut b = Bundle::new(f);
        b.insert("C", Object::Coalgebra(Coalgebra::new(parcoal_core::VectorSpace::new(2), delta, eps).unwrap()));
        b.insert("m", Object::LinearMap(m));
        let text = b.to_canonical_string();
        let back = Bundle::parse(&text).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(back.to_canonical_string(), text);
    }
}
