use proptest::prelude::*;

use schur_division::alphabet::{DiffArgument, Generator};
use schur_division::division::remainder_laurent;
use schur_division::exact::{det_bareiss, mat_mul};
use schur_division::laurent::{laurent_split, remainder_via_interpolation};
use schur_division::parse::{
    laurent_to_json, parse_column_range, parse_diff_argument, parse_index_vector,
    parse_laurent_json, parse_rational, parse_rational_list,
};
use schur_division::schur::gschur;
use schur_division::{Alphabet, IndexVector, LaurentPoly, Matrix, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != 0)
}

fn alphabet(max: usize) -> impl Strategy<Value = Alphabet> {
    prop::collection::vec(nonzero_rational(), 1..=max).prop_map(|mut v| {
        let mut seen = Vec::new();
        v.retain(|r| {
            let fresh = !seen.contains(r);
            seen.push(r.clone());
            fresh
        });
        Alphabet::new(v).unwrap()
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=8, rational()), 0..6).prop_map(LaurentPoly::from_terms)
}

fn square(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_vec(n, n, v).unwrap())
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Generator::X),
        Just(Generator::XInv),
        rational().prop_map(Generator::Scalar),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_parts_resum(f in laurent()) {
        let (poly, neg) = laurent_split(&f);
        prop_assert!(poly.is_polynomial());
        prop_assert!(neg.degree().is_none_or(|d| d < 0));
        prop_assert_eq!(&poly + &neg, f);
    }

    #[test]
    fn remainder_is_linear(f in laurent(), g in laurent(), s in rational(), a in alphabet(5)) {
        let combo = f.scale(&s) + g.clone();
        let lhs = remainder_laurent(&combo, &a).unwrap();
        let rhs = remainder_laurent(&f, &a).unwrap().scale(&s) + remainder_laurent(&g, &a).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, remainder_via_interpolation(&combo, &a).unwrap());
    }

    #[test]
    fn det_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        let ab = mat_mul(&a, &b).unwrap();
        prop_assert_eq!(det_bareiss(&ab), det_bareiss(&a) * det_bareiss(&b));
    }

    #[test]
    fn bialternant_ignores_letter_order(a in alphabet(5), seed in prop::collection::vec(-6i64..=6, 5)) {
        let j = IndexVector::new(seed[..a.len()].to_vec());
        let reversed: Vec<usize> = (0..a.len()).rev().collect();
        prop_assert_eq!(gschur(&j, &a).unwrap(), gschur(&j, &a.permuted(&reversed)).unwrap());
    }

    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn index_vectors_round_trip(v in prop::collection::vec(-1000i64..=1000, 0..8)) {
        let j = IndexVector::new(v);
        prop_assert_eq!(parse_index_vector(&j.to_string()).unwrap(), j);
    }

    #[test]
    fn alphabets_round_trip(a in alphabet(7)) {
        prop_assert_eq!(parse_rational_list(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn laurent_json_round_trips(f in laurent()) {
        let text = laurent_to_json(&f);
        let back = parse_laurent_json(&text).unwrap();
        prop_assert_eq!(laurent_to_json(&back), text);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn diff_arguments_round_trip(
        plus in prop::collection::vec(generator(), 0..4),
        minus in prop::collection::vec(generator(), 0..4),
    ) {
        let d = DiffArgument::new(plus, minus);
        prop_assert_eq!(parse_diff_argument(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn column_ranges_round_trip(lo in -50i64..=50, len in 0i64..20) {
        let r = parse_column_range(&format!("{lo}..{}", lo + len)).unwrap();
        prop_assert_eq!((r.kmin(), r.kmax()), (lo, lo + len));
    }

    #[test]
    fn parsers_never_panic(s in "\\PC{0,40}") {
        let _ = parse_index_vector(&s);
        let _ = parse_rational_list(&s);
        let _ = parse_diff_argument(&s);
        let _ = parse_column_range(&s);
        let _ = parse_laurent_json(&s);
    }
}
