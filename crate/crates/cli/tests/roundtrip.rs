use proptest::prelude::*;
use weyl_cli::syntax::{format, parse};
use weyl_core::scalar::BigRat;
use weyl_core::{WeylElement, WeylMonomial};

fn element_in(n: usize) -> impl Strategy<Value = WeylElement> {
    let mono = (prop::collection::vec(0u32..=4, n), prop::collection::vec(0u32..=4, n));
    let coeff = (-20i64..=20, 1i64..=6);
    prop::collection::vec((mono, coeff), 0..=6).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|((a, b), (p, q))| (WeylMonomial::from_exps(&a, &b), BigRat::new(p.into(), q.into())));
        WeylElement::from_terms(n, terms).unwrap()
    })
}

fn element() -> impl Strategy<Value = WeylElement> {
    (1usize..=3).prop_flat_map(element_in)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn format_then_parse_is_identity(x in element()) {
        let text = format(&x);
        prop_assert_eq!(parse(&text, Some(x.arity())).unwrap(), x);
    }

    #[test]
    fn composition_text_agrees((x, y) in (1usize..=3).prop_flat_map(|n| (element_in(n), element_in(n)))) {
        let n = x.arity();
        let text = format!("({}) @ ({})", format(&x), format(&y));
        prop_assert_eq!(parse(&text, Some(n)).unwrap(), x.compose(&y).unwrap());
    }
}
