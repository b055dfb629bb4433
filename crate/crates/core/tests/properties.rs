use num_bigint::BigInt;
use proptest::prelude::*;
use tlfc::lattice::{ballot_to_fc, fc_to_ballot};
use tlfc::verify::rewrite_word;
use tlfc::{enumerate_fc, fc_to_diagram, BigTlElement, DeltaPoly, Diagram, FcElement};

fn element(max_rank: usize) -> impl Strategy<Value = FcElement> {
    (0..=max_rank).prop_flat_map(|n| {
        let all = enumerate_fc(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

fn triple(max_rank: usize) -> impl Strategy<Value = (FcElement, FcElement, FcElement)> {
    (0..=max_rank).prop_flat_map(|n| {
        let all = enumerate_fc(n);
        let len = all.len();
        (0..len, 0..len, 0..len)
            .prop_map(move |(a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
    })
}

fn combination(n: usize) -> impl Strategy<Value = BigTlElement> {
    let all = enumerate_fc(n);
    let len = all.len();
    prop::collection::vec((0..len, -3i64..=3, 0u32..3), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(BigTlElement::zero(n), |acc, (k, c, e)| {
                let term = BigTlElement::scaled_monomial(
                    DeltaPoly::term(BigInt::from(c), e),
                    all[k].clone(),
                );
                acc.add(&term).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fc_text_and_json_roundtrip(w in element(9)) {
        prop_assert_eq!(w.to_string().parse::<FcElement>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<FcElement>(&json).unwrap(), w);
    }

    #[test]
    fn diagram_text_and_json_roundtrip(w in element(9)) {
        let d = fc_to_diagram(&w).0;
        prop_assert_eq!(d.to_string().parse::<Diagram>().unwrap(), d.clone());
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), d);
    }

    #[test]
    fn involutions(w in element(12)) {
        prop_assert_eq!(w.dual().dual(), w.clone());
        prop_assert_eq!(w.delta_involution().delta_involution(), w.clone());
        prop_assert_eq!(w.dual().size() + w.size(), w.rank());
        prop_assert_eq!(ballot_to_fc(&fc_to_ballot(&w)), w);
    }

    #[test]
    fn concatenation_associative((a, b, c) in triple(8)) {
        let (da, db, dc) = (fc_to_diagram(&a).0, fc_to_diagram(&b).0, fc_to_diagram(&c).0);
        let (ab, m1) = da.concatenate(&db).unwrap();
        let (left, m2) = ab.concatenate(&dc).unwrap();
        let (bc, m3) = db.concatenate(&dc).unwrap();
        let (right, m4) = da.concatenate(&bc).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(m1 + m2, m3 + m4);
    }

    #[test]
    fn algebra_associative_and_distributive(
        (x, y, z) in (0usize..=5).prop_flat_map(|n| (combination(n), combination(n), combination(n)))
    ) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let spread = x.multiply(&y).unwrap().add(&x.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(x.multiply(&y.add(&z).unwrap()).unwrap(), spread);
        let one = BigTlElement::one(x.rank());
        prop_assert_eq!(one.multiply(&x).unwrap(), x.clone());
        prop_assert_eq!(x.multiply(&one).unwrap(), x);
    }

    #[test]
    fn generator_words_match_rewriting(
        (n, word) in (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(1..=n, 0..10)))
    ) {
        let product = word.iter().fold(BigTlElement::one(n), |acc, &i| {
            acc.multiply(&BigTlElement::generator(n, i).unwrap()).unwrap()
        });
        let (reduced, loops) = rewrite_word(&word);
        let terms: Vec<_> = product.terms().collect();
        prop_assert_eq!(terms.len(), 1);
        let (w, c) = terms[0];
        prop_assert_eq!(w.word().len(), reduced.len());
        prop_assert_eq!(c.clone(), DeltaPoly::delta_pow(loops as u32));
        let reduced_product = reduced.iter().fold(BigTlElement::one(n), |acc, &i| {
            acc.multiply(&BigTlElement::generator(n, i).unwrap()).unwrap()
        });
        prop_assert_eq!(reduced_product, BigTlElement::monomial(w.clone()));
    }
}
