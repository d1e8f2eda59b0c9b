//! Property tests for the serialization boundaries and the exact-algebra
//! invariants that hold for arbitrary inputs, not just the named families.

use num_bigint::BigInt;
use proptest::prelude::*;
use specgraph::exact::{factor_over_q, IntPolynomial};
use specgraph::graph::{parse_graph6, write_graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |flags| {
            let mut edges = Vec::new();
            let mut it = flags.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_parser_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        // arbitrary input must come back as a graph or a structured error
        let _ = parse_graph6(&bytes);
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph(40)) {
        let bytes = write_graph6(&g);
        let back = parse_graph6(&bytes).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
        // canonical encodings are a fixed point of write . parse
        prop_assert_eq!(write_graph6(&back), bytes);
    }

    #[test]
    fn polynomial_json_roundtrip(coeffs in proptest::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 0..12)) {
        let p = IntPolynomial::from_i64(&coeffs);
        let json = serde_json::to_string(&p).unwrap();
        let back: IntPolynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gcd_divides_both_arguments(a in proptest::collection::vec(-9i64..=9, 1..7),
                                  b in proptest::collection::vec(-9i64..=9, 1..7)) {
        let p = IntPolynomial::from_i64(&a);
        let q = IntPolynomial::from_i64(&b);
        prop_assume!(!p.is_zero() && !q.is_zero());
        let g = p.gcd(&q);
        prop_assert!(p.divide_exact(&g).is_some());
        prop_assert!(q.divide_exact(&g).is_some());
    }

    #[test]
    fn factorization_reconstructs_products_of_real_rooted_factors(
        roots in proptest::collection::vec(-5i64..=5, 1..6),
        content in 1i64..=4,
    ) {
        // build a polynomial with known integer roots, possibly repeated
        let mut p = IntPolynomial::from_i64(&[content]);
        for r in &roots {
            p = p.mul(&IntPolynomial::from_i64(&[-r, 1]));
        }
        let factors = factor_over_q(&p).unwrap();
        let mut product = IntPolynomial::from_i64(&[1]).scale(&p.content());
        for (f, m) in &factors {
            prop_assert_eq!(f.degree(), Some(1), "integer-rooted input factors into linears");
            for _ in 0..*m {
                product = product.mul(f);
            }
        }
        prop_assert_eq!(product, p);
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(c in proptest::collection::vec(-6i64..=6, 2..8)) {
        let p = IntPolynomial::from_i64(&c);
        prop_assume!(!p.is_zero());
        let sf = p.squarefree_part().unwrap();
        prop_assert!(p.primitive_part().divide_exact(&sf).is_some());
        let g = sf.gcd(&sf.derivative());
        prop_assert_eq!(g.degree(), Some(0));
    }
}

#[test]
fn content_sign_convention() {
    let p = IntPolynomial::from_i64(&[4, 0, -6]);
    assert_eq!(p.content(), BigInt::from(-2));
    assert_eq!(p.primitive_part().mul(&IntPolynomial::from_i64(&[-2])), p);
}
