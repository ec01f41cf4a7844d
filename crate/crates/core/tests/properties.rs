//! Property tests over the arithmetic substrate: determinant routines agree
//! with one another, polynomial calculus obeys linearity and the product
//! rule, multivariate multiplication is commutative and associative, and the
//! text round-trips hold.

use num_traits::{One, Zero};
use proptest::prelude::*;

use opdet_core::matrix::{det_bareiss, det_cofactor, vandermonde, SquareMatrix};
use opdet_core::multipoly::MPoly;
use opdet_core::poly::Poly;
use opdet_core::rational::{format_rational, parse_rational, pow_u, rat, Rational};
use opdet_core::{MultiPoly, UniPoly};

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational_strategy(), 0..=max_len).prop_map(Poly::new)
}

fn mpoly_strategy(arity: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=2, arity),
            rational_strategy(),
        ),
        0..=5,
    )
    .prop_map(move |terms| {
        let mut p = MPoly::zero(arity);
        for (exp, c) in terms {
            let mut mono = MPoly::constant(arity, c);
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    mono = mono.mul(&MPoly::var(arity, i));
                }
            }
            p = p.add(&mono);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_agrees_with_cofactor_oracle(order in 1usize..=4, seed_entries in prop::collection::vec(rational_strategy(), 16)) {
        let mut it = seed_entries.into_iter().cycle();
        let m = SquareMatrix::from_fn(order, |_, _| it.next().unwrap());
        let d = m.det();
        prop_assert_eq!(&d, &det_cofactor(&m));
        prop_assert_eq!(&d, &det_bareiss(&m));
    }

    #[test]
    fn vandermonde_matrix_det_matches_product(nodes in prop::collection::vec(rational_strategy(), 1..=5)) {
        let m = SquareMatrix::from_fn(nodes.len(), |i, j| pow_u(&nodes[i], j));
        prop_assert_eq!(m.det(), vandermonde(&nodes));
    }

    #[test]
    fn derivative_is_linear(p in poly_strategy(7), q in poly_strategy(7), c in rational_strategy()) {
        let sum = &p + &q.scale(&c);
        prop_assert_eq!(
            sum.derivative(1),
            &p.derivative(1) + &q.derivative(1).scale(&c)
        );
    }

    #[test]
    fn derivative_product_rule(p in poly_strategy(6), q in poly_strategy(6)) {
        let prod = &p * &q;
        let expect = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
        prop_assert_eq!(prod.derivative(1), expect);
    }

    #[test]
    fn poly_eval_is_ring_homomorphism(p in poly_strategy(6), q in poly_strategy(6), x in rational_strategy()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&x), p.eval(&x) * q.eval(&x));
        let sum = &p + &q;
        prop_assert_eq!(sum.eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn mpoly_mul_commutative(a in mpoly_strategy(3), b in mpoly_strategy(3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mpoly_mul_associative(a in mpoly_strategy(4), b in mpoly_strategy(4), c in mpoly_strategy(4)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mpoly_distributes(a in mpoly_strategy(3), b in mpoly_strategy(3), c in mpoly_strategy(3)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn rational_text_round_trip(r in rational_strategy()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn poly_exact_div_inverts_mul(p in poly_strategy(5), q in poly_strategy(5)) {
        prop_assume!(!num_traits::Zero::is_zero(&q));
        let prod = &p * &q;
        prop_assert_eq!(prod.exact_div(&q), p);
    }
}

#[test]
fn determinant_multiplies_under_row_scaling() {
    // a sanity anchor outside proptest: scaling one row scales the det
    let m = SquareMatrix::from_rows(vec![
        vec![rat(1, 2), rat(3, 1)],
        vec![rat(-2, 3), rat(5, 7)],
    ])
    .unwrap();
    let scaled = SquareMatrix::from_rows(vec![
        vec![rat(1, 2) * rat(4, 1), rat(3, 1) * rat(4, 1)],
        vec![rat(-2, 3), rat(5, 7)],
    ])
    .unwrap();
    assert_eq!(scaled.det(), m.det() * rat(4, 1));
}

#[test]
fn zero_and_one_polys_behave() {
    let z = UniPoly::zero();
    let o = UniPoly::one();
    assert!(num_traits::Zero::is_zero(&(&z * &o)));
    assert_eq!(&o * &o, o);
}
