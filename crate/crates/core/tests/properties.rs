//! Property tests: the ring and tensor invariants that underpin every
//! exact check, probed over randomized inputs.

use proptest::prelude::*;
use ywkit::matrix::{graded_tensor, RingMatrix};
use ywkit::scalar::Scalar;
use ywkit::signature::{GeneratorIndex, Signature};
use ywkit::superpoly::SuperPolyElement;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn arb_generator(sig: Signature) -> impl Strategy<Value = GeneratorIndex> {
    let d = sig.total();
    (1u32..=2, 1..=d, 1..=d).prop_map(|(n, i, j)| GeneratorIndex::new(n, i, j))
}

/// Random element of the supercommutative ring: a few random words with
/// random coefficients, normal-ordered on construction.
fn arb_element(sig: Signature) -> impl Strategy<Value = SuperPolyElement> {
    let word = proptest::collection::vec(arb_generator(sig), 0..3);
    proptest::collection::vec((word, arb_scalar()), 0..4).prop_map(move |terms| {
        let mut acc = SuperPolyElement::zero(sig);
        for (w, c) in terms {
            acc = acc.add(&SuperPolyElement::from_word(sig, &w, c));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    // field axioms over 10^3 random triples
    #[test]
    fn scalar_field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Scalar::one());
        }
    }
}

proptest! {
    // normal form is idempotent and a fixed point of the ring structure:
    // products of canonical elements are already canonical
    #[test]
    fn normal_form_is_ring_fixed_point(
        x in arb_element(Signature::graded(1, 1)),
        y in arb_element(Signature::graded(1, 1)),
    ) {
        let prod = x.mul(&y);
        // re-normalizing every monomial of a canonical element changes nothing
        let renorm = |e: &SuperPolyElement| {
            let mut acc = SuperPolyElement::zero(e.signature());
            for (m, c) in e.terms() {
                acc = acc.add(&SuperPolyElement::from_word(
                    e.signature(),
                    m.generators(),
                    c.clone(),
                ));
            }
            acc
        };
        prop_assert_eq!(renorm(&prod), prod.clone());
        prop_assert_eq!(renorm(&renorm(&x)), renorm(&x));
    }

    // supercommutativity for homogeneous elements, randomized
    #[test]
    fn supercommutativity_randomized(
        w1 in proptest::collection::vec(arb_generator(Signature::graded(1, 1)), 1..3),
        w2 in proptest::collection::vec(arb_generator(Signature::graded(1, 1)), 1..3),
    ) {
        let sig = Signature::graded(1, 1);
        let x = SuperPolyElement::from_word(sig, &w1, Scalar::one());
        let y = SuperPolyElement::from_word(sig, &w2, Scalar::one());
        let p1: u8 = w1.iter().fold(0, |a, g| a ^ g.parity(&sig));
        let p2: u8 = w2.iter().fold(0, |a, g| a ^ g.parity(&sig));
        let yx = y.mul(&x);
        let expected = if p1 & p2 == 1 { yx.neg() } else { yx };
        prop_assert_eq!(x.mul(&y), expected);
    }

    // scalar parse/display round trip
    #[test]
    fn scalar_serialization_round_trip(a in arb_scalar()) {
        let s = a.to_string();
        let back: Scalar = s.parse().unwrap();
        prop_assert_eq!(a, back);
    }
}

// graded tensor with an all-even signature is the ordinary Kronecker
// product, exhaustively over matrix units up to dimension 4
#[test]
fn graded_tensor_even_case_is_kronecker() {
    for d in 1usize..=4 {
        let sig = Signature::plain(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut a = RingMatrix::zero(d, Scalar::one());
                        a.set(i, j, Scalar::from_int(3));
                        let mut b = RingMatrix::zero(d, Scalar::one());
                        b.set(k, l, Scalar::from_int(-2));
                        let graded = graded_tensor(&a, &b, &sig).unwrap();
                        assert_eq!(graded, a.kron(&b));
                    }
                }
            }
        }
    }
}
