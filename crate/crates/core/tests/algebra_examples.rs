use std::sync::Arc;

use nonassoc::builtins::OCTONION_TRIPLES;
use nonassoc::laws::random_element;
use nonassoc::{
    builtin_algebra, change_basis, Algebra, AlgebraError, BuiltinAlgebra, Element, GaussianRational,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alg(b: BuiltinAlgebra) -> Arc<Algebra> {
    b.algebra()
}

fn el(a: &Arc<Algebra>, label: &str) -> Element {
    Element::from_label(a, label).unwrap()
}

fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

/// Octonion product from the triple list alone: `e_a e_b = +-e_c` for the
/// triple containing `a` and `b`, sign by cyclic orientation.
fn octonion_oracle(a: usize, b: usize) -> (i64, usize) {
    match (a, b) {
        (0, x) | (x, 0) => (1, x),
        (x, y) if x == y => (-1, 0),
        _ => {
            for t in OCTONION_TRIPLES {
                for r in 0..3 {
                    if t[r] == a && t[(r + 1) % 3] == b {
                        return (1, t[(r + 2) % 3]);
                    }
                    if t[r] == b && t[(r + 1) % 3] == a {
                        return (-1, t[(r + 2) % 3]);
                    }
                }
            }
            unreachable!("every pair of imaginary units lies in one triple")
        }
    }
}

#[test]
fn octonion_table_matches_triples() {
    let o = alg(BuiltinAlgebra::Octonion);
    for a in 0..8 {
        for b in 0..8 {
            let (s, c) = octonion_oracle(a, b);
            let mut expected = vec![GaussianRational::zero(); 8];
            expected[c] = g(s);
            assert_eq!(o.product(a, b), expected.as_slice(), "e{a} e{b}");
        }
    }
}

#[test]
fn identity_law_for_every_builtin() {
    for b in BuiltinAlgebra::ALL {
        let a = alg(b);
        let one = Element::unit(&a);
        for i in 0..a.dim() {
            let x = Element::basis(&a, i);
            assert_eq!(one.mul(&x).unwrap(), x, "{b}");
            assert_eq!(x.mul(&one).unwrap(), x, "{b}");
        }
    }
}

#[test]
fn octonion_antisymmetry() {
    let o = alg(BuiltinAlgebra::Octonion);
    for a in 1..8 {
        for b in 1..8 {
            if a != b {
                let ab = Element::basis(&o, a).mul(&Element::basis(&o, b)).unwrap();
                let ba = Element::basis(&o, b).mul(&Element::basis(&o, a)).unwrap();
                assert_eq!(ab, ba.neg());
            }
        }
    }
}

#[test]
fn split_octonion_examples() {
    let s = alg(BuiltinAlgebra::SplitOctonion);
    let u0 = el(&s, "u0");
    let u0c = el(&s, "u0c");
    assert_eq!(u0.mul(&u0).unwrap(), u0);
    assert!(u0.mul(&u0c).unwrap().is_zero());
    assert!(u0c.mul(&u0).unwrap().is_zero());
    assert!(!u0.is_zero());
    assert_eq!(u0.quadratic_form().unwrap(), GaussianRational::zero());
    assert!(Element::unit(&s).is_unit());
    assert_eq!(Element::unit(&s), u0.add(&u0c).unwrap());
}

#[test]
fn conjugation_and_forms() {
    let o = alg(BuiltinAlgebra::Octonion);
    let one = Element::unit(&o);
    assert_eq!(one.conjugate(), one);
    let x = Element::linear(&one, &el(&o, "e1"), &g(2), &g(3)).unwrap();
    let expected = Element::linear(&one, &el(&o, "e1"), &g(2), &g(-3)).unwrap();
    assert_eq!(x.conjugate(), expected);
    assert_eq!(el(&o, "e1").quadratic_form().unwrap(), g(1));
    let sed = alg(BuiltinAlgebra::Sedenion);
    assert_eq!(el(&sed, "eps1").quadratic_form().unwrap(), g(-1));
}

#[test]
fn commutator_examples() {
    let o = alg(BuiltinAlgebra::Octonion);
    assert_eq!(
        el(&o, "e1").commutator(&el(&o, "e2")).unwrap(),
        el(&o, "e3").scale(&g(2))
    );
    assert!(el(&o, "e5").commutator(&el(&o, "e5")).unwrap().is_zero());
    let sed = alg(BuiltinAlgebra::Sedenion);
    let (i0, i1) = (el(&sed, "i0"), el(&sed, "i1"));
    assert_eq!(i0.mul(&i1).unwrap(), el(&sed, "eps1").neg());
    assert!(i0.commutator(&i1).unwrap().is_zero());
}

#[test]
fn associator_examples() {
    let o = alg(BuiltinAlgebra::Octonion);
    let (e1, e2, e3, e4) = (el(&o, "e1"), el(&o, "e2"), el(&o, "e3"), el(&o, "e4"));
    assert!(e1.associator(&e2, &e3).unwrap().is_zero());
    // (e1 e2) e4 = e3 e4 = -e5 and e1 (e2 e4) = e1 e6 = e5
    assert_eq!(e1.associator(&e2, &e4).unwrap(), el(&o, "e5").scale(&g(-2)));
    assert!(Element::unit(&o).associator(&e2, &e4).unwrap().is_zero());
}

#[test]
fn jordan_examples() {
    let o = alg(BuiltinAlgebra::Octonion);
    let (e1, e2) = (el(&o, "e1"), el(&o, "e2"));
    assert!(e1.jordan_product(&e2).unwrap().is_zero());
    assert_eq!(e1.jordan_product(&e1).unwrap(), e1.mul(&e1).unwrap());
    assert_eq!(Element::unit(&o).jordan_product(&e2).unwrap(), e2);
}

#[test]
fn nonassoc_commutator_examples() {
    let sed = alg(BuiltinAlgebra::Sedenion);
    let (i1, i4, i5) = (el(&sed, "i1"), el(&sed, "i4"), el(&sed, "i5"));
    assert!(i1.nonassoc_commutator(&i4, &i5).unwrap().is_zero());
    let q = alg(BuiltinAlgebra::Quaternion);
    let (a, b, c) = (el(&q, "i1"), el(&q, "i2"), el(&q, "i3"));
    let x = Element::linear(&a, &b, &g(2), &g(1)).unwrap();
    assert_eq!(
        x.nonassoc_commutator(&b, &c).unwrap(),
        x.commutator(&b.mul(&c).unwrap()).unwrap()
    );
    let one = Element::unit(&sed);
    assert!(one.nonassoc_commutator(&i4, &i4).unwrap().is_zero());
}

#[test]
fn cross_algebra_operations_are_errors() {
    let o = alg(BuiltinAlgebra::Octonion);
    let q = alg(BuiltinAlgebra::Quaternion);
    let err = el(&o, "e1").mul(&el(&q, "i1")).unwrap_err();
    assert!(
        matches!(err, AlgebraError::AlgebraMismatch { .. }),
        "{err:?}"
    );
    assert!(Element::from_label(&o, "eps1").is_err());
    assert!(builtin_algebra("cayley_dickson_sedenion").is_err());
}

#[test]
fn change_basis_by_permutation_relabels() {
    let q = alg(BuiltinAlgebra::Quaternion);
    // swap i1 and i2
    let perm = [0usize, 2, 1, 3];
    let m: Vec<Vec<GaussianRational>> = perm
        .iter()
        .map(|&j| (0..4).map(|k| if k == j { g(1) } else { g(0) }).collect())
        .collect();
    let labels = ["1", "j1", "j2", "j3"].map(String::from).to_vec();
    let p = change_basis(&q, &m, labels, "quaternion_swapped").unwrap();
    let j = |s: &str| Element::from_label(&p, s).unwrap();
    // i2 i1 = -i3
    assert_eq!(j("j1").mul(&j("j2")).unwrap(), j("j3").neg());
}

fn moufang_holds(x: &Element, y: &Element, z: &Element) -> bool {
    // z(x(zy)) = ((zx)z)y
    let lhs = z.mul(&x.mul(&z.mul(y).unwrap()).unwrap()).unwrap();
    let rhs = z.mul(x).unwrap().mul(z).unwrap().mul(y).unwrap();
    lhs == rhs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn octonions_satisfy_moufang(seed in any::<u64>()) {
        let o = alg(BuiltinAlgebra::Octonion);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_element(&o, &mut rng), random_element(&o, &mut rng), random_element(&o, &mut rng));
        prop_assert!(moufang_holds(&x, &y, &z));
    }

    #[test]
    fn quadratic_form_is_multiplicative(seed in any::<u64>(), which in 0usize..3) {
        let a = [BuiltinAlgebra::Octonion, BuiltinAlgebra::SplitOctonion, BuiltinAlgebra::Sedenion][which].algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_element(&a, &mut rng), random_element(&a, &mut rng));
        let nxy = x.mul(&y).unwrap().norm();
        let nx_ny = x.norm().mul(&y.norm()).unwrap();
        prop_assert_eq!(nxy, nx_ny);
    }

    #[test]
    fn unit_scalar_commutes(seed in any::<u64>()) {
        let o = alg(BuiltinAlgebra::Octonion);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&o, &mut rng);
        let c = Element::scalar(&o, &(GaussianRational::one() + GaussianRational::i()));
        prop_assert!(x.commutator(&c).unwrap().is_zero());
    }
}
