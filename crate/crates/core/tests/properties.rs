//! Property-based checks of the algebraic axioms, over small random
//! elements. Everything is exact; shrinking gives minimal counterexamples.

use ortho_core::exact_fields::{extend_tower, hypot, FieldElement, Tower};
use ortho_core::inner_spaces::{inner, Vector};
use ortho_core::orthosets::{finite_closure, FiniteOrthoset};
use ortho_core::star_sfields::{Quaternion, StarScalar};
use ortho_core::Rat;
use proptest::prelude::*;
use std::sync::Arc;

fn q23() -> Arc<Tower> {
    let t = extend_tower(
        &Tower::rationals(),
        &FieldElement::from_int(Tower::rationals(), 2),
    )
    .unwrap();
    extend_tower(&t, &FieldElement::from_int(Arc::clone(&t), 3)).unwrap()
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn tower_element() -> impl Strategy<Value = FieldElement> {
    proptest::collection::vec(small_rat(), 4)
        .prop_map(|coeffs| FieldElement::from_coeffs(q23(), coeffs).unwrap())
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_ring_axioms(x in tower_element(), y in tower_element(), z in tower_element()) {
        prop_assert_eq!(x.try_add(&y).unwrap(), y.try_add(&x).unwrap());
        prop_assert_eq!(x.try_mul(&y).unwrap(), y.try_mul(&x).unwrap());
        prop_assert_eq!(
            x.try_add(&y).unwrap().try_add(&z).unwrap(),
            x.try_add(&y.try_add(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.try_mul(&y).unwrap().try_mul(&z).unwrap(),
            x.try_mul(&y.try_mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.try_mul(&y.try_add(&z).unwrap()).unwrap(),
            x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap()
        );
        prop_assert!(x.try_sub(&x).unwrap().is_zero());
    }

    #[test]
    fn field_inverses(x in tower_element()) {
        if !x.is_zero() {
            prop_assert!(x.try_mul(&x.inv().unwrap()).unwrap().is_one());
        }
    }

    #[test]
    fn square_recovery(x in tower_element()) {
        let sq = x.square();
        let root = sq.is_square().expect("squares are detected");
        prop_assert_eq!(root.square(), sq);
    }

    #[test]
    fn hypot_defining_equation(a in tower_element(), b in tower_element()) {
        let g = hypot(&a, &b).unwrap();
        let lhs = g.square();
        let rhs = a.square().try_add(&b.square()).unwrap();
        prop_assert_eq!(lhs, rhs.lift_to(g.tower()).unwrap());
        prop_assert!(g.sign() >= 0);
    }

    #[test]
    fn formal_reality(xs in proptest::collection::vec(tower_element(), 1..5)) {
        let mut sum = FieldElement::zero(q23());
        for x in &xs {
            sum = sum.try_add(&x.square()).unwrap();
        }
        if xs.iter().any(|x| !x.is_zero()) {
            prop_assert_eq!(sum.sign(), 1);
        } else {
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn quaternion_star_antiautomorphism(p in quaternion(), q in quaternion()) {
        prop_assert_eq!(p.mul(&q).star(), q.star().mul(&p.star()));
        prop_assert_eq!(p.star().star(), p.clone());
        prop_assert_eq!(p.mul(&q).norm(), p.norm().mul(&q.norm()));
        if !p.is_zero() {
            prop_assert!(p.mul(&p.inv().unwrap()).is_one());
            prop_assert!(p.inv().unwrap().mul(&p).is_one());
        }
    }

    #[test]
    fn hermitian_form_axioms(
        u in proptest::collection::vec(quaternion(), 3),
        v in proptest::collection::vec(quaternion(), 3),
        alpha in quaternion(),
    ) {
        let u = Vector::new(u).unwrap();
        let v = Vector::new(v).unwrap();
        // ⟨u,v⟩⋆ = ⟨v,u⟩
        prop_assert_eq!(
            inner(&u, &v).unwrap().star(),
            inner(&v, &u).unwrap()
        );
        // ⟨αu,v⟩ = α⟨u,v⟩ (left sesquilinearity)
        prop_assert_eq!(
            inner(&u.scale(&alpha), &v).unwrap(),
            alpha.mul(&inner(&u, &v).unwrap())
        );
        // anisotropy
        prop_assert_eq!(inner(&u, &u).unwrap().is_zero(), u.is_zero());
    }

    #[test]
    fn finite_closure_laws(
        size in 2usize..=12,
        edge_bits in proptest::collection::vec(any::<bool>(), 66),
        subset_bits in proptest::collection::vec(any::<bool>(), 12),
    ) {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..size {
            for b in a + 1..size {
                if edge_bits[k % edge_bits.len()] {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let x = FiniteOrthoset::new(size, &edges).unwrap();
        let subset: Vec<usize> =
            (0..size).filter(|&i| subset_bits[i]).collect();
        let closed = finite_closure(&x, &subset).unwrap();
        // extensive
        for i in &subset {
            prop_assert!(closed.contains(i));
        }
        // idempotent
        prop_assert_eq!(&finite_closure(&x, &closed).unwrap(), &closed);
        // monotone: drop one element
        if !subset.is_empty() {
            let smaller = &subset[1..];
            let closed_smaller = finite_closure(&x, smaller).unwrap();
            for i in &closed_smaller {
                prop_assert!(closed.contains(i));
            }
        }
    }
}
