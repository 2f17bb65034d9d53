use mbs_core::minkowski::{self, CausalRelation};
use mbs_core::{rational, Point, Rational};
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| rational(n, d))
}

fn point(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(coord(), d).prop_map(|c| Point::new(c).unwrap())
}

/// A nonzero future-pointing causal offset, lightlike when `slack` is zero.
fn future(d: usize) -> impl Strategy<Value = Point> {
    (prop::collection::vec(-6i64..=6, d - 1), 0i64..=3, 1i64..=4).prop_map(|(space, slack, den)| {
        let l1: i64 = space.iter().map(|v| v.abs()).sum();
        let mut c = vec![rational((l1 + slack).max(1), den)];
        c.extend(space.iter().map(|&v| rational(v, den)));
        Point::new(c).unwrap()
    })
}

fn dims() -> impl Strategy<Value = usize> {
    prop_oneof![Just(2usize), Just(3), Just(4)]
}

proptest! {
    #[test]
    fn interval_is_symmetric((x, y) in dims().prop_flat_map(|d| (point(d), point(d)))) {
        prop_assert_eq!(minkowski::interval(&x, &y).unwrap(), minkowski::interval(&y, &x).unwrap());
    }

    #[test]
    fn leq_is_reflexive(x in dims().prop_flat_map(point)) {
        prop_assert!(minkowski::leq(&x, &x).unwrap());
        prop_assert!(!minkowski::lt(&x, &x).unwrap());
    }

    #[test]
    fn leq_is_antisymmetric((x, y) in dims().prop_flat_map(|d| (point(d), point(d)))) {
        if minkowski::leq(&x, &y).unwrap() && minkowski::leq(&y, &x).unwrap() {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn leq_is_transitive((x, u, v) in dims().prop_flat_map(|d| (point(d), future(d), future(d)))) {
        let y = x.translate(&u).unwrap();
        let z = y.translate(&v).unwrap();
        prop_assert!(minkowski::leq(&x, &y).unwrap());
        prop_assert!(minkowski::leq(&y, &z).unwrap());
        prop_assert!(minkowski::leq(&x, &z).unwrap());
    }

    #[test]
    fn exactly_one_relation((x, y) in dims().prop_flat_map(|d| (point(d), point(d)))) {
        let before = minkowski::lt(&x, &y).unwrap();
        let after = minkowski::lt(&y, &x).unwrap();
        let equal = x == y;
        let slr = minkowski::slr(&x, &y).unwrap();
        prop_assert_eq!([before, after, equal, slr].iter().filter(|b| **b).count(), 1);
        let expected = if equal {
            CausalRelation::Equal
        } else if before {
            CausalRelation::Before
        } else if after {
            CausalRelation::After
        } else {
            CausalRelation::Spacelike
        };
        prop_assert_eq!(minkowski::relation(&x, &y).unwrap(), expected);
    }

    #[test]
    fn order_is_translation_invariant((x, y, t) in dims().prop_flat_map(|d| (point(d), point(d), point(d)))) {
        let xs = x.translate(&t).unwrap();
        let ys = y.translate(&t).unwrap();
        prop_assert_eq!(minkowski::leq(&x, &y).unwrap(), minkowski::leq(&xs, &ys).unwrap());
    }

    #[test]
    fn up_lies_above_both((a, b) in dims().prop_flat_map(|d| (point(d), point(d)))) {
        let u = minkowski::up(&a, &b).unwrap();
        prop_assert_eq!(u.space(), a.space());
        prop_assert!(minkowski::leq(&a, &u).unwrap());
        prop_assert!(minkowski::leq(&b, &u).unwrap());
        let j = minkowski::join_witness(&a, &b).unwrap();
        prop_assert!(minkowski::leq(&a, &j).unwrap() && minkowski::leq(&b, &j).unwrap());
    }

    #[test]
    fn density_witness_is_strictly_between((x, v) in dims().prop_flat_map(|d| (point(d), future(d)))) {
        let y = x.translate(&v).unwrap();
        let m = minkowski::density_witness(&x, &y).unwrap();
        prop_assert!(minkowski::lt(&x, &m).unwrap());
        prop_assert!(minkowski::lt(&m, &y).unwrap());
    }

    #[test]
    fn density_witness_needs_order((x, y) in (point(2), point(2))) {
        if !minkowski::lt(&x, &y).unwrap() {
            prop_assert!(minkowski::density_witness(&x, &y).is_err());
        }
    }
}

#[test]
fn mixed_dimensions_are_rejected() {
    let x = Point::origin(2).unwrap();
    let y = Point::origin(3).unwrap();
    assert!(minkowski::leq(&x, &y).is_err());
    assert!(minkowski::interval(&x, &y).is_err());
    assert!(Point::new(vec![rational(0, 1)]).is_err());
}
