//! Order-theoretic and structural properties of the partition operations:
//! exhaustive at the sizes the statements are quantified over, plus
//! randomized structural invariants.

use proptest::prelude::*;

use orbit_duality::{partitions_of, GroupType, Partition};

#[test]
fn transpose_is_an_involution() {
    for n in 0..=20 {
        for p in partitions_of(n) {
            assert_eq!(p.transpose().transpose(), p);
            assert_eq!(p.transpose().sum(), p.sum());
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=12 {
        let parts = partitions_of(n);
        for a in &parts {
            assert!(a.dominated_by(a).unwrap());
            for b in &parts {
                if a.dominated_by(b).unwrap() && b.dominated_by(a).unwrap() {
                    assert_eq!(a, b);
                }
                for c in &parts {
                    if a.dominated_by(b).unwrap() && b.dominated_by(c).unwrap() {
                        assert!(a.dominated_by(c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn transpose_reverses_dominance() {
    for n in 0..=12 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                assert_eq!(
                    a.dominated_by(b).unwrap(),
                    b.transpose().dominated_by(&a.transpose()).unwrap()
                );
            }
        }
    }
}

#[test]
fn collapse_is_monotone_and_idempotent() {
    for n in 0..=12 {
        for ty in [GroupType::B, GroupType::C, GroupType::D] {
            if !ty.parity_ok(n) {
                continue;
            }
            for p in partitions_of(n) {
                let c = ty.collapse(&p).unwrap();
                assert!(ty.contains(&c));
                assert!(c.dominated_by(&p).unwrap());
                assert_eq!(ty.collapse(&c).unwrap(), c);
                // a collapse can add at most one part, and the C-collapse
                // never adds one (it cannot create a new odd part)
                if ty == GroupType::C {
                    assert_eq!(c.len(), p.len());
                } else {
                    assert!(c.len() == p.len() || c.len() == p.len() + 1);
                }
            }
        }
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..9, 0..9).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn union_and_join_are_transpose_dual(a in arb_partition(), b in arb_partition()) {
        prop_assert_eq!(a.join(&b), a.transpose().union(&b.transpose()).transpose());
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).sum(), a.sum() + b.sum());
    }

    #[test]
    fn chi_split_reassembles(p in arb_partition(), j in 0usize..10) {
        let j = j.min(p.len());
        let (top, bottom) = p.chi_split(j).unwrap();
        prop_assert_eq!(top.union(&bottom), p);
    }

    #[test]
    fn grammar_round_trips(p in arb_partition()) {
        let s = p.to_string();
        let back: Partition = s.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn moves_adjust_single_boxes(p in arb_partition()) {
        prop_assert_eq!(p.plus_top().sum(), p.sum() + 1);
        prop_assert_eq!(p.plus_row().sum(), p.sum() + 1);
        prop_assert_eq!(p.plus_row(), p.transpose().plus_top().transpose());
        if !p.is_empty() {
            prop_assert_eq!(p.minus_bottom().unwrap().sum(), p.sum() - 1);
            prop_assert_eq!(p.minus_column().unwrap().sum(), p.sum() - 1);
        }
    }
}
