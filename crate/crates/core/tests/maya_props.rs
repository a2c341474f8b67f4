mod common;

use common::p;
use mayachar::maya::{self, normalize, SignedMaya};
use mayachar::partition::{partitions, partitions_up_to};
use mayachar::{ChargedMayaDiagram, MayaDiagram, Partition};
use proptest::prelude::*;

#[test]
fn round_trip_through_diagrams() {
    for lam in partitions_up_to(20) {
        let d = maya::to_maya(&lam);
        assert_eq!(maya::to_partition(&d), lam);
        assert_eq!(maya::size(&d), lam.size() as u64);
    }
}

#[test]
fn conjugation() {
    for lam in partitions_up_to(15) {
        let c = lam.conjugate();
        assert_eq!(c.conjugate(), lam);
        assert_eq!(c.size(), lam.size());
        assert_eq!(maya::conjugate(&lam), c);
        // column lengths counted directly
        let cols: Vec<u32> = (1..=lam.part(0))
            .map(|j| lam.parts().iter().filter(|&&x| x >= j).count() as u32)
            .collect();
        assert_eq!(c.parts(), cols.as_slice());
    }
    for a in 1..=8u32 {
        for b in 0..=7u32 {
            let hook = p(&[a]).union(&Partition::new(vec![1; b as usize]).unwrap());
            let expected = p(&[b + 1]).union(&Partition::new(vec![1; a as usize - 1]).unwrap());
            assert_eq!(hook.conjugate(), expected);
        }
    }
}

#[test]
fn complement_weight_is_size() {
    for lam in partitions_up_to(15) {
        let d = maya::to_maya(&lam);
        let entries: Vec<i64> = (1..=lam.len() + 1).map(|i| d.entry(i)).collect();
        let lo = entries.iter().copied().min().unwrap();
        let missing: Vec<i64> = (lo..entries[0] + 2)
            .filter(|x| !entries.contains(x))
            .collect();
        let direct: i64 = missing.iter().enumerate().map(|(i, &y)| i as i64 - y).sum();
        let comp = maya::complement(&d);
        assert_eq!(direct, lam.size() as i64, "{lam}");
        assert_eq!(comp.weight(), lam.size() as i64, "{lam}");
        assert_eq!(comp.min(), missing[0]);
    }
}

#[test]
fn examples_from_partitions() {
    assert_eq!(maya::to_maya(&p(&[4, 2, 2])).prefix(), &[3, 0, -1]);
    assert!(MayaDiagram::vacuum().is_vacuum());
    assert_eq!(partitions(0), vec![Partition::empty()]);
    let d = ChargedMayaDiagram::new(2, vec![5]).unwrap();
    assert_eq!(d.entry(2), 0);
    assert_eq!(d.shift(2).charge(), 0);
}

fn distinct_sequence() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-12i64..12, 0..8)
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn adjacent_swap_flips_sign(seq in distinct_sequence(), charge in -3i64..4, at in 0usize..8) {
        prop_assume!(seq.len() >= 2);
        let i = at % (seq.len() - 1);
        let mut swapped = seq.clone();
        swapped.swap(i, i + 1);
        match (normalize(&seq, charge), normalize(&swapped, charge)) {
            (SignedMaya::Zero, SignedMaya::Zero) => {}
            (SignedMaya::Term { sign: a, diagram: d }, SignedMaya::Term { sign: b, diagram: e }) => {
                prop_assert_eq!(a, -b);
                prop_assert_eq!(d, e);
            }
            (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
        }
    }

    #[test]
    fn repeated_entry_is_zero(seq in distinct_sequence(), charge in -3i64..4, at in 0usize..8) {
        prop_assume!(!seq.is_empty());
        let mut rep = seq.clone();
        rep.insert(at % (seq.len() + 1), seq[at % seq.len()]);
        prop_assert!(normalize(&rep, charge).is_zero());
    }

    #[test]
    fn prepend_then_size(lam in (0u32..12).prop_flat_map(|n| prop::sample::select(partitions(n)))) {
        let d = maya::to_maya(&lam).charged();
        // prepending just above the top entry duplicates the first row
        let top = d.entry(1) + 1;
        match d.prepend(top) {
            SignedMaya::Term { sign, diagram } => {
                prop_assert_eq!(sign, 1);
                prop_assert_eq!(diagram.charge(), 1);
                prop_assert_eq!(diagram.shift(1).to_maya().unwrap().size(), lam.size() as u64 + top as u64);
            }
            SignedMaya::Zero => prop_assert!(false),
        }
    }
}
