use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;

fn make(rep: RepresentationId, n: usize) -> Box<dyn ColumnStore> {
    use BaseRepresentation::*;
    match (rep.base, rep.pivot_cache) {
        (List, false) => Box::new(ListStore::with_slots(n)),
        (Vector, false) => Box::new(VecStore::with_slots(n)),
        (Set, false) => Box::new(SetStore::with_slots(n)),
        (Heap, false) => Box::new(HeapStore::with_slots(n)),
        (Bitmap, false) => Box::new(BitmapStore::with_slots(n)),
        (List, true) => Box::new(PivotCache::<ListStore>::with_slots(n)),
        (Vector, true) => Box::new(PivotCache::<VecStore>::with_slots(n)),
        (Set, true) => Box::new(PivotCache::<SetStore>::with_slots(n)),
        (Heap, true) => Box::new(PivotCache::<HeapStore>::with_slots(n)),
        (Bitmap, true) => Box::new(PivotCache::<BitmapStore>::with_slots(n)),
    }
}

fn all_stores(n: usize) -> Vec<(RepresentationId, Box<dyn ColumnStore>)> {
    RepresentationId::all()
        .into_iter()
        .map(|r| (r, make(r, n)))
        .collect()
}

#[test]
fn names_round_trip() {
    for r in RepresentationId::all() {
        assert_eq!(r.to_string().parse::<RepresentationId>().unwrap(), r);
    }
    assert_eq!(
        "p-bitmap".parse::<RepresentationId>().unwrap(),
        RepresentationId::cached(BaseRepresentation::Bitmap)
    );
    let err = "foo".parse::<RepresentationId>().unwrap_err().to_string();
    assert!(err.contains("vector") && err.contains("p-set"), "{err}");
}

#[test]
fn add_into_examples() {
    for (rep, mut s) in all_stores(8) {
        s.set_entries(0, &[2, 3]);
        s.set_entries(1, &[1, 3]);
        s.activate(0);
        assert_eq!(s.add_into(1, 0), 2, "{rep}");
        assert_eq!(s.entries_sorted(0), vec![1, 2], "{rep}");
        assert_eq!(s.pivot(0), Some(2), "{rep}");
        assert_eq!(s.entries_sorted(1), vec![1, 3], "{rep}");

        s.set_entries(2, &[5]);
        assert_eq!(s.add_into(2, 3), 1);
        assert_eq!(s.entries_sorted(3), vec![5]);

        s.set_entries(4, &[1, 2]);
        assert_eq!(s.add_into(4, 0), 2, "{rep}");
        assert!(s.is_zero(0), "{rep}");
        assert_eq!(s.size_exact(0), 0);
        assert_eq!(s.pivot(0), None);
        s.deactivate();
    }
}

#[test]
fn pivot_size_swap_clear_remove() {
    for (rep, mut s) in all_stores(8) {
        s.set_entries(0, &[0, 2, 6]);
        assert_eq!(s.pivot(0), Some(6));
        assert_eq!(s.pivot(1), None);
        s.set_entries(1, &[0, 1]);
        s.set_entries(2, &[2]);
        s.swap_slots(1, 2);
        assert_eq!(s.entries_sorted(1), vec![2], "{rep}");
        assert_eq!(s.entries_sorted(2), vec![0, 1], "{rep}");
        s.swap_slots(1, 2);
        assert_eq!(s.entries_sorted(1), vec![0, 1]);
        assert_eq!(s.size_exact(1), 2);

        s.set_entries(5, &[3, 4, 5]);
        s.remove_entries(5, &[3, 4]);
        assert_eq!(s.entries_sorted(5), vec![5], "{rep}");
        s.set_entries(5, &[3, 4, 5]);
        s.clear_slot(5);
        assert!(s.entries_sorted(5).is_empty());
    }
}

#[test]
fn lazy_heap_cancels_duplicates() {
    let mut s = HeapStore::with_slots(4);
    s.set_entries(0, &[0, 2]);
    s.set_entries(1, &[0, 2]);
    s.add_into(0, 1);
    assert_eq!(s.size_exact(1), 0);
    assert_eq!(s.pivot(1), None);
}

#[test]
fn heap_prunes_buried_duplicates() {
    let mut s = HeapStore::with_slots(8);
    s.set_entries(0, &[1, 2, 3, 4, 5]);
    s.set_entries(1, &[2, 5]);
    s.add_into(1, 0);
    // top pair 5/5 cancels here; 2/2 is still buried
    assert_eq!(s.pivot(0), Some(4));
    assert_eq!(s.size_exact(0), 3);
    assert_eq!(s.entries_sorted(0), vec![1, 3, 4]);
}

#[test]
fn bit_tree_multi_level() {
    let mut t = BitTree::new(64 * 64 * 3 + 5);
    assert_eq!(t.max(), None);
    for i in [0, 63, 64, 4095, 4096, 12000, 12292] {
        t.toggle(i);
    }
    assert_eq!(t.max(), Some(12292));
    assert_eq!(t.count(), 7);
    t.toggle(12292);
    assert_eq!(t.max(), Some(12000));
    assert_eq!(t.to_vec(), vec![0, 63, 64, 4095, 4096, 12000]);
    t.clear();
    assert_eq!(t.max(), None);
    assert!(t.to_vec().is_empty());
    t.toggle(7);
    assert_eq!(t.max(), Some(7));
}

#[derive(Debug, Clone)]
enum Op {
    Add(usize, usize),
    Swap(usize, usize),
    Clear(usize),
    Set(usize, BTreeSet<usize>),
    Remove(usize, BTreeSet<usize>),
    AddEntries(usize, BTreeSet<usize>),
    Activate(usize),
    Deactivate,
}

const SLOTS: usize = 6;
const ROWS: usize = 150;

fn arb_op() -> impl Strategy<Value = Op> {
    let slot = 0..SLOTS;
    let rows = prop::collection::btree_set(0..ROWS, 0..12);
    prop_oneof![
        4 => (slot.clone(), slot.clone())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| Op::Add(a, b)),
        1 => (slot.clone(), slot.clone())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| Op::Swap(a, b)),
        1 => slot.clone().prop_map(Op::Clear),
        2 => (slot.clone(), rows.clone()).prop_map(|(j, r)| Op::Set(j, r)),
        1 => (slot.clone(), rows.clone()).prop_map(|(j, r)| Op::Remove(j, r)),
        1 => (slot.clone(), rows).prop_map(|(j, r)| Op::AddEntries(j, r)),
        2 => slot.prop_map(Op::Activate),
        1 => Just(Op::Deactivate),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Every representation tracks a plain set-of-rows model through
    /// arbitrary operation sequences.
    #[test]
    fn representations_agree(ops in prop::collection::vec(arb_op(), 1..60)) {
        let mut model: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); SLOTS];
        let mut stores = all_stores(ROWS);
        for op in &ops {
            let mut expected_flips = None;
            match op {
                Op::Add(a, b) => {
                    let src = model[*a].clone();
                    let before = model[*b].clone();
                    model[*b] = &before ^ &src;
                    // bitflips = |src| = |dst_before △ dst_after|
                    assert_eq!(src.len(), (&before ^ &model[*b]).len());
                    expected_flips = Some(src.len());
                }
                Op::Swap(a, b) => model.swap(*a, *b),
                Op::Clear(j) => model[*j].clear(),
                Op::Set(j, r) => model[*j] = r.clone(),
                Op::Remove(j, r) => model[*j] = &model[*j] - r,
                Op::AddEntries(j, r) => model[*j] = &model[*j] ^ r,
                Op::Activate(_) | Op::Deactivate => {}
            }
            for (rep, s) in stores.iter_mut() {
                match op {
                    Op::Add(a, b) => {
                        let flips = s.add_into(*a, *b);
                        prop_assert_eq!(Some(flips), expected_flips, "{}", rep);
                    }
                    Op::Swap(a, b) => s.swap_slots(*a, *b),
                    Op::Clear(j) => s.clear_slot(*j),
                    Op::Set(j, r) => s.set_entries(*j, &r.iter().copied().collect::<Vec<_>>()),
                    Op::Remove(j, r) => s.remove_entries(*j, &r.iter().copied().collect::<Vec<_>>()),
                    Op::AddEntries(j, r) => s.add_entries(*j, &r.iter().copied().collect::<Vec<_>>()),
                    Op::Activate(j) => s.activate(*j),
                    Op::Deactivate => s.deactivate(),
                }
                for j in 0..SLOTS {
                    let want: Vec<_> = model[j].iter().copied().collect();
                    prop_assert_eq!(s.pivot(j), want.last().copied(), "{} slot {}", rep, j);
                    prop_assert_eq!(s.size_exact(j), want.len(), "{} slot {}", rep, j);
                    prop_assert_eq!(s.entries_sorted(j), want, "{} slot {}", rep, j);
                }
            }
        }
    }

    #[test]
    fn addition_is_an_involution(
        a in prop::collection::btree_set(0..ROWS, 0..20),
        b in prop::collection::btree_set(0..ROWS, 0..20),
    ) {
        for (rep, mut s) in all_stores(ROWS) {
            s.set_entries(0, &a.iter().copied().collect::<Vec<_>>());
            s.set_entries(1, &b.iter().copied().collect::<Vec<_>>());
            s.add_into(0, 1);
            s.add_into(0, 1);
            prop_assert_eq!(s.entries_sorted(1), b.iter().copied().collect::<Vec<_>>(), "{}", rep);
        }
    }
}
