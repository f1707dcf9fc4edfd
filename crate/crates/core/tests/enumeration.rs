mod common;

use common::{brute_free, small_groups};
use zsm::extremal::{
    davenport, enumerate_free, form_ii_count, form_ii_sequences, verify_main_theorem, SearchOptions, SearchSpace,
    Verdict,
};
use zsm::groups::{CayleyGroup, GroupParams};
use zsm::numtheory::{binomial, totient};
use zsm::seqengine::{is_product1_free, Sequence};

fn plain() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn pruned_search_equals_filtering_every_multiset() {
    for p in small_groups(10) {
        let space = SearchSpace::metacyclic(&p).unwrap();
        for len in 0..=(p.m() + p.q()) as usize {
            let found = enumerate_free(&space, len, &plain()).unwrap().expand(&space);
            assert_eq!(found, brute_free(space.group(), len), "{p} length {len}");
        }
    }
    for n in 2..=7 {
        let space = SearchSpace::cyclic(n).unwrap();
        for len in 0..=n {
            let found = enumerate_free(&space, len, &plain()).unwrap().expand(&space);
            assert_eq!(found, brute_free(space.group(), len), "C_{n} length {len}");
        }
    }
}

#[test]
fn symmetry_reduction_expands_to_the_full_list() {
    for p in small_groups(21) {
        let space = SearchSpace::metacyclic(&p).unwrap();
        for len in 0..=(p.m() + p.q() - 2) as usize {
            let full = enumerate_free(&space, len, &plain()).unwrap();
            let reduced = enumerate_free(&space, len, &plain().with_symmetry(true)).unwrap();
            assert_eq!(reduced.total(), full.total(), "{p} length {len}");
            assert_eq!(reduced.expand(&space), full.expand(&space), "{p} length {len}");
            for f in &reduced.sequences {
                assert_eq!(space.orbit(&f.sequence).len() as u64, f.orbit_size);
                assert_eq!(space.canonical(&f.sequence), f.sequence);
            }
        }
    }
}

#[test]
fn emission_is_sorted_and_free() {
    let p = GroupParams::new(7, 3, 2).unwrap();
    let space = SearchSpace::metacyclic(&p).unwrap();
    let found = enumerate_free(&space, 6, &plain()).unwrap();
    let seqs: Vec<&Sequence> = found.sequences.iter().map(|f| &f.sequence).collect();
    assert!(seqs.windows(2).all(|w| w[0] < w[1]));
    for s in seqs.iter().step_by(11) {
        assert!(is_product1_free(space.group(), s).unwrap().free);
    }
}

#[test]
fn longest_free_sequences_are_maximal() {
    for p in small_groups(21) {
        let space = SearchSpace::metacyclic(&p).unwrap();
        let d = davenport(&space, &plain(), None).unwrap();
        assert_eq!(d.constant, (p.m() + p.q() - 1) as usize, "{p}");
        assert!(is_product1_free(space.group(), &d.witness).unwrap().free);
        let longest = enumerate_free(&space, d.constant - 1, &plain()).unwrap();
        assert!(!longest.sequences.is_empty());
        for f in &longest.sequences {
            for g in 0..space.group().order() {
                let longer = f.sequence.with(g);
                assert!(!is_product1_free(space.group(), &longer).unwrap().free, "{p}: {:?} + {g}", f.sequence);
            }
        }
        assert_eq!(enumerate_free(&space, d.constant, &plain()).unwrap().total(), 0);
    }
}

#[test]
fn davenport_of_cayley_groups() {
    for n in 1..=9 {
        let space = SearchSpace::cyclic(n).unwrap();
        assert_eq!(davenport(&space, &plain(), None).unwrap().constant, n);
    }
    // C_2 x C_2 has Davenport constant 3
    let klein = CayleyGroup::parse("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let space = SearchSpace::cayley(klein).unwrap();
    assert_eq!(davenport(&space, &plain(), None).unwrap().constant, 3);
}

#[test]
fn free_counts_follow_the_form_ii_formula() {
    for p in small_groups(21) {
        let (q, m) = (p.q() as u64, p.m() as u64);
        let space = SearchSpace::metacyclic(&p).unwrap();
        let found = enumerate_free(&space, (q + m - 2) as usize, &plain().with_symmetry(true)).unwrap();
        let formula = (q - 1) * totient(m) * binomial(q + m - 2, m - 1);
        assert_eq!(form_ii_count(q, m), formula);
        if (m, q) == (2, 3) {
            assert_eq!(found.total(), formula + 1);
        } else {
            assert_eq!(found.total(), formula, "{p}");
        }
    }
}

#[test]
fn every_form_ii_sequence_is_free() {
    for p in small_groups(42) {
        let table = p.to_cayley().unwrap();
        for s in form_ii_sequences(&p) {
            assert!(is_product1_free(&table, &s).unwrap().free, "{p}: {s:?}");
        }
    }
}

#[test]
fn reports_agree_with_and_without_symmetry() {
    for p in small_groups(21) {
        let a = verify_main_theorem(&p, &plain()).unwrap();
        let b = verify_main_theorem(&p, &plain().with_symmetry(true)).unwrap();
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(a.unmatched, b.unmatched);
        assert_eq!((a.free_count, a.matched_count), (b.free_count, b.matched_count));
        let expected = if (p.m(), p.q()) == (2, 3) { Verdict::CounterexampleCase23 } else { Verdict::TheoremHolds };
        assert_eq!(a.verdict, expected);
    }
}

#[test]
fn resumed_search_matches_uninterrupted() {
    let p = GroupParams::new(7, 3, 4).unwrap();
    let space = SearchSpace::metacyclic(&p).unwrap();
    let whole = enumerate_free(&space, 8, &plain()).unwrap();

    let dir = tempfile::tempdir().unwrap();
    let cursor = dir.path().join("cursor.json");
    let step = plain().with_cursor(&cursor).with_shard_budget(5);
    let mut interruptions = 0;
    let resumed = loop {
        match enumerate_free(&space, 8, &step) {
            Ok(done) => break done,
            Err(zsm::Error::Partial { done, total, .. }) => {
                assert!(done < total);
                interruptions += 1;
            }
            Err(e) => panic!("{e}"),
        }
    };
    assert!(interruptions > 2);
    assert_eq!(resumed.sequences, whole.sequences);
    assert_eq!(resumed.stats, whole.stats);

    // a cursor from another search is refused
    let other = SearchSpace::metacyclic(&GroupParams::new(7, 3, 2).unwrap()).unwrap();
    assert!(matches!(enumerate_free(&other, 8, &step), Err(zsm::Error::CursorMismatch { .. })));
}

#[test]
fn worker_count_does_not_change_results() {
    let p = GroupParams::new(7, 6, 3).unwrap();
    let space = SearchSpace::metacyclic(&p).unwrap();
    let one = enumerate_free(&space, 11, &plain().with_symmetry(true)).unwrap();
    let four = enumerate_free(&space, 11, &plain().with_symmetry(true).with_jobs(4)).unwrap();
    assert_eq!(one.sequences, four.sequences);
    assert_eq!(one.stats, four.stats);
}

#[test]
fn limits_are_enforced() {
    let big = SearchSpace::metacyclic(&GroupParams::new(13, 12, 2).unwrap());
    assert!(matches!(big, Err(zsm::Error::OrderCap { .. })));
    let space = SearchSpace::cyclic(5).unwrap();
    assert!(enumerate_free(&space, 33, &plain()).is_err());
}
