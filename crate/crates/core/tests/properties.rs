//! Exhaustive small-case invariants and randomized round trips.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;
use proptest::prelude::*;

use shifted_balanced::balanced::{enumerate_bs_bruteforce, is_balanced};
use shifted_balanced::bijection::{bs_to_reduced_word, bs_to_syt, reduced_word_to_bs, syt_to_bs};
use shifted_balanced::hook::{extended_hook_length, hook_length_formula_count, rank, rank_by_count};
use shifted_balanced::kraskiewicz::{
    has_unique_p_tableau, is_sdt, is_unimodal, kraskiewicz_insert, reverse_insert, reverse_insert_all, InsertionPair,
};
use shifted_balanced::padding::{pad_bs, pad_syt, unpad_bs};
use shifted_balanced::standard::{enumerate_syt, is_standard};
use shifted_balanced::trapezoid::{min_trapezoid, p_tableau_trapezoid, trapezoid, w_dr, TrapezoidContext};
use shifted_balanced::typeb::{
    enumerate_reduced_words, is_vexillary, reflection_order, reflection_order_to_word, ReflectionOrder,
    ReflectionOrderChecker, SignedPermutation, Word,
};
use shifted_balanced::{ShiftedTableau, StrictPartition};

/// Trapezoid parameters with `d ≥ 1` and `d + r ≤ max`.
fn small_trapezoids(max: usize) -> Vec<(usize, usize)> {
    (1..=max).flat_map(|d| (0..=max - d).map(move |r| (d, r))).collect()
}

fn reduced_words(w: &SignedPermutation) -> Vec<Word> {
    enumerate_reduced_words(w, 64).unwrap().collect()
}

/// Strict partitions with as many rows as `z` that fit inside it.
fn shapes_inside(z: &StrictPartition) -> Vec<StrictPartition> {
    StrictPartition::all_up_to(z.size())
        .into_iter()
        .filter(|l| l.len() == z.len() && (1..=l.len()).all(|i| l.part(i) <= z.part(i)))
        .collect()
}

// ---------------------------------------------------------------- shifted core

#[test]
fn rank_is_between_one_and_the_extended_hook_length() {
    for l in StrictPartition::all_up_to(12) {
        for c in l.cells() {
            let k = rank(&l, c).unwrap();
            assert_eq!(k, rank_by_count(&l, c).unwrap(), "{l} {c}");
            assert!(1 <= k && k <= extended_hook_length(&l, c).unwrap(), "{l} {c}");
        }
    }
}

#[test]
fn syt_enumeration_matches_hook_formula_up_to_12() {
    for l in StrictPartition::all_up_to(12) {
        let count = enumerate_syt(&l).inspect(|t| assert!(is_standard(t))).count();
        assert_eq!(BigUint::from(count), hook_length_formula_count(&l), "{l}");
    }
}

#[test]
fn balanced_tableaux_order_equal_length_adjacent_columns() {
    for l in StrictPartition::all_up_to(8) {
        let cols: Vec<i32> = l.cells().iter().map(|c| c.col).filter(|&j| j >= 0).unique().collect();
        let pairs: Vec<i32> = cols
            .iter()
            .copied()
            .filter(|&j| l.column_len(j + 1) > 0 && l.column_len(j) == l.column_len(j + 1))
            .collect();
        for b in enumerate_bs_bruteforce(&l, 9).unwrap() {
            for &j in &pairs {
                for (c, v) in b.entries().filter(|(c, _)| c.col == j) {
                    let right = b.get(shifted_balanced::Cell { row: c.row, col: j + 1 }).unwrap();
                    assert!(v < right, "{l}: column {j} row {} in\n{b}", c.row);
                }
            }
        }
    }
}

// ---------------------------------------------------------------- type B

#[test]
fn reflection_orders_over_b3() {
    for w in SignedPermutation::all(3) {
        let words = reduced_words(&w);
        let inv: HashSet<_> = w.inversion_set().into_iter().collect();
        let mut from_words = HashSet::new();
        for a in &words {
            let ro = reflection_order(a).unwrap();
            assert_eq!(ro.roots().iter().copied().collect::<HashSet<_>>(), inv, "{a}");
            assert_eq!(ro.len(), inv.len());
            assert_eq!(reflection_order_to_word(&ro, 3).unwrap(), *a);
            from_words.insert(ro.roots().to_vec());
        }
        let checker = ReflectionOrderChecker::new(&w);
        let valid: HashSet<Vec<_>> = w
            .inversion_set()
            .into_iter()
            .permutations(inv.len())
            .filter(|p| checker.check(&ReflectionOrder::new(p.clone()).unwrap()).unwrap())
            .collect();
        assert_eq!(valid, from_words, "{w}");
    }
}

#[test]
fn length_and_inverse_laws_over_b4() {
    for w in SignedPermutation::all(4) {
        assert_eq!(w.inversion_set().len(), w.inverse().inversion_set().len());
        assert_eq!(w.length(), w.inversion_set().len());
        for a in 0..4 {
            let l = w.mul_simple(a).unwrap().length();
            assert!(l + 1 == w.length() || l == w.length() + 1, "{w} s_{a}");
        }
    }
}

#[test]
fn vexillary_patterns_agree_with_constant_insertion_tableau_in_b4() {
    let mut disagreements = Vec::new();
    for w in SignedPermutation::all(4) {
        if is_vexillary(&w) != has_unique_p_tableau(&w, 16).unwrap() {
            disagreements.push(w.to_string());
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:?}");
}

// ---------------------------------------------------------------- insertion

#[test]
fn insertion_is_a_bijection_over_b3() {
    for w in SignedPermutation::all(3) {
        let words = reduced_words(&w);
        let mut pairs = HashSet::new();
        let mut shapes: BTreeMap<ShiftedTableau, StrictPartition> = BTreeMap::new();
        for a in &words {
            let pair = kraskiewicz_insert(a).unwrap();
            assert!(is_standard(&pair.q));
            assert_eq!(pair.p.shape(), pair.q.shape());
            assert!(pair.p.rows().iter().all(|row| is_unimodal(row)));
            assert!(is_sdt(&pair.p, &w), "{a}");
            assert_eq!(reverse_insert_all(&pair, 3).unwrap(), *a);
            assert!(pairs.insert(pair.clone()), "{a} collides");
            shapes.insert(pair.p.clone(), pair.p.shape().clone());
        }
        let total: BigUint = shapes.values().map(hook_length_formula_count).sum();
        assert_eq!(total, BigUint::from(words.len()), "{w}");
    }
}

#[test]
fn insertion_only_grows_the_current_rows() {
    let a = Word::parse("101213014201324", Some(5)).unwrap();
    let mut state = InsertionPair::empty();
    for (k, &letter) in a.letters().iter().enumerate() {
        let next = shifted_balanced::kraskiewicz::insert_letter(&state, letter, k + 1).unwrap();
        for (old, new) in state.q.rows().iter().zip(next.q.rows()) {
            assert!(new.starts_with(old), "step {}", k + 1);
        }
        state = next;
    }
}

#[test]
fn trapezoid_elements_have_one_insertion_tableau() {
    for (d, r) in small_trapezoids(4) {
        let expected = p_tableau_trapezoid(d, r).unwrap();
        for a in reduced_words(&w_dr(d, r)) {
            assert_eq!(kraskiewicz_insert(&a).unwrap().p, expected, "Z({d},{r}) {a}");
        }
    }
}

// ---------------------------------------------------------------- bijections

#[test]
fn trapezoid_words_and_balanced_tableaux_correspond() {
    for (d, r) in small_trapezoids(4) {
        let z = trapezoid(d, r).unwrap();
        let mut images = BTreeSet::new();
        for a in reduced_words(&w_dr(d, r)) {
            let b = reduced_word_to_bs(&a, d, r).unwrap();
            assert!(is_balanced(&b), "Z({d},{r}) {a}");
            assert_eq!(bs_to_reduced_word(&b).unwrap(), a);
            images.insert(b);
        }
        if z.size() <= 9 {
            let oracle: BTreeSet<_> = enumerate_bs_bruteforce(&z, 9).unwrap().into_iter().collect();
            assert_eq!(images, oracle, "Z({d},{r})");
        }
    }
}

/// A word of `w^(d,r)` lands in the image of padding from `λ` exactly when
/// it ends with `a^λ`. The 16-box trapezoid `Z(4,0)` (24024 words) is left
/// to the bijection tests.
#[test]
fn restriction_to_lambda_is_detected_by_the_word_tail() {
    for (d, r) in small_trapezoids(4)
        .into_iter()
        .filter(|&(d, r)| trapezoid(d, r).unwrap().size() <= 12)
    {
        let z = trapezoid(d, r).unwrap();
        let words: Vec<(Word, ShiftedTableau)> = reduced_words(&w_dr(d, r))
            .into_iter()
            .map(|a| {
                let b = reduced_word_to_bs(&a, d, r).unwrap();
                (a, b)
            })
            .collect();
        for l in shapes_inside(&z) {
            let ctx = TrapezoidContext::new(&l, d, r).unwrap();
            let tail = ctx.a_lambda();
            for (a, b) in &words {
                let restricts = unpad_bs(b, &ctx).is_ok();
                assert_eq!(
                    restricts,
                    a.letters().ends_with(tail.letters()),
                    "{l} in Z({d},{r}): {a}"
                );
            }
        }
    }
}

#[test]
fn a_lambda_is_popped_last_for_every_standard_tableau() {
    for l in StrictPartition::all_up_to(8) {
        let ctx = TrapezoidContext::minimal(&l).unwrap();
        let tail = ctx.a_lambda();
        let p = p_tableau_trapezoid(ctx.d, ctx.r).unwrap();
        for t in enumerate_syt(&l) {
            let mut state = InsertionPair::new(p.clone(), pad_syt(&t, &ctx).unwrap()).unwrap();
            let mut popped = Vec::new();
            for _ in 0..ctx.ell() - ctx.size() {
                let (next, a) = reverse_insert(&state).unwrap();
                popped.push(a);
                state = next;
            }
            popped.reverse();
            assert_eq!(popped, tail.letters(), "{l}: {t}");
        }
    }
}

#[test]
fn bijection_round_trips_up_to_10_boxes() {
    for l in StrictPartition::all_up_to(10) {
        let ctx = TrapezoidContext::minimal(&l).unwrap();
        let mut images = BTreeSet::new();
        for t in enumerate_syt(&l) {
            let b = syt_to_bs(&t, &ctx).unwrap();
            assert!(is_balanced(&b));
            assert_eq!(bs_to_syt(&b, &ctx).unwrap(), t, "{l}");
            images.insert(b);
        }
        assert_eq!(BigUint::from(images.len()), hook_length_formula_count(&l), "{l}");
    }
}

#[test]
fn pad_bs_keeps_entries_in_their_rows() {
    for l in StrictPartition::all_up_to(8) {
        let ctx = TrapezoidContext::minimal(&l).unwrap();
        for b in enumerate_bs_bruteforce(&l, 9).unwrap() {
            let padded = pad_bs(&b, &ctx).unwrap();
            for (c, v) in b.entries() {
                assert_eq!(padded.position_of(v).unwrap().row, c.row);
            }
        }
    }
}

/// Reports how often the images under the smallest trapezoid and the next
/// wider one agree. No outcome is required; both must be valid bijections.
#[test]
fn choice_of_trapezoid_width_report() {
    let (mut same, mut total, mut shapes_differing) = (0usize, 0usize, Vec::new());
    for l in StrictPartition::all_up_to(9) {
        let (d, r) = min_trapezoid(&l);
        let narrow = TrapezoidContext::new(&l, d, r).unwrap();
        let wide = TrapezoidContext::new(&l, d, r + 1).unwrap();
        let mut differs = false;
        for t in enumerate_syt(&l) {
            let (a, b) = (syt_to_bs(&t, &narrow).unwrap(), syt_to_bs(&t, &wide).unwrap());
            assert_eq!(bs_to_syt(&b, &wide).unwrap(), t);
            total += 1;
            if a == b {
                same += 1;
            } else {
                differs = true;
            }
        }
        if differs {
            shapes_differing.push(l.to_string());
        }
    }
    println!("r vs r+1: {same} of {total} images agree; shapes with differences: {shapes_differing:?}");
}

// ---------------------------------------------------------------- randomized

fn random_reduced_word(n: usize, letters: &[usize]) -> Word {
    let mut w = SignedPermutation::identity(n);
    let mut kept = Vec::new();
    for &a in letters {
        let a = a % n;
        let next = w.mul_simple(a).unwrap();
        if next.length() > w.length() {
            kept.push(a);
            w = next;
        }
    }
    Word::new(kept, n).unwrap()
}

/// Grows a standard tableau of shape `l`, choosing among the addable cells
/// with `choices`.
fn random_syt(l: &StrictPartition, choices: &[usize]) -> ShiftedTableau {
    let parts = l.parts();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
    for k in 1..=l.size() {
        let addable: Vec<usize> = (0..parts.len())
            .filter(|&i| rows[i].len() < parts[i] && (i == 0 || rows[i - 1].len() > rows[i].len() + 1))
            .collect();
        let i = addable[choices[k - 1] % addable.len()];
        rows[i].push(k);
    }
    ShiftedTableau::new(l.clone(), rows).unwrap()
}

fn shape_pool() -> Vec<StrictPartition> {
    StrictPartition::all_up_to(14)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn random_reduced_words_round_trip(n in 1usize..=5, letters in prop::collection::vec(0usize..5, 0..20)) {
        let a = random_reduced_word(n, &letters);
        prop_assert!(a.is_reduced());
        prop_assert_eq!(a.to_perm().length(), a.len());
        let pair = kraskiewicz_insert(&a).unwrap();
        prop_assert!(is_sdt(&pair.p, &a.to_perm()));
        prop_assert_eq!(reverse_insert_all(&pair, n).unwrap(), a.clone());
        let ro = reflection_order(&a).unwrap();
        prop_assert!(shifted_balanced::typeb::is_valid_reflection_order(&ro, &a.to_perm()).unwrap());
        prop_assert_eq!(reflection_order_to_word(&ro, n).unwrap(), a);
        let json = pair.to_json();
        prop_assert_eq!(InsertionPair::from_json(&json).unwrap(), pair);
    }

    #[test]
    fn words_never_beat_their_length(n in 1usize..=4, letters in prop::collection::vec(0usize..4, 0..12)) {
        let letters: Vec<usize> = letters.into_iter().map(|a| a % n).collect();
        let a = Word::new(letters, n).unwrap();
        prop_assert!(a.to_perm().length() <= a.len());
        prop_assert_eq!(a.to_perm().length() == a.len(), a.is_reduced());
    }

    #[test]
    fn random_standard_tableaux_round_trip(
        index in any::<prop::sample::Index>(),
        choices in prop::collection::vec(any::<usize>(), 14),
        widen in 0usize..2,
    ) {
        let pool = shape_pool();
        let l = index.get(&pool);
        let t = random_syt(l, &choices);
        prop_assert!(is_standard(&t));
        let (d, r) = min_trapezoid(l);
        let ctx = TrapezoidContext::new(l, d, r + widen).unwrap();
        let b = syt_to_bs(&t, &ctx).unwrap();
        prop_assert!(is_balanced(&b));
        prop_assert_eq!(bs_to_syt(&b, &ctx).unwrap(), t.clone());
        prop_assert_eq!(ShiftedTableau::parse(&b.to_json()).unwrap(), b.clone());
        prop_assert_eq!(ShiftedTableau::parse(&b.to_text()).unwrap(), b);
    }
}
