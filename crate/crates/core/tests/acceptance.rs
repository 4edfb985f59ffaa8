//! Acceptance suite: one line of output per criterion.

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigUint;

use shifted_balanced::balanced::{check_strongly_balanced, enumerate_bs_bruteforce, is_balanced};
use shifted_balanced::bijection::{bs_to_reduced_word, bs_to_syt_trace, reduced_word_to_bs, syt_to_bs};
use shifted_balanced::hook::hook_length_formula_count;
use shifted_balanced::kraskiewicz::{
    kraskiewicz_insert, reading_word, reverse_insert, reverse_insert_all, InsertionPair,
};
use shifted_balanced::standard::{enumerate_syt, is_standard};
use shifted_balanced::tableau::tableau;
use shifted_balanced::trapezoid::{p_tableau_trapezoid, trapezoid, w_dr, TrapezoidContext};
use shifted_balanced::typeb::{
    count_reduced_words, enumerate_reduced_words, is_valid_reflection_order, is_vexillary, reflection_order,
    ReflectionOrder, SignedPermutation, Word,
};
use shifted_balanced::verify::verify_shape;
use shifted_balanced::{ShiftedTableau, StrictPartition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sp(p: &[usize]) -> StrictPartition {
    StrictPartition::new(p.to_vec()).unwrap()
}

fn word(s: &str, n: usize) -> Word {
    Word::parse(s, Some(n)).unwrap()
}

fn fill(shape: &StrictPartition, values: Vec<usize>) -> ShiftedTableau {
    let mut it = values.into_iter();
    ShiftedTableau::from_fn(shape, |_| it.next().unwrap())
}

fn theorem_exhaustive() -> Outcome {
    let start = Instant::now();
    let shapes = StrictPartition::all_up_to(10);
    let mut total = 0;
    for l in &shapes {
        let ctx = TrapezoidContext::minimal(l).map_err(|e| e.to_string())?;
        let report = verify_shape(&ctx, 0).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "{l}: {:?}", report.failures);
        ensure!(
            report.hook_formula == report.syt.to_string(),
            "{l}: hook formula mismatch"
        );
        total += report.syt;
    }
    Ok(format!(
        "{} shapes, {total} tableaux, {:.1?}",
        shapes.len(),
        start.elapsed()
    ))
}

fn brute_force_oracle() -> Outcome {
    let start = Instant::now();
    let shapes = StrictPartition::all_up_to(8);
    let mut total = 0;
    for l in &shapes {
        let ctx = TrapezoidContext::minimal(l).map_err(|e| e.to_string())?;
        let image: BTreeSet<ShiftedTableau> = enumerate_syt(l)
            .map(|t| syt_to_bs(&t, &ctx))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("{l}: {e}"))?;
        let oracle: BTreeSet<ShiftedTableau> = enumerate_bs_bruteforce(l, 8)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        ensure!(
            image == oracle,
            "{l}: image {} vs brute force {}",
            image.len(),
            oracle.len()
        );
        total += oracle.len();
    }
    Ok(format!(
        "{} shapes, {total} balanced tableaux, {:.1?}",
        shapes.len(),
        start.elapsed()
    ))
}

fn golden_worked_example() -> Outcome {
    let ctx = TrapezoidContext::new(&sp(&[6, 2, 1]), 3, 2).map_err(|e| e.to_string())?;
    let b = tableau(&[&[6, 3, 4, 1, 5, 9], &[7, 8], &[2]]);
    let trace = bs_to_syt_trace(&b, &ctx).map_err(|e| e.to_string())?;
    let b_plus = tableau(&[&[6, 3, 4, 9, 10, 5, 1], &[7, 8, 12, 13, 11], &[2, 14, 15]]);
    let p = tableau(&[&[4, 3, 0, 1, 2, 3, 4], &[3, 0, 1, 2, 3], &[0, 1, 2]]);
    let q = tableau(&[&[1, 2, 3, 5, 6, 9, 10], &[4, 7, 11, 12, 13], &[8, 14, 15]]);
    let t = tableau(&[&[1, 2, 3, 5, 6, 9], &[4, 7], &[8]]);
    ensure!(trace.bs_padded == b_plus, "B+ = {:?}", trace.bs_padded.rows());
    ensure!(trace.word.to_string() == "201012103412312", "word = {}", trace.word);
    ensure!(trace.insertion.p == p, "P = {:?}", trace.insertion.p.rows());
    ensure!(trace.insertion.q == q, "Q = {:?}", trace.insertion.q.rows());
    ensure!(trace.syt == t, "T = {:?}", trace.syt.rows());
    let back = syt_to_bs(&t, &ctx).map_err(|e| e.to_string())?;
    ensure!(back == b, "T maps back to {:?}", back.rows());
    Ok("B+, word, P, Q, T all match".into())
}

fn golden_insertion() -> Outcome {
    let pair = kraskiewicz_insert(&word("010121012342312", 5)).map_err(|e| e.to_string())?;
    let p = tableau(&[&[4, 3, 0, 1, 2, 3, 4], &[3, 0, 1, 2, 3], &[0, 1, 2]]);
    let q = tableau(&[&[1, 2, 4, 5, 9, 10, 11], &[3, 6, 8, 12, 13], &[7, 14, 15]]);
    ensure!(pair.p == p, "P = {:?}", pair.p.rows());
    ensure!(pair.q == q, "Q = {:?}", pair.q.rows());
    let reading: String = reading_word(&pair.p).iter().map(|a| a.to_string()).collect();
    ensure!(reading == "012301234301234", "reading word {reading}");
    Ok("P, Q and reading word match".into())
}

fn golden_trapezoid_word() -> Outcome {
    let b = tableau(&[&[4, 8, 7, 10, 13, 5, 15], &[3, 2, 6, 9, 1], &[11, 12, 14]]);
    let a = bs_to_reduced_word(&b).map_err(|e| e.to_string())?;
    ensure!(a.to_string() == "101213014201324", "word = {a}");
    let back = reduced_word_to_bs(&a, 3, 2).map_err(|e| e.to_string())?;
    ensure!(back == b, "word maps back to {:?}", back.rows());
    Ok("tableau -> 101213014201324 -> tableau".into())
}

fn golden_reverse_insertion() -> Outcome {
    let q_plus = tableau(&[&[1, 2, 3, 5, 6, 9, 10], &[4, 7, 11, 12, 13], &[8, 14, 15]]);
    let mut state = InsertionPair::new(p_tableau_trapezoid(3, 2).unwrap(), q_plus).map_err(|e| e.to_string())?;
    let expected: [(usize, &[&[usize]]); 6] = [
        (2, &[&[4, 2, 0, 1, 2, 3, 4], &[2, 0, 1, 2, 3], &[0, 1]]),
        (1, &[&[4, 1, 0, 1, 2, 3, 4], &[1, 0, 1, 2, 3], &[0]]),
        (3, &[&[3, 1, 0, 1, 2, 3, 4], &[1, 0, 1, 2], &[0]]),
        (2, &[&[2, 1, 0, 1, 2, 3, 4], &[1, 0, 1], &[0]]),
        (1, &[&[2, 1, 0, 1, 2, 3, 4], &[1, 0], &[0]]),
        (4, &[&[2, 1, 0, 1, 2, 3], &[1, 0], &[0]]),
    ];
    for (step, (letter, rows)) in expected.iter().enumerate() {
        let (next, a) = reverse_insert(&state).map_err(|e| e.to_string())?;
        ensure!(a == *letter, "pop {}: letter {a}, expected {letter}", step + 1);
        ensure!(next.p == tableau(rows), "pop {}: P = {:?}", step + 1, next.p.rows());
        state = next;
    }
    let ctx = TrapezoidContext::new(&sp(&[6, 2, 1]), 3, 2).map_err(|e| e.to_string())?;
    ensure!(ctx.a_lambda().to_string() == "412312", "a_lambda = {}", ctx.a_lambda());
    ensure!(
        ctx.w_lambda().to_string() == "-2 -1 4 -3 5",
        "w_lambda = {}",
        ctx.w_lambda()
    );
    ensure!(ctx.w_lambda_via_path() == ctx.w_lambda(), "path construction disagrees");
    ensure!(
        ctx.p_lambda() == tableau(&[&[2, 1, 0, 1, 2, 3], &[1, 0], &[0]]),
        "p_lambda = {:?}",
        ctx.p_lambda().rows()
    );
    ensure!(
        ctx.p_lambda() == state.p,
        "p_lambda differs from the last reverse-insertion tableau"
    );
    Ok("letters 2,1,3,2,1,4 and all six tableaux match; a, w, P of λ match".into())
}

fn insertion_bijectivity_b3() -> Outcome {
    let start = Instant::now();
    let mut vexillary = 0;
    for w in SignedPermutation::all(3) {
        let mut pairs = BTreeSet::new();
        let mut p_tableaux = BTreeSet::new();
        let mut count = 0;
        for a in enumerate_reduced_words(&w, 16).map_err(|e| e.to_string())? {
            let pair = kraskiewicz_insert(&a).map_err(|e| format!("{w}: {a}: {e}"))?;
            ensure!(is_standard(&pair.q), "{w}: Q not standard for {a}");
            ensure!(pair.p.shape() == pair.q.shape(), "{w}: shapes differ for {a}");
            let back = reverse_insert_all(&pair, 3).map_err(|e| format!("{w}: {a}: {e}"))?;
            ensure!(back == a, "{w}: {a} recovers as {back}");
            p_tableaux.insert(pair.p.clone());
            pairs.insert((pair.p.rows().to_vec(), pair.q.rows().to_vec()));
            count += 1;
        }
        ensure!(pairs.len() == count, "{w}: insertion not injective");
        let constant = p_tableaux.len() == 1;
        ensure!(
            constant == is_vexillary(&w),
            "{w}: constant P = {constant}, vexillary = {}",
            is_vexillary(&w)
        );
        vexillary += usize::from(constant);
    }
    Ok(format!("48 elements, {vexillary} vexillary, {:.1?}", start.elapsed()))
}

fn reflection_order_criterion() -> Outcome {
    for w in SignedPermutation::all(2) {
        let inv = w.inversion_set();
        let from_words: BTreeSet<Vec<String>> = enumerate_reduced_words(&w, 16)
            .map_err(|e| e.to_string())?
            .map(|a| {
                reflection_order(&a)
                    .unwrap()
                    .roots()
                    .iter()
                    .map(|r| r.to_string())
                    .collect()
            })
            .collect();
        let mut valid = BTreeSet::new();
        for perm in inv.iter().copied().permutations(inv.len()) {
            let order = ReflectionOrder::new(perm).map_err(|e| e.to_string())?;
            if is_valid_reflection_order(&order, &w).map_err(|e| e.to_string())? {
                valid.insert(order.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>());
            }
        }
        ensure!(
            valid == from_words,
            "{w}: {} valid orders vs {} words",
            valid.len(),
            from_words.len()
        );
    }
    let w0 = SignedPermutation::longest(2);
    let valid = w0
        .inversion_set()
        .into_iter()
        .permutations(4)
        .filter(|p| is_valid_reflection_order(&ReflectionOrder::new(p.clone()).unwrap(), &w0).unwrap())
        .count();
    ensure!(valid == 2, "{valid} valid orderings for -1 -2");
    Ok("all 8 elements of B_2; 2 of 24 orderings for -1 -2".into())
}

fn counts() -> Outcome {
    for (shape, expected) in [
        (&[2, 1][..], 1u32),
        (&[3, 1], 2),
        (&[3, 2, 1], 2),
        (&[4, 2], 5),
        (&[6, 2, 1], 30),
    ] {
        let l = sp(shape);
        let formula = hook_length_formula_count(&l);
        let listed = enumerate_syt(&l).count();
        ensure!(formula == BigUint::from(expected), "f^{l} = {formula}");
        ensure!(listed == expected as usize, "enumerated {listed} for {l}");
    }
    for (d, r, expected) in [(2, 0, 2u32), (2, 1, 5)] {
        let w = w_dr(d, r);
        let count = count_reduced_words(&w);
        let listed = enumerate_reduced_words(&w, 16).map_err(|e| e.to_string())?.count();
        let f = hook_length_formula_count(&trapezoid(d, r).unwrap());
        ensure!(
            count == BigUint::from(expected) && listed == expected as usize,
            "|Red({w})| = {count}"
        );
        ensure!(count == f, "|Red({w})| = {count} but f^Z = {f}");
    }
    Ok("f^(2,1)=1 f^(3,1)=2 f^(3,2,1)=2 f^(4,2)=5 f^(6,2,1)=30 |Red(w^(2,0))|=2 |Red(w^(2,1))|=5".into())
}

fn strongly_balanced_equivalence() -> Outcome {
    let start = Instant::now();
    let mut balanced = 0;
    for (d, r) in [(2, 0), (2, 1)] {
        let z = trapezoid(d, r).unwrap();
        let n = z.size();
        for values in (1..=n).permutations(n) {
            let t = fill(&z, values);
            let strong = check_strongly_balanced(&t).map_err(|e| e.to_string())?;
            ensure!(is_balanced(&t) == strong, "Z({d},{r}) disagreement on {:?}", t.rows());
            balanced += usize::from(strong);
        }
    }
    Ok(format!(
        "4! + 6! fillings, {balanced} balanced, {:.1?}",
        start.elapsed()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exhaustive bijection for |λ| <= 10", theorem_exhaustive),
        ("brute-force balanced tableaux = image for |λ| <= 8", brute_force_oracle),
        ("worked example (6,2,1) end to end", golden_worked_example),
        ("insertion of 010121012342312", golden_insertion),
        ("Z(3,2) balanced tableau <-> 101213014201324", golden_trapezoid_word),
        ("reverse insertion table and a/w/P of (6,2,1)", golden_reverse_insertion),
        ("insertion bijectivity and vexillarity on B_3", insertion_bijectivity_b3),
        ("reflection orders of B_2", reflection_order_criterion),
        ("counts", counts),
        (
            "strongly balanced equivalence on Z(2,0), Z(2,1)",
            strongly_balanced_equivalence,
        ),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", k + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
