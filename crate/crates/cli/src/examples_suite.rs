//! The bundled worked-example checks behind the `paper-examples`
//! subcommand. Each check recomputes one published example or identity and
//! compares against the recorded outcome.

use multitilde::{
    act_bool, act_tilde, compile_star_free, count_distinct_languages, count_ptt, enumerate_ptt,
    equivalent, eval_star_tree, factor_tilde, free_subsets, parse, phi, phi_inv, pseudo_closure,
    subword_tilde, vectorize, BoolVector, BoolVectorSet, FiniteLanguage, Multitilde, Pair,
    StarTree, Word,
};

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

type Check = fn() -> Result<(), String>;

fn pair(x: usize, y: usize) -> Pair {
    Pair::new(x, y).unwrap()
}

fn mt(arity: usize, pairs: &[(usize, usize)]) -> Multitilde {
    Multitilde::new(arity, pairs.iter().map(|&(x, y)| pair(x, y))).unwrap()
}

fn letter(s: &str) -> FiniteLanguage {
    FiniteLanguage::letter(s).unwrap()
}

fn lang(words: &[&str]) -> FiniteLanguage {
    FiniteLanguage::from_words(words.iter().map(|w| Word::from_chars(w).unwrap()))
}

fn vectors(arity: usize, rows: &[&[u8]]) -> BoolVectorSet {
    BoolVectorSet::new(
        arity,
        rows.iter()
            .map(|r| BoolVector::new(&r.iter().map(|&b| b == 1).collect::<Vec<_>>()).unwrap()),
    )
    .unwrap()
}

fn all_tildes(arity: usize) -> Vec<Multitilde> {
    let mut candidates = Vec::new();
    for x in 1..=arity {
        for y in x..=arity {
            candidates.push(pair(x, y));
        }
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << candidates.len()) {
        let pairs = candidates
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p);
        out.push(Multitilde::new(arity, pairs).unwrap());
    }
    out
}

fn translations_commute() -> Result<(), String> {
    let one_way = pair(1, 1).dec(2).dec(5);
    let other_way = pair(1, 1).dec(5).dec(2);
    ensure!(one_way == pair(8, 8), "expected (8,8), got {one_way}");
    ensure!(
        one_way == other_way,
        "orders disagree: {one_way} vs {other_way}"
    );
    Ok(())
}

fn insertion_at_five_by_six() -> Result<(), String> {
    for (input, expected) in [((1, 3), (1, 3)), ((3, 7), (3, 12)), ((7, 8), (12, 13))] {
        let got = pair(input.0, input.1).shift(5, 6);
        let want = pair(expected.0, expected.1);
        ensure!(
            got == want,
            "({},{}) moved to {got}, expected {want}",
            input.0,
            input.1
        );
    }
    let moved = multitilde::shift_set(5, 6, &[pair(1, 3), pair(3, 7), pair(7, 8)]);
    ensure!(
        moved == vec![pair(1, 3), pair(3, 12), pair(12, 13)],
        "set version moved to {moved:?}"
    );
    Ok(())
}

fn swap_law_small() -> Result<(), String> {
    let all: Vec<Multitilde> = (1..=2).flat_map(all_tildes).collect();
    for t1 in all_tildes(2).iter().chain(all_tildes(3).iter().take(16)) {
        for t2 in &all {
            for t3 in &all {
                let p = t3.arity();
                for l in 2..=t1.arity() {
                    for k in 1..l {
                        let left = t1
                            .compose_partial(l, t2)
                            .unwrap()
                            .compose_partial(k, t3)
                            .unwrap();
                        let right = t1
                            .compose_partial(k, t3)
                            .unwrap()
                            .compose_partial(l + p - 1, t2)
                            .unwrap();
                        ensure!(left == right, "swap law broke at t1={t1} t2={t2} t3={t3}");
                    }
                }
            }
        }
    }
    Ok(())
}

fn nesting_law_small() -> Result<(), String> {
    let all: Vec<Multitilde> = (1..=2).flat_map(all_tildes).collect();
    for t1 in &all {
        for t2 in &all {
            for t3 in &all {
                for k in 1..=t1.arity() {
                    for i in 1..=t2.arity() {
                        let left = t1
                            .compose_partial(k, &t2.compose_partial(i, t3).unwrap())
                            .unwrap();
                        let right = t1
                            .compose_partial(k, t2)
                            .unwrap()
                            .compose_partial(k + i - 1, t3)
                            .unwrap();
                        ensure!(
                            left == right,
                            "nesting law broke at t1={t1} t2={t2} t3={t3}"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn identity_laws() -> Result<(), String> {
    let id = Multitilde::identity();
    ensure!(
        id == mt(1, &[]),
        "identity should be the empty unary operator"
    );
    for t in (1..=3).flat_map(all_tildes) {
        for k in 1..=t.arity() {
            let right = t.compose_partial(k, &id).unwrap();
            ensure!(right == t, "right identity broke at {t}, slot {k}");
        }
        let left = id.compose_partial(1, &t).unwrap();
        ensure!(left == t, "left identity broke at {t}");
    }
    Ok(())
}

fn identity_vectorizes_to_unit() -> Result<(), String> {
    let v = vectorize(&Multitilde::identity()).map_err(|e| e.to_string())?;
    ensure!(
        v == BoolVectorSet::identity(),
        "identity mapped to {v:?} instead of the unit set"
    );
    Ok(())
}

fn four_slot_vector_set() -> Result<(), String> {
    let got = vectorize(&mt(4, &[(1, 2), (2, 3), (3, 4), (4, 4)])).map_err(|e| e.to_string())?;
    let want = vectors(
        4,
        &[
            &[0, 0, 0, 0],
            &[0, 0, 1, 0],
            &[1, 0, 0, 0],
            &[0, 0, 1, 1],
            &[1, 0, 0, 1],
            &[1, 1, 0, 0],
            &[1, 1, 1, 0],
            &[1, 1, 1, 1],
        ],
    );
    ensure!(got == want, "vector set mismatch: {got:?}");
    Ok(())
}

fn factor_three_free_subsets() -> Result<(), String> {
    let f3 = factor_tilde(3).map_err(|e| e.to_string())?;
    ensure!(
        f3 == mt(3, &[(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)]),
        "unexpected factor operator {f3}"
    );
    let subsets = free_subsets(&f3);
    ensure!(
        subsets.len() == 9,
        "expected 9 free subsets, got {}",
        subsets.len()
    );
    let expect_doubles = [
        vec![pair(1, 1), pair(2, 3)],
        vec![pair(1, 2), pair(3, 3)],
        vec![pair(1, 1), pair(3, 3)],
    ];
    for d in &expect_doubles {
        ensure!(
            subsets.iter().any(|s| s.pairs() == d.as_slice()),
            "missing free subset {d:?}"
        );
    }
    Ok(())
}

fn factor_three_vector_set() -> Result<(), String> {
    let got = vectorize(&factor_tilde(3).unwrap()).map_err(|e| e.to_string())?;
    let want = vectors(
        3,
        &[
            &[1, 1, 1],
            &[0, 1, 1],
            &[0, 0, 1],
            &[0, 0, 0],
            &[1, 0, 0],
            &[1, 1, 0],
            &[0, 1, 0],
        ],
    );
    ensure!(got == want, "vector set mismatch: {got:?}");
    Ok(())
}

fn unit_set_neutral_for_splicing() -> Result<(), String> {
    let id = BoolVectorSet::identity();
    let f = vectors(2, &[&[1, 1], &[0, 0], &[1, 0]]);
    let left = id.compose_partial(1, &f).map_err(|e| e.to_string())?;
    ensure!(left == f, "left unit broke");
    for k in 1..=2 {
        let right = f.compose_partial(k, &id).map_err(|e| e.to_string())?;
        ensure!(right == f, "right unit broke at slot {k}");
    }
    Ok(())
}

fn all_or_nothing_action() -> Result<(), String> {
    let e = vectors(2, &[&[1, 1], &[0, 0]]);
    let got = act_bool(&e, &[letter("a"), letter("b")]).map_err(|e| e.to_string())?;
    ensure!(got == lang(&["ab", ""]), "expected {{ab, ε}}, got {got}");
    Ok(())
}

fn factor_three_action() -> Result<(), String> {
    let got = act_tilde(
        &factor_tilde(3).unwrap(),
        &[letter("a"), letter("b"), letter("c")],
    )
    .map_err(|e| e.to_string())?;
    ensure!(
        got == lang(&["abc", "bc", "c", "", "a", "ab", "b"]),
        "expected the seven factor words, got {got}"
    );
    Ok(())
}

fn union_catenation_epsilon_encodings() -> Result<(), String> {
    let union = act_tilde(
        &mt(3, &[(1, 2), (2, 3)]),
        &[letter("a"), FiniteLanguage::empty(), letter("b")],
    )
    .map_err(|e| e.to_string())?;
    ensure!(union == lang(&["a", "b"]), "union encoding gave {union}");
    let cat = act_tilde(&mt(2, &[]), &[letter("a"), letter("b")]).map_err(|e| e.to_string())?;
    ensure!(cat == lang(&["ab"]), "catenation encoding gave {cat}");
    let eps =
        act_tilde(&mt(1, &[(1, 1)]), &[FiniteLanguage::empty()]).map_err(|e| e.to_string())?;
    ensure!(
        eps == FiniteLanguage::epsilon(),
        "empty-word encoding gave {eps}"
    );
    Ok(())
}

fn prefixes_of_two_words() -> Result<(), String> {
    let got = lang(&["ab", "cd"]).prefixes();
    ensure!(
        got == lang(&["", "a", "ab", "c", "cd"]),
        "prefix closure gave {got}"
    );
    Ok(())
}

fn subword_operator_on_two_letters() -> Result<(), String> {
    let got = act_tilde(&subword_tilde(2).unwrap(), &[letter("a"), letter("b")])
        .map_err(|e| e.to_string())?;
    ensure!(
        got == lang(&["ab", "a", "b", ""]),
        "subword action gave {got}"
    );
    Ok(())
}

fn relation_bijection_round_trips() -> Result<(), String> {
    for t in (1..=4).flat_map(all_tildes) {
        let back = phi_inv(&phi(&t)).map_err(|e| e.to_string())?;
        ensure!(back == t, "round trip moved {t} to {back}");
    }
    Ok(())
}

fn relation_composition_mirrors_operators() -> Result<(), String> {
    let all: Vec<Multitilde> = (1..=2).flat_map(all_tildes).collect();
    for t1 in &all {
        for t2 in &all {
            for k in 1..=t1.arity() {
                let composed = phi(&t1.compose_partial(k, t2).unwrap());
                let diamond = phi(t1).diamond(k, &phi(t2)).map_err(|e| e.to_string())?;
                ensure!(
                    composed == diamond,
                    "relation composition diverged at t1={t1} t2={t2} k={k}"
                );
            }
        }
    }
    Ok(())
}

fn closing_early_changes_nothing() -> Result<(), String> {
    let all: Vec<Multitilde> = (1..=2).flat_map(all_tildes).collect();
    for t1 in &all {
        for t2 in &all {
            let r1 = phi(t1);
            let r2 = phi(t2);
            for k in 1..r1.size() {
                let left = r1
                    .transitive_closure()
                    .diamond(k, &r2.transitive_closure())
                    .unwrap()
                    .transitive_closure();
                let right = r1.diamond(k, &r2).unwrap().transitive_closure();
                ensure!(
                    left == right,
                    "closure order mattered at t1={t1} t2={t2} k={k}"
                );
            }
        }
    }
    Ok(())
}

fn vector_sets_ignore_closure() -> Result<(), String> {
    for t in (1..=3).flat_map(all_tildes) {
        let plain = vectorize(&t).map_err(|e| e.to_string())?;
        let closed = vectorize(&pseudo_closure(&t)).map_err(|e| e.to_string())?;
        ensure!(plain == closed, "closure changed the vector set of {t}");
    }
    Ok(())
}

fn one_sided_operators_differ() -> Result<(), String> {
    let first = mt(2, &[(1, 1)]);
    let second = mt(2, &[(2, 2)]);
    ensure!(!equivalent(&first, &second), "operators wrongly equivalent");
    let langs = [letter("a"), letter("b")];
    let left = act_tilde(&first, &langs).map_err(|e| e.to_string())?;
    let right = act_tilde(&second, &langs).map_err(|e| e.to_string())?;
    ensure!(left == lang(&["ab", "b"]), "first action gave {left}");
    ensure!(right == lang(&["ab", "a"]), "second action gave {right}");
    Ok(())
}

fn closure_collapses_nested_tildes() -> Result<(), String> {
    let open = mt(4, &[(1, 2), (3, 4)]);
    let closed = mt(4, &[(1, 2), (3, 4), (1, 4)]);
    ensure!(pseudo_closure(&open) == closed, "closure of {open} wrong");
    ensure!(
        equivalent(&open, &closed),
        "operator not equivalent to its closure"
    );
    let langs = [letter("a"), letter("b"), letter("c"), letter("d")];
    let l1 = act_tilde(&open, &langs).map_err(|e| e.to_string())?;
    let l2 = act_tilde(&closed, &langs).map_err(|e| e.to_string())?;
    ensure!(l1 == l2, "closure changed the action");
    ensure!(
        l1 == lang(&["abcd", "cd", "ab", ""]),
        "unexpected language {l1}"
    );
    Ok(())
}

fn counts_match_reference_sequence() -> Result<(), String> {
    for (k, expected) in [(1, 2), (2, 7), (3, 40), (4, 357), (5, 4824), (6, 96_428)] {
        let got = count_ptt(k).map_err(|e| e.to_string())?.ptt_count;
        ensure!(
            got == expected,
            "arity {k}: counted {got}, expected {expected}"
        );
    }
    Ok(())
}

fn seven_rows_on_two_letters() -> Result<(), String> {
    let langs = [letter("a"), letter("b")];
    let rows = [
        (mt(2, &[]), lang(&["ab"])),
        (mt(2, &[(1, 1)]), lang(&["ab", "b"])),
        (mt(2, &[(1, 1), (1, 2)]), lang(&["ab", "b", ""])),
        (mt(2, &[(2, 2)]), lang(&["ab", "a"])),
        (mt(2, &[(1, 2), (2, 2)]), lang(&["ab", "a", ""])),
        (
            mt(2, &[(1, 1), (1, 2), (2, 2)]),
            lang(&["ab", "a", "b", ""]),
        ),
        (mt(2, &[(1, 2)]), lang(&["ab", ""])),
    ];
    let generated: Vec<Multitilde> = enumerate_ptt(2).map_err(|e| e.to_string())?.collect();
    ensure!(
        generated.len() == 7,
        "expected 7 operators, got {}",
        generated.len()
    );
    for (tilde, expected) in &rows {
        ensure!(generated.contains(tilde), "{tilde} missing");
        let got = act_tilde(tilde, &langs).map_err(|e| e.to_string())?;
        ensure!(
            &got == expected,
            "{tilde} acted as {got}, expected {expected}"
        );
    }
    Ok(())
}

fn seven_distinct_languages() -> Result<(), String> {
    let got = count_distinct_languages(&[letter("a"), letter("b")]).map_err(|e| e.to_string())?;
    ensure!(got == 7, "expected 7 distinct languages, got {got}");
    Ok(())
}

fn sum_compilation_shell() -> Result<(), String> {
    let compiled = compile_star_free(&parse("a+b").unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        compiled.tilde() == &mt(3, &[(1, 2), (2, 3)]),
        "sum shell was {}",
        compiled.tilde()
    );
    ensure!(
        compiled.leaves() == [letter("a"), FiniteLanguage::empty(), letter("b")].as_slice(),
        "unexpected leaves"
    );
    ensure!(compiled.language() == lang(&["a", "b"]), "wrong language");
    Ok(())
}

fn empty_word_compilation() -> Result<(), String> {
    let compiled = compile_star_free(&parse("1").unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        compiled.tilde() == &mt(1, &[(1, 1)]),
        "shell was {}",
        compiled.tilde()
    );
    ensure!(
        compiled.leaves() == [FiniteLanguage::empty()].as_slice(),
        "unexpected leaves"
    );
    ensure!(
        compiled.language() == FiniteLanguage::epsilon(),
        "wrong language"
    );
    Ok(())
}

fn repeated_stars_collapse() -> Result<(), String> {
    let tree = StarTree::star(StarTree::star(StarTree::leaf(1)));
    let normalized = multitilde::star_tree_normalize(&tree).map_err(|e| e.to_string())?;
    ensure!(
        normalized == StarTree::star(StarTree::leaf(1)),
        "nested star did not collapse"
    );
    let leaves = [letter("a")];
    for max_len in [0, 1, 3] {
        let before = eval_star_tree(&tree, &leaves, max_len).map_err(|e| e.to_string())?;
        let after = eval_star_tree(&normalized, &leaves, max_len).map_err(|e| e.to_string())?;
        ensure!(
            before == after,
            "collapse changed the language at bound {max_len}"
        );
    }
    Ok(())
}

fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("translation operators commute", translations_commute),
        ("insertion at position 5 by 6", insertion_at_five_by_six),
        ("swap law on small operators", swap_law_small),
        ("nesting law on small operators", nesting_law_small),
        ("identity composition laws", identity_laws),
        (
            "identity maps to the unit vector set",
            identity_vectorizes_to_unit,
        ),
        ("vector set of the four-slot example", four_slot_vector_set),
        (
            "free subsets of the factor-three operator",
            factor_three_free_subsets,
        ),
        (
            "vector set of the factor-three operator",
            factor_three_vector_set,
        ),
        (
            "unit vector set is neutral for splicing",
            unit_set_neutral_for_splicing,
        ),
        (
            "all-or-nothing set on a pair of letters",
            all_or_nothing_action,
        ),
        ("factor-three action on three letters", factor_three_action),
        (
            "union, catenation, and empty-word encodings",
            union_catenation_epsilon_encodings,
        ),
        ("prefixes of a two-word language", prefixes_of_two_words),
        (
            "subword operator on two letters",
            subword_operator_on_two_letters,
        ),
        (
            "relation bijection round-trips",
            relation_bijection_round_trips,
        ),
        (
            "relation composition mirrors operator composition",
            relation_composition_mirrors_operators,
        ),
        (
            "closing before composing changes nothing",
            closing_early_changes_nothing,
        ),
        ("vector sets ignore the closure", vector_sets_ignore_closure),
        (
            "one-sided operators differ on two letters",
            one_sided_operators_differ,
        ),
        (
            "closure collapses split intervals",
            closure_collapses_nested_tildes,
        ),
        (
            "counts match the reference sequence",
            counts_match_reference_sequence,
        ),
        (
            "seven operator rows on two letters",
            seven_rows_on_two_letters,
        ),
        (
            "seven distinct languages from two letters",
            seven_distinct_languages,
        ),
        (
            "sum compilation uses the three-slot shell",
            sum_compilation_shell,
        ),
        ("empty-word compilation", empty_word_compilation),
        ("repeated stars collapse", repeated_stars_collapse),
    ]
}

/// Runs every check, printing one line each; returns true when all pass.
pub fn run(out: &mut dyn std::io::Write) -> std::io::Result<bool> {
    let mut failures = 0usize;
    let list = checks();
    let total = list.len();
    for (name, check) in list {
        match check() {
            Ok(()) => writeln!(out, "PASS {name}")?,
            Err(reason) => {
                failures += 1;
                writeln!(out, "FAIL {name}: {reason}")?;
            }
        }
    }
    if failures == 0 {
        writeln!(out, "{total} checks passed")?;
    } else {
        writeln!(out, "{failures} of {total} checks failed")?;
    }
    Ok(failures == 0)
}
