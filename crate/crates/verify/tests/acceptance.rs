//! Exit criteria. Each test prints one PASS/FAIL line per criterion (and
//! per sub-check where a criterion has several parts).
//!
//! Run with `cargo test -p accelkey-verify --test acceptance -- --nocapture`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use accelkey_core::dataset::{bundled_dataset, BUNDLED};
use accelkey_core::eval::{average_events, compare, cost_accelkey};
use accelkey_core::{
    builtin_layout, normalize_entry, trackball_to_event, Constraint, CursorPolicy, Dataset, Direction, InputEvent,
    JitterConfig, KeypadLayout, MatchOptions, Matcher, Method, Mode, Outcome, Prefix, Rejection, Session,
    SessionConfig, TrackballDelta,
};
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const RANDOM_DATASETS: usize = 500;
const MATCH_TRIPLES: usize = 10_000;
const TRACKBALL_PAIRS: usize = 1_000;
const EVENT_SEQUENCES: usize = 1_000;
const REFERENCE_BAND: f64 = 0.5;

/// Published averages: (dataset, AccelKey, Multi-Tap Match, Multi-Tap First).
const REFERENCE: [(&str, f64, f64, f64); 3] = [
    ("writers", 4.08, 4.66, 4.67),
    ("representatives", 5.16, 6.21, 6.22),
    ("graduates", 7.11, 7.58, 7.58),
];

fn verdict(criterion: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    println!("[{}] {criterion}: {}", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
    pass
}

fn letters(size: usize) -> Vec<char> {
    ('A'..='Z').take(size).collect()
}

fn bundled(name: &str) -> Dataset {
    Dataset::new(name, bundled_dataset(name).unwrap())
}

#[test]
fn c1_scroll_averages_exact() {
    println!();
    let start = Instant::now();
    let q = builtin_layout("qwerty").unwrap();
    let k = KeypadLayout::standard();
    let mut ok = true;
    for (n, expect) in [(96usize, 47.5f64), (394, 196.5), (1369, 684.0)] {
        let d = Dataset::new(format!("synthetic{n}"), (0..n).map(|i| format!("Name{i:05}")).collect());
        let got = average_events(&d, Method::Scroll, &q, &k, CursorPolicy::First).unwrap();
        ok &= verdict(&format!("C1 scroll n={n}"), got == expect, format!("{got} (expected {expect})"));
    }
    let elapsed = start.elapsed();
    ok &= verdict("C1 runtime", elapsed < Duration::from_secs(1), format!("{elapsed:?} < 1s"));
    assert!(ok);
}

#[test]
fn c2_accelkey_equals_bfs_oracle() {
    println!();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xACCE1);
    let (mut checked, mut mismatches) = (0usize, 0usize);
    for _ in 0..RANDOM_DATASETS {
        let size = rng.gen_range(4..=8);
        let layout = small_layout(size);
        let n = rng.gen_range(1..=25);
        let dataset = random_dataset(&mut rng, &letters(size), n, 6);
        let policy = if rng.gen_bool(0.5) { CursorPolicy::First } else { CursorPolicy::Middle };
        let oracle = bfs_all_targets(&dataset, &layout, policy);
        for (t, expect) in oracle.iter().enumerate() {
            checked += 1;
            if Some(cost_accelkey(&dataset, t, &layout, policy).unwrap()) != *expect {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let mut ok = verdict(
        "C2 accelkey vs BFS",
        mismatches == 0,
        format!("{RANDOM_DATASETS} datasets, {checked} targets, {mismatches} mismatches"),
    );
    ok &= verdict("C2 runtime", elapsed < Duration::from_secs(60), format!("{elapsed:?} < 60s"));
    assert!(ok);
}

#[test]
fn c3_matching_equals_brute_force() {
    println!();
    let mut rng = StdRng::seed_from_u64(0x3A7C4);
    let mut mismatches = 0usize;
    let mut positives = 0usize;
    for _ in 0..MATCH_TRIPLES {
        let size = rng.gen_range(4..=10);
        let (layout, keypad, alpha) = (small_layout(size), small_keypad(size), letters(size));
        let options = random_options(&mut rng);
        let raw = random_entry(&mut rng, &alpha, 3, 4);
        let entry = normalize_entry(&raw, &layout, &options);
        let prefix: Prefix = (0..rng.gen_range(0..=6))
            .map(|_| random_constraint(&mut rng, &alpha, &keypad))
            .collect();
        let got = Matcher::new(&layout, &keypad, &options).matches(&entry, &prefix);
        positives += got as usize;
        if got != brute_matches(&raw, &prefix, &layout, &keypad, &options) {
            mismatches += 1;
        }
    }
    assert!(verdict(
        "C3 matches vs brute force",
        mismatches == 0,
        format!("{MATCH_TRIPLES} triples ({positives} matching), {mismatches} mismatches"),
    ));
}

#[test]
fn c4_reference_ordering_and_band() {
    println!();
    let q = builtin_layout("qwerty").unwrap();
    let k = KeypadLayout::standard();
    let mut ok = true;
    for (name, ref_ak, ref_mm, ref_mf) in REFERENCE {
        let d = bundled(name);
        let ak = average_events(&d, Method::Accelkey, &q, &k, CursorPolicy::First).unwrap();
        let mm = average_events(&d, Method::MultitapMatch, &q, &k, CursorPolicy::First).unwrap();
        let mf = average_events(&d, Method::MultitapFirst, &q, &k, CursorPolicy::First).unwrap();
        ok &= verdict(
            &format!("C4 ordering {name} (n={})", d.len()),
            ak < mm && mm <= mf,
            format!("accelkey {ak:.3} < multitap_match {mm:.3} <= multitap_first {mf:.3}"),
        );
        for (label, got, reference) in [("accelkey", ak, ref_ak), ("multitap_match", mm, ref_mm), ("multitap_first", mf, ref_mf)] {
            let rel = (got - reference).abs() / reference;
            ok &= verdict(
                &format!("C4 band {name} {label}"),
                rel <= REFERENCE_BAND,
                format!("{got:.3} vs {reference} ({:+.1}%, limit ±{:.0}%)", 100.0 * (got - reference) / reference, 100.0 * REFERENCE_BAND),
            );
        }
    }
    assert!(ok);
}

#[test]
fn c5_layout_comparison_shape() {
    println!();
    let layouts = [builtin_layout("qwerty").unwrap(), builtin_layout("abc").unwrap()];
    let datasets: Vec<Dataset> = BUNDLED.iter().map(|n| bundled(n)).collect();
    let report = compare(&datasets, &[Method::Accelkey], &layouts, &KeypadLayout::standard(), CursorPolicy::First).unwrap();
    let mut ok = verdict("C5 row count", report.rows.len() == 6, format!("{} rows (3 datasets x 2 layouts)", report.rows.len()));
    for name in BUNDLED {
        for layout in ["qwerty", "abc"] {
            let avg = report.get(name, Method::Accelkey, layout).map(|r| r.average);
            ok &= verdict(
                &format!("C5 {name} {layout}"),
                avg.is_some_and(|a| a.is_finite() && a >= 0.0),
                format!("{avg:?}"),
            );
        }
    }
    assert!(ok);
}

#[test]
fn c6_trackball_partition_and_jitter() {
    println!();
    let zero = JitterConfig::new(0.0).unwrap();
    let mut bad = 0;
    for dx in -10i32..=10 {
        for dy in -10i32..=10 {
            if dx == 0 && dy == 0 {
                continue;
            }
            let expect = if dx.abs() > dy.abs() {
                if dx > 0 { Direction::Right } else { Direction::Left }
            } else if dy > 0 {
                Direction::Up
            } else {
                Direction::Down
            };
            if trackball_to_event(TrackballDelta::new(dx as f64, dy as f64), zero) != Some(expect) {
                bad += 1;
            }
        }
    }
    let mut ok = verdict("C6 grid [-10,10]^2", bad == 0, format!("440 points, {bad} misclassified"));

    let mut rng = StdRng::seed_from_u64(0x7BA11);
    let mut violations = 0;
    for _ in 0..TRACKBALL_PAIRS {
        let d = TrackballDelta::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let t1: f64 = rng.gen_range(0.0..15.0);
        let t2 = t1 + rng.gen_range(0.0..15.0);
        let suppressed1 = trackball_to_event(d, JitterConfig::new(t1).unwrap()).is_none();
        let suppressed2 = trackball_to_event(d, JitterConfig::new(t2).unwrap()).is_none();
        if suppressed1 && !suppressed2 {
            violations += 1;
        }
    }
    ok &= verdict("C6 jitter monotonicity", violations == 0, format!("{TRACKBALL_PAIRS} pairs, {violations} violations"));
    assert!(ok);
}

/// A random session over a small alphabet, with random match options.
fn random_session(rng: &mut StdRng) -> (Session, Vec<char>) {
    let size = rng.gen_range(4..=8);
    let alpha = letters(size);
    let options = random_options(rng);
    let raw: Vec<String> = (0..rng.gen_range(1..=12)).map(|_| random_entry(rng, &alpha, 3, 4)).collect();
    let policy = if rng.gen_bool(0.5) { CursorPolicy::First } else { CursorPolicy::Middle };
    let session = Session::new(&raw, small_layout(size), small_keypad(size), options, SessionConfig { cursor_policy: policy }).unwrap();
    (session, alpha)
}

fn is_subsequence(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Drives an entry to selection: type the letters of its first word, then
/// scroll to it.
fn select_entry(session: &mut Session, target: usize) -> Option<usize> {
    session.apply(InputEvent::Reset);
    let letters: Vec<char> = session.entries()[target]
        .words
        .first()
        .map(|w| w.letters.iter().map(|l| l.ch).collect())
        .unwrap_or_default();
    for c in letters {
        if session.apply(InputEvent::Literal { letter: c }) != Outcome::Continue {
            return None;
        }
    }
    if let Outcome::Selected { index, .. } = session.apply(InputEvent::Select) {
        return Some(index);
    }
    let pos = session.filtered().iter().position(|&i| i == target)?;
    while session.cursor()? != pos {
        let step = if session.cursor()? < pos { InputEvent::DOWN } else { InputEvent::UP };
        session.apply(step);
    }
    match session.apply(InputEvent::Select) {
        Outcome::Selected { index, .. } => Some(index),
        _ => None,
    }
}

#[test]
fn c7_state_machine_invariants() {
    println!();
    let mut rng = StdRng::seed_from_u64(0x5E55);
    let mut failures = [0usize; 5];
    let names = ["backspace-inverse", "reset-to-initial", "monotone filtering", "dead-end rejection", "selection reachability"];
    let mut committed = 0usize;
    let mut dead_ends = 0usize;
    for _ in 0..EVENT_SEQUENCES {
        let (mut session, alpha) = random_session(&mut rng);
        let initial_view = session.view();
        let len = rng.gen_range(1..=20);
        for _ in 0..len {
            let event = random_event(&mut rng, &alpha, session.keypad());
            let before = session.state().clone();
            let viable_before = session.view().viable;
            let outcome = session.apply(event);
            match &outcome {
                Outcome::Continue if event != InputEvent::Backspace => {
                    committed += 1;
                    // backspace undoes exactly this event
                    let after = session.state().clone();
                    let mut probe = session.clone();
                    probe.apply(InputEvent::Backspace);
                    if probe.state() != &before {
                        failures[0] += 1;
                    }
                    let grew = after.prefix.len() > before.prefix.len();
                    if grew && !is_subsequence(after.filtered(), before.filtered()) {
                        failures[2] += 1;
                    }
                    if let InputEvent::Literal { letter } = event {
                        if before.mode == Mode::Selection && !viable_before.contains(letter) {
                            failures[3] += 1;
                        }
                    }
                }
                Outcome::Rejected(Rejection::DeadEnd) => {
                    dead_ends += 1;
                    if session.state() != &before {
                        failures[3] += 1;
                    }
                }
                _ => {}
            }
            if session.filtered().is_empty() {
                failures[3] += 1;
            }
            if let Some(c) = session.cursor() {
                if c >= session.filtered().len() {
                    failures[3] += 1;
                }
            }
        }
        let mut reset = session.clone();
        reset.apply(InputEvent::Reset);
        if reset.view() != initial_view {
            failures[1] += 1;
        }
        let target = rng.gen_range(0..session.entries().len());
        if select_entry(&mut session, target) != Some(target) {
            failures[4] += 1;
        }
    }
    let mut ok = true;
    for (name, f) in names.iter().zip(failures) {
        ok &= verdict(
            &format!("C7 {name}"),
            f == 0,
            format!("{EVENT_SEQUENCES} sequences ({committed} committed events, {dead_ends} dead ends), {f} failures"),
        );
    }
    assert!(ok);
}

#[test]
fn c8_multi_word_examples() {
    println!();
    let q = builtin_layout("qwerty").unwrap();
    let k = KeypadLayout::standard();
    let lit = |s: &str| -> Prefix { s.chars().map(Constraint::Literal).collect() };
    let span = MatchOptions::default();
    let wrap = MatchOptions { wrap: true, ..span };
    let check = |raw: &str, p: &str, o: &MatchOptions| Matcher::new(&q, &k, o).matches(&normalize_entry(raw, &q, o), &lit(p));

    let mut ok = verdict("C8 John Updike / JOHNU with spanning", check("John Updike", "JOHNU", &span), "matched");
    ok &= verdict("C8 Smith, John / JOHNS with wrap", check("Smith, John", "JOHNS", &wrap), "matched");
    ok &= verdict("C8 Smith, John / JOHNS without wrap", !check("Smith, John", "JOHNS", &span), "not matched");
    ok &= verdict("C8 Arthur C. Clarke / arthurcc", check("Arthur C. Clarke", "arthurcc", &span), "matched");

    // in a list, the spanning prefix isolates the entry
    let list = ["John Updike", "John Smith", "Johnny Cash", "Smith, John", "Blake, John"];
    let mut s = Session::new(&list, q.clone(), k.clone(), wrap, SessionConfig::default()).unwrap();
    for c in "johnu".chars() {
        s.apply(InputEvent::Literal { letter: c });
    }
    let mut t = Session::new(&list, q.clone(), k.clone(), wrap, SessionConfig::default()).unwrap();
    for c in "johns".chars() {
        t.apply(InputEvent::Literal { letter: c });
    }
    let names = |s: &Session| s.filtered().iter().map(|&i| list[i]).collect::<Vec<_>>();
    ok &= verdict("C8 JOHNU isolates John Updike", names(&s) == ["John Updike"], format!("{:?}", names(&s)));
    ok &= verdict("C8 JOHNS with wrap", names(&t) == ["John Smith", "Smith, John"], format!("{:?}", names(&t)));
    assert!(ok);
}
