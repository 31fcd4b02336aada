//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use accelkey_core::{
    Constraint, CursorPolicy, Dataset, Direction, InputEvent, KeypadLayout, Layout, MatchOptions, Outcome, Prefix,
    Session, SessionConfig,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Letters of `raw` split into words, computed without the crate's
/// normalizer: runs of characters the layout knows, upper-cased.
pub fn words_of(raw: &str, layout: &Layout) -> Vec<Vec<char>> {
    let alphabet = layout.alphabet();
    let mut words = vec![];
    let mut cur = vec![];
    for c in raw.chars() {
        let u = c.to_ascii_uppercase();
        if alphabet.contains(&u) {
            cur.push(u);
        } else if !cur.is_empty() {
            words.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    words
}

fn allowed(c: &Constraint, layout: &Layout, keypad: &KeypadLayout) -> BTreeSet<char> {
    match *c {
        Constraint::DirectionGroup(d) => layout.group(d).iter().copied().collect(),
        Constraint::KeypadGroup(k) => keypad
            .keys()
            .filter(|(key, _)| *key == k)
            .flat_map(|(_, g)| g.iter().copied())
            .collect(),
        Constraint::Literal(l) => BTreeSet::from([l.to_ascii_uppercase()]),
    }
}

/// Every candidate stream an entry offers, built by rotating the word list.
pub fn candidate_streams(words: &[Vec<char>], options: &MatchOptions) -> Vec<Vec<char>> {
    if words.is_empty() {
        return vec![vec![]];
    }
    if !options.word_mode {
        return vec![words.concat()];
    }
    (0..words.len())
        .map(|i| {
            let mut order: Vec<&Vec<char>> = Vec::new();
            if !options.span_words {
                order.push(&words[i]);
            } else {
                order.extend(&words[i..]);
                if options.wrap {
                    order.extend(&words[..i]);
                }
            }
            order.into_iter().flatten().copied().collect()
        })
        .collect()
}

/// Case-insensitive brute-force matcher.
pub fn brute_matches(raw: &str, prefix: &Prefix, layout: &Layout, keypad: &KeypadLayout, options: &MatchOptions) -> bool {
    let sets: Vec<BTreeSet<char>> = prefix.iter().map(|c| allowed(c, layout, keypad)).collect();
    candidate_streams(&words_of(raw, layout), options)
        .iter()
        .any(|s| s.len() >= sets.len() && sets.iter().zip(s).all(|(set, c)| set.contains(c)))
}

/// Layout over the first `size` letters of A..Z, dealt round-robin into
/// the four directions (requires size >= 4).
pub fn small_layout(size: usize) -> Layout {
    let letters: Vec<char> = ('A'..='Z').take(size).collect();
    let mut groups: [String; 4] = Default::default();
    for (i, c) in letters.iter().enumerate() {
        groups[i % 4].push(*c);
    }
    Layout::new(
        format!("small{size}"),
        Direction::ALL.iter().copied().zip(groups.iter().map(String::as_str)),
    )
    .unwrap()
}

/// Keypad over the same letters, three per key.
pub fn small_keypad(size: usize) -> KeypadLayout {
    let letters: Vec<char> = ('A'..='Z').take(size).collect();
    let keys: Vec<(char, String)> = letters
        .chunks(3)
        .enumerate()
        .map(|(i, chunk)| ((b'2' + i as u8) as char, chunk.iter().collect()))
        .collect();
    KeypadLayout::new(keys).unwrap()
}

pub fn random_word(rng: &mut StdRng, alphabet: &[char], max_len: usize) -> String {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let c = *alphabet.choose(rng).unwrap();
            if rng.gen_bool(0.2) {
                c.to_ascii_lowercase()
            } else {
                c
            }
        })
        .collect()
}

/// Up to three words joined by assorted separators.
pub fn random_entry(rng: &mut StdRng, alphabet: &[char], max_words: usize, max_word_len: usize) -> String {
    let seps = [" ", ", ", ".", ". ", "-", " 7 "];
    let n = rng.gen_range(0..=max_words);
    let mut out = String::new();
    if rng.gen_bool(0.1) {
        out.push('#');
    }
    for i in 0..n {
        if i > 0 {
            out.push_str(seps.choose(rng).unwrap());
        }
        out.push_str(&random_word(rng, alphabet, max_word_len));
    }
    out
}

pub fn random_constraint(rng: &mut StdRng, alphabet: &[char], keypad: &KeypadLayout) -> Constraint {
    match rng.gen_range(0..4) {
        0 | 1 => Constraint::DirectionGroup(*Direction::ALL.choose(rng).unwrap()),
        2 => Constraint::Literal(*alphabet.choose(rng).unwrap()),
        _ => {
            let keys: Vec<char> = keypad.keys().map(|(k, _)| k).collect();
            Constraint::KeypadGroup(*keys.choose(rng).unwrap())
        }
    }
}

pub fn random_options(rng: &mut StdRng) -> MatchOptions {
    let span_words = rng.gen_bool(0.5);
    MatchOptions {
        case_sensitive: false,
        span_words,
        wrap: span_words && rng.gen_bool(0.5),
        word_mode: rng.gen_bool(0.7),
    }
}

pub fn random_event(rng: &mut StdRng, alphabet: &[char], keypad: &KeypadLayout) -> InputEvent {
    match rng.gen_range(0..12) {
        0..=3 => InputEvent::Direction(Direction::ALL[rng.gen_range(0..4)]),
        4 | 5 => InputEvent::Select,
        6 => InputEvent::Backspace,
        7 => InputEvent::Reset,
        8 => {
            let keys: Vec<char> = keypad.keys().map(|(k, _)| k).collect();
            InputEvent::Keypad {
                key: *keys.choose(rng).unwrap(),
            }
        }
        _ => InputEvent::Literal {
            letter: *alphabet.choose(rng).unwrap(),
        },
    }
}

/// Minimum number of non-select events driving a fresh session to
/// `selected(target)`, by 0-1 breadth-first search over session states
/// using only the five core events.
pub fn bfs_min_events(dataset: &Dataset, target: usize, layout: &Layout, policy: CursorPolicy) -> Option<u64> {
    let start = Session::new(
        dataset.entries(),
        layout.clone(),
        KeypadLayout::standard(),
        MatchOptions::whole_entry(),
        SessionConfig { cursor_policy: policy },
    )
    .unwrap();
    let events = [
        (InputEvent::Select, 0u64),
        (InputEvent::UP, 1),
        (InputEvent::DOWN, 1),
        (InputEvent::LEFT, 1),
        (InputEvent::RIGHT, 1),
    ];
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.state().clone(), 0u64);
    queue.push_back((start, 0u64));
    let mut best: Option<u64> = None;
    while let Some((session, d)) = queue.pop_front() {
        if dist.get(session.state()).is_some_and(|&known| known < d) {
            continue;
        }
        if best.is_some_and(|b| d >= b) {
            continue;
        }
        for (event, cost) in events {
            let mut next = session.clone();
            match next.apply(event) {
                Outcome::Selected { index, .. } => {
                    if index == target {
                        best = Some(best.map_or(d + cost, |b| b.min(d + cost)));
                    }
                }
                Outcome::Rejected(_) => {}
                Outcome::Continue => {
                    let nd = d + cost;
                    let key = next.state().clone();
                    if dist.get(&key).is_none_or(|&known| nd < known) {
                        dist.insert(key, nd);
                        if cost == 0 {
                            queue.push_front((next, nd));
                        } else {
                            queue.push_back((next, nd));
                        }
                    }
                }
            }
        }
    }
    best
}

/// Random dataset of `n` entries with streams of 1..=max_len letters drawn
/// from the layout's alphabet.
pub fn random_dataset(rng: &mut StdRng, alphabet: &[char], n: usize, max_len: usize) -> Dataset {
    let entries = (0..n).map(|_| random_word(rng, alphabet, max_len)).collect();
    Dataset::new("random", entries)
}

/// Like [`bfs_min_events`] but for every target at once: one 0-1 BFS from
/// the initial state, recording the cheapest `selected(i)` for each entry.
pub fn bfs_all_targets(dataset: &Dataset, layout: &Layout, policy: CursorPolicy) -> Vec<Option<u64>> {
    let start = Session::new(
        dataset.entries(),
        layout.clone(),
        KeypadLayout::standard(),
        MatchOptions::whole_entry(),
        SessionConfig { cursor_policy: policy },
    )
    .unwrap();
    let events = [
        (InputEvent::Select, 0u64),
        (InputEvent::UP, 1),
        (InputEvent::DOWN, 1),
        (InputEvent::LEFT, 1),
        (InputEvent::RIGHT, 1),
    ];
    let mut best: Vec<Option<u64>> = vec![None; dataset.len()];
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.state().clone(), 0u64);
    queue.push_back((start, 0u64));
    while let Some((session, d)) = queue.pop_front() {
        if dist.get(session.state()).is_some_and(|&known| known < d) {
            continue;
        }
        for (event, cost) in events {
            let mut next = session.clone();
            match next.apply(event) {
                Outcome::Selected { index, .. } => {
                    let slot = &mut best[index];
                    *slot = Some(slot.map_or(d + cost, |b| b.min(d + cost)));
                }
                Outcome::Rejected(_) => {}
                Outcome::Continue => {
                    let nd = d + cost;
                    let key = next.state().clone();
                    if dist.get(&key).is_none_or(|&known| nd < known) {
                        dist.insert(key, nd);
                        if cost == 0 {
                            queue.push_front((next, nd));
                        } else {
                            queue.push_back((next, nd));
                        }
                    }
                }
            }
        }
    }
    best
}
