//! Prefix matching over entries, including multi-word spanning and wrap.

use std::collections::BTreeSet;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::constraint::Prefix;
use crate::entry::{Entry, Letter, MatchOptions};
use crate::layout::{Direction, KeypadLayout, Layout};

/// Everything needed to test an entry against a prefix.
#[derive(Debug, Clone, Copy)]
pub struct Matcher<'a> {
    pub layout: &'a Layout,
    pub keypad: &'a KeypadLayout,
    pub options: &'a MatchOptions,
}

impl<'a> Matcher<'a> {
    pub fn new(layout: &'a Layout, keypad: &'a KeypadLayout, options: &'a MatchOptions) -> Self {
        Matcher { layout, keypad, options }
    }

    /// Word indices where a match may begin.
    fn starts(&self, entry: &Entry) -> std::ops::Range<usize> {
        if self.options.word_mode {
            0..entry.words.len()
        } else {
            0..entry.words.len().min(1)
        }
    }

    /// Letters read when a match begins at word `start`. The sequence never
    /// revisits a word, so wrap covers at most one full cycle.
    fn stream_from<'e>(&self, entry: &'e Entry, start: usize) -> impl Iterator<Item = &'e Letter> + 'e {
        let n = entry.words.len();
        let o = self.options;
        let count = if !o.word_mode || o.wrap {
            n
        } else if o.span_words {
            n - start
        } else {
            1
        };
        (0..count).flat_map(move |j| entry.words[(start + j) % n].letters.iter())
    }

    fn witness_at<'e>(&self, entry: &'e Entry, start: usize, prefix: &Prefix) -> Option<Vec<&'e Letter>> {
        let mut out = Vec::with_capacity(prefix.len());
        let mut stream = self.stream_from(entry, start);
        for constraint in prefix {
            let letter = stream.next()?;
            if !constraint.accepts(letter.ch, self.layout, self.keypad, self.options.case_sensitive) {
                return None;
            }
            out.push(letter);
        }
        Some(out)
    }

    pub fn matches(&self, entry: &Entry, prefix: &Prefix) -> bool {
        prefix.is_empty() || self.starts(entry).any(|s| self.witness_at(entry, s, prefix).is_some())
    }

    /// Offsets of the letters satisfying each prefix position, taken from
    /// the leftmost start word that matches.
    pub fn match_positions(&self, entry: &Entry, prefix: &Prefix) -> Option<Vec<usize>> {
        if prefix.is_empty() {
            return Some(Vec::new());
        }
        self.starts(entry)
            .find_map(|s| self.witness_at(entry, s, prefix))
            .map(|w| w.into_iter().map(|l| l.offset).collect())
    }

    /// Letters that could be typed next without emptying the list.
    pub fn next_letters<'e, I>(&self, entries: I, prefix: &Prefix) -> ViableLetters
    where
        I: IntoIterator<Item = &'e Entry>,
    {
        let mut viable = ViableLetters::default();
        for entry in entries {
            for start in self.starts(entry) {
                if self.witness_at(entry, start, prefix).is_none() {
                    continue;
                }
                if let Some(next) = self.stream_from(entry, start).nth(prefix.len()) {
                    if let Some(dir) = self.layout.direction_of(next.ch) {
                        viable.sets[dir.index()].insert(next.ch);
                    }
                }
            }
        }
        viable
    }

    pub fn filter(&self, entries: &[Entry], prefix: &Prefix) -> Vec<usize> {
        entries
            .iter()
            .enumerate()
            .filter(|(_, e)| self.matches(e, prefix))
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn matches(
    entry: &Entry,
    prefix: &Prefix,
    layout: &Layout,
    keypad: &KeypadLayout,
    options: &MatchOptions,
) -> bool {
    Matcher::new(layout, keypad, options).matches(entry, prefix)
}

pub fn match_positions(
    entry: &Entry,
    prefix: &Prefix,
    layout: &Layout,
    keypad: &KeypadLayout,
    options: &MatchOptions,
) -> Option<Vec<usize>> {
    Matcher::new(layout, keypad, options).match_positions(entry, prefix)
}

pub fn next_letters(
    entries: &[Entry],
    prefix: &Prefix,
    layout: &Layout,
    keypad: &KeypadLayout,
    options: &MatchOptions,
) -> ViableLetters {
    Matcher::new(layout, keypad, options).next_letters(entries, prefix)
}

/// Viable next letters grouped by direction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ViableLetters {
    sets: [BTreeSet<char>; 4],
}

impl ViableLetters {
    pub fn get(&self, dir: Direction) -> &BTreeSet<char> {
        &self.sets[dir.index()]
    }

    pub fn all(&self) -> BTreeSet<char> {
        self.sets.iter().flatten().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.iter().all(BTreeSet::is_empty)
    }

    pub fn contains(&self, c: char) -> bool {
        self.sets.iter().any(|s| s.contains(&c))
    }
}

impl Serialize for ViableLetters {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        for dir in Direction::ALL {
            let letters: Vec<String> = self.get(dir).iter().map(|c| c.to_string()).collect();
            map.serialize_entry(dir.name(), &letters)?;
        }
        map.end()
    }
}
