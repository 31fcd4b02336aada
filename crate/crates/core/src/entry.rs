use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::{fold, Layout};

/// How prefixes are matched against entries.
///
/// With `word_mode` off an entry is one stream of letters starting at its
/// first word. With it on, matching may start at any word; `span_words`
/// lets the match run on into the following words and `wrap` lets it
/// continue from the first word after the last one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default)]
pub struct MatchOptions {
    pub case_sensitive: bool,
    pub span_words: bool,
    pub wrap: bool,
    pub word_mode: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions {
            case_sensitive: false,
            span_words: true,
            wrap: false,
            word_mode: true,
        }
    }
}

impl MatchOptions {
    /// A single stream per entry, matched from its first letter.
    pub fn whole_entry() -> Self {
        MatchOptions {
            word_mode: false,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.wrap && !self.span_words {
            return Err(Error::InvalidOptions("wrap requires span_words"));
        }
        Ok(())
    }
}

/// A significant letter and its character offset in the display text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub ch: char,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub text: String,
    pub letters: Vec<Letter>,
}

/// A selectable list item with its significant letters split into words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub display_text: String,
    pub words: Vec<Word>,
}

impl Entry {
    /// All significant letters in display order.
    pub fn stream(&self) -> impl Iterator<Item = &Letter> + '_ {
        self.words.iter().flat_map(|w| w.letters.iter())
    }

    pub fn stream_chars(&self) -> Vec<char> {
        self.stream().map(|l| l.ch).collect()
    }

    pub fn word_texts(&self) -> Vec<&str> {
        self.words.iter().map(|w| w.text.as_str()).collect()
    }
}

/// Splits `raw` into words of significant letters. Anything outside the
/// layout alphabet separates words and is otherwise ignored. Offsets count
/// characters (not bytes) into `raw`.
pub fn normalize_entry(raw: &str, layout: &Layout, options: &MatchOptions) -> Entry {
    let mut words = Vec::new();
    let mut current: Option<Word> = None;
    for (offset, c) in raw.chars().enumerate() {
        if layout.is_significant(c) {
            let ch = if options.case_sensitive { c } else { fold(c) };
            let word = current.get_or_insert_with(|| Word {
                text: String::new(),
                letters: Vec::new(),
            });
            word.text.push(ch);
            word.letters.push(Letter { ch, offset });
        } else if let Some(word) = current.take() {
            words.push(word);
        }
    }
    words.extend(current);
    Entry {
        display_text: raw.to_string(),
        words,
    }
}
