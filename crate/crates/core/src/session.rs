//! The interactive selection state machine.
//!
//! A session starts in selection mode with an empty prefix. Directional,
//! keypad and literal events extend the prefix and narrow the list; `select`
//! either completes (one entry left) or switches to scrolling, where up/down
//! move a cursor and left/right go back to selection with the same prefix.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::constraint::{Constraint, Prefix};
use crate::entry::{normalize_entry, Entry, MatchOptions};
use crate::error::{Error, Result};
use crate::layout::{fold, Direction, KeypadLayout, Layout};
use crate::matching::{Matcher, ViableLetters};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Selection,
    Scrolling,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Selection => "selection",
            Mode::Scrolling => "scrolling",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputEvent {
    Direction(Direction),
    Select,
    Backspace,
    Reset,
    Keypad { key: char },
    Literal { letter: char },
}

impl InputEvent {
    pub const UP: InputEvent = InputEvent::Direction(Direction::Up);
    pub const DOWN: InputEvent = InputEvent::Direction(Direction::Down);
    pub const LEFT: InputEvent = InputEvent::Direction(Direction::Left);
    pub const RIGHT: InputEvent = InputEvent::Direction(Direction::Right);
}

/// Where the cursor lands when scrolling mode is entered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CursorPolicy {
    #[default]
    First,
    Middle,
}

impl CursorPolicy {
    /// Initial cursor for a filtered list of `len` entries.
    pub fn initial(self, len: usize) -> usize {
        match self {
            CursorPolicy::First => 0,
            CursorPolicy::Middle => len.saturating_sub(1) / 2,
        }
    }
}

impl FromStr for CursorPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "first" => Ok(CursorPolicy::First),
            "middle" => Ok(CursorPolicy::Middle),
            other => Err(format!("unknown cursor policy `{other}` (valid: first, middle)")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionConfig {
    pub cursor_policy: CursorPolicy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    DeadEnd,
    InsignificantLiteral(char),
    UnmappedKey(char),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::DeadEnd => f.write_str("dead end"),
            Rejection::InsignificantLiteral(c) => write!(f, "insignificant literal {c:?}"),
            Rejection::UnmappedKey(k) => write!(f, "unmapped key {k:?}"),
        }
    }
}

/// Result of applying one event. Call [`Session::view`] for the screen
/// contents after a `Continue`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Continue,
    Selected { index: usize, entry: Entry },
    Rejected(Rejection),
}

/// The part of a session that events change. Two sessions over the same
/// entries with equal states render identical views.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SessionState {
    pub mode: Mode,
    pub prefix: Prefix,
    pub cursor: Option<usize>,
    filtered: Vec<usize>,
}

impl SessionState {
    pub fn filtered(&self) -> &[usize] {
        &self.filtered
    }
}

#[derive(Debug)]
struct Shared {
    entries: Vec<Entry>,
    layout: Layout,
    keypad: KeypadLayout,
    options: MatchOptions,
    config: SessionConfig,
    initial: SessionState,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViewEntry {
    pub index: usize,
    pub text: String,
    pub highlight: Vec<usize>,
}

/// Screen contents derived from a session.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct View {
    pub mode: Mode,
    pub prefix: Vec<String>,
    pub entries: Vec<ViewEntry>,
    pub cursor: Option<usize>,
    pub viable: ViableLetters,
}

#[derive(Debug, Clone)]
pub struct Session {
    shared: Arc<Shared>,
    state: SessionState,
    history: Vec<SessionState>,
}

impl Session {
    /// Normalizes `raw` entries (order kept as given) and starts in
    /// selection mode with an empty prefix.
    pub fn new<S: AsRef<str>>(
        raw: &[S],
        layout: Layout,
        keypad: KeypadLayout,
        options: MatchOptions,
        config: SessionConfig,
    ) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyEntryList);
        }
        options.validate()?;
        let entries: Vec<Entry> = raw
            .iter()
            .map(|s| normalize_entry(s.as_ref(), &layout, &options))
            .collect();
        let initial = SessionState {
            mode: Mode::Selection,
            prefix: Prefix::new(),
            cursor: None,
            filtered: (0..entries.len()).collect(),
        };
        Ok(Session {
            shared: Arc::new(Shared {
                entries,
                layout,
                keypad,
                options,
                config,
                initial: initial.clone(),
            }),
            state: initial,
            history: Vec::new(),
        })
    }

    fn matcher(&self) -> Matcher<'_> {
        let s = &*self.shared;
        Matcher::new(&s.layout, &s.keypad, &s.options)
    }

    pub fn entries(&self) -> &[Entry] {
        &self.shared.entries
    }

    pub fn layout(&self) -> &Layout {
        &self.shared.layout
    }

    pub fn keypad(&self) -> &KeypadLayout {
        &self.shared.keypad
    }

    pub fn options(&self) -> &MatchOptions {
        &self.shared.options
    }

    pub fn mode(&self) -> Mode {
        self.state.mode
    }

    pub fn prefix(&self) -> &Prefix {
        &self.state.prefix
    }

    pub fn cursor(&self) -> Option<usize> {
        self.state.cursor
    }

    /// Indices into [`Session::entries`] of the entries matching the prefix.
    pub fn filtered(&self) -> &[usize] {
        &self.state.filtered
    }

    pub fn state(&self) -> &SessionState {
        &self.state
    }

    pub fn history_len(&self) -> usize {
        self.history.len()
    }

    pub fn apply(&mut self, event: InputEvent) -> Outcome {
        match (self.state.mode, event) {
            (_, InputEvent::Backspace) => {
                if let Some(prev) = self.history.pop() {
                    self.state = prev;
                }
                Outcome::Continue
            }
            (_, InputEvent::Reset) => {
                let initial = self.shared.initial.clone();
                self.commit(initial);
                Outcome::Continue
            }
            (Mode::Selection, InputEvent::Direction(d)) => self.constrain(Constraint::DirectionGroup(d)),
            (_, InputEvent::Keypad { key }) => {
                if self.shared.keypad.group(key).is_none() {
                    return Outcome::Rejected(Rejection::UnmappedKey(key));
                }
                self.constrain(Constraint::KeypadGroup(key))
            }
            (_, InputEvent::Literal { letter }) => {
                if !self.shared.layout.is_significant(letter) {
                    return Outcome::Rejected(Rejection::InsignificantLiteral(letter));
                }
                let letter = if self.shared.options.case_sensitive { letter } else { fold(letter) };
                self.constrain(Constraint::Literal(letter))
            }
            (Mode::Selection, InputEvent::Select) => {
                if let [only] = self.state.filtered[..] {
                    return self.selected(only);
                }
                let mut next = self.state.clone();
                next.mode = Mode::Scrolling;
                next.cursor = Some(self.shared.config.cursor_policy.initial(next.filtered.len()));
                self.commit(next);
                Outcome::Continue
            }
            (Mode::Scrolling, InputEvent::Direction(d)) => {
                let mut next = self.state.clone();
                match d {
                    Direction::Up | Direction::Down => {
                        let cur = next.cursor.unwrap_or(0);
                        let last = next.filtered.len() - 1;
                        next.cursor = Some(if d == Direction::Up {
                            cur.saturating_sub(1)
                        } else {
                            (cur + 1).min(last)
                        });
                    }
                    Direction::Left | Direction::Right => {
                        next.mode = Mode::Selection;
                        next.cursor = None;
                    }
                }
                self.commit(next);
                Outcome::Continue
            }
            (Mode::Scrolling, InputEvent::Select) => {
                let cur = self.state.cursor.unwrap_or(0);
                self.selected(self.state.filtered[cur])
            }
        }
    }

    /// Appends a constraint, returning to selection mode. Rejected when no
    /// entry would be left.
    fn constrain(&mut self, constraint: Constraint) -> Outcome {
        let prefix = self.state.prefix.with(constraint);
        let matcher = self.matcher();
        let filtered: Vec<usize> = self
            .state
            .filtered
            .iter()
            .copied()
            .filter(|&i| matcher.matches(&self.shared.entries[i], &prefix))
            .collect();
        if filtered.is_empty() {
            return Outcome::Rejected(Rejection::DeadEnd);
        }
        self.commit(SessionState {
            mode: Mode::Selection,
            prefix,
            cursor: None,
            filtered,
        });
        Outcome::Continue
    }

    fn commit(&mut self, next: SessionState) {
        let prev = std::mem::replace(&mut self.state, next);
        self.history.push(prev);
    }

    fn selected(&self, index: usize) -> Outcome {
        Outcome::Selected {
            index,
            entry: self.shared.entries[index].clone(),
        }
    }

    pub fn view(&self) -> View {
        let matcher = self.matcher();
        let entries = &self.shared.entries;
        let prefix = &self.state.prefix;
        let rows = self
            .state
            .filtered
            .iter()
            .map(|&i| ViewEntry {
                index: i,
                text: entries[i].display_text.clone(),
                highlight: matcher.match_positions(&entries[i], prefix).unwrap_or_default(),
            })
            .collect();
        View {
            mode: self.state.mode,
            prefix: prefix.tokens(),
            entries: rows,
            cursor: self.state.cursor,
            viable: matcher.next_letters(self.state.filtered.iter().map(|&i| &entries[i]), prefix),
        }
    }
}
