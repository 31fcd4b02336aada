//! Selecting an entry from a list with a four-way navigation device.
//!
//! Letters are split into four direction groups by a [`Layout`]. Each
//! directional event narrows the list to the entries whose letters fall in
//! the chosen groups, position by position; a [`Session`] runs the full
//! selection/scrolling state machine on top of that. The [`eval`] module
//! counts the events different selection methods need per entry.

pub mod adapters;
pub mod constraint;
pub mod dataset;
pub mod entry;
pub mod error;
pub mod eval;
pub mod layout;
pub mod matching;
pub mod report;
pub mod session;

pub use adapters::{keyboard_to_event, keypad_to_event, trackball_to_event, JitterConfig, TrackballDelta};
pub use constraint::{letter_set, Constraint, Prefix};
pub use entry::{normalize_entry, Entry, Letter, MatchOptions, Word};
pub use error::{Error, Result};
pub use eval::{Dataset, EvalReport, Method, ReportRow};
pub use layout::{builtin_layout, Direction, KeypadLayout, Layout};
pub use matching::{match_positions, matches, next_letters, Matcher, ViableLetters};
pub use session::{CursorPolicy, InputEvent, Mode, Outcome, Rejection, Session, SessionConfig, View, ViewEntry};
