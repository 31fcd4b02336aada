//! JSON messages exchanged over the websocket. Every client message gets
//! exactly one reply; `state` replies are complete snapshots.

use std::collections::BTreeMap;

use accelkey_core::{CursorPolicy, Direction, InputEvent, Layout, MatchOptions, Mode, View, ViewEntry};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ClientMessage {
    /// Starts (or restarts) the connection's session. Either `dataset`
    /// names a dataset known to the server or `entries` lists the items.
    Hello {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dataset: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        entries: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        layout: Option<String>,
        #[serde(default)]
        options: MatchOptions,
        #[serde(default)]
        cursor: CursorPolicy,
    },
    Event {
        event: EventName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        key: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        letter: Option<String>,
    },
    Trackball {
        dx: f64,
        dy: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventName {
    Up,
    Down,
    Left,
    Right,
    Select,
    Backspace,
    Reset,
    Keypad,
    Literal,
}

fn single_char(field: &str, value: Option<&str>) -> Result<char, String> {
    let value = value.ok_or_else(|| format!("missing `{field}`"))?;
    let mut chars = value.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(format!("`{field}` must be a single character, got {value:?}")),
    }
}

impl ClientMessage {
    pub fn event(event: EventName) -> Self {
        ClientMessage::Event {
            event,
            key: None,
            letter: None,
        }
    }

    pub fn literal(letter: char) -> Self {
        ClientMessage::Event {
            event: EventName::Literal,
            key: None,
            letter: Some(letter.to_string()),
        }
    }

    pub fn keypad(key: char) -> Self {
        ClientMessage::Event {
            event: EventName::Keypad,
            key: Some(key.to_string()),
            letter: None,
        }
    }
}

/// Decodes the event part of an `event` message.
pub fn decode_event(event: EventName, key: Option<&str>, letter: Option<&str>) -> Result<InputEvent, String> {
    Ok(match event {
        EventName::Up => InputEvent::UP,
        EventName::Down => InputEvent::DOWN,
        EventName::Left => InputEvent::LEFT,
        EventName::Right => InputEvent::RIGHT,
        EventName::Select => InputEvent::Select,
        EventName::Backspace => InputEvent::Backspace,
        EventName::Reset => InputEvent::Reset,
        EventName::Keypad => InputEvent::Keypad {
            key: single_char("key", key)?,
        },
        EventName::Literal => InputEvent::Literal {
            letter: single_char("letter", letter)?,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateEntry {
    pub index: usize,
    pub text: String,
    pub highlight: Vec<usize>,
}

impl From<&ViewEntry> for StateEntry {
    fn from(e: &ViewEntry) -> Self {
        StateEntry {
            index: e.index,
            text: e.text.clone(),
            highlight: e.highlight.clone(),
        }
    }
}

pub type LetterGroups = BTreeMap<Direction, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSnapshot {
    pub mode: Mode,
    pub prefix: Vec<String>,
    pub entries: Vec<StateEntry>,
    pub cursor: Option<usize>,
    /// Letters that keep at least one entry in the list, per direction.
    pub viable: LetterGroups,
    pub layout: LetterGroups,
}

impl StateSnapshot {
    pub fn new(view: &View, layout: &Layout) -> Self {
        let groups = |f: &dyn Fn(Direction) -> Vec<char>| -> LetterGroups {
            Direction::ALL
                .iter()
                .map(|&d| (d, f(d).into_iter().map(String::from).collect()))
                .collect()
        };
        StateSnapshot {
            mode: view.mode,
            prefix: view.prefix.clone(),
            entries: view.entries.iter().map(StateEntry::from).collect(),
            cursor: view.cursor,
            viable: groups(&|d| view.viable.get(d).iter().copied().collect()),
            layout: groups(&|d| layout.group(d).to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum ServerMessage {
    State(StateSnapshot),
    Selected { index: usize, text: String },
    Rejected { reason: String },
    Error { message: String },
}
