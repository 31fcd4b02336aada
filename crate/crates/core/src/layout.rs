//! Letter-to-direction layouts and the phone keypad grouping.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four directional events of a joystick, trackball or 4-way pad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
    Left,
    Right,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Up, Direction::Down, Direction::Left, Direction::Right];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
            Direction::Left => "left",
            Direction::Right => "right",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            "left" => Ok(Direction::Left),
            "right" => Ok(Direction::Right),
            other => Err(Error::InvalidLayout(format!("unknown direction `{other}`"))),
        }
    }
}

/// Upper-case fold used for case-insensitive comparison. Characters whose
/// upper-case form is not a single character are left alone.
pub fn fold(c: char) -> char {
    let mut upper = c.to_uppercase();
    match (upper.next(), upper.next()) {
        (Some(u), None) => u,
        _ => c,
    }
}

pub const BUILTIN_LAYOUTS: [&str; 2] = ["abc", "qwerty"];

/// Assignment of letters to the four directions. Groups are disjoint and
/// stored upper-case folded; their union is the set of significant letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    name: String,
    groups: [Vec<char>; 4],
    index: HashMap<char, Direction>,
}

impl Layout {
    /// Builds a layout from `(direction, letters)` pairs. Every direction
    /// must be given exactly once with a non-empty group, and no letter may
    /// appear twice after case folding.
    pub fn new<I, S>(name: impl Into<String>, groups: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Direction, S)>,
        S: AsRef<str>,
    {
        let name = name.into();
        let mut slots: [Option<Vec<char>>; 4] = Default::default();
        let mut index = HashMap::new();
        for (dir, letters) in groups {
            if slots[dir.index()].is_some() {
                return Err(Error::InvalidLayout(format!("direction `{dir}` given twice")));
            }
            let mut group = Vec::new();
            for c in letters.as_ref().chars().filter(|c| !c.is_whitespace() && *c != ',') {
                let c = fold(c);
                if let Some(prev) = index.insert(c, dir) {
                    return Err(Error::InvalidLayout(format!(
                        "letter {c:?} assigned to both `{prev}` and `{dir}`"
                    )));
                }
                group.push(c);
            }
            if group.is_empty() {
                return Err(Error::InvalidLayout(format!("direction `{dir}` has no letters")));
            }
            slots[dir.index()] = Some(group);
        }
        let mut out: [Vec<char>; 4] = Default::default();
        for dir in Direction::ALL {
            out[dir.index()] = slots[dir.index()]
                .take()
                .ok_or_else(|| Error::InvalidLayout(format!("direction `{dir}` missing")))?;
        }
        Ok(Layout { name, groups: out, index })
    }

    /// Parses the layout file format: one `direction: letters` line per
    /// direction. Blank lines and `#` comments are ignored.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut groups = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (dir, letters) = line.split_once(':').ok_or_else(|| {
                Error::InvalidLayout(format!("line {}: expected `direction: letters`", lineno + 1))
            })?;
            groups.push((dir.parse::<Direction>()?, letters.to_string()));
        }
        Layout::new(name, groups)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self, dir: Direction) -> &[char] {
        &self.groups[dir.index()]
    }

    /// Direction a letter belongs to, compared case-insensitively.
    pub fn direction_of(&self, c: char) -> Option<Direction> {
        self.index.get(&fold(c)).copied()
    }

    pub fn is_significant(&self, c: char) -> bool {
        self.direction_of(c).is_some()
    }

    pub fn alphabet(&self) -> BTreeSet<char> {
        self.index.keys().copied().collect()
    }

    /// Renders the layout in the file format accepted by [`Layout::parse`].
    pub fn to_file_format(&self) -> String {
        [Direction::Up, Direction::Left, Direction::Right, Direction::Down]
            .iter()
            .map(|d| format!("{}: {}\n", d, self.group(*d).iter().collect::<String>()))
            .collect()
    }
}

/// Returns one of the built-in layouts: `abc` (alphabetical quarters) or
/// `qwerty` (rough keyboard rows).
pub fn builtin_layout(name: &str) -> Result<Layout> {
    let groups = match name.to_ascii_lowercase().as_str() {
        "abc" => [
            (Direction::Up, "ABCDEFG"),
            (Direction::Left, "HIJKLMN"),
            (Direction::Right, "OPQRSTU"),
            (Direction::Down, "VWXYZ"),
        ],
        "qwerty" => [
            (Direction::Up, "QWERTYUIOP"),
            (Direction::Left, "ASDFG"),
            (Direction::Right, "HJKL"),
            (Direction::Down, "ZXCVBNM"),
        ],
        _ => {
            return Err(Error::UnknownLayout {
                name: name.to_string(),
                valid: BUILTIN_LAYOUTS.join(", "),
            })
        }
    };
    Layout::new(name.to_ascii_lowercase(), groups)
}

/// Phone keypad letter groups for keys `2`..`9`. Letter order within a group
/// is the multi-tap press order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeypadLayout {
    keys: Vec<(char, Vec<char>)>,
    index: HashMap<char, (char, usize)>,
}

impl KeypadLayout {
    pub fn new<I, S>(keys: I) -> Result<Self>
    where
        I: IntoIterator<Item = (char, S)>,
        S: AsRef<str>,
    {
        let mut out = Vec::new();
        let mut index = HashMap::new();
        for (key, letters) in keys {
            if !('2'..='9').contains(&key) {
                return Err(Error::UnmappedKey(key));
            }
            if out.iter().any(|(k, _)| *k == key) {
                return Err(Error::InvalidLayout(format!("key {key:?} given twice")));
            }
            let group: Vec<char> = letters.as_ref().chars().map(fold).collect();
            if group.is_empty() {
                return Err(Error::InvalidLayout(format!("key {key:?} has no letters")));
            }
            for (pos, &c) in group.iter().enumerate() {
                if let Some((other, _)) = index.insert(c, (key, pos)) {
                    return Err(Error::InvalidLayout(format!(
                        "letter {c:?} on both key {other:?} and key {key:?}"
                    )));
                }
            }
            out.push((key, group));
        }
        Ok(KeypadLayout { keys: out, index })
    }

    /// The ITU E.161 grouping found on phone keypads.
    pub fn standard() -> Self {
        KeypadLayout::new([
            ('2', "ABC"),
            ('3', "DEF"),
            ('4', "GHI"),
            ('5', "JKL"),
            ('6', "MNO"),
            ('7', "PQRS"),
            ('8', "TUV"),
            ('9', "WXYZ"),
        ])
        .expect("standard keypad is well formed")
    }

    pub fn group(&self, key: char) -> Option<&[char]> {
        self.keys.iter().find(|(k, _)| *k == key).map(|(_, g)| g.as_slice())
    }

    pub fn key_of(&self, c: char) -> Option<char> {
        self.index.get(&fold(c)).map(|(k, _)| *k)
    }

    /// 1-based position of the letter on its key.
    pub fn position_of(&self, c: char) -> Option<usize> {
        self.index.get(&fold(c)).map(|(_, p)| p + 1)
    }

    pub fn keys(&self) -> impl Iterator<Item = (char, &[char])> {
        self.keys.iter().map(|(k, g)| (*k, g.as_slice()))
    }
}

impl Default for KeypadLayout {
    fn default() -> Self {
        KeypadLayout::standard()
    }
}
