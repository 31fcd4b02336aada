use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::{fold, Direction, KeypadLayout, Layout};

/// One step of user input: a direction group, a keypad key group, or a
/// single letter typed on a full keyboard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Constraint {
    DirectionGroup(Direction),
    KeypadGroup(char),
    Literal(char),
}

impl Constraint {
    /// Whether a (normalized) entry letter satisfies this constraint.
    pub fn accepts(&self, c: char, layout: &Layout, keypad: &KeypadLayout, case_sensitive: bool) -> bool {
        match *self {
            Constraint::DirectionGroup(d) => layout.direction_of(c) == Some(d),
            Constraint::KeypadGroup(k) => keypad.key_of(c) == Some(k),
            Constraint::Literal(l) if case_sensitive => c == l,
            Constraint::Literal(l) => fold(c) == fold(l),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::DirectionGroup(d) => write!(f, "{d}"),
            Constraint::KeypadGroup(k) => write!(f, "{k}"),
            Constraint::Literal(c) => write!(f, "'{c}'"),
        }
    }
}

/// The set of letters a constraint stands for under the given layouts.
pub fn letter_set(constraint: &Constraint, layout: &Layout, keypad: &KeypadLayout) -> Result<BTreeSet<char>> {
    match *constraint {
        Constraint::DirectionGroup(d) => Ok(layout.group(d).iter().copied().collect()),
        Constraint::KeypadGroup(k) => keypad
            .group(k)
            .map(|g| g.iter().copied().collect())
            .ok_or(Error::UnmappedKey(k)),
        Constraint::Literal(c) if layout.is_significant(c) => Ok(BTreeSet::from([fold(c)])),
        Constraint::Literal(c) => Err(Error::InsignificantLiteral(c)),
    }
}

/// Ordered sequence of constraints entered so far.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Prefix(Vec<Constraint>);

impl Prefix {
    pub fn new() -> Self {
        Prefix(Vec::new())
    }

    pub fn push(&mut self, c: Constraint) {
        self.0.push(c);
    }

    pub fn pop(&mut self) -> Option<Constraint> {
        self.0.pop()
    }

    /// Returns a copy with `c` appended.
    pub fn with(&self, c: Constraint) -> Prefix {
        let mut p = self.clone();
        p.push(c);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Constraint] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Constraint> {
        self.0.iter()
    }

    pub fn tokens(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl From<Vec<Constraint>> for Prefix {
    fn from(v: Vec<Constraint>) -> Self {
        Prefix(v)
    }
}

impl FromIterator<Constraint> for Prefix {
    fn from_iter<T: IntoIterator<Item = Constraint>>(iter: T) -> Self {
        Prefix(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Prefix {
    type Item = &'a Constraint;
    type IntoIter = std::slice::Iter<'a, Constraint>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
