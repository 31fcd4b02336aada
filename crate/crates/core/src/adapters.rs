//! Turning raw device input into session events.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::layout::{fold, Direction, KeypadLayout, Layout};
use crate::session::InputEvent;

/// Trackball motion: `dx` negative for left, `dy` negative for down.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackballDelta {
    pub dx: f64,
    pub dy: f64,
}

impl TrackballDelta {
    pub fn new(dx: f64, dy: f64) -> Self {
        TrackballDelta { dx, dy }
    }

    pub fn magnitude(&self) -> f64 {
        self.dx.hypot(self.dy)
    }
}

/// Deltas shorter than `threshold` are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JitterConfig {
    pub threshold: f64,
}

impl JitterConfig {
    pub const DEFAULT_THRESHOLD: f64 = 2.0;

    pub fn new(threshold: f64) -> Result<Self> {
        if !threshold.is_finite() || threshold < 0.0 {
            return Err(Error::InvalidOptions("jitter threshold must be a finite non-negative number"));
        }
        Ok(JitterConfig { threshold })
    }
}

impl Default for JitterConfig {
    fn default() -> Self {
        JitterConfig {
            threshold: Self::DEFAULT_THRESHOLD,
        }
    }
}

/// Classifies a trackball delta. Horizontal wins only when strictly
/// dominant; ties go to the vertical axis.
pub fn trackball_to_event(delta: TrackballDelta, jitter: JitterConfig) -> Option<Direction> {
    let TrackballDelta { dx, dy } = delta;
    if !dx.is_finite() || !dy.is_finite() || delta.magnitude() < jitter.threshold {
        return None;
    }
    Some(if dx.abs() > dy.abs() {
        if dx > 0.0 {
            Direction::Right
        } else {
            Direction::Left
        }
    } else if dy > 0.0 {
        Direction::Up
    } else {
        Direction::Down
    })
}

pub fn keypad_to_event(key: char, keypad: &KeypadLayout) -> Result<InputEvent> {
    match keypad.group(key) {
        Some(_) => Ok(InputEvent::Keypad { key }),
        None => Err(Error::UnmappedKey(key)),
    }
}

pub fn keyboard_to_event(letter: char, layout: &Layout) -> Result<InputEvent> {
    if layout.is_significant(letter) {
        Ok(InputEvent::Literal { letter: fold(letter) })
    } else {
        Err(Error::InsignificantLiteral(letter))
    }
}
