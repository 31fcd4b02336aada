//! Parsing of `simulate` event scripts such as `U,L,S`.

use accelkey_core::InputEvent;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptError {
    /// 1-based token position.
    pub position: usize,
    pub token: String,
}

impl std::fmt::Display for ScriptError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "unrecognized event `{}` at position {} (expected one of U D L R S B X, 2-9, a-z)",
            self.token, self.position
        )
    }
}

impl std::error::Error for ScriptError {}

/// A script token and the event it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub token: String,
    pub event: InputEvent,
}

fn token_event(token: &str) -> Option<InputEvent> {
    let mut chars = token.chars();
    let c = chars.next()?;
    if chars.next().is_some() {
        return None;
    }
    Some(match c {
        'U' => InputEvent::UP,
        'D' => InputEvent::DOWN,
        'L' => InputEvent::LEFT,
        'R' => InputEvent::RIGHT,
        'S' => InputEvent::Select,
        'B' => InputEvent::Backspace,
        'X' => InputEvent::Reset,
        '2'..='9' => InputEvent::Keypad { key: c },
        'a'..='z' => InputEvent::Literal { letter: c },
        _ => return None,
    })
}

/// Parses a comma-separated script. Tokens are case-sensitive: upper-case
/// letters are commands, lower-case letters are literals. An empty or
/// all-blank script has no steps.
pub fn parse_script(script: &str) -> Result<Vec<Step>, ScriptError> {
    if script.trim().is_empty() {
        return Ok(Vec::new());
    }
    script
        .split(',')
        .enumerate()
        .map(|(i, raw)| {
            let token = raw.trim();
            token_event(token)
                .map(|event| Step {
                    token: token.to_string(),
                    event,
                })
                .ok_or_else(|| ScriptError {
                    position: i + 1,
                    token: token.to_string(),
                })
        })
        .collect()
}
