use std::collections::BTreeMap;
use std::sync::Arc;

use accelkey_core::{
    builtin_layout, trackball_to_event, InputEvent, JitterConfig, KeypadLayout, Layout, Outcome, Session,
    SessionConfig, TrackballDelta,
};

use crate::protocol::{decode_event, ClientMessage, ServerMessage, StateSnapshot};

/// Datasets and extra layouts a server can hand out to connections.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub datasets: BTreeMap<String, Vec<String>>,
    pub layouts: BTreeMap<String, Layout>,
    pub default_dataset: Option<String>,
    pub jitter: JitterConfig,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog {
            datasets: BTreeMap::new(),
            layouts: BTreeMap::new(),
            default_dataset: None,
            jitter: JitterConfig::default(),
        }
    }

    /// Catalog preloaded with the bundled surname datasets.
    pub fn with_bundled() -> Self {
        let mut c = Catalog::new();
        for name in accelkey_core::dataset::BUNDLED {
            let entries = accelkey_core::dataset::bundled_dataset(name).expect("bundled dataset");
            c.datasets.insert(name.to_string(), entries);
        }
        c.default_dataset = Some("writers".to_string());
        c
    }

    pub fn add_dataset(&mut self, name: impl Into<String>, mut entries: Vec<String>) {
        accelkey_core::eval::sort_entries(&mut entries);
        self.datasets.insert(name.into(), entries);
    }

    fn layout(&self, name: &str) -> Result<Layout, String> {
        if let Some(l) = self.layouts.get(name) {
            return Ok(l.clone());
        }
        builtin_layout(name).map_err(|e| e.to_string())
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::with_bundled()
    }
}

/// One client's session. Messages are handled strictly one at a time.
#[derive(Debug)]
pub struct Connection {
    catalog: Arc<Catalog>,
    session: Option<Session>,
}

impl Connection {
    pub fn new(catalog: Arc<Catalog>) -> Self {
        Connection { catalog, session: None }
    }

    pub fn session(&self) -> Option<&Session> {
        self.session.as_ref()
    }

    pub fn handle_text(&mut self, text: &str) -> String {
        let reply = match serde_json::from_str::<ClientMessage>(text) {
            Ok(msg) => self.handle(msg),
            Err(e) => error(format!("malformed message: {e}")),
        };
        serde_json::to_string(&reply).expect("reply serializes")
    }

    pub fn handle(&mut self, msg: ClientMessage) -> ServerMessage {
        match msg {
            ClientMessage::Hello {
                dataset,
                entries,
                layout,
                options,
                cursor,
            } => {
                let raw = match (entries, dataset.or_else(|| self.catalog.default_dataset.clone())) {
                    (Some(entries), _) => entries,
                    (None, Some(name)) => match self.catalog.datasets.get(&name) {
                        Some(entries) => entries.clone(),
                        None => return error(format!("unknown dataset `{name}`")),
                    },
                    (None, None) => return error("hello needs `dataset` or `entries`"),
                };
                let layout = match self.catalog.layout(layout.as_deref().unwrap_or("qwerty")) {
                    Ok(l) => l,
                    Err(e) => return error(e),
                };
                let config = SessionConfig { cursor_policy: cursor };
                match Session::new(&raw, layout, KeypadLayout::standard(), options, config) {
                    Ok(session) => {
                        self.session = Some(session);
                        self.snapshot()
                    }
                    Err(e) => error(e.to_string()),
                }
            }
            ClientMessage::Event { event, key, letter } => match decode_event(event, key.as_deref(), letter.as_deref()) {
                Ok(event) => self.apply(event),
                Err(e) => error(e),
            },
            ClientMessage::Trackball { dx, dy } => {
                if self.session.is_none() {
                    return no_session();
                }
                match trackball_to_event(TrackballDelta::new(dx, dy), self.catalog.jitter) {
                    Some(dir) => self.apply(InputEvent::Direction(dir)),
                    None => self.snapshot(),
                }
            }
        }
    }

    fn apply(&mut self, event: InputEvent) -> ServerMessage {
        let Some(session) = self.session.as_mut() else {
            return no_session();
        };
        match session.apply(event) {
            Outcome::Continue => self.snapshot(),
            Outcome::Selected { index, entry } => ServerMessage::Selected {
                index,
                text: entry.display_text,
            },
            Outcome::Rejected(reason) => ServerMessage::Rejected {
                reason: reason.to_string(),
            },
        }
    }

    fn snapshot(&self) -> ServerMessage {
        match &self.session {
            Some(s) => ServerMessage::State(StateSnapshot::new(&s.view(), s.layout())),
            None => no_session(),
        }
    }
}

fn error(message: impl Into<String>) -> ServerMessage {
    ServerMessage::Error {
        message: message.into(),
    }
}

fn no_session() -> ServerMessage {
    error("no session: send hello first")
}
