//! Event-count cost models for comparing selection methods.
//!
//! Every model counts directional/keypad presses only; the final `select`
//! (and the select that switches to scrolling) is not counted. Under that
//! convention plain scrolling over `n` entries averages `(n - 1) / 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::entry::{normalize_entry, MatchOptions};
use crate::error::{Error, Result};
use crate::layout::{fold, Direction, KeypadLayout, Layout};
use crate::session::CursorPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Accelkey,
    Scroll,
    MultitapFirst,
    MultitapMatch,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Accelkey, Method::Scroll, Method::MultitapFirst, Method::MultitapMatch];

    pub fn name(self) -> &'static str {
        match self {
            Method::Accelkey => "accelkey",
            Method::Scroll => "scroll",
            Method::MultitapFirst => "multitap_first",
            Method::MultitapMatch => "multitap_match",
        }
    }

    /// Only AccelKey depends on the direction layout.
    pub fn uses_layout(self) -> bool {
        self == Method::Accelkey
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Method::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| format!("unknown method `{s}` (valid: accelkey, scroll, multitap_first, multitap_match)"))
    }
}

/// A named list of entries in evaluation order (sorted case-insensitively,
/// ties kept in input order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    name: String,
    entries: Vec<String>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, mut entries: Vec<String>) -> Self {
        sort_entries(&mut entries);
        Dataset {
            name: name.into(),
            entries,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn entries(&self) -> &[String] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_index(&self, target: usize) -> Result<()> {
        if target >= self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: target,
                len: self.entries.len(),
            });
        }
        Ok(())
    }
}

pub fn sort_entries(entries: &mut [String]) {
    entries.sort_by_cached_key(|s| s.to_lowercase());
}

pub fn cost_scroll(dataset: &Dataset, target: usize) -> Result<u64> {
    dataset.check_index(target)?;
    Ok(target as u64)
}

/// Number of presses to produce `letter` on its key.
pub fn multitap_letter_cost(letter: char, keypad: &KeypadLayout) -> Result<u64> {
    keypad
        .position_of(letter)
        .map(|p| p as u64)
        .ok_or(Error::UnmappedLetter(letter))
}

/// Keypad letters of each entry, upper-case folded.
fn keypad_streams(dataset: &Dataset, keypad: &KeypadLayout) -> Vec<Vec<char>> {
    dataset
        .entries
        .iter()
        .map(|s| s.chars().map(fold).filter(|c| keypad.key_of(*c).is_some()).collect())
        .collect()
}

fn multitap_first(streams: &[Vec<char>], target: usize, keypad: &KeypadLayout, raw: &str) -> Result<u64> {
    let first = *streams[target]
        .first()
        .ok_or_else(|| Error::NoSignificantLetters(raw.to_string()))?;
    let jump = streams
        .iter()
        .position(|s| s.first() == Some(&first))
        .expect("target itself starts with its first letter");
    Ok(multitap_letter_cost(first, keypad)? + (target - jump) as u64)
}

fn multitap_match(streams: &[Vec<char>], target: usize, keypad: &KeypadLayout, raw: &str) -> Result<u64> {
    let stream = &streams[target];
    if stream.is_empty() {
        return Err(Error::NoSignificantLetters(raw.to_string()));
    }
    let mut best = target as u64;
    let mut typed = 0u64;
    for k in 1..=stream.len() {
        typed += multitap_letter_cost(stream[k - 1], keypad)?;
        if typed >= best {
            break;
        }
        let typed_prefix = &stream[..k];
        let jump = streams
            .iter()
            .position(|s| s.starts_with(typed_prefix))
            .expect("target matches its own prefix");
        best = best.min(typed + target.abs_diff(jump) as u64);
    }
    Ok(best)
}

/// Type the first letter with multi-tap, then scroll down from the first
/// entry starting with that letter.
pub fn cost_multitap_first(dataset: &Dataset, target: usize, keypad: &KeypadLayout) -> Result<u64> {
    dataset.check_index(target)?;
    multitap_first(&keypad_streams(dataset, keypad), target, keypad, &dataset.entries[target])
}

/// Best point to stop typing with multi-tap (the cursor following the first
/// match of the typed prefix) and scroll the rest of the way.
pub fn cost_multitap_match(dataset: &Dataset, target: usize, keypad: &KeypadLayout) -> Result<u64> {
    dataset.check_index(target)?;
    multitap_match(&keypad_streams(dataset, keypad), target, keypad, &dataset.entries[target])
}

/// Direction sequence of each entry's whole letter stream.
fn direction_codes(dataset: &Dataset, layout: &Layout) -> Vec<Vec<Direction>> {
    let opts = MatchOptions::whole_entry();
    dataset
        .entries
        .iter()
        .map(|s| {
            normalize_entry(s, layout, &opts)
                .stream()
                .filter_map(|l| layout.direction_of(l.ch))
                .collect()
        })
        .collect()
}

fn accelkey(codes: &[Vec<Direction>], target: usize, policy: CursorPolicy, raw: &str) -> Result<u64> {
    let code = &codes[target];
    if code.is_empty() {
        return Err(Error::NoSignificantLetters(raw.to_string()));
    }
    let mut best = u64::MAX;
    for k in 0..=code.len() {
        if k as u64 >= best {
            break;
        }
        let typed = &code[..k];
        let mut len = 0usize;
        let mut pos = 0usize;
        for (j, c) in codes.iter().enumerate() {
            if c.starts_with(typed) {
                if j == target {
                    pos = len;
                }
                len += 1;
            }
        }
        let scroll = if len == 1 { 0 } else { pos.abs_diff(policy.initial(len)) };
        best = best.min((k + scroll) as u64);
    }
    Ok(best)
}

/// Fewest direction events to select the target: type the first `k`
/// direction groups of its letters, press select, scroll to it.
pub fn cost_accelkey(dataset: &Dataset, target: usize, layout: &Layout, policy: CursorPolicy) -> Result<u64> {
    dataset.check_index(target)?;
    accelkey(&direction_codes(dataset, layout), target, policy, &dataset.entries[target])
}

/// Cost of selecting every entry of the dataset in turn.
pub fn per_entry_costs(
    dataset: &Dataset,
    method: Method,
    layout: &Layout,
    keypad: &KeypadLayout,
    policy: CursorPolicy,
) -> Result<Vec<u64>> {
    method_costs(dataset, method, Some(layout), keypad, policy)
}

fn method_costs(
    dataset: &Dataset,
    method: Method,
    layout: Option<&Layout>,
    keypad: &KeypadLayout,
    policy: CursorPolicy,
) -> Result<Vec<u64>> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let n = dataset.len();
    let raw = &dataset.entries;
    match method {
        Method::Scroll => Ok((0..n as u64).collect()),
        Method::MultitapFirst => {
            let streams = keypad_streams(dataset, keypad);
            (0..n).map(|t| multitap_first(&streams, t, keypad, &raw[t])).collect()
        }
        Method::MultitapMatch => {
            let streams = keypad_streams(dataset, keypad);
            (0..n).map(|t| multitap_match(&streams, t, keypad, &raw[t])).collect()
        }
        Method::Accelkey => {
            let layout = layout.expect("accelkey needs a layout");
            let codes = direction_codes(dataset, layout);
            (0..n).map(|t| accelkey(&codes, t, policy, &raw[t])).collect()
        }
    }
}

fn mean(costs: &[u64]) -> f64 {
    costs.iter().sum::<u64>() as f64 / costs.len() as f64
}

pub fn average_events(
    dataset: &Dataset,
    method: Method,
    layout: &Layout,
    keypad: &KeypadLayout,
    policy: CursorPolicy,
) -> Result<f64> {
    per_entry_costs(dataset, method, layout, keypad, policy).map(|c| mean(&c))
}

/// Placeholder in the layout column for methods that ignore the layout.
pub const NO_LAYOUT: &str = "-";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub dataset: String,
    pub method: Method,
    pub layout: String,
    pub average: f64,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub costs: Vec<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub rows: Vec<ReportRow>,
}

impl EvalReport {
    pub fn get(&self, dataset: &str, method: Method, layout: &str) -> Option<&ReportRow> {
        self.rows
            .iter()
            .find(|r| r.dataset == dataset && r.method == method && r.layout == layout)
    }

    /// Average for `method` on `dataset`, looking up the layout only when the
    /// method uses one.
    pub fn average(&self, dataset: &str, method: Method, layout: &str) -> Option<f64> {
        let layout = if method.uses_layout() { layout } else { NO_LAYOUT };
        self.get(dataset, method, layout).map(|r| r.average)
    }
}

/// Evaluates every dataset under every method. Layout-dependent methods get
/// one row per layout; the others get a single row with layout `-`.
pub fn compare(
    datasets: &[Dataset],
    methods: &[Method],
    layouts: &[Layout],
    keypad: &KeypadLayout,
    policy: CursorPolicy,
) -> Result<EvalReport> {
    let mut rows = Vec::new();
    for dataset in datasets {
        for &method in methods {
            let targets: Vec<Option<&Layout>> = if method.uses_layout() {
                layouts.iter().map(Some).collect()
            } else {
                vec![None]
            };
            for layout in targets {
                let costs = method_costs(dataset, method, layout, keypad, policy)?;
                rows.push(ReportRow {
                    dataset: dataset.name.clone(),
                    method,
                    layout: layout.map_or(NO_LAYOUT.to_string(), |l| l.name().to_string()),
                    average: mean(&costs),
                    count: costs.len(),
                    costs,
                });
            }
        }
    }
    Ok(EvalReport { rows })
}
