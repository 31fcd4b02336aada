//! Python module `accelkey`: layouts, interactive sessions, trackball
//! classification and the evaluation cost models.

use accelkey_core::dataset::bundled_dataset as core_bundled;
use accelkey_core::eval::{self, compare as core_compare};
use accelkey_core::report::render_json;
use accelkey_core::{
    builtin_layout, trackball_to_event as core_trackball, Constraint, CursorPolicy, Dataset, Direction, InputEvent,
    JitterConfig, KeypadLayout, Layout, MatchOptions, Matcher, Method, Outcome, Prefix, SessionConfig,
    TrackballDelta,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn single_char(what: &str, s: &str) -> PyResult<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(value_err(format!("{what} must be a single character, got {s:?}"))),
    }
}

fn parse_cursor(s: &str) -> PyResult<CursorPolicy> {
    s.parse().map_err(value_err)
}

/// A layout argument: a `Layout` object or a built-in layout name.
fn layout_arg(obj: &Bound<'_, PyAny>) -> PyResult<Layout> {
    if let Ok(l) = obj.cast::<PyLayout>() {
        return Ok(l.borrow().inner.clone());
    }
    let name: String = obj.extract()?;
    builtin_layout(&name).map_err(value_err)
}

fn options(span_words: bool, wrap: bool, whole_entry: bool, case_sensitive: bool) -> PyResult<MatchOptions> {
    let o = MatchOptions {
        case_sensitive,
        span_words,
        wrap,
        word_mode: !whole_entry,
    };
    o.validate().map_err(value_err)?;
    Ok(o)
}

/// Four disjoint letter groups, one per direction.
#[pyclass(name = "Layout", module = "accelkey", frozen, skip_from_py_object)]
struct PyLayout {
    inner: Layout,
}

#[pymethods]
impl PyLayout {
    /// Built-in layout by name (`qwerty` or `abc`).
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        builtin_layout(name).map(|inner| PyLayout { inner }).map_err(value_err)
    }

    /// Parses the `direction: LETTERS` file format.
    #[staticmethod]
    fn parse(name: &str, text: &str) -> PyResult<Self> {
        Layout::parse(name, text).map(|inner| PyLayout { inner }).map_err(value_err)
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    /// `{"up": "QWERTYUIOP", ...}`
    fn groups<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for dir in Direction::ALL {
            d.set_item(dir.name(), self.inner.group(dir).iter().collect::<String>())?;
        }
        Ok(d)
    }

    fn direction_of(&self, letter: &str) -> PyResult<Option<&'static str>> {
        Ok(self.inner.direction_of(single_char("letter", letter)?).map(Direction::name))
    }

    fn __repr__(&self) -> String {
        format!("Layout({:?})", self.inner.name())
    }
}

fn parse_event(event: &str, value: Option<&str>) -> PyResult<InputEvent> {
    if let Ok(dir) = event.parse::<Direction>() {
        return Ok(InputEvent::Direction(dir));
    }
    let need = |what: &str| -> PyResult<char> {
        single_char(what, value.ok_or_else(|| value_err(format!("event `{event}` needs a {what}")))?)
    };
    Ok(match event {
        "select" => InputEvent::Select,
        "backspace" => InputEvent::Backspace,
        "reset" => InputEvent::Reset,
        "keypad" => InputEvent::Keypad { key: need("key")? },
        "literal" => InputEvent::Literal { letter: need("letter")? },
        _ => return Err(value_err(format!("unknown event `{event}`"))),
    })
}

/// An interactive selection session over a list of entries.
#[pyclass(name = "Session", module = "accelkey")]
struct PySession {
    inner: accelkey_core::Session,
}

#[pymethods]
impl PySession {
    #[new]
    #[pyo3(signature = (entries, layout = None, cursor = "first", span_words = true, wrap = false, whole_entry = false, case_sensitive = false))]
    fn new(
        entries: Vec<String>,
        layout: Option<&Bound<'_, PyAny>>,
        cursor: &str,
        span_words: bool,
        wrap: bool,
        whole_entry: bool,
        case_sensitive: bool,
    ) -> PyResult<Self> {
        let layout = match layout {
            Some(l) => layout_arg(l)?,
            None => builtin_layout("qwerty").map_err(value_err)?,
        };
        let config = SessionConfig {
            cursor_policy: parse_cursor(cursor)?,
        };
        let options = options(span_words, wrap, whole_entry, case_sensitive)?;
        accelkey_core::Session::new(&entries, layout, KeypadLayout::standard(), options, config)
            .map(|inner| PySession { inner })
            .map_err(value_err)
    }

    /// Applies one event: `up`, `down`, `left`, `right`, `select`,
    /// `backspace`, `reset`, `keypad` (with `value` a key) or `literal`
    /// (with `value` a letter). Returns a dict with `type` of `continue`,
    /// `selected` or `rejected`.
    #[pyo3(signature = (event, value = None))]
    fn apply<'py>(&mut self, py: Python<'py>, event: &str, value: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
        let event = parse_event(event, value)?;
        let d = PyDict::new(py);
        match self.inner.apply(event) {
            Outcome::Continue => d.set_item("type", "continue")?,
            Outcome::Selected { index, entry } => {
                d.set_item("type", "selected")?;
                d.set_item("index", index)?;
                d.set_item("text", entry.display_text)?;
            }
            Outcome::Rejected(r) => {
                d.set_item("type", "rejected")?;
                d.set_item("reason", r.to_string())?;
            }
        }
        Ok(d)
    }

    /// Current screen contents as a dict.
    fn view<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &serde_json::to_string(&self.inner.view()).map_err(value_err)?)
    }

    #[getter]
    fn mode(&self) -> String {
        self.inner.mode().to_string()
    }

    #[getter]
    fn prefix(&self) -> Vec<String> {
        self.inner.prefix().tokens()
    }

    #[getter]
    fn cursor(&self) -> Option<usize> {
        self.inner.cursor()
    }

    #[getter]
    fn filtered(&self) -> Vec<usize> {
        self.inner.filtered().to_vec()
    }
}

/// Direction name for a pointer delta, or `None` when the movement is below
/// the jitter threshold. Positive `dy` is up.
#[pyfunction]
#[pyo3(signature = (dx, dy, threshold = JitterConfig::DEFAULT_THRESHOLD))]
fn trackball_to_event(dx: f64, dy: f64, threshold: f64) -> PyResult<Option<&'static str>> {
    let jitter = JitterConfig::new(threshold).map_err(value_err)?;
    Ok(core_trackball(TrackballDelta::new(dx, dy), jitter).map(Direction::name))
}

fn parse_constraint(token: &str) -> PyResult<Constraint> {
    if let Ok(dir) = token.parse::<Direction>() {
        return Ok(Constraint::DirectionGroup(dir));
    }
    let c = single_char("constraint", token)?;
    Ok(if c.is_ascii_digit() {
        Constraint::KeypadGroup(c)
    } else {
        Constraint::Literal(c)
    })
}

/// Whether `entry` matches a prefix of tokens: direction names, keypad
/// digits or single letters.
#[pyfunction]
#[pyo3(signature = (entry, prefix, layout = None, span_words = true, wrap = false, whole_entry = false, case_sensitive = false))]
fn matches(
    entry: &str,
    prefix: Vec<String>,
    layout: Option<&Bound<'_, PyAny>>,
    span_words: bool,
    wrap: bool,
    whole_entry: bool,
    case_sensitive: bool,
) -> PyResult<bool> {
    let layout = match layout {
        Some(l) => layout_arg(l)?,
        None => builtin_layout("qwerty").map_err(value_err)?,
    };
    let options = options(span_words, wrap, whole_entry, case_sensitive)?;
    let prefix: Prefix = prefix.iter().map(|t| parse_constraint(t)).collect::<PyResult<_>>()?;
    let keypad = KeypadLayout::standard();
    let entry = accelkey_core::normalize_entry(entry, &layout, &options);
    Ok(Matcher::new(&layout, &keypad, &options).matches(&entry, &prefix))
}

fn parse_method(s: &str) -> PyResult<Method> {
    s.parse().map_err(value_err)
}

/// Per-entry event counts for `method` over `entries` (sorted first).
#[pyfunction]
#[pyo3(signature = (entries, method, layout = None, cursor = "first"))]
fn costs(entries: Vec<String>, method: &str, layout: Option<&Bound<'_, PyAny>>, cursor: &str) -> PyResult<Vec<u64>> {
    let layout = match layout {
        Some(l) => layout_arg(l)?,
        None => builtin_layout("qwerty").map_err(value_err)?,
    };
    let d = Dataset::new("py", entries);
    eval::per_entry_costs(&d, parse_method(method)?, &layout, &KeypadLayout::standard(), parse_cursor(cursor)?)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (entries, method, layout = None, cursor = "first"))]
fn average_events(entries: Vec<String>, method: &str, layout: Option<&Bound<'_, PyAny>>, cursor: &str) -> PyResult<f64> {
    let layout = match layout {
        Some(l) => layout_arg(l)?,
        None => builtin_layout("qwerty").map_err(value_err)?,
    };
    let d = Dataset::new("py", entries);
    eval::average_events(&d, parse_method(method)?, &layout, &KeypadLayout::standard(), parse_cursor(cursor)?)
        .map_err(value_err)
}

/// Evaluates `{name: entries}` under every method and layout; returns the
/// report rows as dicts.
#[pyfunction]
#[pyo3(signature = (datasets, methods, layouts, cursor = "first"))]
fn compare<'py>(
    py: Python<'py>,
    datasets: Vec<(String, Vec<String>)>,
    methods: Vec<String>,
    layouts: &Bound<'py, PyList>,
    cursor: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let datasets: Vec<Dataset> = datasets.into_iter().map(|(n, e)| Dataset::new(n, e)).collect();
    let methods: Vec<Method> = methods.iter().map(|m| parse_method(m)).collect::<PyResult<_>>()?;
    let layouts: Vec<Layout> = layouts.iter().map(|l| layout_arg(&l)).collect::<PyResult<_>>()?;
    let report = core_compare(&datasets, &methods, &layouts, &KeypadLayout::standard(), parse_cursor(cursor)?)
        .map_err(value_err)?;
    json_to_py(py, &render_json(&report))?.get_item("rows")
}

/// One of the bundled surname lists: `writers`, `representatives` or
/// `graduates`.
#[pyfunction]
fn bundled_dataset(name: &str) -> PyResult<Vec<String>> {
    core_bundled(name).ok_or_else(|| value_err(format!("unknown dataset `{name}`")))
}

#[pymodule]
fn accelkey(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLayout>()?;
    m.add_class::<PySession>()?;
    m.add_function(wrap_pyfunction!(trackball_to_event, m)?)?;
    m.add_function(wrap_pyfunction!(matches, m)?)?;
    m.add_function(wrap_pyfunction!(costs, m)?)?;
    m.add_function(wrap_pyfunction!(average_events, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_dataset, m)?)?;
    Ok(())
}
