//! Holds the workspace acceptance suite in `tests/acceptance.rs`. Run it with
//! `cargo test -p accelkey-verify --test acceptance -- --nocapture`.
