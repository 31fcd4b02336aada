//! Prints a protocol exchange: each argument is sent as a client message
//! and the reply printed below it.

use std::sync::Arc;

use accelkey_server::{Catalog, Connection};

fn main() {
    let mut conn = Connection::new(Arc::new(Catalog::with_bundled()));
    for msg in std::env::args().skip(1) {
        println!("> {msg}\n< {}", conn.handle_text(&msg));
    }
}
