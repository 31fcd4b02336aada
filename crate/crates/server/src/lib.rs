//! Websocket front end for interactive selection sessions.
//!
//! Each websocket connection at `/ws` owns one [`Connection`]; see
//! [`protocol`] for the message schema. Static files for a browser client
//! are served from an optional directory.

pub mod connection;
pub mod protocol;

use std::io;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::State;
use axum::response::{Html, IntoResponse};
use axum::routing::get;
use axum::Router;
use tokio::net::TcpListener;
use tower_http::services::ServeDir;

pub use connection::{Catalog, Connection};

#[derive(Debug, Clone)]
pub struct ServerConfig {
    pub addr: SocketAddr,
    pub static_dir: Option<PathBuf>,
}

const FALLBACK_INDEX: &str = "<!doctype html>
<title>accelkey</title>
<p>Selection sessions are served over a websocket at <code>/ws</code>.
Start the server with <code>--static-dir</code> to serve a browser client.</p>
";

pub fn router(catalog: Arc<Catalog>, static_dir: Option<PathBuf>) -> Router {
    let app = Router::new().route("/ws", get(ws_handler)).with_state(catalog);
    match static_dir {
        Some(dir) => app.fallback_service(ServeDir::new(dir)),
        None => app.route("/", get(|| async { Html(FALLBACK_INDEX) })),
    }
}

async fn ws_handler(ws: WebSocketUpgrade, State(catalog): State<Arc<Catalog>>) -> impl IntoResponse {
    ws.on_upgrade(move |socket| drive(socket, catalog))
}

async fn drive(mut socket: WebSocket, catalog: Arc<Catalog>) {
    let mut conn = Connection::new(catalog);
    while let Some(Ok(msg)) = socket.recv().await {
        let reply = match msg {
            Message::Text(text) => conn.handle_text(text.as_str()),
            Message::Binary(bytes) => match std::str::from_utf8(&bytes) {
                Ok(text) => conn.handle_text(text),
                Err(_) => r#"{"type":"error","message":"binary frames must be UTF-8 JSON"}"#.to_string(),
            },
            Message::Close(_) => break,
            _ => continue,
        };
        if socket.send(Message::Text(reply.into())).await.is_err() {
            break;
        }
    }
}

/// Serves on an already-bound listener until the task is dropped.
pub async fn serve_on(listener: TcpListener, catalog: Arc<Catalog>, static_dir: Option<PathBuf>) -> io::Result<()> {
    axum::serve(listener, router(catalog, static_dir)).await
}

pub async fn serve(config: ServerConfig, catalog: Catalog) -> io::Result<()> {
    let listener = TcpListener::bind(config.addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    serve_on(listener, Arc::new(catalog), config.static_dir).await
}
