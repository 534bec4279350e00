//! Stateless HTTP JSON service. Every request carries its whole circuit.
//!
//! - `POST /api/simulate`: body is a circuit document, response is its trace document.
//! - `POST /api/render`: body `{circuit, step, style?}`, response is the step's SVG.
//! - `GET /api/health`: `ok`.
//!
//! Invalid bodies get 400 with the same diagnostic text the CLI prints;
//! circuits over the size caps get 413.

use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Deserialize;
use stateogram::{render_svg, run_circuit, Circuit, CircuitDocument, FormatError, RenderStyle, TraceDocument};
use tower_http::services::ServeDir;

pub const DEFAULT_MAX_QUBITS: usize = 12;
pub const DEFAULT_MAX_COLUMNS: usize = 256;
pub const MAX_QUBITS_ENV: &str = "SOG_MAX_QUBITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_qubits: usize,
    pub max_columns: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
            max_columns: DEFAULT_MAX_COLUMNS,
        }
    }
}

impl Limits {
    /// Defaults, with the qubit cap taken from `SOG_MAX_QUBITS` when set.
    pub fn from_env() -> Result<Self, String> {
        let mut limits = Self::default();
        if let Ok(v) = std::env::var(MAX_QUBITS_ENV) {
            limits.max_qubits = v
                .trim()
                .parse()
                .map_err(|_| format!("{MAX_QUBITS_ENV}={v:?} is not a non-negative integer"))?;
        }
        Ok(limits)
    }
}

#[derive(Debug)]
pub enum ApiError {
    BadRequest(String),
    TooLarge(String),
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, msg) = match self {
            ApiError::BadRequest(m) => (StatusCode::BAD_REQUEST, m),
            ApiError::TooLarge(m) => (StatusCode::PAYLOAD_TOO_LARGE, m),
        };
        (status, [(header::CONTENT_TYPE, "text/plain; charset=utf-8")], msg).into_response()
    }
}

impl From<FormatError> for ApiError {
    fn from(e: FormatError) -> Self {
        ApiError::BadRequest(e.to_string())
    }
}

fn body_text(body: &Bytes) -> Result<&str, ApiError> {
    std::str::from_utf8(body).map_err(|e| ApiError::BadRequest(format!("body is not UTF-8: {e}")))
}

fn admit(doc: &CircuitDocument, limits: &Limits) -> Result<Circuit, ApiError> {
    if doc.qubits > limits.max_qubits {
        return Err(ApiError::TooLarge(format!(
            "{} qubits exceeds the service limit of {}",
            doc.qubits, limits.max_qubits
        )));
    }
    if doc.columns.len() > limits.max_columns {
        return Err(ApiError::TooLarge(format!(
            "{} columns exceeds the service limit of {}",
            doc.columns.len(),
            limits.max_columns
        )));
    }
    Ok(doc.to_circuit()?)
}

/// Trace JSON for a circuit document body; shared by the handler and tests.
pub fn simulate_body(body: &str, limits: &Limits) -> Result<String, ApiError> {
    let doc = CircuitDocument::from_json(body)?;
    let circuit = admit(&doc, limits)?;
    Ok(TraceDocument::for_circuit(&circuit).to_json())
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StyleRequest {
    pub width: Option<u32>,
    pub height: Option<u32>,
    pub bar_width: Option<u32>,
    pub margin: Option<u32>,
    pub font_size: Option<u32>,
    pub show_vanishing_box: Option<bool>,
    pub title: Option<String>,
}

impl StyleRequest {
    pub fn into_style(self) -> RenderStyle {
        let d = RenderStyle::default();
        RenderStyle {
            width_px: self.width.unwrap_or(d.width_px),
            height_px: self.height.unwrap_or(d.height_px),
            bar_width_px: self.bar_width.unwrap_or(d.bar_width_px),
            margin_px: self.margin.unwrap_or(d.margin_px),
            font_size_px: self.font_size.unwrap_or(d.font_size_px),
            show_vanishing_box: self.show_vanishing_box.unwrap_or(d.show_vanishing_box),
            title: self.title.or(d.title),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RenderRequest {
    circuit: CircuitDocument,
    step: usize,
    #[serde(default)]
    style: StyleRequest,
}

pub fn render_body(body: &str, limits: &Limits) -> Result<String, ApiError> {
    let req: RenderRequest = serde_json::from_str(body).map_err(FormatError::from)?;
    let circuit = admit(&req.circuit, limits)?;
    let n_steps = circuit.columns().len() + 1;
    if req.step >= n_steps {
        return Err(ApiError::BadRequest(format!(
            "step {} out of range: the trace has {n_steps} step(s)",
            req.step
        )));
    }
    let style = req.style.into_style();
    let layout = run_circuit(&circuit).swap_remove(req.step).layout;
    render_svg(&layout, &style).map_err(|e| ApiError::BadRequest(e.to_string()))
}

async fn simulate(State(limits): State<Limits>, body: Bytes) -> Result<Response, ApiError> {
    let json = simulate_body(body_text(&body)?, &limits)?;
    Ok(([(header::CONTENT_TYPE, "application/json")], json).into_response())
}

async fn render(State(limits): State<Limits>, body: Bytes) -> Result<Response, ApiError> {
    let svg = render_body(body_text(&body)?, &limits)?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

async fn health() -> &'static str {
    "ok"
}

/// The service router; static assets are served from `static_dir` when given.
pub fn router(limits: Limits, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/simulate", post(simulate))
        .route("/api/render", post(render))
        .route("/api/health", get(health))
        .with_state(limits);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

/// Binds `addr` and serves until interrupted.
pub async fn serve(addr: SocketAddr, limits: Limits, static_dir: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("sog: listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(limits, static_dir))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
