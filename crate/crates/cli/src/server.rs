//! Survey sessions over HTTP.
//!
//! `POST /session` starts a session, `POST /session/{id}/answer` takes
//! `{feature, accept}`, and `GET /session/{id}` reports where a session stands.

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use dialect_forge::survey::Profiles;
use dialect_forge::{Error, FeatureId, Session, SessionView};
use serde::{Deserialize, Serialize};
use tower_http::services::ServeDir;

pub struct AppState {
    profiles: Profiles,
    bank: BTreeMap<FeatureId, String>,
    sessions: Mutex<HashMap<String, Session>>,
}

impl AppState {
    pub fn new(profiles: Profiles, bank: BTreeMap<FeatureId, String>) -> Arc<Self> {
        Arc::new(AppState {
            profiles,
            bank,
            sessions: Mutex::new(HashMap::new()),
        })
    }
}

#[derive(Debug, Serialize)]
struct Reply {
    session_id: String,
    #[serde(flatten)]
    view: SessionView,
}

#[derive(Debug, Serialize)]
struct AskedAnswer {
    feature: FeatureId,
    accept: bool,
}

#[derive(Debug, Serialize)]
struct Summary {
    session_id: String,
    candidates: Vec<String>,
    asked: Vec<AskedAnswer>,
    #[serde(flatten)]
    view: SessionView,
}

#[derive(Debug, Deserialize)]
struct AnswerBody {
    feature: i64,
    accept: bool,
}

struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(serde_json::json!({ "error": self.1 }))).into_response()
    }
}

fn unknown(id: &str) -> ApiError {
    ApiError(StatusCode::NOT_FOUND, format!("no session {id}"))
}

async fn create(State(state): State<Arc<AppState>>) -> (StatusCode, Json<Reply>) {
    let session = Session::new(state.profiles.clone(), state.bank.clone());
    let view = session.view();
    let session_id = uuid::Uuid::new_v4().simple().to_string();
    state.sessions.lock().unwrap().insert(session_id.clone(), session);
    (StatusCode::CREATED, Json(Reply { session_id, view }))
}

async fn answer(
    State(state): State<Arc<AppState>>,
    Path(id): Path<String>,
    Json(body): Json<AnswerBody>,
) -> Result<Json<Reply>, ApiError> {
    let feature = FeatureId::new(body.feature).map_err(|e| ApiError(StatusCode::BAD_REQUEST, e.to_string()))?;
    let mut sessions = state.sessions.lock().unwrap();
    let session = sessions.get_mut(&id).ok_or_else(|| unknown(&id))?;
    match session.answer(feature, body.accept) {
        Ok(view) => Ok(Json(Reply { session_id: id, view })),
        Err(e @ (Error::NotPending(_) | Error::RepeatedQuestion(_))) => {
            Err(ApiError(StatusCode::CONFLICT, e.to_string()))
        }
        Err(e) => Err(ApiError(StatusCode::BAD_REQUEST, e.to_string())),
    }
}

async fn summary(State(state): State<Arc<AppState>>, Path(id): Path<String>) -> Result<Json<Summary>, ApiError> {
    let sessions = state.sessions.lock().unwrap();
    let session = sessions.get(&id).ok_or_else(|| unknown(&id))?;
    let s = session.state();
    Ok(Json(Summary {
        session_id: id,
        candidates: s.candidates.iter().cloned().collect(),
        asked: s
            .asked
            .iter()
            .map(|&(feature, accept)| AskedAnswer { feature, accept })
            .collect(),
        view: session.view(),
    }))
}

pub fn router(state: Arc<AppState>, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/session", post(create))
        .route("/session/{id}/answer", post(answer))
        .route("/session/{id}", get(summary))
        .with_state(state);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

pub async fn serve(addr: &str, state: Arc<AppState>, static_dir: Option<PathBuf>) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("survey listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state, static_dir)).await?;
    Ok(())
}
