//! Stateless JSON service over the engine.

use std::collections::HashMap;
use std::net::SocketAddr;

use axum::body::Bytes;
use axum::extract::Query;
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::api::{self, ApiError, ApiResult, SERVICE_MAX_N};

pub fn router() -> Router {
    Router::new()
        .route("/validate", post(|b: Bytes| run_post(b, |r| api::validate(&r))))
        .route("/flip", post(|b: Bytes| run_post(b, |r| api::flip_arc(&r))))
        .route("/path", post(|b: Bytes| run_post(b, |r| api::path(&r))))
        .route("/shift", post(|b: Bytes| run_post(b, |r| api::shift(&r))))
        .route("/map", post(|b: Bytes| run_post(b, |r| api::map(&r))))
        .route("/enumerate", get(enumerate))
        .route("/model", get(model))
}

fn json_response(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn respond<T: Serialize>(r: ApiResult<T>) -> Response {
    match r {
        Ok(v) => json_response(StatusCode::OK, api::to_json(&v)),
        Err(e) => {
            let status = match e {
                ApiError::Parse(_) => StatusCode::BAD_REQUEST,
                ApiError::Domain { .. } => StatusCode::UNPROCESSABLE_ENTITY,
            };
            tracing::debug!(%status, message = e.message(), "request rejected");
            json_response(status, e.body().to_string())
        }
    }
}

async fn blocking<T: Send + 'static>(f: impl FnOnce() -> ApiResult<T> + Send + 'static) -> ApiResult<T> {
    tokio::task::spawn_blocking(f)
        .await
        .unwrap_or_else(|e| Err(ApiError::Domain { message: format!("handler failed: {e}"), report: None }))
}

async fn run_post<Req, Resp, F>(body: Bytes, f: F) -> Response
where
    Req: DeserializeOwned + Send + 'static,
    Resp: Serialize + Send + 'static,
    F: FnOnce(Req) -> ApiResult<Resp> + Send + 'static,
{
    let req = std::str::from_utf8(&body)
        .map_err(|e| ApiError::Parse(e.to_string()))
        .and_then(api::parse_json::<Req>);
    match req {
        Ok(req) => respond(blocking(move || f(req)).await),
        Err(e) => respond::<()>(Err(e)),
    }
}

fn int_param(q: &HashMap<String, String>, key: &str) -> ApiResult<Option<i64>> {
    q.get(key)
        .map(|v| v.parse().map_err(|_| ApiError::Parse(format!("query parameter {key} must be an integer"))))
        .transpose()
}

fn weight_param(q: &HashMap<String, String>) -> ApiResult<i64> {
    let n = int_param(q, "n")?.ok_or_else(|| ApiError::Parse("missing query parameter n".into()))?;
    if n > SERVICE_MAX_N {
        return Err(ApiError::Domain { message: format!("n = {n} exceeds the service limit {SERVICE_MAX_N}"), report: None });
    }
    Ok(n)
}

async fn enumerate(Query(q): Query<HashMap<String, String>>) -> Response {
    let params = weight_param(&q).and_then(|n| Ok((n, int_param(&q, "window")?)));
    match params {
        Ok((n, window)) => {
            if let Some(w) = window.filter(|&w| w > 3 * n) {
                return respond::<()>(Err(ApiError::Domain {
                    message: format!("window {w} exceeds the service limit {}", 3 * n),
                    report: None,
                }));
            }
            respond(blocking(move || api::enumerate(n, window)).await)
        }
        Err(e) => respond::<()>(Err(e)),
    }
}

async fn model(Query(q): Query<HashMap<String, String>>) -> Response {
    respond(weight_param(&q).and_then(api::model))
}

pub async fn serve(port: u16) -> anyhow::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await?;
    Ok(())
}
