//! Edge-sum degree indices: elliptic Sombor, Euler Sombor, and the
//! classical Sombor baseline.
//!
//! Each index is a sum over edges `uv` of a term in the endpoint degrees:
//!
//! * elliptic Sombor: `(d(u) + d(v)) * sqrt(d(u)^2 + d(v)^2)`
//! * Euler Sombor:    `sqrt(d(u)^2 + d(v)^2 + d(u)d(v))`
//! * Sombor:          `sqrt(d(u)^2 + d(v)^2)`
//!
//! Sums accumulate in lexicographic edge order so results are
//! bit-reproducible across platforms.

use crate::graph::{Graph, GraphError};

fn edge_sum(g: &Graph, term: impl Fn(f64, f64) -> f64) -> Result<f64, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(g.edges()
        .map(|(u, v)| term(g.degree(u) as f64, g.degree(v) as f64))
        .sum())
}

/// Elliptic Sombor index: sum of `(du + dv) * sqrt(du^2 + dv^2)`.
pub fn elliptic_sombor(g: &Graph) -> Result<f64, GraphError> {
    edge_sum(g, |du, dv| (du + dv) * (du * du + dv * dv).sqrt())
}

/// Euler Sombor index: sum of `sqrt(du^2 + dv^2 + du*dv)`.
pub fn euler_sombor(g: &Graph) -> Result<f64, GraphError> {
    edge_sum(g, |du, dv| (du * du + dv * dv + du * dv).sqrt())
}

/// Sombor index: sum of `sqrt(du^2 + dv^2)`.
pub fn sombor(g: &Graph) -> Result<f64, GraphError> {
    edge_sum(g, |du, dv| (du * du + dv * dv).sqrt())
}

/// Per-graph record of all three indices plus the degree data they used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexReport {
    pub eso: f64,
    pub eu: f64,
    pub so: f64,
    pub size: usize,
    pub max_deg: usize,
    pub min_deg: usize,
}

/// Computes all three indices in one pass over the parameters.
pub fn report(g: &Graph) -> Result<IndexReport, GraphError> {
    let params = g.params()?;
    Ok(IndexReport {
        eso: elliptic_sombor(g)?,
        eu: euler_sombor(g)?,
        so: sombor(g)?,
        size: params.size,
        max_deg: params.max_deg,
        min_deg: params.min_deg,
    })
}
