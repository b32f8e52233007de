//! Capacity sandwiches: a strong-power lower bound against the values of
//! several spectrum points, each of which is an upper bound on the Shannon
//! capacity. The minimum over implemented points only bounds the capacity
//! from above; the sandwich pins it down only when the gap closes.

use serde::Serialize;

use super::{g6, SpectrumPoint};
use crate::error::Result;
use crate::exact::capacity_lower_bound;
use crate::graph::Graph;
use crate::value::{round_significant, Value};

/// Gaps up to this size count as resolved.
pub const RESOLVED_GAP: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointValue {
    pub point: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SandwichReport {
    pub graph: String,
    pub power: usize,
    pub alpha_of_power: usize,
    #[serde(serialize_with = "rounded")]
    pub lower: f64,
    pub uppers: Vec<PointValue>,
    /// `None` when every point failed.
    #[serde(serialize_with = "rounded_opt")]
    pub min_upper: Option<f64>,
    #[serde(serialize_with = "rounded_opt")]
    pub gap: Option<f64>,
    pub resolved: bool,
}

fn rounded<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_significant(*x, 7))
}

fn rounded_opt<S: serde::Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => rounded(x, s),
        None => s.serialize_none(),
    }
}

/// Compares `max_{N <= n_max} α(g^{⊠N})^{1/N}` with every point's value.
/// Point failures are recorded per point; only the lower bound can fail the
/// whole report.
pub fn sandwich_report(
    g: &Graph,
    n_max: usize,
    points: &[SpectrumPoint],
    vertex_limit: usize,
) -> Result<SandwichReport> {
    let lower = capacity_lower_bound(g, n_max, vertex_limit)?;
    let uppers: Vec<PointValue> = points
        .iter()
        .map(|p| match p.evaluate(g) {
            Ok(v) => PointValue {
                point: p.name.clone(),
                value: Some(v),
                error: None,
            },
            Err(e) => PointValue {
                point: p.name.clone(),
                value: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    let min_upper = uppers
        .iter()
        .filter_map(|u| u.value.as_ref().map(Value::to_f64))
        .reduce(f64::min);
    let gap = min_upper.map(|m| m - lower.lower_bound);
    Ok(SandwichReport {
        graph: g6(g),
        power: lower.power,
        alpha_of_power: lower.alpha_of_power,
        lower: lower.lower_bound,
        uppers,
        min_upper,
        gap,
        resolved: gap.is_some_and(|gap| gap <= RESOLVED_GAP),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn points() -> Vec<SpectrumPoint> {
        vec![SpectrumPoint::theta(1e-6), SpectrumPoint::frac_clique_cover()]
    }

    #[test]
    fn five_cycle_closes() {
        let r = sandwich_report(&Graph::cycle(5).unwrap(), 2, &points(), 64).unwrap();
        assert_eq!((r.power, r.alpha_of_power), (2, 5));
        assert!((r.lower - 5f64.sqrt()).abs() < 1e-12);
        assert!((r.min_upper.unwrap() - 5f64.sqrt()).abs() < 1e-4);
        assert!(r.resolved);
    }

    #[test]
    fn complete_graph_is_trivial() {
        let r = sandwich_report(&Graph::complete(4), 2, &points(), 64).unwrap();
        assert_eq!(r.lower, 1.0);
        assert!((r.min_upper.unwrap() - 1.0).abs() < 1e-6);
        assert!(r.resolved);
    }

    #[test]
    fn failing_point_is_recorded() {
        let small = SpectrumPoint::frac_haemers(2);
        let g = Graph::cycle(11).unwrap();
        let r = sandwich_report(&g, 1, &[small, SpectrumPoint::frac_clique_cover()], 64).unwrap();
        assert!(r.uppers[0].error.is_some());
        assert_eq!(r.min_upper, Some(5.5));
        assert!(!r.resolved);
    }
}
