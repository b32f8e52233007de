//! Property testing of candidate spectrum points and of the cohomomorphism
//! preorder, plus capacity sandwiches.
//!
//! A spectrum point is a map from graphs to the nonnegative reals that is
//! monotone under the preorder, additive under disjoint union, multiplicative
//! under the strong product, and sends `K_1` to 1. The harness evaluates a
//! candidate on seeded random pairs and records every failed identity as
//! data.

pub mod random;
mod sandwich;
mod strassen;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{clique_cover_number, independence_number, MAX_CLIQUE_COVER_LIMIT};
use crate::frac::{fractional_clique_cover, DEFAULT_MAXIMAL_CLIQUE_LIMIT};
use crate::graph::graph6::write_graph6;
use crate::graph::Graph;
use crate::haemers::{fractional_haemers, MAX_HAEMERS_VERTICES};
use crate::theta::{lovasz_theta, DEFAULT_THETA_LIMIT};
use crate::value::Value;

pub use sandwich::{sandwich_report, PointValue, SandwichReport, RESOLVED_GAP};
pub use strassen::{archimedean_witness, strassen_axiom_check};

type Evaluator = dyn Fn(&Graph) -> Result<Value> + Send + Sync;

/// A candidate element of the asymptotic spectrum.
#[derive(Clone)]
pub struct SpectrumPoint {
    pub name: String,
    evaluate: Arc<Evaluator>,
    /// Exact points are compared with rational equality.
    pub exact: bool,
    /// Solver accuracy; 0 for exact points.
    pub tolerance: f64,
    /// Largest graph the evaluator accepts.
    pub size_limit: usize,
}

impl fmt::Debug for SpectrumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectrumPoint")
            .field("name", &self.name)
            .field("exact", &self.exact)
            .field("tolerance", &self.tolerance)
            .field("size_limit", &self.size_limit)
            .finish()
    }
}

impl SpectrumPoint {
    pub fn new(
        name: impl Into<String>,
        exact: bool,
        tolerance: f64,
        size_limit: usize,
        evaluate: impl Fn(&Graph) -> Result<Value> + Send + Sync + 'static,
    ) -> Self {
        SpectrumPoint {
            name: name.into(),
            evaluate: Arc::new(evaluate),
            exact,
            tolerance: if exact { 0.0 } else { tolerance.max(0.0) },
            size_limit,
        }
    }

    pub fn evaluate(&self, g: &Graph) -> Result<Value> {
        if g.n() > self.size_limit {
            return Err(Error::SizeLimit {
                what: "spectrum point evaluation",
                size: g.n(),
                limit: self.size_limit,
            });
        }
        (self.evaluate)(g)
    }

    /// The Lovász theta number.
    pub fn theta(tol: f64) -> Self {
        SpectrumPoint::new("theta", false, tol, DEFAULT_THETA_LIMIT, move |g| {
            lovasz_theta(g, tol).map(|t| Value::Approx(t.value))
        })
    }

    /// The fractional clique cover number.
    pub fn frac_clique_cover() -> Self {
        SpectrumPoint::new("frac_clique_cover", true, 0.0, MAX_CLIQUE_COVER_LIMIT, |g| {
            let limit = g.n().max(DEFAULT_MAXIMAL_CLIQUE_LIMIT);
            fractional_clique_cover(g, limit).map(Value::Exact)
        })
    }

    /// The fractional Haemers bound over GF(p), using the largest blow-up
    /// that stays within the exhaustive-search limit.
    pub fn frac_haemers(p: u8) -> Self {
        let name = format!("frac_haemers_gf{p}");
        SpectrumPoint::new(name, true, 0.0, MAX_HAEMERS_VERTICES, move |g| {
            let d_max = (MAX_HAEMERS_VERTICES / g.n().max(1)).max(1);
            fractional_haemers(g, p, d_max).map(|f| f.value)
        })
    }

    /// The independence number. Not a spectrum point; it fails
    /// multiplicativity and serves as a negative control.
    pub fn independence() -> Self {
        SpectrumPoint::new("alpha", true, 0.0, 64, |g| {
            independence_number(g, 64).map(|s| Value::integer(s.size))
        })
    }

    /// The clique cover number. Not a spectrum point either.
    pub fn clique_cover() -> Self {
        SpectrumPoint::new("clique_cover", true, 0.0, MAX_CLIQUE_COVER_LIMIT, |g| {
            clique_cover_number(g, MAX_CLIQUE_COVER_LIMIT).map(|c| Value::integer(c.number))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Axiom {
    Monotone,
    Additive,
    Multiplicative,
    Normalized,
    /// `K̄_n <= K̄_m` iff `n <= m`.
    Naturals,
    Transitive,
    SumCompatible,
    ProductCompatible,
    Archimedean,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub axiom: Axiom,
    /// The graphs involved, in graph6.
    pub graphs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excess: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A check that could not be decided: an evaluator error or an exhausted
/// search budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inconclusive {
    pub trial: usize,
    pub check: String,
    pub graphs: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    pub point_name: String,
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub violations: Vec<Violation>,
    pub inconclusive: Vec<Inconclusive>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn sort(&mut self) {
        self.violations.sort_by(|a, b| (a.trial, a.axiom).cmp(&(b.trial, b.axiom)));
        self.inconclusive.sort_by_key(|i| i.trial);
    }
}

pub(crate) fn g6(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.n()))
}

/// Findings of one trial.
#[derive(Clone, Debug, Default)]
pub struct PairFindings {
    pub violations: Vec<Violation>,
    pub inconclusive: Vec<Inconclusive>,
}

/// How far `lhs` exceeds what the axiom allows, or `None` when it holds.
fn excess(point: &SpectrumPoint, axiom: Axiom, lhs: &Value, rhs: &Value) -> Option<f64> {
    let diff = lhs.to_f64() - rhs.to_f64();
    if point.exact {
        let holds = match axiom {
            Axiom::Monotone => lhs.compare(rhs) != Some(std::cmp::Ordering::Greater),
            _ => lhs.compare(rhs) == Some(std::cmp::Ordering::Equal),
        };
        return (!holds).then_some(if axiom == Axiom::Monotone { diff } else { diff.abs() });
    }
    let slack = 10.0 * point.tolerance;
    let allowed = match axiom {
        Axiom::Multiplicative => slack * rhs.to_f64().abs().max(1.0),
        _ => slack,
    };
    let off = if axiom == Axiom::Monotone { diff } else { diff.abs() };
    (off > allowed || off.is_nan()).then_some(off - allowed)
}

/// Checks additivity, multiplicativity and monotonicity of `point` on one
/// pair. Monotonicity is checked on the comparable pairs `g <= g ⊔ h` and
/// `g ≅ g ⊠ K_1 <= g ⊠ h` (the latter needs `h` nonempty).
pub fn audit_pair(point: &SpectrumPoint, g: &Graph, h: &Graph, trial: usize) -> PairFindings {
    let mut out = PairFindings::default();
    let names = vec![g6(g), g6(h)];
    let sum = g.disjoint_union(h);
    let product = g.strong_product(h);
    let evaluated = [g, h, &sum, &product].map(|x| point.evaluate(x));
    let [vg, vh, vsum, vprod] = match evaluated {
        [Ok(a), Ok(b), Ok(c), Ok(d)] => [a, b, c, d],
        failed => {
            let reason = failed
                .into_iter()
                .find_map(|r| r.err())
                .map(|e| e.to_string())
                .unwrap_or_default();
            out.inconclusive.push(Inconclusive {
                trial,
                check: "evaluate".into(),
                graphs: names,
                reason,
            });
            return out;
        }
    };
    let mut check = |axiom: Axiom, lhs: Value, rhs: Value| {
        if let Some(e) = excess(point, axiom, &lhs, &rhs) {
            out.violations.push(Violation {
                trial,
                axiom,
                graphs: names.clone(),
                lhs: Some(lhs),
                rhs: Some(rhs),
                excess: Some(e),
                detail: None,
            });
        }
    };
    check(Axiom::Additive, vsum.clone(), vg.add(&vh));
    check(Axiom::Multiplicative, vprod.clone(), vg.mul(&vh));
    check(Axiom::Monotone, vg.clone(), vsum);
    if h.n() > 0 {
        check(Axiom::Monotone, vg, vprod);
    }
    out
}

/// Checks `point(K_1) = 1`.
pub fn audit_normalization(point: &SpectrumPoint) -> PairFindings {
    let mut out = PairFindings::default();
    let k1 = Graph::complete(1);
    match point.evaluate(&k1) {
        Ok(v) => {
            if let Some(e) = excess(point, Axiom::Normalized, &v, &Value::integer(1)) {
                out.violations.push(Violation {
                    trial: 0,
                    axiom: Axiom::Normalized,
                    graphs: vec![g6(&k1)],
                    lhs: Some(v),
                    rhs: Some(Value::integer(1)),
                    excess: Some(e),
                    detail: None,
                });
            }
        }
        Err(e) => out.inconclusive.push(Inconclusive {
            trial: 0,
            check: "evaluate".into(),
            graphs: vec![g6(&k1)],
            reason: e.to_string(),
        }),
    }
    out
}

/// Runs the four spectrum axioms on `trials` seeded random pairs with at
/// most `max_n` vertices each. Trial `t` draws `g` then `h` from its own
/// generator (see [`random`]). Normalization is checked once, as trial 0.
pub fn audit_spectrum_point(
    point: &SpectrumPoint,
    seed: u64,
    trials: usize,
    max_n: usize,
) -> Result<AuditReport> {
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    if max_n * max_n > point.size_limit {
        return Err(Error::SizeLimit {
            what: "audit products (max_n squared)",
            size: max_n * max_n,
            limit: point.size_limit,
        });
    }
    let findings: Vec<PairFindings> = random::trial_rngs(seed, trials)
        .into_par_iter()
        .enumerate()
        .map(|(t, mut rng)| {
            let g = random::random_graph(&mut rng, max_n);
            let h = random::random_graph(&mut rng, max_n);
            audit_pair(point, &g, &h, t)
        })
        .collect();
    let mut report = AuditReport {
        point_name: point.name.clone(),
        seed,
        trials,
        max_n,
        violations: Vec::new(),
        inconclusive: Vec::new(),
    };
    for f in std::iter::once(audit_normalization(point)).chain(findings) {
        report.violations.extend(f.violations);
        report.inconclusive.extend(f.inconclusive);
    }
    report.sort();
    Ok(report)
}
