//! Sufficient-condition checks for critical coverage.
//!
//! For integer parameters (a, b, d, n) with 1 <= a, 0 <= d, 0 <= n and
//! b - d >= max(a, 2), a graph G on p vertices whose degree windows satisfy
//! a <= g(x) <= f(x) - d <= b - d is fractional (g,f,n)-critical covered
//! whenever all three of the following hold:
//!
//! * order:        p  >= [(a+b-1)(a+b-2) + (a+d)n + 1] / (a+d)
//! * min degree:   δ(G) >= [(b-d-1)p + (a+d)n + a + b + 1] / (a+b-1)
//! * independence: δ(G) >  [(b-d-2)p + 2α(G) + (a+d)n + 1] / (a+b-2)
//!
//! Everything is evaluated in exact rational arithmetic; each condition is
//! reported with its two sides and its signed margin, so callers can see not
//! just whether a condition holds but by how much. The two extremal builders
//! in [`crate::extremal`] produce graphs whose margins are exactly -1/(a+b-1)
//! and 0, demonstrating that neither degree-type condition can be relaxed.

use serde::{Deserialize, Serialize};

use crate::bounds::DegreeBounds;
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::graph::Graph;

/// Validated parameter tuple (a, b, d, n).
///
/// Invariants enforced at construction: `a >= 1`, `d >= 0`, `n >= 0` and
/// `b - d >= max(a, 2)`, which also forces `b >= a` and `b >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    a: i64,
    b: i64,
    d: i64,
    n: i64,
}

impl Params {
    pub fn new(a: i64, b: i64, d: i64, n: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::input(format!(
                "parameter a must be at least 1, got {a}"
            )));
        }
        if d < 0 {
            return Err(Error::input(format!(
                "parameter d must be non-negative, got {d}"
            )));
        }
        if n < 0 {
            return Err(Error::input(format!(
                "parameter n must be non-negative, got {n}"
            )));
        }
        let floor = a.max(2);
        if b - d < floor {
            return Err(Error::input(format!(
                "b - d must be at least max(a, 2) = {floor}, got {}",
                b - d
            )));
        }
        Ok(Params { a, b, d, n })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: i64,
            b: i64,
            d: i64,
            n: i64,
        }
        let raw = Raw::deserialize(de)?;
        Params::new(raw.a, raw.b, raw.d, raw.n).map_err(serde::de::Error::custom)
    }
}

/// One threshold inequality, fully evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    /// Whether the inequality is strict (`lhs > rhs`) or weak (`lhs >= rhs`).
    pub strict: bool,
    pub lhs: Frac,
    pub rhs: Frac,
    /// Signed slack `lhs - rhs`; negative means the condition fails
    /// (zero also fails when the inequality is strict).
    pub margin: Frac,
}

impl ConditionReport {
    fn evaluate(lhs: i64, rhs_num: i64, rhs_den: i64, strict: bool) -> Self {
        let margin = Frac::new(lhs * rhs_den - rhs_num, rhs_den);
        let holds = if strict {
            margin.is_positive()
        } else {
            margin.is_non_negative()
        };
        ConditionReport {
            holds,
            strict,
            lhs: Frac::from_int(lhs),
            rhs: Frac::new(rhs_num, rhs_den),
            margin,
        }
    }
}

/// The three threshold inequalities for given graph invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub order: ConditionReport,
    pub min_degree: ConditionReport,
    pub independence: ConditionReport,
    pub all_hold: bool,
}

/// Evaluates the three thresholds for a graph with `p` vertices, minimum
/// degree `min_degree` and independence number `independence_number`.
///
/// Pure integer/rational arithmetic; the caller supplies the invariants so
/// this stays usable for parameter exploration without building graphs.
pub fn evaluate_thresholds(
    p: i64,
    min_degree: i64,
    independence_number: i64,
    params: &Params,
) -> ThresholdReport {
    let (a, b, d, n) = (params.a, params.b, params.d, params.n);
    let order =
        ConditionReport::evaluate(p, (a + b - 1) * (a + b - 2) + (a + d) * n + 1, a + d, false);
    let min_degree = ConditionReport::evaluate(
        min_degree,
        (b - d - 1) * p + (a + d) * n + a + b + 1,
        a + b - 1,
        false,
    );
    let independence = ConditionReport::evaluate(
        min_degree.lhs.num(),
        (b - d - 2) * p + 2 * independence_number + (a + d) * n + 1,
        a + b - 2,
        true,
    );
    let all_hold = order.holds && min_degree.holds && independence.holds;
    ThresholdReport {
        order,
        min_degree,
        independence,
        all_hold,
    }
}

/// Full hypothesis report for a concrete graph and degree bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesReport {
    pub params: Params,
    pub vertex_count: usize,
    pub min_degree: i64,
    pub independence_number: usize,
    /// Whether every vertex satisfies a <= g(x) <= f(x) - d <= b - d.
    pub bounds_ok: bool,
    pub bounds_issue: Option<String>,
    pub thresholds: ThresholdReport,
    /// True when the degree windows fit and all three thresholds hold, i.e.
    /// the graph is guaranteed fractional (g,f,n)-critical covered.
    pub satisfied: bool,
}

/// Checks every hypothesis against a concrete graph: the degree-window
/// sandwich and the three threshold inequalities. `independence_limit` caps
/// the exact independence-number solve (see
/// [`Graph::independence_number_with_limit`]).
pub fn check_hypotheses(
    graph: &Graph,
    bounds: &DegreeBounds,
    params: &Params,
    independence_limit: usize,
) -> Result<HypothesesReport> {
    bounds.validate_for(graph)?;
    let p = graph.vertex_count();
    let min_degree = graph.min_degree()? as i64;
    let independence_number = graph.independence_number_with_limit(independence_limit)?;

    let mut bounds_issue = None;
    for v in 0..p {
        let (g, f) = (bounds.g(v), bounds.f(v));
        if g < params.a {
            bounds_issue = Some(format!("g({v}) = {g} is below a = {}", params.a));
        } else if f - g < params.d {
            bounds_issue = Some(format!(
                "f({v}) - g({v}) = {} is below d = {}",
                f - g,
                params.d
            ));
        } else if f > params.b {
            bounds_issue = Some(format!("f({v}) = {f} exceeds b = {}", params.b));
        }
        if bounds_issue.is_some() {
            break;
        }
    }
    let bounds_ok = bounds_issue.is_none();

    let thresholds = evaluate_thresholds(p as i64, min_degree, independence_number as i64, params);
    let satisfied = bounds_ok && thresholds.all_hold;
    Ok(HypothesesReport {
        params: *params,
        vertex_count: p,
        min_degree,
        independence_number,
        bounds_ok,
        bounds_issue,
        thresholds,
        satisfied,
    })
}

/// Restrictions for the three specialized corollary forms:
/// form 1 fixes d = 0, form 2 fixes d = 0 with g = f pointwise,
/// form 3 fixes n = 0.
pub fn check_corollary_form(form: u8, params: &Params, bounds: &DegreeBounds) -> Result<()> {
    match form {
        1 => {
            if params.d != 0 {
                return Err(Error::input(format!(
                    "corollary form 1 requires d = 0, got {}",
                    params.d
                )));
            }
        }
        2 => {
            if params.d != 0 {
                return Err(Error::input(format!(
                    "corollary form 2 requires d = 0, got {}",
                    params.d
                )));
            }
            if bounds.g_values() != bounds.f_values() {
                return Err(Error::input(
                    "corollary form 2 requires g = f at every vertex",
                ));
            }
        }
        3 => {
            if params.n != 0 {
                return Err(Error::input(format!(
                    "corollary form 3 requires n = 0, got {}",
                    params.n
                )));
            }
        }
        other => {
            return Err(Error::input(format!(
                "unknown corollary form {other}; expected 1, 2 or 3"
            )));
        }
    }
    Ok(())
}
