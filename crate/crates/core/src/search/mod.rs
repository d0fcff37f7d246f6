//! Derivative-free minimization of `‖P'‖/‖P‖` over the restricted-zero
//! classes and over the incomplete classes, and sweeps over `(n, k)` grids.
//!
//! Every result is an upper estimate of the true infimum: the optimizer only
//! visits feasible points (the parametrization is onto the class), and the
//! best point is re-verified at tight tolerance before it is reported.

mod simplex;

pub use simplex::{nelder_mead, SimplexOptions, SimplexOutcome};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundBracket, BoundSource, Upper};
use crate::classes::{self, embed, is_member, params_for, rng_for, ClassSpec, IncompleteSpec};
use crate::constructions;
use crate::error::{invalid, Error, Result};
use crate::polynomial::{Complex, Interval, Polynomial};
use crate::supnorm::{self, CertifiedValue};

/// Largest `n` the searches accept.
pub const SEARCH_DEGREE_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Objective evaluations per restart.
    pub budget: usize,
    pub restarts: usize,
    pub seed: u64,
    pub simplex_scale: f64,
    /// Relative accuracy of the sup-norms inside the objective.
    pub tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: 20_000,
            restarts: 32,
            seed: 0,
            simplex_scale: 0.3,
            tol: 1e-10,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 || self.restarts == 0 {
            return Err(invalid("budget and restarts must be at least 1"));
        }
        if !(self.simplex_scale > 0.0 && self.simplex_scale.is_finite()) {
            return Err(invalid("simplex scale must be positive"));
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(invalid("tolerance must lie in (0, 1)"));
        }
        Ok(())
    }

    fn simplex(&self) -> SimplexOptions {
        SimplexOptions {
            scale: self.simplex_scale,
            budget: self.budget,
            ..SimplexOptions::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best: Polynomial,
    /// The objective at `best`, recomputed at tight tolerance.
    pub ratio: CertifiedValue,
    /// The value the optimizer saw for `best`.
    pub cached_ratio: f64,
    pub bracket: BoundBracket,
    pub within_bracket: bool,
    /// `(cumulative evaluation index, best so far)`, restarts concatenated in
    /// order.
    pub trace: Vec<(usize, f64)>,
    pub evals: usize,
    pub restarts_used: usize,
    /// Parameters of the best point.
    pub params: Vec<f64>,
}

fn within(bracket: &BoundBracket, ratio: CertifiedValue) -> bool {
    let lower_ok = bracket.lower - ratio.err <= ratio.value;
    let upper_ok = match bracket.upper {
        Upper::Finite(u) => ratio.value <= u + ratio.err,
        Upper::Unbounded => true,
    };
    lower_ok && upper_ok
}

/// The explicit lower bound for `f(n, k)`: `A√n` for `k = 0`, the pinned-zero
/// bound for `k ≥ 1` with a pinned zero, and nothing (zero) otherwise.
pub fn lower_bound_bracket(spec: &ClassSpec) -> Result<BoundBracket> {
    if spec.k == 0 || spec.pin {
        bounds::thm21_bracket(spec.n, spec.k, None, None)
    } else {
        Ok(BoundBracket::lower_only(0.0, BoundSource::Thm21))
    }
}

struct RestartOutcome {
    ratio: f64,
    params: Vec<f64>,
    spec: ClassSpec,
    evals: usize,
    trace: Vec<(usize, f64)>,
}

fn ratio_objective(spec: &ClassSpec, tol: f64) -> impl Fn(&[f64]) -> f64 + '_ {
    move |x: &[f64]| match embed(x, spec) {
        Ok(p) => match bounds::turan_ratio_rtol(&p, Interval::unit(), tol) {
            Ok(r) => r.value,
            Err(_) => f64::INFINITY,
        },
        Err(_) => f64::INFINITY,
    }
}

/// Degrees a restart may work in: every `d ≤ n` with `d ≥ n − k` (and
/// `d ≥ 1`), ordered `n`, the smallest, then downwards from `n − 1`.
fn degree_schedule(spec: &ClassSpec) -> Vec<usize> {
    let low = spec.constrained().max(1);
    let mut out = vec![spec.n, low];
    out.extend((low..spec.n).rev());
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|d| seen.insert(*d));
    out
}

/// The monic member of `F(n, k)` of degree `n − k` (or 1) with all its zeros
/// at `±1`; it has a zero on `[-1, 1]`, so it is feasible with or without pin.
pub fn default_seed(spec: &ClassSpec) -> Polynomial {
    let d = spec.constrained().max(1);
    let zeros: Vec<f64> = (0..d).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    Polynomial::from_real_zeros(&zeros)
}

/// Minimizes `‖P'‖/‖P‖` on `[-1, 1]` over `F(n, k)`.
///
/// ```
/// use turan_lab::classes::ClassSpec;
/// use turan_lab::search::{minimize_ratio, SearchConfig};
/// let cfg = SearchConfig { budget: 500, restarts: 2, ..SearchConfig::default() };
/// let result = minimize_ratio(&ClassSpec::new(1, 0, true)?, &cfg)?;
/// assert!((result.ratio.value - 0.5).abs() < 1e-9);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn minimize_ratio(spec: &ClassSpec, cfg: &SearchConfig) -> Result<SearchResult> {
    minimize_ratio_seeded(spec, cfg, &[default_seed(spec)])
}

/// [`minimize_ratio`] with explicit warm starts: restart `i` starts from
/// `seeds[i]` when there is one (seeds must be members of the class).
pub fn minimize_ratio_seeded(spec: &ClassSpec, cfg: &SearchConfig, seeds: &[Polynomial]) -> Result<SearchResult> {
    spec.validate()?;
    cfg.validate()?;
    if spec.n == 0 {
        return Err(invalid("the search needs n ≥ 1"));
    }
    if spec.n > SEARCH_DEGREE_CAP {
        return Err(Error::UnsupportedDegree {
            degree: spec.n,
            cap: SEARCH_DEGREE_CAP,
        });
    }
    let bracket = lower_bound_bracket(spec)?;
    if spec.k == spec.n && !spec.pin {
        // Nonzero constants belong to the class and have ratio 0.
        let best = Polynomial::constant(Complex::new(1.0, 0.0));
        let ratio = CertifiedValue::exact(0.0, supnorm::Method::CriticalPoints);
        return Ok(SearchResult {
            within_bracket: within(&bracket, ratio),
            best,
            ratio,
            cached_ratio: 0.0,
            bracket,
            trace: vec![(1, 0.0)],
            evals: 1,
            restarts_used: 1,
            params: Vec::new(),
        });
    }

    let schedule = degree_schedule(spec);
    let mut starts: Vec<(ClassSpec, Vec<f64>)> = Vec::with_capacity(cfg.restarts);
    for r in 0..cfg.restarts {
        let seeded = seeds.get(r).and_then(|p| {
            let d = p.degree();
            if d < spec.constrained() || d > spec.n || d == 0 {
                return None;
            }
            let sub = ClassSpec {
                n: d,
                k: d - spec.constrained(),
                ..*spec
            };
            params_for(p, &sub).map(|x| (sub, x))
        });
        let start = match seeded {
            Some(s) => s,
            None => {
                let d = schedule[r % schedule.len()];
                let sub = ClassSpec {
                    n: d,
                    k: d - spec.constrained(),
                    ..*spec
                };
                let mut rng = rng_for(cfg.seed, r as u64);
                let p = classes::sample_with(&sub, &mut rng)?;
                let x = params_for(&p, &sub).unwrap_or_else(|| {
                    (0..sub.dimension()).map(|_| rng.gen_range(-1.0..1.0)).collect()
                });
                (sub, x)
            }
        };
        starts.push(start);
    }

    let options = cfg.simplex();
    let outcomes: Vec<RestartOutcome> = starts
        .into_par_iter()
        .map(|(sub, x0)| {
            let out = nelder_mead(ratio_objective(&sub, cfg.tol), &x0, options);
            RestartOutcome {
                ratio: out.fx,
                params: out.x,
                spec: sub,
                evals: out.evals,
                trace: out.trace,
            }
        })
        .collect();

    let (trace, evals) = merge_traces(outcomes.iter().map(|o| (o.evals, &o.trace)));
    let winner = outcomes
        .iter()
        .filter(|o| o.ratio.is_finite())
        .min_by(|a, b| {
            a.ratio
                .total_cmp(&b.ratio)
                .then(norm(&a.params).total_cmp(&norm(&b.params)))
        })
        .ok_or_else(|| Error::SearchFailure(format!("no feasible evaluation in {evals} evaluations")))?;

    let best = embed(&winner.params, &winner.spec)?;
    debug_assert!(is_member(&best, spec).member);
    let ratio = bounds::turan_ratio(&best, Interval::unit())?;
    Ok(SearchResult {
        within_bracket: within(&bracket, ratio),
        best,
        ratio,
        cached_ratio: winner.ratio,
        bracket,
        trace,
        evals,
        restarts_used: outcomes.len(),
        params: winner.params.clone(),
    })
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn merge_traces<'a>(runs: impl Iterator<Item = (usize, &'a Vec<(usize, f64)>)>) -> (Vec<(usize, f64)>, usize) {
    let mut merged: Vec<(usize, f64)> = Vec::new();
    let mut offset = 0;
    let mut best = f64::INFINITY;
    for (evals, trace) in runs {
        for &(i, v) in trace {
            if v < best {
                best = v;
                merged.push((offset + i, v));
            }
        }
        offset += evals;
    }
    (merged, offset)
}

/// The denominator of the incomplete-polynomial objective `‖Q'‖_{[0,1]}/D(Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IncompleteObjective {
    /// `D = |Q(1)|`
    PointValue,
    /// `D = ∫₀¹ |Q'|`
    TotalVariation,
    /// `D = ‖Q‖_{[0,1]}`
    SupNorm,
}

/// `Q = x^{n−k+1}·R` with `R(x) = 1 + Σⱼ pⱼ(xʲ − 1)`, `j = 1..k−1`, so that
/// `R(1) = 1` and the parameters range over every `R` of degree `≤ k − 1` not
/// vanishing at 1, up to scale.
pub fn incomplete_from_params(n: usize, k: usize, params: &[f64]) -> Result<Polynomial> {
    if params.len() + 1 != k {
        return Err(invalid(format!("expected {} parameters, got {}", k - 1, params.len())));
    }
    let shift = n - k + 1;
    let mut coeffs = vec![0.0; n + 1];
    coeffs[shift] = 1.0 - params.iter().sum::<f64>();
    for (j, p) in params.iter().enumerate() {
        coeffs[shift + j + 1] = *p;
    }
    let q = Polynomial::from_real_coefficients(&coeffs)?;
    if q.is_zero() {
        return Err(invalid("parameters give the zero polynomial"));
    }
    Ok(q)
}

/// `‖Q'‖_{[0,1]} / D(Q)` for the chosen denominator.
pub fn incomplete_ratio(q: &Polynomial, objective: IncompleteObjective) -> Result<CertifiedValue> {
    let unit = Interval::unit_positive();
    let num = if q.degree() == 0 {
        CertifiedValue::exact(0.0, supnorm::Method::CriticalPoints)
    } else {
        supnorm::sup_norm(&q.derivative()?, unit, 1e-12 * q.leading().norm().max(1e-300))?
    };
    let den = match objective {
        IncompleteObjective::PointValue => {
            CertifiedValue::exact(q.evaluate_real(1.0).norm(), supnorm::Method::CriticalPoints)
        }
        IncompleteObjective::TotalVariation => supnorm::total_variation(q, unit)?,
        IncompleteObjective::SupNorm => supnorm::sup_norm(q, unit, 1e-13 * q.evaluate_real(1.0).norm().max(1e-300))?,
    };
    if den.value == 0.0 {
        return Err(invalid("denominator vanishes"));
    }
    Ok(bounds::quotient(num, den))
}

/// Minimizes `‖Q'‖_{[0,1]}/D(Q)` over `Q ∈ P(n−k, k)` (degree `≤ n`, at least
/// `n − k + 1` zeros at the origin), for `1 ≤ k ≤ n − 1`.
///
/// For `k = 1` the class is `{c·xⁿ}` and the value is exact.
pub fn minimize_incomplete_ratio(
    n: usize,
    k: usize,
    objective: IncompleteObjective,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    cfg.validate()?;
    if !(1 <= k && k < n) {
        return Err(invalid(format!("need 1 ≤ k ≤ n − 1, got n = {n}, k = {k}")));
    }
    if n > SEARCH_DEGREE_CAP {
        return Err(Error::UnsupportedDegree {
            degree: n,
            cap: SEARCH_DEGREE_CAP,
        });
    }
    let (lower, upper) = bounds::lemma34_bracket(n, k, None)?;
    let bracket = BoundBracket {
        lower: lower.lower,
        upper: upper.upper,
        source: BoundSource::Lemma34Lower,
    };
    let dim = k - 1;
    let objective_fn = |x: &[f64]| -> f64 {
        incomplete_from_params(n, k, x)
            .and_then(|q| incomplete_ratio(&q, objective))
            .map(|r| r.value)
            .unwrap_or(f64::INFINITY)
    };
    let starts: Vec<Vec<f64>> = (0..cfg.restarts.max(1))
        .map(|r| {
            if r == 0 {
                vec![0.0; dim]
            } else {
                let mut rng = rng_for(cfg.seed, r as u64);
                (0..dim).map(|_| rng.gen_range(-2.0..2.0)).collect()
            }
        })
        .collect();
    let restarts = if dim == 0 { 1 } else { starts.len() };
    let options = cfg.simplex();
    let outcomes: Vec<SimplexOutcome> = starts[..restarts]
        .par_iter()
        .map(|x0| nelder_mead(objective_fn, x0, options))
        .collect();
    let (trace, evals) = merge_traces(outcomes.iter().map(|o| (o.evals, &o.trace)));
    let winner = outcomes
        .iter()
        .filter(|o| o.fx.is_finite())
        .min_by(|a, b| a.fx.total_cmp(&b.fx).then(norm(&a.x).total_cmp(&norm(&b.x))))
        .ok_or_else(|| Error::SearchFailure(format!("no feasible evaluation in {evals} evaluations")))?;
    let best = incomplete_from_params(n, k, &winner.x)?;
    debug_assert!(classes::incomplete_member(&best, &IncompleteSpec::new(n - k, k)?));
    let ratio = incomplete_ratio(&best, objective)?;
    Ok(SearchResult {
        within_bracket: within(&bracket, ratio),
        best,
        ratio,
        cached_ratio: winner.fx,
        bracket,
        trace,
        evals,
        restarts_used: restarts,
        params: winner.x.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub result: Option<SearchResult>,
    pub error: Option<String>,
    pub lower_bound: f64,
    /// Smallest ratio among the explicit feasible constructions tried.
    pub upper_construction: f64,
    pub within_bracket: bool,
}

impl SweepRow {
    pub fn csv(&self) -> String {
        let (ratio, err, restarts, evals) = match &self.result {
            Some(r) => (r.ratio.value, r.ratio.err, r.restarts_used, r.evals),
            None => (f64::NAN, f64::NAN, 0, 0),
        };
        format!(
            "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{},{},{}",
            self.n, self.k, ratio, err, self.lower_bound, self.upper_construction, self.within_bracket, restarts, evals
        )
    }
}

pub const SWEEP_CSV_HEADER: &str =
    "n,k,ratio,err,lower_bound,upper_construction,within_bracket,restarts_used,evals";

/// Direction of a sequence of estimates along one axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Monotonicity {
    /// `"n"` (k fixed) or `"k"` (n fixed).
    pub axis: String,
    pub fixed: usize,
    pub values: Vec<(usize, f64)>,
    pub nondecreasing: bool,
    pub nonincreasing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub rows: Vec<SweepRow>,
    /// Least-squares slope of `log f̂` against `log(n/(k+1))`, when at least
    /// two distinct abscissae are available.
    pub slope: Option<f64>,
    pub monotonicity: Vec<Monotonicity>,
}

/// Least-squares slope of `y` on `x`.
pub fn regression_slope(points: &[(f64, f64)]) -> Option<f64> {
    let n = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Feasible explicit members of `F(n, k)` with their ratios, best first. They
/// serve both as warm starts and as the reported upper estimate: the `±1`
/// family and, when `n` and `k` are even with `1 ≤ k/2 ≤ n/4`, the
/// incomplete-polynomial construction.
pub fn constructions_for(spec: &ClassSpec, cfg: &SearchConfig) -> Vec<(Polynomial, f64)> {
    let mut out = vec![default_seed(spec)];
    if spec.k == 0 {
        let m = spec.n / 2;
        let family = if spec.n.is_multiple_of(2) {
            constructions::ClassicalFamily::TuranEven
        } else {
            constructions::ClassicalFamily::TuranOdd
        };
        if m >= 1 {
            if let Ok(r) = constructions::classical_family(family, m) {
                out.push(r.polynomial);
            }
        }
    }
    if spec.n.is_multiple_of(2) && spec.k.is_multiple_of(2) && spec.k >= 2 && 2 * spec.k <= spec.n {
        if let Ok(r) = constructions::thm24_construct(spec.n / 2, spec.k / 2, cfg) {
            out.push(r.polynomial);
        }
    }
    let mut rated: Vec<(Polynomial, f64)> = out
        .into_iter()
        .filter(|p| is_member(p, spec).member)
        .filter_map(|p| {
            let r = bounds::turan_ratio(&p, Interval::unit()).ok()?;
            Some((p, r.value))
        })
        .collect();
    rated.sort_by(|a, b| a.1.total_cmp(&b.1));
    rated
}

/// Runs [`minimize_ratio`] on every admissible `(n, k)` (rows sorted by
/// `(n, k)`), seeding each cell with its explicit constructions. A failed
/// cell is recorded and the sweep continues.
pub fn frontier_sweep(n_values: &[usize], k_values: &[usize], pin: bool, cfg: &SearchConfig) -> Result<Sweep> {
    cfg.validate()?;
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for &n in n_values {
        for &k in k_values {
            if k > n {
                return Err(invalid(format!("inadmissible cell n = {n}, k = {k}")));
            }
            cells.push((n, k));
        }
    }
    cells.sort();
    cells.dedup();

    let mut rows = Vec::with_capacity(cells.len());
    for (n, k) in cells {
        let spec = ClassSpec::new(n, k, pin)?;
        let lower_bound = lower_bound_bracket(&spec)?.lower;
        let rated = constructions_for(&spec, cfg);
        let upper_construction = rated.first().map_or(f64::INFINITY, |c| c.1);
        let seeds: Vec<Polynomial> = rated.into_iter().map(|c| c.0).collect();
        let row = match minimize_ratio_seeded(&spec, cfg, &seeds) {
            Ok(result) => {
                let r = result.ratio;
                SweepRow {
                    n,
                    k,
                    within_bracket: lower_bound - r.err <= r.value && r.value <= upper_construction + r.err,
                    result: Some(result),
                    error: None,
                    lower_bound,
                    upper_construction,
                }
            }
            Err(e) => SweepRow {
                n,
                k,
                result: None,
                error: Some(e.to_string()),
                lower_bound,
                upper_construction,
                within_bracket: false,
            },
        };
        rows.push(row);
    }

    let estimates: Vec<(usize, usize, f64)> = rows
        .iter()
        .filter_map(|r| r.result.as_ref().map(|s| (r.n, r.k, s.ratio.value)))
        .collect();
    let points: Vec<(f64, f64)> = estimates
        .iter()
        .filter(|e| e.2 > 0.0)
        .map(|&(n, k, v)| ((n as f64 / (k + 1) as f64).ln(), v.ln()))
        .collect();
    let slope = regression_slope(&points);

    let mut monotonicity = Vec::new();
    let mut ks: Vec<usize> = estimates.iter().map(|e| e.1).collect();
    ks.sort();
    ks.dedup();
    for k in ks {
        let values: Vec<(usize, f64)> = estimates.iter().filter(|e| e.1 == k).map(|e| (e.0, e.2)).collect();
        monotonicity.push(direction("n", k, values));
    }
    let mut ns: Vec<usize> = estimates.iter().map(|e| e.0).collect();
    ns.sort();
    ns.dedup();
    for n in ns {
        let values: Vec<(usize, f64)> = estimates.iter().filter(|e| e.0 == n).map(|e| (e.1, e.2)).collect();
        monotonicity.push(direction("k", n, values));
    }
    Ok(Sweep {
        rows,
        slope,
        monotonicity,
    })
}

fn direction(axis: &str, fixed: usize, values: Vec<(usize, f64)>) -> Monotonicity {
    Monotonicity {
        axis: axis.to_string(),
        fixed,
        nondecreasing: values.windows(2).all(|w| w[1].1 >= w[0].1),
        nonincreasing: values.windows(2).all(|w| w[1].1 <= w[0].1),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SearchConfig {
        SearchConfig {
            budget: 1500,
            restarts: 4,
            seed: 7,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn degree_one_pinned_is_half() {
        let cfg = SearchConfig {
            budget: 5000,
            restarts: 8,
            seed: 7,
            ..SearchConfig::default()
        };
        let r = minimize_ratio(&ClassSpec::new(1, 0, true).unwrap(), &cfg).unwrap();
        assert!((r.ratio.value - 0.5).abs() < 1e-6);
        let z = r.best.zeros()[0];
        assert!((z.re.abs() - 1.0).abs() < 1e-9 && z.im.abs() < 1e-9);
        assert!(r.within_bracket);
    }

    #[test]
    fn full_slack_pinned_reaches_half() {
        for n in [1, 3, 6] {
            let r = minimize_ratio(&ClassSpec::new(n, n, true).unwrap(), &quick()).unwrap();
            assert!((r.ratio.value - 0.5).abs() < 1e-9, "n = {n}: {}", r.ratio.value);
        }
    }

    #[test]
    fn unpinned_full_slack_is_zero() {
        let r = minimize_ratio(&ClassSpec::new(3, 3, false).unwrap(), &quick()).unwrap();
        assert_eq!(r.ratio.value, 0.0);
    }

    #[test]
    fn search_is_deterministic_and_verified() {
        let spec = ClassSpec::new(4, 1, true).unwrap();
        let a = minimize_ratio(&spec, &quick()).unwrap();
        let b = minimize_ratio(&spec, &quick()).unwrap();
        assert_eq!(a, b);
        assert!(is_member(&a.best, &spec).member);
        assert!((a.ratio.value - a.cached_ratio).abs() <= 1e-8 * a.ratio.value);
        assert!(a.trace.windows(2).all(|w| w[0].0 < w[1].0 && w[1].1 < w[0].1));
        assert_eq!(a.trace.last().unwrap().1, a.cached_ratio);
    }

    #[test]
    fn incomplete_closed_forms() {
        for objective in [IncompleteObjective::PointValue, IncompleteObjective::SupNorm, IncompleteObjective::TotalVariation] {
            let r = minimize_incomplete_ratio(2, 1, objective, &quick()).unwrap();
            assert!((r.ratio.value - 2.0).abs() < 1e-12);
            let r = minimize_incomplete_ratio(3, 1, objective, &quick()).unwrap();
            assert!((r.ratio.value - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn incomplete_respects_lower_bound() {
        for (n, k) in [(6, 2), (8, 3), (10, 4)] {
            for objective in [IncompleteObjective::PointValue, IncompleteObjective::TotalVariation] {
                let r = minimize_incomplete_ratio(n, k, objective, &quick()).unwrap();
                assert!(r.ratio.value >= (n - k) as f64 / (12.0 * k as f64) - 1e-9);
                assert!(r.bracket.lower <= r.ratio.value + r.ratio.err);
                let spec = IncompleteSpec::new(n - k, k).unwrap();
                assert!(classes::incomplete_member(&r.best, &spec));
            }
        }
    }

    #[test]
    fn sweep_shapes() {
        let empty = frontier_sweep(&[], &[0], false, &quick()).unwrap();
        assert!(empty.rows.is_empty() && empty.slope.is_none());

        let one = frontier_sweep(&[3], &[1], true, &quick()).unwrap();
        assert_eq!(one.rows.len(), 1);
        let direct = minimize_ratio_seeded(
            &ClassSpec::new(3, 1, true).unwrap(),
            &quick(),
            &constructions_for(&ClassSpec::new(3, 1, true).unwrap(), &quick())
                .into_iter()
                .map(|c| c.0)
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(one.rows[0].result.as_ref().unwrap().ratio, direct.ratio);
        assert!(frontier_sweep(&[2], &[3], false, &quick()).is_err());
    }

    #[test]
    fn regression_slope_examples() {
        let pts: Vec<(f64, f64)> = (1..5).map(|i| (i as f64, 0.5 * i as f64 + 1.0)).collect();
        assert!((regression_slope(&pts).unwrap() - 0.5).abs() < 1e-15);
        assert!(regression_slope(&[(1.0, 2.0)]).is_none());
    }
}
