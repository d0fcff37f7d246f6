//! Level sets of logarithmic derivatives on real intervals, and the decay and
//! localization checks that accompany them.
//!
//! The set `{x : |P'(x)/P(x)| ≤ c}` is the sign set of the real polynomial
//! `G = |P'|² − c²|P|²`, which has no poles. Its boundary points are collected
//! from three independent sources (real roots of the expanded `G`, roots of
//! `G` found by Aberth iteration evaluated through the zeros of `P`, and a
//! uniform sampling grid); each piece between consecutive candidates is then
//! classified by the sign of `|P'/P| − c` at its midpoint, evaluated from the
//! zeros. Spurious candidates only split a piece in two; a missed boundary
//! would need both other sources to miss it.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::classes::{is_member, ClassSpec};
use crate::error::{invalid, precondition, Error, Result};
use crate::polynomial::{Complex, Interval, Polynomial};
use crate::roots;
use crate::supnorm::{self, real_roots, CertifiedValue, Method, ROOT_TOL};

/// Degree cap for the level-set computations: the squared forms have degree
/// `2n`, which must stay within the expansion cap.
pub const LEVELSET_DEGREE_CAP: usize = 30;

/// Constant of the small-log-derivative measure bound.
pub const SMALL_SET_CONSTANT: f64 = 70.0 * E;

/// Constant of the large-log-derivative measure bound (`8√2`).
pub const LARGE_SET_CONSTANT: f64 = 8.0 * std::f64::consts::SQRT_2;

const GRID_KNOTS: usize = 256;

/// Width to which boundary points are bisected.
const BOUNDARY_TOL: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSetReport {
    #[serde(serialize_with = "value_only", deserialize_with = "value_in")]
    pub measure: CertifiedValue,
    pub err: f64,
    pub bound: f64,
    /// `δ` or `α`.
    pub parameter: f64,
    pub satisfied: bool,
    pub intervals: Vec<Interval>,
    /// The interval the set was intersected with.
    #[serde(skip, default)]
    pub ambient: Interval,
}

fn value_only<S: serde::Serializer>(v: &CertifiedValue, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(v.value)
}

fn value_in<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<CertifiedValue, D::Error> {
    let value = f64::deserialize(d)?;
    Ok(CertifiedValue::exact(value, Method::CriticalPoints))
}

impl LevelSetReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// `bound − (measure + err)`; positive when the bound holds with room.
    pub fn margin(&self) -> f64 {
        self.bound - self.measure.value - self.measure.err
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `|P'/P| ≤ c`
    Below,
    /// `|P'/P| ≥ c`
    Above,
}

/// `|Σ 1/(x − zᵢ)|`, infinite on a zero.
fn logderiv_modulus(zeros: &[Complex], x: f64) -> f64 {
    let x = Complex::new(x, 0.0);
    if zeros.contains(&x) {
        return f64::INFINITY;
    }
    zeros.iter().map(|&z| (x - z).inv()).sum::<Complex>().norm()
}

/// The set `{x ∈ ambient : |P'/P| ≤ c}` (or `≥ c`) as a union of intervals,
/// with its certified measure.
pub fn logderiv_level_set(
    p: &Polynomial,
    c: f64,
    ambient: Interval,
    side: Side,
) -> Result<(CertifiedValue, Vec<Interval>)> {
    if !(c >= 0.0 && c.is_finite()) {
        return Err(invalid(format!("level must be finite and nonnegative, got {c}")));
    }
    if p.is_zero() {
        return Err(invalid("level set of the zero polynomial"));
    }
    let n = p.degree();
    if n > LEVELSET_DEGREE_CAP {
        return Err(Error::UnsupportedDegree {
            degree: n,
            cap: LEVELSET_DEGREE_CAP,
        });
    }
    let zeros = p.zeros();
    let inside = |x: f64| {
        let m = logderiv_modulus(zeros, x);
        match side {
            Side::Below => m <= c,
            Side::Above => m >= c,
        }
    };
    let (lo, hi) = (ambient.lo(), ambient.hi());
    if ambient.is_degenerate() {
        let set = if inside(lo) { vec![ambient] } else { Vec::new() };
        return Ok((CertifiedValue::exact(0.0, Method::CriticalPoints), set));
    }

    let mut knots = vec![lo, hi];
    knots.extend((1..GRID_KNOTS).map(|i| lo + ambient.len() * i as f64 / GRID_KNOTS as f64));
    if n > 0 {
        knots.extend(boundary_candidates(p, c, ambient)?);
        // Zeros of P on the interval are where |P'/P| blows up.
        knots.extend(zeros.iter().filter(|z| z.im == 0.0).map(|z| z.re));
    }
    knots.retain(|&x| lo <= x && x <= hi);
    knots.sort_by(f64::total_cmp);
    knots.dedup();

    // Classify pieces, then merge runs of equal class.
    let mut runs: Vec<(f64, f64, bool)> = Vec::new();
    for w in knots.windows(2) {
        let class = inside(0.5 * (w[0] + w[1]));
        match runs.last_mut() {
            Some(last) if last.2 == class => last.1 = w[1],
            _ => runs.push((w[0], w[1], class)),
        }
    }

    // Polish every boundary between runs of different class.
    let mut boundaries = Vec::with_capacity(runs.len());
    let mut widths = Vec::with_capacity(runs.len());
    for pair in runs.windows(2) {
        let (a, b) = (0.5 * (pair[0].0 + pair[0].1), 0.5 * (pair[1].0 + pair[1].1));
        let (x, w) = bisect_class(&inside, a, b, pair[0].2);
        boundaries.push(x);
        widths.push(w);
    }
    let mut intervals = Vec::new();
    let mut measure = 0.0;
    for (i, run) in runs.iter().enumerate() {
        if !run.2 {
            continue;
        }
        let l = if i == 0 { lo } else { boundaries[i - 1] };
        let h = if i + 1 == runs.len() { hi } else { boundaries[i] };
        measure += h - l;
        intervals.push(Interval::new(l, h)?);
    }
    let err = widths.iter().sum::<f64>() + 4.0 * f64::EPSILON * ambient.len() * runs.len() as f64;
    Ok((
        CertifiedValue {
            value: measure,
            err,
            method: Method::CriticalPoints,
        },
        intervals,
    ))
}

/// Bisects between `a` (class `class_a`) and `b` (the other class).
fn bisect_class(inside: &impl Fn(f64) -> bool, a: f64, b: f64, class_a: bool) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    while b - a > BOUNDARY_TOL {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if inside(m) == class_a {
            a = m;
        } else {
            b = m;
        }
    }
    (0.5 * (a + b), b - a)
}

/// Candidate real roots of `G = |P'|² − c²|P|²` in the ambient interval.
fn boundary_candidates(p: &Polynomial, c: f64, ambient: Interval) -> Result<Vec<f64>> {
    let mut out = Vec::new();

    let g = p
        .derivative()?
        .modulus_square_on_reals()?
        .sub(&p.modulus_square_on_reals()?.scale(c * c));
    if !g.is_zero() {
        out.extend(real_roots(&g, ambient, ROOT_TOL)?.roots);
    }

    // Aberth on G continued analytically: G = P·P̄·(L·L̄ − c²), where
    // L = Σ 1/(x − zᵢ) and L̄ uses the conjugate zeros.
    if c > 0.0 {
        let zeros = p.zeros().to_vec();
        let conj: Vec<Complex> = zeros.iter().map(|z| z.conj()).collect();
        let newton = |x: Complex| -> Complex {
            let (mut l, mut lb, mut dl, mut dlb) = (Complex::default(), Complex::default(), Complex::default(), Complex::default());
            for (z, w) in zeros.iter().zip(&conj) {
                let (u, v) = ((x - z).inv(), (x - w).inv());
                l += u;
                lb += v;
                dl -= u * u;
                dlb -= v * v;
            }
            let g = l * lb - c * c;
            if g == Complex::default() {
                return Complex::default();
            }
            let log_dg = l + lb + (dl * lb + l * dlb) / g;
            log_dg.inv()
        };
        let radius = zeros.iter().map(|z| z.norm()).fold(1.0, f64::max) + p.degree() as f64 / c;
        let center: Complex = zeros.iter().sum::<Complex>() / zeros.len() as f64;
        let start = roots::circle_start(2 * p.degree(), center, radius);
        let found = roots::aberth(start, radius, newton);
        let reach = 1e-6 * ambient.len();
        out.extend(found.roots.iter().filter(|r| r.im.abs() <= reach).map(|r| r.re));
    }
    Ok(out)
}

/// `{x ∈ ambient : |Q'/Q| ≤ nδ}` with `n = deg Q`, against the bound `70e·δ`
/// (strict). `Q` must have all its zeros in the closed upper half disk.
///
/// The bound exceeds the length 2 of `[-1, 1]` once `δ > 2/(70e) ≈ 0.0105`,
/// so only small `δ` are informative.
///
/// ```
/// use turan_lab::levelsets::small_logderiv_measure;
/// use turan_lab::{Interval, Polynomial};
/// // |Q'/Q| = 3/|x| for Q = x³, so {|Q'/Q| ≤ 6} = {|x| ≥ 1/2}.
/// let q = Polynomial::from_real_zeros(&[0.0, 0.0, 0.0]);
/// let report = small_logderiv_measure(&q, 2.0, Interval::unit())?;
/// assert!((report.measure.value - 1.0).abs() < 1e-9);
/// assert!(report.satisfied);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn small_logderiv_measure(q: &Polynomial, delta: f64, ambient: Interval) -> Result<LevelSetReport> {
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(invalid(format!("delta must be positive, got {delta}")));
    }
    let n = q.degree();
    if q.is_zero() || n == 0 {
        return Err(precondition("Q must be nonconstant"));
    }
    if n > LEVELSET_DEGREE_CAP {
        return Err(Error::UnsupportedDegree {
            degree: n,
            cap: LEVELSET_DEGREE_CAP,
        });
    }
    if !is_member(q, &ClassSpec::new(n, 0, false)?).member {
        return Err(precondition("Q must have all zeros in the closed upper half disk"));
    }
    let (measure, intervals) = logderiv_level_set(q, n as f64 * delta, ambient, Side::Below)?;
    let bound = SMALL_SET_CONSTANT * delta;
    Ok(LevelSetReport {
        satisfied: measure.value + measure.err < bound,
        err: measure.err,
        measure,
        bound,
        parameter: delta,
        intervals,
        ambient,
    })
}

/// `{x ∈ ambient : |R'/R| ≥ α}` against the bound `8√2·k/α` with `k = deg R`
/// (non-strict).
pub fn large_logderiv_measure(r: &Polynomial, alpha: f64, ambient: Interval) -> Result<LevelSetReport> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(invalid(format!("alpha must be positive, got {alpha}")));
    }
    if r.is_zero() {
        return Err(invalid("R must not be the zero polynomial"));
    }
    let k = r.degree();
    let bound = LARGE_SET_CONSTANT * k as f64 / alpha;
    let (measure, intervals) = if k == 0 {
        (CertifiedValue::exact(0.0, Method::CriticalPoints), Vec::new())
    } else {
        logderiv_level_set(r, alpha, ambient, Side::Above)?
    };
    Ok(LevelSetReport {
        satisfied: measure.value + measure.err <= bound,
        err: measure.err,
        measure,
        bound,
        parameter: alpha,
        intervals,
        ambient,
    })
}

/// [`large_logderiv_measure`] over the whole real line. Since
/// `|R'/R|(x) ≤ k / dist(x, zeros)`, the set lies within `k/α` of the real
/// parts of the zeros, so a bounded ambient interval covers it.
pub fn large_logderiv_measure_real_line(r: &Polynomial, alpha: f64) -> Result<LevelSetReport> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(invalid(format!("alpha must be positive, got {alpha}")));
    }
    let reach = r.degree() as f64 / alpha + 1.0;
    let lo = r.zeros().iter().map(|z| z.re).fold(-1.0, f64::min) - reach;
    let hi = r.zeros().iter().map(|z| z.re).fold(1.0, f64::max) + reach;
    large_logderiv_measure(r, alpha, Interval::new(lo, hi)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayReport {
    /// `[0, 1 − 10k/(n−k)]`, or `None` when that interval is empty.
    pub interval: Option<Interval>,
    pub samples: usize,
    /// `max |S(x)| − x^{(n−k)/2}·‖S‖_{[0,1]}` over the samples.
    pub max_violation: f64,
    pub norm: CertifiedValue,
    pub satisfied: bool,
}

const DECAY_SAMPLES: usize = 10_000;

/// Checks `|S(x)| ≤ x^{(n−k)/2}·‖S‖_{[0,1]}` on `[0, 1 − 10k/(n−k)]` for
/// `S = x^{n−k}·R`, `deg R ≤ k`, by sampling.
pub fn incomplete_decay_check(s: &Polynomial, n: usize, k: usize) -> Result<DecayReport> {
    if !(1 <= k && k < n) {
        return Err(precondition(format!("need 1 ≤ k ≤ n − 1, got n = {n}, k = {k}")));
    }
    let m = n - k;
    let at_origin = s.zeros().iter().filter(|z| z.norm() <= 1e-12).count();
    if s.is_zero() || s.degree() > n || at_origin < m {
        return Err(precondition(format!(
            "S must be x^{m}·R with deg R ≤ {k}; it has degree {} and {at_origin} zeros at 0",
            s.degree()
        )));
    }
    let norm = supnorm::sup_norm(s, Interval::unit_positive(), 1e-12)?;
    let end = 1.0 - 10.0 * k as f64 / m as f64;
    if end < 0.0 {
        return Ok(DecayReport {
            interval: None,
            samples: 0,
            max_violation: f64::NEG_INFINITY,
            norm,
            satisfied: true,
        });
    }
    let half = m as f64 / 2.0;
    let max_violation = (0..DECAY_SAMPLES)
        .map(|i| {
            let x = end * i as f64 / (DECAY_SAMPLES - 1) as f64;
            s.evaluate_real(x).norm() - x.powf(half) * norm.value
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(DecayReport {
        interval: Some(Interval::new(0.0, end)?),
        samples: DECAY_SAMPLES,
        max_violation,
        satisfied: max_violation <= norm.err + 1e-12 * norm.value,
        norm,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlippedDecayReport {
    /// `10(2k+1)/n`.
    pub start: f64,
    /// `sup |√y·W(y)|` over `[start, 1]`; `None` when `start > 1`.
    pub restricted: Option<CertifiedValue>,
    /// `sup |√u·W(u)|` over `[0, 1]`.
    pub full: CertifiedValue,
    pub vacuous: bool,
    pub satisfied: bool,
}

/// Checks `sup_{[y₀,1]} |√y·W(y)| < sup_{[0,1]} |√u·W(u)|` with
/// `y₀ = 10(2k+1)/n`, for `W = (1−x)^{n−k}·V`, `deg V ≤ k`.
///
/// Both sides are computed as square roots of sup-norms of `x·W(x)²`, which
/// has modulus `y·|W(y)|²` on the reals and avoids the half power.
pub fn flipped_decay_check(w: &Polynomial, n: usize, k: usize) -> Result<FlippedDecayReport> {
    if !(1 <= k && 2 * k <= n) {
        return Err(precondition(format!("need 1 ≤ k ≤ n/2, got n = {n}, k = {k}")));
    }
    let at_one = w
        .zeros()
        .iter()
        .filter(|z| (*z - Complex::new(1.0, 0.0)).norm() <= 1e-12)
        .count();
    if w.is_zero() || w.degree() > n || at_one < n - k {
        return Err(precondition(format!(
            "W must be (1−x)^{}·V with deg V ≤ {k}; it has degree {} and {at_one} zeros at 1",
            n - k,
            w.degree()
        )));
    }
    let mut zeros = vec![Complex::new(0.0, 0.0)];
    zeros.extend(w.zeros().iter().flat_map(|&z| [z, z]));
    let aux = Polynomial::from_zeros(w.leading() * w.leading(), zeros)?;
    let tol = 1e-12 * aux.leading().norm().max(1e-300);
    let root = |v: CertifiedValue| {
        let s = v.value.max(0.0).sqrt();
        CertifiedValue {
            value: s,
            err: ((v.value + v.err).sqrt() - s).max(s - (v.value - v.err).max(0.0).sqrt()),
            method: v.method,
        }
    };
    let full = root(supnorm::sup_norm(&aux, Interval::unit_positive(), tol)?);
    let start = 10.0 * (2 * k + 1) as f64 / n as f64;
    if start > 1.0 {
        return Ok(FlippedDecayReport {
            start,
            restricted: None,
            full,
            vacuous: true,
            satisfied: true,
        });
    }
    let restricted = root(supnorm::sup_norm(&aux, Interval::new(start, 1.0)?, tol)?);
    Ok(FlippedDecayReport {
        start,
        satisfied: restricted.upper() < full.lower(),
        restricted: Some(restricted),
        full,
        vacuous: false,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NearMaxReport {
    pub argmax: f64,
    /// `‖P'‖/‖P‖`.
    pub ratio: f64,
    /// Radius `1/(2·ratio)` around the maximizer.
    pub radius: f64,
    /// `min |P(y)| / ‖P‖` over the sampled `y`.
    pub min_relative: f64,
    pub satisfied: bool,
}

/// Samples `y` within `1/(2M)` of the maximizer of `|P|` on `[-1, 1]`, where
/// `M = ‖P'‖/‖P‖`, and checks `|P(y)| ≥ ‖P‖/2`.
pub fn near_maximum_check(p: &Polynomial, samples: usize) -> Result<NearMaxReport> {
    let unit = Interval::unit();
    let top = supnorm::sup_norm_with_argmax(p, unit, 1e-12)?;
    let dp = p.derivative()?;
    let slope = supnorm::sup_norm(&dp, unit, 1e-12)?;
    if top.norm.value == 0.0 {
        return Err(invalid("P vanishes on [-1, 1]"));
    }
    let ratio = slope.value / top.norm.value;
    let radius = if ratio > 0.0 { 0.5 / ratio } else { 2.0 };
    let lo = (top.argmax - radius).max(-1.0);
    let hi = (top.argmax + radius).min(1.0);
    let count = samples.max(2);
    let min_relative = (0..count)
        .map(|i| {
            let y = lo + (hi - lo) * i as f64 / (count - 1) as f64;
            p.evaluate_real(y).norm() / top.norm.value
        })
        .fold(f64::INFINITY, f64::min);
    Ok(NearMaxReport {
        argmax: top.argmax,
        ratio,
        radius,
        min_relative,
        satisfied: min_relative >= 0.5 - 1e-9,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofStepReport {
    pub delta: f64,
    /// `√((n−k)k/2)`.
    pub target: f64,
    pub small_set: LevelSetReport,
    pub large_set: LevelSetReport,
    /// Samples of `[-1, 1]` outside both sets.
    pub samples: usize,
    /// `min |P'/P|` over those samples.
    pub min_logderiv: f64,
    pub satisfied: bool,
}

/// For `P = Q·R` with `Q` of degree `n − k` (zeros in the half disk) and `R`
/// of degree `k ≥ 1`: with `δ = √(2k/(n−k))`, samples `[-1, 1]` outside
/// `{|Q'/Q| ≤ (n−k)δ} ∪ {|R'/R| ≥ k/δ}` and checks
/// `|P'/P| ≥ √((n−k)k/2)` there, up to relative slack `1e-6`.
pub fn proof_step_check(q: &Polynomial, r: &Polynomial, samples: usize) -> Result<ProofStepReport> {
    let (m, k) = (q.degree(), r.degree());
    if m == 0 || k == 0 {
        return Err(precondition("need deg Q ≥ 1 and deg R ≥ 1"));
    }
    let delta = (2.0 * k as f64 / m as f64).sqrt();
    let small_set = small_logderiv_measure(q, delta, Interval::unit())?;
    let large_set = large_logderiv_measure(r, k as f64 / delta, Interval::unit())?;
    let target = (m as f64 * k as f64 / 2.0).sqrt();

    // Stay a hair away from set boundaries, where the comparison is an
    // equality up to the boundary bracket.
    let pad = 1e-9;
    let excluded = |x: f64| {
        small_set
            .intervals
            .iter()
            .chain(&large_set.intervals)
            .any(|i| i.lo() - pad <= x && x <= i.hi() + pad)
    };
    let mut all = q.zeros().to_vec();
    all.extend_from_slice(r.zeros());
    let count = samples.max(2);
    let mut used = 0;
    let mut min_logderiv = f64::INFINITY;
    for i in 0..count {
        let x = -1.0 + 2.0 * i as f64 / (count - 1) as f64;
        if excluded(x) {
            continue;
        }
        used += 1;
        min_logderiv = min_logderiv.min(logderiv_modulus(&all, x));
    }
    Ok(ProofStepReport {
        delta,
        target,
        small_set,
        large_set,
        samples: used,
        satisfied: min_logderiv >= target * (1.0 - 1e-6),
        min_logderiv,
    })
}

/// `(70e + 8√2)·√(4k/n)`: the covering bound for the exceptional sets, which
/// must stay below 1 for the complement to be nonempty.
pub fn complement_margin(n: usize, k: usize) -> f64 {
    (SMALL_SET_CONSTANT + LARGE_SET_CONSTANT) * (4.0 * k as f64 / n as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    /// Grid oracle for the measure of `{|P'/P| ≤ c}` (or `≥`).
    fn grid_measure(p: &Polynomial, level: f64, side: Side, ambient: Interval, points: usize) -> f64 {
        let h = ambient.len() / points as f64;
        (0..points)
            .filter(|&i| {
                let x = ambient.lo() + (i as f64 + 0.5) * h;
                let m = logderiv_modulus(p.zeros(), x);
                match side {
                    Side::Below => m <= level,
                    Side::Above => m >= level,
                }
            })
            .count() as f64
            * h
    }

    #[test]
    fn small_set_examples() {
        for n in [1usize, 3, 8] {
            let q = Polynomial::from_real_zeros(&vec![0.0; n]);
            let r = small_logderiv_measure(&q, 2.0, Interval::unit()).unwrap();
            assert!((r.measure.value - 1.0).abs() < 1e-9, "n = {n}: {}", r.measure.value);
            assert!((r.bound - 140.0 * E).abs() < 1e-12);
            assert!(r.satisfied);

            let r = small_logderiv_measure(&q, 0.5, Interval::unit()).unwrap();
            assert!(r.measure.value < 1e-9);

            let qi = Polynomial::from_zeros(c(1.0, 0.0), vec![c(0.0, 1.0); n]).unwrap();
            let r = small_logderiv_measure(&qi, 0.5, Interval::unit()).unwrap();
            assert!(r.measure.value < 1e-9);
            assert!(r.intervals.is_empty());
        }
    }

    #[test]
    fn small_set_rejects_lower_half_plane() {
        let q = Polynomial::from_zeros(c(1.0, 0.0), vec![c(0.0, -0.5)]).unwrap();
        assert!(matches!(
            small_logderiv_measure(&q, 0.1, Interval::unit()),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn large_set_examples() {
        let r = large_logderiv_measure(&Polynomial::from_real_zeros(&[0.0]), 4.0, Interval::unit())
            .unwrap();
        assert!((r.measure.value - 0.5).abs() < 1e-12);
        assert!((r.bound - 2.0 * std::f64::consts::SQRT_2).abs() < 1e-15);
        assert!(r.satisfied);
        let json: serde_json::Value = serde_json::from_str(&r.to_json_string()).unwrap();
        assert!((json["intervals"][0][0].as_f64().unwrap() + 0.25).abs() < 1e-12);

        let r = large_logderiv_measure(&Polynomial::constant(c(3.0, 0.0)), 4.0, Interval::unit())
            .unwrap();
        assert_eq!(r.measure.value, 0.0);
        assert!(r.satisfied);
    }

    #[test]
    fn large_set_near_double_pole() {
        // |2x/(x²−1)| ≥ 100: inside [-1, 1] the two one-sided pieces have
        // total length ≈ 0.0199; on the whole line it doubles to ≈ 0.0400.
        let p = Polynomial::from_real_zeros(&[1.0, -1.0]);
        let closed_form = |x: f64| 2.0 * x / (x * x - 1.0);
        let unit = large_logderiv_measure(&p, 100.0, Interval::unit()).unwrap();
        // Exact boundary inside: 2x/(1−x²) = 100 ⇒ x = (−1 + √(1+10⁴))/100.
        let x_in = (-1.0 + (1.0f64 + 1e4).sqrt()) / 100.0;
        assert!((closed_form(x_in).abs() - 100.0).abs() < 1e-9);
        assert!((unit.measure.value - 2.0 * (1.0 - x_in)).abs() < 1e-9);
        assert!((unit.bound - 16.0 * std::f64::consts::SQRT_2 / 100.0).abs() < 1e-15);
        assert!(unit.satisfied);

        let line = large_logderiv_measure_real_line(&p, 100.0).unwrap();
        let x_out = (1.0 + (1.0f64 + 1e4).sqrt()) / 100.0;
        assert!((line.measure.value - 2.0 * (x_out - x_in)).abs() < 1e-9);
        assert!((line.measure.value - 0.04).abs() < 1e-3);
    }

    #[test]
    fn measures_match_grid_oracle() {
        let spec = ClassSpec::new(9, 0, false).unwrap();
        for seed in 0..10 {
            let q = crate::classes::sample(&spec, seed).unwrap();
            for delta in [0.05, 0.2, 0.8] {
                let level = 9.0 * delta;
                let (m, _) = logderiv_level_set(&q, level, Interval::unit(), Side::Below).unwrap();
                let oracle = grid_measure(&q, level, Side::Below, Interval::unit(), 200_000);
                assert!((m.value - oracle).abs() < 1e-4, "seed {seed} δ {delta}: {} vs {oracle}", m.value);
            }
        }
    }

    #[test]
    fn decay_examples() {
        let s = Polynomial::from_real_zeros(&[0.0; 11]);
        assert!(incomplete_decay_check(&s, 12, 1).unwrap().satisfied);

        let mut zeros = vec![0.0; 11];
        zeros.push(1.0);
        let s = Polynomial::from_real_zeros(&zeros);
        let r = incomplete_decay_check(&s, 12, 1).unwrap();
        assert!(r.satisfied && r.max_violation <= 0.0);
        assert!((r.interval.unwrap().hi() - 1.0 / 11.0).abs() < 1e-15);

        let s = Polynomial::from_real_zeros(&[0.0; 9]);
        let r = incomplete_decay_check(&s, 10, 1).unwrap();
        assert!(r.interval.is_none() && r.satisfied);

        let bad = Polynomial::from_real_zeros(&[0.5; 11]);
        assert!(matches!(
            incomplete_decay_check(&bad, 12, 1),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn flipped_decay_examples() {
        let w = Polynomial::from_real_zeros(&[1.0; 19]);
        let r = flipped_decay_check(&w, 20, 1).unwrap();
        assert!(r.vacuous);

        // y(1−y)^{2m} peaks at y = 1/(2m+1); with m = 59 that is left of 30/60.
        let w = Polynomial::from_real_zeros(&[1.0; 59]);
        let r = flipped_decay_check(&w, 60, 1).unwrap();
        assert!(!r.vacuous && r.satisfied);
        let m: f64 = 59.0;
        let peak: f64 = 1.0 / (2.0 * m + 1.0);
        let closed = (peak * (1.0 - peak).powf(2.0 * m)).sqrt();
        assert!((r.full.value - closed).abs() <= r.full.err + 1e-12);

        assert!(matches!(
            flipped_decay_check(&w, 4, 3),
            Err(Error::PreconditionViolation(_))
        ));
        let w = Polynomial::from_real_zeros(&[1.0]);
        let r = flipped_decay_check(&w, 2, 1).unwrap();
        assert!(r.vacuous && r.restricted.is_none());
    }

    #[test]
    fn near_maximum_examples() {
        for seed in 0..10 {
            let p = crate::classes::sample(&ClassSpec::new(7, 2, false).unwrap(), seed).unwrap();
            let r = near_maximum_check(&p, 500).unwrap();
            assert!(r.satisfied, "seed {seed}: {}", r.min_relative);
        }
    }

    #[test]
    fn proof_step_holds_on_a_product() {
        let q = crate::classes::sample(&ClassSpec::new(20, 0, false).unwrap(), 1).unwrap();
        let r = Polynomial::from_zeros(c(1.0, 0.0), vec![c(0.3, -0.4), c(1.5, 1.0)]).unwrap();
        let report = proof_step_check(&q, &r, 4000).unwrap();
        assert!(report.satisfied, "{} < {}", report.min_logderiv, report.target);
    }

    #[test]
    fn complement_margin_below_one_in_regime() {
        assert!(complement_margin(163_000, 1) < 1.0);
        assert!(complement_margin(1000, 1) > 1.0);
    }
}
