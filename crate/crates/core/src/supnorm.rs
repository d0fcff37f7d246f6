//! Certified sup-norms on real intervals, real root isolation, and total
//! variation.
//!
//! Two backends compute `‖P‖_I`:
//!
//! * **critical points** (degree ≤ [`EXPANSION_CAP`]): the maximum of `|P|²`
//!   is attained at an endpoint or at a real zero of `(|P|²)'`. Candidates come
//!   from real root isolation on the expanded derivative *and* from the
//!   critical points of `P·P̄` computed from its known zeros; every candidate is
//!   re-bracketed with the sign of `Re(P'/P)`, which is evaluated from the
//!   zeros and stays accurate where the coefficients do not.
//! * **certified grid** (any degree): branch and bound on `|P|²` with a
//!   curvature bound from V. Markov's inequality for the second derivative.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::polynomial::{
    critical_points, group_zeros, Complex, Interval, Polynomial, RealPolynomial, EXPANSION_CAP,
};

/// Default absolute bracket width for isolated roots.
pub const ROOT_TOL: f64 = 1e-12;

/// Roots closer than this are merged into one cluster.
pub const CLUSTER_MERGE: f64 = 1e-9;

/// Cap on evaluations for the branch-and-bound backend.
const GRID_MAX_EVALS: usize = 20_000_000;

/// How far around a candidate to look for a sign change of the derivative,
/// relative to the interval length.
const BRACKET_REACH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CriticalPoints,
    CertifiedGrid,
}

/// A value with a guaranteed absolute error radius: the true quantity lies in
/// `[value - err, value + err]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifiedValue {
    pub value: f64,
    pub err: f64,
    pub method: Method,
}

impl CertifiedValue {
    pub fn exact(value: f64, method: Method) -> Self {
        Self {
            value,
            err: 0.0,
            method,
        }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.err
    }

    pub fn upper(&self) -> f64 {
        self.value + self.err
    }
}

/// A sup-norm together with the point where it is attained. Among several
/// maximizers the leftmost is reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Maximum {
    pub norm: CertifiedValue,
    pub argmax: f64,
}

/// Real roots in ascending order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RootList {
    pub roots: Vec<f64>,
    /// `|G(root)|` at each reported root.
    pub residuals: Vec<f64>,
    /// Bracket width around each root.
    pub widths: Vec<f64>,
    /// Estimated multiplicity; values above 1 mark a merged cluster.
    pub multiplicities: Vec<usize>,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// All real roots of `g` in `interval`, each bracketed to width at most `tol`
/// (down to floating-point resolution).
///
/// Roots are isolated by derivative interleaving: between consecutive real
/// roots of `g'` the polynomial is monotone, so each such piece holds at most
/// one sign change. Touching roots (no sign change) are caught where `g`
/// vanishes to rounding accuracy at a critical point.
pub fn real_roots(g: &RealPolynomial, interval: Interval, tol: f64) -> Result<RootList> {
    if g.is_zero() {
        return Err(invalid("real_roots: the zero polynomial has no isolated roots"));
    }
    if !(tol > 0.0) {
        return Err(invalid(format!("real_roots: tolerance must be positive, got {tol}")));
    }
    let raw = isolate(g, interval.lo(), interval.hi(), tol);

    let mut out = RootList::default();
    let mut i = 0;
    while i < raw.len() {
        let mut j = i + 1;
        while j < raw.len() && raw[j].0 - raw[j - 1].0 <= CLUSTER_MERGE {
            j += 1;
        }
        let cluster = &raw[i..j];
        let root = cluster.iter().map(|r| r.0).sum::<f64>() / cluster.len() as f64;
        let width = cluster.last().unwrap().0 - cluster[0].0
            + cluster.iter().map(|r| r.1).fold(0.0, f64::max);
        out.roots.push(root);
        out.residuals.push(g.eval(root).abs());
        out.widths.push(width);
        out.multiplicities.push(multiplicity(g, root).max(cluster.len()));
        i = j;
    }
    Ok(out)
}

fn rounding_threshold(g: &RealPolynomial, x: f64) -> (f64, f64) {
    let (v, s) = g.eval_with_scale(x);
    let deg = g.degree().unwrap_or(0) as f64;
    (v, 8.0 * (deg + 1.0) * f64::EPSILON * s)
}

fn sign_with_zero(g: &RealPolynomial, x: f64) -> i8 {
    let (v, thr) = rounding_threshold(g, x);
    if v.abs() <= thr {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

/// Sorted (root, bracket width) pairs, unmerged.
fn isolate(g: &RealPolynomial, lo: f64, hi: f64, tol: f64) -> Vec<(f64, f64)> {
    match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => {
            let c = g.coeffs();
            let r = -c[0] / c[1];
            return if lo <= r && r <= hi {
                vec![(r, 0.0)]
            } else {
                Vec::new()
            };
        }
        _ => {}
    }
    let dg = g.derivative();
    let mut knots = vec![lo];
    knots.extend(
        isolate(&dg, lo, hi, tol)
            .into_iter()
            .map(|r| r.0)
            .filter(|&x| lo < x && x < hi),
    );
    knots.push(hi);
    knots.dedup();

    let mut found = Vec::new();
    for w in knots.windows(2) {
        let (u, v) = (w[0], w[1]);
        let su = sign_with_zero(g, u);
        let sv = sign_with_zero(g, v);
        if su == 0 {
            found.push((u, 0.0));
        }
        if su * sv < 0 {
            found.push(refine(|x| g.eval(x), |x| dg.eval(x), u, v, tol));
        }
    }
    if sign_with_zero(g, hi) == 0 {
        found.push((hi, 0.0));
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    found
}

/// Safeguarded Newton inside a sign-change bracket `[a, b]`. Returns the root
/// estimate and the final bracket width.
fn refine(f: impl Fn(f64) -> f64, df: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    let sa = f(a).signum();
    let mut x = 0.5 * (a + b);
    for _ in 0..400 {
        if b - a <= tol {
            break;
        }
        let fx = f(x);
        if fx == 0.0 {
            return (x, 0.0);
        }
        if fx.signum() == sa {
            a = x;
        } else {
            b = x;
        }
        let step = fx / df(x);
        let newton = x - step;
        if step.is_finite() && a < newton && newton < b {
            if step.abs() <= 0.25 * tol {
                // Converged: try to close the bracket around the Newton point.
                let (l, r) = ((newton - 0.5 * tol).max(a), (newton + 0.5 * tol).min(b));
                let (fl, fr) = (f(l), f(r));
                if fl.signum() != fr.signum() || fl == 0.0 || fr == 0.0 {
                    if fl.signum() == sa && fl != 0.0 {
                        a = l;
                    }
                    if fr.signum() != sa && fr != 0.0 {
                        b = r;
                    }
                    if b - a <= tol {
                        break;
                    }
                }
                x = 0.5 * (a + b);
            } else {
                x = newton;
            }
        } else {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            x = mid;
        }
    }
    (0.5 * (a + b), b - a)
}

fn multiplicity(g: &RealPolynomial, x: f64) -> usize {
    let mut m = 1;
    let mut d = g.derivative();
    while !d.is_zero() {
        let (v, thr) = rounding_threshold(&d, x);
        if v.abs() > 1e3 * thr {
            break;
        }
        m += 1;
        d = d.derivative();
    }
    m
}

/// `‖P‖_I` to absolute accuracy `tol`.
///
/// ```
/// use turan_lab::{supnorm, Interval, Polynomial};
/// // T₃(x) = 4x³ − 3x equioscillates between ±1 on [−1, 1].
/// let t3 = Polynomial::from_real_coefficients(&[0.0, -3.0, 0.0, 4.0])?;
/// let norm = supnorm::sup_norm(&t3, Interval::unit(), 1e-12)?;
/// assert!((norm.value - 1.0).abs() <= norm.err + 1e-12);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn sup_norm(p: &Polynomial, interval: Interval, tol: f64) -> Result<CertifiedValue> {
    Ok(sup_norm_with_argmax(p, interval, tol)?.norm)
}

/// [`sup_norm`] plus the (leftmost) maximizer.
pub fn sup_norm_with_argmax(p: &Polynomial, interval: Interval, tol: f64) -> Result<Maximum> {
    check_tol(tol)?;
    if p.degree() <= EXPANSION_CAP {
        let m = sup_norm_critical(p, interval, tol)?;
        if m.norm.err <= tol {
            return Ok(m);
        }
    }
    sup_norm_grid(p, interval, tol)
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("sup_norm: tolerance must be positive, got {tol}")))
    }
}

fn overflow(x: f64) -> Error {
    Error::NumericOverflow(format!(
        "non-finite polynomial value near x = {x}; rescale the leading coefficient"
    ))
}

/// Critical-point backend. Requires degree ≤ [`EXPANSION_CAP`].
pub fn sup_norm_critical(p: &Polynomial, interval: Interval, tol: f64) -> Result<Maximum> {
    check_tol(tol)?;
    let method = Method::CriticalPoints;
    if p.is_zero() || p.degree() == 0 {
        return Ok(Maximum {
            norm: CertifiedValue::exact(p.leading().norm(), method),
            argmax: interval.lo(),
        });
    }
    let n = p.degree();
    let (lo, hi) = (interval.lo(), interval.hi());
    let abs = |x: f64| p.evaluate_real(x).norm();

    let mut candidates: Vec<(f64, f64)> = vec![(lo, 0.0), (hi, 0.0)];
    if !interval.is_degenerate() {
        let mut raw: Vec<f64> = Vec::new();
        let g = p.modulus_square_on_reals()?.derivative();
        if !g.is_zero() {
            raw.extend(real_roots(&g, interval, ROOT_TOL)?.roots);
        }
        raw.extend(near_real_critical_points(p, interval));
        // Sign of (|P|²)' away from the zeros of P.
        let slope = |x: f64| p.log_derivative(Complex::new(x, 0.0)).re;
        for x in raw {
            candidates.push(bracket_sign_change(&slope, x, interval).unwrap_or((x, f64::NAN)));
        }
    }

    let mut best = (lo, abs(lo), 0.0);
    let mut values = Vec::with_capacity(candidates.len());
    for &(x, width) in &candidates {
        let v = abs(x);
        if !v.is_finite() {
            return Err(overflow(x));
        }
        values.push((x, v, width));
        if v > best.1 {
            best = (x, v, width);
        }
    }
    let max = best.1;
    // Leftmost among (numerically) tied maximizers.
    let tie = 1e-12 * max;
    let (argmax, _, width) = values
        .iter()
        .filter(|c| c.1 >= max - tie)
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .copied()
        .unwrap_or(best);

    let rounding = 4.0 * (n as f64 + 1.0) * f64::EPSILON * max;
    let err = if argmax == lo || argmax == hi {
        rounding
    } else if width.is_nan() {
        // Interior maximizer without a confirmed bracket; let the caller fall
        // back to the grid backend.
        f64::INFINITY
    } else {
        // At the true critical point c, S' = 0, so S(c) − S(x) ≤ K·w²/2 for
        // |x − c| ≤ w with K ≥ ‖S''‖ (V. Markov), S = |P|².
        let d = 2.0 * n as f64;
        let scale = 2.0 / interval.len();
        let k = scale * scale * d * d * (d * d - 1.0) / 3.0 * (2.0 * max).powi(2);
        let ds = 0.5 * k * width * width;
        (max * max + ds).sqrt() - max + rounding
    };
    Ok(Maximum {
        norm: CertifiedValue {
            value: max,
            err,
            method,
        },
        argmax,
    })
}

/// Real parts of the critical points of `P·P̄` that lie close to the real axis
/// within the interval.
fn near_real_critical_points(p: &Polynomial, interval: Interval) -> Vec<f64> {
    let mut all = p.zeros().to_vec();
    all.extend(p.zeros().iter().map(|z| z.conj()));
    let groups = group_zeros(&all);
    let reach = 1e-3 * interval.len().max(1e-300);
    critical_points(&groups)
        .roots
        .into_iter()
        .filter(|r| r.im.abs() <= reach)
        .map(|r| r.re)
        .filter(|&x| interval.lo() < x && x < interval.hi())
        .collect()
}

/// Finds a sign change of `f` near `x` (searching outwards geometrically) and
/// bisects it to floating-point resolution. Returns (point, bracket width).
fn bracket_sign_change(f: &impl Fn(f64) -> f64, x: f64, interval: Interval) -> Option<(f64, f64)> {
    let (lo, hi) = (interval.lo(), interval.hi());
    let x = x.clamp(lo, hi);
    let fx = f(x);
    if fx == 0.0 {
        return Some((x, 0.0));
    }
    let reach = BRACKET_REACH * interval.len();
    let mut r = 1e-15 * (1.0 + x.abs());
    while r <= reach {
        let (l, h) = ((x - r).max(lo), (x + r).min(hi));
        let (fl, fh) = (f(l), f(h));
        let pair = if fl.signum() != fx.signum() {
            Some((l, x))
        } else if fh.signum() != fx.signum() {
            Some((x, h))
        } else {
            None
        };
        if let Some((mut a, mut b)) = pair {
            let sa = f(a).signum();
            loop {
                let m = 0.5 * (a + b);
                if m <= a || m >= b {
                    break;
                }
                let fm = f(m);
                if fm == 0.0 {
                    return Some((m, 0.0));
                }
                if fm.signum() == sa {
                    a = m;
                } else {
                    b = m;
                }
            }
            return Some((0.5 * (a + b), b - a));
        }
        r *= 4.0;
    }
    None
}

/// Certified-grid backend; any degree.
pub fn sup_norm_grid(p: &Polynomial, interval: Interval, tol: f64) -> Result<Maximum> {
    check_tol(tol)?;
    if p.is_zero() || p.degree() == 0 {
        return Ok(Maximum {
            norm: CertifiedValue::exact(p.leading().norm(), Method::CertifiedGrid),
            argmax: interval.lo(),
        });
    }
    grid_max(|x| p.evaluate_real(x).norm(), p.degree(), interval, tol)
}

/// Branch and bound for `max |f|` on `interval`, where `f` is (the modulus of)
/// a polynomial of the given degree.
///
/// A coarse pass at spacing `L/(2n²)` gives `‖f‖ ≤ 2·M₀` by Markov's
/// inequality. With `S = f²` of degree `2n` and `K ≥ ‖S''‖`, a cell `[u, v]`
/// cannot hold a value above `max(S(u), S(v)) + K(v − u)²/8`.
pub(crate) fn grid_max(
    abs: impl Fn(f64) -> f64,
    degree: usize,
    interval: Interval,
    tol: f64,
) -> Result<Maximum> {
    let method = Method::CertifiedGrid;
    let (lo, len) = (interval.lo(), interval.len());
    let eval = |x: f64| -> Result<f64> {
        let v = abs(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(overflow(x))
        }
    };
    if interval.is_degenerate() {
        return Ok(Maximum {
            norm: CertifiedValue::exact(eval(lo)?, method),
            argmax: lo,
        });
    }
    let n = degree.max(1) as f64;
    let cells = (2.0 * n * n).ceil() as usize;
    let xs: Vec<f64> = (0..=cells)
        .map(|i| if i == cells { interval.hi() } else { lo + len * i as f64 / cells as f64 })
        .collect();
    let mut vals = Vec::with_capacity(xs.len());
    for &x in &xs {
        vals.push(eval(x)?);
    }
    let (mut arg, mut best) = (xs[0], vals[0]);
    for (&x, &v) in xs.iter().zip(&vals) {
        if v > best {
            arg = x;
            best = v;
        }
    }
    if best == 0.0 {
        // ‖f‖ ≤ 2·0: f vanishes on the interval.
        return Ok(Maximum {
            norm: CertifiedValue::exact(0.0, method),
            argmax: lo,
        });
    }
    let upper = 2.0 * best;
    let d = 2.0 * n;
    let k = (2.0 / len).powi(2) * d * d * (d * d - 1.0) / 3.0 * upper * upper;

    let mut stack: Vec<(f64, f64, f64, f64)> = xs
        .windows(2)
        .zip(vals.windows(2))
        .map(|(x, v)| (x[0], x[1], v[0] * v[0], v[1] * v[1]))
        .rev()
        .collect();
    let mut excess: f64 = 0.0;
    let mut evals = xs.len();
    while let Some((u, v, su, sv)) = stack.pop() {
        let h = v - u;
        let bound = (su.max(sv) + k * h * h / 8.0).sqrt();
        if bound <= best + tol {
            excess = excess.max(bound - best);
            continue;
        }
        let m = 0.5 * (u + v);
        if m <= u || m >= v || evals >= GRID_MAX_EVALS {
            excess = excess.max(bound - best);
            continue;
        }
        let fm = eval(m)?;
        evals += 1;
        if fm > best || (fm == best && m < arg) {
            best = fm;
            arg = m;
        }
        stack.push((m, v, fm * fm, sv));
        stack.push((u, m, su, fm * fm));
    }
    let rounding = 4.0 * (n + 1.0) * f64::EPSILON * best;
    Ok(Maximum {
        norm: CertifiedValue {
            value: best,
            err: excess.max(0.0) + rounding,
            method,
        },
        argmax: arg,
    })
}

/// Total variation `∫_I |P'|` of a real-valued polynomial, computed exactly by
/// splitting at the critical points: `Σ |P(rⱼ₊₁) − P(rⱼ)|`.
pub fn total_variation(p: &Polynomial, interval: Interval) -> Result<CertifiedValue> {
    let method = Method::CriticalPoints;
    if p.is_zero() || p.degree() == 0 || interval.is_degenerate() {
        return Ok(CertifiedValue::exact(0.0, method));
    }
    let n = p.degree();
    if n > EXPANSION_CAP {
        return Err(Error::UnsupportedDegree {
            degree: n,
            cap: EXPANSION_CAP,
        });
    }
    let probes: Vec<Complex> = (0..5)
        .map(|i| p.evaluate_real(interval.lo() + interval.len() * i as f64 / 4.0))
        .collect();
    let scale = probes.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if probes.iter().any(|v| v.im.abs() > 1e-9 * scale) {
        return Err(invalid(
            "total_variation: polynomial is not real-valued on the interval",
        ));
    }

    let dp = p.derivative()?;
    let mut raw: Vec<f64> = Vec::new();
    let dre = RealPolynomial::new(dp.coefficients()?.iter().map(|c| c.re).collect());
    if !dre.is_zero() {
        raw.extend(real_roots(&dre, interval, ROOT_TOL)?.roots);
    }
    let reach = 1e-3 * interval.len();
    raw.extend(
        dp.zeros()
            .iter()
            .filter(|z| z.im.abs() <= reach)
            .map(|z| z.re)
            .filter(|&x| interval.lo() < x && x < interval.hi()),
    );
    let slope = |x: f64| p.derivative_at(Complex::new(x, 0.0)).re;
    let mut knots: Vec<(f64, f64)> = raw
        .into_iter()
        .map(|x| bracket_sign_change(&slope, x, interval).unwrap_or((x, 0.0)))
        .collect();
    knots.push((interval.lo(), 0.0));
    knots.push((interval.hi(), 0.0));
    knots.sort_by(|a, b| a.0.total_cmp(&b.0));
    knots.dedup_by(|a, b| a.0 == b.0);

    let values: Vec<f64> = knots.iter().map(|k| p.evaluate_real(k.0).re).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(overflow(interval.midpoint()));
    }
    let total: f64 = values.windows(2).map(|w| (w[1] - w[0]).abs()).sum();

    // Each misplaced turning point costs at most ‖P''‖·w²/2 on either side.
    let sup = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let nf = n as f64;
    let k = (2.0 / interval.len()).powi(2) * nf * nf * (nf * nf - 1.0) / 3.0 * 2.0 * sup;
    let placement: f64 = knots.iter().map(|kn| k * kn.1 * kn.1).sum();
    let rounding = 4.0 * (nf + 1.0) * f64::EPSILON * (total + sup) * knots.len() as f64;
    Ok(CertifiedValue {
        value: total,
        err: placement + rounding,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[f64]) -> Polynomial {
        Polynomial::from_real_coefficients(coeffs).unwrap()
    }

    #[test]
    fn constant_norm_is_exact() {
        let p = Polynomial::constant(Complex::new(5.0, 0.0));
        let v = sup_norm(&p, Interval::unit(), 1e-10).unwrap();
        assert_eq!(v.value, 5.0);
        assert_eq!(v.err, 0.0);
    }

    #[test]
    fn x_squared_minus_one() {
        let p = Polynomial::from_real_zeros(&[1.0, -1.0]);
        let m = sup_norm_with_argmax(&p, Interval::unit(), 1e-12).unwrap();
        assert!((m.norm.value - 1.0).abs() <= 1e-15);
        assert!(m.argmax.abs() < 1e-12);
        assert_eq!(m.norm.method, Method::CriticalPoints);
    }

    #[test]
    fn chebyshev_t3_leftmost_argmax() {
        let t3 = poly(&[0.0, -3.0, 0.0, 4.0]);
        let m = sup_norm_with_argmax(&t3, Interval::unit(), 1e-12).unwrap();
        assert!((m.norm.value - 1.0).abs() <= 1e-14);
        assert_eq!(m.argmax, -1.0);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let p = Polynomial::from_real_zeros(&[0.0]);
        assert!(matches!(sup_norm(&p, Interval::unit(), 0.0), Err(Error::InvalidArgument(_))));
        assert!(matches!(sup_norm(&p, Interval::unit(), -1.0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn real_roots_examples() {
        let r = real_roots(&RealPolynomial::new(vec![-0.25, 0.0, 1.0]), Interval::unit(), 1e-12)
            .unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0] + 0.5).abs() < 1e-12 && (r.roots[1] - 0.5).abs() < 1e-12);

        let r = real_roots(&RealPolynomial::new(vec![1.0, 0.0, 1.0]), Interval::unit(), 1e-12)
            .unwrap();
        assert!(r.is_empty());

        let r = real_roots(
            &RealPolynomial::new(vec![0.0, -4.0, 0.0, 4.0]),
            Interval::unit(),
            1e-12,
        )
        .unwrap();
        assert_eq!(r.roots, vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn real_roots_rejects_zero_polynomial() {
        assert!(real_roots(&RealPolynomial::zero(), Interval::unit(), 1e-12).is_err());
    }

    #[test]
    fn touching_and_multiple_roots() {
        // (x - 0.3)^2 (x + 0.5): touching root at 0.3, simple at -0.5.
        let g = RealPolynomial::new(vec![0.045, -0.21, -0.1, 1.0]);
        let r = real_roots(&g, Interval::unit(), 1e-12).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r.roots[0] + 0.5).abs() < 1e-12);
        assert!((r.roots[1] - 0.3).abs() < 1e-7);
        assert_eq!(r.multiplicities[1], 2);
        assert_eq!(r.multiplicities[0], 1);
    }

    #[test]
    fn total_variation_examples() {
        let x2 = Polynomial::from_real_zeros(&[0.0, 0.0]);
        let v = total_variation(&x2, Interval::unit_positive()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-14);

        let t2 = poly(&[-1.0, 0.0, 2.0]);
        let v = total_variation(&t2, Interval::unit()).unwrap();
        assert!((v.value - 4.0).abs() < 1e-13);

        let cubic = Polynomial::from_real_zeros(&[0.0, 1.0, -1.0]);
        let v = total_variation(&cubic, Interval::unit()).unwrap();
        assert!((v.value - 8.0 / (3.0 * 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn total_variation_rejects_complex_valued() {
        let p = Polynomial::from_zeros(Complex::new(1.0, 0.0), vec![Complex::new(0.0, 1.0)])
            .unwrap();
        assert!(matches!(
            total_variation(&p, Interval::unit()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn grid_backend_handles_high_degree() {
        // (x^2 - 1)^40: degree 80, norm 1 at 0.
        let zeros: Vec<f64> = (0..80).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let p = Polynomial::from_real_zeros(&zeros);
        let m = sup_norm_with_argmax(&p, Interval::unit(), 1e-10).unwrap();
        assert_eq!(m.norm.method, Method::CertifiedGrid);
        assert!((m.norm.value - 1.0).abs() <= m.norm.err + 1e-12);
        assert!(m.norm.err <= 1e-10);
    }

    #[test]
    fn overflow_is_reported() {
        let p = Polynomial::from_zeros(Complex::new(1e300, 0.0), vec![Complex::new(-1e10, 0.0); 3])
            .unwrap();
        assert!(matches!(
            sup_norm(&p, Interval::unit(), 1e-10),
            Err(Error::NumericOverflow(_))
        ));
    }
}
