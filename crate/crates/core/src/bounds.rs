//! The ratio `‖P'‖/‖P‖`, closed-form lower and upper bounds for it, and
//! verdicts checking a polynomial against every bound whose hypotheses it
//! meets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::{is_member, ClassSpec};
use crate::error::{invalid, precondition, Error, Result};
use crate::polynomial::{Complex, Interval, Polynomial, EXPANSION_CAP};
use crate::supnorm::{self, CertifiedValue};

/// Lower constant for polynomials with all zeros in the closed upper half
/// disk: `2/(3√(210e)) ≈ 0.0279`.
pub fn komarov_constant() -> f64 {
    2.0 / (3.0 * (210.0 * std::f64::consts::E).sqrt())
}

/// `k ≤ n / THM22_REGIME` is the range where [`thm22_lower`] applies.
pub const THM22_REGIME: usize = 163_000;

/// Relative accuracy asked of each sup-norm inside [`turan_ratio`].
pub const RATIO_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundSource {
    #[serde(rename = "turan11")]
    Turan11,
    #[serde(rename = "komarov")]
    Komarov,
    #[serde(rename = "thm22")]
    Thm22,
    #[serde(rename = "cor23")]
    Cor23,
    #[serde(rename = "thm21")]
    Thm21,
    #[serde(rename = "lemma34-lower")]
    Lemma34Lower,
    #[serde(rename = "lemma34-upper")]
    Lemma34Upper,
}

impl BoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundSource::Turan11 => "turan11",
            BoundSource::Komarov => "komarov",
            BoundSource::Thm22 => "thm22",
            BoundSource::Cor23 => "cor23",
            BoundSource::Thm21 => "thm21",
            BoundSource::Lemma34Lower => "lemma34-lower",
            BoundSource::Lemma34Upper => "lemma34-upper",
        }
    }
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Upper {
    Finite(f64),
    Unbounded,
}

impl Upper {
    pub fn value(self) -> Option<f64> {
        match self {
            Upper::Finite(v) => Some(v),
            Upper::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundBracket {
    pub lower: f64,
    pub upper: Upper,
    pub source: BoundSource,
}

impl BoundBracket {
    pub fn lower_only(lower: f64, source: BoundSource) -> Self {
        Self {
            lower,
            upper: Upper::Unbounded,
            source,
        }
    }
}

/// `‖P'‖_I / ‖P‖_I` with a propagated error radius.
///
/// ```
/// use turan_lab::bounds::turan_ratio;
/// use turan_lab::{Interval, Polynomial};
/// let p = Polynomial::from_real_zeros(&[1.0]);
/// let r = turan_ratio(&p, Interval::unit())?;
/// assert!((r.value - 0.5).abs() <= r.err + 1e-15);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn turan_ratio(p: &Polynomial, interval: Interval) -> Result<CertifiedValue> {
    turan_ratio_rtol(p, interval, RATIO_RTOL)
}

pub fn turan_ratio_rtol(p: &Polynomial, interval: Interval, rtol: f64) -> Result<CertifiedValue> {
    if p.is_zero() {
        return Err(invalid("ratio of the zero polynomial is undefined"));
    }
    let den = relative_sup(p.degree(), |x| p.evaluate_real(x).norm(), interval, rtol, |tol| {
        supnorm::sup_norm(p, interval, tol)
    })?;
    if den.value == 0.0 {
        return Err(invalid("polynomial vanishes on the interval"));
    }
    let n = p.degree();
    let num = if n == 0 {
        CertifiedValue::exact(0.0, den.method)
    } else if n <= EXPANSION_CAP {
        let dp = p.derivative()?;
        relative_sup(n - 1, |x| dp.evaluate_real(x).norm(), interval, rtol, |tol| {
            supnorm::sup_norm(&dp, interval, tol)
        })?
    } else {
        let abs_dp = |x: f64| p.derivative_at(Complex::new(x, 0.0)).norm();
        relative_sup(n - 1, abs_dp, interval, rtol, |tol| {
            Ok(supnorm::grid_max(abs_dp, n - 1, interval, tol)?.norm)
        })?
    };
    Ok(quotient(num, den))
}

/// Runs `compute` with an absolute tolerance `rtol·M₀`, `M₀` a cheap sampled
/// lower estimate of the sup.
fn relative_sup(
    degree: usize,
    abs: impl Fn(f64) -> f64,
    interval: Interval,
    rtol: f64,
    compute: impl FnOnce(f64) -> Result<CertifiedValue>,
) -> Result<CertifiedValue> {
    let samples = 16 * (degree + 2);
    let estimate = (0..=samples)
        .map(|i| abs(interval.lo() + interval.len() * i as f64 / samples as f64))
        .fold(0.0, f64::max);
    let tol = if estimate > 0.0 && estimate.is_finite() {
        rtol * estimate
    } else {
        f64::MIN_POSITIVE
    };
    compute(tol)
}

/// `a/b` with radius `(a_err + (a/b)·b_err) / (b − b_err)`.
pub fn quotient(a: CertifiedValue, b: CertifiedValue) -> CertifiedValue {
    let value = a.value / b.value;
    let err = if b.value > b.err {
        (a.err + value * b.err) / (b.value - b.err)
    } else {
        f64::INFINITY
    };
    CertifiedValue {
        value,
        err,
        method: b.method,
    }
}

/// Classical bound for degree-`n` polynomials with all zeros in `[-1, 1]`:
/// `√n/6`.
pub fn turan11_lower(n: usize) -> f64 {
    (n as f64).sqrt() / 6.0
}

/// `A·√n` with the half-disk constant `A` of [`komarov_constant`].
pub fn komarov_lower(n: usize) -> f64 {
    komarov_constant() * (n as f64).sqrt()
}

/// `(1/202)·√((n−k)/(8k))`, valid for `1 ≤ k ≤ n/163000`.
pub fn thm22_lower(n: usize, k: usize) -> Result<f64> {
    if k == 0 || k * THM22_REGIME > n {
        return Err(Error::OutOfRegime(format!(
            "needs 1 ≤ k ≤ n/{THM22_REGIME}, got n = {n}, k = {k}"
        )));
    }
    Ok(((n - k) as f64 / (8.0 * k as f64)).sqrt() / 202.0)
}

/// `max(1/2, (1/808)·√((n−k)/k))` for members with a zero on `[-1, 1]`.
pub fn cor23_lower(n: usize, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(invalid("k must be at least 1; use komarov_lower for k = 0"));
    }
    if k > n {
        return Err(invalid(format!("need k ≤ n, got n = {n}, k = {k}")));
    }
    Ok(f64::max(0.5, ((n - k) as f64 / k as f64).sqrt() / 808.0))
}

/// `[c₁·√(n/(k+1)), c₂·√(n/(k+1))]`.
///
/// Without `c1`, the lower end is the explicit bound in its own normalization:
/// `A·√n` for `k = 0`, and for `k ≥ 1` the value of [`cor23_lower`], which is
/// the same as taking `c₁ = cor23_lower(n, k)·√((k+1)/n)`. Without `c2` the
/// upper end is [`Upper::Unbounded`].
pub fn thm21_bracket(n: usize, k: usize, c1: Option<f64>, c2: Option<f64>) -> Result<BoundBracket> {
    if k > n {
        return Err(invalid(format!("need k ≤ n, got n = {n}, k = {k}")));
    }
    for c in [c1, c2].into_iter().flatten() {
        if !(c > 0.0 && c.is_finite()) {
            return Err(invalid(format!("constants must be positive, got {c}")));
        }
    }
    let scale = (n as f64 / (k + 1) as f64).sqrt();
    let lower = match c1 {
        Some(c) => c * scale,
        None if k == 0 => komarov_lower(n),
        None => cor23_lower(n, k)?,
    };
    let upper = match c2 {
        Some(c) => Upper::Finite((c * scale).max(lower)),
        None => Upper::Unbounded,
    };
    Ok(BoundBracket {
        lower,
        upper,
        source: BoundSource::Thm21,
    })
}

/// Default for the unquantified upper constant of [`lemma34_bracket`].
pub const LEMMA34_C4: f64 = 1.0;

/// `[(n−k)/(12k), c₄·n/k]` for the incomplete-polynomial minimum. The upper
/// end is a fitted quantity, not a theorem; it is reported, never asserted.
pub fn lemma34_bracket(n: usize, k: usize, c4: Option<f64>) -> Result<(BoundBracket, BoundBracket)> {
    if !(1 <= k && k < n) {
        return Err(invalid(format!("need 1 ≤ k ≤ n − 1, got n = {n}, k = {k}")));
    }
    let lower = (n - k) as f64 / (12.0 * k as f64);
    let upper = c4.unwrap_or(LEMMA34_C4) * n as f64 / k as f64;
    Ok((
        BoundBracket::lower_only(lower, BoundSource::Lemma34Lower),
        BoundBracket {
            lower: 0.0,
            upper: Upper::Finite(upper),
            source: BoundSource::Lemma34Upper,
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketCheck {
    pub bracket: BoundBracket,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub spec: ClassSpec,
    pub ratio: CertifiedValue,
    pub checks: Vec<BracketCheck>,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// One `n,k,ratio,err,bound_source,bound_value,pass` row per check.
    pub fn csv_rows(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let value = if c.bracket.source == BoundSource::Lemma34Upper {
                    c.bracket.upper.value().unwrap_or(f64::INFINITY)
                } else {
                    c.bracket.lower
                };
                format!(
                    "{},{},{:.16e},{:.16e},{},{:.16e},{}",
                    self.spec.n,
                    self.spec.k,
                    self.ratio.value,
                    self.ratio.err,
                    c.bracket.source,
                    value,
                    c.pass
                )
            })
            .collect()
    }
}

pub const VERDICT_CSV_HEADER: &str = "n,k,ratio,err,bound_source,bound_value,pass";

/// Checks `P` against each lower bound whose hypotheses it satisfies: the
/// classical `√n/6` when all zeros are on `[-1, 1]`, `A√n` when `k = 0`, the
/// large-`n` bound when `k ≤ n/163000`, and the pinned-zero bound when `spec`
/// asks for a zero on `[-1, 1]`.
pub fn evaluate_verdict(p: &Polynomial, spec: &ClassSpec) -> Result<Verdict> {
    spec.validate()?;
    if !is_member(p, spec).member {
        return Err(precondition(format!(
            "polynomial is not in F({}, {}){}",
            spec.n,
            spec.k,
            if spec.pin { " with a zero on [-1, 1]" } else { "" }
        )));
    }
    let ratio = turan_ratio(p, Interval::unit())?;
    let tol = spec.geom_tol;
    let mut brackets = Vec::new();
    if p.degree() >= 1 && p.zeros().iter().all(|z| z.im.abs() <= tol && z.re.abs() <= 1.0 + tol) {
        brackets.push(BoundBracket::lower_only(turan11_lower(p.degree()), BoundSource::Turan11));
    }
    if spec.k == 0 {
        brackets.push(BoundBracket::lower_only(komarov_lower(spec.n), BoundSource::Komarov));
    }
    if let Ok(v) = thm22_lower(spec.n, spec.k) {
        brackets.push(BoundBracket::lower_only(v, BoundSource::Thm22));
    }
    if spec.pin {
        // F(n, 0) ⊆ F(n, 1), so k = 0 uses the k = 1 value.
        let v = cor23_lower(spec.n, spec.k.max(1))?;
        brackets.push(BoundBracket::lower_only(v, BoundSource::Cor23));
    }
    let checks = brackets
        .into_iter()
        .map(|bracket| BracketCheck {
            pass: ratio.value + ratio.err >= bracket.lower,
            bracket,
        })
        .collect();
    Ok(Verdict {
        spec: *spec,
        ratio,
        checks,
    })
}
