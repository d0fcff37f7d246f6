//! Factored and expanded polynomial representations.
//!
//! A [`Polynomial`] is stored as `leading · ∏(x − zᵢ)`. The factored form is
//! the source of truth: evaluation never goes through coefficients, so it
//! stays accurate at any degree. Coefficients are produced on demand and only
//! up to [`EXPANSION_CAP`], beyond which double-precision coefficient growth
//! makes them meaningless.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots;

pub use num_complex::Complex64 as Complex;

/// Highest degree for which coefficient expansion is attempted.
pub const EXPANSION_CAP: usize = 60;

/// Zeros closer than this (relative) are treated as one zero of higher
/// multiplicity when differentiating.
const CLUSTER_TOL: f64 = 1e-12;

/// Residual threshold for accepting re-factored derivative zeros.
const REFACTOR_RESIDUAL: f64 = 1e-8;

const ZERO: Complex = Complex::new(0.0, 0.0);

/// A closed real interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "interval [{lo}, {hi}] must be finite with lo <= hi"
            )));
        }
        Ok(Self { lo, hi })
    }

    /// The interval `[-1, 1]`.
    pub const fn unit() -> Self {
        Self { lo: -1.0, hi: 1.0 }
    }

    /// The interval `[0, 1]`.
    pub const fn unit_positive() -> Self {
        Self { lo: 0.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.hi == self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

impl Default for Interval {
    fn default() -> Self {
        Self::unit()
    }
}

impl TryFrom<[f64; 2]> for Interval {
    type Error = Error;

    fn try_from(v: [f64; 2]) -> Result<Self> {
        Self::new(v[0], v[1])
    }
}

impl From<Interval> for [f64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Whether a polynomial's zeros are trustworthy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backing {
    /// Zeros are exact inputs or passed the residual check; evaluation uses
    /// the product form.
    Factored,
    /// Root finding did not pass the residual check. The zeros are kept as
    /// approximations, but evaluation uses the coefficients.
    CoefficientBacked,
}

/// A complex polynomial in factored form.
#[derive(Debug, Clone)]
pub struct Polynomial {
    leading: Complex,
    zeros: Vec<Complex>,
    coeffs: Option<Vec<Complex>>,
    backing: Backing,
    is_zero: bool,
}

impl Polynomial {
    /// The identically zero polynomial.
    pub fn zero() -> Self {
        Self {
            leading: ZERO,
            zeros: Vec::new(),
            coeffs: Some(Vec::new()),
            backing: Backing::Factored,
            is_zero: true,
        }
    }

    /// The constant `c`, or the zero polynomial when `c == 0`.
    pub fn constant(c: Complex) -> Self {
        if c == ZERO {
            Self::zero()
        } else {
            Self::factored(c, Vec::new())
        }
    }

    /// `leading · ∏(x − zᵢ)`.
    ///
    /// ```
    /// use turan_lab::{Complex, Polynomial};
    /// let p = Polynomial::from_zeros(Complex::new(1.0, 0.0), vec![1.0.into(), (-1.0).into()])?;
    /// assert_eq!(p.degree(), 2);
    /// assert_eq!(p.evaluate(Complex::new(2.0, 0.0)), Complex::new(3.0, 0.0));
    /// # Ok::<(), turan_lab::Error>(())
    /// ```
    pub fn from_zeros(leading: Complex, zeros: Vec<Complex>) -> Result<Self> {
        if !(leading.re.is_finite() && leading.im.is_finite()) {
            return Err(Error::InvalidConstruction("leading coefficient must be finite".into()));
        }
        if let Some(z) = zeros.iter().find(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::InvalidConstruction(format!("zero {z} is not finite")));
        }
        if leading == ZERO {
            if zeros.is_empty() {
                return Ok(Self::zero());
            }
            return Err(Error::InvalidConstruction(
                "leading coefficient is 0 but zeros were given; use Polynomial::zero()".into(),
            ));
        }
        Ok(Self::factored(leading, zeros))
    }

    /// Monic polynomial with real zeros.
    pub fn from_real_zeros(zeros: &[f64]) -> Self {
        Self::factored(
            Complex::new(1.0, 0.0),
            zeros.iter().map(|&z| Complex::new(z, 0.0)).collect(),
        )
    }

    fn factored(leading: Complex, zeros: Vec<Complex>) -> Self {
        Self {
            leading,
            zeros,
            coeffs: None,
            backing: Backing::Factored,
            is_zero: false,
        }
    }

    /// Builds a polynomial from ascending coefficients by root finding.
    /// Trailing zero coefficients are dropped.
    pub fn from_coefficients(coeffs: &[Complex]) -> Result<Self> {
        let len = coeffs.iter().rposition(|&c| c != ZERO).map_or(0, |i| i + 1);
        let coeffs = &coeffs[..len];
        if coeffs.is_empty() {
            return Ok(Self::zero());
        }
        if coeffs.len() - 1 > EXPANSION_CAP {
            return Err(Error::UnsupportedDegree {
                degree: coeffs.len() - 1,
                cap: EXPANSION_CAP,
            });
        }
        let leading = coeffs[coeffs.len() - 1];
        let found = roots::roots_of_coefficients(coeffs);
        let ok = found.converged
            && found
                .roots
                .iter()
                .all(|&r| coefficient_residual_ok(coeffs, r));
        Ok(Self {
            leading,
            zeros: found.roots,
            coeffs: Some(coeffs.to_vec()),
            backing: if ok {
                Backing::Factored
            } else {
                Backing::CoefficientBacked
            },
            is_zero: false,
        })
    }

    pub fn from_real_coefficients(coeffs: &[f64]) -> Result<Self> {
        let c: Vec<Complex> = coeffs.iter().map(|&x| Complex::new(x, 0.0)).collect();
        Self::from_coefficients(&c)
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn leading(&self) -> Complex {
        self.leading
    }

    /// The zero multiset. For [`Backing::CoefficientBacked`] polynomials these
    /// are approximations only.
    pub fn zeros(&self) -> &[Complex] {
        &self.zeros
    }

    pub fn backing(&self) -> Backing {
        self.backing
    }

    /// Value at `x`, from the product form (or Horner for coefficient-backed
    /// polynomials).
    pub fn evaluate(&self, x: Complex) -> Complex {
        if self.is_zero {
            return ZERO;
        }
        match (self.backing, &self.coeffs) {
            (Backing::CoefficientBacked, Some(c)) => roots::horner_with_derivative(c, x).0,
            _ => self.zeros.iter().fold(self.leading, |acc, &z| acc * (x - z)),
        }
    }

    pub fn evaluate_real(&self, x: f64) -> Complex {
        self.evaluate(Complex::new(x, 0.0))
    }

    /// `P'(x)` computed from the zeros by the product rule, without building
    /// the derivative. Works at any degree.
    pub fn derivative_at(&self, x: Complex) -> Complex {
        if self.is_zero || self.zeros.is_empty() {
            return ZERO;
        }
        if let (Backing::CoefficientBacked, Some(c)) = (self.backing, &self.coeffs) {
            return roots::horner_with_derivative(c, x).1;
        }
        if self.zeros.iter().all(|&z| x != z) {
            let log_derivative: Complex = self.zeros.iter().map(|&z| (x - z).inv()).sum();
            return self.evaluate(x) * log_derivative;
        }
        // x is a zero: sum the products that skip one factor.
        (0..self.zeros.len())
            .map(|j| {
                self.zeros
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .fold(self.leading, |acc, (_, &z)| acc * (x - z))
            })
            .sum()
    }

    /// `Σ 1/(x − zᵢ)`, the logarithmic derivative `P'/P`.
    pub fn log_derivative(&self, x: Complex) -> Complex {
        self.zeros.iter().map(|&z| (x - z).inv()).sum()
    }

    /// Ascending coefficients, expanded from the zeros.
    pub fn coefficients(&self) -> Result<Vec<Complex>> {
        if let Some(c) = &self.coeffs {
            return Ok(c.clone());
        }
        if self.degree() > EXPANSION_CAP {
            return Err(Error::UnsupportedDegree {
                degree: self.degree(),
                cap: EXPANSION_CAP,
            });
        }
        Ok(expand(self.leading, &self.zeros))
    }

    /// The derivative. Zero multiplicities are tracked exactly; the remaining
    /// critical points are found by root finding on `Σ mⱼ/(x − wⱼ)` and checked
    /// by residual. On residual failure the result is coefficient-backed.
    pub fn derivative(&self) -> Result<Polynomial> {
        if self.is_zero || self.zeros.is_empty() {
            return Ok(Self::zero());
        }
        let n = self.degree();
        if n > EXPANSION_CAP {
            return Err(Error::UnsupportedDegree {
                degree: n,
                cap: EXPANSION_CAP,
            });
        }
        let dcoeffs = differentiate(&self.coefficients()?);
        if self.backing == Backing::CoefficientBacked {
            return Self::from_coefficients(&dcoeffs);
        }
        let leading = self.leading * n as f64;
        let groups = group_zeros(&self.zeros);
        let mut zeros = Vec::with_capacity(n - 1);
        for &(w, m) in &groups {
            zeros.extend(std::iter::repeat_n(w, m - 1));
        }
        let critical = critical_points(&groups);
        let ok = critical.converged;
        zeros.extend(critical.roots);
        Ok(Self {
            leading,
            zeros,
            coeffs: Some(dcoeffs),
            backing: if ok {
                Backing::Factored
            } else {
                Backing::CoefficientBacked
            },
            is_zero: false,
        })
    }

    /// The polynomial with conjugated coefficients, `P̄(x) = conj(P(conj x))`.
    pub fn conj(&self) -> Polynomial {
        let mut out = self.clone();
        out.leading = self.leading.conj();
        out.zeros.iter_mut().for_each(|z| *z = z.conj());
        if let Some(c) = &mut out.coeffs {
            c.iter_mut().for_each(|z| *z = z.conj());
        }
        out
    }

    /// `c · P`.
    pub fn scale(&self, c: Complex) -> Polynomial {
        if c == ZERO || self.is_zero {
            return Self::zero();
        }
        let mut out = self.clone();
        out.leading *= c;
        if let Some(coeffs) = &mut out.coeffs {
            coeffs.iter_mut().for_each(|z| *z *= c);
        }
        out
    }

    /// Product of two polynomials (concatenating zeros).
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero || other.is_zero {
            return Self::zero();
        }
        let mut zeros = self.zeros.clone();
        zeros.extend_from_slice(&other.zeros);
        let coefficient_backed = self.backing == Backing::CoefficientBacked
            || other.backing == Backing::CoefficientBacked;
        // A coefficient-backed product too large to expand falls back to the
        // approximate zeros.
        let coeffs = match (coefficient_backed, self.coefficients(), other.coefficients()) {
            (true, Ok(a), Ok(b)) => Some(convolve(&a, &b)),
            _ => None,
        };
        Self {
            leading: self.leading * other.leading,
            zeros,
            backing: if coeffs.is_some() {
                Backing::CoefficientBacked
            } else {
                Backing::Factored
            },
            coeffs,
            is_zero: false,
        }
    }

    /// The real polynomial `P(x)·P̄(x)`, equal to `|P(x)|²` for real `x`.
    pub fn modulus_square_on_reals(&self) -> Result<RealPolynomial> {
        let a = self.coefficients()?;
        let b: Vec<Complex> = a.iter().map(|z| z.conj()).collect();
        let c = convolve(&a, &b);
        Ok(RealPolynomial::new(c.iter().map(|z| z.re).collect()))
    }

    /// Interchange form `{"leading": [re, im], "zeros": [[re, im], ...]}`.
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            leading: [self.leading.re, self.leading.im],
            zeros: self.zeros.iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PolynomialJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidArgument(format!("polynomial JSON: {e}")))?;
        raw.try_into()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.is_zero == other.is_zero && self.leading == other.leading && self.zeros == other.zeros
    }
}

/// Serialized polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub leading: [f64; 2],
    pub zeros: Vec<[f64; 2]>,
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(raw: PolynomialJson) -> Result<Self> {
        Polynomial::from_zeros(
            Complex::new(raw.leading[0], raw.leading[1]),
            raw.zeros.iter().map(|z| Complex::new(z[0], z[1])).collect(),
        )
    }
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        p.to_json()
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        Polynomial::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Expands `leading · ∏(x − zᵢ)` into ascending coefficients.
pub(crate) fn expand(leading: Complex, zeros: &[Complex]) -> Vec<Complex> {
    let mut c = vec![leading];
    for &z in zeros {
        c.push(ZERO);
        for i in (1..c.len()).rev() {
            c[i] = c[i - 1] - z * c[i];
        }
        c[0] = -z * c[0];
    }
    c
}

fn differentiate(c: &[Complex]) -> Vec<Complex> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &a)| a * i as f64)
        .collect()
}

fn convolve(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn coefficient_residual_ok(coeffs: &[Complex], r: Complex) -> bool {
    let (p, _) = roots::horner_with_derivative(coeffs, r);
    let scale: f64 = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * r.norm() + c.norm());
    p.norm() <= REFACTOR_RESIDUAL * scale.max(f64::MIN_POSITIVE)
}

/// Distinct zeros with multiplicities, in order of first appearance.
pub(crate) fn group_zeros(zeros: &[Complex]) -> Vec<(Complex, usize)> {
    let mut groups: Vec<(Complex, usize)> = Vec::new();
    for &z in zeros {
        match groups
            .iter_mut()
            .find(|(w, _)| (z - *w).norm() <= CLUSTER_TOL * (1.0 + w.norm()))
        {
            Some(g) => g.1 += 1,
            None => groups.push((z, 1)),
        }
    }
    groups
}

/// Zeros of `Σ mⱼ/(x − wⱼ)` (the critical points not located at a zero),
/// with a residual check. `converged` is false if the check fails.
pub(crate) fn critical_points(groups: &[(Complex, usize)]) -> roots::Aberth {
    let count = groups.len().saturating_sub(1);
    if count == 0 {
        return roots::Aberth {
            roots: Vec::new(),
            converged: true,
        };
    }
    let total: usize = groups.iter().map(|g| g.1).sum();
    let center = groups.iter().map(|&(w, m)| w * m as f64).sum::<Complex>() / total as f64;
    let radius = groups
        .iter()
        .map(|(w, _)| (w - center).norm())
        .fold(0.0, f64::max);
    let start = roots::circle_start(count, center, 0.7 * radius);
    let out = roots::aberth(start, radius.max(1e-300), |x| {
        let mut g = ZERO;
        let mut dg = ZERO;
        let mut poles = ZERO;
        for &(w, m) in groups {
            let inv = (x - w).inv();
            g += inv * m as f64;
            dg -= inv * inv * m as f64;
            poles += inv;
        }
        if g == ZERO {
            return ZERO;
        }
        // T'/T = g'/g + Σ 1/(x − wₗ) for T = g · ∏(x − wₗ).
        (dg / g + poles).inv()
    });
    let residual_ok = out.roots.iter().all(|&r| {
        let mut g = ZERO;
        let mut scale = 0.0;
        for &(w, m) in groups {
            let d = r - w;
            g += d.inv() * m as f64;
            scale += m as f64 / d.norm();
        }
        g.norm() <= REFACTOR_RESIDUAL * scale
    });
    roots::Aberth {
        converged: residual_ok,
        roots: snap_clusters(out.roots, groups, radius),
    }
}

/// Aberth leaves an r-fold critical point as r roots spread by about
/// `ε^(1/r)`. A tight cluster is replaced by one refined point when the first r
/// derivatives of `Σ mⱼ/(x − wⱼ)` (up to sign and factorial) vanish there.
fn snap_clusters(mut roots: Vec<Complex>, groups: &[(Complex, usize)], radius: f64) -> Vec<Complex> {
    let reach = 1e-4 * radius.max(1e-300);
    let mut taken = vec![false; roots.len()];
    for i in 0..roots.len() {
        if taken[i] {
            continue;
        }
        let members: Vec<usize> = (i..roots.len())
            .filter(|&j| !taken[j] && (roots[j] - roots[i]).norm() <= reach)
            .collect();
        if members.len() < 2 {
            continue;
        }
        let r = members.len() as i32;
        let power_sum = |c: Complex, order: i32| -> Complex {
            groups.iter().map(|&(w, m)| (c - w).inv().powi(order) * m as f64).sum()
        };
        // The centroid is only good to about the cluster width; Newton on the
        // last vanishing derivative, which has a simple zero, sharpens it.
        let mut c = members.iter().map(|&j| roots[j]).sum::<Complex>() / r as f64;
        for _ in 0..8 {
            let d = power_sum(c, r + 1) * r as f64;
            if d == ZERO {
                break;
            }
            let step = power_sum(c, r) / d;
            c += step;
            if step.norm() <= 1e-16 * radius {
                break;
            }
        }
        let vanishes = (1..=r).all(|order| {
            let mut sum = ZERO;
            let mut mag = 0.0;
            for &(w, m) in groups {
                let t = (c - w).inv().powi(order) * m as f64;
                sum += t;
                mag += t.norm();
            }
            sum.norm() <= REFACTOR_RESIDUAL * mag
        });
        if vanishes {
            for &j in &members {
                roots[j] = c;
                taken[j] = true;
            }
        }
    }
    roots
}

/// A real polynomial with ascending coefficients. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Value together with `Σ |cᵢ||x|ⁱ`, the scale of the Horner rounding
    /// error.
    pub fn eval_with_scale(&self, x: f64) -> (f64, f64) {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold((0.0, 0.0), |(v, s), &c| (v * x + c, s * ax + c.abs()))
    }

    pub fn derivative(&self) -> RealPolynomial {
        RealPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> RealPolynomial {
        RealPolynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn sub(&self, other: &RealPolynomial) -> RealPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        RealPolynomial::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or(0.0)
                        - other.coeffs.get(i).copied().unwrap_or(0.0)
                })
                .collect(),
        )
    }
}
