//! The restricted-zero classes `F(n, k)` and the incomplete classes `P(n, k)`:
//! membership, seeded sampling, and the flat-vector parametrization used by
//! the optimizer.
//!
//! `F(n, k)` holds the polynomials of degree at most `n` with at least `n − k`
//! zeros in the closed upper half disk `D⁺ = {|z| ≤ 1, Im z ≥ 0}`. `P(n, k)`
//! holds the polynomials `x^{n+1}·R(x)` with `deg R ≤ k − 1`.
//!
//! The zero polynomial is never reported as a member of either family; every
//! ratio computed downstream would be undefined for it.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::polynomial::{Complex, Polynomial};

/// Boundary tolerance: the half disk and the interval are closed sets, so
/// zeros numerically on `|z| = 1` or on the real axis count as inside.
pub const GEOM_TOL: f64 = 1e-9;

/// Half-width of the box free zeros are sampled from.
pub const SAMPLE_BOX: f64 = 2.0;

/// Half-width of the box free zeros live in during search.
pub const SEARCH_BOX: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub n: usize,
    pub k: usize,
    /// Additionally require a zero on `[-1, 1]`.
    #[serde(default)]
    pub pin: bool,
    #[serde(default = "default_geom_tol", skip_serializing)]
    pub geom_tol: f64,
}

fn default_geom_tol() -> f64 {
    GEOM_TOL
}

impl ClassSpec {
    pub fn new(n: usize, k: usize, pin: bool) -> Result<Self> {
        let spec = Self {
            n,
            k,
            pin,
            geom_tol: GEOM_TOL,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks `k ≤ n`, and `n ≥ 1` when a pinned zero is requested.
    pub fn validate(&self) -> Result<()> {
        if self.k > self.n {
            return Err(invalid(format!("class needs k ≤ n, got n = {}, k = {}", self.n, self.k)));
        }
        if self.pin && self.n == 0 {
            return Err(invalid("a pinned zero needs n ≥ 1"));
        }
        if !(self.geom_tol >= 0.0) {
            return Err(invalid("geometric tolerance must be nonnegative"));
        }
        Ok(())
    }

    /// Number of zeros that must lie in the half disk.
    pub fn constrained(&self) -> usize {
        self.n - self.k
    }

    /// Length of the parameter vector taken by [`embed`].
    pub fn dimension(&self) -> usize {
        2 * self.n
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("class spec serializes")
    }
}

/// A point of the closed upper half disk in polar form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfDiskPoint {
    pub r: f64,
    pub theta: f64,
}

impl HalfDiskPoint {
    /// Clamps into `r ∈ [0, 1]`, `θ ∈ [0, π]`.
    pub fn clamped(r: f64, theta: f64) -> Self {
        Self {
            r: r.clamp(0.0, 1.0),
            theta: theta.clamp(0.0, PI),
        }
    }

    pub fn to_complex(self) -> Complex {
        Complex::from_polar(self.r, self.theta)
    }
}

pub fn in_half_disk(z: Complex, tol: f64) -> bool {
    z.norm() <= 1.0 + tol && z.im >= -tol
}

pub fn on_unit_interval(z: Complex, tol: f64) -> bool {
    z.im.abs() <= tol && z.re.abs() <= 1.0 + tol
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub member: bool,
    /// Indices (into `P.zeros()`) of the zeros counted in the half disk.
    pub counted: Vec<usize>,
    /// Index of a zero on `[-1, 1]`, when one exists.
    pub interval_zero: Option<usize>,
    pub degree: usize,
}

/// Membership in `F(n, k)`, with the witnesses used to decide it.
///
/// ```
/// use turan_lab::classes::{is_member, ClassSpec};
/// use turan_lab::Polynomial;
/// let p = Polynomial::from_real_zeros(&[1.0, 1.0, -1.0, -1.0]);
/// assert!(is_member(&p, &ClassSpec::new(4, 0, false)?).member);
/// assert!(!is_member(&Polynomial::from_real_zeros(&[2.0]), &ClassSpec::new(1, 0, false)?).member);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn is_member(p: &Polynomial, spec: &ClassSpec) -> MembershipReport {
    let tol = spec.geom_tol;
    let counted: Vec<usize> = p
        .zeros()
        .iter()
        .enumerate()
        .filter(|(_, z)| in_half_disk(**z, tol))
        .map(|(i, _)| i)
        .collect();
    let interval_zero = p.zeros().iter().position(|z| on_unit_interval(*z, tol));
    let member = !p.is_zero()
        && p.degree() <= spec.n
        && counted.len() >= spec.constrained()
        && (!spec.pin || interval_zero.is_some());
    MembershipReport {
        member,
        counted,
        interval_zero,
        degree: p.degree(),
    }
}

/// `P(n, k)`: degree at most `n + k` with at least `n + 1` zeros at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IncompleteSpec {
    pub n: usize,
    pub k: usize,
    #[serde(default = "default_geom_tol", skip_serializing)]
    pub geom_tol: f64,
}

impl IncompleteSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(invalid(format!(
                "incomplete class needs positive n and k, got n = {n}, k = {k}"
            )));
        }
        Ok(Self {
            n,
            k,
            geom_tol: GEOM_TOL,
        })
    }
}

pub fn incomplete_member(p: &Polynomial, spec: &IncompleteSpec) -> bool {
    !p.is_zero()
        && p.degree() <= spec.n + spec.k
        && p.zeros().iter().filter(|z| z.norm() <= spec.geom_tol).count() > spec.n
}

/// Deterministic generator for `(seed, stream)`; distinct streams are
/// independent, so parallel work can be split without changing results.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A monic member of `F(n, k)` drawn from `seed`.
///
/// The `n − k` constrained zeros are uniform by area in the half disk, the
/// other `k` uniform in `[-2, 2]²`. With `pin`, the first constrained zero (or
/// the first free zero when `k = n`) is redrawn uniformly on `[-1, 1]`.
pub fn sample(spec: &ClassSpec, seed: u64) -> Result<Polynomial> {
    sample_with(spec, &mut rng_for(seed, 0))
}

pub fn sample_with(spec: &ClassSpec, rng: &mut impl Rng) -> Result<Polynomial> {
    spec.validate()?;
    let mut zeros = Vec::with_capacity(spec.n);
    for _ in 0..spec.constrained() {
        let r = rng.gen::<f64>().sqrt();
        let theta = PI * rng.gen::<f64>();
        zeros.push(HalfDiskPoint { r, theta }.to_complex());
    }
    for _ in 0..spec.k {
        let x = rng.gen_range(-SAMPLE_BOX..=SAMPLE_BOX);
        let y = rng.gen_range(-SAMPLE_BOX..=SAMPLE_BOX);
        zeros.push(Complex::new(x, y));
    }
    if spec.pin {
        zeros[0] = Complex::new(rng.gen_range(-1.0..=1.0), 0.0);
    }
    Polynomial::from_zeros(Complex::new(1.0, 0.0), zeros)
}

/// Maps `2n` reals onto a monic member of `F(n, k)`.
///
/// Pairs `0 .. n−k` are `(r, θ)` clamped into the half disk; the remaining `k`
/// pairs are free zeros `3·tanh(x) + 3i·tanh(y)`. With `pin`, the first zero
/// becomes the real number `clamp(p₀, −1, 1)` and `p₁` is ignored.
///
/// ```
/// use turan_lab::classes::{embed, ClassSpec};
/// use turan_lab::Polynomial;
/// let spec = ClassSpec::new(2, 0, false)?;
/// assert_eq!(embed(&[0.0; 4], &spec)?, Polynomial::from_real_zeros(&[0.0, 0.0]));
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn embed(params: &[f64], spec: &ClassSpec) -> Result<Polynomial> {
    spec.validate()?;
    if params.len() != spec.dimension() {
        return Err(invalid(format!(
            "parameter vector has length {}, class ({}, {}) needs {}",
            params.len(),
            spec.n,
            spec.k,
            spec.dimension()
        )));
    }
    if params.iter().any(|p| !p.is_finite()) {
        return Err(invalid("parameter vector has non-finite entries"));
    }
    let m = spec.constrained();
    let zeros: Vec<Complex> = params
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| {
            if i == 0 && spec.pin {
                Complex::new(pair[0].clamp(-1.0, 1.0), 0.0)
            } else if i < m {
                HalfDiskPoint::clamped(pair[0], pair[1]).to_complex()
            } else {
                Complex::new(SEARCH_BOX * pair[0].tanh(), SEARCH_BOX * pair[1].tanh())
            }
        })
        .collect();
    Polynomial::from_zeros(Complex::new(1.0, 0.0), zeros)
}

/// A parameter vector that [`embed`] maps onto the zeros of `p` (up to the
/// leading coefficient), or `None` when `p` is not a degree-`n` member or a
/// free zero falls outside the search box.
pub fn params_for(p: &Polynomial, spec: &ClassSpec) -> Option<Vec<f64>> {
    let report = is_member(p, spec);
    if !report.member || p.degree() != spec.n {
        return None;
    }
    let tol = spec.geom_tol;
    let zeros = p.zeros();
    let mut used = vec![false; zeros.len()];
    let mut params = Vec::with_capacity(spec.dimension());

    let mut slots = spec.constrained();
    if spec.pin {
        let i = report.interval_zero?;
        used[i] = true;
        params.extend([zeros[i].re.clamp(-1.0, 1.0), 0.0]);
        // Takes the first constrained slot, or the first free one if k = n.
        slots = slots.saturating_sub(1);
    }
    for (i, z) in zeros.iter().enumerate() {
        if slots == 0 {
            break;
        }
        if !used[i] && in_half_disk(*z, tol) {
            used[i] = true;
            slots -= 1;
            let theta = if z.norm() == 0.0 { 0.0 } else { z.im.max(0.0).atan2(z.re) };
            params.extend([z.norm().min(1.0), theta]);
        }
    }
    if slots > 0 {
        return None;
    }
    let limit = SEARCH_BOX * (1.0 - 1e-12);
    for (i, z) in zeros.iter().enumerate() {
        if used[i] {
            continue;
        }
        if z.re.abs() >= limit || z.im.abs() >= limit {
            return None;
        }
        params.extend([(z.re / SEARCH_BOX).atanh(), (z.im / SEARCH_BOX).atanh()]);
    }
    Some(params)
}
