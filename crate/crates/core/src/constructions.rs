//! Explicit polynomial families: the even construction built from an
//! incomplete polynomial, the full-disk family `(z^m − 1)^n` on which the
//! half-disk upper bound fails, and the classical `(x² − 1)^m` families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::{self, turan_ratio};
use crate::classes::{is_member, ClassSpec, MembershipReport};
use crate::error::{invalid, precondition, Error, Result};
use crate::polynomial::{Complex, Interval, Polynomial, EXPANSION_CAP};
use crate::search::{self, IncompleteObjective, SearchConfig};
use crate::supnorm::{self, CertifiedValue};

/// Where the maximizer of `|P'|` on `[0, 1]` sits relative to
/// `√(10(2k+1)/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confinement {
    Inside,
    Outside,
    /// The radius is at least 1, so every point of `[0, 1]` qualifies.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Details {
    Incomplete {
        n: usize,
        k: usize,
        /// `‖Q'‖_{[0,1]} / ‖Q‖_{[0,1]}` of the inner polynomial.
        inner_ratio: f64,
        /// Degree of the cofactor of `(1 − x²)^{n−k+1}`.
        inner_degree: usize,
        /// `√(10(2k+1)/n)`.
        radius: f64,
        argmax: f64,
        confinement: Confinement,
        /// `|‖P‖_{[-1,1]} − ‖Q‖_{[0,1]}|`
        norm_gap: f64,
        /// `max |P'(x) − 2x·R'(x²)|` over sample points, relative to `‖P'‖`.
        derivative_gap: f64,
    },
    FullDisk {
        epsilon: f64,
        n: usize,
        m: usize,
        argmax: f64,
        /// `(m − 1)/(mn − 1)`, the predicted value of `argmax^m`.
        predicted_power: f64,
        norm: f64,
        on_unit_circle: bool,
    },
    Classical {
        name: ClassicalFamily,
        m: usize,
        degree: usize,
        /// `√n/6`.
        turan_bound: f64,
        /// `ratio/√n`.
        sharpness: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub polynomial: Polynomial,
    pub intermediates: BTreeMap<String, Polynomial>,
    pub ratio: CertifiedValue,
    /// Upper bound the construction claims for the ratio, if any.
    pub predicted_bound: Option<f64>,
    pub class: ClassSpec,
    pub class_check: MembershipReport,
    pub details: Details,
}

impl ConstructionReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `√(10(2k+1)/n)`.
pub fn confinement_radius(n: usize, k: usize) -> f64 {
    (10.0 * (2 * k + 1) as f64 / n as f64).sqrt()
}

/// Builds `P(x) = R(x²)` with `R(x) = Q(1 − x)` from a minimizer `Q` of
/// `‖Q'‖/‖Q‖` on `[0, 1]` over the incomplete class `P(n−k, k)`. The result
/// lies in `F(2n, 2k)`: it is divisible by `(1 − x²)^{n−k+1}`.
///
/// ```
/// use turan_lab::constructions::thm24_construct;
/// use turan_lab::search::SearchConfig;
/// // k = 1 forces Q = x², so P = (1 − x²)².
/// let report = thm24_construct(2, 1, &SearchConfig::default())?;
/// assert!((report.ratio.value - 8.0 / (3.0 * 3f64.sqrt())).abs() < 1e-9);
/// assert!(report.class_check.member);
/// # Ok::<(), turan_lab::Error>(())
/// ```
pub fn thm24_construct(n: usize, k: usize, cfg: &SearchConfig) -> Result<ConstructionReport> {
    if !(1 <= k && 2 * k <= n) {
        return Err(precondition(format!("need 1 ≤ k ≤ n/2, got n = {n}, k = {k}")));
    }
    if n > search::SEARCH_DEGREE_CAP {
        return Err(Error::UnsupportedDegree {
            degree: n,
            cap: search::SEARCH_DEGREE_CAP,
        });
    }
    let inner = search::minimize_incomplete_ratio(n, k, IncompleteObjective::SupNorm, cfg)?;
    let q = inner.best;
    let one = Complex::new(1.0, 0.0);

    let sign = if q.degree() % 2 == 0 { 1.0 } else { -1.0 };
    let r = Polynomial::from_zeros(q.leading() * sign, q.zeros().iter().map(|z| one - z).collect())?;
    let p_zeros: Vec<Complex> = r.zeros().iter().flat_map(|&w| {
        let s = w.sqrt();
        [s, -s]
    }).collect();
    let p = Polynomial::from_zeros(r.leading(), p_zeros)?;

    // Zeros of R at exactly 1 come from the zeros of Q at the origin.
    let is_one = |z: &Complex| *z == one || *z == -one;
    let u_zeros: Vec<Complex> = p.zeros().iter().copied().filter(|z| !is_one(z)).collect();
    let u = Polynomial::from_zeros(p.leading(), u_zeros)?;
    let dr = r.derivative()?;
    let v_zeros: Vec<Complex> = {
        let mut at_one = 0;
        dr.zeros()
            .iter()
            .copied()
            .filter(|z| {
                if *z == one && at_one < n - k {
                    at_one += 1;
                    false
                } else {
                    true
                }
            })
            .collect()
    };
    let v = Polynomial::from_zeros(dr.leading(), v_zeros)?;

    let class = ClassSpec::new(2 * n, 2 * k, false)?;
    let class_check = is_member(&p, &class);
    let ratio = turan_ratio(&p, Interval::unit())?;

    let unit_pos = Interval::unit_positive();
    let dp = p.derivative()?;
    let top = supnorm::sup_norm_with_argmax(&dp, unit_pos, 1e-13 * dp.leading().norm().max(1e-300))?;
    let radius = confinement_radius(n, k);
    let confinement = if radius >= 1.0 {
        Confinement::Vacuous
    } else if top.argmax <= radius {
        Confinement::Inside
    } else {
        Confinement::Outside
    };

    let q_ratio = search::incomplete_ratio(&q, IncompleteObjective::SupNorm)?;
    let factor = if confinement == Confinement::Inside { radius } else { 1.0 };
    let predicted_bound = 2.0 * factor * q_ratio.upper();

    let q_norm = supnorm::sup_norm(&q, unit_pos, 1e-13 * q.leading().norm().max(1e-300))?;
    let p_norm = supnorm::sup_norm(&p, Interval::unit(), 1e-13 * p.leading().norm().max(1e-300))?;
    let norm_gap = (p_norm.value - q_norm.value).abs();
    let derivative_gap = (0..100)
        .map(|i| {
            let x = -1.0 + 2.0 * i as f64 / 99.0;
            let lhs = dp.evaluate_real(x);
            let rhs = 2.0 * x * dr.evaluate_real(x * x);
            (lhs - rhs).norm()
        })
        .fold(0.0, f64::max)
        / top.norm.value.max(1e-300);

    let mut intermediates = BTreeMap::new();
    intermediates.insert("Q".to_string(), q.clone());
    intermediates.insert("R".to_string(), r);
    intermediates.insert("U".to_string(), u.clone());
    intermediates.insert("V".to_string(), v);
    Ok(ConstructionReport {
        polynomial: p,
        intermediates,
        ratio,
        predicted_bound: Some(predicted_bound),
        class,
        class_check,
        details: Details::Incomplete {
            n,
            k,
            inner_ratio: q_ratio.value,
            inner_degree: u.degree(),
            radius,
            argmax: top.argmax,
            confinement,
            norm_gap,
            derivative_gap,
        },
    })
}

/// The smallest even integer `m` with `1/ε < m ≤ 1/ε + 2`.
pub fn even_m(epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(invalid(format!("epsilon must lie in (0, 1], got {epsilon}")));
    }
    let t = 1.0 / epsilon;
    let m = 2 * ((t / 2.0).floor() as usize + 1);
    assert!(t < m as f64 && m as f64 <= t + 2.0, "even m exists in an interval of length 2");
    Ok(m)
}

/// `(1/ε + 2)^{1−ε}·(mn)^ε`.
pub fn full_disk_bound(epsilon: f64, m: usize, n: usize) -> f64 {
    (1.0 / epsilon + 2.0).powf(1.0 - epsilon) * ((m * n) as f64).powf(epsilon)
}

/// The `m`-th roots of unity, with the real and imaginary axes hit exactly.
fn roots_of_unity(m: usize) -> Vec<Complex> {
    (0..m)
        .map(|j| {
            if 4 * j == m {
                Complex::new(0.0, 1.0)
            } else if 4 * j == 3 * m {
                Complex::new(0.0, -1.0)
            } else if 2 * j == m {
                Complex::new(-1.0, 0.0)
            } else if j == 0 {
                Complex::new(1.0, 0.0)
            } else {
                Complex::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64)
            }
        })
        .collect()
}

/// `P(z) = (z^m − 1)^n` with `m` from [`even_m`]: all zeros on the unit circle,
/// yet `‖P'‖/‖P‖` on `[-1, 1]` grows only like `(mn)^ε`.
pub fn remark_family(epsilon: f64, n: usize) -> Result<ConstructionReport> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let m = even_m(epsilon)?;
    let zeros: Vec<Complex> = roots_of_unity(m).into_iter().flat_map(|z| std::iter::repeat_n(z, n)).collect();
    let p = Polynomial::from_zeros(Complex::new(1.0, 0.0), zeros)?;
    let degree = m * n;

    let unit = Interval::unit();
    let unit_pos = Interval::unit_positive();
    let norm = supnorm::sup_norm(&p, unit, 1e-13)?;
    let (top, ratio) = if degree <= EXPANSION_CAP {
        let dp = p.derivative()?;
        (supnorm::sup_norm_with_argmax(&dp, unit_pos, 1e-12)?, turan_ratio(&p, unit)?)
    } else {
        let abs_dp = |x: f64| p.derivative_at(Complex::new(x, 0.0)).norm();
        let top = supnorm::grid_max(abs_dp, degree - 1, unit_pos, 1e-12 * degree as f64)?;
        (top, turan_ratio(&p, unit)?)
    };
    let on_unit_circle = p.zeros().iter().all(|z| (z.norm() - 1.0).abs() <= 1e-12);
    let class = ClassSpec::new(degree, n * (m / 2 - 1), false)?;
    Ok(ConstructionReport {
        class_check: is_member(&p, &class),
        polynomial: p,
        intermediates: BTreeMap::new(),
        ratio,
        predicted_bound: Some(full_disk_bound(epsilon, m, n)),
        class,
        details: Details::FullDisk {
            epsilon,
            n,
            m,
            argmax: top.argmax,
            predicted_power: (m - 1) as f64 / (degree - 1).max(1) as f64,
            norm: norm.value,
            on_unit_circle,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalFamily {
    /// `(x² − 1)^m`
    TuranEven,
    /// `(x² − 1)^m (x + 1)`
    TuranOdd,
}

impl std::str::FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "turan-even" => Ok(Self::TuranEven),
            "turan-odd" => Ok(Self::TuranOdd),
            other => Err(invalid(format!("unknown family {other:?}; expected turan-even or turan-odd"))),
        }
    }
}

/// `(x² − 1)^m` or `(x² − 1)^m (x + 1)`, whose ratios grow like `√n`: the
/// `√n/6` lower bound is sharp up to the constant.
pub fn classical_family(name: ClassicalFamily, m: usize) -> Result<ConstructionReport> {
    if m == 0 || 2 * m + 1 > EXPANSION_CAP {
        return Err(invalid(format!("need 1 ≤ m and 2m + 1 ≤ {EXPANSION_CAP}, got m = {m}")));
    }
    let mut zeros: Vec<f64> = (0..2 * m).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
    if name == ClassicalFamily::TuranOdd {
        zeros.push(-1.0);
    }
    let p = Polynomial::from_real_zeros(&zeros);
    let degree = p.degree();
    let ratio = turan_ratio(&p, Interval::unit())?;
    let class = ClassSpec::new(degree, 0, true)?;
    Ok(ConstructionReport {
        class_check: is_member(&p, &class),
        polynomial: p,
        intermediates: BTreeMap::new(),
        ratio,
        predicted_bound: None,
        class,
        details: Details::Classical {
            name,
            m,
            degree,
            turan_bound: bounds::turan11_lower(degree),
            sharpness: ratio.value / (degree as f64).sqrt(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SearchConfig {
        SearchConfig {
            budget: 2000,
            restarts: 4,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn thm24_smallest_case() {
        let r = thm24_construct(2, 1, &quick()).unwrap();
        let expected = Polynomial::from_real_zeros(&[1.0, -1.0, 1.0, -1.0]);
        let mut got: Vec<f64> = r.polynomial.zeros().iter().map(|z| z.re).collect();
        got.sort_by(f64::total_cmp);
        assert_eq!(got, vec![-1.0, -1.0, 1.0, 1.0]);
        assert_eq!(r.polynomial.leading(), expected.leading());
        assert!((r.ratio.value - 8.0 / (3.0 * 3f64.sqrt())).abs() < 1e-12);
        assert!(r.class_check.member);
        let Details::Incomplete { confinement, norm_gap, derivative_gap, inner_degree, .. } = r.details else {
            panic!("wrong details");
        };
        assert_eq!(confinement, Confinement::Vacuous);
        assert!(norm_gap < 1e-12 && derivative_gap < 1e-12);
        assert_eq!(inner_degree, 0);
        assert!(r.ratio.value <= r.predicted_bound.unwrap());
    }

    #[test]
    fn thm24_pipeline_identities() {
        for (n, k) in [(8, 1), (10, 2), (12, 3)] {
            let r = thm24_construct(n, k, &quick()).unwrap();
            assert!(r.class_check.member, "({n}, {k})");
            assert!(r.polynomial.degree() <= 2 * n);
            let Details::Incomplete { norm_gap, derivative_gap, inner_degree, .. } = r.details else {
                panic!("wrong details");
            };
            assert!(norm_gap < 1e-9, "({n}, {k}): {norm_gap}");
            assert!(derivative_gap < 1e-9, "({n}, {k}): {derivative_gap}");
            assert!(inner_degree <= 2 * k - 2);
            let ones = r.polynomial.zeros().iter().filter(|z| z.re.abs() == 1.0 && z.im == 0.0).count();
            assert_eq!(ones, 2 * (n - k + 1));
            assert!(r.ratio.value <= r.predicted_bound.unwrap() + r.ratio.err);
        }
        assert!(matches!(thm24_construct(4, 3, &quick()), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn even_m_selection() {
        assert_eq!(even_m(0.3).unwrap(), 4);
        assert_eq!(even_m(1.0).unwrap(), 2);
        assert_eq!(even_m(0.5).unwrap(), 4);
        assert_eq!(even_m(0.1).unwrap(), 12);
        assert!(even_m(0.0).is_err() && even_m(1.5).is_err());
    }

    #[test]
    fn remark_family_examples() {
        let r = remark_family(0.3, 1).unwrap();
        let Details::FullDisk { m, argmax, norm, on_unit_circle, .. } = r.details else {
            panic!("wrong details");
        };
        assert_eq!(m, 4);
        assert!((argmax - 1.0).abs() < 1e-12);
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(on_unit_circle);
        assert!((r.ratio.value - 4.0).abs() < 1e-9);

        let r = remark_family(0.3, 5).unwrap();
        let Details::FullDisk { argmax, predicted_power, .. } = r.details else {
            panic!("wrong details");
        };
        assert!((predicted_power - 3.0 / 19.0).abs() < 1e-15);
        assert!((argmax.powi(4) - predicted_power).abs() < 1e-6);
        assert!(r.ratio.value <= r.predicted_bound.unwrap());

        // ε = 1 gives m = 2: the classical even family.
        let a = remark_family(1.0, 3).unwrap();
        let b = classical_family(ClassicalFamily::TuranEven, 3).unwrap();
        assert!((a.ratio.value - b.ratio.value).abs() < 1e-12);
    }

    #[test]
    fn classical_examples() {
        let r = classical_family(ClassicalFamily::TuranEven, 2).unwrap();
        assert!((r.ratio.value - 8.0 / (3.0 * 3f64.sqrt())).abs() < 1e-12);
        let Details::Classical { degree, turan_bound, .. } = r.details else { panic!() };
        assert_eq!(degree, 4);
        assert!((turan_bound - 1.0 / 3.0).abs() < 1e-15);

        let r = classical_family(ClassicalFamily::TuranEven, 1).unwrap();
        assert!((r.ratio.value - 2.0).abs() < 1e-14);

        let r = classical_family(ClassicalFamily::TuranOdd, 1).unwrap();
        assert!(r.class_check.member);
        // (x² − 1)(x + 1): |P| peaks at x = 1/3 with 32/27, |P'| at x = 1 with 4.
        assert!((r.ratio.value - 4.0 / (32.0 / 27.0)).abs() < 1e-12);
    }

    #[test]
    fn classical_sharpness_law() {
        for m in 1..=25 {
            let r = classical_family(ClassicalFamily::TuranEven, m).unwrap();
            let Details::Classical { sharpness, .. } = r.details else { panic!() };
            assert!((0.15..=2.0).contains(&sharpness), "m = {m}: {sharpness}");
        }
    }
}
