//! Simultaneous complex root finding (Aberth–Ehrlich iteration).
//!
//! The iteration only needs the Newton correction `p(x)/p'(x)`, so callers can
//! supply it from whatever representation evaluates most accurately: Horner on
//! coefficients, or a logarithmic-derivative sum over known zeros.

use crate::polynomial::Complex;

const MAX_ITER: usize = 2000;

pub(crate) struct Aberth {
    pub roots: Vec<Complex>,
    pub converged: bool,
}

/// Starting points on a circle, rotated off the real axis so that conjugate
/// pairs are not seeded symmetrically.
pub(crate) fn circle_start(count: usize, center: Complex, radius: f64) -> Vec<Complex> {
    let radius = if radius > 0.0 { radius } else { 1.0 };
    (0..count)
        .map(|j| {
            let angle = std::f64::consts::TAU * j as f64 / count as f64 + 0.4;
            center + Complex::from_polar(radius, angle)
        })
        .collect()
}

/// Runs the iteration from `start`. `newton(x)` returns `p(x)/p'(x)`;
/// `scale` is a length used for the convergence test.
pub(crate) fn aberth<F>(start: Vec<Complex>, scale: f64, newton: F) -> Aberth
where
    F: Fn(Complex) -> Complex,
{
    let mut roots = start;
    let count = roots.len();
    let mut done = vec![false; count];
    let scale = scale.max(f64::MIN_POSITIVE);
    let mut kick = 0usize;
    for _ in 0..MAX_ITER {
        if done.iter().all(|&d| d) {
            break;
        }
        for k in 0..count {
            if done[k] {
                continue;
            }
            let x = roots[k];
            let ratio = newton(x);
            if ratio == Complex::new(0.0, 0.0) {
                done[k] = true;
                continue;
            }
            let repulsion: Complex = (0..count)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = x - roots[j];
                    if d == Complex::new(0.0, 0.0) {
                        Complex::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // Landed on a pole of the correction; nudge deterministically.
                kick += 1;
                roots[k] = x + Complex::from_polar(1e-7 * scale, 1.0 + kick as f64);
                continue;
            }
            roots[k] = x - step;
            if step.norm() <= 4.0 * f64::EPSILON * (x.norm() + scale) {
                done[k] = true;
            }
        }
    }
    Aberth {
        converged: done.iter().all(|&d| d),
        roots,
    }
}

/// Horner evaluation of `p` and `p'` from ascending coefficients.
pub(crate) fn horner_with_derivative(coeffs: &[Complex], x: Complex) -> (Complex, Complex) {
    let mut p = Complex::new(0.0, 0.0);
    let mut dp = Complex::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// All complex roots of the polynomial with ascending coefficients `coeffs`
/// (top coefficient nonzero). Exact zeros at the origin are split off first.
pub(crate) fn roots_of_coefficients(coeffs: &[Complex]) -> Aberth {
    let zero = Complex::new(0.0, 0.0);
    let lead = coeffs.len() - 1;
    let shift = coeffs.iter().take_while(|&&c| c == zero).count();
    let mut roots = vec![zero; shift.min(lead)];
    let reduced = &coeffs[shift.min(lead)..];
    let degree = reduced.len() - 1;
    if degree == 0 {
        return Aberth {
            roots,
            converged: true,
        };
    }
    let top = reduced[degree];
    // Fujiwara's bound on root moduli.
    let bound = (1..=degree)
        .map(|j| {
            let c = reduced[degree - j] / top;
            let mag = if j == degree { c.norm() / 2.0 } else { c.norm() };
            mag.powf(1.0 / j as f64)
        })
        .fold(0.0_f64, f64::max)
        * 2.0;
    let center = -reduced[degree - 1] / (top * degree as f64);
    let start = circle_start(degree, center, 0.5 * bound.max(f64::MIN_POSITIVE));
    let found = aberth(start, bound.max(1.0), |x| {
        let (p, dp) = horner_with_derivative(reduced, x);
        if p == zero {
            zero
        } else {
            p / dp
        }
    });
    roots.extend(found.roots);
    Aberth {
        roots,
        converged: found.converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn quadratic_roots() {
        // x^2 + 1
        let out = roots_of_coefficients(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(out.converged);
        let mut ims: Vec<f64> = out.roots.iter().map(|r| r.im).collect();
        ims.sort_by(f64::total_cmp);
        assert!((ims[0] + 1.0).abs() < 1e-14 && (ims[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn origin_roots_split_exactly() {
        // x^3 (x - 2)
        let out = roots_of_coefficients(&[
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(-2.0, 0.0),
            c(1.0, 0.0),
        ]);
        assert_eq!(out.roots.iter().filter(|r| r.norm() == 0.0).count(), 3);
        assert!(out.roots.iter().any(|r| (r - c(2.0, 0.0)).norm() < 1e-14));
    }
}
