//! Nelder–Mead downhill simplex with in-place restarts.
//!
//! When the simplex collapses, it is rebuilt around the best vertex at the
//! original scale; the run ends when a rebuilt simplex collapses again without
//! improving, or the evaluation budget runs out.

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub scale: f64,
    pub budget: usize,
    /// Relative spread of vertex values below which the simplex has collapsed.
    pub ftol: f64,
    /// Vertex distance below which the simplex has collapsed.
    pub xtol: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            scale: 0.3,
            budget: 20_000,
            ftol: 1e-13,
            xtol: 1e-10,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexOutcome {
    pub x: Vec<f64>,
    pub fx: f64,
    pub evals: usize,
    /// `(evaluation index, best value so far)` at every improvement;
    /// indices are 1-based.
    pub trace: Vec<(usize, f64)>,
}

struct Counter<F> {
    f: F,
    evals: usize,
    best: f64,
    best_x: Vec<f64>,
    trace: Vec<(usize, f64)>,
}

impl<F: FnMut(&[f64]) -> f64> Counter<F> {
    fn call(&mut self, x: &[f64]) -> f64 {
        self.evals += 1;
        let v = (self.f)(x);
        let v = if v.is_nan() { f64::INFINITY } else { v };
        if v < self.best {
            self.best = v;
            self.best_x = x.to_vec();
            self.trace.push((self.evals, v));
        }
        v
    }
}

/// Minimizes `f` from `x0`. Non-finite values count as `+∞`.
pub fn nelder_mead(f: impl FnMut(&[f64]) -> f64, x0: &[f64], opts: SimplexOptions) -> SimplexOutcome {
    let dim = x0.len();
    let mut c = Counter {
        f,
        evals: 0,
        best: f64::INFINITY,
        best_x: x0.to_vec(),
        trace: Vec::new(),
    };
    c.call(x0);
    if dim == 0 || opts.budget <= 1 {
        return finish(c);
    }

    let mut center = x0.to_vec();
    loop {
        let before = c.best;
        let mut pts = vec![center.clone()];
        for i in 0..dim {
            let mut p = center.clone();
            p[i] += opts.scale;
            pts.push(p);
        }
        let mut vals: Vec<f64> = Vec::with_capacity(dim + 1);
        vals.push(c.best);
        for p in &pts[1..] {
            if c.evals >= opts.budget {
                return finish(c);
            }
            vals.push(c.call(p));
        }
        if !descend(&mut c, &mut pts, &mut vals, opts) {
            return finish(c);
        }
        if c.best >= before && c.evals > dim + 1 {
            return finish(c);
        }
        center = c.best_x.clone();
    }
}

fn finish<F>(c: Counter<F>) -> SimplexOutcome {
    SimplexOutcome {
        x: c.best_x,
        fx: c.best,
        evals: c.evals,
        trace: c.trace,
    }
}

/// Runs until collapse (returns `true`) or budget exhaustion (`false`).
fn descend<F: FnMut(&[f64]) -> f64>(
    c: &mut Counter<F>,
    pts: &mut [Vec<f64>],
    vals: &mut [f64],
    opts: SimplexOptions,
) -> bool {
    let dim = pts.len() - 1;
    let mut order: Vec<usize> = (0..=dim).collect();
    loop {
        order.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]).then(a.cmp(&b)));
        let (best, worst, second) = (order[0], order[dim], order[dim - 1]);

        let spread = vals[worst] - vals[best];
        let size = pts
            .iter()
            .map(|p| dist(p, &pts[best]))
            .fold(0.0, f64::max);
        let flat = spread.is_finite() && spread <= opts.ftol * vals[best].abs().max(1e-300);
        if (flat && size <= opts.xtol.sqrt()) || size <= opts.xtol {
            return true;
        }
        if c.evals >= opts.budget {
            return false;
        }

        let mut centroid = vec![0.0; dim];
        for &i in &order[..dim] {
            for (m, x) in centroid.iter_mut().zip(&pts[i]) {
                *m += x / dim as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&pts[worst])
                .map(|(m, w)| m + t * (m - w))
                .collect()
        };

        let xr = along(REFLECT);
        let fr = c.call(&xr);
        if fr < vals[best] {
            if c.evals >= opts.budget {
                pts[worst] = xr;
                vals[worst] = fr;
                return false;
            }
            let xe = along(REFLECT * EXPAND);
            let fe = c.call(&xe);
            if fe < fr {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if fr < vals[second] {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        if c.evals >= opts.budget {
            return false;
        }
        // Contract toward the better of the reflected and worst points.
        let (xc, fc, accept) = if fr < vals[worst] {
            let x = along(REFLECT * CONTRACT);
            let v = c.call(&x);
            (x, v, v <= fr)
        } else {
            let x = along(-CONTRACT);
            let v = c.call(&x);
            (x, v, v < vals[worst])
        };
        if accept {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        // Shrink toward the best vertex.
        let anchor = pts[best].clone();
        for &i in &order[1..] {
            if c.evals >= opts.budget {
                return false;
            }
            for (x, a) in pts[i].iter_mut().zip(&anchor) {
                *x = a + SHRINK * (*x - a);
            }
            vals[i] = c.call(&pts[i]);
        }
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimizes_rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let out = nelder_mead(f, &[-1.2, 1.0], SimplexOptions { budget: 5000, ..Default::default() });
        assert!(out.fx < 1e-12, "{}", out.fx);
        assert!((out.x[0] - 1.0).abs() < 1e-5);
        assert!(out.evals <= 5000);
        assert!(out.trace.windows(2).all(|w| w[0].0 < w[1].0 && w[1].1 < w[0].1));
    }

    #[test]
    fn respects_budget_and_zero_dimension() {
        let mut calls = 0;
        let out = nelder_mead(|x: &[f64]| { calls += 1; x.iter().map(|v| v * v).sum() }, &[3.0; 5], SimplexOptions { budget: 40, ..Default::default() });
        assert_eq!(out.evals, calls);
        assert!(out.evals <= 40);

        let out = nelder_mead(|_: &[f64]| 7.0, &[], SimplexOptions::default());
        assert_eq!((out.fx, out.evals), (7.0, 1));
    }

    #[test]
    fn non_finite_values_are_avoided() {
        let f = |x: &[f64]| if x[0] < 0.0 { f64::NAN } else { (x[0] - 2.0).powi(2) };
        let out = nelder_mead(f, &[0.5], SimplexOptions { budget: 500, ..Default::default() });
        assert!((out.x[0] - 2.0).abs() < 1e-6);
    }
}
