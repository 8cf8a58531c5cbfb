//! Derivative-free local search: Nelder–Mead followed by a coordinate-wise
//! golden-section polish.

use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct LocalOutcome<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evaluations: usize,
    pub converged: bool,
}

struct Counter<'a, T, F> {
    f: &'a F,
    evals: usize,
    _t: std::marker::PhantomData<T>,
}

impl<T: Real, F: Fn(&[T]) -> T> Counter<'_, T, F> {
    /// Minimized quantity: the negated objective, with NaN mapped to +∞.
    fn cost(&mut self, x: &[T]) -> T {
        self.evals += 1;
        let v = (self.f)(x);
        if v.is_nan() {
            T::infinity()
        } else {
            -v
        }
    }
}

fn axpy<T: Real>(base: &[T], dir: &[T], k: T) -> Vec<T> {
    base.iter().zip(dir).map(|(&b, &d)| b + k * d).collect()
}

fn sub<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// One Nelder–Mead run from `x0`. Returns the best vertex, its cost and
/// whether the cost spread fell below `tol` within `max_evals`.
fn nelder_mead<T: Real, F: Fn(&[T]) -> T>(
    c: &mut Counter<'_, T, F>,
    x0: &[T],
    step: T,
    max_evals: usize,
    tol: T,
) -> (Vec<T>, T, bool) {
    let n = x0.len();
    let start = c.evals;
    let mut pts: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    let f0 = c.cost(x0);
    pts.push((x0.to_vec(), f0));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] += step;
        let f = c.cost(&x);
        pts.push((x, f));
    }
    let (alpha, gamma, rho, sigma) = (T::one(), T::lit(2.0), T::lit(0.5), T::lit(0.5));
    let mut converged = false;
    loop {
        pts.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
        let spread = pts[n].1 - pts[0].1;
        if spread <= tol {
            converged = true;
            break;
        }
        if c.evals - start >= max_evals {
            break;
        }
        let mut centroid = vec![T::zero(); n];
        for (x, _) in &pts[..n] {
            for (ci, &xi) in centroid.iter_mut().zip(x) {
                *ci += xi;
            }
        }
        let inv = T::one() / T::lit(n as f64);
        centroid.iter_mut().for_each(|v| *v *= inv);
        let away = sub(&centroid, &pts[n].0);
        let xr = axpy(&centroid, &away, alpha);
        let fr = c.cost(&xr);
        if fr < pts[0].1 {
            let xe = axpy(&centroid, &away, gamma);
            let fe = c.cost(&xe);
            pts[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < pts[n - 1].1 {
            pts[n] = (xr, fr);
            continue;
        }
        let (xc, fc, accept) = if fr < pts[n].1 {
            let xc = axpy(&centroid, &away, rho);
            let fc = c.cost(&xc);
            let ok = fc <= fr;
            (xc, fc, ok)
        } else {
            let xc = axpy(&centroid, &away, -rho);
            let fc = c.cost(&xc);
            let ok = fc < pts[n].1;
            (xc, fc, ok)
        };
        if accept {
            pts[n] = (xc, fc);
            continue;
        }
        let best = pts[0].0.clone();
        for p in pts.iter_mut().skip(1) {
            let d = sub(&p.0, &best);
            p.0 = axpy(&best, &d, sigma);
            p.1 = c.cost(&p.0);
        }
    }
    let (x, f) = pts.swap_remove(0);
    (x, f, converged)
}

/// Golden-section search of each coordinate in `[x_i − h, x_i + h]`,
/// keeping only improvements.
fn golden_polish<T: Real, F: Fn(&[T]) -> T>(
    c: &mut Counter<'_, T, F>,
    x: &mut [T],
    fx: &mut T,
    h: T,
    evals_per_coord: usize,
) {
    let g = T::lit(0.5 * (5f64.sqrt() - 1.0));
    for i in 0..x.len() {
        let orig = x[i];
        let (mut lo, mut hi) = (orig - h, orig + h);
        let probe = |c: &mut Counter<'_, T, F>, t: T, x: &mut [T]| {
            x[i] = t;
            c.cost(x)
        };
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let mut f1 = probe(c, x1, x);
        let mut f2 = probe(c, x2, x);
        let (mut best_t, mut best_f) = (orig, *fx);
        for (t, f) in [(x1, f1), (x2, f2)] {
            if f < best_f {
                best_t = t;
                best_f = f;
            }
        }
        for _ in 2..evals_per_coord {
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = probe(c, x1, x);
                if f1 < best_f {
                    best_t = x1;
                    best_f = f1;
                }
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = probe(c, x2, x);
                if f2 < best_f {
                    best_t = x2;
                    best_f = f2;
                }
            }
        }
        x[i] = best_t;
        *fx = best_f;
    }
}

/// Maximizes `f` from `x0` within `max_evals` evaluations.
///
/// A first simplex run is followed by a second one restarted at the best
/// point with a smaller step, then by the golden-section polish. The result
/// counts as converged when the second run met the spread criterion and
/// neither it nor the polish improved the value by more than `tol`.
pub fn maximize<T: Real, F: Fn(&[T]) -> T>(f: &F, x0: Vec<T>, step: T, max_evals: usize, tol: T) -> LocalOutcome<T> {
    let mut c = Counter {
        f,
        evals: 0,
        _t: std::marker::PhantomData,
    };
    let n = x0.len().max(1);
    let polish_per_coord = 24usize;
    let polish_budget = (polish_per_coord * n).min(max_evals / 4);
    let nm_budget = max_evals.saturating_sub(polish_budget);
    let first_budget = nm_budget * 2 / 3;
    let (x1, f1, _) = nelder_mead(&mut c, &x0, step, first_budget, tol);
    let remaining = nm_budget.saturating_sub(c.evals);
    let (mut x, mut fx, conv2) = nelder_mead(&mut c, &x1, step * T::lit(0.1), remaining, tol);
    if f1 < fx {
        x = x1;
        fx = f1;
    }
    let before_polish = fx;
    let improved_nm = f1 - fx;
    let per = (max_evals.saturating_sub(c.evals) / n).min(polish_per_coord);
    if per >= 3 {
        golden_polish(&mut c, &mut x, &mut fx, T::lit(1e-2), per);
    }
    let improved_polish = before_polish - fx;
    LocalOutcome {
        x,
        value: -fx,
        evaluations: c.evals,
        converged: conv2 && improved_nm <= tol && improved_polish <= tol,
    }
}
