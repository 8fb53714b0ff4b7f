//! Bracketed scalar solvers: bisection on monotone segments and
//! golden-section refinement for derivative-free extremization.
//!
//! Both are unconditionally convergent on their brackets, which is what the
//! bound inversions need: the objectives are monotone (or unimodal) in value
//! but have log-singular derivatives at zero-mass endpoints.

use crate::real::Real;

const MAX_ITERS: usize = 200;

/// Solves `f(x) = target` for `f` nondecreasing on `[lo, hi]`.
///
/// The caller guarantees `f(lo) <= target <= f(hi)`. The bracket is narrowed
/// until its width drops below `tol` (or the iteration cap is hit) and the
/// midpoint is returned.
pub(crate) fn bisect_increasing<T, F>(f: F, mut lo: T, mut hi: T, target: T, tol: T) -> T
where
    T: Real,
    F: Fn(T) -> T,
{
    debug_assert!(lo <= hi);
    let two = T::of(2.0);
    let mut iters = 0;
    while hi - lo > tol && iters < MAX_ITERS {
        let mid = (lo + hi) / two;
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        iters += 1;
    }
    (lo + hi) / two
}

/// Golden-section minimization of `f` on `[a, b]` down to bracket width `tol`.
///
/// Returns `(argmin, f(argmin))` evaluated at the final bracket midpoint.
pub(crate) fn golden_min<T, F>(f: F, mut a: T, mut b: T, tol: T) -> (T, T)
where
    T: Real,
    F: Fn(T) -> T,
{
    debug_assert!(a <= b);
    // 1/phi = (sqrt(5) - 1) / 2
    let invphi = T::of(0.618_033_988_749_894_9);
    let mut x1 = b - invphi * (b - a);
    let mut x2 = a + invphi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iters = 0;
    while b - a > tol && iters < MAX_ITERS {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        iters += 1;
    }
    let xm = (a + b) / T::of(2.0);
    (xm, f(xm))
}
