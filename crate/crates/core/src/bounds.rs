//! The bound families relating error probability to conditional entropy,
//! plus point classification against the admissible regions they enclose.
//!
//! Two baseline bounds come from classical inequalities: Fano's lower bound
//! `H(T|Y) <= H(e) + e log2(m-1)` and Kovalevskij's piecewise-linear upper
//! bound. The analytical bounds are exact envelopes obtained by extremizing
//! the closed-form conditional entropy of a binary joint table at fixed
//! error, so they hold with equality on attainable settings:
//!
//! ```text
//! G2^{-1}(e) = -p_min log2(p_min / (e + p_min)) - e log2(e / (e + p_min))
//! ```
//!
//! is the smallest conditional entropy compatible with error `e`, giving the
//! upper bound `e <= min(p_min, G2(h))` for Bayes errors. Mirroring across
//! `e = 1/2` produces the general upper bound `e <= 1 - H^{-1}(h)` and the
//! lower bound `e >= 1 - G2(h)` that govern the high-error half of the
//! non-Bayes diagram.

use std::collections::BTreeSet;

use crate::entropy::{binary_entropy_inverse_raw, binary_entropy_raw};
use crate::real::Real;
use crate::solve::bisect_increasing;
use crate::types::{
    Bits, BoundCurve, BoundKind, DiagramPoint, DomainError, ErrorKind, Priors, Probability,
};

/// A bound evaluation request: the entropy value, the class count (only the
/// Fano/Kovalevskij baselines support `m > 2`), and, for Bayes-error queries,
/// the known priors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundQuery<T> {
    h: Bits<T>,
    m: u32,
    priors: Option<Priors<T>>,
    error_kind: ErrorKind,
}

impl<T: Real> BoundQuery<T> {
    pub fn new(
        h: Bits<T>,
        m: u32,
        priors: Option<Priors<T>>,
        error_kind: ErrorKind,
    ) -> Result<Self, DomainError> {
        if m < 2 {
            return Err(DomainError::Constraint("a classification needs m >= 2 classes"));
        }
        if error_kind == ErrorKind::Bayes && priors.is_none() {
            return Err(DomainError::MissingPriors(
                "Bayes-error analysis requires known class priors",
            ));
        }
        Ok(Self { h, m, priors, error_kind })
    }

    /// Binary, prior-free, non-Bayes query: what the baseline bounds need.
    pub fn binary(h: Bits<T>) -> Self {
        Self { h, m: 2, priors: None, error_kind: ErrorKind::NonBayes }
    }

    pub fn with_m(h: Bits<T>, m: u32) -> Result<Self, DomainError> {
        Self::new(h, m, None, ErrorKind::NonBayes)
    }

    pub fn h(&self) -> Bits<T> {
        self.h
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn priors(&self) -> Option<&Priors<T>> {
        self.priors.as_ref()
    }

    pub fn error_kind(&self) -> ErrorKind {
        self.error_kind
    }
}

/// How a diagram point relates to the admissible region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Inside,
    Boundary,
    Outside,
}

/// Classification of a diagram point: the verdict, the bounds that are
/// active (on the boundary) or violated (outside), and the signed minimum
/// slack over all constraints.
///
/// Slacks for error-valued constraints are in probability units; the
/// entropy-cap slack is in bits. Positive slack means strictly inside.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership<T> {
    pub verdict: Verdict,
    pub binding: BTreeSet<BoundKind>,
    pub slack: T,
}

fn entropy_range_check<T: Real>(h: T, hi: T) -> Result<(), DomainError> {
    if h > hi + T::validation_slack() {
        return Err(DomainError::OutOfRange {
            name: "conditional entropy",
            lo: 0.0,
            hi: hi.as_f64(),
            value: h.as_f64(),
        });
    }
    Ok(())
}

/// Smallest error probability compatible with conditional entropy `h` for an
/// `m`-class problem: the least `e` with `H(e) + e log2(m-1) >= h`.
///
/// For `m = 2` this is the lower-branch inverse of the binary entropy.
pub fn fano_lower_bound<T: Real>(q: &BoundQuery<T>) -> Result<Probability<T>, DomainError> {
    let h = q.h().get();
    let m = T::of(q.m() as f64);
    let log2m = m.log2();
    entropy_range_check(h, log2m)?;
    if q.m() == 2 {
        return Ok(Probability::new_clamped(binary_entropy_inverse_raw(
            h.min(T::one()),
        )));
    }
    let e_max = (m - T::one()) / m;
    let log2m1 = (m - T::one()).log2();
    let phi = |e: T| binary_entropy_raw(e) + e * log2m1;
    if h <= T::zero() {
        return Ok(Probability::zero());
    }
    if h >= phi(e_max) {
        return Ok(Probability::new_clamped(e_max));
    }
    let e = bisect_increasing(phi, T::zero(), e_max, h, T::root_tol());
    Ok(Probability::new_clamped(e))
}

/// Kovalevskij's upper bound on the error probability: the inverse of the
/// piecewise-linear minorant
/// `H(T|Y) >= log2 k + k(k+1) log2((k+1)/k) (e - (k-1)/k)`.
///
/// For `m = 2` this is `e <= h / 2`. For larger `m` the segment index is
/// `k = floor(2^h)` clamped to `[1, m-1]`; adjoining segments agree at the
/// knots `h = log2 k`, so the clamp choice is value-neutral there.
pub fn kovalevskij_upper_bound<T: Real>(q: &BoundQuery<T>) -> Result<Probability<T>, DomainError> {
    let h = q.h().get();
    let m = q.m();
    let log2m = T::of(m as f64).log2();
    entropy_range_check(h, log2m)?;
    if m == 2 {
        return Ok(Probability::new_clamped(h / T::of(2.0)));
    }
    let k_raw = h.exp2().floor();
    let k = k_raw.max(T::one()).min(T::of((m - 1) as f64));
    let k1 = k + T::one();
    let slope = k * k1 * (k1 / k).log2();
    let e = (k - T::one()) / k + (h - k.log2()) / slope;
    Ok(Probability::new_clamped(e))
}

/// `G2^{-1}` on raw scalars: the conditional entropy of the extremal setting
/// that concentrates all error mass on the majority class. Continuous
/// extension 0 at `e = 0`; strictly increasing in `e`.
pub(crate) fn analytical_upper_inverse_raw<T: Real>(e: T, p_min: T) -> T {
    if e <= T::zero() {
        return T::zero();
    }
    let s = e + p_min;
    -(p_min * (p_min / s).log2()) - e * (e / s).log2()
}

fn p_min_range_check<T: Real>(p_min: T) -> Result<(), DomainError> {
    if !(p_min > T::zero() && p_min <= T::half() + T::validation_slack()) {
        return Err(DomainError::OutOfRange {
            name: "p_min",
            lo: 0.0,
            hi: 0.5,
            value: p_min.as_f64(),
        });
    }
    Ok(())
}

/// The smallest conditional entropy compatible with Bayes error `e`:
/// `G2^{-1}(e) = -p_min log2(p_min/(e+p_min)) - e log2(e/(e+p_min))`.
///
/// Requires `e <= p_min <= 1/2`; at `e = p_min` it reaches the corner value
/// `2 p_min`.
pub fn analytical_upper_inverse<T: Real>(
    e: Probability<T>,
    p_min: Probability<T>,
) -> Result<Bits<T>, DomainError> {
    let (e, pm) = (e.get(), p_min.get());
    p_min_range_check(pm)?;
    if e > pm + T::validation_slack() {
        return Err(DomainError::OutOfRange {
            name: "bayes error",
            lo: 0.0,
            hi: pm.as_f64(),
            value: e.as_f64(),
        });
    }
    Ok(Bits::new_clamped(analytical_upper_inverse_raw(e.min(pm), pm)))
}

/// Inverts `G2^{-1}` by bisection on `[0, e_hi]`, exact at both endpoints.
fn invert_analytical<T: Real>(h: T, p_min: T, e_hi: T) -> T {
    if h <= T::zero() {
        return T::zero();
    }
    if h >= analytical_upper_inverse_raw(e_hi, p_min) {
        return e_hi;
    }
    bisect_increasing(
        |e| analytical_upper_inverse_raw(e, p_min),
        T::zero(),
        e_hi,
        h,
        T::root_tol(),
    )
}

pub(crate) fn analytical_upper_raw<T: Real>(h: T, p_min: T) -> T {
    invert_analytical(h, p_min, p_min)
}

/// The analytical upper bound `e = G2(h)` on the Bayes error, defined up to
/// the corner `h = 2 p_min` where it meets the cap `e = p_min`.
///
/// Callers wanting the full bound take `min(p_min, G2(h))`, with the cap
/// binding for `h` past the corner.
pub fn analytical_upper<T: Real>(
    h: Bits<T>,
    p_min: Probability<T>,
) -> Result<Probability<T>, DomainError> {
    let pm = p_min.get();
    p_min_range_check(pm)?;
    let corner = pm + pm;
    entropy_range_check(h.get(), corner)?;
    Ok(Probability::new_clamped(analytical_upper_raw(
        h.get().min(corner),
        pm,
    )))
}

/// The maximum Bayes error: `e <= p_min = min(p1, p2)`.
pub fn bayes_error_cap<T: Real>(p: &Priors<T>) -> Probability<T> {
    p.p_min()
}

/// The general upper bound on any classifier's error, `e <= 1 - H^{-1}(h)`:
/// the mirror of Fano's lower bound across `e = 1/2`.
pub fn general_upper_bound<T: Real>(h: Bits<T>) -> Result<Probability<T>, DomainError> {
    entropy_range_check(h.get(), T::one())?;
    let e = binary_entropy_inverse_raw(h.get().min(T::one()));
    Ok(Probability::new_clamped(T::one() - e))
}

/// The conditional entropy at which the analytical bound reaches error 1/2:
/// `G2^{-1}(1/2)`, the upper end of the mirrored lower bound's domain.
pub fn half_error_entropy<T: Real>(p_min: Probability<T>) -> Result<Bits<T>, DomainError> {
    p_min_range_check(p_min.get())?;
    Ok(Bits::new_clamped(analytical_upper_inverse_raw(
        T::half(),
        p_min.get(),
    )))
}

/// The mirrored analytical bound `e >= 1 - G2(h)`: a lower bound on errors in
/// `[1/2, 1]` when the priors are known.
///
/// Defined for `h` up to [`half_error_entropy`], where it reaches `e = 1/2`;
/// below the corner `h = 2 p_min` it is exactly `1 - analytical_upper(h)`.
pub fn mirrored_analytical_lower<T: Real>(
    h: Bits<T>,
    p_min: Probability<T>,
) -> Result<Probability<T>, DomainError> {
    let pm = p_min.get();
    p_min_range_check(pm)?;
    let hv = h.get();
    let corner = pm + pm;
    if hv <= corner + T::validation_slack() {
        let e = analytical_upper(h, p_min)?;
        return Ok(Probability::new_clamped(T::one() - e.get()));
    }
    let cap = analytical_upper_inverse_raw(T::half(), pm);
    entropy_range_check(hv, cap)?;
    let e = invert_analytical(hv.min(cap), pm, T::half());
    Ok(Probability::new_clamped(T::one() - e))
}

/// The conditional-entropy cap `H(T|Y) <= H(p_min)`.
pub fn conditional_entropy_max<T: Real>(p_min: Probability<T>) -> Bits<T> {
    Bits::new_clamped(binary_entropy_raw(p_min.get()))
}

/// Classifies a diagram point against every bound that applies to it.
///
/// Bayes mode (priors required) tests `fano_lower <= e <= min(p_min, G2(h))`
/// and `h <= H(p_min)`. Non-Bayes mode tests `H^{-1}(h) <= e <= 1 - H^{-1}(h)`
/// and, when priors are supplied, additionally `h >= G2^{-1}(min(e, 1-e))`
/// and `h <= H(p_min)`. The verdict is `Boundary` when the minimum slack is
/// within the boundary tolerance, `Outside` when some constraint is violated
/// beyond it.
pub fn classify_point<T: Real>(
    pt: &DiagramPoint<T>,
    priors: Option<&Priors<T>>,
) -> Result<Membership<T>, DomainError> {
    let h = pt.h().get();
    let e = pt.e().get();
    let one = T::one();
    let tol = T::boundary_tol();
    let mut slacks: Vec<(BoundKind, T)> = Vec::new();

    // Fano floors every classifier; past h = 1 its feasible set is empty and
    // the clamped inverse reports the distance to e = 1/2.
    let fano_e = binary_entropy_inverse_raw(h.min(one));
    slacks.push((BoundKind::FanoLower, e - fano_e));

    match pt.error_kind() {
        ErrorKind::Bayes => {
            let p = priors.ok_or(DomainError::MissingPriors(
                "Bayes-error classification requires the class priors",
            ))?;
            let pm = p.p_min().get();
            slacks.push((BoundKind::BayesErrorCap, pm - e));
            let corner = pm + pm;
            if h <= corner + tol {
                let g2_h = analytical_upper_raw(h.min(corner), pm);
                slacks.push((BoundKind::AnalyticalUpper, g2_h - e));
            }
            slacks.push((BoundKind::EntropyCap, binary_entropy_raw(pm) - h));
        }
        ErrorKind::NonBayes => {
            slacks.push((BoundKind::GeneralUpper, (one - fano_e) - e));
            if let Some(p) = priors {
                let pm = p.p_min().get();
                let e_min = e.min(one - e);
                let cap = analytical_upper_inverse_raw(T::half(), pm);
                if h <= cap + tol {
                    let g2_h = invert_analytical(h.min(cap), pm, T::half());
                    let kind = if e <= T::half() {
                        BoundKind::AnalyticalUpper
                    } else {
                        BoundKind::MirroredAnalytical
                    };
                    slacks.push((kind, g2_h - e_min));
                }
                slacks.push((BoundKind::EntropyCap, binary_entropy_raw(pm) - h));
            }
        }
    }

    let min_slack = slacks
        .iter()
        .map(|&(_, s)| s)
        .fold(T::infinity(), T::min);
    let verdict = if min_slack < -tol {
        Verdict::Outside
    } else if min_slack <= tol {
        Verdict::Boundary
    } else {
        Verdict::Inside
    };
    let binding: BTreeSet<BoundKind> = match verdict {
        Verdict::Inside => BTreeSet::new(),
        Verdict::Boundary => slacks
            .iter()
            .filter(|&&(_, s)| s.abs() <= tol)
            .map(|&(k, _)| k)
            .collect(),
        Verdict::Outside => slacks
            .iter()
            .filter(|&&(_, s)| s < -tol)
            .map(|&(k, _)| k)
            .collect(),
    };
    Ok(Membership { verdict, binding, slack: min_slack })
}

fn needs_p_min(kind: BoundKind) -> bool {
    matches!(
        kind,
        BoundKind::AnalyticalUpper
            | BoundKind::MirroredAnalytical
            | BoundKind::BayesErrorCap
            | BoundKind::EntropyCap
    )
}

/// Samples a bound curve at `n` points between its natural endpoints.
///
/// Curves are parameterized uniformly in the error coordinate (the cap
/// segments, where the error or the entropy is constant, run uniformly in
/// the free coordinate instead), so every emitted point evaluates the
/// curve's defining equation directly rather than through an inversion.
/// Points on curves confined to `e <= 1/2` are tagged as Bayes errors; the
/// mirrored curves are tagged non-Bayes.
pub fn curve_samples<T: Real>(
    kind: BoundKind,
    p_min: Option<Probability<T>>,
    n: usize,
) -> Result<BoundCurve<T>, DomainError> {
    if n < 2 {
        return Err(DomainError::Constraint("a curve needs at least two samples"));
    }
    let pm_prob = if needs_p_min(kind) {
        let pm = p_min.ok_or(DomainError::MissingPriors(
            "this bound kind is parameterized by p_min",
        ))?;
        p_min_range_check(pm.get())?;
        Some(pm)
    } else {
        None
    };
    let pm = pm_prob.map(|p| p.get());

    let half = T::half();
    let steps = T::of((n - 1) as f64);
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let t = T::of(i as f64) / steps;
        let (h, e, ek) = match kind {
            BoundKind::FanoLower => {
                let e = t * half;
                (binary_entropy_raw(e), e, ErrorKind::Bayes)
            }
            BoundKind::KovalevskijUpper => {
                let e = t * half;
                (e + e, e, ErrorKind::Bayes)
            }
            BoundKind::AnalyticalUpper => {
                let pm = pm.unwrap();
                let e = t * pm;
                (analytical_upper_inverse_raw(e, pm), e, ErrorKind::Bayes)
            }
            BoundKind::BayesErrorCap => {
                // horizontal segment e = p_min from the analytical corner to
                // the entropy cap
                let pm = pm.unwrap();
                let h_lo = pm + pm;
                let h_hi = binary_entropy_raw(pm);
                (h_lo + t * (h_hi - h_lo), pm, ErrorKind::Bayes)
            }
            BoundKind::GeneralUpper => {
                let e_low = t * half;
                (binary_entropy_raw(e_low), T::one() - e_low, ErrorKind::NonBayes)
            }
            BoundKind::MirroredAnalytical => {
                let pm = pm.unwrap();
                let e_low = t * half;
                (
                    analytical_upper_inverse_raw(e_low, pm),
                    T::one() - e_low,
                    ErrorKind::NonBayes,
                )
            }
            BoundKind::EntropyCap => {
                // vertical segment h = H(p_min) between the Fano curve and
                // its mirror
                let pm = pm.unwrap();
                let e = pm + t * (T::one() - pm - pm);
                (binary_entropy_raw(pm), e, ErrorKind::NonBayes)
            }
        };
        let point = DiagramPoint::new(
            Bits::new_clamped(h),
            Probability::new_clamped(e),
            ek,
        )
        .expect("curve points satisfy the diagram invariants");
        points.push(point);
    }
    Ok(BoundCurve { kind, points, p_min: pm_prob })
}
