//! Independent certification of the bounds: brute-force oracles that
//! re-derive the analytical envelopes numerically, Monte Carlo falsification
//! over random joint tables, tightness measurement against the Kovalevskij
//! baseline, and admissibility probing of diagram points.
//!
//! Sampling is counter-based: every sample is a pure function of
//! `(seed, index)`, so certification results are reproducible and identical
//! for any worker count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::analytical_upper_inverse_raw;
use crate::entropy::{
    binary_entropy_raw, conditional_entropy, conditional_entropy_cells, mi_derivative_in_e,
    mutual_information,
};
use crate::real::Real;
use crate::solve::golden_min;
use crate::types::{
    Bits, DiagramPoint, DomainError, JointSetting, Priors, Probability, VerificationReport,
};

/// How the sampler chooses class priors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PriorsMode<T> {
    /// Every sample uses exactly these priors.
    Fixed(Priors<T>),
    /// `p1` is drawn uniformly from `(0.01, 0.99)` per sample.
    FreeUniform,
}

/// Configuration of the deterministic sampler and the certification checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig<T> {
    pub seed: u64,
    pub n_samples: u64,
    pub priors_mode: PriorsMode<T>,
    /// A slack below `-tolerance` counts as a violation.
    pub tolerance: T,
}

impl<T: Real> SamplerConfig<T> {
    pub fn new(seed: u64, n_samples: u64) -> Self {
        assert!(n_samples >= 1, "at least one sample");
        Self {
            seed,
            n_samples,
            priors_mode: PriorsMode::FreeUniform,
            tolerance: T::of(1e-9),
        }
    }

    pub fn with_priors(mut self, priors: Priors<T>) -> Self {
        self.priors_mode = PriorsMode::Fixed(priors);
        self
    }

    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        assert!(tolerance > T::zero(), "tolerance must be positive");
        self.tolerance = tolerance;
        self
    }
}

/// Outcome of a brute-force extremization of `H(T|Y)` at fixed total error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult<T> {
    pub e: Probability<T>,
    /// The extremal conditional entropy located by the scan.
    pub extremal_h: Bits<T>,
    /// Where along the `e2` range the extremum sits.
    pub extremal_e2: Probability<T>,
    /// The closed-form value the scan is compared against.
    pub closed_form_h: Bits<T>,
    pub abs_gap: T,
}

/// The deterministic sample for `(cfg.seed, index)`.
///
/// Priors are fixed or drawn from `p1 ~ U(0.01, 0.99)`; the error masses are
/// `e1 ~ U(0, p1)` and `e2 ~ U(0, p2)`. Each index seeds its own stream, so
/// the result does not depend on evaluation order.
pub fn sample_setting<T: Real>(cfg: &SamplerConfig<T>, index: u64) -> JointSetting<T> {
    debug_assert!(index < cfg.n_samples);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index.wrapping_add(1));
    let (priors, p1, p2) = match cfg.priors_mode {
        PriorsMode::Fixed(p) => (p, p.p1().get().as_f64(), p.p2().get().as_f64()),
        PriorsMode::FreeUniform => {
            let p1 = 0.01 + 0.98 * rng.gen::<f64>();
            let priors = Priors::from_p1(T::of(p1)).expect("sampled prior is in (0, 1)");
            (priors, p1, 1.0 - p1)
        }
    };
    let e1 = rng.gen::<f64>() * p1;
    let e2 = rng.gen::<f64>() * p2;
    JointSetting::from_priors_errors(
        priors,
        Probability::new_clamped(T::of(e1)),
        Probability::new_clamped(T::of(e2)),
    )
    .expect("sampled error masses stay below their priors")
}

/// Scans `H(T|Y)` over the feasible `e2` range at fixed error, then refines
/// the best bracket by golden section. Returns `(e2, h)` at the extremum.
fn scan_extremal_entropy<T: Real>(
    p: &Priors<T>,
    e: T,
    grid: usize,
    maximize: bool,
) -> (T, T) {
    let (p1, p2) = (p.p1().get(), p.p2().get());
    let lo = (e - p1).max(T::zero());
    let hi = e.min(p2);
    let h_at = |e2: T| {
        let e1 = e - e2;
        conditional_entropy_cells([
            (p1 - e1).max(T::zero()),
            e1.max(T::zero()),
            e2,
            (p2 - e2).max(T::zero()),
        ])
    };
    if hi <= lo {
        return (lo, h_at(lo));
    }
    let n = grid.max(2);
    let steps = T::of((n - 1) as f64);
    let mut best_i = 0usize;
    let mut best_h = if maximize { T::neg_infinity() } else { T::infinity() };
    let at = |i: usize| lo + (hi - lo) * T::of(i as f64) / steps;
    for i in 0..n {
        let h = h_at(at(i));
        let better = if maximize { h > best_h } else { h < best_h };
        if better {
            best_h = h;
            best_i = i;
        }
    }
    let a = at(best_i.saturating_sub(1));
    let b = at((best_i + 1).min(n - 1));
    let refine_tol = T::of(1e-10).max(T::root_tol());
    let (e2_star, h_star) = if maximize {
        let (x, fx) = golden_min(|e2| -h_at(e2), a, b, refine_tol);
        (x, -fx)
    } else {
        golden_min(h_at, a, b, refine_tol)
    };
    // keep whichever of (grid best, refined) is actually extremal
    let refined_better = if maximize { h_star >= best_h } else { h_star <= best_h };
    if refined_better {
        (e2_star, h_star)
    } else {
        (at(best_i), best_h)
    }
}

/// Brute-force minimization of `H(T|Y)` over `e2` at fixed Bayes error
/// `e <= p_min`, compared against the closed form `G2^{-1}(e)`.
///
/// Numerically re-derives the analytical upper bound: the minimum sits at
/// the boundary `e2 = 0` (majority-first priors) and matches the closed form
/// to oracle precision.
pub fn brute_force_min_h<T: Real>(
    p: &Priors<T>,
    e: Probability<T>,
    grid: usize,
) -> Result<OracleResult<T>, DomainError> {
    let pm = p.p_min().get();
    if e.get() > pm + T::validation_slack() {
        return Err(DomainError::OutOfRange {
            name: "bayes error",
            lo: 0.0,
            hi: pm.as_f64(),
            value: e.get().as_f64(),
        });
    }
    let (e2, h) = scan_extremal_entropy(p, e.get(), grid, false);
    let closed = analytical_upper_inverse_raw(e.get(), pm);
    Ok(OracleResult {
        e,
        extremal_h: Bits::new_clamped(h),
        extremal_e2: Probability::new_clamped(e2),
        closed_form_h: Bits::new_clamped(closed),
        abs_gap: (h - closed).abs(),
    })
}

/// Brute-force maximization of `H(T|Y)` over `e2` at fixed total error.
///
/// The closed form is regime-limited: `H(e)` for `e <= p_min` (the Fano
/// curve is attainable there), `H(p_min)` for `e` between the priors (the
/// zero-information family passes through), and the scan value itself
/// elsewhere, where no closed form is claimed.
pub fn brute_force_max_h<T: Real>(p: &Priors<T>, e: Probability<T>, grid: usize) -> OracleResult<T> {
    let (e2, h) = scan_extremal_entropy(p, e.get(), grid, true);
    let pm = p.p_min().get();
    let p_max = T::one() - pm;
    let slack = T::validation_slack();
    let closed = if e.get() <= pm + slack {
        binary_entropy_raw(e.get())
    } else if e.get() <= p_max + slack {
        binary_entropy_raw(pm)
    } else {
        h
    };
    OracleResult {
        e,
        extremal_h: Bits::new_clamped(h),
        extremal_e2: Probability::new_clamped(e2),
        closed_form_h: Bits::new_clamped(closed),
        abs_gap: (h - closed).abs(),
    }
}

/// The three certified bound slacks of one setting, in bits, in the order
/// `[Fano, entropy cap, analytical]`:
///
/// 1. `H(e) - h`            (Fano, both error regimes)
/// 2. `H(p_min) - h`        (conditional-entropy cap)
/// 3. `h - G2^{-1}(min(e, 1-e))`  (analytical bound and its mirror)
///
/// Positive slack means the setting sits strictly inside the bound.
pub fn bound_slacks<T: Real>(s: &JointSetting<T>) -> [T; 3] {
    let h = conditional_entropy(s).get();
    let e = s.error().get();
    let pm = s.priors().p_min().get();
    [
        binary_entropy_raw(e) - h,
        binary_entropy_raw(pm) - h,
        h - analytical_upper_inverse_raw(e.min(T::one() - e), pm),
    ]
}

#[derive(Clone, Copy)]
struct CertifyAcc<T> {
    violations: u64,
    min_slack: T,
    min_ratio: T,
}

impl<T: Real> CertifyAcc<T> {
    fn identity() -> Self {
        Self {
            violations: 0,
            min_slack: T::infinity(),
            min_ratio: T::infinity(),
        }
    }

    fn merge(self, other: Self) -> Self {
        Self {
            violations: self.violations + other.violations,
            min_slack: self.min_slack.min(other.min_slack),
            min_ratio: self.min_ratio.min(other.min_ratio),
        }
    }
}

/// Certifies the bound theorems over `cfg.n_samples` deterministic samples.
///
/// Every sampled setting is checked against the three [`bound_slacks`]
/// inequalities; a slack below `-cfg.tolerance` counts as a violation. The
/// samples are embarrassingly parallel and the aggregation is associative,
/// so the report is identical for any thread count.
pub fn certify_bounds<T: Real>(cfg: &SamplerConfig<T>) -> VerificationReport<T> {
    let acc = (0..cfg.n_samples)
        .into_par_iter()
        .map(|i| {
            let s = sample_setting(cfg, i);
            let slacks = bound_slacks(&s);
            let worst = slacks[0].min(slacks[1]).min(slacks[2]);
            let cap = binary_entropy_raw(s.priors().p_min().get());
            CertifyAcc {
                violations: u64::from(worst < -cfg.tolerance),
                min_slack: worst,
                min_ratio: conditional_entropy(&s).get() / cap,
            }
        })
        .reduce(CertifyAcc::identity, CertifyAcc::merge);
    let mode = match cfg.priors_mode {
        PriorsMode::Fixed(p) => format!("priors fixed at p1 = {}", p.p1().get()),
        PriorsMode::FreeUniform => "free uniform priors".to_string(),
    };
    VerificationReport {
        samples_checked: cfg.n_samples,
        violations: acc.violations,
        max_violation: -acc.min_slack,
        tightness_min_ratio: acc.min_ratio,
        notes: format!(
            "checks: h <= H(e); h <= H(p_min); h >= G2inv(min(e, 1-e)); \
             slack in bits; ratio = h / H(p_min); seed {}, {}",
            cfg.seed, mode
        ),
    }
}

/// Measures how much the analytical upper bound improves on Kovalevskij's
/// `e <= h/2` over an interior grid of `(0, 2 p_min)`.
///
/// Records the ratio `min(p_min, G2(h)) / (h/2)` at every grid point; the
/// ratio never exceeds 1 (the analytical bound is tighter), approaching it
/// only toward the shared endpoints.
pub fn tightness_report<T: Real>(p_min: Probability<T>, grid: usize) -> VerificationReport<T> {
    let pm = p_min.get();
    let corner = pm + pm;
    let n = grid.max(2);
    let mut min_ratio = T::infinity();
    let mut max_ratio = T::neg_infinity();
    let mut min_at = T::zero();
    let mut max_at = T::zero();
    let mut violations = 0u64;
    let tol = T::boundary_tol();
    for i in 0..n {
        let h = corner * T::of((i + 1) as f64) / T::of((n + 1) as f64);
        let analytical = crate::bounds::analytical_upper_raw(h, pm).min(pm);
        let ratio = analytical / (h * T::half());
        if ratio < min_ratio {
            min_ratio = ratio;
            min_at = h;
        }
        if ratio > max_ratio {
            max_ratio = ratio;
            max_at = h;
        }
        if ratio > T::one() + tol {
            violations += 1;
        }
    }
    VerificationReport {
        samples_checked: n as u64,
        violations,
        max_violation: max_ratio - T::one(),
        tightness_min_ratio: min_ratio,
        notes: format!(
            "ratio = min(p_min, G2(h)) / (h/2) on ({}, {}); min {} at h = {}; max {} at h = {}",
            0.0, corner, min_ratio, min_at, max_ratio, max_at
        ),
    }
}

/// Checks the closed-form derivative of mutual information against central
/// finite differences of the direct evaluation over a `grid^3` sweep of
/// `(p2, e2, e)` triples inside the ordering `1 > p1 > p2 > e > e2 >= 0`.
///
/// A gap above 1e-5 bits-per-unit-error or a nonnegative closed form counts
/// as a violation. The finite-difference step is 1e-6, so the sweep is
/// meaningful at f64 precision.
pub fn derivative_check<T: Real>(grid: usize) -> VerificationReport<T> {
    let n = grid.max(2);
    let delta = T::of(1e-6);
    let gap_tol = T::of(1e-5);
    let mut checked = 0u64;
    let mut violations = 0u64;
    let mut max_gap = T::zero();
    let mut min_ratio = T::infinity();
    let steps = T::of((n - 1) as f64);
    for i in 0..n {
        let p2 = T::of(0.05) + T::of(0.40) * T::of(i as f64) / steps;
        let priors = Priors::from_p1(T::one() - p2).expect("p2 in (0.05, 0.45)");
        for j in 0..n {
            let e = p2 * (T::of(0.1) + T::of(0.85) * T::of(j as f64) / steps);
            for k in 0..n {
                let e2 = T::of(0.9) * e * T::of(k as f64) / steps;
                let closed = mi_derivative_in_e(
                    Probability::new_clamped(p2),
                    Probability::new_clamped(e2),
                    Probability::new_clamped(e),
                )
                .expect("grid stays inside the ordering");
                let mi_at = |ev: T| {
                    let s = JointSetting::from_priors_errors(
                        priors,
                        Probability::new_clamped(ev - e2),
                        Probability::new_clamped(e2),
                    )
                    .expect("perturbed error mass stays feasible");
                    mutual_information(&s).get()
                };
                let fd = (mi_at(e + delta) - mi_at(e - delta)) / (delta + delta);
                let gap = (closed - fd).abs();
                checked += 1;
                max_gap = max_gap.max(gap);
                min_ratio = min_ratio.min(fd / closed);
                if gap > gap_tol || closed >= T::zero() {
                    violations += 1;
                }
            }
        }
    }
    VerificationReport {
        samples_checked: checked,
        violations,
        max_violation: max_gap,
        tightness_min_ratio: min_ratio,
        notes: format!(
            "closed-form dMI/de vs central differences (step 1e-6) on a {n}x{n}x{n} grid; \
             gap in bits per unit error; ratio = fd / closed"
        ),
    }
}

/// Outcome of an admissibility probe: whether a joint table realizing the
/// target point was found, the witness table when it was, and the nearest
/// achieved Euclidean distance in the `(h, e)` plane otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeOutcome<T> {
    pub found: bool,
    pub witness: Option<JointSetting<T>>,
    pub min_distance: T,
}

/// Searches for a joint table whose `(h, e)` matches `pt` within 1e-6.
///
/// The error coordinate is matched exactly by construction, so the search
/// walks the continuous `e2` path at fixed `e` (and scans priors when they
/// are not pinned), bisecting along path segments that bracket the target
/// entropy. `budget` caps the number of path evaluations.
pub fn admissibility_probe<T: Real>(
    pt: &DiagramPoint<T>,
    priors: Option<&Priors<T>>,
    budget: usize,
) -> ProbeOutcome<T> {
    assert!(budget >= 100, "probe budget too small to mean anything");
    let h_star = pt.h().get();
    let e = pt.e().get();
    let match_tol = T::of(1e-6);

    let prior_grid: Vec<Priors<T>> = match priors {
        Some(p) => vec![*p],
        None => {
            let k = (budget / 256).clamp(25, 97);
            (0..k)
                .map(|i| {
                    let p1 = 0.01 + 0.98 * (i as f64 / (k - 1) as f64);
                    Priors::from_p1(T::of(p1)).expect("scanned prior is in (0, 1)")
                })
                .collect()
        }
    };
    let path_points = (budget / prior_grid.len()).max(8);

    let mut best_dist = T::infinity();
    let mut best: Option<(Priors<T>, T)> = None;

    for p in &prior_grid {
        let (p1, p2) = (p.p1().get(), p.p2().get());
        let lo = (e - p1).max(T::zero());
        let hi = e.min(p2);
        let h_at = |e2: T| {
            let e1 = e - e2;
            conditional_entropy_cells([
                (p1 - e1).max(T::zero()),
                e1.max(T::zero()),
                e2,
                (p2 - e2).max(T::zero()),
            ])
        };
        let n = if hi <= lo { 1 } else { path_points };
        let steps = T::of((n.max(2) - 1) as f64);
        let at = |i: usize| {
            if n == 1 {
                lo
            } else {
                lo + (hi - lo) * T::of(i as f64) / steps
            }
        };
        let mut prev: Option<(T, T)> = None;
        for i in 0..n {
            let e2 = at(i);
            let h = h_at(e2);
            let d = (h - h_star).abs();
            if d < best_dist {
                best_dist = d;
                best = Some((*p, e2));
            }
            if let Some((pe2, ph)) = prev {
                // bisect the segment when it brackets the target entropy
                if (ph - h_star) * (h - h_star) < T::zero() {
                    let (mut a, mut b) = (pe2, e2);
                    let (mut fa, _fb) = (ph, h);
                    for _ in 0..80 {
                        let mid = (a + b) * T::half();
                        let fm = h_at(mid);
                        let dm = (fm - h_star).abs();
                        if dm < best_dist {
                            best_dist = dm;
                            best = Some((*p, mid));
                        }
                        if dm <= T::root_tol() {
                            break;
                        }
                        if (fa - h_star) * (fm - h_star) < T::zero() {
                            b = mid;
                        } else {
                            a = mid;
                            fa = fm;
                        }
                    }
                }
            }
            prev = Some((e2, h));
        }
        if best_dist <= match_tol {
            break;
        }
    }

    let found = best_dist <= match_tol;
    let witness = if found {
        best.map(|(p, e2)| {
            JointSetting::from_priors_errors(
                p,
                Probability::new_clamped(e - e2),
                Probability::new_clamped(e2),
            )
            .expect("path points are feasible")
        })
    } else {
        None
    };
    ProbeOutcome { found, witness, min_distance: best_dist }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::settings::{symmetric_noise_setting, upper_extremal_setting};
    use crate::types::ErrorKind;

    const H_01: f64 = 0.468_995_593_589_281_2;
    const H_02: f64 = 0.721_928_094_887_362_3;
    const H_03: f64 = 0.881_290_899_230_692_6;
    const G2INV_01_02: f64 = 0.275_488_750_216_346_85;

    fn prob(x: f64) -> Probability<f64> {
        Probability::new(x).unwrap()
    }

    #[test]
    fn sampler_is_deterministic_per_index() {
        let cfg = SamplerConfig::<f64>::new(7, 100);
        let a = sample_setting(&cfg, 42);
        let b = sample_setting(&cfg, 42);
        assert_eq!(a, b);
        let c = sample_setting(&cfg, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn sampler_respects_fixed_priors() {
        let p = Priors::<f64>::from_p1(0.8).unwrap();
        let cfg = SamplerConfig::new(1, 10).with_priors(p);
        let s = sample_setting(&cfg, 0);
        assert_eq!(s.priors().p1().get(), 0.8);
        assert!((s.priors().p2().get() - 0.2).abs() <= 1e-15);
    }

    #[test]
    fn sampled_settings_are_valid() {
        let cfg = SamplerConfig::<f64>::new(3, 500);
        for i in 0..cfg.n_samples {
            let s = sample_setting(&cfg, i);
            let sum: f64 = s.cells().iter().sum();
            assert!((sum - 1.0).abs() <= 1e-12);
            assert!(s.e1().get() <= s.priors().p1().get() + 1e-12);
            assert!(s.e2().get() <= s.priors().p2().get() + 1e-12);
        }
    }

    #[test]
    fn min_oracle_reproduces_the_analytical_bound() {
        let p = Priors::from_p1(0.8).unwrap();
        let r = brute_force_min_h(&p, prob(0.1), 10_000).unwrap();
        assert!((r.extremal_h.get() - G2INV_01_02).abs() <= 1e-6);
        assert!(r.extremal_e2.get() <= 1e-4);
        assert!(r.abs_gap <= 1e-6);

        let r = brute_force_min_h(&p, prob(0.0), 100).unwrap();
        assert_eq!(r.extremal_h.get(), 0.0);

        let p = Priors::from_p1(0.5).unwrap();
        let r = brute_force_min_h(&p, prob(0.5), 10_000).unwrap();
        assert!((r.extremal_h.get() - 1.0).abs() <= 1e-6);

        assert!(brute_force_min_h(&Priors::from_p1(0.8).unwrap(), prob(0.3), 100).is_err());
    }

    #[test]
    fn max_oracle_reaches_the_fano_curve_below_p_min() {
        let p = Priors::from_p1(0.8).unwrap();
        let r = brute_force_max_h(&p, prob(0.1), 10_000);
        assert!((r.extremal_h.get() - H_01).abs() <= 1e-6);
        assert!(r.abs_gap <= 1e-6);
    }

    #[test]
    fn max_oracle_rides_the_entropy_cap_between_the_priors() {
        let p = Priors::from_p1(0.8).unwrap();
        let r = brute_force_max_h(&p, prob(0.8), 10_000);
        assert!((r.extremal_h.get() - H_02).abs() <= 1e-6);
        assert!(r.abs_gap <= 1e-6);
    }

    #[test]
    fn max_oracle_matches_the_balanced_symmetric_channel() {
        let p = Priors::from_p1(0.5).unwrap();
        let r = brute_force_max_h(&p, prob(0.3), 10_000);
        assert!((r.extremal_h.get() - H_03).abs() <= 1e-6);
    }

    #[test]
    fn certification_passes_on_a_modest_sweep() {
        let report = certify_bounds(&SamplerConfig::<f64>::new(42, 20_000));
        assert_eq!(report.violations, 0);
        assert_eq!(report.samples_checked, 20_000);
        assert!(report.max_violation <= 1e-9);
    }

    #[test]
    fn certification_is_reproducible() {
        let cfg = SamplerConfig::<f64>::new(9, 5_000);
        assert_eq!(certify_bounds(&cfg), certify_bounds(&cfg));
    }

    #[test]
    fn boundary_settings_have_zero_slack() {
        // symmetric noise attains Fano equality
        let s = symmetric_noise_setting(prob(0.3));
        let slacks = bound_slacks(&s);
        assert!(slacks[0].abs() <= 1e-10, "fano slack {}", slacks[0]);
        // the upper extremal setting attains the analytical bound
        let p = Priors::from_p1(0.8).unwrap();
        let s = upper_extremal_setting(&p, prob(0.1)).unwrap();
        let slacks = bound_slacks(&s);
        assert!(slacks[2].abs() <= 1e-10, "analytical slack {}", slacks[2]);
    }

    #[test]
    fn tightness_report_shows_a_strictly_tighter_bound() {
        let r = tightness_report(prob(0.2), 400);
        assert_eq!(r.violations, 0);
        assert!(r.max_violation <= 1e-9);
        assert!(r.tightness_min_ratio < 1.0);
        // near h = 0.2 the analytical bound is roughly 0.0588 vs 0.1
        let mid: f64 = crate::bounds::analytical_upper_raw(0.2, 0.2);
        assert!((mid - 0.058_763_074_668_083_1).abs() <= 1e-9);
        assert!(mid / 0.1 < 0.6);
    }

    #[test]
    fn derivative_sweep_is_clean() {
        let r = derivative_check::<f64>(6);
        assert_eq!(r.violations, 0);
        assert_eq!(r.samples_checked, 6 * 6 * 6);
        assert!(r.max_violation <= 1e-5);
    }

    #[test]
    fn probe_finds_reachable_points() {
        // perfect classification is reachable for any priors
        let p = Priors::<f64>::from_p1(0.8).unwrap();
        let pt = DiagramPoint::new(
            Bits::zero(),
            Probability::zero(),
            ErrorKind::Bayes,
        )
        .unwrap();
        let r = admissibility_probe(&pt, Some(&p), 1_000);
        assert!(r.found);
        let w = r.witness.unwrap();
        for (g, want) in w.cells().into_iter().zip([0.8, 0.0, 0.0, 0.2]) {
            assert!((g - want).abs() <= 1e-15);
        }

        // an interior entropy between the extremes at e = 0.3, priors (0.6, 0.4)
        let pt = DiagramPoint::new(
            Bits::new(0.75).unwrap(),
            prob(0.3),
            ErrorKind::NonBayes,
        )
        .unwrap();
        let r = admissibility_probe(&pt, Some(&Priors::from_p1(0.6).unwrap()), 2_000);
        assert!(r.found, "nearest distance {}", r.min_distance);
        let w = r.witness.unwrap();
        assert!((conditional_entropy(&w).get() - 0.75).abs() <= 1e-6);
        assert!((w.error().get() - 0.3).abs() <= 1e-12);
    }

    #[test]
    fn probe_rejects_points_above_fano() {
        // h = 1 requires e = 0.5; at e = 0.2 the best any prior can do is H(0.2)
        let pt = DiagramPoint::new(
            Bits::new(1.0).unwrap(),
            prob(0.2),
            ErrorKind::NonBayes,
        )
        .unwrap();
        let r = admissibility_probe(&pt, None, 20_000);
        assert!(!r.found);
        assert!(r.witness.is_none());
        assert!((r.min_distance - (1.0 - H_02)).abs() <= 1e-3);
    }

    #[test]
    fn probe_reports_the_gap_to_the_analytical_floor() {
        // at e = 0.3 with priors (0.6, 0.4) the attainable entropies span
        // [G2inv(0.3, 0.4), H(0.3)] = [0.6897, 0.8813]; h = 0.5 is below the
        // floor, so no table exists and the distance is the gap to the floor
        let pt = DiagramPoint::new(
            Bits::new(0.5).unwrap(),
            prob(0.3),
            ErrorKind::NonBayes,
        )
        .unwrap();
        let r = admissibility_probe(&pt, Some(&Priors::from_p1(0.6).unwrap()), 5_000);
        assert!(!r.found);
        assert!((r.min_distance - 0.189_659_695_223_976).abs() <= 1e-4);
    }
}
