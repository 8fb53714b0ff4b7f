//! Constructors for the extremal classification settings and the named key
//! points of the bounds diagrams.
//!
//! Each constructor returns a validated [`JointSetting`] that lands exactly
//! on the curve or point it represents; boundary zeros are exact, never
//! epsilon-padded, because the entropy code already treats zero-mass terms
//! exactly.

use crate::real::Real;
use crate::types::{DomainError, JointSetting, Priors, Probability};

/// The named key points of the error-vs-entropy diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyPointKind {
    /// Point O: perfect classification, `(h, e) = (0, 0)`.
    Perfect,
    /// Point A: every input assigned to the first output; balanced priors.
    NoClassification1,
    /// Point A: every input assigned to the second output; balanced priors.
    NoClassification2,
    /// Point A: uniform random guessing with balanced priors, `(1, 1/2)`.
    RandomGuess,
    /// Point D: total label swap, `(0, 1)`; relabeling recovers perfection.
    LabelSwap,
    /// Point B or C: the corner where the analytical upper bound meets the
    /// Bayes error cap, `(2 p_min, p_min)`.
    UpperCorner,
    /// Point B' or C': everything predicted as the majority class,
    /// `(H(p2), p2)`.
    PredictAllMajority,
    /// Point B' or C' reached differently: a balanced symmetric channel with
    /// flip probability `p2`, landing on the same `(H(p2), p2)`.
    SymmetricNoise,
    /// Point E or F: everything predicted as the minority class,
    /// `(H(p2), p1)`.
    PredictAllMinority,
    /// Point A': half the mass misclassified, `(G2^{-1}(1/2), 1/2)`, where
    /// the mirrored analytical bound reaches error 1/2.
    HalfError,
}

fn prob<T: Real>(x: T) -> Probability<T> {
    Probability::new_clamped(x)
}

/// The zero-information family: for a given `e2`, chooses
/// `e1 = p1 (p2 - e2) / p2`, which makes the rows of the joint table
/// proportional, so `MI(T, Y) = 0` and `H(T|Y) = H(p_min)` constantly.
///
/// Sweeping `e2` over `[0, p2]` moves the total error across
/// `[p_min, 1 - p_min]` while staying on the entropy cap.
pub fn fano_family_setting<T: Real>(
    p: &Priors<T>,
    e2: Probability<T>,
) -> Result<JointSetting<T>, DomainError> {
    let (p1, p2) = (p.p1().get(), p.p2().get());
    if e2.get() > p2 + T::validation_slack() {
        return Err(DomainError::ErrorExceedsPrior {
            error: e2.get().as_f64(),
            prior: p2.as_f64(),
        });
    }
    let e1 = p1 * (p2 - e2.get().min(p2)) / p2;
    if e1 > p1 + T::validation_slack() {
        return Err(DomainError::ErrorExceedsPrior {
            error: e1.as_f64(),
            prior: p1.as_f64(),
        });
    }
    JointSetting::from_priors_errors(*p, prob(e1), e2)
}

/// The minimum-entropy setting at total error `e <= p_min`: all error mass
/// sits on the majority class (`e_i = e` for the larger prior), so the
/// conditional entropy equals the analytical bound value `G2^{-1}(e)`.
///
/// With balanced priors the mass goes to class 1; either choice yields the
/// same `(h, e)` by symmetry.
pub fn upper_extremal_setting<T: Real>(
    p: &Priors<T>,
    e: Probability<T>,
) -> Result<JointSetting<T>, DomainError> {
    let pm = p.p_min().get();
    if e.get() > pm + T::validation_slack() {
        return Err(DomainError::OutOfRange {
            name: "bayes error",
            lo: 0.0,
            hi: pm.as_f64(),
            value: e.get().as_f64(),
        });
    }
    let (e1, e2) = if p.p1().get() >= p.p2().get() {
        (e, Probability::zero())
    } else {
        (Probability::zero(), e)
    };
    JointSetting::from_priors_errors(*p, e1, e2)
}

/// A balanced symmetric channel with total error `e`: off-diagonal mass
/// `e / 2` on each side, priors forced to `(1/2, 1/2)`.
///
/// Its conditional entropy is exactly `H(e)`, so the family traces Fano's
/// lower bound (and its mirror for `e > 1/2`).
pub fn symmetric_noise_setting<T: Real>(e: Probability<T>) -> JointSetting<T> {
    let half_e = prob(e.get() * T::half());
    JointSetting::from_priors_errors(Priors::balanced(), half_e, half_e)
        .expect("e/2 never exceeds the balanced prior 1/2")
}

/// The mirror of the minimum-entropy setting for total error `e > 1/2` with
/// `p1 > p2`: the whole minority class is misclassified (`e2 = p2`) and the
/// remainder `e1 = e - p2` comes from the majority class, so the setting
/// lands on the mirrored analytical bound: `H(T|Y) = G2^{-1}(1 - e)`.
pub fn mirrored_extremal_setting<T: Real>(
    p: &Priors<T>,
    e: Probability<T>,
) -> Result<JointSetting<T>, DomainError> {
    let (p1, p2) = (p.p1().get(), p.p2().get());
    if p1 <= p2 {
        return Err(DomainError::Constraint(
            "the mirrored extremal setting requires p1 > p2",
        ));
    }
    if e.get() <= T::half() {
        return Err(DomainError::OutOfRange {
            name: "error probability",
            lo: 0.5,
            hi: 1.0,
            value: e.get().as_f64(),
        });
    }
    let e1 = e.get() - p2;
    JointSetting::from_priors_errors(*p, prob(e1), prob(p2))
}

fn require_balanced<T: Real>(p: &Priors<T>) -> Result<(), DomainError> {
    if (p.p1().get() - T::half()).abs() > T::validation_slack() {
        return Err(DomainError::Constraint(
            "this key point requires balanced priors (1/2, 1/2)",
        ));
    }
    Ok(())
}

fn require_majority_first<T: Real>(p: &Priors<T>) -> Result<(), DomainError> {
    if p.p1().get() <= p.p2().get() {
        return Err(DomainError::Constraint("this key point requires p1 > p2"));
    }
    Ok(())
}

/// Builds the joint table of a named key point for the given priors.
///
/// Kind-specific preconditions apply: the point-A variants need balanced
/// priors, the corner and all-to-one points need `p1 > p2`, and the
/// half-error point needs `p1 > 1/2`. `SymmetricNoise` overrides the priors
/// to `(1/2, 1/2)` and uses the supplied minority prior as its flip rate.
pub fn key_point_setting<T: Real>(
    kind: KeyPointKind,
    p: &Priors<T>,
) -> Result<JointSetting<T>, DomainError> {
    let zero = Probability::zero();
    match kind {
        KeyPointKind::Perfect => JointSetting::from_priors_errors(*p, zero, zero),
        KeyPointKind::NoClassification1 => {
            require_balanced(p)?;
            JointSetting::from_priors_errors(*p, zero, prob(T::half()))
        }
        KeyPointKind::NoClassification2 => {
            require_balanced(p)?;
            JointSetting::from_priors_errors(*p, prob(T::half()), zero)
        }
        KeyPointKind::RandomGuess => {
            require_balanced(p)?;
            let quarter = prob(T::of(0.25));
            JointSetting::from_priors_errors(*p, quarter, quarter)
        }
        KeyPointKind::LabelSwap => JointSetting::from_priors_errors(*p, p.p1(), p.p2()),
        KeyPointKind::UpperCorner => {
            require_majority_first(p)?;
            JointSetting::from_priors_errors(*p, p.p2(), zero)
        }
        KeyPointKind::PredictAllMajority => {
            require_majority_first(p)?;
            JointSetting::from_priors_errors(*p, zero, p.p2())
        }
        KeyPointKind::SymmetricNoise => {
            require_majority_first(p)?;
            Ok(symmetric_noise_setting(p.p2()))
        }
        KeyPointKind::PredictAllMinority => {
            require_majority_first(p)?;
            JointSetting::from_priors_errors(*p, p.p1(), zero)
        }
        KeyPointKind::HalfError => {
            if p.p1().get() <= T::half() {
                return Err(DomainError::Constraint(
                    "the half-error point requires p1 > 1/2",
                ));
            }
            JointSetting::from_priors_errors(*p, prob(T::half()), zero)
        }
    }
}
