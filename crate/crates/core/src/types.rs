//! Validated domain types shared by every module.
//!
//! All probability bookkeeping lives here. Values are checked once at
//! construction, with a small absolute slack so results a few ulps outside
//! their interval (as root finders produce) are accepted, then clamped, and
//! downstream code relies on the invariants without re-checking.

use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::real::Real;

/// Error raised when a domain invariant is violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("{name} must lie in [{lo}, {hi}], got {value}")]
    OutOfRange {
        name: &'static str,
        lo: f64,
        hi: f64,
        value: f64,
    },
    #[error("priors must lie strictly inside (0, 1), got p1 = {p1}")]
    DegeneratePriors { p1: f64 },
    #[error("joint cells must sum to 1, got {sum}")]
    NotNormalized { sum: f64 },
    #[error("class error mass {error} exceeds its prior {prior}")]
    ErrorExceedsPrior { error: f64, prior: f64 },
    #[error("priors are required: {0}")]
    MissingPriors(&'static str),
    #[error("{0}")]
    Constraint(&'static str),
}

/// A probability: a dimensionless value in `[0, 1]`.
///
/// Construction rejects values further than the validation slack outside the
/// unit interval and clamps the rest back into it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability<T>(T);

impl<T: Real> Probability<T> {
    pub fn new(value: T) -> Result<Self, DomainError> {
        let slack = T::validation_slack();
        if !(value >= -slack && value <= T::one() + slack) {
            return Err(DomainError::OutOfRange {
                name: "probability",
                lo: 0.0,
                hi: 1.0,
                value: value.as_f64(),
            });
        }
        Ok(Self(value.max(T::zero()).min(T::one())))
    }

    /// Internal constructor for values already known to be in range.
    pub(crate) fn new_clamped(value: T) -> Self {
        Self(value.max(T::zero()).min(T::one()))
    }

    pub fn zero() -> Self {
        Self(T::zero())
    }

    pub fn get(self) -> T {
        self.0
    }
}

impl<T: Real> fmt::Display for Probability<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An information quantity in bits (base-2 logarithm), never negative.
///
/// Tiny negative round-off within the validation slack is clamped to zero.
/// Binary-classification entropies additionally satisfy `value <= 1`; that
/// cap is enforced by the operations that only make sense for two classes,
/// since multi-class queries legitimately carry up to `log2(m)` bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Bits<T>(T);

impl<T: Real> Bits<T> {
    pub fn new(value: T) -> Result<Self, DomainError> {
        if !(value.is_finite() && value >= -T::validation_slack()) {
            return Err(DomainError::OutOfRange {
                name: "bits",
                lo: 0.0,
                hi: f64::INFINITY,
                value: value.as_f64(),
            });
        }
        Ok(Self(value.max(T::zero())))
    }

    pub(crate) fn new_clamped(value: T) -> Self {
        Self(value.max(T::zero()))
    }

    pub fn zero() -> Self {
        Self(T::zero())
    }

    pub fn get(self) -> T {
        self.0
    }
}

impl<T: Real> fmt::Display for Bits<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// The class prior pair `(p1, p2)` with the derived minimum prior.
///
/// Both priors are strictly inside `(0, 1)`: degenerate class distributions
/// are rejected rather than handled by limits, because every bound formula
/// divides by prior-dependent masses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Priors<T> {
    p1: Probability<T>,
    p2: Probability<T>,
    p_min: Probability<T>,
}

impl<T: Real> Priors<T> {
    /// Builds priors from the first-class prior; `p2 = 1 - p1`.
    pub fn from_p1(p1: T) -> Result<Self, DomainError> {
        if !(p1 > T::zero() && p1 < T::one()) {
            return Err(DomainError::DegeneratePriors { p1: p1.as_f64() });
        }
        let p2 = T::one() - p1;
        Ok(Self {
            p1: Probability(p1),
            p2: Probability(p2),
            p_min: Probability(p1.min(p2)),
        })
    }

    /// The class-balanced pair `(1/2, 1/2)`.
    pub fn balanced() -> Self {
        Self::from_p1(T::half()).expect("1/2 is a valid prior")
    }

    /// Rebuilds priors from both marginals; the caller validates the sum.
    pub(crate) fn from_parts(p1: T, p2: T) -> Result<Self, DomainError> {
        if !(p1 > T::zero() && p1 < T::one() && p2 > T::zero() && p2 < T::one()) {
            return Err(DomainError::DegeneratePriors { p1: p1.as_f64() });
        }
        Ok(Self {
            p1: Probability(p1),
            p2: Probability(p2),
            p_min: Probability(p1.min(p2)),
        })
    }

    pub fn p1(&self) -> Probability<T> {
        self.p1
    }

    pub fn p2(&self) -> Probability<T> {
        self.p2
    }

    pub fn p_min(&self) -> Probability<T> {
        self.p_min
    }
}

/// A 2x2 joint probability table over (true class, classifier output).
///
/// Cell layout, with `e1`/`e2` the per-class error masses:
///
/// ```text
/// p11 = p1 - e1    p12 = e1
/// p21 = e2         p22 = p2 - e2
/// ```
///
/// The total error probability is `e = e1 + e2 = p12 + p21`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointSetting<T> {
    cells: [T; 4],
    priors: Priors<T>,
    e1: Probability<T>,
    e2: Probability<T>,
    e: Probability<T>,
}

impl<T: Real> JointSetting<T> {
    /// Builds the table from priors and per-class error masses.
    ///
    /// Requires `e1 <= p1` and `e2 <= p2` (within the validation slack).
    pub fn from_priors_errors(
        priors: Priors<T>,
        e1: Probability<T>,
        e2: Probability<T>,
    ) -> Result<Self, DomainError> {
        let slack = T::validation_slack();
        let (p1, p2) = (priors.p1().get(), priors.p2().get());
        if e1.get() > p1 + slack {
            return Err(DomainError::ErrorExceedsPrior {
                error: e1.get().as_f64(),
                prior: p1.as_f64(),
            });
        }
        if e2.get() > p2 + slack {
            return Err(DomainError::ErrorExceedsPrior {
                error: e2.get().as_f64(),
                prior: p2.as_f64(),
            });
        }
        let e1 = Probability(e1.get().min(p1));
        let e2 = Probability(e2.get().min(p2));
        let cells = [
            (p1 - e1.get()).max(T::zero()),
            e1.get(),
            e2.get(),
            (p2 - e2.get()).max(T::zero()),
        ];
        Ok(Self {
            cells,
            priors,
            e1,
            e2,
            e: Probability::new_clamped(e1.get() + e2.get()),
        })
    }

    /// Builds the table from its four cells (`p11, p12, p21, p22`).
    ///
    /// The cells must be nonnegative, sum to 1 within the validation slack,
    /// and induce nondegenerate priors.
    pub fn from_cells(p11: T, p12: T, p21: T, p22: T) -> Result<Self, DomainError> {
        let slack = T::validation_slack();
        let mut cells = [p11, p12, p21, p22];
        for c in &mut cells {
            if c.is_nan() || *c < -slack {
                return Err(DomainError::OutOfRange {
                    name: "joint cell",
                    lo: 0.0,
                    hi: 1.0,
                    value: c.as_f64(),
                });
            }
            *c = c.max(T::zero());
        }
        let sum = cells[0] + cells[1] + cells[2] + cells[3];
        if (sum - T::one()).abs() > slack {
            return Err(DomainError::NotNormalized { sum: sum.as_f64() });
        }
        let priors = Priors::from_parts(cells[0] + cells[1], cells[2] + cells[3])?;
        let e1 = Probability(cells[1]);
        let e2 = Probability(cells[2]);
        Ok(Self {
            cells,
            priors,
            e1,
            e2,
            e: Probability::new_clamped(cells[1] + cells[2]),
        })
    }

    /// Cells in the order `[p11, p12, p21, p22]`.
    pub fn cells(&self) -> [T; 4] {
        self.cells
    }

    pub fn p11(&self) -> Probability<T> {
        Probability(self.cells[0])
    }

    pub fn p12(&self) -> Probability<T> {
        Probability(self.cells[1])
    }

    pub fn p21(&self) -> Probability<T> {
        Probability(self.cells[2])
    }

    pub fn p22(&self) -> Probability<T> {
        Probability(self.cells[3])
    }

    pub fn priors(&self) -> &Priors<T> {
        &self.priors
    }

    /// Error mass of class 1 (`p12`).
    pub fn e1(&self) -> Probability<T> {
        self.e1
    }

    /// Error mass of class 2 (`p21`).
    pub fn e2(&self) -> Probability<T> {
        self.e2
    }

    /// Total error probability `e = p12 + p21`.
    pub fn error(&self) -> Probability<T> {
        self.e
    }

    /// Output marginals `(q1, q2)` of the classifier decision.
    pub fn output_marginals(&self) -> (T, T) {
        (self.cells[0] + self.cells[2], self.cells[1] + self.cells[3])
    }
}

/// Which error family a diagram point belongs to.
///
/// Bayes errors come from the optimal decision rule and never exceed the
/// minimum prior; non-Bayes errors cover arbitrary classifiers and can reach 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    Bayes,
    NonBayes,
}

/// A point `(h, e)` in the conditional-entropy / error-probability plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramPoint<T> {
    h: Bits<T>,
    e: Probability<T>,
    error_kind: ErrorKind,
}

impl<T: Real> DiagramPoint<T> {
    pub fn new(h: Bits<T>, e: Probability<T>, error_kind: ErrorKind) -> Result<Self, DomainError> {
        if error_kind == ErrorKind::Bayes && e.get() > T::half() + T::validation_slack() {
            return Err(DomainError::Constraint(
                "a Bayes error probability never exceeds 1/2",
            ));
        }
        Ok(Self { h, e, error_kind })
    }

    pub fn h(&self) -> Bits<T> {
        self.h
    }

    pub fn e(&self) -> Probability<T> {
        self.e
    }

    pub fn error_kind(&self) -> ErrorKind {
        self.error_kind
    }
}

/// The bound families drawn in the error-vs-entropy diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    /// Fano's lower bound on the error probability.
    FanoLower,
    /// Kovalevskij's piecewise-linear upper bound.
    KovalevskijUpper,
    /// The exact upper bound derived from closed-form conditional entropy.
    AnalyticalUpper,
    /// The Bayes error cap `e <= min(p1, p2)`.
    BayesErrorCap,
    /// Mirror of Fano's bound across `e = 1/2`; caps any classifier's error.
    GeneralUpper,
    /// Mirror of the analytical upper bound; a lower bound for `e in [1/2, 1]`.
    MirroredAnalytical,
    /// The conditional-entropy cap `h <= H(p_min)`.
    EntropyCap,
}

impl BoundKind {
    pub const ALL: [BoundKind; 7] = [
        BoundKind::FanoLower,
        BoundKind::KovalevskijUpper,
        BoundKind::AnalyticalUpper,
        BoundKind::BayesErrorCap,
        BoundKind::GeneralUpper,
        BoundKind::MirroredAnalytical,
        BoundKind::EntropyCap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::FanoLower => "fano_lower",
            BoundKind::KovalevskijUpper => "kovalevskij_upper",
            BoundKind::AnalyticalUpper => "analytical_upper",
            BoundKind::BayesErrorCap => "bayes_error_cap",
            BoundKind::GeneralUpper => "general_upper",
            BoundKind::MirroredAnalytical => "mirrored_analytical",
            BoundKind::EntropyCap => "entropy_cap",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(DomainError::Constraint("unknown bound kind"))
    }
}

/// A sampled bound curve: points ordered by nondecreasing entropy, each
/// sitting on the defining equation of `kind`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve<T> {
    pub kind: BoundKind,
    pub points: Vec<DiagramPoint<T>>,
    /// Present for the curves parameterized by the minimum prior.
    pub p_min: Option<Probability<T>>,
}

/// Aggregate outcome of a certification or measurement sweep.
///
/// `max_violation` is the worst observed negated slack: it stays negative
/// (the tightest margin) while every check passes and turns positive once a
/// check fails. `violations` counts samples whose slack fell below the
/// negated tolerance. `tightness_min_ratio` is the smallest attained-to-bound
/// ratio seen; `notes` records what was swept and the units of the slack.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<T> {
    pub samples_checked: u64,
    pub violations: u64,
    pub max_violation: T,
    pub tightness_min_ratio: T,
    pub notes: String,
}
