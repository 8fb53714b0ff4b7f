//! Information functionals on binary classification settings: binary entropy
//! and its inverse, conditional entropy, mutual information, and the
//! closed-form derivative of mutual information along the error direction.
//!
//! Zero-mass terms follow the `0 * log2(0) = 0` convention by being skipped,
//! never by epsilon padding, so extremal settings evaluate exactly on their
//! bounds.

use crate::real::Real;
use crate::solve::bisect_increasing;
use crate::types::{Bits, DomainError, JointSetting, Priors, Probability};

/// Which preimage of the two-to-one binary entropy function to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntropyBranch {
    /// Preimage in `[0, 1/2]`.
    Lower,
    /// Preimage in `[1/2, 1]`.
    Upper,
}

#[inline]
fn xlog2x<T: Real>(x: T) -> T {
    if x > T::zero() {
        x * x.log2()
    } else {
        T::zero()
    }
}

/// `H(e) = -e log2 e - (1-e) log2(1-e)` on raw scalars.
pub(crate) fn binary_entropy_raw<T: Real>(e: T) -> T {
    -(xlog2x(e) + xlog2x(T::one() - e))
}

/// Binary Shannon entropy `H(e)` in bits; symmetric about `e = 1/2`.
pub fn binary_entropy<T: Real>(e: Probability<T>) -> Bits<T> {
    Bits::new_clamped(binary_entropy_raw(e.get()))
}

/// Lower-branch inverse of `H` on raw scalars, exact at both endpoints.
pub(crate) fn binary_entropy_inverse_raw<T: Real>(h: T) -> T {
    if h <= T::zero() {
        return T::zero();
    }
    if h >= T::one() {
        return T::half();
    }
    bisect_increasing(binary_entropy_raw, T::zero(), T::half(), h, T::root_tol())
}

/// Inverse of the binary entropy on the requested branch.
///
/// `H` is two-to-one, so the caller picks the branch: `Lower` returns the
/// preimage in `[0, 1/2]`, `Upper` the mirrored one in `[1/2, 1]`.
pub fn binary_entropy_inverse<T: Real>(
    h: Bits<T>,
    branch: EntropyBranch,
) -> Result<Probability<T>, DomainError> {
    let hv = h.get();
    if hv > T::one() + T::validation_slack() {
        return Err(DomainError::OutOfRange {
            name: "binary entropy",
            lo: 0.0,
            hi: 1.0,
            value: hv.as_f64(),
        });
    }
    let e = binary_entropy_inverse_raw(hv.min(T::one()));
    Ok(match branch {
        EntropyBranch::Lower => Probability::new_clamped(e),
        EntropyBranch::Upper => Probability::new_clamped(T::one() - e),
    })
}

/// `H(T|Y)` of a raw cell table `[p11, p12, p21, p22]`.
///
/// Used by the brute-force scans, which probe many tables per refinement
/// step without paying for re-validation.
pub(crate) fn conditional_entropy_cells<T: Real>(cells: [T; 4]) -> T {
    let [p11, p12, p21, p22] = cells;
    let q1 = p11 + p21;
    let q2 = p12 + p22;
    let mut h = T::zero();
    for (pij, qj) in [(p11, q1), (p12, q2), (p21, q1), (p22, q2)] {
        if pij > T::zero() {
            h = h - pij * (pij / qj).log2();
        }
    }
    h
}

/// Conditional entropy `H(T|Y) = -sum_ij p_ij log2(p_ij / q_j)` in bits.
///
/// Equals `H(T) - MI(T, Y)`; the identity between the two routes is what the
/// property tests certify.
pub fn conditional_entropy<T: Real>(s: &JointSetting<T>) -> Bits<T> {
    Bits::new_clamped(conditional_entropy_cells(s.cells()))
}

/// Mutual information `MI(T, Y) = sum_ij p_ij log2(p_ij / (p_i q_j))` in bits.
///
/// Computed from the four-term sum directly (not as `H(T) - H(T|Y)`), so it
/// provides an independent route for the entropy identities. The result is
/// clamped at zero; the raw sum can only go negative by round-off.
pub fn mutual_information<T: Real>(s: &JointSetting<T>) -> Bits<T> {
    let [p11, p12, p21, p22] = s.cells();
    let (q1, q2) = s.output_marginals();
    let p1 = s.priors().p1().get();
    let p2 = s.priors().p2().get();
    let mut mi = T::zero();
    for (pij, pi, qj) in [
        (p11, p1, q1),
        (p12, p1, q2),
        (p21, p2, q1),
        (p22, p2, q2),
    ] {
        if pij > T::zero() {
            mi = mi + pij * (pij / (pi * qj)).log2();
        }
    }
    Bits::new_clamped(mi)
}

/// Prior entropy `H(T) = -p1 log2 p1 - p2 log2 p2 = H(p_min)` in bits.
pub fn prior_entropy<T: Real>(p: &Priors<T>) -> Bits<T> {
    Bits::new_clamped(binary_entropy_raw(p.p_min().get()))
}

/// Closed-form derivative of `MI(T, Y)` with respect to the total error `e`,
/// holding `p2` and `e2` fixed:
///
/// ```text
/// d MI / d e = log2( ((1 - p2 - e + 2 e2) (e - e2)) /
///                    ((1 - p2 - e + e2) (e - 2 e2 + p2)) )
/// ```
///
/// Defined under the ordering `1 > 1 - p2 > p2 > e > e2 >= 0`, where it is
/// finite and negative: mutual information is strictly decreasing in `e`.
/// `e = e2` is rejected (the ratio degenerates to `log2(0)`), as is anything
/// outside the ordering, where the formula can hit a nonpositive ratio.
pub fn mi_derivative_in_e<T: Real>(
    p2: Probability<T>,
    e2: Probability<T>,
    e: Probability<T>,
) -> Result<T, DomainError> {
    let (p2, e2, e) = (p2.get(), e2.get(), e.get());
    let p1 = T::one() - p2;
    if !(p1 > p2 && p2 > e && e > e2) {
        return Err(DomainError::Constraint(
            "requires the ordering 1 - p2 > p2 > e > e2 >= 0",
        ));
    }
    let num = (p1 - e + e2 + e2) * (e - e2);
    let den = (p1 - e + e2) * (e - e2 - e2 + p2);
    Ok((num / den).log2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Priors;
    use proptest::prelude::*;

    const H_02: f64 = 0.721_928_094_887_362_3;
    const H_03: f64 = 0.881_290_899_230_692_6;
    const H_001: f64 = 0.080_793_135_895_911_17;
    const G2INV_01_02: f64 = 0.275_488_750_216_346_85;

    fn prob(x: f64) -> Probability<f64> {
        Probability::new(x).unwrap()
    }

    fn setting(p1: f64, e1: f64, e2: f64) -> JointSetting<f64> {
        let p = Priors::from_p1(p1).unwrap();
        JointSetting::from_priors_errors(p, prob(e1), prob(e2)).unwrap()
    }

    #[test]
    fn binary_entropy_reference_values() {
        assert_eq!(binary_entropy(prob(0.5)).get(), 1.0);
        assert_eq!(binary_entropy(prob(0.0)).get(), 0.0);
        assert_eq!(binary_entropy(prob(1.0)).get(), 0.0);
        assert!((binary_entropy(prob(0.2)).get() - H_02).abs() <= 1e-12);
    }

    #[test]
    fn binary_entropy_is_symmetric() {
        for i in 0..=1000 {
            let e = i as f64 / 1000.0;
            let a = binary_entropy(prob(e)).get();
            let b = binary_entropy(prob(1.0 - e)).get();
            assert!((a - b).abs() <= 1e-12, "asymmetry at e = {e}: {a} vs {b}");
        }
    }

    #[test]
    fn inverse_hits_branch_endpoints_exactly() {
        let one = Bits::new(1.0).unwrap();
        let zero = Bits::<f64>::zero();
        assert_eq!(
            binary_entropy_inverse(one, EntropyBranch::Lower).unwrap().get(),
            0.5
        );
        assert_eq!(
            binary_entropy_inverse(zero, EntropyBranch::Lower).unwrap().get(),
            0.0
        );
        assert_eq!(
            binary_entropy_inverse(zero, EntropyBranch::Upper).unwrap().get(),
            1.0
        );
    }

    #[test]
    fn inverse_recovers_the_reference_point() {
        let h = Bits::new(H_02).unwrap();
        let e = binary_entropy_inverse(h, EntropyBranch::Lower).unwrap().get();
        assert!((e - 0.2).abs() <= 1e-11);
    }

    #[test]
    fn inverse_rejects_entropy_above_one_bit() {
        let h = Bits::new(1.0 + 1e-6).unwrap();
        assert!(binary_entropy_inverse(h, EntropyBranch::Lower).is_err());
    }

    #[test]
    fn round_trip_on_a_grid_both_branches() {
        for i in 0..=1000 {
            let h = i as f64 / 1000.0;
            let hb = Bits::new(h).unwrap();
            for branch in [EntropyBranch::Lower, EntropyBranch::Upper] {
                let e = binary_entropy_inverse(hb, branch).unwrap();
                let back = binary_entropy(e).get();
                assert!(
                    (back - h).abs() <= 1e-10,
                    "round trip failed at h = {h} ({branch:?}): {back}"
                );
                match branch {
                    EntropyBranch::Lower => assert!(e.get() <= 0.5),
                    EntropyBranch::Upper => assert!(e.get() >= 0.5),
                }
            }
        }
    }

    #[test]
    fn conditional_entropy_of_named_settings() {
        // perfect classification: T fully determined by Y
        assert_eq!(conditional_entropy(&setting(0.8, 0.0, 0.0)).get(), 0.0);
        // minority class absorbed into the majority: H(T|Y) = H(p2)
        let s = setting(0.8, 0.0, 0.2);
        assert!((conditional_entropy(&s).get() - H_02).abs() <= 1e-12);
        // all error mass on the majority class at e = 0.1
        let s = setting(0.8, 0.1, 0.0);
        assert!((conditional_entropy(&s).get() - G2INV_01_02).abs() <= 1e-12);
        // symmetric noise at e = 0.3: Fano equality, H(T|Y) = H(0.3)
        let s = setting(0.5, 0.15, 0.15);
        assert!((conditional_entropy(&s).get() - H_03).abs() <= 1e-12);
    }

    #[test]
    fn mutual_information_of_named_settings() {
        // independence family member: rows proportional
        let s = setting(0.8, 0.4, 0.1);
        assert!(mutual_information(&s).get() <= 1e-12);
        // perfect classification: MI = H(T)
        let s = setting(0.8, 0.0, 0.0);
        let mi = mutual_information(&s).get();
        assert!((mi - prior_entropy(s.priors()).get()).abs() <= 1e-12);
        // random guessing: MI = 0
        let s = setting(0.5, 0.25, 0.25);
        assert!(mutual_information(&s).get() <= 1e-12);
    }

    #[test]
    fn prior_entropy_reference_values() {
        assert_eq!(prior_entropy(&Priors::from_p1(0.5).unwrap()).get(), 1.0);
        let h = prior_entropy(&Priors::from_p1(0.8).unwrap()).get();
        assert!((h - H_02).abs() <= 1e-12);
        let h = prior_entropy(&Priors::from_p1(0.99).unwrap()).get();
        assert!((h - H_001).abs() <= 1e-12);
    }

    #[test]
    fn mi_derivative_reference_values() {
        let d = mi_derivative_in_e(prob(0.2), prob(0.05), prob(0.15)).unwrap();
        assert!((d - (-1.222_392_421_336_447_9)).abs() <= 1e-12);
        assert!(d < 0.0);

        // the ratio reduces to 1/4 exactly
        let d = mi_derivative_in_e(prob(0.3), prob(0.0), prob(0.1)).unwrap();
        assert!((d - (-2.0)).abs() <= 1e-12);
    }

    #[test]
    fn mi_derivative_rejects_broken_orderings() {
        // p2 >= 1/2
        assert!(mi_derivative_in_e(prob(0.5), prob(0.0), prob(0.1)).is_err());
        // e >= p2
        assert!(mi_derivative_in_e(prob(0.2), prob(0.0), prob(0.25)).is_err());
        // e == e2: the closed form degenerates to log2(0)
        assert!(mi_derivative_in_e(prob(0.2), prob(0.1), prob(0.1)).is_err());
        // e < e2
        assert!(mi_derivative_in_e(prob(0.2), prob(0.1), prob(0.05)).is_err());
    }

    #[test]
    fn mi_derivative_matches_finite_differences_on_a_grid() {
        let delta = 1e-6;
        for i in 0..8 {
            let p2 = 0.06 + 0.05 * i as f64;
            for j in 0..8 {
                let e = p2 * (0.15 + 0.1 * j as f64);
                for k in 0..8 {
                    let e2 = 0.9 * e * k as f64 / 8.0;
                    let closed =
                        mi_derivative_in_e(prob(p2), prob(e2), prob(e)).unwrap();
                    let mi_at = |ev: f64| {
                        let s = setting(1.0 - p2, ev - e2, e2);
                        mutual_information(&s).get()
                    };
                    let fd = (mi_at(e + delta) - mi_at(e - delta)) / (2.0 * delta);
                    assert!(
                        (closed - fd).abs() <= 1e-5,
                        "closed {closed} vs fd {fd} at (p2={p2}, e2={e2}, e={e})"
                    );
                    assert!(closed < 0.0);
                }
            }
        }
    }

    #[test]
    fn mutual_information_decreases_along_the_error_direction() {
        // fixed (p2, e2) inside the ordering; e sweeps a 1e-3 grid
        let (p2, e2) = (0.3, 0.02);
        let mut prev = f64::INFINITY;
        let mut e = e2 + 1e-3;
        while e < p2 - 1e-9 {
            let s = setting(1.0 - p2, e - e2, e2);
            let mi = mutual_information(&s).get();
            assert!(mi < prev, "MI not strictly decreasing at e = {e}");
            prev = mi;
            e += 1e-3;
        }
    }

    #[test]
    fn works_at_f32_precision() {
        let h = binary_entropy(Probability::<f32>::new(0.2).unwrap()).get();
        assert!((h - H_02 as f32).abs() <= 1e-6);
        let e = binary_entropy_inverse(Bits::<f32>::new(h).unwrap(), EntropyBranch::Lower)
            .unwrap()
            .get();
        assert!((e - 0.2).abs() <= 1e-5);
    }

    proptest! {
        #[test]
        fn entropy_identity_holds_for_random_settings(
            p1 in 0.01f64..=0.99,
            u1 in 0.0f64..=1.0,
            u2 in 0.0f64..=1.0,
        ) {
            let p = Priors::from_p1(p1).unwrap();
            let s = JointSetting::from_priors_errors(
                p,
                prob(u1 * p.p1().get()),
                prob(u2 * p.p2().get()),
            )
            .unwrap();
            let h = conditional_entropy(&s).get();
            let mi = mutual_information(&s).get();
            let ht = prior_entropy(&p).get();
            prop_assert!(mi >= 0.0 && mi <= ht + 1e-10);
            prop_assert!((h + mi - ht).abs() <= 1e-10);
        }

        #[test]
        fn inverse_round_trips_random_entropies(h in 0.0f64..=1.0) {
            let e = binary_entropy_inverse(Bits::new(h).unwrap(), EntropyBranch::Lower)
                .unwrap();
            prop_assert!((binary_entropy(e).get() - h).abs() <= 1e-10);
        }
    }
}
