//! Minimal-norm logarithms on su(n).
//!
//! Every su(n)-logarithm of `Q` has eigenvalues `(arg μ_j + 2πk_j)i` with
//! `Σ k_j = −ζ`. Its squared norm is the lattice objective
//! `ψ(k) = Σ (arg μ_j + 2πk_j)²`, and `m(Q)` is the minimum of `ψ`.
//! For `ζ ≥ 0` the minimum subtracts `2π` from the `ζ` largest arguments; for
//! `ζ < 0` everything is computed on `Q*` and mapped back by `X ↦ −X`.

mod oracle;
mod plog;
mod theta;

pub use oracle::{brute_force_m, LatticeMinimum, LatticeProblem};
pub use plog::{plog_status, PlogStatus};
pub use theta::{theta_descriptor, theta_descriptor_with, theta_sample, ThetaDescriptor};

pub(crate) use theta::theta_from_spectrum;

use crate::error::Result;
use crate::group::{SkewHermitianTraceless, SpecialUnitary};
use crate::scalar::Real;
use crate::spectral::{adjoint_spectrum, spectral_summary_with, SpectralData};
use crate::tolerance::Tolerances;

/// Spectrum to work on, and whether it is the spectrum of the adjoint.
pub(crate) fn orient<T: Real>(sd: &SpectralData<T>, use_adjoint: bool) -> SpectralData<T> {
    if use_adjoint {
        adjoint_spectrum(sd)
    } else {
        sd.clone()
    }
}

/// Eigenvalue angles of the canonical minimizer for an oriented spectrum (`ζ ≥ 0`):
/// `arg μ_j` for the first `n − ζ` indices, `arg μ_j − 2π` for the last `ζ`.
pub(crate) fn canonical_exponents<T: Real>(sd: &SpectralData<T>) -> Vec<T> {
    debug_assert!(sd.zeta() >= 0);
    let n = sd.order();
    let cut = n - sd.zeta() as usize;
    let two_pi = T::PI() + T::PI();
    sd.args()
        .iter()
        .enumerate()
        .map(|(j, &a)| if j < cut { a } else { a - two_pi })
        .collect()
}

/// `m(Q)`, the squared distance from the identity, from the spectral data of `Q`.
pub fn m_value<T: Real>(sd: &SpectralData<T>) -> T {
    let oriented = orient(sd, sd.zeta() < 0);
    canonical_exponents(&oriented).iter().map(|&t| t * t).sum()
}

/// The canonical minimal-norm su(n)-logarithm of `q`.
pub fn min_log<T: Real>(q: &SpecialUnitary<T>) -> Result<SkewHermitianTraceless<T>> {
    min_log_with(q, &Tolerances::for_order(q.order()))
}

pub fn min_log_with<T: Real>(
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<SkewHermitianTraceless<T>> {
    let sd = spectral_summary_with(q, tol)?;
    min_log_from_spectrum(&sd, sd.zeta() < 0, tol)
}

/// Canonical minimizer built on `sd` (or on its adjoint, negated back).
pub(crate) fn min_log_from_spectrum<T: Real>(
    sd: &SpectralData<T>,
    use_adjoint: bool,
    tol: &Tolerances<T>,
) -> Result<SkewHermitianTraceless<T>> {
    let oriented = orient(sd, use_adjoint);
    let thetas = canonical_exponents(&oriented);
    let x = SkewHermitianTraceless::from_spectral(oriented.basis(), &thetas, tol.alg)?;
    Ok(if use_adjoint { x.neg() } else { x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::expm_skew;
    use crate::random::random_special_unitary;
    use crate::spectral::{spectral_summary, AdmissibleTuple};
    use num_complex::Complex;
    use std::f64::consts::PI;

    fn tuple(args: &[f64]) -> SpectralData<f64> {
        AdmissibleTuple::new(args.to_vec()).unwrap().spectral_data()
    }

    #[test]
    fn m_value_examples() {
        assert_eq!(m_value(&tuple(&[0.0, 0.0, 0.0])), 0.0);
        assert!((m_value(&tuple(&[PI, PI])) - 2.0 * PI * PI).abs() < 1e-12);
        let third = 2.0 * PI / 3.0;
        assert!(
            (m_value(&tuple(&[-third, PI / 3.0, PI / 3.0])) - 2.0 * PI * PI / 3.0).abs() < 1e-12
        );
        assert!((m_value(&tuple(&[third, third, third])) - 8.0 * PI * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn m_value_negative_zeta_uses_adjoint() {
        let third = 2.0 * PI / 3.0;
        let sd = tuple(&[-third, -third, -third]);
        assert_eq!(sd.zeta(), -1);
        assert!((m_value(&sd) - 8.0 * PI * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn min_log_identity_is_zero() {
        let x = min_log(&SpecialUnitary::<f64>::identity(3)).unwrap();
        assert!(x.norm() < 1e-15);
    }

    #[test]
    fn min_log_minus_identity() {
        let q = SpecialUnitary::scalar(2, PI, 1e-12).unwrap();
        let x = min_log(&q).unwrap();
        assert!((x.norm() - PI * 2f64.sqrt()).abs() < 1e-12);
        let spec = x.spectrum().unwrap();
        assert!((spec[0] + PI).abs() < 1e-12 && (spec[1] - PI).abs() < 1e-12);
        assert!(expm_skew(&x).unwrap().matrix().distance_to(q.matrix()) < 1e-12);
    }

    #[test]
    fn min_log_quarter_turn() {
        let q = SpecialUnitary::diagonal_phases(&[PI / 2.0, -PI / 2.0], 1e-12).unwrap();
        let x = min_log(&q).unwrap();
        let expect = crate::matrix::ComplexMatrix::from_diagonal(&[
            Complex::new(0.0, PI / 2.0),
            Complex::new(0.0, -PI / 2.0),
        ]);
        assert!(x.matrix().distance_to(&expect) < 1e-14);
    }

    #[test]
    fn min_log_round_trip_random() {
        for n in 2..=8 {
            for seed in 0..10 {
                let q = random_special_unitary::<f64>(n, 1000 + seed);
                let sd = spectral_summary(&q, 1e-7 * n as f64).unwrap();
                let x = min_log(&q).unwrap();
                assert!((x.norm().powi(2) - m_value(&sd)).abs() < 1e-9);
                let back = expm_skew(&x).unwrap();
                assert!(back.matrix().distance_to(q.matrix()) < 1e-8 * n as f64);
                assert!(x.matrix().trace().norm() < 1e-9);
                assert!((x.matrix() + &x.matrix().adjoint()).frobenius_norm() < 1e-9);
            }
        }
    }

    #[test]
    fn adjoint_symmetry() {
        for seed in 0..20 {
            let q = random_special_unitary::<f64>(5, 77 + seed);
            let sd = spectral_summary(&q, 5e-7).unwrap();
            let sda = spectral_summary(&q.adjoint(), 5e-7).unwrap();
            assert!((m_value(&sd) - m_value(&sda)).abs() < 1e-12 * m_value(&sd).max(1.0));
            let xa = min_log(&q.adjoint()).unwrap();
            let x = min_log(&q).unwrap();
            assert!((xa.norm() - x.norm()).abs() < 1e-10);
            let back = expm_skew(&xa.neg()).unwrap();
            assert!(back.matrix().distance_to(q.matrix()) < 1e-8);
        }
    }
}
