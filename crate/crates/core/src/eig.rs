//! Eigendecomposition of special unitary matrices.
//!
//! The unitary problem is turned into a single Hermitian one with a rotated
//! Cayley transform. A rough angular picture of the spectrum comes from the
//! eigenvalues `cos θ_j` of `(Q + Q*)/2`: the candidate set `{±θ_j}` contains
//! every eigen-angle, so the centre `φ` of its widest circular gap is at least
//! `π/(2n)` away from all of them. With `Q' = e^{i(π−φ)} Q`, the matrix
//! `H = i(I − Q')(I + Q')⁻¹` is Hermitian, shares the eigenvectors of `Q`, and
//! maps eigen-angles monotonically through `tan(·/2)`, so distinct
//! eigenvalues of `Q` stay separated in `H`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{to_f64, SpecialUnitary};
use crate::hermitian::hermitian_eig;
use crate::matrix::ComplexMatrix;
use crate::scalar::{within, Real};
use crate::tolerance::Tolerances;

/// `Q = U · diag(eigenvalues) · U*` with unit-modulus eigenvalues.
#[derive(Debug, Clone)]
pub struct UnitaryEigenDecomposition<T> {
    pub eigenvalues: Vec<Complex<T>>,
    pub basis: ComplexMatrix<T>,
    /// `‖U·diag·U* − Q‖_F`.
    pub residual: T,
}

pub fn unitary_eig<T: Real>(q: &SpecialUnitary<T>) -> Result<UnitaryEigenDecomposition<T>> {
    unitary_eig_with(q, &Tolerances::for_order(q.order()))
}

pub fn unitary_eig_with<T: Real>(
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<UnitaryEigenDecomposition<T>> {
    let qm = q.matrix();
    let n = qm.order();
    let pi = T::PI();

    let cosines = hermitian_eig(&qm.hermitian_part())?.values;
    let mut candidates: Vec<T> = cosines
        .iter()
        .flat_map(|&c| {
            let a = c.max(-T::one()).min(T::one()).acos();
            [a, -a]
        })
        .collect();
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("finite angle"));
    let phi = widest_gap_centre(&candidates);

    let rot = Complex::from_polar(T::one(), pi - phi);
    let rotated = qm.scale(rot);
    let id = ComplexMatrix::identity(n);
    let cayley = (&id + &rotated).solve(&(&id - &rotated))?;
    let h = cayley.scale(Complex::new(T::zero(), T::one()));
    let eig = hermitian_eig(&h)?;
    let basis = eig.vectors;

    let qu = qm * &basis;
    let mut eigenvalues = Vec::with_capacity(n);
    for j in 0..n {
        let mut rq = Complex::zero();
        for i in 0..n {
            rq += basis[(i, j)].conj() * qu[(i, j)];
        }
        let r = rq.norm();
        if r == T::zero() {
            return Err(Error::EigFailed { sweeps: 0 });
        }
        eigenvalues.push(rq.unscale(r));
    }

    let residual = ComplexMatrix::from_spectral(&basis, &eigenvalues).distance_to(qm);
    if !within(residual, tol.eig) {
        return Err(Error::ResidualExceeded {
            residual: to_f64(residual),
            tol: to_f64(tol.eig),
        });
    }
    Ok(UnitaryEigenDecomposition {
        eigenvalues,
        basis,
        residual,
    })
}

/// Centre of the widest circular gap of sorted angles in `[−π, π]`.
fn widest_gap_centre<T: Real>(sorted: &[T]) -> T {
    let two_pi = T::PI() + T::PI();
    let (Some(&first), Some(&last)) = (sorted.first(), sorted.last()) else {
        return T::PI();
    };
    let mut best_gap = first + two_pi - last;
    let mut centre = last + best_gap / T::lit(2.0);
    for w in sorted.windows(2) {
        let gap = w[1] - w[0];
        if gap > best_gap {
            best_gap = gap;
            centre = w[0] + gap / T::lit(2.0);
        }
    }
    centre
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_special_unitary;
    use std::f64::consts::PI;

    fn sorted_args(eigs: &[Complex<f64>]) -> Vec<f64> {
        let mut a: Vec<f64> = eigs.iter().map(|z| z.arg()).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        a
    }

    #[test]
    fn diagonal_input() {
        let q = SpecialUnitary::diagonal_phases(&[PI / 2.0, -PI / 2.0], 1e-12).unwrap();
        let e = unitary_eig(&q).unwrap();
        let a = sorted_args(&e.eigenvalues);
        assert!((a[0] + PI / 2.0).abs() < 1e-14 && (a[1] - PI / 2.0).abs() < 1e-14);
        assert!(e.residual < 1e-14);
    }

    #[test]
    fn minus_identity_has_eigenvalue_minus_one() {
        let q = SpecialUnitary::<f64>::scalar(4, PI, 1e-12).unwrap();
        let e = unitary_eig(&q).unwrap();
        for z in &e.eigenvalues {
            assert!((z + 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn conjugated_degenerate_spectrum() {
        let u = random_special_unitary::<f64>(3, 17);
        let j =
            SpecialUnitary::diagonal_phases(&[PI / 3.0, PI / 3.0, -2.0 * PI / 3.0], 1e-12).unwrap();
        let q = j.conjugate_by(u.matrix(), 1e-10).unwrap();
        let e = unitary_eig(&q).unwrap();
        let a = sorted_args(&e.eigenvalues);
        let expect = [-2.0 * PI / 3.0, PI / 3.0, PI / 3.0];
        for (x, y) in a.iter().zip(expect) {
            assert!((x - y).abs() < 1e-9, "{a:?}");
        }
    }

    #[test]
    fn haar_reconstruction_residual() {
        for n in 1..=16 {
            for seed in 0..5 {
                let q = random_special_unitary::<f64>(n, seed * 31 + n as u64);
                let e = unitary_eig(&q).unwrap();
                assert!(e.residual <= 1e-9, "n={n} residual={}", e.residual);
                assert!(e.basis.unitarity_residual() <= 1e-9 * n as f64);
                for z in &e.eigenvalues {
                    assert!((z.norm() - 1.0).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn nearly_conjugate_pair_is_resolved() {
        // θ and −θ share a cosine; the Cayley step must still separate them
        let q = SpecialUnitary::diagonal_phases(&[1e-4, -1e-4, 0.0], 1e-12).unwrap();
        let u = random_special_unitary::<f64>(3, 5);
        let q = q.conjugate_by(u.matrix(), 1e-10).unwrap();
        let e = unitary_eig(&q).unwrap();
        let a = sorted_args(&e.eigenvalues);
        assert!((a[0] + 1e-4).abs() < 1e-12 && a[1].abs() < 1e-12 && (a[2] - 1e-4).abs() < 1e-12);
    }
}
