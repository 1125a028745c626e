//! Haar-distributed sampling on U(n) and SU(n).

use num_complex::Complex;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::group::SpecialUnitary;
use crate::matrix::{householder_qr, ComplexMatrix};
use crate::scalar::Real;

/// Standard complex Gaussian (Ginibre) matrix: entries `(x + iy)/√2`, `x, y ~ N(0, 1)`.
pub fn ginibre<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex::new(T::lit(re * s), T::lit(im * s))
    })
}

/// Haar-random unitary: QR of a Ginibre matrix with the triangular diagonal made positive.
pub fn random_unitary<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    let (mut q, r_diag) = householder_qr(&ginibre::<T, _>(n, rng));
    for (j, r) in r_diag.iter().enumerate() {
        let m = r.norm();
        let phase = if m == T::zero() {
            Complex::one()
        } else {
            r.unscale(m)
        };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-random element of SU(n) drawn from `rng`.
pub fn random_special_unitary_from<T: Real, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> SpecialUnitary<T> {
    let mut q = random_unitary::<T, _>(n, rng);
    if n > 0 {
        let det = q.determinant();
        let fix = det.unscale(det.norm()).conj();
        for i in 0..n {
            q[(i, n - 1)] *= fix;
        }
    }
    if n == 1 {
        // exactly the identity rather than a phase times its conjugate
        q[(0, 0)] = Complex::one();
    }
    SpecialUnitary::with_default_tol(q).expect("Haar sample lies in SU(n)")
}

/// Haar-random element of SU(n); deterministic per `seed`.
pub fn random_special_unitary<T: Real>(n: usize, seed: u64) -> SpecialUnitary<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_special_unitary_from(n, &mut rng)
}
