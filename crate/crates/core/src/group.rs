//! Validated elements of SU(n) and su(n), and the exponential between them.

use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hermitian::hermitian_eig;
use crate::matrix::ComplexMatrix;
use crate::scalar::{within, Real};
use crate::tolerance::Tolerances;

/// A unitary matrix with determinant one, checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialUnitary<T> {
    matrix: ComplexMatrix<T>,
    unitarity_residual: T,
    det_residual: T,
}

/// Accepts `a` iff `‖AA* − I‖_F ≤ tol` and `|det A − 1| ≤ tol`.
pub fn validate_special_unitary<T: Real>(a: ComplexMatrix<T>, tol: T) -> Result<SpecialUnitary<T>> {
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let unitarity_residual = a.unitarity_residual();
    if !within(unitarity_residual, tol) {
        return Err(Error::NotUnitary {
            residual: to_f64(unitarity_residual),
            tol: to_f64(tol),
        });
    }
    let det_residual = (a.determinant() - Complex::one()).norm();
    if !within(det_residual, tol) {
        return Err(Error::DetNotOne {
            residual: to_f64(det_residual),
            tol: to_f64(tol),
        });
    }
    Ok(SpecialUnitary {
        matrix: a,
        unitarity_residual,
        det_residual,
    })
}

pub(crate) fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl<T: Real> SpecialUnitary<T> {
    pub fn new(a: ComplexMatrix<T>, tol: T) -> Result<Self> {
        validate_special_unitary(a, tol)
    }

    /// Validates with the default group tolerance for the matrix order.
    pub fn with_default_tol(a: ComplexMatrix<T>) -> Result<Self> {
        let tol = Tolerances::for_order(a.order()).group;
        validate_special_unitary(a, tol)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(n),
            unitarity_residual: T::zero(),
            det_residual: T::zero(),
        }
    }

    /// `e^{iθ} I_n`; valid only when `nθ` is a multiple of `2π` (up to `tol`).
    pub fn scalar(n: usize, theta: T, tol: T) -> Result<Self> {
        let z = Complex::from_polar(T::one(), theta);
        validate_special_unitary(ComplexMatrix::identity(n).scale(z), tol)
    }

    /// Diagonal matrix `diag(e^{iα_1}, …, e^{iα_n})`.
    pub fn diagonal_phases(angles: &[T], tol: T) -> Result<Self> {
        let d: Vec<_> = angles
            .iter()
            .map(|&a| Complex::from_polar(T::one(), a))
            .collect();
        validate_special_unitary(ComplexMatrix::from_diagonal(&d), tol)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn unitarity_residual(&self) -> T {
        self.unitarity_residual
    }

    pub fn det_residual(&self) -> T {
        self.det_residual
    }

    /// The inverse `Q*`.
    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
            unitarity_residual: self.unitarity_residual,
            det_residual: self.det_residual,
        }
    }

    /// `self · other`, revalidated at `tol`.
    pub fn compose(&self, other: &Self, tol: T) -> Result<Self> {
        check_order(self.order(), other.order())?;
        validate_special_unitary(&self.matrix * &other.matrix, tol)
    }

    /// `U · self · U*` for a unitary `U`, revalidated at `tol`.
    pub fn conjugate_by(&self, u: &ComplexMatrix<T>, tol: T) -> Result<Self> {
        check_order(self.order(), u.order())?;
        validate_special_unitary(self.matrix.conjugate_by(u), tol)
    }

    /// `c · self` for a unit complex `c` with `cⁿ = 1`.
    pub fn scale_phase(&self, c: Complex<T>, tol: T) -> Result<Self> {
        validate_special_unitary(self.matrix.scale(c), tol)
    }
}

pub(crate) fn check_order(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(Error::Shape { expected, found })
    } else {
        Ok(())
    }
}

/// A traceless skew-Hermitian matrix: an element of su(n).
#[derive(Debug, Clone, PartialEq)]
pub struct SkewHermitianTraceless<T> {
    matrix: ComplexMatrix<T>,
}

impl<T: Real> SkewHermitianTraceless<T> {
    /// Accepts `x` iff `‖X + X*‖_F ≤ tol` and `|tr X| ≤ tol`.
    pub fn new(x: ComplexMatrix<T>, tol: T) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NonFinite);
        }
        let skew = (&x + &x.adjoint()).frobenius_norm();
        if !within(skew, tol) {
            return Err(Error::NotSkewHermitian {
                residual: to_f64(skew),
                tol: to_f64(tol),
            });
        }
        let tr = x.trace().norm();
        if !within(tr, tol) {
            return Err(Error::NotTraceless {
                residual: to_f64(tr),
                tol: to_f64(tol),
            });
        }
        Ok(Self { matrix: x })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(n),
        }
    }

    /// `U · diag(iθ_1, …, iθ_n) · U*`, projected onto su(n) and checked at `tol`.
    pub fn from_spectral(u: &ComplexMatrix<T>, thetas: &[T], tol: T) -> Result<Self> {
        let d: Vec<_> = thetas.iter().map(|&t| Complex::new(T::zero(), t)).collect();
        let x = ComplexMatrix::from_spectral(u, &d);
        Self::project(x, tol)
    }

    /// Orthogonal projection onto su(n), rejecting inputs farther than `tol` away.
    pub(crate) fn project(x: ComplexMatrix<T>, tol: T) -> Result<Self> {
        let n = x.order();
        let mut s = x.skew_part();
        let shift = s.trace().unscale(T::from_usize_lossy(n));
        for i in 0..n {
            s[(i, i)] -= shift;
        }
        if !within(s.distance_to(&x), tol) {
            return Self::new(x, tol);
        }
        Ok(Self { matrix: s })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    /// Frobenius norm `‖X‖_φ`.
    pub fn norm(&self) -> T {
        self.matrix.frobenius_norm()
    }

    pub fn neg(&self) -> Self {
        Self {
            matrix: -&self.matrix,
        }
    }

    pub fn scale(&self, t: T) -> Self {
        Self {
            matrix: self.matrix.scale_real(t),
        }
    }

    /// `Ad_U(X) = U X U*` for unitary `U`.
    pub fn conjugate_by(&self, u: &ComplexMatrix<T>) -> Result<Self> {
        check_order(self.order(), u.order())?;
        Ok(Self {
            matrix: self.matrix.conjugate_by(u),
        })
    }

    /// Eigenvalues `iθ_j` of `X`, returned as the real `θ_j` ascending.
    pub fn spectrum(&self) -> Result<Vec<T>> {
        let h = self.matrix.scale(Complex::new(T::zero(), -T::one()));
        Ok(hermitian_eig(&h)?.values)
    }
}

/// `exp(X)` for `X ∈ su(n)`, via the Hermitian eigendecomposition of `−iX`.
pub fn expm_skew<T: Real>(x: &SkewHermitianTraceless<T>) -> Result<SpecialUnitary<T>> {
    expm_skew_with(x, &Tolerances::for_order(x.order()))
}

pub fn expm_skew_with<T: Real>(
    x: &SkewHermitianTraceless<T>,
    tol: &Tolerances<T>,
) -> Result<SpecialUnitary<T>> {
    let h = x.matrix().scale(Complex::new(T::zero(), -T::one()));
    let eig = hermitian_eig(&h)?;
    let d: Vec<_> = eig
        .values
        .iter()
        .map(|&t| Complex::from_polar(T::one(), t))
        .collect();
    let m = ComplexMatrix::from_spectral(&eig.vectors, &d);
    validate_special_unitary(m, tol.group)
}
