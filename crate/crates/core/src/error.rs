use thiserror::Error;

/// Errors raised by the matrix, spectral, logarithm and geometry routines.
///
/// Residuals are reported as `f64` regardless of the scalar type in use.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape: expected order {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("shape: matrix is not square or is empty")]
    NotSquare,
    #[error("non-finite entry in matrix")]
    NonFinite,
    #[error("not_unitary: residual {residual:e} exceeds tolerance {tol:e}")]
    NotUnitary { residual: f64, tol: f64 },
    #[error("det_not_one: residual {residual:e} exceeds tolerance {tol:e}")]
    DetNotOne { residual: f64, tol: f64 },
    #[error("not_skew_hermitian: residual {residual:e} exceeds tolerance {tol:e}")]
    NotSkewHermitian { residual: f64, tol: f64 },
    #[error("not_traceless: |tr| = {residual:e} exceeds tolerance {tol:e}")]
    NotTraceless { residual: f64, tol: f64 },
    #[error("singular matrix")]
    Singular,
    #[error("eig_failed: no convergence after {sweeps} sweeps")]
    EigFailed { sweeps: usize },
    #[error("residual_exceeded: reconstruction residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualExceeded { residual: f64, tol: f64 },
    #[error("zero_input: argument of zero is undefined")]
    ZeroInput,
    #[error("zeta_not_integer: rounding residual {residual:e} exceeds tolerance {tol:e}")]
    ZetaNotInteger { residual: f64, tol: f64 },
    #[error("invalid argument tuple: {0}")]
    InvalidArgs(String),
    #[error("infeasible: no integer tuple in box [-{bound}, {bound}]^{n} sums to {target}")]
    Infeasible { bound: u32, n: usize, target: i64 },
    #[error("singleton_theta: the set of minimizing logarithms is a single point")]
    SingletonTheta,
    #[error("descriptor does not match the given matrix: residual {residual:e}")]
    DescriptorMismatch { residual: f64 },
    #[error("unsupported_n: order {0} not supported (need n >= 2)")]
    UnsupportedN(usize),
}

impl Error {
    /// True for failures of the numerical pipeline rather than of the caller's input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::EigFailed { .. }
                | Error::ResidualExceeded { .. }
                | Error::ZetaNotInteger { .. }
                | Error::Singular
                | Error::DescriptorMismatch { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
