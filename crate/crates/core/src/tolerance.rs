use crate::scalar::Real;

/// Numerical tolerances used by validation, eigendecomposition and spectral clustering.
///
/// Defaults for order `n` with base `b = T::base_tol()` (1e-8 for `f64`):
/// `group = alg = b·n`, `eig = cluster = 10·b·n`, `zeta = max(1e-6, 100·b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    /// Bound on `‖QQ* − I‖_F` and `|det Q − 1|` for group elements.
    pub group: T,
    /// Bound on skew-Hermitian and trace residuals of Lie algebra elements.
    pub alg: T,
    /// Bound on eigendecomposition reconstruction residuals.
    pub eig: T,
    /// Circular distance below which eigenvalues are merged into one cluster.
    pub cluster: T,
    /// Bound on `|Σ args / 2π − ζ|`.
    pub zeta: T,
}

impl<T: Real> Tolerances<T> {
    pub fn for_order(n: usize) -> Self {
        Self::from_group(T::base_tol() * T::from_usize_lossy(n.max(1)))
    }

    /// Derives every tolerance from an explicit group tolerance.
    pub fn from_group(group: T) -> Self {
        let ten = T::lit(10.0);
        Self {
            group,
            alg: group,
            eig: ten * group,
            cluster: ten * group,
            zeta: T::lit(1e-6).max(T::lit(100.0) * T::base_tol()),
        }
    }

    pub fn with_cluster(mut self, cluster: T) -> Self {
        self.cluster = cluster;
        self
    }
}
