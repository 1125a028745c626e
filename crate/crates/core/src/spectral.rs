//! Spectral invariants of special unitary matrices.
//!
//! For `Q ∈ SU(n)` with eigenvalues `μ_j`, the principal arguments are sorted
//! ascending in `(−π, π]`; their sum is `2πζ` for an integer `ζ`, and `s` is the
//! multiplicity of the eigenvalue `−1`. Eigenvalues closer than the clustering
//! tolerance are merged and share one snapped argument, so equality tests on
//! arguments downstream are exact.

use std::ops::Range;

use num_complex::Complex;
use num_traits::Zero;

use crate::eig::unitary_eig_with;
use crate::error::{Error, Result};
use crate::group::{to_f64, SpecialUnitary};
use crate::matrix::ComplexMatrix;
use crate::scalar::{within, Real};
use crate::tolerance::Tolerances;

/// Principal argument in `(−π, π]`; negative reals map to exactly `π`.
pub fn principal_arg<T: Real>(z: Complex<T>) -> Result<T> {
    if z.is_zero() {
        return Err(Error::ZeroInput);
    }
    let a = z.im.atan2(z.re);
    if a <= -T::PI() {
        Ok(T::PI())
    } else {
        Ok(a)
    }
}

/// Sorted principal arguments with their integer winding `ζ`.
///
/// Arguments lie in `(−π, π]`, ascend, and sum to `2πζ` within the zeta tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleTuple<T> {
    alphas: Vec<T>,
    zeta: i64,
}

impl<T: Real> AdmissibleTuple<T> {
    pub fn new(alphas: Vec<T>) -> Result<Self> {
        Self::with_tol(alphas, Tolerances::<T>::for_order(1).zeta)
    }

    pub fn with_tol(alphas: Vec<T>, zeta_tol: T) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidArgs("empty tuple".into()));
        }
        let pi = T::PI();
        if alphas.iter().any(|&a| !(a > -pi && a <= pi)) {
            return Err(Error::InvalidArgs("argument outside (-pi, pi]".into()));
        }
        if alphas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgs("arguments not sorted ascending".into()));
        }
        let zeta = round_zeta(&alphas, zeta_tol)?;
        Ok(Self { alphas, zeta })
    }

    pub fn alphas(&self) -> &[T] {
        &self.alphas
    }

    pub fn zeta(&self) -> i64 {
        self.zeta
    }

    pub fn order(&self) -> usize {
        self.alphas.len()
    }

    /// `diag(e^{iα_1}, …, e^{iα_n})`.
    pub fn to_matrix(&self) -> Result<SpecialUnitary<T>> {
        let tol = Tolerances::<T>::for_order(self.order()).group;
        SpecialUnitary::diagonal_phases(&self.alphas, tol)
    }

    /// Spectral data of the diagonal matrix, with the standard basis as eigenbasis.
    pub fn spectral_data(&self) -> SpectralData<T> {
        let n = self.order();
        SpectralData::from_sorted(self.alphas.clone(), self.zeta, ComplexMatrix::identity(n))
    }
}

fn round_zeta<T: Real>(args: &[T], tol: T) -> Result<i64> {
    let turns = args.iter().copied().sum::<T>() / (T::PI() + T::PI());
    let rounded = turns.round();
    let residual = (turns - rounded).abs();
    if !within(residual, tol) {
        return Err(Error::ZetaNotInteger {
            residual: to_f64(residual),
            tol: to_f64(tol),
        });
    }
    Ok(rounded.to_i64().expect("zeta fits in i64"))
}

/// Spectral summary of a special unitary matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralData<T> {
    args: Vec<T>,
    zeta: i64,
    s: usize,
    clusters: Vec<Range<usize>>,
    basis: ComplexMatrix<T>,
}

impl<T: Real> SpectralData<T> {
    /// Builds from already sorted, snapped arguments; clusters are runs of equal values.
    fn from_sorted(args: Vec<T>, zeta: i64, basis: ComplexMatrix<T>) -> Self {
        let mut clusters = Vec::new();
        let mut start = 0;
        for i in 1..=args.len() {
            if i == args.len() || args[i] != args[start] {
                clusters.push(start..i);
                start = i;
            }
        }
        let pi = T::PI();
        let s = args.iter().filter(|&&a| a == pi).count();
        Self {
            args,
            zeta,
            s,
            clusters,
            basis,
        }
    }

    pub fn order(&self) -> usize {
        self.args.len()
    }

    /// Sorted principal arguments.
    pub fn args(&self) -> &[T] {
        &self.args
    }

    pub fn zeta(&self) -> i64 {
        self.zeta
    }

    /// Multiplicity of the eigenvalue `−1`.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Index ranges (into `args`) of equal eigenvalues.
    pub fn clusters(&self) -> &[Range<usize>] {
        &self.clusters
    }

    /// Eigenvectors as columns, in the order of `args`. Within a cluster the
    /// column order is whatever the eigensolver produced.
    pub fn basis(&self) -> &ComplexMatrix<T> {
        &self.basis
    }

    /// `e^{i·arg}` for each sorted argument.
    pub fn eigenvalues(&self) -> Vec<Complex<T>> {
        self.args
            .iter()
            .map(|&a| Complex::from_polar(T::one(), a))
            .collect()
    }

    /// `Σ args²`, the squared norm of the principal logarithm on u(n).
    pub fn sum_sq_args(&self) -> T {
        self.args.iter().map(|&a| a * a).sum()
    }

    /// `U · diag(μ) · U*`, the matrix these data describe.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_spectral(&self.basis, &self.eigenvalues())
    }
}

/// Spectral summary of `q` with the given clustering tolerance and default
/// eigensolver and zeta tolerances for the order of `q`.
pub fn spectral_summary<T: Real>(q: &SpecialUnitary<T>, cluster_tol: T) -> Result<SpectralData<T>> {
    let tol = Tolerances::for_order(q.order()).with_cluster(cluster_tol);
    spectral_summary_with(q, &tol)
}

pub fn spectral_summary_with<T: Real>(
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<SpectralData<T>> {
    let eig = unitary_eig_with(q, tol)?;
    let n = q.order();
    let pi = T::PI();
    let two_pi = pi + pi;

    let raw: Vec<T> = eig
        .eigenvalues
        .iter()
        .map(|&z| principal_arg(z))
        .collect::<Result<_>>()?;

    // Single-linkage clustering around the circle.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| raw[i].partial_cmp(&raw[j]).expect("finite argument"));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, &idx) in order.iter().enumerate() {
        if pos > 0 && raw[idx] - raw[order[pos - 1]] < tol.cluster {
            groups.last_mut().expect("open group").push(idx);
        } else {
            groups.push(vec![idx]);
        }
    }
    if groups.len() > 1 {
        let first = raw[order[0]];
        let last = raw[order[n - 1]];
        if first + two_pi - last < tol.cluster {
            let head = groups.remove(0);
            groups.last_mut().expect("nonempty").extend(head);
        }
    }

    let mut snapped = vec![T::zero(); n];
    for g in &groups {
        let sum = g
            .iter()
            .fold(Complex::<T>::zero(), |acc, &i| acc + eig.eigenvalues[i]);
        let mean = if sum.is_zero() {
            raw[g[0]]
        } else {
            principal_arg(sum)?
        };
        let value = if pi - mean.abs() < tol.cluster {
            pi
        } else {
            mean
        };
        for &i in g {
            snapped[i] = value;
        }
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&i, &j| {
        snapped[i]
            .partial_cmp(&snapped[j])
            .expect("finite argument")
    });
    let args: Vec<T> = perm.iter().map(|&i| snapped[i]).collect();
    let zeta = round_zeta(&args, tol.zeta)?;
    Ok(SpectralData::from_sorted(
        args,
        zeta,
        eig.basis.permute_columns(&perm),
    ))
}

/// Spectral data of `Q*`: non-`π` arguments negated and re-sorted, the `π`
/// block kept; `ζ(Q*) = s − ζ(Q)`.
pub fn adjoint_spectrum<T: Real>(sd: &SpectralData<T>) -> SpectralData<T> {
    let n = sd.order();
    let m = n - sd.s;
    let mut perm: Vec<usize> = (0..m).rev().collect();
    perm.extend(m..n);
    let args = perm
        .iter()
        .map(|&i| {
            if i < m {
                T::zero() - sd.args[i]
            } else {
                sd.args[i]
            }
        })
        .collect();
    let zeta = sd.s as i64 - sd.zeta;
    SpectralData::from_sorted(args, zeta, sd.basis.permute_columns(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_special_unitary;
    use std::f64::consts::PI;

    fn summary(q: &SpecialUnitary<f64>) -> SpectralData<f64> {
        spectral_summary(q, 1e-7 * q.order() as f64).unwrap()
    }

    #[test]
    fn principal_arg_values() {
        assert_eq!(principal_arg(Complex::new(1.0, 0.0)).unwrap(), 0.0);
        assert_eq!(principal_arg(Complex::new(-1.0, 0.0)).unwrap(), PI);
        assert_eq!(principal_arg(Complex::new(-1.0, -0.0)).unwrap(), PI);
        assert_eq!(principal_arg(Complex::new(0.0, 1.0)).unwrap(), PI / 2.0);
        assert_eq!(
            principal_arg(Complex::<f64>::new(0.0, 0.0)),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn identity_summary() {
        let sd = summary(&SpecialUnitary::identity(3));
        assert_eq!(sd.args(), &[0.0, 0.0, 0.0]);
        assert_eq!((sd.zeta(), sd.s()), (0, 0));
        assert_eq!(sd.clusters().len(), 1);
        assert_eq!(sd.clusters()[0], 0..3);
    }

    #[test]
    fn minus_identity_summary() {
        let q = SpecialUnitary::scalar(2, PI, 1e-12).unwrap();
        let sd = summary(&q);
        assert_eq!(sd.args(), &[PI, PI]);
        assert_eq!((sd.zeta(), sd.s()), (1, 2));
    }

    #[test]
    fn mixed_sign_diagonal_summary() {
        let q = SpecialUnitary::diagonal_phases(&[PI, PI, 0.0, 0.0], 1e-12).unwrap();
        let sd = summary(&q);
        assert_eq!(sd.args(), &[0.0, 0.0, PI, PI]);
        assert_eq!((sd.zeta(), sd.s()), (1, 2));
        assert_eq!(sd.clusters(), &[0..2, 2..4]);
    }

    #[test]
    fn boundary_noise_does_not_split_minus_one() {
        let e = 1e-10;
        let q = SpecialUnitary::diagonal_phases(&[PI - e, -PI + e, 0.0], 1e-12).unwrap();
        let sd = summary(&q);
        assert_eq!(sd.args(), &[0.0, PI, PI]);
        assert_eq!(sd.s(), 2);
        assert_eq!(sd.zeta(), 1);
    }

    #[test]
    fn reconstruction_matches_input() {
        let q = random_special_unitary::<f64>(6, 4);
        let sd = summary(&q);
        assert!(sd.reconstruct().distance_to(q.matrix()) < 1e-10);
    }

    #[test]
    fn adjoint_examples() {
        let sd = summary(&SpecialUnitary::identity(4));
        let adj = adjoint_spectrum(&sd);
        assert_eq!(adj.args(), sd.args());
        assert_eq!((adj.zeta(), adj.s()), (0, 0));
        assert!(adj.reconstruct().distance_to(&ComplexMatrix::identity(4)) < 1e-15);

        let t = AdmissibleTuple::new(vec![PI, PI]).unwrap();
        let adj = adjoint_spectrum(&t.spectral_data());
        assert_eq!(adj.args(), &[PI, PI]);
        assert_eq!(adj.zeta(), 1);

        let t = AdmissibleTuple::new(vec![-2.0 * PI / 3.0, PI / 3.0, PI / 3.0]).unwrap();
        assert_eq!(t.zeta(), 0);
        let adj = adjoint_spectrum(&t.spectral_data());
        assert_eq!(adj.args(), &[-PI / 3.0, -PI / 3.0, 2.0 * PI / 3.0]);
        assert_eq!(adj.zeta(), 0);
    }

    #[test]
    fn adjoint_spectrum_matches_spectrum_of_adjoint() {
        for seed in 0..20 {
            let q = random_special_unitary::<f64>(5, seed);
            let direct = summary(&q.adjoint());
            let via = adjoint_spectrum(&summary(&q));
            assert_eq!(direct.zeta(), via.zeta());
            for (a, b) in direct.args().iter().zip(via.args()) {
                assert!((a - b).abs() < 1e-9);
            }
            assert!(via.reconstruct().distance_to(q.adjoint().matrix()) < 1e-9);
        }
    }

    #[test]
    fn admissible_tuple_rejections() {
        assert!(AdmissibleTuple::new(vec![0.5, 0.1]).is_err());
        assert!(AdmissibleTuple::new(vec![-PI, PI]).is_err());
        assert!(matches!(
            AdmissibleTuple::new(vec![0.1, 0.2]),
            Err(Error::ZetaNotInteger { .. })
        ));
    }
}
