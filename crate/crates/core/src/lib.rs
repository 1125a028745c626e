//! Bi-invariant Riemannian geometry of the special unitary group SU(n) with
//! the Frobenius metric `φ(A, B) = Re tr(AB*)`.
//!
//! The library computes geodesic distances, minimal-norm su(n)-logarithms and
//! the Grassmannian families they form when not unique, generalized principal
//! logarithms, the diameter of SU(n) and diametral points. A brute-force
//! lattice search ([`brute_force_m`]) is provided as an independent check of
//! the closed forms.
//!
//! Everything is generic over the scalar type through [`Real`]; the `*64`
//! aliases below fix it to `f64`, which is what the default tolerances are
//! tuned for.
//!
//! ```
//! use sungeo::{distance, diameter, SpecialUnitary64};
//! use std::f64::consts::PI;
//!
//! let i = SpecialUnitary64::identity(2);
//! let minus_i = SpecialUnitary64::scalar(2, PI, 1e-12).unwrap();
//! let d = distance(&i, &minus_i).unwrap();
//! assert!((d - diameter::<f64>(2).unwrap()).abs() < 1e-12);
//! ```

pub mod eig;
pub mod error;
pub mod geometry;
pub mod group;
pub mod hermitian;
pub mod logmin;
pub mod matrix;
pub mod random;
pub mod scalar;
pub mod spectral;
pub mod tolerance;

pub use eig::{unitary_eig, unitary_eig_with, UnitaryEigenDecomposition};
pub use error::{Error, Result};
pub use geometry::{
    diameter, diametral_points, distance, distance_with, geodesic_eval, geodesic_family,
    geodesic_family_with, log_map, log_map_with, relative_spectrum, DiametralReport,
    GeodesicFamily, GeodesicSegment,
};
pub use group::{
    expm_skew, expm_skew_with, validate_special_unitary, SkewHermitianTraceless, SpecialUnitary,
};
pub use logmin::{
    brute_force_m, m_value, min_log, min_log_with, plog_status, theta_descriptor,
    theta_descriptor_with, theta_sample, LatticeMinimum, LatticeProblem, PlogStatus,
    ThetaDescriptor,
};
pub use matrix::{frobenius_inner, frobenius_norm, ComplexMatrix};
pub use random::{random_special_unitary, random_special_unitary_from, random_unitary};
pub use scalar::Real;
pub use spectral::{
    adjoint_spectrum, principal_arg, spectral_summary, spectral_summary_with, AdmissibleTuple,
    SpectralData,
};
pub use tolerance::Tolerances;

pub use num_complex::Complex;

pub type ComplexMatrix64 = ComplexMatrix<f64>;
pub type SpecialUnitary64 = SpecialUnitary<f64>;
pub type SkewHermitianTraceless64 = SkewHermitianTraceless<f64>;
pub type SpectralData64 = SpectralData<f64>;
pub type ThetaDescriptor64 = ThetaDescriptor<f64>;
pub type GeodesicFamily64 = GeodesicFamily<f64>;
pub type Tolerances64 = Tolerances<f64>;

pub type ComplexMatrix32 = ComplexMatrix<f32>;
pub type SpecialUnitary32 = SpecialUnitary<f32>;
pub type SkewHermitianTraceless32 = SkewHermitianTraceless<f32>;
pub type SpectralData32 = SpectralData<f32>;
