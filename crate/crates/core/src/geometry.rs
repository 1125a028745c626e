//! Riemannian geometry of SU(n) under the bi-invariant Frobenius metric.
//!
//! Geodesics are `t ↦ P·exp(tX)` with `X ∈ su(n)`. The distance between `P`
//! and `Q` is `sqrt(m(P*Q))`, and minimizing segments correspond one-to-one to
//! the minimal logarithms of `P*Q`. Of `P*Q` and `Q*P`, the one with the larger
//! `ζ` is used, so the closed forms apply with `ζ ≥ 0`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::group::{check_order, expm_skew_with, SkewHermitianTraceless, SpecialUnitary};
use crate::logmin::{m_value, theta_from_spectrum, theta_sample, ThetaDescriptor};
use crate::matrix::ComplexMatrix;
use crate::scalar::Real;
use crate::spectral::{spectral_summary_with, SpectralData};
use crate::tolerance::Tolerances;

/// `t ↦ start · exp(t·velocity)`; `t ∈ [0, 1]` covers the segment.
#[derive(Debug, Clone)]
pub struct GeodesicSegment<T> {
    pub start: SpecialUnitary<T>,
    pub velocity: SkewHermitianTraceless<T>,
    pub length: T,
}

impl<T: Real> GeodesicSegment<T> {
    pub fn new(start: SpecialUnitary<T>, velocity: SkewHermitianTraceless<T>) -> Result<Self> {
        check_order(start.order(), velocity.order())?;
        let length = velocity.norm();
        Ok(Self {
            start,
            velocity,
            length,
        })
    }

    pub fn eval(&self, t: T) -> Result<SpecialUnitary<T>> {
        geodesic_eval(self, t)
    }
}

/// All minimizing segments from `p` to `q`.
#[derive(Debug, Clone)]
pub struct GeodesicFamily<T> {
    pub p: SpecialUnitary<T>,
    pub q: SpecialUnitary<T>,
    pub unique: bool,
    pub canonical: GeodesicSegment<T>,
    pub theta: ThetaDescriptor<T>,
    pub distance: T,
    relative: SpecialUnitary<T>,
}

impl<T: Real> GeodesicFamily<T> {
    /// Another minimizing segment, parametrized by a unitary of order `ν₁ + ν₂`.
    pub fn sample(&self, r: &ComplexMatrix<T>) -> Result<GeodesicSegment<T>> {
        let x = theta_sample(&self.theta, &self.relative, r)?;
        GeodesicSegment::new(self.p.clone(), x)
    }

    /// Midpoint of the canonical segment.
    pub fn midpoint(&self) -> Result<SpecialUnitary<T>> {
        self.canonical.eval(T::lit(0.5))
    }

    pub fn label(&self) -> Option<String> {
        (!self.unique).then(|| self.theta.label())
    }
}

/// Spectral data of `P*Q` and whether to work on its adjoint.
struct Relative<T> {
    m: SpecialUnitary<T>,
    sd: SpectralData<T>,
    use_adjoint: bool,
}

fn relative<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<Relative<T>> {
    check_order(p.order(), q.order())?;
    let m = p.adjoint().compose(q, tol.group)?;
    let sd = spectral_summary_with(&m, tol)?;
    // ζ(Q*P) = s − ζ(P*Q)
    let use_adjoint = sd.zeta() < sd.s() as i64 - sd.zeta();
    Ok(Relative { m, sd, use_adjoint })
}

pub fn distance<T: Real>(p: &SpecialUnitary<T>, q: &SpecialUnitary<T>) -> Result<T> {
    distance_with(p, q, &Tolerances::for_order(p.order()))
}

pub fn distance_with<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<T> {
    let rel = relative(p, q, tol)?;
    Ok(m_value(&rel.sd).sqrt())
}

/// Spectral data of `P*Q` as used by [`distance`], with the orientation flag.
pub fn relative_spectrum<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<(SpectralData<T>, bool)> {
    let rel = relative(p, q, tol)?;
    Ok((rel.sd, rel.use_adjoint))
}

/// The canonical velocity `X` with `P·exp(X) = Q` and `‖X‖ = d(P, Q)`.
pub fn log_map<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
) -> Result<SkewHermitianTraceless<T>> {
    log_map_with(p, q, &Tolerances::for_order(p.order()))
}

pub fn log_map_with<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<SkewHermitianTraceless<T>> {
    let rel = relative(p, q, tol)?;
    crate::logmin::min_log_from_spectrum(&rel.sd, rel.use_adjoint, tol)
}

pub fn geodesic_family<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
) -> Result<GeodesicFamily<T>> {
    geodesic_family_with(p, q, &Tolerances::for_order(p.order()))
}

pub fn geodesic_family_with<T: Real>(
    p: &SpecialUnitary<T>,
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<GeodesicFamily<T>> {
    let rel = relative(p, q, tol)?;
    let theta = theta_from_spectrum(&rel.sd, rel.use_adjoint, tol)?;
    let canonical = GeodesicSegment::new(p.clone(), theta.base_log().clone())?;
    Ok(GeodesicFamily {
        p: p.clone(),
        q: q.clone(),
        unique: theta.is_singleton(),
        distance: m_value(&rel.sd).sqrt(),
        canonical,
        theta,
        relative: rel.m,
    })
}

/// `P·exp(tX)`, validated in SU(n).
pub fn geodesic_eval<T: Real>(seg: &GeodesicSegment<T>, t: T) -> Result<SpecialUnitary<T>> {
    let tol = Tolerances::for_order(seg.start.order());
    let step = expm_skew_with(&seg.velocity.scale(t), &tol)?;
    seg.start.compose(&step, tol.group)
}

/// Diameter of SU(n): `π√n` for even `n`, `π·sqrt(n − 1/n)` for odd `n`.
pub fn diameter<T: Real>(n: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::UnsupportedN(n));
    }
    let nf = T::from_usize_lossy(n);
    let sq = if n.is_multiple_of(2) {
        nf
    } else {
        nf - nf.recip()
    };
    Ok(T::PI() * sq.sqrt())
}

/// Points at maximal distance from `P`.
#[derive(Debug, Clone)]
pub struct DiametralReport<T> {
    pub n: usize,
    pub diameter: T,
    pub points: Vec<SpecialUnitary<T>>,
}

/// `[−P]` for even `n`; `[e^{(n−1)πi/n}P, e^{−(n−1)πi/n}P]` for odd `n`.
pub fn diametral_points<T: Real>(p: &SpecialUnitary<T>) -> Result<DiametralReport<T>> {
    let n = p.order();
    let diameter = diameter::<T>(n)?;
    let tol = Tolerances::<T>::for_order(n).group;
    let points = if n.is_multiple_of(2) {
        vec![p.scale_phase(Complex::new(-T::one(), T::zero()), tol)?]
    } else {
        let nf = T::from_usize_lossy(n);
        let angle = (nf - T::one()) * T::PI() / nf;
        vec![
            p.scale_phase(Complex::from_polar(T::one(), angle), tol)?,
            p.scale_phase(Complex::from_polar(T::one(), -angle), tol)?,
        ]
    };
    Ok(DiametralReport {
        n,
        diameter,
        points,
    })
}
