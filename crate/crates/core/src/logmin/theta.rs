//! The set Θ(Q) of minimal-norm logarithms.
//!
//! With `ζ ≥ 0` and `β = μ_{n−ζ}`, Θ(Q) is a single point unless `ζ ≥ 1` and
//! `μ_{n−ζ} = μ_{n−ζ+1}`. In that case the `β`-eigenspace splits into `ν₁`
//! directions kept at `arg β` and `ν₂` shifted to `arg β − 2π`, and Θ(Q) is the
//! orbit of the canonical element under unitaries acting on that eigenspace,
//! a copy of `Gr(ν₂; ℂ^{ν₁+ν₂})`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::group::{check_order, expm_skew_with, to_f64, SkewHermitianTraceless, SpecialUnitary};
use crate::matrix::ComplexMatrix;
use crate::scalar::{within, Real};
use crate::spectral::{spectral_summary_with, SpectralData};
use crate::tolerance::Tolerances;

use super::{canonical_exponents, orient};

#[derive(Debug, Clone)]
pub struct ThetaDescriptor<T> {
    n: usize,
    zeta: i64,
    is_singleton: bool,
    base_log: SkewHermitianTraceless<T>,
    beta_arg: Option<T>,
    nu: Option<(usize, usize)>,
    oriented: bool,
    // eigenbasis and canonical exponents of the oriented spectrum
    frame: ComplexMatrix<T>,
    exponents: Vec<T>,
    block: Option<Range<usize>>,
}

impl<T: Real> ThetaDescriptor<T> {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `ζ` of the oriented matrix (always `≥ 0`).
    pub fn zeta(&self) -> i64 {
        self.zeta
    }

    pub fn is_singleton(&self) -> bool {
        self.is_singleton
    }

    /// The canonical element of Θ(Q).
    pub fn base_log(&self) -> &SkewHermitianTraceless<T> {
        &self.base_log
    }

    /// `arg β` with `β = μ_{n−ζ}` of the oriented spectrum, when `ζ ≥ 1`.
    pub fn beta_arg(&self) -> Option<T> {
        self.beta_arg
    }

    pub fn nu1(&self) -> Option<usize> {
        self.nu.map(|(a, _)| a)
    }

    pub fn nu2(&self) -> Option<usize> {
        self.nu.map(|(_, b)| b)
    }

    /// True when computed on `Q*` and negated back.
    pub fn oriented(&self) -> bool {
        self.oriented
    }

    /// `(k, m)` for `Gr(k; ℂ^m)` when Θ(Q) is not a single point.
    pub fn grassmannian(&self) -> Option<(usize, usize)> {
        self.nu.map(|(a, b)| (b, a + b))
    }

    /// Real dimension of Θ(Q): `2·k·(m − k)` for `Gr(k; ℂ^m)`, zero for a point.
    pub fn dimension(&self) -> usize {
        self.grassmannian().map_or(0, |(k, m)| 2 * k * (m - k))
    }

    /// Order of the unitary parameter accepted by [`theta_sample`].
    pub fn block_order(&self) -> Option<usize> {
        self.nu.map(|(a, b)| a + b)
    }

    pub fn label(&self) -> String {
        match self.grassmannian() {
            Some((k, m)) => format!("Gr({k};C^{m})"),
            None => "point".to_string(),
        }
    }
}

pub fn theta_descriptor<T: Real>(q: &SpecialUnitary<T>) -> Result<ThetaDescriptor<T>> {
    theta_descriptor_with(q, &Tolerances::for_order(q.order()))
}

pub fn theta_descriptor_with<T: Real>(
    q: &SpecialUnitary<T>,
    tol: &Tolerances<T>,
) -> Result<ThetaDescriptor<T>> {
    let sd = spectral_summary_with(q, tol)?;
    theta_from_spectrum(&sd, sd.zeta() < 0, tol)
}

/// Descriptor built on `sd`, or on its adjoint when `use_adjoint` (which must
/// leave a nonnegative `ζ`).
pub(crate) fn theta_from_spectrum<T: Real>(
    sd: &SpectralData<T>,
    use_adjoint: bool,
    tol: &Tolerances<T>,
) -> Result<ThetaDescriptor<T>> {
    let o = orient(sd, use_adjoint);
    let n = o.order();
    let zeta = o.zeta();
    debug_assert!(zeta >= 0, "orientation must give nonnegative zeta");
    let exponents = canonical_exponents(&o);
    let base = SkewHermitianTraceless::from_spectral(o.basis(), &exponents, tol.alg)?;
    let base_log = if use_adjoint { base.neg() } else { base };

    let args = o.args();
    let (beta_arg, nu, block) = if zeta == 0 {
        (None, None, None)
    } else {
        let cut = n - zeta as usize;
        let beta = args[cut - 1];
        if args[cut] != beta {
            (Some(beta), None, None)
        } else {
            let nu1 = (0..cut).rev().take_while(|&j| args[j] == beta).count();
            let nu2 = (cut..n).take_while(|&j| args[j] == beta).count();
            (Some(beta), Some((nu1, nu2)), Some(cut - nu1..cut + nu2))
        }
    };

    Ok(ThetaDescriptor {
        n,
        zeta,
        is_singleton: nu.is_none(),
        base_log,
        beta_arg,
        nu,
        oriented: use_adjoint,
        frame: o.basis().clone(),
        exponents,
        block,
    })
}

/// The element `Ad_{R̂}(J̃)` of Θ(Q), where `R̂` acts as `r` on the β-eigenspace
/// and as the identity elsewhere (expressed in the descriptor's eigenbasis).
pub fn theta_sample<T: Real>(
    td: &ThetaDescriptor<T>,
    q: &SpecialUnitary<T>,
    r: &ComplexMatrix<T>,
) -> Result<SkewHermitianTraceless<T>> {
    let block = td.block.as_ref().ok_or(Error::SingletonTheta)?;
    check_order(td.n, q.order())?;
    check_order(block.len(), r.order())?;
    let tol = Tolerances::<T>::for_order(td.n);
    let ru = r.unitarity_residual();
    if !within(ru, tol.alg) {
        return Err(Error::NotUnitary {
            residual: to_f64(ru),
            tol: to_f64(tol.alg),
        });
    }

    let mut embedded = ComplexMatrix::identity(td.n);
    for (a, i) in block.clone().enumerate() {
        for (b, j) in block.clone().enumerate() {
            embedded[(i, j)] = r[(a, b)];
        }
    }
    let frame = &td.frame * &embedded;
    let x = SkewHermitianTraceless::from_spectral(&frame, &td.exponents, tol.alg)?;
    let x = if td.oriented { x.neg() } else { x };

    let residual = expm_skew_with(&x, &tol)?.matrix().distance_to(q.matrix());
    if !within(residual, tol.eig) {
        return Err(Error::DescriptorMismatch {
            residual: to_f64(residual),
        });
    }
    Ok(x)
}
