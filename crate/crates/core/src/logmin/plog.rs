use crate::scalar::Real;
use crate::spectral::SpectralData;

/// Classification of the generalized principal su(n)-logarithms of `Q`
/// (logarithms whose eigenvalues have imaginary part in `[−π, π]`).
///
/// Nonempty iff `0 ≤ ζ ≤ s`, in which case the set is a copy of `Gr(ζ; ℂ^s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlogStatus {
    pub nonempty: bool,
    pub zeta: i64,
    pub s: usize,
    pub grassmann_k: Option<usize>,
    pub grassmann_n: Option<usize>,
    pub is_singleton: bool,
}

impl PlogStatus {
    pub fn label(&self) -> String {
        match (self.grassmann_k, self.grassmann_n) {
            (Some(k), Some(m)) => format!("Gr({k};C^{m})"),
            _ => "empty".to_string(),
        }
    }
}

pub fn plog_status<T: Real>(sd: &SpectralData<T>) -> PlogStatus {
    let zeta = sd.zeta();
    let s = sd.s();
    let nonempty = zeta >= 0 && zeta <= s as i64;
    let (k, m) = if nonempty {
        (Some(zeta as usize), Some(s))
    } else {
        (None, None)
    };
    PlogStatus {
        nonempty,
        zeta,
        s,
        grassmann_k: k,
        grassmann_n: m,
        is_singleton: nonempty && (zeta == 0 || zeta == s as i64),
    }
}
