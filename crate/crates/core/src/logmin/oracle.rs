//! Exhaustive search over the integer lattice of logarithm branches.
//!
//! Independent of the closed-form path: it never calls `m_value` and searches a
//! box strictly larger than the set where minimizers are known to live.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::SpectralData;
use crate::tolerance::Tolerances;

/// Minimize `ψ(k) = Σ_j (args_j + 2πk_j)²` over integer `k` with `Σ k_j = −ζ`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeProblem<T> {
    args: Vec<T>,
    zeta: i64,
}

/// Minimal objective and every tuple attaining it, sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeMinimum<T> {
    pub value: T,
    pub minimizers: Vec<Vec<i64>>,
}

impl<T: Real> LatticeProblem<T> {
    pub fn new(args: Vec<T>, zeta: i64) -> Result<Self> {
        if args.is_empty() {
            return Err(Error::InvalidArgs("empty tuple".into()));
        }
        let tol = Tolerances::<T>::for_order(args.len()).zeta;
        let turns = args.iter().copied().sum::<T>() / (T::PI() + T::PI());
        let residual = (turns - T::from_i64(zeta).expect("zeta representable")).abs();
        if !crate::scalar::within(residual, tol) {
            return Err(Error::ZetaNotInteger {
                residual: crate::group::to_f64(residual),
                tol: crate::group::to_f64(tol),
            });
        }
        Ok(Self { args, zeta })
    }

    pub fn from_spectrum(sd: &SpectralData<T>) -> Result<Self> {
        Self::new(sd.args().to_vec(), sd.zeta())
    }

    pub fn args(&self) -> &[T] {
        &self.args
    }

    pub fn zeta(&self) -> i64 {
        self.zeta
    }

    /// The objective, summed in index order.
    pub fn psi(&self, k: &[i64]) -> T {
        let two_pi = T::PI() + T::PI();
        self.args
            .iter()
            .zip(k)
            .map(|(&a, &kj)| {
                let t = a + two_pi * T::from_i64(kj).expect("small integer");
                t * t
            })
            .sum()
    }

    /// `max k − min k`.
    pub fn spread(k: &[i64]) -> i64 {
        let max = k.iter().copied().max().unwrap_or(0);
        let min = k.iter().copied().min().unwrap_or(0);
        max - min
    }

    /// Enumerates every feasible tuple in `[−bound, bound]ⁿ`.
    pub fn brute_force(&self, bound: u32) -> Result<LatticeMinimum<T>> {
        let n = self.args.len();
        let target = -self.zeta;
        if (bound as i64) * (n as i64) < target.abs() {
            return Err(Error::Infeasible { bound, n, target });
        }
        let mut search = Search {
            problem: self,
            bound: bound as i64,
            best: T::infinity(),
            candidates: Vec::new(),
            current: vec![0; n],
        };
        search.descend(0, target);

        let best = search.best;
        let tie = tie_tolerance::<T>(n, best);
        let mut minimizers: Vec<Vec<i64>> = search
            .candidates
            .into_iter()
            .filter(|(v, _)| *v <= best + tie)
            .map(|(_, k)| k)
            .collect();
        minimizers.sort();
        Ok(LatticeMinimum {
            value: best,
            minimizers,
        })
    }
}

/// Values within this of the minimum are ties (summation-order rounding only).
fn tie_tolerance<T: Real>(n: usize, best: T) -> T {
    T::lit(16.0) * T::from_usize_lossy(n) * T::epsilon() * best.max(T::one())
}

struct Search<'a, T> {
    problem: &'a LatticeProblem<T>,
    bound: i64,
    best: T,
    candidates: Vec<(T, Vec<i64>)>,
    current: Vec<i64>,
}

impl<T: Real> Search<'_, T> {
    fn descend(&mut self, pos: usize, remaining: i64) {
        let n = self.current.len();
        if pos == n - 1 {
            if remaining.abs() <= self.bound {
                self.current[pos] = remaining;
                let v = self.problem.psi(&self.current);
                self.record(v);
            }
            return;
        }
        let left_after = (n - pos - 1) as i64;
        for k in -self.bound..=self.bound {
            let rest = remaining - k;
            if rest.abs() > left_after * self.bound {
                continue;
            }
            self.current[pos] = k;
            self.descend(pos + 1, rest);
        }
    }

    fn record(&mut self, v: T) {
        let n = self.current.len();
        if v < self.best {
            self.best = v;
            let tie = tie_tolerance::<T>(n, v);
            self.candidates.retain(|(c, _)| *c <= v + tie);
        }
        if v <= self.best + tie_tolerance::<T>(n, self.best) {
            self.candidates.push((v, self.current.clone()));
        }
    }
}

/// Brute-force `m` with all minimizers, searching `k_j ∈ [−bound, bound]`.
pub fn brute_force_m<T: Real>(args: &[T], zeta: i64, bound: u32) -> Result<LatticeMinimum<T>> {
    LatticeProblem::new(args.to_vec(), zeta)?.brute_force(bound)
}
