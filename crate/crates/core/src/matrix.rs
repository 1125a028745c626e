//! Dense square complex matrices.
//!
//! Storage is row-major. Products and sums between matrices of different
//! order panic; the checked entry points (`frobenius_inner`, the validated
//! group types) report [`Error::Shape`] instead.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Builds a matrix from rows, rejecting empty, ragged or non-finite input.
    pub fn from_rows(rows: Vec<Vec<Complex<T>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        let data: Vec<_> = rows.into_iter().flatten().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { n, data })
    }

    /// Real matrix convenience constructor, mostly for tests.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Complex::new(T::lit(x), T::zero()))
                        .collect()
                })
                .collect(),
        )
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex<T>]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n)
            .map(|i| self[(i, i)])
            .fold(Complex::zero(), |a, b| a + b)
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_real(&self, c: T) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z.scale(c)).collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    /// Returns the matrix whose `k`-th column is column `perm[k]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_fn(self.n, |i, k| self[(i, perm[k])])
    }

    /// `U · self · U*`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(u * self) * &u.adjoint()
    }

    /// `U · diag(d) · U*`, computed without forming the diagonal matrix.
    pub fn from_spectral(u: &Self, d: &[Complex<T>]) -> Self {
        let n = u.n;
        assert_eq!(d.len(), n);
        Self::from_fn(n, |i, j| {
            let mut acc = Complex::zero();
            for k in 0..n {
                acc += u[(i, k)] * d[k] * u[(j, k)].conj();
            }
            acc
        })
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// `‖self − other‖_F`.
    pub fn distance_to(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<T>()
            .sqrt()
    }

    /// `‖self·self* − I‖_F`.
    pub fn unitarity_residual(&self) -> T {
        let g = self * &self.adjoint();
        g.distance_to(&Self::identity(self.n))
    }

    /// Hermitian part `(A + A*)/2`.
    pub fn hermitian_part(&self) -> Self {
        let half = T::lit(0.5);
        Self::from_fn(self.n, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()).scale(half)
        })
    }

    /// Skew-Hermitian part `(A − A*)/2`.
    pub fn skew_part(&self) -> Self {
        let half = T::lit(0.5);
        Self::from_fn(self.n, |i, j| {
            (self[(i, j)] - self[(j, i)].conj()).scale(half)
        })
    }

    pub fn determinant(&self) -> Complex<T> {
        match Lu::decompose(self) {
            Some(lu) => lu.determinant(),
            None => Complex::zero(),
        }
    }

    /// Solves `self · X = rhs`.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.n, rhs.n);
        let lu = Lu::decompose(self).ok_or(Error::Singular)?;
        Ok(lu.solve(rhs))
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in product");
        let n = self.n;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

impl<T: Real> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in sum");
        ComplexMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        assert_eq!(self.n, rhs.n, "matrix order mismatch in difference");
        ComplexMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Real> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.n, self.n)?;
        for row in self.data.chunks(self.n.max(1)) {
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("({:?}, {:?})", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Frobenius inner product `Re tr(A B*)`.
pub fn frobenius_inner<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<T> {
    if a.order() != b.order() {
        return Err(Error::Shape {
            expected: a.order(),
            found: b.order(),
        });
    }
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| x.re * y.re + x.im * y.im)
        .sum())
}

/// Frobenius norm `sqrt(Σ |a_jk|²)`.
pub fn frobenius_norm<T: Real>(a: &ComplexMatrix<T>) -> T {
    a.frobenius_norm()
}

/// LU factorization with partial pivoting, `P·A = L·U`.
pub(crate) struct Lu<T> {
    lu: ComplexMatrix<T>,
    perm: Vec<usize>,
    swaps: usize,
}

impl<T: Real> Lu<T> {
    pub(crate) fn decompose(a: &ComplexMatrix<T>) -> Option<Self> {
        let n = a.order();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let (p, pivot) =
                (k..n)
                    .map(|i| (i, lu[(i, k)].norm()))
                    .fold(
                        (k, T::zero()),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot == T::zero() {
                return None;
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let d = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / d;
                lu[(i, k)] = f;
                for j in k + 1..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= f * u;
                }
            }
        }
        Some(Self { lu, perm, swaps })
    }

    pub(crate) fn determinant(&self) -> Complex<T> {
        let mut d = (0..self.lu.order())
            .map(|i| self.lu[(i, i)])
            .fold(Complex::one(), |a, b| a * b);
        if self.swaps % 2 == 1 {
            d = -d;
        }
        d
    }

    pub(crate) fn solve(&self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let n = self.lu.order();
        let mut x = ComplexMatrix::from_fn(n, |i, j| rhs[(self.perm[i], j)]);
        for col in 0..n {
            for i in 0..n {
                let mut acc = x[(i, col)];
                for k in 0..i {
                    acc -= self.lu[(i, k)] * x[(k, col)];
                }
                x[(i, col)] = acc;
            }
            for i in (0..n).rev() {
                let mut acc = x[(i, col)];
                for k in i + 1..n {
                    acc -= self.lu[(i, k)] * x[(k, col)];
                }
                x[(i, col)] = acc / self.lu[(i, i)];
            }
        }
        x
    }
}

/// Householder QR. Returns the unitary factor and the diagonal of the triangular factor.
pub(crate) fn householder_qr<T: Real>(a: &ComplexMatrix<T>) -> (ComplexMatrix<T>, Vec<Complex<T>>) {
    let n = a.order();
    let mut r = a.clone();
    let mut q = ComplexMatrix::identity(n);
    let two = T::lit(2.0);
    for k in 0..n {
        let norm_x = (k..n).map(|i| r[(i, k)].norm_sqr()).sum::<T>().sqrt();
        if norm_x == T::zero() {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == T::zero() {
            Complex::one()
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase.scale(norm_x);
        let mut v: Vec<Complex<T>> = (k..n).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2 = v.iter().map(|z| z.norm_sqr()).sum::<T>();
        if vnorm2 == T::zero() {
            continue;
        }
        // R ← H R with H = I − 2 v v* / (v* v)
        for j in 0..n {
            let dot = (k..n).fold(Complex::zero(), |acc, i| acc + v[i - k].conj() * r[(i, j)]);
            let f = dot.scale(two / vnorm2);
            for i in k..n {
                r[(i, j)] -= v[i - k] * f;
            }
        }
        // Q ← Q H
        for i in 0..n {
            let dot = (k..n).fold(Complex::zero(), |acc, j| acc + q[(i, j)] * v[j - k]);
            let f = dot.scale(two / vnorm2);
            for j in k..n {
                q[(i, j)] -= f * v[j - k].conj();
            }
        }
    }
    let diag = r.diagonal();
    (q, diag)
}
