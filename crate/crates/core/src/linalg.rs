//! Exact linear algebra: rank by fraction-free elimination over any exact
//! field, kernels over `Q`, and division-free characteristic polynomials of
//! integer matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::poly::IntPoly;

/// Minimal field interface needed by the elimination routines.
pub trait ExactField: Clone {
    fn is_zero_elem(&self) -> bool;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact division; `rhs` is nonzero.
    fn div(&self, rhs: &Self) -> Self;
}

impl ExactField for Rational {
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Rank by Bareiss fraction-free elimination.
///
/// Columns are processed left to right; in each column the pivot is the first
/// remaining row with a nonzero entry. Each update is
/// `a[i][j] = (pivot * a[i][j] - a[i][c] * a[r][j]) / previous_pivot`, where the
/// division is exact.
pub fn rank<F: ExactField>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev: Option<F> = None;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, piv);
        let pivot_row = m[r].clone();
        let pivot = pivot_row[c].clone();
        for row in m.iter_mut().skip(r + 1) {
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                let mut v = pivot.mul(x).sub(&factor.mul(y));
                if let Some(p) = &prev {
                    v = v.div(p);
                }
                *x = v;
            }
        }
        prev = Some(pivot);
        r += 1;
    }
    r
}

/// Reduced row echelon form over `Q`; returns the pivot column of each
/// nonzero row.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x -= &factor * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the right kernel `{v : m v = 0}` over `Q`.
pub fn kernel(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -work[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// `det(x I - A)` for a square integer matrix, by Berkowitz's division-free
/// recurrence over the leading principal submatrices.
pub fn charpoly_int(a: &[Vec<BigInt>]) -> IntPoly {
    let n = a.len();
    // Coefficients highest degree first.
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        // A_{k+1} = [[A_k, col], [row, a_kk]]
        let col: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        let row: Vec<BigInt> = (0..k).map(|j| a[k][j].clone()).collect();
        // First column of the Toeplitz matrix: 1, -a_kk, -R C, -R A C, ...
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a[k][k].clone());
        let mut v = col;
        for _ in 0..k {
            let dot: BigInt = row.iter().zip(&v).map(|(r, c)| r * c).sum();
            toeplitz.push(-dot);
            v = (0..k)
                .map(|i| (0..k).map(|j| &a[i][j] * &v[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, c) in poly.iter().enumerate() {
                if i >= j {
                    *slot += &toeplitz[i - j] * c;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    IntPoly::new(poly)
}
