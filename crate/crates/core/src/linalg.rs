//! Dense exact linear algebra over the Gaussian rationals.
//!
//! Elimination is fraction-free (Bareiss): rows are first scaled to Gaussian
//! integers, then reduced with exact single-step updates, and solutions are
//! recovered by rational back-substitution. Matrices are row-major; the
//! canonical tensor-square layout pairs `(i, j) -> i*n + j` (first factor is
//! the slow index) and every higher tensor map in the crate is built from
//! [`Matrix::kron`] against that layout.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Coefficient vector of fixed length.
pub type Vector = Vec<Scalar>;

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Bilinear dot product (no conjugation).
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn conj_vec(v: &[Scalar]) -> Vector {
    v.iter().map(Scalar::conj).collect()
}

/// Rescale so the first non-zero entry is 1; zero vectors are returned as-is.
pub fn normalize_leading(v: &[Scalar]) -> Vector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv();
            scale_vec(&inv, v)
        }
        None => v.to_vec(),
    }
}

/// `Some(c)` when `a = c*b` with `b` non-zero, testing all coordinates.
pub fn proportionality(a: &[Scalar], b: &[Scalar]) -> Option<Scalar> {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] / &b[k];
    for (x, y) in a.iter().zip(b) {
        if *x != &c * y {
            return None;
        }
    }
    Some(c)
}

/// Error for the one operation whose precondition depends on the data rather
/// than on dimensions: the exact positive-semidefiniteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    NotHermitian { row: usize, col: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotHermitian { row, col } => {
                write!(f, "matrix is not Hermitian at entry ({row}, {col})")
            }
        }
    }
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let r = rows.len();
        Matrix {
            rows: r,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: &[Vector]) -> Self {
        assert!(!cols.is_empty(), "matrix needs at least one column");
        let rows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == rows), "ragged columns");
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    /// Matrix product `self * rhs`, skipping zero entries.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &(a * b);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = zeros(self.rows);
        for i in 0..self.rows {
            for (k, x) in v.iter().enumerate() {
                let a = &self[(i, k)];
                if a.is_zero() || x.is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * x);
            }
        }
        out
    }

    /// `f^T * self` for a row covector.
    pub fn row_apply(&self, f: &[Scalar]) -> Vector {
        assert_eq!(self.rows, f.len(), "covector-matrix dimension mismatch");
        let mut out = zeros(self.cols);
        for (i, x) in f.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                out[j] = &out[j] + &(x * a);
            }
        }
        out
    }

    /// Kronecker product consistent with the canonical tensor layout:
    /// `(M (x) N)(x (x) y) = Mx (x) Ny` under `(i, j) -> i*n + j` flattening.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if b.is_zero() {
                            continue;
                        }
                        out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                    }
                }
            }
        }
        out
    }

    /// Columns of `rhs` appended on the right.
    pub fn augment(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "augment row mismatch");
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    /// Indices of a maximal independent set of columns (the echelon pivot
    /// columns, leftmost-greedy), spanning the column space.
    pub fn column_space_pivots(&self) -> Vec<usize> {
        echelon(self).pivots.iter().map(|&(_, c)| c).collect()
    }

    /// One exact solution of `self * x = rhs`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vector> {
        assert_eq!(self.rows, rhs.len(), "solve dimension mismatch");
        let mut sols = self.solve_columns(&Matrix::from_columns(&[rhs.to_vec()]))?;
        Some(sols.pop().unwrap())
    }

    /// Simultaneous solve for every column of `rhs`; `None` when any column
    /// is inconsistent.
    pub fn solve_columns(&self, rhs: &Matrix) -> Option<Vec<Vector>> {
        assert_eq!(self.rows, rhs.rows, "solve dimension mismatch");
        let ech = echelon(&self.augment(rhs));
        let n = self.cols;
        // A pivot inside the augmented block means some column is
        // inconsistent; identify which by back-substituting each column.
        let mut out = Vec::with_capacity(rhs.cols);
        for c in 0..rhs.cols {
            out.push(ech.back_substitute(n, n + c)?);
        }
        Some(out)
    }

    /// Exact basis of the right nullspace; each vector has a leading 1 in its
    /// free coordinate. Empty iff the matrix is injective.
    pub fn kernel(&self) -> Vec<Vector> {
        let ech = echelon(self);
        let n = self.cols;
        let mut pivot_col = vec![None; n];
        for &(r, c) in &ech.pivots {
            pivot_col[c] = Some(r);
        }
        let mut basis_vectors = Vec::new();
        for free in 0..n {
            if pivot_col[free].is_some() {
                continue;
            }
            let mut v = zeros(n);
            v[free] = Scalar::one();
            // Solve the pivot coordinates bottom-up.
            for &(r, c) in ech.pivots.iter().rev() {
                let mut acc = Scalar::zero();
                for j in c + 1..n {
                    let a = &ech.rows[r][j];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(a * &v[j]);
                    }
                }
                v[c] = &(-&acc) / &ech.rows[r][c];
            }
            basis_vectors.push(v);
        }
        basis_vectors
    }

    /// Exact inverse, or `None` when singular. Panics if not square.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        if self.rank() != self.rows {
            return None;
        }
        let cols = self.solve_columns(&Matrix::identity(self.rows))?;
        Some(Matrix::from_columns(&cols))
    }

    /// Exact positive-semidefiniteness of a Hermitian matrix, decided by
    /// pivoted LDL^H over the rationals: pivot on strictly positive diagonal
    /// entries; a state where every remaining diagonal entry vanishes is PSD
    /// iff the whole remaining block vanishes.
    pub fn psd_check(&self) -> Result<bool, LinalgError> {
        assert_eq!(self.rows, self.cols, "PSD test needs a square matrix");
        let n = self.rows;
        for i in 0..n {
            for j in 0..n {
                if self[(i, j)] != self[(j, i)].conj() {
                    return Err(LinalgError::NotHermitian { row: i, col: j });
                }
            }
        }
        let mut w = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        loop {
            let mut pivot = None;
            for &i in &active {
                let d = &w[(i, i)];
                debug_assert!(d.is_real());
                if d.re.is_negative() {
                    return Ok(false);
                }
                if pivot.is_none() && d.re.is_positive() {
                    pivot = Some(i);
                }
            }
            let Some(p) = pivot else {
                // All remaining diagonal entries are zero: PSD iff the whole
                // remaining block is zero.
                for &i in &active {
                    for &j in &active {
                        if !w[(i, j)].is_zero() {
                            return Ok(false);
                        }
                    }
                }
                return Ok(true);
            };
            let d = w[(p, p)].clone();
            active.retain(|&i| i != p);
            for &i in &active {
                if w[(i, p)].is_zero() {
                    continue;
                }
                for &j in &active {
                    if w[(p, j)].is_zero() {
                        continue;
                    }
                    let upd = &(&w[(i, p)] * &w[(p, j)]) / &d;
                    w[(i, j)] = &w[(i, j)] - &upd;
                }
            }
            for &i in &active {
                w[(i, p)] = Scalar::zero();
                w[(p, i)] = Scalar::zero();
            }
        }
    }
}

/// Flip operator on the canonical tensor-square layout: `x (x) y -> y (x) x`
/// as an `n^2 x n^2` matrix.
pub fn flip_matrix(n: usize) -> Matrix {
    let mut m = Matrix::zero(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            m[(j * n + i, i * n + j)] = Scalar::one();
        }
    }
    m
}

/// Element of a tensor square `A (x) A`, stored flat in the canonical layout.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    pub dim: usize,
    pub data: Vector,
}

impl Tensor2 {
    pub fn zero(dim: usize) -> Self {
        Tensor2 {
            dim,
            data: zeros(dim * dim),
        }
    }

    pub fn from_flat(dim: usize, data: Vector) -> Self {
        assert_eq!(data.len(), dim * dim, "tensor layout mismatch");
        Tensor2 { dim, data }
    }

    /// `x (x) y`.
    pub fn outer(x: &[Scalar], y: &[Scalar]) -> Self {
        assert_eq!(x.len(), y.len(), "tensor factors of unequal dimension");
        let n = x.len();
        let mut t = Tensor2::zero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                t.data[i * n + j] = xi * yj;
            }
        }
        t
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.dim + j] = v;
    }

    /// The flip `x (x) y -> y (x) x`.
    pub fn flip(&self) -> Tensor2 {
        let n = self.dim;
        Tensor2::from_flat(
            n,
            (0..n * n)
                .map(|k| self.data[(k % n) * n + k / n].clone())
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// Contract the first factor with a covector: `(f (x) id)(t)`.
    pub fn slice_left(&self, f: &[Scalar]) -> Vector {
        assert_eq!(f.len(), self.dim, "slice covector dimension mismatch");
        let n = self.dim;
        let mut out = zeros(n);
        for (i, fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for k in 0..n {
                let t = self.at(i, k);
                if !t.is_zero() {
                    out[k] = &out[k] + &(fi * t);
                }
            }
        }
        out
    }

    /// Contract the second factor with a covector: `(id (x) f)(t)`.
    pub fn slice_right(&self, f: &[Scalar]) -> Vector {
        assert_eq!(f.len(), self.dim, "slice covector dimension mismatch");
        let n = self.dim;
        let mut out = zeros(n);
        for i in 0..n {
            for (k, fk) in f.iter().enumerate() {
                let t = self.at(i, k);
                if !t.is_zero() && !fk.is_zero() {
                    out[i] = &out[i] + &(t * fk);
                }
            }
        }
        out
    }

    /// Full contraction with `f (x) g`.
    pub fn pair(&self, f: &[Scalar], g: &[Scalar]) -> Scalar {
        dot(&self.slice_left(f), g)
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor2(dim {}):", self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.at(i, j);
                if !v.is_zero() {
                    write!(f, " +({})e{}(x)e{}", v, i, j)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over the Gaussian integers.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
struct Gauss {
    re: BigInt,
    im: BigInt,
}

impl Gauss {
    fn zero() -> Self {
        Gauss {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one() -> Self {
        Gauss {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &Gauss) -> Gauss {
        Gauss {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &Gauss) -> Gauss {
        Gauss {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Exact division in Z[i]; the quotients in Bareiss elimination are
    /// minors of the scaled matrix, so divisibility always holds here.
    fn exact_div(&self, rhs: &Gauss) -> Gauss {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        assert!(!norm.is_zero(), "exact division by zero");
        let re_num = &self.re * &rhs.re + &self.im * &rhs.im;
        let im_num = &self.im * &rhs.re - &self.re * &rhs.im;
        let (qr, rr) = re_num.div_rem(&norm);
        let (qi, ri) = im_num.div_rem(&norm);
        assert!(rr.is_zero() && ri.is_zero(), "inexact Gaussian division");
        Gauss { re: qr, im: qi }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::new(
            Ratio::from_integer(self.re.clone()),
            Ratio::from_integer(self.im.clone()),
        )
    }
}

fn scale_row_to_gauss(row: &[Scalar]) -> Vec<Gauss> {
    let mut lcm = BigInt::one();
    for s in row {
        lcm = lcm.lcm(s.re.denom());
        lcm = lcm.lcm(s.im.denom());
    }
    row.iter()
        .map(|s| {
            let re = s.re.numer() * (&lcm / s.re.denom());
            let im = s.im.numer() * (&lcm / s.im.denom());
            Gauss { re, im }
        })
        .collect()
}

struct Echelon {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    /// Back-substitute for the unknowns in columns `0..n`, taking column
    /// `rhs_col` as the right-hand side. `None` when inconsistent.
    fn back_substitute(&self, n: usize, rhs_col: usize) -> Option<Vector> {
        let mut x = zeros(n);
        // Rows whose pivot lies beyond the unknowns constrain the right-hand
        // side directly: a non-zero entry there is an inconsistency.
        for &(r, c) in &self.pivots {
            if c >= n && !self.rows[r][rhs_col].is_zero() && c != rhs_col {
                // Pivot in some other augmented column: irrelevant for this
                // right-hand side unless the entry is non-zero.
                return None;
            }
            if c == rhs_col {
                return None;
            }
        }
        for &(r, c) in self.pivots.iter().rev() {
            if c >= n {
                continue;
            }
            let mut acc = self.rows[r][rhs_col].clone();
            for j in c + 1..n {
                let a = &self.rows[r][j];
                if !a.is_zero() && !x[j].is_zero() {
                    acc = &acc - &(a * &x[j]);
                }
            }
            x[c] = &acc / &self.rows[r][c];
        }
        Some(x)
    }
}

/// Fraction-free row echelon form with column pivoting.
fn echelon(m: &Matrix) -> Echelon {
    let rows = m.rows();
    let cols = m.cols();
    let mut g: Vec<Vec<Gauss>> = (0..rows).map(|i| scale_row_to_gauss(&m.row(i))).collect();
    let mut pivots = Vec::new();
    let mut prev = Gauss::one();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&i| !g[i][col].is_zero()) else {
            continue;
        };
        g.swap(pr, found);
        for i in pr + 1..rows {
            for j in col + 1..cols {
                let num = g[pr][col].mul(&g[i][j]).sub(&g[i][col].mul(&g[pr][j]));
                g[i][j] = num.exact_div(&prev);
            }
            g[i][col] = Gauss::zero();
        }
        prev = g[pr][col].clone();
        pivots.push((pr, col));
        pr += 1;
    }
    Echelon {
        rows: g
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_scalar()).collect())
            .collect(),
        pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    #[test]
    fn solve_identity_system() {
        let m = Matrix::identity(2);
        let x = m.solve(&[s(3), r(5, 2)]).unwrap();
        assert_eq!(x, vec![s(3), r(5, 2)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(2), s(2)]]);
        assert!(m.solve(&[s(1), s(3)]).is_none());
        assert!(m.solve(&[s(1), s(2)]).is_some());
    }

    #[test]
    fn solve_scalar_equation() {
        let m = Matrix::from_rows(vec![vec![s(2)]]);
        assert_eq!(m.solve(&[s(1)]).unwrap(), vec![r(1, 2)]);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(Matrix::identity(3).kernel().is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let k = Matrix::zero(2, 2).kernel();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn kernel_of_rank_one_row() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(proportionality(&k[0], &[s(1), s(-1)]).is_some());
        assert!(is_zero_vec(&m.mul_vec(&k[0])));
    }

    #[test]
    fn inverse_of_diagonal() {
        let m = Matrix::from_rows(vec![vec![s(2), s(0)], vec![s(0), s(4)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv,
            Matrix::from_rows(vec![vec![r(1, 2), s(0)], vec![s(0), r(1, 4)]])
        );
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(1), s(1)]]);
        assert!(m.inverse().is_none());
        assert_eq!(Matrix::identity(3).inverse().unwrap(), Matrix::identity(3));
    }

    #[test]
    fn kron_of_identities() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(2)),
            Matrix::identity(4)
        );
        let a = Matrix::from_rows(vec![vec![s(2)]]);
        let b = Matrix::from_rows(vec![vec![s(3)]]);
        assert_eq!(a.kron(&b), Matrix::from_rows(vec![vec![s(6)]]));
    }

    #[test]
    fn kron_respects_tensor_flattening() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(4)]]);
        let n = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(1)]]);
        let x = vec![s(1), s(-2)];
        let y = vec![s(3), s(5)];
        let lhs = m.kron(&n).mul_vec(&Tensor2::outer(&x, &y).data);
        let rhs = Tensor2::outer(&m.mul_vec(&x), &n.mul_vec(&y)).data;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn psd_on_diagonals() {
        let pos = Matrix::from_rows(vec![vec![s(2), s(0)], vec![s(0), s(4)]]);
        assert_eq!(pos.psd_check(), Ok(true));
        let indef = Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(-1)]]);
        assert_eq!(indef.psd_check(), Ok(false));
    }

    #[test]
    fn psd_rejects_negative_determinant() {
        // Determinant 1*1 - 2*2 = -3 < 0.
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(1)]]);
        assert_eq!(m.psd_check(), Ok(false));
    }

    #[test]
    fn psd_zero_pivot_forces_zero_row() {
        let ok = Matrix::from_rows(vec![vec![s(0), s(0)], vec![s(0), s(1)]]);
        assert_eq!(ok.psd_check(), Ok(true));
        let bad = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        assert_eq!(bad.psd_check(), Ok(false));
    }

    #[test]
    fn psd_requires_hermitian() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(3), s(1)]]);
        assert_eq!(
            m.psd_check(),
            Err(LinalgError::NotHermitian { row: 0, col: 1 })
        );
        // Hermitian with complex off-diagonal entries is accepted.
        let h = Matrix::from_rows(vec![vec![s(2), Scalar::i()], vec![-&Scalar::i(), s(2)]]);
        assert_eq!(h.psd_check(), Ok(true));
    }

    #[test]
    fn flip_matrix_swaps_factors() {
        let x = vec![s(1), s(2)];
        let y = vec![s(3), s(4)];
        let t = Tensor2::outer(&x, &y);
        assert_eq!(flip_matrix(2).mul_vec(&t.data), Tensor2::outer(&y, &x).data);
        assert_eq!(t.flip(), Tensor2::outer(&y, &x));
    }

    #[test]
    fn solve_with_complex_entries() {
        let m = Matrix::from_rows(vec![vec![Scalar::i(), s(1)], vec![s(1), s(1)]]);
        let rhs = vec![s(1), s(0)];
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul_vec(&x), rhs);
    }

    #[test]
    fn rank_and_kernel_dimensions_are_complementary() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2), s(3)],
            vec![s(2), s(4), s(6)],
            vec![s(1), s(0), s(1)],
        ]);
        assert_eq!(m.rank() + m.kernel().len(), 3);
    }
}
