//! Dense row-major matrices over the rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use super::rational::{format_rational, gcd, int, int_dot, integer_scaled, lcm, reduced, Rational};
use crate::error::{Error, Result};

/// Row scaled by the lcm of its denominators, then made primitive.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, v| lcm(&acc, v.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter().filter(|v| !v.is_zero()) {
        g = gcd(&g, v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must equal rows * cols");
        Self { rows, cols, data }
    }

    /// Builds a matrix from row vectors; `cols` is needed when `rows` is empty.
    pub fn from_rows(rows: &[Vec<Rational>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Integer entries, convenient for tests and catalog construction.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(&rows, cols)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        let (vi, lv) = integer_scaled(v.iter());
        (0..self.rows)
            .map(|i| {
                let (ri, lr) = integer_scaled(self.row(i).iter());
                reduced(int_dot(&ri, &vi), lr * &lv)
            })
            .collect()
    }

    /// Trace of `self * other` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix) -> Rational {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.rows, other.cols);
        let (a, la) = integer_scaled(self.data.iter());
        let (b, lb) = integer_scaled(other.transpose().data.iter());
        reduced(int_dot(&a, &b), la * lb)
    }

    pub fn pow(&self, exp: usize) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows).is_zero()
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// Submatrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Row-reduced echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Reduces in place; zero rows end up at the bottom.
    ///
    /// Elimination runs on integer rows kept primitive, with a single
    /// division by the pivot at the end.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut work: Vec<Vec<BigInt>> = (0..rows).map(|i| integer_row(self.row(i))).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows)
                .filter(|&i| !work[i][c].is_zero())
                .min_by_key(|&i| work[i][c].bits())
            else {
                continue;
            };
            work.swap(p, r);
            let (before, rest) = work.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
            let piv = pivot_row[c].clone();
            for row in before.iter_mut().chain(after.iter_mut()) {
                if row[c].is_zero() {
                    continue;
                }
                let g = gcd(&piv, &row[c]);
                let a = &piv / &g;
                let b = &row[c] / &g;
                for j in 0..cols {
                    let scaled = if row[j].is_zero() { BigInt::zero() } else { &row[j] * &a };
                    row[j] = if pivot_row[j].is_zero() { scaled } else { scaled - &b * &pivot_row[j] };
                }
                make_primitive(row);
            }
            pivots.push(c);
            r += 1;
        }
        for (i, row) in work.iter().enumerate() {
            let piv = pivots.get(i).map(|&c| row[c].clone());
            for (j, v) in row.iter().enumerate() {
                self[(i, j)] = match &piv {
                    Some(p) if !v.is_zero() => reduced(v.clone(), p.clone()),
                    _ => Rational::zero(),
                };
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Nonzero rows of the RREF, i.e. a canonical basis of the row space.
    pub fn row_space_basis(&self) -> (Matrix, Vec<usize>) {
        let (r, pivots) = self.rref();
        let kept = pivots.len();
        let data = r.data[..kept * r.cols].to_vec();
        (Matrix::from_vec(kept, r.cols, data), pivots)
    }

    /// A particular solution of `self * x = b` with free variables set to
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let column = Matrix::from_columns(&[b.to_vec()], self.rows);
        let (r, pivots) = self.hstack(&column).rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.select(&rows, &cols))
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..n {
                    let delta = &f * &m[(c, j)];
                    m[(i, j)] -= delta;
                }
            }
            det *= pivot;
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(tI - A)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            m = self * &m;
            for i in 0..n {
                m[(i, i)] += &coeffs[n - k + 1];
            }
            let tr = self.trace_of_product(&m);
            coeffs[n - k] = -tr / int(k as i64);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Monic minimal polynomial, found as the first linear dependency among
    /// the powers `I, A, A^2, ...`.
    pub fn minimal_poly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one());
        }
        let mut powers: Vec<Vec<Rational>> = Vec::new();
        let mut current = Matrix::identity(n);
        loop {
            powers.push(current.data.clone());
            let k = powers.len();
            // Solve sum_{i<k-1} c_i A^i = -A^{k-1}
            let basis = Matrix::from_columns(&powers[..k - 1], n * n);
            let target: Vec<Rational> = powers[k - 1].iter().map(|v| -v).collect();
            if let Some(c) = basis.solve(&target)? {
                let mut coeffs = c;
                coeffs.push(Rational::one());
                return Ok(Polynomial::new(coeffs));
            }
            current = &current * self;
        }
    }

    /// Evaluates `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Inertia `(positives, negatives, zeros)` of a symmetric matrix by
    /// exact symmetric Gaussian elimination.
    pub fn signature(&self) -> Result<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        let mut s = self.clone();
        let mut pos = 0;
        let mut neg = 0;
        let mut zeros = 0;
        for k in 0..n {
            if s[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !s[(j, j)].is_zero()) {
                    s.swap_rows(j, k);
                    s.swap_cols(j, k);
                } else if let Some(j) = (k + 1..n).find(|&j| !s[(k, j)].is_zero()) {
                    // new diagonal is 2 s[k][j] because s[j][j] = 0
                    s.add_congruent(k, j, &Rational::one());
                } else {
                    zeros += 1;
                    continue;
                }
            }
            let pivot = s[(k, k)].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if s[(i, k)].is_zero() {
                    continue;
                }
                let f = -(&s[(i, k)] / &pivot);
                s.add_congruent(i, k, &f);
            }
        }
        Ok((pos, neg, zeros))
    }

    /// Row `target` += c * row `source`, then the same for columns.
    fn add_congruent(&mut self, target: usize, source: usize, c: &Rational) {
        let n = self.cols;
        for j in 0..n {
            if !self[(source, j)].is_zero() {
                let v = c * &self[(source, j)];
                self[(target, j)] += v;
            }
        }
        for i in 0..self.rows {
            if !self[(i, source)].is_zero() {
                let v = c * &self[(i, source)];
                self[(i, target)] += v;
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Congruence `P^T S P`.
    pub fn congruence(&self, p: &Matrix) -> Matrix {
        &(&p.transpose() * self) * p
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let rows: Vec<_> = (0..self.rows).map(|i| integer_scaled(self.row(i).iter())).collect();
        let t = rhs.transpose();
        let cols: Vec<_> = (0..rhs.cols).map(|j| integer_scaled(t.row(j).iter())).collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for (i, (ri, lr)) in rows.iter().enumerate() {
            if ri.iter().all(Zero::is_zero) {
                continue;
            }
            for (j, (cj, lc)) in cols.iter().enumerate() {
                let dot = int_dot(ri, cj);
                if !dot.is_zero() {
                    out[(i, j)] = reduced(dot, lr * lc);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
