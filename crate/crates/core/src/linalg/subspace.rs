//! Subspaces of `Q^n` in canonical reduced-row-echelon form.

use std::fmt;

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::{format_vector, Rational};
use crate::error::{Error, Result};

/// A subspace of `Q^ambient`, stored as the nonzero rows of an RREF matrix.
/// Equality is canonical-basis equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (basis, pivots) = m.row_space_basis();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Self::from_rows(&Matrix::from_rows(vectors, ambient)))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<Rational>> = indices.iter().map(|&i| unit(ambient, i)).collect();
        Self::from_rows(&Matrix::from_rows(&vectors, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis as matrix rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// The coordinate complement spanned by the non-pivot unit vectors.
    pub fn complement(&self) -> Subspace {
        Subspace::coordinate(self.ambient, &self.non_pivots())
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the subspace, with respect to the
    /// coordinate complement: the result vanishes on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] -= &c * b;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `sum_i c_i b_i` over the canonical basis.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] += c * b;
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        Ok(Self::from_rows(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via RREF of the block matrix `[[U, U], [V, 0]]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other.ambient)?;
        let n = self.ambient;
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Matrix::zeros(other.dim(), n));
        let (r, pivots) = top.vstack(&bottom).rref();
        let rows: Vec<usize> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| i)
            .collect();
        let right: Vec<usize> = (n..2 * n).collect();
        Ok(Self::from_rows(&r.select(&rows, &right)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.basis.row_vectors().iter().all(|v| other.contains(v))
    }

    /// True when the parts are independent and together span `self`.
    pub fn is_direct_sum_of(&self, parts: &[&Subspace]) -> bool {
        let mut total = Subspace::zero(self.ambient);
        let mut dims = 0;
        for p in parts {
            match total.sum(p) {
                Ok(s) => total = s,
                Err(_) => return false,
            }
            dims += p.dim();
        }
        dims == total.dim() && &total == self
    }

    /// Image of the subspace under `m` acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Rational>> = self
            .basis
            .row_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect();
        Self::from_rows(&Matrix::from_rows(&rows, m.rows()))
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_integer(1.into());
    v
}

/// Null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (r, pivots) = m.rref();
    let mut vectors = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::from_integer(1.into());
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, f)].clone();
        }
        vectors.push(v);
    }
    Subspace::from_rows(&Matrix::from_rows(&vectors, cols))
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_rows(&m.transpose())
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .row_vectors()
            .iter()
            .map(|v| format!("({})", format_vector(v)))
            .collect();
        write!(f, "span{{{}}} in Q^{}", rows.join(", "), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, Subspace::span(2, &[v(&[1, -1])]).unwrap());
        assert!(kernel(&Matrix::identity(2)).is_zero());
        assert!(kernel(&Matrix::zeros(2, 3)).is_full());
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::coordinate(3, &[0]);
        let e2 = Subspace::coordinate(3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(3, &[0, 1]));
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        assert_eq!(e1.intersect(&e1).unwrap(), e1);

        let a = Subspace::span(3, &[v(&[1, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), a);
        assert!(a.is_subspace_of(&b));
        assert!(!b.is_subspace_of(&a));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(Subspace::zero(2).sum(&Subspace::zero(3)).is_err());
        assert!(Subspace::zero(2).intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn coords_and_reduce() {
        let s = Subspace::span(3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]).unwrap();
        let x = v(&[2, 3, -1]);
        let c = s.coords(&x).unwrap();
        assert_eq!(s.combine(&c), x);
        let y = v(&[0, 0, 1]);
        assert!(s.coords(&y).is_none());
        let r = s.reduce(&y);
        for &p in s.pivots() {
            assert!(r[p].is_zero());
        }
    }

    #[test]
    fn direct_sums() {
        let full = Subspace::full(3);
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::span(3, &[v(&[1, 1, 1])]).unwrap();
        assert!(full.is_direct_sum_of(&[&a, &b]));
        assert!(!full.is_direct_sum_of(&[&a, &a]));
        assert_eq!(a.complement(), Subspace::coordinate(3, &[2]));
    }
}
