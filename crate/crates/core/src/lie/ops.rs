//! Subspace-level operations: bracket spaces, centralizers, series,
//! ideals and quotients.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::algebra::{Element, LieAlgebra};
use crate::error::{ensure, Error, Result};
use crate::linalg::rational::Rational;
use crate::linalg::subspace::kernel;
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending chain of subspaces, ending at the first repeated term.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl SeriesChain {
    pub fn last(&self) -> &Subspace {
        self.terms.last().expect("series has a first term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }

    /// Number of steps until the zero term, if reached.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

impl LieAlgebra {
    fn check_space(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `span{[a, b] : a in u, b in v}`.
    pub fn bracket_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_space(u)?;
        self.check_space(v)?;
        if u.is_zero() || v.is_zero() {
            return Ok(Subspace::zero(self.dim()));
        }
        if u.is_full() && v.is_full() {
            return Ok(self.derived_algebra());
        }
        let (small, large) = if u.dim() <= v.dim() { (u, v) } else { (v, u) };
        let lt = large.basis().transpose();
        let mut rows = Vec::new();
        for a in small.basis_vectors() {
            let ad = if small.is_full() {
                None
            } else {
                Some(self.ad_vec(&a))
            };
            let ad = match &ad {
                Some(m) => m,
                None => {
                    let i = a.iter().position(|c| !c.is_zero()).expect("unit vector");
                    self.ad_basis(i)
                }
            };
            let cols = ad * &lt;
            rows.extend(cols.transpose().row_vectors());
        }
        Ok(Subspace::from_rows(&Matrix::from_rows(&rows, self.dim())))
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        Ok(self.bracket_space(u, u)?.is_subspace_of(u))
    }

    /// True iff `[g, u] ⊆ u`.
    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        Ok(self
            .bracket_space(&Subspace::full(self.dim()), u)?
            .is_subspace_of(u))
    }

    /// `{x in a : [x, y] = 0 for all y in b}`.
    pub fn centralizer(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_space(a)?;
        self.check_space(b)?;
        let n = self.dim();
        let (ab, bb) = (a.basis_vectors(), b.basis_vectors());
        if ab.is_empty() || bb.is_empty() {
            return Ok(a.clone());
        }
        let mut m = Matrix::zeros(n * bb.len(), ab.len());
        for (i, x) in ab.iter().enumerate() {
            for (j, y) in bb.iter().enumerate() {
                for (k, c) in self.br(x, y).into_iter().enumerate() {
                    m[(j * n + k, i)] = c;
                }
            }
        }
        let coeffs = kernel(&m);
        let rows: Vec<Vec<Rational>> = coeffs
            .basis_vectors()
            .iter()
            .map(|c| a.combine(c))
            .collect();
        Ok(Subspace::from_rows(&Matrix::from_rows(&rows, n)))
    }

    /// Center `c(a) = c_a(a)`.
    pub fn center_of(&self, a: &Subspace) -> Result<Subspace> {
        self.centralizer(a, a)
    }

    /// Derived or lower-central series starting at a subalgebra.
    pub fn series(&self, start: &Subspace, kind: SeriesKind) -> Result<SeriesChain> {
        if !self.is_subalgebra(start)? {
            return Err(Error::NotSubalgebra);
        }
        let mut terms = vec![start.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            let next = match kind {
                SeriesKind::Derived => self.bracket_space(last, last)?,
                SeriesKind::LowerCentral => self.bracket_space(start, last)?,
            };
            if &next == last {
                break;
            }
            terms.push(next);
        }
        ensure(terms.len() <= self.dim() + 2, || {
            "series failed to stabilize".into()
        })?;
        Ok(SeriesChain { kind, terms })
    }

    pub fn is_solvable(&self, u: &Subspace) -> Result<bool> {
        Ok(self.series(u, SeriesKind::Derived)?.reaches_zero())
    }

    /// Nilpotency of an ideal via its lower central series.
    pub fn is_nilpotent_ideal(&self, u: &Subspace) -> Result<bool> {
        if !self.is_ideal(u)? {
            return Err(Error::NotIdeal);
        }
        Ok(self.series(u, SeriesKind::LowerCentral)?.reaches_zero())
    }

    /// Smallest ideal containing the seeds.
    pub fn ideal_generated(&self, seeds: &[Element]) -> Result<Subspace> {
        let n = self.dim();
        for s in seeds {
            if s.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.len(),
                });
            }
        }
        let rows: Vec<Vec<Rational>> = seeds.iter().map(|s| s.coords().to_vec()).collect();
        let mut current = Subspace::from_rows(&Matrix::from_rows(&rows, n));
        loop {
            let next = current.sum(&self.bracket_space(&Subspace::full(n), &current)?)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Quotient by an ideal on the non-pivot coordinates of its RREF
    /// basis, with the projection matrix (rows = quotient coordinates).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let n = self.dim();
        let keep = ideal.non_pivots();
        let q = keep.len();
        let mut proj = Matrix::zeros(q, n);
        for j in 0..n {
            let r = ideal.reduce(&crate::linalg::subspace::unit(n, j));
            for (a, &c) in keep.iter().enumerate() {
                proj[(a, j)] = r[c].clone();
            }
        }
        let mut brackets = BTreeMap::new();
        for a in 0..q {
            for b in a + 1..q {
                let v = proj.mul_vec(&self.basis_bracket(keep[a], keep[b]));
                brackets.insert((a, b), v);
            }
        }
        let labels = keep.iter().map(|&c| self.labels()[c].clone()).collect();
        let quotient = LieAlgebra::new(format!("{}/ideal", self.name()), labels, brackets)?;
        Ok((quotient, proj))
    }

    /// The subalgebra `u` as an algebra in its canonical basis.
    pub fn subalgebra(&self, u: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let basis = u.basis_vectors();
        let d = basis.len();
        let mut brackets = BTreeMap::new();
        for a in 0..d {
            for b in a + 1..d {
                let c = self.br(&basis[a], &basis[b]);
                brackets.insert((a, b), u.coords(&c).expect("closed under bracket"));
            }
        }
        let labels = (0..d).map(|i| format!("u{i}")).collect();
        LieAlgebra::new(format!("{}/sub", self.name()), labels, brackets)
    }

    /// `ad(x)` restricted to an `ad(x)`-invariant subspace, in its canonical
    /// basis.
    pub fn restricted_ad(&self, x: &[Rational], u: &Subspace) -> Result<Matrix> {
        let basis = u.basis_vectors();
        let d = basis.len();
        let mut m = Matrix::zeros(d, d);
        for (j, b) in basis.iter().enumerate() {
            let image = self.br(x, b);
            let c = u
                .coords(&image)
                .ok_or_else(|| Error::Verification("subspace is not ad-invariant".into()))?;
            for (i, v) in c.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> LieAlgebra {
        LieAlgebra::from_i64("h3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
    }

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_i64("aff1", &["a", "b"], &[(0, 1, &[(1, 1)])])
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_i64(
            "sl2",
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
    }

    #[test]
    fn centers_and_centralizers() {
        let g = h3();
        let full = Subspace::full(3);
        assert_eq!(g.center_of(&full).unwrap(), Subspace::coordinate(3, &[2]));
        assert_eq!(g.centralizer(&full, &Subspace::zero(3)).unwrap(), full);
    }

    #[test]
    fn series_examples() {
        let g = h3();
        let lc = g.series(&Subspace::full(3), SeriesKind::LowerCentral).unwrap();
        assert_eq!(
            lc.terms,
            vec![Subspace::full(3), Subspace::coordinate(3, &[2]), Subspace::zero(3)]
        );
        assert!(g.is_nilpotent_ideal(&Subspace::full(3)).unwrap());

        let a = aff1();
        let d = a.series(&Subspace::full(2), SeriesKind::Derived).unwrap();
        assert_eq!(
            d.terms,
            vec![Subspace::full(2), Subspace::coordinate(2, &[1]), Subspace::zero(2)]
        );
        assert!(a.is_solvable(&Subspace::full(2)).unwrap());
        let lc = a.series(&Subspace::full(2), SeriesKind::LowerCentral).unwrap();
        assert_eq!(lc.last(), &Subspace::coordinate(2, &[1]));
        assert!(!a.is_nilpotent_ideal(&Subspace::full(2)).unwrap());

        assert!(!sl2().is_solvable(&Subspace::full(3)).unwrap());
        assert_eq!(
            g.series(&Subspace::coordinate(3, &[0, 1]), SeriesKind::Derived),
            Err(Error::NotSubalgebra)
        );
    }

    #[test]
    fn ideals() {
        assert!(h3().is_ideal(&Subspace::coordinate(3, &[2])).unwrap());
        assert!(!sl2().is_ideal(&Subspace::coordinate(3, &[1])).unwrap());
        assert!(sl2().is_ideal(&Subspace::full(3)).unwrap());
        assert_eq!(
            sl2().ideal_generated(&[Element::basis(3, 1)]).unwrap(),
            Subspace::full(3)
        );
        assert_eq!(
            h3().ideal_generated(&[Element::basis(3, 2)]).unwrap(),
            Subspace::coordinate(3, &[2])
        );
        assert!(h3().ideal_generated(&[Element::zero(3)]).unwrap().is_zero());
    }

    #[test]
    fn quotients() {
        let g = h3();
        let (q, p) = g.quotient(&Subspace::coordinate(3, &[2])).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.brackets().is_empty());
        assert_eq!(p.rows(), 2);
        let (same, p) = g.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(same.brackets(), g.brackets());
        assert_eq!(p, Matrix::identity(3));
        assert_eq!(
            sl2().quotient(&Subspace::coordinate(3, &[1])).unwrap_err(),
            Error::NotIdeal
        );
    }
}
