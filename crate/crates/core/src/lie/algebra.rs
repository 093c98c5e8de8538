//! Lie algebras given by rational structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::{format_rational, int, int_dot, integer_scaled, reduced, Rational};
use crate::linalg::subspace::unit;
use crate::linalg::{Matrix, Subspace};

/// Coordinates of a vector in the basis of some algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element(Vec<Rational>);

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element(unit(dim, i))
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Element(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element(self.0.iter().map(|x| x * c).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::linalg::rational::to_f64).collect()
    }
}

impl Deref for Element {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for Element {
    fn from(v: Vec<Rational>) -> Self {
        Element(v)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Element> for &Rational {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A Jacobi identity failure on a basis triple `i < j < k`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Element,
}

/// A finite-dimensional Lie algebra over the rationals.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored; antisymmetry holds by
/// construction.
#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    /// Nonzero structure constants `(i, j, k, c)`, scaled by `term_denom` to integers.
    int_terms: Vec<(usize, usize, usize, BigInt)>,
    term_denom: BigInt,
    ad_basis: Vec<Matrix>,
    killing: OnceLock<Matrix>,
    derived: OnceLock<Subspace>,
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[e_i, e_j]` keyed by `(i, j)` with
    /// `i < j`. Jacobi is not checked here; see [`LieAlgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut clean = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j {
                return Err(Error::Format(format!(
                    "bracket key ({i},{j}) must satisfy i < j"
                )));
            }
            if j >= dim {
                return Err(Error::Format(format!(
                    "bracket key ({i},{j}) out of range for dimension {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if v.iter().any(|c| !c.is_zero()) {
                clean.insert((i, j), v);
            }
        }
        let mut terms = Vec::new();
        for (&(i, j), v) in &clean {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((i, j, k, c.clone()));
                }
            }
        }
        let mut ad_basis = vec![Matrix::zeros(dim, dim); dim];
        for (i, j, k, c) in &terms {
            ad_basis[*i][(*k, *j)] += c;
            ad_basis[*j][(*k, *i)] -= c;
        }
        let (scaled, term_denom) = integer_scaled(terms.iter().map(|t| &t.3));
        let int_terms = terms
            .iter()
            .zip(scaled)
            .map(|(&(i, j, k, _), c)| (i, j, k, c))
            .collect();
        Ok(LieAlgebra {
            name: name.into(),
            labels,
            brackets: clean,
            int_terms,
            term_denom,
            ad_basis,
            killing: OnceLock::new(),
            derived: OnceLock::new(),
        })
    }

    /// Convenience constructor from integer-free rational triples
    /// `(i, j, [(k, c), ...])`.
    pub fn from_table(
        name: &str,
        labels: &[&str],
        table: &[(usize, usize, &[(usize, Rational)])],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut brackets = BTreeMap::new();
        for (i, j, entries) in table {
            let mut v = vec![Rational::zero(); dim];
            for (k, c) in entries.iter() {
                if *k >= dim {
                    return Err(Error::Format(format!("index {k} out of range")));
                }
                v[*k] += c;
            }
            if brackets.insert((*i, *j), v).is_some() {
                return Err(Error::Format(format!("duplicate bracket key ({i},{j})")));
            }
        }
        Self::new(name, labels.iter().map(|s| s.to_string()).collect(), brackets)
    }

    /// Integer structure constants: `(i, j, [(k, c), ...])`.
    pub fn from_i64(name: &str, labels: &[&str], table: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let converted: Vec<(usize, usize, Vec<(usize, Rational)>)> = table
            .iter()
            .map(|(i, j, e)| (*i, *j, e.iter().map(|(k, c)| (*k, int(*c))).collect()))
            .collect();
        let borrowed: Vec<(usize, usize, &[(usize, Rational)])> = converted
            .iter()
            .map(|(i, j, e)| (*i, *j, e.as_slice()))
            .collect();
        Self::from_table(name, labels, &borrowed).expect("valid built-in table")
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("a{i}")).collect();
        Self::new(format!("abelian({n})"), labels, BTreeMap::new()).expect("abelian")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The stored brackets `[e_i, e_j]`, `i < j`, nonzero only.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    /// `[e_i, e_j]` for any `i`, `j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        self.ad_basis[i].column(j)
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    fn check(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: len,
            });
        }
        Ok(())
    }

    /// Bracket on raw coordinate slices of matching length.
    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let (xi, lx) = integer_scaled(x.iter());
        let (yi, ly) = integer_scaled(y.iter());
        let mut acc = vec![BigInt::zero(); self.dim()];
        for (i, j, k, c) in &self.int_terms {
            let (a, b, p, q) = (&xi[*i], &yi[*j], &xi[*j], &yi[*i]);
            let first = !(a.is_zero() || b.is_zero());
            let second = !(p.is_zero() || q.is_zero());
            let v = match (first, second) {
                (false, false) => continue,
                (true, false) => a * b,
                (false, true) => -(p * q),
                (true, true) => a * b - p * q,
            };
            acc[*k] += c * v;
        }
        let denom = &self.term_denom * lx * ly;
        acc.into_iter()
            .map(|v| {
                if v.is_zero() {
                    Rational::zero()
                } else {
                    reduced(v, denom.clone())
                }
            })
            .collect()
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x.len())?;
        self.check(y.len())?;
        Ok(Element(self.br(x, y)))
    }

    /// `ad(x)` on raw coordinates; column `j` is `[x, e_j]`.
    pub fn ad_vec(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let (xi, lx) = integer_scaled(x.iter());
        let mut acc = vec![BigInt::zero(); n * n];
        for (i, j, k, c) in &self.int_terms {
            // [e_i, e_j] = c e_k feeds column j through x_i and column i through x_j
            if !xi[*i].is_zero() {
                acc[k * n + j] += c * &xi[*i];
            }
            if !xi[*j].is_zero() {
                acc[k * n + i] -= c * &xi[*j];
            }
        }
        let denom = &self.term_denom * lx;
        let data = acc
            .into_iter()
            .map(|v| {
                if v.is_zero() {
                    Rational::zero()
                } else {
                    reduced(v, denom.clone())
                }
            })
            .collect();
        Matrix::from_vec(n, n, data)
    }

    pub fn ad(&self, x: &Element) -> Result<Matrix> {
        self.check(x.len())?;
        Ok(self.ad_vec(x))
    }

    /// `B[i][j] = trace(ad e_i ad e_j)`.
    pub fn killing(&self) -> Matrix {
        self.killing
            .get_or_init(|| {
                let n = self.dim();
                let scaled: Vec<(Vec<BigInt>, BigInt)> = self
                    .ad_basis
                    .iter()
                    .map(|a| integer_scaled(a.entries().iter()))
                    .collect();
                let transposed: Vec<(Vec<BigInt>, BigInt)> = self
                    .ad_basis
                    .iter()
                    .map(|a| integer_scaled(a.transpose().entries().iter()))
                    .collect();
                let mut b = Matrix::zeros(n, n);
                for i in 0..n {
                    for j in i..n {
                        let v = reduced(
                            int_dot(&scaled[i].0, &transposed[j].0),
                            &scaled[i].1 * &transposed[j].1,
                        );
                        b[(i, j)] = v.clone();
                        b[(j, i)] = v;
                    }
                }
                b
            })
            .clone()
    }

    /// `[g, g]`, computed once.
    pub fn derived_algebra(&self) -> Subspace {
        self.derived
            .get_or_init(|| {
                let n = self.dim();
                let rows: Vec<Vec<Rational>> = self.brackets.values().cloned().collect();
                Subspace::from_rows(&Matrix::from_rows(&rows, n))
            })
            .clone()
    }

    /// Jacobi violations over all basis triples `i < j < k`.
    pub fn validate(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    let a = self.ad_basis[i].mul_vec(&self.basis_bracket(j, k));
                    let b = self.ad_basis[j].mul_vec(&self.basis_bracket(k, i));
                    let c = self.ad_basis[k].mul_vec(&eij);
                    let residual: Vec<Rational> = (0..n)
                        .map(|r| &a[r] + &b[r] + &c[r])
                        .collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: Element(residual),
                        });
                    }
                }
            }
        }
        out
    }

    /// Fails with the first Jacobi violation, if any.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::Jacobi {
                i: v.triple.0,
                j: v.triple.1,
                k: v.triple.2,
                residual: self.format_element(&v.residual),
            }),
        }
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &[Rational]) -> String {
        let mut s = String::new();
        for (c, label) in x.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() {
                s.push_str(&format_rational(&a));
                s.push('*');
            }
            s.push_str(label);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// The same algebra in the basis given by the columns of the invertible
    /// matrix `p` (new basis vector `a` is `p e_a` in old coordinates).
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if !p.is_square() || p.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("basis change is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| p.column(j)).collect();
        let mut brackets = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = inv.mul_vec(&self.br(&cols[a], &cols[b]));
                brackets.insert((a, b), v);
            }
        }
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        LieAlgebra::new(self.name.clone(), labels, brackets)
    }

    /// Direct sum with basis `self` followed by `other`.
    pub fn direct_sum(&self, other: &LieAlgebra, name: &str) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut brackets = BTreeMap::new();
        for (&(i, j), v) in &self.brackets {
            let mut w = v.clone();
            w.resize(n + m, Rational::zero());
            brackets.insert((i, j), w);
        }
        for (&(i, j), v) in &other.brackets {
            let mut w = vec![Rational::zero(); n];
            w.extend(v.iter().cloned());
            brackets.insert((i + n, j + n), w);
        }
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        LieAlgebra::new(name, labels, brackets).expect("direct sum")
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.brackets == other.brackets
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim())?;
        for (&(i, j), v) in &self.brackets {
            write!(
                f,
                "\n  [{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                self.format_element(v)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> LieAlgebra {
        LieAlgebra::from_i64("h3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_i64(
            "sl2",
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
    }

    #[test]
    fn brackets() {
        let g = h3();
        let x = Element::basis(3, 0);
        let y = Element::basis(3, 1);
        assert_eq!(g.bracket(&x, &y).unwrap(), Element::basis(3, 2));
        assert_eq!(g.bracket(&y, &x).unwrap(), Element::from_i64(&[0, 0, -1]));
        assert!(g.bracket(&x, &x).unwrap().is_zero());
        let s = sl2();
        let e = Element::basis(3, 1);
        let f = Element::basis(3, 2);
        assert_eq!(s.bracket(&e, &f).unwrap(), Element::basis(3, 0));
        assert!(g.bracket(&x, &Element::zero(2)).is_err());
    }

    #[test]
    fn ad_matrices() {
        let g = h3();
        let ad = g.ad(&Element::basis(3, 0)).unwrap();
        let mut expected = Matrix::zeros(3, 3);
        expected[(2, 1)] = int(1);
        assert_eq!(ad, expected);
        assert!(g.ad(&Element::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn killing_forms() {
        assert!(h3().killing().is_zero());
        let b = sl2().killing();
        assert_eq!(b, Matrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
    }

    #[test]
    fn jacobi_validation() {
        assert!(h3().validate().is_empty());
        assert!(LieAlgebra::abelian(4).validate().is_empty());
        let bad = LieAlgebra::from_i64(
            "bad",
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(0, 1)])],
        );
        let v = bad.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (0, 1, 2));
        assert_eq!(v[0].residual, Element::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn rejects_lower_triangular_keys() {
        let mut b = BTreeMap::new();
        b.insert((1, 0), vec![int(0), int(0)]);
        assert!(LieAlgebra::new("x", vec!["a".into(), "b".into()], b).is_err());
    }

    #[test]
    fn formatting() {
        let g = h3();
        let x = Element::from_i64(&[1, -2, 0]);
        assert_eq!(g.format_element(&x), "x - 2*y");
        assert_eq!(g.format_element(&Element::zero(3)), "0");
    }
}
