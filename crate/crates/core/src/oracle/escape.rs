//! Exact polynomial escape along nilradical directions:
//! `pr_m(Ad(exp sY) X) = sum_j s^j pr_m(ad(Y)^j X) / j!`, a finite sum
//! because `ad(Y)` is nilpotent for `Y` in the nilradical.

use num_traits::Zero;

use super::Projection;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::rational::{to_f64, Rational};
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq)]
pub struct EscapeWitness {
    pub direction: Element,
    /// Coefficient vectors of `s^0, s^1, ...`, last one nonzero.
    pub coefficients: Vec<Element>,
}

impl EscapeWitness {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval_f64(&self, s: f64) -> Vec<f64> {
        let n = self.direction.len();
        let mut out = vec![0.0; n];
        let mut pow = 1.0;
        for c in &self.coefficients {
            for (o, v) in out.iter_mut().zip(c.iter()) {
                *o += pow * to_f64(v);
            }
            pow *= s;
        }
        out
    }

    /// Renders as `X_0 + s*(...) + s^2*(...)` using basis labels.
    pub fn format(&self, alg: &LieAlgebra) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = alg.format_element(c);
            parts.push(match j {
                0 => body,
                1 => format!("s*({body})"),
                _ => format!("s^{j}*({body})"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Projected orbit polynomial of `x` along `y`, trailing zero coefficients
/// removed.
pub fn escape_polynomial(
    alg: &LieAlgebra,
    y: &[Rational],
    x: &[Rational],
    projection: Option<&Projection>,
) -> Result<Vec<Element>> {
    let n = alg.dim();
    let mut term = x.to_vec();
    let mut coeffs = Vec::new();
    let mut j = 0i64;
    while term.iter().any(|c| !c.is_zero()) {
        if j as usize > n {
            return Err(Error::InvalidParameter("ad(Y) is not nilpotent".into()));
        }
        let projected = match projection {
            Some(p) => p.matrix.mul_vec(&term),
            None => term.clone(),
        };
        coeffs.push(Element::new(projected));
        j += 1;
        let inv = Rational::new(1.into(), j.into());
        term = alg.br(y, &term).iter().map(|c| c * &inv).collect();
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// First nilradical basis direction whose projected orbit polynomial has
/// degree at least one.
pub fn escape_witness(
    alg: &LieAlgebra,
    nilradical: &Subspace,
    x: &[Rational],
    projection: Option<&Projection>,
) -> Result<Option<EscapeWitness>> {
    if x.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: x.len(),
        });
    }
    for y in nilradical.basis_vectors() {
        let coefficients = escape_polynomial(alg, &y, x, projection)?;
        if coefficients.len() >= 2 {
            return Ok(Some(EscapeWitness {
                direction: Element::new(y),
                coefficients,
            }));
        }
    }
    Ok(None)
}

/// Nilpotency class of an ideal: the number of lower-central steps to zero.
pub fn nilpotency_class(alg: &LieAlgebra, n: &Subspace) -> Result<usize> {
    Ok(alg
        .series(n, crate::lie::SeriesKind::LowerCentral)?
        .length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::linalg::rational::{int, ratio};
    use crate::structure::nilradical;

    #[test]
    fn oscillator_escape() {
        let g = catalog("oscillator", None).unwrap();
        let n = nilradical(&g).unwrap();
        let w = escape_witness(&g, &n, &Element::basis(4, 0), None)
            .unwrap()
            .unwrap();
        assert_eq!(w.direction, Element::basis(4, 1));
        assert_eq!(w.degree(), 2);
        assert_eq!(w.coefficients[0], Element::basis(4, 0));
        assert_eq!(w.coefficients[1], Element::from_i64(&[0, 0, -1, 0]));
        assert_eq!(
            w.coefficients[2],
            Element::new(vec![int(0), int(0), int(0), ratio(-1, 2)])
        );
        assert_eq!(w.format(&g), "t + s*(-y) + s^2*(-1/2*z)");
    }

    #[test]
    fn no_escape_for_central_or_translation() {
        let g = catalog("oscillator", None).unwrap();
        let n = nilradical(&g).unwrap();
        assert!(escape_witness(&g, &n, &Element::basis(4, 3), None)
            .unwrap()
            .is_none());
        let e2 = catalog("e2cover", None).unwrap();
        let n = nilradical(&e2).unwrap();
        assert!(escape_witness(&e2, &n, &Element::basis(3, 1), None)
            .unwrap()
            .is_none());
    }
}
