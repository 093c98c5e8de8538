//! Numerical cross-validation of boundedness: random walks on adjoint
//! orbits and exact polynomial escape witnesses along the nilradical.

pub mod escape;
pub mod walk;

use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::rational::to_f64;
use crate::linalg::{Matrix, Subspace};
use crate::structure::Structure;

pub use escape::{escape_witness, EscapeWitness};
pub use walk::{merge, orbit_sup_walk, OrbitWalkResult, WalkConfig};

/// Floating-point copy of an algebra's adjoint matrices.
#[derive(Clone, Debug)]
pub struct FloatAlgebra {
    pub name: String,
    pub dim: usize,
    /// `ad(e_i)` as row-major `dim x dim` arrays.
    pub ad_basis: Vec<Vec<f64>>,
}

pub fn matrix_to_f64(m: &Matrix) -> Vec<f64> {
    m.entries().iter().map(to_f64).collect()
}

impl FloatAlgebra {
    pub fn new(alg: &LieAlgebra) -> Self {
        FloatAlgebra {
            name: alg.name().to_string(),
            dim: alg.dim(),
            ad_basis: (0..alg.dim())
                .map(|i| matrix_to_f64(alg.ad_basis(i)))
                .collect(),
        }
    }

    pub fn ad(&self, y: &[f64]) -> DMatrix<f64> {
        let n = self.dim;
        let mut m = DMatrix::zeros(n, n);
        for (c, a) in y.iter().zip(&self.ad_basis) {
            if *c == 0.0 {
                continue;
            }
            for r in 0..n {
                for s in 0..n {
                    m[(r, s)] += c * a[r * n + s];
                }
            }
        }
        m
    }

    /// `exp(t ad(y))`.
    pub fn ad_exp(&self, y: &[f64], t: f64) -> Result<DMatrix<f64>> {
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: y.len(),
            });
        }
        let a = self.ad(y) * t;
        if a.iter().any(|x| !x.is_finite()) {
            return Err(Error::Overflow(format!("t ad(y) is not finite for t = {t}")));
        }
        let e = a.exp();
        if e.iter().any(|x| !x.is_finite()) {
            return Err(Error::Overflow(format!("exp(t ad(y)) overflows for t = {t}")));
        }
        Ok(e)
    }
}

/// Projection `pr_m` onto a reductive complement `m` along the isotropy
/// subalgebra `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    pub isotropy: Subspace,
    pub complement: Subspace,
    pub matrix: Matrix,
}

impl Projection {
    pub fn new(alg: &LieAlgebra, st: &Structure, h: &Subspace) -> Result<Projection> {
        let m = st.reductive_complement(alg, h)?;
        let n = alg.dim();
        let q = h.basis().vstack(m.basis()).transpose();
        let inv = q
            .inverse()
            .ok_or_else(|| Error::Verification("h + m is not direct".into()))?;
        let mut keep = Matrix::zeros(n, n);
        for i in h.dim()..n {
            keep[(i, i)] = crate::linalg::rational::one();
        }
        let matrix = &(&q * &keep) * &inv;
        Ok(Projection {
            isotropy: h.clone(),
            complement: m,
            matrix,
        })
    }

    /// The identity projection (trivial isotropy).
    pub fn identity(dim: usize) -> Projection {
        Projection {
            isotropy: Subspace::zero(dim),
            complement: Subspace::full(dim),
            matrix: Matrix::identity(dim),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    BoundedLikely,
    UnboundedEmpirical,
    UnboundedWitness,
}

impl Verdict {
    pub fn is_unbounded(self) -> bool {
        self != Verdict::BoundedLikely
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::BoundedLikely => "bounded-likely",
            Verdict::UnboundedEmpirical => "unbounded-empirical",
            Verdict::UnboundedWitness => "unbounded-witness",
        })
    }
}

/// Outcome of [`verdict`]: the exact witness if one exists, otherwise the
/// walk that decided.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    pub verdict: Verdict,
    pub witness: Option<EscapeWitness>,
    pub walk: Option<OrbitWalkResult>,
}

/// Exact escape witness first; the random walk decides otherwise.
pub fn verdict(
    alg: &LieAlgebra,
    nilradical: &Subspace,
    x: &crate::lie::Element,
    cfg: &WalkConfig,
) -> Result<OracleOutcome> {
    if let Some(w) = escape_witness(alg, nilradical, x, cfg.projection.as_ref())? {
        return Ok(OracleOutcome {
            verdict: Verdict::UnboundedWitness,
            witness: Some(w),
            walk: None,
        });
    }
    let walk = orbit_sup_walk(&FloatAlgebra::new(alg), x, cfg)?;
    Ok(OracleOutcome {
        verdict: walk.verdict,
        witness: None,
        walk: Some(walk),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn ad_exp_examples() {
        let e2 = FloatAlgebra::new(&catalog("e2cover", None).unwrap());
        let id = e2.ad_exp(&[0.0; 3], 1.0).unwrap();
        assert!((id - DMatrix::identity(3, 3)).amax() < 1e-15);

        let rot = e2.ad_exp(&[1.0, 0.0, 0.0], std::f64::consts::FRAC_PI_2).unwrap();
        // p1 -> p2, p2 -> -p1
        let expected = DMatrix::from_row_slice(3, 3, &[1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]);
        assert!((rot - expected).amax() < 1e-9);

        let h3 = FloatAlgebra::new(&catalog("heisenberg3", None).unwrap());
        let t = 3.5;
        let e = h3.ad_exp(&[1.0, 0.0, 0.0], t).unwrap();
        let expected = DMatrix::identity(3, 3) + h3.ad(&[1.0, 0.0, 0.0]) * t;
        assert!((e - expected).amax() < 1e-12);
    }

    #[test]
    fn ad_exp_reports_overflow() {
        let aff = FloatAlgebra::new(&catalog("aff1", None).unwrap());
        assert!(matches!(aff.ad_exp(&[1.0, 0.0], 1e6), Err(Error::Overflow(_))));
    }

    #[test]
    fn projection_along_isotropy() {
        let g = catalog("e2cover", None).unwrap();
        let st = Structure::compute(&g).unwrap();
        let p = Projection::new(&g, &st, &Subspace::coordinate(3, &[0])).unwrap();
        assert_eq!(p.complement, Subspace::coordinate(3, &[1, 2]));
        assert_eq!(&p.matrix * &p.matrix, p.matrix);
        assert_eq!(p.matrix.rank(), 2);
    }
}
