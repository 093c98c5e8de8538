//! Built-in algebras with recorded ground truth.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::rational::int;
use crate::linalg::{Matrix, Subspace};

/// Expected structure of a catalog algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GroundTruth {
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub levi_dim: usize,
    /// Basis indices spanning the bounded subalgebra.
    pub bounded: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    /// Name of the integer parameter, if the entry takes one.
    pub parameter: Option<&'static str>,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "abelian",
        summary: "abelian algebra of dimension n (default 3)",
        parameter: Some("n"),
    },
    CatalogEntry {
        name: "aff1",
        summary: "affine line algebra [a,b]=b",
        parameter: None,
    },
    CatalogEntry {
        name: "heisenberg3",
        summary: "Heisenberg algebra [x,y]=z",
        parameter: None,
    },
    CatalogEntry {
        name: "sl2R",
        summary: "sl(2,R) in the basis h,e,f",
        parameter: None,
    },
    CatalogEntry {
        name: "so3",
        summary: "so(3) with [e1,e2]=e3 cyclically",
        parameter: None,
    },
    CatalogEntry {
        name: "e2cover",
        summary: "Euclidean plane motions [r,p1]=p2, [r,p2]=-p1",
        parameter: None,
    },
    CatalogEntry {
        name: "oscillator",
        summary: "oscillator algebra [t,x]=y, [t,y]=-x, [x,y]=z",
        parameter: None,
    },
    CatalogEntry {
        name: "sl2_semidirect_R2",
        summary: "sl(2,R) acting on R^2 by the standard representation",
        parameter: None,
    },
    CatalogEntry {
        name: "so3_sl2_h3",
        summary: "direct sum so(3) + sl(2,R) + Heisenberg",
        parameter: None,
    },
    CatalogEntry {
        name: "so3_semidirect_R3",
        summary: "Euclidean motions of R^3",
        parameter: None,
    },
    CatalogEntry {
        name: "spiral",
        summary: "[u,p1]=p2, [u,p2]=-2p1, [u,q]=q (irrational imaginary weight)",
        parameter: None,
    },
    CatalogEntry {
        name: "gl2",
        summary: "gl(2,R) = sl(2,R) + center",
        parameter: None,
    },
    CatalogEntry {
        name: "sl2_semidirect_h3",
        summary: "sl(2,R) acting on the Heisenberg algebra",
        parameter: None,
    },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

const SL2: &[(usize, usize, &[(usize, i64)])] =
    &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])];
const SO3: &[(usize, usize, &[(usize, i64)])] =
    &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)]), (1, 2, &[(0, 1)])];

fn sl2() -> LieAlgebra {
    LieAlgebra::from_i64("sl2R", &["h", "e", "f"], SL2)
}

fn so3() -> LieAlgebra {
    LieAlgebra::from_i64("so3", &["e1", "e2", "e3"], SO3)
}

fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_i64("heisenberg3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

/// sl(2) on basis h,e,f followed by the standard representation on x,y.
fn sl2_on_plane(extra: &[(usize, usize, &[(usize, i64)])], labels: &[&str], name: &str) -> LieAlgebra {
    let mut table: Vec<(usize, usize, &[(usize, i64)])> = SL2.to_vec();
    table.extend_from_slice(&[
        (0, 3, &[(3, 1)]),
        (0, 4, &[(4, -1)]),
        (1, 4, &[(3, 1)]),
        (2, 3, &[(4, 1)]),
    ]);
    table.extend_from_slice(extra);
    LieAlgebra::from_i64(name, labels, &table)
}

/// Builds a catalog algebra. Only `abelian` takes a parameter.
pub fn catalog(name: &str, param: Option<i64>) -> Result<LieAlgebra> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    if entry.parameter.is_none() && param.is_some() {
        return Err(Error::InvalidParameter(format!("'{name}' takes no parameter")));
    }
    let alg = match name {
        "abelian" => {
            let n = param.unwrap_or(3);
            if !(0..=64).contains(&n) {
                return Err(Error::InvalidParameter(format!(
                    "abelian dimension must be in 0..=64, got {n}"
                )));
            }
            LieAlgebra::abelian(n as usize)
        }
        "aff1" => LieAlgebra::from_i64("aff1", &["a", "b"], &[(0, 1, &[(1, 1)])]),
        "heisenberg3" => heisenberg(),
        "sl2R" => sl2(),
        "so3" => so3(),
        "e2cover" => LieAlgebra::from_i64(
            "e2cover",
            &["r", "p1", "p2"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)])],
        ),
        "oscillator" => LieAlgebra::from_i64(
            "oscillator",
            &["t", "x", "y", "z"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -1)]), (1, 2, &[(3, 1)])],
        ),
        "sl2_semidirect_R2" => sl2_on_plane(&[], &["h", "e", "f", "x", "y"], name),
        "so3_sl2_h3" => so3()
            .direct_sum(&sl2(), "so3_sl2")
            .direct_sum(&heisenberg(), name),
        "so3_semidirect_R3" => {
            let mut table: Vec<(usize, usize, &[(usize, i64)])> = SO3.to_vec();
            table.extend_from_slice(&[
                (0, 4, &[(5, 1)]),
                (0, 5, &[(4, -1)]),
                (1, 3, &[(5, -1)]),
                (1, 5, &[(3, 1)]),
                (2, 3, &[(4, 1)]),
                (2, 4, &[(3, -1)]),
            ]);
            LieAlgebra::from_i64(name, &["e1", "e2", "e3", "p1", "p2", "p3"], &table)
        }
        "spiral" => LieAlgebra::from_i64(
            name,
            &["u", "p1", "p2", "q"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(1, -2)]), (0, 3, &[(3, 1)])],
        ),
        "gl2" => sl2().direct_sum(&LieAlgebra::from_i64("c", &["c"], &[]), name),
        "sl2_semidirect_h3" => {
            sl2_on_plane(&[(3, 4, &[(5, 1)])], &["h", "e", "f", "x", "y", "z"], name)
        }
        _ => unreachable!("entry list and constructors agree"),
    };
    Ok(alg.with_name(name))
}

/// Recorded structure for a catalog entry.
pub fn ground_truth(name: &str, param: Option<i64>) -> Result<GroundTruth> {
    let t = |r, n, s, b: &[usize]| GroundTruth {
        radical_dim: r,
        nilradical_dim: n,
        levi_dim: s,
        bounded: b.to_vec(),
    };
    Ok(match name {
        "abelian" => {
            let n = catalog(name, param)?.dim();
            t(n, n, 0, &(0..n).collect::<Vec<_>>())
        }
        "aff1" => t(2, 1, 0, &[]),
        "heisenberg3" => t(3, 3, 0, &[2]),
        "sl2R" => t(0, 0, 3, &[]),
        "so3" => t(0, 0, 3, &[0, 1, 2]),
        "e2cover" => t(3, 2, 0, &[1, 2]),
        "oscillator" => t(4, 3, 0, &[3]),
        "sl2_semidirect_R2" => t(2, 2, 3, &[]),
        "so3_sl2_h3" => t(3, 3, 6, &[0, 1, 2, 8]),
        "so3_semidirect_R3" => t(3, 3, 3, &[3, 4, 5]),
        "spiral" => t(4, 3, 0, &[1, 2]),
        "gl2" => t(1, 1, 3, &[3]),
        "sl2_semidirect_h3" => t(3, 3, 3, &[5]),
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    })
}

impl GroundTruth {
    pub fn bounded_subspace(&self, dim: usize) -> Subspace {
        Subspace::coordinate(dim, &self.bounded)
    }
}

/// Every entry with its default parameter.
pub fn all() -> Vec<LieAlgebra> {
    ENTRIES
        .iter()
        .map(|e| catalog(e.name, None).expect("catalog entry"))
        .collect()
}

/// A seeded invertible matrix with entries in `-2..=2`, resampled until its
/// determinant is nonzero.
pub fn random_change_matrix(dim: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let data = (0..dim * dim).map(|_| int(rng.gen_range(-2..=2))).collect();
        let p = Matrix::from_vec(dim, dim, data);
        if p.inverse().is_some() {
            return p;
        }
    }
}

/// The algebra rewritten in the basis given by the columns of a seeded
/// random matrix `P`; a vector `v` in new coordinates is `P v` in old ones.
pub fn random_basis_change(alg: &LieAlgebra, seed: u64) -> (LieAlgebra, Matrix) {
    let p = random_change_matrix(alg.dim(), seed);
    let changed = alg.change_basis(&p).expect("invertible change of basis");
    (changed, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_satisfies_jacobi() {
        for alg in all() {
            assert!(alg.validate().is_empty(), "{}", alg.name());
        }
    }

    #[test]
    fn unknown_and_bad_parameters() {
        assert!(matches!(catalog("nope", None), Err(Error::UnknownCatalog(_))));
        assert!(matches!(catalog("so3", Some(2)), Err(Error::InvalidParameter(_))));
        assert!(matches!(catalog("abelian", Some(-1)), Err(Error::InvalidParameter(_))));
        assert_eq!(catalog("abelian", Some(5)).unwrap().dim(), 5);
    }

    #[test]
    fn basis_change_preserves_jacobi() {
        for alg in all() {
            let (changed, p) = random_basis_change(&alg, 7);
            assert!(changed.validate().is_empty());
            assert!(p.inverse().is_some());
        }
        let h3 = catalog("heisenberg3", None).unwrap();
        let same = h3.change_basis(&Matrix::identity(3)).unwrap();
        assert_eq!(same.brackets(), h3.brackets());
    }
}
