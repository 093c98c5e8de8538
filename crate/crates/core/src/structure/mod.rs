//! Radical, nilradical, Levi subalgebra, compact/noncompact split and
//! reductive complements.

pub mod levi;
pub mod radical;
pub mod semisimple;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};

pub use levi::{levi_certificate, levi_given, LeviDecomposition};
pub use radical::{
    killing_orthogonal, nilradical, nilradical_certificate, radical, radical_certificate,
    restricted_form,
};
pub use semisimple::{compact_split, simple_ideals, SemisimpleSplit};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Named verification outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn record(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
        });
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// `Error::Verification` naming the failed checks, if any.
    pub fn into_result(self) -> Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(Error::Verification(self.failures().join("; ")))
        }
    }
}

/// The full structure decomposition of an algebra.
#[derive(Clone, Debug)]
pub struct Structure {
    pub killing: Matrix,
    pub radical: Subspace,
    pub nilradical: Subspace,
    pub levi: LeviDecomposition,
    pub split: SemisimpleSplit,
    pub certificate: Certificate,
}

fn verified_radical(alg: &LieAlgebra) -> Result<(Subspace, Certificate)> {
    let r = killing_orthogonal(&alg.killing(), &alg.derived_algebra());
    let c = radical_certificate(alg, &r)?;
    c.clone().into_result()?;
    Ok((r, c))
}

impl Structure {
    pub fn compute(alg: &LieAlgebra) -> Result<Structure> {
        let (r, rc) = verified_radical(alg)?;
        let levi = levi_given(alg, &r)?;
        Self::assemble(alg, r, rc, levi)
    }

    /// The decomposition with a caller-supplied Levi subalgebra `s`.
    pub fn with_levi(alg: &LieAlgebra, s: &Subspace) -> Result<Structure> {
        let (r, rc) = verified_radical(alg)?;
        let certificate = levi_certificate(alg, &r, s)?;
        if !certificate.passed() {
            return Err(Error::InvalidParameter(format!(
                "not a Levi subalgebra: {}",
                certificate.failures().join("; ")
            )));
        }
        let levi = LeviDecomposition {
            radical: r.clone(),
            levi: s.clone(),
            certificate,
        };
        Self::assemble(alg, r, rc, levi)
    }

    fn assemble(
        alg: &LieAlgebra,
        r: Subspace,
        mut certificate: Certificate,
        levi: LeviDecomposition,
    ) -> Result<Structure> {
        let n = radical::nilradical_given(alg, &r)?;
        certificate.extend(nilradical_certificate(alg, &r, &n)?);
        certificate.extend(levi.certificate.clone());
        certificate.clone().into_result()?;
        let split = compact_split(alg, &levi.levi)?;
        Ok(Structure {
            killing: alg.killing(),
            radical: r,
            nilradical: n,
            levi,
            split,
            certificate,
        })
    }

    pub fn levi_factor(&self) -> &Subspace {
        &self.levi.levi
    }

    /// The Killing-orthogonal complement `m` of a compactly embedded
    /// subalgebra `h`, checked to satisfy `g = h + m`, `[h, m] ⊆ m` and
    /// `n ⊆ m`.
    pub fn reductive_complement(&self, alg: &LieAlgebra, h: &Subspace) -> Result<Subspace> {
        if h.ambient_dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: h.ambient_dim(),
            });
        }
        if !alg.is_subalgebra(h)? {
            return Err(Error::NotSubalgebra);
        }
        let (pos, neg, zero) = restricted_form(&self.killing, h).signature()?;
        if neg != h.dim() {
            return Err(Error::NotNegativeDefinite { pos, neg, zero });
        }
        let m = killing_orthogonal(&self.killing, h);
        let mut c = Certificate::default();
        c.record(
            "reductive: g = h + m (direct)",
            Subspace::full(alg.dim()).is_direct_sum_of(&[h, &m]),
        );
        c.record(
            "reductive: [h,m] in m",
            alg.bracket_space(h, &m)?.is_subspace_of(&m),
        );
        c.record("reductive: n in m", self.nilradical.is_subspace_of(&m));
        c.into_result()?;
        Ok(m)
    }
}

/// Convenience form of [`Structure::reductive_complement`].
pub fn reductive_complement(alg: &LieAlgebra, h: &Subspace) -> Result<Subspace> {
    Structure::compute(alg)?.reductive_complement(alg, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn reductive_complements() {
        let e2 = catalog("e2cover", None).unwrap();
        let h = Subspace::coordinate(3, &[0]);
        assert_eq!(
            reductive_complement(&e2, &h).unwrap(),
            Subspace::coordinate(3, &[1, 2])
        );
        assert!(reductive_complement(&e2, &Subspace::zero(3)).unwrap().is_full());

        let aff = catalog("aff1", None).unwrap();
        assert_eq!(
            reductive_complement(&aff, &Subspace::coordinate(2, &[0])),
            Err(Error::NotNegativeDefinite { pos: 1, neg: 0, zero: 0 })
        );
    }

    #[test]
    fn structure_of_catalog() {
        for alg in crate::catalog::all() {
            let s = Structure::compute(&alg).unwrap();
            let truth = crate::catalog::ground_truth(alg.name(), None).unwrap();
            assert_eq!(s.radical.dim(), truth.radical_dim, "{}", alg.name());
            assert_eq!(s.nilradical.dim(), truth.nilradical_dim, "{}", alg.name());
            assert_eq!(s.levi_factor().dim(), truth.levi_dim, "{}", alg.name());
            assert!(s.certificate.passed());
        }
    }
}
