//! Levi subalgebras by stagewise lifting along the derived series of the
//! radical.

use num_traits::Zero;

use super::Certificate;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, SeriesKind};
use crate::linalg::rational::Rational;
use crate::linalg::subspace::unit;
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq)]
pub struct LeviDecomposition {
    pub radical: Subspace,
    pub levi: Subspace,
    pub certificate: Certificate,
}

pub fn levi_certificate(alg: &LieAlgebra, r: &Subspace, s: &Subspace) -> Result<Certificate> {
    let mut c = Certificate::default();
    c.record(
        "levi: g = r + s (direct)",
        Subspace::full(alg.dim()).is_direct_sum_of(&[r, s]),
    );
    c.record("levi: [s,s] in s", alg.is_subalgebra(s)?);
    Ok(c)
}

/// A Levi subalgebra complementing the radical `r`.
pub fn levi_given(alg: &LieAlgebra, r: &Subspace) -> Result<LeviDecomposition> {
    let n = alg.dim();
    let comp = r.non_pivots();
    let q = comp.len();
    let (quot, _) = alg.quotient(r)?;

    // section sigma(a) for each quotient basis vector, initially e_comp[a]
    let mut sigma: Vec<Vec<Rational>> = comp.iter().map(|&c| unit(n, c)).collect();
    let derived = alg.series(r, SeriesKind::Derived)?;

    for stage in derived.terms.windows(2) {
        let (cur, next) = (&stage[0], &stage[1]);
        let w = cur.basis_vectors();
        let unknowns = q * w.len();
        let pairs: Vec<(usize, usize)> = (0..q)
            .flat_map(|a| (a + 1..q).map(move |b| (a, b)))
            .collect();
        if pairs.is_empty() || unknowns == 0 {
            continue;
        }
        let qbr: Vec<Vec<Rational>> = pairs
            .iter()
            .map(|&(a, b)| quot.basis_bracket(a, b))
            .collect();

        let red_w: Vec<Vec<Rational>> = w.iter().map(|wk| next.reduce(wk)).collect();
        let red_sw: Vec<Vec<Vec<Rational>>> = sigma
            .iter()
            .map(|s| w.iter().map(|wk| next.reduce(&alg.br(s, wk))).collect())
            .collect();
        let mut m = Matrix::zeros(pairs.len() * n, unknowns);
        let mut rhs = vec![Rational::zero(); pairs.len() * n];
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let mut defect = alg.br(&sigma[a], &sigma[b]);
            for (c, coef) in qbr[p].iter().enumerate() {
                if !coef.is_zero() {
                    for (d, s) in defect.iter_mut().zip(&sigma[c]) {
                        *d -= coef * s;
                    }
                }
            }
            for (i, v) in next.reduce(&defect).into_iter().enumerate() {
                rhs[p * n + i] = -v;
            }
            // tau(e) = w_k contributes [sigma a, w_k] for e = b, -[sigma b, w_k]
            // for e = a, and -coef_e w_k from tau([a,b]_q)
            for k in 0..w.len() {
                for i in 0..n {
                    if !red_sw[a][k][i].is_zero() {
                        m[(p * n + i, b * w.len() + k)] += &red_sw[a][k][i];
                    }
                    if !red_sw[b][k][i].is_zero() {
                        m[(p * n + i, a * w.len() + k)] -= &red_sw[b][k][i];
                    }
                }
                for (c, coef) in qbr[p].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    for (i, v) in red_w[k].iter().enumerate() {
                        if !v.is_zero() {
                            m[(p * n + i, c * w.len() + k)] -= coef * v;
                        }
                    }
                }
            }
        }
        let x = m.solve(&rhs)?.ok_or_else(|| {
            Error::Verification("Levi cocycle system is inconsistent".into())
        })?;
        for (a, s) in sigma.iter_mut().enumerate() {
            for (k, wk) in w.iter().enumerate() {
                let c = &x[a * w.len() + k];
                if c.is_zero() {
                    continue;
                }
                for (si, wi) in s.iter_mut().zip(wk) {
                    *si += c * wi;
                }
            }
        }
    }

    let levi = Subspace::from_rows(&Matrix::from_rows(&sigma, n));
    let certificate = levi_certificate(alg, r, &levi)?;
    certificate.clone().into_result()?;
    Ok(LeviDecomposition {
        radical: r.clone(),
        levi,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, random_basis_change};
    use crate::structure::radical::radical;

    #[test]
    fn adapted_basis_gives_sl2() {
        let g = catalog("sl2_semidirect_R2", None).unwrap();
        let r = radical(&g).unwrap();
        let d = levi_given(&g, &r).unwrap();
        assert_eq!(d.levi, Subspace::coordinate(5, &[0, 1, 2]));
    }

    #[test]
    fn solvable_input_has_zero_levi() {
        let g = catalog("oscillator", None).unwrap();
        let r = radical(&g).unwrap();
        assert!(levi_given(&g, &r).unwrap().levi.is_zero());
    }

    #[test]
    fn random_basis_changes_pass_certificate() {
        for name in ["sl2_semidirect_R2", "sl2_semidirect_h3", "gl2", "so3_semidirect_R3"] {
            let g = catalog(name, None).unwrap();
            for seed in 0..3 {
                let (h, _) = random_basis_change(&g, seed);
                let r = radical(&h).unwrap();
                let d = levi_given(&h, &r).unwrap();
                assert!(d.certificate.passed());
                assert_eq!(d.levi.dim(), 3);
            }
        }
    }
}
