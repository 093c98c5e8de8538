//! Minimal ideals of a semisimple subalgebra via its centroid, and the
//! compact/noncompact split.

use num_traits::Zero;

use super::radical::{killing_orthogonal, restricted_form};
use crate::error::{ensure, Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::factor::factor_rationals;
use crate::linalg::rational::{int, Rational};
use crate::linalg::subspace::kernel;
use crate::linalg::{Matrix, Polynomial, Subspace};

/// Number of weighted centroid combinations tried before giving up.
const CENTROID_BUDGET: usize = 20_000;

#[derive(Clone, Debug, PartialEq)]
pub struct SemisimpleSplit {
    pub compact_part: Subspace,
    pub noncompact_part: Subspace,
    /// Each minimal ideal with the signature of the Killing form of `g`
    /// restricted to it.
    pub simple_ideals: Vec<(Subspace, (usize, usize, usize))>,
}

/// Basis of `{T : T ad(x) = ad(x) T for all x}` for the algebra `s`,
/// narrowing the solution space one basis element at a time.
fn centroid(s: &LieAlgebra) -> Vec<Matrix> {
    let d = s.dim();
    // unknown T[(r, c)] sits at column r * d + c
    let mut solutions = Matrix::zeros(0, d * d);
    for x in 0..d {
        let a = s.ad_basis(x);
        let mut eq = Matrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                let row = i * d + j;
                // (T A)[i][j] - (A T)[i][j]
                for k in 0..d {
                    if !a[(k, j)].is_zero() {
                        eq[(row, i * d + k)] += &a[(k, j)];
                    }
                    if !a[(i, k)].is_zero() {
                        eq[(row, k * d + j)] -= &a[(i, k)];
                    }
                }
            }
        }
        solutions = if x == 0 {
            kernel(&eq).basis().clone()
        } else {
            kernel(&(&eq * &solutions.transpose())).basis() * &solutions
        };
        if solutions.rows() == 0 {
            break;
        }
    }
    Subspace::from_rows(&solutions)
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(d, d, v))
        .collect()
}

fn combination(basis: &[Matrix], weights: &[i64]) -> Matrix {
    let d = basis[0].rows();
    let mut m = Matrix::zeros(d, d);
    for (b, &w) in basis.iter().zip(weights) {
        if w != 0 {
            m = &m + &b.scale(&int(w));
        }
    }
    m
}

/// Candidate weight vectors: unit vectors, then all tuples over `1..=k`
/// in lexicographic order.
fn weight_candidates(k: usize) -> impl Iterator<Item = Vec<i64>> {
    let units = (0..k).map(move |i| {
        let mut w = vec![0; k];
        w[i] = 1;
        w
    });
    let total = (k as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    let tuples = (0..total).map(move |mut idx| {
        let mut w = vec![1i64; k];
        for slot in w.iter_mut().rev() {
            *slot = 1 + (idx % k as u64) as i64;
            idx /= k as u64;
        }
        w
    });
    units.chain(tuples)
}

/// Rows of `inner` (coordinates in `outer`) as vectors of the ambient space.
fn embed(outer: &Subspace, inner: &Subspace) -> Subspace {
    let rows: Vec<Vec<Rational>> = inner
        .basis_vectors()
        .iter()
        .map(|c| outer.combine(c))
        .collect();
    Subspace::from_rows(&Matrix::from_rows(&rows, outer.ambient_dim()))
}

/// Ideals generated by the primary components of `ad x` for one fixed `x`,
/// refined against each other and their Killing complements. Every part is
/// a sum of minimal ideals.
fn coarse_split(s: &LieAlgebra) -> Result<Vec<Subspace>> {
    let d = s.dim();
    let x: Vec<Rational> = (0..d).map(|i| int(1 + (3 * i as i64) % 7)).collect();
    let ad = s.ad_vec(&x);
    let killing = s.killing();
    let mut parts = vec![Subspace::full(d)];
    for (f, m) in factor_rationals(&ad.char_poly()?)? {
        if f == Polynomial::t() {
            continue;
        }
        let seeds: Vec<Element> = kernel(&ad.eval_poly(&f.pow(m)))
            .basis_vectors()
            .into_iter()
            .map(Element::new)
            .collect();
        let ideal = s.ideal_generated(&seeds)?;
        if ideal.is_full() {
            continue;
        }
        let perp = killing_orthogonal(&killing, &ideal);
        let mut refined = Vec::new();
        for p in &parts {
            for q in [p.intersect(&ideal)?, p.intersect(&perp)?] {
                if !q.is_zero() {
                    refined.push(q);
                }
            }
        }
        parts = refined;
    }
    Ok(parts)
}

/// Minimal ideals of a semisimple algebra from a generic element of its
/// centroid, in its own coordinates.
fn centroid_split(s: &LieAlgebra) -> Result<Vec<Subspace>> {
    let basis = centroid(s);
    let k = basis.len();
    if k <= 1 {
        return Ok(vec![Subspace::full(s.dim())]);
    }
    let t = weight_candidates(k)
        .take(CENTROID_BUDGET)
        .map(|w| combination(&basis, &w))
        .find(|t| t.minimal_poly().map(|p| p.degree() == k).unwrap_or(false))
        .ok_or(Error::NoGenericCentroidElement)?;
    let minpoly = t.minimal_poly()?;
    Ok(factor_rationals(&minpoly)?
        .iter()
        .map(|(f, m)| kernel(&t.eval_poly(&f.pow(*m))))
        .collect())
}

/// Minimal ideals of the semisimple subalgebra `s`, in `g` coordinates.
pub fn simple_ideals(alg: &LieAlgebra, s: &Subspace) -> Result<Vec<Subspace>> {
    if s.is_zero() {
        return Ok(Vec::new());
    }
    let sub = alg.subalgebra(s)?;
    if sub.killing().rank() != sub.dim() {
        return Err(Error::DegenerateKilling);
    }
    let mut pieces = Vec::new();
    for part in coarse_split(&sub)? {
        let inner = sub.subalgebra(&part)?;
        pieces.extend(centroid_split(&inner)?.iter().map(|p| embed(&part, p)));
    }
    let ideals: Vec<Subspace> = pieces.iter().map(|p| embed(s, p)).collect();
    let refs: Vec<&Subspace> = ideals.iter().collect();
    ensure(s.is_direct_sum_of(&refs), || {
        "simple ideals do not decompose s".into()
    })?;
    for i in &ideals {
        let inside = alg.bracket_space(s, i)?.is_subspace_of(i);
        ensure(inside, || "centroid component is not an ideal of s".into())?;
    }
    Ok(ideals)
}

/// Compact part = sum of minimal ideals on which the Killing form of `g` is
/// negative definite; noncompact part = sum of the others.
pub fn compact_split(alg: &LieAlgebra, s: &Subspace) -> Result<SemisimpleSplit> {
    let ideals = simple_ideals(alg, s)?;
    let b = alg.killing();
    let n = alg.dim();
    let mut compact = Subspace::zero(n);
    let mut noncompact = Subspace::zero(n);
    let mut labelled = Vec::new();
    for i in ideals {
        let sig = restricted_form(&b, &i).signature()?;
        if sig.1 == i.dim() {
            compact = compact.sum(&i)?;
        } else {
            noncompact = noncompact.sum(&i)?;
        }
        labelled.push((i, sig));
    }
    Ok(SemisimpleSplit {
        compact_part: compact,
        noncompact_part: noncompact,
        simple_ideals: labelled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn so3_plus_sl2_splits() {
        let so3 = catalog("so3", None).unwrap();
        let sl2 = catalog("sl2R", None).unwrap();
        let g = so3.direct_sum(&sl2, "so3_sl2");
        let ideals = simple_ideals(&g, &Subspace::full(6)).unwrap();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.contains(&Subspace::coordinate(6, &[0, 1, 2])));
        assert!(ideals.contains(&Subspace::coordinate(6, &[3, 4, 5])));

        let split = compact_split(&g, &Subspace::full(6)).unwrap();
        assert_eq!(split.compact_part, Subspace::coordinate(6, &[0, 1, 2]));
        assert_eq!(split.noncompact_part, Subspace::coordinate(6, &[3, 4, 5]));
        let sigs: Vec<_> = split.simple_ideals.iter().map(|(_, s)| *s).collect();
        assert!(sigs.contains(&(0, 3, 0)));
        assert!(sigs.contains(&(2, 1, 0)));
    }

    #[test]
    fn simple_algebras() {
        let so3 = catalog("so3", None).unwrap();
        assert_eq!(simple_ideals(&so3, &Subspace::full(3)).unwrap().len(), 1);
        let split = compact_split(&so3, &Subspace::full(3)).unwrap();
        assert!(split.compact_part.is_full());
        assert!(split.noncompact_part.is_zero());

        let sl2 = catalog("sl2R", None).unwrap();
        let split = compact_split(&sl2, &Subspace::full(3)).unwrap();
        assert!(split.compact_part.is_zero());
        assert!(split.noncompact_part.is_full());

        assert!(simple_ideals(&sl2, &Subspace::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn degenerate_killing_is_rejected() {
        let h3 = catalog("heisenberg3", None).unwrap();
        assert_eq!(
            simple_ideals(&h3, &Subspace::full(3)),
            Err(Error::DegenerateKilling)
        );
    }

    #[test]
    fn centroid_alone_separates_ideals() {
        let so3 = catalog("so3", None).unwrap();
        let sl2 = catalog("sl2R", None).unwrap();
        let g = so3.direct_sum(&sl2, "so3_sl2");
        let pieces = centroid_split(&g).unwrap();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.contains(&Subspace::coordinate(6, &[0, 1, 2])));
    }

    #[test]
    fn isomorphic_ideals_after_basis_change() {
        let so3 = catalog("so3", None).unwrap();
        let g = so3.direct_sum(&so3, "so3_so3");
        for seed in 0..3 {
            let (h, p) = crate::catalog::random_basis_change(&g, seed);
            let ideals = simple_ideals(&h, &Subspace::full(6)).unwrap();
            assert_eq!(ideals.len(), 2);
            let back: Vec<Subspace> = ideals.iter().map(|i| i.image_under(&p)).collect();
            assert!(back.contains(&Subspace::coordinate(6, &[0, 1, 2])));
            assert!(back.contains(&Subspace::coordinate(6, &[3, 4, 5])));
        }
    }
}
