//! Radical and nilradical.

use num_traits::Zero;

use super::Certificate;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::rational::Rational;
use crate::linalg::subspace::kernel;
use crate::linalg::{Matrix, Subspace};

/// `{x : B(x, y) = 0 for all y in u}`.
pub fn killing_orthogonal(killing: &Matrix, u: &Subspace) -> Subspace {
    let n = killing.rows();
    if u.is_zero() {
        return Subspace::full(n);
    }
    kernel(&(u.basis() * killing))
}

/// Gram matrix of `form` on the canonical basis of `u`.
pub fn restricted_form(form: &Matrix, u: &Subspace) -> Matrix {
    form.congruence(&u.basis().transpose())
}

/// The radical as the Killing-orthogonal complement of `[g, g]`.
pub fn radical(alg: &LieAlgebra) -> Result<Subspace> {
    let r = killing_orthogonal(&alg.killing(), &alg.derived_algebra());
    radical_certificate(alg, &r)?.into_result()?;
    Ok(r)
}

pub fn radical_certificate(alg: &LieAlgebra, r: &Subspace) -> Result<Certificate> {
    let b = alg.killing();
    let d = alg.derived_algebra();
    let mut c = Certificate::default();
    let orth = r
        .basis_vectors()
        .iter()
        .all(|x| d.basis_vectors().iter().all(|y| bilinear(&b, x, y).is_zero()));
    c.record("radical: B(r, [g,g]) = 0", orth);
    let ideal = alg.is_ideal(r)?;
    c.record("radical: ideal", ideal);
    c.record("radical: solvable", ideal && alg.is_solvable(r)?);
    let nondegenerate = ideal && {
        let (q, _) = alg.quotient(r)?;
        q.killing().rank() == q.dim()
    };
    c.record("radical: g/r has nondegenerate Killing form", nondegenerate);
    Ok(c)
}

pub fn bilinear(form: &Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    let fy = form.mul_vec(y);
    x.iter()
        .zip(&fy)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// Span of the associative algebra (without unit) generated by `gens`.
fn associative_closure(gens: &[Matrix], n: usize) -> Vec<Matrix> {
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut span = Subspace::from_rows(&Matrix::from_rows(
        &gens.iter().map(flat).collect::<Vec<_>>(),
        n * n,
    ));
    let mut frontier: Vec<Matrix> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let p = g * a;
                let v = flat(&p);
                if !span.contains(&v) {
                    span = span.sum(&Subspace::span(n * n, &[v]).expect("length n^2"))
                        .expect("same ambient");
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    span.basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_vec(n, n, v))
        .collect()
}

/// The nilradical by the associative trace-radical method: the elements of
/// `r` whose adjoint lies in the radical of the matrix algebra generated by
/// `ad(r)`.
pub fn nilradical(alg: &LieAlgebra) -> Result<Subspace> {
    let r = radical(alg)?;
    let n = nilradical_given(alg, &r)?;
    nilradical_certificate(alg, &r, &n)?.into_result()?;
    Ok(n)
}

pub(crate) fn nilradical_given(alg: &LieAlgebra, r: &Subspace) -> Result<Subspace> {
    let dim = alg.dim();
    if r.is_zero() {
        return Ok(Subspace::zero(dim));
    }
    let rb = r.basis_vectors();
    let gens: Vec<Matrix> = rb.iter().map(|x| alg.ad_vec(x)).collect();
    let a = associative_closure(&gens, dim);
    let mut m = Matrix::zeros(a.len(), gens.len());
    for (i, b) in a.iter().enumerate() {
        for (j, g) in gens.iter().enumerate() {
            m[(i, j)] = g.trace_of_product(b);
        }
    }
    let coeffs = kernel(&m);
    let rows: Vec<Vec<Rational>> = coeffs
        .basis_vectors()
        .iter()
        .map(|c| r.combine(c))
        .collect();
    Ok(Subspace::from_rows(&Matrix::from_rows(&rows, dim)))
}

pub fn nilradical_certificate(alg: &LieAlgebra, r: &Subspace, n: &Subspace) -> Result<Certificate> {
    let mut c = Certificate::default();
    let ideal = alg.is_ideal(n)?;
    c.record("nilradical: ideal", ideal);
    c.record(
        "nilradical: nilpotent",
        ideal && alg.is_nilpotent_ideal(n)?,
    );
    let gr = alg.bracket_space(&Subspace::full(alg.dim()), r)?;
    c.record("nilradical: [g,r] in n", gr.is_subspace_of(n));
    c.record("nilradical: n in r", n.is_subspace_of(r));
    Ok(c)
}
