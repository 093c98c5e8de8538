//! Centralizer chain, weight components of the radical action, and the
//! abelian part `v` of the bounded subalgebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};
use crate::lie::LieAlgebra;
use crate::linalg::factor::factor_rationals;
use crate::linalg::rational::{ExtendedRational, Rational};
use crate::linalg::subspace::kernel;
use crate::linalg::{Matrix, Polynomial, Subspace};
use crate::structure::Structure;

#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerChain {
    /// Center of the nilradical.
    pub c_n: Subspace,
    pub c_g_n: Subspace,
    pub c_s_r: Subspace,
    pub c_sc_r: Subspace,
    pub c_snc_r: Subspace,
    /// Center of the radical.
    pub c_r: Subspace,
    /// `c_{c(n)}(s_nc)`.
    pub w: Subspace,
}

pub fn centralizer_chain(alg: &LieAlgebra, st: &Structure) -> Result<CentralizerChain> {
    let g = Subspace::full(alg.dim());
    let (r, n, s) = (&st.radical, &st.nilradical, st.levi_factor());
    let (sc, snc) = (&st.split.compact_part, &st.split.noncompact_part);
    let c_n = alg.center_of(n)?;
    let chain = CentralizerChain {
        c_g_n: alg.centralizer(&g, n)?,
        c_s_r: alg.centralizer(s, r)?,
        c_sc_r: alg.centralizer(sc, r)?,
        c_snc_r: alg.centralizer(snc, r)?,
        c_r: alg.center_of(r)?,
        w: alg.centralizer(&c_n, snc)?,
        c_n,
    };
    ensure(
        chain
            .c_g_n
            .is_direct_sum_of(&[&chain.c_sc_r, &chain.c_snc_r, &chain.c_n]),
        || "c_g(n) is not c_sc(r) + c_snc(r) + c(n)".into(),
    )?;
    for (name, u) in [
        ("c_sc(r)", &chain.c_sc_r),
        ("c_snc(r)", &chain.c_snc_r),
        ("c(n)", &chain.c_n),
    ] {
        ensure(alg.is_ideal(u)?, || format!("{name} is not an ideal"))?;
    }
    ensure(chain.c_n.is_subspace_of(n), || "c(n) not in n".into())?;
    ensure(chain.c_r.is_subspace_of(&chain.c_n), || "c(r) not in c(n)".into())?;
    Ok(chain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightClass {
    Zero,
    ImaginaryNonzero,
    Other,
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightClass::Zero => "zero",
            WeightClass::ImaginaryNonzero => "imaginary-nonzero",
            WeightClass::Other => "other",
        })
    }
}

/// A joint primary component of the commuting maps `ad(u_i)|_W`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightComponent {
    pub subspace: Subspace,
    /// Irreducible factor of each generator on this component, in the order
    /// of the canonical radical basis.
    pub factors: Vec<Polynomial>,
    pub class: WeightClass,
}

/// True for monic irreducible `f` with only purely imaginary nonzero roots.
pub fn is_imaginary_nonzero_factor(f: &Polynomial) -> bool {
    if f.degree() == 0 || *f == Polynomial::t() {
        return false;
    }
    match f.even_part_in_square() {
        Some(g) => {
            g.sturm_count(&ExtendedRational::NegInfinity, &ExtendedRational::from(0))
                .map(|c| c == g.degree())
                .unwrap_or(false)
                && g.coeff(0) != Rational::from_integer(0.into())
        }
        None => false,
    }
}

fn classify(factors: &[Polynomial]) -> WeightClass {
    let t = Polynomial::t();
    if factors.iter().all(|f| *f == t) {
        WeightClass::Zero
    } else if factors
        .iter()
        .all(|f| *f == t || is_imaginary_nonzero_factor(f))
    {
        WeightClass::ImaginaryNonzero
    } else {
        WeightClass::Other
    }
}

/// `ad(u)|_W` for each canonical radical basis vector `u`.
fn generator_actions(alg: &LieAlgebra, st: &Structure, w: &Subspace) -> Result<Vec<Matrix>> {
    st.radical
        .basis_vectors()
        .iter()
        .map(|u| alg.restricted_ad(u, w))
        .collect()
}

fn to_ambient(w: &Subspace, local: &Subspace) -> Subspace {
    let rows: Vec<Vec<Rational>> = local.basis_vectors().iter().map(|c| w.combine(c)).collect();
    Subspace::from_rows(&Matrix::from_rows(&rows, w.ambient_dim()))
}

/// Restriction of `m` (acting on `W` coordinates) to an invariant subspace
/// `c` of those coordinates, in the canonical basis of `c`.
fn restrict(m: &Matrix, c: &Subspace) -> Result<Matrix> {
    let basis = c.basis_vectors();
    let d = basis.len();
    let mut out = Matrix::zeros(d, d);
    for (j, b) in basis.iter().enumerate() {
        let coords = c.coords(&m.mul_vec(b)).ok_or_else(|| {
            crate::Error::Verification("weight component is not invariant".into())
        })?;
        for (i, v) in coords.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

pub fn weight_components(
    alg: &LieAlgebra,
    st: &Structure,
    chain: &CentralizerChain,
) -> Result<Vec<WeightComponent>> {
    let w = &chain.w;
    if w.is_zero() {
        return Ok(Vec::new());
    }
    let actions = generator_actions(alg, st, w)?;
    let mut comps: Vec<(Subspace, Vec<Polynomial>)> = vec![(Subspace::full(w.dim()), Vec::new())];
    for a in &actions {
        let mut next = Vec::new();
        for (c, factors) in comps {
            let local = restrict(a, &c)?;
            for (f, mult) in factor_rationals(&local.char_poly()?)? {
                let k = kernel(&local.eval_poly(&f.pow(mult)));
                let rows: Vec<Vec<Rational>> =
                    k.basis_vectors().iter().map(|x| c.combine(x)).collect();
                let piece = Subspace::from_rows(&Matrix::from_rows(&rows, w.dim()));
                let mut fs = factors.clone();
                fs.push(f);
                next.push((piece, fs));
            }
        }
        comps = next;
    }
    Ok(comps
        .into_iter()
        .map(|(c, factors)| WeightComponent {
            subspace: to_ambient(w, &c),
            class: classify(&factors),
            factors,
        })
        .collect())
}

/// `v = ⋂_i ker s_i(ad(u_i)|_W)` with `s_i = t * prod` of the
/// imaginary-nonzero irreducible factors of `char_poly(ad(u_i)|_W)`.
pub fn bounded_abelian_part(
    alg: &LieAlgebra,
    st: &Structure,
    chain: &CentralizerChain,
) -> Result<Subspace> {
    let w = &chain.w;
    if w.is_zero() {
        return Ok(w.clone());
    }
    let mut v = Subspace::full(w.dim());
    for a in generator_actions(alg, st, w)? {
        let mut s = Polynomial::t();
        for (f, _) in factor_rationals(&a.char_poly()?)? {
            if is_imaginary_nonzero_factor(&f) {
                s = &s * &f;
            }
        }
        v = v.intersect(&kernel(&a.eval_poly(&s)))?;
    }
    Ok(to_ambient(w, &v))
}

/// The componentwise construction: `c_{c(r)}(s_nc)` plus the eigenvector
/// parts of the imaginary-nonzero components.
pub fn bounded_abelian_part_by_components(
    alg: &LieAlgebra,
    st: &Structure,
    chain: &CentralizerChain,
    components: &[WeightComponent],
) -> Result<Subspace> {
    let w = &chain.w;
    let mut v = alg.centralizer(&chain.c_r, &st.split.noncompact_part)?;
    if w.is_zero() {
        return Ok(v);
    }
    let actions = generator_actions(alg, st, w)?;
    for comp in components {
        if comp.class != WeightClass::ImaginaryNonzero {
            continue;
        }
        let local = Subspace::span(
            w.dim(),
            &comp
                .subspace
                .basis_vectors()
                .iter()
                .map(|x| w.coords(x).expect("component inside W"))
                .collect::<Vec<_>>(),
        )?;
        let mut eigen = local.clone();
        for (a, f) in actions.iter().zip(&comp.factors) {
            eigen = eigen.intersect(&kernel(&a.eval_poly(f)))?;
        }
        v = v.sum(&to_ambient(w, &eigen))?;
    }
    Ok(v)
}
