//! The bounded subalgebra `b = c_{s_c}(r) + v`, per-vector classification
//! and the pure-imaginary spectrum test.

pub mod chain;

use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::factor::factor_rationals;
use crate::linalg::{jordan_chevalley, Matrix, Polynomial, Subspace};
use crate::structure::radical::restricted_form;
use crate::structure::{Certificate, Structure};

pub use chain::{
    bounded_abelian_part, bounded_abelian_part_by_components, centralizer_chain,
    is_imaginary_nonzero_factor, weight_components, CentralizerChain, WeightClass,
    WeightComponent,
};

#[derive(Clone, Debug, PartialEq)]
pub struct BoundedSubalgebra {
    /// `c_{s_c}(r)`.
    pub semisimple_part: Subspace,
    /// `v`.
    pub abelian_part: Subspace,
    pub total: Subspace,
    pub certificate: Certificate,
}

fn bounded_certificate(
    alg: &LieAlgebra,
    st: &Structure,
    chain: &CentralizerChain,
    sc: &Subspace,
    v: &Subspace,
    total: &Subspace,
) -> Result<Certificate> {
    let mut c = Certificate::default();
    c.record("bounded: total = c_sc(r) + v (direct)", total.is_direct_sum_of(&[sc, v]));
    c.record("bounded: ideal of g", alg.is_ideal(total)?);
    c.record("bounded: [v,v] = 0", alg.bracket_space(v, v)?.is_zero());
    c.record("bounded: v in c(n)", v.is_subspace_of(&chain.c_n));
    let sig = restricted_form(&st.killing, sc).signature()?;
    c.record("bounded: Killing form negative definite on c_sc(r)", sig.1 == sc.dim());
    Ok(c)
}

/// Everything needed to classify vectors, computed once per algebra.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub structure: Structure,
    pub chain: CentralizerChain,
    pub components: Vec<WeightComponent>,
    pub bounded: BoundedSubalgebra,
}

impl Analysis {
    pub fn compute(alg: &LieAlgebra) -> Result<Analysis> {
        Self::from_structure(alg, Structure::compute(alg)?)
    }

    pub fn from_structure(alg: &LieAlgebra, structure: Structure) -> Result<Analysis> {
        let chain = centralizer_chain(alg, &structure)?;
        let components = weight_components(alg, &structure, &chain)?;
        let v = bounded_abelian_part(alg, &structure, &chain)?;
        let v2 = bounded_abelian_part_by_components(alg, &structure, &chain, &components)?;
        if v != v2 {
            return Err(Error::Verification(
                "kernel-intersection and componentwise constructions of v disagree".into(),
            ));
        }
        let sc = chain.c_sc_r.clone();
        let total = sc.sum(&v)?;
        let certificate = bounded_certificate(alg, &structure, &chain, &sc, &v, &total)?;
        certificate.clone().into_result()?;
        Ok(Analysis {
            bounded: BoundedSubalgebra {
                semisimple_part: sc,
                abelian_part: v,
                total,
                certificate,
            },
            structure,
            chain,
            components,
        })
    }

    /// Splits `x = x_r + x_s` along the radical and the Levi factor.
    pub fn levi_split(&self, x: &[crate::linalg::Rational]) -> (Element, Element) {
        let r = &self.structure.radical;
        let s = self.structure.levi_factor();
        let stacked = r.basis().vstack(s.basis());
        let coeffs = stacked
            .transpose()
            .solve(x)
            .expect("matching dimension")
            .expect("r + s spans g");
        let (cr, cs) = coeffs.split_at(r.dim());
        (Element::new(r.combine(cr)), Element::new(s.combine(cs)))
    }

    pub fn classify(&self, alg: &LieAlgebra, x: &Element) -> Result<VectorReport> {
        if x.len() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: x.len(),
            });
        }
        let (x_r, x_s) = self.levi_split(x);
        let ad_x = alg.ad_vec(x);
        let char_poly = ad_x.char_poly()?;
        let bounded = self.bounded.total.contains(x);
        let mut jordan_certificate = None;
        if bounded {
            let cert = jordan_certificate_for(alg, &ad_x, &x_r, &x_s)?;
            cert.clone().into_result()?;
            jordan_certificate = Some(cert);
        }
        let report = VectorReport {
            xs_in_c_sc_r: self.chain.c_sc_r.contains(&x_s),
            xr_in_c_n: self.chain.c_n.contains(&x_r),
            spectrum_imaginary: spectrum_pure_imaginary(&char_poly)?,
            x: x.clone(),
            x_r,
            x_s,
            bounded,
            char_poly,
            jordan_certificate,
        };
        if report.bounded && !(report.xs_in_c_sc_r && report.xr_in_c_n && report.spectrum_imaginary)
        {
            return Err(Error::Verification(
                "bounded vector violates a necessary condition".into(),
            ));
        }
        Ok(report)
    }

    /// `b + h = g` for a compactly embedded subalgebra `h`.
    pub fn bh_condition(&self, alg: &LieAlgebra, h: &Subspace) -> Result<bool> {
        self.structure.reductive_complement(alg, h)?;
        Ok(self.bounded.total.sum(h)?.is_full())
    }
}

fn jordan_certificate_for(
    alg: &LieAlgebra,
    ad_x: &Matrix,
    x_r: &Element,
    x_s: &Element,
) -> Result<Certificate> {
    let ad_s = alg.ad_vec(x_s);
    let ad_r = alg.ad_vec(x_r);
    let mut c = Certificate::default();
    c.record("jordan: ad X = ad X_s + ad X_r", &ad_s + &ad_r == *ad_x);
    c.record("jordan: ad X_s semisimple", ad_s.minimal_poly()?.is_squarefree());
    c.record("jordan: ad X_r nilpotent", ad_r.is_nilpotent());
    c.record("jordan: [ad X_s, ad X_r] = 0", ad_s.commutator(&ad_r).is_zero());
    let (s, n) = jordan_chevalley(ad_x)?;
    c.record("jordan: decomposition of ad X is (ad X_s, ad X_r)", s == ad_s && n == ad_r);
    c.record(
        "jordan: char_poly(ad X) = char_poly(ad X_s)",
        ad_x.char_poly()? == ad_s.char_poly()?,
    );
    Ok(c)
}

#[derive(Clone, Debug, PartialEq)]
pub struct VectorReport {
    pub x: Element,
    pub x_r: Element,
    pub x_s: Element,
    pub xs_in_c_sc_r: bool,
    pub xr_in_c_n: bool,
    pub bounded: bool,
    pub spectrum_imaginary: bool,
    pub char_poly: Polynomial,
    /// Present exactly when `bounded`.
    pub jordan_certificate: Option<Certificate>,
}

pub fn bounded_subalgebra(alg: &LieAlgebra) -> Result<BoundedSubalgebra> {
    Ok(Analysis::compute(alg)?.bounded)
}

pub fn classify_vector(alg: &LieAlgebra, x: &Element) -> Result<VectorReport> {
    Analysis::compute(alg)?.classify(alg, x)
}

pub fn bh_condition(alg: &LieAlgebra, h: &Subspace) -> Result<bool> {
    Analysis::compute(alg)?.bh_condition(alg, h)
}

/// True iff every root of `p` is zero or purely imaginary.
pub fn spectrum_pure_imaginary(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = Polynomial::t();
    Ok(factor_rationals(p)?
        .iter()
        .all(|(f, _)| *f == t || is_imaginary_nonzero_factor(f)))
}

/// `exp(ad w)` computed exactly; `ad w` must be nilpotent.
pub fn exp_ad_nilpotent(alg: &LieAlgebra, w: &[crate::linalg::Rational]) -> Result<Matrix> {
    let a = alg.ad_vec(w);
    let n = alg.dim();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=n {
        term = (&term * &a).scale(&crate::linalg::Rational::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    Err(Error::InvalidParameter("ad(w) is not nilpotent".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn bounded_examples() {
        let b = bounded_subalgebra(&catalog("so3_sl2_h3", None).unwrap()).unwrap();
        assert_eq!(b.total, Subspace::coordinate(9, &[0, 1, 2, 8]));
        assert!(bounded_subalgebra(&catalog("abelian", Some(4)).unwrap())
            .unwrap()
            .total
            .is_full());
        assert!(bounded_subalgebra(&catalog("sl2R", None).unwrap())
            .unwrap()
            .total
            .is_zero());
    }

    #[test]
    fn classify_examples() {
        let osc = catalog("oscillator", None).unwrap();
        let z = classify_vector(&osc, &Element::basis(4, 3)).unwrap();
        assert!(z.bounded && z.xs_in_c_sc_r && z.xr_in_c_n);
        assert_eq!(z.char_poly, Polynomial::from_i64(&[0, 0, 0, 0, 1]));
        assert!(z.jordan_certificate.unwrap().passed());

        let t = classify_vector(&osc, &Element::basis(4, 0)).unwrap();
        assert!(!t.bounded && !t.xr_in_c_n && t.spectrum_imaginary);
        assert_eq!(t.char_poly, Polynomial::from_i64(&[0, 0, 1, 0, 1]));
        assert!(t.jordan_certificate.is_none());

        let sl2 = catalog("sl2R", None).unwrap();
        let h = classify_vector(&sl2, &Element::basis(3, 0)).unwrap();
        assert!(!h.bounded && !h.spectrum_imaginary);
        assert!(classify_vector(&sl2, &Element::zero(2)).is_err());
    }

    #[test]
    fn spectra() {
        assert!(spectrum_pure_imaginary(&Polynomial::from_i64(&[0, 0, 1, 0, 1])).unwrap());
        assert!(!spectrum_pure_imaginary(&Polynomial::from_i64(&[-4, 0, 1])).unwrap());
        assert!(spectrum_pure_imaginary(&Polynomial::from_i64(&[6, 0, 5, 0, 1])).unwrap());
        assert!(spectrum_pure_imaginary(&Polynomial::zero()).is_err());
    }

    #[test]
    fn bh_examples() {
        let so3 = catalog("so3", None).unwrap();
        assert!(bh_condition(&so3, &Subspace::coordinate(3, &[2])).unwrap());
        let e2 = catalog("e2cover", None).unwrap();
        assert!(bh_condition(&e2, &Subspace::coordinate(3, &[0])).unwrap());
        let sr = catalog("sl2_semidirect_R2", None).unwrap();
        assert!(!bh_condition(&sr, &Subspace::zero(5)).unwrap());
        let aff = catalog("aff1", None).unwrap();
        assert!(bh_condition(&aff, &Subspace::coordinate(2, &[0])).is_err());
    }

    #[test]
    fn exact_inner_automorphism() {
        let h3 = catalog("heisenberg3", None).unwrap();
        let e = exp_ad_nilpotent(&h3, &Element::basis(3, 0)).unwrap();
        let ad = h3.ad_vec(&Element::basis(3, 0));
        assert_eq!(e, &Matrix::identity(3) + &ad);
        let sl2 = catalog("sl2R", None).unwrap();
        assert!(exp_ad_nilpotent(&sl2, &Element::basis(3, 0)).is_err());
    }
}
