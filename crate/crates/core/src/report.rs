//! The full analysis pipeline and its serializable report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounded::{Analysis, VectorReport};
use crate::error::Result;
use crate::lie::{Element, LieAlgebra, SeriesKind};
use crate::linalg::rational::format_vector;
use crate::linalg::Subspace;
use crate::oracle::{escape_witness, orbit_sup_walk, FloatAlgebra, Verdict, WalkConfig};
use crate::structure::{restricted_form, Check};

/// A subspace as its canonical basis, entries written as rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceReport {
    pub dim: usize,
    pub basis: Vec<String>,
}

impl SubspaceReport {
    pub fn new(u: &Subspace) -> Self {
        SubspaceReport {
            dim: u.dim(),
            basis: u.basis_vectors().iter().map(|v| format_vector(v)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub subspace: SubspaceReport,
    /// `(positive, negative, zero)` of the Killing form of `g` on the ideal.
    pub signature: (usize, usize, usize),
    pub compact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub subspace: SubspaceReport,
    pub factors: Vec<String>,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub direction: String,
    pub degree: usize,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorEntry {
    pub label: String,
    pub vector: String,
    pub x_r: String,
    pub x_s: String,
    pub xs_in_c_sc_r: bool,
    pub xr_in_c_n: bool,
    pub bounded: bool,
    pub spectrum_imaginary: bool,
    pub char_poly: String,
    pub jordan_certificate: Option<bool>,
    pub escape_witness: Option<WitnessReport>,
    /// Oracle verdict when walks were requested.
    pub oracle: Option<Verdict>,
    pub oracle_sup_norm: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub killing_signature: (usize, usize, usize),
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub radical: SubspaceReport,
    pub nilradical: SubspaceReport,
    pub levi: SubspaceReport,
    pub compact_part: SubspaceReport,
    pub noncompact_part: SubspaceReport,
    pub simple_ideals: Vec<IdealReport>,
    pub center_of_nilradical: SubspaceReport,
    pub centralizer_of_nilradical: SubspaceReport,
    pub c_s_r: SubspaceReport,
    pub c_sc_r: SubspaceReport,
    pub c_snc_r: SubspaceReport,
    pub center_of_radical: SubspaceReport,
    pub w: SubspaceReport,
    pub weight_components: Vec<WeightReport>,
    pub bounded_semisimple: SubspaceReport,
    pub bounded_abelian: SubspaceReport,
    pub bounded: SubspaceReport,
    pub certificates: Vec<Check>,
    pub vectors: Vec<VectorEntry>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    /// Run an orbit walk of this many steps per basis vector.
    pub walk_steps: Option<usize>,
    pub seed: u64,
}

pub fn analyze(alg: &LieAlgebra) -> Result<Report> {
    analyze_with(alg, &AnalyzeOptions::default())
}

fn vector_entry(
    alg: &LieAlgebra,
    an: &Analysis,
    label: String,
    x: &Element,
    opts: &AnalyzeOptions,
) -> Result<VectorEntry> {
    let vr: VectorReport = an.classify(alg, x)?;
    let witness = escape_witness(alg, &an.structure.nilradical, x, None)?;
    let (oracle, sup) = match (&witness, opts.walk_steps) {
        (Some(_), _) => (Some(Verdict::UnboundedWitness), None),
        (None, Some(steps)) => {
            let cfg = WalkConfig {
                steps,
                seed: opts.seed,
                ..WalkConfig::default()
            };
            let w = orbit_sup_walk(&FloatAlgebra::new(alg), x, &cfg)?;
            (Some(w.verdict), Some(w.sup_norm))
        }
        (None, None) => (None, None),
    };
    Ok(VectorEntry {
        label,
        vector: format_vector(x),
        x_r: format_vector(&vr.x_r),
        x_s: format_vector(&vr.x_s),
        xs_in_c_sc_r: vr.xs_in_c_sc_r,
        xr_in_c_n: vr.xr_in_c_n,
        bounded: vr.bounded,
        spectrum_imaginary: vr.spectrum_imaginary,
        char_poly: vr.char_poly.to_string(),
        jordan_certificate: vr.jordan_certificate.as_ref().map(|c| c.passed()),
        escape_witness: witness.map(|w| WitnessReport {
            direction: alg.format_element(&w.direction),
            degree: w.degree(),
            polynomial: w.format(alg),
        }),
        oracle,
        oracle_sup_norm: sup,
    })
}

/// Structure, centralizer chain, weights, bounded subalgebra, and a
/// classification of every basis vector.
pub fn analyze_with(alg: &LieAlgebra, opts: &AnalyzeOptions) -> Result<Report> {
    let an = Analysis::compute(alg)?;
    report_from(alg, &an, opts)
}

pub fn report_from(alg: &LieAlgebra, an: &Analysis, opts: &AnalyzeOptions) -> Result<Report> {
    let st = &an.structure;
    let g = Subspace::full(alg.dim());
    let dims = |kind| -> Result<Vec<usize>> {
        Ok(alg
            .series(&g, kind)?
            .terms
            .iter()
            .map(Subspace::dim)
            .collect())
    };
    let mut certificates = st.certificate.checks.clone();
    certificates.extend(an.bounded.certificate.checks.clone());
    let vectors = (0..alg.dim())
        .map(|i| {
            vector_entry(
                alg,
                an,
                alg.labels()[i].clone(),
                &Element::basis(alg.dim(), i),
                opts,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let s = SubspaceReport::new;
    Ok(Report {
        name: alg.name().to_string(),
        dim: alg.dim(),
        basis: alg.labels().to_vec(),
        killing_signature: st.killing.signature()?,
        derived_series: dims(SeriesKind::Derived)?,
        lower_central_series: dims(SeriesKind::LowerCentral)?,
        radical: s(&st.radical),
        nilradical: s(&st.nilradical),
        levi: s(st.levi_factor()),
        compact_part: s(&st.split.compact_part),
        noncompact_part: s(&st.split.noncompact_part),
        simple_ideals: st
            .split
            .simple_ideals
            .iter()
            .map(|(u, sig)| IdealReport {
                subspace: s(u),
                signature: *sig,
                compact: sig.1 == u.dim(),
            })
            .collect(),
        center_of_nilradical: s(&an.chain.c_n),
        centralizer_of_nilradical: s(&an.chain.c_g_n),
        c_s_r: s(&an.chain.c_s_r),
        c_sc_r: s(&an.chain.c_sc_r),
        c_snc_r: s(&an.chain.c_snc_r),
        center_of_radical: s(&an.chain.c_r),
        w: s(&an.chain.w),
        weight_components: an
            .components
            .iter()
            .map(|c| WeightReport {
                subspace: s(&c.subspace),
                factors: c.factors.iter().map(|f| f.to_string()).collect(),
                class: c.class.to_string(),
            })
            .collect(),
        bounded_semisimple: s(&an.bounded.semisimple_part),
        bounded_abelian: s(&an.bounded.abelian_part),
        bounded: s(&an.bounded.total),
        certificates,
        vectors,
    })
}

/// Killing signature of `g` restricted to `u`.
pub fn killing_signature_on(alg: &LieAlgebra, u: &Subspace) -> Result<(usize, usize, usize)> {
    restricted_form(&alg.killing(), u).signature()
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| crate::Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sub = |u: &SubspaceReport| {
            if u.dim == 0 {
                "0".to_string()
            } else {
                format!(
                    "dim {}: {}",
                    u.dim,
                    u.basis
                        .iter()
                        .map(|b| format!("({b})"))
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            }
        };
        let _ = writeln!(out, "algebra {} (dim {})", self.name, self.dim);
        let _ = writeln!(out, "basis: {}", self.basis.join(", "));
        let (p, n, z) = self.killing_signature;
        let _ = writeln!(out, "Killing signature: (+{p}, -{n}, 0:{z})");
        let _ = writeln!(out, "derived series dims: {:?}", self.derived_series);
        let _ = writeln!(out, "lower central series dims: {:?}", self.lower_central_series);
        let _ = writeln!(out);
        let rows: [(&str, &SubspaceReport); 15] = [
            ("radical r", &self.radical),
            ("nilradical n", &self.nilradical),
            ("Levi subalgebra s", &self.levi),
            ("compact part s_c", &self.compact_part),
            ("noncompact part s_nc", &self.noncompact_part),
            ("c(n)", &self.center_of_nilradical),
            ("c_g(n)", &self.centralizer_of_nilradical),
            ("c_s(r)", &self.c_s_r),
            ("c_sc(r)", &self.c_sc_r),
            ("c_snc(r)", &self.c_snc_r),
            ("c(r)", &self.center_of_radical),
            ("W = c_c(n)(s_nc)", &self.w),
            ("bounded: c_sc(r)", &self.bounded_semisimple),
            ("bounded: v", &self.bounded_abelian),
            ("bounded subalgebra b", &self.bounded),
        ];
        for (name, u) in rows {
            let _ = writeln!(out, "{name:<22} {}", sub(u));
        }
        if !self.simple_ideals.is_empty() {
            let _ = writeln!(out, "\nsimple ideals of s:");
            for i in &self.simple_ideals {
                let (p, n, z) = i.signature;
                let kind = if i.compact { "compact" } else { "noncompact" };
                let _ = writeln!(out, "  {kind:<10} (+{p}, -{n}, 0:{z})  {}", sub(&i.subspace));
            }
        }
        if !self.weight_components.is_empty() {
            let _ = writeln!(out, "\nweight components on W:");
            for w in &self.weight_components {
                let _ = writeln!(
                    out,
                    "  {:<18} ad(u_i) factors [{}]  {}",
                    w.class,
                    w.factors.join(", "),
                    sub(&w.subspace)
                );
            }
        }
        let _ = writeln!(out, "\nbasis vectors:");
        for v in &self.vectors {
            let status = if v.bounded { "bounded" } else { "unbounded" };
            let _ = write!(
                out,
                "  {:<6} {:<9} Xs in c_sc(r): {:<5}  Xr in c(n): {:<5}  imaginary spectrum: {:<5}  char poly: {}",
                v.label, status, v.xs_in_c_sc_r, v.xr_in_c_n, v.spectrum_imaginary, v.char_poly
            );
            if let Some(w) = &v.escape_witness {
                let _ = write!(out, "\n         escapes along {}: {}", w.direction, w.polynomial);
            }
            if let (Some(o), Some(sup)) = (v.oracle, v.oracle_sup_norm) {
                let _ = write!(out, "\n         oracle: {o} (sup {sup:.6e})");
            }
            let _ = writeln!(out);
        }
        let failed: Vec<&str> = self
            .certificates
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        let _ = writeln!(
            out,
            "\ncertificates: {} checks, {}",
            self.certificates.len(),
            if failed.is_empty() {
                "all passed".to_string()
            } else {
                format!("FAILED: {}", failed.join("; "))
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn analyze_examples() {
        let r = analyze(&catalog("so3_sl2_h3", None).unwrap()).unwrap();
        assert_eq!(r.bounded.dim, 4);
        let r = analyze(&catalog("sl2_semidirect_R2", None).unwrap()).unwrap();
        assert_eq!(r.bounded.dim, 0);
        let r = analyze(&catalog("abelian", Some(2)).unwrap()).unwrap();
        assert_eq!(r.bounded.dim, 2);
        assert_eq!(r.derived_series, vec![2, 0]);
        assert_eq!(r.lower_central_series, vec![2, 0]);
    }

    #[test]
    fn json_round_trip() {
        let opts = AnalyzeOptions {
            walk_steps: Some(500),
            seed: 3,
        };
        for name in ["oscillator", "so3_sl2_h3", "spiral"] {
            let r = analyze_with(&catalog(name, None).unwrap(), &opts).unwrap();
            assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
            assert!(r.to_text().contains("bounded subalgebra b"));
        }
    }
}
