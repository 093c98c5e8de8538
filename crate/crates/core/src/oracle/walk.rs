//! Seeded random walks on adjoint orbits.
//!
//! Each step applies `exp(t ad(e_i))` for a uniformly chosen basis vector
//! `e_i` and `t` uniform in `[-T, T]` to the current orbit point, so after
//! `k` steps the point is `Ad(g_k) X` with `g_k` a product of generator
//! exponentials. Exponentials are evaluated as a tabulated `exp(c ad e_i)`
//! at the nearest grid center times a short Taylor series for the remainder.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{matrix_to_f64, FloatAlgebra, Projection, Verdict};
use crate::error::{Error, Result};
use crate::linalg::rational::to_f64;
use crate::linalg::Rational;

/// Grid centers per generator for the tabulated exponentials.
const CENTERS: usize = 32;
/// Upper bound on the number of trace samples.
const TRACE_LEN: usize = 1000;

#[derive(Clone, Debug)]
pub struct WalkConfig {
    pub steps: usize,
    /// Step scale `T`: times are drawn from `[-T, T]`.
    pub scale: f64,
    pub seed: u64,
    pub projection: Option<Projection>,
    /// Growth ratio over the reference norm that counts as unbounded.
    pub growth_threshold: f64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig {
            steps: 100_000,
            scale: 1.0,
            seed: 0,
            projection: None,
            growth_threshold: 1e3,
        }
    }
}

impl WalkConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        if !(self.growth_threshold > 1.0) {
            return Err(Error::InvalidParameter(
                "growth threshold must exceed 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitWalkResult {
    pub sup_norm: f64,
    /// Maximum norm over consecutive windows of steps, starting with the
    /// initial norm.
    pub norm_trace: Vec<f64>,
    pub verdict: Verdict,
    pub seed: u64,
    /// Norm the growth ratio is measured against.
    pub reference_norm: f64,
    /// Steps performed; fewer than requested when growth stopped the walk.
    pub steps_taken: usize,
}

impl OrbitWalkResult {
    pub fn growth(&self) -> f64 {
        if self.reference_norm == 0.0 {
            0.0
        } else {
            self.sup_norm / self.reference_norm
        }
    }
}

fn mat_vec(m: &[f64], v: &[f64], out: &mut [f64]) {
    let n = v.len();
    for (i, o) in out.iter_mut().enumerate() {
        let row = &m[i * n..(i + 1) * n];
        *o = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn amax(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

struct Generator {
    ad: Vec<f64>,
    table: Vec<Vec<f64>>,
}

/// Random walk estimate of `sup_g ||pr_m(Ad(g) X)||`.
pub fn orbit_sup_walk(fa: &FloatAlgebra, x: &[Rational], cfg: &WalkConfig) -> Result<OrbitWalkResult> {
    cfg.validate()?;
    let n = fa.dim;
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let proj = cfg.projection.as_ref().map(|p| matrix_to_f64(&p.matrix));
    let mut scratch = vec![0.0; n];
    let measure = |v: &[f64], scratch: &mut Vec<f64>| match &proj {
        Some(p) => {
            mat_vec(p, v, scratch);
            norm2(scratch)
        }
        None => norm2(v),
    };

    let mut v: Vec<f64> = x.iter().map(to_f64).collect();
    let initial = measure(&v, &mut scratch);
    let reference = if initial > 0.0 { initial } else { norm2(&v) };
    let mut result = OrbitWalkResult {
        sup_norm: initial,
        norm_trace: vec![initial],
        verdict: Verdict::BoundedLikely,
        seed: cfg.seed,
        reference_norm: reference,
        steps_taken: 0,
    };
    if reference == 0.0 {
        return Ok(result);
    }

    let t_max = cfg.scale;
    let width = 2.0 * t_max / CENTERS as f64;
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let ad = fa.ad_basis[i].clone();
        let table = if ad.iter().all(|a| *a == 0.0) {
            Vec::new()
        } else {
            let mut y = vec![0.0; n];
            y[i] = 1.0;
            (0..CENTERS)
                .map(|m| {
                    let c = -t_max + (m as f64 + 0.5) * width;
                    fa.ad_exp(&y, c).map(|e| {
                        // row-major copy
                        let mut out = vec![0.0; n * n];
                        for r in 0..n {
                            for s in 0..n {
                                out[r * n + s] = e[(r, s)];
                            }
                        }
                        out
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        gens.push(Generator { ad, table });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let window = (cfg.steps / TRACE_LEN).max(1);
    let mut window_max = 0.0f64;
    let mut acc = vec![0.0; n];
    let mut term = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    for step in 1..=cfg.steps {
        let i = rng.gen_range(0..n);
        let t: f64 = rng.gen_range(-t_max..=t_max);
        let g = &gens[i];
        if !g.table.is_empty() {
            let m = (((t + t_max) / width) as usize).min(CENTERS - 1);
            let delta = t - (-t_max + (m as f64 + 0.5) * width);
            acc.copy_from_slice(&v);
            term.copy_from_slice(&v);
            for j in 1..40 {
                mat_vec(&g.ad, &term, &mut tmp);
                let f = delta / j as f64;
                for (a, b) in term.iter_mut().zip(&tmp) {
                    *a = b * f;
                }
                for (a, b) in acc.iter_mut().zip(&term) {
                    *a += b;
                }
                if amax(&term) <= 1e-17 * amax(&acc) {
                    break;
                }
            }
            mat_vec(&g.table[m], &acc, &mut v);
        }
        let cur = measure(&v, &mut scratch);
        result.steps_taken = step;
        let escaped = !cur.is_finite() || cur > cfg.growth_threshold * reference;
        let cur = if cur.is_finite() { cur } else { f64::MAX };
        window_max = window_max.max(cur);
        result.sup_norm = result.sup_norm.max(cur);
        if step % window == 0 || escaped || step == cfg.steps {
            result.norm_trace.push(window_max);
            window_max = 0.0;
        }
        if escaped {
            result.verdict = Verdict::UnboundedEmpirical;
            break;
        }
    }
    Ok(result)
}

/// Combines independent walks: maximum sup norm, strongest verdict,
/// concatenated traces.
pub fn merge(results: &[OrbitWalkResult]) -> Option<OrbitWalkResult> {
    let first = results.first()?;
    let mut out = first.clone();
    for r in &results[1..] {
        out.sup_norm = out.sup_norm.max(r.sup_norm);
        out.verdict = out.verdict.max(r.verdict);
        out.norm_trace.extend_from_slice(&r.norm_trace);
        out.reference_norm = out.reference_norm.max(r.reference_norm);
        out.steps_taken += r.steps_taken;
    }
    Some(out)
}
