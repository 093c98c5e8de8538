//! Analysis commutes with change of basis: every canonical subspace of the
//! transformed algebra maps back to the original one.

use liebound::bounded::Analysis;
use liebound::catalog::{self, random_basis_change};
use liebound::{Element, Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pull_back(u: &Subspace, p: &Matrix) -> Subspace {
    u.image_under(p)
}

#[test]
fn analysis_pulls_back_under_basis_change() {
    for g in catalog::all() {
        let base = Analysis::compute(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for seed in 0..20 {
            let (h, p) = random_basis_change(&g, seed);
            let an = Analysis::compute(&h).unwrap();
            let name = g.name();
            let pairs: [(&str, &Subspace, &Subspace); 10] = [
                ("radical", &an.structure.radical, &base.structure.radical),
                ("nilradical", &an.structure.nilradical, &base.structure.nilradical),
                ("c(n)", &an.chain.c_n, &base.chain.c_n),
                ("c_g(n)", &an.chain.c_g_n, &base.chain.c_g_n),
                ("c_s(r)", &an.chain.c_s_r, &base.chain.c_s_r),
                ("c_sc(r)", &an.chain.c_sc_r, &base.chain.c_sc_r),
                ("c_snc(r)", &an.chain.c_snc_r, &base.chain.c_snc_r),
                ("W", &an.chain.w, &base.chain.w),
                ("v", &an.bounded.abelian_part, &base.bounded.abelian_part),
                ("b", &an.bounded.total, &base.bounded.total),
            ];
            for (what, new, old) in pairs {
                assert_eq!(&pull_back(new, &p), old, "{name} seed {seed}: {what}");
            }
            assert_eq!(an.structure.levi_factor().dim(), base.structure.levi_factor().dim());
            assert_eq!(
                an.structure.split.compact_part.dim(),
                base.structure.split.compact_part.dim()
            );

            let v: Vec<i64> = (0..g.dim()).map(|_| rng.gen_range(-3..=3)).collect();
            let v = Element::from_i64(&v);
            let old = Element::new(p.mul_vec(&v));
            let a = an.classify(&h, &v).unwrap();
            let b = base.classify(&g, &old).unwrap();
            assert_eq!(a.bounded, b.bounded, "{name} seed {seed}");
            assert_eq!(a.char_poly, b.char_poly);
            assert_eq!(a.spectrum_imaginary, b.spectrum_imaginary);
        }
    }
}
