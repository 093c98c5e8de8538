//! Cross-checks against independent computations: hand-written adjoint
//! matrices, permutation-expansion determinants, floating-point
//! eigenvalues, and numerically exponentiated orbits.

use liebound::catalog::{self, catalog};
use liebound::linalg::rational::{int, to_f64};
use liebound::linalg::{Matrix, Polynomial};
use liebound::oracle::escape::{escape_polynomial, nilpotency_class};
use liebound::oracle::{FloatAlgebra, Projection};
use liebound::structure::{nilradical, Structure};
use liebound::{Element, Subspace};
use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type IMat = Vec<Vec<i64>>;

fn imul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn itrace(a: &IMat) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

fn killing_from(ads: &[IMat]) -> IMat {
    ads.iter()
        .map(|a| ads.iter().map(|b| itrace(&imul(a, b))).collect())
        .collect()
}

fn as_matrix(a: &IMat) -> Matrix {
    let rows: Vec<&[i64]> = a.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64(&rows)
}

#[test]
fn killing_forms_from_hand_adjoints() {
    // sl2 in (h, e, f); column j is the image of basis vector j
    let ad_h = vec![vec![0, 0, 0], vec![0, 2, 0], vec![0, 0, -2]];
    let ad_e = vec![vec![0, 0, 1], vec![-2, 0, 0], vec![0, 0, 0]];
    let ad_f = vec![vec![0, -1, 0], vec![0, 0, 0], vec![2, 0, 0]];
    let b = killing_from(&[ad_h.clone(), ad_e.clone(), ad_f.clone()]);
    assert_eq!(b, vec![vec![8, 0, 0], vec![0, 0, 4], vec![0, 4, 0]]);
    let sl2 = catalog("sl2R", None).unwrap();
    assert_eq!(sl2.killing(), as_matrix(&b));
    for (i, a) in [ad_h, ad_e, ad_f].iter().enumerate() {
        assert_eq!(sl2.ad_basis(i), &as_matrix(a));
    }
    assert_eq!(sl2.killing().signature().unwrap(), (2, 1, 0));

    let ad1 = vec![vec![0, 0, 0], vec![0, 0, -1], vec![0, 1, 0]];
    let ad2 = vec![vec![0, 0, 1], vec![0, 0, 0], vec![-1, 0, 0]];
    let ad3 = vec![vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, 0]];
    let b = killing_from(&[ad1, ad2, ad3]);
    assert_eq!(b, vec![vec![-2, 0, 0], vec![0, -2, 0], vec![0, 0, -2]]);
    let so3 = catalog("so3", None).unwrap();
    assert_eq!(so3.killing(), as_matrix(&b));
    assert_eq!(so3.killing().signature().unwrap(), (0, 3, 0));

    assert!(catalog("heisenberg3", None).unwrap().killing().is_zero());
}

/// Polynomials over the integers, ascending coefficients.
fn padd(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn pmul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                rec(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `det(tI - A)` by the Leibniz formula.
fn leibniz_char_poly(a: &IMat) -> Vec<i64> {
    let n = a.len();
    let entry = |i: usize, j: usize| -> Vec<i64> {
        if i == j {
            vec![-a[i][j], 1]
        } else {
            vec![-a[i][j]]
        }
    };
    let mut total = vec![0];
    for (perm, sign) in permutations(n) {
        let mut term = vec![sign];
        for (i, &j) in perm.iter().enumerate() {
            term = pmul(&term, &entry(i, j));
        }
        total = padd(&total, &term);
    }
    while total.len() > 1 && *total.last().unwrap() == 0 {
        total.pop();
    }
    total
}

#[test]
fn char_poly_matches_leibniz_expansion() {
    // ad(t) on the oscillator
    let osc = catalog("oscillator", None).unwrap();
    let ad_t = osc.ad_basis(0);
    assert_eq!(ad_t.char_poly().unwrap(), Polynomial::from_i64(&[0, 0, 1, 0, 1]));
    let imat: IMat = (0..4)
        .map(|i| (0..4).map(|j| ad_t[(i, j)].to_integer().try_into().unwrap()).collect())
        .collect();
    assert_eq!(leibniz_char_poly(&imat), vec![0, 0, 1, 0, 1]);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let a: IMat = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let expected = Polynomial::from_i64(&leibniz_char_poly(&a));
        assert_eq!(as_matrix(&a).char_poly().unwrap(), expected);
    }
}

#[test]
fn signature_matches_float_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=n);
        // A^T D A with integer A (k x n) gives rank-deficient cases too
        let a: IMat = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let d: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
        let s: IMat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..k).map(|l| a[l][i] * d[l] * a[l][j]).sum())
                    .collect()
            })
            .collect();
        let f = DMatrix::from_fn(n, n, |i, j| s[i][j] as f64);
        let eig = SymmetricEigen::new(f).eigenvalues;
        let scale = eig.amax().max(1.0);
        let pos = eig.iter().filter(|&&e| e > 1e-9 * scale).count();
        let neg = eig.iter().filter(|&&e| e < -1e-9 * scale).count();
        assert_eq!(as_matrix(&s).signature().unwrap(), (pos, neg, n - pos - neg));
    }
}

fn ad_nilpotent_by_powers(ad: &Matrix) -> bool {
    ad.pow(ad.rows()).is_zero()
}

#[test]
fn nilradical_of_solvable_entries_is_the_ad_nilpotent_set() {
    for name in ["aff1", "heisenberg3", "e2cover", "oscillator", "spiral", "abelian"] {
        let g = catalog(name, None).unwrap();
        let n = nilradical(&g).unwrap();
        let dim = g.dim();
        let values = [-1i64, 0, 1, 2];
        let total = values.len().pow(dim as u32);
        for code in 0..total {
            let mut c = code;
            let coords: Vec<i64> = (0..dim)
                .map(|_| {
                    let v = values[c % values.len()];
                    c /= values.len();
                    v
                })
                .collect();
            let x = Element::from_i64(&coords);
            assert_eq!(
                ad_nilpotent_by_powers(&g.ad_vec(&x)),
                n.contains(&x),
                "{name}: {coords:?}"
            );
        }
    }
}

fn float_projected_orbit(
    fa: &FloatAlgebra,
    proj: Option<&Projection>,
    y: &[f64],
    x: &[f64],
) -> Vec<f64> {
    let e = fa.ad_exp(y, 1.0).unwrap();
    let moved = e * DVector::from_column_slice(x);
    match proj {
        Some(p) => {
            let n = fa.dim;
            let m = DMatrix::from_row_slice(n, n, &liebound::oracle::matrix_to_f64(&p.matrix));
            (m * moved).iter().copied().collect()
        }
        None => moved.iter().copied().collect(),
    }
}

#[test]
fn escape_polynomials_agree_with_matrix_exponential() {
    let isotropies: Vec<(&str, Subspace)> = vec![
        ("e2cover", Subspace::coordinate(3, &[0])),
        ("so3_sl2_h3", Subspace::coordinate(9, &[0, 1, 2])),
        ("so3_semidirect_R3", Subspace::coordinate(6, &[2])),
    ];
    let mut checked = 0;
    for g in catalog::all() {
        let st = Structure::compute(&g).unwrap();
        let fa = FloatAlgebra::new(&g);
        let class = nilpotency_class(&g, &st.nilradical).unwrap();
        let mut projections = vec![None];
        for (name, h) in &isotropies {
            if *name == g.name() {
                projections.push(Some(Projection::new(&g, &st, h).unwrap()));
            }
        }
        for proj in &projections {
            for i in 0..g.dim() {
                let x = Element::basis(g.dim(), i);
                for y in st.nilradical.basis_vectors() {
                    let poly = escape_polynomial(&g, &y, &x, proj.as_ref()).unwrap();
                    assert!(poly.len() <= class + 1, "{}: degree exceeds class", g.name());
                    let exact_at_one: Vec<f64> = (0..g.dim())
                        .map(|k| poly.iter().map(|c| to_f64(&c[k])).sum())
                        .collect();
                    let yf: Vec<f64> = y.iter().map(to_f64).collect();
                    let numeric = float_projected_orbit(&fa, proj.as_ref(), &yf, &x.to_f64());
                    for (a, b) in exact_at_one.iter().zip(&numeric) {
                        assert!((a - b).abs() < 1e-8, "{}: {a} vs {b}", g.name());
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn jacobi_residual_by_hand() {
    // [e1,e2]=e3, [e1,e3]=e1: J(e1,e2,e3) = [e2,[e3,e1]] + [e3,[e1,e2]] = [e2,-e1] = e3
    let alg = liebound::LieAlgebra::from_i64(
        "bad",
        &["e1", "e2", "e3"],
        &[(0, 1, &[(2, 1)]), (0, 2, &[(0, 1)])],
    );
    let v = alg.validate();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].triple, (0, 1, 2));
    assert_eq!(v[0].residual, Element::new(vec![int(0), int(0), int(1)]));
}
