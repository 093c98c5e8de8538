//! Factorization of rational polynomials into irreducibles.
//!
//! Squarefree decomposition first; each squarefree part is made primitive
//! over the integers, factored modulo a small prime (distinct-degree then
//! Cantor–Zassenhaus splitting), Hensel-lifted past the Mignotte bound and
//! recombined by trial division.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Number of admissible primes tried before settling on the one with the
/// fewest modular factors.
const PRIME_CANDIDATES: usize = 3;

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// coefficients. `p = lc(p) * prod f^m`.
pub fn factor_rationals(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (mult, part) in p.squarefree_decomposition() {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| poly_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Distinct monic irreducible factors of the squarefree part.
pub fn irreducible_factors(p: &Polynomial) -> Result<Vec<Polynomial>> {
    Ok(factor_rationals(p)?.into_iter().map(|(f, _)| f).collect())
}

fn poly_order(a: &Polynomial, b: &Polynomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for i in (0..=a.degree()).rev() {
            let o = a.coeff(i).cmp(&b.coeff(i));
            if o.is_ne() {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn factor_squarefree(p: &Polynomial) -> Vec<Polynomial> {
    if p.degree() == 0 {
        return Vec::new();
    }
    if p.degree() == 1 {
        return vec![p.monic()];
    }
    let (_, prim) = p.primitive_integer();
    zassenhaus(&prim)
        .into_iter()
        .map(|f| Polynomial::from_integers(&f).monic())
        .collect()
}

// ---------- integer polynomial helpers ----------

type IntPoly = Vec<BigInt>;

fn trim(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn sym_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(v: &[BigInt]) -> IntPoly {
    let mut g = content(v);
    if g.is_zero() {
        return Vec::new();
    }
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

/// Exact division over the integers, `None` if it does not divide.
fn int_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    if b.is_empty() {
        return None;
    }
    if a.len() < b.len() {
        return a.is_empty().then(Vec::new);
    }
    let lb = b.last().expect("nonempty");
    let mut rem: IntPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        q[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(q))
}

// ---------- arithmetic in F_p[x] ----------

type ModPoly = Vec<u64>;

fn mtrim(mut v: ModPoly) -> ModPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mdeg(v: &[u64]) -> usize {
    v.len().saturating_sub(1)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn msub(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    mtrim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn mmul(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    mtrim(out)
}

fn mdivrem(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(*b.last().expect("nonempty"), p);
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * d % p) % p;
        }
        q[k] = c;
    }
    rem.truncate(db);
    (mtrim(q), mtrim(rem))
}

fn mmonic(a: &[u64], p: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn mgcd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = mdivrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    mmonic(&a, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn mext_gcd(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = mdivrem(&r0, &r1, p);
        let s2 = msub(&s0, &mmul(&q, &s1, p), p);
        let t2 = msub(&t0, &mmul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "inputs must be coprime");
    let inv = inv_mod(r0[0], p);
    let scale = |v: &[u64]| mtrim(v.iter().map(|&c| c * inv % p).collect());
    (scale(&s0), scale(&t0))
}

fn mderivative(a: &[u64], p: u64) -> ModPoly {
    mtrim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn mpowmod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> ModPoly {
    let mut result: ModPoly = vec![1];
    let base = mdivrem(base, modulus, p).1;
    for i in (0..exp.bits()).rev() {
        result = mdivrem(&mmul(&result, &result, p), modulus, p).1;
        if exp.bit(i) {
            result = mdivrem(&mmul(&result, &base, p), modulus, p).1;
        }
    }
    result
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    mtrim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("small residue"))
            .collect(),
    )
}

/// Monic irreducible factors of a squarefree monic polynomial mod `p`.
fn factor_mod_p(f: &[u64], p: u64) -> Vec<ModPoly> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ (f.len() as u64) << 32);
    let x: ModPoly = vec![0, 1];
    let mut rest = f.to_vec();
    let mut h = x.clone();
    let mut d = 1;
    let pbig = BigUint::from(p);
    while rest.len() > 1 && 2 * d <= mdeg(&rest) {
        h = mpowmod(&h, &pbig, &rest, p);
        let g = mgcd(&msub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = mdivrem(&rest, &g, p).0;
            h = mdivrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(mmonic(&rest, p));
    }
    out
}

fn equal_degree_split(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if mdeg(g) == d {
        out.push(mmonic(g, p));
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: ModPoly = mtrim((0..mdeg(g)).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = msub(&mpowmod(&a, &exp, g, p), &[1], p);
        let h = mgcd(&b, g, p);
        if h.len() > 1 && h.len() < g.len() {
            let other = mdivrem(g, &h, p).0;
            equal_degree_split(&h, d, p, rng, out);
            equal_degree_split(&other, d, p, rng, out);
            return;
        }
    }
}

// ---------- Hensel lifting ----------

fn to_int_poly(v: &[u64]) -> IntPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ g h (mod p)` with `g` monic and `lc(h) = lc(f)` to a
/// factorization modulo `p^k`.
fn hensel_two(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (_, t) = mext_gcd(g, h, p);
    let pb = BigInt::from(p);
    let lc = f.last().expect("nonempty").clone();
    let mut gi = to_int_poly(g);
    let mut hi = to_int_poly(h);
    *hi.last_mut().expect("nonempty") = lc.clone();
    let mut modulus = pb.clone();
    for _ in 1..k {
        let diff = int_sub(f, &int_mul(&gi, &hi));
        let e: IntPoly = diff.iter().map(|c| c / &modulus).collect();
        let e_p = reduce_mod_p(&e, p);
        let dg = mdivrem(&mmul(&t, &e_p, p), g, p).1;
        let dh = mdivrem(&msub(&e_p, &mmul(h, &dg, p), p), g, p).0;
        let next = &modulus * &pb;
        for (i, c) in dg.iter().enumerate() {
            gi[i] = (&gi[i] + &modulus * BigInt::from(*c)).mod_floor(&next);
        }
        let top = hi.len() - 1;
        for (i, c) in dh.iter().enumerate() {
            hi[i] += &modulus * BigInt::from(*c);
        }
        for c in hi.iter_mut().take(top) {
            *c = c.mod_floor(&next);
        }
        modulus = next;
    }
    (gi, hi)
}

/// Lifts the monic modular factors of `f` to monic factors mod `p^k`.
fn hensel_multi(f: &[BigInt], factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let modulus = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc = f.last().expect("nonempty");
        let inv = lc
            .modinv(&modulus)
            .expect("leading coefficient is a unit modulo p^k");
        return vec![f.iter().map(|c| (c * &inv).mod_floor(&modulus)).collect()];
    }
    let lc_p = reduce_mod_p(&[f.last().expect("nonempty").clone()], p)[0];
    let g = &factors[0];
    let h = factors[1..]
        .iter()
        .fold(vec![lc_p], |acc, q| mmul(&acc, q, p));
    let (gl, hl) = hensel_two(f, g, &h, p, k);
    let mut out = vec![gl];
    out.extend(hensel_multi(&hl, &factors[1..], p, k));
    out
}

// ---------- Zassenhaus ----------

fn zassenhaus(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() - 1;
    let lc = f.last().expect("nonempty").clone();

    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for &p in &PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = mmonic(&reduce_mod_p(f, p), p);
        if mdeg(&fp) != n || mgcd(&fp, &mderivative(&fp, p), p).len() != 1 {
            continue;
        }
        let factors = factor_mod_p(&fp, p);
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == PRIME_CANDIDATES {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");

    // Factor coefficients of lc * h / lc(h) are bounded by |lc| 2^n ||f||_1.
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel_multi(f, &modular, p, k);
    recombine(f.to_vec(), lifted, &modulus)
}

fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.last().expect("nonempty").clone();
        for subset in combinations(lifted.len(), size) {
            let mut cand: IntPoly = vec![lc.clone()];
            for &i in &subset {
                cand = int_mul(&cand, &lifted[i]);
                cand = cand.iter().map(|c| c.mod_floor(modulus)).collect();
            }
            let cand = primitive(&cand.iter().map(|c| sym_mod(c, modulus)).collect::<Vec<_>>());
            if let Some(q) = int_exact_div(&f, &cand) {
                found.push(cand);
                f = q;
                let mut idx = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        found.push(primitive(&f));
    }
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Reconstructs `lc * prod f^m`; used to check factorizations.
pub fn expand_factorization(lc: &Rational, factors: &[(Polynomial, usize)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::constant(lc.clone()), |acc, (f, m)| &acc * &f.pow(*m))
}
