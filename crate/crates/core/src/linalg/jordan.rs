//! Jordan–Chevalley decomposition over the rationals.

use super::matrix::Matrix;
use crate::error::{ensure, Result};

/// Splits `a = s + n` with `s` semisimple, `n` nilpotent and `s n = n s`.
///
/// Newton iteration `s <- s - p(s) p'(s)^{-1}` on the squarefree part `p`
/// of the characteristic polynomial; every iterate is a polynomial in `a`,
/// and the number of correct orders doubles each round.
pub fn jordan_chevalley(a: &Matrix) -> Result<(Matrix, Matrix)> {
    let p = a.char_poly()?.squarefree_part();
    let dp = p.derivative();
    let mut s = a.clone();
    for _ in 0..=a.rows().max(1) {
        let ps = s.eval_poly(&p);
        if ps.is_zero() {
            let n = a - &s;
            return Ok((s, n));
        }
        let inv = s
            .eval_poly(&dp)
            .inverse()
            .ok_or_else(|| crate::Error::Verification("p'(S) is singular".into()))?;
        s = &s - &(&ps * &inv);
    }
    ensure(false, || "Newton iteration did not converge".into())?;
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(jordan_chevalley(&n).unwrap(), (Matrix::zeros(2, 2), n.clone()));

        let d = Matrix::from_i64(&[&[1, 1], &[0, 2]]);
        assert_eq!(jordan_chevalley(&d).unwrap(), (d.clone(), Matrix::zeros(2, 2)));

        let j = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(jordan_chevalley(&j).unwrap(), (Matrix::identity(2), n));
    }

    #[test]
    fn rotation_with_nilpotent_block() {
        // rotation generator on a 2x2 block plus a Jordan block at 0
        let a = Matrix::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 0, 0],
        ]);
        let (s, n) = jordan_chevalley(&a).unwrap();
        assert!(n.is_nilpotent());
        assert_eq!(&s * &n, &n * &s);
        assert!(s.minimal_poly().unwrap().is_squarefree());
        assert_eq!(&s + &n, a);
    }
}
