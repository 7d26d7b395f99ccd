//! q-integers, q-factorials and q-binomial coefficients.

use super::{QtError, QtPoly};

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: i64) -> Result<QtPoly, QtError> {
    if n < 0 {
        return Err(QtError::Domain(format!("q_int of negative {n}")));
    }
    Ok(QtPoly::from_terms((0..n as u32).map(|i| (i, 0, 1))))
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: i64) -> Result<QtPoly, QtError> {
    if n < 0 {
        return Err(QtError::Domain(format!("q_factorial of negative {n}")));
    }
    let mut acc = QtPoly::one();
    for i in 1..=n {
        acc = &acc * &q_int(i)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)` by exact division; zero when `n < k` or `k < 0`.
pub fn q_binomial(n: i64, k: i64) -> Result<QtPoly, QtError> {
    if n < 0 {
        return Err(QtError::Domain(format!("q_binomial with negative n = {n}")));
    }
    if k < 0 || n < k {
        return Ok(QtPoly::zero());
    }
    let den = &q_factorial(k)? * &q_factorial(n - k)?;
    q_factorial(n)?.div_exact_q(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_values() {
        assert_eq!(q_binomial(2, 1).unwrap(), QtPoly::from_terms([(0, 0, 1), (1, 0, 1)]));
        assert!(q_binomial(1, 2).unwrap().is_zero());
        assert_eq!(
            q_binomial(4, 2).unwrap(),
            QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 1), (4, 0, 1)])
        );
        assert!(q_int(0).unwrap().is_zero());
        assert_eq!(q_factorial(0).unwrap(), QtPoly::one());
        assert!(q_binomial(-1, 0).is_err());
    }

    #[test]
    fn pascal_recurrence() {
        // [n, k] = [n-1, k-1] + q^k [n-1, k]
        for n in 1..9 {
            for k in 1..n {
                let lhs = q_binomial(n, k).unwrap();
                let rhs = &q_binomial(n - 1, k - 1).unwrap() + &q_binomial(n - 1, k).unwrap().shift(k as u32, 0);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    proptest! {
        #[test]
        fn symmetric_and_specializes_to_binomial(n in 0i64..10, k in 0i64..10) {
            prop_assume!(k <= n);
            let b = q_binomial(n, k).unwrap();
            prop_assert_eq!(&b, &q_binomial(n, n - k).unwrap());
            prop_assert_eq!(b.at_one(), BigInt::from(binom(n as u64, k as u64)));
        }
    }
}
