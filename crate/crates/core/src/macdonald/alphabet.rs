//! Signed alphabets of q,t monomials and plethystic evaluation of `e_r` and `h_r` on them.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::qt::{q_int, EvalPoint, QtPoly};

use super::partition::m_poly;

/// A finite signed multiset of monomials `±q^a t^b`, stored as the polynomial that sums it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialAlphabet(QtPoly);

impl MonomialAlphabet {
    pub fn from_poly(p: QtPoly) -> Self {
        Self(p)
    }

    pub fn as_poly(&self) -> &QtPoly {
        &self.0
    }

    pub fn one() -> Self {
        Self(QtPoly::one())
    }

    /// `M = (1 - q)(1 - t)`.
    pub fn m() -> Self {
        Self(m_poly())
    }

    /// `[r]_q = 1 + q + ... + q^{r-1}`.
    pub fn q_integer(r: u32) -> Self {
        Self(q_int(r as i64).unwrap_or_default())
    }

    /// The alphabet with `q -> q^j`, `t -> t^j`.
    pub fn power_map(&self, j: u32) -> Self {
        Self(self.0.power_map(j))
    }

    /// `p_j[A]` at the point.
    pub fn power_sum(&self, j: u32, at: &EvalPoint) -> BigRational {
        let (qj, tj) = (Pow::pow(&at.q, j), Pow::pow(&at.t, j));
        self.0.eval(&qj, &tj)
    }

    /// `p_1[A], ..., p_r[A]` at the point.
    pub fn power_sums(&self, r: u32, at: &EvalPoint) -> Vec<BigRational> {
        (1..=r).map(|j| self.power_sum(j, at)).collect()
    }

    /// `e_r[A]` at the point; zero for negative `r`.
    pub fn e(&self, r: i64, at: &EvalPoint) -> BigRational {
        pleth_eh(EhKind::E, r, self, at)
    }

    /// `h_r[A]` at the point; zero for negative `r`.
    pub fn h(&self, r: i64, at: &EvalPoint) -> BigRational {
        pleth_eh(EhKind::H, r, self, at)
    }
}

impl Add for &MonomialAlphabet {
    type Output = MonomialAlphabet;
    fn add(self, rhs: &MonomialAlphabet) -> MonomialAlphabet {
        MonomialAlphabet(&self.0 + &rhs.0)
    }
}

impl Sub for &MonomialAlphabet {
    type Output = MonomialAlphabet;
    fn sub(self, rhs: &MonomialAlphabet) -> MonomialAlphabet {
        MonomialAlphabet(&self.0 - &rhs.0)
    }
}

impl Mul for &MonomialAlphabet {
    type Output = MonomialAlphabet;
    fn mul(self, rhs: &MonomialAlphabet) -> MonomialAlphabet {
        MonomialAlphabet(&self.0 * &rhs.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EhKind {
    E,
    H,
}

/// `e_r[A]` or `h_r[A]` at the point through the Newton identities.
pub fn pleth_eh(kind: EhKind, r: i64, a: &MonomialAlphabet, at: &EvalPoint) -> BigRational {
    if r < 0 {
        return BigRational::zero();
    }
    let p = a.power_sums(r as u32, at);
    newton(kind, &p)[r as usize].clone()
}

/// `[f_0, ..., f_r]` for `f = e` or `h` from the power sums `p_1..p_r`.
pub fn newton(kind: EhKind, p: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for n in 1..=p.len() {
        let mut acc = BigRational::zero();
        for i in 1..=n {
            let term = &out[n - i] * &p[i - 1];
            if kind == EhKind::E && i % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push(acc / BigRational::from_integer(BigInt::from(n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::Partition;

    fn pt() -> EvalPoint {
        EvalPoint::integers(3, 101, 0)
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn spec_style_examples() {
        let at = pt();
        let b2 = Partition::new(vec![2]).unwrap().b();
        assert_eq!(b2.e(2, &at), int(3));
        assert_eq!(MonomialAlphabet::m().e(1, &at), int((1 - 3) * (1 - 101)));
        let b21 = Partition::new(vec![2, 1]).unwrap().b();
        assert_eq!((&b21 - &MonomialAlphabet::one()).e(1, &at), int(3 + 101));
        assert_eq!(b21.e(-1, &at), int(0));
        assert_eq!(b21.h(0, &at), int(1));
    }

    #[test]
    fn elementary_of_positive_alphabet_matches_products() {
        let at = pt();
        let b = Partition::new(vec![2, 1]).unwrap().b();
        assert_eq!(b.e(3, &at), int(3 * 101));
        assert_eq!(b.e(2, &at), int(3 + 101 + 3 * 101));
        assert_eq!(b.e(4, &at), int(0));
        assert_eq!(b.h(2, &at), int(1 + 9 + 101 * 101 + 3 + 101 + 3 * 101));
    }

    #[test]
    fn negative_letter_inverts_generating_function() {
        let at = pt();
        let minus_q = MonomialAlphabet::from_poly(QtPoly::monomial(-1, 1, 0));
        assert_eq!(minus_q.h(3, &at), int(0));
        assert_eq!(minus_q.h(1, &at), int(-3));
        assert_eq!(minus_q.e(3, &at), int(-27));
    }
}
