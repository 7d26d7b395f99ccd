//! Formal quotients of q,t-polynomials, compared only through exact specialization.

use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::Zero;

use super::{EvalPoint, Pole, QtError, QtPoly};

#[derive(Clone, Debug)]
pub struct QtRational {
    num: QtPoly,
    den: QtPoly,
}

impl QtRational {
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self, QtError> {
        if den.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: QtPoly) -> Self {
        Self { num: p, den: QtPoly::one() }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn recip(&self) -> Result<Self, QtError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn eval(&self, at: &EvalPoint) -> Result<BigRational, Pole> {
        let d = self.den.eval(&at.q, &at.t);
        if d.is_zero() {
            return Err(Pole(at.to_string()));
        }
        Ok(self.num.eval(&at.q, &at.t) / d)
    }
}

impl Add for &QtRational {
    type Output = QtRational;
    fn add(self, rhs: &QtRational) -> QtRational {
        QtRational {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for &QtRational {
    type Output = QtRational;
    fn mul(self, rhs: &QtRational) -> QtRational {
        QtRational { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}
