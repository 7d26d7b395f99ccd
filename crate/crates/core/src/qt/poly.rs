//! Sparse bivariate polynomials in `q` and `t` with arbitrary precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QtError;

/// Exponent pair `(q_exp, t_exp)`.
pub type Exp = (u32, u32);

/// A polynomial in `q, t` over the integers. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), c.into());
        p
    }

    /// Builds a polynomial from `(q_exp, t_exp, coeff)` triples; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term((a, b), c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_q(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn transpose(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(x, y), v)| ((x + a, y + b), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q -> q^j`, `t -> t^j`, keeping coefficients (the power-sum plethysm `p_j[self]`).
    pub fn power_map(&self, j: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), v)| ((a * j, b * j), v.clone())).collect(),
        }
    }

    /// Exact evaluation at a rational point, summed over the common denominator
    /// `den(q)^{deg_q} den(t)^{deg_t}` so that only one reduction is made.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let (Some(dq), Some(dt)) = (self.deg_q(), self.deg_t()) else {
            return BigRational::zero();
        };
        let powers = |x: &BigInt, d: u32| {
            let mut v = Vec::with_capacity(d as usize + 1);
            v.push(BigInt::one());
            for i in 0..d as usize {
                v.push(&v[i] * x);
            }
            v
        };
        let (qn, qd) = (powers(q.numer(), dq), powers(q.denom(), dq));
        let (tn, td) = (powers(t.numer(), dt), powers(t.denom(), dt));
        let mut acc = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            let (a, b) = (a as usize, b as usize);
            acc += c * &qn[a] * &qd[dq as usize - a] * &tn[b] * &td[dt as usize - b];
        }
        BigRational::new(acc, &qd[dq as usize] * &td[dt as usize])
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| e.1 == 0)
    }

    /// Exact division of polynomials in `q` alone; fails if either side involves `t` or the
    /// division leaves a remainder.
    pub fn div_exact_q(&self, divisor: &QtPoly) -> Result<QtPoly, QtError> {
        if !self.is_q_only() || !divisor.is_q_only() {
            return Err(QtError::NotExact("division requires polynomials in q only".into()));
        }
        let dlead_exp = divisor.deg_q().ok_or(QtError::DivisionByZero)?;
        let dlead = divisor.coeff(dlead_exp, 0);
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        while let Some(rdeg) = rem.deg_q() {
            if rdeg < dlead_exp {
                break;
            }
            let rc = rem.coeff(rdeg, 0);
            if !(&rc % &dlead).is_zero() {
                break;
            }
            let factor = QtPoly::monomial(&rc / &dlead, rdeg - dlead_exp, 0);
            rem = &rem - &(&factor * divisor);
            quot = &quot + &factor;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(QtError::NotExact(format!("remainder {rem}")))
        }
    }

    /// CSV with header `q_exp,t_exp,coeff`, rows in lexicographic exponent order.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("q_exp,t_exp,coeff\n");
        for (&(a, b), c) in &self.terms {
            s.push_str(&format!("{a},{b},{c}\n"));
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self, QtError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next() {
            Some(h) if h.trim() == "q_exp,t_exp,coeff" => {}
            other => return Err(QtError::Parse(format!("bad header {other:?}"))),
        }
        let mut p = QtPoly::zero();
        for line in lines {
            let f: Vec<&str> = line.split(',').map(str::trim).collect();
            if f.len() != 3 {
                return Err(QtError::Parse(format!("bad row {line:?}")));
            }
            let a = f[0].parse::<u32>().map_err(|e| QtError::Parse(e.to_string()))?;
            let b = f[1].parse::<u32>().map_err(|e| QtError::Parse(e.to_string()))?;
            let c = f[2].parse::<BigInt>().map_err(|e| QtError::Parse(e.to_string()))?;
            p.add_term((a, b), c);
        }
        Ok(p)
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match (a, b) {
                (0, 0) => String::new(),
                _ => {
                    let mut m = Vec::new();
                    match a {
                        0 => {}
                        1 => m.push("q".to_string()),
                        _ => m.push(format!("q^{a}")),
                    }
                    match b {
                        0 => {}
                        1 => m.push("t".to_string()),
                        _ => m.push(format!("t^{b}")),
                    }
                    m.join("*")
                }
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QtPoly {
    type Output = QtPoly;
    fn add(mut self, rhs: QtPoly) -> QtPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Sub for QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: QtPoly) -> QtPoly {
        &self - &rhs
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl<'a> Mul<&'a QtPoly> for &'a QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: QtPoly) -> QtPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> Self {
        let mut acc = QtPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec((0u32..4, 0u32..4, -5i64..6), 0..6).prop_map(QtPoly::from_terms)
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn display_and_csv() {
        let p = QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(p.to_string(), "1 + t + q");
        assert_eq!(p.to_csv(), "q_exp,t_exp,coeff\n0,0,1\n0,1,1\n1,0,1\n");
        assert_eq!(QtPoly::from_csv(&p.to_csv()).unwrap(), p);
        assert_eq!(QtPoly::from_terms([(2, 1, -3)]).to_string(), "-3*q^2*t");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = QtPoly::q();
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn exact_q_division() {
        // (1 + q)(1 + q + q^2) / (1 + q)
        let a = QtPoly::from_terms([(0, 0, 1), (1, 0, 1)]);
        let b = QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (2, 0, 1)]);
        assert_eq!((&a * &b).div_exact_q(&a).unwrap(), b);
        assert!(b.div_exact_q(&a).is_err());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &QtPoly::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), q in 2i64..7, t in 11i64..17) {
            let (q, t) = (r(q), r(t));
            prop_assert_eq!((&a * &b).eval(&q, &t), a.eval(&q, &t) * b.eval(&q, &t));
            prop_assert_eq!((&a + &b).eval(&q, &t), a.eval(&q, &t) + b.eval(&q, &t));
        }

        #[test]
        fn transpose_is_involution(a in small_poly()) {
            prop_assert_eq!(a.transpose().transpose(), a);
        }
    }
}
