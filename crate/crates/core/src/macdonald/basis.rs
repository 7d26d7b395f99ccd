//! Homogeneous symmetric functions in the monomial basis and exact changes of basis.

use std::collections::HashMap;
use std::ops::{Add, Mul};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qt::EvalPoint;

use super::{MacError, MonomialAlphabet, Partition};

/// The classical bases of the degree `d` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Complete,
    Elementary,
    PowerSum,
}

type Matrix = Vec<Vec<BigRational>>;

/// Transition data for one degree. Row `μ` of `to_m[b]` expands `b_μ` in the monomial basis;
/// `from_m[b]` is its inverse.
#[derive(Debug)]
pub struct Transitions {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_m: HashMap<Basis, Matrix>,
    from_m: HashMap<Basis, Matrix>,
}

impl Transitions {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn to_monomial(&self, b: Basis) -> &Matrix {
        &self.to_m[&b]
    }

    pub fn from_monomial(&self, b: Basis) -> &Matrix {
        &self.from_m[&b]
    }
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Number of matrices with entries in `0..=max` having the given row and column sums.
fn count_matrices(rows: &[u32], cols: &mut [u32], max: u32) -> u64 {
    let Some((&first, rest)) = rows.split_first() else {
        return cols.iter().all(|&c| c == 0) as u64;
    };
    fn fill(row: u32, j: usize, cols: &mut [u32], max: u32, rest: &[u32]) -> u64 {
        if j == cols.len() {
            return if row == 0 { count_matrices(rest, cols, max) } else { 0 };
        }
        let mut total = 0;
        for v in 0..=row.min(cols[j]).min(max) {
            cols[j] -= v;
            total += fill(row - v, j + 1, cols, max, rest);
            cols[j] += v;
        }
        total
    }
    fill(first, 0, cols, max, rest)
}

/// Number of ways to distribute the parts of `mu` into blocks whose sums are the parts of `lambda`.
fn count_block_maps(mu: &[u32], blocks: &mut [u32]) -> u64 {
    let Some((&first, rest)) = mu.split_first() else {
        return blocks.iter().all(|&b| b == 0) as u64;
    };
    let mut total = 0;
    for j in 0..blocks.len() {
        if blocks[j] >= first {
            blocks[j] -= first;
            total += count_block_maps(rest, blocks);
            blocks[j] += first;
        }
    }
    total
}

fn to_monomial_matrix(b: Basis, parts: &[Partition]) -> Matrix {
    parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| {
                    let mut cols = lambda.parts().to_vec();
                    let c = match b {
                        Basis::Monomial => (mu == lambda) as u64,
                        Basis::Complete => count_matrices(mu.parts(), &mut cols, u32::MAX),
                        Basis::Elementary => count_matrices(mu.parts(), &mut cols, 1),
                        Basis::PowerSum => count_block_maps(mu.parts(), &mut cols),
                    };
                    int(c)
                })
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix over the rationals by Gauss–Jordan elimination.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Transition matrices for degree `d`, computed once and shared.
pub fn transitions(d: u32) -> Arc<Transitions> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Transitions>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("transition cache poisoned").get(&d) {
        return t.clone();
    }
    let partitions = Partition::all(d);
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut to_m = HashMap::new();
    let mut from_m = HashMap::new();
    for b in [Basis::Monomial, Basis::Complete, Basis::Elementary, Basis::PowerSum] {
        let a = to_monomial_matrix(b, &partitions);
        from_m.insert(b, invert(&a).expect("transition matrices are invertible"));
        to_m.insert(b, a);
    }
    let t = Arc::new(Transitions { partitions, index, to_m, from_m });
    cache.lock().expect("transition cache poisoned").insert(d, t.clone());
    t
}

fn vec_mat(v: &[BigRational], a: &Matrix) -> Vec<BigRational> {
    let n = a.first().map_or(0, Vec::len);
    let mut out = vec![BigRational::zero(); n];
    for (x, row) in v.iter().zip(a) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}

/// A homogeneous symmetric function with exact rational coefficients in the monomial basis,
/// indexed by [`Partition::all`] of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFun {
    degree: u32,
    coeffs: Vec<BigRational>,
}

impl SymFun {
    pub fn zero(degree: u32) -> Self {
        Self { degree, coeffs: vec![BigRational::zero(); Partition::all(degree).len()] }
    }

    /// The function whose coefficients in `basis` are `coeffs`.
    pub fn from_coeffs(basis: Basis, degree: u32, coeffs: Vec<BigRational>) -> Result<Self, MacError> {
        let tr = transitions(degree);
        if coeffs.len() != tr.partitions.len() {
            return Err(MacError::Domain(format!(
                "degree {degree} needs {} coefficients, got {}",
                tr.partitions.len(),
                coeffs.len()
            )));
        }
        Ok(Self { degree, coeffs: vec_mat(&coeffs, tr.to_monomial(basis)) })
    }

    /// A single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let d = lambda.size();
        let tr = transitions(d);
        let i = tr.index_of(lambda).expect("every partition of d is indexed");
        Self { degree: d, coeffs: tr.to_monomial(basis)[i].clone() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomial_coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `m_λ`; zero when `λ` has another degree.
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        transitions(self.degree).index_of(lambda).map_or_else(BigRational::zero, |i| self.coeffs[i].clone())
    }

    /// Coefficients in another basis.
    pub fn coeffs_in(&self, basis: Basis) -> Vec<BigRational> {
        vec_mat(&self.coeffs, transitions(self.degree).from_monomial(basis))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `f[A]`: the power-sum expansion with `p_j ↦ p_j[A]`, coefficients held fixed.
    pub fn pleth(&self, a: &MonomialAlphabet, at: &EvalPoint) -> BigRational {
        pleth_from_p(&self.coeffs_in(Basis::PowerSum), self.degree, a, at)
    }
}

/// Evaluates `Σ c_ν p_ν[A]` given the power-sum coefficients of a degree `d` function.
pub fn pleth_from_p(p_coeffs: &[BigRational], d: u32, a: &MonomialAlphabet, at: &EvalPoint) -> BigRational {
    let tr = transitions(d);
    let sums = a.power_sums(d, at);
    let mut acc = BigRational::zero();
    for (c, nu) in p_coeffs.iter().zip(&tr.partitions) {
        if c.is_zero() {
            continue;
        }
        acc += nu.parts().iter().fold(c.clone(), |x, &j| x * &sums[j as usize - 1]);
    }
    acc
}

impl Add for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        assert_eq!(self.degree, rhs.degree, "adding symmetric functions of different degrees");
        SymFun { degree: self.degree, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Mul<&BigRational> for &SymFun {
    type Output = SymFun;
    fn mul(self, c: &BigRational) -> SymFun {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn degree_two_expansions() {
        assert_eq!(SymFun::basis_element(Basis::Complete, &p(&[2])).monomial_coeffs(), ints(&[1, 1]));
        assert_eq!(SymFun::basis_element(Basis::Elementary, &p(&[2])).monomial_coeffs(), ints(&[0, 1]));
        assert_eq!(SymFun::basis_element(Basis::PowerSum, &p(&[1, 1])).monomial_coeffs(), ints(&[1, 2]));
        assert_eq!(SymFun::basis_element(Basis::Complete, &p(&[1, 1])).monomial_coeffs(), ints(&[1, 2]));
    }

    #[test]
    fn elementary_in_power_sums() {
        // e_2 = (p_1^2 - p_2) / 2
        let e2 = SymFun::basis_element(Basis::Elementary, &p(&[2]));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(e2.coeffs_in(Basis::PowerSum), vec![-half.clone(), half]);
    }

    #[test]
    fn pleth_matches_alphabet_e() {
        let at = EvalPoint::integers(2, 103, 0);
        let a = p(&[2, 2]).b();
        for r in 1..=4 {
            let e = SymFun::basis_element(Basis::Elementary, &p(&vec![r; 1]));
            assert_eq!(e.pleth(&a, &at), a.e(r as i64, &at));
        }
    }

    proptest! {
        #[test]
        fn basis_round_trips(d in 1u32..=7, seed in proptest::collection::vec(-20i64..20, 15)) {
            let n = Partition::all(d).len();
            let f = SymFun::from_coeffs(Basis::Monomial, d, ints(&seed[..n])).unwrap();
            for b in [Basis::Complete, Basis::Elementary, Basis::PowerSum] {
                let back = SymFun::from_coeffs(b, d, f.coeffs_in(b)).unwrap();
                prop_assert_eq!(&back, &f);
            }
        }
    }
}
