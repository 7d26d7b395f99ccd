//! Integer partitions, the cells of their Ferrers diagrams and the q,t invariants built on them.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::qt::{EvalPoint, Pole, QtPoly};

use super::{MacError, MonomialAlphabet};

/// A cell `(x, y)` of a Ferrers diagram drawn in French notation: `x` is the column and `y` the
/// row, both from 0, with the longest row at the bottom.
pub type Cell = (u32, u32);

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = MacError;
    fn try_from(v: Vec<u32>) -> Result<Self, MacError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, MacError> {
        if parts.contains(&0) {
            return Err(MacError::Domain(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(MacError::Domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts the nonzero entries of any sequence into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self((0..width).map(|x| self.0.iter().filter(|&&p| p > x).count() as u32).collect())
    }

    /// Cells row by row from the bottom, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| (x, y as u32)))
            .collect()
    }

    fn column_height(&self, x: u32) -> u32 {
        self.0.iter().filter(|&&p| p > x).count() as u32
    }

    /// Cells strictly to the right.
    pub fn arm(&self, (x, y): Cell) -> u32 {
        self.0[y as usize] - x - 1
    }

    /// Cells strictly above.
    pub fn leg(&self, (x, y): Cell) -> u32 {
        self.column_height(x) - y - 1
    }

    /// Cells strictly to the left.
    pub fn coarm(&self, (x, _): Cell) -> u32 {
        x
    }

    /// Cells strictly below.
    pub fn coleg(&self, (_, y): Cell) -> u32 {
        y
    }

    /// `n(μ) = Σ coleg`.
    pub fn n(&self) -> u32 {
        self.cells().iter().map(|&c| self.coleg(c)).sum()
    }

    /// All partitions of `n`, largest first in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `B_μ = Σ q^{a'} t^{l'}` over the cells.
    pub fn b(&self) -> MonomialAlphabet {
        MonomialAlphabet::from_poly(self.cells().iter().map(|&c| QtPoly::monomial(1, self.coarm(c), self.coleg(c))).sum())
    }

    /// `T_μ = Π q^{a'} t^{l'}`.
    pub fn t(&self) -> QtPoly {
        let cells = self.cells();
        QtPoly::monomial(1, cells.iter().map(|&c| self.coarm(c)).sum(), cells.iter().map(|&c| self.coleg(c)).sum())
    }

    /// `Π_μ = Π (1 - q^{a'} t^{l'})` over all cells but `(0, 0)`.
    pub fn pi(&self) -> QtPoly {
        self.cells()
            .iter()
            .filter(|&&c| c != (0, 0))
            .fold(QtPoly::one(), |acc, &c| &acc * &(&QtPoly::one() - &QtPoly::monomial(1, self.coarm(c), self.coleg(c))))
    }

    /// `w_μ = Π (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub fn w(&self) -> QtPoly {
        self.cells().iter().fold(QtPoly::one(), |acc, &c| {
            let (a, l) = (self.arm(c), self.leg(c));
            let f = &QtPoly::monomial(1, a, 0) - &QtPoly::monomial(1, 0, l + 1);
            let g = &QtPoly::monomial(1, 0, l) - &QtPoly::monomial(1, a + 1, 0);
            &(&acc * &f) * &g
        })
    }

    pub fn invariants(&self) -> Invariants {
        Invariants { b: self.b(), t: self.t(), pi: self.pi(), w: self.w(), m: m_poly() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `M = (1 - q)(1 - t)`.
pub fn m_poly() -> QtPoly {
    QtPoly::from_terms([(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)])
}

/// `B_μ, T_μ, Π_μ, w_μ` and `M` as polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b: MonomialAlphabet,
    pub t: QtPoly,
    pub pi: QtPoly,
    pub w: QtPoly,
    pub m: QtPoly,
}

/// The invariants specialized at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointInvariants {
    pub b: BigRational,
    pub t: BigRational,
    pub pi: BigRational,
    pub w: BigRational,
    pub m: BigRational,
}

impl Invariants {
    /// Fails with a pole when `w_μ` vanishes at the point.
    pub fn at(&self, at: &EvalPoint) -> Result<PointInvariants, Pole> {
        let ev = |p: &QtPoly| p.eval(&at.q, &at.t);
        let w = ev(&self.w);
        if w.is_zero() {
            return Err(Pole(at.to_string()));
        }
        Ok(PointInvariants { b: ev(self.b.as_poly()), t: ev(&self.t), pi: ev(&self.pi), w, m: ev(&self.m) })
    }
}
