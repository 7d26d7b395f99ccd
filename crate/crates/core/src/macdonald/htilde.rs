//! Modified Macdonald polynomials in the monomial basis, from the filling formula
//! `H̃_μ = Σ_σ q^{inv(σ)} t^{maj(σ)} x^σ` over fillings of the Ferrers diagram.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;

use crate::qt::{EvalPoint, QtPoly};

use super::basis::{pleth_from_p, transitions, Basis, SymFun};
use super::{MacError, MonomialAlphabet, Partition};

/// Largest degree handled unless configured otherwise.
pub const DEFAULT_DEGREE_CAP: u32 = 7;

/// Cell geometry of a diagram in reading order (rows top to bottom, each left to right).
struct Geometry {
    /// `attacks[i][j]` for `i < j` in reading order.
    attacks: Vec<Vec<bool>>,
    /// Reading index of the cell directly below, with `leg + 1` and `arm` of the upper cell.
    below: Vec<Option<(usize, u32, u32)>>,
}

impl Geometry {
    fn new(mu: &Partition) -> Self {
        let mut cells = mu.cells();
        cells.sort_by_key(|&(x, y)| (std::cmp::Reverse(y), x));
        let pos: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let attacks = cells
            .iter()
            .map(|&(x1, y1)| cells.iter().map(|&(x2, y2)| (y1 == y2) || (y1 == y2 + 1 && x1 > x2)).collect())
            .collect();
        let below = cells
            .iter()
            .map(|&(x, y)| (y > 0).then(|| (pos[&(x, y - 1)], mu.leg((x, y)) + 1, mu.arm((x, y)))))
            .collect();
        Self { attacks, below }
    }

    /// `(inv, maj)` of a filling listed in reading order.
    fn stats(&self, filling: &[u32]) -> (u32, u32) {
        let mut inv = 0i64;
        let mut maj = 0;
        for i in 0..filling.len() {
            for j in i + 1..filling.len() {
                if self.attacks[i][j] && filling[i] > filling[j] {
                    inv += 1;
                }
            }
            if let Some((b, leg1, arm)) = self.below[i] {
                if filling[i] > filling[b] {
                    maj += leg1;
                    inv -= arm as i64;
                }
            }
        }
        (u32::try_from(inv).expect("inv is nonnegative"), maj)
    }
}

/// Coefficient of `x^λ` in `H̃_μ`: the sum over fillings with content `λ`.
fn monomial_coefficient(geo: &Geometry, content: &[u32]) -> QtPoly {
    fn rec(geo: &Geometry, left: &mut Vec<u32>, cur: &mut Vec<u32>, size: usize, acc: &mut QtPoly) {
        if cur.len() == size {
            let (inv, maj) = geo.stats(cur);
            acc.add_term((inv, maj), 1.into());
            return;
        }
        for v in 0..left.len() {
            if left[v] > 0 {
                left[v] -= 1;
                cur.push(v as u32 + 1);
                rec(geo, left, cur, size, acc);
                cur.pop();
                left[v] += 1;
            }
        }
    }
    let mut acc = QtPoly::zero();
    let size = content.iter().sum::<u32>() as usize;
    rec(geo, &mut content.to_vec(), &mut Vec::with_capacity(size), size, &mut acc);
    acc
}

/// `H̃_μ` with polynomial coefficients, one per partition of `|μ|` in [`Partition::all`] order.
pub fn htilde_symbolic(mu: &Partition, cap: u32) -> Result<Arc<Vec<QtPoly>>, MacError> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<Vec<QtPoly>>>>> = OnceLock::new();
    if mu.size() > cap {
        return Err(MacError::Capacity { degree: mu.size(), cap });
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().expect("htilde cache poisoned").get(mu) {
        return Ok(h.clone());
    }
    let geo = Geometry::new(mu);
    let coeffs: Vec<QtPoly> = Partition::all(mu.size()).iter().map(|l| monomial_coefficient(&geo, l.parts())).collect();
    let h = Arc::new(coeffs);
    cache.lock().expect("htilde cache poisoned").insert(mu.clone(), h.clone());
    Ok(h)
}

/// `H̃_μ` at a point in the monomial basis together with its power-sum coefficients.
#[derive(Debug)]
pub struct HtildeAt {
    pub sym: SymFun,
    pub p_coeffs: Vec<BigRational>,
}

/// `H̃_μ` specialized at `(q₀, t₀)`; values are memoized per partition and point.
pub fn htilde_at(mu: &Partition, at: &EvalPoint, cap: u32) -> Result<Arc<HtildeAt>, MacError> {
    type Key = (Partition, BigRational, BigRational);
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<HtildeAt>>>> = OnceLock::new();
    let key = (mu.clone(), at.q.clone(), at.t.clone());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().expect("htilde cache poisoned").get(&key) {
        return Ok(h.clone());
    }
    let sym_coeffs = htilde_symbolic(mu, cap)?;
    let values = sym_coeffs.iter().map(|c| c.eval(&at.q, &at.t)).collect();
    let sym = SymFun::from_coeffs(Basis::Monomial, mu.size(), values)?;
    let p_coeffs = sym.coeffs_in(Basis::PowerSum);
    let h = Arc::new(HtildeAt { sym, p_coeffs });
    cache.lock().expect("htilde cache poisoned").insert(key, h.clone());
    Ok(h)
}

/// `H̃_μ[A]` at the point, with `p_j ↦ p_j[A]` and coefficients fixed at `(q₀, t₀)`.
pub fn htilde_at_alphabet(mu: &Partition, a: &MonomialAlphabet, at: &EvalPoint, cap: u32) -> Result<BigRational, MacError> {
    let h = htilde_at(mu, at, cap)?;
    Ok(pleth_from_p(&h.p_coeffs, mu.size(), a, at))
}

/// Coefficient of `m_λ` in `H̃_μ` as a polynomial.
pub fn htilde_coefficient(mu: &Partition, lambda: &Partition, cap: u32) -> Result<QtPoly, MacError> {
    let h = htilde_symbolic(mu, cap)?;
    Ok(transitions(mu.size()).index_of(lambda).map_or_else(QtPoly::zero, |i| h[i].clone()))
}
