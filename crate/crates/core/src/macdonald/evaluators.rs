//! Scalar products of Delta and nabla images, evaluated at exact points by summing over the
//! modified Macdonald basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::qt::{EvalPoint, QtPoly};

use super::htilde::{htilde_at, htilde_at_alphabet, htilde_symbolic, DEFAULT_DEGREE_CAP};
use super::pairing::{hall_pair, PairTarget};
use super::partition::{Invariants, PointInvariants};
use super::{MacError, MonomialAlphabet, Partition};

/// `B_μ, T_μ, Π_μ, w_μ, M` at a point, memoized.
pub fn invariants_at(mu: &Partition, at: &EvalPoint) -> Result<Arc<PointInvariants>, MacError> {
    type Key = (Partition, BigRational, BigRational);
    static SYMBOLIC: OnceLock<Mutex<HashMap<Partition, Arc<Invariants>>>> = OnceLock::new();
    static POINTS: OnceLock<Mutex<HashMap<Key, Arc<PointInvariants>>>> = OnceLock::new();
    let key = (mu.clone(), at.q.clone(), at.t.clone());
    let points = POINTS.get_or_init(Default::default);
    if let Some(v) = points.lock().expect("invariant cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let symbolic = SYMBOLIC.get_or_init(Default::default);
    let inv = symbolic
        .lock()
        .expect("invariant cache poisoned")
        .entry(mu.clone())
        .or_insert_with(|| Arc::new(mu.invariants()))
        .clone();
    let v = Arc::new(inv.at(at)?);
    points.lock().expect("invariant cache poisoned").insert(key, v.clone());
    Ok(v)
}

/// The scalar products evaluated for the identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Evaluator {
    /// `⟨Δ'_{e_{m+n-k-1}} e_{m+n}, h_m h_n⟩`.
    LhsDeltaHh,
    /// `⟨Δ_{h_n} Δ'_{e_{m-k}} e_{m+1}, h_{m+1}⟩`.
    MidDeltaHn,
    /// `⟨∇ e_{m+n-k}, e_k h_{n-k} h_{m-k}⟩`.
    RhsNablaEhh,
    /// `Σ_r t^{m-k-r+1} ⟨Δ_{h_{m-k-r+1}} Δ_{e_k} e_n[X [r]_q], e_n⟩`.
    SumRLhs,
}

impl Evaluator {
    pub const ALL: [Evaluator; 4] = [Evaluator::LhsDeltaHh, Evaluator::MidDeltaHn, Evaluator::RhsNablaEhh, Evaluator::SumRLhs];

    pub fn name(self) -> &'static str {
        match self {
            Evaluator::LhsDeltaHh => "lhs-delta-hh",
            Evaluator::MidDeltaHn => "mid-delta-hn",
            Evaluator::RhsNablaEhh => "rhs-nabla-ehh",
            Evaluator::SumRLhs => "sum-r-lhs",
        }
    }
}

/// Evaluators sharing a degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SfEngine {
    pub degree_cap: u32,
}

impl Default for SfEngine {
    fn default() -> Self {
        Self { degree_cap: DEFAULT_DEGREE_CAP }
    }
}

impl SfEngine {
    pub fn new(degree_cap: u32) -> Self {
        Self { degree_cap }
    }

    fn check_degree(&self, d: u32) -> Result<(), MacError> {
        if d > self.degree_cap {
            return Err(MacError::Capacity { degree: d, cap: self.degree_cap });
        }
        Ok(())
    }

    /// `M B_μ Π_μ / w_μ`, the coefficient of `H̃_μ` in `e_n`.
    pub fn en_coefficient(&self, mu: &Partition, at: &EvalPoint) -> Result<BigRational, MacError> {
        let inv = invariants_at(mu, at)?;
        Ok(&inv.m * &inv.b * &inv.pi / &inv.w)
    }

    /// Parameter check shared by the evaluators: `m ≥ k` and `m + n ≥ 1`.
    pub fn check_params(&self, which: Evaluator, m: u32, n: u32, k: u32) -> Result<(), MacError> {
        if k > m {
            return Err(MacError::Domain(format!("need m >= k, got m = {m}, k = {k}")));
        }
        if m + n == 0 {
            return Err(MacError::Domain("need m + n >= 1".into()));
        }
        let degree = match which {
            Evaluator::LhsDeltaHh => m + n,
            Evaluator::MidDeltaHn => 0,
            Evaluator::RhsNablaEhh => m + n - k,
            Evaluator::SumRLhs => n,
        };
        self.check_degree(degree)
    }

    pub fn evaluate(&self, which: Evaluator, m: u32, n: u32, k: u32, at: &EvalPoint) -> Result<BigRational, MacError> {
        match which {
            Evaluator::LhsDeltaHh => self.lhs_delta_hh(m, n, k, at),
            Evaluator::MidDeltaHn => self.mid_delta_hn(m, n, k, at),
            Evaluator::RhsNablaEhh => self.rhs_nabla_ehh(m, n, k, at),
            Evaluator::SumRLhs => self.sum_r_lhs(m, n, k, at),
        }
    }

    /// `Σ_{μ ⊢ m+n} e_{m+n-k-1}[B_μ - 1] M B_μ Π_μ / w_μ ⟨H̃_μ, h_m h_n⟩`.
    pub fn lhs_delta_hh(&self, m: u32, n: u32, k: u32, at: &EvalPoint) -> Result<BigRational, MacError> {
        self.check_params(Evaluator::LhsDeltaHh, m, n, k)?;
        let size = m + n;
        let target = PairTarget::HProduct { nu: Partition::from_unsorted(vec![m, n]) };
        let mut acc = BigRational::zero();
        for mu in Partition::all(size) {
            let e = (&mu.b() - &MonomialAlphabet::one()).e(size as i64 - k as i64 - 1, at);
            if e.is_zero() {
                continue;
            }
            acc += e * self.en_coefficient(&mu, at)? * hall_pair(&mu, &target, at, self.degree_cap)?;
        }
        Ok(acc)
    }

    /// `Σ_{λ ⊢ m+1} h_n[B_λ] e_{m-k}[B_λ - 1] M B_λ Π_λ / w_λ`.
    pub fn mid_delta_hn(&self, m: u32, n: u32, k: u32, at: &EvalPoint) -> Result<BigRational, MacError> {
        self.check_params(Evaluator::MidDeltaHn, m, n, k)?;
        let mut acc = BigRational::zero();
        for lambda in Partition::all(m + 1) {
            let b = lambda.b();
            let factor = b.h(n as i64, at) * (&b - &MonomialAlphabet::one()).e((m - k) as i64, at);
            if factor.is_zero() {
                continue;
            }
            acc += factor * self.en_coefficient(&lambda, at)?;
        }
        Ok(acc)
    }

    /// `Σ_{μ ⊢ m+n-k} T_μ M B_μ Π_μ / w_μ ⟨H̃_μ, e_k h_{n-k} h_{m-k}⟩`; zero when `n < k`.
    pub fn rhs_nabla_ehh(&self, m: u32, n: u32, k: u32, at: &EvalPoint) -> Result<BigRational, MacError> {
        self.check_params(Evaluator::RhsNablaEhh, m, n, k)?;
        if n < k {
            return Ok(BigRational::zero());
        }
        let target = PairTarget::Ehh { k, a: n - k, b: m - k };
        let mut acc = BigRational::zero();
        for mu in Partition::all(m + n - k) {
            let t = invariants_at(&mu, at)?.t.clone();
            acc += t * self.en_coefficient(&mu, at)? * hall_pair(&mu, &target, at, self.degree_cap)?;
        }
        Ok(acc)
    }

    /// `e_n[X [r]_q]` expanded through the Cauchy identity, acted on by
    /// `Δ_{h_{m-k-r+1}} Δ_{e_k}` and paired with `e_n`, weighted by `t^{m-k-r+1}` and summed over
    /// `r = 1..=m-k+1`.
    pub fn sum_r_lhs(&self, m: u32, n: u32, k: u32, at: &EvalPoint) -> Result<BigRational, MacError> {
        self.check_params(Evaluator::SumRLhs, m, n, k)?;
        let mut acc = BigRational::zero();
        let partitions = if n == 0 { vec![Partition::empty()] } else { Partition::all(n) };
        for r in 1..=m - k + 1 {
            let j = m - k + 1 - r;
            let alphabet = &MonomialAlphabet::m() * &MonomialAlphabet::q_integer(r);
            let mut inner = BigRational::zero();
            for mu in &partitions {
                let b = mu.b();
                let factor = b.h(j as i64, at) * b.e(k as i64, at);
                if factor.is_zero() {
                    continue;
                }
                let (h_value, pairing) = if mu.is_empty() {
                    (BigRational::one(), BigRational::one())
                } else {
                    (
                        htilde_at_alphabet(mu, &alphabet, at, self.degree_cap)?,
                        (&b - &MonomialAlphabet::one()).e(n as i64 - 1, at),
                    )
                };
                inner += factor * h_value * pairing / &invariants_at(mu, at)?.w;
            }
            acc += inner * Pow::pow(&at.t, j);
        }
        Ok(acc)
    }

    /// Coefficient of `m_λ` in `Δ_{h_m} Δ'_{e_{n-k-1}} e_n`.
    pub fn delta_lhs_by_content(&self, m: u32, n: u32, k: u32, lambda: &Partition, at: &EvalPoint) -> Result<BigRational, MacError> {
        if n == 0 || lambda.size() != n {
            return Err(MacError::Domain(format!("need n >= 1 and a partition of n = {n}, got {lambda}")));
        }
        self.check_degree(n)?;
        let mut acc = BigRational::zero();
        for mu in Partition::all(n) {
            let b = mu.b();
            let factor = b.h(m as i64, at) * (&b - &MonomialAlphabet::one()).e(n as i64 - k as i64 - 1, at);
            if factor.is_zero() {
                continue;
            }
            let coeff = htilde_at(&mu, at, self.degree_cap)?.sym.coeff(lambda);
            acc += factor * self.en_coefficient(&mu, at)? * coeff;
        }
        Ok(acc)
    }

    /// Both sides of Macdonald–Koornwinder reciprocity cleared of denominators:
    /// `(H̃_α[M B_β] Π_β, H̃_β[M B_α] Π_α)`.
    pub fn reciprocity_sides(&self, alpha: &Partition, beta: &Partition, at: &EvalPoint) -> Result<(BigRational, BigRational), MacError> {
        let side = |x: &Partition, y: &Partition| -> Result<BigRational, MacError> {
            let alphabet = &MonomialAlphabet::m() * &y.b();
            let value = if x.is_empty() { BigRational::one() } else { htilde_at_alphabet(x, &alphabet, at, self.degree_cap)? };
            Ok(value * &invariants_at(y, at)?.pi)
        };
        Ok((side(alpha, beta)?, side(beta, alpha)?))
    }

    /// `H̃_α[M B_β] / Π_α = H̃_β[M B_α] / Π_β` at the point.
    pub fn reciprocity_check(&self, alpha: &Partition, beta: &Partition, at: &EvalPoint) -> Result<bool, MacError> {
        let (l, r) = self.reciprocity_sides(alpha, beta, at)?;
        let (pa, pb) = (&invariants_at(alpha, at)?.pi, &invariants_at(beta, at)?.pi);
        if pa.is_zero() || pb.is_zero() {
            return Err(MacError::Pole(crate::qt::Pole(at.to_string())));
        }
        Ok(l / (pa * pb) == r / (pa * pb))
    }

    /// Per-variable degree bound for the cleared reciprocity sides.
    pub fn reciprocity_degree_bound(&self, alpha: &Partition, beta: &Partition) -> Result<u32, MacError> {
        let side = |x: &Partition, y: &Partition| -> Result<u32, MacError> {
            let coeffs = if x.is_empty() { Arc::new(vec![QtPoly::one()]) } else { htilde_symbolic(x, self.degree_cap)? };
            let letters = (&MonomialAlphabet::m() * &y.b()).as_poly().clone();
            let pi = y.pi();
            let deg = |f: &dyn Fn(&QtPoly) -> Option<u32>| {
                coeffs.iter().filter_map(|c| f(c)).max().unwrap_or(0) + x.size() * f(&letters).unwrap_or(0) + f(&pi).unwrap_or(0)
            };
            Ok(deg(&QtPoly::deg_q).max(deg(&QtPoly::deg_t)))
        };
        Ok(side(alpha, beta)?.max(side(beta, alpha)?))
    }

    /// `(⟨Δ_{e_d} e_n, h_n⟩, ⟨e_n, e_d h_{n-d}⟩)`: the left side through the Macdonald expansion of
    /// `e_n`, the right side by pairing the monomial expansion of `e_n` directly.
    pub fn e_h_delta_sides(&self, d: u32, n: u32, at: &EvalPoint) -> Result<(BigRational, BigRational), MacError> {
        if d > n || n == 0 {
            return Err(MacError::Domain(format!("need 0 <= d <= n and n >= 1, got d = {d}, n = {n}")));
        }
        self.check_degree(n)?;
        let mut lhs = BigRational::zero();
        let top = PairTarget::HProduct { nu: Partition::new(vec![n])? };
        for mu in Partition::all(n) {
            let e = mu.b().e(d as i64, at);
            lhs += e * self.en_coefficient(&mu, at)? * hall_pair(&mu, &top, at, self.degree_cap)?;
        }
        let en = super::basis::SymFun::basis_element(super::basis::Basis::Elementary, &Partition::new(vec![n])?);
        let rhs = super::pairing::pair(&en, &PairTarget::Ehh { k: d, a: n - d, b: 0 })?;
        Ok((lhs, rhs))
    }

    /// `(⟨H̃_μ, s_{(n)}⟩, ⟨H̃_μ, s_{(1^n)}⟩, T_μ)` at the point.
    pub fn normalizations(&self, mu: &Partition, at: &EvalPoint) -> Result<(BigRational, BigRational, BigRational), MacError> {
        let n = mu.size();
        let row = hall_pair(mu, &PairTarget::Schur { lambda: Partition::new(vec![n])? }, at, self.degree_cap)?;
        let column = hall_pair(mu, &PairTarget::Schur { lambda: Partition::new(vec![1; n as usize])? }, at, self.degree_cap)?;
        Ok((row, column, invariants_at(mu, at)?.t.clone()))
    }

    /// `(⟨H̃_μ, s_{(n-r,1^r)}⟩, e_r[B_μ - 1])` at the point.
    pub fn mac_hook_sides(&self, mu: &Partition, r: u32, at: &EvalPoint) -> Result<(BigRational, BigRational), MacError> {
        let n = mu.size();
        let lhs = hall_pair(mu, &PairTarget::Hook { n, r }, at, self.degree_cap)?;
        let rhs = (&mu.b() - &MonomialAlphabet::one()).e(r as i64, at);
        Ok((lhs, rhs))
    }
}
