//! The Hall scalar product against products of complete homogeneous functions, and the
//! targets reducible to them.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::qt::EvalPoint;

use super::basis::SymFun;
use super::htilde::htilde_at;
use super::{MacError, Partition};

/// Right-hand sides of a Hall pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PairTarget {
    /// `h_ν`.
    HProduct { nu: Partition },
    /// `e_k h_a h_b`.
    Ehh { k: u32, a: u32, b: u32 },
    /// The hook Schur function `s_{(n-r, 1^r)}`.
    Hook { n: u32, r: u32 },
    /// Any Schur function.
    Schur { lambda: Partition },
}

impl PairTarget {
    pub fn degree(&self) -> u32 {
        match self {
            PairTarget::HProduct { nu } => nu.size(),
            PairTarget::Ehh { k, a, b } => k + a + b,
            PairTarget::Hook { n, .. } => *n,
            PairTarget::Schur { lambda } => lambda.size(),
        }
    }

    /// The target as a signed combination of `h_ν`.
    pub fn h_expansion(&self) -> Result<BTreeMap<Partition, i64>, MacError> {
        Ok(match self {
            PairTarget::HProduct { nu } => BTreeMap::from([(nu.clone(), 1)]),
            PairTarget::Ehh { k, a, b } => ehh_in_h(*k, *a, *b),
            PairTarget::Hook { n, r } => {
                if r >= n {
                    return Err(MacError::Domain(format!("hook needs r < n, got r = {r}, n = {n}")));
                }
                let mut parts = vec![n - r];
                parts.extend(std::iter::repeat_n(1, *r as usize));
                jacobi_trudi(&Partition::new(parts)?)
            }
            PairTarget::Schur { lambda } => jacobi_trudi(lambda),
        })
    }
}

impl fmt::Display for PairTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairTarget::HProduct { nu } => write!(f, "h{nu}"),
            PairTarget::Ehh { k, a, b } => write!(f, "e_{k} h_{a} h_{b}"),
            PairTarget::Hook { n, r } => write!(f, "s({},1^{r})", n - r),
            PairTarget::Schur { lambda } => write!(f, "s{lambda}"),
        }
    }
}

fn compositions(k: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (1..=k)
        .flat_map(|first| {
            compositions(k - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `e_k = Σ_{α ⊨ k} (-1)^{k - ℓ(α)} h_α`, multiplied by `h_a h_b`.
pub fn ehh_in_h(k: u32, a: u32, b: u32) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    for alpha in compositions(k) {
        let sign = if (k as usize - alpha.len()) % 2 == 0 { 1 } else { -1 };
        let mut parts = alpha;
        parts.extend([a, b]);
        *out.entry(Partition::from_unsorted(parts)).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let moved = (p.len() - pos) as i64;
            out.push((q, if moved % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// `s_λ = det(h_{λ_i - i + j})` expanded into signed `h_ν`.
pub fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, i64> {
    let l = lambda.parts();
    let mut out = BTreeMap::new();
    for (sigma, sign) in permutations(l.len()) {
        let parts: Option<Vec<u32>> =
            (0..l.len()).map(|i| u32::try_from(l[i] as i64 - i as i64 + sigma[i] as i64).ok()).collect();
        if let Some(parts) = parts {
            *out.entry(Partition::from_unsorted(parts)).or_insert(0) += sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `⟨f, g⟩` for `g` given as signed `h_ν`: each `h_ν` picks the coefficient of `m_ν`.
pub fn pair_with_h_expansion(f: &SymFun, g: &BTreeMap<Partition, i64>) -> BigRational {
    g.iter().fold(BigRational::zero(), |acc, (nu, &c)| acc + f.coeff(nu) * BigRational::from_integer(c.into()))
}

/// `⟨f, target⟩` for a symmetric function given in the monomial basis.
pub fn pair(f: &SymFun, target: &PairTarget) -> Result<BigRational, MacError> {
    if f.degree() != target.degree() {
        return Err(MacError::Domain(format!("degree {} paired with {target} of degree {}", f.degree(), target.degree())));
    }
    Ok(pair_with_h_expansion(f, &target.h_expansion()?))
}

/// `⟨H̃_μ, target⟩` at the point.
pub fn hall_pair(mu: &Partition, target: &PairTarget, at: &EvalPoint, cap: u32) -> Result<BigRational, MacError> {
    if mu.size() != target.degree() {
        return Err(MacError::Domain(format!("H̃{mu} paired with {target} of degree {}", target.degree())));
    }
    if mu.is_empty() {
        return Ok(BigRational::from_integer(1.into()));
    }
    pair(&htilde_at(mu, at, cap)?.sym, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::basis::Basis;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn elementary_expansion() {
        // e_2 = h_11 - h_2
        assert_eq!(ehh_in_h(2, 0, 0), BTreeMap::from([(p(&[1, 1]), 1), (p(&[2]), -1)]));
        assert_eq!(ehh_in_h(0, 2, 1), BTreeMap::from([(p(&[2, 1]), 1)]));
    }

    #[test]
    fn jacobi_trudi_small() {
        assert_eq!(jacobi_trudi(&p(&[1, 1])), BTreeMap::from([(p(&[1, 1]), 1), (p(&[2]), -1)]));
        // s_21 = h_21 - h_3
        assert_eq!(jacobi_trudi(&p(&[2, 1])), BTreeMap::from([(p(&[2, 1]), 1), (p(&[3]), -1)]));
    }

    #[test]
    fn schur_functions_are_orthonormal() {
        for n in 1..=5 {
            let parts = Partition::all(n);
            for a in &parts {
                // s_a in the monomial basis from its h expansion
                let mut coeffs = vec![BigRational::zero(); parts.len()];
                for (nu, c) in jacobi_trudi(a) {
                    let i = parts.iter().position(|x| *x == nu).unwrap();
                    coeffs[i] += BigRational::from_integer(c.into());
                }
                let sa = SymFun::from_coeffs(Basis::Complete, n, coeffs).unwrap();
                for b in &parts {
                    let v = pair(&sa, &PairTarget::Schur { lambda: b.clone() }).unwrap();
                    assert_eq!(v, BigRational::from_integer(((a == b) as i64).into()), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn degree_mismatch() {
        let at = EvalPoint::integers(2, 101, 0);
        assert!(hall_pair(&p(&[2]), &PairTarget::HProduct { nu: p(&[1]) }, &at, 7).is_err());
        let v = hall_pair(&p(&[2]), &PairTarget::HProduct { nu: p(&[1, 1]) }, &at, 7).unwrap();
        assert_eq!(v, BigRational::from_integer(3.into()));
    }
}
