//! Deciding polynomial identities by exact evaluation on a grid of prime points.
//!
//! `q` values come from the primes `2, 3, 5, ...` and `t` values from the primes starting at
//! `101`, so factors such as `q^a - t^b` never vanish for positive exponents.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::QtError;

/// An exact rational specialization `(q0, t0)` together with the per-variable degree bound
/// the surrounding computation is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    pub q: BigRational,
    pub t: BigRational,
    pub degree_bound: u32,
}

impl EvalPoint {
    pub fn new(q: BigRational, t: BigRational, degree_bound: u32) -> Self {
        Self { q, t, degree_bound }
    }

    pub fn integers(q: i64, t: i64, degree_bound: u32) -> Self {
        Self::new(int(q), int(t), degree_bound)
    }

    /// The point with `q0` and `t0` exchanged.
    pub fn swapped(&self) -> Self {
        Self::new(self.t.clone(), self.q.clone(), self.degree_bound)
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q={}, t={})", self.q, self.t)
    }
}

/// Signal that an evaluator hit a vanishing denominator.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("pole at {0}")]
pub struct Pole(pub String);

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

/// The first `count` grid values for `q` (`2, 3, 5, ...`).
pub fn q_primes(count: usize) -> Vec<u64> {
    primes_from(2).take(count).collect()
}

/// The first `count` grid values for `t`, starting at `101` and always above every `q` value
/// in use.
pub fn t_primes(count: usize, q_in_use: &[u64]) -> Vec<u64> {
    let floor = q_in_use.iter().max().map_or(101, |&m| (m + 1).max(101));
    primes_from(floor).take(count).collect()
}

/// Outcome of a grid comparison.
#[derive(Clone, Debug, Serialize)]
pub struct GridComparison {
    pub equal: bool,
    pub points_checked: usize,
    pub points_skipped: usize,
    /// First disagreeing point, rendered as text, with both values.
    pub witness: Option<GridWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GridWitness {
    pub point: String,
    pub left: String,
    pub right: String,
}

/// Compares two evaluators on the deterministic grid for `degree_bound`.
///
/// For every accepted `q0` row, `degree_bound + 1` distinct `t0` values are needed where both
/// evaluators are finite; a pole at a point replaces that `t0` by the next prime, and a row that
/// cannot be filled is replaced by the next `q0`. Agreement on `(d+1)` rows of `(d+1)` points
/// each proves equality of polynomials of per-variable degree at most `d`.
pub fn compare_on_grid<F, G>(f: F, g: G, degree_bound: u32) -> Result<GridComparison, QtError>
where
    F: Fn(&EvalPoint) -> Result<BigRational, Pole>,
    G: Fn(&EvalPoint) -> Result<BigRational, Pole>,
{
    compare_on_grid_with(f, g, degree_bound, |_, _| {})
}

/// Outcome at a single grid point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointOutcome {
    Equal,
    Differ,
    Skipped,
}

/// [`compare_on_grid`], reporting every visited point to `on_point`.
pub fn compare_on_grid_with<F, G, R>(f: F, g: G, degree_bound: u32, mut on_point: R) -> Result<GridComparison, QtError>
where
    F: Fn(&EvalPoint) -> Result<BigRational, Pole>,
    G: Fn(&EvalPoint) -> Result<BigRational, Pole>,
    R: FnMut(&EvalPoint, PointOutcome),
{
    let need = degree_bound as usize + 1;
    let budget = 4 * need + 8;
    let qs = q_primes(budget);
    let ts = t_primes(budget, &qs);
    let mut rows = 0;
    let mut checked = 0;
    let mut skipped = 0;
    for &q in &qs {
        if rows == need {
            break;
        }
        let mut good = 0;
        for &t in &ts {
            if good == need {
                break;
            }
            let p = EvalPoint::integers(q as i64, t as i64, degree_bound);
            match (f(&p), g(&p)) {
                (Ok(a), Ok(b)) => {
                    checked += 1;
                    good += 1;
                    if a != b {
                        on_point(&p, PointOutcome::Differ);
                        return Ok(GridComparison {
                            equal: false,
                            points_checked: checked,
                            points_skipped: skipped,
                            witness: Some(GridWitness {
                                point: p.to_string(),
                                left: a.to_string(),
                                right: b.to_string(),
                            }),
                        });
                    }
                    on_point(&p, PointOutcome::Equal);
                }
                _ => {
                    skipped += 1;
                    on_point(&p, PointOutcome::Skipped);
                }
            }
        }
        if good == need {
            rows += 1;
        }
    }
    if rows < need {
        return Err(QtError::InfeasibleGrid { degree_bound });
    }
    Ok(GridComparison { equal: true, points_checked: checked, points_skipped: skipped, witness: None })
}

/// `true` iff the two evaluators define the same polynomial, assuming both have per-variable
/// degree at most `degree_bound`.
pub fn poly_equal_by_grid<F, G>(f: F, g: G, degree_bound: u32) -> Result<bool, QtError>
where
    F: Fn(&EvalPoint) -> Result<BigRational, Pole>,
    G: Fn(&EvalPoint) -> Result<BigRational, Pole>,
{
    Ok(compare_on_grid(f, g, degree_bound)?.equal)
}

/// The degree bound `N(N-1)/2` used for objects of size `N`.
pub fn degree_bound_for_size(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::{q_binomial, QtPoly};
    use proptest::prelude::*;

    fn ev(p: QtPoly) -> impl Fn(&EvalPoint) -> Result<BigRational, Pole> {
        move |x: &EvalPoint| Ok(p.eval(&x.q, &x.t))
    }

    #[test]
    fn prime_lists_are_disjoint() {
        let qs = q_primes(30);
        let ts = t_primes(30, &qs);
        assert_eq!(&qs[..4], &[2, 3, 5, 7]);
        assert!(ts[0] >= 101);
        assert!(qs.iter().all(|q| !ts.contains(q)));
        assert_eq!(t_primes(3, &[2, 3]), vec![101, 103, 107]);
    }

    #[test]
    fn examples() {
        let b = q_binomial(3, 1).unwrap();
        assert!(poly_equal_by_grid(ev(b.clone()), ev(b), 3).unwrap());
        let f = QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
        let g = QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 2, 1)]);
        assert!(!poly_equal_by_grid(ev(f), ev(g), 2).unwrap());
    }

    #[test]
    fn poles_are_skipped_and_replaced() {
        let f = |p: &EvalPoint| {
            if p.t == int(101) || p.q == int(3) {
                Err(Pole(p.to_string()))
            } else {
                Ok(p.q.clone() * p.t.clone())
            }
        };
        let g = |p: &EvalPoint| Ok(p.q.clone() * p.t.clone());
        let c = compare_on_grid(f, g, 2).unwrap();
        assert!(c.equal);
        assert_eq!(c.points_checked, 9);
        assert!(c.points_skipped > 0);
    }

    #[test]
    fn everywhere_pole_is_infeasible() {
        let f = |p: &EvalPoint| Err(Pole(p.to_string()));
        let g = |_: &EvalPoint| Ok(int(0));
        assert!(matches!(compare_on_grid(f, g, 1), Err(QtError::InfeasibleGrid { .. })));
    }

    fn small_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..6).prop_map(QtPoly::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn grid_agrees_with_coefficient_comparison(a in small_poly(), b in small_poly()) {
            let grid = poly_equal_by_grid(ev(a.clone()), ev(b.clone()), 3).unwrap();
            prop_assert_eq!(grid, a == b);
        }
    }
}
