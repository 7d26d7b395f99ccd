//! Self-validation of the symmetric-function engine and of the polynomial ring.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::macdonald::{basis, Evaluator, MacError, Partition, SfEngine};
use crate::qt::{compare_on_grid, degree_bound_for_size, EvalPoint, Pole, QtPoly};

use super::{VerificationReport, VerifyError};

const SUITE: &str = "engine";
const RING_SEED: u64 = 0x5eed;
const RING_SAMPLES: usize = 200;

fn pole(e: MacError) -> Pole {
    match e {
        MacError::Pole(p) => p,
        other => Pole(other.to_string()),
    }
}

fn grid_report(
    check: &str,
    instance: String,
    degree_bound: u32,
    f: impl Fn(&EvalPoint) -> Result<BigRational, MacError>,
    g: impl Fn(&EvalPoint) -> Result<BigRational, MacError>,
) -> Result<VerificationReport, VerifyError> {
    let cmp = compare_on_grid(|x| f(x).map_err(pole), |x| g(x).map_err(pole), degree_bound)?;
    let detail = format!("degree bound {degree_bound}, {} points", cmp.points_checked);
    let witness = (!cmp.equal).then(|| serde_json::to_value(&cmp.witness).unwrap_or_default());
    Ok(VerificationReport::from_outcome(SUITE, check, instance, detail, witness))
}

fn is_identity(m: &[Vec<BigRational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}

fn product(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, r)| acc + x * &r[j])).collect())
        .collect()
}

/// `m → b → m` is the identity for the complete, elementary and power-sum bases in degrees `<= 7`.
fn basis_round_trips() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for d in 1..=7 {
        let tr = basis::transitions(d);
        for (name, b) in [("complete", basis::Basis::Complete), ("elementary", basis::Basis::Elementary), ("power-sum", basis::Basis::PowerSum)] {
            let there = product(tr.from_monomial(b), tr.to_monomial(b));
            let back = product(tr.to_monomial(b), tr.from_monomial(b));
            let ok = is_identity(&there) && is_identity(&back);
            out.push(VerificationReport::from_outcome(
                SUITE,
                "basis-round-trip",
                format!("monomial-{name} degree {d}"),
                format!("{} partitions", tr.partitions.len()),
                (!ok).then(|| json!({ "degree": d, "basis": name })),
            ));
        }
    }
    out
}

/// QtPoly satisfies the commutative ring axioms and evaluation is a ring map, on seeded samples.
fn ring_axioms() -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(RING_SEED);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let terms: Vec<(u32, u32, i64)> = (0..rng.gen_range(0..6)).map(|_| (rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(-5..6))).collect();
        QtPoly::from_terms(terms)
    };
    let at = |x: &QtPoly, q: i64, t: i64| x.eval(&BigRational::from_integer(q.into()), &BigRational::from_integer(t.into()));
    for i in 0..RING_SAMPLES {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let (q, t) = (rng.gen_range(-4i64..5), rng.gen_range(-4i64..5));
        let checks = [
            ("add-commutes", &a + &b == &b + &a),
            ("mul-commutes", &a * &b == &b * &a),
            ("add-associates", &(&a + &b) + &c == &a + &(&b + &c)),
            ("mul-associates", &(&a * &b) * &c == &a * &(&b * &c)),
            ("distributes", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("units", &a + &QtPoly::zero() == a && &a * &QtPoly::one() == a),
            ("negation", (&a + &(-&a)).is_zero() && &a - &b == &a + &(-&b)),
            ("eval-additive", at(&(&a + &b), q, t) == at(&a, q, t) + at(&b, q, t)),
            ("eval-multiplicative", at(&(&a * &b), q, t) == at(&a, q, t) * at(&b, q, t)),
        ];
        if let Some((name, _)) = checks.iter().find(|c| !c.1) {
            return VerificationReport::fail(
                SUITE,
                "ring-axioms",
                format!("seed {RING_SEED}"),
                format!("{name} fails on sample {i}"),
                json!({ "axiom": name, "a": a.to_string(), "b": b.to_string(), "c": c.to_string(), "q": q, "t": t }),
            );
        }
    }
    VerificationReport::pass(SUITE, "ring-axioms", format!("seed {RING_SEED}"), format!("{RING_SAMPLES} samples"))
}

/// Basis round trips, `H̃` normalizations and `e_d`/`h_n` pairings for `n <= 5`, `q ↔ t`
/// symmetry of the evaluators for `m + n <= 4`, and the ring axioms.
pub fn engine_suite(grid_bound: Option<u32>) -> Result<Vec<VerificationReport>, VerifyError> {
    let engine = SfEngine::default();
    let bound = |n: u32| grid_bound.unwrap_or_else(|| degree_bound_for_size(n));
    let mut out = basis_round_trips();
    for n in 1..=5 {
        for mu in Partition::all(n) {
            out.push(grid_report(
                "normalization-row",
                format!("mu={mu}"),
                bound(n),
                |x| engine.normalizations(&mu, x).map(|v| v.0),
                |_| Ok(BigRational::one()),
            )?);
            out.push(grid_report(
                "normalization-column",
                format!("mu={mu}"),
                bound(n),
                |x| engine.normalizations(&mu, x).map(|v| v.1),
                |x| engine.normalizations(&mu, x).map(|v| v.2),
            )?);
        }
    }
    for n in 1..=5 {
        for d in 0..=n {
            out.push(grid_report(
                "e-h-delta",
                format!("d={d} n={n}"),
                bound(n),
                |x| engine.e_h_delta_sides(d, n, x).map(|v| v.0),
                |x| engine.e_h_delta_sides(d, n, x).map(|v| v.1),
            )?);
        }
    }
    for size in 1..=4u32 {
        for m in 0..=size {
            let n = size - m;
            for k in 0..=m.min(n) {
                for e in Evaluator::ALL {
                    out.push(grid_report(
                        "q-t-symmetry",
                        format!("{} m={m} n={n} k={k}", e.name()),
                        bound(size),
                        |x| engine.evaluate(e, m, n, k, x),
                        |x| engine.evaluate(e, m, n, k, &x.swapped()),
                    )?);
                }
            }
        }
    }
    out.push(ring_axioms());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_and_ring_axioms_pass() {
        assert!(basis_round_trips().iter().all(VerificationReport::passed));
        assert!(ring_axioms().passed());
    }
}
