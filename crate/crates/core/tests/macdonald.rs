use dinvkit::enumerate::{qt_enumerator, qt_enumerator_by_content, FamilySpec};
use dinvkit::macdonald::{hall_pair, Evaluator, MacError, PairTarget, Partition, SfEngine};
use dinvkit::qt::{compare_on_grid, degree_bound_for_size, EvalPoint, Pole, QtPoly};
use num_rational::BigRational;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn points() -> Vec<EvalPoint> {
    vec![EvalPoint::integers(2, 101, 0), EvalPoint::integers(5, 103, 0), EvalPoint::integers(7, 3, 0)]
}

fn poly_at(f: &QtPoly, at: &EvalPoint) -> BigRational {
    f.eval(&at.q, &at.t)
}

fn as_pole(e: MacError) -> Pole {
    match e {
        MacError::Pole(p) => p,
        other => panic!("{other}"),
    }
}

#[test]
fn htilde_degree_two_pairing() {
    let at = EvalPoint::integers(3, 101, 0);
    let v = hall_pair(&p(&[2]), &PairTarget::HProduct { nu: p(&[1, 1]) }, &at, 7).unwrap();
    assert_eq!(v, BigRational::from_integer(4.into()));
}

#[test]
fn normalizations_up_to_five() {
    let engine = SfEngine::default();
    for at in points() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                let (row, column, t) = engine.normalizations(&mu, &at).unwrap();
                assert_eq!(row, BigRational::from_integer(1.into()), "{mu}");
                assert_eq!(column, t, "{mu}");
            }
        }
    }
}

#[test]
fn hook_pairings_at_points() {
    let engine = SfEngine::default();
    for at in points() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                for r in 0..n {
                    let (l, r_side) = engine.mac_hook_sides(&mu, r, &at).unwrap();
                    assert_eq!(l, r_side, "{mu} r={r}");
                }
            }
        }
    }
}

#[test]
fn e_h_delta_instances() {
    let engine = SfEngine::default();
    for at in points() {
        for n in 1..=5 {
            for d in 0..=n {
                let (l, r) = engine.e_h_delta_sides(d, n, &at).unwrap();
                assert_eq!(l, r, "d={d} n={n}");
            }
        }
    }
}

#[test]
fn reciprocity_small_pairs() {
    let engine = SfEngine::default();
    assert!(engine.reciprocity_check(&p(&[1]), &p(&[1]), &points()[0]).unwrap());
    for at in points() {
        for a in 1..=3 {
            for b in 1..=3 {
                for alpha in Partition::all(a) {
                    for beta in Partition::all(b) {
                        assert!(engine.reciprocity_check(&alpha, &beta, &at).unwrap(), "{alpha} {beta}");
                    }
                }
            }
        }
    }
}

#[test]
fn reciprocity_two_and_one_one_on_grid() {
    let engine = SfEngine::default();
    let (a, b) = (p(&[2]), p(&[1, 1]));
    let bound = engine.reciprocity_degree_bound(&a, &b).unwrap();
    let cmp = compare_on_grid(
        |x| engine.reciprocity_sides(&a, &b, x).map(|s| s.0).map_err(as_pole),
        |x| engine.reciprocity_sides(&a, &b, x).map(|s| s.1).map_err(as_pole),
        bound,
    )
    .unwrap();
    assert!(cmp.equal);
}

#[test]
fn mid_delta_one_one_is_small_catalan_like() {
    let engine = SfEngine::default();
    let expected = QtPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
    let cmp = compare_on_grid(
        |x| engine.mid_delta_hn(1, 1, 0, x).map_err(as_pole),
        |x| Ok(poly_at(&expected, x)),
        degree_bound_for_size(2),
    )
    .unwrap();
    assert!(cmp.equal);
    let enumerated = qt_enumerator(&FamilySpec::two_car(1, 1, 0, false)).unwrap();
    assert_eq!(enumerated, expected);
}

#[test]
fn evaluators_agree_at_points() {
    let engine = SfEngine::default();
    for at in points() {
        for size in 1..=4u32 {
            for m in 0..=size {
                let n = size - m;
                for k in 0..=m.min(n) {
                    let values: Vec<_> = Evaluator::ALL.iter().map(|&e| engine.evaluate(e, m, n, k, &at).unwrap()).collect();
                    assert!(values.iter().all(|v| *v == values[0]), "m={m} n={n} k={k}: {values:?}");
                }
            }
        }
    }
}

#[test]
fn evaluators_are_symmetric_in_q_and_t() {
    let engine = SfEngine::default();
    let at = EvalPoint::integers(3, 107, 0);
    for &(m, n, k) in &[(2, 1, 0), (2, 2, 1), (3, 1, 1), (1, 3, 0)] {
        for e in Evaluator::ALL {
            assert_eq!(engine.evaluate(e, m, n, k, &at).unwrap(), engine.evaluate(e, m, n, k, &at.swapped()).unwrap());
        }
    }
}

#[test]
fn two_part_delta_matches_two_car_enumerator() {
    let engine = SfEngine::default();
    for at in points() {
        for size in 1..=4u32 {
            for m in 0..=size {
                let n = size - m;
                for k in 0..=m.min(n) {
                    let f = qt_enumerator(&FamilySpec::two_car(m, n, k, false)).unwrap();
                    assert_eq!(engine.lhs_delta_hh(m, n, k, &at).unwrap(), poly_at(&f, &at), "m={m} n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn delta_by_content_matches_partially_labelled_paths() {
    let engine = SfEngine::default();
    let at = points()[0].clone();
    for size in 1..=4u32 {
        for n in 1..=size {
            let m = size - n;
            for k in 0..=2.min(n - 1) {
                let table = qt_enumerator_by_content(m, n, k).unwrap();
                for lambda in Partition::all(n) {
                    let mut key = lambda.parts().to_vec();
                    key.resize(n as usize, 0);
                    let f = table.get(&key).cloned().unwrap_or_default();
                    let v = engine.delta_lhs_by_content(m, n, k, &lambda, &at).unwrap();
                    assert_eq!(v, poly_at(&f, &at), "m={m} n={n} k={k} λ={lambda}");
                }
            }
        }
    }
    assert_eq!(engine.delta_lhs_by_content(0, 1, 0, &p(&[1]), &at).unwrap(), BigRational::from_integer(1.into()));
}

#[test]
fn out_of_range_parameters() {
    let engine = SfEngine::default();
    let at = points()[0].clone();
    assert!(matches!(engine.lhs_delta_hh(1, 2, 2, &at), Err(MacError::Domain(_))));
    assert!(matches!(engine.lhs_delta_hh(0, 0, 0, &at), Err(MacError::Domain(_))));
    assert!(matches!(SfEngine::new(3).lhs_delta_hh(2, 2, 0, &at), Err(MacError::Capacity { .. })));
}
