//! The bijection from `(k,n,m)`-shuffle paths to decorated two-car parking functions, and the
//! recursive step on shuffle paths.

use serde::Serialize;

use crate::lattice::{validate_family, DecoratedLabelledPath, Family};

use super::BijectionError;

/// A label during the forward map: bold labels sit above every regular one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Car {
    Regular(u32),
    Bold(u32),
}

/// Parameters `(k, n, m)` of a decorated two-car parking function with ghost car.
pub fn two_car_params(p: &DecoratedLabelledPath) -> Result<(u32, u32, u32), BijectionError> {
    if !p.ghost_row() {
        return Err(BijectionError::Domain("expected a ghost car".into()));
    }
    let labels = &p.labels().unwrap_or_default()[1..];
    let n = labels.iter().filter(|&&l| l == 1).count() as u32;
    let m = labels.len() as u32 - n;
    let k = p.decorated_rises().len() as u32;
    validate_family(p, &Family::TwoCar { m, n, k, ghost: true })?;
    Ok((k, n, m))
}

/// Sends a `(k,n,m)`-shuffle path to `PF²(m,n)^{*k}` with ghost car, preserving dinv and area.
pub fn ehh_forward(d: &DecoratedLabelledPath, k: u32, n: u32, m: u32) -> Result<DecoratedLabelledPath, BijectionError> {
    validate_family(d, &Family::ShuffleKnm { k, n, m })?;
    let labels = d.labels().unwrap_or_default();
    let mut area = d.area_word().to_vec();
    let mut cars: Vec<Car> = labels
        .iter()
        .map(|&l| match l {
            l if l <= k => Car::Regular(l),
            l if l <= n => Car::Bold(1),
            _ => Car::Bold(2),
        })
        .collect();
    let mut decorated = vec![false; area.len()];
    for i in (1..=k).rev() {
        let p = cars
            .iter()
            .position(|&c| c == Car::Regular(i))
            .ok_or_else(|| BijectionError::Invariant(format!("small car {i} is missing")))?;
        area.insert(p + 1, area[p] + 1);
        cars.insert(p + 1, Car::Bold(2));
        decorated.insert(p + 1, true);
        cars[p] = Car::Bold(1);
    }
    let mut out_area = vec![0];
    out_area.extend(area);
    let mut out_labels = vec![2];
    out_labels.extend(cars.iter().map(|c| match c {
        Car::Bold(v) | Car::Regular(v) => *v,
    }));
    let rises = decorated.iter().enumerate().filter(|(_, &d)| d).map(|(i, _)| i + 2);
    Ok(DecoratedLabelledPath::new(out_area, Some(out_labels), rises, true)?)
}

/// Inverse of [`ehh_forward`]; the parameters are read off the parking function.
pub fn ehh_inverse(p: &DecoratedLabelledPath) -> Result<(DecoratedLabelledPath, (u32, u32, u32)), BijectionError> {
    let (k, n, m) = two_car_params(p)?;
    let body = p.without_ghost();
    let a = body.area_word();
    let l = body.labels().unwrap_or_default();
    let size = a.len();
    let dec = |i: usize| body.is_decorated(i + 1);
    for i in 0..size {
        if dec(i) && (l[i] != 2 || l[i - 1] != 1) {
            return Err(BijectionError::Domain(format!("decorated row {} is not a 2 above a 1", i + 2)));
        }
        if i + 2 < size && a[i + 1] == a[i] + 1 && a[i + 2] == a[i + 1] + 1 {
            return Err(BijectionError::Domain("more than two consecutive vertical steps".into()));
        }
    }
    let order = body.reading_order();
    let mut new = vec![0u32; size];
    let before_decorated = |i: usize| i + 1 < size && dec(i + 1);
    let mut next = n;
    for &i in order.iter().filter(|&&i| l[i] == 1 && !before_decorated(i)) {
        new[i] = next;
        next -= 1;
    }
    let mut next = m + n - k;
    for &i in order.iter().filter(|&&i| l[i] == 2 && !dec(i)) {
        new[i] = next;
        next -= 1;
    }
    let mut next = 1;
    for &i in order.iter().filter(|&&i| l[i] == 1 && before_decorated(i)) {
        new[i] = next;
        next += 1;
    }
    let keep: Vec<usize> = (0..size).filter(|&i| !dec(i)).collect();
    let out = DecoratedLabelledPath::labelled(keep.iter().map(|&i| a[i]).collect(), keep.iter().map(|&i| new[i]).collect())?;
    validate_family(&out, &Family::ShuffleKnm { k, n, m })?;
    Ok((out, (k, n, m)))
}

/// Counts removed by one recursive step on a shuffle path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StepSummary {
    /// Small and medium cars on the main diagonal.
    pub s: u32,
    /// Small cars on the main diagonal.
    pub h: u32,
    /// `h` plus the big cars at height 1.
    pub u: u32,
    /// Big cars on the main diagonal plus one.
    pub r: u32,
}

/// Result of [`shuffle_recursion_step`]. `m` is `-1` when no big car was left to delete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleStep {
    pub path: DecoratedLabelledPath,
    pub k: u32,
    pub n: u32,
    pub m: i64,
    pub summary: StepSummary,
}

/// One recursive step on a `(k,n,m)`-shuffle path: medium and big cars on the main diagonal are
/// deleted, small cars there become big cars, every other row moves one diagonal down, the big
/// car now in row 1 is deleted, and labels are renumbered within their car classes.
pub fn shuffle_recursion_step(d: &DecoratedLabelledPath, k: u32, n: u32, m: u32) -> Result<ShuffleStep, BijectionError> {
    validate_family(d, &Family::ShuffleKnm { k, n, m })?;
    #[derive(Clone, Copy, PartialEq)]
    enum Class {
        Small,
        Medium,
        Big,
    }
    let class = |l: u32| match l {
        l if l <= k => Class::Small,
        l if l <= n => Class::Medium,
        _ => Class::Big,
    };
    let a = d.area_word();
    let l = d.labels().unwrap_or_default();
    let (mut h, mut s, mut big_diag, mut big_one) = (0, 0, 0, 0);
    let mut rows: Vec<(u32, Class)> = Vec::new();
    for (&ai, &li) in a.iter().zip(l) {
        let c = class(li);
        match (ai, c) {
            (0, Class::Small) => {
                h += 1;
                s += 1;
                rows.push((0, Class::Big));
            }
            (0, Class::Medium) => s += 1,
            (0, Class::Big) => big_diag += 1,
            (_, c) => {
                if ai == 1 && c == Class::Big {
                    big_one += 1;
                }
                rows.push((ai - 1, c));
            }
        }
    }
    if let Some(&(_, first)) = rows.first() {
        if first != Class::Big {
            return Err(BijectionError::Invariant("row 1 is not a big car after the push-down".into()));
        }
        rows.remove(0);
    }
    let summary = StepSummary { s, h, u: big_one + h, r: big_diag + 1 };
    let (k2, n2, m2) = (k - h, n - s, m as i64 - summary.r as i64);
    let area: Vec<u32> = rows.iter().map(|r| r.0).collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (area[i], i));
    let mut labels = vec![0; rows.len()];
    let (mut small, mut medium, mut big) = (1, n2, (m2 + n2 as i64 - k2 as i64).max(0) as u32);
    for &i in &order {
        let slot = match rows[i].1 {
            Class::Small => &mut small,
            Class::Medium => &mut medium,
            Class::Big => &mut big,
        };
        labels[i] = *slot;
        if rows[i].1 == Class::Small {
            *slot += 1;
        } else {
            *slot -= 1;
        }
    }
    let path = DecoratedLabelledPath::labelled(area, labels)?;
    if m2 >= 0 {
        validate_family(&path, &Family::ShuffleKnm { k: k2, n: n2, m: m2 as u32 })?;
    } else if !path.is_empty() {
        return Err(BijectionError::Invariant("rows left without any big car to delete".into()));
    }
    Ok(ShuffleStep { path, k: k2, n: n2, m: m2, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_shuffle_path() -> DecoratedLabelledPath {
        DecoratedLabelledPath::labelled(vec![0, 1, 1, 1, 0, 1, 2, 2], vec![5, 8, 2, 7, 1, 3, 6, 4]).unwrap()
    }

    #[test]
    fn figure_forward_image() {
        let d = figure_shuffle_path();
        let p = ehh_forward(&d, 3, 5, 6).unwrap();
        assert_eq!(p.area_word(), &[0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2]);
        assert_eq!(p.labels().unwrap(), &[2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1]);
        assert_eq!(p.decorated_rises().iter().copied().collect::<Vec<_>>(), vec![5, 8, 10]);
        assert_eq!((p.dinv(), p.area()), (d.dinv(), d.area()));
        assert_eq!(ehh_inverse(&p).unwrap(), (d, (3, 5, 6)));
    }

    #[test]
    fn no_small_cars_is_relabelling() {
        let d = DecoratedLabelledPath::labelled(vec![0, 1], vec![1, 2]).unwrap();
        let p = ehh_forward(&d, 0, 1, 1).unwrap();
        assert_eq!(p.labels().unwrap(), &[2, 1, 2]);
        assert!(p.decorated_rises().is_empty());
    }

    #[test]
    fn recursion_step_examples() {
        let d = DecoratedLabelledPath::labelled(vec![0, 1], vec![1, 2]).unwrap();
        let step = shuffle_recursion_step(&d, 0, 1, 1).unwrap();
        assert!(step.path.is_empty());
        assert_eq!((step.k, step.n, step.m), (0, 0, 0));
        assert_eq!(step.summary, StepSummary { s: 1, h: 0, u: 1, r: 1 });
        let bigs = DecoratedLabelledPath::labelled(vec![0, 0], vec![2, 1]).unwrap();
        let step = shuffle_recursion_step(&bigs, 0, 0, 2).unwrap();
        assert!(step.path.is_empty());
        assert_eq!(step.m, -1);
        assert_eq!(step.summary.r, 3);
    }

    #[test]
    fn out_of_domain() {
        let d = figure_shuffle_path();
        assert!(ehh_forward(&d, 2, 5, 5).is_err());
        let no_ghost = DecoratedLabelledPath::labelled(vec![0], vec![1]).unwrap();
        assert!(ehh_inverse(&no_ghost).is_err());
    }
}
