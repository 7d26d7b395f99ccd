use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DecoratedLabelledPath, LatticeError};

/// The path families, with their parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Unlabelled Dyck paths of size `n`.
    Dyck { n: u32 },
    /// Labelled Dyck paths of size `n` with positive labels.
    Labelled { n: u32 },
    /// Partially labelled paths with `m` zero labels, `n` positive labels, a nonzero label in
    /// row 1 and `k` decorated rises.
    PartiallyLabelled { m: u32, n: u32, k: u32 },
    /// Partially labelled paths of size `m + n + 1` whose `m + 1` zero labels all sit in valleys
    /// and whose positive labels are `1..=n` in reading order, each on a decorated rise.
    CatalanPld { m: u32, n: u32 },
    /// Paths with `n` labels 1 and `m` labels 2 and `k` decorated rises, optionally preceded by
    /// the ghost car.
    TwoCar { m: u32, n: u32, k: u32, ghost: bool },
    /// Labels `1..=m+n` with reading word in `(n..1)` shuffled with `(m+n..n+1)`, and `k`
    /// decorated rises.
    TwoShuffle { m: u32, n: u32, k: u32 },
    /// Labels `1..=m+n-k` with reading word in `(1..k)`, `(n..k+1)` and `(m+n-k..n+1)` shuffled.
    ShuffleKnm { k: u32, n: u32, m: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dyck { n } => write!(f, "D({n})"),
            Family::Labelled { n } => write!(f, "LD({n})"),
            Family::PartiallyLabelled { m, n, k } => write!(f, "PLD({m},{n})*{k}"),
            Family::CatalanPld { m, n } => write!(f, "Catalan-PLD({m},{n})"),
            Family::TwoCar { m, n, k, ghost } => {
                write!(f, "PF2({m},{n})*{k}{}", if *ghost { " with ghost" } else { "" })
            }
            Family::TwoShuffle { m, n, k } => write!(f, "two-shuffle({m},{n})*{k}"),
            Family::ShuffleKnm { k, n, m } => write!(f, "({k},{n},{m})-shuffle"),
        }
    }
}

impl Family {
    /// Number of rows of every member.
    pub fn size(&self) -> u32 {
        match *self {
            Family::Dyck { n } | Family::Labelled { n } => n,
            Family::PartiallyLabelled { m, n, .. } | Family::TwoShuffle { m, n, .. } => m + n,
            Family::CatalanPld { m, n } => m + n + 1,
            Family::TwoCar { m, n, ghost, .. } => m + n + ghost as u32,
            Family::ShuffleKnm { k, n, m } => (m + n).saturating_sub(k),
        }
    }

    pub fn contains(&self, path: &DecoratedLabelledPath) -> bool {
        validate_family(path, self).is_ok()
    }
}

/// Whether `word` is a shuffle of the given runs, each run being a sequence of distinct values.
pub fn is_shuffle_of(word: &[u32], runs: &[Vec<u32>]) -> bool {
    let mut pos = vec![0usize; runs.len()];
    'letters: for &x in word {
        for (r, run) in runs.iter().enumerate() {
            if run.get(pos[r]) == Some(&x) {
                pos[r] += 1;
                continue 'letters;
            }
        }
        return false;
    }
    pos.iter().zip(runs).all(|(&p, r)| p == r.len())
}

fn desc(hi: u32, lo: u32) -> Vec<u32> {
    if hi < lo {
        Vec::new()
    } else {
        (lo..=hi).rev().collect()
    }
}

/// Checks membership of `path` in `family`, naming the first violated condition.
pub fn validate_family(path: &DecoratedLabelledPath, family: &Family) -> Result<(), LatticeError> {
    let fail = |reason: String| Err(LatticeError::NotMember { family: family.to_string(), reason });
    if path.size() != family.size() as usize {
        return fail(format!("size {} but the family has size {}", path.size(), family.size()));
    }
    let ghost_expected = matches!(family, Family::TwoCar { ghost: true, .. });
    if path.ghost_row() != ghost_expected {
        return fail(if ghost_expected { "missing ghost row".into() } else { "unexpected ghost row".into() });
    }
    let decorations = path.decorated_rises().len() as u32;
    let labels = path.labels();
    let permutation_of = |size: u32| -> Option<Vec<u32>> {
        let l = labels?;
        let mut s = l.to_vec();
        s.sort_unstable();
        (s == (1..=size).collect::<Vec<_>>()).then(|| path.dinv_reading_word())
    };
    match *family {
        Family::Dyck { .. } => {
            if labels.is_some() {
                return fail("Dyck paths are unlabelled".into());
            }
            if decorations != 0 {
                return fail("Dyck paths carry no decorations".into());
            }
        }
        Family::Labelled { .. } => {
            let Some(l) = labels else { return fail("path is unlabelled".into()) };
            if l.contains(&0) {
                return fail("labels must be positive".into());
            }
            if decorations != 0 {
                return fail("labelled paths carry no decorations".into());
            }
        }
        Family::PartiallyLabelled { m, n, k } => {
            let Some(l) = labels else { return fail("path is unlabelled".into()) };
            let zeros = l.iter().filter(|&&x| x == 0).count() as u32;
            if zeros != m {
                return fail(format!("{zeros} zero labels, expected {m}"));
            }
            if n > 0 && l[0] == 0 {
                return fail("row 1 carries a zero label".into());
            }
            if decorations != k {
                return fail(format!("{decorations} decorated rises, expected {k}"));
            }
        }
        Family::CatalanPld { n, .. } => {
            let Some(l) = labels else { return fail("path is unlabelled".into()) };
            let a = path.area_word();
            for i in 0..l.len() {
                let rise = i > 0 && a[i] > a[i - 1];
                if l[i] == 0 && rise {
                    return fail(format!("zero label in row {} is not a valley", i + 1));
                }
                if l[i] > 0 && !path.is_decorated(i + 1) {
                    return fail(format!("positive label in row {} is not on a decorated rise", i + 1));
                }
            }
            if path.dinv_reading_word() != (1..=n).collect::<Vec<_>>() {
                return fail(format!("positive labels are not 1..{n} in reading order"));
            }
        }
        Family::TwoCar { m, n, k, ghost } => {
            let Some(l) = labels else { return fail("path is unlabelled".into()) };
            let body = &l[ghost as usize..];
            if body.iter().any(|&x| x != 1 && x != 2) {
                return fail("labels must be 1 or 2".into());
            }
            let ones = body.iter().filter(|&&x| x == 1).count() as u32;
            if ones != n || body.len() as u32 - ones != m {
                return fail(format!("expected {n} labels 1 and {m} labels 2"));
            }
            if decorations != k {
                return fail(format!("{decorations} decorated rises, expected {k}"));
            }
        }
        Family::TwoShuffle { m, n, k } => {
            let Some(word) = permutation_of(m + n) else {
                return fail(format!("labels are not a permutation of 1..{}", m + n));
            };
            if !is_shuffle_of(&word, &[desc(n, 1), desc(m + n, n + 1)]) {
                return fail("reading word is not in the two-run shuffle".into());
            }
            if decorations != k {
                return fail(format!("{decorations} decorated rises, expected {k}"));
            }
        }
        Family::ShuffleKnm { k, n, m } => {
            if k > n || k > m {
                return fail("requires k <= n and k <= m".into());
            }
            let Some(word) = permutation_of(m + n - k) else {
                return fail(format!("labels are not a permutation of 1..{}", m + n - k));
            };
            let runs = [(1..=k).collect(), desc(n, k + 1), desc(m + n - k, n + 1)];
            if !is_shuffle_of(&word, &runs) {
                return fail("reading word is not in the three-run shuffle".into());
            }
            if decorations != 0 {
                return fail("shuffle paths carry no decorations".into());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_path_is_labelled() {
        let p = DecoratedLabelledPath::labelled(vec![0, 1, 2, 1, 2, 0, 1, 1], vec![2, 4, 5, 1, 3, 2, 6, 1]).unwrap();
        assert!(validate_family(&p, &Family::Labelled { n: 8 }).is_ok());
        assert!(validate_family(&p, &Family::Labelled { n: 7 }).is_err());
        assert!(validate_family(&p, &Family::Dyck { n: 8 }).is_err());
    }

    #[test]
    fn single_north_step() {
        let p = DecoratedLabelledPath::labelled(vec![0], vec![1]).unwrap();
        assert!(Family::Labelled { n: 1 }.contains(&p));
        assert!(Family::PartiallyLabelled { m: 0, n: 1, k: 0 }.contains(&p));
    }

    #[test]
    fn shuffle_membership() {
        assert!(is_shuffle_of(&[5, 1, 8, 2, 7, 3, 6, 4], &[vec![1, 2, 3], vec![5, 4], vec![8, 7, 6]]));
        assert!(!is_shuffle_of(&[1, 2], &[vec![2, 1]]));
        let p = DecoratedLabelledPath::labelled(vec![0, 1, 1, 1, 0, 1, 2, 2], vec![5, 8, 2, 7, 1, 3, 6, 4]).unwrap();
        assert_eq!(p.dinv_reading_word(), vec![5, 1, 8, 2, 7, 3, 6, 4]);
        assert!(Family::ShuffleKnm { k: 3, n: 5, m: 6 }.contains(&p));
        assert!(!Family::ShuffleKnm { k: 2, n: 5, m: 5 }.contains(&p));
    }

    #[test]
    fn diagnostics_name_the_family() {
        let p = DecoratedLabelledPath::labelled(vec![0, 0], vec![0, 1]).unwrap();
        let err = validate_family(&p, &Family::PartiallyLabelled { m: 1, n: 1, k: 0 }).unwrap_err();
        assert_eq!(err.to_string(), "not a member of PLD(1,1)*0: row 1 carries a zero label");
    }

    #[test]
    fn catalan_pld_members() {
        let p = DecoratedLabelledPath::new(
            vec![0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3],
            Some(vec![0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0]),
            [2, 3, 7, 8, 10],
            false,
        )
        .unwrap();
        assert!(Family::CatalanPld { m: 6, n: 5 }.contains(&p));
        let undecorated = DecoratedLabelledPath::labelled(vec![0, 1], vec![0, 1]).unwrap();
        assert!(!Family::CatalanPld { m: 0, n: 1 }.contains(&undecorated));
    }

    #[test]
    fn two_car_with_ghost() {
        let p = DecoratedLabelledPath::new(vec![0, 0, 1], Some(vec![2, 1, 2]), [], true).unwrap();
        assert!(Family::TwoCar { m: 1, n: 1, k: 0, ghost: true }.contains(&p));
        assert!(!Family::TwoCar { m: 1, n: 1, k: 0, ghost: false }.contains(&p));
        assert!(Family::TwoCar { m: 1, n: 1, k: 0, ghost: false }.contains(&p.without_ghost()));
    }
}
