use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Composition, LatticeError};

/// A Dyck path given by its area word, with optional labels, a set of decorated rises and an
/// optional ghost row.
///
/// Row indices are 1-based throughout: row `i` has area letter `area_word()[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPath", into = "RawPath")]
pub struct DecoratedLabelledPath {
    area_word: Vec<u32>,
    labels: Option<Vec<u32>>,
    decorated_rises: BTreeSet<usize>,
    ghost_row: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawPath {
    area_word: Vec<u32>,
    #[serde(default)]
    labels: Option<Vec<u32>>,
    #[serde(default)]
    decorated_rises: Vec<usize>,
    #[serde(default)]
    ghost_row: bool,
}

impl TryFrom<RawPath> for DecoratedLabelledPath {
    type Error = LatticeError;
    fn try_from(r: RawPath) -> Result<Self, Self::Error> {
        DecoratedLabelledPath::new(r.area_word, r.labels, r.decorated_rises, r.ghost_row)
    }
}

impl From<DecoratedLabelledPath> for RawPath {
    fn from(p: DecoratedLabelledPath) -> Self {
        RawPath {
            area_word: p.area_word,
            labels: p.labels,
            decorated_rises: p.decorated_rises.into_iter().collect(),
            ghost_row: p.ghost_row,
        }
    }
}

/// A path serialized together with the name of the family it was produced for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub family: String,
    #[serde(flatten)]
    pub path: DecoratedLabelledPath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DinvKind {
    Primary,
    Secondary,
}

/// A diagonal inversion `(i, j)` with `i < j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DinvPair {
    pub i: usize,
    pub j: usize,
    pub kind: DinvKind,
}

fn check_area_word(a: &[u32]) -> Result<(), LatticeError> {
    if let Some(&first) = a.first() {
        if first != 0 {
            return Err(LatticeError::AreaWord(format!("first letter is {first}, expected 0")));
        }
    }
    for i in 1..a.len() {
        if a[i] > a[i - 1] + 1 {
            return Err(LatticeError::AreaWord(format!(
                "letter {} at row {} exceeds the successor of {}",
                a[i],
                i + 1,
                a[i - 1]
            )));
        }
    }
    Ok(())
}

impl DecoratedLabelledPath {
    /// Validates and builds a path. `decorated_rises` holds 1-based row indices.
    pub fn new(
        area_word: Vec<u32>,
        labels: Option<Vec<u32>>,
        decorated_rises: impl IntoIterator<Item = usize>,
        ghost_row: bool,
    ) -> Result<Self, LatticeError> {
        check_area_word(&area_word)?;
        let n = area_word.len();
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(LatticeError::Labels(format!("{} labels for {} rows", l.len(), n)));
            }
            for i in 1..n {
                if area_word[i] == area_word[i - 1] + 1 && l[i] <= l[i - 1] {
                    return Err(LatticeError::Labels(format!(
                        "column not strictly increasing at row {}: {} above {}",
                        i + 1,
                        l[i],
                        l[i - 1]
                    )));
                }
            }
        }
        let decorated_rises: BTreeSet<usize> = decorated_rises.into_iter().collect();
        for &d in &decorated_rises {
            if d < 2 || d > n || area_word[d - 1] <= area_word[d - 2] {
                return Err(LatticeError::Decorations(format!("row {d} is not a rise")));
            }
        }
        if ghost_row {
            match &labels {
                _ if n == 0 => return Err(LatticeError::Ghost("empty path has no ghost row".into())),
                Some(l) if l[0] == 2 => {}
                _ => return Err(LatticeError::Ghost("ghost row must carry the big car label 2".into())),
            }
        }
        Ok(Self { area_word, labels, decorated_rises, ghost_row })
    }

    pub fn unlabelled(area_word: Vec<u32>) -> Result<Self, LatticeError> {
        Self::new(area_word, None, [], false)
    }

    pub fn labelled(area_word: Vec<u32>, labels: Vec<u32>) -> Result<Self, LatticeError> {
        Self::new(area_word, Some(labels), [], false)
    }

    /// The path with no rows.
    pub fn empty() -> Self {
        Self { area_word: Vec::new(), labels: Some(Vec::new()), decorated_rises: BTreeSet::new(), ghost_row: false }
    }

    pub fn size(&self) -> usize {
        self.area_word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.area_word.is_empty()
    }

    pub fn area_word(&self) -> &[u32] {
        &self.area_word
    }

    pub fn labels(&self) -> Option<&[u32]> {
        self.labels.as_deref()
    }

    /// Label of 1-based row `i`.
    pub fn label(&self, i: usize) -> Option<u32> {
        self.labels.as_ref().map(|l| l[i - 1])
    }

    pub fn decorated_rises(&self) -> &BTreeSet<usize> {
        &self.decorated_rises
    }

    pub fn is_decorated(&self, i: usize) -> bool {
        self.decorated_rises.contains(&i)
    }

    pub fn ghost_row(&self) -> bool {
        self.ghost_row
    }

    /// 1-based rows `i >= 2` with `a_i > a_{i-1}`.
    pub fn rises(&self) -> Vec<usize> {
        (2..=self.size()).filter(|&i| self.area_word[i - 1] > self.area_word[i - 2]).collect()
    }

    /// Rows whose vertical step is preceded by a horizontal step, or the first row.
    pub fn valleys(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&i| i == 1 || self.area_word[i - 1] <= self.area_word[i - 2]).collect()
    }

    /// Zero-labelled valleys.
    pub fn zero_valleys(&self) -> Vec<usize> {
        match &self.labels {
            None => Vec::new(),
            Some(l) => self.valleys().into_iter().filter(|&i| l[i - 1] == 0).collect(),
        }
    }

    /// Rows on the main diagonal, i.e. with area letter 0.
    pub fn diagonal_rows(&self) -> Vec<usize> {
        (1..=self.size()).filter(|&i| self.area_word[i - 1] == 0).collect()
    }

    /// Sum of the area letters outside decorated rises.
    pub fn area(&self) -> u64 {
        self.area_word
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.decorated_rises.contains(&(i + 1)))
            .map(|(_, &a)| a as u64)
            .sum()
    }

    /// All diagonal inversions; decorations play no role. Unlabelled paths count every pair
    /// whose area letters allow an inversion.
    pub fn dinv_pairs(&self) -> Vec<DinvPair> {
        let a = &self.area_word;
        let mut out = Vec::new();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                let (li, lj) = match &self.labels {
                    Some(l) => (Some(l[i]), Some(l[j])),
                    None => (None, None),
                };
                if a[i] == a[j] && li.zip(lj).is_none_or(|(x, y)| x < y) {
                    out.push(DinvPair { i: i + 1, j: j + 1, kind: DinvKind::Primary });
                } else if a[i] == a[j] + 1 && li.zip(lj).is_none_or(|(x, y)| x > y) {
                    out.push(DinvPair { i: i + 1, j: j + 1, kind: DinvKind::Secondary });
                }
            }
        }
        out
    }

    pub fn dinv(&self) -> u64 {
        self.dinv_pairs().len() as u64
    }

    /// 0-based row indices in dinv reading order: by diagonal, then bottom to top.
    pub fn reading_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.size()).collect();
        idx.sort_by_key(|&i| (self.area_word[i], i));
        idx
    }

    /// Positive labels in reading order, excluding the ghost row. Empty for unlabelled paths.
    pub fn dinv_reading_word(&self) -> Vec<u32> {
        let Some(l) = &self.labels else { return Vec::new() };
        self.reading_order()
            .into_iter()
            .filter(|&i| !(self.ghost_row && i == 0) && l[i] > 0)
            .map(|i| l[i])
            .collect()
    }

    fn anchored_composition(&self, is_member: impl Fn(u32) -> bool, what: &str) -> Result<Composition, LatticeError> {
        let l = self.labels.as_ref().ok_or_else(|| LatticeError::Domain("path is unlabelled".into()))?;
        let mut parts: Vec<u32> = Vec::new();
        for (i, &lab) in l.iter().enumerate() {
            if !is_member(lab) {
                continue;
            }
            if self.area_word[i] == 0 {
                parts.push(1);
            } else if let Some(last) = parts.last_mut() {
                *last += 1;
            } else {
                return Err(LatticeError::Domain(format!("{what} in row {} precedes every diagonal {what}", i + 1)));
            }
        }
        if parts.is_empty() {
            return Err(LatticeError::Domain(format!("no {what} on the main diagonal")));
        }
        Composition::new(parts).map_err(LatticeError::Domain)
    }

    /// Counts of zero labels between consecutive zero labels on the main diagonal. Requires a
    /// zero label in the bottom-left corner.
    pub fn zero_composition(&self) -> Result<Composition, LatticeError> {
        if self.label(1) != Some(0) {
            return Err(LatticeError::Domain("no zero label in the bottom-left corner".into()));
        }
        self.anchored_composition(|l| l == 0, "zero label")
    }

    /// Counts of big cars (label 2) between consecutive big cars on the main diagonal, the
    /// ghost car included when present.
    pub fn big_car_composition(&self) -> Result<Composition, LatticeError> {
        let l = self.labels.as_ref().ok_or_else(|| LatticeError::Domain("path is unlabelled".into()))?;
        if l.iter().any(|&x| x != 1 && x != 2) {
            return Err(LatticeError::Domain("labels must all be 1 or 2".into()));
        }
        self.anchored_composition(|l| l == 2, "big car")
    }

    /// Prepends a ghost car (area 0, label 2) and shifts decorations.
    pub fn with_ghost(&self) -> Result<Self, LatticeError> {
        if self.ghost_row {
            return Ok(self.clone());
        }
        let l = self.labels.as_ref().ok_or_else(|| LatticeError::Ghost("unlabelled path".into()))?;
        let mut aw = vec![0];
        aw.extend(self.area_word.iter().map(|&a| a));
        let mut labels = vec![2];
        labels.extend_from_slice(l);
        Self::new(aw, Some(labels), self.decorated_rises.iter().map(|d| d + 1), true)
    }

    /// Removes the ghost row, if any.
    pub fn without_ghost(&self) -> Self {
        if !self.ghost_row {
            return self.clone();
        }
        Self {
            area_word: self.area_word[1..].to_vec(),
            labels: self.labels.as_ref().map(|l| l[1..].to_vec()),
            decorated_rises: self.decorated_rises.iter().map(|d| d - 1).collect(),
            ghost_row: false,
        }
    }

    /// Multiplicity of each positive label `1..=max`, ghost row excluded.
    pub fn content(&self, max: u32) -> Vec<u32> {
        let mut c = vec![0; max as usize];
        if let Some(l) = &self.labels {
            for (i, &x) in l.iter().enumerate() {
                if (self.ghost_row && i == 0) || x == 0 {
                    continue;
                }
                if (x as usize) <= c.len() {
                    c[x as usize - 1] += 1;
                }
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn figure_labelled_path() -> DecoratedLabelledPath {
        DecoratedLabelledPath::labelled(vec![0, 1, 2, 1, 2, 0, 1, 1], vec![2, 4, 5, 1, 3, 2, 6, 1]).unwrap()
    }

    #[test]
    fn labelled_figure_statistics() {
        let p = figure_labelled_path();
        assert_eq!(p.area(), 8);
        assert_eq!(p.dinv(), 6);
        let pairs = p.dinv_pairs();
        let primary: Vec<(usize, usize)> =
            pairs.iter().filter(|x| x.kind == DinvKind::Primary).map(|x| (x.i, x.j)).collect();
        let secondary: Vec<(usize, usize)> =
            pairs.iter().filter(|x| x.kind == DinvKind::Secondary).map(|x| (x.i, x.j)).collect();
        assert_eq!(primary, vec![(2, 7), (4, 7)]);
        assert_eq!(secondary, vec![(2, 6), (3, 4), (3, 8), (5, 8)]);
        assert_eq!(p.dinv_reading_word(), vec![2, 2, 4, 1, 6, 1, 5, 3]);
    }

    #[test]
    fn small_cases() {
        let single = DecoratedLabelledPath::labelled(vec![0], vec![7]).unwrap();
        assert_eq!(single.dinv(), 0);
        assert_eq!(single.dinv_reading_word(), vec![7]);
        let flat = DecoratedLabelledPath::labelled(vec![0, 0], vec![1, 2]).unwrap();
        assert_eq!(flat.dinv(), 1);
        let dec = DecoratedLabelledPath::new(vec![0, 1, 1], None, [2], false).unwrap();
        assert_eq!(dec.area(), 1);
        assert_eq!(DecoratedLabelledPath::unlabelled(vec![0, 0, 0]).unwrap().area(), 0);
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(matches!(DecoratedLabelledPath::unlabelled(vec![1]), Err(LatticeError::AreaWord(_))));
        assert!(matches!(DecoratedLabelledPath::unlabelled(vec![0, 2]), Err(LatticeError::AreaWord(_))));
        assert!(matches!(DecoratedLabelledPath::labelled(vec![0, 1], vec![2, 1]), Err(LatticeError::Labels(_))));
        assert!(matches!(DecoratedLabelledPath::labelled(vec![0, 0], vec![1]), Err(LatticeError::Labels(_))));
        assert!(matches!(DecoratedLabelledPath::new(vec![0, 0], None, [2], false), Err(LatticeError::Decorations(_))));
        assert!(matches!(DecoratedLabelledPath::new(vec![0, 1], None, [1], false), Err(LatticeError::Decorations(_))));
        assert!(matches!(
            DecoratedLabelledPath::new(vec![0, 0], Some(vec![1, 2]), [], true),
            Err(LatticeError::Ghost(_))
        ));
    }

    #[test]
    fn zero_composition_of_figure() {
        let p = DecoratedLabelledPath::labelled(
            vec![0, 1, 2, 2, 2, 0, 1, 2, 0, 1, 1, 0],
            vec![0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0],
        )
        .unwrap();
        assert_eq!(p.zero_composition().unwrap().parts(), &[3, 1, 2, 1]);
        assert_eq!(p.dinv_reading_word(), vec![1, 3, 5, 2, 4]);
        let all_diag = DecoratedLabelledPath::labelled(vec![0, 0, 0], vec![0, 0, 0]).unwrap();
        assert_eq!(all_diag.zero_composition().unwrap().parts(), &[1, 1, 1]);
        let no_corner = DecoratedLabelledPath::labelled(vec![0, 0], vec![1, 0]).unwrap();
        assert!(no_corner.zero_composition().is_err());
    }

    #[test]
    fn big_car_composition_of_figure() {
        let p = DecoratedLabelledPath::new(
            vec![0, 0, 1, 1, 2, 0, 0, 1, 1, 2, 2, 0],
            Some(vec![2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2]),
            [],
            true,
        )
        .unwrap();
        assert_eq!(p.big_car_composition().unwrap().parts(), &[3, 3, 1]);
        let no_big = DecoratedLabelledPath::labelled(vec![0], vec![1]).unwrap();
        assert!(no_big.big_car_composition().is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = DecoratedLabelledPath::new(vec![0, 1, 1], Some(vec![1, 2, 2]), [2], false).unwrap();
        let rec = PathRecord { family: "pf2".into(), path: p.clone() };
        let s = serde_json::to_string(&rec).unwrap();
        assert_eq!(s, r#"{"family":"pf2","area_word":[0,1,1],"labels":[1,2,2],"decorated_rises":[2],"ghost_row":false}"#);
        let back: PathRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back.path, p);
        let bad = r#"{"family":"pf2","area_word":[0,2],"labels":null,"decorated_rises":[],"ghost_row":false}"#;
        assert!(serde_json::from_str::<PathRecord>(bad).is_err());
    }

    fn area_word() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..3, 1..9).prop_map(|steps| {
            let mut a = vec![0u32];
            for s in steps.into_iter().skip(1) {
                let prev = *a.last().unwrap();
                a.push(if s == 2 { prev + 1 } else { prev.saturating_sub(s) });
            }
            a
        })
    }

    fn two_car() -> impl Strategy<Value = DecoratedLabelledPath> {
        use crate::enumerate::{paths, FamilySpec};
        let mut all = Vec::new();
        for size in 1..=6 {
            for m in 0..=size {
                all.extend(paths(&FamilySpec::two_car(m, size - m, 1.min(size - m), false)).unwrap());
                all.extend(paths(&FamilySpec::two_car(m, size - m, 0, false)).unwrap());
            }
        }
        proptest::sample::select(all)
    }

    proptest! {
        #[test]
        fn ghost_row_changes_no_statistic(p in two_car()) {
            let g = p.with_ghost().unwrap();
            prop_assert_eq!(g.dinv(), p.dinv());
            prop_assert_eq!(g.area(), p.area());
            prop_assert_eq!(g.without_ghost(), p);
        }

        #[test]
        fn dinv_splits_into_primary_and_secondary(a in area_word()) {
            let p = DecoratedLabelledPath::unlabelled(a.clone()).unwrap();
            let mut expect = 0;
            for i in 0..a.len() {
                for j in i + 1..a.len() {
                    if a[i] == a[j] || a[i] == a[j] + 1 {
                        expect += 1;
                    }
                }
            }
            prop_assert_eq!(p.dinv(), expect);
        }

        #[test]
        fn reading_word_of_permutation_is_permutation(a in area_word(), seed in any::<u64>()) {
            // labels: a column-strict relabelling of 1..n obtained by sorting a shuffled list per column run
            let n = a.len();
            let mut labels: Vec<u32> = (1..=n as u32).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                labels.swap(i, (s >> 33) as usize % (i + 1));
            }
            let mut start = 0;
            for i in 1..=n {
                if i == n || a[i] != a[i - 1] + 1 {
                    labels[start..i].sort();
                    start = i;
                }
            }
            let p = DecoratedLabelledPath::labelled(a, labels).unwrap();
            let mut w = p.dinv_reading_word();
            w.sort();
            prop_assert_eq!(w, (1..=n as u32).collect::<Vec<_>>());
        }
    }
}
