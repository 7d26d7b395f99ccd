//! Exhaustive generation of path and polyomino families and their q,t-enumerators.

pub mod generate;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::lattice::{DecoratedLabelledPath, Family, LatticeError, PolyominoWord};
use crate::qt::{QtPoly, RSemantics};
use generate::{
    class_labellings, combinations, labellings_with_counts, partial_labellings, polyomino_words, AreaWords,
};

/// Default bound on the number of members a generator emits.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, thiserror::Error)]
pub enum EnumError {
    #[error("infinite family: {0}")]
    InfiniteFamily(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("generation stopped after {cap} members")]
    CapExceeded { cap: u64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    Dyck,
    LabelledContent,
    Pld,
    CatalanPld,
    Pf2,
    TwoShuffle,
    ShuffleKnm,
    Rp,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::Dyck,
        FamilyTag::LabelledContent,
        FamilyTag::Pld,
        FamilyTag::CatalanPld,
        FamilyTag::Pf2,
        FamilyTag::TwoShuffle,
        FamilyTag::ShuffleKnm,
        FamilyTag::Rp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Dyck => "d",
            FamilyTag::LabelledContent => "ld",
            FamilyTag::Pld => "pld",
            FamilyTag::CatalanPld => "catalan-pld",
            FamilyTag::Pf2 => "pf2",
            FamilyTag::TwoShuffle => "two-shuffle",
            FamilyTag::ShuffleKnm => "shuffle-knm",
            FamilyTag::Rp => "rp",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, EnumError> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s.to_ascii_lowercase())
            .ok_or_else(|| EnumError::InvalidSpec(format!("unknown family {s:?}")))
    }
}

/// A finite family together with its parameters.
///
/// `content`, when present, is a weak composition: entry `i` is the number of labels `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub r: Option<u32>,
    pub r_semantics: RSemantics,
    pub content: Option<Vec<u32>>,
    pub ghost: bool,
}

impl FamilySpec {
    pub fn new(tag: FamilyTag, m: u32, n: u32, k: u32) -> Self {
        Self { tag, m, n, k, r: None, r_semantics: RSemantics::NonGhost, content: None, ghost: false }
    }

    pub fn dyck(n: u32) -> Self {
        Self::new(FamilyTag::Dyck, 0, n, 0)
    }

    pub fn labelled_content(content: Vec<u32>) -> Self {
        let n = content.iter().sum();
        Self { content: Some(content), ..Self::new(FamilyTag::LabelledContent, 0, n, 0) }
    }

    pub fn pld(m: u32, n: u32, k: u32) -> Self {
        Self::new(FamilyTag::Pld, m, n, k)
    }

    pub fn catalan_pld(m: u32, n: u32) -> Self {
        Self::new(FamilyTag::CatalanPld, m, n, n)
    }

    pub fn two_car(m: u32, n: u32, k: u32, ghost: bool) -> Self {
        Self { ghost, ..Self::new(FamilyTag::Pf2, m, n, k) }
    }

    pub fn two_shuffle(m: u32, n: u32, k: u32) -> Self {
        Self::new(FamilyTag::TwoShuffle, m, n, k)
    }

    pub fn shuffle_knm(k: u32, n: u32, m: u32) -> Self {
        Self::new(FamilyTag::ShuffleKnm, m, n, k)
    }

    pub fn polyomino(m: u32, n: u32, k: u32) -> Self {
        Self::new(FamilyTag::Rp, m, n, k)
    }

    pub fn with_content(mut self, content: Vec<u32>) -> Self {
        self.content = Some(content);
        self
    }

    pub fn with_bucket(mut self, r: u32, semantics: RSemantics) -> Self {
        self.r = Some(r);
        self.r_semantics = semantics;
        self
    }

    /// The path family this spec generates, or `None` for polyominoes.
    pub fn family(&self) -> Option<Family> {
        let (m, n, k) = (self.m, self.n, self.k);
        Some(match self.tag {
            FamilyTag::Dyck => Family::Dyck { n },
            FamilyTag::LabelledContent => Family::Labelled { n },
            FamilyTag::Pld => Family::PartiallyLabelled { m, n, k },
            FamilyTag::CatalanPld => Family::CatalanPld { m, n },
            FamilyTag::Pf2 => Family::TwoCar { m, n, k, ghost: self.ghost },
            FamilyTag::TwoShuffle => Family::TwoShuffle { m, n, k },
            FamilyTag::ShuffleKnm => Family::ShuffleKnm { k, n, m },
            FamilyTag::Rp => return None,
        })
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let bad = |s: &str| Err(EnumError::InvalidSpec(format!("{}: {s}", self.tag)));
        if self.ghost && self.tag != FamilyTag::Pf2 {
            return bad("only two-car parking functions carry a ghost car");
        }
        if self.r.is_some() && self.tag != FamilyTag::Pf2 {
            return bad("r-buckets apply to two-car parking functions only");
        }
        if let Some(c) = &self.content {
            if !matches!(self.tag, FamilyTag::LabelledContent | FamilyTag::Pld) {
                return bad("content applies to labelled and partially labelled paths only");
            }
            if c.iter().sum::<u32>() != self.n {
                return bad("content weight differs from n");
            }
        }
        match self.tag {
            FamilyTag::LabelledContent if self.content.is_none() => Err(EnumError::InfiniteFamily(
                "labelled Dyck paths need a content to be finite".into(),
            )),
            FamilyTag::Pld if self.k >= self.n => bad("requires n > k"),
            FamilyTag::ShuffleKnm if self.k > self.n || self.k > self.m => bad("requires k <= n and k <= m"),
            _ => Ok(()),
        }
    }
}

/// One member of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Member {
    Path(DecoratedLabelledPath),
    Polyomino(PolyominoWord),
}

impl Member {
    pub fn dinv(&self) -> u64 {
        match self {
            Member::Path(p) => p.dinv(),
            Member::Polyomino(w) => w.dinv(),
        }
    }

    pub fn area(&self) -> u64 {
        match self {
            Member::Path(p) => p.area(),
            Member::Polyomino(w) => w.area(),
        }
    }

    pub fn weight(&self) -> QtPoly {
        QtPoly::monomial(1, self.dinv() as u32, self.area() as u32)
    }
}

/// A deterministic stream of members in canonical order, stopping at a cap.
pub struct Members {
    spec: FamilySpec,
    words: AreaWords,
    polyominoes: Option<std::vec::IntoIter<Vec<crate::lattice::Letter>>>,
    buffer: VecDeque<Member>,
    emitted: u64,
    cap: u64,
    truncated: bool,
}

impl Members {
    /// Whether the stream stopped at its cap with members left over.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    fn refill(&mut self) -> Result<bool, EnumError> {
        if let Some(words) = &mut self.polyominoes {
            let Some(letters) = words.next() else { return Ok(false) };
            let plain = PolyominoWord::new(letters, [])?;
            for dec in combinations(&plain.rises(), self.spec.k as usize) {
                self.buffer.push_back(Member::Polyomino(plain.with_decorations(dec)?));
            }
            return Ok(true);
        }
        let Some(a) = self.words.next() else { return Ok(false) };
        let s = &self.spec;
        let (m, n, k) = (s.m, s.n, s.k);
        let labellings: Vec<Option<Vec<u32>>> = match s.tag {
            FamilyTag::Dyck => vec![None],
            FamilyTag::LabelledContent => {
                let mut counts = vec![0];
                counts.extend(s.content.as_deref().unwrap_or_default());
                labellings_with_counts(&a, &counts, false).into_iter().map(Some).collect()
            }
            FamilyTag::Pld => match &s.content {
                Some(c) => {
                    let mut counts = vec![m];
                    counts.extend(c);
                    labellings_with_counts(&a, &counts, n > 0).into_iter().map(Some).collect()
                }
                None => partial_labellings(&a, m, n, n).into_iter().map(Some).collect(),
            },
            FamilyTag::CatalanPld => {
                let rises: Vec<usize> = (1..a.len()).filter(|&i| a[i] > a[i - 1]).collect();
                if rises.len() as u32 != n {
                    vec![]
                } else {
                    let mut labels = vec![0; a.len()];
                    let mut order = rises.clone();
                    order.sort_by_key(|&i| (a[i], i));
                    for (c, &i) in order.iter().enumerate() {
                        labels[i] = c as u32 + 1;
                    }
                    vec![Some(labels)]
                }
            }
            FamilyTag::Pf2 => labellings_with_counts(&a, &[0, n, m], false).into_iter().map(Some).collect(),
            FamilyTag::TwoShuffle => {
                let runs = [(1..=n).rev().collect(), (n + 1..=m + n).rev().collect()];
                class_labellings(&a, &[n, m], &runs).into_iter().map(Some).collect()
            }
            FamilyTag::ShuffleKnm => {
                let runs = [(1..=k).collect(), (k + 1..=n).rev().collect(), (n + 1..=m + n - k).rev().collect()];
                class_labellings(&a, &[k, n - k, m - k], &runs).into_iter().map(Some).collect()
            }
            FamilyTag::Rp => unreachable!("polyominoes use their own word stream"),
        };
        let rises: Vec<usize> = (2..=a.len()).filter(|&i| a[i - 1] > a[i - 2]).collect();
        for labels in labellings {
            let decorations = match s.tag {
                FamilyTag::Dyck | FamilyTag::LabelledContent | FamilyTag::ShuffleKnm => vec![vec![]],
                FamilyTag::CatalanPld => vec![rises.clone()],
                _ => combinations(&rises, k as usize),
            };
            for dec in decorations {
                let p = DecoratedLabelledPath::new(a.clone(), labels.clone(), dec, false)?;
                let p = if s.ghost { p.with_ghost()? } else { p };
                self.buffer.push_back(Member::Path(p));
            }
        }
        Ok(true)
    }

    /// Next member, surfacing cap overflow and construction failures as errors.
    pub fn try_next(&mut self) -> Result<Option<Member>, EnumError> {
        while self.buffer.is_empty() {
            if !self.refill()? {
                return Ok(None);
            }
        }
        if self.emitted == self.cap {
            self.truncated = true;
            return Err(EnumError::CapExceeded { cap: self.cap });
        }
        self.emitted += 1;
        Ok(self.buffer.pop_front())
    }
}

impl Iterator for Members {
    type Item = Member;
    fn next(&mut self) -> Option<Member> {
        self.try_next().ok().flatten()
    }
}

/// Members of `spec` in canonical order: lexicographic by area word (by letters for
/// polyominoes), then labels, then decoration set.
pub fn generate(spec: &FamilySpec) -> Result<Members, EnumError> {
    generate_capped(spec, DEFAULT_CAP)
}

pub fn generate_capped(spec: &FamilySpec, cap: u64) -> Result<Members, EnumError> {
    spec.validate()?;
    let size = match spec.tag {
        FamilyTag::Rp => 0,
        _ => spec.family().map(|f| f.size()).unwrap_or(0) - spec.ghost as u32,
    };
    let polyominoes = (spec.tag == FamilyTag::Rp).then(|| polyomino_words(spec.m, spec.n).into_iter());
    Ok(Members {
        spec: spec.clone(),
        words: AreaWords::new(size as usize),
        polyominoes,
        buffer: VecDeque::new(),
        emitted: 0,
        cap,
        truncated: false,
    })
}

/// All paths of a path family, collected.
pub fn paths(spec: &FamilySpec) -> Result<Vec<DecoratedLabelledPath>, EnumError> {
    let mut g = generate(spec)?;
    let mut out = Vec::new();
    while let Some(m) = g.try_next()? {
        match m {
            Member::Path(p) => out.push(p),
            Member::Polyomino(_) => return Err(EnumError::InvalidSpec("polyomino family has no paths".into())),
        }
    }
    Ok(out)
}

/// All words of `RP(m,n)^{*k}`, collected.
pub fn polyominoes(m: u32, n: u32, k: u32) -> Result<Vec<PolyominoWord>, EnumError> {
    let mut g = generate(&FamilySpec::polyomino(m, n, k))?;
    let mut out = Vec::new();
    while let Some(x) = g.try_next()? {
        if let Member::Polyomino(w) = x {
            out.push(w);
        }
    }
    Ok(out)
}

/// Big cars on the main diagonal, the ghost car excluded.
pub fn diagonal_big_cars(p: &DecoratedLabelledPath) -> u32 {
    let Some(l) = p.labels() else { return 0 };
    let skip = p.ghost_row() as usize;
    p.area_word().iter().zip(l).skip(skip).filter(|(&a, &x)| a == 0 && x == 2).count() as u32
}

/// Sum of `q^dinv t^area` over the family, restricted to the `r` bucket when one is set.
pub fn qt_enumerator(spec: &FamilySpec) -> Result<QtPoly, EnumError> {
    let mut g = generate(spec)?;
    let mut total = QtPoly::zero();
    while let Some(x) = g.try_next()? {
        if let (Some(r), Member::Path(p)) = (spec.r, &x) {
            if spec.r_semantics.index(diagonal_big_cars(p)) != r {
                continue;
            }
        }
        total += &x.weight();
    }
    Ok(total)
}

/// Enumerators of `PF²(m,n)^{*k}` (no ghost) keyed by the diagonal big-car count under `semantics`.
pub fn pf2_buckets(m: u32, n: u32, k: u32, semantics: RSemantics) -> Result<BTreeMap<u32, QtPoly>, EnumError> {
    let mut g = generate(&FamilySpec::two_car(m, n, k, false))?;
    let mut out: BTreeMap<u32, QtPoly> = BTreeMap::new();
    while let Some(x) = g.try_next()? {
        if let Member::Path(p) = &x {
            *out.entry(semantics.index(diagonal_big_cars(p))).or_default() += &x.weight();
        }
    }
    Ok(out)
}

/// Enumerators of `PLD(m,n)^{*k}` with positive labels in `1..=n`, keyed by content: entry `i`
/// of the key counts the labels `i + 1`.
pub fn qt_enumerator_by_content(m: u32, n: u32, k: u32) -> Result<BTreeMap<Vec<u32>, QtPoly>, EnumError> {
    let mut g = generate(&FamilySpec::pld(m, n, k))?;
    let mut out: BTreeMap<Vec<u32>, QtPoly> = BTreeMap::new();
    while let Some(x) = g.try_next()? {
        if let Member::Path(p) = &x {
            *out.entry(p.content(n)).or_default() += &x.weight();
        }
    }
    Ok(out)
}

/// Member count of a family.
pub fn count(spec: &FamilySpec) -> Result<u64, EnumError> {
    let mut g = generate(spec)?;
    let mut c = 0;
    while g.try_next()?.is_some() {
        c += 1;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_family;

    fn poly(terms: &[(u32, u32, i64)]) -> QtPoly {
        terms.iter().map(|&(a, b, c)| QtPoly::monomial(c, a, b)).sum()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&FamilySpec::dyck(3)).unwrap(), 5);
        assert_eq!(count(&FamilySpec::two_car(1, 1, 0, false)).unwrap(), 3);
        assert_eq!(count(&FamilySpec::polyomino(0, 0, 0)).unwrap(), 1);
    }

    #[test]
    fn small_enumerators() {
        assert_eq!(qt_enumerator(&FamilySpec::two_car(1, 1, 0, false)).unwrap(), poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
        assert_eq!(qt_enumerator(&FamilySpec::dyck(1)).unwrap(), QtPoly::one());
        let catalan = poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        assert_eq!(qt_enumerator(&FamilySpec::dyck(3)).unwrap(), catalan);
        assert_eq!(qt_enumerator(&FamilySpec::shuffle_knm(3, 3, 3)).unwrap(), catalan);
        assert_eq!(qt_enumerator(&FamilySpec::shuffle_knm(0, 3, 0)).unwrap(), QtPoly::one());
    }

    #[test]
    fn content_enumerators() {
        let e = qt_enumerator_by_content(0, 1, 0).unwrap();
        assert_eq!(e, BTreeMap::from([(vec![1], QtPoly::one())]));
        let e = qt_enumerator_by_content(0, 2, 0).unwrap();
        assert_eq!(e[&vec![1, 1]], poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
        let total: num_bigint::BigInt = qt_enumerator_by_content(1, 2, 1).unwrap().values().map(|p| p.at_one()).sum();
        assert_eq!(total, count(&FamilySpec::pld(1, 2, 1)).unwrap().into());
    }

    #[test]
    fn spec_errors() {
        let ld = FamilySpec::new(FamilyTag::LabelledContent, 0, 3, 0);
        assert!(matches!(generate(&ld), Err(EnumError::InfiniteFamily(_))));
        assert!(matches!(generate(&FamilySpec::pld(1, 1, 1)), Err(EnumError::InvalidSpec(_))));
        assert!(matches!(generate(&FamilySpec::shuffle_knm(2, 1, 3)), Err(EnumError::InvalidSpec(_))));
        assert_eq!("two-shuffle".parse::<FamilyTag>().unwrap(), FamilyTag::TwoShuffle);
        assert!("xyz".parse::<FamilyTag>().is_err());
    }

    #[test]
    fn cap_is_reported() {
        let mut g = generate_capped(&FamilySpec::dyck(4), 3).unwrap();
        let mut got = 0;
        let err = loop {
            match g.try_next() {
                Ok(Some(_)) => got += 1,
                Ok(None) => break None,
                Err(e) => break Some(e),
            }
        };
        assert_eq!(got, 3);
        assert!(matches!(err, Some(EnumError::CapExceeded { cap: 3 })));
        assert!(g.truncated());
        let exact = generate_capped(&FamilySpec::dyck(3), 5).unwrap();
        assert_eq!(exact.count(), 5);
    }

    #[test]
    fn members_are_valid_and_sorted() {
        let specs = [
            FamilySpec::dyck(4),
            FamilySpec::labelled_content(vec![2, 1]),
            FamilySpec::pld(1, 2, 1),
            FamilySpec::catalan_pld(2, 2),
            FamilySpec::two_car(2, 2, 1, false),
            FamilySpec::two_car(2, 1, 0, true),
            FamilySpec::two_shuffle(2, 2, 1),
            FamilySpec::shuffle_knm(1, 2, 2),
        ];
        for spec in specs {
            let all = paths(&spec).unwrap();
            assert!(!all.is_empty(), "{spec:?}");
            let fam = spec.family().unwrap();
            for p in &all {
                validate_family(p, &fam).unwrap();
            }
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all, "{spec:?}");
        }
    }

    #[test]
    fn buckets_split_by_semantics() {
        let b = pf2_buckets(1, 1, 0, RSemantics::NonGhost).unwrap();
        let g = pf2_buckets(1, 1, 0, RSemantics::GhostInclusive).unwrap();
        assert_eq!(b.values().cloned().sum::<QtPoly>(), g.values().cloned().sum::<QtPoly>());
        assert_eq!(b.keys().map(|r| r + 1).collect::<Vec<_>>(), g.keys().copied().collect::<Vec<_>>());
    }
}
