use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::LatticeError;

/// A letter of the barred alphabet `0 < 0̄ < 1 < 1̄ < 2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub v: u32,
    pub barred: bool,
}

impl Letter {
    pub const fn plain(v: u32) -> Self {
        Self { v, barred: false }
    }

    pub const fn bar(v: u32) -> Self {
        Self { v, barred: true }
    }

    /// Position in the ordered alphabet.
    pub fn rank(self) -> u32 {
        2 * self.v + self.barred as u32
    }

    pub fn successor(self) -> Letter {
        if self.barred {
            Letter::plain(self.v + 1)
        } else {
            Letter::bar(self.v)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{304}", self.v)
        } else {
            write!(f, "{}", self.v)
        }
    }
}

/// Area word of a reduced parallelogram polyomino. Letter 0 is the ghost letter; decorated
/// indices are 0-based positions into the word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct PolyominoWord {
    letters: Vec<Letter>,
    decorated_rises: BTreeSet<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawWord {
    letters: Vec<Letter>,
    #[serde(default)]
    decorated_rises: Vec<usize>,
}

impl TryFrom<RawWord> for PolyominoWord {
    type Error = LatticeError;
    fn try_from(r: RawWord) -> Result<Self, LatticeError> {
        PolyominoWord::new(r.letters, r.decorated_rises)
    }
}

impl From<PolyominoWord> for RawWord {
    fn from(w: PolyominoWord) -> Self {
        RawWord { letters: w.letters, decorated_rises: w.decorated_rises.into_iter().collect() }
    }
}

/// Area, dinv and rises of a polyomino word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyominoStats {
    pub area: u64,
    pub dinv: u64,
    pub rises: Vec<usize>,
}

impl PolyominoWord {
    pub fn new(letters: Vec<Letter>, decorated_rises: impl IntoIterator<Item = usize>) -> Result<Self, LatticeError> {
        match letters.first() {
            Some(l) if *l == Letter::plain(0) => {}
            _ => return Err(LatticeError::Word("first letter must be the unbarred ghost letter 0".into())),
        }
        for i in 1..letters.len() {
            if letters[i].rank() > letters[i - 1].rank() + 1 {
                return Err(LatticeError::Word(format!(
                    "letter {} at index {i} exceeds the successor of {}",
                    letters[i],
                    letters[i - 1]
                )));
            }
        }
        let decorated_rises: BTreeSet<usize> = decorated_rises.into_iter().collect();
        for &d in &decorated_rises {
            if d == 0 || d >= letters.len() || letters[d].v <= letters[d - 1].v {
                return Err(LatticeError::Decorations(format!("index {d} is not a polyomino rise")));
            }
        }
        Ok(Self { letters, decorated_rises })
    }

    /// The word of the empty polyomino: the ghost letter alone.
    pub fn ghost() -> Self {
        Self { letters: vec![Letter::plain(0)], decorated_rises: BTreeSet::new() }
    }

    /// Parses whitespace-separated letters such as `0 0~ 1 1~`; a trailing `~` or a combining
    /// macron marks a barred letter.
    pub fn parse(s: &str) -> Result<Self, LatticeError> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let (digits, barred) = if let Some(d) = tok.strip_suffix('~') {
                    (d, true)
                } else if let Some(d) = tok.strip_suffix('\u{304}') {
                    (d, true)
                } else {
                    (tok, false)
                };
                digits
                    .parse::<u32>()
                    .map(|v| Letter { v, barred })
                    .map_err(|_| LatticeError::Word(format!("bad letter {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(letters, [])
    }

    pub fn with_decorations(&self, decorated: impl IntoIterator<Item = usize>) -> Result<Self, LatticeError> {
        Self::new(self.letters.clone(), decorated)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn decorated_rises(&self) -> &BTreeSet<usize> {
        &self.decorated_rises
    }

    /// `(m, n)`: unbarred letters minus the ghost, and barred letters.
    pub fn dims(&self) -> (u32, u32) {
        let barred = self.letters.iter().filter(|l| l.barred).count() as u32;
        (self.letters.len() as u32 - barred - 1, barred)
    }

    /// Indices `i >= 1` with `|a_i| > |a_{i-1}|`.
    pub fn rises(&self) -> Vec<usize> {
        (1..self.letters.len()).filter(|&i| self.letters[i].v > self.letters[i - 1].v).collect()
    }

    pub fn area(&self) -> u64 {
        self.letters
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.decorated_rises.contains(i))
            .map(|(_, l)| l.v as u64)
            .sum()
    }

    /// Pairs `i < j` where `a_i` is the successor of `a_j`.
    pub fn dinv_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.letters.len() {
            for j in i + 1..self.letters.len() {
                if self.letters[i].rank() == self.letters[j].rank() + 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn dinv(&self) -> u64 {
        self.dinv_pairs().len() as u64
    }

    pub fn stats(&self) -> PolyominoStats {
        PolyominoStats { area: self.area(), dinv: self.dinv(), rises: self.rises() }
    }

    /// Decodes the word into its red and green paths.
    pub fn to_paths(&self) -> PolyominoPaths {
        use Step::{H, V};
        let mut red = Vec::new();
        let mut green = Vec::new();
        let mut push = |r: Step, g: Step| {
            red.push(r);
            green.push(g);
        };
        let mut w = 0u32;
        let mut i = 0;
        let a = &self.letters;
        while i < a.len() {
            let l = a[i];
            // validity guarantees l.v <= w here
            while w > l.v {
                push(H, V);
                w -= 1;
            }
            if !l.barred {
                push(H, H);
                i += 1;
            } else if i + 1 < a.len() && a[i + 1] == Letter::plain(l.v + 1) {
                push(V, H);
                w += 1;
                i += 2;
            } else {
                push(V, V);
                i += 1;
            }
        }
        while w > 0 {
            push(H, V);
            w -= 1;
        }
        PolyominoPaths { red, green }
    }

    /// Encodes a path pair; inverse of [`PolyominoWord::to_paths`].
    pub fn from_paths(paths: &PolyominoPaths) -> Result<Self, LatticeError> {
        paths.validate()?;
        let mut letters = Vec::new();
        let mut w: u32 = 0;
        for (r, g) in paths.red.iter().zip(&paths.green) {
            match (r, g) {
                (Step::H, Step::H) => letters.push(Letter::plain(w)),
                (Step::V, Step::H) => {
                    letters.push(Letter::bar(w));
                    w += 1;
                    letters.push(Letter::plain(w));
                }
                (Step::H, Step::V) => w -= 1,
                (Step::V, Step::V) => letters.push(Letter::bar(w)),
            }
        }
        Self::new(letters, [])
    }
}

impl fmt::Display for PolyominoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            if self.decorated_rises.contains(&i) {
                write!(f, "*")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    H,
    V,
}

/// Red (upper) and green (lower) paths of a reduced polyomino, ghost steps included: both
/// start at `(-1, 0)` with a horizontal step and end at `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyominoPaths {
    pub red: Vec<Step>,
    pub green: Vec<Step>,
}

impl PolyominoPaths {
    pub fn validate(&self) -> Result<(), LatticeError> {
        if self.red.len() != self.green.len() {
            return Err(LatticeError::Geometry("paths have different lengths".into()));
        }
        if self.red.first() != Some(&Step::H) || self.green.first() != Some(&Step::H) {
            return Err(LatticeError::Geometry("both paths must start with the ghost horizontal step".into()));
        }
        let count = |p: &[Step]| p.iter().filter(|s| **s == Step::H).count();
        if count(&self.red) != count(&self.green) {
            return Err(LatticeError::Geometry("paths end at different points".into()));
        }
        let mut w: i64 = 0;
        for (c, (r, g)) in self.red.iter().zip(&self.green).enumerate() {
            w += (*g == Step::H) as i64 - (*r == Step::H) as i64;
            if w < 0 {
                return Err(LatticeError::Geometry(format!("green path rises above red after step {}", c + 1)));
            }
        }
        Ok(())
    }

    /// `(m, n)` excluding the ghost column.
    pub fn dims(&self) -> (u32, u32) {
        let h = self.red.iter().filter(|s| **s == Step::H).count() as u32;
        (h - 1, self.red.len() as u32 - h)
    }

    /// Lattice points visited by a path starting at `(-1, 0)`.
    pub fn points(steps: &[Step]) -> Vec<(i64, i64)> {
        let mut p = vec![(-1, 0)];
        let (mut x, mut y) = (-1, 0);
        for s in steps {
            match s {
                Step::H => x += 1,
                Step::V => y += 1,
            }
            p.push((x, y));
        }
        p
    }

    /// For each column `c` (the unit strip `c-1 <= x <= c`, the ghost column being `c = 0`), the
    /// height of the red path above it and of the green path below it.
    pub fn columns(&self) -> Vec<(u32, u32)> {
        let heights = |steps: &[Step]| {
            let mut y = 0;
            let mut out = Vec::new();
            for s in steps {
                match s {
                    Step::H => out.push(y),
                    Step::V => y += 1,
                }
            }
            out
        };
        heights(&self.red).into_iter().zip(heights(&self.green)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(s: &str) -> PolyominoWord {
        PolyominoWord::parse(s).unwrap()
    }

    #[test]
    fn letter_order() {
        assert!(Letter::plain(0) < Letter::bar(0));
        assert!(Letter::bar(0) < Letter::plain(1));
        assert_eq!(Letter::bar(1).successor(), Letter::plain(2));
        assert_eq!(Letter::bar(2).to_string(), "2\u{304}");
    }

    #[test]
    fn word_invariants() {
        assert!(PolyominoWord::parse("0~").is_err());
        assert!(PolyominoWord::parse("1").is_err());
        assert!(PolyominoWord::parse("0 1").is_err());
        assert!(PolyominoWord::parse("0 0~ 1 1~ 2").is_ok());
        assert!(word("0 0~ 1").with_decorations([2]).is_ok());
        assert!(word("0 0~ 1").with_decorations([1]).is_err());
    }

    #[test]
    fn small_stats() {
        let w = word("0 0~ 0");
        assert_eq!(w.dinv(), 1);
        assert_eq!(w.dinv_pairs(), vec![(1, 2)]);
        let w = word("0 0~");
        assert_eq!((w.area(), w.dinv()), (0, 0));
        assert_eq!(w.dims(), (0, 1));
        let w = word("0 0~ 1 1~ 2").with_decorations([4]).unwrap();
        assert_eq!(w.area(), 2);
        assert_eq!(w.rises(), vec![2, 4]);
    }

    #[test]
    fn ghost_word_is_two_ghost_steps() {
        let p = PolyominoWord::ghost().to_paths();
        assert_eq!(p.red, vec![Step::H]);
        assert_eq!(p.green, vec![Step::H]);
        assert_eq!(PolyominoWord::from_paths(&p).unwrap(), PolyominoWord::ghost());
        assert_eq!(p.dims(), (0, 0));
    }

    #[test]
    fn geometry_errors() {
        let crossing = PolyominoPaths { red: vec![Step::H, Step::H, Step::V], green: vec![Step::H, Step::V, Step::H] };
        assert!(matches!(PolyominoWord::from_paths(&crossing), Err(LatticeError::Geometry(_))));
        let no_ghost = PolyominoPaths { red: vec![Step::V, Step::H], green: vec![Step::H, Step::V] };
        assert!(no_ghost.validate().is_err());
    }

    #[test]
    fn json_shape() {
        let w = word("0 0~ 1").with_decorations([2]).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(
            s,
            r#"{"letters":[{"v":0,"barred":false},{"v":0,"barred":true},{"v":1,"barred":false}],"decorated_rises":[2]}"#
        );
        assert_eq!(serde_json::from_str::<PolyominoWord>(&s).unwrap(), w);
    }

    fn any_word() -> impl Strategy<Value = PolyominoWord> {
        proptest::collection::vec(0u32..3, 0..10).prop_map(|moves| {
            let mut letters = vec![Letter::plain(0)];
            for mv in moves {
                let r = letters.last().unwrap().rank();
                let next = if mv == 0 { r + 1 } else { r.saturating_sub(mv - 1) };
                letters.push(Letter { v: next / 2, barred: next % 2 == 1 });
            }
            PolyominoWord::new(letters, []).unwrap()
        })
    }

    proptest! {
        #[test]
        fn codec_round_trip(w in any_word()) {
            let p = w.to_paths();
            prop_assert!(p.validate().is_ok());
            let (m, n) = w.dims();
            prop_assert_eq!(p.dims(), (m, n));
            prop_assert_eq!(PolyominoWord::from_paths(&p).unwrap(), w);
        }
    }
}
