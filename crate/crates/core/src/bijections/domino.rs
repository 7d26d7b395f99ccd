//! Domino sequences, the block map on them, the statistic it defines, and the matching
//! recursive step on Catalan partially labelled paths.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::DecoratedLabelledPath;

use super::{catalan_params, eta, eta_inverse, psi, psi_inverse, BijectionError};

/// A domino `[label, area letter]`.
pub type Domino = (u32, u32);

const ANCHOR: Domino = (2, 0);

/// A two-car parking function with ghost car read as a sequence of dominoes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Domino>", into = "Vec<Domino>")]
pub struct DominoSequence(Vec<Domino>);

impl TryFrom<Vec<Domino>> for DominoSequence {
    type Error = BijectionError;
    fn try_from(v: Vec<Domino>) -> Result<Self, BijectionError> {
        DominoSequence::new(v)
    }
}

impl From<DominoSequence> for Vec<Domino> {
    fn from(d: DominoSequence) -> Self {
        d.0
    }
}

impl DominoSequence {
    pub fn new(dominoes: Vec<Domino>) -> Result<Self, BijectionError> {
        if let Some(&first) = dominoes.first() {
            if first != ANCHOR {
                return Err(BijectionError::Domain(format!("sequence starts with {first:?}, expected [2,0]")));
            }
        }
        for (i, w) in dominoes.windows(2).enumerate() {
            if w[1].1 > w[0].1 + 1 {
                return Err(BijectionError::Domain(format!("area letters break at domino {}", i + 2)));
            }
            if w[1].1 == w[0].1 + 1 && w[1].0 <= w[0].0 {
                return Err(BijectionError::Domain(format!("labels not increasing up a column at domino {}", i + 2)));
            }
        }
        if let Some(d) = dominoes.iter().find(|d| d.0 != 1 && d.0 != 2) {
            return Err(BijectionError::Domain(format!("label {} is neither 1 nor 2", d.0)));
        }
        Ok(Self(dominoes))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Reads a two-car parking function with ghost car.
    pub fn from_path(p: &DecoratedLabelledPath) -> Result<Self, BijectionError> {
        if !p.ghost_row() {
            return Err(BijectionError::Domain("domino sequences start with the ghost car".into()));
        }
        let labels = p.labels().unwrap_or_default();
        Self::new(labels.iter().copied().zip(p.area_word().iter().copied()).collect())
    }

    /// Writes the sequence back as a path with ghost car, or the empty path.
    pub fn to_path(&self) -> Result<DecoratedLabelledPath, BijectionError> {
        if self.0.is_empty() {
            return Ok(DecoratedLabelledPath::empty());
        }
        let area = self.0.iter().map(|d| d.1).collect();
        let labels = self.0.iter().map(|d| d.0).collect();
        Ok(DecoratedLabelledPath::new(area, Some(labels), [], true)?)
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `[2,0]` dominoes.
    pub fn anchors(&self) -> usize {
        self.0.iter().filter(|&&d| d == ANCHOR).count()
    }

    /// Whether the leading block is the single domino `[2,0]`.
    pub fn leading_block_is_singleton(&self) -> bool {
        self.0.len() == 1 || self.0.get(1) == Some(&ANCHOR)
    }
}

impl fmt::Display for DominoSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(l, a)| format!("[{l},{a}]")).collect();
        f.write_str(&parts.join(""))
    }
}

/// The block map. The leading block runs from the first `[2,0]` up to the next one. A singleton
/// block is deleted. Otherwise the `[1,0]` after the leading `[2,0]` is removed, every other
/// `[2,a]` of the block becomes `[2,a-1]`, each pair `[2,a-1][1,a]` is rewritten as
/// `[1,a-1][2,a]` scanning left to right, and the block moves to the end of the sequence.
pub fn phi(d: &DominoSequence) -> Result<DominoSequence, BijectionError> {
    let s = &d.0;
    if s.is_empty() {
        return Err(BijectionError::Domain("phi needs a nonempty sequence".into()));
    }
    let end = s[1..].iter().position(|&x| x == ANCHOR).map_or(s.len(), |p| p + 1);
    let (block, rest) = s.split_at(end);
    if block.len() == 1 {
        return Ok(DominoSequence(rest.to_vec()));
    }
    if block[1] != (1, 0) {
        return Err(BijectionError::Invariant(format!(
            "domino after the leading [2,0] is [{},{}], expected [1,0]",
            block[1].0, block[1].1
        )));
    }
    let shifted: Vec<Domino> = block[2..]
        .iter()
        .map(|&(l, a)| if l == 2 { (l, a - 1) } else { (l, a) })
        .collect();
    let mut out: Vec<Domino> = rest.to_vec();
    out.push(ANCHOR);
    let mut i = 0;
    while i < shifted.len() {
        match (shifted[i], shifted.get(i + 1)) {
            ((2, x), Some(&(1, y))) if y == x + 1 => {
                out.push((1, x));
                out.push((2, y));
                i += 2;
            }
            (d, _) => {
                out.push(d);
                i += 1;
            }
        }
    }
    DominoSequence::new(out)
}

/// The statistic defined through [`phi`]: each application whose leading block is not a lone
/// `[2,0]` contributes the number of `[2,0]` dominoes minus one.
pub fn ndinv(d: &DominoSequence) -> Result<u64, BijectionError> {
    let mut total = 0;
    let mut cur = d.clone();
    while !cur.is_empty() {
        if !cur.leading_block_is_singleton() {
            total += cur.anchors() as u64 - 1;
        }
        cur = phi(&cur)?;
    }
    Ok(total)
}

/// The statistic on a two-car parking function, given with or without its ghost car.
pub fn ndinv_of_path(p: &DecoratedLabelledPath) -> Result<u64, BijectionError> {
    ndinv(&DominoSequence::from_path(&p.with_ghost()?)?)
}

/// Reads a two-shuffle parking function with small labels `1..=n` as a two-car parking function
/// with ghost car: labels up to `n` become 1, larger labels become 2.
pub fn two_shuffle_to_two_car(p: &DecoratedLabelledPath, n: u32) -> Result<DecoratedLabelledPath, BijectionError> {
    let size = p.size() as u32;
    if n > size {
        return Err(BijectionError::Domain(format!("n = {n} exceeds the size {size}")));
    }
    let k = p.decorated_rises().len() as u32;
    crate::lattice::validate_family(p, &crate::lattice::Family::TwoShuffle { m: size - n, n, k })?;
    let labels = p.labels().unwrap_or_default();
    let relabelled = labels.iter().map(|&l| if l <= n { 1 } else { 2 }).collect();
    let q = DecoratedLabelledPath::new(p.area_word().to_vec(), Some(relabelled), p.decorated_rises().iter().copied(), false)?;
    Ok(q.with_ghost()?)
}

/// The recursive step on Catalan partially labelled paths. With two zero valleys on the diagonal
/// at the start, one of them is removed. Otherwise the region before the next diagonal zero
/// valley loses its second row, is pushed one step towards the diagonal and is moved to the
/// end; positive labels are renumbered in reading order.
pub fn pld_recursive_step(d: &DecoratedLabelledPath) -> Result<DecoratedLabelledPath, BijectionError> {
    catalan_params(d)?;
    let a = d.area_word();
    let labels = d.labels().unwrap_or_default();
    let size = a.len();
    if size == 1 {
        return Ok(DecoratedLabelledPath::empty());
    }
    let (area, zero): (Vec<u32>, Vec<bool>) = if a[1] == 0 {
        (a[1..].to_vec(), labels[1..].iter().map(|&l| l == 0).collect())
    } else {
        let j = (1..size).find(|&i| a[i] == 0).unwrap_or(size);
        let mut area: Vec<u32> = a[j..].to_vec();
        let mut zero: Vec<bool> = labels[j..].iter().map(|&l| l == 0).collect();
        area.push(0);
        zero.push(true);
        for i in 2..j {
            area.push(a[i] - 1);
            zero.push(labels[i] == 0);
        }
        (area, zero)
    };
    let positive: Vec<usize> = (0..area.len()).filter(|&i| !zero[i]).collect();
    let mut order = positive.clone();
    order.sort_by_key(|&i| (area[i], i));
    let mut new_labels = vec![0; area.len()];
    for (c, &i) in order.iter().enumerate() {
        new_labels[i] = c as u32 + 1;
    }
    let out = DecoratedLabelledPath::new(area, Some(new_labels), positive.iter().map(|i| i + 1), false)?;
    catalan_params(&out)?;
    Ok(out)
}

/// The recursive step computed through the polyomino and parking function pictures.
pub fn pld_recursive_step_via_maps(d: &DecoratedLabelledPath) -> Result<DecoratedLabelledPath, BijectionError> {
    let seq = DominoSequence::from_path(&psi(&eta_inverse(d)?)?)?;
    let next = phi(&seq)?;
    if next.is_empty() {
        return Ok(DecoratedLabelledPath::empty());
    }
    eta(&psi_inverse(&next.to_path()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[(u32, u32)]) -> DominoSequence {
        DominoSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_small_cases() {
        assert!(phi(&seq(&[(2, 0)])).unwrap().is_empty());
        assert_eq!(phi(&seq(&[(2, 0), (2, 0)])).unwrap(), seq(&[(2, 0)]));
        assert_eq!(phi(&seq(&[(2, 0), (1, 0), (2, 1), (2, 0)])).unwrap(), seq(&[(2, 0), (2, 0), (2, 0)]));
    }

    #[test]
    fn phi_rewrites_pairs() {
        // [1,0] dropped, [2,1] lowered to [2,0], then [2,0][1,1] becomes [1,0][2,1]
        let s = seq(&[(2, 0), (1, 0), (2, 1), (1, 1), (2, 0)]);
        assert_eq!(phi(&s).unwrap(), seq(&[(2, 0), (2, 0), (1, 0), (2, 1)]));
    }

    #[test]
    fn ndinv_base_cases() {
        assert_eq!(ndinv(&DominoSequence::empty()).unwrap(), 0);
        assert_eq!(ndinv(&seq(&[(2, 0)])).unwrap(), 0);
        assert_eq!(ndinv(&seq(&[(2, 0), (1, 0), (2, 0)])).unwrap(), 1);
    }

    #[test]
    fn figure_polyomino_block_move() {
        let w = crate::lattice::PolyominoWord::parse("0 0~ 1 1~ 2 1~ 1~ 0 0~ 0~ 1 0~ 0~ 0~ 1 1 1~ 1~").unwrap();
        let image = psi_inverse(&phi(&DominoSequence::from_path(&psi(&w).unwrap()).unwrap()).unwrap().to_path().unwrap())
            .unwrap();
        assert_eq!(image, crate::lattice::PolyominoWord::parse("0 0~ 0~ 1 0~ 0~ 0~ 1 1 1~ 1~ 0 0~ 1 1 1~ 1~").unwrap());
    }

    #[test]
    fn doubled_valley_step() {
        let d = DecoratedLabelledPath::labelled(vec![0, 0], vec![0, 0]).unwrap();
        let s = pld_recursive_step(&d).unwrap();
        assert_eq!(s.area_word(), &[0]);
        assert_eq!(s.dinv(), d.dinv());
        assert_eq!(pld_recursive_step_via_maps(&d).unwrap(), s);
        let single = DecoratedLabelledPath::labelled(vec![0], vec![0]).unwrap();
        assert!(pld_recursive_step(&single).unwrap().is_empty());
    }
}
