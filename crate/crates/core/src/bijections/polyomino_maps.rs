//! The maps between Catalan partially labelled paths, reduced polyominoes and two-car parking
//! functions with a ghost car.

use crate::lattice::{
    validate_family, DecoratedLabelledPath, Family, Letter, PolyominoPaths, PolyominoWord, Step,
};

use super::BijectionError;

/// Catalan parameters `(m, n)` of a path: zero labels minus one, and positive labels.
pub fn catalan_params(d: &DecoratedLabelledPath) -> Result<(u32, u32), BijectionError> {
    let labels = d.labels().ok_or_else(|| BijectionError::Domain("path is unlabelled".into()))?;
    let zeros = labels.iter().filter(|&&l| l == 0).count() as u32;
    if zeros == 0 {
        return Err(BijectionError::Domain("a Catalan partially labelled path has a zero in row 1".into()));
    }
    let (m, n) = (zeros - 1, labels.len() as u32 - zeros);
    validate_family(d, &Family::CatalanPld { m, n })?;
    Ok((m, n))
}

/// Sends a Catalan partially labelled path to its reduced polyomino: zero rows become
/// horizontal red steps whose columns have the row's area letter as height, positive rows
/// become vertical red steps.
pub fn eta_inverse(d: &DecoratedLabelledPath) -> Result<PolyominoWord, BijectionError> {
    catalan_params(d)?;
    let labels = d.labels().unwrap_or_default();
    let mut red = Vec::with_capacity(d.size());
    let mut bottoms = Vec::new();
    let mut y = 0u32;
    for (&a, &l) in d.area_word().iter().zip(labels) {
        if l == 0 {
            red.push(Step::H);
            bottoms.push(y.checked_sub(a).ok_or_else(|| {
                BijectionError::Invariant(format!("column of height {a} reaches below the x-axis"))
            })?);
        } else {
            red.push(Step::V);
            y += 1;
        }
    }
    let mut green = Vec::with_capacity(red.len());
    let mut gy = 0;
    for &b in &bottoms {
        if b < gy {
            return Err(BijectionError::Invariant("green path would step down".into()));
        }
        green.extend(std::iter::repeat_n(Step::V, (b - gy) as usize));
        green.push(Step::H);
        gy = b;
    }
    green.extend(std::iter::repeat_n(Step::V, (y - gy) as usize));
    Ok(PolyominoWord::from_paths(&PolyominoPaths { red, green })?)
}

/// Inverse of [`eta_inverse`], defined on undecorated polyomino words.
pub fn eta(w: &PolyominoWord) -> Result<DecoratedLabelledPath, BijectionError> {
    if !w.decorated_rises().is_empty() {
        return Err(BijectionError::Domain("eta takes an undecorated polyomino".into()));
    }
    let paths = w.to_paths();
    let columns = paths.columns();
    let mut area = Vec::with_capacity(paths.red.len());
    let mut positive = Vec::new();
    let mut col = 0;
    for (i, s) in paths.red.iter().enumerate() {
        match s {
            Step::H => {
                let (top, bottom) = columns[col];
                area.push(top - bottom);
                col += 1;
            }
            Step::V => {
                area.push(area.last().map_or(0, |a| a + 1));
                positive.push(i);
            }
        }
    }
    let mut order = positive.clone();
    order.sort_by_key(|&i| (area[i], i));
    let mut labels = vec![0; area.len()];
    for (c, &i) in order.iter().enumerate() {
        labels[i] = c as u32 + 1;
    }
    let d = DecoratedLabelledPath::new(area, Some(labels), positive.iter().map(|i| i + 1), false)?;
    catalan_params(&d)?;
    Ok(d)
}

/// Reads a polyomino word as a two-car parking function with ghost car: barred letters become
/// cars 1, unbarred letters cars 2, the ghost letter the ghost car.
pub fn psi(w: &PolyominoWord) -> Result<DecoratedLabelledPath, BijectionError> {
    let area = w.letters().iter().map(|l| l.v).collect();
    let labels = w.letters().iter().map(|l| if l.barred { 1 } else { 2 }).collect();
    Ok(DecoratedLabelledPath::new(area, Some(labels), w.decorated_rises().iter().map(|i| i + 1), true)?)
}

/// Inverse of [`psi`].
pub fn psi_inverse(p: &DecoratedLabelledPath) -> Result<PolyominoWord, BijectionError> {
    if !p.ghost_row() {
        return Err(BijectionError::Domain("psi inverse needs a ghost car".into()));
    }
    let labels = p.labels().unwrap_or_default();
    if labels.iter().any(|&l| l != 1 && l != 2) {
        return Err(BijectionError::Domain("labels must be 1 or 2".into()));
    }
    let letters = p.area_word().iter().zip(labels).map(|(&v, &l)| Letter { v, barred: l == 1 }).collect();
    Ok(PolyominoWord::new(letters, p.decorated_rises().iter().map(|i| i - 1))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plbounce() -> DecoratedLabelledPath {
        DecoratedLabelledPath::new(
            vec![0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3],
            Some(vec![0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0]),
            [2, 3, 7, 8, 10],
            false,
        )
        .unwrap()
    }

    #[test]
    fn figure_chain() {
        let d = plbounce();
        assert_eq!(d.dinv_reading_word(), vec![1, 2, 3, 4, 5]);
        let w = eta_inverse(&d).unwrap();
        assert_eq!(w.to_string(), "0 0\u{304} 1 1\u{304} 2 1 0\u{304} 1 1\u{304} 2 2 2\u{304}");
        let p = w.to_paths();
        use Step::{H, V};
        assert_eq!(p.red, vec![H, V, V, H, H, H, V, V, H, V, H, H]);
        assert_eq!(p.green, vec![H, H, H, V, H, V, H, H, H, V, V, V]);
        let pf = psi(&w).unwrap();
        assert_eq!(pf.area_word(), &[0, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 2]);
        assert_eq!(pf.labels().unwrap(), &[2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1]);
        assert_eq!(eta(&w).unwrap(), d);
        assert_eq!(psi_inverse(&pf).unwrap(), w);
    }

    #[test]
    fn single_zero_row() {
        let d = DecoratedLabelledPath::labelled(vec![0], vec![0]).unwrap();
        assert_eq!(eta_inverse(&d).unwrap(), PolyominoWord::ghost());
        let ghost_car = psi(&PolyominoWord::ghost()).unwrap();
        assert_eq!(ghost_car.area_word(), &[0]);
        assert_eq!(ghost_car.labels().unwrap(), &[2]);
        assert!(ghost_car.ghost_row());
    }

    #[test]
    fn out_of_domain() {
        let not_catalan = DecoratedLabelledPath::labelled(vec![0, 1], vec![0, 1]).unwrap();
        assert!(matches!(eta_inverse(&not_catalan), Err(BijectionError::Lattice(_))));
        let no_zero = DecoratedLabelledPath::labelled(vec![0], vec![1]).unwrap();
        assert!(matches!(eta_inverse(&no_zero), Err(BijectionError::Domain(_))));
        let no_ghost = DecoratedLabelledPath::labelled(vec![0], vec![2]).unwrap();
        assert!(psi_inverse(&no_ghost).is_err());
    }
}
