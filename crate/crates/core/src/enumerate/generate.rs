//! Lexicographic generators for area words, labellings, decorations and polyomino words.

use crate::lattice::Letter;

/// Area words of size `n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct AreaWords {
    current: Option<Vec<u32>>,
}

impl AreaWords {
    pub fn new(n: usize) -> Self {
        Self { current: Some(vec![0; n]) }
    }
}

impl Iterator for AreaWords {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        while i > 1 {
            i -= 1;
            if next[i] <= next[i - 1] {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// All `k`-element subsets of `items`, lexicographic in positions.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(items: &[usize], start: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - chosen.len() {
                break;
            }
            chosen.push(items[i]);
            rec(items, i + 1, k, chosen, out);
            chosen.pop();
        }
    }
    rec(items, 0, k, &mut chosen, &mut out);
    out
}

/// Column-strict labellings of area word `a` where label `v` is used exactly `counts[v]` times,
/// in lexicographic order. `first_nonzero` forbids label 0 in row 1.
pub fn labellings_with_counts(a: &[u32], counts: &[u32], first_nonzero: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut left = counts.to_vec();
    let mut cur = Vec::with_capacity(a.len());
    fn rec(a: &[u32], left: &mut [u32], cur: &mut Vec<u32>, first_nonzero: bool, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == a.len() {
            out.push(cur.clone());
            return;
        }
        let floor = if i > 0 && a[i] == a[i - 1] + 1 { cur[i - 1] + 1 } else { 0 };
        let floor = if i == 0 && first_nonzero { floor.max(1) } else { floor };
        for v in floor as usize..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            cur.push(v as u32);
            rec(a, left, cur, first_nonzero, out);
            cur.pop();
            left[v] += 1;
        }
    }
    rec(a, &mut left, &mut cur, first_nonzero, &mut out);
    out
}

/// Column-strict labellings of `a` with exactly `zeros` zero labels, `positives` labels drawn
/// from `1..=max_label`, and a nonzero label in row 1 when `positives > 0`.
pub fn partial_labellings(a: &[u32], zeros: u32, positives: u32, max_label: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a.len());
    fn rec(a: &[u32], zeros: u32, positives: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == a.len() {
            out.push(cur.clone());
            return;
        }
        let floor = if i > 0 && a[i] == a[i - 1] + 1 { cur[i - 1] + 1 } else { 0 };
        if floor == 0 && zeros > 0 && !(i == 0 && positives > 0) {
            cur.push(0);
            rec(a, zeros - 1, positives, max, cur, out);
            cur.pop();
        }
        if positives > 0 {
            for v in floor.max(1)..=max {
                cur.push(v);
                rec(a, zeros, positives - 1, max, cur, out);
                cur.pop();
            }
        }
    }
    rec(a, zeros, positives, max_label, &mut cur, &mut out);
    out
}

/// Labellings by car class. Each row gets a class `c` with `counts[c]` rows per class; the rows
/// of class `c`, taken in reading order, receive the labels `runs[c]` in order. Only
/// column-strict results are kept; the output is sorted.
pub fn class_labellings(a: &[u32], counts: &[u32], runs: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&i| (a[i], i));
    let mut out = Vec::new();
    let mut classes = vec![0usize; a.len()];
    let mut left = counts.to_vec();
    fn rec(
        pos: usize,
        order: &[usize],
        a: &[u32],
        runs: &[Vec<u32>],
        classes: &mut [usize],
        left: &mut [u32],
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == order.len() {
            let mut labels = vec![0; a.len()];
            let mut used = vec![0usize; runs.len()];
            for &i in order {
                let c = classes[i];
                labels[i] = runs[c][used[c]];
                used[c] += 1;
            }
            if (1..a.len()).all(|i| a[i] != a[i - 1] + 1 || labels[i] > labels[i - 1]) {
                out.push(labels);
            }
            return;
        }
        for c in 0..left.len() {
            if left[c] == 0 {
                continue;
            }
            left[c] -= 1;
            classes[order[pos]] = c;
            rec(pos + 1, order, a, runs, classes, left, out);
            left[c] += 1;
        }
    }
    rec(0, &order, a, runs, &mut classes, &mut left, &mut out);
    out.sort();
    out
}

/// Words over the barred alphabet starting with the ghost letter, obeying the successor rule,
/// with `m` further unbarred letters and `n` barred letters, in lexicographic order.
pub fn polyomino_words(m: u32, n: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut cur = vec![Letter::plain(0)];
    fn rec(plain_left: u32, barred_left: u32, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if plain_left == 0 && barred_left == 0 {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().unwrap().rank() + 1;
        for r in 0..=top {
            let l = Letter { v: r / 2, barred: r % 2 == 1 };
            let next = match (l.barred, plain_left, barred_left) {
                (true, p, b) if b > 0 => (p, b - 1),
                (false, p, b) if p > 0 => (p - 1, b),
                _ => continue,
            };
            cur.push(l);
            rec(next.0, next.1, cur, out);
            cur.pop();
        }
    }
    rec(m, n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn area_words_are_catalan_and_sorted() {
        let counts: Vec<usize> = (0..7).map(|n| AreaWords::new(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
        let w: Vec<_> = AreaWords::new(4).collect();
        let mut sorted = w.clone();
        sorted.sort();
        assert_eq!(w, sorted);
    }

    #[test]
    fn combinations_in_order() {
        assert_eq!(combinations(&[2, 4, 5], 2), vec![vec![2, 4], vec![2, 5], vec![4, 5]]);
        assert_eq!(combinations(&[2], 0), vec![Vec::<usize>::new()]);
        assert!(combinations(&[], 1).is_empty());
    }

    #[test]
    fn two_car_labellings() {
        assert_eq!(labellings_with_counts(&[0, 0], &[0, 1, 1], false), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(labellings_with_counts(&[0, 1], &[0, 1, 1], false), vec![vec![1, 2]]);
    }

    #[test]
    fn partial_labellings_respect_row_one() {
        let l = partial_labellings(&[0, 0], 1, 1, 1);
        assert_eq!(l, vec![vec![1, 0]]);
    }

    #[test]
    fn class_labellings_are_shuffles() {
        let l = class_labellings(&[0, 0], &[1, 1], &[vec![1], vec![2]]);
        assert_eq!(l, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn polyomino_word_counts() {
        assert_eq!(polyomino_words(0, 0).len(), 1);
        assert_eq!(polyomino_words(0, 1).len(), 1);
        assert_eq!(polyomino_words(1, 1).len(), 3);
        // reduced m x n polyominoes are counted by the Narayana numbers N(m+n+1, m+1)
        assert_eq!(polyomino_words(2, 2).len(), 20);
    }
}
