//! The Ross–Yong tableau rule for D-Schur expansions of key polynomials.
//!
//! For `alpha` with descents inside `D`, the coefficient of
//! `s_{lambda^1, ..., lambda^{k+1}}` in `kappa_alpha` counts sequences of
//! increasing tableaux `(T_1, ..., T_{k+1})` where `T_i` has shape `lambda^i`,
//! every entry of `T_i` exceeds `d_{i-1}`, the concatenated row words form a
//! reduced word of `w[alpha]`, and Edelman–Greene column insertion of that
//! word gives `T[alpha]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Expansion, SplitSet};
use crate::typea::{perm_from_code, Composition, Permutation};
use crate::words::Word;

/// A filling of a Young diagram, strictly increasing along rows and down
/// columns. Serializes as its row array, e.g. `[[4,5],[5]]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct IncreasingTableau {
    rows: Vec<Vec<usize>>,
}

impl IncreasingTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidArgument(format!("{rows:?}: {msg}")));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row");
        }
        if rows.windows(2).any(|p| p[0].len() < p[1].len()) {
            return bad("row lengths are not a partition");
        }
        if rows.iter().any(|r| r.windows(2).any(|p| p[0] >= p[1])) {
            return bad("rows are not strictly increasing");
        }
        if rows
            .windows(2)
            .any(|p| p[1].iter().zip(&p[0]).any(|(below, above)| below <= above))
        {
            return bad("columns are not strictly increasing");
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    fn from_columns(columns: &[Vec<usize>]) -> Self {
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|r| columns.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect();
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Smallest entry; `None` for the empty tableau.
    pub fn min(&self) -> Option<usize> {
        self.rows.first().map(|r| r[0])
    }
}

impl TryFrom<Vec<Vec<usize>>> for IncreasingTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<IncreasingTableau> for Vec<Vec<usize>> {
    fn from(t: IncreasingTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Rows read right to left, top to bottom.
pub fn row_word(t: &IncreasingTableau) -> Word {
    Word::new(
        t.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect(),
    )
}

/// Builds `T[alpha]` column by column. Starting from `w = w[alpha]`, a column
/// records `i_1 > i_2 > ...` (bottom to top) where `i_1` is the largest
/// descent of `w` and each later `i_j` is the rightmost descent strictly left
/// of `i_{j-1}` in `w s_{i_1} ... s_{i_{j-1}}`; then `w` is replaced by
/// `w s_{i_1} ... s_{i_j}` and the next column starts.
pub fn build_t_alpha(alpha: &Composition) -> IncreasingTableau {
    let mut w = perm_from_code(alpha);
    let mut columns = Vec::new();
    while let Some(&first) = w.descents().last() {
        let mut column = vec![first];
        w = w.mul_generator(first);
        while let Some(&next) = w
            .descents()
            .iter()
            .rev()
            .find(|&&d| d < *column.last().unwrap())
        {
            column.push(next);
            w = w.mul_generator(next);
        }
        column.reverse();
        columns.push(column);
    }
    IncreasingTableau::from_columns(&columns)
}

/// Edelman–Greene column insertion of a reduced word.
///
/// Inserting `x` into a column: if the column holds both `x` and `x + 1` it is
/// unchanged and `x + 1` moves on to the next column; otherwise the smallest
/// entry greater than `x` is replaced and moves on, and if there is none `x`
/// is placed at the bottom.
pub fn eg_column_insert(word: &Word) -> Result<IncreasingTableau> {
    check_reduced(word)?;
    let mut columns: Vec<Vec<usize>> = Vec::new();
    for &letter in word.letters() {
        let mut x = letter;
        let mut c = 0;
        loop {
            if c == columns.len() {
                columns.push(vec![x]);
                break;
            }
            let col = &mut columns[c];
            if col.contains(&x) && col.contains(&(x + 1)) {
                x += 1;
            } else if let Some(pos) = col.iter().position(|&y| y > x) {
                x = std::mem::replace(&mut col[pos], x);
            } else {
                col.push(x);
                break;
            }
            c += 1;
        }
    }
    Ok(IncreasingTableau::from_columns(&columns))
}

fn check_reduced(word: &Word) -> Result<()> {
    let n = word.letters().iter().copied().max().unwrap_or(0) + 1;
    let mut p: Vec<usize> = (1..=n).collect();
    for &a in word.letters() {
        if a == 0 || p[a - 1] > p[a] {
            return Err(Error::NotReduced(word.to_string()));
        }
        p.swap(a - 1, a);
    }
    Ok(())
}

/// Calls `f` on every reduced word of `w`, in lexicographic order.
fn for_each_reduced_word(w: &Permutation, f: &mut impl FnMut(&[usize])) {
    // pos[v - 1] is the position of the value v; s_j w exchanges j and j + 1
    fn go(pos: &mut Vec<usize>, len: usize, word: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if len == 0 {
            f(word);
            return;
        }
        for j in 1..pos.len() {
            // j is a left descent when j + 1 sits left of j
            if pos[j] < pos[j - 1] {
                pos.swap(j - 1, j);
                word.push(j);
                go(pos, len - 1, word, f);
                word.pop();
                pos.swap(j - 1, j);
            }
        }
    }
    let mut pos: Vec<usize> = w.inverse().one_line().to_vec();
    go(&mut pos, w.length(), &mut Vec::new(), f);
}

/// Ways to read `segment` as the row word of an increasing tableau with at
/// most `max_rows` rows.
fn tableaux_with_row_word(segment: &[usize], max_rows: usize) -> Vec<IncreasingTableau> {
    fn go(
        rest: &[usize],
        max_rows: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<IncreasingTableau>,
    ) {
        if rest.is_empty() {
            out.push(IncreasingTableau { rows: rows.clone() });
            return;
        }
        if rows.len() == max_rows {
            return;
        }
        let limit = rows.last().map_or(rest.len(), Vec::len).min(rest.len());
        for len in 1..=limit {
            let row: Vec<usize> = rest[..len].iter().rev().copied().collect();
            if row.windows(2).any(|p| p[0] >= p[1]) {
                // longer chunks keep the same violation
                break;
            }
            if let Some(above) = rows.last() {
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    continue;
                }
            }
            rows.push(row);
            go(&rest[len..], max_rows, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(segment, max_rows, &mut Vec::new(), &mut out);
    out
}

fn check_split(alpha: &Composition, split: &SplitSet) -> Result<Composition> {
    if alpha.len() > split.n() {
        return Err(Error::InvalidArgument(format!(
            "composition {alpha} is longer than the {} variables of the split",
            split.n()
        )));
    }
    let alpha = alpha.padded(split.n());
    if let Some(&d) = alpha.descents().iter().find(|d| !split.cuts().contains(d)) {
        return Err(Error::DescentOutsideSplit {
            composition: alpha.to_string(),
            descent: d,
            split: split.cuts().to_vec(),
        });
    }
    Ok(alpha)
}

/// Every tableau sequence counted by the rule, one entry per block of the
/// split. The composition is padded with zeros to the split's variable count.
pub fn ry_tableau_sequences(
    alpha: &Composition,
    split: &SplitSet,
) -> Result<Vec<Vec<IncreasingTableau>>> {
    let alpha = check_split(alpha, split)?;
    let target = build_t_alpha(&alpha);
    let w = perm_from_code(&alpha);
    let blocks = split.blocks();
    let mut out = Vec::new();
    for_each_reduced_word(&w, &mut |word: &[usize]| {
        let word = Word::new(word.to_vec());
        if eg_column_insert(&word).expect("reduced by construction") != target {
            return;
        }
        segment(word.letters(), &blocks, 0, &mut Vec::new(), &mut out);
    });
    Ok(out)
}

fn segment(
    rest: &[usize],
    blocks: &[std::ops::Range<usize>],
    i: usize,
    current: &mut Vec<IncreasingTableau>,
    out: &mut Vec<Vec<IncreasingTableau>>,
) {
    if i == blocks.len() {
        if rest.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let floor = blocks[i].start;
    let size = blocks[i].len();
    // letters of T_i all exceed d_{i-1}
    let max_len = rest.iter().take_while(|&&a| a > floor).count();
    for len in 0..=max_len {
        for t in tableaux_with_row_word(&rest[..len], size) {
            current.push(t);
            segment(&rest[len..], blocks, i + 1, current, out);
            current.pop();
        }
    }
}

/// The D-Schur expansion of `kappa_alpha` by counting tableau sequences.
pub fn ry_expand<C: Coefficient>(alpha: &Composition, split: &SplitSet) -> Result<Expansion<C>> {
    let mut out = Expansion::new(split.clone());
    for seq in ry_tableau_sequences(alpha, split)? {
        out.add(seq.iter().map(IncreasingTableau::shape).collect(), C::one())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn tableau_validation() {
        assert!(IncreasingTableau::new(vec![vec![1, 1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(IncreasingTableau::new(vec![vec![1, 2], vec![2]]).is_ok());
        assert!(IncreasingTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert_eq!(t(&[&[4, 5], &[5]]).to_string(), "[[4,5],[5]]");
        let json = serde_json::to_string(&t(&[&[4, 5], &[5]])).unwrap();
        assert_eq!(json, "[[4,5],[5]]");
        assert_eq!(
            serde_json::from_str::<IncreasingTableau>(&json).unwrap(),
            t(&[&[4, 5], &[5]])
        );
        assert!(serde_json::from_str::<IncreasingTableau>("[[2,1]]").is_err());
    }

    #[test]
    fn t_alpha_examples() {
        assert_eq!(
            build_t_alpha(&"(0,0,0,2,1)".parse().unwrap()),
            t(&[&[4, 5], &[5]])
        );
        assert_eq!(
            build_t_alpha(&"(2,1,0)".parse().unwrap()),
            t(&[&[1, 2], &[2]])
        );
        assert!(build_t_alpha(&"(0,0,0)".parse().unwrap()).is_empty());
    }

    #[test]
    fn eg_examples() {
        assert_eq!(eg_column_insert(&w("4 5 4")).unwrap(), t(&[&[4, 5], &[5]]));
        assert_eq!(eg_column_insert(&w("5 4 5")).unwrap(), t(&[&[4, 5], &[5]]));
        assert_eq!(eg_column_insert(&w("3")).unwrap(), t(&[&[3]]));
        assert!(matches!(
            eg_column_insert(&w("2 2")),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn row_word_examples() {
        assert_eq!(row_word(&t(&[&[4, 5], &[5]])), w("5 4 5"));
        assert_eq!(row_word(&t(&[&[1, 3]])), w("3 1"));
        assert_eq!(row_word(&IncreasingTableau::empty()), Word::empty());
    }

    #[test]
    fn claim_sequences() {
        let alpha: Composition = "(0,0,0,2,1)".parse().unwrap();
        let split = SplitSet::new(6, &[1, 2, 4, 5]).unwrap();
        let seqs = ry_tableau_sequences(&alpha, &split).unwrap();
        let target: Vec<Vec<u32>> = vec![vec![1], vec![1], vec![1, 0], vec![0], vec![0]];
        let hits: Vec<_> = seqs
            .iter()
            .filter(|s| {
                let shapes: Vec<Vec<u32>> = s.iter().map(IncreasingTableau::shape).collect();
                shapes.iter().zip(&target).all(|(a, b)| {
                    let b: Vec<u32> = b.iter().copied().filter(|&x| x > 0).collect();
                    *a == b
                })
            })
            .collect();
        assert_eq!(hits.len(), 2);
        let e = ry_expand::<i64>(&alpha, &split).unwrap();
        assert_eq!(e.coefficient(&target), 2);
    }

    #[test]
    fn descent_outside_split_is_an_error() {
        let alpha: Composition = "(1,5,2,4,3)".parse().unwrap();
        let split = SplitSet::new(5, &[2]).unwrap();
        assert!(matches!(
            ry_expand::<i64>(&alpha, &split),
            Err(Error::DescentOutsideSplit { descent: 4, .. })
        ));
    }

    #[test]
    fn dominant_alpha_has_one_sequence() {
        let alpha: Composition = "(3,1,0)".parse().unwrap();
        let e = ry_expand::<i64>(&alpha, &SplitSet::new(3, &[1, 2]).unwrap()).unwrap();
        assert_eq!(e.len(), 1);
        assert!(e.is_multiplicity_free());
    }
}
