//! Fillings of diagrams: SSYT, SYT, row-strict shifted tableaux and
//! column-flagged tableaux, with their reading words.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{Letter, Word};

/// A filling of a finite diagram. Rows are 1-based in the accessors;
/// `None` marks a position outside the diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Option<Letter>>>,
}

impl Tableau {
    pub fn from_rows(mut rows: Vec<Vec<Option<Letter>>>) -> Self {
        for r in rows.iter_mut() {
            while r.last() == Some(&None) {
                r.pop();
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau { rows }
    }

    /// Filling of a straight shape from complete rows.
    pub fn from_full_rows(rows: &[&[Letter]]) -> Self {
        Tableau::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Some(x)).collect())
                .collect(),
        )
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied().flatten()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Cells `(row, col, entry)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter_map(move |(j, x)| x.map(|v| (i + 1, j + 1, v)))
        })
    }

    pub fn size(&self) -> usize {
        self.cells().count()
    }

    /// Row lengths; meaningful for straight shapes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.iter().flatten().count()).collect())
            .unwrap_or_default()
    }

    /// Entries row by row, top to bottom.
    pub fn row_reading(&self) -> Vec<Letter> {
        self.cells().map(|(_, _, v)| v).collect()
    }

    /// Columns read bottom to top, leftmost column first.
    pub fn colword(&self) -> Word {
        let mut out = Vec::new();
        for j in 1..=self.num_cols() {
            for i in (1..=self.num_rows()).rev() {
                if let Some(v) = self.get(i, j) {
                    out.push(v);
                }
            }
        }
        Word::from_slice(&out)
    }

    /// Diagonals of constant `col - row`, southwest first, each read going southeast.
    pub fn diagonals(&self) -> Vec<Vec<Letter>> {
        let mut by_content: BTreeMap<isize, Vec<(usize, Letter)>> = BTreeMap::new();
        for (i, j, v) in self.cells() {
            by_content
                .entry(j as isize - i as isize)
                .or_default()
                .push((i, v));
        }
        by_content
            .into_values()
            .map(|mut d| {
                d.sort();
                d.into_iter().map(|(_, v)| v).collect()
            })
            .collect()
    }

    pub fn diagread(&self) -> Word {
        Word::from_slice(&self.diagonals().concat())
    }

    /// Diagonal reading with `w` placed after the first diagonal; when the
    /// first two columns are empty, `w` is a prefix instead.
    pub fn diagread_with(&self, w: &Word) -> Word {
        let first_two_empty = (1..=self.num_rows()).all(|i| self.get(i, 1).is_none() && self.get(i, 2).is_none());
        if first_two_empty {
            return w.concat(&self.diagread());
        }
        let diags = self.diagonals();
        let mut out: Vec<Letter> = Vec::new();
        for (idx, d) in diags.iter().enumerate() {
            out.extend_from_slice(d);
            if idx == 0 {
                out.extend_from_slice(w.letters());
            }
        }
        Word::from_slice(&out)
    }

    /// Square reading word. An entry `c` is circled when its west neighbor is
    /// `c - 1`. Diagonals are taken southwest first; within one, circled
    /// entries are read going northwest, then the rest going southeast.
    pub fn sqread(&self) -> Word {
        let mut by_content: BTreeMap<isize, Vec<(usize, Letter, bool)>> = BTreeMap::new();
        for (i, j, v) in self.cells() {
            let circled = j > 1 && self.get(i, j - 1).is_some_and(|west| west + 1 == v);
            by_content
                .entry(j as isize - i as isize)
                .or_default()
                .push((i, v, circled));
        }
        let mut out = Vec::new();
        for mut d in by_content.into_values() {
            d.sort();
            out.extend(d.iter().rev().filter(|c| c.2).map(|c| c.1));
            out.extend(d.iter().filter(|c| !c.2).map(|c| c.1));
        }
        Word::from_slice(&out)
    }

    /// Descent set of a standard filling: `i` such that `i + 1` sits in a lower row.
    pub fn standard_descents(&self) -> BTreeSet<usize> {
        let mut row_of = BTreeMap::new();
        for (i, _, v) in self.cells() {
            row_of.insert(v as usize, i);
        }
        row_of
            .iter()
            .filter_map(|(&v, &r)| row_of.get(&(v + 1)).filter(|&&r2| r2 > r).map(|_| v))
            .collect()
    }

    /// Text form: rows separated by `/`, entries by `,`, `.` for holes.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.map_or(".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Inverse of [`Tableau::to_text`]. A row without commas is read digit by digit.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad tableau {s:?}"));
        let mut rows = Vec::new();
        for r in s.trim().split('/') {
            let r = r.trim();
            let entries: Vec<&str> = if r.contains(',') {
                r.split(',').collect()
            } else {
                r.split("").filter(|x| !x.is_empty()).collect()
            };
            let row = entries
                .into_iter()
                .map(|e| match e.trim() {
                    "." => Ok(None),
                    x => x
                        .parse::<u8>()
                        .ok()
                        .filter(|&v| (1..=crate::word::MAX_LETTER).contains(&v))
                        .map(Some)
                        .ok_or_else(bad),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Tableau::from_rows(rows))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[{}]", self.to_text())
    }
}

/// Which family of fillings to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauKind {
    /// Semistandard, entries in `[n]`.
    Ssyt { n: u8 },
    /// Standard.
    Syt,
    /// Strict rows and columns, `T(i+1, j+1) - T(i, j) >= 3`, entries in `[n]`.
    Rsst { n: u8 },
}

/// Constraint data for the backtracking filler.
struct Filler<'a> {
    /// Cells in fill order; each cell's west and north neighbors come earlier.
    cells: Vec<(usize, usize)>,
    row_strict: bool,
    diag_gap: Option<u8>,
    upper: &'a dyn Fn(usize, usize) -> u8,
    lower: &'a dyn Fn(usize, usize) -> u8,
    /// Remaining multiplicities, when entries must form a fixed multiset.
    budget: Option<Vec<u32>>,
}

impl Filler<'_> {
    fn run(mut self) -> Vec<Tableau> {
        let rows = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let cols = self.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let mut grid = vec![vec![None; cols]; rows];
        let mut out = Vec::new();
        self.rec(0, &mut grid, &mut out);
        out
    }

    fn rec(&mut self, k: usize, grid: &mut Vec<Vec<Option<Letter>>>, out: &mut Vec<Tableau>) {
        if k == self.cells.len() {
            out.push(Tableau::from_rows(grid.clone()));
            return;
        }
        let (i, j) = self.cells[k];
        let at = |grid: &Vec<Vec<Option<Letter>>>, r: usize, c: usize| -> Option<Letter> {
            if r == 0 || c == 0 {
                None
            } else {
                grid.get(r - 1).and_then(|row| row.get(c - 1)).copied().flatten()
            }
        };
        let mut lo = (self.lower)(i, j).max(1);
        if let Some(west) = at(grid, i, j - 1) {
            lo = lo.max(if self.row_strict { west + 1 } else { west });
        }
        if let Some(north) = at(grid, i - 1, j) {
            lo = lo.max(north + 1);
        }
        if let Some(gap) = self.diag_gap {
            if let Some(nw) = at(grid, i - 1, j - 1) {
                lo = lo.max(nw + gap);
            }
        }
        let hi = (self.upper)(i, j);
        for v in lo..=hi {
            if let Some(b) = self.budget.as_mut() {
                if b.get(v as usize).copied().unwrap_or(0) == 0 {
                    continue;
                }
                b[v as usize] -= 1;
            }
            grid[i - 1][j - 1] = Some(v);
            self.rec(k + 1, grid, out);
            grid[i - 1][j - 1] = None;
            if let Some(b) = self.budget.as_mut() {
                b[v as usize] += 1;
            }
        }
    }
}

fn sort_by_reading(mut ts: Vec<Tableau>) -> Vec<Tableau> {
    ts.sort_by_key(|t| t.row_reading());
    ts
}

/// All fillings of the straight shape `shape` of the given kind, ordered by
/// row-reading word.
pub fn enumerate(kind: &TableauKind, shape: &Partition) -> Vec<Tableau> {
    let found = match kind {
        TableauKind::Syt => standard_tableaux(shape),
        TableauKind::Ssyt { n } => {
            let n = *n;
            Filler {
                cells: shape.cells(),
                row_strict: false,
                diag_gap: None,
                upper: &move |_, _| n,
                lower: &|_, _| 1,
                budget: None,
            }
            .run()
        }
        TableauKind::Rsst { n } => rsst_with_budget(shape, *n, None),
    };
    sort_by_reading(found)
}

/// Row-strict shifted tableaux whose entries form the given multiset.
pub fn rsst_with_content(shape: &Partition, content: &[Letter]) -> Vec<Tableau> {
    let n = content.iter().copied().max().unwrap_or(0);
    let mut budget = vec![0u32; n as usize + 1];
    for &c in content {
        budget[c as usize] += 1;
    }
    if shape.size() != content.len() {
        return Vec::new();
    }
    sort_by_reading(rsst_with_budget(shape, n, Some(budget)))
}

fn rsst_with_budget(shape: &Partition, n: u8, budget: Option<Vec<u32>>) -> Vec<Tableau> {
    Filler {
        cells: shape.cells(),
        row_strict: true,
        diag_gap: Some(3),
        upper: &move |_, _| n,
        lower: &|_, _| 1,
        budget,
    }
    .run()
}

fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(
        shape: &[usize],
        filled: &mut Vec<usize>,
        next: u8,
        total: usize,
        grid: &mut Vec<Vec<Option<Letter>>>,
        out: &mut Vec<Tableau>,
    ) {
        if next as usize > total {
            out.push(Tableau::from_rows(grid.clone()));
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                grid[r][c] = Some(next);
                filled[r] += 1;
                rec(shape, filled, next + 1, total, grid, out);
                filled[r] -= 1;
                grid[r][c] = None;
            }
        }
    }
    let parts = shape.parts();
    let mut grid: Vec<Vec<Option<Letter>>> = parts.iter().map(|&p| vec![None; p]).collect();
    let mut out = Vec::new();
    rec(parts, &mut vec![0; parts.len()], 1, shape.size(), &mut grid, &mut out);
    out
}

/// Fillings in `SSYT(alpha')^flags`: column `j` has height `alpha[j]`, rows weakly
/// increase, columns strictly increase, column `j` entries lie in `[flags[j]]`,
/// and when column `j + 1` is taller than column `j` its bottom entry exceeds
/// `flags[j]`.
pub fn flagged_tableaux(alpha: &[usize], flags: &[u8]) -> Result<Vec<Tableau>> {
    if alpha.len() != flags.len() {
        return Err(Error::LengthMismatch(alpha.len(), flags.len()));
    }
    if alpha.windows(2).any(|p| p[1] > p[0] + 1) {
        return Err(Error::InvalidShape(format!(
            "{alpha:?} violates alpha_(j+1) <= alpha_j + 1"
        )));
    }
    let height = alpha.iter().copied().max().unwrap_or(0);
    let mut cells = Vec::new();
    for i in 1..=height {
        for (j, &a) in alpha.iter().enumerate() {
            if a >= i {
                cells.push((i, j + 1));
            }
        }
    }
    let upper = |_: usize, j: usize| flags[j - 1];
    let lower = |i: usize, j: usize| {
        if j >= 2 && alpha[j - 2] < alpha[j - 1] && i == alpha[j - 1] {
            flags[j - 2] + 1
        } else {
            1
        }
    };
    Ok(sort_by_reading(
        Filler {
            cells,
            row_strict: false,
            diag_gap: None,
            upper: &upper,
            lower: &lower,
            budget: None,
        }
        .run(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn reading_words_of_the_worked_examples() {
        let t = Tableau::parse("1122/223/567").unwrap();
        assert_eq!(t.colword(), w("5216217322"));
        let d = Tableau::parse("1,1,2,2/2,2,3/.,.,7").unwrap();
        assert_eq!(d.diagread(), w("21271322"));
        let s = Tableau::parse("1246/3457/5689").unwrap();
        assert_eq!(s.sqread(), w("563418952476"));
    }

    #[test]
    fn counts() {
        let l = Partition::parse("2,2,2").unwrap();
        assert_eq!(enumerate(&TableauKind::Syt, &l).len(), 5);
        let l = Partition::parse("2,1").unwrap();
        assert_eq!(enumerate(&TableauKind::Ssyt { n: 3 }, &l).len(), 8);
        assert_eq!(Tableau::parse("1,.,3/2").unwrap().to_text(), "1,.,3/2");
    }

    #[test]
    fn standard_descent_sets() {
        let t = Tableau::parse("13/2").unwrap();
        assert_eq!(t.standard_descents().into_iter().collect::<Vec<_>>(), vec![1]);
    }
}
