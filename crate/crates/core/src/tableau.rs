//! Super semistandard tableaux: validation, shape, readings, column
//! decomposition, and the juxtaposition test for pairs of columns.
//!
//! Rows weakly increase left to right and may repeat only even letters;
//! columns weakly increase top to bottom and may repeat only odd letters.
//! Row 1 is the top row and row lengths weakly decrease downwards.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, SignedAlphabet};
use crate::words::{SuperColumn, Word};

/// A partition: weakly decreasing positive parts. The empty shape is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Option<Shape> {
        let decreasing = parts.windows(2).all(|p| p[0] >= p[1]);
        let positive = parts.iter().all(|&p| p >= 1);
        (decreasing && positive).then_some(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Transposed diagram: part `j` is the number of parts of `self` that
    /// are at least `j + 1`, i.e. the column lengths.
    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Sum of the first `k` parts; saturates at the total for large `k`.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row lengths do not form a partition")]
    NotAPartition,
    #[error("row condition fails at row {row}, column {col}")]
    RowViolation { row: usize, col: usize },
    #[error("column condition fails at row {row}, column {col}")]
    ColumnViolation { row: usize, col: usize },
    #[error(transparent)]
    UnknownLetter(#[from] AlphabetError),
    #[error("invalid tableau file: {0}")]
    Malformed(String),
}

/// A validated super tableau. Immutable once constructed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperTableau {
    rows: Vec<Vec<Letter>>,
}

/// On-disk representation: `{"rows": [["1","1","2"],["3"]]}`, top row first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauFile {
    pub rows: Vec<Vec<String>>,
}

impl SuperTableau {
    pub fn empty() -> Self {
        SuperTableau { rows: Vec::new() }
    }

    /// Validates a raw grid. Violations name the first offending cell in
    /// row-major order, 1-based, where the offending cell is the earlier of
    /// the two cells in the failing comparison.
    pub fn new(a: &SignedAlphabet, rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.iter().any(|&l| l == 0) || lengths.windows(2).any(|p| p[0] < p[1]) {
            return Err(TableauError::NotAPartition);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if let Some(&y) = row.get(j + 1) {
                    if !(x < y || (x == y && !a.is_odd(x))) {
                        return Err(TableauError::RowViolation { row: i + 1, col: j + 1 });
                    }
                }
                if let Some(&y) = rows.get(i + 1).and_then(|r| r.get(j)) {
                    if !(x < y || (x == y && a.is_odd(x))) {
                        return Err(TableauError::ColumnViolation { row: i + 1, col: j + 1 });
                    }
                }
            }
        }
        Ok(SuperTableau { rows })
    }

    /// For grids produced by algorithms that preserve the invariant.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        SuperTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Reads rows bottom to top, each left to right.
    pub fn read_row(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Reads columns left to right, each bottom to top.
    pub fn read_col(&self) -> Word {
        let mut out = Vec::with_capacity(self.cell_count());
        for col in self.columns_top_to_bottom() {
            out.extend(col.into_iter().rev());
        }
        Word(out)
    }

    /// Columns as cell vectors, each listed top to bottom.
    pub(crate) fn columns_top_to_bottom(&self) -> Vec<Vec<Letter>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|j| {
                self.rows
                    .iter()
                    .filter_map(|row| row.get(j).copied())
                    .collect()
            })
            .collect()
    }

    pub(crate) fn from_columns_top_to_bottom(cols: Vec<Vec<Letter>>) -> Self {
        let height = cols.first().map_or(0, Vec::len);
        let rows = (0..height)
            .map(|i| cols.iter().filter_map(|c| c.get(i).copied()).collect())
            .collect();
        SuperTableau { rows }
    }

    /// Columns left to right, each in reading order (bottom to top); every
    /// entry is a super column by the tableau invariant.
    pub fn columns(&self) -> Vec<SuperColumn> {
        self.columns_top_to_bottom()
            .into_iter()
            .map(|mut c| {
                c.reverse();
                SuperColumn::from_word_unchecked(Word(c))
            })
            .collect()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Plain-text rendering: one row per line, top row first, letters
    /// space-separated.
    pub fn render_text(&self, a: &SignedAlphabet) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&l| a.name(l))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_file(&self, a: &SignedAlphabet) -> TableauFile {
        TableauFile {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&l| a.name(l).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_file(a: &SignedAlphabet, file: &TableauFile) -> Result<Self, TableauError> {
        let rows = file
            .rows
            .iter()
            .map(|row| row.iter().map(|n| a.letter(n)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        SuperTableau::new(a, rows)
    }

    pub fn parse_json(a: &SignedAlphabet, text: &str) -> Result<Self, TableauError> {
        let file: TableauFile =
            serde_json::from_str(text).map_err(|e| TableauError::Malformed(e.to_string()))?;
        SuperTableau::from_file(a, &file)
    }

    pub fn to_json(&self, a: &SignedAlphabet) -> String {
        serde_json::to_string(&self.to_file(a)).expect("tableau serialization cannot fail")
    }
}

/// Outcome of juxtaposing two columns with their tops aligned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Juxtaposition {
    /// The two-column grid is a super tableau; no rewrite applies.
    Tableau,
    /// The grid breaks some constraint; the pair is a rewrite redex.
    NotTableau,
}

/// Classifies the topmost juxtaposition of `u` and `v` (as left and right
/// columns, aligned at the top).
///
/// The grid is a tableau iff `|u| >= |v|` and at every depth `i` from the
/// top, `u`'s entry is at most `v`'s, with equality only for even letters.
/// Entries are compared from the top; reading order lists columns from the
/// bottom, so the comparison pairs the suffixes of the two words.
pub fn juxtaposition_class(a: &SignedAlphabet, u: &SuperColumn, v: &SuperColumn) -> Juxtaposition {
    if u.len() < v.len() {
        return Juxtaposition::NotTableau;
    }
    let us = u.letters();
    let vs = v.letters();
    for depth in 0..vs.len() {
        let x = us[us.len() - 1 - depth];
        let y = vs[vs.len() - 1 - depth];
        if !(x < y || (x == y && !a.is_odd(x))) {
            return Juxtaposition::NotTableau;
        }
    }
    Juxtaposition::Tableau
}
