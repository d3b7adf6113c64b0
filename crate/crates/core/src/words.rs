//! Words over a signed alphabet, the row/column word shapes, the two
//! length-lexicographic orders on columns, and exhaustive subsequence
//! statistics.
//!
//! A super row weakly increases and may repeat only even letters; a super
//! column weakly decreases (in reading order, bottom to top) and may repeat
//! only odd letters.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::alphabet::{AlphabetError, Letter, SignedAlphabet};

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Parses the text form: names separated by single spaces, or the
    /// compact form (no separators) when every letter name is one character.
    pub fn parse(a: &SignedAlphabet, text: &str) -> Result<Word, AlphabetError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() > 1 {
            let letters = tokens
                .into_iter()
                .map(|t| a.letter(t))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Word(letters));
        }
        // Single token: either one letter name, or compact when unambiguous.
        let token = tokens[0];
        if let Ok(l) = a.letter(token) {
            return Ok(Word(vec![l]));
        }
        if a.compact_names() {
            let letters = token
                .chars()
                .map(|c| a.letter(&c.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Word(letters));
        }
        Err(AlphabetError::UnknownLetter(token.to_string()))
    }

    /// Renders compactly when every name is a single character, otherwise
    /// space-separated; both forms re-parse to the same word.
    pub fn display(&self, a: &SignedAlphabet) -> String {
        let sep = if a.compact_names() { "" } else { " " };
        self.0
            .iter()
            .map(|&l| a.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// True iff consecutive letters satisfy `x_i <= x_{i+1}` with equality only
/// for even letters. The empty word qualifies.
pub fn is_super_row(a: &SignedAlphabet, w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && !a.is_odd(p[0])))
}

/// True iff consecutive letters satisfy `x_{i+1} <= x_i` with equality only
/// for odd letters. The empty word qualifies.
pub fn is_super_column(a: &SignedAlphabet, w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[1] < p[0] || (p[0] == p[1] && a.is_odd(p[0])))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordShapeError {
    #[error("word is not a super column")]
    NotAColumn,
    #[error("word is not a super row")]
    NotARow,
    #[error("column must be nonempty")]
    EmptyColumn,
}

/// A nonempty word satisfying the super-column shape, in reading order
/// (bottom of the column first).
///
/// The derived `Ord` is structural (for use in ordered containers); the
/// semantic orders are [`deglex_cmp`] and [`rev_cmp`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperColumn(Word);

impl SuperColumn {
    pub fn new(a: &SignedAlphabet, word: Word) -> Result<Self, WordShapeError> {
        if word.is_empty() {
            return Err(WordShapeError::EmptyColumn);
        }
        if !is_super_column(a, word.letters()) {
            return Err(WordShapeError::NotAColumn);
        }
        Ok(SuperColumn(word))
    }

    /// For words known to satisfy the invariant structurally (tableau
    /// columns, single letters).
    pub(crate) fn from_word_unchecked(word: Word) -> Self {
        debug_assert!(!word.is_empty());
        SuperColumn(word)
    }

    pub fn single(l: Letter) -> Self {
        SuperColumn(Word(vec![l]))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bottom entry of the column (first letter in reading order).
    pub fn bottom(&self) -> Letter {
        self.0.letters()[0]
    }

    /// Top entry of the column (last letter in reading order).
    pub fn top(&self) -> Letter {
        *self.0.letters().last().unwrap()
    }

    pub fn display(&self, a: &SignedAlphabet) -> String {
        self.0.display(a)
    }
}

/// A word satisfying the super-row shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperRow(Word);

impl SuperRow {
    pub fn new(a: &SignedAlphabet, word: Word) -> Result<Self, WordShapeError> {
        if !is_super_row(a, word.letters()) {
            return Err(WordShapeError::NotARow);
        }
        Ok(SuperRow(word))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }
}

/// Length-lexicographic order: shorter words first, ties broken
/// lexicographically by letter rank.
pub fn deglex_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// Length-reverse-lexicographic order: LONGER words first, ties broken
/// lexicographically by letter rank.
pub fn rev_cmp(u: &[Letter], v: &[Letter]) -> Ordering {
    v.len().cmp(&u.len()).then_with(|| u.cmp(v))
}

/// Which word shape a subsequence statistic asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubseqKind {
    Row,
    Column,
}

/// Exhaustive-search guard: subsequence statistics reject longer inputs.
pub const MAX_STAT_WORD_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("word of length {len} exceeds the exhaustive-search limit {limit}")]
    WordTooLong { len: usize, limit: usize },
}

fn check_stat_len(w: &[Letter]) -> Result<(), StatError> {
    if w.len() > MAX_STAT_WORD_LEN {
        return Err(StatError::WordTooLong {
            len: w.len(),
            limit: MAX_STAT_WORD_LEN,
        });
    }
    Ok(())
}

/// Subsequence of `w` selected by the bits of `mask`, in position order.
fn subsequence(w: &[Letter], mask: u32) -> Vec<Letter> {
    w.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &l)| l)
        .collect()
}

fn longest_subseq(a: &SignedAlphabet, w: &[Letter], kind: SubseqKind) -> Result<usize, StatError> {
    check_stat_len(w)?;
    let n = w.len();
    let mut best = 0;
    for mask in 0..1u32 << n {
        let sub = subsequence(w, mask);
        let ok = match kind {
            SubseqKind::Row => is_super_row(a, &sub),
            SubseqKind::Column => is_super_column(a, &sub),
        };
        if ok {
            best = best.max(sub.len());
        }
    }
    Ok(best)
}

/// Length of the longest super-row subsequence of `w`; 0 for the empty word.
pub fn longest_row_subseq(a: &SignedAlphabet, w: &[Letter]) -> Result<usize, StatError> {
    longest_subseq(a, w, SubseqKind::Row)
}

/// Length of the longest super-column subsequence of `w`; 0 for the empty word.
pub fn longest_col_subseq(a: &SignedAlphabet, w: &[Letter]) -> Result<usize, StatError> {
    longest_subseq(a, w, SubseqKind::Column)
}

/// Maximum total length of `k` pairwise disjoint subsequences of `w`, each of
/// the requested shape.
///
/// Exhaustive by construction: a subset DP over all position sets, intended
/// as an oracle at desk scale rather than a production algorithm.
pub fn greene_stat(
    a: &SignedAlphabet,
    w: &[Letter],
    k: usize,
    kind: SubseqKind,
) -> Result<usize, StatError> {
    check_stat_len(w)?;
    if k == 0 {
        return Ok(0);
    }
    let n = w.len();
    let full = (1u32 << n) - 1;

    let shaped: Vec<bool> = (0..=full)
        .map(|mask| {
            let sub = subsequence(w, mask);
            match kind {
                SubseqKind::Row => is_super_row(a, &sub),
                SubseqKind::Column => is_super_column(a, &sub),
            }
        })
        .collect();

    // min_parts[s] = fewest shaped pieces that partition position set s.
    let mut min_parts = vec![usize::MAX; (full + 1) as usize];
    min_parts[0] = 0;
    for s in 1..=full {
        if shaped[s as usize] {
            min_parts[s as usize] = 1;
            continue;
        }
        // Walk the nonempty subsets t of s.
        let mut t = s;
        let mut best = usize::MAX;
        while t > 0 {
            if shaped[t as usize] && min_parts[(s & !t) as usize] != usize::MAX {
                best = best.min(1 + min_parts[(s & !t) as usize]);
            }
            t = (t - 1) & s;
        }
        min_parts[s as usize] = best;
    }

    Ok((0..=full)
        .filter(|&s| min_parts[s as usize] <= k)
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

impl fmt::Display for Word {
    /// Rank-based rendering for debugging; use [`Word::display`] for named output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}
