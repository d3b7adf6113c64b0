//! The rewriting system on column generators: merge rules computed by
//! insertion, the termination order, normal forms under pluggable
//! strategies, critical branchings, and the pre-column rule family.
//!
//! A column word is a sequence of column generators. An adjacent pair whose
//! topmost juxtaposition fails to be a tableau is a redex; the rule rewrites
//! it to the column decomposition of the tableau of the concatenated words,
//! which has one or two columns. Rules are generated on demand rather than
//! materialized: the family is infinite over unbounded column lengths, and
//! enumeration bounds exist only in tests and harnesses.

use std::cmp::Ordering;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alphabet::{Letter, SignedAlphabet};
use crate::insertion::p_symbol_of_concat;
use crate::tableau::{juxtaposition_class, Juxtaposition, SuperTableau};
use crate::words::{deglex_cmp, rev_cmp, SuperColumn, Word, WordShapeError};

/// How a pair of columns multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Juxtaposition is already a tableau; the pair is irreducible.
    Tableau,
    /// The product tableau is a single column (the concatenation).
    OneColumn,
    /// The product tableau has exactly two columns.
    TwoColumns,
}

/// Classifies `(u, v)`: irreducible, or reducible with a one- or two-column
/// product. The product of a reducible pair never has a third column.
pub fn pair_kind(a: &SignedAlphabet, u: &SuperColumn, v: &SuperColumn) -> PairKind {
    if juxtaposition_class(a, u, v) == Juxtaposition::Tableau {
        return PairKind::Tableau;
    }
    match product_tableau(a, &[u, v]).column_count() {
        1 => PairKind::OneColumn,
        2 => PairKind::TwoColumns,
        n => unreachable!("reducible column pair produced {n} columns"),
    }
}

/// Tableau of the concatenation of the given column readings.
pub fn product_tableau(a: &SignedAlphabet, cols: &[&SuperColumn]) -> SuperTableau {
    let words: Vec<&Word> = cols.iter().map(|c| c.word()).collect();
    p_symbol_of_concat(a, &words)
}

/// A merge rule `c_u c_v => c_w [c_w']` for a reducible pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRule {
    pub lhs: (SuperColumn, SuperColumn),
    /// One column (the concatenation) or two (the product's decomposition).
    pub rhs: Vec<SuperColumn>,
}

impl GammaRule {
    pub fn display(&self, a: &SignedAlphabet) -> String {
        format!(
            "{}|{} => {}",
            self.lhs.0.display(a),
            self.lhs.1.display(a),
            self.rhs
                .iter()
                .map(|c| c.display(a))
                .collect::<Vec<_>>()
                .join("|")
        )
    }
}

/// The rule rewriting `(u, v)`, or `None` when the pair is irreducible.
pub fn gamma_rule(a: &SignedAlphabet, u: &SuperColumn, v: &SuperColumn) -> Option<GammaRule> {
    if juxtaposition_class(a, u, v) == Juxtaposition::Tableau {
        return None;
    }
    let rhs = product_tableau(a, &[u, v]).columns();
    debug_assert!(matches!(rhs.len(), 1 | 2));
    // Letter multiset is preserved: the rule only rearranges the entries.
    debug_assert_eq!(
        {
            let mut l: Vec<Letter> = u.letters().iter().chain(v.letters()).copied().collect();
            l.sort();
            l
        },
        {
            let mut r: Vec<Letter> = rhs.iter().flat_map(|c| c.letters()).copied().collect();
            r.sort();
            r
        }
    );
    Some(GammaRule {
        lhs: (u.clone(), v.clone()),
        rhs,
    })
}

/// Report for the two-column bound on reducible products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColumnReport {
    pub column_count: usize,
    /// For two-column products, lengths of the left column and of `u`.
    pub left_len: Option<usize>,
    pub u_len: usize,
    pub ok: bool,
}

/// Checks that a reducible product has at most two columns, and that a
/// two-column product has a left column strictly longer than `u`.
pub fn two_column_check(
    a: &SignedAlphabet,
    u: &SuperColumn,
    v: &SuperColumn,
) -> Option<TwoColumnReport> {
    if juxtaposition_class(a, u, v) == Juxtaposition::Tableau {
        return None;
    }
    let cols = product_tableau(a, &[u, v]).columns();
    let ok = match cols.len() {
        1 => true,
        2 => cols[0].len() > u.len(),
        _ => false,
    };
    Some(TwoColumnReport {
        column_count: cols.len(),
        left_len: (cols.len() == 2).then(|| cols[0].len()),
        u_len: u.len(),
        ok,
    })
}

/// A word in column generators. Never stores empty columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColumnWord {
    cols: Vec<SuperColumn>,
}

impl ColumnWord {
    pub fn new(cols: Vec<SuperColumn>) -> Self {
        ColumnWord { cols }
    }

    pub fn empty() -> Self {
        ColumnWord::default()
    }

    pub fn columns(&self) -> &[SuperColumn] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Concatenation of the generator readings.
    pub fn flatten(&self) -> Word {
        Word(
            self.cols
                .iter()
                .flat_map(|c| c.letters())
                .copied()
                .collect(),
        )
    }

    /// Parses `"2|1|21"`: columns separated by `|`, each in the word text
    /// format. The empty string is the empty column word.
    pub fn parse(a: &SignedAlphabet, text: &str) -> Result<Self, ColumnWordError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(ColumnWord::empty());
        }
        let cols = text
            .split('|')
            .map(|part| {
                let w = Word::parse(a, part)?;
                Ok(SuperColumn::new(a, w)?)
            })
            .collect::<Result<Vec<_>, ColumnWordError>>()?;
        Ok(ColumnWord { cols })
    }

    pub fn display(&self, a: &SignedAlphabet) -> String {
        self.cols
            .iter()
            .map(|c| c.display(a))
            .collect::<Vec<_>>()
            .join("|")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColumnWordError {
    #[error(transparent)]
    Alphabet(#[from] crate::alphabet::AlphabetError),
    #[error(transparent)]
    Shape(#[from] WordShapeError),
}

/// Maps each letter of `w` to a one-letter generator.
pub fn embed_word(w: &Word) -> ColumnWord {
    ColumnWord {
        cols: w.letters().iter().map(|&l| SuperColumn::single(l)).collect(),
    }
}

/// The termination order on column words: fewer generators first; equal
/// lengths are compared at the first differing position by the
/// length-reverse-lexicographic order on columns.
///
/// Every rule application strictly decreases this order: a one-column merge
/// shortens the word, and a two-column merge lengthens the leftmost changed
/// generator.
pub fn ll_cmp(cw1: &ColumnWord, cw2: &ColumnWord) -> Ordering {
    cw1.len().cmp(&cw2.len()).then_with(|| {
        for (u, v) in cw1.cols.iter().zip(&cw2.cols) {
            match rev_cmp(u.letters(), v.letters()) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

/// One rewrite: the rule for the pair at `position` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStep {
    pub position: usize,
    pub rule: GammaRule,
}

/// A recorded rewriting sequence from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritePath {
    pub start: ColumnWord,
    pub steps: Vec<PathStep>,
    pub end: ColumnWord,
}

impl RewritePath {
    /// Replays the steps from `start` and checks they produce `end`.
    pub fn replay(&self) -> bool {
        let mut cur = self.start.clone();
        for step in &self.steps {
            let Some(pair) = cur.cols.get(step.position..step.position + 2) else {
                return false;
            };
            if (pair[0].clone(), pair[1].clone()) != step.rule.lhs {
                return false;
            }
            cur.cols
                .splice(step.position..step.position + 2, step.rule.rhs.iter().cloned());
        }
        cur == self.end
    }
}

/// Redex selection policy for [`normal_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniform choice among redexes, deterministic for a given seed.
    Random(u64),
}

pub const DEFAULT_STEP_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("reduction exceeded {limit} steps; this indicates a termination bug")]
    StepLimitExceeded { limit: usize },
}

fn redexes(a: &SignedAlphabet, cw: &ColumnWord) -> Vec<usize> {
    (0..cw.len().saturating_sub(1))
        .filter(|&i| {
            juxtaposition_class(a, &cw.cols[i], &cw.cols[i + 1]) == Juxtaposition::NotTableau
        })
        .collect()
}

/// True iff no adjacent pair is reducible.
pub fn is_normal_form(a: &SignedAlphabet, cw: &ColumnWord) -> bool {
    redexes(a, cw).is_empty()
}

/// Rewrites `cw` to its normal form, choosing redexes by `strategy`, and
/// records the path taken. All strategies reach the same normal form.
pub fn normal_form(
    a: &SignedAlphabet,
    cw: &ColumnWord,
    strategy: Strategy,
) -> Result<(ColumnWord, RewritePath), ReductionError> {
    normal_form_with_limit(a, cw, strategy, DEFAULT_STEP_LIMIT)
}

pub fn normal_form_with_limit(
    a: &SignedAlphabet,
    cw: &ColumnWord,
    strategy: Strategy,
    limit: usize,
) -> Result<(ColumnWord, RewritePath), ReductionError> {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cur = cw.clone();
    let mut steps = Vec::new();
    loop {
        let candidates = redexes(a, &cur);
        if candidates.is_empty() {
            break;
        }
        if steps.len() >= limit {
            return Err(ReductionError::StepLimitExceeded { limit });
        }
        let position = match strategy {
            Strategy::Leftmost => candidates[0],
            Strategy::Rightmost => *candidates.last().unwrap(),
            Strategy::Random(_) => {
                let rng = rng.as_mut().unwrap();
                candidates[(rng.next_u64() % candidates.len() as u64) as usize]
            }
        };
        let rule = gamma_rule(a, &cur.cols[position], &cur.cols[position + 1])
            .expect("redex positions are reducible");
        cur.cols
            .splice(position..position + 2, rule.rhs.iter().cloned());
        steps.push(PathStep { position, rule });
    }
    let path = RewritePath {
        start: cw.clone(),
        steps,
        end: cur.clone(),
    };
    Ok((cur, path))
}

/// All super columns of length 1..=`max_len`, shortest first, ties in
/// lexicographic order.
pub fn enumerate_columns(a: &SignedAlphabet, max_len: usize) -> Vec<SuperColumn> {
    let mut out: Vec<Vec<Letter>> = Vec::new();
    let mut frontier: Vec<Vec<Letter>> = a.letters().map(|l| vec![l]).collect();
    for _ in 0..max_len {
        out.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for col in &frontier {
            let last = *col.last().unwrap();
            for l in a.letters() {
                if l < last || (l == last && a.is_odd(last)) {
                    let mut v = col.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|u, v| deglex_cmp(u, v));
    out.into_iter()
        .map(|v| SuperColumn::from_word_unchecked(Word(v)))
        .collect()
}

/// All triples `(u, v, t)` of enumerated columns with both adjacent pairs
/// reducible. These are exactly the minimal overlaps of two rules.
pub fn critical_branchings(
    a: &SignedAlphabet,
    max_len: usize,
) -> Vec<(SuperColumn, SuperColumn, SuperColumn)> {
    let cols = enumerate_columns(a, max_len);
    let mut out = Vec::new();
    for u in &cols {
        for v in &cols {
            if juxtaposition_class(a, u, v) == Juxtaposition::Tableau {
                continue;
            }
            for t in &cols {
                if juxtaposition_class(a, v, t) == Juxtaposition::NotTableau {
                    out.push((u.clone(), v.clone(), t.clone()));
                }
            }
        }
    }
    out
}

/// Result of resolving one critical branching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingCheck {
    /// Reduction starting with the rule at the left overlap (leftmost
    /// strategy throughout).
    pub left: RewritePath,
    /// Reduction starting with the rule at the right overlap (rightmost
    /// strategy throughout).
    pub right: RewritePath,
    /// Both reductions end at the same column word.
    pub confluent: bool,
    /// The common end is the column decomposition of the triple product.
    pub canonical: bool,
}

/// Resolves the branching on `[c_u, c_v, c_t]` along its two sides and
/// compares the results with each other and with the product tableau.
pub fn check_confluence(
    a: &SignedAlphabet,
    u: &SuperColumn,
    v: &SuperColumn,
    t: &SuperColumn,
) -> Result<BranchingCheck, ReductionError> {
    let start = ColumnWord::new(vec![u.clone(), v.clone(), t.clone()]);
    let (left_end, left) = normal_form(a, &start, Strategy::Leftmost)?;
    let (right_end, right) = normal_form(a, &start, Strategy::Rightmost)?;
    let confluent = left_end == right_end;
    let product = ColumnWord::new(product_tableau(a, &[u, v, t]).columns());
    let canonical = confluent && left_end == product;
    Ok(BranchingCheck {
        left,
        right,
        confluent,
        canonical,
    })
}

/// The pre-column rule family over an alphabet.
///
/// Split rules rewrite a letter against a two-letter column into two
/// columns; merge rules absorb a letter into a column it extends. Together
/// they present the same monoid as the full merge-rule family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecolumnRule {
    /// `c_q c_{zy} => c_{zq} c_y` (q at most the top letter) or
    /// `c_q c_{zx} => c_{qx} c_z` (q between the letters); both sides are
    /// recorded explicitly.
    Split {
        letter: Letter,
        column: SuperColumn,
        rhs: (SuperColumn, SuperColumn),
    },
    /// `c_x c_u => c_{xu}` whenever `x u` is a column.
    Merge {
        letter: Letter,
        column: SuperColumn,
        rhs: SuperColumn,
    },
}

impl PrecolumnRule {
    pub fn lhs(&self) -> (SuperColumn, SuperColumn) {
        match self {
            PrecolumnRule::Split { letter, column, .. }
            | PrecolumnRule::Merge { letter, column, .. } => {
                (SuperColumn::single(*letter), column.clone())
            }
        }
    }

    pub fn rhs_columns(&self) -> Vec<SuperColumn> {
        match self {
            PrecolumnRule::Split { rhs, .. } => vec![rhs.0.clone(), rhs.1.clone()],
            PrecolumnRule::Merge { rhs, .. } => vec![rhs.clone()],
        }
    }

    pub fn display(&self, a: &SignedAlphabet) -> String {
        let (l0, l1) = self.lhs();
        format!(
            "{}|{} => {}",
            l0.display(a),
            l1.display(a),
            self.rhs_columns()
                .iter()
                .map(|c| c.display(a))
                .collect::<Vec<_>>()
                .join("|")
        )
    }
}

/// Generates the pre-column rules: every split rule (their two-letter
/// columns need no bound), and the merge rules `c_x c_u => c_{xu}` for
/// enumerated columns `u` of length at most `max_len`.
pub fn precolumn_rules(a: &SignedAlphabet, max_len: usize) -> Vec<PrecolumnRule> {
    let mut rules = Vec::new();
    // Split family, from triples x <= y <= z with the parity side
    // conditions mirroring the two Knuth families.
    for x in a.letters() {
        for y in a.letters().filter(|&y| y >= x) {
            for z in a.letters().filter(|&z| z >= y) {
                if (x != y || !a.is_odd(y)) && (y != z || a.is_odd(y)) {
                    // c_x c_{zy} => c_{zx} c_y
                    rules.push(PrecolumnRule::Split {
                        letter: x,
                        column: SuperColumn::from_word_unchecked(Word(vec![z, y])),
                        rhs: (
                            SuperColumn::from_word_unchecked(Word(vec![z, x])),
                            SuperColumn::single(y),
                        ),
                    });
                }
                if (x != y || a.is_odd(y)) && (y != z || !a.is_odd(y)) {
                    // c_y c_{zx} => c_{yx} c_z
                    rules.push(PrecolumnRule::Split {
                        letter: y,
                        column: SuperColumn::from_word_unchecked(Word(vec![z, x])),
                        rhs: (
                            SuperColumn::from_word_unchecked(Word(vec![y, x])),
                            SuperColumn::single(z),
                        ),
                    });
                }
            }
        }
    }
    // Merge family: c_x c_u => c_{xu} whenever x u is a column.
    for x in a.letters() {
        for u in enumerate_columns(a, max_len) {
            let extends = u.bottom() < x || (u.bottom() == x && a.is_odd(x));
            if extends {
                let mut letters = vec![x];
                letters.extend_from_slice(u.letters());
                rules.push(PrecolumnRule::Merge {
                    letter: x,
                    column: u,
                    rhs: SuperColumn::from_word_unchecked(Word(letters)),
                });
            }
        }
    }
    rules
}
