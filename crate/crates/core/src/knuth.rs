//! The parity-conditioned Knuth rewriting system on letters: rule
//! enumeration, single-step rewriting, an exact congruence oracle, and
//! critical-pair analysis.
//!
//! The oriented rules are not confluent in general, so normal forms under
//! them are not canonical representatives; the canonical representative of a
//! congruence class is the row reading of its tableau. The congruence oracle
//! therefore works with the symmetric closure (breadth-first), which always
//! terminates because every rule preserves length and letter multiset.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::alphabet::{Letter, SignedAlphabet};
use crate::insertion::p_symbol_right;
use crate::words::Word;

/// The two families of length-3 rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum KnuthKind {
    /// `zxy => xzy`, with `x = y` only if `y` is even and `y = z` only if
    /// `y` is odd.
    Eta,
    /// `yzx => yxz`, with `x = y` only if `y` is odd and `y = z` only if
    /// `y` is even.
    Epsilon,
}

/// One oriented rule instance, generated from a triple `x <= y <= z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct KnuthRule {
    pub kind: KnuthKind,
    pub triple: (Letter, Letter, Letter),
    pub lhs: Word,
    pub rhs: Word,
}

impl KnuthRule {
    fn new(kind: KnuthKind, triple: (Letter, Letter, Letter)) -> Self {
        let (x, y, z) = triple;
        let (lhs, rhs) = match kind {
            KnuthKind::Eta => (vec![z, x, y], vec![x, z, y]),
            KnuthKind::Epsilon => (vec![y, z, x], vec![y, x, z]),
        };
        let rule = KnuthRule {
            kind,
            triple,
            lhs: Word(lhs),
            rhs: Word(rhs),
        };
        let mut l = rule.lhs.0.clone();
        let mut r = rule.rhs.0.clone();
        l.sort();
        r.sort();
        assert_eq!(l, r, "rule sides must be permutations of each other");
        rule
    }

    pub fn display(&self, a: &SignedAlphabet) -> String {
        format!("{} => {}", self.lhs.display(a), self.rhs.display(a))
    }
}

/// All admissible rule instances over the alphabet, in triple order.
pub fn knuth_rules(a: &SignedAlphabet) -> Vec<KnuthRule> {
    let mut rules = Vec::new();
    for x in a.letters() {
        for y in a.letters().filter(|&y| y >= x) {
            for z in a.letters().filter(|&z| z >= y) {
                if (x != y || !a.is_odd(y)) && (y != z || a.is_odd(y)) {
                    rules.push(KnuthRule::new(KnuthKind::Eta, (x, y, z)));
                }
                if (x != y || a.is_odd(y)) && (y != z || !a.is_odd(y)) {
                    rules.push(KnuthRule::new(KnuthKind::Epsilon, (x, y, z)));
                }
            }
        }
    }
    rules
}

/// One directed rewrite: `rule` applied at `position` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnuthStep {
    pub rule: KnuthRule,
    pub position: usize,
    pub result: Word,
}

fn replace_at(w: &[Letter], pos: usize, old_len: usize, new: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(w.len() - old_len + new.len());
    out.extend_from_slice(&w[..pos]);
    out.extend_from_slice(new);
    out.extend_from_slice(&w[pos + old_len..]);
    Word(out)
}

/// All single-step rewrites of `w`, scanned left to right; rules are tried
/// in rule-set order at each position.
pub fn rewrite_positions(w: &Word, rules: &[KnuthRule]) -> Vec<KnuthStep> {
    let letters = w.letters();
    let mut steps = Vec::new();
    for pos in 0..letters.len().saturating_sub(2) {
        for rule in rules {
            if letters[pos..pos + 3] == *rule.lhs.letters() {
                steps.push(KnuthStep {
                    rule: rule.clone(),
                    position: pos,
                    result: replace_at(letters, pos, 3, rule.rhs.letters()),
                });
            }
        }
    }
    steps
}

/// Default bound on congruence-class size; exceeding it signals misuse on
/// long words rather than an expected condition.
pub const DEFAULT_CLASS_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("congruence class exceeded the cap of {cap} words")]
    ClassSizeExceeded { cap: usize },
    #[error("congruence oracles disagree on the given pair")]
    OracleMismatch { w1: Word, w2: Word },
}

fn neighbors(w: &Word, rules: &[KnuthRule]) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for pos in 0..letters.len().saturating_sub(2) {
        for rule in rules {
            if letters[pos..pos + 3] == *rule.lhs.letters() {
                out.push(replace_at(letters, pos, 3, rule.rhs.letters()));
            }
            if letters[pos..pos + 3] == *rule.rhs.letters() {
                out.push(replace_at(letters, pos, 3, rule.lhs.letters()));
            }
        }
    }
    out
}

/// The full equivalence class of `w` under the symmetric closure of the
/// rules, by breadth-first closure. Finite: rules preserve the letter
/// multiset, so the class sits inside the rearrangements of `w`.
pub fn congruence_class(
    w: &Word,
    rules: &[KnuthRule],
    cap: usize,
) -> Result<BTreeSet<Word>, CongruenceError> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for next in neighbors(&cur, rules) {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(CongruenceError::ClassSizeExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// How to decide congruence of two words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceMethod {
    /// Breadth-first closure of the symmetric rewrite relation.
    Bfs,
    /// Tableau comparison: congruent iff the P-symbols coincide.
    CrossSection,
    /// Run both and fail loudly if they ever disagree.
    Both,
}

pub fn are_congruent(
    a: &SignedAlphabet,
    w1: &Word,
    w2: &Word,
    rules: &[KnuthRule],
    method: CongruenceMethod,
) -> Result<bool, CongruenceError> {
    let bfs = || -> Result<bool, CongruenceError> {
        Ok(congruence_class(w1, rules, DEFAULT_CLASS_CAP)?.contains(w2))
    };
    let tableaux = || p_symbol_right(a, w1.letters()) == p_symbol_right(a, w2.letters());
    match method {
        CongruenceMethod::Bfs => bfs(),
        CongruenceMethod::CrossSection => Ok(tableaux()),
        CongruenceMethod::Both => {
            let b = bfs()?;
            let t = tableaux();
            if b != t {
                return Err(CongruenceError::OracleMismatch {
                    w1: w1.clone(),
                    w2: w2.clone(),
                });
            }
            Ok(b)
        }
    }
}

/// A minimal overlap of two rule applications on a common source, with a
/// joinability verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub source: Word,
    pub left: KnuthStep,
    pub right: KnuthStep,
    /// Normal forms reachable from each one-step target.
    pub left_normal_forms: BTreeSet<Word>,
    pub right_normal_forms: BTreeSet<Word>,
    pub joinable: bool,
}

/// All irreducible words reachable from `w` by directed rewriting. Finite by
/// multiset preservation.
pub fn reachable_normal_forms(w: &Word, rules: &[KnuthRule]) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut normal = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        let steps = rewrite_positions(&cur, rules);
        if steps.is_empty() {
            normal.insert(cur);
            continue;
        }
        for step in steps {
            if seen.insert(step.result.clone()) {
                queue.push_back(step.result);
            }
        }
    }
    normal
}

/// Enumerates the critical pairs of the rule set: overlap of two left-hand
/// sides on a source of length 3, 4, or 5. Joinability is decided by
/// intersecting the sets of normal forms reachable from the two targets.
pub fn knuth_critical_pairs(a: &SignedAlphabet) -> Vec<CriticalPair> {
    let rules = knuth_rules(a);
    let mut pairs = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for (j, r2) in rules.iter().enumerate() {
            for offset in 0..3usize {
                if offset == 0 && j <= i {
                    continue; // same-source pairs are unordered; skip (f, f)
                }
                let l1 = r1.lhs.letters();
                let l2 = r2.lhs.letters();
                let overlap = 3 - offset;
                if l1[offset..] != l2[..overlap] {
                    continue;
                }
                let mut source = l1.to_vec();
                source.extend_from_slice(&l2[overlap..]);
                let source = Word(source);

                let left = KnuthStep {
                    rule: r1.clone(),
                    position: 0,
                    result: replace_at(source.letters(), 0, 3, r1.rhs.letters()),
                };
                let right = KnuthStep {
                    rule: r2.clone(),
                    position: offset,
                    result: replace_at(source.letters(), offset, 3, r2.rhs.letters()),
                };
                let left_normal_forms = reachable_normal_forms(&left.result, &rules);
                let right_normal_forms = reachable_normal_forms(&right.result, &rules);
                let joinable = left_normal_forms
                    .intersection(&right_normal_forms)
                    .next()
                    .is_some();
                pairs.push(CriticalPair {
                    source,
                    left,
                    right,
                    left_normal_forms,
                    right_normal_forms,
                    joinable,
                });
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &SignedAlphabet, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    #[test]
    fn rule_enumeration_on_two_even_letters() {
        let a = SignedAlphabet::numbered(2, 0);
        let rules = knuth_rules(&a);
        let printed: Vec<String> = rules.iter().map(|r| r.display(&a)).collect();
        assert_eq!(printed, vec!["211 => 121", "221 => 212"]);
        assert_eq!(rules[0].kind, KnuthKind::Eta);
        assert_eq!(rules[1].kind, KnuthKind::Epsilon);
    }

    #[test]
    fn degenerate_single_letter_alphabets_have_no_rules() {
        assert!(knuth_rules(&SignedAlphabet::numbered(1, 0)).is_empty());
        assert!(knuth_rules(&SignedAlphabet::numbered(1, 1)).is_empty());
    }

    #[test]
    fn single_step_rewrites() {
        let a = SignedAlphabet::numbered(2, 0);
        let rules = knuth_rules(&a);

        let steps = rewrite_positions(&w(&a, "211"), &rules);
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].result, w(&a, "121"));

        assert!(rewrite_positions(&Word::empty(), &rules).is_empty());

        let steps = rewrite_positions(&w(&a, "2211"), &rules);
        let got: Vec<(usize, Word)> = steps.iter().map(|s| (s.position, s.result.clone())).collect();
        assert_eq!(got, vec![(0, w(&a, "2121")), (1, w(&a, "2121"))]);
    }

    #[test]
    fn congruence_class_examples() {
        let a = SignedAlphabet::numbered(2, 0);
        let rules = knuth_rules(&a);

        let class = congruence_class(&w(&a, "211"), &rules, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(class, BTreeSet::from([w(&a, "211"), w(&a, "121")]));

        let class = congruence_class(&Word::empty(), &rules, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(class, BTreeSet::from([Word::empty()]));

        let a3 = SignedAlphabet::numbered(3, 0);
        let rules3 = knuth_rules(&a3);
        let class = congruence_class(&w(&a3, "312"), &rules3, DEFAULT_CLASS_CAP).unwrap();
        assert!(class.contains(&w(&a3, "132")));
    }

    #[test]
    fn class_cap_is_enforced() {
        let a = SignedAlphabet::numbered(2, 0);
        let rules = knuth_rules(&a);
        assert_eq!(
            congruence_class(&w(&a, "211"), &rules, 1),
            Err(CongruenceError::ClassSizeExceeded { cap: 1 })
        );
    }

    #[test]
    fn congruence_oracles() {
        let a = SignedAlphabet::numbered(2, 0);
        let rules = knuth_rules(&a);
        for method in [
            CongruenceMethod::Bfs,
            CongruenceMethod::CrossSection,
            CongruenceMethod::Both,
        ] {
            assert!(are_congruent(&a, &w(&a, "211"), &w(&a, "121"), &rules, method).unwrap());
            assert!(!are_congruent(&a, &w(&a, "12"), &w(&a, "21"), &rules, method).unwrap());
            assert!(are_congruent(&a, &w(&a, "12"), &w(&a, "12"), &rules, method).unwrap());
        }
    }

    #[test]
    fn rewrites_preserve_the_tableau() {
        // Exhaustive over words of length <= 5 on 2-letter alphabets, every
        // parity assignment; longer ranges run in the verification suites.
        for mask in 0..4u32 {
            let a = SignedAlphabet::numbered(2, mask);
            let rules = knuth_rules(&a);
            let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
            for _ in 0..5 {
                let mut next = Vec::new();
                for word in &frontier {
                    for l in a.letters() {
                        let mut v = word.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
                for word in &next {
                    let word = Word(word.clone());
                    let t = p_symbol_right(&a, word.letters());
                    for step in rewrite_positions(&word, &rules) {
                        assert_eq!(p_symbol_right(&a, step.result.letters()), t);
                    }
                    assert!(are_congruent(
                        &a,
                        &word,
                        &p_symbol_right(&a, word.letters()).read_row(),
                        &rules,
                        CongruenceMethod::Both
                    )
                    .unwrap());
                }
                frontier = next;
            }
        }
    }

    #[test]
    fn critical_pairs_enumerate_and_verify() {
        let a = SignedAlphabet::numbered(3, 0);
        let pairs = knuth_critical_pairs(&a);
        assert!(!pairs.is_empty());
        let rules = knuth_rules(&a);
        for p in &pairs {
            // Both targets are one-step reducts of the source.
            assert!(rewrite_positions(&p.source, &rules)
                .iter()
                .any(|s| s.result == p.left.result));
            assert!(rewrite_positions(&p.source, &rules)
                .iter()
                .any(|s| s.result == p.right.result));
            // Joinability verdict matches congruence: targets are always
            // congruent, and joinable pairs share a normal form.
            assert!(
                are_congruent(&a, &p.left.result, &p.right.result, &rules, CongruenceMethod::Both)
                    .unwrap()
            );
            if p.joinable {
                assert!(p
                    .left_normal_forms
                    .intersection(&p.right_normal_forms)
                    .next()
                    .is_some());
            }
        }
    }

    #[test]
    fn no_pairs_without_rules() {
        let a = SignedAlphabet::numbered(1, 0);
        assert!(knuth_critical_pairs(&a).is_empty());
    }

    #[test]
    fn rank_four_has_a_non_joinable_pair() {
        let a = SignedAlphabet::numbered(4, 0);
        let pairs = knuth_critical_pairs(&a);
        let bad: Vec<&CriticalPair> = pairs.iter().filter(|p| !p.joinable).collect();
        assert!(!bad.is_empty());
        // Any non-joinable pair yields two distinct irreducible words in one
        // congruence class.
        let p = bad[0];
        let rules = knuth_rules(&a);
        let nf1 = p.left_normal_forms.iter().next().unwrap();
        let nf2 = p.right_normal_forms.iter().next().unwrap();
        assert_ne!(nf1, nf2);
        assert!(rewrite_positions(nf1, &rules).is_empty());
        assert!(rewrite_positions(nf2, &rules).is_empty());
        assert!(are_congruent(&a, nf1, nf2, &rules, CongruenceMethod::Both).unwrap());
    }
}
