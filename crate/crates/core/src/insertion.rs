//! Row and column insertion into super tableaux, the induced map from words
//! to tableaux (the P-symbol), and the tableau product.
//!
//! The four append/bump variants differ only in where a strict inequality is
//! required, and that choice is a function of the scan direction and the
//! parity of the entry being placed. [`bump_index`] encodes that table once
//! so the variants cannot drift apart.

use crate::alphabet::{Letter, SignedAlphabet};
use crate::tableau::SuperTableau;
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Scan {
    Row,
    Column,
}

/// Index of the entry that `x` replaces in a weakly increasing line, or
/// `None` when `x` is appended at the end.
///
/// Placing `x` into a row bumps the smallest entry `y > x` (even `x`) or
/// `y >= x` (odd `x`); into a column it bumps the smallest `y >= x` (even)
/// or `y > x` (odd). Lines weakly increase in scan order, so the smallest
/// qualifying entry is the first one.
fn bump_index(a: &SignedAlphabet, line: &[Letter], x: Letter, scan: Scan) -> Option<usize> {
    let strict = match scan {
        Scan::Row => !a.is_odd(x),
        Scan::Column => a.is_odd(x),
    };
    line.iter().position(|&y| if strict { y > x } else { y >= x })
}

fn insert_right_mut(a: &SignedAlphabet, rows: &mut Vec<Vec<Letter>>, x: Letter) {
    let mut cur = x;
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(vec![cur]);
            return;
        }
        match bump_index(a, &rows[i], cur, Scan::Row) {
            None => {
                rows[i].push(cur);
                return;
            }
            Some(j) => {
                cur = std::mem::replace(&mut rows[i][j], cur);
                i += 1;
            }
        }
    }
}

/// Inserts `x` into the top row of `t`, bumping displaced entries into the
/// rows below. The result is a valid tableau with one extra box.
pub fn insert_right(a: &SignedAlphabet, t: &SuperTableau, x: Letter) -> SuperTableau {
    let mut rows = t.rows().to_vec();
    insert_right_mut(a, &mut rows, x);
    SuperTableau::from_rows_unchecked(rows)
}

/// Inserts `x` into the leftmost column of `t`, bumping displaced entries
/// into the columns to the right.
pub fn insert_left(a: &SignedAlphabet, x: Letter, t: &SuperTableau) -> SuperTableau {
    let mut cols = t.columns_top_to_bottom();
    let mut cur = x;
    let mut j = 0;
    loop {
        if j == cols.len() {
            cols.push(vec![cur]);
            break;
        }
        match bump_index(a, &cols[j], cur, Scan::Column) {
            None => {
                cols[j].push(cur);
                break;
            }
            Some(i) => {
                cur = std::mem::replace(&mut cols[j][i], cur);
                j += 1;
            }
        }
    }
    SuperTableau::from_columns_top_to_bottom(cols)
}

/// The tableau of a word: letters inserted left to right by row insertion,
/// starting from the empty tableau.
pub fn p_symbol_right(a: &SignedAlphabet, w: &[Letter]) -> SuperTableau {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for &x in w {
        insert_right_mut(a, &mut rows, x);
    }
    SuperTableau::from_rows_unchecked(rows)
}

/// The same map computed the other way: letters inserted right to left by
/// column insertion. Agrees with [`p_symbol_right`] on every word.
pub fn p_symbol_left(a: &SignedAlphabet, w: &[Letter]) -> SuperTableau {
    let mut t = SuperTableau::empty();
    for &x in w.iter().rev() {
        t = insert_left(a, x, &mut t);
    }
    t
}

/// Product of two tableaux: the row reading of `t2` inserted into `t1`.
/// Associative, with the empty tableau as unit.
pub fn tableau_product(a: &SignedAlphabet, t1: &SuperTableau, t2: &SuperTableau) -> SuperTableau {
    let mut rows = t1.rows().to_vec();
    for &x in t2.read_row().letters() {
        insert_right_mut(a, &mut rows, x);
    }
    SuperTableau::from_rows_unchecked(rows)
}

/// P-symbol of the concatenation of a list of words.
pub fn p_symbol_of_concat(a: &SignedAlphabet, parts: &[&Word]) -> SuperTableau {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for part in parts {
        for &x in part.letters() {
            insert_right_mut(a, &mut rows, x);
        }
    }
    SuperTableau::from_rows_unchecked(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::Juxtaposition;

    /// Natural numbers 1..=n with the even numbers of even parity.
    fn numeric(n: usize) -> SignedAlphabet {
        let mut mask = 0u32;
        for i in 1..=n {
            if i % 2 == 1 {
                mask |= 1 << (i - 1);
            }
        }
        SignedAlphabet::numbered(n, mask)
    }

    fn w(a: &SignedAlphabet, s: &str) -> Word {
        Word::parse(a, s).unwrap()
    }

    fn tab(a: &SignedAlphabet, rows: &[&str]) -> SuperTableau {
        let grid = rows.iter().map(|r| w(a, r).0).collect();
        SuperTableau::new(a, grid).unwrap()
    }

    fn paper_alphabet() -> SignedAlphabet {
        SignedAlphabet::new(vec!["1", "2", "3", "4", "5"], &["3", "5"]).unwrap()
    }

    #[test]
    fn right_insertion_reference_display() {
        let a = numeric(6);
        let t = tab(&a, &["1 2 2 3", "1 3 4", "3"]);
        let got = insert_right(&a, &t, a.letter("2").unwrap());
        assert_eq!(got, tab(&a, &["1 2 2 2", "1 3 4", "3", "3"]));
    }

    #[test]
    fn left_insertion_reference_display() {
        let a = numeric(6);
        let t = tab(&a, &["1 2 5 6", "1 4 5", "2"]);
        let got = insert_left(&a, a.letter("1").unwrap(), &t);
        assert_eq!(got, tab(&a, &["1 2 2 5 6", "1 4 5", "1"]));
    }

    #[test]
    fn insertion_into_empty_tableau() {
        let a = numeric(3);
        let x = a.letter("2").unwrap();
        assert_eq!(
            insert_right(&a, &SuperTableau::empty(), x),
            tab(&a, &["2"])
        );
        assert_eq!(insert_left(&a, x, &SuperTableau::empty()), tab(&a, &["2"]));
    }

    #[test]
    fn append_case_on_signed_alphabet() {
        let a = paper_alphabet();
        let t = tab(&a, &["1 1 2", "3 4 4", "5", "5"]);
        // 2 is even and 2 >= 2, so it lands at the end of the top row.
        let got = insert_right(&a, &t, a.letter("2").unwrap());
        assert_eq!(got, tab(&a, &["1 1 2 2", "3 4 4", "5", "5"]));
    }

    #[test]
    fn odd_letter_bumps_in_leftmost_column() {
        let a = paper_alphabet();
        let t = tab(&a, &["1 1 2", "3 4 4", "5", "5"]);
        let x = a.letter("3").unwrap();
        let got = insert_left(&a, x, &t);
        // Must agree with the P-symbol of x prepended to the row reading.
        let mut word = vec![x];
        word.extend_from_slice(t.read_row().letters());
        assert_eq!(got, p_symbol_right(&a, &word));
        assert_eq!(
            SuperTableau::new(&a, got.rows().to_vec()).unwrap(),
            got,
            "insertion must produce a valid tableau"
        );
    }

    #[test]
    fn p_symbol_of_reference_reading() {
        let a = paper_alphabet();
        let t = p_symbol_right(&a, w(&a, "55344112").letters());
        assert_eq!(t, tab(&a, &["1 1 2", "3 4 4", "5", "5"]));
        assert_eq!(p_symbol_right(&a, &[]), SuperTableau::empty());
    }

    #[test]
    fn p_symbol_small_example() {
        let e = SignedAlphabet::numbered(3, 0);
        assert_eq!(
            p_symbol_right(&e, w(&e, "312").letters()),
            tab(&e, &["1 2", "3"])
        );
    }

    #[test]
    fn left_and_right_p_symbols_agree() {
        let a = paper_alphabet();
        let word = w(&a, "55344112");
        assert_eq!(p_symbol_left(&a, word.letters()), p_symbol_right(&a, word.letters()));
        assert_eq!(p_symbol_left(&a, &[]), SuperTableau::empty());
        let single = w(&a, "3");
        assert_eq!(
            p_symbol_left(&a, single.letters()),
            p_symbol_right(&a, single.letters())
        );
    }

    #[test]
    fn product_unit_laws_and_definition() {
        let e = SignedAlphabet::numbered(3, 0);
        let t = p_symbol_right(&e, w(&e, "312").letters());
        let empty = SuperTableau::empty();
        assert_eq!(tableau_product(&e, &t, &empty), t);
        assert_eq!(tableau_product(&e, &empty, &t), t);

        let t1 = p_symbol_right(&e, w(&e, "31").letters());
        let t2 = p_symbol_right(&e, w(&e, "2").letters());
        assert_eq!(
            tableau_product(&e, &t1, &t2),
            p_symbol_right(&e, w(&e, "312").letters())
        );
    }

    #[test]
    fn product_associativity_spot_check() {
        let e = SignedAlphabet::numbered(2, 0);
        let u = p_symbol_right(&e, w(&e, "2").letters());
        let v = p_symbol_right(&e, w(&e, "1").letters());
        let t = p_symbol_right(&e, w(&e, "21").letters());
        assert_eq!(
            tableau_product(&e, &tableau_product(&e, &u, &v), &t),
            tableau_product(&e, &u, &tableau_product(&e, &v, &t))
        );
    }

    /// All words of length <= `max_len` over the alphabet, shortest first.
    fn all_words(a: &SignedAlphabet, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out: Vec<Vec<Letter>> = vec![vec![]];
        let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for word in &frontier {
                for l in a.letters() {
                    let mut v = word.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn insertions_commute_and_preserve_validity() {
        // y left-inserted after x right-inserted equals the other order,
        // and every intermediate tableau validates. Words of length <= 4
        // over 2-letter alphabets, every parity assignment.
        for mask in 0..4u32 {
            let a = SignedAlphabet::numbered(2, mask);
            for word in all_words(&a, 4) {
                let t = p_symbol_right(&a, &word);
                assert!(SuperTableau::new(&a, t.rows().to_vec()).is_ok());
                for x in a.letters() {
                    for y in a.letters() {
                        let lhs = insert_left(&a, y, &insert_right(&a, &t, x));
                        let rhs = insert_right(&a, &insert_left(&a, y, &t), x);
                        assert_eq!(lhs, rhs);
                        assert!(SuperTableau::new(&a, lhs.rows().to_vec()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn readings_retrieve_the_tableau() {
        for mask in 0..8u32 {
            let a = SignedAlphabet::numbered(3, mask);
            for word in all_words(&a, 4) {
                let t = p_symbol_right(&a, &word);
                assert_eq!(p_symbol_right(&a, t.read_row().letters()), t);
                assert_eq!(p_symbol_right(&a, t.read_col().letters()), t);
                for pair in t.columns().windows(2) {
                    assert_eq!(
                        crate::tableau::juxtaposition_class(&a, &pair[0], &pair[1]),
                        Juxtaposition::Tableau
                    );
                }
            }
        }
    }
}
