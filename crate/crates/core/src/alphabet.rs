//! Signed alphabets: finite totally ordered letter sets with a parity
//! (Z/2-degree) attached to every letter.
//!
//! Letters are represented internally by their rank in the alphabet order;
//! names exist for I/O only, so all comparisons reduce to integer order plus
//! a parity lookup.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Parity (Z/2-degree) of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A letter, identified by its rank in the alphabet order (0 = smallest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

/// A finite totally ordered alphabet together with a parity map.
///
/// The order is the order in which the letters were listed, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedAlphabet {
    names: Vec<String>,
    parities: Vec<Parity>,
}

/// On-disk representation of an alphabet:
/// `{"letters": ["1","2","3"], "odd": ["3"]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlphabetFile {
    pub letters: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("alphabet has no letters")]
    EmptyLetters,
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("odd-set member {0:?} is not a letter of the alphabet")]
    UnknownOddLetter(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("invalid alphabet file: {0}")]
    Malformed(String),
}

impl SignedAlphabet {
    /// Builds an alphabet from listed letters and the subset of odd ones.
    pub fn new<S: Into<String>>(
        letters: Vec<S>,
        odd: &[&str],
    ) -> Result<Self, AlphabetError> {
        let names: Vec<String> = letters.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlphabetError::EmptyLetters);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlphabetError::DuplicateLetter(n.clone()));
            }
        }
        let mut parities = vec![Parity::Even; names.len()];
        for o in odd {
            match names.iter().position(|n| n == o) {
                Some(i) => parities[i] = Parity::Odd,
                None => return Err(AlphabetError::UnknownOddLetter((*o).to_string())),
            }
        }
        Ok(SignedAlphabet { names, parities })
    }

    /// Alphabet `1 < 2 < ... < n` where letter `i` is odd iff bit `i-1` of
    /// `odd_mask` is set. Convenient for sweeping all parity assignments.
    pub fn numbered(n: usize, odd_mask: u32) -> Self {
        assert!(n >= 1 && n <= 32, "numbered alphabet size out of range");
        let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let parities = (0..n)
            .map(|i| {
                if odd_mask >> i & 1 == 1 {
                    Parity::Odd
                } else {
                    Parity::Even
                }
            })
            .collect();
        SignedAlphabet { names, parities }
    }

    pub fn from_file(spec: &AlphabetFile) -> Result<Self, AlphabetError> {
        let odd: Vec<&str> = spec.odd.iter().map(String::as_str).collect();
        SignedAlphabet::new(spec.letters.clone(), &odd)
    }

    pub fn parse_json(text: &str) -> Result<Self, AlphabetError> {
        let spec: AlphabetFile = serde_json::from_str(text)
            .map_err(|e| AlphabetError::Malformed(e.to_string()))?;
        SignedAlphabet::from_file(&spec)
    }

    pub fn to_file(&self) -> AlphabetFile {
        AlphabetFile {
            letters: self.names.clone(),
            odd: self
                .letters()
                .filter(|&l| self.parity(l) == Parity::Odd)
                .map(|l| self.name(l).to_string())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + '_ {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn parity(&self, l: Letter) -> Parity {
        self.parities[l.rank()]
    }

    pub fn is_odd(&self, l: Letter) -> bool {
        self.parity(l) == Parity::Odd
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.rank()]
    }

    pub fn letter(&self, name: &str) -> Result<Letter, AlphabetError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u32))
            .ok_or_else(|| AlphabetError::UnknownLetter(name.to_string()))
    }

    /// True when every letter name is a single character, in which case the
    /// compact word format (no separators) is unambiguous.
    pub fn compact_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Short human-readable descriptor, e.g. `{1,2,3; odd: 3}`.
    pub fn describe(&self) -> String {
        let odd: Vec<&str> = self
            .letters()
            .filter(|&l| self.is_odd(l))
            .map(|l| self.name(l))
            .collect();
        format!(
            "{{{}; odd: {}}}",
            self.names.join(","),
            if odd.is_empty() { "-".to_string() } else { odd.join(",") }
        )
    }
}

impl fmt::Display for SignedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_style_alphabet() {
        let a = SignedAlphabet::new(vec!["1", "2", "3", "4", "5"], &["3", "5"]).unwrap();
        assert_eq!(a.len(), 5);
        let even: Vec<&str> = a
            .letters()
            .filter(|&l| !a.is_odd(l))
            .map(|l| a.name(l))
            .collect();
        assert_eq!(even, vec!["1", "2", "4"]);
        assert!(a.is_odd(a.letter("3").unwrap()));
        assert!(a.is_odd(a.letter("5").unwrap()));
    }

    #[test]
    fn minimal_and_all_odd_alphabets() {
        let single = SignedAlphabet::new(vec!["1"], &[]).unwrap();
        assert_eq!(single.parity(Letter(0)), Parity::Even);

        let all_odd = SignedAlphabet::new(vec!["1", "2"], &["1", "2"]).unwrap();
        assert!(all_odd.letters().all(|l| all_odd.is_odd(l)));
    }

    #[test]
    fn rejects_malformed_specs() {
        assert_eq!(
            SignedAlphabet::new(Vec::<String>::new(), &[]),
            Err(AlphabetError::EmptyLetters)
        );
        assert_eq!(
            SignedAlphabet::new(vec!["1", "1"], &[]),
            Err(AlphabetError::DuplicateLetter("1".into()))
        );
        assert_eq!(
            SignedAlphabet::new(vec!["1"], &["2"]),
            Err(AlphabetError::UnknownOddLetter("2".into()))
        );
    }

    #[test]
    fn json_round_trip() {
        let a = SignedAlphabet::parse_json(r#"{"letters":["1","2","3"],"odd":["3"]}"#).unwrap();
        let json = serde_json::to_string(&a.to_file()).unwrap();
        let b = SignedAlphabet::parse_json(&json).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn numbered_matches_mask() {
        let a = SignedAlphabet::numbered(3, 0b101);
        assert!(a.is_odd(Letter(0)));
        assert!(!a.is_odd(Letter(1)));
        assert!(a.is_odd(Letter(2)));
        assert_eq!(a.name(Letter(2)), "3");
    }
}
