//! Combinatorics of super tableaux over signed alphabets: Schensted-like
//! row and column insertion, the induced monoid of tableaux, the
//! length-3 rewriting system on letters, the convergent rewriting system on
//! column generators, and the machinery for checking confluence diagrams
//! and their factorizations at desk scale.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads.

pub mod alphabet;
pub mod column;
pub mod insertion;
pub mod knuth;
pub mod syzygy;
pub mod tableau;
pub mod words;

pub use alphabet::{AlphabetError, AlphabetFile, Letter, Parity, SignedAlphabet};
pub use column::{
    check_confluence, critical_branchings, embed_word, enumerate_columns, gamma_rule,
    is_normal_form, ll_cmp, normal_form, pair_kind, precolumn_rules, two_column_check,
    BranchingCheck, ColumnWord, GammaRule, PairKind, PrecolumnRule, ReductionError, RewritePath,
    Strategy,
};
pub use insertion::{insert_left, insert_right, p_symbol_left, p_symbol_right, tableau_product};
pub use knuth::{
    are_congruent, congruence_class, knuth_critical_pairs, knuth_rules, rewrite_positions,
    CongruenceError, CongruenceMethod, CriticalPair, KnuthKind, KnuthRule,
};
pub use syzygy::{
    build_diagram, classify, reduced_family, sphere_factorizations, FormTag, SphereReport,
    SyzygyDiagram, SyzygyError, SyzygyForm,
};
pub use tableau::{juxtaposition_class, Juxtaposition, Shape, SuperTableau, TableauError, TableauFile};
pub use words::{
    deglex_cmp, greene_stat, is_super_column, is_super_row, longest_col_subseq,
    longest_row_subseq, rev_cmp, StatError, SubseqKind, SuperColumn, SuperRow, Word,
};
