//! Classification of critical branchings into the five confluence-diagram
//! forms, construction and checking of the diagrams themselves, the reduced
//! branching family, and the factorization identities that justify the
//! reduction.
//!
//! A diagram is represented by its boundary: the two rewriting paths out of
//! the branching source. "The diagram commutes" is checked as end-word
//! equality plus fidelity of the per-form step counts and positions.

use std::fmt;

use thiserror::Error;

use crate::alphabet::{Letter, SignedAlphabet};
use crate::column::{
    critical_branchings, normal_form, product_tableau, ColumnWord, PairKind, ReductionError,
    RewritePath, Strategy,
};
use crate::column::pair_kind;
use crate::tableau::{juxtaposition_class, Juxtaposition};
use crate::words::{SuperColumn, Word};

/// The five diagram forms, keyed by how the two overlapping pairs multiply
/// and, when both products are thin, whether the merged pair is irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormTag {
    A,
    B,
    C,
    CPrime,
    D,
}

impl fmt::Display for FormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormTag::A => "A",
            FormTag::B => "B",
            FormTag::C => "C",
            FormTag::CPrime => "C'",
            FormTag::D => "D",
        })
    }
}

/// Named columns appearing in the diagrams. `None` stands for the empty
/// column; a rewrite step involving an empty column is an identity and is
/// omitted from paths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witnesses {
    /// Columns of the product of `u` and `v`.
    pub e: Option<SuperColumn>,
    pub e_prime: Option<SuperColumn>,
    /// Columns of the product of `v` and `t`.
    pub w: Option<SuperColumn>,
    pub w_prime: Option<SuperColumn>,
    /// Columns of the product of `u` and `w`.
    pub a: Option<SuperColumn>,
    pub a_prime: Option<SuperColumn>,
    /// Columns of the product of `e'` and `t` (of `t` alone when `e'` is
    /// empty).
    pub b: Option<SuperColumn>,
    pub b_prime: Option<SuperColumn>,
    /// Middle column of the triple product.
    pub d: Option<SuperColumn>,
    /// End columns of the two-column form (tag B only).
    pub s: Option<SuperColumn>,
    pub s_prime: Option<SuperColumn>,
}

/// A classified branching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyForm {
    pub tag: FormTag,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyzygyError {
    #[error("({0}, {1}) is not a critical branching: both adjacent pairs must be reducible")]
    NotABranching(String, String),
    #[error("the prefix letter does not extend the remaining column")]
    NotAColumn,
    #[error("diagram deviates from its form: {0}")]
    DiagramMismatch(String),
    #[error("reading identity {identity:?} failed: {detail}")]
    IdentityFailure { identity: &'static str, detail: String },
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// Product columns of the concatenation of the present parts.
fn product_columns(a: &SignedAlphabet, parts: &[Option<&SuperColumn>]) -> Vec<SuperColumn> {
    let words: Vec<&Word> = parts.iter().flatten().map(|c| c.word()).collect();
    crate::insertion::p_symbol_of_concat(a, &words).columns()
}

fn pad2(cols: Vec<SuperColumn>) -> (Option<SuperColumn>, Option<SuperColumn>) {
    debug_assert!(cols.len() <= 2);
    let mut it = cols.into_iter();
    (it.next(), it.next())
}

fn pad3(
    cols: Vec<SuperColumn>,
) -> (Option<SuperColumn>, Option<SuperColumn>, Option<SuperColumn>) {
    debug_assert!(cols.len() <= 3);
    let mut it = cols.into_iter();
    (it.next(), it.next(), it.next())
}

fn ensure_branching(
    a: &SignedAlphabet,
    u: &SuperColumn,
    v: &SuperColumn,
    t: &SuperColumn,
) -> Result<(), SyzygyError> {
    let uv = juxtaposition_class(a, u, v) == Juxtaposition::NotTableau;
    let vt = juxtaposition_class(a, v, t) == Juxtaposition::NotTableau;
    if uv && vt {
        Ok(())
    } else {
        Err(SyzygyError::NotABranching(
            format!("{:?}|{:?}", u, v),
            format!("{:?}|{:?}", v, t),
        ))
    }
}

/// Assigns the unique form of the branching `(u, v, t)` and computes its
/// witness columns by insertion.
pub fn classify(
    a: &SignedAlphabet,
    u: &SuperColumn,
    v: &SuperColumn,
    t: &SuperColumn,
) -> Result<SyzygyForm, SyzygyError> {
    ensure_branching(a, u, v, t)?;
    let k_uv = pair_kind(a, u, v);
    let k_vt = pair_kind(a, v, t);

    let (e, e_prime) = pad2(product_columns(a, &[Some(u), Some(v)]));
    let (w, w_prime) = pad2(product_columns(a, &[Some(v), Some(t)]));
    let (aa, a_prime) = pad2(product_columns(a, &[Some(u), w.as_ref()]));
    let (b, b_prime) = pad2(product_columns(a, &[e_prime.as_ref(), Some(t)]));
    let (first, d, _third) = pad3(product_columns(a, &[Some(u), Some(v), Some(t)]));

    let tag = match (k_uv, k_vt) {
        (PairKind::OneColumn, PairKind::OneColumn) => FormTag::A,
        (PairKind::TwoColumns, PairKind::OneColumn) => FormTag::B,
        (PairKind::OneColumn, PairKind::TwoColumns) => {
            let merged = e.as_ref().expect("one-column product is nonempty");
            match juxtaposition_class(a, merged, t) {
                Juxtaposition::Tableau => FormTag::CPrime,
                Juxtaposition::NotTableau => FormTag::C,
            }
        }
        (PairKind::TwoColumns, PairKind::TwoColumns) => FormTag::D,
        (PairKind::Tableau, _) | (_, PairKind::Tableau) => unreachable!("checked above"),
    };

    let (s, s_prime) = if tag == FormTag::B {
        (first, d.clone())
    } else {
        (None, None)
    };

    Ok(SyzygyForm {
        tag,
        witnesses: Witnesses {
            e,
            e_prime,
            w,
            w_prime,
            a: aa,
            a_prime,
            b,
            b_prime,
            d,
            s,
            s_prime,
        },
    })
}

/// A branching together with its form and its two resolving paths.
///
/// The source path resolves the left overlap first and then follows the
/// leftmost strategy; the target path starts at the right overlap and
/// follows the rightmost strategy. Both must end at the column
/// decomposition of the triple product, with the step counts and positions
/// dictated by the form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyDiagram {
    pub triple: (SuperColumn, SuperColumn, SuperColumn),
    pub form: SyzygyForm,
    pub source_path: RewritePath,
    pub target_path: RewritePath,
}

/// Expected 0-based positions of the rewrite steps on each side.
fn expected_positions(tag: FormTag) -> (&'static [usize], &'static [usize]) {
    match tag {
        FormTag::A => (&[0, 0], &[1, 0]),
        FormTag::B => (&[0, 1, 0], &[1, 0]),
        FormTag::C => (&[0, 0], &[1, 0]),
        FormTag::CPrime => (&[0], &[1, 0, 1]),
        FormTag::D => (&[0, 1, 0], &[1, 0, 1]),
    }
}

pub fn build_diagram(
    a: &SignedAlphabet,
    u: &SuperColumn,
    v: &SuperColumn,
    t: &SuperColumn,
) -> Result<SyzygyDiagram, SyzygyError> {
    let form = classify(a, u, v, t)?;
    let start = ColumnWord::new(vec![u.clone(), v.clone(), t.clone()]);
    let (source_end, source_path) = normal_form(a, &start, Strategy::Leftmost)?;
    let (target_end, target_path) = normal_form(a, &start, Strategy::Rightmost)?;

    if source_end != target_end {
        return Err(SyzygyError::DiagramMismatch(format!(
            "sides end at {} and {}",
            source_end.display(a),
            target_end.display(a)
        )));
    }
    let product = ColumnWord::new(product_tableau(a, &[u, v, t]).columns());
    if source_end != product {
        return Err(SyzygyError::DiagramMismatch(format!(
            "end {} differs from the product decomposition {}",
            source_end.display(a),
            product.display(a)
        )));
    }
    let (want_src, want_tgt) = expected_positions(form.tag);
    let got_src: Vec<usize> = source_path.steps.iter().map(|s| s.position).collect();
    let got_tgt: Vec<usize> = target_path.steps.iter().map(|s| s.position).collect();
    if got_src != want_src || got_tgt != want_tgt {
        return Err(SyzygyError::DiagramMismatch(format!(
            "form {} expects steps {:?}/{:?}, found {:?}/{:?}",
            form.tag, want_src, want_tgt, got_src, got_tgt
        )));
    }
    Ok(SyzygyDiagram {
        triple: (u.clone(), v.clone(), t.clone()),
        form,
        source_path,
        target_path,
    })
}

/// The branchings whose first column is a single letter. Resolving only
/// these suffices: the factorization identities below discharge the rest.
pub fn reduced_family(
    a: &SignedAlphabet,
    max_len: usize,
) -> Vec<(SuperColumn, SuperColumn, SuperColumn)> {
    critical_branchings(a, max_len)
        .into_iter()
        .filter(|(u, _, _)| u.len() == 1)
        .collect()
}

/// All named columns computed while checking the factorization identities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SphereReport {
    pub w: Option<SuperColumn>,
    pub w_prime: Option<SuperColumn>,
    pub s: Option<SuperColumn>,
    pub s_prime: Option<SuperColumn>,
    pub a1: Option<SuperColumn>,
    pub a1_prime: Option<SuperColumn>,
    pub d1: Option<SuperColumn>,
    pub d1_prime: Option<SuperColumn>,
    pub e: Option<SuperColumn>,
    pub e_prime: Option<SuperColumn>,
    pub a: Option<SuperColumn>,
    pub a_prime: Option<SuperColumn>,
    pub b: Option<SuperColumn>,
    pub b_prime: Option<SuperColumn>,
    pub d: Option<SuperColumn>,
    pub z: Option<SuperColumn>,
    pub y: Option<SuperColumn>,
    pub s2: Option<SuperColumn>,
    pub s3: Option<SuperColumn>,
    /// Identity labels, in the order they were checked.
    pub checked: Vec<&'static str>,
}

fn cols_eq(got: &[SuperColumn], want: &[Option<&SuperColumn>]) -> bool {
    let want: Vec<&SuperColumn> = want.iter().flatten().copied().collect();
    got.iter().collect::<Vec<_>>() == want
}

fn describe(a: &SignedAlphabet, cols: &[SuperColumn]) -> String {
    if cols.is_empty() {
        "(empty)".to_string()
    } else {
        cols.iter()
            .map(|c| c.display(a))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Decomposes the branching `(x u1, v, t)` along its first letter and checks
/// the nine reading identities tying the four-generator resolutions
/// together. Empty participants degenerate the affected identities; a
/// nonempty leftover in a position that must hold a single letter is a
/// failure.
pub fn sphere_factorizations(
    a: &SignedAlphabet,
    x: Letter,
    u1: &SuperColumn,
    v: &SuperColumn,
    t: &SuperColumn,
) -> Result<SphereReport, SyzygyError> {
    // u = x u1 must itself be a column.
    let extends = u1.bottom() < x || (u1.bottom() == x && a.is_odd(x));
    if !extends {
        return Err(SyzygyError::NotAColumn);
    }
    let mut u_letters = vec![x];
    u_letters.extend_from_slice(u1.letters());
    let u = SuperColumn::new(a, Word(u_letters)).map_err(|_| SyzygyError::NotAColumn)?;
    ensure_branching(a, &u, v, t)?;
    let xcol = SuperColumn::single(x);

    let mut report = SphereReport::default();
    let prod = |parts: &[Option<&SuperColumn>]| product_columns(a, parts);

    let (w, w_prime) = pad2(prod(&[Some(v), Some(t)]));
    let (s, s_prime) = pad2(prod(&[Some(u1), Some(v)]));
    let (a1, a1_prime) = pad2(prod(&[Some(u1), w.as_ref()]));
    let (d1, d1_prime) = pad2(prod(&[s_prime.as_ref(), Some(t)]));
    let (e, e_prime) = pad2(prod(&[Some(&u), Some(v)]));
    let (aa, a_prime) = pad2(prod(&[Some(&u), w.as_ref()]));
    let (b, b_prime) = pad2(prod(&[e_prime.as_ref(), Some(t)]));
    let (uvt_first, d, uvt_third) = pad3(prod(&[Some(&u), Some(v), Some(t)]));

    report.w = w.clone();
    report.w_prime = w_prime.clone();
    report.s = s.clone();
    report.s_prime = s_prime.clone();
    report.a1 = a1.clone();
    report.a1_prime = a1_prime.clone();
    report.d1 = d1.clone();
    report.d1_prime = d1_prime.clone();
    report.e = e.clone();
    report.e_prime = e_prime.clone();
    report.a = aa.clone();
    report.a_prime = a_prime.clone();
    report.b = b.clone();
    report.b_prime = b_prime.clone();
    report.d = d.clone();

    // The triple product must decompose as (a, d, b').
    if uvt_first != aa || uvt_third != b_prime {
        return Err(SyzygyError::IdentityFailure {
            identity: "u v t = a d b'",
            detail: format!(
                "triple product decomposes as {} {} {}",
                describe(a, uvt_first.as_slice()),
                describe(a, d.as_slice()),
                describe(a, uvt_third.as_slice()),
            ),
        });
    }

    let fail = |identity: &'static str, got: &[SuperColumn]| SyzygyError::IdentityFailure {
        identity,
        detail: format!("got {}", describe(a, got)),
    };

    // 1. x a1 = a z, with z at most a single letter.
    let got = prod(&[Some(&xcol), a1.as_ref()]);
    let z = got.get(1).cloned();
    if got.first() != aa.as_ref() || got.len() > 2 || z.as_ref().is_some_and(|c| c.len() != 1) {
        return Err(fail("x a1 = a z", &got));
    }
    report.z = z.clone();
    report.checked.push("x a1 = a z");

    // 2. z a1' = a'.
    let got = prod(&[z.as_ref(), a1_prime.as_ref()]);
    if !cols_eq(&got, &[a_prime.as_ref()]) {
        return Err(fail("z a1' = a'", &got));
    }
    report.checked.push("z a1' = a'");

    // 3. x s = e y, with y at most a single letter.
    let got = prod(&[Some(&xcol), s.as_ref()]);
    let y = got.get(1).cloned();
    if got.first() != e.as_ref() || got.len() > 2 || y.as_ref().is_some_and(|c| c.len() != 1) {
        return Err(fail("x s = e y", &got));
    }
    report.y = y.clone();
    report.checked.push("x s = e y");

    // 4. y s' = e'.
    let got = prod(&[y.as_ref(), s_prime.as_ref()]);
    if !cols_eq(&got, &[e_prime.as_ref()]) {
        return Err(fail("y s' = e'", &got));
    }
    report.checked.push("y s' = e'");

    // 5. y d1 = b s2.
    let got = prod(&[y.as_ref(), d1.as_ref()]);
    let s2 = got.get(1).cloned();
    if got.first() != b.as_ref() || got.len() > 2 {
        return Err(fail("y d1 = b s2", &got));
    }
    report.s2 = s2.clone();
    report.checked.push("y d1 = b s2");

    // 6. s2 d1' = b'.
    let got = prod(&[s2.as_ref(), d1_prime.as_ref()]);
    if !cols_eq(&got, &[b_prime.as_ref()]) {
        return Err(fail("s2 d1' = b'", &got));
    }
    report.checked.push("s2 d1' = b'");

    // 7. s d1 = a1 s3.
    let got = prod(&[s.as_ref(), d1.as_ref()]);
    let s3 = got.get(1).cloned();
    if got.first() != a1.as_ref() || got.len() > 2 {
        return Err(fail("s d1 = a1 s3", &got));
    }
    report.s3 = s3.clone();
    report.checked.push("s d1 = a1 s3");

    // 8. a1' w' = s3 d1'.
    let got = prod(&[a1_prime.as_ref(), w_prime.as_ref()]);
    if !cols_eq(&got, &[s3.as_ref(), d1_prime.as_ref()]) {
        return Err(fail("a1' w' = s3 d1'", &got));
    }
    report.checked.push("a1' w' = s3 d1'");

    // 9. z s3 = d s2.
    let got = prod(&[z.as_ref(), s3.as_ref()]);
    if !cols_eq(&got, &[d.as_ref(), s2.as_ref()]) {
        return Err(fail("z s3 = d s2", &got));
    }
    report.checked.push("z s3 = d s2");

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(n: usize) -> SignedAlphabet {
        SignedAlphabet::numbered(n, 0)
    }

    fn col(a: &SignedAlphabet, s: &str) -> SuperColumn {
        SuperColumn::new(a, Word::parse(a, s).unwrap()).unwrap()
    }

    #[test]
    fn classification_fixtures() {
        let e = even(3);
        let form = classify(&e, &col(&e, "3"), &col(&e, "2"), &col(&e, "1")).unwrap();
        assert_eq!(form.tag, FormTag::A);

        let form = classify(&e, &col(&e, "1"), &col(&e, "32"), &col(&e, "1")).unwrap();
        assert_eq!(form.tag, FormTag::B);
        assert_eq!(form.witnesses.e, Some(col(&e, "31")));
        assert_eq!(form.witnesses.e_prime, Some(col(&e, "2")));
        assert_eq!(form.witnesses.s, Some(col(&e, "321")));
        assert_eq!(form.witnesses.s_prime, Some(col(&e, "1")));

        let e2 = even(2);
        let form = classify(&e2, &col(&e2, "2"), &col(&e2, "1"), &col(&e2, "21")).unwrap();
        assert_eq!(form.tag, FormTag::CPrime);
    }

    #[test]
    fn classification_covers_c_and_d() {
        let e = even(3);
        let form = classify(&e, &col(&e, "3"), &col(&e, "2"), &col(&e, "21")).unwrap();
        assert_eq!(form.tag, FormTag::C);

        let form = classify(&e, &col(&e, "1"), &col(&e, "21"), &col(&e, "321")).unwrap();
        assert_eq!(form.tag, FormTag::D);
    }

    #[test]
    fn classify_rejects_non_branchings() {
        let e = even(3);
        assert!(matches!(
            classify(&e, &col(&e, "31"), &col(&e, "2"), &col(&e, "1")),
            Err(SyzygyError::NotABranching(..))
        ));
    }

    #[test]
    fn diagram_fixtures() {
        let e2 = even(2);
        let d = build_diagram(&e2, &col(&e2, "2"), &col(&e2, "1"), &col(&e2, "21")).unwrap();
        assert_eq!(d.form.tag, FormTag::CPrime);
        assert_eq!(d.source_path.steps.len(), 1);
        assert_eq!(d.target_path.steps.len(), 3);
        assert_eq!(
            d.source_path.end,
            ColumnWord::new(vec![col(&e2, "21"), col(&e2, "21")])
        );
        assert!(d.source_path.replay() && d.target_path.replay());

        let e = even(3);
        let d = build_diagram(&e, &col(&e, "3"), &col(&e, "2"), &col(&e, "1")).unwrap();
        assert_eq!(d.form.tag, FormTag::A);
        assert_eq!(d.source_path.end, ColumnWord::new(vec![col(&e, "321")]));

        let d = build_diagram(&e, &col(&e, "1"), &col(&e, "32"), &col(&e, "1")).unwrap();
        assert_eq!(d.form.tag, FormTag::B);
        assert_eq!(d.source_path.steps.len(), 3);
        assert_eq!(d.target_path.steps.len(), 2);
        assert_eq!(
            d.source_path.end,
            ColumnWord::new(vec![col(&e, "321"), col(&e, "1")])
        );
    }

    #[test]
    fn reduced_family_examples() {
        let e2 = even(2);
        let fam = reduced_family(&e2, 2);
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].0, col(&e2, "2"));

        let e3 = even(3);
        let fam = reduced_family(&e3, 2);
        assert!(fam.iter().all(|(u, _, _)| u.len() == 1));
        assert!(fam
            .iter()
            .any(|(u, v, t)| (u.display(&e3), v.display(&e3), t.display(&e3))
                == ("1".into(), "32".into(), "1".into())));
    }

    #[test]
    fn sphere_smoke_test() {
        let e = even(3);
        let report = sphere_factorizations(
            &e,
            e.letter("3").unwrap(),
            &col(&e, "2"),
            &col(&e, "1"),
            &col(&e, "21"),
        )
        .unwrap();
        assert_eq!(report.checked.len(), 9);
        assert_eq!(report.a, Some(col(&e, "321")));
        assert_eq!(report.s3, Some(col(&e, "21")));
        assert_eq!(report.z, None);
    }

    #[test]
    fn sphere_rejects_non_columns() {
        let e = even(3);
        assert_eq!(
            sphere_factorizations(
                &e,
                e.letter("1").unwrap(),
                &col(&e, "2"),
                &col(&e, "1"),
                &col(&e, "21"),
            ),
            Err(SyzygyError::NotAColumn)
        );
    }

    #[test]
    fn spheres_pass_exhaustively_on_small_range() {
        let e = even(3);
        let cols = crate::column::enumerate_columns(&e, 2);
        let mut ran = 0;
        for x in e.letters() {
            for u1 in &cols {
                let extends = u1.bottom() < x || (u1.bottom() == x && e.is_odd(x));
                if !extends {
                    continue;
                }
                let mut letters = vec![x];
                letters.extend_from_slice(u1.letters());
                let u = SuperColumn::new(&e, Word(letters)).unwrap();
                for v in &cols {
                    if juxtaposition_class(&e, &u, v) == Juxtaposition::Tableau {
                        continue;
                    }
                    for t in &cols {
                        if juxtaposition_class(&e, v, t) == Juxtaposition::Tableau {
                            continue;
                        }
                        sphere_factorizations(&e, x, u1, v, t).unwrap();
                        ran += 1;
                    }
                }
            }
        }
        assert!(ran > 0);
    }

    #[test]
    fn every_small_branching_classifies_and_commutes() {
        for mask in 0..8u32 {
            let a = SignedAlphabet::numbered(3, mask);
            for (u, v, t) in critical_branchings(&a, 2) {
                let diagram = build_diagram(&a, &u, &v, &t).unwrap();
                let (want_src, want_tgt) = expected_positions(diagram.form.tag);
                assert_eq!(diagram.source_path.steps.len(), want_src.len());
                assert_eq!(diagram.target_path.steps.len(), want_tgt.len());
            }
        }
    }
}
