//! Sorting games for the classical families.
//!
//! Each quotient is realized inside a group of (signed) permutations written
//! in one-line notation `[w(1), ..., w(n)]`. A generator acts on the right,
//! i.e. on positions. Sorting an element back to the identity one diagram
//! row at a time records the row lengths of its diagram.
//!
//! Conventions:
//! - `A:n:p` uses permutations of `1..=n+1`; `s_i` swaps positions `i, i+1`.
//! - `B:n`, `C:n` use signed permutations; `s_i` swaps for `i < n` and `s_n`
//!   negates position `n`. Entries are compared in the order
//!   `1 < 2 < ... < n < -n < ... < -1`.
//! - `DA:n` is the same with `s_n : (w(n-1), w(n)) -> (-w(n), -w(n-1))`.
//! - `DD:n` uses the alternative enumeration `b_0, ..., b_{n-1}` in which
//!   label `i` is `b_{n-i}`: `b_j` swaps positions `j, j+1` and
//!   `b_0 : (w(1), w(2)) -> (-w(2), -w(1))`. Entries are compared as integers.

use std::fmt;
use std::str::FromStr;

use crate::diagrams::{ambient, Family, QuotientSpec, ShapeDiagram};
use crate::error::{Error, Result};

/// A signed permutation in one-line notation. Plain permutations have all
/// entries positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    /// Checks that the absolute values form a permutation of `1..=n`.
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a signed permutation of 1..={n}"
                )));
            }
            seen[a] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `[2,3,1,4]`; brackets and spaces are optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let images = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images)
    }
}

fn check_family(spec: QuotientSpec) -> Result<()> {
    match spec.family() {
        Family::E6 | Family::E7 => Err(Error::UnsupportedFamily(spec.to_string())),
        _ => Ok(()),
    }
}

/// Number of letters permuted by the realization of `spec`.
pub fn degree(spec: QuotientSpec) -> Result<usize> {
    check_family(spec)?;
    Ok(match spec {
        QuotientSpec::A { n, .. } => n + 1,
        other => other.rank(),
    })
}

fn check_size(w: &SignedPermutation, spec: QuotientSpec) -> Result<()> {
    let n = degree(spec)?;
    if w.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "{w} has {} entries but {spec} acts on {n}",
            w.len()
        )));
    }
    let signed_ok = match spec.family() {
        Family::A => w.negatives() == 0,
        Family::DA | Family::DD => w.negatives().is_multiple_of(2),
        _ => true,
    };
    if !signed_ok {
        return Err(Error::InvalidPermutation(format!("{w} is not an element of {spec}")));
    }
    Ok(())
}

/// Sort key realizing the comparison order of the family.
fn key(spec: QuotientSpec, x: i32) -> i64 {
    match spec.family() {
        Family::B | Family::C | Family::DA if x < 0 => 2 * spec.rank() as i64 + 1 + x as i64,
        _ => x as i64,
    }
}

fn lt(spec: QuotientSpec, x: i32, y: i32) -> bool {
    key(spec, x) < key(spec, y)
}

enum Move {
    Swap(usize),
    Negate(usize),
    /// `(w(i), w(i+1)) -> (-w(i+1), -w(i))`
    SwapNegate(usize),
}

/// The position action of the generator labeled `s` (0-based positions).
fn generator(spec: QuotientSpec, s: usize) -> Move {
    match spec {
        QuotientSpec::B(n) | QuotientSpec::C(n) if s == n => Move::Negate(n - 1),
        QuotientSpec::DA(n) if s == n => Move::SwapNegate(n - 2),
        QuotientSpec::DD(n) if s == n => Move::SwapNegate(0),
        QuotientSpec::DD(n) => Move::Swap(n - s - 1),
        _ => Move::Swap(s - 1),
    }
}

/// True iff `w * s` is shorter than `w`.
pub fn is_right_descent(w: &SignedPermutation, spec: QuotientSpec, s: usize) -> bool {
    let v = &w.images;
    match generator(spec, s) {
        Move::Swap(i) => lt(spec, v[i + 1], v[i]),
        Move::Negate(i) => v[i] < 0,
        Move::SwapNegate(i) if spec.family() == Family::DD => v[i] + v[i + 1] < 0,
        Move::SwapNegate(i) => lt(spec, -v[i + 1], v[i]),
    }
}

/// `w * s`.
pub fn right_multiply(w: &SignedPermutation, spec: QuotientSpec, s: usize) -> SignedPermutation {
    let mut v = w.images.clone();
    match generator(spec, s) {
        Move::Swap(i) => v.swap(i, i + 1),
        Move::Negate(i) => v[i] = -v[i],
        Move::SwapNegate(i) => {
            let (a, b) = (v[i], v[i + 1]);
            v[i] = -b;
            v[i + 1] = -a;
        }
    }
    SignedPermutation { images: v }
}

/// A reduced word for `w`, found by repeatedly stripping a right descent.
pub fn reduced_word(w: &SignedPermutation, spec: QuotientSpec) -> Result<Vec<usize>> {
    check_size(w, spec)?;
    let rank = spec.rank();
    let mut w = w.clone();
    let mut word = Vec::new();
    while let Some(s) = (1..=rank).find(|&s| is_right_descent(&w, spec, s)) {
        w = right_multiply(&w, spec, s);
        word.push(s);
    }
    word.reverse();
    Ok(word)
}

fn increasing(spec: QuotientSpec, v: &[i32]) -> bool {
    v.windows(2).all(|p| lt(spec, p[0], p[1]))
}

/// Whether `w` is a minimal-length representative of its coset `w W_J`.
///
/// - A: increasing on positions `1..=p` and on `p+1..=n+1`.
/// - C, DA: positive entries ascending, followed by negative entries
///   ascending.
/// - B: `0 < w(2) < ... < w(n)`.
/// - DD: `-w(2) < w(1) < w(2) < ... < w(n-1)`.
pub fn quotient_membership(w: &SignedPermutation, spec: QuotientSpec) -> Result<bool> {
    check_size(w, spec)?;
    let v = &w.images;
    Ok(match spec {
        QuotientSpec::A { p, .. } => increasing(spec, &v[..p]) && increasing(spec, &v[p..]),
        QuotientSpec::C(_) | QuotientSpec::DA(_) => increasing(spec, v),
        QuotientSpec::B(_) => v[1..].iter().all(|&x| x > 0) && increasing(spec, &v[1..]),
        QuotientSpec::DD(n) => -v[1] < v[0] && increasing(spec, &v[..n - 1]),
        QuotientSpec::E6 | QuotientSpec::E7 => unreachable!("rejected by check_size"),
    })
}

/// Plays the sorting game on `w`, returning the partition `(d_1, ..., d_k)`.
///
/// Row `k` of the diagram lists the moves of step `k`: a sign change (types
/// B, C, D) or a first swap, followed by adjacent swaps that carry one entry
/// toward its sorted place. `d_k` counts the moves made before that entry
/// settles, and the game stops at the first step that makes no move.
pub fn sort_to_partition(w: &SignedPermutation, spec: QuotientSpec) -> Result<Vec<usize>> {
    if !quotient_membership(w, spec)? {
        return Err(Error::NotQuotientRep);
    }
    let amb = ambient(spec)?;
    let mut w = w.clone();
    let mut parts = Vec::new();
    for row in 1..=amb.row_count() {
        let labels = amb.cells().iter().filter(|c| c.row == row).map(|c| c.label);
        let mut d = 0;
        for s in labels {
            if !is_right_descent(&w, spec, s) {
                break;
            }
            w = right_multiply(&w, spec, s);
            d += 1;
        }
        if d == 0 {
            break;
        }
        parts.push(d);
    }
    debug_assert!(w.is_identity(), "sorting game left {w}");
    Ok(parts)
}

/// The element whose diagram is `shape`, by applying its reduced word to
/// the identity.
pub fn partition_to_element(shape: &ShapeDiagram) -> Result<SignedPermutation> {
    let spec = shape.spec();
    let n = degree(spec)?;
    Ok(shape
        .element_word()
        .into_iter()
        .fold(SignedPermutation::identity(n), |w, s| right_multiply(&w, spec, s)))
}

/// Every member of the quotient, in lexicographic order of one-line notation.
pub fn quotient_members(spec: QuotientSpec) -> Result<Vec<SignedPermutation>> {
    let n = degree(spec)?;
    let signed = spec.family() != Family::A;
    let mut out = Vec::new();
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    loop {
        let sign_patterns = if signed { 1u32 << n } else { 1 };
        for mask in 0..sign_patterns {
            let images = perm
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                .collect();
            let w = SignedPermutation { images };
            if check_size(&w, spec).is_ok() && quotient_membership(&w, spec)? {
                out.push(w);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::subdiagrams;
    use crate::oracle::QuotientOracle;

    fn w(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn spec(s: &str) -> QuotientSpec {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(quotient_membership(&w("[2,3,1,4]"), spec("A:3:2")).unwrap());
        assert!(!quotient_membership(&w("[3,2,1,4]"), spec("A:3:2")).unwrap());
        assert!(quotient_membership(&w("[1,2]"), spec("C:2")).unwrap());
        assert!(quotient_membership(&w("[-2,-1]"), spec("C:2")).unwrap());
        assert!(!quotient_membership(&w("[-1,-2]"), spec("C:2")).unwrap());
    }

    #[test]
    fn membership_errors() {
        assert!(matches!(
            quotient_membership(&w("[1,2]"), QuotientSpec::E6),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(matches!(
            quotient_membership(&w("[1,2,3]"), spec("C:2")),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            quotient_membership(&w("[-1,2,3]"), spec("DA:3")),
            Err(Error::InvalidPermutation(_))
        ));
        assert!("[1,1]".parse::<SignedPermutation>().is_err());
        assert!("[0,1]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn sorting_examples() {
        assert_eq!(sort_to_partition(&w("[2,3,1,4]"), spec("A:3:2")).unwrap(), vec![2]);
        assert!(sort_to_partition(&w("[1,2,3,4]"), spec("A:3:2")).unwrap().is_empty());
        assert_eq!(sort_to_partition(&w("[-2,-1]"), spec("C:2")).unwrap(), vec![2, 1]);
        assert!(matches!(sort_to_partition(&w("[-1,-2]"), spec("C:2")), Err(Error::NotQuotientRep)));
        assert!(matches!(
            sort_to_partition(&w("[3,2,1,4]"), spec("A:3:2")),
            Err(Error::NotQuotientRep)
        ));
    }

    #[test]
    fn partition_examples() {
        let a = ambient(spec("A:3:2")).unwrap();
        let shape = ShapeDiagram::parse(&a, "2").unwrap();
        assert_eq!(partition_to_element(&shape).unwrap(), w("[2,3,1,4]"));
        assert!(partition_to_element(&ShapeDiagram::empty(&a)).unwrap().is_identity());
        let e6 = ambient(QuotientSpec::E6).unwrap();
        assert!(matches!(
            partition_to_element(&ShapeDiagram::empty(&e6)),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    /// The family descriptions agree with "no right descent inside J".
    #[test]
    fn membership_is_minimality() {
        for s in ["A:4:2", "A:3:1", "B:3", "B:4", "C:3", "C:4", "DA:4", "DD:4", "DD:3"] {
            let sp = spec(s);
            let n = degree(sp).unwrap();
            let rank = sp.rank();
            let p = sp.excluded_generator();
            let mut perm: Vec<i32> = (1..=n as i32).collect();
            loop {
                let patterns = if sp.family() == Family::A { 1 } else { 1 << n };
                for mask in 0..patterns {
                    let images: Vec<i32> = perm
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    let x = SignedPermutation::new(images).unwrap();
                    if check_size(&x, sp).is_err() {
                        continue;
                    }
                    let minimal = (1..=rank).filter(|&t| t != p).all(|t| !is_right_descent(&x, sp, t));
                    assert_eq!(quotient_membership(&x, sp).unwrap(), minimal, "{s} {x}");
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }

    #[test]
    fn c4_round_trip() {
        let sp = spec("C:4");
        let a = ambient(sp).unwrap();
        let members = quotient_members(sp).unwrap();
        assert_eq!(members.len(), 16);
        for m in &members {
            let rows = sort_to_partition(m, sp).unwrap();
            let shape = ShapeDiagram::from_rows(&a, &rows).unwrap();
            assert_eq!(&partition_to_element(&shape).unwrap(), m);
        }
    }

    #[test]
    fn shapes_round_trip_and_match_oracle() {
        for s in ["A:4:2", "B:4", "C:4", "DA:5", "DD:3", "DD:5"] {
            let sp = spec(s);
            let a = ambient(sp).unwrap();
            let oracle = QuotientOracle::new(sp).unwrap();
            for shape in subdiagrams(&a) {
                let x = partition_to_element(&shape).unwrap();
                assert!(quotient_membership(&x, sp).unwrap(), "{s} {shape}");
                assert_eq!(sort_to_partition(&x, sp).unwrap(), shape.rows(), "{s} {x}");
                let word = reduced_word(&x, sp).unwrap();
                assert_eq!(word.len(), shape.len());
                let expected = oracle.index_of_word(&shape.element_word());
                assert_eq!(oracle.index_of_word(&word), expected, "{s} {shape}");
            }
        }
    }

    #[test]
    fn c_and_da_parts_strictly_decrease() {
        for s in ["C:5", "DA:6"] {
            let sp = spec(s);
            for m in quotient_members(sp).unwrap() {
                let rows = sort_to_partition(&m, sp).unwrap();
                assert!(rows.windows(2).all(|p| p[0] > p[1]), "{s} {m} {rows:?}");
            }
        }
    }
}
