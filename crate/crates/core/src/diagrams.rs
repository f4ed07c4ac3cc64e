//! Labeled box diagrams of Hermitian type and their order ideals.
//!
//! Every quotient `W/W_J` handled here has a fixed ambient grid of boxes
//! labeled by simple reflections. Order ideals of the grid (upper-left closed
//! subsets) are in bijection with the minimal coset representatives, and
//! containment of ideals is the Bruhat order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the number of boxes, so a shape fits in a `u128` mask.
pub const MAX_BOXES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    DA,
    DD,
    E6,
    E7,
}

/// One of the seven families of Hermitian symmetric quotients.
///
/// `A { n, p }` is `A_n` modulo the parabolic generated by every simple
/// reflection except `s_p`. `B(n)` and `DD(n)` drop `s_1`; `C(n)` and
/// `DA(n)` drop `s_n`; `E6` drops `s_1`; `E7` drops `s_7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuotientSpec {
    A { n: usize, p: usize },
    B(usize),
    C(usize),
    DA(usize),
    DD(usize),
    E6,
    E7,
}

/// Whether a simple reflection corresponds to a short or a long simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootLength {
    Short,
    Long,
}

impl QuotientSpec {
    /// Validating constructor-style check.
    pub fn validate(self) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidSpec(format!("{self}: {msg}")));
        match self {
            QuotientSpec::A { n, p } if n == 0 || p == 0 || p > n => {
                return bad("family A requires 1 <= p <= n")
            }
            QuotientSpec::B(n) | QuotientSpec::C(n) if n < 2 => return bad("requires n >= 2"),
            QuotientSpec::DA(n) | QuotientSpec::DD(n) if n < 3 => return bad("requires n >= 3"),
            _ => {}
        }
        if self.box_count() > MAX_BOXES {
            return bad("diagram has too many boxes");
        }
        Ok(self)
    }

    pub fn family(self) -> Family {
        match self {
            QuotientSpec::A { .. } => Family::A,
            QuotientSpec::B(_) => Family::B,
            QuotientSpec::C(_) => Family::C,
            QuotientSpec::DA(_) => Family::DA,
            QuotientSpec::DD(_) => Family::DD,
            QuotientSpec::E6 => Family::E6,
            QuotientSpec::E7 => Family::E7,
        }
    }

    /// Rank of the ambient Weyl group.
    pub fn rank(self) -> usize {
        match self {
            QuotientSpec::A { n, .. }
            | QuotientSpec::B(n)
            | QuotientSpec::C(n)
            | QuotientSpec::DA(n)
            | QuotientSpec::DD(n) => n,
            QuotientSpec::E6 => 6,
            QuotientSpec::E7 => 7,
        }
    }

    /// The unique simple reflection (1-based) not in `J`.
    pub fn excluded_generator(self) -> usize {
        match self {
            QuotientSpec::A { p, .. } => p,
            QuotientSpec::B(_) | QuotientSpec::DD(_) | QuotientSpec::E6 => 1,
            QuotientSpec::C(n) | QuotientSpec::DA(n) => n,
            QuotientSpec::E7 => 7,
        }
    }

    /// Root length of generator `s` (1-based) in Bourbaki conventions.
    pub fn root_length(self, s: usize) -> RootLength {
        match self {
            QuotientSpec::B(n) if s < n => RootLength::Long,
            QuotientSpec::C(n) if s == n => RootLength::Long,
            _ => RootLength::Short,
        }
    }

    pub fn box_count(self) -> usize {
        match self {
            QuotientSpec::A { n, p } => p * (n + 1 - p),
            QuotientSpec::B(n) => 2 * n - 1,
            QuotientSpec::C(n) => n * (n + 1) / 2,
            QuotientSpec::DA(n) => n * (n - 1) / 2,
            QuotientSpec::DD(n) => 2 * n - 2,
            QuotientSpec::E6 => 16,
            QuotientSpec::E7 => 27,
        }
    }

    /// Human-readable description of the admissible row profiles.
    pub fn shape_rule(self) -> String {
        match self {
            QuotientSpec::A { n, p } => format!(
                "weakly decreasing rows, at most {} rows, each of length at most {p}",
                n + 1 - p
            ),
            QuotientSpec::C(n) => format!("strictly decreasing rows with first row at most {n}"),
            QuotientSpec::DA(n) => {
                format!("strictly decreasing rows with first row at most {}", n - 1)
            }
            QuotientSpec::B(n) => format!("(m) with m <= {n}, or ({n},1,...,1) with up to {n} rows"),
            QuotientSpec::DD(n) => format!(
                "(m) with m <= {}, ({},1), ({},1), or ({},2,1,...,1) with up to {} rows",
                n - 1,
                n - 2,
                n - 1,
                n - 1,
                n - 1
            ),
            QuotientSpec::E6 | QuotientSpec::E7 => {
                "an upper-left closed subset of the ambient diagram".to_string()
            }
        }
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientSpec::A { n, p } => write!(f, "A:{n}:{p}"),
            QuotientSpec::B(n) => write!(f, "B:{n}"),
            QuotientSpec::C(n) => write!(f, "C:{n}"),
            QuotientSpec::DA(n) => write!(f, "DA:{n}"),
            QuotientSpec::DD(n) => write!(f, "DD:{n}"),
            QuotientSpec::E6 => f.write_str("E6"),
            QuotientSpec::E7 => f.write_str("E7"),
        }
    }
}

impl FromStr for QuotientSpec {
    type Err = Error;

    /// Parses `A:<n>:<p>`, `B:<n>`, `C:<n>`, `DA:<n>`, `DD:<n>`, `E6`, `E7`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in quotient spec {s:?}")))
        };
        let spec = match parts.as_slice() {
            ["A", n, p] => QuotientSpec::A {
                n: num(n)?,
                p: num(p)?,
            },
            ["B", n] => QuotientSpec::B(num(n)?),
            ["C", n] => QuotientSpec::C(num(n)?),
            ["DA", n] => QuotientSpec::DA(num(n)?),
            ["DD", n] => QuotientSpec::DD(num(n)?),
            ["E6"] => QuotientSpec::E6,
            ["E7"] => QuotientSpec::E7,
            _ => {
                return Err(Error::Parse(format!(
                    "unrecognized quotient spec {s:?}; expected A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7"
                )))
            }
        };
        spec.validate()
    }
}

/// A labeled box of an ambient diagram. Rows and columns are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub label: usize,
}

impl Cell {
    /// Index of the northwest-to-southeast diagonal through this box.
    pub fn diagonal(&self) -> isize {
        self.col as isize - self.row as isize
    }
}

#[derive(Debug, Clone)]
struct RowRange {
    start_col: usize,
    first: usize,
    len: usize,
}

/// The full labeled grid for a quotient, with its precedence relation.
#[derive(Debug)]
pub struct AmbientDiagram {
    spec: QuotientSpec,
    cells: Vec<Cell>,
    rows: Vec<RowRange>,
    /// Immediate predecessors (left neighbour, nearest box above).
    preds: Vec<Vec<usize>>,
    succs: Vec<Vec<usize>>,
    pred_mask: Vec<u128>,
    succ_mask: Vec<u128>,
    ranks: Vec<usize>,
}

/// (starting column, labels) for each row, top to bottom.
fn layout(spec: QuotientSpec) -> Vec<(usize, Vec<usize>)> {
    match spec {
        QuotientSpec::A { n, p } => (1..=n + 1 - p)
            .map(|i| (1, (1..=p).map(|j| p + i - j).collect()))
            .collect(),
        QuotientSpec::C(n) => (1..=n)
            .map(|i| (i, (i..=n).map(|col| n - (col - i)).collect()))
            .collect(),
        QuotientSpec::B(n) => {
            let mut rows = vec![(1, (1..=n).collect())];
            rows.extend((1..n).rev().map(|l| (n, vec![l])));
            rows
        }
        QuotientSpec::DA(n) => (1..n)
            .map(|i| {
                let lead = if i % 2 == 1 { n } else { n - 1 };
                let mut labels = vec![lead];
                labels.extend((i..=n - 2).rev());
                (i, labels)
            })
            .collect(),
        QuotientSpec::DD(n) => {
            let mut first: Vec<usize> = (1..=n - 2).collect();
            first.push(n);
            let mut rows = vec![(1, first), (n - 2, vec![n - 1, n - 2])];
            rows.extend((1..=n - 3).rev().map(|l| (n - 1, vec![l])));
            rows
        }
        QuotientSpec::E6 => vec![
            (1, vec![1, 3, 4, 5, 6]),
            (3, vec![2, 4, 5]),
            (4, vec![3, 4, 2]),
            (4, vec![1, 3, 4, 5, 6]),
        ],
        QuotientSpec::E7 => vec![
            (1, vec![7, 6, 5, 4, 3, 1]),
            (4, vec![2, 4, 3]),
            (5, vec![5, 4, 2]),
            (5, vec![6, 5, 4, 3, 1]),
            (5, vec![7, 6, 5, 4, 3]),
            (8, vec![2, 4]),
            (9, vec![5]),
            (9, vec![6]),
            (9, vec![7]),
        ],
    }
}

impl AmbientDiagram {
    pub fn new(spec: QuotientSpec) -> Result<Arc<Self>> {
        let spec = spec.validate()?;
        let mut cells = Vec::new();
        let mut rows = Vec::new();
        for (r, (start_col, labels)) in layout(spec).into_iter().enumerate() {
            rows.push(RowRange {
                start_col,
                first: cells.len(),
                len: labels.len(),
            });
            for (j, label) in labels.into_iter().enumerate() {
                cells.push(Cell {
                    row: r + 1,
                    col: start_col + j,
                    label,
                });
            }
        }
        let find = |row: usize, col: usize| -> Option<usize> {
            let rr = rows.get(row.checked_sub(1)?)?;
            (col >= rr.start_col && col < rr.start_col + rr.len).then(|| rr.first + col - rr.start_col)
        };
        let mut preds = vec![Vec::new(); cells.len()];
        let mut succs = vec![Vec::new(); cells.len()];
        for (i, c) in cells.iter().enumerate() {
            if let Some(l) = find(c.row, c.col - 1) {
                preds[i].push(l);
            }
            if let Some(a) = (1..c.row).rev().find_map(|r| find(r, c.col)) {
                preds[i].push(a);
            }
            for &j in &preds[i] {
                succs[j].push(i);
            }
        }
        let to_mask = |v: &Vec<usize>| v.iter().fold(0u128, |m, &i| m | (1u128 << i));
        let pred_mask = preds.iter().map(to_mask).collect();
        let succ_mask = succs.iter().map(to_mask).collect();
        // Row-major order lists every box after its predecessors.
        let mut ranks = vec![0usize; cells.len()];
        for i in 0..cells.len() {
            ranks[i] = preds[i].iter().map(|&p| ranks[p] + 1).max().unwrap_or(0);
        }
        Ok(Arc::new(Self {
            spec,
            cells,
            rows,
            preds,
            succs,
            pred_mask,
            succ_mask,
            ranks,
        }))
    }

    pub fn spec(&self) -> QuotientSpec {
        self.spec
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Starting column and length of ambient row `row` (1-based).
    pub fn row_extent(&self, row: usize) -> Option<(usize, usize)> {
        let r = self.rows.get(row.checked_sub(1)?)?;
        Some((r.start_col, r.len))
    }

    pub fn index_of(&self, row: usize, col: usize) -> Option<usize> {
        let r = self.rows.get(row.checked_sub(1)?)?;
        (col >= r.start_col && col < r.start_col + r.len).then(|| r.first + col - r.start_col)
    }

    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.preds[i]
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succs[i]
    }

    /// Length of the longest chain of boxes below box `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn full_mask(&self) -> u128 {
        if self.cells.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.cells.len()) - 1
        }
    }

    /// True iff `mask` is downward closed under precedence.
    pub fn is_ideal(&self, mask: u128) -> bool {
        if mask & !self.full_mask() != 0 {
            return false;
        }
        bits(mask).all(|i| self.pred_mask[i] & !mask == 0)
    }

    /// Every order ideal as a mask, in increasing size.
    fn ideal_masks(&self) -> Vec<u128> {
        let mut seen = HashSet::new();
        let mut layer = vec![0u128];
        let mut out = Vec::new();
        seen.insert(0u128);
        while !layer.is_empty() {
            out.extend(layer.iter().copied());
            let mut next = Vec::new();
            for &m in &layer {
                for i in 0..self.cells.len() {
                    if m & (1 << i) == 0 && self.pred_mask[i] & !m == 0 {
                        let grown = m | (1 << i);
                        if seen.insert(grown) {
                            next.push(grown);
                        }
                    }
                }
            }
            next.sort_unstable();
            layer = next;
        }
        out
    }
}

/// Iterates the set bit positions of a mask in increasing order.
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// An order ideal of an ambient diagram; encodes one element of `W^J`.
#[derive(Clone)]
pub struct ShapeDiagram {
    ambient: Arc<AmbientDiagram>,
    mask: u128,
}

impl ShapeDiagram {
    /// The empty shape (the identity element).
    pub fn empty(ambient: &Arc<AmbientDiagram>) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            mask: 0,
        }
    }

    /// The full ambient diagram (the longest coset representative).
    pub fn full(ambient: &Arc<AmbientDiagram>) -> Self {
        Self {
            ambient: Arc::clone(ambient),
            mask: ambient.full_mask(),
        }
    }

    /// Builds a shape from row lengths, each row filled from the left end of
    /// the corresponding ambient row.
    pub fn from_rows(ambient: &Arc<AmbientDiagram>, rows: &[usize]) -> Result<Self> {
        let spec = ambient.spec;
        let reject = |reason: String| Error::NotAShape {
            spec: spec.to_string(),
            reason: format!("{reason}; expected {}", spec.shape_rule()),
        };
        if rows.len() > ambient.rows.len() {
            return Err(reject(format!(
                "{} rows given but the diagram has {}",
                rows.len(),
                ambient.rows.len()
            )));
        }
        let mut mask = 0u128;
        for (r, (&len, rr)) in rows.iter().zip(&ambient.rows).enumerate() {
            if len > rr.len {
                return Err(reject(format!(
                    "row {} has length {len} but at most {} boxes fit",
                    r + 1,
                    rr.len
                )));
            }
            for j in 0..len {
                mask |= 1 << (rr.first + j);
            }
        }
        if !ambient.is_ideal(mask) {
            return Err(reject(format!(
                "rows {} are not upper-left closed",
                format_rows(rows)
            )));
        }
        Ok(Self {
            ambient: Arc::clone(ambient),
            mask,
        })
    }

    /// Parses a comma-separated row profile such as `5,4,4,4,1`.
    pub fn parse(ambient: &Arc<AmbientDiagram>, s: &str) -> Result<Self> {
        let s = s.trim();
        let rows = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad row length {t:?} in partition {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::from_rows(ambient, &rows)
    }

    pub fn from_mask(ambient: &Arc<AmbientDiagram>, mask: u128) -> Option<Self> {
        ambient.is_ideal(mask).then(|| Self {
            ambient: Arc::clone(ambient),
            mask,
        })
    }

    pub fn ambient(&self) -> &Arc<AmbientDiagram> {
        &self.ambient
    }

    pub fn spec(&self) -> QuotientSpec {
        self.ambient.spec
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    /// Number of boxes, which is the length of the element.
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains_cell(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    pub fn cell_indices(&self) -> impl Iterator<Item = usize> {
        bits(self.mask)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        bits(self.mask).map(|i| self.ambient.cells[i])
    }

    /// Row lengths, top to bottom, trailing empty rows dropped.
    pub fn rows(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .ambient
            .rows
            .iter()
            .map(|rr| (0..rr.len).filter(|&j| self.contains_cell(rr.first + j)).count())
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient.spec != other.ambient.spec {
            return Err(Error::AmbientMismatch(
                self.ambient.spec.to_string(),
                other.ambient.spec.to_string(),
            ));
        }
        Ok(())
    }

    /// Boxes of the shape whose removal leaves an ideal. Their labels form
    /// the left descent set of the element.
    pub fn outside_corner_indices(&self) -> Vec<usize> {
        bits(self.mask)
            .filter(|&i| self.ambient.succ_mask[i] & self.mask == 0)
            .collect()
    }

    /// Boxes outside the shape whose predecessors all lie inside it. Their
    /// labels are the generators `s` with `u < su` in `W^J`.
    pub fn addable_indices(&self) -> Vec<usize> {
        (0..self.ambient.len())
            .filter(|&i| !self.contains_cell(i) && self.ambient.pred_mask[i] & !self.mask == 0)
            .collect()
    }

    pub fn outside_corners(&self) -> Vec<Cell> {
        self.outside_corner_indices()
            .into_iter()
            .map(|i| self.ambient.cells[i])
            .collect()
    }

    pub fn addable_boxes(&self) -> Vec<Cell> {
        self.addable_indices()
            .into_iter()
            .map(|i| self.ambient.cells[i])
            .collect()
    }

    pub fn descent_labels(&self) -> BTreeSet<usize> {
        self.outside_corners().iter().map(|c| c.label).collect()
    }

    pub fn ascent_labels(&self) -> BTreeSet<usize> {
        self.addable_boxes().iter().map(|c| c.label).collect()
    }

    /// Shape with box `i` removed (caller ensures it is an outside corner).
    pub fn without(&self, i: usize) -> Self {
        Self {
            ambient: Arc::clone(&self.ambient),
            mask: self.mask & !(1 << i),
        }
    }

    pub fn with(&self, i: usize) -> Self {
        Self {
            ambient: Arc::clone(&self.ambient),
            mask: self.mask | (1 << i),
        }
    }

    /// The outside corner labeled `s`, if any.
    pub fn corner_labeled(&self, s: usize) -> Option<usize> {
        self.outside_corner_indices()
            .into_iter()
            .find(|&i| self.ambient.cells[i].label == s)
    }

    /// The addable box labeled `s`, if any.
    pub fn addable_labeled(&self, s: usize) -> Option<usize> {
        self.addable_indices()
            .into_iter()
            .find(|&i| self.ambient.cells[i].label == s)
    }

    /// A reduced word for the element: labels of a linear extension in
    /// reverse, so the first letter is always an outside corner.
    pub fn element_word(&self) -> Vec<usize> {
        self.word_from_extension(&bits(self.mask).collect::<Vec<_>>())
    }

    /// Reduced word read off an explicit linear extension (cell indices).
    pub fn word_from_extension(&self, extension: &[usize]) -> Vec<usize> {
        extension
            .iter()
            .rev()
            .map(|&i| self.ambient.cells[i].label)
            .collect()
    }
}

impl PartialEq for ShapeDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.spec == other.ambient.spec && self.mask == other.mask
    }
}

impl Eq for ShapeDiagram {}

impl Hash for ShapeDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.spec.hash(state);
        self.mask.hash(state);
    }
}

impl fmt::Display for ShapeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rows(&self.rows()))
    }
}

impl fmt::Debug for ShapeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ambient.spec, self)
    }
}

/// Comma-separated row lengths; the empty shape prints as the empty string.
pub fn format_rows(rows: &[usize]) -> String {
    rows.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn ambient(spec: QuotientSpec) -> Result<Arc<AmbientDiagram>> {
    AmbientDiagram::new(spec)
}

/// All order ideals of the ambient diagram, in increasing size.
pub fn subdiagrams(ambient: &Arc<AmbientDiagram>) -> Vec<ShapeDiagram> {
    ambient
        .ideal_masks()
        .into_iter()
        .map(|mask| ShapeDiagram {
            ambient: Arc::clone(ambient),
            mask,
        })
        .collect()
}

/// `inner <= outer` in the containment order.
pub fn contains(inner: &ShapeDiagram, outer: &ShapeDiagram) -> Result<bool> {
    inner.check_same_ambient(outer)?;
    Ok(inner.mask & !outer.mask == 0)
}

/// The skew diagram `outer \ inner`, keeping both endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewDiagram {
    pub outer: ShapeDiagram,
    pub inner: ShapeDiagram,
}

impl SkewDiagram {
    pub fn mask(&self) -> u128 {
        self.outer.mask & !self.inner.mask
    }

    pub fn len(&self) -> usize {
        self.mask().count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask() == 0
    }

    pub fn cell_indices(&self) -> impl Iterator<Item = usize> {
        bits(self.mask())
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        bits(self.mask()).map(|i| self.outer.ambient.cells[i])
    }

    pub fn contains_cell(&self, i: usize) -> bool {
        self.mask() & (1 << i) != 0
    }

    /// Box positions translated so the minimal row and column are zero.
    pub fn normalized_positions(&self) -> Vec<(usize, usize)> {
        let cells: Vec<Cell> = self.cells().collect();
        let r0 = cells.iter().map(|c| c.row).min().unwrap_or(0);
        let c0 = cells.iter().map(|c| c.col).min().unwrap_or(0);
        let mut pos: Vec<_> = cells.iter().map(|c| (c.row - r0, c.col - c0)).collect();
        pos.sort_unstable();
        pos
    }
}

pub fn skew(outer: &ShapeDiagram, inner: &ShapeDiagram) -> Result<SkewDiagram> {
    if !contains(inner, outer)? {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    Ok(SkewDiagram {
        outer: outer.clone(),
        inner: inner.clone(),
    })
}
