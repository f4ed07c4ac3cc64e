//! Relative R-polynomials read directly off a marked skew diagram.
//!
//! For `u <= v` with diagrams `M` and `Λ`, every box of `Λ \ M` is marked
//! `+`, `-` or left blank according to whether its label is an ascent or a
//! descent of `u` (and, for long generators, the parity of `δ`). Then
//!
//! ```text
//! R_{u,v}(q) = q^η (q-1)^k  Π_{+ boxes} [Δ(b)]  /  Π_{- boxes} [Δ(b)]
//! ```
//!
//! with `k = #plus - #minus` and `η` chosen so the degree is `l(v) - l(u)`.

use std::fmt;

use crate::diagrams::{contains, skew, Cell, RootLength, ShapeDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::poly::{qint, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    Plus,
    Minus,
    Unmarked,
}

impl Mark {
    pub fn symbol(self) -> char {
        match self {
            Mark::Plus => '+',
            Mark::Minus => '-',
            Mark::Unmarked => '.',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedCell {
    /// Index into the ambient diagram.
    pub index: usize,
    pub cell: Cell,
    pub mark: Mark,
    /// Same-labeled skew boxes weakly northwest of this one, itself included.
    pub small_delta: usize,
    /// Length of the marked run this box closes: for a `+` box, one more
    /// than half the rank gap up from the addable box with the same label;
    /// for a `-` box, half the rank gap up from the corner with the same
    /// label. Unmarked boxes get 1. On grid-like diagrams this is the number
    /// of skew boxes on the northwest diagonal ending here.
    pub big_delta: usize,
}

#[derive(Debug, Clone)]
pub struct MarkedSkewDiagram {
    pub skew: SkewDiagram,
    /// One entry per skew box, in ambient (row-major) order.
    pub cells: Vec<MarkedCell>,
}

impl MarkedSkewDiagram {
    pub fn count(&self, mark: Mark) -> usize {
        self.cells.iter().filter(|c| c.mark == mark).count()
    }

    /// `#plus - #minus`.
    pub fn k(&self) -> i64 {
        self.count(Mark::Plus) as i64 - self.count(Mark::Minus) as i64
    }

    pub fn mark_at(&self, index: usize) -> Option<Mark> {
        self.cells.iter().find(|c| c.index == index).map(|c| c.mark)
    }

    /// Numerator and denominator of the marked product before `q^η`.
    pub fn fraction(&self) -> (Polynomial, Polynomial) {
        let k = self.k();
        let qm1 = Polynomial::q_minus_one();
        let mut num = qm1.pow(k.max(0) as usize);
        let mut den = qm1.pow((-k).max(0) as usize);
        for c in &self.cells {
            match c.mark {
                Mark::Plus => num = &num * &qint(c.big_delta),
                Mark::Minus => den = &den * &qint(c.big_delta),
                Mark::Unmarked => {}
            }
        }
        (num, den)
    }
}

/// Marks `Λ \ M` for `M <= Λ`.
pub fn mark(inner: &ShapeDiagram, outer: &ShapeDiagram) -> Result<MarkedSkewDiagram> {
    let sk = skew(outer, inner)?;
    let spec = inner.spec();
    let descents = inner.descent_labels();
    let ascents = inner.ascent_labels();
    let amb = inner.ambient();
    let skew_cells: Vec<(usize, Cell)> = sk.cell_indices().map(|i| (i, amb.cells()[i])).collect();

    let cells = skew_cells
        .iter()
        .map(|&(index, b)| {
            let small_delta = skew_cells
                .iter()
                .filter(|(_, c)| c.label == b.label && c.row <= b.row && c.col <= b.col)
                .count();
            let long = spec.root_length(b.label) == RootLength::Long;
            let rank = amb.rank(index);
            let (mark, big_delta) = if ascents.contains(&b.label) && (!long || small_delta % 2 == 1) {
                let a = inner.addable_labeled(b.label).expect("ascent has an addable box");
                (Mark::Plus, 1 + (rank - amb.rank(a)) / 2)
            } else if descents.contains(&b.label) && (!long || small_delta % 2 == 0) {
                let c = inner.corner_labeled(b.label).expect("descent has a corner");
                (Mark::Minus, (rank - amb.rank(c)) / 2)
            } else {
                (Mark::Unmarked, 1)
            };
            MarkedCell {
                index,
                cell: b,
                mark,
                small_delta,
                big_delta,
            }
        })
        .collect();
    Ok(MarkedSkewDiagram { skew: sk, cells })
}

/// Closed-form value split into its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormResult {
    /// `(q-1)^k Π[Δ]^{±1}` after exact division.
    pub base: Polynomial,
    pub eta: usize,
    /// `q^η * base`.
    pub value: Polynomial,
}

impl ClosedFormResult {
    fn constant(value: Polynomial) -> Self {
        Self {
            base: value.clone(),
            eta: 0,
            value,
        }
    }
}

impl fmt::Display for ClosedFormResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Evaluates the closed form for the pair of shapes `(M, Λ)`.
pub fn r_poly_closed(inner: &ShapeDiagram, outer: &ShapeDiagram) -> Result<ClosedFormResult> {
    if inner == outer {
        return Ok(ClosedFormResult::constant(Polynomial::one()));
    }
    if !contains(inner, outer)? {
        return Ok(ClosedFormResult::constant(Polynomial::zero()));
    }
    let marked = mark(inner, outer)?;
    let (num, den) = marked.fraction();
    let base = num.exact_div(&den).map_err(|e| Error::NonPolynomialBase {
        u: inner.to_string(),
        v: outer.to_string(),
        source: Box::new(e),
    })?;
    let length = outer.len() - inner.len();
    let base_degree = base.degree().unwrap_or(0);
    let eta = length
        .checked_sub(base_degree)
        .ok_or_else(|| Error::NegativeEta {
            u: inner.to_string(),
            v: outer.to_string(),
            base_degree,
            length,
        })?;
    Ok(ClosedFormResult {
        value: base.shift(eta),
        base,
        eta,
    })
}
