//! Closed form against the Deodhar oracle, pair by pair.

use std::sync::Arc;

use crate::closedform::r_poly_closed;
use crate::diagrams::{ambient, contains, subdiagrams, AmbientDiagram, QuotientSpec, ShapeDiagram};
use crate::error::{Error, Result};
use crate::oracle::{QuotientOracle, XParam};
use crate::poly::Polynomial;

/// A quotient with its shapes matched to oracle elements.
///
/// Shapes are sorted by `(size, rows)`; every table below is indexed by
/// position in that list.
pub struct Quotient {
    spec: QuotientSpec,
    ambient: Arc<AmbientDiagram>,
    shapes: Vec<ShapeDiagram>,
    oracle: QuotientOracle,
    to_oracle: Vec<usize>,
}

impl Quotient {
    pub fn new(spec: QuotientSpec) -> Result<Self> {
        let ambient = ambient(spec)?;
        let mut shapes = subdiagrams(&ambient);
        shapes.sort_by_cached_key(|s| (s.len(), s.rows()));
        let oracle = QuotientOracle::new(spec)?;
        let to_oracle = shapes
            .iter()
            .map(|s| oracle.index_of_shape(s).ok_or(Error::NotQuotientRep))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            spec,
            ambient,
            shapes,
            oracle,
            to_oracle,
        })
    }

    pub fn spec(&self) -> QuotientSpec {
        self.spec
    }

    pub fn ambient(&self) -> &Arc<AmbientDiagram> {
        &self.ambient
    }

    pub fn shapes(&self) -> &[ShapeDiagram] {
        &self.shapes
    }

    pub fn oracle(&self) -> &QuotientOracle {
        &self.oracle
    }

    /// Oracle element index of shape `i`.
    pub fn oracle_index(&self, i: usize) -> usize {
        self.to_oracle[i]
    }

    pub fn index_of(&self, shape: &ShapeDiagram) -> Option<usize> {
        self.shapes.iter().position(|s| s == shape)
    }

    pub fn parse_shape(&self, rows: &str) -> Result<ShapeDiagram> {
        ShapeDiagram::parse(&self.ambient, rows)
    }

    /// Oracle `R^{J,-1}` re-indexed by shape.
    pub fn r_table(&self) -> Vec<Vec<Polynomial>> {
        self.reindex(&self.oracle.r_table(XParam::MinusOne))
    }

    /// Oracle relative KL polynomials re-indexed by shape.
    pub fn kl_table(&self) -> Result<Vec<Vec<Polynomial>>> {
        let r = self.oracle.r_table(XParam::MinusOne);
        Ok(self.reindex(&self.oracle.kl_table(&r)?))
    }

    fn reindex(&self, table: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
        self.to_oracle
            .iter()
            .map(|&a| self.to_oracle.iter().map(|&b| table[a][b].clone()).collect())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct Mismatch {
    pub u: ShapeDiagram,
    pub v: ShapeDiagram,
    /// The closed-form value, or the error it raised.
    pub closed: std::result::Result<Polynomial, String>,
    pub oracle: Polynomial,
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub spec: QuotientSpec,
    pub elements: usize,
    /// Number of comparable pairs `u <= v` checked.
    pub pairs: usize,
    /// In order of `(l(u), u, l(v), v)`.
    pub mismatches: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the closed form with the oracle on every pair `u <= v`.
pub fn verify_quotient(spec: QuotientSpec) -> Result<Verification> {
    let quotient = Quotient::new(spec)?;
    Ok(verify(&quotient))
}

pub fn verify(quotient: &Quotient) -> Verification {
    let r = quotient.r_table();
    let shapes = quotient.shapes();
    let mut pairs = 0;
    let mut mismatches = Vec::new();
    for (i, u) in shapes.iter().enumerate() {
        for (j, v) in shapes.iter().enumerate() {
            if !contains(u, v).expect("same ambient") {
                continue;
            }
            pairs += 1;
            let closed = r_poly_closed(u, v).map(|c| c.value).map_err(|e| e.to_string());
            if closed.as_ref() != Ok(&r[i][j]) {
                mismatches.push(Mismatch {
                    u: u.clone(),
                    v: v.clone(),
                    closed,
                    oracle: r[i][j].clone(),
                });
            }
        }
    }
    Verification {
        spec: quotient.spec(),
        elements: shapes.len(),
        pairs,
        mismatches,
    }
}
