//! Bruhat intervals as abstract posets, and combinatorial invariance of the
//! polynomials attached to them.

use std::collections::{BTreeMap, HashMap};

use crate::diagrams::{contains, QuotientSpec, ShapeDiagram};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::verify::Quotient;

/// The interval `[u, v]` as a graded poset of shapes.
#[derive(Debug, Clone)]
pub struct IntervalPoset {
    /// Sorted by rank, `u` first and `v` last.
    elements: Vec<ShapeDiagram>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ranks: Vec<usize>,
}

impl IntervalPoset {
    pub fn elements(&self) -> &[ShapeDiagram] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements covering element `i`.
    pub fn covers_of(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Elements covered by element `i`.
    pub fn covered_by(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// `l(v) - l(u)`.
    pub fn length(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Sorted `(rank, up-degree, down-degree)` triples. Isomorphic intervals
    /// have equal signatures.
    pub fn signature(&self) -> Vec<(usize, usize, usize)> {
        let mut sig: Vec<_> = (0..self.len())
            .map(|i| (self.ranks[i], self.up[i].len(), self.down[i].len()))
            .collect();
        sig.sort_unstable();
        sig
    }
}

/// All shapes between `inner` and `outer`, with covering relations.
pub fn interval(inner: &ShapeDiagram, outer: &ShapeDiagram) -> Result<IntervalPoset> {
    if !contains(inner, outer)? {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    let mut elements = vec![inner.clone()];
    let mut index: HashMap<u128, usize> = HashMap::from([(inner.mask(), 0)]);
    let mut up: Vec<Vec<usize>> = vec![Vec::new()];
    let mut start = 0;
    // Breadth first, so elements arrive in rank order.
    while start < elements.len() {
        let end = elements.len();
        for i in start..end {
            for b in elements[i].addable_indices() {
                if !outer.contains_cell(b) {
                    continue;
                }
                let next = elements[i].with(b);
                let j = *index.entry(next.mask()).or_insert_with(|| {
                    elements.push(next);
                    up.push(Vec::new());
                    elements.len() - 1
                });
                up[i].push(j);
            }
        }
        start = end;
    }
    let mut down = vec![Vec::new(); elements.len()];
    for (i, ups) in up.iter().enumerate() {
        for &j in ups {
            down[j].push(i);
        }
    }
    let base = inner.len();
    let ranks = elements.iter().map(|e| e.len() - base).collect();
    Ok(IntervalPoset {
        elements,
        up,
        down,
        ranks,
    })
}

/// A rank-preserving order isomorphism `P -> Q` (as `map[p] = q`), if any.
pub fn poset_isomorphic(p: &IntervalPoset, q: &IntervalPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.cover_count() != q.cover_count() || p.signature() != q.signature() {
        return None;
    }
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    extend(p, q, 0, &mut map, &mut used).then_some(map)
}

/// Assigns `P`'s elements in rank order. Since every lower cover of `x` is
/// assigned before `x`, matching lower-cover sets exactly at each step makes
/// the final bijection preserve covers in both directions.
fn extend(p: &IntervalPoset, q: &IntervalPoset, x: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if x == p.len() {
        return true;
    }
    for y in 0..q.len() {
        if used[y]
            || q.ranks[y] != p.ranks[x]
            || q.up[y].len() != p.up[x].len()
            || q.down[y].len() != p.down[x].len()
            || !p.down[x].iter().all(|&d| q.down[y].contains(&map[d]))
        {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(p, q, x + 1, map, used) {
            return true;
        }
        used[y] = false;
    }
    map[x] = usize::MAX;
    false
}

/// One interval occurring in the report.
#[derive(Debug, Clone)]
pub struct IntervalRef {
    pub spec: QuotientSpec,
    pub u: ShapeDiagram,
    pub v: ShapeDiagram,
    pub r_poly: Polynomial,
    pub kl_poly: Polynomial,
}

/// Intervals that are pairwise isomorphic as posets.
#[derive(Debug, Clone)]
pub struct IsoClass {
    pub length: usize,
    pub size: usize,
    pub members: Vec<IntervalRef>,
    /// Distinct R-polynomials among the members.
    pub r_polys: Vec<Polynomial>,
    /// Distinct relative KL polynomials among the members.
    pub kl_polys: Vec<Polynomial>,
}

impl IsoClass {
    pub fn representative(&self) -> &IntervalRef {
        &self.members[0]
    }

    pub fn is_violation(&self) -> bool {
        self.r_polys.len() > 1 || self.kl_polys.len() > 1
    }
}

#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub quotients: Vec<QuotientSpec>,
    pub max_len: usize,
    pub intervals: usize,
    /// Ordered by length, size and degree signature, then by first appearance.
    pub classes: Vec<IsoClass>,
}

impl InvarianceReport {
    pub fn violations(&self) -> Vec<&IsoClass> {
        self.classes.iter().filter(|c| c.is_violation()).collect()
    }

    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| !c.is_violation())
    }
}

/// Length, size and degree signature.
type BucketKey = (usize, usize, Vec<(usize, usize, usize)>);

struct Bucket {
    reps: Vec<IntervalPoset>,
    classes: Vec<IsoClass>,
}

/// Sorts every interval of length at most `max_len` in the given quotients
/// into poset-isomorphism classes and records the polynomials seen in each.
pub fn invariance_report(quotients: &[QuotientSpec], max_len: usize) -> Result<InvarianceReport> {
    let loaded = quotients
        .iter()
        .map(|&s| Quotient::new(s))
        .collect::<Result<Vec<_>>>()?;
    invariance_report_for(&loaded, max_len)
}

/// As [`invariance_report`], reusing already built quotients.
pub fn invariance_report_for(quotients: &[Quotient], max_len: usize) -> Result<InvarianceReport> {
    let mut buckets: BTreeMap<BucketKey, Bucket> = BTreeMap::new();
    let mut intervals = 0;
    for quotient in quotients {
        let r = quotient.r_table();
        let kl = quotient.kl_table()?;
        let shapes = quotient.shapes();
        for (i, u) in shapes.iter().enumerate() {
            for (j, v) in shapes.iter().enumerate() {
                if v.len() < u.len() || v.len() - u.len() > max_len || !contains(u, v)? {
                    continue;
                }
                intervals += 1;
                let poset = interval(u, v)?;
                let member = IntervalRef {
                    spec: quotient.spec(),
                    u: u.clone(),
                    v: v.clone(),
                    r_poly: r[i][j].clone(),
                    kl_poly: kl[i][j].clone(),
                };
                let key = (poset.length(), poset.len(), poset.signature());
                let bucket = buckets.entry(key).or_insert_with(|| Bucket {
                    reps: Vec::new(),
                    classes: Vec::new(),
                });
                match bucket.reps.iter().position(|rep| poset_isomorphic(&poset, rep).is_some()) {
                    Some(c) => add_member(&mut bucket.classes[c], member),
                    None => {
                        bucket.classes.push(IsoClass {
                            length: poset.length(),
                            size: poset.len(),
                            r_polys: vec![member.r_poly.clone()],
                            kl_polys: vec![member.kl_poly.clone()],
                            members: vec![member],
                        });
                        bucket.reps.push(poset);
                    }
                }
            }
        }
    }
    Ok(InvarianceReport {
        quotients: quotients.iter().map(Quotient::spec).collect(),
        max_len,
        intervals,
        classes: buckets.into_values().flat_map(|b| b.classes).collect(),
    })
}

fn add_member(class: &mut IsoClass, member: IntervalRef) {
    if !class.r_polys.contains(&member.r_poly) {
        class.r_polys.push(member.r_poly.clone());
    }
    if !class.kl_polys.contains(&member.kl_poly) {
        class.kl_polys.push(member.kl_poly.clone());
    }
    class.members.push(member);
}
