//! Checks shared by the acceptance target and the integration tests. Each
//! check returns a list of human-readable violations.

#![allow(dead_code)]

use std::collections::BTreeSet;

use relkl::closedform::{mark, r_poly_closed, Mark};
use relkl::diagrams::{contains, subdiagrams, Family, QuotientSpec, ShapeDiagram};
use relkl::oracle::LeftStep;
use relkl::poly::Polynomial;
use relkl::sorting::{partition_to_element, quotient_members, reduced_word, sort_to_partition};
use relkl::verify::Quotient;

pub fn spec(s: &str) -> QuotientSpec {
    s.parse().unwrap()
}

/// Every quotient of the exhaustive verification run.
pub fn acceptance_specs() -> Vec<QuotientSpec> {
    let mut out = Vec::new();
    for n in 1..=7 {
        out.extend((1..=n).map(|p| QuotientSpec::A { n, p }));
    }
    out.extend((2..=8).map(QuotientSpec::B));
    out.extend((2..=7).map(QuotientSpec::C));
    out.extend((3..=7).map(QuotientSpec::DA));
    out.extend((3..=8).map(QuotientSpec::DD));
    out.push(QuotientSpec::E6);
    out.push(QuotientSpec::E7);
    out
}

pub fn is_classical(spec: QuotientSpec) -> bool {
    !matches!(spec.family(), Family::E6 | Family::E7)
}

/// Expected size of each quotient.
pub fn expected_size(spec: QuotientSpec) -> usize {
    let binom = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
    match spec {
        QuotientSpec::A { n, p } => binom(n + 1, p),
        QuotientSpec::C(n) => 1 << n,
        QuotientSpec::B(n) | QuotientSpec::DD(n) => 2 * n,
        QuotientSpec::DA(n) => 1 << (n - 1),
        QuotientSpec::E6 => 27,
        QuotientSpec::E7 => 56,
    }
}

/// Left multiplication by `s` in shape indices.
pub fn shape_step(q: &Quotient, inverse: &[usize], i: usize, s: usize) -> LeftStep {
    match q.oracle().step(q.oracle_index(i), s) {
        LeftStep::Down(j) => LeftStep::Down(inverse[j]),
        LeftStep::Up(j) => LeftStep::Up(inverse[j]),
        LeftStep::UpOutside => LeftStep::UpOutside,
    }
}

/// Shape index of each oracle element.
pub fn inverse_index(q: &Quotient) -> Vec<usize> {
    let mut inv = vec![0; q.shapes().len()];
    for i in 0..q.shapes().len() {
        inv[q.oracle_index(i)] = i;
    }
    inv
}

/// Closed-form values for all pairs, indexed by shape.
pub fn closed_table(q: &Quotient) -> Result<Vec<Vec<Polynomial>>, String> {
    let shapes = q.shapes();
    shapes
        .iter()
        .map(|u| {
            shapes
                .iter()
                .map(|v| r_poly_closed(u, v).map(|r| r.value).map_err(|e| format!("{u} {v}: {e}")))
                .collect()
        })
        .collect()
}

/// Outside corners read the left descents, addable boxes the ascents that
/// stay in the quotient.
pub fn descent_reading(q: &Quotient) -> Vec<String> {
    let mut bad = Vec::new();
    let rank = q.spec().rank();
    for (i, u) in q.shapes().iter().enumerate() {
        let oi = q.oracle_index(i);
        let corners: BTreeSet<usize> = u.outside_corners().iter().map(|c| c.label).collect();
        let descents: BTreeSet<usize> = q.oracle().left_descents(oi).into_iter().collect();
        let addable: BTreeSet<usize> = u.addable_boxes().iter().map(|c| c.label).collect();
        let ups: BTreeSet<usize> = (1..=rank)
            .filter(|&s| matches!(q.oracle().step(oi, s), LeftStep::Up(_)))
            .collect();
        if corners != descents || addable != ups {
            bad.push(format!("{} {u}: corners {corners:?} vs {descents:?}, addable {addable:?} vs {ups:?}", q.spec()));
        }
    }
    bad
}

/// Containment of shapes agrees with Bruhat order.
pub fn order_isomorphism(q: &Quotient) -> Vec<String> {
    let mut bad = Vec::new();
    let shapes = q.shapes();
    for (i, u) in shapes.iter().enumerate() {
        for (j, v) in shapes.iter().enumerate() {
            if contains(u, v).unwrap() != q.oracle().leq(q.oracle_index(i), q.oracle_index(j)) {
                bad.push(format!("{} {u} <= {v}", q.spec()));
            }
        }
    }
    bad
}

/// The three cases of Deodhar's recursion, checked on closed-form values for
/// every left descent `s` of `v`.
pub fn recursion_conformance(q: &Quotient, closed: &[Vec<Polynomial>]) -> Vec<String> {
    let mut bad = Vec::new();
    let inv = inverse_index(q);
    let n = q.shapes().len();
    let qm1 = Polynomial::q_minus_one();
    for v in 0..n {
        for s in 1..=q.spec().rank() {
            let LeftStep::Down(sv) = shape_step(q, &inv, v, s) else {
                continue;
            };
            for u in 0..n {
                let (case, rhs) = match shape_step(q, &inv, u, s) {
                    LeftStep::UpOutside => ("q-shift", closed[u][sv].shift(1)),
                    LeftStep::Down(su) => ("descent", closed[su][sv].clone()),
                    LeftStep::Up(su) => ("ascent", &(&qm1 * &closed[u][sv]) + &closed[su][sv].shift(1)),
                };
                if closed[u][v] != rhs {
                    let shapes = q.shapes();
                    bad.push(format!("{} {case} s={s} u={} v={}", q.spec(), shapes[u], shapes[v]));
                }
            }
        }
    }
    bad
}

/// Mark of every ambient box (`None` outside the skew).
fn mark_map(u: &ShapeDiagram, v: &ShapeDiagram) -> Option<Vec<Option<Mark>>> {
    if !contains(u, v).unwrap() {
        return None;
    }
    let m = mark(u, v).unwrap();
    let mut out = vec![None; u.ambient().len()];
    for c in &m.cells {
        out[c.index] = Some(c.mark);
    }
    Some(out)
}

/// Moving along a left descent `s` changes marks only on the diagonal of the
/// `s`-boxes and its two neighbours.
pub fn three_diagonal_locality(q: &Quotient) -> Vec<String> {
    let mut bad = Vec::new();
    let inv = inverse_index(q);
    let shapes = q.shapes();
    let cells = q.ambient().cells();
    for (vi, v) in shapes.iter().enumerate() {
        for s in 1..=q.spec().rank() {
            let LeftStep::Down(svi) = shape_step(q, &inv, vi, s) else {
                continue;
            };
            let d = cells[v.corner_labeled(s).unwrap()].diagonal();
            for (ui, u) in shapes.iter().enumerate() {
                if !contains(u, v).unwrap() {
                    continue;
                }
                let group: Vec<(usize, usize)> = match shape_step(q, &inv, ui, s) {
                    LeftStep::Down(sui) => vec![(ui, vi), (sui, svi)],
                    LeftStep::Up(sui) => vec![(ui, vi), (ui, svi), (sui, svi)],
                    LeftStep::UpOutside => continue,
                };
                let maps: Vec<_> = group
                    .iter()
                    .filter_map(|&(a, b)| mark_map(&shapes[a], &shapes[b]))
                    .collect();
                for m in &maps[1..] {
                    let differs = (0..cells.len())
                        .any(|b| (cells[b].diagonal() - d).abs() > 1 && m[b] != maps[0][b]);
                    if differs {
                        bad.push(format!("{} s={s} u={u} v={v}", q.spec()));
                    }
                }
            }
        }
    }
    bad
}

/// Exact residual of the inversion identity, degree bound and unit diagonal.
pub fn kl_consistency(q: &Quotient) -> Vec<String> {
    let mut bad = Vec::new();
    let r = q.r_table();
    let p = match q.kl_table() {
        Ok(p) => p,
        Err(e) => return vec![format!("{}: {e}", q.spec())],
    };
    let shapes = q.shapes();
    let n = shapes.len();
    let leq = |a: usize, b: usize| contains(&shapes[a], &shapes[b]).unwrap();
    for v in 0..n {
        if !p[v][v].is_one() {
            bad.push(format!("{} P_vv != 1 at {}", q.spec(), shapes[v]));
        }
        for u in (0..n).filter(|&u| u != v && leq(u, v)) {
            let l = shapes[v].len() - shapes[u].len();
            let mut sum = Polynomial::zero();
            for w in (0..n).filter(|&w| leq(u, w) && leq(w, v)) {
                sum = &sum + &(&r[u][w] * &p[w][v]);
            }
            let lhs = p[u][v].reflect(l);
            if lhs.as_ref() != Some(&sum) {
                bad.push(format!("{} residual at {} {}", q.spec(), shapes[u], shapes[v]));
            }
            if p[u][v].degree().is_some_and(|d| 2 * d + 1 > l) {
                bad.push(format!("{} degree bound at {} {}", q.spec(), shapes[u], shapes[v]));
            }
        }
    }
    bad
}

/// Sorting game and diagram reading are inverse bijections and agree with
/// the oracle's reduced words.
pub fn sorting_round_trip(q: &Quotient) -> Vec<String> {
    let sp = q.spec();
    let mut bad = Vec::new();
    let members = quotient_members(sp).unwrap();
    let mut seen = BTreeSet::new();
    for w in &members {
        match sort_to_partition(w, sp) {
            Ok(rows) => {
                let Ok(shape) = ShapeDiagram::from_rows(q.ambient(), &rows) else {
                    bad.push(format!("{sp} {w}: {rows:?} is not a shape"));
                    continue;
                };
                if partition_to_element(&shape).unwrap() != *w {
                    bad.push(format!("{sp} {w}: round trip through {shape}"));
                }
                let word = reduced_word(w, sp).unwrap();
                let oracle = q.oracle();
                if word.len() != shape.len()
                    || oracle.index_of_word(&word).is_none()
                    || oracle.index_of_word(&word) != oracle.index_of_word(&shape.element_word())
                {
                    bad.push(format!("{sp} {w}: word disagrees with {shape}"));
                }
                seen.insert(shape.rows());
            }
            Err(e) => bad.push(format!("{sp} {w}: {e}")),
        }
    }
    let all: BTreeSet<_> = subdiagrams(q.ambient()).iter().map(ShapeDiagram::rows).collect();
    if members.len() != all.len() || seen != all {
        bad.push(format!("{sp}: {} members, {} shapes reached, {} shapes", members.len(), seen.len(), all.len()));
    }
    bad
}
