//! Ground truth computed directly in the Weyl group.
//!
//! Elements are integer matrices in the geometric representation (images of
//! the simple roots, in the simple-root basis). Nothing here looks at box
//! diagrams; the Bruhat order comes from the lifting property and the
//! relative R-polynomials from Deodhar's three-case recursion.
//!
//! Minimal coset representatives are the elements with no right descent in
//! `J`, and the recursion multiplies on the left.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::diagrams::{QuotientSpec, RootLength, ShapeDiagram};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Cartan matrix, parabolic subset and root lengths for one quotient.
///
/// `cartan[i][j] = 2(a_i, a_j) / (a_i, a_i)` so that the simple reflection
/// `s_i` sends `a_j` to `a_j - cartan[i][j] a_i`. Generators are 1-based in
/// every public method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    /// `in_j[s - 1]` is true iff `s` belongs to `J`.
    pub in_j: Vec<bool>,
    pub root_length: Vec<RootLength>,
}

impl CartanData {
    pub fn for_spec(spec: QuotientSpec) -> Self {
        let n = spec.rank();
        let mut c = vec![vec![0i32; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edge = |a: usize, b: usize| {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        };
        match spec {
            QuotientSpec::A { .. } | QuotientSpec::B(_) | QuotientSpec::C(_) => {
                for i in 1..n {
                    edge(i, i + 1);
                }
            }
            QuotientSpec::DA(_) | QuotientSpec::DD(_) => {
                for i in 1..n - 1 {
                    edge(i, i + 1);
                }
                edge(n - 2, n);
            }
            QuotientSpec::E6 | QuotientSpec::E7 => {
                edge(1, 3);
                edge(3, 4);
                edge(2, 4);
                for i in 4..n {
                    edge(i, i + 1);
                }
            }
        }
        match spec {
            // a_n short
            QuotientSpec::B(_) => c[n - 1][n - 2] = -2,
            // a_n long
            QuotientSpec::C(_) => c[n - 2][n - 1] = -2,
            _ => {}
        }
        let excluded = spec.excluded_generator();
        Self {
            rank: n,
            cartan: c,
            in_j: (1..=n).map(|s| s != excluded).collect(),
            root_length: (1..=n).map(|s| spec.root_length(s)).collect(),
        }
    }

    pub fn j_set(&self) -> BTreeSet<usize> {
        (1..=self.rank).filter(|&s| self.in_j[s - 1]).collect()
    }
}

/// A Weyl group element with cached length and a reduced word.
#[derive(Clone)]
pub struct GroupElement {
    rank: usize,
    /// Row-major; column `j` is the image of the simple root `a_j`.
    action: Arc<[i32]>,
    inverse: Arc<[i32]>,
    length: usize,
    word: Vec<usize>,
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// A reduced word (1-based generators); the element is the product of
    /// the letters from left to right.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn action(&self) -> &[i32] {
        &self.action
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    fn column_sign(mat: &[i32], rank: usize, j: usize) -> i32 {
        // A root has all coordinates of one sign.
        (0..rank)
            .map(|k| mat[k * rank + j].signum())
            .find(|&x| x != 0)
            .unwrap_or(0)
    }

    /// `{s : l(ws) < l(w)}`.
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|&j| Self::column_sign(&self.action, self.rank, j) < 0)
            .map(|j| j + 1)
            .collect()
    }

    /// `{s : l(sw) < l(w)}`, read off `w^{-1}(a_s) < 0`.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        (0..self.rank)
            .filter(|&j| Self::column_sign(&self.inverse, self.rank, j) < 0)
            .map(|j| j + 1)
            .collect()
    }

    pub fn has_left_descent(&self, s: usize) -> bool {
        Self::column_sign(&self.inverse, self.rank, s - 1) < 0
    }

    /// Number of positive roots sent to negative roots, counted by brute
    /// force over the root system generated by `group`.
    pub fn inversion_count(&self, group: &WeylGroup) -> usize {
        group
            .positive_roots()
            .iter()
            .filter(|root| {
                let img = apply(&self.action, self.rank, root);
                img.iter().any(|&x| x < 0)
            })
            .count()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(len={}, word={:?})", self.length, self.word)
    }
}

fn apply(mat: &[i32], rank: usize, v: &[i32]) -> Vec<i32> {
    (0..rank)
        .map(|i| (0..rank).map(|j| mat[i * rank + j] * v[j]).sum())
        .collect()
}

fn matmul(a: &[i32], b: &[i32], rank: usize) -> Arc<[i32]> {
    let mut out = vec![0i32; rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = a[i * rank + k];
            if aik == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] += aik * b[k * rank + j];
            }
        }
    }
    out.into()
}

/// The Weyl group of a Cartan matrix, acting on the root lattice.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    data: CartanData,
    reflections: Vec<Arc<[i32]>>,
}

impl WeylGroup {
    pub fn new(data: CartanData) -> Self {
        let n = data.rank;
        let reflections = (0..n)
            .map(|i| {
                let mut m = vec![0i32; n * n];
                for k in 0..n {
                    m[k * n + k] = 1;
                }
                for j in 0..n {
                    m[i * n + j] -= data.cartan[i][j];
                }
                m.into()
            })
            .collect();
        Self { data, reflections }
    }

    pub fn for_spec(spec: QuotientSpec) -> Self {
        Self::new(CartanData::for_spec(spec))
    }

    pub fn data(&self) -> &CartanData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        let mut m = vec![0i32; n * n];
        for k in 0..n {
            m[k * n + k] = 1;
        }
        let m: Arc<[i32]> = m.into();
        GroupElement {
            rank: n,
            action: Arc::clone(&m),
            inverse: m,
            length: 0,
            word: Vec::new(),
        }
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        self.left_multiply(s, &self.identity())
    }

    /// `s * w`.
    pub fn left_multiply(&self, s: usize, w: &GroupElement) -> GroupElement {
        assert!((1..=self.rank()).contains(&s), "generator {s} out of range");
        let n = self.rank();
        let refl = &self.reflections[s - 1];
        let action = matmul(refl, &w.action, n);
        let inverse = matmul(&w.inverse, refl, n);
        let (length, word) = if w.has_left_descent(s) {
            let word = if w.word.first() == Some(&s) {
                w.word[1..].to_vec()
            } else {
                Vec::new()
            };
            (w.length - 1, word)
        } else {
            let mut word = Vec::with_capacity(w.word.len() + 1);
            word.push(s);
            word.extend_from_slice(&w.word);
            (w.length + 1, word)
        };
        let mut out = GroupElement {
            rank: n,
            action,
            inverse,
            length,
            word,
        };
        if out.word.len() != out.length {
            out.word = self.reduced_word(&out);
        }
        out
    }

    /// Product of the word's letters, left to right.
    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter()
            .rev()
            .fold(self.identity(), |w, &s| self.left_multiply(s, &w))
    }

    /// Reduced word found by repeatedly peeling off the smallest left descent.
    fn reduced_word(&self, w: &GroupElement) -> Vec<usize> {
        let n = self.rank();
        let mut word = Vec::new();
        let mut inv: Arc<[i32]> = Arc::clone(&w.inverse);
        while let Some(s) = (0..n).find(|&j| GroupElement::column_sign(&inv, n, j) < 0) {
            word.push(s + 1);
            inv = matmul(&inv, &self.reflections[s], n);
        }
        word
    }

    pub fn left_descents(&self, w: &GroupElement) -> BTreeSet<usize> {
        w.left_descents()
    }

    /// True iff `w` has no right descent in `J`.
    pub fn is_quotient_rep(&self, w: &GroupElement) -> bool {
        (0..self.rank())
            .all(|j| !self.data.in_j[j] || GroupElement::column_sign(&w.action, self.rank(), j) > 0)
    }

    /// Strong Bruhat order through the lifting property: for `s` a left
    /// descent of `v`, `u <= v` iff `su <= sv` (when `s` is also a descent
    /// of `u`) or `u <= sv` (otherwise).
    pub fn bruhat_leq(&self, u: &GroupElement, v: &GroupElement) -> bool {
        let mut memo = HashMap::new();
        self.bruhat_rec(u, v, &mut memo)
    }

    fn bruhat_rec(
        &self,
        u: &GroupElement,
        v: &GroupElement,
        memo: &mut BruhatMemo,
    ) -> bool {
        if u.length > v.length {
            return false;
        }
        if u.length == v.length {
            return u == v;
        }
        if u.length == 0 {
            return true;
        }
        let key = (Arc::clone(&u.action), Arc::clone(&v.action));
        if let Some(&b) = memo.get(&key) {
            return b;
        }
        let s = *v.left_descents().first().expect("non-identity has a descent");
        let sv = self.left_multiply(s, v);
        let res = if u.has_left_descent(s) {
            let su = self.left_multiply(s, u);
            self.bruhat_rec(&su, &sv, memo)
        } else {
            self.bruhat_rec(u, &sv, memo)
        };
        memo.insert(key, res);
        res
    }

    /// All positive roots in simple-root coordinates, by closing the simple
    /// roots under reflections.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut stack: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
            .collect();
        while let Some(r) = stack.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for refl in &self.reflections {
                let img = apply(refl, n, &r);
                if img.iter().all(|&x| x >= 0) && !seen.contains(&img) {
                    stack.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }
}

type BruhatMemo = HashMap<(Arc<[i32]>, Arc<[i32]>), bool>;

/// Which variant of Deodhar's recursion to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XParam {
    MinusOne,
    Q,
}

impl XParam {
    /// The factor `q - 1 - x` used when `su` leaves `W^J`.
    fn outside_factor(self) -> Polynomial {
        match self {
            XParam::MinusOne => Polynomial::q(),
            XParam::Q => Polynomial::constant(-1),
        }
    }
}

/// Effect of left multiplication by a generator on a quotient element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftStep {
    /// `s` is a left descent; `su` is the given (shorter) representative.
    Down(usize),
    /// `su > u` and `su` is again a representative.
    Up(usize),
    /// `su > u` but `su` is not a minimal coset representative.
    UpOutside,
}

/// The minimal coset representatives of one quotient, with their Bruhat
/// order and left-multiplication table.
#[derive(Debug, Clone)]
pub struct QuotientOracle {
    spec: QuotientSpec,
    group: WeylGroup,
    elements: Vec<GroupElement>,
    index: HashMap<Arc<[i32]>, usize>,
    steps: Vec<Vec<LeftStep>>,
    leq: Vec<Vec<bool>>,
}

/// Breadth-first enumeration of `W^J` by length-increasing left
/// multiplication.
pub fn enumerate_quotient(spec: QuotientSpec) -> Vec<GroupElement> {
    let group = WeylGroup::for_spec(spec);
    enumerate_with(&group)
}

fn enumerate_with(group: &WeylGroup) -> Vec<GroupElement> {
    let mut out = vec![group.identity()];
    let mut seen: HashMap<Arc<[i32]>, ()> = HashMap::new();
    seen.insert(Arc::clone(&out[0].action), ());
    let mut start = 0;
    while start < out.len() {
        let end = out.len();
        for i in start..end {
            for s in 1..=group.rank() {
                if out[i].has_left_descent(s) {
                    continue;
                }
                let sw = group.left_multiply(s, &out[i]);
                if group.is_quotient_rep(&sw) && !seen.contains_key(&sw.action) {
                    seen.insert(Arc::clone(&sw.action), ());
                    out.push(sw);
                }
            }
        }
        start = end;
    }
    out
}

impl QuotientOracle {
    pub fn new(spec: QuotientSpec) -> Result<Self> {
        let spec = spec.validate()?;
        Ok(Self::with_group(spec, WeylGroup::for_spec(spec)))
    }

    /// The quotient of the Weyl group of `spec`'s type by the parabolic
    /// subgroup generated by `j` instead of the usual maximal one. With `j`
    /// empty this is the whole group.
    pub fn with_parabolic(spec: QuotientSpec, j: &[usize]) -> Result<Self> {
        let spec = spec.validate()?;
        let mut data = CartanData::for_spec(spec);
        if let Some(&s) = j.iter().find(|&&s| s == 0 || s > data.rank) {
            return Err(Error::InvalidSpec(format!("{spec} has no generator {s}")));
        }
        data.in_j = (1..=data.rank).map(|s| j.contains(&s)).collect();
        Ok(Self::with_group(spec, WeylGroup::new(data)))
    }

    fn with_group(spec: QuotientSpec, group: WeylGroup) -> Self {
        let elements = enumerate_with(&group);
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (Arc::clone(&e.action), i))
            .collect();
        let steps: Vec<Vec<LeftStep>> = elements
            .iter()
            .map(|w| {
                (1..=group.rank())
                    .map(|s| {
                        let sw = group.left_multiply(s, w);
                        match index.get(&sw.action) {
                            Some(&j) if sw.length < w.length => LeftStep::Down(j),
                            Some(&j) => LeftStep::Up(j),
                            None => {
                                assert!(
                                    sw.length > w.length,
                                    "descent of a representative left the quotient"
                                );
                                LeftStep::UpOutside
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let mut oracle = Self {
            spec,
            group,
            elements,
            index,
            steps,
            leq: Vec::new(),
        };
        oracle.leq = oracle.bruhat_table();
        oracle
    }

    fn bruhat_table(&self) -> Vec<Vec<bool>> {
        // Elements are sorted by length, so every `sv` precedes `v`.
        let n = self.elements.len();
        let mut leq = vec![vec![false; n]; n];
        for v in 0..n {
            match self.first_descent(v) {
                None => leq[v][v] = true,
                Some((s, sv)) => {
                    for u in 0..n {
                        leq[u][v] = match self.steps[u][s - 1] {
                            LeftStep::Down(su) => leq[su][sv],
                            _ => leq[u][sv],
                        };
                    }
                }
            }
        }
        leq
    }

    pub fn spec(&self) -> QuotientSpec {
        self.spec
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    /// Index of the element whose reduced word is `word`.
    pub fn index_of_word(&self, word: &[usize]) -> Option<usize> {
        self.index_of(&self.group.from_word(word))
    }

    /// Index of the element encoded by a shape, via its row word.
    pub fn index_of_shape(&self, shape: &ShapeDiagram) -> Option<usize> {
        self.index_of_word(&shape.element_word())
    }

    pub fn step(&self, u: usize, s: usize) -> LeftStep {
        self.steps[u][s - 1]
    }

    pub fn left_descents(&self, u: usize) -> Vec<usize> {
        (1..=self.group.rank())
            .filter(|&s| matches!(self.steps[u][s - 1], LeftStep::Down(_)))
            .collect()
    }

    fn first_descent(&self, v: usize) -> Option<(usize, usize)> {
        (1..=self.group.rank()).find_map(|s| match self.steps[v][s - 1] {
            LeftStep::Down(sv) => Some((s, sv)),
            _ => None,
        })
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u][v]
    }

    /// Right-hand side of Deodhar's recursion at `(u, v)` for the descent
    /// `s` of `v`, reading smaller values from `r`.
    pub fn recursion_rhs(
        &self,
        u: usize,
        v: usize,
        s: usize,
        x: XParam,
        r: &[Vec<Polynomial>],
    ) -> Polynomial {
        let LeftStep::Down(sv) = self.steps[v][s - 1] else {
            panic!("{s} is not a left descent of v");
        };
        match self.steps[u][s - 1] {
            LeftStep::Down(su) => r[su][sv].clone(),
            LeftStep::UpOutside => &x.outside_factor() * &r[u][sv],
            LeftStep::Up(su) => {
                &(&Polynomial::q_minus_one() * &r[u][sv]) + &r[su][sv].shift(1)
            }
        }
    }

    /// `R^{J,x}_{u,v}` for every pair of indices, computed bottom-up with the
    /// smallest left descent of `v` at each step.
    pub fn r_table(&self, x: XParam) -> Vec<Vec<Polynomial>> {
        let n = self.elements.len();
        let mut r = vec![vec![Polynomial::zero(); n]; n];
        for v in 0..n {
            let Some((s, _)) = self.first_descent(v) else {
                r[v][v] = Polynomial::one();
                continue;
            };
            for u in 0..n {
                r[u][v] = if u == v {
                    Polynomial::one()
                } else if !self.leq[u][v] {
                    Polynomial::zero()
                } else {
                    self.recursion_rhs(u, v, s, x, &r)
                };
            }
        }
        r
    }

    /// `R^{J,x}_{u,v}` for a single pair of group elements.
    pub fn r_poly(&self, u: &GroupElement, v: &GroupElement, x: XParam) -> Result<Polynomial> {
        let ui = self.index_of(u).ok_or(Error::NotQuotientRep)?;
        let vi = self.index_of(v).ok_or(Error::NotQuotientRep)?;
        Ok(self.r_poly_memo(ui, vi, x, &mut HashMap::new()))
    }

    /// Memoized top-down recursion for a single pair.
    pub fn r_poly_memo(
        &self,
        u: usize,
        v: usize,
        x: XParam,
        memo: &mut HashMap<(usize, usize), Polynomial>,
    ) -> Polynomial {
        if u == v {
            return Polynomial::one();
        }
        if !self.leq[u][v] {
            return Polynomial::zero();
        }
        if let Some(p) = memo.get(&(u, v)) {
            return p.clone();
        }
        let (s, sv) = self.first_descent(v).expect("u < v so v has a descent");
        let res = match self.steps[u][s - 1] {
            LeftStep::Down(su) => self.r_poly_memo(su, sv, x, memo),
            LeftStep::UpOutside => &x.outside_factor() * &self.r_poly_memo(u, sv, x, memo),
            LeftStep::Up(su) => {
                let a = self.r_poly_memo(u, sv, x, memo);
                let b = self.r_poly_memo(su, sv, x, memo);
                &(&Polynomial::q_minus_one() * &a) + &b.shift(1)
            }
        };
        memo.insert((u, v), res.clone());
        res
    }

    /// Relative Kazhdan-Lusztig polynomials for every pair, from an R table.
    ///
    /// For `u < v` with `l = l(v) - l(u)`, the identity
    /// `q^l P_{u,v}(1/q) = sum_{u <= w <= v} R_{u,w} P_{w,v}` together with
    /// `deg P_{u,v} <= (l - 1) / 2` determines `P_{u,v}` from the larger
    /// terms. The identity is re-checked exactly for every pair.
    pub fn kl_table(&self, r: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>> {
        let n = self.elements.len();
        let mut p = vec![vec![Polynomial::zero(); n]; n];
        for v in 0..n {
            p[v][v] = Polynomial::one();
            // Longer elements come later, so iterate u downwards.
            for u in (0..v).rev() {
                if !self.leq[u][v] {
                    continue;
                }
                p[u][v] = self.kl_entry(u, v, r, &p)?;
            }
        }
        Ok(p)
    }

    fn kl_entry(
        &self,
        u: usize,
        v: usize,
        r: &[Vec<Polynomial>],
        p: &[Vec<Polynomial>],
    ) -> Result<Polynomial> {
        let l = self.length(v) - self.length(u);
        let mut f = Polynomial::zero();
        for w in 0..self.elements.len() {
            if w != u && self.leq[u][w] && self.leq[w][v] {
                f = &f + &(&r[u][w] * &p[w][v]);
            }
        }
        let coeffs: Vec<_> = (0..l).take_while(|i| 2 * i < l).map(|i| f.coeff(l - i)).collect();
        let kl = Polynomial::from_coeffs(coeffs);
        let lhs = kl.reflect(l).ok_or(Error::InversionInconsistent { u, v })?;
        if lhs != &kl + &f {
            return Err(Error::InversionInconsistent { u, v });
        }
        Ok(kl)
    }

    /// Relative KL polynomial for a single pair of group elements.
    pub fn kl_poly(&self, u: &GroupElement, v: &GroupElement, x: XParam) -> Result<Polynomial> {
        let ui = self.index_of(u).ok_or(Error::NotQuotientRep)?;
        let vi = self.index_of(v).ok_or(Error::NotQuotientRep)?;
        if !self.leq[ui][vi] {
            return Ok(Polynomial::zero());
        }
        let r = self.r_table(x);
        let kl = self.kl_table(&r)?;
        Ok(kl[ui][vi].clone())
    }
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;

    fn spec(s: &str) -> QuotientSpec {
        s.parse().unwrap()
    }

    #[test]
    fn cartan_matrices() {
        let b = CartanData::for_spec(spec("B:3"));
        assert_eq!(b.cartan, vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let c = CartanData::for_spec(spec("C:3"));
        assert_eq!(c.cartan, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        let d = CartanData::for_spec(spec("DD:4"));
        assert_eq!(d.cartan[1], vec![-1, 2, -1, -1]);
        let e = CartanData::for_spec(spec("E6"));
        assert_eq!(e.cartan[3], vec![0, -1, -1, 2, -1, 0]);
        assert_eq!(e.j_set(), BTreeSet::from([2, 3, 4, 5, 6]));
        for s in ["A:4:2", "B:4", "C:4", "DA:5", "DD:5", "E6", "E7"] {
            let d = CartanData::for_spec(spec(s));
            for i in 0..d.rank {
                assert_eq!(d.cartan[i][i], 2);
                for j in 0..d.rank {
                    assert!(i == j || d.cartan[i][j] <= 0);
                    assert_eq!(d.cartan[i][j] == 0, d.cartan[j][i] == 0);
                }
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let count = |s: &str| WeylGroup::for_spec(spec(s)).positive_roots().len();
        assert_eq!(count("A:4:1"), 10);
        assert_eq!(count("B:4"), 16);
        assert_eq!(count("C:4"), 16);
        assert_eq!(count("DD:5"), 20);
        assert_eq!(count("E6"), 36);
        assert_eq!(count("E7"), 63);
    }

    #[test]
    fn left_multiplication() {
        let g = WeylGroup::for_spec(spec("A:2:1"));
        let e = g.identity();
        let s1 = g.left_multiply(1, &e);
        assert_eq!(s1.length(), 1);
        assert_eq!(s1.word(), &[1]);
        assert_eq!(g.left_multiply(1, &s1), e);
        let s1s2 = g.left_multiply(1, &g.generator(2));
        assert_eq!(s1s2.length(), 2);
        // a 3-cycle has order 3
        let cube = g.from_word(&[1, 2, 1, 2, 1, 2]);
        assert_eq!(cube, e);
        let w0 = g.from_word(&[1, 2, 1]);
        assert_eq!(w0, g.from_word(&[2, 1, 2]));
        assert_eq!(w0.length(), 3);
    }

    #[test]
    fn lengths_match_inversions() {
        for s in ["A:3:2", "B:3", "C:3", "DD:4", "E6"] {
            let g = WeylGroup::for_spec(spec(s));
            for w in enumerate_quotient(spec(s)) {
                assert_eq!(w.length(), w.inversion_count(&g), "{s} {w:?}");
                assert_eq!(g.from_word(w.word()), w);
            }
        }
    }

    #[test]
    fn reduced_word_recomputed_after_descent() {
        let g = WeylGroup::for_spec(spec("A:3:1"));
        let w = g.from_word(&[1, 2, 1]);
        // word starts with 1 but 2 is also a descent
        let down = g.left_multiply(2, &w);
        assert_eq!(down.length(), 2);
        assert_eq!(g.from_word(down.word()), down);
    }

    #[test]
    fn descents() {
        let g = WeylGroup::for_spec(spec("A:2:1"));
        assert!(g.identity().left_descents().is_empty());
        assert_eq!(g.generator(2).left_descents(), BTreeSet::from([2]));
        assert_eq!(g.from_word(&[1, 2, 1]).left_descents(), BTreeSet::from([1, 2]));
        assert_eq!(g.from_word(&[1, 2]).right_descents(), BTreeSet::from([2]));
    }

    #[test]
    fn quotient_membership() {
        let g = WeylGroup::for_spec(spec("A:3:2"));
        assert!(g.is_quotient_rep(&g.identity()));
        assert!(!g.is_quotient_rep(&g.generator(1)));
        assert!(!g.is_quotient_rep(&g.generator(3)));
        assert!(g.is_quotient_rep(&g.generator(2)));
    }

    #[test]
    fn bruhat_basics() {
        let g = WeylGroup::for_spec(spec("A:2:1"));
        let w0 = g.from_word(&[1, 2, 1]);
        for w in [g.identity(), g.generator(1), g.from_word(&[2, 1]), w0.clone()] {
            assert!(g.bruhat_leq(&g.identity(), &w));
            assert!(g.bruhat_leq(&w, &w));
            assert!(g.bruhat_leq(&w, &w0));
        }
        assert!(!g.bruhat_leq(&g.generator(1), &g.generator(2)));
        assert!(g.bruhat_leq(&g.generator(2), &g.from_word(&[1, 2])));
    }

    #[test]
    fn quotient_sizes() {
        assert_eq!(enumerate_quotient(spec("E6")).len(), 27);
        assert_eq!(enumerate_quotient(spec("B:4")).len(), 8);
        assert_eq!(enumerate_quotient(spec("A:3:2")).len(), 6);
    }

    #[test]
    fn bruhat_table_matches_generic_comparison() {
        for s in ["A:4:2", "C:3", "DD:4", "E6"] {
            let o = QuotientOracle::new(spec(s)).unwrap();
            for (i, u) in o.elements().iter().enumerate() {
                for (j, v) in o.elements().iter().enumerate() {
                    assert_eq!(o.leq(i, j), o.group().bruhat_leq(u, v), "{s}");
                }
            }
        }
    }

    #[test]
    fn r_poly_base_cases() {
        let o = QuotientOracle::new(spec("A:3:2")).unwrap();
        let els = o.elements();
        for u in els {
            assert_eq!(o.r_poly(u, u, XParam::MinusOne).unwrap(), Polynomial::one());
        }
        let r = o.r_table(XParam::MinusOne);
        for u in 0..o.len() {
            for v in 0..o.len() {
                if !o.leq(u, v) {
                    assert!(r[u][v].is_zero());
                } else if o.length(v) == o.length(u) + 1 {
                    assert_eq!(r[u][v], Polynomial::q_minus_one());
                }
            }
        }
        let g = WeylGroup::for_spec(spec("A:3:2"));
        assert!(matches!(
            o.r_poly(&g.generator(1), &g.generator(2), XParam::MinusOne),
            Err(Error::NotQuotientRep)
        ));
    }

    #[test]
    fn r_table_agrees_with_memoized_recursion() {
        let o = QuotientOracle::new(spec("E6")).unwrap();
        let table = o.r_table(XParam::MinusOne);
        let mut memo = HashMap::new();
        for u in 0..o.len() {
            for v in 0..o.len() {
                assert_eq!(table[u][v], o.r_poly_memo(u, v, XParam::MinusOne, &mut memo));
            }
        }
    }

    #[test]
    fn kl_small_cases() {
        let o = QuotientOracle::new(spec("A:3:2")).unwrap();
        let r = o.r_table(XParam::MinusOne);
        let p = o.kl_table(&r).unwrap();
        for u in 0..o.len() {
            assert!(p[u][u].is_one());
            for v in 0..o.len() {
                if o.leq(u, v) && o.length(v) == o.length(u) + 1 {
                    assert!(p[u][v].is_one());
                }
            }
        }
    }

    #[test]
    fn kl_rejects_inconsistent_r() {
        let o = QuotientOracle::new(spec("A:3:2")).unwrap();
        let mut r = o.r_table(XParam::MinusOne);
        // corrupt one cover
        let (u, v) = (0, 1);
        assert!(o.leq(u, v));
        r[u][v] = Polynomial::q();
        assert!(matches!(o.kl_table(&r), Err(Error::InversionInconsistent { .. })));
    }
}
