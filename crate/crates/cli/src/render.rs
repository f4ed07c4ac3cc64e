//! Text, LaTeX and JSON renderings.

use relkl::closedform::MarkedSkewDiagram;
use relkl::diagrams::ShapeDiagram;
use relkl::poly::Polynomial;
use serde::{Deserialize, Serialize};

/// Canonical JSON form of one polynomial. Coefficients ascend by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub quotient: String,
    pub u: String,
    pub v: String,
    pub method: String,
    pub coeffs: Vec<i64>,
}

pub fn coeffs(p: &Polynomial) -> Result<Vec<i64>, String> {
    p.coeffs_i64()
        .ok_or_else(|| format!("coefficients of {p} do not fit in 64 bits"))
}

fn power(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ if e < 10 => format!("{base}^{e}"),
        _ => format!("{base}^{{{e}}}"),
    }
}

/// `(q-1)^k q^{η} (rest)` with each factor omitted when trivial.
pub fn latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let (rest, k) = p.factor_q_minus_one();
    let eta = rest.low_degree().unwrap_or(0);
    let rest = Polynomial::from_coeffs(rest.coeffs()[eta..].to_vec());
    let mut parts = Vec::new();
    if k > 0 {
        parts.push(power("(q-1)", k));
    }
    if eta > 0 {
        parts.push(if eta == 1 { "q".into() } else { format!("q^{{{eta}}}") });
    }
    if !rest.is_one() {
        let body = ascending(&rest);
        parts.push(if parts.is_empty() { body } else { format!("({body})") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Terms in increasing degree, e.g. `1+q+q^{2}`.
fn ascending(p: &Polynomial) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        let c = c.to_string();
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let var = match i {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{{{i}}}"),
        };
        if i == 0 || mag != "1" {
            out.push_str(&mag);
        }
        out.push_str(&var);
    }
    out
}

/// The ambient grid with `X` for boxes of `inner`, the mark symbol for skew
/// boxes, and blanks elsewhere, followed by a per-box table.
pub fn marks(inner: &ShapeDiagram, marked: &MarkedSkewDiagram) -> String {
    let amb = inner.ambient();
    let width = amb.cells().iter().map(|c| c.col).max().unwrap_or(0);
    let mut out = String::new();
    for row in 1..=amb.row_count() {
        let mut line = String::new();
        for col in 1..=width {
            let ch = match amb.index_of(row, col) {
                Some(i) if inner.contains_cell(i) => 'X',
                Some(i) => marked.mark_at(i).map_or(' ', |m| m.symbol()),
                None => ' ',
            };
            line.push(ch);
            line.push(' ');
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out.push_str(&format!(
        "\n{:>3} {:>3} {:>5} {:>4} {:>3} {:>3}\n",
        "row", "col", "label", "mark", "δ", "Δ"
    ));
    for c in &marked.cells {
        out.push_str(&format!(
            "{:>3} {:>3} {:>5} {:>4} {:>3} {:>3}\n",
            c.cell.row,
            c.cell.col,
            c.cell.label,
            c.mark.symbol(),
            c.small_delta,
            c.big_delta
        ));
    }
    out.push_str(&format!(
        "plus {}, minus {}, k = {}\n",
        marked.count(relkl::closedform::Mark::Plus),
        marked.count(relkl::closedform::Mark::Minus),
        marked.k()
    ));
    out
}

/// DOT digraph of the covering relations among `shapes`.
pub fn hasse_dot(name: &str, shapes: &[ShapeDiagram]) -> (String, usize) {
    let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
    for (i, s) in shapes.iter().enumerate() {
        let rows = if s.is_empty() { "∅".to_string() } else { s.to_string() };
        out.push_str(&format!("  n{i} [label=\"{rows}\\nrank {}\"];\n", s.len()));
    }
    let mut edges = 0;
    for (i, s) in shapes.iter().enumerate() {
        for b in s.addable_indices() {
            let up = s.with(b);
            if let Some(j) = shapes.iter().position(|t| *t == up) {
                out.push_str(&format!("  n{i} -> n{j};\n"));
                edges += 1;
            }
        }
    }
    out.push_str("}\n");
    (out, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_factors() {
        let p = (&Polynomial::q_minus_one().pow(2) * &Polynomial::from_coeffs([1, 1])).shift(10);
        assert_eq!(latex(&p), "(q-1)^2 q^{10} (1+q)");
        assert_eq!(latex(&Polynomial::q_minus_one().shift(6)), "(q-1) q^{6}");
        assert_eq!(latex(&Polynomial::one()), "1");
        assert_eq!(latex(&Polynomial::zero()), "0");
        assert_eq!(latex(&Polynomial::from_coeffs([1, 0, 1])), "1+q^{2}");
        assert_eq!(latex(&Polynomial::from_coeffs([0, 2, -1])), "q (2-q)");
    }

    #[test]
    fn json_round_trips() {
        let r = PolyRecord {
            quotient: "E6".into(),
            u: "5,3".into(),
            v: "5,3,3,4".into(),
            method: "closed".into(),
            coeffs: vec![0, 0, 0, 0, 0, 0, -1, 1],
        };
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<PolyRecord>(&text).unwrap(), r);
    }
}
