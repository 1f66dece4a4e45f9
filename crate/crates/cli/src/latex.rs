//! LaTeX displays of the determinants the tool computes.

use schur_division::companion::GiambelliBlocks;
use schur_division::{Alphabet, IndexVector, LaurentPoly, Matrix, Rational};

pub fn rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
}

pub fn laurent(p: &LaurentPoly) -> String {
    if p.num_terms() == 0 {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (d, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag == Rational::from(1);
        match d {
            0 => out.push_str(&rational(&mag)),
            _ => {
                if !unit {
                    out.push_str(&rational(&mag));
                }
                if d == 1 {
                    out.push('x');
                } else {
                    out.push_str(&format!("x^{{{d}}}"));
                }
            }
        }
    }
    out
}

fn vmatrix(rows: &[Vec<String>]) -> String {
    let body: Vec<String> = rows.iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\begin{{vmatrix}}\n{}\n\\end{{vmatrix}}",
        body.join(" \\\\\n")
    )
}

fn index(j: &IndexVector) -> String {
    j.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// `G_J(A)` as a ratio of alternants in the symbols `a_k`, followed by its
/// value at the given letters.
pub fn bialternant(j: &IndexVector, a: &Alphabet, value: &Rational) -> String {
    let n = a.len();
    let power = |k: usize, e: i64| match e {
        0 => "1".to_string(),
        1 => format!("a_{{{}}}", k + 1),
        _ => format!("a_{{{}}}^{{{e}}}", k + 1),
    };
    let num: Vec<Vec<String>> = (0..n)
        .map(|l| (0..n).map(|k| power(k, j[l] + l as i64)).collect())
        .collect();
    let den: Vec<Vec<String>> = (0..n)
        .map(|l| (0..n).map(|k| power(k, l as i64)).collect())
        .collect();
    let letters: Vec<String> = a.letters().iter().map(rational).collect();
    format!(
        "\\mathfrak{{G}}_{{{}}}(A) = \\frac{{{}}}{{{}}}\n\\quad\\text{{at }} A = \\{{{}\\}}: \\quad {}",
        index(j),
        vmatrix(&num),
        vmatrix(&den),
        letters.join(", "),
        rational(value)
    )
}

/// Determinant of complete functions `S_{j}(A_k - B_k)` with their values.
pub fn multi_schur(labels: &Matrix<String>, value: &LaurentPoly) -> String {
    format!("{} = {}", vmatrix(&labels.to_rows()), laurent(value))
}

/// Single-index bialternants `G_{v e_l}` of the general hook determinant.
pub fn giambelli_general(j: &IndexVector, labels: &Matrix<String>, value: &Rational) -> String {
    format!(
        "\\mathfrak{{G}}_{{{}}}(A) = {} = {}",
        index(j),
        vmatrix(&labels.to_rows()),
        rational(value)
    )
}

/// `[[P, Q], [M, N]]` with hook labels, the block split drawn as rules.
pub fn giambelli_block(j: &IndexVector, blocks: &GiambelliBlocks, value: &Rational) -> String {
    let r1 = blocks.p.rows();
    let size = blocks.labels.rows();
    let spec: String = (0..size)
        .map(|c| if c == r1 && r1 > 0 { "|c" } else { "c" })
        .collect();
    let mut body = String::new();
    for i in 0..size {
        if i == r1 && r1 > 0 && r1 < size {
            body.push_str("\\hline\n");
        }
        let row: Vec<String> = (0..size).map(|k| blocks.labels[(i, k)].latex()).collect();
        body.push_str(&row.join(" & "));
        body.push_str(if i + 1 < size { " \\\\\n" } else { "\n" });
    }
    format!(
        "\\mathfrak{{G}}_{{{}}}(A) = \\left|\\begin{{array}}{{{spec}}}\n{body}\\end{{array}}\\right| = {}",
        index(j),
        rational(value)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use schur_division::exact::rat;

    #[test]
    fn numbers() {
        assert_eq!(rational(&rat(-3, 4)), "-\\frac{3}{4}");
        assert_eq!(rational(&rat(5, 1)), "5");
        let p = LaurentPoly::from_terms([(1, rat(-1, 1)), (0, rat(2, 1)), (-2, rat(1, 3))]);
        assert_eq!(laurent(&p), "-x + 2 + \\frac{1}{3}x^{-2}");
        assert_eq!(laurent(&LaurentPoly::from_terms([])), "0");
    }
}
