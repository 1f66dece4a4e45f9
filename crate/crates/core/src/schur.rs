//! Schur functions at rational specializations.
//!
//! Index vectors follow the weakly increasing convention throughout: the
//! partition with parts 4, 3, 1 is written `[1, 3, 4]`. The bialternant
//! [`gschur`] accepts arbitrary integer vectors, including negative parts.

use std::fmt;
use std::ops::Deref;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::alphabet::{vandermonde_delta, Alphabet, DiffArgument};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::laurent::LaurentPoly;

/// Integer index vector `J`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexVector(pub Vec<i64>);

impl IndexVector {
    pub fn new(parts: Vec<i64>) -> Self {
        IndexVector(parts)
    }

    pub fn zeros(n: usize) -> Self {
        IndexVector(vec![0; n])
    }

    /// `[v; n]`
    pub fn constant(v: i64, n: usize) -> Self {
        IndexVector(vec![v; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Weakly increasing with nonnegative parts.
    pub fn is_partition(&self) -> bool {
        self.is_weakly_increasing() && self.0.iter().all(|&p| p >= 0)
    }

    /// `J^ω`: parts in reverse order.
    pub fn reversed(&self) -> Self {
        IndexVector(self.0.iter().rev().copied().collect())
    }

    pub fn negated(&self) -> Self {
        IndexVector(self.0.iter().map(|p| -p).collect())
    }

    /// Concatenation, `self` first.
    pub fn concat(&self, rest: &[i64]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(rest);
        IndexVector(v)
    }

    /// Drop leading zero parts of a partition.
    pub fn trimmed(&self) -> Self {
        IndexVector(self.0.iter().copied().skip_while(|&p| p == 0).collect())
    }
}

impl Deref for IndexVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for IndexVector {
    fn from(v: Vec<i64>) -> Self {
        IndexVector(v)
    }
}

impl fmt::Debug for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Bialternant `|a_k^{j_l+l-1}| / |a_k^{l-1}|` for any `J` in `Z^n`.
pub fn gschur(j: &IndexVector, a: &Alphabet) -> Result<Rational> {
    let n = a.len();
    if j.len() != n {
        return Err(Error::Dimension(format!(
            "index of length {} for an alphabet of {n} letters",
            j.len()
        )));
    }
    let exps: Vec<i64> = j.iter().enumerate().map(|(l, &p)| p + l as i64).collect();
    if exps.iter().any(|&e| e < 0) {
        a.require_nonzero("a negative exponent")?;
    }
    let mut sorted = exps.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Rational::zero());
    }
    let letters = a.letters();
    let num = Matrix::try_from_fn(n, n, |l, k| letters[k].pow(exps[l]))?;
    num.det()?.checked_div(&vandermonde_delta(a))
}

/// Classical Schur function of a (weakly increasing) partition, padding
/// with leading zeros to the alphabet size; zero when the partition has more
/// nonzero parts than letters.
pub fn schur_partition(p: &IndexVector, a: &Alphabet) -> Result<Rational> {
    if !p.is_partition() {
        return Err(Error::Domain(format!("{p} is not a partition")));
    }
    let p = p.trimmed();
    let n = a.len();
    if p.len() > n {
        return Ok(Rational::zero());
    }
    let padded = IndexVector::zeros(n - p.len()).concat(&p);
    gschur(&padded, a)
}

/// Data of a multi-Schur determinant `|S_{j_k - i_l + k - l}(col_k)|`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSchurSpec {
    pub j: IndexVector,
    pub i: IndexVector,
    pub columns: Vec<DiffArgument>,
}

impl MultiSchurSpec {
    /// `I = 0^n`.
    pub fn new(j: IndexVector, columns: Vec<DiffArgument>) -> Self {
        let i = IndexVector::zeros(j.len());
        MultiSchurSpec { j, i, columns }
    }

    pub fn skew(j: IndexVector, i: IndexVector, columns: Vec<DiffArgument>) -> Self {
        MultiSchurSpec { j, i, columns }
    }

    /// Every column carrying the same argument.
    pub fn uniform(j: IndexVector, arg: &DiffArgument) -> Self {
        let columns = vec![arg.clone(); j.len()];
        MultiSchurSpec::new(j, columns)
    }

    fn validate(&self) -> Result<()> {
        let n = self.j.len();
        if self.i.len() != n || self.columns.len() != n {
            return Err(Error::Dimension(format!(
                "multi-Schur with |J|={n}, |I|={}, {} columns",
                self.i.len(),
                self.columns.len()
            )));
        }
        Ok(())
    }

    /// The matrix of complete functions; rows indexed by `l`, columns by `k`.
    pub fn matrix(&self) -> Result<Matrix<LaurentPoly>> {
        self.validate()?;
        let n = self.j.len();
        let index = |l: usize, k: usize| self.j[k] - self.i[l] + k as i64 - l as i64;
        let series: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|k| {
                let top = (0..n).map(|l| index(l, k)).max().unwrap_or(0).max(0);
                self.columns[k].series(top as usize)
            })
            .collect();
        Ok(Matrix::from_fn(n, n, |l, k| {
            let idx = index(l, k);
            if idx < 0 {
                LaurentPoly::zero()
            } else {
                series[k][idx as usize].clone()
            }
        }))
    }
}

pub fn multi_schur(spec: &MultiSchurSpec) -> Result<LaurentPoly> {
    spec.matrix()?.det()
}

/// Jacobi–Trudi value `|S_{j_k + k - l}(A)|` at a rational alphabet.
pub fn jacobi_trudi(j: &IndexVector, a: &Alphabet) -> Result<Rational> {
    let p = multi_schur(&MultiSchurSpec::uniform(
        j.clone(),
        &DiffArgument::alphabet(a),
    ))?;
    p.as_constant()
        .ok_or_else(|| Error::Inconsistent("symbol-free multi-Schur is not constant".into()))
}

/// Complement of the partition `I` in the box `m^n`:
/// `(m - i_n, ..., m - i_1)`.
pub fn box_complement(i: &IndexVector, m: i64, n: usize) -> Result<IndexVector> {
    if i.len() != n {
        return Err(Error::Dimension(format!(
            "partition of length {} in a box with {n} rows",
            i.len()
        )));
    }
    if !i.is_partition() {
        return Err(Error::Domain(format!("{i} is not a partition")));
    }
    if let Some(&p) = i.iter().find(|&&p| p > m) {
        return Err(Error::Domain(format!("part {p} exceeds the box width {m}")));
    }
    Ok(IndexVector(i.iter().rev().map(|&p| m - p).collect()))
}

/// Frobenius coordinates `(alpha | beta)`: arms and legs of the diagonal
/// hooks.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct FrobeniusCoords {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.alpha), join(&self.beta))
    }
}

/// Frobenius coordinates of a weakly increasing partition. The parts are
/// reversed into the decreasing form `λ` internally; then
/// `alpha_i = λ_i - i`, `beta_i = λ'_i - i` for `i = 1..r`, with `r` the
/// length of the diagonal.
pub fn frobenius(p: &IndexVector) -> Result<FrobeniusCoords> {
    if p.iter().any(|&x| x < 0) {
        return Err(Error::Domain(format!("{p} has a negative part")));
    }
    if !p.is_weakly_increasing() {
        return Err(Error::Domain(format!("{p} is not weakly increasing")));
    }
    let lambda: Vec<i64> = p.iter().rev().copied().filter(|&x| x > 0).collect();
    let conjugate = |c: i64| lambda.iter().filter(|&&x| x >= c).count() as i64;
    let rank = lambda
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x > i as i64)
        .count();
    let alpha = (0..rank).map(|i| lambda[i] - i as i64 - 1).collect();
    let beta = (0..rank)
        .map(|i| conjugate(i as i64 + 1) - i as i64 - 1)
        .collect();
    Ok(FrobeniusCoords { alpha, beta })
}

/// The hook `i & j = (1^j, i + 1)`.
pub fn hook_amp(i: i64, j: i64) -> Result<IndexVector> {
    if i < 0 || j < 0 {
        return Err(Error::Domain(format!(
            "hook {i} & {j} with a negative side"
        )));
    }
    let mut parts = vec![1; j as usize];
    parts.push(i + 1);
    Ok(IndexVector(parts))
}

/// Compact label in the usual notation: runs of three or more equal parts
/// become `v^c`; short all-digit labels are concatenated (`12`, `114`),
/// otherwise parts are comma separated (`1^4,4`).
pub fn partition_label(p: &IndexVector) -> String {
    let mut groups: Vec<(i64, usize)> = Vec::new();
    for &x in p.iter() {
        match groups.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    let powered = groups.iter().any(|&(_, c)| c >= 3);
    let small = p.iter().all(|&x| (0..10).contains(&x));
    if !powered && small {
        return p.iter().map(i64::to_string).collect();
    }
    let mut pieces = Vec::new();
    for (v, c) in groups {
        if c >= 3 {
            pieces.push(format!("{v}^{c}"));
        } else {
            pieces.extend(std::iter::repeat_n(v.to_string(), c));
        }
    }
    pieces.join(",")
}

/// `gschur` of the vector with `value` at position `pos` and zeros
/// elsewhere.
pub fn gschur_single(pos: usize, value: i64, a: &Alphabet) -> Result<Rational> {
    let mut parts = vec![0; a.len()];
    parts[pos] = value;
    gschur(&IndexVector(parts), a)
}

/// `true` when `gschur(j, a)` needs the dual of `a`, i.e. some exponent of
/// the numerator alternant is negative.
pub fn needs_negative_powers(j: &IndexVector) -> bool {
    j.iter().enumerate().any(|(l, &p)| p + (l as i64) < 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Generator;
    use crate::exact::rat;

    fn alpha(v: &[i64]) -> Alphabet {
        Alphabet::new(v.iter().map(|&p| Rational::from(p)).collect()).unwrap()
    }

    fn iv(v: &[i64]) -> IndexVector {
        IndexVector(v.to_vec())
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(gschur(&iv(&[-2]), &alpha(&[3])).unwrap(), rat(1, 9));
        assert_eq!(gschur(&iv(&[1, 1]), &alpha(&[1, 2])).unwrap(), rat(2, 1));
        assert_eq!(gschur(&iv(&[4, -2]), &alpha(&[1, 2])).unwrap(), rat(-31, 2));
        assert_eq!(gschur(&iv(&[]), &Alphabet::empty()).unwrap(), rat(1, 1));
    }

    #[test]
    fn negative_index_jacobi_trudi_vanishes() {
        // The determinant of complete functions for [4,-2] is zero even though
        // the bialternant is not.
        assert_eq!(
            jacobi_trudi(&iv(&[4, -2]), &alpha(&[1, 2])).unwrap(),
            rat(0, 1)
        );
    }

    #[test]
    fn bialternant_errors() {
        assert!(matches!(
            gschur(&iv(&[1]), &alpha(&[1, 2])),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            gschur(&iv(&[-1, 0]), &alpha(&[0, 2])),
            Err(Error::Pole(_))
        ));
        // Collision [1,0]: exponents 1 and 1.
        assert_eq!(gschur(&iv(&[1, 0]), &alpha(&[0, 2])).unwrap(), rat(0, 1));
    }

    #[test]
    fn multi_schur_examples() {
        let a = alpha(&[1, 2]);
        let a_minus_x = DiffArgument::alphabet(&a).with_minus(Generator::X);
        let spec = MultiSchurSpec::new(iv(&[1, 2]), vec![a_minus_x, DiffArgument::alphabet(&a)]);
        let expected = LaurentPoly::from_terms([(0, rat(6, 1)), (1, rat(-7, 1))]);
        assert_eq!(multi_schur(&spec).unwrap(), expected);

        let single = MultiSchurSpec::new(iv(&[3]), vec![DiffArgument::alphabet(&a)]);
        assert_eq!(
            multi_schur(&single).unwrap(),
            LaurentPoly::constant(rat(15, 1))
        );

        assert_eq!(jacobi_trudi(&iv(&[1, 1]), &a).unwrap(), rat(2, 1));

        let bad = MultiSchurSpec::new(iv(&[1, 2]), vec![DiffArgument::alphabet(&a)]);
        assert!(matches!(multi_schur(&bad), Err(Error::Dimension(_))));
    }

    #[test]
    fn complements() {
        assert_eq!(
            box_complement(&iv(&[0, 0, 0]), 4, 3).unwrap(),
            iv(&[4, 4, 4])
        );
        assert_eq!(box_complement(&iv(&[1, 2]), 3, 2).unwrap(), iv(&[1, 2]));
        assert_eq!(box_complement(&iv(&[0, 3]), 3, 2).unwrap(), iv(&[0, 3]));
        assert!(matches!(
            box_complement(&iv(&[1, 4]), 3, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let f = frobenius(&iv(&[2, 3, 4])).unwrap();
        assert_eq!(
            (f.alpha.as_slice(), f.beta.as_slice(), f.rank()),
            (&[3, 1][..], &[2, 1][..], 2)
        );
        let f = frobenius(&iv(&[1, 3, 4])).unwrap();
        assert_eq!(
            (f.alpha.as_slice(), f.beta.as_slice()),
            (&[3, 1][..], &[2, 0][..])
        );
        assert_eq!(frobenius(&iv(&[])).unwrap().rank(), 0);
        assert_eq!(frobenius(&iv(&[0, 0])).unwrap().rank(), 0);
        assert!(matches!(frobenius(&iv(&[-1, 2])), Err(Error::Domain(_))));
        assert_eq!(f.to_string(), "(3,1|2,0)");
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_amp(3, 4).unwrap(), iv(&[1, 1, 1, 1, 4]));
        assert_eq!(hook_amp(0, 0).unwrap(), iv(&[1]));
        assert_eq!(hook_amp(1, 1).unwrap(), iv(&[1, 2]));
        assert!(hook_amp(-1, 0).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(partition_label(&iv(&[1, 2])), "12");
        assert_eq!(partition_label(&iv(&[1, 1, 4])), "114");
        assert_eq!(partition_label(&iv(&[1, 1, 1, 1, 4])), "1^4,4");
        assert_eq!(partition_label(&iv(&[4])), "4");
        assert_eq!(partition_label(&iv(&[2, 12])), "2,12");
    }

    #[test]
    fn partition_longer_than_alphabet_vanishes() {
        assert_eq!(
            schur_partition(&iv(&[1, 1, 1]), &alpha(&[1, 2])).unwrap(),
            rat(0, 1)
        );
        assert_eq!(
            schur_partition(&iv(&[0, 0, 2]), &alpha(&[1, 2])).unwrap(),
            rat(7, 1)
        );
    }
}
