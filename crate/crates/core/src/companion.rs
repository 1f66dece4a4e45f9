//! Double companion matrices and the generalized Giambelli determinants.
//!
//! Column `k` of the double companion matrix holds the coefficients of
//! `x^k mod R(x, A)` in the basis `1, x, ..., x^{n-1}`, for every `k` in `Z`.
//! Its `n x n` minors on columns `j_1 + 0, j_2 + 1, ...` give the bialternant
//! `gschur(J, A)` as a determinant of single-row Schur values.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::alphabet::{dual, Alphabet};
use crate::division::remainder_x_pow;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::laurent::LaurentPoly;
use crate::schur::{
    frobenius, gschur_single, hook_amp, partition_label, schur_partition, FrobeniusCoords,
    IndexVector,
};

/// Finite window `kmin..=kmax` of column indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnRange {
    kmin: i64,
    kmax: i64,
}

impl ColumnRange {
    pub fn new(kmin: i64, kmax: i64) -> Result<Self> {
        if kmin > kmax {
            return Err(Error::Domain(format!("empty column range {kmin}..{kmax}")));
        }
        Ok(ColumnRange { kmin, kmax })
    }

    pub fn kmin(&self) -> i64 {
        self.kmin
    }

    pub fn kmax(&self) -> i64 {
        self.kmax
    }

    /// Number of columns; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.kmax - self.kmin + 1) as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.kmin..=self.kmax
    }
}

/// Coefficients of `x^k mod R(x, A)` from the determinantal remainder.
pub fn companion_column_by_remainder(k: i64, a: &Alphabet) -> Result<Vec<Rational>> {
    remainder_x_pow(k, a)?.to_dense(a.len())
}

/// Coefficient `l - 1` of the same column as the bialternant with the single
/// nonzero part `k - l + 1` in position `l`.
pub fn companion_column_by_bialternant(k: i64, a: &Alphabet) -> Result<Vec<Rational>> {
    (0..a.len())
        .map(|l| gschur_single(l, k - l as i64, a))
        .collect()
}

/// Column `k`, built both ways; disagreement is an internal error.
pub fn companion_column(k: i64, a: &Alphabet) -> Result<Vec<Rational>> {
    if k < 0 {
        a.require_nonzero("a negative column")?;
    }
    let by_remainder = companion_column_by_remainder(k, a)?;
    let by_bialternant = companion_column_by_bialternant(k, a)?;
    if by_remainder != by_bialternant {
        return Err(Error::Inconsistent(format!(
            "column {k} of the double companion matrix: remainder gives {by_remainder:?}, \
             bialternant gives {by_bialternant:?}"
        )));
    }
    Ok(by_remainder)
}

/// `n x |range|` window of the double companion matrix.
pub fn double_companion(a: &Alphabet, range: ColumnRange) -> Result<Matrix<Rational>> {
    let n = a.len();
    let columns = range
        .iter()
        .map(|k| companion_column(k, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(n, range.len(), |l, c| {
        columns[c][l].clone()
    }))
}

/// Submatrix on columns `i_1 + 0, i_2 + 1, ..., i_n + n - 1`. Any integer
/// index vector is accepted.
pub fn companion_submatrix(a: &Alphabet, i: &IndexVector) -> Result<Matrix<Rational>> {
    let n = a.len();
    if i.len() != n {
        return Err(Error::Dimension(format!(
            "index of length {} for {n} letters",
            i.len()
        )));
    }
    let columns = i
        .iter()
        .enumerate()
        .map(|(k, &p)| companion_column(p + k as i64, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(n, n, |l, c| columns[c][l].clone()))
}

/// Entry `(i, k) = a_i^k` over the window.
pub fn double_vandermonde(a: &Alphabet, range: ColumnRange) -> Result<Matrix<Rational>> {
    if range.kmin() < 0 {
        a.require_nonzero("negative powers")?;
    }
    let letters = a.letters();
    Matrix::try_from_fn(a.len(), range.len(), |i, c| {
        letters[i].pow(range.kmin() + c as i64)
    })
}

/// The finite Vandermonde matrix `V_0(A)`, columns `0..n`.
pub fn vandermonde(a: &Alphabet) -> Matrix<Rational> {
    let letters = a.letters();
    Matrix::from_fn(a.len(), a.len(), |i, k| {
        letters[i].pow(k as i64).expect("nonnegative power")
    })
}

/// Minor of the double Vandermonde matrix on columns `j_k + k - 1`, i.e. the
/// numerator alternant of `gschur(J, A)` with rows and columns swapped.
pub fn vandermonde_minor(a: &Alphabet, j: &IndexVector) -> Result<Rational> {
    let letters = a.letters();
    let exps: Vec<i64> = j.iter().enumerate().map(|(k, &p)| p + k as i64).collect();
    if exps.iter().any(|&e| e < 0) {
        a.require_nonzero("negative powers")?;
    }
    Matrix::try_from_fn(a.len(), exps.len(), |i, k| letters[i].pow(exps[k]))?.det()
}

/// Giambelli-type matrix with entry `(l, k)` equal to the bialternant with
/// the single part `j_k + k - l` in position `l`; its determinant is
/// `gschur(J, A)`.
pub fn giambelli_general(j: &IndexVector, a: &Alphabet) -> Result<(Matrix<Rational>, Rational)> {
    let n = a.len();
    if j.len() != n {
        return Err(Error::Dimension(format!(
            "index of length {} for {n} letters",
            j.len()
        )));
    }
    let m = Matrix::try_from_fn(n, n, |l, k| gschur_single(l, j[k] + k as i64 - l as i64, a))?;
    let value = m.det()?;
    Ok((m, value))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Block {
    P,
    Q,
    M,
    N,
}

/// Which alphabet a hook entry is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphabetTag {
    Primal,
    Dual,
}

/// Symbolic description of one block entry: `S_partition(A)` or
/// `S_partition(A^v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookLabel {
    pub block: Block,
    pub partition: IndexVector,
    pub alphabet: AlphabetTag,
}

impl HookLabel {
    pub fn latex(&self) -> String {
        let alph = match self.alphabet {
            AlphabetTag::Primal => "A",
            AlphabetTag::Dual => "A^{\\vee}",
        };
        format!("S_{{{}}}({alph})", partition_label(&self.partition))
    }
}

impl fmt::Display for HookLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alph = match self.alphabet {
            AlphabetTag::Primal => "A",
            AlphabetTag::Dual => "A^v",
        };
        write!(f, "S_{{{}}}({alph})", partition_label(&self.partition))
    }
}

/// The four blocks of the hook determinant, with labels for the assembled
/// matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GiambelliBlocks {
    /// Frobenius coordinates of the reversed, negated negative part.
    pub negative_hooks: FrobeniusCoords,
    /// Frobenius coordinates of the nonnegative part.
    pub nonnegative_hooks: FrobeniusCoords,
    pub p: Matrix<Rational>,
    pub q: Matrix<Rational>,
    pub m: Matrix<Rational>,
    pub n: Matrix<Rational>,
    pub labels: Matrix<HookLabel>,
}

impl GiambelliBlocks {
    /// `[[P, Q], [M, N]]`.
    pub fn assembled(&self) -> Matrix<Rational> {
        let r1 = self.p.rows();
        let size = r1 + self.n.rows();
        Matrix::from_fn(size, size, |i, j| match (i < r1, j < r1) {
            (true, true) => self.p[(i, j)].clone(),
            (true, false) => self.q[(i, j - r1)].clone(),
            (false, true) => self.m[(i - r1, j)].clone(),
            (false, false) => self.n[(i - r1, j - r1)].clone(),
        })
    }
}

/// Hook determinant for weakly increasing `J`.
///
/// The negative part `J_1` contributes `(alpha | beta)`, the Frobenius
/// coordinates of `-J_1` reversed; the nonnegative part `J_2` (zeros
/// included) contributes `(gamma | delta)`. With `r1`, `r2` the two ranks,
/// indices below are 1-based:
///
/// * `P[i][j] = S_{alpha_{r1+1-j} & beta_{r1+1-i}}(A^v)`
/// * `Q[i][j] = S_{gamma_j & (n-1-beta_{r1+1-i})}(A)`
/// * `M[i][j] = S_{alpha_{r1+1-j} & (n-1-delta_i)}(A^v)`
/// * `N[i][j] = S_{gamma_j & delta_i}(A)`
pub fn giambelli_block(j: &IndexVector, a: &Alphabet) -> Result<(GiambelliBlocks, Rational)> {
    let n = a.len();
    if j.len() != n {
        return Err(Error::Dimension(format!(
            "index of length {} for {n} letters",
            j.len()
        )));
    }
    if !j.is_weakly_increasing() {
        return Err(Error::Domain(format!("{j} is not weakly increasing")));
    }
    let split = j.iter().take_while(|&&p| p < 0).count();
    let negative = IndexVector::new(j[..split].to_vec()).reversed().negated();
    let nonnegative = IndexVector::new(j[split..].to_vec());
    let neg = frobenius(&negative)?;
    let pos = frobenius(&nonnegative)?;
    let (r1, r2) = (neg.rank(), pos.rank());
    let ad = if r1 > 0 { Some(dual(a)?) } else { None };
    let n1 = n as i64 - 1;

    let label = |block: Block, arm: i64, leg: i64| -> Result<HookLabel> {
        let alphabet = match block {
            Block::P | Block::M => AlphabetTag::Dual,
            Block::Q | Block::N => AlphabetTag::Primal,
        };
        Ok(HookLabel {
            block,
            partition: hook_amp(arm, leg)?,
            alphabet,
        })
    };
    let value = |l: &HookLabel| -> Result<Rational> {
        match l.alphabet {
            AlphabetTag::Primal => schur_partition(&l.partition, a),
            AlphabetTag::Dual => schur_partition(&l.partition, ad.as_ref().expect("dual alphabet")),
        }
    };

    let size = r1 + r2;
    let labels = Matrix::try_from_fn(size, size, |row, col| match (row < r1, col < r1) {
        (true, true) => label(Block::P, neg.alpha[r1 - 1 - col], neg.beta[r1 - 1 - row]),
        (true, false) => label(Block::Q, pos.alpha[col - r1], n1 - neg.beta[r1 - 1 - row]),
        (false, true) => label(Block::M, neg.alpha[r1 - 1 - col], n1 - pos.beta[row - r1]),
        (false, false) => label(Block::N, pos.alpha[col - r1], pos.beta[row - r1]),
    })?;
    let values = Matrix::try_from_fn(size, size, |row, col| value(&labels[(row, col)]))?;
    let sub = |r0: usize, rn: usize, c0: usize, cn: usize| {
        Matrix::from_fn(rn, cn, |i, k| values[(r0 + i, c0 + k)].clone())
    };
    let blocks = GiambelliBlocks {
        p: sub(0, r1, 0, r1),
        q: sub(0, r1, r1, r2),
        m: sub(r1, r2, 0, r1),
        n: sub(r1, r2, r1, r2),
        negative_hooks: neg,
        nonnegative_hooks: pos,
        labels,
    };
    let det = values.det()?;
    Ok((blocks, det))
}

/// Linear recurrent sequence with characteristic polynomial `R(x, A)`, given
/// by a window of consecutive terms starting at index `base`.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrentSeq {
    window: Vec<Rational>,
    base: i64,
    alphabet: Alphabet,
    /// `R(x, A) = sum c_i x^i`, ascending, `c_n = 1`.
    charpoly: Vec<Rational>,
}

impl RecurrentSeq {
    /// The window must hold at least `n` terms and satisfy the recurrence
    /// wherever it overlaps itself.
    pub fn new(window: Vec<Rational>, base: i64, alphabet: Alphabet) -> Result<Self> {
        let n = alphabet.len();
        if window.len() < n {
            return Err(Error::Domain(format!(
                "{} seed terms for a recurrence of order {n}",
                window.len()
            )));
        }
        let charpoly = LaurentPoly::root_polynomial(&alphabet).to_dense(n + 1)?;
        let seq = RecurrentSeq {
            window,
            base,
            alphabet,
            charpoly,
        };
        for start in 0..seq.window.len() - n {
            let predicted = seq.forward_step(&seq.window[start..start + n]);
            if predicted != seq.window[start + n] {
                return Err(Error::Domain(format!(
                    "seed term at index {} is {}, the recurrence gives {predicted}",
                    base + (start + n) as i64,
                    seq.window[start + n]
                )));
            }
        }
        Ok(seq)
    }

    /// `T_m = a^m` for one letter `a`.
    pub fn geometric(ratio: &Rational, alphabet: Alphabet, base: i64) -> Result<Self> {
        let n = alphabet.len();
        let window = (0..2 * n.max(1))
            .map(|i| ratio.pow(base + i as i64))
            .collect::<Result<Vec<_>>>()?;
        RecurrentSeq::new(window, base, alphabet)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn window(&self) -> &[Rational] {
        &self.window
    }

    fn order(&self) -> usize {
        self.alphabet.len()
    }

    /// Next term after `n` consecutive ones.
    fn forward_step(&self, prev: &[Rational]) -> Rational {
        -prev
            .iter()
            .zip(&self.charpoly)
            .map(|(t, c)| t * c)
            .sum::<Rational>()
    }

    /// Term before `n` consecutive ones.
    fn backward_step(&self, next: &[Rational]) -> Result<Rational> {
        let s: Rational = next
            .iter()
            .zip(&self.charpoly[1..])
            .map(|(t, c)| t * c)
            .sum();
        (-s).checked_div(&self.charpoly[0])
            .map_err(|_| Error::Pole("backward extension with a zero root".into()))
    }

    /// `T_m` for any integer `m`.
    pub fn term(&self, m: i64) -> Result<Rational> {
        let n = self.order();
        let offset = m - self.base;
        if offset >= 0 && (offset as usize) < self.window.len() {
            return Ok(self.window[offset as usize].clone());
        }
        if n == 0 {
            // Characteristic polynomial 1: the sequence is identically zero.
            return Ok(Rational::zero());
        }
        if offset >= 0 {
            let mut tail: Vec<Rational> = self.window[self.window.len() - n..].to_vec();
            let mut idx = self.base + self.window.len() as i64 - 1;
            while idx < m {
                let next = self.forward_step(&tail);
                tail.remove(0);
                tail.push(next);
                idx += 1;
            }
            Ok(tail[n - 1].clone())
        } else {
            let mut head: Vec<Rational> = self.window[..n].to_vec();
            let mut idx = self.base;
            while idx > m {
                let prev = self.backward_step(&head)?;
                head.pop();
                head.insert(0, prev);
                idx -= 1;
            }
            Ok(head[0].clone())
        }
    }
}

pub fn recur_extend(seq: &RecurrentSeq, m: i64) -> Result<Rational> {
    seq.term(m)
}

/// `|T^{(k)}_{j_l + l - 1}| / |T^{(k)}_{l - 1}|` over `n` sequences sharing
/// the root set; equals `gschur(J, A)`.
pub fn houmu_ratio(seqs: &[RecurrentSeq], j: &IndexVector) -> Result<Rational> {
    let n = seqs.len();
    if j.len() != n {
        return Err(Error::Dimension(format!(
            "{n} sequences for an index of length {}",
            j.len()
        )));
    }
    let Some(first) = seqs.first() else {
        return Ok(Rational::one());
    };
    if first.alphabet.len() != n || seqs.iter().any(|s| s.alphabet != first.alphabet) {
        return Err(Error::Domain(
            "sequences must share one root set of size n".into(),
        ));
    }
    let den = Matrix::try_from_fn(n, n, |k, l| seqs[k].term(l as i64))?.det()?;
    if den.is_zero() {
        return Err(Error::Degenerate(
            "seed sequences are linearly dependent".into(),
        ));
    }
    let num = Matrix::try_from_fn(n, n, |k, l| seqs[k].term(j[l] + l as i64))?.det()?;
    num.checked_div(&den)
}
