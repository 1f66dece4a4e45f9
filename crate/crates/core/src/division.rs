//! Remainders modulo `R(x, A) = prod (x - a)` as Schur determinants.
//!
//! Every closed form here has an independent counterpart in
//! [`crate::laurent::remainder_via_interpolation`], which only uses the
//! characterization "degree below `n` and agreeing with `f` on `A`".

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::alphabet::{complete_sym, dual, prod_u, Alphabet, DiffArgument, Generator};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::laurent::{poly_divmod, LaurentPoly};
use crate::schur::{multi_schur, IndexVector, MultiSchurSpec};

type Rule = dyn Fn(&Rational, &Alphabet) -> Result<LaurentPoly> + Send + Sync;

/// A function `p(x_1; x_2, ..., x_n)` symmetric in its tail, evaluated at a
/// split `(a, A - a)` of an alphabet.
#[derive(Clone)]
pub struct TailSymmetricExpr {
    label: String,
    rule: Arc<Rule>,
}

impl TailSymmetricExpr {
    pub fn new(
        label: impl Into<String>,
        rule: impl Fn(&Rational, &Alphabet) -> Result<LaurentPoly> + Send + Sync + 'static,
    ) -> Self {
        TailSymmetricExpr {
            label: label.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, head: &Rational, tail: &Alphabet) -> Result<LaurentPoly> {
        (self.rule)(head, tail)
    }

    pub fn constant(c: Rational) -> Self {
        let label = format!("{c}");
        TailSymmetricExpr::new(label, move |_, _| Ok(LaurentPoly::constant(c.clone())))
    }

    /// `x_1^k`.
    pub fn head_power(k: i64) -> Self {
        TailSymmetricExpr::new(format!("x1^{k}"), move |h, _| {
            Ok(LaurentPoly::constant(h.pow(k)?))
        })
    }

    /// `S_k(x_1^{-1} - B)`.
    pub fn head_dual_complete(k: i64, b: Alphabet) -> Self {
        TailSymmetricExpr::new(format!("S_{k}(x1^-1 - B)"), move |h, _| {
            let arg = DiffArgument::of(&Alphabet::empty(), &b).with_plus(Generator::Scalar(
                h.recip()
                    .map_err(|_| Error::Pole("x1^-1 at a zero letter".into()))?,
            ));
            Ok(complete_sym(k, &arg))
        })
    }

    /// `r(x_1) * R(x, X - x_1)`, whose Lagrange image is `r` when
    /// `deg r < n`.
    pub fn reconstruction(r: LaurentPoly) -> Self {
        TailSymmetricExpr::new(format!("({r})(x1) * R(x, X - x1)"), move |h, tail| {
            Ok(LaurentPoly::root_polynomial(tail).scale(&r.eval(h)?))
        })
    }
}

impl fmt::Debug for TailSymmetricExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("TailSymmetricExpr")
            .field(&self.label)
            .finish()
    }
}

/// `L_A(p) = sum_a p(a, A - a) / R(a, A - a)`.
///
/// Symmetry of `p` in the tail is spot-checked by also evaluating on the
/// reversed tail.
pub fn lagrange_functional(p: &TailSymmetricExpr, a: &Alphabet) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (i, head) in a.letters().iter().enumerate() {
        let tail = a.without(i);
        let value = p.eval(head, &tail)?;
        if tail.len() >= 2 {
            let rev: Vec<usize> = (0..tail.len()).rev().collect();
            if p.eval(head, &tail.permuted(&rev))? != value {
                return Err(Error::Domain(format!(
                    "{} is not symmetric in x2..xn",
                    p.label()
                )));
            }
        }
        let denom: Rational = tail.letters().iter().map(|t| head - t).product();
        acc = acc + value.scale(&denom.recip()?);
    }
    Ok(acc)
}

fn sign(e: usize) -> Rational {
    Rational::sign_power(e as i64)
}

/// `(-1)^{n-1} x^{n-1} S_{1^{n-1}; top}(dual(A) - x^{-1}; dual(A) - B)`.
fn dual_hook_form(top: i64, a: &Alphabet, b: &Alphabet) -> Result<LaurentPoly> {
    let n = a.len();
    let ad = dual(a)?;
    let head = DiffArgument::alphabet(&ad).with_minus(Generator::XInv);
    let mut columns = vec![head; n - 1];
    columns.push(DiffArgument::of(&ad, b));
    let j = IndexVector::constant(1, n - 1).concat(&[top]);
    let det = multi_schur(&MultiSchurSpec::new(j, columns))?;
    Ok(det.shift(n as i64 - 1).scale(&sign(n - 1)))
}

/// Remainder of `x^k` modulo `R(x, A)` for any integer `k`.
///
/// For `k >= 0` this is `(-1)^{n-1} S_{1^{n-1}; k-n+1}(A - x; A)`; for
/// negative powers the dual form
/// `(-1)^{n-1} x^{n-1} S_{1^{n-1}; |k|}(A^v - x^{-1}; A^v)`.
pub fn remainder_x_pow(k: i64, a: &Alphabet) -> Result<LaurentPoly> {
    let n = a.len();
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    if k >= 0 {
        let head = DiffArgument::alphabet(a).with_minus(Generator::X);
        let mut columns = vec![head; n - 1];
        columns.push(DiffArgument::alphabet(a));
        let j = IndexVector::constant(1, n - 1).concat(&[k - n as i64 + 1]);
        let det = multi_schur(&MultiSchurSpec::new(j, columns))?;
        Ok(det.scale(&sign(n - 1)))
    } else {
        remainder_inverse_power_dual(-k, a)
    }
}

/// Remainder of `x^{-k}` as `S_{k^{n-1}}(A - x) u^{-k}`, `k >= 0`.
pub fn remainder_inverse_power_rectangular(k: i64, a: &Alphabet) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::Domain(format!("expected k >= 0, got {k}")));
    }
    let n = a.len();
    if n == 0 {
        return Ok(LaurentPoly::zero());
    }
    if k > 0 {
        a.require_nonzero("a negative power")?;
    }
    let arg = DiffArgument::alphabet(a).with_minus(Generator::X);
    let det = multi_schur(&MultiSchurSpec::uniform(
        IndexVector::constant(k, n - 1),
        &arg,
    ))?;
    Ok(det.scale(&prod_u(a).pow(-k)?))
}

/// Remainder of `x^{-k}` through the dual alphabet, `k >= 0`.
pub fn remainder_inverse_power_dual(k: i64, a: &Alphabet) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::Domain(format!("expected k >= 0, got {k}")));
    }
    if a.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    dual_hook_form(k, a, &Alphabet::empty())
}

/// Remainder of `R(x^{-1}, B) = prod_b (x^{-1} - b)` modulo `R(x, A)`.
pub fn remainder_dual_resultant(a: &Alphabet, b: &Alphabet) -> Result<LaurentPoly> {
    if a.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    dual_hook_form(b.len() as i64, a, b)
}

/// `R(x^{-1}, B)` as a Laurent polynomial.
pub fn dual_resultant_poly(b: &Alphabet) -> LaurentPoly {
    b.letters().iter().fold(LaurentPoly::one(), |acc, l| {
        acc * (LaurentPoly::x_pow(-1) - LaurentPoly::constant(l.clone()))
    })
}

/// Remainder of a Laurent polynomial, by linearity over its monomials.
pub fn remainder_laurent(f: &LaurentPoly, a: &Alphabet) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (d, c) in f.terms() {
        acc = acc + remainder_x_pow(d, a)?.scale(c);
    }
    Ok(acc)
}

/// The multi-Schur `S_{1^{n-r}; (m-n+r)^r}(A - x; A - B)`: index `1` on the
/// first `n - r` columns (argument `A - x`) and `m - n + r` on the last `r`
/// (argument `A - B`). It is proportional to the `r`-th remainder of
/// `S^m(x - B)` divided by `S^n(x - A)`.
pub fn remainder_multischur(r: usize, m: i64, a: &Alphabet, b: &Alphabet) -> Result<LaurentPoly> {
    let n = a.len();
    if n == 0 || r == 0 || r > n {
        return Err(Error::Domain(format!("need 1 <= r <= n, got r={r}, n={n}")));
    }
    if m < n as i64 {
        return Err(Error::Domain(format!("need m >= n, got m={m}, n={n}")));
    }
    let head = DiffArgument::alphabet(a).with_minus(Generator::X);
    let mut columns = vec![head; n - r];
    columns.extend(std::iter::repeat_n(DiffArgument::of(a, b), r));
    let j = IndexVector::constant(1, n - r).concat(&vec![m - n as i64 + r as i64; r]);
    multi_schur(&MultiSchurSpec::new(j, columns))
}

/// Remainder sequence of plain field division.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EuclidTrace {
    pub dividend: LaurentPoly,
    pub divisor: LaurentPoly,
    /// `r_1, r_2, ...`, ending with the first zero remainder.
    pub remainders: Vec<LaurentPoly>,
    pub quotients: Vec<LaurentPoly>,
}

impl EuclidTrace {
    /// Nonzero remainders only.
    pub fn nonzero_remainders(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.remainders.iter().filter(|r| !r.is_zero())
    }
}

/// `r_1 = f mod g`, `r_{i+1} = r_{i-1} mod r_i` with `r_0 = g`, until a zero
/// remainder. No normalization between steps.
pub fn euclid_remainders(f: &LaurentPoly, g: &LaurentPoly) -> Result<EuclidTrace> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut remainders = Vec::new();
    let mut quotients = Vec::new();
    let (mut prev, mut cur) = (f.clone(), g.clone());
    loop {
        let (q, r) = poly_divmod(&prev, &cur)?;
        quotients.push(q);
        remainders.push(r.clone());
        if r.is_zero() {
            break;
        }
        prev = cur;
        cur = r;
    }
    Ok(EuclidTrace {
        dividend: f.clone(),
        divisor: g.clone(),
        remainders,
        quotients,
    })
}

/// `s` with `p = s * q`, decided by cross-multiplying coefficients. `None`
/// when either side is zero or they are not proportional.
pub fn proportionality_scalar(p: &LaurentPoly, q: &LaurentPoly) -> Option<Rational> {
    if p.is_zero() || q.is_zero() {
        return None;
    }
    let degrees: std::collections::BTreeSet<i64> =
        p.terms().chain(q.terms()).map(|(d, _)| d).collect();
    let d0 = q.degree()?;
    let q0 = q.coeff(d0);
    let p0 = p.coeff(d0);
    for &d in &degrees {
        if p.coeff(d) * &q0 != &p0 * q.coeff(d) {
            return None;
        }
    }
    Some(p0 / q0)
}

/// One row of the comparison between the remainder sequence and the
/// multi-Schur closed form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EuclidComparison {
    pub r: usize,
    pub remainder: LaurentPoly,
    pub formula: LaurentPoly,
    /// `formula = scalar * remainder`; `None` if not proportional.
    pub scalar: Option<Rational>,
}

/// Divide `S^m(x - B)` by `S^n(x - A)` and compare each nonzero remainder
/// with [`remainder_multischur`].
pub fn euclid_comparison(
    m: i64,
    a: &Alphabet,
    b: &Alphabet,
) -> Result<(EuclidTrace, Vec<EuclidComparison>)> {
    let n = a.len();
    if n == 0 {
        return Err(Error::Domain("the divisor alphabet is empty".into()));
    }
    if m < n as i64 {
        return Err(Error::Domain(format!("need m >= n, got m={m}, n={n}")));
    }
    let x = Generator::X;
    let dividend = complete_sym(
        m,
        &DiffArgument::of(&Alphabet::empty(), b).with_plus(x.clone()),
    );
    let divisor = complete_sym(
        n as i64,
        &DiffArgument::of(&Alphabet::empty(), a).with_plus(x),
    );
    let trace = euclid_remainders(&dividend, &divisor)?;
    let mut rows = Vec::new();
    for (idx, rem) in trace.nonzero_remainders().enumerate() {
        let r = idx + 1;
        if r > n {
            break;
        }
        let formula = remainder_multischur(r, m, a, b)?;
        let scalar = proportionality_scalar(&formula, rem);
        rows.push(EuclidComparison {
            r,
            remainder: rem.clone(),
            formula,
            scalar,
        });
    }
    Ok((trace, rows))
}
