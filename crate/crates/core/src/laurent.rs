//! Laurent polynomials in one symbol `x` over the rationals.
//!
//! Ordinary polynomials are the Laurent polynomials of valuation at least
//! zero. Euclidean division is only defined for those; remainders of general
//! Laurent polynomials modulo a root polynomial are characterized by
//! interpolation on the root set, see [`remainder_via_interpolation`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::exact::{Rational, Ring};

/// Sparse Laurent polynomial: degree -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, degree: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        LaurentPoly { coeffs }
    }

    /// The symbol `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `x^d` for any integer `d`.
    pub fn x_pow(d: i64) -> Self {
        Self::monomial(Rational::one(), d)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (d, c) in terms {
            p.add_term(d, &c);
        }
        p
    }

    /// Ordinary polynomial from ascending coefficients `c0 + c1 x + ...`.
    pub fn from_dense(coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(d, c)| (d as i64, c)),
        )
    }

    fn add_term(&mut self, degree: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: i64) -> Rational {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest degree, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest degree, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) if self.valuation() == Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, c * s)).collect(),
        }
    }

    /// Multiply by `x^by`.
    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + by, c.clone()))
                .collect(),
        }
    }

    /// Value at `t`; negative powers of zero are a pole.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_zero() && self.valuation().is_some_and(|v| v < 0) {
            return Err(Error::Pole("evaluating negative powers of x at 0".into()));
        }
        let mut acc = Rational::zero();
        for (&d, c) in &self.coeffs {
            acc += &(c * t.pow(d)?);
        }
        Ok(acc)
    }

    /// Ascending coefficients `c0..=c_{len-1}` of an ordinary polynomial.
    pub fn to_dense(&self, len: usize) -> Result<Vec<Rational>> {
        if !self.is_polynomial() {
            return Err(Error::Domain(
                "negative powers of x in an ordinary polynomial".into(),
            ));
        }
        if self.degree().is_some_and(|d| d as usize >= len) {
            return Err(Error::Dimension(format!(
                "degree {} does not fit {len} coefficients",
                self.degree().unwrap()
            )));
        }
        Ok((0..len as i64).map(|d| self.coeff(d)).collect())
    }

    /// The monic polynomial `prod (x - a)` over the letters of `a`.
    pub fn root_polynomial(a: &Alphabet) -> Self {
        a.letters().iter().fold(LaurentPoly::one(), |acc, l| {
            acc * (LaurentPoly::x() - LaurentPoly::constant(l.clone()))
        })
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }
}

impl Ring for LaurentPoly {}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(d, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(d, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &rhs.coeffs {
                out.add_term(d1 + d2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                $tr::$m(&self, rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if d == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// JSON form: {"<degree>": "<rational>", ...} in ascending degree order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (d, c) in &self.coeffs {
            map.serialize_entry(&d.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping degree strings to rational strings")
            }

            fn visit_map<M: MapAccess<'de>>(
                self,
                mut access: M,
            ) -> std::result::Result<LaurentPoly, M::Error> {
                use serde::de::Error as _;
                let mut seen = std::collections::BTreeSet::new();
                let mut p = LaurentPoly::zero();
                while let Some((key, value)) = access.next_entry::<String, String>()? {
                    let d: i64 = crate::parse::parse_integer_token(&key)
                        .map_err(|e| M::Error::custom(format!("degree {key:?}: {e}")))?;
                    if !seen.insert(d) {
                        return Err(M::Error::custom(format!("duplicate degree {d}")));
                    }
                    let c: Rational = value
                        .parse()
                        .map_err(|e| M::Error::custom(format!("coefficient {value:?}: {e}")))?;
                    p.add_term(d, &c);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

/// Euclidean division of ordinary polynomials: `f = q*g + r`, `deg r < deg g`.
pub fn poly_divmod(f: &LaurentPoly, g: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !f.is_polynomial() || !g.is_polynomial() {
        return Err(Error::Domain(
            "poly_divmod needs ordinary polynomials".into(),
        ));
    }
    let dg = g.degree().unwrap();
    let lead = g.leading_coeff().unwrap().clone();
    let mut q = LaurentPoly::zero();
    let mut r = f.clone();
    while let Some(dr) = r.degree() {
        if dr < dg {
            break;
        }
        let c = r.leading_coeff().unwrap() / &lead;
        let t = LaurentPoly::monomial(c, dr - dg);
        r = &r - &(&t * g);
        q = &q + &t;
    }
    Ok((q, r))
}

/// Split `f` into its part in nonnegative degrees and its part in negative
/// degrees, so that `f = f1(x) + f2(1/x)` with `f2(0) = 0`.
pub fn laurent_split(f: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let (neg, nonneg): (BTreeMap<_, _>, BTreeMap<_, _>) = f
        .coeffs
        .iter()
        .map(|(&d, c)| (d, c.clone()))
        .partition(|(d, _)| *d < 0);
    (LaurentPoly { coeffs: nonneg }, LaurentPoly { coeffs: neg })
}

/// Interpolation data with pairwise distinct nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct PointValueSet {
    points: Vec<(Rational, Rational)>,
}

impl PointValueSet {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        for (i, (a, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::Domain(format!("duplicate interpolation node {a}")));
            }
        }
        Ok(PointValueSet { points })
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The unique polynomial of degree `< |pv|` through every point, built from
/// Newton divided differences.
pub fn lagrange_interpolate(pv: &PointValueSet) -> Result<LaurentPoly> {
    if pv.is_empty() {
        return Err(Error::Domain(
            "interpolation needs at least one point".into(),
        ));
    }
    let nodes: Vec<&Rational> = pv.points.iter().map(|(a, _)| a).collect();
    let mut dd: Vec<Rational> = pv.points.iter().map(|(_, v)| v.clone()).collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = nodes[i] - nodes[i - level];
            dd[i] = num.checked_div(&den)?;
        }
    }
    let mut p = LaurentPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = LaurentPoly::x() - LaurentPoly::constant(nodes[i].clone());
        p = &(&p * &factor) + &LaurentPoly::constant(dd[i].clone());
    }
    Ok(p)
}

/// Remainder of `f` modulo `prod (x - a)`: the polynomial of degree `< |A|`
/// agreeing with `f` on every letter.
pub fn remainder_via_interpolation(f: &LaurentPoly, a: &Alphabet) -> Result<LaurentPoly> {
    if a.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    let points = a
        .letters()
        .iter()
        .map(|l| Ok((l.clone(), f.eval(l)?)))
        .collect::<Result<Vec<_>>>()?;
    lagrange_interpolate(&PointValueSet::new(points)?)
}
