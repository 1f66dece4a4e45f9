//! Alphabets of distinct rational letters and complete symmetric functions
//! of formal alphabet differences.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::laurent::LaurentPoly;

/// Ordered list of pairwise distinct rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Alphabet {
    letters: Vec<Rational>,
}

impl Alphabet {
    pub fn new(letters: Vec<Rational>) -> Result<Self> {
        for (i, a) in letters.iter().enumerate() {
            if letters[..i].contains(a) {
                return Err(Error::Domain(format!("repeated letter {a}")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn empty() -> Self {
        Alphabet::default()
    }

    pub fn letters(&self) -> &[Rational] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains_zero(&self) -> bool {
        self.letters.iter().any(Zero::is_zero)
    }

    /// Errors with a pole unless every letter is nonzero.
    pub fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.contains_zero() {
            return Err(Error::Pole(format!("{what} needs nonzero letters")));
        }
        Ok(())
    }

    /// The alphabet with letter `i` removed, order preserved.
    pub fn without(&self, i: usize) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.remove(i);
        Alphabet { letters }
    }

    /// Letters reordered by `perm` (a permutation of `0..len`).
    pub fn permuted(&self, perm: &[usize]) -> Alphabet {
        Alphabet {
            letters: perm.iter().map(|&i| self.letters[i].clone()).collect(),
        }
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let letters = Vec::<Rational>::deserialize(d)?;
        Alphabet::new(letters).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.letters).finish()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Reciprocal alphabet `{1/a}`.
pub fn dual(a: &Alphabet) -> Result<Alphabet> {
    a.require_nonzero("the dual alphabet")?;
    Ok(Alphabet {
        letters: a.letters.iter().map(|l| l.recip()).collect::<Result<_>>()?,
    })
}

/// Product of all letters; 1 for the empty alphabet.
pub fn prod_u(a: &Alphabet) -> Rational {
    a.letters.iter().cloned().product()
}

/// `prod (a - b)` over `a` in `A`, `b` in `B`.
pub fn resultant(a: &Alphabet, b: &Alphabet) -> Rational {
    a.letters
        .iter()
        .flat_map(|x| b.letters.iter().map(move |y| x - y))
        .product()
}

/// `prod_{i<j} (a_j - a_i)`, the Vandermonde determinant `|a_k^{l-1}|`.
pub fn vandermonde_delta(a: &Alphabet) -> Rational {
    let l = &a.letters;
    let mut acc = Rational::one();
    for j in 0..l.len() {
        for i in 0..j {
            acc *= &(&l[j] - &l[i]);
        }
    }
    acc
}

/// One generator of a formal alphabet: a rational letter or the symbol
/// `x` / `x^-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Scalar(Rational),
    X,
    XInv,
}

impl Generator {
    pub fn as_poly(&self) -> LaurentPoly {
        match self {
            Generator::Scalar(c) => LaurentPoly::constant(c.clone()),
            Generator::X => LaurentPoly::x(),
            Generator::XInv => LaurentPoly::x_pow(-1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Scalar(c) => write!(f, "{c}"),
            Generator::X => write!(f, "x"),
            Generator::XInv => write!(f, "x^-1"),
        }
    }
}

/// Formal difference `plus - minus` of two generator multisets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DiffArgument {
    pub plus: Vec<Generator>,
    pub minus: Vec<Generator>,
}

impl DiffArgument {
    pub fn new(plus: Vec<Generator>, minus: Vec<Generator>) -> Self {
        DiffArgument { plus, minus }
    }

    /// `A - B` for rational alphabets.
    pub fn of(a: &Alphabet, b: &Alphabet) -> Self {
        DiffArgument {
            plus: scalars(a),
            minus: scalars(b),
        }
    }

    /// The alphabet `A` itself.
    pub fn alphabet(a: &Alphabet) -> Self {
        DiffArgument::of(a, &Alphabet::empty())
    }

    pub fn with_plus(mut self, g: Generator) -> Self {
        self.plus.push(g);
        self
    }

    pub fn with_minus(mut self, g: Generator) -> Self {
        self.minus.push(g);
        self
    }

    pub fn has_symbol(&self) -> bool {
        self.plus
            .iter()
            .chain(&self.minus)
            .any(|g| !matches!(g, Generator::Scalar(_)))
    }

    /// Coefficients `S^0 .. S^kmax` of the generating series
    /// `prod_{b in minus}(1 - b z) / prod_{a in plus}(1 - a z)`.
    pub fn series(&self, kmax: usize) -> Vec<LaurentPoly> {
        let mut c = vec![LaurentPoly::zero(); kmax + 1];
        c[0] = LaurentPoly::one();
        for g in &self.minus {
            let g = g.as_poly();
            for i in (1..=kmax).rev() {
                let t = &g * &c[i - 1];
                c[i] = &c[i] - &t;
            }
        }
        for g in &self.plus {
            let g = g.as_poly();
            for i in 1..=kmax {
                let t = &g * &c[i - 1];
                c[i] = &c[i] + &t;
            }
        }
        c
    }
}

fn scalars(a: &Alphabet) -> Vec<Generator> {
    a.letters.iter().cloned().map(Generator::Scalar).collect()
}

impl fmt::Display for DiffArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |gs: &[Generator]| {
            gs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}) - ({})", side(&self.plus), side(&self.minus))
    }
}

/// Complete symmetric function `S^k(arg)`; zero for negative `k`.
pub fn complete_sym(k: i64, arg: &DiffArgument) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    arg.series(k as usize).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn alpha(v: &[(i64, i64)]) -> Alphabet {
        Alphabet::new(v.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn repeated_letters_rejected() {
        assert!(matches!(
            Alphabet::new(vec![rat(1, 2), rat(2, 4)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual(&alpha(&[(1, 1), (2, 1)])).unwrap(),
            alpha(&[(1, 1), (1, 2)])
        );
        assert_eq!(dual(&Alphabet::empty()).unwrap(), Alphabet::empty());
        let a = alpha(&[(2, 3), (-5, 1)]);
        assert_eq!(dual(&dual(&a).unwrap()).unwrap(), a);
        assert!(matches!(dual(&alpha(&[(0, 1)])), Err(Error::Pole(_))));
    }

    #[test]
    fn products() {
        assert_eq!(prod_u(&alpha(&[(1, 1), (2, 1)])), rat(2, 1));
        assert_eq!(prod_u(&Alphabet::empty()), rat(1, 1));
        assert_eq!(prod_u(&alpha(&[(3, 1), (-1, 3)])), rat(-1, 1));

        assert_eq!(
            resultant(&alpha(&[(1, 1), (2, 1)]), &alpha(&[(3, 1)])),
            rat(2, 1)
        );
        assert_eq!(
            resultant(&alpha(&[(1, 1), (2, 1)]), &alpha(&[(2, 1)])),
            rat(0, 1)
        );
        assert_eq!(resultant(&alpha(&[(1, 1)]), &Alphabet::empty()), rat(1, 1));

        assert_eq!(vandermonde_delta(&alpha(&[(1, 1), (2, 1)])), rat(1, 1));
        assert_eq!(
            vandermonde_delta(&alpha(&[(1, 1), (2, 1), (4, 1)])),
            rat(6, 1)
        );
        assert_eq!(vandermonde_delta(&alpha(&[(7, 1)])), rat(1, 1));
    }

    #[test]
    fn complete_functions() {
        let ab = DiffArgument::of(&alpha(&[(1, 1), (2, 1)]), &alpha(&[(3, 1)]));
        assert_eq!(complete_sym(2, &ab), LaurentPoly::constant(rat(-2, 1)));
        assert_eq!(complete_sym(3, &ab), LaurentPoly::constant(rat(-6, 1)));
        assert_eq!(complete_sym(0, &ab), LaurentPoly::one());
        assert!(complete_sym(-1, &ab).is_zero());

        let x3 = DiffArgument::new(vec![Generator::X], vec![Generator::Scalar(rat(3, 1))]);
        let expected = LaurentPoly::from_terms([(2, rat(1, 1)), (1, rat(-3, 1))]);
        assert_eq!(complete_sym(2, &x3), expected);

        let a = alpha(&[(5, 2), (-1, 3)]);
        let cancel = DiffArgument::of(&a, &a);
        assert_eq!(complete_sym(0, &cancel), LaurentPoly::one());
        for k in 1..6 {
            assert!(complete_sym(k, &cancel).is_zero());
        }
    }

    #[test]
    fn root_polynomial_identification() {
        let b = alpha(&[(1, 1), (-2, 3), (4, 1)]);
        let arg = DiffArgument::new(vec![Generator::X], scalars(&b));
        assert_eq!(complete_sym(3, &arg), LaurentPoly::root_polynomial(&b));
    }
}
