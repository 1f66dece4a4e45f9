//! Text grammar for command-line inputs.
//!
//! * rational: `[+-]?digits(/digits)?`
//! * alphabet: comma-separated rationals, e.g. `1,2,5/3,-4` (may be empty)
//! * index vector: `[j1,j2,...]` with signed integers
//! * alphabet difference: `(A) - (B)`, each side a list of rationals and the
//!   tokens `x` / `x^-1`; the `- (B)` part is optional
//! * column range: `kmin..kmax`
//! * Laurent polynomial: JSON object of degree strings to rational strings
//!
//! Errors carry the byte offset of the offending input.

use num_bigint::BigInt;

use crate::alphabet::{Alphabet, DiffArgument, Generator};
use crate::companion::ColumnRange;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::laurent::LaurentPoly;
use crate::schur::IndexVector;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, base: usize) -> Self {
        Cursor { text, pos: 0, base }
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.offset(), message))
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a digit");
        }
        Ok(&self.text[start..self.pos])
    }

    fn sign(&mut self) -> bool {
        if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let negative = self.sign();
        let start = self.offset();
        let digits = self.digits()?;
        let v: BigInt = digits
            .parse()
            .map_err(|_| Error::parse(start, "malformed integer"))?;
        Ok(if negative { -v } else { v })
    }

    fn small_integer(&mut self) -> Result<i64> {
        let start = self.offset();
        let v = self.integer()?;
        i64::try_from(v).map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let at = self.offset();
            let denom: BigInt = self
                .digits()?
                .parse()
                .map_err(|_| Error::parse(at, "malformed denominator"))?;
            if denom == BigInt::from(0) {
                return Err(Error::parse(at, "zero denominator"));
            }
            Rational::new(numer, denom)
        } else {
            Ok(Rational::from_integer(numer))
        }
    }
}

/// Parse one rational; `base` is added to reported offsets.
pub(crate) fn parse_rational_at(text: &str, base: usize) -> Result<Rational> {
    let mut c = Cursor::new(text, base);
    c.skip_ws();
    let r = c.rational()?;
    c.finish()?;
    Ok(r)
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    parse_rational_at(text, 0)
}

pub(crate) fn parse_integer_token(text: &str) -> Result<i64> {
    let mut c = Cursor::new(text, 0);
    let v = c.small_integer()?;
    c.finish()?;
    Ok(v)
}

/// `"[-4,-3,-2,1,3,4]"`; whitespace is allowed between tokens.
pub fn parse_index_vector(text: &str) -> Result<IndexVector> {
    let mut c = Cursor::new(text, 0);
    c.skip_ws();
    c.expect(b'[')?;
    c.skip_ws();
    let mut parts = Vec::new();
    if !c.eat(b']') {
        loop {
            c.skip_ws();
            parts.push(c.small_integer()?);
            c.skip_ws();
            if c.eat(b']') {
                break;
            }
            c.expect(b',')?;
        }
    }
    c.finish()?;
    Ok(IndexVector::new(parts))
}

/// `"1,2,1/2"`: comma-separated rationals, repeats allowed; the empty
/// string is the empty sequence.
pub fn parse_rational_sequence(text: &str) -> Result<Vec<Rational>> {
    Ok(located_rationals(text)?
        .into_iter()
        .map(|(_, r)| r)
        .collect())
}

fn located_rationals(text: &str) -> Result<Vec<(usize, Rational)>> {
    let mut c = Cursor::new(text, 0);
    let mut out = Vec::new();
    c.skip_ws();
    if c.at_end() {
        return Ok(out);
    }
    loop {
        c.skip_ws();
        let at = c.offset();
        out.push((at, c.rational()?));
        c.skip_ws();
        if c.at_end() {
            return Ok(out);
        }
        c.expect(b',')?;
    }
}

/// `"1,2,5/3"`. Letters must be distinct; the empty string is the empty
/// alphabet.
pub fn parse_rational_list(text: &str) -> Result<Alphabet> {
    let located = located_rationals(text)?;
    let mut letters: Vec<Rational> = Vec::with_capacity(located.len());
    for (at, r) in located {
        if letters.contains(&r) {
            return Err(Error::parse(at, format!("duplicate letter {r}")));
        }
        letters.push(r);
    }
    Alphabet::new(letters)
}

fn generator_list(c: &mut Cursor<'_>) -> Result<Vec<Generator>> {
    c.expect(b'(')?;
    let mut out = Vec::new();
    c.skip_ws();
    if c.eat(b')') {
        return Ok(out);
    }
    loop {
        c.skip_ws();
        if c.eat(b'x') {
            if c.eat(b'^') {
                let at = c.offset();
                match c.small_integer()? {
                    1 => out.push(Generator::X),
                    -1 => out.push(Generator::XInv),
                    _ => return Err(Error::parse(at, "only x and x^-1 are supported")),
                }
            } else {
                out.push(Generator::X);
            }
        } else {
            out.push(Generator::Scalar(c.rational()?));
        }
        c.skip_ws();
        if c.eat(b')') {
            return Ok(out);
        }
        c.expect(b',')?;
    }
}

/// `"(1,2) - (x)"`, `"(1/2,x^-1)"`, `"() - (3)"`.
pub fn parse_diff_argument(text: &str) -> Result<DiffArgument> {
    let mut c = Cursor::new(text, 0);
    c.skip_ws();
    let plus = generator_list(&mut c)?;
    c.skip_ws();
    let minus = if c.eat(b'-') {
        c.skip_ws();
        generator_list(&mut c)?
    } else {
        Vec::new()
    };
    c.finish()?;
    Ok(DiffArgument::new(plus, minus))
}

/// `"kmin..kmax"`.
pub fn parse_column_range(text: &str) -> Result<ColumnRange> {
    let mut c = Cursor::new(text, 0);
    c.skip_ws();
    let lo = c.small_integer()?;
    c.skip_ws();
    let at = c.offset();
    if !(c.eat(b'.') && c.eat(b'.')) {
        return Err(Error::parse(at, "expected '..'"));
    }
    c.skip_ws();
    let hi = c.small_integer()?;
    c.finish()?;
    ColumnRange::new(lo, hi).map_err(|e| Error::parse(at, e.to_string()))
}

/// `{"-1":"3/2","1":"-1/2"}`.
pub fn parse_laurent_json(text: &str) -> Result<LaurentPoly> {
    serde_json::from_str(text).map_err(|e| {
        let offset = byte_offset(text, e.line(), e.column());
        Error::parse(offset, e.to_string())
    })
}

/// Canonical JSON form of a Laurent polynomial.
pub fn laurent_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(p).expect("serializing a Laurent polynomial")
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn offset_of(e: Error) -> usize {
        match e {
            Error::Parse { offset, .. } => offset,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn index_vectors() {
        assert_eq!(
            parse_index_vector("[-4,-3,-2,1,3,4]").unwrap(),
            IndexVector::new(vec![-4, -3, -2, 1, 3, 4])
        );
        assert_eq!(
            parse_index_vector("[0]").unwrap(),
            IndexVector::new(vec![0])
        );
        assert_eq!(
            parse_index_vector("[1, 2,3]").unwrap(),
            IndexVector::new(vec![1, 2, 3])
        );
        assert_eq!(
            parse_index_vector(" [ ] ").unwrap(),
            IndexVector::new(vec![])
        );
        assert_eq!(offset_of(parse_index_vector("[1,,2]").unwrap_err()), 3);
        assert!(parse_index_vector("[1,2").is_err());
        assert!(parse_index_vector("1,2]").is_err());
        assert!(parse_index_vector("[1] x").is_err());
        assert!(parse_index_vector("[99999999999999999999]").is_err());
    }

    #[test]
    fn rational_lists() {
        let a = parse_rational_list("1,2,5/3").unwrap();
        assert_eq!(a.letters(), &[rat(1, 1), rat(2, 1), rat(5, 3)]);
        assert_eq!(offset_of(parse_rational_list("1,1").unwrap_err()), 2);
        assert_eq!(offset_of(parse_rational_list("1,2/4,1/2").unwrap_err()), 6);
        assert_eq!(offset_of(parse_rational_list("2/0").unwrap_err()), 2);
        assert!(parse_rational_list("1,a").is_err());
        assert!(parse_rational_list("1,").is_err());
        assert!(parse_rational_list("").unwrap().is_empty());
        assert_eq!(
            parse_rational_list(" -4 , +3/6").unwrap().letters(),
            &[rat(-4, 1), rat(1, 2)]
        );
        assert_eq!(
            parse_rational_sequence("1,1,2/2").unwrap(),
            vec![rat(1, 1); 3]
        );
        assert!(parse_rational_sequence("1;2").is_err());
    }

    #[test]
    fn differences() {
        let d = parse_diff_argument("(1,2) - (x)").unwrap();
        assert_eq!(
            d,
            DiffArgument::new(
                vec![Generator::Scalar(rat(1, 1)), Generator::Scalar(rat(2, 1))],
                vec![Generator::X]
            )
        );
        let d = parse_diff_argument("(1/2, x^-1)").unwrap();
        assert_eq!(d.plus, vec![Generator::Scalar(rat(1, 2)), Generator::XInv]);
        assert!(d.minus.is_empty());
        assert_eq!(
            parse_diff_argument("()-(3)").unwrap().minus,
            vec![Generator::Scalar(rat(3, 1))]
        );
        assert!(parse_diff_argument("(x^2)").is_err());
        assert!(parse_diff_argument("(1) + (2)").is_err());
        assert!(parse_diff_argument("(1").is_err());
    }

    #[test]
    fn ranges() {
        let r = parse_column_range("-3..4").unwrap();
        assert_eq!((r.kmin(), r.kmax()), (-3, 4));
        assert!(parse_column_range("4..-3").is_err());
        assert!(parse_column_range("1.2").is_err());
    }

    #[test]
    fn laurent_json() {
        let p = parse_laurent_json(r#"{"-1":"3/2","1":"-1/2"}"#).unwrap();
        assert_eq!(laurent_to_json(&p), r#"{"-1":"3/2","1":"-1/2"}"#);
        assert!(parse_laurent_json(r#"{"a":"1"}"#).is_err());
        assert!(parse_laurent_json(r#"{"1":"1/0"}"#).is_err());
        assert!(parse_laurent_json(r#"[1,2]"#).is_err());
        let e = parse_laurent_json("{\n \"1\": 2}").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
    }
}
