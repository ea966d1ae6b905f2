//! Text formats: slopes `u/v` or `(u,v)`, vertices `p:q`, matrices `a,b;c,d`.

use std::fmt;

use num_bigint::BigInt;

use crate::bundle::Monodromy;
use crate::error::Error;
use crate::slope::{reduce_slope, BoundarySlope, Curve, TreeVertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    /// Byte offset of the offending character.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse {:?} at position {}: {}",
            self.input, self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// Either a malformed string or well-formed text naming invalid data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    Parse(ParseError),
    Domain(Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse(e) => e.fmt(f),
            InputError::Domain(e) => e.fmt(f),
        }
    }
}

impl From<ParseError> for InputError {
    fn from(e: ParseError) -> Self {
        InputError::Parse(e)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Domain(e)
    }
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.input.to_string(),
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.input[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.input[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let rest = &self.input[self.pos..];
        let sign_len = usize::from(rest.starts_with(['+', '-']));
        let digits = rest[sign_len..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let text = &rest[..sign_len + digits];
        self.pos += text.len();
        Ok(text.trim_start_matches('+').parse().expect("validated digits"))
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let n = self.integer()?;
        i64::try_from(&n).map_err(|_| ParseError {
            input: self.input.to_string(),
            position: start,
            message: "integer does not fit in 64 bits".into(),
        })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// `u/v` or `(u,v)` as a raw pair.
pub fn parse_pair(text: &str) -> Result<(BigInt, BigInt), ParseError> {
    let mut cur = Cursor::new(text);
    let pair = if cur.eat('(') {
        let u = cur.integer()?;
        cur.expect(',')?;
        let v = cur.integer()?;
        cur.expect(')')?;
        (u, v)
    } else {
        let u = cur.integer()?;
        cur.expect('/')?;
        (u, cur.integer()?)
    };
    cur.finish()?;
    Ok(pair)
}

/// Parses and reduces a boundary slope.
pub fn parse_slope(text: &str) -> Result<BoundarySlope, InputError> {
    let (u, v) = parse_pair(text)?;
    Ok(reduce_slope(u, v)?)
}

/// Parses a primitive curve; not reduced.
pub fn parse_curve(text: &str) -> Result<Curve, InputError> {
    let (x, y) = parse_pair(text)?;
    Ok(Curve::new(x, y)?)
}

pub fn parse_vertex(text: &str) -> Result<TreeVertex, InputError> {
    let mut cur = Cursor::new(text);
    let p = cur.integer()?;
    cur.expect(':')?;
    let q = cur.integer()?;
    cur.finish()?;
    Ok(TreeVertex::new(p, q)?)
}

pub fn parse_matrix(text: &str) -> Result<Monodromy, InputError> {
    let mut cur = Cursor::new(text);
    let a = cur.small_integer()?;
    cur.expect(',')?;
    let b = cur.small_integer()?;
    cur.expect(';')?;
    let c = cur.small_integer()?;
    cur.expect(',')?;
    let d = cur.small_integer()?;
    cur.finish()?;
    Ok(Monodromy::new(a, b, c, d)?)
}

pub fn format_slope(s: &BoundarySlope) -> String {
    format!("{}/{}", s.u(), s.v())
}

pub fn format_vertex(v: &TreeVertex) -> String {
    format!("{}:{}", v.p(), v.q())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn slope_examples() {
        assert_eq!(parse_slope("10/3").unwrap(), BoundarySlope::new(10, 3).unwrap());
        assert_eq!(parse_slope("-4/-1").unwrap(), BoundarySlope::new(4, 1).unwrap());
        assert_eq!(parse_slope("( -4 , -1 )").unwrap(), BoundarySlope::new(4, 1).unwrap());
        assert!(matches!(
            parse_slope("3/2"),
            Err(InputError::Domain(Error::NotOneSidedSlope(..)))
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        let Err(InputError::Parse(e)) = parse_slope("10/x") else { panic!() };
        assert_eq!(e.position, 3);
        let Err(InputError::Parse(e)) = parse_slope("(10,3") else { panic!() };
        assert_eq!(e.position, 5);
        let Err(InputError::Parse(e)) = parse_slope("10/3 7") else { panic!() };
        assert_eq!(e.position, 5);
        assert!(matches!(parse_vertex("5/3"), Err(InputError::Parse(_))));
    }

    #[test]
    fn vertex_and_matrix() {
        assert_eq!(parse_vertex("-5:3").unwrap(), TreeVertex::new(-5, 3).unwrap());
        assert!(matches!(
            parse_vertex("1:0"),
            Err(InputError::Domain(Error::NotTreeVertex(..)))
        ));
        assert_eq!(parse_matrix("3,2;4,3").unwrap(), Monodromy::new(3, 2, 4, 3).unwrap());
        assert_eq!(parse_matrix(" -1, 0 ; 0, -1 ").unwrap().trace(), -2);
        assert!(matches!(
            parse_matrix("2,0;0,2"),
            Err(InputError::Domain(Error::NotUnimodular(_)))
        ));
        assert!(matches!(
            parse_matrix("99999999999999999999,0;0,1"),
            Err(InputError::Parse(_))
        ));
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(p in -10_000i64..10_000, k in 0i64..5_000) {
            let q = 2 * k + 1;
            prop_assume!(num_integer::Integer::gcd(&p, &q) == 1);
            let s = BoundarySlope::new(2 * p, q).unwrap();
            prop_assert_eq!(parse_slope(&format_slope(&s)).unwrap(), s.clone());
            let v = TreeVertex::new(p, q).unwrap();
            prop_assert_eq!(parse_vertex(&format_vertex(&v)).unwrap(), v);
        }
    }
}
