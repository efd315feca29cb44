//! Recursive-descent parser for knot expressions.
//!
//! ```text
//! expr    := atom ( ".cable(" int "," int ")" )*
//! atom    := "U" | "T(" int "," int ")" | "(" expr "#" expr ")"
//! ```
//!
//! Whitespace is ignored between tokens. `T(p,q)` is sugar for `U.cable(p,q)`.

use std::fmt;

use crate::atlas::KnotExpr;
use crate::error::Error;
use crate::framing::CableParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { pos: usize, message: String },
    InvalidCable { pos: usize, source: Error },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, message } => {
                write!(f, "syntax error at column {}: {message}", pos + 1)
            }
            ParseError::InvalidCable { pos, source } => {
                write!(f, "at column {}: {source}", pos + 1)
            }
        }
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::InvalidCable { pos, .. } => *pos,
        }
    }
}

pub fn parse(text: &str) -> Result<KnotExpr, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        at: 0,
        len: text.len(),
    };
    let e = p.expr()?;
    p.skip_ws();
    if let Some(&(pos, c)) = p.chars.get(p.at) {
        return Err(ParseError::Syntax {
            pos,
            message: format!("unexpected {c:?} after expression"),
        });
    }
    Ok(e)
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(p, _)| p)
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.at)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected {want:?}, found {c:?}")),
            None => self.error(format!("expected {want:?}, found end of input")),
        }
    }

    /// Matches a keyword, allowing whitespace between its characters.
    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        for c in word.chars() {
            self.expect(c)?;
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<KnotExpr, ParseError> {
        let mut e = self.atom()?;
        while self.peek() == Some('.') {
            self.at += 1;
            self.keyword("cable")?;
            let (pos, c) = self.pair()?;
            e = KnotExpr::Cable(
                Box::new(e),
                c.map_err(|source| ParseError::InvalidCable { pos, source })?,
            );
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<KnotExpr, ParseError> {
        match self.peek() {
            Some('U') => {
                self.at += 1;
                Ok(KnotExpr::Unknot)
            }
            Some('T') => {
                self.at += 1;
                let (pos, c) = self.pair()?;
                let c = c.map_err(|source| ParseError::InvalidCable { pos, source })?;
                Ok(KnotExpr::Cable(Box::new(KnotExpr::Unknot), c))
            }
            Some('(') => {
                self.at += 1;
                let a = self.expr()?;
                self.expect('#')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::ConnSum(Box::new(a), Box::new(b)))
            }
            Some(c) => self.error(format!("expected 'U', 'T(' or '(', found {c:?}")),
            None => self.error("expected a knot expression, found end of input"),
        }
    }

    /// `"(" int "," int ")"`; returns the opening position and the validated parameters.
    fn pair(&mut self) -> Result<(usize, Result<CableParams, Error>), ParseError> {
        self.peek();
        let pos = self.pos();
        self.expect('(')?;
        let p = self.int()?;
        self.expect(',')?;
        let q = self.int()?;
        self.expect(')')?;
        Ok((pos, CableParams::for_cabling(p, q)))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.peek();
        let start = self.pos();
        let mut text = String::new();
        if let Some(&(_, c @ ('-' | '+'))) = self.chars.get(self.at) {
            text.push(c);
            self.at += 1;
            self.skip_ws();
        }
        while let Some(&(_, c)) = self.chars.get(self.at) {
            if !c.is_ascii_digit() {
                break;
            }
            text.push(c);
            self.at += 1;
        }
        if !text.chars().any(|c| c.is_ascii_digit()) {
            return Err(ParseError::Syntax {
                pos: self.pos(),
                message: "expected an integer".into(),
            });
        }
        text.parse().map_err(|_| ParseError::Syntax {
            pos: start,
            message: format!("integer {text} out of range"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(p: i64, q: i64) -> KnotExpr {
        KnotExpr::torus(p, q).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            parse("T(2,3).cable(2,3)").unwrap(),
            t(2, 3).cable(2, 3).unwrap()
        );
        assert_eq!(parse("T(-9,4)").unwrap(), t(-9, 4));
        assert_eq!(parse("U.cable(-9,4)").unwrap(), t(-9, 4));
        let err = parse("T(2,4)").unwrap_err();
        assert!(
            matches!(err, ParseError::InvalidCable { pos: 1, .. }),
            "{err:?}"
        );
        assert!(err.to_string().contains("not coprime"));
    }

    #[test]
    fn whitespace_and_sums() {
        let e = parse("  ( T( -5 , 2 ) #\tT(-5,2) ) . cable ( -41 , 2 ) ").unwrap();
        assert_eq!(e, t(-5, 2).sum(t(-5, 2)).cable(-41, 2).unwrap());
        assert_eq!(
            parse("(U # (U # U))").unwrap(),
            KnotExpr::Unknot.sum(KnotExpr::Unknot.sum(KnotExpr::Unknot))
        );
    }

    #[test]
    fn syntax_errors_have_positions() {
        let cases = [
            ("", 0),
            ("T(2 3)", 4),
            ("V", 0),
            ("U.cabel(2,3)", 5),
            ("(U # U", 6),
            ("U U", 2),
            ("T(-,3)", 3),
            ("T(99999999999999999999,3)", 2),
        ];
        for (text, pos) in cases {
            let err = parse(text).unwrap_err();
            assert!(matches!(err, ParseError::Syntax { .. }), "{text}: {err:?}");
            assert_eq!(err.position(), pos, "{text}: {err}");
        }
        assert!(matches!(
            parse("T(3,1)"),
            Err(ParseError::InvalidCable { .. })
        ));
        assert!(matches!(
            parse("U.cable(0,2)"),
            Err(ParseError::InvalidCable { .. })
        ));
    }

    fn any_expr() -> impl Strategy<Value = KnotExpr> {
        let params = (-40i64..40, 2i64..12)
            .prop_filter("coprime", |(p, q)| num_integer::Integer::gcd(p, q) == 1);
        let leaf = prop_oneof![
            Just(KnotExpr::Unknot),
            params.clone().prop_map(|(p, q)| t(p, q))
        ];
        leaf.prop_recursive(4, 24, 2, move |inner| {
            prop_oneof![
                (inner.clone(), params.clone()).prop_map(|(e, (p, q))| e.cable(p, q).unwrap()),
                (inner.clone(), inner).prop_map(|(a, b)| a.sum(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in any_expr()) {
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn parser_never_panics(s in "[UT().,#0-9 -]{0,24}") {
            let _ = parse(&s);
        }
    }
}
