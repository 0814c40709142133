use std::fmt;
use std::str::FromStr;

use super::FamilyError;

/// Closed catalog of term shapes for generating maps: natural constants,
/// tuple slots, parameter slots, and `+`, `*`, `^` over them.
///
/// Syntax: `slot0 + param1 * slot0`, `slot0 ^ param0`, `(param0 + 1) * slot1`.
/// `^` binds tightest and is right-associative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Const(u64),
    Slot(usize),
    Param(usize),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Pow(Box<Term>, Box<Term>),
}

impl Term {
    /// Checked evaluation; `None` on u64 overflow.
    pub fn eval(&self, slots: &[u64], params: &[u64]) -> Option<u64> {
        match self {
            Term::Const(c) => Some(*c),
            Term::Slot(i) => slots.get(*i).copied(),
            Term::Param(i) => params.get(*i).copied(),
            Term::Add(a, b) => a.eval(slots, params)?.checked_add(b.eval(slots, params)?),
            Term::Mul(a, b) => a.eval(slots, params)?.checked_mul(b.eval(slots, params)?),
            Term::Pow(a, b) => {
                let base = a.eval(slots, params)?;
                let exp = b.eval(slots, params)?;
                match base {
                    0 => Some(u64::from(exp == 0)),
                    1 => Some(1),
                    _ => base.checked_pow(u32::try_from(exp).ok()?),
                }
            }
        }
    }

    /// Highest slot and parameter index referenced, as counts.
    pub fn arities(&self) -> (usize, usize) {
        match self {
            Term::Const(_) => (0, 0),
            Term::Slot(i) => (i + 1, 0),
            Term::Param(i) => (0, i + 1),
            Term::Add(a, b) | Term::Mul(a, b) | Term::Pow(a, b) => {
                let (sa, pa) = a.arities();
                let (sb, pb) = b.arities();
                (sa.max(sb), pa.max(pb))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Slot(i) => write!(f, "slot{i}"),
            Term::Param(i) => write!(f, "param{i}"),
            Term::Add(a, b) => write!(f, "({a} + {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Pow(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

impl FromStr for Term {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { tokens, pos: 0, src: s };
        let term = parser.sum()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(term)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(u64),
    Slot(usize),
    Param(usize),
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>, FamilyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let malformed = |msg: String| FamilyError::MalformedTerm(format!("{s:?}: {msg}"));
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = s[start..i]
                    .parse()
                    .map_err(|_| malformed(format!("constant {} too large", &s[start..i])))?;
                out.push(Token::Num(n));
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &s[start..i];
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let index: usize = s[digits_start..i]
                    .parse()
                    .map_err(|_| malformed(format!("{word} needs an index")))?;
                match word {
                    "slot" => out.push(Token::Slot(index)),
                    "param" => out.push(Token::Param(index)),
                    other => return Err(malformed(format!("unknown name {other}"))),
                }
            }
            other => return Err(malformed(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> FamilyError {
        FamilyError::MalformedTerm(format!("{:?}: {msg} at token {}", self.src, self.pos))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<Term, FamilyError> {
        let mut lhs = self.product()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Term::Add(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Term, FamilyError> {
        let mut lhs = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.power()?;
            lhs = Term::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Term, FamilyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp = self.power()?;
            return Ok(Term::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term, FamilyError> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        match tok {
            Token::Num(n) => Ok(Term::Const(n)),
            Token::Slot(i) => Ok(Term::Slot(i)),
            Token::Param(i) => Ok(Term::Param(i)),
            Token::Open => {
                let inner = self.sum()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a constant, slot, parameter or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let t: Term = "param0 + param1 * slot0".parse().unwrap();
        assert_eq!(t.eval(&[5], &[3, 2]), Some(13));
        assert_eq!(t.arities(), (1, 2));

        let p: Term = "slot0 ^ param0".parse().unwrap();
        assert_eq!(p.eval(&[2], &[3]), Some(8));

        let nested: Term = "2 ^ 3 ^ 2".parse().unwrap();
        assert_eq!(nested.eval(&[], &[]), Some(512));

        let grouped: Term = "(param0 + 1) * slot1".parse().unwrap();
        assert_eq!(grouped.eval(&[0, 4], &[2]), Some(12));
        assert_eq!(grouped.arities(), (2, 1));
    }

    #[test]
    fn overflow_is_none() {
        let t: Term = "slot0 ^ param0".parse().unwrap();
        assert_eq!(t.eval(&[10], &[30]), None);
        assert_eq!(t.eval(&[0], &[0]), Some(1));
        assert_eq!(t.eval(&[1], &[u64::MAX]), Some(1));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "slot", "param0 +", "x + 1", "(slot0", "slot0 slot1", "3 - 1"] {
            assert!(
                matches!(bad.parse::<Term>(), Err(FamilyError::MalformedTerm(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn display_reparses() {
        let t: Term = "param0 + param1 * slot0 ^ 2".parse().unwrap();
        let again: Term = t.to_string().parse().unwrap();
        assert_eq!(t, again);
    }
}
