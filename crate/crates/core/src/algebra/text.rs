//! Line syntax for elements.
//!
//! An element is a sum of terms `coeff * word`, where `coeff` is an integer
//! or `p/q` and `word` is a `*`-joined product of names, `1` and
//! parenthesized sub-expressions. In tensor algebras a term may be a pure
//! tensor with slots separated by `|`; labelled tensor algebras interleave
//! summand names between slots (`u|a|v|b|w`). Printed tensor elements group
//! their terms by degree, groups separated by ` ; `.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Algebra, Element, Monomial, Presentation};
use crate::error::{Error, Result};
use crate::linalg::Rational;

impl Algebra {
    pub fn format_monomial(&self, m: &Monomial) -> String {
        match (self.presentation(), m) {
            (Presentation::Path(p), Monomial::Vertex(v)) => {
                if p.quiver.vertices().len() == 1 {
                    "1".into()
                } else {
                    p.quiver.vertices()[*v].clone()
                }
            }
            (Presentation::Path(p), Monomial::Path(w)) => w
                .iter()
                .map(|&a| p.quiver.arrows()[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*"),
            (Presentation::Structure(s), Monomial::Basis(i)) => {
                if s.unit_basis() == Some(*i) {
                    "1".into()
                } else {
                    s.names[*i].clone()
                }
            }
            (Presentation::Tensor(t), Monomial::Tensor { labels, slots }) => {
                let slot = |u: &Monomial| {
                    let s = t.base.format_monomial(u);
                    if s.contains('|') {
                        format!("({s})")
                    } else {
                        s
                    }
                };
                let mut out = slot(&slots[0]);
                for (j, l) in labels.iter().enumerate() {
                    out.push('|');
                    if !t.anonymous() {
                        out.push_str(&t.summands[*l].name);
                        out.push('|');
                    }
                    out.push_str(&slot(&slots[j + 1]));
                }
                out
            }
            _ => format!("{m:?}"),
        }
    }

    /// Parses an element written in the line syntax.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.parse_element_at(text, 1, 0)
    }

    /// As [`Algebra::parse_element`], reporting errors at `line` with columns
    /// shifted by `column_offset`.
    pub fn parse_element_at(
        &self,
        text: &str,
        line: usize,
        column_offset: usize,
    ) -> Result<Element> {
        let tokens = tokenize(text, line, column_offset)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            line,
            end_column: column_offset + text.chars().count() + 1,
        };
        let expr = parser.expr()?;
        if let Some(t) = parser.tokens.get(parser.pos) {
            return Err(parser.error(t.column, format!("unexpected {}", t.kind)));
        }
        Evaluator { line }.expr(self, &expr)
    }
}

fn term_text(c: &Rational, text: &str) -> String {
    if text == "1" {
        c.to_string()
    } else if c.is_one() {
        text.to_string()
    } else if *c == -Rational::one() {
        format!("-{text}")
    } else {
        format!("{c}*{text}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let grouped = matches!(self.algebra.presentation(), Presentation::Tensor(_));
        let mut previous: Option<usize> = None;
        for (m, c) in &self.terms {
            let text = self.algebra.format_monomial(m);
            match previous {
                None => f.write_str(&term_text(c, &text))?,
                Some(d) if grouped && d != m.degree() => write!(f, " ; {}", term_text(c, &text))?,
                Some(_) if c.is_negative() => write!(f, " - {}", term_text(&-c, &text))?,
                Some(_) => write!(f, " + {}", term_text(c, &text))?,
            }
            previous = Some(m.degree());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Name(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Bar,
    Semi,
    Open,
    Close,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Name(n) => write!(f, "name '{n}'"),
            Kind::Number(n) => write!(f, "number {n}"),
            Kind::Plus => f.write_str("'+'"),
            Kind::Minus => f.write_str("'-'"),
            Kind::Star => f.write_str("'*'"),
            Kind::Slash => f.write_str("'/'"),
            Kind::Bar => f.write_str("'|'"),
            Kind::Semi => f.write_str("';'"),
            Kind::Open => f.write_str("'('"),
            Kind::Close => f.write_str("')'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    column: usize,
}

fn tokenize(text: &str, line: usize, offset: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Kind::Plus),
            '-' => Some(Kind::Minus),
            '*' => Some(Kind::Star),
            '/' => Some(Kind::Slash),
            '|' => Some(Kind::Bar),
            ';' => Some(Kind::Semi),
            '(' => Some(Kind::Open),
            ')' => Some(Kind::Close),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Token { kind, column });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                kind: Kind::Number(digits.parse().expect("digits")),
                column,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            out.push(Token {
                kind: Kind::Name(chars[start..i].iter().collect()),
                column,
            });
        } else {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Expr {
    terms: Vec<Term>,
}

struct Term {
    coefficient: Rational,
    body: Option<Body>,
}

struct Body {
    segments: Vec<Segment>,
}

struct Segment {
    factors: Vec<FactorAst>,
    column: usize,
}

enum FactorAst {
    Name(String, usize),
    One,
    Group(Expr),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl Parser {
    fn error(&self, column: usize, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message,
        }
    }

    fn peek(&self) -> Option<&Kind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn peek_at(&self, k: usize) -> Option<&Kind> {
        self.tokens.get(self.pos + k).map(|t| &t.kind)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let negative = self.eat(&Kind::Minus);
        terms.push(self.term(negative)?);
        loop {
            let negative = if self.eat(&Kind::Plus) {
                false
            } else if self.eat(&Kind::Minus) {
                true
            } else if self.eat(&Kind::Semi) {
                self.eat(&Kind::Minus)
            } else {
                break;
            };
            terms.push(self.term(negative)?);
        }
        Ok(Expr { terms })
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let sign = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        if let Some(Kind::Number(n)) = self.peek().cloned() {
            if self.peek_at(1) == Some(&Kind::Bar) && n.is_one() {
                return Ok(Term {
                    coefficient: sign,
                    body: Some(self.body()?),
                });
            }
            self.pos += 1;
            let mut c = Rational::from_integer(n);
            if self.eat(&Kind::Slash) {
                let column = self.column();
                match self.peek().cloned() {
                    Some(Kind::Number(d)) if !d.is_zero() => {
                        self.pos += 1;
                        c /= Rational::from_integer(d);
                    }
                    _ => return Err(self.error(column, "expected a nonzero denominator".into())),
                }
            }
            let body = if self.eat(&Kind::Star) {
                Some(self.body()?)
            } else {
                None
            };
            return Ok(Term {
                coefficient: sign * c,
                body,
            });
        }
        Ok(Term {
            coefficient: sign,
            body: Some(self.body()?),
        })
    }

    fn body(&mut self) -> Result<Body> {
        let mut segments = vec![self.segment()?];
        while self.eat(&Kind::Bar) {
            segments.push(self.segment()?);
        }
        Ok(Body { segments })
    }

    fn segment(&mut self) -> Result<Segment> {
        let column = self.column();
        let mut factors = vec![self.factor()?];
        while self.eat(&Kind::Star) {
            factors.push(self.factor()?);
        }
        Ok(Segment { factors, column })
    }

    fn factor(&mut self) -> Result<FactorAst> {
        let column = self.column();
        match self.peek().cloned() {
            Some(Kind::Name(n)) => {
                self.pos += 1;
                Ok(FactorAst::Name(n, column))
            }
            Some(Kind::Number(n)) if n.is_one() => {
                self.pos += 1;
                Ok(FactorAst::One)
            }
            Some(Kind::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Kind::Close) {
                    let column = self.column();
                    return Err(self.error(column, "expected ')'".into()));
                }
                Ok(FactorAst::Group(inner))
            }
            Some(other) => Err(self.error(
                column,
                format!("expected a name, 1 or '(' but found {other}"),
            )),
            None => Err(self.error(column, "unexpected end of expression".into())),
        }
    }
}

struct Evaluator {
    line: usize,
}

impl Evaluator {
    fn error(&self, column: usize, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message,
        }
    }

    fn expr(&self, algebra: &Algebra, e: &Expr) -> Result<Element> {
        let mut out = algebra.zero();
        for t in &e.terms {
            let value = match &t.body {
                None => algebra.one(),
                Some(b) => self.body(algebra, b)?,
            };
            out.add_scaled_unchecked(&value, &t.coefficient);
        }
        Ok(out)
    }

    fn body(&self, algebra: &Algebra, b: &Body) -> Result<Element> {
        if b.segments.len() == 1 {
            return self.segment(algebra, &b.segments[0]);
        }
        let Presentation::Tensor(t) = algebra.presentation() else {
            return Err(self.error(b.segments[1].column, "'|' needs a tensor algebra".into()));
        };
        let (labels, slot_segments): (Vec<usize>, Vec<&Segment>) = if t.anonymous() {
            (vec![0; b.segments.len() - 1], b.segments.iter().collect())
        } else {
            if b.segments.len().is_multiple_of(2) {
                let last = b.segments.last().unwrap();
                return Err(self.error(last.column, "expected slot|label|slot|…|slot".into()));
            }
            let mut labels = Vec::new();
            for s in b.segments.iter().skip(1).step_by(2) {
                let label = match s.factors.as_slice() {
                    [FactorAst::Name(n, _)] => t.summands.iter().position(|x| x.name == *n),
                    _ => None,
                };
                match label {
                    Some(l) => labels.push(l),
                    None => return Err(self.error(s.column, "expected a summand name".into())),
                }
            }
            (labels, b.segments.iter().step_by(2).collect())
        };
        let slots = slot_segments
            .into_iter()
            .map(|s| self.segment(&t.base, s))
            .collect::<Result<Vec<_>>>()?;
        algebra.tensor_element(&labels, slots)
    }

    fn segment(&self, algebra: &Algebra, s: &Segment) -> Result<Element> {
        let mut acc: Option<Element> = None;
        for f in &s.factors {
            let value = match f {
                FactorAst::Name(n, column) => algebra
                    .resolve_name(n)
                    .ok_or_else(|| self.error(*column, format!("unknown name {n}")))?,
                FactorAst::One => algebra.one(),
                FactorAst::Group(e) => self.expr(algebra, e)?,
            };
            acc = Some(match acc {
                None => value,
                Some(a) => a.mul_unchecked(&value),
            });
        }
        Ok(acc.expect("segment has a factor"))
    }
}
