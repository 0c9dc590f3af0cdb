//! Line-oriented task files.
//!
//! ```text
//! quiver kronecker          | algebra kronecker_tb
//! vertices e1 e2            | dim 2
//! arrow a : e1 -> e2        | basis e1 e2
//! arrow b : e1 -> e2        | mul e1 e1 = e1
//! cap 6                     | mul e2 e2 = e2
//!                           | idempotent-pair a (e1, e2)
//! ```
//!
//! Both kinds accept `cap N` (default 6) and the family overrides
//! `generators NAME…`, `pair I (S, T)` and `derivation I GEN = TENSOR`.
//! Indices are 1-based. `#` starts a comment.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Algebra, Element, StructureAlgebra, Summand};
use crate::derivation::{DoubleDerivation, Family};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::quiver::Quiver;

pub const DEFAULT_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaskKind {
    Quiver,
    Algebra,
}

#[derive(Debug, Clone)]
pub struct TaskFile {
    pub kind: TaskKind,
    pub name: String,
    pub cap: usize,
    pub algebra: Algebra,
    pub family: Family,
    /// The declared quiver, for quiver files.
    pub quiver: Option<Quiver>,
}

/// Whitespace-separated word with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Word<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    text: &'a str,
    words: Vec<Word<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn end(&self) -> usize {
        self.text.chars().count() + 1
    }

    /// The rest of the line starting at word `k`, with its 0-based column offset.
    fn rest(&self, k: usize) -> Option<(&'a str, usize)> {
        let w = self.words.get(k)?;
        let start = byte_offset(self.text, w.column - 1);
        Some((&self.text[start..], w.column - 1))
    }
}

fn byte_offset(s: &str, chars: usize) -> usize {
    s.char_indices().nth(chars).map_or(s.len(), |(i, _)| i)
}

fn split_line(number: usize, raw: &str) -> Line<'_> {
    let text = raw.find('#').map_or(raw, |i| &raw[..i]);
    let mut words = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (column, (i, c)) in text.char_indices().enumerate() {
        if c.is_whitespace() {
            if let Some((b, col)) = start.take() {
                words.push(Word {
                    text: &text[b..i],
                    column: col,
                });
            }
        } else if start.is_none() {
            start = Some((i, column + 1));
        }
    }
    if let Some((b, col)) = start {
        words.push(Word {
            text: &text[b..],
            column: col,
        });
    }
    Line {
        number,
        text,
        words,
    }
}

fn parse_count(line: &Line, w: Option<&Word>, what: &str) -> Result<usize> {
    let w = w.ok_or_else(|| line.error(line.end(), format!("expected {what}")))?;
    w.text
        .parse()
        .map_err(|_| line.error(w.column, format!("expected {what}, found '{}'", w.text)))
}

/// Text with its column offset.
type Located<'a> = (&'a str, usize);

/// `(S, T)` split at its top-level comma, with column offsets.
fn parse_parenthesized_pair<'a>(
    line: &Line<'a>,
    text: &'a str,
    offset: usize,
) -> Result<(Located<'a>, Located<'a>)> {
    let trimmed = text.trim_end();
    if !trimmed.starts_with('(') || !trimmed.ends_with(')') {
        return Err(line.error(offset + 1, "expected (S, T)"));
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    let mut depth = 0i32;
    let mut comma = None;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if comma.is_some() {
                    return Err(line.error(
                        offset + 2 + inner[..i].chars().count(),
                        "expected one comma",
                    ));
                }
                comma = Some(i);
            }
            _ => {}
        }
    }
    let Some(i) = comma else {
        return Err(line.error(offset + 1, "expected (S, T)"));
    };
    let left = &inner[..i];
    let right = &inner[i + 1..];
    let left_offset = offset + 1;
    let right_offset = left_offset + left.chars().count() + 1;
    Ok(((left, left_offset), (right, right_offset)))
}

struct Override<'a> {
    line: Line<'a>,
    index: usize,
}

pub fn parse_task(text: &str) -> Result<TaskFile> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .map(|(i, l)| split_line(i + 1, l))
        .filter(|l| !l.words.is_empty())
        .collect();
    let Some(header) = lines.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty task file".into(),
        });
    };
    let kind = match header.words[0].text {
        "quiver" => TaskKind::Quiver,
        "algebra" => TaskKind::Algebra,
        other => {
            return Err(header.error(
                1,
                format!("expected 'quiver' or 'algebra', found '{other}'"),
            ))
        }
    };
    let name = match header.words.as_slice() {
        [_, n] => n.text.to_string(),
        _ => return Err(header.error(header.words[0].column, "expected a single name")),
    };

    let mut cap = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut dim = None;
    let mut basis: Option<(Line, Vec<String>)> = None;
    let mut muls: Vec<Line> = Vec::new();
    let mut idempotent_pairs: Vec<Line> = Vec::new();
    let mut generators: Option<Line> = None;
    let mut pairs: Vec<Override> = Vec::new();
    let mut derivations: Vec<Override> = Vec::new();

    for line in &lines[1..] {
        let key = line.words[0];
        let allowed = match key.text {
            "cap" | "generators" | "pair" | "derivation" => true,
            "vertices" | "arrow" => kind == TaskKind::Quiver,
            "dim" | "basis" | "mul" | "idempotent-pair" => kind == TaskKind::Algebra,
            _ => false,
        };
        if !allowed {
            return Err(line.error(key.column, format!("unknown key '{}'", key.text)));
        }
        match key.text {
            "cap" => {
                let c = parse_count(line, line.words.get(1), "a cap")?;
                if c == 0 || line.words.len() != 2 {
                    return Err(line.error(key.column, "expected 'cap N' with N ≥ 1"));
                }
                cap = Some(c);
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(line.error(key.column, "vertices declared twice"));
                }
                let mut names = Vec::new();
                for w in &line.words[1..] {
                    if names.contains(&w.text.to_string()) {
                        return Err(line.error(w.column, format!("duplicate name {}", w.text)));
                    }
                    names.push(w.text.to_string());
                }
                vertices = Some(names);
            }
            "arrow" => {
                let w = &line.words;
                if w.len() != 6 || w[2].text != ":" || w[4].text != "->" {
                    return Err(line.error(key.column, "expected 'arrow NAME : SOURCE -> TARGET'"));
                }
                let Some(vs) = &vertices else {
                    return Err(line.error(key.column, "arrow before vertices"));
                };
                for v in [w[3], w[5]] {
                    if !vs.iter().any(|x| x == v.text) {
                        return Err(line.error(v.column, format!("unknown vertex {}", v.text)));
                    }
                }
                if vs.iter().any(|x| x == w[1].text) || arrows.iter().any(|a| a.0 == w[1].text) {
                    return Err(line.error(w[1].column, format!("duplicate name {}", w[1].text)));
                }
                arrows.push((w[1].text.into(), w[3].text.into(), w[5].text.into()));
            }
            "dim" => {
                if line.words.len() != 2 {
                    return Err(line.error(key.column, "expected 'dim N'"));
                }
                dim = Some(parse_count(line, line.words.get(1), "a dimension")?);
            }
            "basis" => {
                let names: Vec<String> =
                    line.words[1..].iter().map(|w| w.text.to_string()).collect();
                for (i, w) in line.words[1..].iter().enumerate() {
                    if names[..i].contains(&names[i]) {
                        return Err(line.error(w.column, format!("duplicate name {}", w.text)));
                    }
                }
                basis = Some((line.clone(), names));
            }
            "mul" => muls.push(line.clone()),
            "idempotent-pair" => idempotent_pairs.push(line.clone()),
            "generators" => generators = Some(line.clone()),
            "pair" | "derivation" => {
                let index = parse_count(line, line.words.get(1), "a 1-based index")?;
                if index == 0 {
                    return Err(line.error(line.words[1].column, "indices are 1-based"));
                }
                let o = Override {
                    line: line.clone(),
                    index: index - 1,
                };
                if key.text == "pair" {
                    pairs.push(o);
                } else {
                    derivations.push(o);
                }
            }
            _ => unreachable!("filtered above"),
        }
    }
    let cap = cap.unwrap_or(DEFAULT_CAP);

    let (algebra, quiver) = match kind {
        TaskKind::Quiver => {
            let vs = vertices.ok_or_else(|| header.error(1, "missing 'vertices' line"))?;
            let q = Quiver::new(vs, arrows)?;
            (Algebra::path(q.clone(), cap)?, Some(q))
        }
        TaskKind::Algebra => (
            build_tensor_algebra(header, dim, basis, &muls, &idempotent_pairs, cap)?,
            None,
        ),
    };
    let family = build_family(&algebra, generators.as_ref(), &pairs, &derivations)?;
    Ok(TaskFile {
        kind,
        name,
        cap,
        algebra,
        family,
        quiver,
    })
}

fn build_tensor_algebra(
    header: &Line,
    dim: Option<usize>,
    basis: Option<(Line, Vec<String>)>,
    muls: &[Line],
    idempotent_pairs: &[Line],
    cap: usize,
) -> Result<Algebra> {
    let (basis_line, names) = basis.ok_or_else(|| header.error(1, "missing 'basis' line"))?;
    let n = names.len();
    if let Some(d) = dim {
        if d != n {
            return Err(basis_line.error(1, format!("dim {d} but {n} basis names")));
        }
    }
    // linear combinations of basis names, read in a zero-product algebra
    let linear = Algebra::structure(StructureAlgebra {
        names: names.clone(),
        table: vec![vec![vec![Rational::zero(); n]; n]; n],
        unit: vec![Rational::zero(); n],
        idempotents: Vec::new(),
    });
    let mut table = vec![vec![vec![Rational::zero(); n]; n]; n];
    let mut declared = BTreeMap::new();
    let mut rhs = Vec::new();
    for line in muls {
        let w = &line.words;
        if w.len() < 5 || w[3].text != "=" {
            return Err(line.error(w[0].column, "expected 'mul B1 B2 = EXPR'"));
        }
        let index = |w: &Word| {
            names
                .iter()
                .position(|b| b == w.text)
                .ok_or_else(|| line.error(w.column, format!("unknown basis element {}", w.text)))
        };
        let (i, j) = (index(&w[1])?, index(&w[2])?);
        if declared.insert((i, j), line.number).is_some() {
            return Err(line.error(w[1].column, "product declared twice"));
        }
        let (text, offset) = line.rest(4).expect("checked length");
        let value = linear.parse_element_at(text, line.number, offset)?;
        table[i][j] = (0..n)
            .map(|k| value.coefficient(&crate::algebra::Monomial::Basis(k)))
            .collect();
        rhs.push((line, text, offset, value));
    }
    let structure = StructureAlgebra::new(names.clone(), table, Vec::new())
        .map_err(|e| basis_line.error(1, e.to_string()))?;
    let base = Algebra::structure(structure);
    for (line, text, offset, value) in rhs {
        let actual = base.parse_element_at(text, line.number, offset)?;
        let linear_coords: Vec<Rational> = (0..n)
            .map(|k| value.coefficient(&crate::algebra::Monomial::Basis(k)))
            .collect();
        let actual_coords: Vec<Rational> = (0..n)
            .map(|k| actual.coefficient(&crate::algebra::Monomial::Basis(k)))
            .collect();
        if linear_coords != actual_coords {
            return Err(line.error(offset + 1, "expected a linear combination of basis names"));
        }
    }

    let mut summands = Vec::new();
    for (k, line) in idempotent_pairs.iter().enumerate() {
        let (name, start) = match line.words.get(1) {
            Some(w) if !w.text.starts_with('(') => (w.text.to_string(), 2),
            _ => (format!("x{}", k + 1), 1),
        };
        let (text, offset) = line
            .rest(start)
            .ok_or_else(|| line.error(line.end(), "expected (S, T)"))?;
        let ((s_text, s_off), (t_text, t_off)) = parse_parenthesized_pair(line, text, offset)?;
        let s = base.parse_element_at(s_text, line.number, s_off)?;
        let t = base.parse_element_at(t_text, line.number, t_off)?;
        for (e, col) in [(&s, s_off), (&t, t_off)] {
            if e.mul(e)? != *e {
                return Err(line.error(col + 1, format!("{e} is not idempotent")));
            }
        }
        if names.contains(&name) || summands.iter().any(|x: &Summand| x.name == name) {
            return Err(line.error(line.words[1].column, format!("duplicate name {name}")));
        }
        summands.push(Summand {
            name,
            source: s,
            target: t,
        });
    }
    Algebra::tensor_over(&base, summands, Some(cap))
}

fn build_family(
    algebra: &Algebra,
    generators: Option<&Line>,
    pairs: &[Override],
    derivations: &[Override],
) -> Result<Family> {
    let canonical = Family::canonical(algebra)?;
    let chosen: Vec<usize> = match generators {
        None => (0..algebra.generator_count()).collect(),
        Some(line) => {
            let mut out = Vec::new();
            for w in &line.words[1..] {
                let g = algebra
                    .generator_by_name(w.text)
                    .ok_or_else(|| line.error(w.column, format!("unknown generator {}", w.text)))?;
                if out.contains(&g) {
                    return Err(line.error(w.column, format!("duplicate name {}", w.text)));
                }
                out.push(g);
            }
            out
        }
    };
    let n = chosen.len();
    let xs: Vec<Element> = chosen.iter().map(|&g| canonical.xs[g].clone()).collect();
    let mut ss: Vec<Element> = chosen.iter().map(|&g| canonical.ss[g].clone()).collect();
    let mut ts: Vec<Element> = chosen.iter().map(|&g| canonical.ts[g].clone()).collect();
    let out_of_range = |o: &Override| {
        o.line.error(
            o.line.words[1].column,
            format!("index {} out of range 1..{n}", o.index + 1),
        )
    };
    for o in pairs {
        if o.index >= n {
            return Err(out_of_range(o));
        }
        let (text, offset) = o
            .line
            .rest(2)
            .ok_or_else(|| o.line.error(o.line.end(), "expected (S, T)"))?;
        let ((s_text, s_off), (t_text, t_off)) = parse_parenthesized_pair(&o.line, text, offset)?;
        ss[o.index] = algebra.parse_element_at(s_text, o.line.number, s_off)?;
        ts[o.index] = algebra.parse_element_at(t_text, o.line.number, t_off)?;
    }
    let envelope = algebra.envelope();
    let mut images: Vec<BTreeMap<usize, Element>> = (0..n)
        .map(|i| {
            let st = envelope.tensor_element(&[0], vec![ss[i].clone(), ts[i].clone()])?;
            Ok(BTreeMap::from([(chosen[i], st)]))
        })
        .collect::<Result<_>>()?;
    for o in derivations {
        if o.index >= n {
            return Err(out_of_range(o));
        }
        let w = &o.line.words;
        if w.len() < 5 || w[3].text != "=" {
            return Err(o
                .line
                .error(w[0].column, "expected 'derivation I GEN = TENSOR'"));
        }
        let g = algebra.generator_by_name(w[2].text).ok_or_else(|| {
            o.line
                .error(w[2].column, format!("unknown generator {}", w[2].text))
        })?;
        let (text, offset) = o.line.rest(4).expect("checked length");
        let image = envelope.parse_element_at(text, o.line.number, offset)?;
        if !image.is_homogeneous_of(1) {
            return Err(o
                .line
                .error(offset + 1, format!("{image} is not of tensor degree 1")));
        }
        images[o.index].insert(g, image);
    }
    let derivations = images
        .into_iter()
        .map(|m| DoubleDerivation::new(algebra, m))
        .collect::<Result<Vec<_>>>()?;
    Family::new(algebra, derivations, xs, ss, ts)
}
