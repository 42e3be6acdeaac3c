//! A line-oriented text format for finite-dimensional bialgebras.
//!
//! ```text
//! # the functions on Z/2
//! [meta]
//! name = Z/2 functions
//! field = Q
//!
//! [basis]
//! e0 0
//! e1 0
//!
//! [unit]
//! e0 + e1
//!
//! [product]
//! e0 ⊗ e0 -> e0
//! e1 ⊗ e1 -> e1
//!
//! [coproduct]
//! e0 -> e0⊗e0 + e1⊗e1
//! e1 -> e0⊗e1 + e1⊗e0
//!
//! [counit]
//! e0 -> 1
//! e1 -> 0
//!
//! [differential]
//! ```
//!
//! A term is `[coeff·]label[⊗label…]` with `coeff` an integer or `p/q`;
//! `*` may replace `·` and `@` may replace `⊗`. Terms are joined by `+` or
//! `-`, and `0` is the zero vector. Absent products, coproducts and
//! differentials are zero; the counit must be given on every label.
//! Sections may appear in any order. Everything after `#` is a comment.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graded::{check_bialgebra_axioms, AxiomReport, Bialgebra, TableBialgebra, TableBuilder, TableError, TableLabel, Window};
use crate::linear::{parse_rational, Rational, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub kind: SpecErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undeclared label `{0}`")]
    UndeclaredLabel(String),
    #[error("unknown section `[{0}]`")]
    UnknownSection(String),
    #[error("{0}")]
    Table(TableError),
}

/// A parsed algebra together with the axiom report computed on load.
#[derive(Clone, Debug)]
pub struct LoadedSpec {
    pub algebra: TableBialgebra,
    pub axioms: AxiomReport,
}

impl LoadedSpec {
    /// Whether some bialgebra axiom fails.
    pub fn flagged(&self) -> bool {
        !self.axioms.all_passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Plus,
    Minus,
    Dot,
    Tensor,
    Arrow,
}

#[derive(Clone, Copy)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err(&self, column: usize, kind: SpecErrorKind) -> SpecError {
        SpecError { line: self.number, column, kind }
    }

    fn syntax(&self, column: usize, msg: impl Into<String>) -> SpecError {
        self.err(column, SpecErrorKind::Syntax(msg.into()))
    }

    fn tokens(&self) -> Result<Vec<(usize, Tok)>, SpecError> {
        let chars: Vec<char> = self.text.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            match c {
                _ if c.is_whitespace() => i += 1,
                '+' => {
                    out.push((col, Tok::Plus));
                    i += 1;
                }
                '-' if chars.get(i + 1) == Some(&'>') => {
                    out.push((col, Tok::Arrow));
                    i += 2;
                }
                '-' => {
                    out.push((col, Tok::Minus));
                    i += 1;
                }
                '·' | '*' => {
                    out.push((col, Tok::Dot));
                    i += 1;
                }
                '⊗' | '@' => {
                    out.push((col, Tok::Tensor));
                    i += 1;
                }
                _ if word_char(c) => {
                    let start = i;
                    while i < chars.len() && (word_char(chars[i]) || (chars[i] == '-' && chars[i - 1] == '^')) {
                        i += 1;
                    }
                    out.push((col, Tok::Word(chars[start..i].iter().collect())));
                }
                _ => return Err(self.syntax(col, format!("unexpected character `{c}`"))),
            }
        }
        Ok(out)
    }
}

fn word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '^' | '\'' | '(' | ')' | '/' | '.')
}

fn valid_label(name: &str) -> bool {
    !name.is_empty() && name != "0" && !name.contains('/') && name.chars().all(|c| word_char(c) || c == '-') && !name.starts_with('-')
}

/// Resolves labels against the declared basis.
struct Labels<'b> {
    builder: &'b TableBuilder,
}

impl Labels<'_> {
    fn get(&self, line: &Line, column: usize, name: &str) -> Result<TableLabel, SpecError> {
        self.builder
            .label(name)
            .map_err(|_| line.err(column, SpecErrorKind::UndeclaredLabel(name.into())))
    }

    /// Parses `expr` from `toks`, requiring words of length `weight`.
    fn expression(
        &self,
        line: &Line,
        toks: &[(usize, Tok)],
        weight: usize,
    ) -> Result<SparseVector<Vec<TableLabel>>, SpecError> {
        let end = line.text.chars().count() + 1;
        if toks.is_empty() {
            return Err(line.syntax(end, "expected an expression"));
        }
        if let [(_, Tok::Word(w))] = toks {
            if w == "0" {
                return Ok(SparseVector::zero());
            }
        }
        let mut out = SparseVector::zero();
        let mut i = 0;
        let mut first = true;
        while i < toks.len() {
            let mut sign = Rational::one();
            match &toks[i].1 {
                Tok::Plus if !first => i += 1,
                Tok::Minus => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(line.syntax(toks[i].0, "expected `+` or `-` between terms")),
            }
            first = false;
            let start_col = toks.get(i).map_or(end, |t| t.0);
            let mut coeff = Rational::one();
            if let (Some((col, Tok::Word(w))), Some((_, Tok::Dot))) = (toks.get(i), toks.get(i + 1)) {
                coeff = parse_rational(w).ok_or_else(|| line.syntax(*col, format!("malformed coefficient `{w}`")))?;
                i += 2;
            }
            let mut word = Vec::new();
            loop {
                match toks.get(i) {
                    Some((col, Tok::Word(name))) => word.push(self.get(line, *col, name)?),
                    Some((col, _)) => return Err(line.syntax(*col, "expected a label")),
                    None => return Err(line.syntax(end, "expected a label")),
                }
                i += 1;
                if toks.get(i).map(|t| &t.1) == Some(&Tok::Tensor) {
                    i += 1;
                } else {
                    break;
                }
            }
            if word.len() != weight {
                return Err(line.syntax(start_col, format!("expected a term with {weight} tensor factor(s), found {}", word.len())));
            }
            out.add_term(word, sign * coeff);
        }
        Ok(out)
    }
}

fn element(t: SparseVector<Vec<TableLabel>>) -> SparseVector<TableLabel> {
    t.map_keys(|w| w[0].clone())
}

/// Splits `lhs -> rhs`, returning the token lists of both sides.
fn arrow<'t>(line: &Line, toks: &'t [(usize, Tok)]) -> Result<(&'t [(usize, Tok)], &'t [(usize, Tok)]), SpecError> {
    match toks.iter().position(|t| t.1 == Tok::Arrow) {
        Some(p) => Ok((&toks[..p], &toks[p + 1..])),
        None => Err(line.syntax(1, "expected `lhs -> rhs`")),
    }
}

fn single_label<'t>(line: &Line, lhs: &'t [(usize, Tok)]) -> Result<(usize, &'t str), SpecError> {
    match lhs {
        [(col, Tok::Word(w))] => Ok((*col, w)),
        _ => Err(line.syntax(lhs.first().map_or(1, |t| t.0), "expected a single label before `->`")),
    }
}

const SECTIONS: [&str; 7] = ["meta", "basis", "unit", "product", "coproduct", "counit", "differential"];

/// Parses a spec file and runs the bialgebra axioms on the result. Axiom
/// failures do not prevent loading; they are reported in
/// [`LoadedSpec::axioms`].
pub fn parse_spec(text: &str) -> Result<LoadedSpec, SpecError> {
    let mut sections: BTreeMap<&str, Vec<Line>> = BTreeMap::new();
    let mut current: Option<&str> = None;
    let mut last = 1;
    for (idx, raw) in text.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("");
        let line = Line { number: idx + 1, text };
        last = idx + 1;
        let trimmed = text.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('[') {
            let col = text.find('[').map_or(1, |p| text[..p].chars().count() + 1);
            let name = rest.strip_suffix(']').ok_or_else(|| line.syntax(col, "unterminated section header"))?.trim();
            let known = SECTIONS
                .iter()
                .find(|s| **s == name)
                .ok_or_else(|| line.err(col, SpecErrorKind::UnknownSection(name.into())))?;
            if sections.contains_key(known) {
                return Err(line.syntax(col, format!("section `[{name}]` appears twice")));
            }
            sections.insert(known, Vec::new());
            current = Some(known);
            continue;
        }
        match current {
            Some(s) => sections.get_mut(s).expect("opened").push(line),
            None => return Err(line.syntax(1, "content before the first section header")),
        }
    }
    let eof = Line { number: last, text: "" };
    let table = |line: &Line, column: usize, e: TableError| line.err(column, SpecErrorKind::Table(e));

    let mut builder = TableBuilder::new("unnamed");
    for line in sections.get("meta").into_iter().flatten() {
        let (key, value) = line.text.split_once('=').ok_or_else(|| line.syntax(1, "expected `key = value`"))?;
        let value_col = line.text[..line.text.len() - value.len()].chars().count() + 1;
        match key.trim() {
            "name" => builder.set_name(value.trim()),
            "field" => {
                if !matches!(value.trim(), "Q" | "QQ" | "ℚ") {
                    return Err(line.syntax(value_col, format!("unsupported field `{}`, only Q is available", value.trim())));
                }
            }
            other => return Err(line.syntax(1, format!("unknown meta key `{other}`"))),
        }
    }

    let mut declared: BTreeMap<String, (Line, usize)> = BTreeMap::new();
    for line in sections.get("basis").into_iter().flatten() {
        let toks = line.tokens()?;
        let (col, name, degree) = match toks.as_slice() {
            [(col, Tok::Word(name)), (_, Tok::Word(d))] => (*col, name.clone(), d.parse::<i64>().ok()),
            [(col, Tok::Word(name)), (_, Tok::Minus), (_, Tok::Word(d))] => (*col, name.clone(), d.parse::<i64>().ok().map(|d| -d)),
            _ => return Err(line.syntax(1, "expected `label degree`")),
        };
        if !valid_label(&name) {
            return Err(line.syntax(col, format!("`{name}` is not a valid label")));
        }
        let degree = degree.ok_or_else(|| line.syntax(col + name.chars().count(), "expected an integer degree"))?;
        builder.declare(&name, degree).map_err(|e| table(line, col, e))?;
        declared.insert(name, (*line, col));
    }

    let mut unit = None;
    for line in sections.get("unit").into_iter().flatten() {
        if unit.is_some() {
            return Err(line.syntax(1, "the unit is given twice"));
        }
        let toks = line.tokens()?;
        unit = Some(element(Labels { builder: &builder }.expression(line, &toks, 1)?));
    }
    match unit {
        Some(u) => builder.set_unit(u).map_err(|e| table(&eof, 1, e))?,
        None => return Err(table(&eof, 1, TableError::MissingUnit)),
    }

    for line in sections.get("product").into_iter().flatten() {
        let toks = line.tokens()?;
        let (lhs, rhs) = arrow(line, &toks)?;
        let labels = Labels { builder: &builder };
        let (a, b) = match lhs {
            [(ca, Tok::Word(a)), (_, Tok::Tensor), (cb, Tok::Word(b))] => (labels.get(line, *ca, a)?, labels.get(line, *cb, b)?),
            _ => return Err(line.syntax(1, "expected `a ⊗ b -> …`")),
        };
        let value = element(labels.expression(line, rhs, 1)?);
        builder.set_product(&a, &b, value).map_err(|e| table(line, 1, e))?;
    }
    for line in sections.get("coproduct").into_iter().flatten() {
        let toks = line.tokens()?;
        let (lhs, rhs) = arrow(line, &toks)?;
        let labels = Labels { builder: &builder };
        let (col, name) = single_label(line, lhs)?;
        let a = labels.get(line, col, name)?;
        let value = labels.expression(line, rhs, 2)?;
        builder.set_coproduct(&a, value).map_err(|e| table(line, 1, e))?;
    }
    for line in sections.get("counit").into_iter().flatten() {
        let toks = line.tokens()?;
        let (lhs, rhs) = arrow(line, &toks)?;
        let (col, name) = single_label(line, lhs)?;
        let a = Labels { builder: &builder }.get(line, col, name)?;
        let value = match rhs {
            [(_, Tok::Word(v))] => parse_rational(v),
            [(_, Tok::Minus), (_, Tok::Word(v))] => parse_rational(v).map(|r| -r),
            _ => None,
        };
        let column = rhs.first().map_or(line.text.chars().count() + 1, |t| t.0);
        let value = value.ok_or_else(|| line.syntax(column, "expected a rational counit value"))?;
        builder.set_counit(&a, value).map_err(|e| table(line, column, e))?;
    }
    for line in sections.get("differential").into_iter().flatten() {
        let toks = line.tokens()?;
        let (lhs, rhs) = arrow(line, &toks)?;
        let labels = Labels { builder: &builder };
        let (col, name) = single_label(line, lhs)?;
        let a = labels.get(line, col, name)?;
        let value = element(labels.expression(line, rhs, 1)?);
        builder.set_differential(&a, value).map_err(|e| table(line, 1, e))?;
    }

    let algebra = builder.build().map_err(|e| match &e {
        TableError::MissingCounit(name) => match declared.get(name) {
            Some((line, col)) => table(line, *col, e),
            None => table(&eof, 1, e),
        },
        _ => table(&eof, 1, e),
    })?;
    let axioms = check_bialgebra_axioms(&algebra, &Window::default());
    Ok(LoadedSpec { algebra, axioms })
}

fn render_vector<K: Ord + Clone>(out: &mut String, v: &SparseVector<K>, show: impl Fn(&K) -> String) {
    if v.is_zero() {
        out.push('0');
        return;
    }
    for (i, (k, c)) in v.iter().enumerate() {
        let negative = c < &Rational::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            let _ = write!(out, "{abs}·");
        }
        out.push_str(&show(k));
    }
}

fn show_word(w: &Vec<TableLabel>) -> String {
    w.iter().map(TableLabel::as_str).collect::<Vec<_>>().join("⊗")
}

/// Serializes a table algebra; [`parse_spec`] inverts it.
pub fn render_spec(alg: &TableBialgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[meta]\nname = {}\nfield = Q\n\n[basis]", alg.name());
    for l in alg.labels() {
        let _ = writeln!(out, "{l} {}", alg.degree(l));
    }
    out.push_str("\n[unit]\n");
    render_vector(&mut out, &alg.unit(), |l| l.to_string());
    out.push_str("\n\n[product]\n");
    for ((a, b), v) in alg.products() {
        let _ = write!(out, "{a} ⊗ {b} -> ");
        render_vector(&mut out, v, |l| l.to_string());
        out.push('\n');
    }
    out.push_str("\n[coproduct]\n");
    for (a, v) in alg.coproducts() {
        let _ = write!(out, "{a} -> ");
        render_vector(&mut out, v, show_word);
        out.push('\n');
    }
    out.push_str("\n[counit]\n");
    for l in alg.labels() {
        let _ = writeln!(out, "{l} -> {}", alg.counit(l));
    }
    out.push_str("\n[differential]\n");
    for (a, v) in alg.differentials() {
        let _ = write!(out, "{a} -> ");
        render_vector(&mut out, v, |l| l.to_string());
        out.push('\n');
    }
    out
}

/// Tabulates a finite-dimensional algebra and serializes it.
pub fn render_algebra<B: Bialgebra>(alg: &B) -> Result<String, TableError> {
    Ok(render_spec(&TableBialgebra::tabulate(alg)?))
}

impl fmt::Display for LoadedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} basis labels)", self.algebra.name(), self.algebra.labels().len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{DgSweedlerHopf, ExteriorPrimitiveHopf, FiniteGroupFunctionHopf};
    use crate::linear::{int, rat};

    fn round_trip<B: Bialgebra>(alg: &B) {
        let table = TableBialgebra::tabulate(alg).unwrap();
        let text = render_spec(&table);
        let loaded = parse_spec(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", alg.name()));
        assert_eq!(loaded.algebra, table, "{text}");
        assert!(!loaded.flagged(), "{}", loaded.axioms);
        assert_eq!(render_spec(&loaded.algebra), text);
    }

    #[test]
    fn finite_builtins_round_trip() {
        round_trip(&FiniteGroupFunctionHopf::cyclic(2));
        round_trip(&FiniteGroupFunctionHopf::cyclic(3));
        round_trip(&FiniteGroupFunctionHopf::symmetric3());
        round_trip(&ExteriorPrimitiveHopf);
        round_trip(&DgSweedlerHopf);
    }

    const Z2: &str = "
        # functions on Z/2
        [meta]
        name = Z/2 functions
        field = Q
        [basis]
        e0 0
        e1 0
        [unit]
        e0 + e1
        [product]
        e0 ⊗ e0 -> e0
        e1 @ e1 -> e1   # ascii tensor
        [coproduct]
        e0 -> e0⊗e0 + e1⊗e1
        e1 -> e0⊗e1+e1 ⊗ e0
        [counit]
        e0 -> 1
        e1 -> 0
    ";

    #[test]
    fn hand_written_z2() {
        let loaded = parse_spec(Z2).unwrap();
        assert!(!loaded.flagged());
        let z2 = TableBialgebra::tabulate(&FiniteGroupFunctionHopf::cyclic(2)).unwrap();
        assert_eq!(loaded.algebra.labels(), z2.labels());
        assert!(loaded.algebra.products().eq(z2.products()));
        assert!(loaded.algebra.coproducts().eq(z2.coproducts()));
        assert!(loaded.algebra.counits().eq(z2.counits()));
    }

    #[test]
    fn coefficients_and_negative_degrees() {
        let text = "[basis]\n1 0\nth -1\n[unit]\n1\n[product]\n1 ⊗ th -> th\nth ⊗ 1 -> th\n1 ⊗ 1 -> 1\n\
                    [coproduct]\n1 -> 1⊗1\nth -> 1⊗th + th⊗1\n[counit]\n1 -> 1\nth -> 0\n\
                    [differential]\nth -> 0\n";
        let loaded = parse_spec(text).unwrap();
        let th = loaded.algebra.label("th").unwrap();
        assert_eq!(loaded.algebra.degree(&th), -1);
        assert!(!loaded.flagged(), "{}", loaded.axioms);
        let scaled = "[basis]\na 0\n[unit]\n1/2·a\n[product]\na ⊗ a -> 2*a\n[coproduct]\na -> 1/2·a⊗a\n[counit]\na -> 2\n";
        let loaded = parse_spec(scaled).unwrap();
        let a = loaded.algebra.label("a").unwrap();
        assert_eq!(loaded.algebra.unit().get(&a), rat(1, 2));
        assert_eq!(loaded.algebra.counit(&a), int(2));
        assert!(!loaded.flagged(), "{}", loaded.axioms);
    }

    fn error_of(text: &str) -> SpecError {
        parse_spec(text).unwrap_err()
    }

    #[test]
    fn errors_carry_positions() {
        let missing = Z2.replace("e1 -> 0\n", "\n");
        let e = error_of(&missing);
        assert_eq!(e.kind, SpecErrorKind::Table(TableError::MissingCounit("e1".into())));
        assert_eq!(e.line, 8);
        assert!(e.to_string().contains("e1"));

        let e = error_of(&Z2.replace("e0 -> e0⊗e0 + e1⊗e1", "e0 -> e0⊗e0 + e2⊗e1"));
        assert_eq!(e.kind, SpecErrorKind::UndeclaredLabel("e2".into()));
        assert_eq!((e.line, e.column), (15, 23));

        let e = error_of(&Z2.replace("e0 -> 1", "e0 -> 1/0"));
        assert!(matches!(e.kind, SpecErrorKind::Syntax(_)));
        assert_eq!(e.line, 18);

        let e = error_of(&Z2.replace("e0 -> e0⊗e0 +", "e0 -> 3/·e0⊗e0 +"));
        assert!(matches!(e.kind, SpecErrorKind::Syntax(_)), "{e}");

        let e = error_of(&Z2.replace("[product]", "[products]"));
        assert_eq!(e.kind, SpecErrorKind::UnknownSection("products".into()));
        assert_eq!((e.line, e.column), (11, 9));

        let e = error_of(&Z2.replace("e1 -> e0⊗e1+e1 ⊗ e0", "e1 -> e0 + e1"));
        assert!(matches!(e.kind, SpecErrorKind::Syntax(ref m) if m.contains("2 tensor factor")), "{e}");

        let e = error_of(&Z2.replace("e1 0\n", "e1 zero\n"));
        assert_eq!(e.line, 8);
        assert!(matches!(error_of("e0 0\n[basis]\n").kind, SpecErrorKind::Syntax(_)));
        assert_eq!(error_of("[basis]\na 0\n").kind, SpecErrorKind::Table(TableError::MissingUnit));
        let e = error_of(&Z2.replace("e0 ⊗ e0 -> e0", "e0 ⊗ e0 -> e0 $"));
        assert_eq!((e.line, e.column), (12, 23));
    }

    #[test]
    fn broken_coassociativity_loads_with_a_flag() {
        let broken = Z2.replace("e1 -> e0⊗e1+e1 ⊗ e0", "e1 -> e0⊗e1");
        let loaded = parse_spec(&broken).unwrap();
        assert!(loaded.flagged());
        let failure = loaded.axioms.get("coassociativity").unwrap();
        assert!(!failure.passed());
        assert!(failure.witness.as_ref().unwrap().contains("e1"));
    }
}
