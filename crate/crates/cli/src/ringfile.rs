//! The ring file format.
//!
//! ```text
//! # comment
//! field: QQ                    # or GF(p)
//! vars: a b c d
//! grading: 1 1 0 0; 0 0 1 1    # optional, one row per component
//! order: degrevlex             # optional: lex, deglex or degrevlex
//! ideal: a^2 + b*c; a*b - b*d
//!   b^2; a*c                   # indented lines continue the block
//! filtration:
//!   ideal m: a, b, c, d
//!   ideal 0:
//!   witness m: acd + b -> m    # m = acd + (b), acd : m = m
//! ```
//!
//! Lines and columns in diagnostics are 1-based.

use koszul::koszulness::{FiltrationIdeal, FiltrationWitness, KoszulFiltration};
use koszul::poly::FieldDescriptor;
use koszul::{Error, Field, Ideal, MonomialOrder, PolyError, Polynomial, PolynomialRing, PrimeField, QuotientRing};

use crate::error::CliError;

/// A piece of text with the position of its first character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawWitness {
    pub ideal: Located,
    pub base: Located,
    pub element: Located,
    pub colon: Located,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawFiltration {
    pub ideals: Vec<(Located, Vec<Located>)>,
    pub witnesses: Vec<RawWitness>,
}

/// A ring file after syntax checking, before polynomials are parsed
/// (which needs the coefficient field).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRingFile {
    pub field: FieldDescriptor,
    pub vars: Vec<String>,
    pub grading: Option<Vec<Vec<i64>>>,
    pub order: Option<MonomialOrder>,
    pub ideal: Vec<Located>,
    pub filtration: Option<RawFiltration>,
    lines: KeyLines,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct KeyLines {
    vars: usize,
    grading: usize,
    order: usize,
    ideal: usize,
}

/// A validated ring with the generators as written and the optional
/// filtration.
#[derive(Clone, Debug)]
pub struct RingFile<K: Field> {
    pub quotient: QuotientRing<K>,
    pub generators: Vec<Polynomial<K>>,
    pub filtration: Option<KoszulFiltration<K>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn column_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Splits `text` (starting at byte `start` of `line`) on `sep`, trimming
/// pieces and dropping empty ones.
fn split_located(line: &str, line_no: usize, start: usize, sep: char) -> Vec<Located> {
    let text = &line[start..];
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(sep) {
        let lead = piece.len() - piece.trim_start().len();
        let trimmed = piece.trim();
        if !trimmed.is_empty() {
            out.push(Located {
                text: trimmed.to_string(),
                line: line_no,
                column: column_of(line, start + offset + lead),
            });
        }
        offset += piece.len() + sep.len_utf8();
    }
    out
}

fn parse_field(value: &Located) -> Result<FieldDescriptor, CliError> {
    let t = value.text.replace(' ', "");
    if t == "QQ" || t == "Q" {
        return Ok(FieldDescriptor::Rationals);
    }
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = p
            .parse()
            .map_err(|_| syntax(value.line, value.column, format!("bad modulus in {:?}", value.text)))?;
        PrimeField::new(p).map_err(|e| syntax(value.line, value.column, e.to_string()))?;
        return Ok(FieldDescriptor::Prime(p));
    }
    Err(syntax(
        value.line,
        value.column,
        format!("unknown field {:?} (expected QQ or GF(p))", value.text),
    ))
}

fn parse_order(value: &Located) -> Result<MonomialOrder, CliError> {
    parse_order_name(&value.text).ok_or_else(|| {
        syntax(
            value.line,
            value.column,
            format!("unknown order {:?} (expected lex, deglex or degrevlex)", value.text),
        )
    })
}

pub fn parse_order_name(name: &str) -> Option<MonomialOrder> {
    match name {
        "lex" => Some(MonomialOrder::Lex),
        "deglex" => Some(MonomialOrder::DegLex),
        "degrevlex" | "grevlex" => Some(MonomialOrder::DegRevLex),
        _ => None,
    }
}

fn parse_grading_row(row: &Located) -> Result<Vec<i64>, CliError> {
    row.text
        .split_whitespace()
        .map(|w| {
            w.parse::<i64>()
                .map_err(|_| syntax(row.line, row.column, format!("bad grading entry {w:?}")))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    None,
    Grading,
    Ideal,
    Filtration,
}

impl RawRingFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut field: Option<FieldDescriptor> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut grading_rows: Option<Vec<Located>> = None;
        let mut order: Option<MonomialOrder> = None;
        let mut ideal: Option<Vec<Located>> = None;
        let mut filtration: Option<RawFiltration> = None;
        let mut lines = KeyLines::default();
        let mut block = Block::None;

        for (k, full) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = match full.find('#') {
                Some(p) => &full[..p],
                None => full,
            };
            if line.trim().is_empty() {
                continue;
            }
            if line.starts_with(char::is_whitespace) {
                let start = line.len() - line.trim_start().len();
                match block {
                    Block::Grading => grading_rows
                        .as_mut()
                        .expect("open block")
                        .extend(split_located(line, line_no, start, ';')),
                    Block::Ideal => ideal
                        .as_mut()
                        .expect("open block")
                        .extend(split_located(line, line_no, start, ';')),
                    Block::Filtration => {
                        parse_filtration_line(line, line_no, start, filtration.as_mut().expect("open block"))?
                    }
                    Block::None => {
                        return Err(syntax(
                            line_no,
                            column_of(line, start),
                            "indented line outside a grading, ideal or filtration block",
                        ))
                    }
                }
                continue;
            }
            let Some(colon) = line.find(':') else {
                return Err(syntax(line_no, 1, "expected `key: value`"));
            };
            let key = line[..colon].trim();
            let value_start = colon + 1;
            let value = Located {
                text: line[value_start..].trim().to_string(),
                line: line_no,
                column: column_of(line, value_start + (line[value_start..].len() - line[value_start..].trim_start().len())),
            };
            let duplicate = || syntax(line_no, 1, format!("duplicate key {key:?}"));
            block = Block::None;
            match key {
                "field" => {
                    if field.is_some() {
                        return Err(duplicate());
                    }
                    field = Some(parse_field(&value)?);
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(duplicate());
                    }
                    lines.vars = line_no;
                    let names: Vec<String> = value
                        .text
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                    if let Some(bad) = names.iter().find(|n| !is_identifier(n)) {
                        let at = line.find(bad.as_str()).unwrap_or(value_start);
                        return Err(syntax(line_no, column_of(line, at), format!("invalid variable name {bad:?}")));
                    }
                    vars = Some(names);
                }
                "grading" => {
                    if grading_rows.is_some() {
                        return Err(duplicate());
                    }
                    lines.grading = line_no;
                    grading_rows = Some(split_located(line, line_no, value_start, ';'));
                    block = Block::Grading;
                }
                "order" => {
                    if order.is_some() {
                        return Err(duplicate());
                    }
                    lines.order = line_no;
                    order = Some(parse_order(&value)?);
                }
                "ideal" => {
                    if ideal.is_some() {
                        return Err(duplicate());
                    }
                    lines.ideal = line_no;
                    ideal = Some(split_located(line, line_no, value_start, ';'));
                    block = Block::Ideal;
                }
                "filtration" => {
                    if filtration.is_some() {
                        return Err(duplicate());
                    }
                    if !value.text.is_empty() {
                        return Err(syntax(line_no, value.column, "filtration entries go on indented lines"));
                    }
                    filtration = Some(RawFiltration::default());
                    block = Block::Filtration;
                }
                _ => return Err(syntax(line_no, 1, format!("unknown key {key:?}"))),
            }
        }

        let vars = vars.ok_or_else(|| syntax(1, 1, "missing `vars:` line"))?;
        let grading = grading_rows
            .map(|rows| rows.iter().map(parse_grading_row).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Ok(RawRingFile {
            field: field.unwrap_or(FieldDescriptor::Rationals),
            vars,
            grading,
            order,
            ideal: ideal.unwrap_or_default(),
            filtration,
            lines,
        })
    }

    /// Parses the polynomials over `field` and validates the ring.
    pub fn build<K: Field>(&self, field: K) -> Result<RingFile<K>, CliError> {
        let mut ring = PolynomialRing::new(field, self.vars.iter().cloned())
            .map_err(|e| syntax(self.lines.vars, 1, e.to_string()))?;
        if let Some(rows) = &self.grading {
            ring = ring
                .with_grading(rows.clone())
                .map_err(|e| syntax(self.lines.grading, 1, e.to_string()))?;
        }
        if let Some(order) = &self.order {
            ring = ring
                .with_order(order.clone())
                .map_err(|e| syntax(self.lines.order, 1, e.to_string()))?;
        }
        let mut generators = Vec::with_capacity(self.ideal.len());
        for g in &self.ideal {
            let f = parse_poly(&ring, g)?;
            if !f.is_homogeneous() {
                return Err(syntax(g.line, g.column, format!("generator {:?} is not homogeneous", g.text)));
            }
            if matches!(f.total_degree(), Some(d) if d <= 1) {
                return Err(syntax(
                    g.line,
                    g.column,
                    format!("generator {:?} has degree at most one; rings must be standard graded", g.text),
                ));
            }
            generators.push(f);
        }
        let ideal = Ideal::new(&ring, generators.iter().filter(|f| !f.is_zero()).cloned().collect())
            .map_err(|e| syntax(self.lines.ideal, 1, e.to_string()))?;
        let quotient = QuotientRing::new(ideal).map_err(|e| match e {
            Error::LowDegreeElement(_) => syntax(self.lines.ideal, 1, e.to_string()),
            other => syntax(self.lines.ideal, 1, other.to_string()),
        })?;
        let filtration = self
            .filtration
            .as_ref()
            .map(|f| build_filtration(&ring, f))
            .transpose()?;
        Ok(RingFile {
            quotient,
            generators,
            filtration,
        })
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_poly<K: Field>(ring: &PolynomialRing<K>, g: &Located) -> Result<Polynomial<K>, CliError> {
    ring.parse(&g.text).map_err(|e| match e {
        PolyError::Parse { column, message } => syntax(g.line, g.column + column - 1, message),
        PolyError::UnknownVariable(v) => {
            let at = g.text.find(v.as_str()).map_or(0, |b| g.text[..b].chars().count());
            syntax(g.line, g.column + at, format!("unknown variable {v:?}"))
        }
        other => syntax(g.line, g.column, other.to_string()),
    })
}

fn parse_filtration_line(line: &str, line_no: usize, start: usize, out: &mut RawFiltration) -> Result<(), CliError> {
    let body = &line[start..];
    let (kind, rest_start) = if let Some(r) = body.strip_prefix("ideal ") {
        ("ideal", line.len() - r.len())
    } else if let Some(r) = body.strip_prefix("witness ") {
        ("witness", line.len() - r.len())
    } else {
        return Err(syntax(
            line_no,
            column_of(line, start),
            "expected `ideal NAME: gens` or `witness NAME: BASE + ELEMENT -> COLON`",
        ));
    };
    let Some(colon) = line[rest_start..].find(':').map(|c| c + rest_start) else {
        return Err(syntax(line_no, column_of(line, rest_start), "missing `:` after the ideal name"));
    };
    let name = located_trim(line, line_no, rest_start, colon);
    if name.text.is_empty() {
        return Err(syntax(line_no, column_of(line, rest_start), "missing ideal name"));
    }
    if kind == "ideal" {
        if out.ideals.iter().any(|(n, _)| n.text == name.text) {
            return Err(syntax(name.line, name.column, format!("ideal {:?} declared twice", name.text)));
        }
        let gens = split_located(line, line_no, colon + 1, ',');
        out.ideals.push((name, gens));
        return Ok(());
    }
    let after = colon + 1;
    let Some(plus) = line[after..].find('+').map(|p| p + after) else {
        return Err(syntax(line_no, column_of(line, after), "witness needs `BASE + ELEMENT -> COLON`"));
    };
    let Some(arrow) = line[plus..].find("->").map(|p| p + plus) else {
        return Err(syntax(line_no, column_of(line, plus), "witness needs `-> COLON`"));
    };
    let witness = RawWitness {
        ideal: name,
        base: located_trim(line, line_no, after, plus),
        element: located_trim(line, line_no, plus + 1, arrow),
        colon: located_trim(line, line_no, arrow + 2, line.len()),
    };
    for part in [&witness.base, &witness.element, &witness.colon] {
        if part.text.is_empty() {
            return Err(syntax(part.line, part.column, "empty witness component"));
        }
    }
    out.witnesses.push(witness);
    Ok(())
}

fn located_trim(line: &str, line_no: usize, from: usize, to: usize) -> Located {
    let piece = &line[from..to];
    let lead = piece.len() - piece.trim_start().len();
    Located {
        text: piece.trim().to_string(),
        line: line_no,
        column: column_of(line, from + lead),
    }
}

fn build_filtration<K: Field>(ring: &PolynomialRing<K>, raw: &RawFiltration) -> Result<KoszulFiltration<K>, CliError> {
    let ideals = raw
        .ideals
        .iter()
        .map(|(name, gens)| {
            Ok(FiltrationIdeal {
                name: name.text.clone(),
                gens: gens.iter().map(|g| parse_poly(ring, g)).collect::<Result<_, CliError>>()?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let known = |l: &Located| -> Result<String, CliError> {
        if ideals.iter().any(|i| i.name == l.text) {
            Ok(l.text.clone())
        } else {
            Err(syntax(l.line, l.column, format!("unknown filtration ideal {:?}", l.text)))
        }
    };
    let witnesses = raw
        .witnesses
        .iter()
        .map(|w| {
            Ok(FiltrationWitness {
                ideal: known(&w.ideal)?,
                base: known(&w.base)?,
                element: parse_poly(ring, &w.element)?,
                colon: known(&w.colon)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(KoszulFiltration { ideals, witnesses })
}

/// Canonical text of a ring: defaults omitted, polynomials in normal
/// form. Parsing the output and printing again gives the same text.
pub fn print_ring_file<K: Field>(
    ring: &PolynomialRing<K>,
    generators: &[Polynomial<K>],
    filtration: Option<&KoszulFiltration<K>>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("field: {}\n", ring.field().descriptor()));
    out.push_str(&format!("vars: {}\n", ring.names().join(" ")));
    if !ring.is_standard_graded() {
        let rows: Vec<String> = ring
            .grading()
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&format!("grading: {}\n", rows.join("; ")));
    }
    match ring.order() {
        MonomialOrder::DegRevLex => {}
        o @ (MonomialOrder::Lex | MonomialOrder::DegLex) => out.push_str(&format!("order: {o}\n")),
        o => out.push_str(&format!("# order {o} cannot be expressed in a ring file\n")),
    }
    let gens: Vec<String> = generators.iter().filter(|f| !f.is_zero()).map(|f| f.to_string()).collect();
    let inline = gens.iter().map(|g| g.len() + 2).sum::<usize>() <= 72;
    if gens.is_empty() {
        out.push_str("ideal:\n");
    } else if inline {
        out.push_str(&format!("ideal: {}\n", gens.join("; ")));
    } else {
        out.push_str("ideal:\n");
        for (k, g) in gens.iter().enumerate() {
            let sep = if k + 1 < gens.len() { ";" } else { "" };
            out.push_str(&format!("  {g}{sep}\n"));
        }
    }
    if let Some(f) = filtration {
        out.push_str("filtration:\n");
        for i in &f.ideals {
            let gens: Vec<String> = i.gens.iter().map(|g| g.to_string()).collect();
            if gens.is_empty() {
                out.push_str(&format!("  ideal {}:\n", i.name));
            } else {
                out.push_str(&format!("  ideal {}: {}\n", i.name, gens.join(", ")));
            }
        }
        for w in &f.witnesses {
            out.push_str(&format!("  witness {}: {} + {} -> {}\n", w.ideal, w.base, w.element, w.colon));
        }
    }
    out
}

#[cfg(test)]
impl<K: Field> RingFile<K> {
    pub fn to_text(&self) -> String {
        print_ring_file(self.quotient.ambient(), &self.generators, self.filtration.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use koszul::Rationals;

    use super::*;

    const KOS: &str = "\
field: QQ
vars: a b c d
ideal: a^2 + b*c; a*b - b*d
  b^2; a*c; a*d  # continued
";

    fn err(text: &str) -> (usize, usize, String) {
        match RawRingFile::parse(text).and_then(|r| r.build(Rationals)) {
            Err(CliError::Syntax { line, column, message }) => (line, column, message),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parses_and_round_trips() {
        let r = RawRingFile::parse(KOS).unwrap().build(Rationals).unwrap();
        assert_eq!(r.generators.len(), 5);
        let text = r.to_text();
        assert_eq!(text, "field: QQ\nvars: a b c d\nideal: a^2 + b*c; a*b - b*d; b^2; a*c; a*d\n");
        let again = RawRingFile::parse(&text).unwrap().build(Rationals).unwrap();
        assert_eq!(again.to_text(), text);
    }

    #[test]
    fn empty_ideal_is_the_polynomial_ring() {
        let r = RawRingFile::parse("vars: x y\nideal:\n").unwrap().build(Rationals).unwrap();
        assert!(r.quotient.is_polynomial_ring());
        let r = RawRingFile::parse("vars: x y\n").unwrap().build(Rationals).unwrap();
        assert!(r.quotient.is_polynomial_ring());
    }

    #[test]
    fn diagnostics_have_positions() {
        assert_eq!(err("vars: a b\nideal: a + b^2\n").0, 2);
        let (line, column, msg) = err("vars: a b\nideal: a^2; a*z\n");
        assert_eq!((line, column), (2, 15));
        assert!(msg.contains("unknown variable"));
        let (line, column, _) = err("vars: a b\nideal: a^2 +\n");
        assert_eq!((line, column), (2, 13));
        assert_eq!(err("vars: a b\nideal: a - b\n").2, "generator \"a - b\" has degree at most one; rings must be standard graded");
        assert_eq!(err("vars: a b\nfoo: 1\n").0, 2);
        assert_eq!(err("field: GF(4)\nvars: a\n").0, 1);
    }

    #[test]
    fn grading_order_and_filtration_round_trip() {
        let text = "\
field: GF(101)
vars: x y u v
grading: 1 1 0 0; 0 0 1 1
order: lex
ideal: x*u - y*v
filtration:
  ideal m: x, y, u, v
  ideal 0:
  witness m: 0 + x -> m
";
        let raw = RawRingFile::parse(text).unwrap();
        let r = raw.build(PrimeField::new(101).unwrap()).unwrap();
        let printed = r.to_text();
        assert!(printed.contains("grading: 1 1 0 0; 0 0 1 1\norder: lex\n"));
        let again = RawRingFile::parse(&printed).unwrap().build(PrimeField::new(101).unwrap()).unwrap();
        assert_eq!(again.to_text(), printed);
        assert_eq!(r.filtration.unwrap().witnesses[0].colon, "m");
    }

    #[test]
    fn witness_names_must_exist() {
        let (line, column, _) = err("vars: a b\nfiltration:\n  ideal m: a, b\n  witness m: z + a -> m\n");
        assert_eq!((line, column), (4, 14));
    }
}
