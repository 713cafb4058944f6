//! Session files: one ring and named modules over it, in TOML syntax.
//!
//! ```toml
//! field = 2
//!
//! [ring]
//! vars = ["x", "y"]
//! relations = ["x^2", "x*y", "y^2"]
//!
//! [modules.M]
//! kind = "cokernel"          # coker(R^m -> R^n), matrix given row by row
//! matrix = [["x", "y"]]
//!
//! [modules.F]
//! kind = "free"
//! rank = 2
//! ```
//!
//! Module kinds: `free` (`rank`), `cokernel` (`matrix`, an n × m list of
//! polynomial strings; `[[]]` is the n = 1, m = 0 case), `dualizing`,
//! `residue_field`, `maximal_ideal`, and `sum` (`of`, a list of module
//! names). The names `R`, `k` and `D` refer to the ring, its residue field
//! and its dualizing module unless the session defines them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use serde::Deserialize;
use toml::Spanned;

use semidual_core::module::presentation_to_module;
use semidual_core::poly::Poly;
use semidual_core::{Algebra, Error, Field, Module};

use crate::polyparse::parse_poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Free {
        rank: usize,
    },
    /// `entries[i][j]`, an n × m matrix.
    Cokernel {
        rows: usize,
        cols: usize,
        entries: Vec<Vec<Poly>>,
    },
    Dualizing,
    ResidueField,
    MaximalIdeal,
    Sum {
        of: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub field: u32,
    pub vars: Vec<String>,
    /// Normalized mod the field characteristic.
    pub relations: Vec<Poly>,
    pub modules: BTreeMap<String, ModuleSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: warning: {}",
            self.line, self.column, self.message
        )
    }
}

#[derive(Debug)]
pub struct Parsed {
    pub session: Session,
    pub warnings: Vec<Warning>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSession {
    field: Spanned<i64>,
    ring: Spanned<RawRing>,
    #[serde(default)]
    modules: BTreeMap<String, Spanned<RawModule>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    vars: Spanned<Vec<Spanned<String>>>,
    #[serde(default)]
    relations: Vec<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    kind: Spanned<String>,
    rank: Option<Spanned<i64>>,
    matrix: Option<Spanned<Vec<Vec<Spanned<String>>>>>,
    of: Option<Vec<Spanned<String>>>,
}

/// 1-based line and column (in characters) of a byte offset.
pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[start..].chars().count() + 1)
}

struct Locator<'a> {
    src: &'a str,
}

impl Locator<'_> {
    fn error(&self, span: Range<usize>, message: impl Into<String>) -> ParseError {
        let (line, column) = line_col(self.src, span.start);
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn warning(&self, span: Range<usize>, message: impl Into<String>) -> Warning {
        let (line, column) = line_col(self.src, span.start);
        Warning {
            line,
            column,
            message: message.into(),
        }
    }

    /// Parses a polynomial held in a TOML string, locating errors inside it.
    fn poly(
        &self,
        s: &Spanned<String>,
        vars: &[String],
        p: u32,
        warnings: &mut Vec<Warning>,
    ) -> Result<Poly, ParseError> {
        // The span covers the quotes; the text starts one byte in when the
        // string is a plain basic or literal string.
        let span = s.span();
        let inner = span.start + 1;
        let poly = parse_poly(s.get_ref()).map_err(|e| {
            self.error(
                inner + e.offset..inner + e.offset,
                format!("malformed polynomial: {}", e.message),
            )
        })?;
        if let Some(v) = poly.variables().find(|v| !vars.iter().any(|w| w == v)) {
            return Err(self.error(span, format!("unknown variable '{v}'")));
        }
        if poly.has_vanishing_coefficient(p) {
            warnings.push(self.warning(
                span.clone(),
                format!("a coefficient of '{}' vanishes mod {p}", s.get_ref()),
            ));
        }
        Ok(poly.normalized(p))
    }
}

const IMPLICIT: [&str; 3] = ["R", "k", "D"];

pub fn parse_session(src: &str) -> Result<Parsed, ParseError> {
    let loc = Locator { src };
    let raw: RawSession = toml::from_str(src).map_err(|e| {
        let span = e.span().unwrap_or(0..0);
        loc.error(span, e.message().to_string())
    })?;
    let p = *raw.field.get_ref();
    if Field::new(p.max(0) as u64).is_err() || p < 2 {
        return Err(loc.error(
            raw.field.span(),
            format!("field must be a prime below 2^31, got {p}"),
        ));
    }
    let p = p as u32;
    let mut warnings = Vec::new();

    let ring = raw.ring.into_inner();
    let mut vars: Vec<String> = Vec::new();
    for v in ring.vars.get_ref() {
        let name = v.get_ref();
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            return Err(loc.error(v.span(), format!("invalid variable name '{name}'")));
        }
        if vars.contains(name) {
            return Err(loc.error(v.span(), format!("duplicate variable '{name}'")));
        }
        vars.push(name.clone());
    }
    if vars.is_empty() {
        return Err(loc.error(ring.vars.span(), "the ring needs at least one variable"));
    }
    let mut relations = Vec::new();
    for r in &ring.relations {
        let poly = loc.poly(r, &vars, p, &mut warnings)?;
        if poly.terms.len() != 1 {
            return Err(loc.error(r.span(), "relations must be monomials"));
        }
        if poly.terms[0].1.is_empty() {
            return Err(loc.error(r.span(), "a constant relation makes the ring zero"));
        }
        relations.push(poly);
    }

    let mut modules = BTreeMap::new();
    for (name, spanned) in &raw.modules {
        let span = spanned.span();
        let m = spanned.get_ref();
        let kind = m.kind.get_ref().as_str();
        let unexpected = |field: &str, present: bool| -> Result<(), ParseError> {
            if present {
                Err(loc.error(
                    span.clone(),
                    format!("module '{name}': kind '{kind}' does not take '{field}'"),
                ))
            } else {
                Ok(())
            }
        };
        unexpected("rank", m.rank.is_some() && kind != "free")?;
        unexpected("matrix", m.matrix.is_some() && kind != "cokernel")?;
        unexpected("of", m.of.is_some() && kind != "sum")?;
        let spec = match kind {
            "free" => {
                let r = m.rank.as_ref().ok_or_else(|| loc.error(span.clone(), format!("module '{name}': free needs 'rank'")))?;
                let rank = usize::try_from(*r.get_ref())
                    .map_err(|_| loc.error(r.span(), "rank must be non-negative"))?;
                ModuleSpec::Free { rank }
            }
            "cokernel" => {
                let mat = m
                    .matrix
                    .as_ref()
                    .ok_or_else(|| loc.error(span.clone(), format!("module '{name}': cokernel needs 'matrix'")))?;
                let rows = mat.get_ref().len();
                let cols = mat.get_ref().first().map_or(0, Vec::len);
                if mat.get_ref().iter().any(|r| r.len() != cols) {
                    return Err(loc.error(mat.span(), format!("module '{name}': matrix rows differ in length")));
                }
                let entries = mat
                    .get_ref()
                    .iter()
                    .map(|row| row.iter().map(|e| loc.poly(e, &vars, p, &mut warnings)).collect())
                    .collect::<Result<Vec<Vec<Poly>>, _>>()?;
                ModuleSpec::Cokernel { rows, cols, entries }
            }
            "dualizing" => ModuleSpec::Dualizing,
            "residue_field" => ModuleSpec::ResidueField,
            "maximal_ideal" => ModuleSpec::MaximalIdeal,
            "sum" => {
                let of = m.of.as_ref().ok_or_else(|| loc.error(span.clone(), format!("module '{name}': sum needs 'of'")))?;
                for part in of {
                    let known = raw.modules.contains_key(part.get_ref()) || IMPLICIT.contains(&part.get_ref().as_str());
                    if !known {
                        return Err(loc.error(part.span(), format!("unknown module '{}'", part.get_ref())));
                    }
                }
                ModuleSpec::Sum { of: of.iter().map(|s| s.get_ref().clone()).collect() }
            }
            other => {
                return Err(loc.error(
                    m.kind.span(),
                    format!("unknown module kind '{other}' (expected free, cokernel, dualizing, residue_field, maximal_ideal or sum)"),
                ))
            }
        };
        modules.insert(name.clone(), spec);
    }
    let session = Session {
        field: p,
        vars,
        relations,
        modules,
    };
    if let Some(name) = session.sum_cycle() {
        let span = raw.modules[&name].span();
        return Err(loc.error(
            span,
            format!("module '{name}' is defined in terms of itself"),
        ));
    }
    Ok(Parsed { session, warnings })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn key(s: &str) -> String {
    if !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
    {
        s.to_string()
    } else {
        quote(s)
    }
}

/// Renders a session back to the file format; `parse_session` of the output
/// gives back an equal session.
pub fn render(s: &Session) -> String {
    let list = |items: Vec<String>| format!("[{}]", items.join(", "));
    let mut out = format!("field = {}\n\n[ring]\n", s.field);
    out += &format!(
        "vars = {}\n",
        list(s.vars.iter().map(|v| quote(v)).collect())
    );
    out += &format!(
        "relations = {}\n",
        list(s.relations.iter().map(|r| quote(&r.to_string())).collect())
    );
    for (name, spec) in &s.modules {
        out += &format!("\n[modules.{}]\n", key(name));
        match spec {
            ModuleSpec::Free { rank } => out += &format!("kind = \"free\"\nrank = {rank}\n"),
            ModuleSpec::Cokernel { entries, .. } => {
                let rows: Vec<String> = entries
                    .iter()
                    .map(|r| list(r.iter().map(|e| quote(&e.to_string())).collect()))
                    .collect();
                out += &format!("kind = \"cokernel\"\nmatrix = {}\n", list(rows));
            }
            ModuleSpec::Dualizing => out += "kind = \"dualizing\"\n",
            ModuleSpec::ResidueField => out += "kind = \"residue_field\"\n",
            ModuleSpec::MaximalIdeal => out += "kind = \"maximal_ideal\"\n",
            ModuleSpec::Sum { of } => {
                out += &format!(
                    "kind = \"sum\"\nof = {}\n",
                    list(of.iter().map(|m| quote(m)).collect())
                )
            }
        }
    }
    out
}

/// The session with its ring and modules constructed.
#[derive(Clone, Debug)]
pub struct Context {
    pub session: Session,
    pub ring: Arc<Algebra>,
    pub modules: BTreeMap<String, Module>,
}

impl Session {
    fn sum_cycle(&self) -> Option<String> {
        fn visit(
            s: &Session,
            name: &str,
            stack: &mut Vec<String>,
            done: &mut BTreeSet<String>,
        ) -> Option<String> {
            if done.contains(name) {
                return None;
            }
            if stack.iter().any(|n| n == name) {
                return Some(name.to_string());
            }
            if let Some(ModuleSpec::Sum { of }) = s.modules.get(name) {
                stack.push(name.to_string());
                for part in of {
                    if let Some(c) = visit(s, part, stack, done) {
                        return Some(c);
                    }
                }
                stack.pop();
            }
            done.insert(name.to_string());
            None
        }
        let mut done = BTreeSet::new();
        self.modules
            .keys()
            .find_map(|n| visit(self, n, &mut Vec::new(), &mut done))
    }

    /// `GF(p)[vars]/(relations)`.
    pub fn ring_name(&self) -> String {
        let rels: Vec<String> = self.relations.iter().map(Poly::to_string).collect();
        format!(
            "GF({})[{}]/({})",
            self.field,
            self.vars.join(","),
            rels.join(", ")
        )
    }

    pub fn build(&self) -> Result<Context, Error> {
        let field = Field::new(self.field as u64)?;
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let ring = Arc::new(Algebra::monomial_quotient(field, &vars, &self.relations)?);
        let mut modules = BTreeMap::new();
        let names: Vec<String> = self
            .modules
            .keys()
            .cloned()
            .chain(IMPLICIT.iter().map(|s| s.to_string()))
            .collect();
        for name in names {
            if !modules.contains_key(&name) {
                let m = self.construct(&ring, &name, &mut modules)?;
                modules.insert(name, m);
            }
        }
        Ok(Context {
            session: self.clone(),
            ring,
            modules,
        })
    }

    fn construct(
        &self,
        ring: &Arc<Algebra>,
        name: &str,
        done: &mut BTreeMap<String, Module>,
    ) -> Result<Module, Error> {
        if let Some(m) = done.get(name) {
            return Ok(m.clone());
        }
        let m = match self.modules.get(name) {
            None => match name {
                "R" => Module::regular(ring.clone()),
                "k" => Module::residue_field(ring.clone())?,
                "D" => Module::dualizing(ring.clone()),
                _ => return Err(Error::DimensionMismatch("unknown module")),
            },
            Some(ModuleSpec::Free { rank }) => Module::free(ring.clone(), *rank),
            Some(ModuleSpec::Cokernel {
                rows,
                cols,
                entries,
            }) => {
                let elems = entries
                    .iter()
                    .map(|r| r.iter().map(|e| ring.element_of_poly(e)).collect())
                    .collect::<Result<Vec<Vec<Vec<u32>>>, _>>()?;
                presentation_to_module(ring, *rows, *cols, &elems)?.0
            }
            Some(ModuleSpec::Dualizing) => Module::dualizing(ring.clone()),
            Some(ModuleSpec::ResidueField) => Module::residue_field(ring.clone())?,
            Some(ModuleSpec::MaximalIdeal) => Module::maximal_ideal(ring.clone())?,
            Some(ModuleSpec::Sum { of }) => {
                let parts = of
                    .iter()
                    .map(|p| self.construct(ring, p, done))
                    .collect::<Result<Vec<_>, _>>()?;
                Module::direct_sum(&parts)?
            }
        };
        let m = m.with_label(name);
        done.insert(name.to_string(), m.clone());
        Ok(m)
    }
}
