//! Recursive-descent parser. Statements bind rings, element sets,
//! structures, bistructures, map tables and fuzzy tables into a workspace;
//! errors carry line/column and what was expected.

use std::collections::{BTreeMap, BTreeSet};

use neutra_core::{
    BaseRing, BiStructureDef, Element, FuzzyMap, FuzzyNeutroValue, MapTable, NeutroNumber,
    Rational, ScalarMode, ScalarSet, StructureDef, StructureKind,
};

use crate::lex::{lex, Pos, Tok};
use crate::workspace::{Binding, Workspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
    current_ring: Option<BaseRing>,
    workspace: Workspace,
}

type PResult<T> = Result<T, ParseError>;

pub fn parse_workspace(source: &str) -> PResult<Workspace> {
    let lexed = lex(source).map_err(|e| ParseError {
        pos: e.pos,
        message: e.message,
        expected: vec![],
    })?;
    let mut parser = Parser {
        tokens: lexed.tokens,
        at: 0,
        current_ring: None,
        workspace: Workspace::new(),
    };
    parser.workspace.errata = lexed.errata;
    parser.run()?;
    Ok(parser.workspace)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Pos {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.at].0.clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            pos: self.pos(),
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            self.err(format!("found {}", self.peek()), &[what])
        }
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            other => self.err(format!("found {other}"), &[what]),
        }
    }

    /// Statement separator: `;` is required between statements but may be
    /// omitted before end of input.
    fn end_statement(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Semi => {
                while self.peek() == &Tok::Semi {
                    self.bump();
                }
                Ok(())
            }
            Tok::Eof => Ok(()),
            other => self.err(format!("found {other}"), &["`;`"]),
        }
    }

    fn run(&mut self) -> PResult<()> {
        loop {
            while self.peek() == &Tok::Semi {
                self.bump();
            }
            if self.peek() == &Tok::Eof {
                return Ok(());
            }
            let pos = self.pos();
            let keyword = self.ident("a statement keyword")?;
            match keyword.as_str() {
                "ring" => self.ring_stmt(pos)?,
                "set" => self.set_stmt(pos)?,
                "structure" => self.structure_stmt(pos)?,
                "bistructure" => self.bistructure_stmt(pos)?,
                "map" => self.map_stmt(pos)?,
                "fuzzy" => self.fuzzy_stmt(pos)?,
                other => {
                    return Err(ParseError {
                        pos,
                        message: format!("unknown statement `{other}`"),
                        expected: vec![
                            "`ring`".into(),
                            "`set`".into(),
                            "`structure`".into(),
                            "`bistructure`".into(),
                            "`map`".into(),
                            "`fuzzy`".into(),
                        ],
                    });
                }
            }
            self.end_statement()?;
        }
    }

    fn bind(&mut self, pos: Pos, name: String, binding: Binding) -> PResult<()> {
        if self.workspace.contains(&name) {
            return Err(ParseError {
                pos,
                message: format!("name `{name}` is already bound"),
                expected: vec![],
            });
        }
        self.workspace.insert(name, binding, pos);
        Ok(())
    }

    fn semantic(&self, pos: Pos, message: impl Into<String>) -> ParseError {
        ParseError {
            pos,
            message: message.into(),
            expected: vec![],
        }
    }

    fn ring_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a ring name")?;
        self.expect(Tok::Equals, "`=`")?;
        let kind = self.ident("`Z`, `Q` or `Zn`")?;
        let ring = match kind.as_str() {
            "Z" => BaseRing::Integer,
            "Q" => BaseRing::Rational,
            "Zn" => {
                let n = match self.peek().clone() {
                    Tok::Int(digits) => {
                        self.bump();
                        digits.parse::<u64>().map_err(|_| {
                            self.semantic(pos, format!("modulus `{digits}` out of range"))
                        })?
                    }
                    other => return self.err(format!("found {other}"), &["a modulus"]),
                };
                BaseRing::modular(n).map_err(|e| self.semantic(pos, e.to_string()))?
            }
            other => {
                return Err(ParseError {
                    pos,
                    message: format!("unknown ring `{other}`"),
                    expected: vec!["`Z`".into(), "`Q`".into(), "`Zn <modulus>`".into()],
                })
            }
        };
        self.current_ring = Some(ring);
        self.bind(pos, name, Binding::Ring(ring))
    }

    fn need_ring(&self, pos: Pos) -> PResult<BaseRing> {
        self.current_ring
            .ok_or_else(|| self.semantic(pos, "no ring declared yet"))
    }

    fn set_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a set name")?;
        self.expect(Tok::Equals, "`=`")?;
        let ring = self.need_ring(pos)?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut elements = BTreeSet::new();
        if self.peek() != &Tok::RBrace {
            loop {
                elements.insert(self.element(ring)?);
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RBrace => break,
                    other => return self.err(format!("found {other}"), &["`,`", "`}`"]),
                }
            }
        }
        self.expect(Tok::RBrace, "`}`")?;
        self.bind(pos, name, Binding::Set { ring, elements })
    }

    fn structure_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a structure name")?;
        self.expect(Tok::Equals, "`=`")?;
        let kind_name = self.ident("a structure kind")?;
        let kind = parse_kind(&kind_name).ok_or_else(|| ParseError {
            pos,
            message: format!("unknown structure kind `{kind_name}`"),
            expected: vec![
                "`setvs`".into(),
                "`setla`".into(),
                "`semivs`".into(),
                "`semila`".into(),
                "`groupvs`".into(),
                "`groupla`".into(),
            ],
        })?;
        self.expect(Tok::LParen, "`(`")?;
        let carrier_name = self.ident("a carrier set name")?;
        let over = self.ident("`over`")?;
        if over != "over" {
            return Err(self.semantic(pos, format!("expected `over`, found `{over}`")));
        }
        let scalars_name = self.ident("a scalar set name")?;
        self.expect(Tok::RParen, "`)`")?;
        let carrier = self
            .workspace
            .element_set(&carrier_name)
            .map_err(|e| self.semantic(pos, e))?;
        let scalars = self
            .workspace
            .scalar_set(&scalars_name)
            .map_err(|e| self.semantic(pos, e))?;
        let def = StructureDef::new(carrier, scalars, kind)
            .map_err(|e| self.semantic(pos, e.to_string()))?;
        self.bind(pos, name, Binding::Structure(def))
    }

    fn bistructure_side(&mut self, pos: Pos) -> PResult<(String, Option<String>)> {
        // either `Name` or `( Name over Scalars )`
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok((name, None))
            }
            Tok::LParen => {
                self.bump();
                let name = self.ident("a structure name")?;
                let over = self.ident("`over`")?;
                if over != "over" {
                    return Err(self.semantic(pos, format!("expected `over`, found `{over}`")));
                }
                let scalars = self.ident("a scalar set name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok((name, Some(scalars)))
            }
            other => self.err(format!("found {other}"), &["a structure name", "`(`"]),
        }
    }

    fn bistructure_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a bistructure name")?;
        self.expect(Tok::Equals, "`=`")?;

        // shared-scalar grouped form: ( M1 ++ M2 ) over S
        if self.peek() == &Tok::LParen {
            let mark = self.at;
            self.bump();
            if let Tok::Ident(first) = self.peek().clone() {
                self.bump();
                if self.peek() == &Tok::PlusPlus {
                    self.bump();
                    let second = self.ident("a structure name")?;
                    self.expect(Tok::RParen, "`)`")?;
                    let over = self.ident("`over`")?;
                    if over != "over" {
                        return Err(self.semantic(pos, format!("expected `over`, found `{over}`")));
                    }
                    let scalars_name = self.ident("a scalar set name")?;
                    let scalars = self
                        .workspace
                        .scalar_set(&scalars_name)
                        .map_err(|e| self.semantic(pos, e))?;
                    let s1 = self
                        .workspace
                        .structure(&first)
                        .map_err(|e| self.semantic(pos, e))?
                        .with_scalars(scalars.clone())
                        .map_err(|e| self.semantic(pos, e.to_string()))?;
                    let s2 = self
                        .workspace
                        .structure(&second)
                        .map_err(|e| self.semantic(pos, e))?
                        .with_scalars(scalars)
                        .map_err(|e| self.semantic(pos, e.to_string()))?;
                    let def = BiStructureDef::new(s1, s2, ScalarMode::Shared);
                    return self.bind(pos, name, Binding::Bi(def));
                }
            }
            self.at = mark; // per-side parenthesized form instead
        }

        let (first_name, first_scalars) = self.bistructure_side(pos)?;
        self.expect(Tok::PlusPlus, "`++`")?;
        let (second_name, second_scalars) = self.bistructure_side(pos)?;

        let mut s1 = self
            .workspace
            .structure(&first_name)
            .map_err(|e| self.semantic(pos, e))?;
        let mut s2 = self
            .workspace
            .structure(&second_name)
            .map_err(|e| self.semantic(pos, e))?;
        if let Some(t) = first_scalars {
            let scalars = self
                .workspace
                .scalar_set(&t)
                .map_err(|e| self.semantic(pos, e))?;
            s1 = s1
                .with_scalars(scalars)
                .map_err(|e| self.semantic(pos, e.to_string()))?;
        }
        if let Some(t) = second_scalars {
            let scalars = self
                .workspace
                .scalar_set(&t)
                .map_err(|e| self.semantic(pos, e))?;
            s2 = s2
                .with_scalars(scalars)
                .map_err(|e| self.semantic(pos, e.to_string()))?;
        }
        let mode = if s1.scalars() == s2.scalars() {
            ScalarMode::Shared
        } else {
            ScalarMode::Bi
        };
        let def = BiStructureDef::new(s1, s2, mode);
        self.bind(pos, name, Binding::Bi(def))
    }

    fn map_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a map name")?;
        self.expect(Tok::Colon, "`:`")?;
        let domain_name = self.ident("a domain structure name")?;
        self.expect(Tok::Arrow, "`->`")?;
        let codomain_name = self.ident("a codomain structure name")?;
        let domain = self
            .workspace
            .structure(&domain_name)
            .map_err(|e| self.semantic(pos, e))?;
        let codomain = self
            .workspace
            .structure(&codomain_name)
            .map_err(|e| self.semantic(pos, e))?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut graph: BTreeMap<Element, Element> = BTreeMap::new();
        loop {
            if self.peek() == &Tok::RBrace {
                break;
            }
            let from = self.element(domain.ring())?;
            self.expect(Tok::Arrow, "`->`")?;
            let to = self.element(codomain.ring())?;
            graph.insert(from, to);
            match self.peek() {
                Tok::Semi => {
                    self.bump();
                }
                Tok::RBrace => break,
                other => return self.err(format!("found {other}"), &["`;`", "`}`"]),
            }
        }
        self.expect(Tok::RBrace, "`}`")?;
        let table = MapTable::new(domain, codomain, graph)
            .map_err(|e| self.semantic(pos, e.to_string()))?;
        self.bind(pos, name, Binding::Map(table))
    }

    fn fuzzy_stmt(&mut self, pos: Pos) -> PResult<()> {
        let name = self.ident("a fuzzy map name")?;
        self.expect(Tok::Colon, "`:`")?;
        let structure_name = self.ident("a structure name")?;
        let structure = self
            .workspace
            .structure(&structure_name)
            .map_err(|e| self.semantic(pos, e))?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut table: BTreeMap<Element, FuzzyNeutroValue> = BTreeMap::new();
        loop {
            if self.peek() == &Tok::RBrace {
                break;
            }
            let from = self.element(structure.ring())?;
            self.expect(Tok::Arrow, "`->`")?;
            let value = self.fuzzy_value()?;
            table.insert(from, value);
            match self.peek() {
                Tok::Semi => {
                    self.bump();
                }
                Tok::RBrace => break,
                other => return self.err(format!("found {other}"), &["`;`", "`}`"]),
            }
        }
        self.expect(Tok::RBrace, "`}`")?;
        let map =
            FuzzyMap::new(structure, table).map_err(|e| self.semantic(pos, e.to_string()))?;
        self.bind(pos, name, Binding::Fuzzy(map))
    }

    // -- literals ---------------------------------------------------------

    fn element(&mut self, ring: BaseRing) -> PResult<Element> {
        match self.peek().clone() {
            Tok::LParen => self.tuple(ring),
            Tok::LBracket => self.matrix(ring),
            Tok::Ident(word) if word == "poly" => self.polynomial(ring),
            _ => {
                let n = self.number(ring)?;
                Ok(Element::scalar(n))
            }
        }
    }

    fn tuple(&mut self, ring: BaseRing) -> PResult<Element> {
        let pos = self.pos();
        self.expect(Tok::LParen, "`(`")?;
        let mut entries = Vec::new();
        loop {
            entries.push(self.number(ring)?);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RParen => break,
                other => return self.err(format!("found {other}"), &["`,`", "`)`"]),
            }
        }
        self.expect(Tok::RParen, "`)`")?;
        Element::tuple(entries).map_err(|e| self.semantic(pos, e.to_string()))
    }

    fn matrix(&mut self, ring: BaseRing) -> PResult<Element> {
        let pos = self.pos();
        self.expect(Tok::LBracket, "`[`")?;
        let mut rows: Vec<Vec<NeutroNumber>> = Vec::new();
        loop {
            self.expect(Tok::LBracket, "`[`")?;
            let mut row = Vec::new();
            loop {
                row.push(self.number(ring)?);
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RBracket => break,
                    other => return self.err(format!("found {other}"), &["`,`", "`]`"]),
                }
            }
            self.expect(Tok::RBracket, "`]`")?;
            rows.push(row);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => break,
                other => return self.err(format!("found {other}"), &["`,`", "`]`"]),
            }
        }
        self.expect(Tok::RBracket, "`]`")?;
        let height = rows.len();
        let width = rows[0].len();
        if rows.iter().any(|r| r.len() != width) {
            return Err(self.semantic(pos, "matrix rows have unequal lengths"));
        }
        let entries = rows.into_iter().flatten().collect();
        Element::matrix(height, width, entries).map_err(|e| self.semantic(pos, e.to_string()))
    }

    fn polynomial(&mut self, ring: BaseRing) -> PResult<Element> {
        let pos = self.pos();
        self.bump(); // `poly`
        self.expect(Tok::LParen, "`(`")?;
        let mut coeffs = Vec::new();
        if self.peek() != &Tok::RParen {
            loop {
                coeffs.push(self.number(ring)?);
                match self.peek() {
                    Tok::Comma => {
                        self.bump();
                    }
                    Tok::RParen => break,
                    other => return self.err(format!("found {other}"), &["`,`", "`)`"]),
                }
            }
        }
        self.expect(Tok::RParen, "`)`")?;
        Element::poly(ring, coeffs).map_err(|e| self.semantic(pos, e.to_string()))
    }

    /// `a`, `bI`, `a+bI`, `a-bI` with integer, `p/q` rational or decimal
    /// coefficients.
    fn number(&mut self, ring: BaseRing) -> PResult<NeutroNumber> {
        let pos = self.pos();
        let (first, first_is_i) = self.signed_coefficient()?;
        let (real, icoef) = if first_is_i {
            (Rational::ZERO, first)
        } else {
            match self.peek() {
                Tok::Plus | Tok::Minus => {
                    let negate = self.peek() == &Tok::Minus;
                    self.bump();
                    let (second, second_is_i) = self.unsigned_coefficient()?;
                    if !second_is_i {
                        return self.err(
                            "the second summand of a literal must carry I",
                            &["`bI`"],
                        );
                    }
                    (first, if negate { second.neg() } else { second })
                }
                _ => (first, Rational::ZERO),
            }
        };
        NeutroNumber::new(ring, real, icoef).map_err(|e| self.semantic(pos, e.to_string()))
    }

    fn signed_coefficient(&mut self) -> PResult<(Rational, bool)> {
        let negate = if self.peek() == &Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (value, is_i) = self.unsigned_coefficient()?;
        Ok((if negate { value.neg() } else { value }, is_i))
    }

    /// One coefficient, possibly `p/q`, possibly decimal, possibly carrying
    /// the I suffix on its last numeric component; a bare `I` counts as 1I.
    fn unsigned_coefficient(&mut self) -> PResult<(Rational, bool)> {
        match self.peek().clone() {
            Tok::Ident(word) if word == "I" => {
                self.bump();
                Ok((Rational::ONE, true))
            }
            Tok::Int(digits) => {
                self.bump();
                let numerator = self.parse_int(&digits)?;
                if self.peek() == &Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(d) => {
                            self.bump();
                            let den = self.parse_int(&d)?;
                            self.nonzero_den(den)?;
                            Ok((Rational::new(numerator, den), false))
                        }
                        Tok::IntI(d) => {
                            self.bump();
                            let den = self.parse_int(&d)?;
                            self.nonzero_den(den)?;
                            Ok((Rational::new(numerator, den), true))
                        }
                        other => self.err(format!("found {other}"), &["a denominator"]),
                    }
                } else {
                    Ok((Rational::from_int(numerator), false))
                }
            }
            Tok::IntI(digits) => {
                self.bump();
                Ok((Rational::from_int(self.parse_int(&digits)?), true))
            }
            Tok::Dec(text) => {
                self.bump();
                Ok((self.parse_decimal(&text)?, false))
            }
            Tok::DecI(text) => {
                self.bump();
                Ok((self.parse_decimal(&text)?, true))
            }
            other => self.err(format!("found {other}"), &["a number"]),
        }
    }

    fn parse_int(&self, digits: &str) -> PResult<i64> {
        digits.parse::<i64>().map_err(|_| ParseError {
            pos: self.pos(),
            message: format!("integer `{digits}` out of range"),
            expected: vec![],
        })
    }

    fn nonzero_den(&self, den: i64) -> PResult<()> {
        if den == 0 {
            Err(ParseError {
                pos: self.pos(),
                message: "zero denominator".into(),
                expected: vec![],
            })
        } else {
            Ok(())
        }
    }

    fn parse_decimal(&self, text: &str) -> PResult<Rational> {
        let (whole, frac) = text.split_once('.').unwrap_or((text, ""));
        let whole: i64 = self.parse_int(whole)?;
        if frac.is_empty() {
            return Ok(Rational::from_int(whole));
        }
        if frac.len() > 12 {
            return Err(ParseError {
                pos: self.pos(),
                message: "decimal literal too precise".into(),
                expected: vec![],
            });
        }
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = self.parse_int(frac)?;
        Ok(Rational::from_int(whole).add(&Rational::new(frac, scale)))
    }

    fn fuzzy_value(&mut self) -> PResult<FuzzyNeutroValue> {
        let pos = self.pos();
        let n = self.number(BaseRing::Rational)?;
        FuzzyNeutroValue::new(n.real_part(), n.i_coeff())
            .map_err(|e| self.semantic(pos, e.to_string()))
    }
}

pub fn parse_kind(name: &str) -> Option<StructureKind> {
    match name {
        "setvs" => Some(StructureKind::SetVs),
        "setla" => Some(StructureKind::SetLa),
        "semivs" => Some(StructureKind::SemigroupVs),
        "semila" => Some(StructureKind::SemigroupLa),
        "groupvs" => Some(StructureKind::GroupVs),
        "groupla" => Some(StructureKind::GroupLa),
        _ => None,
    }
}

/// Parse one element literal in isolation (used by report round-trips).
pub fn parse_element(source: &str, ring: BaseRing) -> PResult<Element> {
    let lexed = lex(source).map_err(|e| ParseError {
        pos: e.pos,
        message: e.message,
        expected: vec![],
    })?;
    let mut parser = Parser {
        tokens: lexed.tokens,
        at: 0,
        current_ring: Some(ring),
        workspace: Workspace::new(),
    };
    let element = parser.element(ring)?;
    if parser.peek() != &Tok::Eof {
        return Err(ParseError {
            pos: parser.pos(),
            message: format!("trailing input {}", parser.peek()),
            expected: vec![],
        });
    }
    Ok(element)
}

/// Turn a set of parsed scalar elements into a scalar set.
pub fn to_scalar_set(
    ring: BaseRing,
    elements: &BTreeSet<Element>,
) -> Result<ScalarSet, String> {
    let mut members = BTreeSet::new();
    for e in elements {
        match e {
            Element::Scalar(n) => {
                members.insert(*n);
            }
            other => return Err(format!("`{other}` is not a scalar")),
        }
    }
    ScalarSet::new(ring, members).map_err(|e| e.to_string())
}
