//! Tokenizer for the structure-description language. Line-oriented,
//! `;`-terminated statements, `#` comments; `#!` lines carry erratum notes
//! through to reports.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// Plain digits, e.g. `42`.
    Int(String),
    /// Digits immediately suffixed by `I`, e.g. `8I`.
    IntI(String),
    /// A decimal literal such as `0.3` (kept textual, converted exactly).
    Dec(String),
    /// Decimal suffixed by `I`, e.g. `0.5I`.
    DecI(String),
    Semi,
    Comma,
    Equals,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    PlusPlus,
    Minus,
    Slash,
    Colon,
    Arrow,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::IntI(s) => write!(f, "`{s}I`"),
            Tok::Dec(s) => write!(f, "`{s}`"),
            Tok::DecI(s) => write!(f, "`{s}I`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Equals => write!(f, "`=`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::PlusPlus => write!(f, "`++`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexed {
    pub tokens: Vec<(Tok, Pos)>,
    pub errata: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub pos: Pos,
    pub message: String,
}

pub fn lex(source: &str) -> Result<Lexed, LexError> {
    let mut tokens = Vec::new();
    let mut errata = Vec::new();
    for (line_idx, line) in source.lines().enumerate() {
        let line_no = line_idx + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0usize;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: line_no,
                col: i + 1,
            };
            match c {
                '#' => {
                    let rest: String = chars[i..].iter().collect();
                    if let Some(note) = rest.strip_prefix("#!") {
                        errata.push(note.trim().to_string());
                    }
                    break; // comment to end of line
                }
                c if c.is_whitespace() => i += 1,
                ';' => {
                    tokens.push((Tok::Semi, pos));
                    i += 1;
                }
                ',' => {
                    tokens.push((Tok::Comma, pos));
                    i += 1;
                }
                '=' => {
                    tokens.push((Tok::Equals, pos));
                    i += 1;
                }
                '{' => {
                    tokens.push((Tok::LBrace, pos));
                    i += 1;
                }
                '}' => {
                    tokens.push((Tok::RBrace, pos));
                    i += 1;
                }
                '(' => {
                    tokens.push((Tok::LParen, pos));
                    i += 1;
                }
                ')' => {
                    tokens.push((Tok::RParen, pos));
                    i += 1;
                }
                '[' => {
                    tokens.push((Tok::LBracket, pos));
                    i += 1;
                }
                ']' => {
                    tokens.push((Tok::RBracket, pos));
                    i += 1;
                }
                '/' => {
                    tokens.push((Tok::Slash, pos));
                    i += 1;
                }
                ':' => {
                    tokens.push((Tok::Colon, pos));
                    i += 1;
                }
                '+' => {
                    if chars.get(i + 1) == Some(&'+') {
                        tokens.push((Tok::PlusPlus, pos));
                        i += 2;
                    } else {
                        tokens.push((Tok::Plus, pos));
                        i += 1;
                    }
                }
                '-' => {
                    if chars.get(i + 1) == Some(&'>') {
                        tokens.push((Tok::Arrow, pos));
                        i += 2;
                    } else {
                        tokens.push((Tok::Minus, pos));
                        i += 1;
                    }
                }
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let mut decimal = false;
                    if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                        decimal = true;
                        i += 1;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                    let text: String = chars[start..i].iter().collect();
                    let suffixed = chars.get(i) == Some(&'I')
                        && chars
                            .get(i + 1)
                            .is_none_or(|c| !c.is_alphanumeric() && *c != '_');
                    if suffixed {
                        i += 1;
                        tokens.push((
                            if decimal {
                                Tok::DecI(text)
                            } else {
                                Tok::IntI(text)
                            },
                            pos,
                        ));
                    } else {
                        tokens.push((
                            if decimal {
                                Tok::Dec(text)
                            } else {
                                Tok::Int(text)
                            },
                            pos,
                        ));
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let text: String = chars[start..i].iter().collect();
                    tokens.push((Tok::Ident(text), pos));
                }
                other => {
                    return Err(LexError {
                        pos,
                        message: format!("unexpected character `{other}`"),
                    });
                }
            }
        }
    }
    let end = Pos {
        line: source.lines().count().max(1),
        col: source.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    tokens.push((Tok::Eof, end));
    Ok(Lexed { tokens, errata })
}
