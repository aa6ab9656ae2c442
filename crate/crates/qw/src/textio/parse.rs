//! Lexer and recursive-descent parser for the expression language.
//!
//! Errors carry the 1-based line and column of the offending input together
//! with the set of token kinds that would have been accepted there.

use crate::algebra::GeneratorSymbol;
use crate::textio::Expr;

/// Syntax error with position and expectation information.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl ParseError {
    fn new(line: usize, column: usize, message: String, expected: Vec<&'static str>) -> Self {
        ParseError {
            line,
            column,
            message,
            expected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Q,
    L,
    W,
    C,
    T,
    Delta,
    Antipode,
    Counit,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    /// the bracket closer `]_q`
    CloseBracketQ,
    Comma,
}

impl Tok {
    fn describe(&self) -> &'static str {
        match self {
            Tok::Int(_) => "integer",
            Tok::Q => "'q'",
            Tok::L => "'L'",
            Tok::W => "'W'",
            Tok::C => "'C'",
            Tok::T => "'T'",
            Tok::Delta => "'Delta'",
            Tok::Antipode => "'S'",
            Tok::Counit => "'eps'",
            Tok::Plus => "'+'",
            Tok::Minus => "'-'",
            Tok::Star => "'*'",
            Tok::Slash => "'/'",
            Tok::Caret => "'^'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::LBracket => "'['",
            Tok::CloseBracketQ => "']_q'",
            Tok::Comma => "','",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn tokenize(mut self) -> Result<(Vec<Spanned>, usize, usize), ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                return Ok((out, line, column));
            };
            let tok = match c {
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '-' => {
                    self.bump();
                    Tok::Minus
                }
                '*' => {
                    self.bump();
                    Tok::Star
                }
                '/' => {
                    self.bump();
                    Tok::Slash
                }
                '^' => {
                    self.bump();
                    Tok::Caret
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                '[' => {
                    self.bump();
                    Tok::LBracket
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                ']' => {
                    self.bump();
                    if self.chars.peek() == Some(&'_') {
                        self.bump();
                        if self.chars.peek() == Some(&'q') {
                            self.bump();
                            Tok::CloseBracketQ
                        } else {
                            return Err(ParseError::new(
                                self.line,
                                self.column,
                                "']_' must be followed by 'q'".to_string(),
                                vec!["'q'"],
                            ));
                        }
                    } else {
                        return Err(ParseError::new(
                            line,
                            column,
                            "']' must be written as ']_q'".to_string(),
                            vec!["']_q'"],
                        ));
                    }
                }
                d if d.is_ascii_digit() => {
                    let mut text = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                        text.push(self.bump().expect("digit"));
                    }
                    let n: i64 = text.parse().map_err(|_| {
                        ParseError::new(
                            line,
                            column,
                            format!("integer literal '{}' overflows", text),
                            vec!["integer"],
                        )
                    })?;
                    Tok::Int(n)
                }
                a if a.is_ascii_alphabetic() => {
                    let mut word = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric()) {
                        word.push(self.bump().expect("letter"));
                    }
                    match word.as_str() {
                        "q" => Tok::Q,
                        "L" => Tok::L,
                        "W" => Tok::W,
                        "C" => Tok::C,
                        "T" => Tok::T,
                        "Delta" => Tok::Delta,
                        "S" => Tok::Antipode,
                        "eps" => Tok::Counit,
                        other => {
                            return Err(ParseError::new(
                                line,
                                column,
                                format!("unknown name '{}'", other),
                                vec!["'q'", "'L'", "'W'", "'C'", "'T'", "'Delta'", "'S'", "'eps'"],
                            ))
                        }
                    }
                }
                other => {
                    return Err(ParseError::new(
                        line,
                        column,
                        format!("unexpected character '{}'", other),
                        vec![],
                    ))
                }
            };
            out.push(Spanned { tok, line, column });
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_line: usize,
    end_column: usize,
}

const PRIMARY_EXPECTED: [&str; 11] = [
    "integer", "'q'", "'L'", "'W'", "'C'", "'T'", "'Delta'", "'S'", "'eps'", "'('", "'['",
];

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|s| s.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.column),
            None => (self.end_line, self.end_column),
        }
    }

    fn describe_here(&self) -> String {
        match self.toks.get(self.pos) {
            Some(s) => format!("unexpected {}", s.tok.describe()),
            None => "unexpected end of input".to_string(),
        }
    }

    fn eat(&mut self, want: Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if self.eat(want) {
            return Ok(());
        }
        let (line, column) = self.here();
        Err(ParseError::new(
            line,
            column,
            self.describe_here(),
            vec![want.describe()],
        ))
    }

    fn error_here(&self, expected: Vec<&'static str>) -> ParseError {
        let (line, column) = self.here();
        ParseError::new(line, column, self.describe_here(), expected)
    }

    /// int := ['-'] digits, used for generator indices and exponents.
    fn parse_int(&mut self, index_position: bool) -> Result<i64, ParseError> {
        let negative = self.eat(Tok::Minus);
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(if negative { -n } else { n })
            }
            _ => {
                let (line, column) = self.here();
                let what = if index_position {
                    "generator index must be an integer literal"
                } else {
                    "exponent must be an integer literal"
                };
                Err(ParseError::new(
                    line,
                    column,
                    format!("{} ({})", what, self.describe_here()),
                    vec!["integer"],
                ))
            }
        }
    }

    fn parse_indexed(&mut self, make: fn(i64) -> GeneratorSymbol) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let n = self.parse_int(true)?;
        self.expect(Tok::RParen)?;
        Ok(Expr::Gen(make(n)))
    }

    fn parse_call(&mut self, make: fn(Box<Expr>) -> Expr) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let inner = self.parse_expr()?;
        self.expect(Tok::RParen)?;
        Ok(make(Box::new(inner)))
    }

    fn parse_primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some(Tok::L) => {
                self.pos += 1;
                self.parse_indexed(GeneratorSymbol::L)
            }
            Some(Tok::W) => {
                self.pos += 1;
                self.parse_indexed(GeneratorSymbol::W)
            }
            Some(Tok::C) => {
                self.pos += 1;
                Ok(Expr::Gen(GeneratorSymbol::C))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(Expr::Gen(GeneratorSymbol::T))
            }
            Some(Tok::Delta) => {
                self.pos += 1;
                self.parse_call(Expr::Delta)
            }
            Some(Tok::Antipode) => {
                self.pos += 1;
                self.parse_call(Expr::Antipode)
            }
            Some(Tok::Counit) => {
                self.pos += 1;
                self.parse_call(Expr::Counit)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let left = self.parse_expr()?;
                self.expect(Tok::Comma)?;
                let right = self.parse_expr()?;
                self.expect(Tok::CloseBracketQ)?;
                Ok(Expr::Bracket(Box::new(left), Box::new(right), None))
            }
            _ => Err(self.error_here(PRIMARY_EXPECTED.to_vec())),
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_primary()?;
        while self.eat(Tok::Caret) {
            let k = self.parse_int(false)?;
            e = Expr::Pow(Box::new(e), k);
        }
        Ok(e)
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.parse_factor()?;
        loop {
            if self.eat(Tok::Star) {
                let rhs = self.parse_factor()?;
                e = Expr::Mul(Box::new(e), Box::new(rhs));
            } else if self.eat(Tok::Slash) {
                let rhs = self.parse_factor()?;
                e = Expr::Div(Box::new(e), Box::new(rhs));
            } else {
                return Ok(e);
            }
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = if self.eat(Tok::Minus) {
            Expr::Neg(Box::new(self.parse_term()?))
        } else {
            self.parse_term()?
        };
        loop {
            if self.eat(Tok::Plus) {
                let rhs = self.parse_term()?;
                e = Expr::Add(Box::new(e), Box::new(rhs));
            } else if self.eat(Tok::Minus) {
                let rhs = self.parse_term()?;
                e = Expr::Sub(Box::new(e), Box::new(rhs));
            } else {
                return Ok(e);
            }
        }
    }
}

/// Parse an expression string into its syntax tree.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let (toks, end_line, end_column) = Lexer::new(input).tokenize()?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_line,
        end_column,
    };
    let e = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(p.error_here(vec!["'+'", "'-'", "'*'", "'/'", "'^'", "end of input"]));
    }
    Ok(e)
}
