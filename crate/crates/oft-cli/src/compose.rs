//! Parser for the one-line system composition grammar:
//!
//! ```text
//! S ::= imp(FILE) | cascade(S, S) | parallel(S, S) | feedback(S, S)
//! ```
//!
//! `FILE` is any run of characters up to the closing parenthesis, trimmed.
//! Hand-written recursive descent; errors carry the byte offset.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComposeExpr {
    Impulse(String),
    Cascade(Box<ComposeExpr>, Box<ComposeExpr>),
    Parallel(Box<ComposeExpr>, Box<ComposeExpr>),
    Feedback(Box<ComposeExpr>, Box<ComposeExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse(input: &str) -> Result<ComposeExpr, ParseError> {
    let mut parser = Parser { input, pos: 0 };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != input.len() {
        return Err(parser.error("trailing input after expression"));
    }
    Ok(expr)
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric() && *c != '_')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("expected an operator name"));
        }
        let name = &rest[..end];
        self.pos += end;
        Ok(name)
    }

    fn expr(&mut self) -> Result<ComposeExpr, ParseError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        match name {
            "imp" => {
                self.expect('(')?;
                let rest = self.rest();
                let close = rest
                    .find(')')
                    .ok_or_else(|| self.error("unterminated imp( file name"))?;
                let file = rest[..close].trim();
                if file.is_empty() {
                    return Err(self.error("empty file name in imp()"));
                }
                self.pos += close + 1;
                Ok(ComposeExpr::Impulse(file.to_string()))
            }
            "cascade" | "parallel" | "feedback" => {
                self.expect('(')?;
                let left = self.expr()?;
                self.expect(',')?;
                let right = self.expr()?;
                self.expect(')')?;
                let (left, right) = (Box::new(left), Box::new(right));
                Ok(match name {
                    "cascade" => ComposeExpr::Cascade(left, right),
                    "parallel" => ComposeExpr::Parallel(left, right),
                    _ => ComposeExpr::Feedback(left, right),
                })
            }
            other => {
                self.pos = at;
                Err(self.error(format!(
                    "unknown operator '{other}' (expected imp, cascade, parallel, or feedback)"
                )))
            }
        }
    }
}
