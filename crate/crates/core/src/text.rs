//! Cursor for the small hand-written grammars (trees, coefficients,
//! elements).

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn reset(&mut self, pos: usize) {
        self.pos = pos;
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    /// Like `eat`, allowing whitespace on both sides of `c`.
    pub fn eat_padded(&mut self, c: char) -> bool {
        let start = self.pos();
        self.skip_ws();
        if self.eat(c) {
            self.skip_ws();
            true
        } else {
            self.reset(start);
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            Err(self.error("expected a decimal number"))
        } else {
            Ok(&self.src[start..self.pos])
        }
    }

    pub fn uint<T: std::str::FromStr>(&mut self) -> Result<T> {
        let start = self.pos;
        let digits = self.digits()?;
        digits
            .parse()
            .map_err(|_| Error::parse(start, format!("number '{digits}' out of range")))
    }

    pub fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let found = match self.peek() {
            Some(c) => format!(" (found '{c}')"),
            None => " (found end of input)".to_string(),
        };
        Error::parse(self.pos, format!("{}{}", msg.into(), found))
    }
}

/// Runs `f` over the whole input, rejecting trailing characters.
pub(crate) fn parse_all<T>(src: &str, f: impl FnOnce(&mut Cursor<'_>) -> Result<T>) -> Result<T> {
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    let value = f(&mut cur)?;
    cur.finish()?;
    Ok(value)
}
