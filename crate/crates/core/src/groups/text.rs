//! Element text form: `element := "1" | part | part "*" part`,
//! `part := ("x" | "y") ["^" integer]`.
//!
//! Exponents are reduced mod `m` for `x` and mod `q` for `y`. A `y` part
//! written before an `x` part is normalized by multiplication, so `y*x`
//! parses to `x*y^s`.

use crate::error::{Error, Result};

use super::metacyclic::{Element, GroupParams};

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn part(&mut self, params: &GroupParams) -> Result<Element> {
        let generator = match self.peek() {
            Some(c @ (b'x' | b'y')) => c,
            Some(c) => return Err(self.err(format!("expected 'x' or 'y', found {:?}", c as char))),
            None => return Err(self.err("expected 'x' or 'y', found end of input")),
        };
        self.pos += 1;
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            1
        };
        Ok(if generator == b'x' { params.element(exp, 0) } else { params.element(0, exp) })
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap_or("");
        if digits.is_empty() || digits == "-" {
            self.pos = start;
            return Err(self.err("expected an integer exponent"));
        }
        digits.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent out of range".into() })
    }
}

pub fn parse_element(text: &str, params: &GroupParams) -> Result<Element> {
    if text == "1" {
        return Ok(Element::IDENTITY);
    }
    let mut cur = Cursor { text: text.as_bytes(), pos: 0 };
    let mut g = cur.part(params)?;
    if cur.peek() == Some(b'*') {
        cur.pos += 1;
        let h = cur.part(params)?;
        g = params.multiply(g, h);
    }
    if cur.pos != text.len() {
        return Err(cur.err(format!("unexpected trailing input {:?}", &text[cur.pos..])));
    }
    Ok(g)
}

pub fn format_element(g: Element) -> String {
    fn part(name: char, e: u32) -> String {
        if e == 1 { name.to_string() } else { format!("{name}^{e}") }
    }
    match (g.x, g.y) {
        (0, 0) => "1".to_string(),
        (i, 0) => part('x', i),
        (0, j) => part('y', j),
        (i, j) => format!("{}*{}", part('x', i), part('y', j)),
    }
}
