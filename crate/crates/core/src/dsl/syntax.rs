//! Terms, their parser and their printer.
//!
//! ```text
//! objexpr := objatom ("*" objatom)*
//! objatom := "I" | NAME | "(" objexpr ")"
//! term    := term "." term | term "*" term | "(" term ")"
//!          | "id" objatom | NAME | "sigma" "(" objexpr "," objexpr ")"
//! ```
//!
//! Both operators are left-associative and `*` binds tighter than `.`.

use std::fmt;

use super::lexer::{lex, Spanned, Tok};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ObjExpr {
    Unit,
    Name(String),
    Tensor(Box<ObjExpr>, Box<ObjExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Generator(String),
    Identity(ObjExpr),
    /// `Compose(f, g)` is `f∘g`: `g` applies first.
    Compose(Box<Term>, Box<Term>),
    Tensor(Box<Term>, Box<Term>),
    Symmetry(ObjExpr, ObjExpr),
}

impl ObjExpr {
    pub fn name(s: &str) -> Self {
        ObjExpr::Name(s.to_string())
    }

    pub fn tensor(self, other: ObjExpr) -> Self {
        ObjExpr::Tensor(Box::new(self), Box::new(other))
    }
}

impl Term {
    pub fn gen(s: &str) -> Self {
        Term::Generator(s.to_string())
    }

    pub fn id(o: ObjExpr) -> Self {
        Term::Identity(o)
    }

    pub fn compose(self, g: Term) -> Self {
        Term::Compose(Box::new(self), Box::new(g))
    }

    pub fn tensor(self, g: Term) -> Self {
        Term::Tensor(Box::new(self), Box::new(g))
    }
}

const RESERVED: [&str; 3] = ["I", "id", "sigma"];

pub(crate) fn is_reserved(name: &str) -> bool {
    RESERVED.contains(&name)
}

pub(crate) struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(toks: Vec<Spanned>) -> Self {
        Parser { toks, pos: 0 }
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub(crate) fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        let s = &self.toks[self.pos];
        Error::Parse {
            line: s.line,
            col: s.col,
            msg: msg.into(),
        }
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> Error {
        self.error(format!(
            "expected {wanted}, found {}",
            self.peek().describe()
        ))
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn ident(&mut self, wanted: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    /// A user-chosen name: an identifier that is not reserved.
    pub(crate) fn name(&mut self, wanted: &str) -> Result<String> {
        if let Tok::Ident(s) = self.peek() {
            if is_reserved(s) {
                return Err(self.error(format!("`{s}` is reserved")));
            }
        }
        self.ident(wanted)
    }

    pub(crate) fn end(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    pub(crate) fn objexpr(&mut self) -> Result<ObjExpr> {
        let mut o = self.objatom()?;
        while self.eat(&Tok::Star) {
            o = o.tensor(self.objatom()?);
        }
        Ok(o)
    }

    fn objatom(&mut self) -> Result<ObjExpr> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "I" => {
                self.next();
                Ok(ObjExpr::Unit)
            }
            Tok::Ident(s) if !is_reserved(&s) => {
                self.next();
                Ok(ObjExpr::Name(s))
            }
            Tok::LParen => {
                self.next();
                let o = self.objexpr()?;
                self.expect(Tok::RParen)?;
                Ok(o)
            }
            _ => Err(self.unexpected("an object")),
        }
    }

    pub(crate) fn term(&mut self) -> Result<Term> {
        let mut t = self.tensor_term()?;
        while self.eat(&Tok::Dot) {
            t = t.compose(self.tensor_term()?);
        }
        Ok(t)
    }

    fn tensor_term(&mut self) -> Result<Term> {
        let mut t = self.primary()?;
        while self.eat(&Tok::Star) {
            t = t.tensor(self.primary()?);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "id" => {
                self.next();
                Ok(Term::Identity(self.objatom()?))
            }
            Tok::Ident(s) if s == "sigma" => {
                self.next();
                self.expect(Tok::LParen)?;
                let a = self.objexpr()?;
                self.expect(Tok::Comma)?;
                let b = self.objexpr()?;
                self.expect(Tok::RParen)?;
                Ok(Term::Symmetry(a, b))
            }
            Tok::Ident(s) if s == "I" => Err(self.error("`I` is an object, not a morphism")),
            Tok::Ident(s) => {
                self.next();
                Ok(Term::Generator(s))
            }
            Tok::LParen => {
                self.next();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.unexpected("a morphism term")),
        }
    }
}

/// Parses a complete term.
pub fn parse(text: &str) -> Result<Term> {
    let mut p = Parser::new(lex(text, 1, 1)?);
    let t = p.term()?;
    p.end()?;
    Ok(t)
}

/// Parses a complete object expression.
pub fn parse_object(text: &str) -> Result<ObjExpr> {
    let mut p = Parser::new(lex(text, 1, 1)?);
    let o = p.objexpr()?;
    p.end()?;
    Ok(o)
}

fn fmt_obj(o: &ObjExpr, atom: bool, out: &mut String) {
    match o {
        ObjExpr::Unit => out.push('I'),
        ObjExpr::Name(n) => out.push_str(n),
        ObjExpr::Tensor(a, b) => {
            if atom {
                out.push('(');
            }
            fmt_obj(a, false, out);
            out.push_str(" * ");
            fmt_obj(b, true, out);
            if atom {
                out.push(')');
            }
        }
    }
}

/// `level`: 0 anything, 1 no bare composite, 2 no bare binary node.
fn fmt_term(t: &Term, level: u8, out: &mut String) {
    let wrap = |needs: bool, out: &mut String, body: &dyn Fn(&mut String)| {
        if needs {
            out.push('(');
        }
        body(out);
        if needs {
            out.push(')');
        }
    };
    match t {
        Term::Generator(n) => out.push_str(n),
        Term::Identity(o) => {
            out.push_str("id ");
            fmt_obj(o, true, out);
        }
        Term::Symmetry(a, b) => {
            out.push_str("sigma(");
            fmt_obj(a, false, out);
            out.push_str(", ");
            fmt_obj(b, false, out);
            out.push(')');
        }
        Term::Compose(f, g) => wrap(level >= 1, out, &|out| {
            fmt_term(f, 0, out);
            out.push_str(" . ");
            fmt_term(g, 1, out);
        }),
        Term::Tensor(f, g) => wrap(level >= 2, out, &|out| {
            fmt_term(f, 1, out);
            out.push_str(" * ");
            fmt_term(g, 2, out);
        }),
    }
}

impl fmt::Display for ObjExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_obj(self, false, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Display for Term {
    /// Minimal parenthesization; [`parse`] inverts it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_term(self, 0, &mut s);
        f.write_str(&s)
    }
}

/// Canonical text of a term.
pub fn format(t: &Term) -> String {
    t.to_string()
}
