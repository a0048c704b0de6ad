//! Group expressions such as `Dih(4) x ASL(8)`.
//!
//! ```text
//! expr := term (("x" | "×") term)*
//! term := atom | "(" expr ")"
//! atom := "C" INT | "Dih(" INT ")" | "Q8" | "S" INT | "ASL(" INT ")" | "GammaL(" INT ")"
//! ```
//!
//! Whitespace is insignificant. `Dih(m)` is the dihedral group of order `2m`,
//! so `Dih(4)` has order 8. Products are left-associative direct products.

use std::fmt;

use crate::constructors::{asl, cyclic, dihedral, gammal, quaternion8, symmetric, MAX_SYMMETRIC_DEGREE};
use crate::error::{Error, Result};
use crate::group::{direct_product, FiniteGroup, Subgroup, MAX_ORDER};
use crate::numtheory::prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    Symmetric(u64),
    Asl(u64),
    GammaL(u64),
}

impl Atom {
    pub fn order(&self) -> u64 {
        match *self {
            Atom::Cyclic(n) => n,
            Atom::Dihedral(m) => 2 * m,
            Atom::Quaternion8 => 8,
            Atom::Symmetric(n) => (1..=n).product(),
            Atom::Asl(q) | Atom::GammaL(q) => {
                let (_, n) = prime_power(q).expect("validated at parse time");
                let base = (q - 1) * n as u64;
                if matches!(self, Atom::Asl(_)) {
                    base * q
                } else {
                    base
                }
            }
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match *self {
            Atom::Cyclic(n) => cyclic(n as usize),
            Atom::Dihedral(m) => dihedral(m as usize),
            Atom::Quaternion8 => quaternion8(),
            Atom::Symmetric(n) => symmetric(n as usize),
            Atom::Asl(q) => Ok(asl(q)?.group),
            Atom::GammaL(q) => Ok(gammal(q)?.group),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(m) => write!(f, "Dih({m})"),
            Atom::Quaternion8 => write!(f, "Q8"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Asl(q) => write!(f, "ASL({q})"),
            Atom::GammaL(q) => write!(f, "GammaL({q})"),
        }
    }
}

/// Parsed expression. Offsets are byte positions in the source text and do
/// not take part in equality.
#[derive(Debug, Clone)]
pub enum GroupExpr {
    Atom { atom: Atom, offset: usize },
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl PartialEq for GroupExpr {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupExpr::Atom { atom: a, .. }, GroupExpr::Atom { atom: b, .. }) => a == b,
            (GroupExpr::Product(a, b), GroupExpr::Product(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}

impl Eq for GroupExpr {}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom { atom, .. } => write!(f, "{atom}"),
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
        }
    }
}

impl GroupExpr {
    /// Order of the described group, saturating on overflow.
    pub fn order(&self) -> u64 {
        match self {
            GroupExpr::Atom { atom, .. } => atom.order(),
            GroupExpr::Product(l, r) => l.order().saturating_mul(r.order()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        let order = self.order();
        if order > MAX_ORDER as u64 {
            return Err(Error::capacity("group order", order, MAX_ORDER as u64));
        }
        match self {
            GroupExpr::Atom { atom, .. } => atom.build(),
            GroupExpr::Product(l, r) => Ok(direct_product(&l.build()?, &r.build()?)?.group),
        }
    }

    /// For a top-level product `L x R`, the group together with the subgroup
    /// `L x 1`.
    pub fn build_with_left_factor(&self) -> Result<Option<(FiniteGroup, Subgroup)>> {
        let order = self.order();
        if order > MAX_ORDER as u64 {
            return Err(Error::capacity("group order", order, MAX_ORDER as u64));
        }
        match self {
            GroupExpr::Atom { .. } => Ok(None),
            GroupExpr::Product(l, r) => {
                let dp = direct_product(&l.build()?, &r.build()?)?;
                let left = dp.left_factor();
                Ok(Some((dp.group, left)))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(self.pos, format!("expected `{token}`"))
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err(start, "expected an integer");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => self.err(start, "integer too large"),
        }
    }

    fn parenthesized_int(&mut self) -> Result<(u64, usize)> {
        self.expect("(")?;
        let v = self.int()?;
        self.expect(")")?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        while self.eat("x") || self.eat("×") {
            let right = self.term()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let offset = self.pos;
        let atom = if self.eat("Dih") {
            let (m, at) = self.parenthesized_int()?;
            if m == 0 || m > MAX_ORDER as u64 / 2 {
                return self.err(at, format!("Dih parameter must be in 1..={}", MAX_ORDER / 2));
            }
            Atom::Dihedral(m)
        } else if self.eat("Q8") {
            Atom::Quaternion8
        } else if self.eat("ASL") {
            let (q, at) = self.parenthesized_int()?;
            self.field_order(q, at, true)?;
            Atom::Asl(q)
        } else if self.eat("GammaL") {
            let (q, at) = self.parenthesized_int()?;
            self.field_order(q, at, false)?;
            Atom::GammaL(q)
        } else if self.eat("C") {
            let (n, at) = self.int()?;
            if n == 0 || n > MAX_ORDER as u64 {
                return self.err(at, format!("C parameter must be in 1..={MAX_ORDER}"));
            }
            Atom::Cyclic(n)
        } else if self.eat("S") {
            let (n, at) = self.int()?;
            if n == 0 || n > MAX_SYMMETRIC_DEGREE as u64 {
                return self.err(at, format!("S parameter must be in 1..={MAX_SYMMETRIC_DEGREE}"));
            }
            Atom::Symmetric(n)
        } else if self.pos == self.src.len() {
            return self.err(offset, "unexpected end of input");
        } else {
            return self.err(offset, "unknown group name");
        };
        Ok(GroupExpr::Atom { atom, offset })
    }

    fn field_order(&self, q: u64, at: usize, affine: bool) -> Result<()> {
        let translations = if affine { q } else { 1 };
        match prime_power(q) {
            None => self.err(at, format!("{q} is not a prime power")),
            Some((_, n)) if translations.saturating_mul(q - 1).saturating_mul(n as u64) > MAX_ORDER as u64 => {
                self.err(at, format!("{q} is too large"))
            }
            Some(_) => Ok(()),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(e)
}
