//! Textual grammar, e.g. `3/2*x^2*y - cyc(4; 0, 1)*y^3`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' ['-'] int)?
//! atom  := int | ident | '(' expr ')' | cyc(m; c0, .., c_{phi(m)-1}) | zeta(m, k)
//! ```

use super::{HPoly2, Poly3, URatFun, UPoly};
use crate::error::{Error, Result};
use crate::exactfield::{try_root_of_unity, CycNum, Rat};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(CycNum),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.int()?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected `)`"));
        }
        let n: i64 = n.parse().map_err(|_| self.err("exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn int(&mut self) -> Result<String> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                let n: num_bigint::BigInt = n.parse().expect("digits");
                Ok(Expr::Num(CycNum::from_rat(Rat::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "cyc" => self.cyc_body(),
                    "zeta" => self.zeta_body(),
                    _ => Ok(Expr::Var(name)),
                }
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }

    fn group_text(&mut self) -> Result<String> {
        if !self.eat(b'(') {
            return Err(self.err("expected `(`"));
        }
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos] != b')' {
            self.pos += 1;
        }
        if self.pos == self.s.len() {
            return Err(self.err("unterminated `(`"));
        }
        let body = String::from_utf8_lossy(&self.s[start..self.pos]).into_owned();
        self.pos += 1;
        Ok(body)
    }

    fn cyc_body(&mut self) -> Result<Expr> {
        let body = self.group_text()?;
        Ok(Expr::Num(CycNum::parse(&format!("cyc({body})"))?))
    }

    fn zeta_body(&mut self) -> Result<Expr> {
        let body = self.group_text()?;
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("zeta({body}) expects `zeta(m, k)`"));
        let (m, k) = match parts.as_slice() {
            [m] => (m.parse::<u64>().map_err(|_| bad())?, 1),
            [m, k] => (
                m.parse::<u64>().map_err(|_| bad())?,
                k.parse::<i64>().map_err(|_| bad())?,
            ),
            _ => return Err(bad()),
        };
        Ok(Expr::Num(try_root_of_unity(m, k)?))
    }
}

impl Expr {
    /// Evaluates into a ring: `var` resolves names, `div` handles quotients
    /// and `pow` integer powers.
    fn eval<T>(
        &self,
        var: &dyn Fn(&str) -> Result<T>,
        konst: &dyn Fn(CycNum) -> T,
        ops: &RingOps<T>,
    ) -> Result<T> {
        let r = |e: &Expr| e.eval(var, konst, ops);
        Ok(match self {
            Expr::Num(c) => konst(c.clone()),
            Expr::Var(v) => var(v)?,
            Expr::Add(a, b) => (ops.add)(&r(a)?, &r(b)?),
            Expr::Sub(a, b) => (ops.sub)(&r(a)?, &r(b)?),
            Expr::Mul(a, b) => (ops.mul)(&r(a)?, &r(b)?),
            Expr::Div(a, b) => (ops.div)(&r(a)?, &r(b)?)?,
            Expr::Neg(a) => (ops.sub)(&konst(CycNum::zero()), &r(a)?),
            Expr::Pow(a, n) => (ops.pow)(&r(a)?, *n)?,
        })
    }

    /// Evaluates a variable-free expression.
    pub fn constant(&self) -> Result<CycNum> {
        self.eval(
            &|v| Err(Error::Parse(format!("unexpected variable `{v}` in a constant"))),
            &|c| c,
            &RingOps {
                add: &|a, b| a + b,
                sub: &|a, b| a - b,
                mul: &|a, b| a * b,
                div: &|a, b| a.checked_div(b),
                pow: &|a, n| {
                    if a.is_zero() && n < 0 {
                        Err(Error::DivisionByZero)
                    } else {
                        Ok(a.pow(n))
                    }
                },
            },
        )
    }

    /// Evaluates into `Poly3`, mapping `names[k]` to variable `k`.
    pub fn to_poly3(&self, names: &[&str]) -> Result<Poly3> {
        self.eval(
            &|v| {
                names
                    .iter()
                    .position(|n| *n == v)
                    .map(Poly3::var)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{v}`")))
            },
            &Poly3::constant,
            &RingOps {
                add: &|a, b| a + b,
                sub: &|a, b| a - b,
                mul: &|a, b| a * b,
                div: &|a, b| {
                    let c = poly_constant(b)
                        .ok_or_else(|| Error::Parse("division by a non-constant polynomial".into()))?;
                    Ok(a.scale(&c.inv()?))
                },
                pow: &|a, n| {
                    u32::try_from(n)
                        .map(|n| a.pow(n))
                        .map_err(|_| Error::Parse("negative power of a polynomial".into()))
                },
            },
        )
    }

    /// Evaluates into rational functions of `x`.
    pub fn to_ratfun(&self, var_name: &str) -> Result<URatFun> {
        self.eval(
            &|v| {
                if v == var_name {
                    Ok(URatFun::x())
                } else {
                    Err(Error::Parse(format!("unknown variable `{v}`")))
                }
            },
            &URatFun::constant,
            &RingOps {
                add: &|a, b| a + b,
                sub: &|a, b| a - b,
                mul: &|a, b| a * b,
                div: &|a, b| a.checked_div(b),
                pow: &|a, n| a.pow(n),
            },
        )
    }
}

struct RingOps<'a, T> {
    add: &'a dyn Fn(&T, &T) -> T,
    sub: &'a dyn Fn(&T, &T) -> T,
    mul: &'a dyn Fn(&T, &T) -> T,
    div: &'a dyn Fn(&T, &T) -> Result<T>,
    pow: &'a dyn Fn(&T, i64) -> Result<T>,
}

fn poly_constant(p: &Poly3) -> Option<CycNum> {
    if p.is_zero() {
        return None;
    }
    let mut it = p.terms();
    match (it.next(), it.next()) {
        (Some((e, c)), None) if *e == [0, 0, 0] => Some(c.clone()),
        _ => None,
    }
}

/// Parses a homogeneous form in `x, y`. `"0"` is the zero form of degree 0.
pub fn parse_hpoly(s: &str) -> Result<HPoly2> {
    let p = parse_expr(s)?.to_poly3(&["x", "y"])?;
    let mut deg = None;
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        let d = e[0] + e[1];
        if *deg.get_or_insert(d) != d {
            return Err(Error::Parse(format!("`{s}` is not homogeneous")));
        }
        terms.push((e[0], c.clone()));
    }
    Ok(HPoly2::from_terms(deg.unwrap_or(0), terms))
}

/// Parses a polynomial in `x`.
pub fn parse_upoly(s: &str) -> Result<UPoly> {
    parse_ratfun(s)?
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("`{s}` is not a polynomial")))
}

/// Parses a rational function in `x`.
pub fn parse_ratfun(s: &str) -> Result<URatFun> {
    parse_expr(s)?.to_ratfun("x")
}

/// Parses a polynomial in `X, Y, Z`.
pub fn parse_poly3(s: &str) -> Result<Poly3> {
    parse_expr(s)?.to_poly3(&["X", "Y", "Z"])
}

/// Parses a constant expression such as `1/2 + zeta(3)`.
pub fn parse_constant(s: &str) -> Result<CycNum> {
    parse_expr(s)?.constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::root_of_unity;

    #[test]
    fn reads_the_documented_example() {
        let p = parse_hpoly("3/2*x^2*y - cyc(4;0,1)*y^3").unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.coeff(2), CycNum::rational(3, 2));
        assert_eq!(p.coeff(0), -root_of_unity(4, 1));
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^4 - 2*x^2*y^2 + y^4", "-x*y + zeta(3)*y^2", "cyc(5;1,2,0,-1)*x^3 - 1/7*y^3"] {
            let p = parse_hpoly(s).unwrap();
            assert_eq!(parse_hpoly(&p.to_string()).unwrap(), p, "{s} -> {p}");
        }
        let q = parse_poly3("X^2*Y - 3*Z + 1/2").unwrap();
        assert_eq!(parse_poly3(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_hpoly("x^2 + y").is_err());
        assert!(parse_hpoly("x + ").is_err());
        assert!(parse_poly3("X/Y").is_err());
        assert!(parse_upoly("1/x").is_err());
        assert!(parse_constant("cyc(4; 1)").is_err());
    }

    #[test]
    fn rational_functions() {
        let r = parse_ratfun("1/(x*(x-1))").unwrap();
        assert_eq!(r.den(), &UPoly::from_ints(&[0, -1, 1]));
        let s = parse_ratfun("x^-2").unwrap();
        assert_eq!(s.den(), &UPoly::from_ints(&[0, 0, 1]));
        assert_eq!(parse_constant("(1 + zeta(4))^2").unwrap(), root_of_unity(4, 1).scale(&crate::exactfield::rat(2, 1)));
    }
}
