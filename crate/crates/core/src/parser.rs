//! Text syntax for polynomials and maps.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! matrix   := '[' '[' entry ',' entry ']' ',' '[' entry ',' entry ']' ']'
//! entry    := expr ('/' factor)?
//! ```
//!
//! Whitespace is ignored and multiplication is always explicit. A ratio
//! entry needs a single-term numerator, so `y+1/(y+2)` is rejected rather
//! than read as `(y+1)/(y+2)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::jonq::{FiberMatrix, JonquieresMap, Moebius};
use crate::{QMap, QPoly, Rational};

/// Largest literal exponent.
pub const MAX_EXPONENT: u32 = 1000;
/// Largest degree of any intermediate polynomial.
pub const MAX_DEGREE: usize = 10_000;
/// Largest bit length of any intermediate coefficient.
pub const MAX_COEFF_BITS: u64 = 1 << 20;
const MAX_NESTING: usize = 200;

/// Text form of a map: fiber matrix, optional base matrix, variable name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapSource {
    pub fiber: String,
    pub base: Option<String>,
    pub var: String,
}

impl MapSource {
    pub fn new(fiber: impl Into<String>) -> Self {
        MapSource {
            fiber: fiber.into(),
            base: None,
            var: "y".to_string(),
        }
    }

    pub fn with_base(mut self, base: impl Into<String>) -> Self {
        self.base = Some(base.into());
        self
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }
}

fn coeff_bits(p: &QPoly) -> u64 {
    p.coeffs()
        .iter()
        .map(|c| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: &'a str,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, var: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            var,
            depth: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn unexpected<T>(&mut self, wanted: &str) -> Result<T> {
        match self.peek() {
            None => self.err(format!("expected {wanted}, found end of input")),
            Some(c) if c.is_ascii_graphic() => {
                self.err(format!("expected {wanted}, found '{}'", c as char))
            }
            Some(c) => self.err(format!("expected {wanted}, found byte 0x{c:02x}")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&format!("'{}'", c as char))
        }
    }

    fn at_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.unexpected("end of input"),
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            (start, s)
        })
    }

    fn checked(&self, p: QPoly, at: usize) -> Result<QPoly> {
        if p.deg0() > MAX_DEGREE {
            return Err(Error::parse(at, format!("degree exceeds {MAX_DEGREE}")));
        }
        if coeff_bits(&p) > MAX_COEFF_BITS {
            return Err(Error::parse(at, "coefficient too large"));
        }
        Ok(p)
    }

    fn mul(&self, a: &QPoly, b: &QPoly, at: usize) -> Result<QPoly> {
        if a.deg0() + b.deg0() > MAX_DEGREE || coeff_bits(a) + coeff_bits(b) > MAX_COEFF_BITS {
            return Err(Error::parse(at, "product too large"));
        }
        self.checked(a * b, at)
    }

    fn expr(&mut self) -> Result<(QPoly, usize)> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return self.err("expression nested too deeply");
        }
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        let mut terms = 1;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
            terms += 1;
        }
        self.depth -= 1;
        Ok((acc, terms))
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let at = self.pos;
            let f = self.factor()?;
            acc = self.mul(&acc, &f, at)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let Some((at, digits)) = self.digits() else {
            return self.unexpected("a nonnegative integer exponent");
        };
        let e: u32 = match digits.parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(Error::parse(at, format!("exponent exceeds {MAX_EXPONENT}"))),
        };
        let e64 = u64::from(e);
        if base.deg0() as u64 * e64 > MAX_DEGREE as u64
            || (coeff_bits(&base) + base.deg0().max(1).ilog2() as u64 + 1) * e64 > MAX_COEFF_BITS
        {
            return Err(Error::parse(at, "power too large"));
        }
        self.checked(base.pow(e), at)
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let (p, _) = self.expr()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(QPoly::constant(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == self.var {
                    Ok(QPoly::x())
                } else {
                    Err(Error::parse(
                        start,
                        format!("unknown symbol '{name}' (the variable is '{}')", self.var),
                    ))
                }
            }
            _ => self.unexpected("a number, the variable or '('"),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let (_, num) = self.digits().expect("caller saw a digit");
        let num: BigInt = num.parse().expect("digits");
        if num.bits() > MAX_COEFF_BITS {
            return self.err("integer literal too large");
        }
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if let Some((at, den)) = self.digits() {
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    return Err(Error::parse(at, "zero denominator"));
                }
                if den.bits() > MAX_COEFF_BITS {
                    return Err(Error::parse(at, "integer literal too large"));
                }
                return Ok(Rational::new(num, den));
            }
            self.pos = save;
        }
        Ok(Rational::from_integer(num))
    }

    /// Matrix entry: a polynomial or a ratio of polynomials as `(num, den)`.
    fn entry(&mut self) -> Result<(QPoly, QPoly)> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let (num, terms) = self.expr()?;
        if self.peek() != Some(b'/') {
            return Ok((num, QPoly::one()));
        }
        if terms > 1 {
            return Err(Error::parse(
                start,
                "ratio numerator with several terms must be parenthesized",
            ));
        }
        self.pos += 1;
        let at = self.pos;
        let den = self.factor()?;
        if den.is_zero() {
            return Err(Error::parse(at, "zero denominator"));
        }
        Ok((num, den))
    }

    fn matrix(&mut self) -> Result<[(QPoly, QPoly); 4]> {
        self.expect(b'[')?;
        self.expect(b'[')?;
        let a = self.entry()?;
        self.expect(b',')?;
        let b = self.entry()?;
        self.expect(b']')?;
        self.expect(b',')?;
        self.expect(b'[')?;
        let c = self.entry()?;
        self.expect(b',')?;
        let d = self.entry()?;
        self.expect(b']')?;
        self.expect(b']')?;
        self.at_end()?;
        Ok([a, b, c, d])
    }
}

fn check_var(var: &str) -> Result<()> {
    let ok = var
        .bytes()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == b'_')
        && var.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_');
    if ok {
        Ok(())
    } else {
        Err(Error::parse(0, format!("invalid variable name {var:?}")))
    }
}

/// Parses a polynomial in `var`.
pub fn parse_poly(text: &str, var: &str) -> Result<QPoly> {
    check_var(var)?;
    let mut p = Parser::new(text, var);
    let (poly, _) = p.expr()?;
    p.at_end()?;
    Ok(poly)
}

/// Parses a fiber matrix and optional base matrix into a canonical map.
pub fn parse_map(src: &MapSource) -> Result<QMap> {
    check_var(&src.var)?;
    let mut p = Parser::new(&src.fiber, &src.var);
    let [(a, da), (b, db), (c, dc), (d, dd)] = p.matrix()?;
    // scaling all four entries by one function leaves the map unchanged
    let den = &(&(&da * &db) * &dc) * &dd;
    let clear = |n: QPoly, dn: &QPoly| -> QPoly {
        (&n * &den)
            .exact_div(dn)
            .expect("denominator divides the product")
    };
    let (a, b, c, d) = (clear(a, &da), clear(b, &db), clear(c, &dc), clear(d, &dd));
    let m = FiberMatrix::new(a, b, c, d).map_err(|_| {
        Error::domain("singular fiber matrix (AD - BC = 0): not birational along fibers")
    })?;

    let h = match &src.base {
        None => Moebius::identity(),
        Some(text) => {
            let mut p = Parser::new(text, &src.var);
            let entries = p.matrix()?;
            let mut scalars = Vec::with_capacity(4);
            for (n, dn) in entries {
                if !n.is_constant() || !dn.is_constant() {
                    return Err(Error::parse(0, "base matrix entries must be constants"));
                }
                scalars.push(n.coeff(0) / dn.coeff(0));
            }
            let [a, b, c, d]: [Rational; 4] = scalars.try_into().expect("four entries");
            Moebius::new(a, b, c, d)?
        }
    };
    Ok(JonquieresMap::new(m, h))
}

/// Canonical text of a map with rational coefficients.
pub fn serialize<K: Field>(f: &JonquieresMap<K>, var: &str) -> Result<MapSource> {
    check_var(var)?;
    let Some(f) = f.to_rational() else {
        return Err(Error::domain("not serializable to base-rational syntax"));
    };
    let fiber = f.fiber().to_string_in(var);
    let base = if f.base().is_identity() {
        None
    } else {
        let [a, b, c, d] = f.base().entries();
        Some(format!("[[{a}, {b}],[{c}, {d}]]"))
    };
    Ok(MapSource {
        fiber,
        base,
        var: var.to_string(),
    })
}
