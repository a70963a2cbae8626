//! Text formats: field descriptors (`Q`, `F2`, `F9=F3[x]/(x^2+1)`, `Q(v)`),
//! comma-separated coefficient lists (lowest degree first, `1,0,2` is
//! `1 + 2u^2`), polynomial/rational-function expressions (`(t+1)/(t^2)`),
//! and cycle expressions (`3*[u-1] + 1*[u^2+u+1]`).

use super::field::{Elem, Field, FieldInner};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::Error;
use crate::Result;

/// Parses a field descriptor.
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    // base(v) form; explicit-modulus descriptors also contain parentheses,
    // so only fire when the prefix is itself a bare descriptor.
    if let Some(open) = s.rfind('(') {
        if s.ends_with(')') && open > 0 {
            let var = &s[open + 1..s.len() - 1];
            let prefix = &s[..open];
            if !var.is_empty()
                && var.chars().all(|c| c.is_ascii_alphabetic())
                && !prefix.contains('=')
                && !prefix.contains('[')
                && !prefix.contains('/')
            {
                let base = parse_field(prefix)?;
                return Field::rational_functions(base, var);
            }
        }
    }
    if s == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(rest) = s.strip_prefix('F') {
        // Either "F<q>" or "F<q>=F<p>[x]/(modpoly)".
        if let Some(eq) = rest.find('=') {
            let q: u64 = rest[..eq]
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order in {s:?}")))?;
            let tail = &rest[eq + 1..];
            let open_bracket = tail
                .find('[')
                .ok_or_else(|| Error::Parse(format!("expected [x] in {s:?}")))?;
            let p: u64 = tail[1..open_bracket]
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
            let var_close = tail
                .find(']')
                .ok_or_else(|| Error::Parse(format!("expected ] in {s:?}")))?;
            let var = &tail[open_bracket + 1..var_close];
            let rem = tail[var_close + 1..].trim_start_matches('/').trim();
            if !(rem.starts_with('(') && rem.ends_with(')')) {
                return Err(Error::Parse(format!("expected (modulus) in {s:?}")));
            }
            let prime = Field::prime(p)?;
            let modulus = parse_poly_expr(&rem[1..rem.len() - 1], &prime, var)?;
            let e = modulus
                .degree()
                .ok_or_else(|| Error::Parse("zero modulus".into()))?;
            if p.pow(e as u32) != q {
                return Err(Error::Parse(format!(
                    "field order {q} does not match F{p}^{e}"
                )));
            }
            let coeffs: Vec<u64> = modulus
                .coeffs()
                .iter()
                .map(|c| c.as_prime_residue().expect("prime residue"))
                .collect();
            return Field::finite(p, coeffs);
        }
        let q: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad field order in {s:?}")))?;
        // Prime order: prime field. Prime power: canonical presentation.
        let (p, e) = prime_power_split(q)
            .ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
        return if e == 1 { Field::prime(p) } else { Field::finite_canonical(p, e) };
    }
    Err(Error::Parse(format!("unknown field descriptor {s:?}")))
}

fn prime_power_split(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut e = 0;
            let mut rem = q;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            return (rem == 1).then_some((p, e));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Parses a comma-separated coefficient list, lowest degree first.
/// Entries are integers, or `a/b` rationals over `Q`.
pub fn parse_coeff_list(s: &str, field: &Field) -> Result<Poly> {
    let mut coeffs = Vec::new();
    for part in s.split(',') {
        coeffs.push(parse_scalar(part.trim(), field)?);
    }
    Ok(Poly::new(field.clone(), coeffs))
}

fn parse_scalar(s: &str, field: &Field) -> Result<Elem> {
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
        let d: i64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
        return field.from_rational(n, d);
    }
    let n: i64 = s.parse().map_err(|_| Error::Parse(format!("bad number {s:?}")))?;
    Ok(field.from_integer(n))
}

/// Formats a polynomial as a comma-separated coefficient list.
pub fn coeff_list_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| format!("{c}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses an expression over `field` with `var` as the polynomial variable,
/// requiring the result to be a polynomial.
pub fn parse_poly_expr(s: &str, field: &Field, var: &str) -> Result<Poly> {
    let r = parse_ratfunc_expr(s, field, var)?;
    r.as_poly()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a polynomial")))
}

/// Parses a rational-function expression in `var` over `field`.
///
/// Grammar: sums/differences of terms, `*`, `/`, `^` with integer exponent,
/// parentheses, integer literals, `var`, and the transcendental generator of
/// a rational-function coefficient field by its name.
pub fn parse_ratfunc_expr(s: &str, field: &Field, var: &str) -> Result<RatFunc> {
    let tokens = tokenize(s)?;
    let mut p = Parser { tokens, pos: 0, field: field.clone(), var: var.to_string() };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n = 0i64;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as i64))
                            .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::Open);
            }
            ')' => {
                chars.next();
                out.push(Tok::Close);
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
    field: Field,
    var: String,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if matches!(self.peek(), Some(Tok::Plus)) {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Int(n)) if n >= 0 => n as usize,
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            };
            let mut acc = RatFunc::constant(self.field.one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(RatFunc::constant(self.field.from_integer(n))),
            Some(Tok::Ident(id)) => {
                if id == self.var {
                    return Ok(RatFunc::var(&self.field));
                }
                if let FieldInner::RatFun { var, .. } = self.field.inner() {
                    if id == *var {
                        let g = self.field.generator().expect("ratfun generator");
                        return Ok(RatFunc::constant(g));
                    }
                }
                if let FieldInner::Finite { .. } = self.field.inner() {
                    if id == "x" {
                        let g = self.field.generator().expect("finite field generator");
                        return Ok(RatFunc::constant(g));
                    }
                }
                Err(Error::Parse(format!("unknown identifier {id:?}")))
            }
            Some(Tok::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(e),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a cycle expression `3*[u-1] + 1*[u^2+u+1]` over a field; the place
/// polynomials are read in the variable `u` and normalized monic.
pub fn parse_cycle_expr(s: &str, field: &Field) -> Result<Vec<(Poly, i64)>> {
    let mut out: Vec<(Poly, i64)> = Vec::new();
    let mut rest = s.trim();
    let mut sign = 1i64;
    if rest.is_empty() || rest == "0" {
        return Ok(out);
    }
    loop {
        rest = rest.trim_start();
        // Optional integer multiplicity followed by '*'.
        let mut mult = 1i64;
        if let Some(stripped) = rest.strip_prefix(|c: char| c.is_ascii_digit()) {
            // Walk the numeral manually to keep `rest` in sync.
            let digits_end = rest.len() - stripped.trim_start_matches(|c: char| c.is_ascii_digit()).len();
            mult = rest[..digits_end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity in {s:?}")))?;
            rest = rest[digits_end..].trim_start();
            rest = rest
                .strip_prefix('*')
                .ok_or_else(|| Error::Parse(format!("expected '*' after multiplicity in {s:?}")))?;
            rest = rest.trim_start();
        }
        let open = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("expected '[' in cycle {s:?}")))?;
        let close = open
            .find(']')
            .ok_or_else(|| Error::Parse(format!("missing ']' in cycle {s:?}")))?;
        let poly = parse_poly_expr(&open[..close], field, "u")?.monic();
        out.push((poly, sign * mult));
        rest = open[close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        sign = match rest.chars().next() {
            Some('+') => 1,
            Some('-') => -1,
            other => return Err(Error::Parse(format!("unexpected {other:?} in cycle {s:?}"))),
        };
        rest = &rest[1..];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_descriptors_roundtrip() {
        assert_eq!(parse_field("Q").unwrap(), Field::rationals());
        assert_eq!(parse_field("F2").unwrap(), Field::prime(2).unwrap());
        let f9 = parse_field("F9=F3[x]/(x^2+1)").unwrap();
        assert_eq!(f9.order(), Some(9));
        let qv = parse_field("Q(v)").unwrap();
        assert!(qv.generator().is_some());
        assert!(parse_field("F6").is_err());
    }

    #[test]
    fn coeff_list_lowest_first() {
        let q = Field::rationals();
        let p = parse_coeff_list("1,0,2", &q).unwrap();
        assert_eq!(p, Poly::from_integers(&q, &[1, 0, 2]));
        assert_eq!(coeff_list_string(&p), "1,0,2");
    }

    #[test]
    fn ratfunc_expressions() {
        let q = Field::rationals();
        let f = parse_ratfunc_expr("(t+1)/1", &q, "t").unwrap();
        assert!(f.is_polynomial());
        let g = parse_ratfunc_expr("(t^2 - 2*t + 1)/(t - 1)", &q, "t").unwrap();
        // reduces to t - 1
        assert_eq!(g, RatFunc::from_poly(Poly::from_integers(&q, &[-1, 1])));
        let h = parse_ratfunc_expr("1/(1 - t)", &q, "t").unwrap();
        assert!(!h.is_polynomial());
    }

    #[test]
    fn generator_name_resolves_in_ratfun_fields() {
        let qv = parse_field("Q(v)").unwrap();
        let f = parse_ratfunc_expr("v*t^2 + 1", &qv, "t").unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.as_poly().unwrap().degree(), Some(2));
    }

    #[test]
    fn cycle_expressions() {
        let f2 = Field::prime(2).unwrap();
        let terms = parse_cycle_expr("3*[u-1] + 1*[u^2+u+1] - [u+1]", &f2).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].1, 3);
        assert_eq!(terms[1].1, 1);
        assert_eq!(terms[2].1, -1);
        // over F_2, u-1 == u+1
        assert_eq!(terms[0].0, terms[2].0);
    }
}
