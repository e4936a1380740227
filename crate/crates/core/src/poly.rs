//! Polynomials in the matrix entry variables `x(i, j)`, `i > j`.
//!
//! The determinantal generators live in the coordinate ring of strictly
//! lower-triangular square matrices, one variable per entry below the
//! diagonal.  Coefficients are exact rationals.  Serialization is canonical
//! — terms ascend in (degree, lexicographic) order, variables inside a
//! monomial ascend by (row, column), repeated variables use `^` — so equal
//! polynomials always print identically and `parse` inverts `to_string`.

use crate::error::Error;
use crate::rational::{Rational, RationalMatrix};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Peekable;
use std::str::Chars;

/// The variable `x(row, col)`; strictly lower-triangular, so `row > col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub row: usize,
    pub col: usize,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(
            col >= 1 && row > col,
            "x({row},{col}) is not below the diagonal"
        );
        Var { row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x({},{})", self.row, self.col)
    }
}

/// A product of variables, kept sorted; the empty product is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    vars: Vec<Var>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new() }
    }

    pub fn var(row: usize, col: usize) -> Self {
        Monomial {
            vars: vec![Var::new(row, col)],
        }
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        vars.extend_from_slice(&self.vars);
        vars.extend_from_slice(&other.vars);
        vars.sort();
        Monomial { vars }
    }

    /// The distinct variables with their exponents, in sorted order.
    pub fn powers(&self) -> Vec<(Var, usize)> {
        let mut out: Vec<(Var, usize)> = Vec::new();
        for &v in &self.vars {
            match out.last_mut() {
                Some((last, e)) if *last == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

/// Monomials compare by total degree first, then lexicographically on the
/// sorted variable list; `Ord` on the `(degree, vars)` pair realises exactly
/// that, which fixes the printed term order.
fn monomial_key(m: &Monomial) -> (usize, &[Var]) {
    (m.degree(), &m.vars)
}

/// A polynomial with rational coefficients, stored as a sorted term map with
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct SymPolynomial {
    terms: BTreeMap<OrderedMonomial, Rational>,
}

/// Wrapper giving `Monomial` the (degree, lex) order inside the term map.
#[derive(Clone, Debug, PartialEq, Eq)]
struct OrderedMonomial(Monomial);

impl PartialOrd for OrderedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        monomial_key(&self.0).cmp(&monomial_key(&other.0))
    }
}

impl SymPolynomial {
    pub fn zero() -> Self {
        SymPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(row: usize, col: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(row, col), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.0.degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = OrderedMonomial(mono);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> SymPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        SymPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Clears denominators, divides by the integer content and makes the
    /// first-printed (smallest-monomial) coefficient positive: a canonical
    /// representative of the polynomial up to nonzero scalar.
    pub fn normalized(&self) -> SymPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c * BigRational::from_integer(denom_lcm.clone());
            numer_gcd = num::integer::gcd(numer_gcd, scaled.numer().clone());
        }
        let mut factor = BigRational::new(denom_lcm, numer_gcd);
        let first = self.terms.values().next().expect("nonzero polynomial");
        if (first * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Substitutes the `(j, i)` entry of `point` for `x(i, j)`: evaluates the
    /// lower-triangular variables on the transpose of an upper-triangular
    /// matrix.
    pub fn evaluate(&self, point: &RationalMatrix) -> Rational {
        let mut total = Rational::zero();
        for (mono, coeff) in self.terms() {
            let mut value = coeff.clone();
            for (v, e) in mono.powers() {
                let entry = point.entry(v.col, v.row);
                for _ in 0..e {
                    value *= entry;
                }
                if value.is_zero() {
                    break;
                }
            }
            total += value;
        }
        total
    }

    pub fn parse(text: &str) -> Result<SymPolynomial, Error> {
        Parser::new(text).parse_polynomial()
    }
}

impl From<SymPolynomial> for String {
    fn from(p: SymPolynomial) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for SymPolynomial {
    type Error = Error;

    fn try_from(text: String) -> Result<Self, Error> {
        SymPolynomial::parse(&text)
    }
}

impl std::ops::Add for &SymPolynomial {
    type Output = SymPolynomial;

    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &SymPolynomial {
    type Output = SymPolynomial;

    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &SymPolynomial {
    type Output = SymPolynomial;

    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl std::ops::Neg for &SymPolynomial {
    type Output = SymPolynomial;

    fn neg(self) -> SymPolynomial {
        SymPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let mut pieces: Vec<String> = Vec::new();
            if !abs.is_one() || mono.is_constant() {
                pieces.push(abs.to_string());
            }
            for (v, e) in mono.powers() {
                if e == 1 {
                    pieces.push(v.to_string());
                } else {
                    pieces.push(format!("{v}^{e}"));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

/// Cofactor expansion along the first column, skipping zero entries.  The
/// empty matrix has determinant 1.
pub fn determinant(matrix: &[Vec<SymPolynomial>]) -> SymPolynomial {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    match n {
        0 => SymPolynomial::one(),
        1 => matrix[0][0].clone(),
        _ => {
            let mut det = SymPolynomial::zero();
            for r in 0..n {
                if matrix[r][0].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<SymPolynomial>> = matrix
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != r)
                    .map(|(_, row)| row[1..].to_vec())
                    .collect();
                let cofactor = &matrix[r][0] * &determinant(&minor);
                if r % 2 == 0 {
                    det = &det + &cofactor;
                } else {
                    det = &det - &cofactor;
                }
            }
            det
        }
    }
}

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        match self.chars.next() {
            Some(got) if got == c => Ok(()),
            Some(got) => Err(Error::parse(format!("expected '{c}', found '{got}'"))),
            None => Err(Error::parse(format!("expected '{c}', found end of input"))),
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, Error> {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            Err(Error::parse("expected an integer"))
        } else {
            digits
                .parse::<BigInt>()
                .map_err(|e| Error::parse(format!("bad integer '{digits}': {e}")))
        }
    }

    fn parse_usize(&mut self) -> Result<usize, Error> {
        let n = self.parse_integer()?;
        use num::ToPrimitive;
        n.to_usize()
            .ok_or_else(|| Error::parse(format!("index {n} out of range")))
    }

    /// One factor: either a rational number or a variable with an optional
    /// positive power.  Returns its contribution as (monomial, coefficient).
    fn parse_factor(&mut self) -> Result<(Monomial, Rational), Error> {
        self.skip_ws();
        match self.chars.peek() {
            Some('x') => {
                self.chars.next();
                self.expect('(')?;
                self.skip_ws();
                let row = self.parse_usize()?;
                self.skip_ws();
                self.expect(',')?;
                self.skip_ws();
                let col = self.parse_usize()?;
                self.skip_ws();
                self.expect(')')?;
                if !(col >= 1 && row > col) {
                    return Err(Error::parse(format!(
                        "x({row},{col}) is not below the diagonal"
                    )));
                }
                let exponent = if matches!(self.chars.peek(), Some('^')) {
                    self.chars.next();
                    self.skip_ws();
                    let e = self.parse_usize()?;
                    if e == 0 {
                        return Err(Error::parse("exponent must be positive"));
                    }
                    e
                } else {
                    1
                };
                let mut mono = Monomial::one();
                for _ in 0..exponent {
                    mono = mono.mul(&Monomial::var(row, col));
                }
                Ok((mono, Rational::one()))
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.parse_integer()?;
                let denom = if matches!(self.chars.peek(), Some('/')) {
                    self.chars.next();
                    let d = self.parse_integer()?;
                    if d.is_zero() {
                        return Err(Error::parse("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok((Monomial::one(), BigRational::new(numer, denom)))
            }
            Some(c) => Err(Error::parse(format!("unexpected character '{c}'"))),
            None => Err(Error::parse("unexpected end of input")),
        }
    }

    fn parse_term(&mut self) -> Result<(Monomial, Rational), Error> {
        let (mut mono, mut coeff) = self.parse_factor()?;
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some('*')) {
                self.chars.next();
                let (m, c) = self.parse_factor()?;
                mono = mono.mul(&m);
                coeff *= c;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn parse_polynomial(&mut self) -> Result<SymPolynomial, Error> {
        let mut out = SymPolynomial::zero();
        self.skip_ws();
        let mut sign = match self.chars.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            Some('+') => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            self.skip_ws();
            let (mono, coeff) = self.parse_term()?;
            out.add_term(mono, coeff * BigRational::from_integer(BigInt::from(sign)));
            self.skip_ws();
            match self.chars.next() {
                None => return Ok(out),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(c) => return Err(Error::parse(format!("unexpected character '{c}'"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn x(row: usize, col: usize) -> SymPolynomial {
        SymPolynomial::var(row, col)
    }

    #[test]
    fn display_follows_the_canonical_grammar() {
        assert_eq!(SymPolynomial::zero().to_string(), "0");
        assert_eq!(SymPolynomial::constant(rat(-3)).to_string(), "-3");
        assert_eq!(
            SymPolynomial::constant(Rational::new(1.into(), 2.into())).to_string(),
            "1/2"
        );
        let p = &(&x(4, 2) * &x(5, 3)) - &(&x(4, 3) * &x(5, 2));
        assert_eq!(p.to_string(), "x(4,2)*x(5,3) - x(4,3)*x(5,2)");
        let sq = &(&x(2, 1) + &SymPolynomial::one()) * &(&x(2, 1) + &SymPolynomial::one());
        assert_eq!(sq.to_string(), "1 + 2*x(2,1) + x(2,1)^2");
        assert_eq!((-&x(3, 1)).to_string(), "-x(3,1)");
        assert_eq!(
            (&x(3, 2).scale(&Rational::new(1.into(), 2.into())) - &x(2, 1)).to_string(),
            "-x(2,1) + 1/2*x(3,2)"
        );
    }

    #[test]
    fn parse_inverts_display() {
        let samples = [
            "0",
            "x(2,1)",
            "-x(2,1)",
            "x(4,2)*x(5,3) - x(4,3)*x(5,2)",
            "1 + 2*x(2,1) + x(2,1)^2",
            "-5/3 - 7*x(9,8) + x(3,1)*x(4,2)^2",
        ];
        for text in samples {
            let p = SymPolynomial::parse(text).unwrap();
            assert_eq!(p.to_string(), text);
            assert_eq!(SymPolynomial::parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parse_tolerates_whitespace_and_reordering() {
        let p = SymPolynomial::parse("x(5,3) * x(4,2)  -  x(5,2)*x(4,3)").unwrap();
        assert_eq!(p.to_string(), "x(4,2)*x(5,3) - x(4,3)*x(5,2)");
        let q = SymPolynomial::parse("+x(2,1)").unwrap();
        assert_eq!(q, x(2, 1));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for text in [
            "",
            "x(1,2)",
            "x(2,2)",
            "x(2,0)",
            "x(2,1)*",
            "x(2,1)^0",
            "1/0",
            "x(2,1) x(3,2)",
            "y(2,1)",
            "2..5",
        ] {
            assert!(
                SymPolynomial::parse(text).is_err(),
                "'{text}' should not parse"
            );
        }
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        let p = &x(3, 1) + &x(2, 1);
        let q = &x(3, 1) - &x(2, 1);
        assert_eq!(
            (&p * &q).to_string(),
            "-x(2,1)^2 + x(3,1)^2"
        );
        assert!((&p - &p).is_zero());
        assert_eq!((&p + &(-&p)), SymPolynomial::zero());
    }

    #[test]
    fn normalized_clears_denominators_and_fixes_sign() {
        let p = &x(3, 2).scale(&Rational::new((-2).into(), 3.into()))
            + &x(2, 1).scale(&Rational::new(4.into(), 9.into()));
        assert_eq!(p.normalized().to_string(), "2*x(2,1) - 3*x(3,2)");
        let q = -&(&x(4, 2) * &x(5, 3));
        assert_eq!(q.normalized().to_string(), "x(4,2)*x(5,3)");
        assert_eq!(SymPolynomial::zero().normalized(), SymPolynomial::zero());
    }

    #[test]
    fn determinant_of_small_matrices() {
        let m = vec![
            vec![x(4, 2), x(4, 3)],
            vec![x(5, 2), x(5, 3)],
        ];
        assert_eq!(
            determinant(&m).to_string(),
            "x(4,2)*x(5,3) - x(4,3)*x(5,2)"
        );
        let id3: Vec<Vec<SymPolynomial>> = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| {
                        if r == c {
                            SymPolynomial::one()
                        } else {
                            SymPolynomial::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(determinant(&id3), SymPolynomial::one());
        assert_eq!(determinant(&[]), SymPolynomial::one());
    }

    #[test]
    fn evaluate_transposes_the_point() {
        // p = x(3,1) reads entry (1,3) of the upper-triangular point.
        let mut u = RationalMatrix::zero(3);
        u.set_entry(1, 3, rat(7));
        u.set_entry(1, 2, rat(2));
        u.set_entry(2, 3, rat(5));
        assert_eq!(x(3, 1).evaluate(&u), rat(7));
        let p = &(&x(2, 1) * &x(3, 2)) + &x(3, 1);
        assert_eq!(p.evaluate(&u), rat(2 * 5 + 7));
    }

    #[test]
    fn serde_uses_the_canonical_string_form() {
        let p = &(&x(4, 2) * &x(5, 3)) - &(&x(4, 3) * &x(5, 2));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "\"x(4,2)*x(5,3) - x(4,3)*x(5,2)\"");
        let back: SymPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn parse_round_trips_arbitrary_polys(
            terms in proptest::collection::vec(
                (
                    proptest::collection::vec((2usize..6, 1usize..5), 0..4),
                    -30i64..30,
                    1i64..5,
                ),
                0..6,
            )
        ) {
            let mut p = SymPolynomial::zero();
            for (vars, num, den) in terms {
                let mut mono = Monomial::one();
                for (row, col) in vars {
                    if row > col {
                        mono = mono.mul(&Monomial::var(row, col));
                    }
                }
                p.add_term(mono, Rational::new(num.into(), den.into()));
            }
            let text = p.to_string();
            let back = SymPolynomial::parse(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
