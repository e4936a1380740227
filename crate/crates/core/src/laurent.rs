//! One-parameter degenerations realizing the cover moves.
//!
//! Every cover `sigma -> sigma'` in the closure order is witnessed by an
//! explicit curve of conjugates: a product `A_k` of elementary matrices
//! whose entries are Laurent monomials in a formal parameter `k` satisfies
//!
//! ```text
//! lim_{k -> infinity}  A_k · N_sigma · A_k^{-1}  =  N_sigma'
//! ```
//!
//! The limit is taken algebraically, with no numerics: conjugation happens
//! over the ring of Laurent polynomials in `k`, the result is required to
//! contain no positive power of `k`, and dropping the strictly negative
//! powers (which vanish as `k` grows) leaves the limit matrix.
//! [`degeneration_family`] produces the factor list for each of the five
//! cover kinds and [`conjugate_limit`] carries out the conjugation.

use crate::error::Error;
use crate::involution::NilpotentMatrix;
use crate::poset::{CoverKind, CoverMove};
use crate::rational::{rat, Rational, RationalMatrix};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial in one formal parameter `k` with exact rational
/// coefficients, stored sparsely by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn constant(value: Rational) -> Self {
        Self::monomial(value, 0)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The single term `coeff * k^exp`.
    pub fn monomial(coeff: Rational, exp: i64) -> Self {
        let mut p = LaurentPolynomial::default();
        p.add_term(coeff, exp);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `k^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, coeff: Rational, exp: i64) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }
}

impl std::ops::Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&exp, coeff) in &rhs.terms {
            out.add_term(coeff.clone(), exp);
        }
        out
    }
}

impl std::ops::Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&exp, coeff)) in self.terms.iter().enumerate() {
            let magnitude = coeff.abs();
            if idx == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let k_part = match exp {
                0 => None,
                1 => Some("k".to_string()),
                e => Some(format!("k^{e}")),
            };
            match k_part {
                None => write!(f, "{magnitude}")?,
                Some(k) if magnitude.is_one() => write!(f, "{k}")?,
                Some(k) => write!(f, "{magnitude}*{k}")?,
            }
        }
        Ok(())
    }
}

/// Dense square matrix of Laurent polynomials, 1-based accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    rows: Vec<Vec<LaurentPolynomial>>,
}

impl LaurentMatrix {
    pub fn zero(n: usize) -> Self {
        LaurentMatrix {
            n,
            rows: vec![vec![LaurentPolynomial::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 1..=n {
            m.set_entry(i, i, LaurentPolynomial::one());
        }
        m
    }

    pub fn from_rational(m: &RationalMatrix) -> Self {
        let n = m.n();
        let mut out = Self::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                if !m.entry(i, j).is_zero() {
                    out.set_entry(i, j, LaurentPolynomial::constant(m.entry(i, j).clone()));
                }
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.rows[i - 1][j - 1]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: LaurentPolynomial) {
        self.rows[i - 1][j - 1] = value;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {} x {} by {} x {}",
                self.n, self.n, other.n, other.n
            )));
        }
        let n = self.n;
        let mut out = LaurentMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other.rows[k][j].is_zero() {
                        continue;
                    }
                    let prod = &self.rows[i][k] * &other.rows[k][j];
                    out.rows[i][j] = &out.rows[i][j] + &prod;
                }
            }
        }
        Ok(out)
    }
}

/// An elementary matrix with a Laurent-monomial parameter: either a diagonal
/// unit `E_i(a)` (identity with entry `(i, i)` replaced by `a`) or a
/// transvection `E_{i+j}(a)` (identity plus `a` at position `(i, j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryFactor {
    Diag {
        index: usize,
        coeff: Rational,
        exp: i64,
    },
    Unit {
        row: usize,
        col: usize,
        coeff: Rational,
        exp: i64,
    },
}

impl ElementaryFactor {
    pub fn diag(index: usize, coeff: Rational, exp: i64) -> Result<Self, Error> {
        if coeff.is_zero() {
            return Err(Error::InvalidMatrix(
                "diagonal elementary factor needs an invertible coefficient".into(),
            ));
        }
        Ok(ElementaryFactor::Diag { index, coeff, exp })
    }

    pub fn unit(row: usize, col: usize, coeff: Rational, exp: i64) -> Result<Self, Error> {
        if row == col {
            return Err(Error::InvalidMatrix(
                "transvection factor needs distinct row and column".into(),
            ));
        }
        Ok(ElementaryFactor::Unit {
            row,
            col,
            coeff,
            exp,
        })
    }

    /// The inverse is elementary again: invert the monomial on the diagonal,
    /// negate it off the diagonal.
    pub fn inverse(&self) -> ElementaryFactor {
        match self {
            ElementaryFactor::Diag { index, coeff, exp } => ElementaryFactor::Diag {
                index: *index,
                coeff: coeff.recip(),
                exp: -exp,
            },
            ElementaryFactor::Unit {
                row,
                col,
                coeff,
                exp,
            } => ElementaryFactor::Unit {
                row: *row,
                col: *col,
                coeff: -coeff,
                exp: *exp,
            },
        }
    }

    pub fn to_matrix(&self, n: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::identity(n);
        match self {
            ElementaryFactor::Diag { index, coeff, exp } => {
                assert!(*index >= 1 && *index <= n, "diagonal index out of range");
                m.set_entry(*index, *index, LaurentPolynomial::monomial(coeff.clone(), *exp));
            }
            ElementaryFactor::Unit {
                row,
                col,
                coeff,
                exp,
            } => {
                assert!(*row >= 1 && *row <= n && *col >= 1 && *col <= n);
                m.set_entry(*row, *col, LaurentPolynomial::monomial(coeff.clone(), *exp));
            }
        }
        m
    }
}

/// The factor list of the degeneration `A_k` witnessing `mv`, which must be
/// a move out of `sigma`.  With `(i_x, j_x)` the 1-based cycles of the
/// source, the five families are
///
/// * drop `s`:            `E_{i_s}(1/k)`
/// * move-up `s, m`:      `E_{i_s}(1/k) · E_{m + i_s}(1)`
/// * move-right `s, m`:   `E_{i_s}(1/k) · E_{j_s + m}(-k)`
/// * cross `r, s`:        `E_{i_r}(-1/k) · E_{i_s}(1/k) · E_{j_r + i_s}(1)`
/// * swap `s, t`:         `E_{j_t}(k) · E_{j_s}(-1/k) · E_{i_s + i_t}(k) · E_{j_t + j_s}(1/k)`
pub fn degeneration_family(
    sigma: &crate::involution::Involution,
    mv: &CoverMove,
) -> Result<Vec<ElementaryFactor>, Error> {
    if mv.source != *sigma {
        return Err(Error::MoveMismatch(format!(
            "move recorded for source {}, applied to {}",
            mv.source, sigma
        )));
    }
    let cycle = |s: usize| -> (usize, usize) { sigma.cycles()[s - 1] };
    let factors = match mv.kind {
        CoverKind::Drop { s } => {
            let (i_s, _) = cycle(s);
            vec![ElementaryFactor::diag(i_s, rat(1), -1)?]
        }
        CoverKind::MoveUp { s, m } => {
            let (i_s, _) = cycle(s);
            vec![
                ElementaryFactor::diag(i_s, rat(1), -1)?,
                ElementaryFactor::unit(m, i_s, rat(1), 0)?,
            ]
        }
        CoverKind::MoveRight { s, m } => {
            let (i_s, j_s) = cycle(s);
            vec![
                ElementaryFactor::diag(i_s, rat(1), -1)?,
                ElementaryFactor::unit(j_s, m, rat(-1), 1)?,
            ]
        }
        CoverKind::Cross { r, s } => {
            let (i_r, j_r) = cycle(r);
            let (i_s, _) = cycle(s);
            vec![
                ElementaryFactor::diag(i_r, rat(-1), -1)?,
                ElementaryFactor::diag(i_s, rat(1), -1)?,
                ElementaryFactor::unit(j_r, i_s, rat(1), 0)?,
            ]
        }
        CoverKind::Swap { s, t } => {
            let (i_s, j_s) = cycle(s);
            let (i_t, j_t) = cycle(t);
            vec![
                ElementaryFactor::diag(j_t, rat(1), 1)?,
                ElementaryFactor::diag(j_s, rat(-1), -1)?,
                ElementaryFactor::unit(i_s, i_t, rat(1), 1)?,
                ElementaryFactor::unit(j_t, j_s, rat(1), -1)?,
            ]
        }
    };
    Ok(factors)
}

/// Conjugates `point` by the product of `factors` (left to right) over the
/// Laurent ring and takes the limit `k -> infinity`: every entry must be
/// free of positive powers of `k`, and the constant coefficients form the
/// result.  A surviving positive power is reported with its entry.
pub fn conjugate_limit(
    factors: &[ElementaryFactor],
    point: &RationalMatrix,
) -> Result<RationalMatrix, Error> {
    let n = point.n();
    let mut a = LaurentMatrix::identity(n);
    let mut a_inv = LaurentMatrix::identity(n);
    for factor in factors {
        a = a.mul(&factor.to_matrix(n))?;
        a_inv = factor.inverse().to_matrix(n).mul(&a_inv)?;
    }
    let conjugate = a.mul(&LaurentMatrix::from_rational(point))?.mul(&a_inv)?;

    let mut limit = RationalMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let entry = conjugate.entry(i, j);
            if entry.max_degree().unwrap_or(0) > 0 {
                return Err(Error::PositivePower { row: i, col: j });
            }
            limit.set_entry(i, j, entry.coeff(0));
        }
    }
    Ok(limit)
}

/// Runs the degeneration attached to a cover move and returns the limit as
/// a square-zero matrix; by the cover construction this is the target's
/// representative.
pub fn degeneration_limit(mv: &CoverMove) -> Result<NilpotentMatrix, Error> {
    let factors = degeneration_family(&mv.source, mv)?;
    let limit = conjugate_limit(&factors, &mv.source.matrix().to_rational())?;
    NilpotentMatrix::from_rational(&limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::Involution;
    use crate::poset::cover_moves;
    use crate::rational::rat_frac;

    fn inv(n: usize, cycles: &[(usize, usize)]) -> Involution {
        Involution::new(n, cycles.to_vec()).unwrap()
    }

    #[test]
    fn laurent_arithmetic_and_display() {
        let p = LaurentPolynomial::monomial(rat(1), -1);
        let q = LaurentPolynomial::monomial(rat(-2), 1);
        let sum = &(&p + &q) + &LaurentPolynomial::constant(rat_frac(1, 2));
        assert_eq!(sum.to_string(), "k^-1 + 1/2 - 2*k");
        assert_eq!(sum.coeff(0), rat_frac(1, 2));
        assert_eq!(sum.min_degree(), Some(-1));
        assert_eq!(sum.max_degree(), Some(1));

        let prod = &p * &q;
        assert_eq!(prod.to_string(), "-2");
        assert!((&p + &LaurentPolynomial::monomial(rat(-1), -1)).is_zero());
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn factors_invert_to_the_identity() {
        let samples = [
            ElementaryFactor::diag(2, rat(-1), -1).unwrap(),
            ElementaryFactor::diag(1, rat_frac(3, 2), 4).unwrap(),
            ElementaryFactor::unit(1, 3, rat(5), 2).unwrap(),
            ElementaryFactor::unit(3, 2, rat_frac(-1, 7), -1).unwrap(),
        ];
        for factor in &samples {
            let product = factor
                .to_matrix(3)
                .mul(&factor.inverse().to_matrix(3))
                .unwrap();
            assert_eq!(product, LaurentMatrix::identity(3), "factor {factor:?}");
        }
        assert!(ElementaryFactor::diag(1, rat(0), 0).is_err());
        assert!(ElementaryFactor::unit(2, 2, rat(1), 0).is_err());
    }

    fn family_for(sigma: &Involution, target: &Involution) -> Vec<ElementaryFactor> {
        let mv = cover_moves(sigma)
            .into_iter()
            .find(|m| m.target == *target)
            .expect("target is a cover");
        degeneration_family(sigma, &mv).unwrap()
    }

    #[test]
    fn families_of_the_worked_examples() {
        // Dropping (1,4) from (1,4)(2,3): a single diagonal scaling.
        let sigma = inv(4, &[(1, 4), (2, 3)]);
        let family = family_for(&sigma, &inv(4, &[(2, 3)]));
        assert_eq!(family, vec![ElementaryFactor::diag(1, rat(1), -1).unwrap()]);

        // Moving (2,3) up to (1,3) in S3.
        let sigma = inv(3, &[(2, 3)]);
        let family = family_for(&sigma, &inv(3, &[(1, 3)]));
        assert_eq!(
            family,
            vec![
                ElementaryFactor::diag(2, rat(1), -1).unwrap(),
                ElementaryFactor::unit(1, 2, rat(1), 0).unwrap(),
            ]
        );

        // Crossing (1,2)(3,4) into (1,3)(2,4).
        let sigma = inv(4, &[(1, 2), (3, 4)]);
        let family = family_for(&sigma, &inv(4, &[(1, 3), (2, 4)]));
        assert_eq!(
            family,
            vec![
                ElementaryFactor::diag(1, rat(-1), -1).unwrap(),
                ElementaryFactor::diag(3, rat(1), -1).unwrap(),
                ElementaryFactor::unit(2, 3, rat(1), 0).unwrap(),
            ]
        );

        // Swapping inside (1,4)(2,3) to reach (1,3)(2,4).
        let sigma = inv(4, &[(1, 4), (2, 3)]);
        let family = family_for(&sigma, &inv(4, &[(1, 3), (2, 4)]));
        assert_eq!(
            family,
            vec![
                ElementaryFactor::diag(3, rat(1), 1).unwrap(),
                ElementaryFactor::diag(4, rat(-1), -1).unwrap(),
                ElementaryFactor::unit(1, 2, rat(1), 1).unwrap(),
                ElementaryFactor::unit(3, 4, rat(1), -1).unwrap(),
            ]
        );
    }

    #[test]
    fn empty_factor_list_is_the_identity_conjugation() {
        let n = inv(4, &[(1, 3), (2, 4)]).matrix().to_rational();
        assert_eq!(conjugate_limit(&[], &n).unwrap(), n);
    }

    #[test]
    fn dropping_the_minimal_orbit_reaches_zero() {
        for n in 2..=5 {
            let sigma = inv(n, &[(1, n)]);
            let factors = [ElementaryFactor::diag(1, rat(1), -1).unwrap()];
            let limit = conjugate_limit(&factors, &sigma.matrix().to_rational()).unwrap();
            assert!(limit.is_zero());
        }
    }

    #[test]
    fn limits_reproduce_every_cover_target() {
        for n in 0..=5 {
            for sigma in Involution::enumerate(n) {
                for mv in cover_moves(&sigma) {
                    let limit = degeneration_limit(&mv).unwrap_or_else(|e| {
                        panic!("{} -> {} ({:?}): {e}", mv.source, mv.target, mv.kind)
                    });
                    assert_eq!(
                        limit,
                        mv.target.matrix(),
                        "{} -> {} via {:?}",
                        mv.source,
                        mv.target,
                        mv.kind
                    );
                }
            }
        }
    }

    #[test]
    fn surviving_positive_powers_are_reported() {
        let sigma = inv(4, &[(1, 4)]);
        let wrong = [ElementaryFactor::diag(1, rat(1), 1).unwrap()];
        let err = conjugate_limit(&wrong, &sigma.matrix().to_rational()).unwrap_err();
        assert_eq!(err, Error::PositivePower { row: 1, col: 4 });
    }

    #[test]
    fn mismatched_sources_are_rejected() {
        let sigma = inv(3, &[(2, 3)]);
        let mv = cover_moves(&sigma).into_iter().next().unwrap();
        let other = inv(3, &[(1, 3)]);
        assert!(matches!(
            degeneration_family(&other, &mv),
            Err(Error::MoveMismatch(_))
        ));
    }
}
