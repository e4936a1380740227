//! Independent cross-checks via exact linear algebra and random sampling.
//!
//! The closed-form results elsewhere in the crate (the orbit-dimension
//! formula, the closure order, the ideal generators) are validated against
//! computations that share none of their machinery: orbit dimensions against
//! the codimension of a centralizer computed by exact Gaussian elimination,
//! and variety membership against randomly sampled orbit points.

use crate::error::Error;
use crate::involution::{Involution, NilpotentMatrix};
use crate::rank::RankMatrix;
use crate::rational::{rank_of, rat, Rational, RationalMatrix};
use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Dimension of the space of upper-triangular matrices (diagonal included)
/// commuting with `point`: the number of free parameters in the exact
/// solution of `X·N = N·X` over the `n(n+1)/2` upper-triangular unknowns.
pub fn centralizer_dimension(point: &RationalMatrix) -> usize {
    let n = point.n();
    let mut index = vec![vec![usize::MAX; n + 1]; n + 1];
    let mut unknowns = 0;
    for i in 1..=n {
        for j in i..=n {
            index[i][j] = unknowns;
            unknowns += 1;
        }
    }

    // One equation per entry (a, b) of X·N − N·X.
    let mut equations = Vec::with_capacity(n * n);
    for a in 1..=n {
        for b in 1..=n {
            let mut row = vec![Rational::zero(); unknowns];
            for c in 1..=n {
                // + X_{a,c} · N_{c,b}
                if a <= c && !point.entry(c, b).is_zero() {
                    row[index[a][c]] += point.entry(c, b);
                }
                // − N_{a,c} · X_{c,b}
                if c <= b && !point.entry(a, c).is_zero() {
                    row[index[c][b]] -= point.entry(a, c);
                }
            }
            if row.iter().any(|v| !v.is_zero()) {
                equations.push(row);
            }
        }
    }
    unknowns - rank_of(equations)
}

/// Orbit dimension via the centralizer: `dim B = dim b − dim c_b(N_sigma)`,
/// with `b` the upper-triangular matrices.  Entirely independent of the
/// closed formula in [`Involution::orbit_dimension`].
pub fn orbit_dimension_oracle(sigma: &Involution) -> usize {
    let n = sigma.n();
    n * (n + 1) / 2 - centralizer_dimension(&sigma.matrix().to_rational())
}

/// A random point of the orbit of `sigma`: `A · N_sigma · A^{-1}` for a
/// seed-deterministic invertible upper-triangular `A` with diagonal entries
/// in `{1, 2, 3}` and entries above the diagonal in `{-3, .., 3}`.
pub fn random_orbit_point(sigma: &Involution, seed: u64) -> NilpotentMatrix {
    let n = sigma.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = RationalMatrix::zero(n);
    for i in 1..=n {
        a.set_entry(i, i, rat(rng.gen_range(1..=3)));
        for j in (i + 1)..=n {
            a.set_entry(i, j, rat(rng.gen_range(-3..=3)));
        }
    }
    let inverse = a.inverse().expect("triangular with nonzero diagonal");
    let conjugate = a
        .mul(&sigma.matrix().to_rational())
        .and_then(|m| m.mul(&inverse))
        .expect("sizes agree");
    NilpotentMatrix::from_rational(&conjugate)
        .expect("conjugation by upper-triangular preserves strict upper-triangularity")
}

/// Whether `u` lies in the closure of the orbit of `sigma`: `u` must square
/// to zero and its window rank matrix must be entrywise at most `R_sigma`.
pub fn closure_membership(u: &NilpotentMatrix, sigma: &Involution) -> Result<bool, Error> {
    if u.n() != sigma.n() {
        return Err(Error::SizeMismatch(format!(
            "matrix of size {} against involution on {} letters",
            u.n(),
            sigma.n()
        )));
    }
    if !u.is_square_zero() {
        return Ok(false);
    }
    RankMatrix::of_matrix(u).leq(&RankMatrix::of_involution(sigma))
}
