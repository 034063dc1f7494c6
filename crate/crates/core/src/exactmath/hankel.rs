use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::catalan::catalan;
use super::poly::{PolyT, TExp};
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Solves `a x = b` exactly by Gaussian elimination over the rationals.
pub fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("linear system must be square".into()));
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &f * &b[col];
            b[r] -= delta;
        }
    }
    Ok((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Recovers `q`, supported on degrees `alpha..=d`, from the pairings
/// `values[k] = <t^k q, sum C_{n-2} t^n>` for `k = 0..=d-alpha`.
pub fn hankel_recover(values: &[BigInt], alpha: u32, d: u32) -> Result<PolyT> {
    if alpha < 2 || d < alpha {
        return Err(Error::InvalidArgument(format!(
            "degree range {alpha}..={d} must satisfy 2 <= alpha <= d"
        )));
    }
    let size = (d - alpha + 1) as usize;
    if values.len() != size {
        return Err(Error::InvalidArgument(format!(
            "expected {size} values for degrees {alpha}..={d}, got {}",
            values.len()
        )));
    }
    // row k, column j: coefficient of gamma_{alpha+j} in values[k] is C_{alpha+j+k-2}
    let base = (alpha - 2) as usize;
    let matrix: Vec<Vec<Rational>> = (0..size)
        .map(|k| (0..size).map(|j| Rational::from_integer(catalan(base + j + k))).collect())
        .collect();
    let rhs = values.iter().cloned().map(Rational::from_integer).collect();
    let solution = solve_rational(matrix, rhs)?;
    let mut q = PolyT::zero();
    for (j, x) in solution.into_iter().enumerate() {
        if !x.denom().is_one() {
            return Err(Error::NonIntegralSolution);
        }
        q.add_term(TExp(alpha + j as u32), x.to_integer());
    }
    Ok(q)
}
