//! Exact linear solving by fraction-free (Bareiss) elimination.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::poly::Rat;

/// Solve an augmented system `[A | b]` with `unknowns` columns in `A` for a
/// unique exact solution.  Rows may outnumber unknowns; the extra rows must
/// be consistent.  Pivoting is deterministic: the first row with a non-zero
/// entry in the current column.
pub(crate) fn solve_unique(aug: Vec<Vec<Rat>>, unknowns: usize) -> Result<Vec<Rat>> {
    let rows = aug.len();
    let cols = unknowns + 1;
    if rows < unknowns {
        return Err(Error::internal(format!(
            "system has {rows} equations for {unknowns} unknowns"
        )));
    }
    // clear denominators row by row
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for row in &aug {
        assert_eq!(row.len(), cols, "augmented row length mismatch");
        let mut lcm = BigInt::one();
        for v in row {
            lcm = lcm.lcm(v.denom());
        }
        m.push(
            row.iter()
                .map(|v| {
                    let scaled = v * Rat::from_integer(lcm.clone());
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer()
                })
                .collect(),
        );
    }

    let mut prev = BigInt::one();
    for col in 0..unknowns {
        let pivot_row = (col..rows)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::internal(format!("singular system at column {col}")))?;
        m.swap(col, pivot_row);
        for r in col + 1..rows {
            for c in col + 1..cols {
                let num = &m[col][col] * &m[r][c] - &m[r][col] * &m[col][c];
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return Err(Error::internal("fraction-free division not exact"));
                }
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[col][col].clone();
    }

    // surplus rows must have been eliminated to zero, including the rhs
    for row in m.iter().take(rows).skip(unknowns) {
        if row.iter().any(|v| !v.is_zero()) {
            return Err(Error::internal("inconsistent linear system"));
        }
    }

    let mut x = vec![Rat::zero(); unknowns];
    for i in (0..unknowns).rev() {
        let mut acc = Rat::from_integer(m[i][unknowns].clone());
        for j in i + 1..unknowns {
            acc -= Rat::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rat::from_integer(m[i][i].clone());
    }
    Ok(x)
}
