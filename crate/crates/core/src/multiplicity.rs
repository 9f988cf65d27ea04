//! Weight multiplicities from the character / Schur-function identity.
//!
//! The character of the irreducible representation with highest weight
//! `Lambda` is a sum of orbit characters with unknown non-negative integer
//! coefficients.  Writing every orbit character in the `x` indeterminates
//! (constraint applied) and equating with the determinant Schur function of
//! `Lambda` turns the unknowns into the solution of an exact linear system:
//! one equation per monomial, one unknown per orbit.

use std::collections::BTreeSet;

use num::bigint::{BigInt, BigUint, Sign};
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_unique;
use crate::poly::{grlex_cmp, ExactPoly, Rat};
use crate::symfunc::{class_to_power, power_to_x_in, schur_of_partition, Eliminator, SchurTable};
use crate::weights::{orbit_size, sub_dominant_set, DominantWeight, Partition};

/// Multiplicity of every orbit inside one irreducible representation,
/// keyed by canonical partitions in the standard table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    rank_n: usize,
    dominant: DominantWeight,
    rows: Vec<(Partition, BigUint)>,
}

impl MultiplicityTable {
    pub fn new(
        rank_n: usize,
        dominant: DominantWeight,
        rows: Vec<(Partition, BigUint)>,
    ) -> Result<Self> {
        let table = MultiplicityTable {
            rank_n,
            dominant,
            rows,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let sub = sub_dominant_set(self.rank_n, self.dominant.weight())?;
        if sub.len() != self.rows.len() {
            return Err(Error::internal("multiplicity table row count mismatch"));
        }
        for (member, (p, _)) in sub.members().iter().zip(&self.rows) {
            if member.partition() != p {
                return Err(Error::internal("multiplicity table row order mismatch"));
            }
        }
        match self.get(self.dominant.partition()) {
            Some(m) if m.is_one() => Ok(()),
            _ => Err(Error::internal("highest weight must have multiplicity one")),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn dominant(&self) -> &DominantWeight {
        &self.dominant
    }

    pub fn rows(&self) -> &[(Partition, BigUint)] {
        &self.rows
    }

    pub fn get(&self, p: &Partition) -> Option<&BigUint> {
        self.rows.iter().find(|(q, _)| q == p).map(|(_, m)| m)
    }
}

/// Reusable per-rank solver; holds the memoized Schur table and the
/// variable eliminator.  Shareable across threads.
pub struct Solver {
    rank_n: usize,
    schur: SchurTable,
    elim: Eliminator,
}

impl Solver {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Solver {
            rank_n: n,
            schur: SchurTable::degenerated(n)?,
            elim: Eliminator::new(n)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn schur_table(&self) -> &SchurTable {
        &self.schur
    }

    /// Class function of a weight-`M` partition (all `n` coordinates),
    /// expanded in `x_1..x_{n-1}` with the constraint applied.
    pub fn class_function_x(&self, lifted: &Partition) -> Result<ExactPoly> {
        let n = self.rank_n;
        let nonzero: Vec<u32> = lifted.parts().iter().copied().filter(|&p| p > 0).collect();
        if nonzero.is_empty() {
            return Ok(ExactPoly::one(n - 1));
        }
        let expr = class_to_power(&nonzero)?;
        // merged generators reach up to the full weight of the partition
        let width = (n - 1).max(nonzero.iter().map(|&p| p as usize).sum());
        let raw = power_to_x_in(&expr, width)?;
        self.elim.reduce(&raw)
    }

    /// All orbit multiplicities of the representation with highest weight
    /// `dominant`, by equating coefficients and solving exactly.
    pub fn solve(&self, dominant: &DominantWeight) -> Result<MultiplicityTable> {
        let n = self.rank_n;
        if dominant.rank() != n {
            return Err(Error::arg(format!(
                "dominant weight has rank {} but solver has rank {n}",
                dominant.rank()
            )));
        }
        let weight_m = dominant.weight();
        let sub = sub_dominant_set(n, weight_m)?;

        let mut columns = Vec::with_capacity(sub.len());
        for member in sub.members() {
            let deficit = weight_m - member.weight();
            debug_assert_eq!(deficit % n as u32, 0);
            let lifted = member.partition().padded(n)?.lifted(deficit / n as u32);
            columns.push(self.class_function_x(&lifted)?);
        }
        let rhs = schur_of_partition(&self.schur, dominant.partition())?;

        let mut monomials: BTreeSet<Vec<u32>> = BTreeSet::new();
        for col in &columns {
            monomials.extend(col.terms().map(|(e, _)| e.to_vec()));
        }
        monomials.extend(rhs.terms().map(|(e, _)| e.to_vec()));
        let mut monomials: Vec<Vec<u32>> = monomials.into_iter().collect();
        monomials.sort_by(|a, b| grlex_cmp(b, a));

        let mut aug = Vec::with_capacity(monomials.len());
        for mono in &monomials {
            let mut row: Vec<Rat> = columns.iter().map(|col| col.coeff(mono)).collect();
            row.push(rhs.coeff(mono));
            aug.push(row);
        }
        let solution = solve_unique(aug, columns.len())?;

        let mut rows = Vec::with_capacity(solution.len());
        for (member, value) in sub.members().iter().zip(solution) {
            if !value.is_integer() {
                return Err(Error::internal(format!(
                    "non-integral multiplicity {value} for {member}"
                )));
            }
            let int = value.to_integer();
            let m = match int.to_biguint() {
                Some(m) => m,
                None => {
                    return Err(Error::internal(format!(
                        "negative multiplicity {int} for {member}"
                    )))
                }
            };
            rows.push((member.partition().clone(), m));
        }
        MultiplicityTable::new(n, dominant.clone(), rows)
    }
}

/// One-shot variant of [`Solver::solve`].
pub fn solve_multiplicities(n: usize, dominant: &DominantWeight) -> Result<MultiplicityTable> {
    Solver::new(n)?.solve(dominant)
}

/// Multiplicity table joined with orbit sizes: the full orbit expansion of
/// the character.
pub fn character(
    n: usize,
    dominant: &DominantWeight,
) -> Result<Vec<(Partition, BigUint, BigUint)>> {
    character_rows(&solve_multiplicities(n, dominant)?)
}

/// As [`character`], from an already-solved table.
pub fn character_rows(table: &MultiplicityTable) -> Result<Vec<(Partition, BigUint, BigUint)>> {
    let n = table.rank();
    table
        .rows()
        .iter()
        .map(|(p, m)| Ok((p.clone(), m.clone(), orbit_size(p, n)?)))
        .collect()
}

/// Total dimension: multiplicities weighted by orbit sizes.
pub fn dimension(n: usize, dominant: &DominantWeight) -> Result<BigUint> {
    let rows = character(n, dominant)?;
    Ok(dimension_of_rows(&rows))
}

pub fn dimension_of_rows(rows: &[(Partition, BigUint, BigUint)]) -> BigUint {
    let mut total = BigInt::zero();
    for (_, m, size) in rows {
        total += BigInt::from_biguint(Sign::Plus, m * size);
    }
    total.to_biguint().expect("non-negative sum")
}
