//! Weyl orbits of `A_{n-1}` as multiset permutations, their characters in
//! the eigenvalue variables, and permutation signatures.

use std::collections::BTreeMap;
use std::ops::Mul;

use num::One;

use crate::error::{Error, Result};
use crate::poly::{ExactPoly, Rat};
use crate::weights::Partition;

/// All distinct permutations of the parts of `q` padded to `n` entries,
/// in descending lexicographic order (the dominant arrangement first).
pub fn weyl_orbit(q: &Partition, n: usize) -> Result<Vec<Vec<u32>>> {
    let padded = q.padded(n)?;
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in padded.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn rec(
        counts: &mut BTreeMap<u32, usize>,
        prefix: &mut Vec<u32>,
        n: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let values: Vec<u32> = counts
            .iter()
            .filter(|&(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .rev()
            .collect();
        for v in values {
            *counts.get_mut(&v).unwrap() -= 1;
            prefix.push(v);
            rec(counts, prefix, n, out);
            prefix.pop();
            *counts.get_mut(&v).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut prefix, n, &mut out);
    Ok(out)
}

/// Canonical form modulo `u_1 ... u_n = 1`: subtract the minimal exponent of
/// each monomial from all its exponents.  Monomials whose exponents differ by
/// a multiple of the all-ones vector collapse, so equality of reduced forms
/// is equality in the quotient ring.
pub fn reduce_u_canonical(p: &ExactPoly) -> ExactPoly {
    let nv = p.num_vars();
    let mut out = ExactPoly::zero(nv);
    for (exps, c) in p.terms() {
        let min = exps.iter().copied().min().unwrap_or(0);
        let reduced: Vec<u32> = exps.iter().map(|&e| e - min).collect();
        out = &out + &ExactPoly::monomial(nv, reduced, c.clone());
    }
    out
}

/// Orbit character: the sum of `u^mu` over the orbit of `q`, reduced to
/// canonical form modulo the determinant-one constraint.
pub fn orbit_character_u(q: &Partition, n: usize) -> Result<ExactPoly> {
    let mut p = ExactPoly::zero(n);
    for elem in weyl_orbit(q, n)? {
        p = &p + &ExactPoly::monomial(n, elem, Rat::one());
    }
    Ok(reduce_u_canonical(&p))
}

/// Sign of a permutation, +1 or -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Signature {
    Plus,
    Minus,
}

impl Signature {
    pub fn as_int(self) -> i32 {
        match self {
            Signature::Plus => 1,
            Signature::Minus => -1,
        }
    }

    fn from_parity(odd: bool) -> Self {
        if odd {
            Signature::Minus
        } else {
            Signature::Plus
        }
    }
}

impl Mul for Signature {
    type Output = Signature;
    fn mul(self, rhs: Signature) -> Signature {
        Signature::from_parity(self != rhs)
    }
}

/// Signature of an arrangement of pairwise distinct values, normalized so
/// the descending (dominant) arrangement has signature +1.  Computed by
/// counting pairs out of descending order.
pub fn signature(perm: &[u32]) -> Result<Signature> {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] == perm[j] {
                return Err(Error::arg(
                    "signature undefined for repeated entries".to_string(),
                ));
            }
            if perm[i] < perm[j] {
                inversions += 1;
            }
        }
    }
    Ok(Signature::from_parity(inversions % 2 == 1))
}
