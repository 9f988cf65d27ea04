//! Independent ground-truth routes for multiplicities, dimensions, and
//! characters: semistandard-tableau counting, the Freudenthal recursion,
//! hook-content dimensions, and the alternant objects of the Weyl character
//! formula.  Nothing here shares code with the linear-system route beyond
//! the polynomial substrate.

use std::collections::BTreeMap;

use num::bigint::{BigInt, BigUint};
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::orbits::{reduce_u_canonical, signature, weyl_orbit, Signature};
use crate::poly::{poly_det, ExactPoly, Rat};
use crate::weights::{dominates, sub_dominant_set, DominantWeight, Partition};

/// Number of semistandard Young tableaux of shape `lam` and content `mu`:
/// rows weakly increase, columns strictly increase, and value `i` appears
/// exactly `mu_i` times.  Exhaustive backtracking.
pub fn kostka_ssyt(lam: &Partition, mu: &Partition) -> Result<BigUint> {
    if lam.weight() != mu.weight() {
        return Err(Error::arg(format!(
            "shape {lam} and content {mu} have different weights"
        )));
    }
    let shape: Vec<usize> = lam
        .parts()
        .iter()
        .filter(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    let values = mu.len();
    let mut quota: Vec<u32> = mu.parts().to_vec();
    if shape.is_empty() {
        return Ok(BigUint::one());
    }
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();

    fn fill(
        shape: &[usize],
        grid: &mut Vec<Vec<u32>>,
        quota: &mut Vec<u32>,
        values: usize,
        r: usize,
        c: usize,
    ) -> u64 {
        if r == shape.len() {
            return 1;
        }
        let (next_r, next_c) = if c + 1 < shape[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let mut lo = 1u32;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut count = 0u64;
        for v in lo..=values as u32 {
            let idx = v as usize - 1;
            if quota[idx] == 0 {
                continue;
            }
            quota[idx] -= 1;
            grid[r][c] = v;
            count += fill(shape, grid, quota, values, next_r, next_c);
            quota[idx] += 1;
        }
        count
    }

    let count = fill(&shape, &mut grid, &mut quota, values, 0, 0);
    Ok(BigUint::from(count))
}

/// The `A_{n-1}` root data needed by the Freudenthal recursion, realized in
/// permutation coordinates with the trace-zero bilinear form.
pub struct RootSystemA {
    rank_n: usize,
}

impl RootSystemA {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg("rank parameter n must be at least 2"));
        }
        Ok(RootSystemA { rank_n: n })
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    /// `e_i - e_j` for `i < j`, as coordinate vectors.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank_n;
        let mut roots = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                roots.push(v);
            }
        }
        roots
    }

    /// Half-sum of positive roots, shifted to non-negative coordinates:
    /// `(n-1, n-2, ..., 1, 0)`.
    pub fn weyl_vector_parts(&self) -> Vec<i64> {
        (0..self.rank_n).rev().map(|i| i as i64).collect()
    }

    /// Bilinear form after projecting out the trace:
    /// `<v, w> = sum v_i w_i - (sum v_i)(sum w_i) / n`.
    pub fn inner(&self, v: &[i64], w: &[i64]) -> Rat {
        let dot: i64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
        let sv: i64 = v.iter().sum();
        let sw: i64 = w.iter().sum();
        Rat::from_integer(BigInt::from(dot))
            - Rat::new(BigInt::from(sv * sw), BigInt::from(self.rank_n as i64))
    }
}

/// Weight multiplicities by the Freudenthal recursion, descending from the
/// highest weight through the dominated dominant weights:
/// `(|L+rho|^2 - |l+rho|^2) m(l) = 2 sum_{a>0} sum_{k>=1} <l+ka, a> m(l+ka)`.
pub fn freudenthal(n: usize, dominant: &DominantWeight) -> Result<MultiplicityTableLike> {
    let roots = RootSystemA::new(n)?;
    let weight_m = dominant.weight();
    let sub = sub_dominant_set(n, weight_m)?;
    let top: Vec<i64> = dominant
        .partition()
        .parts()
        .iter()
        .map(|&p| p as i64)
        .collect();
    let rho = roots.weyl_vector_parts();
    let plus_rho = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_norm = roots.inner(&plus_rho(&top), &plus_rho(&top));

    // dominated candidates at the fixed weight level, highest norm first
    let mut candidates: Vec<(Partition, Vec<i64>)> = Vec::new();
    for member in sub.members() {
        let deficit = weight_m - member.weight();
        let lifted = member.partition().padded(n)?.lifted(deficit / n as u32);
        if dominates(dominant.partition(), &lifted) {
            let coords: Vec<i64> = lifted.parts().iter().map(|&p| p as i64).collect();
            candidates.push((member.partition().clone(), coords));
        }
    }
    candidates.sort_by(|(_, a), (_, b)| {
        let na = roots.inner(&plus_rho(a), &plus_rho(a));
        let nb = roots.inner(&plus_rho(b), &plus_rho(b));
        nb.cmp(&na).then_with(|| b.cmp(a))
    });

    let mut known: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
    let mut by_canonical: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for (canonical, coords) in &candidates {
        let value = if coords == &top {
            BigUint::one()
        } else {
            let mut numerator = Rat::zero();
            for alpha in roots.positive_roots() {
                let mut k = 1i64;
                loop {
                    let shifted: Vec<i64> =
                        coords.iter().zip(&alpha).map(|(c, a)| c + k * a).collect();
                    let mut key = shifted.clone();
                    key.sort_unstable_by(|x, y| y.cmp(x));
                    let Some(m) = known.get(&key) else { break };
                    let m_rat = Rat::from_integer(BigInt::from(m.clone()));
                    numerator += roots.inner(&shifted, &alpha) * m_rat;
                    k += 1;
                }
            }
            numerator *= Rat::from_integer(BigInt::from(2));
            let denom = &top_norm - &roots.inner(&plus_rho(coords), &plus_rho(coords));
            if denom.is_zero() {
                return Err(Error::internal("vanishing Freudenthal denominator"));
            }
            let value = numerator / denom;
            if !value.is_integer() || value.is_negative() {
                return Err(Error::internal(format!(
                    "Freudenthal produced non-admissible multiplicity {value}"
                )));
            }
            value.to_integer().to_biguint().expect("non-negative")
        };
        known.insert(coords.clone(), value.clone());
        by_canonical.insert(canonical.clone(), value);
    }

    let rows = sub
        .members()
        .iter()
        .map(|member| {
            let m = by_canonical
                .get(member.partition())
                .cloned()
                .unwrap_or_else(BigUint::zero);
            (member.partition().clone(), m)
        })
        .collect();
    Ok(MultiplicityTableLike {
        dominant: dominant.clone(),
        rows,
    })
}

/// Rows in the standard table order, as produced by an oracle.  Kept as a
/// plain struct so oracle output never routes through the solver's types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTableLike {
    pub dominant: DominantWeight,
    pub rows: Vec<(Partition, BigUint)>,
}

/// Dimension by the hook-content formula:
/// `prod_cells (n + col - row) / hook(cell)`.
pub fn hook_content_dim(n: usize, lam: &Partition) -> Result<BigUint> {
    let shape: Vec<usize> = lam
        .parts()
        .iter()
        .filter(|&&p| p > 0)
        .map(|&p| p as usize)
        .collect();
    if shape.len() > n {
        return Err(Error::arg(format!("shape {lam} has more than {n} rows")));
    }
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for (i, &row_len) in shape.iter().enumerate() {
        for j in 0..row_len {
            let content = j as i64 - i as i64;
            numer *= BigInt::from(n as i64 + content);
            let arm = row_len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&r| r > j).count();
            denom *= BigInt::from((arm + leg + 1) as i64);
        }
    }
    let (q, r) = num::Integer::div_rem(&numer, &denom);
    if !r.is_zero() {
        return Err(Error::internal("hook-content product not integral"));
    }
    q.to_biguint()
        .ok_or_else(|| Error::internal("negative hook-content dimension"))
}

/// Signed orbit sum of a strictly decreasing exponent tuple:
/// `sum_{mu in orbit} sign(mu) u^mu`.  Not reduced modulo the constraint.
pub fn alternant(n: usize, parts: &[u32]) -> Result<ExactPoly> {
    let q = Partition::new(parts.to_vec())?;
    let padded = q.padded(n)?;
    if padded.parts().windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::arg(format!(
            "alternant of {q} vanishes: repeated entries"
        )));
    }
    let mut out = ExactPoly::zero(n);
    for elem in weyl_orbit(&padded, n)? {
        let sign = match signature(&elem)? {
            Signature::Plus => Rat::one(),
            Signature::Minus => -Rat::one(),
        };
        out = &out + &ExactPoly::monomial(n, elem, sign);
    }
    Ok(out)
}

/// [`alternant`] extended to an arbitrary arrangement of pairwise distinct
/// entries: antisymmetric under transpositions, `+1` on the descending
/// arrangement.
pub fn alternant_of_tuple(n: usize, tuple: &[u32]) -> Result<ExactPoly> {
    let sign = signature(tuple)?;
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let sum = alternant(n, &sorted)?;
    Ok(match sign {
        Signature::Plus => sum,
        Signature::Minus => -&sum,
    })
}

/// `prod_{i<j} (u_i - u_j)`, expanded.
pub fn vandermonde(n: usize) -> ExactPoly {
    let mut out = ExactPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let factor = &ExactPoly::var(n, i) - &ExactPoly::var(n, j);
            out = &out * &factor;
        }
    }
    out
}

/// Determinant of the matrix with entry `(i, j) = u_i^{q_j + n - 1 - j}`
/// (0-based), expanded by cofactors.  An independent encoding of
/// [`alternant`] at the shifted tuple.
pub fn bialternant_det(n: usize, q: &Partition) -> Result<ExactPoly> {
    let padded = q.padded(n)?;
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let exp = padded.parts()[j] + (n - 1 - j) as u32;
            let mut exps = vec![0u32; n];
            exps[i] = exp;
            row.push(ExactPoly::monomial(n, exps, Rat::one()));
        }
        mat.push(row);
    }
    Ok(poly_det(&mat))
}

/// Character by the Weyl formula: the exact quotient of the shifted
/// alternant by the Vandermonde determinant, reduced to canonical form
/// modulo the determinant-one constraint.
///
/// The Vandermonde is divided out factor by factor; each step is an exact
/// division (the factors are coprime irreducibles), which keeps the
/// intermediate polynomials small.
pub fn weyl_character_ratio(n: usize, dominant: &DominantWeight) -> Result<ExactPoly> {
    let shifted: Vec<u32> = dominant
        .partition()
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (n - 1 - i) as u32)
        .collect();
    let mut quotient = alternant(n, &shifted)?;
    for i in 0..n {
        for j in i + 1..n {
            let factor = &ExactPoly::var(n, i) - &ExactPoly::var(n, j);
            quotient = quotient.exact_div(&factor)?;
        }
    }
    Ok(reduce_u_canonical(&quotient))
}
