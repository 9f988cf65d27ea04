//! The symmetric-function engine.
//!
//! Conventions, fixed once here and used everywhere else:
//!
//! * `x_k` stands for the k-th power sum divided by k, so the complete
//!   symmetric function of degree m is the coefficient of `z^m` in
//!   `exp(sum_k x_k z^k)` — the "generic" Schur function [`generic_schur`].
//! * Class functions are monomial symmetric functions of the eigenvalue
//!   variables `u_1..u_N`; [`class_to_power`] expands them into products of
//!   power sums, independent of N.
//! * On `A_{N-1}` the product `u_1 ... u_N` is 1.  [`Eliminator`] solves that
//!   constraint for `x_N, x_{N+1}, ...` in terms of `x_1..x_{N-1}`, and
//!   [`SchurTable`] carries the resulting "degenerated" Schur functions,
//!   which are the irreducible characters in `N-1` free indeterminates.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{poly_det, rat, ExactPoly, Rat};
use crate::weights::Partition;

/// Complete symmetric function of degree `m` as a polynomial in
/// `x_1..x_{num_vars}` (weighted-homogeneous: `x_i` counts with weight i).
///
/// Uses the recurrence `m S_m = sum_{i=1}^{m} i x_i S_{m-i}` with `S_0 = 1`.
pub fn generic_schur_in(m: usize, num_vars: usize) -> ExactPoly {
    assert!(
        num_vars >= m,
        "generic Schur of degree {m} needs {m} variables"
    );
    let mut table: Vec<ExactPoly> = vec![ExactPoly::one(num_vars)];
    for deg in 1..=m {
        let mut acc = ExactPoly::zero(num_vars);
        for i in 1..=deg {
            let xi = ExactPoly::var(num_vars, i - 1).scale(&rat(i as i64));
            acc = &acc + &(&xi * &table[deg - i]);
        }
        table.push(acc.scale(&(Rat::one() / rat(deg as i64))));
    }
    table.pop().expect("filled up to m")
}

/// Complete symmetric function of degree `m` in its natural `m` variables.
pub fn generic_schur(m: usize) -> ExactPoly {
    generic_schur_in(m, m)
}

/// A linear combination of products of power sums `K_a`, keyed by the
/// multiset of indices (stored sorted descending).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSumExpr {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PowerSumExpr {
    pub fn zero() -> Self {
        PowerSumExpr {
            terms: BTreeMap::new(),
        }
    }

    /// The empty product, i.e. the constant 1.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Rat::one());
        PowerSumExpr { terms }
    }

    /// A single generator `K_a`.
    pub fn generator(a: u32) -> Self {
        assert!(a > 0, "power-sum index must be positive");
        let mut terms = BTreeMap::new();
        terms.insert(vec![a], Rat::one());
        PowerSumExpr { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, key: &[u32]) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, mut key: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        key.sort_unstable_by(|a, b| b.cmp(a));
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PowerSumExpr) -> PowerSumExpr {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PowerSumExpr) -> PowerSumExpr {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> PowerSumExpr {
        if c.is_zero() {
            return Self::zero();
        }
        PowerSumExpr {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiply every term by the generator `K_a`.
    pub fn mul_generator(&self, a: u32) -> PowerSumExpr {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key.push(a);
            out.add_term(key, c.clone());
        }
        out
    }

    /// Evaluate with `K_a = u_1^a + ... + u_n^a` at a concrete point.
    pub fn eval_at_u(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (key, c) in &self.terms {
            let mut term = c.clone();
            for &a in key {
                let mut psum = Rat::zero();
                for u in point {
                    let mut p = Rat::one();
                    for _ in 0..a {
                        p *= u;
                    }
                    psum += p;
                }
                term *= psum;
            }
            acc += term;
        }
        acc
    }
}

/// Expand the class function of a partition (all parts positive) into
/// products of power-sum generators.
///
/// Works through the augmented form `T`: `T_(a) = K_a` and
/// `T_{lam ∪ (a)} = K_a T_lam - sum_j T_{lam with part j increased by a}`,
/// then divides by the product of multiplicity factorials, which normalizes
/// to one term per distinct monomial.
pub fn class_to_power(parts: &[u32]) -> Result<PowerSumExpr> {
    if parts.is_empty() {
        return Err(Error::arg("class function needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(Error::arg("class function parts must be positive"));
    }
    let mut key = parts.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));

    fn augmented(key: &[u32], memo: &mut HashMap<Vec<u32>, PowerSumExpr>) -> PowerSumExpr {
        if let Some(hit) = memo.get(key) {
            return hit.clone();
        }
        let result = if key.len() == 1 {
            PowerSumExpr::generator(key[0])
        } else {
            let a = *key.last().unwrap();
            let rest = &key[..key.len() - 1];
            let mut acc = augmented(rest, memo).mul_generator(a);
            for j in 0..rest.len() {
                let mut merged = rest.to_vec();
                merged[j] += a;
                merged.sort_unstable_by(|x, y| y.cmp(x));
                acc = acc.sub(&augmented(&merged, memo));
            }
            acc
        };
        memo.insert(key.to_vec(), result.clone());
        result
    }

    let mut memo = HashMap::new();
    let augmented_expr = augmented(&key, &mut memo);

    let mut mult_factorial = Rat::one();
    let mut run = 1u64;
    for i in 1..key.len() {
        if key[i] == key[i - 1] {
            run += 1;
            mult_factorial *= rat(run as i64);
        } else {
            run = 1;
        }
    }
    Ok(augmented_expr.scale(&(Rat::one() / mult_factorial)))
}

/// Translate a power-sum expression into the `x` indeterminates via
/// `K_a = a x_a`, in a ring wide enough for the largest index.
pub fn power_to_x_in(expr: &PowerSumExpr, num_vars: usize) -> Result<ExactPoly> {
    let mut out = ExactPoly::zero(num_vars);
    for (key, c) in expr.terms() {
        let mut exps = vec![0u32; num_vars];
        let mut coeff = c.clone();
        for &a in key {
            if a as usize > num_vars {
                return Err(Error::arg(format!(
                    "power sum K_{a} does not fit in {num_vars} variables"
                )));
            }
            exps[a as usize - 1] += 1;
            coeff *= rat(a as i64);
        }
        out = &out + &ExactPoly::monomial(num_vars, exps, coeff);
    }
    Ok(out)
}

/// As [`power_to_x_in`], sized to the largest power-sum index present.
pub fn power_to_x(expr: &PowerSumExpr) -> ExactPoly {
    let width = expr
        .terms()
        .flat_map(|(k, _)| k.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    power_to_x_in(expr, width).expect("width fits by construction")
}

/// Translate an `x`-polynomial into the eigenvalue variables `u_1..u_n`
/// via `x_k = (u_1^k + ... + u_n^k)/k`, fully expanded.
pub fn x_poly_to_u(p: &ExactPoly, n: usize) -> ExactPoly {
    let mut psums: Vec<ExactPoly> = Vec::new(); // psums[k-1] = p_k / k
    let max_k = p.max_var_used().map(|i| i + 1).unwrap_or(0);
    for k in 1..=max_k {
        let mut s = ExactPoly::zero(n);
        for i in 0..n {
            let mut exps = vec![0u32; n];
            exps[i] = k as u32;
            s = &s + &ExactPoly::monomial(n, exps, Rat::one());
        }
        psums.push(s.scale(&(Rat::one() / rat(k as i64))));
    }
    let mut out = ExactPoly::zero(n);
    for (exps, c) in p.terms() {
        let mut term = ExactPoly::constant(n, c.clone());
        for (k0, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = &term * &psums[k0].pow(e);
            }
        }
        out = &out + &term;
    }
    out
}

/// Solves the determinant-one constraint for the dependent indeterminates.
///
/// On `A_{n-1}`, `u_1 ... u_n = 1` forces the class function of `(1^n)` to be
/// the constant 1, which is linear in `x_n`.  For `Q >= 2` the class function
/// of `(Q, 1^{n-1})` collapses to the power sum `K_{Q-1}` (each monomial
/// carries the full product `u_1 ... u_n` once) and is linear in `x_{Q+n-1}`.
/// Solving in sequence expresses every `x_j` with `j >= n` as a polynomial
/// in `x_1..x_{n-1}`.
pub struct Eliminator {
    n: usize,
    exprs: Mutex<Vec<ExactPoly>>, // exprs[i] = x_{n+i} in n-1 variables
}

impl Eliminator {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg("rank parameter n must be at least 2"));
        }
        Ok(Eliminator {
            n,
            exprs: Mutex::new(Vec::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The polynomial in `x_1..x_{n-1}` equal to `x_j` (1-based, `j >= n`).
    pub fn expr_for(&self, j: usize) -> Result<ExactPoly> {
        if j < self.n {
            return Err(Error::arg(format!(
                "x_{j} is an independent variable for n = {}",
                self.n
            )));
        }
        let mut exprs = self.exprs.lock().expect("eliminator poisoned");
        self.fill_to(&mut exprs, j)?;
        Ok(exprs[j - self.n].clone())
    }

    fn fill_to(&self, exprs: &mut Vec<ExactPoly>, j_max: usize) -> Result<()> {
        let n = self.n;
        for j in (n + exprs.len())..=j_max {
            let q_extra = (j - n + 1) as u32;
            let mut parts = vec![1u32; n];
            parts[0] = q_extra;
            let lhs = power_to_x_in(&class_to_power(&parts)?, j)?;

            let rhs = if q_extra == 1 {
                ExactPoly::one(j)
            } else {
                let q = q_extra as usize - 1;
                let base = ExactPoly::var(j, q - 1).scale(&rat(q as i64));
                if q >= n {
                    base.substitute(q - 1, &exprs[q - n].pad_vars(j))
                } else {
                    base
                }
            };

            let mut lhs_sub = lhs;
            for t in (n..j).rev() {
                lhs_sub = lhs_sub.substitute(t - 1, &exprs[t - n].pad_vars(j));
            }

            let mut unit = vec![0u32; j];
            unit[j - 1] = 1;
            let c = lhs_sub.coeff(&unit);
            if c.is_zero() {
                return Err(Error::internal(format!(
                    "constraint for x_{j} is not linear in x_{j}"
                )));
            }
            let rest = &lhs_sub - &ExactPoly::monomial(j, unit, c.clone());
            let solved = (&rhs - &rest).scale(&(Rat::one() / c));
            exprs.push(solved.restrict_vars(n - 1)?);
        }
        Ok(())
    }

    /// Substitute away every variable of index `>= n`, landing in
    /// `x_1..x_{n-1}`.
    pub fn reduce(&self, p: &ExactPoly) -> Result<ExactPoly> {
        let n = self.n;
        let top = p.max_var_used().map(|i| i + 1).unwrap_or(0);
        if top < n {
            return p.restrict_vars(n - 1);
        }
        {
            let mut exprs = self.exprs.lock().expect("eliminator poisoned");
            self.fill_to(&mut exprs, top)?;
        }
        let exprs = self.exprs.lock().expect("eliminator poisoned");
        let nv = p.num_vars();
        let mut out = p.clone();
        for t in (n..=top).rev() {
            out = out.substitute(t - 1, &exprs[t - n].pad_vars(nv));
        }
        out.restrict_vars(n - 1)
    }
}

/// Expressions for `x_j`, `j = n..=j_max`, in terms of `x_1..x_{n-1}`.
pub fn eliminate_x(n: usize, j_max: usize) -> Result<BTreeMap<usize, ExactPoly>> {
    if j_max < n {
        return Err(Error::arg("j_max must be at least n"));
    }
    let elim = Eliminator::new(n)?;
    let mut out = BTreeMap::new();
    for j in n..=j_max {
        out.insert(j, elim.expr_for(j)?);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchurMode {
    /// Unconstrained complete symmetric functions, padded into a fixed ring.
    Generic,
    /// Degree `m >= n` rewritten in `n-1` variables via the
    /// determinant-one constraint.
    Degenerated,
}

/// Memoized Schur functions for a fixed rank, filled on demand.
pub struct SchurTable {
    mode: SchurMode,
    rank_n: usize,
    num_vars: usize,
    entries: Mutex<Vec<ExactPoly>>,
}

impl SchurTable {
    pub fn degenerated(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::arg("rank parameter n must be at least 2"));
        }
        Ok(SchurTable {
            mode: SchurMode::Degenerated,
            rank_n: n,
            num_vars: n - 1,
            entries: Mutex::new(Vec::new()),
        })
    }

    pub fn generic(num_vars: usize) -> Self {
        SchurTable {
            mode: SchurMode::Generic,
            rank_n: 0,
            num_vars,
            entries: Mutex::new(Vec::new()),
        }
    }

    pub fn mode(&self) -> SchurMode {
        self.mode
    }

    pub fn rank(&self) -> usize {
        self.rank_n
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// `S_m` in this table's ring.
    pub fn entry(&self, m: usize) -> Result<ExactPoly> {
        if self.mode == SchurMode::Generic && m > self.num_vars {
            return Err(Error::arg(format!(
                "generic Schur of degree {m} does not fit in {} variables",
                self.num_vars
            )));
        }
        let mut entries = self.entries.lock().expect("schur table poisoned");
        while entries.len() <= m {
            let next = entries.len();
            let value = match self.mode {
                SchurMode::Generic => generic_schur_in(next, self.num_vars),
                SchurMode::Degenerated => {
                    let n = self.rank_n;
                    if next < n {
                        generic_schur_in(next, self.num_vars)
                    } else {
                        // S_m = -sum_{k=1}^{n-1} S_k^* S_{m-k} - (-1)^n S_{m-n},
                        // the Newton identity with the top elementary
                        // symmetric function pinned to 1.
                        let mut acc = ExactPoly::zero(self.num_vars);
                        for k in 1..n {
                            let flip = generic_schur_in(k, self.num_vars).sign_flip();
                            acc = &acc + &(&flip * &entries[next - k]);
                        }
                        let mut s = -&acc;
                        let tail = &entries[next - n];
                        s = if n.is_multiple_of(2) {
                            &s - tail
                        } else {
                            &s + tail
                        };
                        s
                    }
                }
            };
            entries.push(value);
        }
        Ok(entries[m].clone())
    }
}

/// Degenerated Schur function of degree `m` for rank parameter `n`.
pub fn degenerated_schur(n: usize, m: usize) -> Result<ExactPoly> {
    SchurTable::degenerated(n)?.entry(m)
}

/// Schur function of a partition as a determinant in the table's entries:
/// the s-by-s matrix with entry `(i, j) = S_{q_i - i + j}` (1-based),
/// vanishing entries for negative index.
pub fn schur_of_partition(table: &SchurTable, q: &Partition) -> Result<ExactPoly> {
    let stripped = q.stripped();
    let s = stripped.len();
    if table.mode() == SchurMode::Degenerated && s > table.rank() {
        return Err(Error::arg(format!(
            "partition {q} has more parts than the rank parameter {}",
            table.rank()
        )));
    }
    if s == 0 {
        return Ok(ExactPoly::one(table.num_vars()));
    }
    if s == 1 {
        return table.entry(stripped.parts()[0] as usize);
    }
    let mut mat = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = Vec::with_capacity(s);
        for j in 0..s {
            let idx = stripped.parts()[i] as i64 - i as i64 + j as i64;
            if idx < 0 {
                row.push(ExactPoly::zero(table.num_vars()));
            } else {
                row.push(table.entry(idx as usize)?);
            }
        }
        mat.push(row);
    }
    Ok(poly_det(&mat))
}

/// A variant of the degeneration recursion that shifts the tail term by one
/// extra degree and extends the sign-flipped product over all n indices:
/// `S_m = (-1)^n S_{m-n-1} - sum_{k=1}^{n} S_k^* S_{m-k}`.
///
/// Kept purely as a diagnostic: it does not agree with the constraint
/// route (see the `verify` command's comparison flag).  The `k = n`
/// coefficient has no expression in `n-1` free variables, so the
/// constraint-reduced `S_n` is used for it.
pub fn degenerated_schur_variant(n: usize, m: usize) -> Result<ExactPoly> {
    if n < 2 {
        return Err(Error::arg("rank parameter n must be at least 2"));
    }
    let primary = SchurTable::degenerated(n)?;
    let nv = n - 1;
    let flip_top = primary.entry(n)?.sign_flip();
    let mut entries: Vec<ExactPoly> = Vec::new();
    for deg in 0..=m {
        let value = if deg < n {
            generic_schur_in(deg, nv)
        } else {
            let mut acc = ExactPoly::zero(nv);
            for k in 1..=n {
                let flip = if k < n {
                    generic_schur_in(k, nv).sign_flip()
                } else {
                    flip_top.clone()
                };
                acc = &acc + &(&flip * &entries[deg - k]);
            }
            let tail = if deg > n {
                entries[deg - n - 1].clone()
            } else {
                ExactPoly::zero(nv)
            };
            let signed_tail = if n.is_multiple_of(2) { tail } else { -&tail };
            &signed_tail - &acc
        };
        entries.push(value);
    }
    Ok(entries[m].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;
    use crate::weights::partitions_of;
    use itertools::Itertools;

    fn poly(nv: usize, terms: &[(&[u32], i64, i64)]) -> ExactPoly {
        let mut p = ExactPoly::zero(nv);
        for (exps, n, d) in terms {
            p = &p + &ExactPoly::monomial(nv, exps.to_vec(), frac(*n, *d));
        }
        p
    }

    fn schur5_generic() -> ExactPoly {
        poly(
            5,
            &[
                (&[5, 0, 0, 0, 0], 1, 120),
                (&[3, 1, 0, 0, 0], 1, 6),
                (&[1, 2, 0, 0, 0], 1, 2),
                (&[2, 0, 1, 0, 0], 1, 2),
                (&[0, 1, 1, 0, 0], 1, 1),
                (&[1, 0, 0, 1, 0], 1, 1),
                (&[0, 0, 0, 0, 1], 1, 1),
            ],
        )
    }

    fn x5_eliminated() -> ExactPoly {
        poly(
            4,
            &[
                (&[0, 0, 0, 0], 1, 1),
                (&[5, 0, 0, 0], -1, 120),
                (&[3, 1, 0, 0], 1, 6),
                (&[1, 2, 0, 0], -1, 2),
                (&[2, 0, 1, 0], -1, 2),
                (&[0, 1, 1, 0], 1, 1),
                (&[1, 0, 0, 1], 1, 1),
            ],
        )
    }

    fn schur5_degenerated() -> ExactPoly {
        poly(
            4,
            &[
                (&[0, 0, 0, 0], 1, 1),
                (&[3, 1, 0, 0], 1, 3),
                (&[0, 1, 1, 0], 2, 1),
                (&[1, 0, 0, 1], 2, 1),
            ],
        )
    }

    fn schur6_degenerated() -> ExactPoly {
        poly(
            4,
            &[
                (&[1, 0, 0, 0], 2, 1),
                (&[6, 0, 0, 0], -1, 72),
                (&[4, 1, 0, 0], 1, 3),
                (&[2, 2, 0, 0], -1, 2),
                (&[3, 0, 1, 0], -2, 3),
                (&[1, 1, 1, 0], 2, 1),
                (&[0, 0, 2, 0], 1, 1),
                (&[2, 0, 0, 1], 2, 1),
                (&[0, 1, 0, 1], 2, 1),
            ],
        )
    }

    #[test]
    fn generic_schur_degree_five_fixture() {
        assert_eq!(generic_schur(5), schur5_generic());
    }

    #[test]
    fn generic_schur_degree_zero_and_two() {
        assert_eq!(generic_schur(0), ExactPoly::one(0));
        assert_eq!(
            generic_schur(2),
            poly(2, &[(&[2, 0], 1, 2), (&[0, 1], 1, 1)])
        );
    }

    #[test]
    fn generic_schur_is_weighted_homogeneous() {
        for m in 0..=8usize {
            let s = generic_schur(m);
            for (exps, _) in s.terms() {
                let wdeg: u64 = exps
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (i as u64 + 1) * e as u64)
                    .sum();
                assert_eq!(wdeg, m as u64);
            }
        }
    }

    #[test]
    fn class_to_power_two_part_rules() {
        // distinct parts: K_(a,b) = K_a K_b - K_{a+b}
        let e = class_to_power(&[3, 1]).unwrap();
        assert_eq!(e.coeff(&[3, 1]), rat(1));
        assert_eq!(e.coeff(&[4]), rat(-1));
        assert_eq!(e.num_terms(), 2);
        // equal parts pick up the 1/2 normalization
        let e = class_to_power(&[2, 2]).unwrap();
        assert_eq!(e.coeff(&[2, 2]), frac(1, 2));
        assert_eq!(e.coeff(&[4]), frac(-1, 2));
        assert_eq!(e.num_terms(), 2);
    }

    #[test]
    fn class_to_power_three_part_fixture() {
        // (2,1,1) -> 1/2 (K1^2 K2 - 2 K1 K3 - K2^2 + 2 K4)
        let e = class_to_power(&[2, 1, 1]).unwrap();
        assert_eq!(e.coeff(&[2, 1, 1]), frac(1, 2));
        assert_eq!(e.coeff(&[3, 1]), rat(-1));
        assert_eq!(e.coeff(&[2, 2]), frac(-1, 2));
        assert_eq!(e.coeff(&[4]), rat(1));
        assert_eq!(e.num_terms(), 4);
    }

    #[test]
    fn class_to_power_rejects_bad_parts() {
        assert!(class_to_power(&[]).is_err());
        assert!(class_to_power(&[2, 0]).is_err());
    }

    /// Brute-force monomial symmetric sum: one term per distinct permutation.
    fn monomial_symmetric_at(parts: &[u32], point: &[Rat]) -> Rat {
        let n = point.len();
        let mut padded = parts.to_vec();
        padded.resize(n, 0);
        let mut acc = Rat::zero();
        for perm in padded.iter().copied().permutations(n).unique() {
            let mut term = Rat::one();
            for (u, e) in point.iter().zip(&perm) {
                for _ in 0..*e {
                    term *= u;
                }
            }
            acc += term;
        }
        acc
    }

    #[test]
    fn class_to_power_matches_monomial_sum_numerically() {
        let point: Vec<Rat> = [
            frac(2, 1),
            frac(1, 2),
            frac(-3, 5),
            frac(7, 3),
            frac(1, 7),
            frac(-2, 9),
        ]
        .to_vec();
        for m in 1..=6u32 {
            for q in partitions_of(m, 6).unwrap() {
                let nz: Vec<u32> = q.parts().iter().copied().filter(|&p| p > 0).collect();
                let expr = class_to_power(&nz).unwrap();
                assert_eq!(
                    expr.eval_at_u(&point),
                    monomial_symmetric_at(&nz, &point),
                    "partition {q}"
                );
            }
        }
    }

    #[test]
    fn power_to_x_basics() {
        let k1 = PowerSumExpr::generator(1);
        assert_eq!(power_to_x(&k1), ExactPoly::var(1, 0));
        // K2 K1 - K3 -> 2 x1 x2 - 3 x3
        let e = PowerSumExpr::generator(2)
            .mul_generator(1)
            .sub(&PowerSumExpr::generator(3));
        assert_eq!(
            power_to_x(&e),
            poly(3, &[(&[1, 1, 0], 2, 1), (&[0, 0, 1], -3, 1)])
        );
    }

    #[test]
    fn sum_of_class_functions_is_complete_symmetric() {
        // the formal identity behind the whole construction
        for m in 0..=8u32 {
            let mut total = ExactPoly::zero(m.max(1) as usize);
            if m == 0 {
                total = ExactPoly::one(1);
            } else {
                for q in partitions_of(m, m as usize).unwrap() {
                    let nz: Vec<u32> = q.parts().iter().copied().filter(|&p| p > 0).collect();
                    let expr = class_to_power(&nz).unwrap();
                    total = &total + &power_to_x_in(&expr, m as usize).unwrap();
                }
            }
            assert_eq!(
                total,
                generic_schur_in(m as usize, m.max(1) as usize),
                "m={m}"
            );
        }
    }

    #[test]
    fn eliminate_x_rank_five_fixture() {
        let exprs = eliminate_x(5, 5).unwrap();
        assert_eq!(exprs[&5], x5_eliminated());
    }

    #[test]
    fn schur_tables_start_at_one() {
        assert_eq!(
            SchurTable::degenerated(4).unwrap().entry(0).unwrap(),
            ExactPoly::one(3)
        );
        assert_eq!(SchurTable::generic(5).entry(0).unwrap(), ExactPoly::one(5));
        // generic entries below the rank use only their own variables
        let table = SchurTable::degenerated(5).unwrap();
        for m in 0..5usize {
            assert!(table.entry(m).unwrap().max_var_used().unwrap_or(0) < m.max(1));
        }
    }

    #[test]
    fn eliminate_x_rank_two() {
        let exprs = eliminate_x(2, 2).unwrap();
        assert_eq!(exprs[&2], poly(1, &[(&[2], 1, 2), (&[0], -1, 1)]));
    }

    #[test]
    fn substituting_constraint_into_generic_gives_degenerated() {
        let s5 = generic_schur(5);
        let sub = s5.substitute(4, &x5_eliminated().pad_vars(5));
        assert_eq!(sub.restrict_vars(4).unwrap(), schur5_degenerated());
    }

    #[test]
    fn degenerated_schur_fixtures() {
        assert_eq!(degenerated_schur(5, 5).unwrap(), schur5_degenerated());
        assert_eq!(degenerated_schur(5, 6).unwrap(), schur6_degenerated());
        assert_eq!(
            degenerated_schur(2, 2).unwrap(),
            poly(1, &[(&[2], 1, 1), (&[0], -1, 1)])
        );
        assert_eq!(
            degenerated_schur(5, 6).unwrap().coeff(&[6, 0, 0, 0]),
            frac(-1, 72)
        );
        assert_eq!(
            degenerated_schur(5, 5).unwrap().coeff(&[3, 1, 0, 0]),
            frac(1, 3)
        );
    }

    #[test]
    fn recursion_route_equals_elimination_route() {
        for n in 2..=6usize {
            let table = SchurTable::degenerated(n).unwrap();
            let elim = Eliminator::new(n).unwrap();
            for m in n..=10usize {
                let via_recursion = table.entry(m).unwrap();
                let via_elimination = elim.reduce(&generic_schur(m)).unwrap();
                assert_eq!(via_recursion, via_elimination, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn degenerated_schur_weighted_degree_mod_n() {
        for n in 2..=5usize {
            for m in 0..=9usize {
                let s = degenerated_schur(n, m).unwrap();
                for (exps, _) in s.terms() {
                    let wdeg: u64 = exps
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| (i as u64 + 1) * e as u64)
                        .sum();
                    assert_eq!(wdeg % n as u64, m as u64 % n as u64, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn schur_of_partition_single_row_and_column() {
        let table = SchurTable::degenerated(4).unwrap();
        let q = Partition::new(vec![5]).unwrap();
        assert_eq!(
            schur_of_partition(&table, &q).unwrap(),
            table.entry(5).unwrap()
        );
        // (1,1) -> S1^2 - S2 = x1^2/2 - x2
        let q = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(
            schur_of_partition(&table, &q).unwrap(),
            poly(3, &[(&[2, 0, 0], 1, 2), (&[0, 1, 0], -1, 1)])
        );
        // trailing zeros are immaterial
        let q0 = Partition::new(vec![1, 1, 0, 0]).unwrap();
        assert_eq!(
            schur_of_partition(&table, &q0).unwrap(),
            schur_of_partition(&table, &q).unwrap()
        );
    }

    #[test]
    fn schur_of_partition_rejects_too_many_parts() {
        let table = SchurTable::degenerated(3).unwrap();
        let q = Partition::new(vec![2, 1, 1, 1]).unwrap();
        assert!(schur_of_partition(&table, &q).is_err());
    }

    #[test]
    fn generic_column_shapes_are_elementary_symmetric() {
        // det over the generic table on (1^m) must reproduce the class
        // function of (1^m), which is the elementary symmetric function
        for m in 1..=5usize {
            let table = SchurTable::generic(m);
            let q = Partition::new(vec![1; m]).unwrap();
            let det = schur_of_partition(&table, &q).unwrap();
            let elem = power_to_x_in(&class_to_power(&vec![1u32; m]).unwrap(), m).unwrap();
            assert_eq!(det, elem, "m={m}");
        }
    }

    #[test]
    fn generic_single_row_is_generic_schur() {
        let table = SchurTable::generic(6);
        let q = Partition::new(vec![6]).unwrap();
        assert_eq!(
            schur_of_partition(&table, &q).unwrap(),
            generic_schur_in(6, 6)
        );
    }

    #[test]
    fn variant_recursion_disagrees_with_constraint_route() {
        let primary5 = degenerated_schur(5, 5).unwrap();
        let primary6 = degenerated_schur(5, 6).unwrap();
        let variant5 = degenerated_schur_variant(5, 5).unwrap();
        let variant6 = degenerated_schur_variant(5, 6).unwrap();
        assert!(variant5 != primary5 || variant6 != primary6);
    }

    #[test]
    fn x_poly_to_u_translates_power_sums() {
        // x1 -> u1 + u2 + u3
        let x1 = ExactPoly::var(1, 0);
        let got = x_poly_to_u(&x1, 3);
        let expect = poly(
            3,
            &[(&[1, 0, 0], 1, 1), (&[0, 1, 0], 1, 1), (&[0, 0, 1], 1, 1)],
        );
        assert_eq!(got, expect);
        // h2 in two variables: u1^2 + u1 u2 + u2^2
        let h2 = generic_schur(2);
        let got = x_poly_to_u(&h2, 2);
        let expect = poly(2, &[(&[2, 0], 1, 1), (&[1, 1], 1, 1), (&[0, 2], 1, 1)]);
        assert_eq!(got, expect);
    }
}
