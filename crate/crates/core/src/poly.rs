//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Exponent tuples have a fixed length per polynomial (`num_vars`); mixing
//! variable counts is a bug, not an implicit embedding, and the arithmetic
//! operators assert it.  Zero coefficients are never stored, so structural
//! equality is polynomial identity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Graded-lexicographic comparison of exponent tuples (total degree first,
/// then lexicographic, variable 0 most significant).
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl ExactPoly {
    pub fn zero(num_vars: usize) -> Self {
        ExactPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, Rat::one())
    }

    pub fn constant(num_vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c);
        p
    }

    /// The monomial `x_{index}` (0-based index).
    pub fn var(num_vars: usize, index: usize) -> Self {
        assert!(index < num_vars, "variable index {index} out of range");
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Self::monomial(num_vars, exps, Rat::one())
    }

    pub fn monomial(num_vars: usize, exps: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent tuple length mismatch");
        let mut p = Self::zero(num_vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Stored coefficient, or zero.
    pub fn coeff(&self, exps: &[u32]) -> Rat {
        assert_eq!(exps.len(), self.num_vars, "exponent tuple length mismatch");
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.num_vars);
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_vars);
        }
        ExactPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Scale every term by `(-1)^(sum of exponents)`, i.e. apply
    /// `x_i -> -x_i` for every variable.
    pub fn sign_flip(&self) -> Self {
        ExactPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let deg: u64 = e.iter().map(|&k| k as u64).sum();
                    let c = if deg.is_multiple_of(2) {
                        c.clone()
                    } else {
                        -c.clone()
                    };
                    (e.clone(), c)
                })
                .collect(),
        }
    }

    /// Replace variable `var` by `replacement` everywhere, fully expanded.
    pub fn substitute(&self, var: usize, replacement: &ExactPoly) -> Self {
        assert!(var < self.num_vars, "variable index {var} out of range");
        assert_eq!(
            replacement.num_vars(),
            self.num_vars,
            "replacement variable count mismatch"
        );
        let max_pow = self.terms.keys().map(|e| e[var]).max().unwrap_or(0);
        // replacement^0 ..= replacement^max_pow
        let mut powers = Vec::with_capacity(max_pow as usize + 1);
        powers.push(Self::one(self.num_vars));
        for _ in 0..max_pow {
            let next = powers.last().unwrap() * replacement;
            powers.push(next);
        }
        let mut out = Self::zero(self.num_vars);
        for (exps, c) in &self.terms {
            let e = exps[var];
            if e == 0 {
                out.add_term(exps.clone(), c.clone());
                continue;
            }
            let mut rest = exps.clone();
            rest[var] = 0;
            for (pexps, pc) in &powers[e as usize].terms {
                let mut merged = rest.clone();
                for (m, p) in merged.iter_mut().zip(pexps) {
                    *m += p;
                }
                out.add_term(merged, c * pc);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(
            point.len(),
            self.num_vars,
            "evaluation point length mismatch"
        );
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Embed into a ring with more variables (new variables unused).
    pub fn pad_vars(&self, num_vars: usize) -> Self {
        assert!(num_vars >= self.num_vars, "pad_vars cannot shrink");
        ExactPoly {
            num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(num_vars, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Drop trailing variables, failing if any of them is actually used.
    pub fn restrict_vars(&self, num_vars: usize) -> Result<Self> {
        if num_vars > self.num_vars {
            return Ok(self.pad_vars(num_vars));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[num_vars..].iter().any(|&k| k != 0) {
                return Err(Error::internal(format!(
                    "restrict_vars({num_vars}): variable beyond range still present"
                )));
            }
            terms.insert(e[..num_vars].to_vec(), c.clone());
        }
        Ok(ExactPoly { num_vars, terms })
    }

    /// Highest variable index actually used, if any term is non-constant.
    pub fn max_var_used(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&k| k != 0))
            .max()
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().max_by(|(a, _), (b, _)| grlex_cmp(a, b))
    }

    /// Exact quotient `self / divisor`; the division must leave no remainder.
    ///
    /// Long division against the divisor's graded-lex leading term.  For an
    /// exact multiple this terminates with zero remainder; any step where the
    /// leading terms fail to divide is reported as an inconsistency.  The
    /// remainder is mutated in place and its leading term tracked through a
    /// lazily-pruned max-heap, so quotients with many terms stay cheap.
    pub fn exact_div(&self, divisor: &ExactPoly) -> Result<ExactPoly> {
        assert_eq!(self.num_vars, divisor.num_vars, "variable count mismatch");

        struct GrlexKey(Vec<u32>);
        impl PartialEq for GrlexKey {
            fn eq(&self, other: &Self) -> bool {
                self.0 == other.0
            }
        }
        impl Eq for GrlexKey {}
        impl PartialOrd for GrlexKey {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl Ord for GrlexKey {
            fn cmp(&self, other: &Self) -> Ordering {
                grlex_cmp(&self.0, &other.0)
            }
        }

        let (dexp, dcoeff) = divisor
            .leading_term()
            .ok_or_else(|| Error::internal("division by the zero polynomial"))?;
        let (dexp, dcoeff) = (dexp.clone(), dcoeff.clone());

        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.num_vars);
        let mut heap: std::collections::BinaryHeap<GrlexKey> =
            rem.keys().cloned().map(GrlexKey).collect();
        while let Some(GrlexKey(top)) = heap.pop() {
            // stale entry: already cancelled or consumed
            let Some(rcoeff) = rem.get(&top).cloned() else {
                continue;
            };
            let mut qexp = Vec::with_capacity(self.num_vars);
            for (r, d) in top.iter().zip(&dexp) {
                if r < d {
                    return Err(Error::internal("non-exact polynomial division"));
                }
                qexp.push(r - d);
            }
            let qc = rcoeff / &dcoeff;
            // subtract (quotient term) * divisor in place; freshly created
            // monomials are strictly below `top`, so heap order is preserved
            for (de, dc) in &divisor.terms {
                let key: Vec<u32> = qexp.iter().zip(de).map(|(a, b)| a + b).collect();
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        let key = v.key().clone();
                        v.insert(-delta);
                        heap.push(GrlexKey(key));
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.add_term(qexp, qc);
        }
        if !rem.is_empty() {
            return Err(Error::internal("non-exact polynomial division"));
        }
        Ok(quot)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Render with variables `<var>1`, `<var>2`, ... in descending graded-lex
    /// term order.  The output is deterministic.
    pub fn to_text(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_cmp(b, a));
        let mut out = String::new();
        for (i, exps) in keys.iter().enumerate() {
            let c = &self.terms[*exps];
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("{var}{}", j + 1)
                    } else {
                        format!("{var}{}^{}", j + 1, e)
                    }
                })
                .collect();
            if mon.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mon.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mon.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExactPoly[{} vars]({})",
            self.num_vars,
            self.to_text("x")
        )
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = ExactPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

/// Determinant of a square matrix of polynomials, by cofactor expansion
/// along the first remaining row.  Fine for the small matrices used here.
pub fn poly_det(mat: &[Vec<ExactPoly>]) -> ExactPoly {
    let s = mat.len();
    assert!(mat.iter().all(|row| row.len() == s), "matrix not square");
    if s == 0 {
        return ExactPoly::one(0);
    }
    let nv = mat[0][0].num_vars();
    fn expand(mat: &[Vec<ExactPoly>], row: usize, cols: &mut Vec<usize>, nv: usize) -> ExactPoly {
        if cols.is_empty() {
            return ExactPoly::one(nv);
        }
        let mut acc = ExactPoly::zero(nv);
        for i in 0..cols.len() {
            let c = cols.remove(i);
            let entry = &mat[row][c];
            if !entry.is_zero() {
                let minor = expand(mat, row + 1, cols, nv);
                let term = entry * &minor;
                acc = if i % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            cols.insert(i, c);
        }
        acc
    }
    let mut cols: Vec<usize> = (0..s).collect();
    expand(mat, 0, &mut cols, nv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, nv: usize) -> ExactPoly {
        ExactPoly::var(nv, i)
    }

    #[test]
    fn add_cancels_inverse() {
        let p = x(0, 2);
        let q = -&p;
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn add_partial_cancellation() {
        // (x1^2/2 + x2) + (x1^2/2 - x2) = x1^2
        let half_sq = ExactPoly::monomial(2, vec![2, 0], frac(1, 2));
        let a = &half_sq + &x(1, 2);
        let b = &half_sq - &x(1, 2);
        let expect = ExactPoly::monomial(2, vec![2, 0], rat(1));
        assert_eq!(&a + &b, expect);
    }

    #[test]
    fn mul_difference_of_squares() {
        let u1 = x(0, 2);
        let u2 = x(1, 2);
        let prod = &(&u1 - &u2) * &(&u1 + &u2);
        let expect = &(&u1 * &u1) - &(&u2 * &u2);
        assert_eq!(prod, expect);
    }

    #[test]
    fn mul_identity() {
        let p = &(&x(0, 3) * &x(2, 3)) + &ExactPoly::constant(3, frac(7, 3));
        assert_eq!(&ExactPoly::one(3) * &p, p);
    }

    #[test]
    fn mul_hand_expansion() {
        // (x1^2/2 - x2)(x1^2/2 + x2) = x1^4/4 - x2^2
        let half_sq = ExactPoly::monomial(2, vec![2, 0], frac(1, 2));
        let a = &half_sq - &x(1, 2);
        let b = &half_sq + &x(1, 2);
        let mut expect = ExactPoly::monomial(2, vec![4, 0], frac(1, 4));
        expect = &expect - &ExactPoly::monomial(2, vec![0, 2], rat(1));
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn substitute_absent_variable_is_identity() {
        let p = &x(0, 3) + &ExactPoly::constant(3, rat(5));
        let r = ExactPoly::monomial(3, vec![2, 0, 0], frac(1, 2));
        assert_eq!(p.substitute(2, &r), p);
    }

    #[test]
    fn substitute_constraint_example() {
        // x2 := x1^2/2 - 1 into x1^2/2 - x2 gives 1
        let half_sq = ExactPoly::monomial(2, vec![2, 0], frac(1, 2));
        let p = &half_sq - &x(1, 2);
        let r = &half_sq - &ExactPoly::one(2);
        assert_eq!(p.substitute(1, &r), ExactPoly::one(2));
    }

    #[test]
    fn sign_flip_examples() {
        // S2 = x1^2/2 + x2 -> x1^2/2 - x2
        let s2 = &ExactPoly::monomial(2, vec![2, 0], frac(1, 2)) + &x(1, 2);
        let s2_flipped = &ExactPoly::monomial(2, vec![2, 0], frac(1, 2)) - &x(1, 2);
        assert_eq!(s2.sign_flip(), s2_flipped);
        assert_eq!(ExactPoly::one(4).sign_flip(), ExactPoly::one(4));
        // S3 = x1^3/6 + x1*x2 + x3 -> -x1^3/6 + x1*x2 - x3
        let s3 = &(&ExactPoly::monomial(3, vec![3, 0, 0], frac(1, 6))
            + &ExactPoly::monomial(3, vec![1, 1, 0], rat(1)))
            + &x(2, 3);
        let expect = &(&ExactPoly::monomial(3, vec![3, 0, 0], frac(-1, 6))
            + &ExactPoly::monomial(3, vec![1, 1, 0], rat(1)))
            - &x(2, 3);
        assert_eq!(s3.sign_flip(), expect);
    }

    #[test]
    fn coeff_of_absent_monomial_is_zero() {
        let p = x(0, 2);
        assert_eq!(p.coeff(&[0, 1]), rat(0));
        assert_eq!(p.coeff(&[1, 0]), rat(1));
    }

    #[test]
    fn eval_vandermonde_and_constant_term() {
        let v = &x(0, 2) - &x(1, 2);
        assert_eq!(v.eval(&[rat(3), rat(1)]), rat(2));
        let p = &ExactPoly::monomial(2, vec![3, 1], frac(5, 7)) + &ExactPoly::constant(2, rat(9));
        assert_eq!(p.eval(&[rat(0), rat(0)]), rat(9));
    }

    #[test]
    fn eval_orbit_character_at_ones_counts_terms() {
        let k = &x(0, 2) + &x(1, 2);
        assert_eq!(k.eval(&[rat(1), rat(1)]), rat(2));
    }

    #[test]
    fn exact_div_recovers_factor() {
        let a = &(&x(0, 2) - &x(1, 2)) * &(&x(0, 2) + &x(1, 2));
        let q = a.exact_div(&(&x(0, 2) - &x(1, 2))).unwrap();
        assert_eq!(q, &x(0, 2) + &x(1, 2));
    }

    #[test]
    fn exact_div_rejects_non_multiple() {
        let a = &x(0, 2) + &ExactPoly::one(2);
        let d = &x(0, 2) - &x(1, 2);
        assert!(a.exact_div(&d).is_err());
    }

    #[test]
    fn restrict_and_pad_round_trip() {
        let p = &x(0, 4) + &ExactPoly::monomial(4, vec![0, 2, 0, 0], rat(3));
        let narrow = p.restrict_vars(2).unwrap();
        assert_eq!(narrow.pad_vars(4), p);
        assert!(p.restrict_vars(1).is_err());
    }

    #[test]
    fn det_two_by_two() {
        let m = vec![
            vec![x(0, 2), ExactPoly::one(2)],
            vec![ExactPoly::one(2), x(1, 2)],
        ];
        let expect = &(&x(0, 2) * &x(1, 2)) - &ExactPoly::one(2);
        assert_eq!(poly_det(&m), expect);
    }

    #[test]
    fn det_matches_sign_of_permutation() {
        // det of the 3x3 anti-diagonal ones matrix is -1
        let z = || ExactPoly::zero(1);
        let o = || ExactPoly::one(1);
        let m = vec![
            vec![z(), z(), o()],
            vec![z(), o(), z()],
            vec![o(), z(), z()],
        ];
        assert_eq!(poly_det(&m), -&ExactPoly::one(1));
    }

    #[test]
    fn text_rendering_is_graded_lex_descending() {
        let p = &(&ExactPoly::monomial(3, vec![1, 1, 0], rat(2)) + &ExactPoly::one(3))
            + &ExactPoly::monomial(3, vec![0, 0, 1], frac(-1, 3));
        assert_eq!(p.to_text("x"), "2*x1*x2 - 1/3*x3 + 1");
        assert_eq!(ExactPoly::zero(2).to_text("x"), "0");
    }
}
