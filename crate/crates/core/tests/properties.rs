//! Property tests for the algebraic substrate: ring axioms, involutions,
//! homomorphisms, and the canonical-form invariants everything else leans on.

use proptest::prelude::*;

use weylchar::orbits::{orbit_character_u, reduce_u_canonical, signature};
use weylchar::poly::{frac, rat, ExactPoly, Rat};
use weylchar::weights::{canonicalize, orbit_size, Partition};

fn arb_poly(num_vars: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, num_vars), -6i64..7, 1i64..5),
        0..5,
    )
    .prop_map(move |terms| {
        let mut p = ExactPoly::zero(num_vars);
        for (exps, n, d) in terms {
            p = &p + &ExactPoly::monomial(num_vars, exps, frac(n, d));
        }
        p
    })
}

fn arb_point(num_vars: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-5i64..6, 1i64..4).prop_map(|(n, d)| frac(n, d)), num_vars)
}

fn arb_partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 1..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted")
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn sign_flip_is_an_involution(a in arb_poly(3)) {
        prop_assert_eq!(a.sign_flip().sign_flip(), a);
    }

    #[test]
    fn coefficients_stay_reduced_and_nonzero(a in arb_poly(3), b in arb_poly(3)) {
        use num::{Integer, One, Signed, Zero};
        for p in [&a + &b, &a * &b, &a - &b] {
            for (_, c) in p.terms() {
                prop_assert!(!c.is_zero());
                prop_assert!(c.denom().is_positive());
                prop_assert!(c.numer().gcd(c.denom()).is_one());
            }
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in arb_poly(2), b in arb_poly(2), pt in arb_point(2)) {
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(2), b in arb_poly(2)) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn canonicalize_is_idempotent(p in arb_partition(5, 8)) {
        let n = p.len();
        let once = canonicalize(&p, n).unwrap();
        prop_assert_eq!(canonicalize(&once, n).unwrap(), once.clone());
        prop_assert_eq!(once.parts().last(), Some(&0));
    }

    #[test]
    fn u_reduction_is_idempotent_and_constraint_invariant(a in arb_poly(3)) {
        let reduced = reduce_u_canonical(&a);
        prop_assert_eq!(reduce_u_canonical(&reduced), reduced.clone());
        // a point on the constraint surface u1*u2*u3 = 1
        let u1 = frac(2, 3);
        let u2 = frac(5, 4);
        let u3 = (Rat::from_integer(1.into()) / &u1) / &u2;
        prop_assert_eq!(a.eval(&[u1.clone(), u2.clone(), u3.clone()]),
                        reduced.eval(&[u1, u2, u3]));
    }

    #[test]
    fn orbit_character_is_symmetric(q in arb_partition(4, 5), perm in Just(()).prop_flat_map(|_| {
        prop::collection::vec(0usize..4, 4).prop_filter("permutation", |v| {
            let mut s = v.clone();
            s.sort_unstable();
            s == vec![0, 1, 2, 3]
        })
    })) {
        let n = 4;
        let ch = orbit_character_u(&q, n).unwrap();
        // permute the variables of the character and renormalize
        let mut permuted = ExactPoly::zero(n);
        for (exps, c) in ch.terms() {
            let mut new_exps = vec![0u32; n];
            for (i, &e) in exps.iter().enumerate() {
                new_exps[perm[i]] = e;
            }
            permuted = &permuted + &ExactPoly::monomial(n, new_exps, c.clone());
        }
        prop_assert_eq!(reduce_u_canonical(&permuted), ch);
    }

    #[test]
    fn orbit_character_at_ones_is_orbit_size(q in arb_partition(4, 6)) {
        let n = 4;
        let ch = orbit_character_u(&q, n).unwrap();
        let ones = vec![rat(1); n];
        prop_assert_eq!(ch.eval(&ones).to_string(), orbit_size(&q, n).unwrap().to_string());
    }

    #[test]
    fn signature_is_multiplicative(base in Just(vec![10u32, 8, 6, 4, 2]),
                                   pa in prop::sample::subsequence(vec![0usize, 1, 2, 3, 4], 5).prop_shuffle(),
                                   pb in prop::sample::subsequence(vec![0usize, 1, 2, 3, 4], 5).prop_shuffle()) {
        let apply = |perm: &[usize]| -> Vec<u32> { perm.iter().map(|&i| base[i]).collect() };
        let composed: Vec<usize> = pb.iter().map(|&i| pa[i]).collect();
        let sa = signature(&apply(&pa)).unwrap();
        let sb = signature(&apply(&pb)).unwrap();
        let sc = signature(&apply(&composed)).unwrap();
        prop_assert_eq!(sc, sa * sb);
    }
}
