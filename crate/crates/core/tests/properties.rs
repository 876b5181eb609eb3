use hallkit::coeffring::{gauss_binomial, Poly, RatFunc};
use hallkit::hallnum::interpolate_counts;
use hallkit::poset::Poset;
use hallkit::quiver::{DimVec, EulerForm, Quiver};
use hallkit::repfield::{ext1_dim, label, Mat, Rep};
use hallkit::twistedalg::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly(), -2i64..=2).prop_map(|(n, d, k)| RatFunc::new(n, d).unwrap().mul(&RatFunc::p_pow(k)))
}

fn form() -> impl Strategy<Value = EulerForm> {
    prop::collection::vec(-2i64..=2, 4)
        .prop_map(|v| EulerForm::explicit(vec![v[..2].to_vec(), v[2..].to_vec()]).unwrap())
}

fn dim() -> impl Strategy<Value = DimVec> {
    (0i64..=2, 0i64..=2).prop_filter("nonzero", |(a, b)| a + b > 0).prop_map(|(a, b)| DimVec(vec![a, b]))
}

fn class(max: usize) -> impl Strategy<Value = IKClass> {
    prop::collection::vec(dim(), 0..=max).prop_map(|v| IKClass::new(v).unwrap())
}

fn coef() -> impl Strategy<Value = RatFunc> {
    prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)].prop_map(RatFunc::from_int)
}

fn b_elem(max: usize) -> impl Strategy<Value = BElem> {
    prop::collection::vec((class(max), coef()), 1..=2).prop_map(BElem::from_terms)
}

fn a_elem() -> impl Strategy<Value = AElem> {
    prop::collection::vec((dim(), coef()), 1..=2).prop_map(AElem::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(&a).unwrap().mul(&a), b.clone());
        }
    }

    #[test]
    fn ratfunc_text_round_trip(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn variable_inversion_is_an_involutive_automorphism(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.invert_variable().invert_variable(), a.clone());
        prop_assert_eq!(a.mul(&b).invert_variable(), a.invert_variable().mul(&b.invert_variable()));
    }

    #[test]
    fn evaluation_at_one_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        if a.is_lambda_circ() && b.is_lambda_circ() {
            let (x, y) = (a.pi_eval().unwrap(), b.pi_eval().unwrap());
            prop_assert_eq!(a.add(&b).pi_eval().unwrap(), &x + &y);
            prop_assert_eq!(a.mul(&b).pi_eval().unwrap(), x * y);
        }
    }

    #[test]
    fn gauss_binomials(n in 0u32..7, k in 0u32..7) {
        prop_assume!(k <= n);
        let g = gauss_binomial(n, k).unwrap();
        prop_assert_eq!(&g, &gauss_binomial(n, n - k).unwrap());
        let binom: BigInt = (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1));
        prop_assert_eq!(g.pi_eval().unwrap(), BigRational::from_integer(binom));
        if k >= 1 && k < n {
            // (n,k) = (n-1,k-1) + ℓ^k (n-1,k)
            let rhs = gauss_binomial(n - 1, k - 1).unwrap().add(&RatFunc::l_pow(k as i64).mul(&gauss_binomial(n - 1, k).unwrap()));
            prop_assert_eq!(g, rhs);
        }
    }

    #[test]
    fn interpolation_recovers_integer_polynomials(c in prop::collection::vec(-20i64..=20, 1..5)) {
        let p = Poly::from_i64s(&c);
        let samples: Vec<(u64, BigInt)> = [2u64, 3, 5, 7, 11].iter().map(|&q| (q, p.eval_int(&BigInt::from(q)))).collect();
        let fit = interpolate_counts(&samples).unwrap();
        prop_assert_eq!(fit.0, p);
    }

    #[test]
    fn euler_form_is_bilinear(f in form(), a in dim(), b in dim(), c in dim()) {
        prop_assert_eq!(f.eval(&a.add(&b), &c).unwrap(), f.eval(&a, &c).unwrap() + f.eval(&b, &c).unwrap());
        prop_assert_eq!(f.eval(&c, &a.add(&b)).unwrap(), f.eval(&c, &a).unwrap() + f.eval(&c, &b).unwrap());
        prop_assert_eq!(f.antisym(&a, &b).unwrap(), -f.antisym(&b, &a).unwrap());
    }

    #[test]
    fn a_is_associative(f in form(), x in a_elem(), y in a_elem(), z in a_elem()) {
        let l = a_mult(&a_mult(&x, &y, &f).unwrap(), &z, &f).unwrap();
        let r = a_mult(&x, &a_mult(&y, &z, &f).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn b_is_associative(f in form(), x in b_elem(2), y in b_elem(2), z in b_elem(1)) {
        let m = |u: &BElem, v: &BElem| b_mult(u, v, &f, BMode::Sum).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
    }

    #[test]
    fn sum_and_graph_products_agree(f in form(), i in class(3), j in class(3)) {
        prop_assert_eq!(
            b_mult_basis(&i, &j, &f, BMode::Sum).unwrap(),
            b_mult_basis(&i, &j, &f, BMode::Graph).unwrap()
        );
    }

    #[test]
    fn b_products_specialise_to_c(f in form(), x in b_elem(3), y in b_elem(3)) {
        let p = b_mult(&x, &y, &f, BMode::Sum).unwrap();
        prop_assert!(is_lambda_circ(&p));
        let l = pi_morphism(&p).unwrap();
        let r = c_mult(&pi_morphism(&x).unwrap(), &pi_morphism(&y).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
        let l = delta_ba(&p, 2).unwrap();
        let r = a_mult(&delta_ba(&x, 2).unwrap(), &delta_ba(&y, 2).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn c_is_associative(f in form(), x in b_elem(2), y in b_elem(2), z in b_elem(1)) {
        let (x, y, z) = (pi_morphism(&x).unwrap(), pi_morphism(&y).unwrap(), pi_morphism(&z).unwrap());
        let l = c_mult(&c_mult(&x, &y, &f).unwrap(), &z, &f).unwrap();
        let r = c_mult(&x, &c_mult(&y, &z, &f).unwrap(), &f).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn ik_union_is_commutative(i in class(3), j in class(3)) {
        prop_assert_eq!(i.union(&j), j.union(&i));
        prop_assert_eq!(i.union(&j).len(), i.len() + j.len());
    }

    #[test]
    fn series_parallel_posets_replay(n in 1usize..6, seed in any::<u64>()) {
        // glue random chains and antichains, then certify and rebuild
        let mut p = if seed & 1 == 0 { Poset::chain(1) } else { Poset::antichain(1) };
        let mut s = seed;
        for _ in 1..n {
            s = s.rotate_left(7) ^ 0x9e37;
            let m = p.len();
            let mut rel: Vec<(usize, usize)> = p.strict_pairs();
            if s & 2 == 0 {
                rel.extend((0..m).map(|i| (i, m)));
            }
            p = Poset::new(m + 1, &rel).unwrap();
        }
        let tree = p.certificate().unwrap();
        let mut leaves = tree.leaves();
        leaves.sort();
        prop_assert_eq!(leaves, (0..p.len()).collect::<Vec<_>>());
        prop_assert_eq!(tree.replay(p.len()).strict_pairs(), p.strict_pairs());
    }

    #[test]
    fn rank_matches_transpose(data in prop::collection::vec(0u32..5, 12)) {
        let m = Mat::from_rows(3, 4, data);
        prop_assert_eq!(m.rank(5), m.transpose().rank(5));
        for v in m.nullspace(5) {
            prop_assert!(m.mul_vec(&v, 5).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.nullspace(5).len() + m.rank(5), 4);
    }

    #[test]
    fn a2_reps_respect_the_euler_form(
        (dx, mx) in a2_rep(), (dy, my) in a2_rep(),
    ) {
        let q = Quiver::linear(2);
        let x = Rep::for_quiver(&q, 3, &dx, vec![mx]).unwrap();
        let y = Rep::for_quiver(&q, 3, &dy, vec![my]).unwrap();
        let f = q.euler_form();
        let ext = ext1_dim(&x, &y, &f).unwrap() as i64;
        prop_assert_eq!(Rep::hom_dim(&x, &y) as i64 - ext, f.eval(&dx, &dy).unwrap());
        // labels are additive under direct sums
        prop_assert_eq!(label(&x.direct_sum(&y)).unwrap(), label(&x).unwrap().union(&label(&y).unwrap()));
    }
}

fn a2_rep() -> impl Strategy<Value = (DimVec, Mat)> {
    (0usize..=2, 0usize..=2).prop_flat_map(|(s, t)| {
        prop::collection::vec(0u32..3, s * t)
            .prop_map(move |data| (DimVec(vec![s as i64, t as i64]), Mat::from_rows(t, s, data)))
    })
}
