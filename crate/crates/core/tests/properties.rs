use curvesing::algebraic::{adjoin_root, AlgebraicNumber, Region, Tower};
use curvesing::arith::{rat, ratio, Rat};
use curvesing::catalog::all_classes;
use curvesing::classify::classify_point;
use curvesing::curve::{factor_rational, parse_poly, BiPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, small_rat()), 0..=max_terms).prop_map(
        move |terms| {
            let mut f = BiPoly::zero();
            for (i, j, c) in terms {
                if i + j <= max_deg {
                    f.add_term(i, j, c);
                }
            }
            f
        },
    )
}

/// A nonzero polynomial vanishing at the origin.
fn through_origin(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    (poly(max_deg, 5), 1..=max_deg, 0..=max_deg, 1i64..=3).prop_map(|(f, i, j, c)| {
        let mut g = BiPoly::zero();
        for ((a, b), v) in f.terms() {
            if a + b > 0 {
                g.add_term(a, b, v.clone());
            }
        }
        g.add_term(i - i.min(j), i.min(j), rat(c));
        g
    })
    .prop_filter("zero", |g| !g.is_zero())
}

fn invertible() -> impl Strategy<Value = [[Rat; 2]; 2]> {
    [small_rat(), small_rat(), small_rat(), small_rat()]
        .prop_filter("singular", |m| &m[0] * &m[3] != &m[1] * &m[2])
        .prop_map(|[a, b, c, d]| [[a, b], [c, d]])
}

fn inverse(m: &[[Rat; 2]; 2]) -> [[Rat; 2]; 2] {
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    [
        [&m[1][1] / &det, -&m[0][1] / &det],
        [-&m[1][0] / &det, &m[0][0] / &det],
    ]
}

proptest! {
    #[test]
    fn display_parses_back(f in poly(6, 8)) {
        prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn translations_cancel(f in poly(5, 6), p in (small_rat(), small_rat())) {
        let back = (-p.0.clone(), -p.1.clone());
        prop_assert_eq!(f.translate(&p).translate(&back), f);
    }

    #[test]
    fn linear_changes_cancel(f in poly(5, 6), m in invertible()) {
        let g = f.linear_change(&m).unwrap();
        prop_assert_eq!(g.total_degree(), f.total_degree());
        prop_assert_eq!(g.linear_change(&inverse(&m)).unwrap(), f);
    }

    #[test]
    fn multiplicity_adds_and_cones_multiply(f in through_origin(4), g in through_origin(4)) {
        let fg = &f * &g;
        prop_assert_eq!(
            fg.multiplicity_at_origin().unwrap(),
            f.multiplicity_at_origin().unwrap() + g.multiplicity_at_origin().unwrap()
        );
        prop_assert_eq!(
            fg.tangent_cone().unwrap(),
            &f.tangent_cone().unwrap() * &g.tangent_cone().unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_expands_back(f in poly(3, 4), g in poly(3, 4)) {
        let h = &f * &g;
        prop_assume!(!h.is_zero());
        let l = factor_rational(&h).unwrap();
        prop_assert_eq!(l.expand(), h);
    }
}

fn quadratic_field(c: i64, near: (f64, f64)) -> (Tower, AlgebraicNumber) {
    let r = |v: f64| Rat::from_float(v).unwrap();
    let region = Region::new(r(near.0 - 0.3), r(near.0 + 0.3), r(near.1 - 0.3), r(near.1 + 0.3));
    let p = vec![vec![rat(c)], vec![], vec![rat(1)]];
    adjoin_root(&Tower::rationals(), &p, &region).unwrap()
}

fn element(k: &Tower, g: &AlgebraicNumber, a: Rat, b: Rat) -> AlgebraicNumber {
    AlgebraicNumber::from_rat(k, a).add(&g.mul(&AlgebraicNumber::from_rat(k, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(v in prop::collection::vec(small_rat(), 6), imaginary in any::<bool>()) {
        let (k, g) = if imaginary {
            quadratic_field(1, (0.0, 1.0))
        } else {
            quadratic_field(-2, (1.4, 0.0))
        };
        let x = element(&k, &g, v[0].clone(), v[1].clone());
        let y = element(&k, &g, v[2].clone(), v[3].clone());
        let z = element(&k, &g, v[4].clone(), v[5].clone());
        prop_assert!(x.add(&y).equals(&y.add(&x)));
        prop_assert!(x.mul(&y).equals(&y.mul(&x)));
        prop_assert!(x.mul(&y).mul(&z).equals(&x.mul(&y.mul(&z))));
        prop_assert!(x.mul(&y.add(&z)).equals(&x.mul(&y).add(&x.mul(&z))));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).equals(&AlgebraicNumber::one(&k)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn codes_survive_linear_changes(idx in 0usize..60, m in invertible()) {
        let classes = all_classes();
        let class = &classes[idx % classes.len()];
        let g = class.representative.linear_change(&m).unwrap();
        let r = classify_point(&g, &(rat(0), rat(0))).unwrap();
        prop_assert_eq!(&r.code, &class.code);
    }
}
