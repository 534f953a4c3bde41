use num_traits::Signed;
use proptest::prelude::*;

use schwinger_core::basis::{h0_membership, traceless_project};
use schwinger_core::catalog::{self, IrrepLabel, WeightInput};
use schwinger_core::induced::{
    induced_inner_formula, sphere_inner_direct, sphere_monomial_integral, SphereFunction,
};
use schwinger_core::scalar::frac;
use schwinger_core::{Mode, Monomial, Polynomial, Scalar};

fn small_poly(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::array::uniform6(0..=max_exp), -6i64..=6, 1i64..=4),
        0..max_terms,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(e, n, d)| (Monomial::new(e), Scalar::from_rational(frac(n, d)))),
        )
    })
}

fn bihomogeneous(max_deg: u32) -> impl Strategy<Value = Polynomial> {
    (0..=max_deg, 0..=max_deg).prop_flat_map(|(p, q)| {
        let monos = Monomial::of_bidegree(p, q);
        prop::collection::vec(-5i64..=5, monos.len()).prop_map(move |cs| {
            Polynomial::from_terms(monos.iter().zip(cs).map(|(m, c)| (*m, Scalar::from_int(c))))
        })
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    (1usize..=6).prop_map(|l| Mode::new(l).unwrap())
}

proptest! {
    #[test]
    fn canonical_commutation(f in small_poly(3, 6), j in mode(), k in mode()) {
        let lhs = &f.mode_mul(k).mode_diff(j) - &f.mode_diff(j).mode_mul(k);
        let expect = if j == k { f.clone() } else { Polynomial::zero() };
        prop_assert_eq!(lhs, expect);
    }

    #[test]
    fn inner_positive(f in small_poly(3, 6)) {
        let n = f.norm_sq();
        if f.is_zero() {
            prop_assert!(n.is_zero());
        } else {
            prop_assert!(n.as_rational().unwrap().is_positive());
        }
    }

    #[test]
    fn creation_adjoint_to_annihilation(f in small_poly(3, 5), g in small_poly(3, 5), j in mode()) {
        prop_assert_eq!(f.mode_mul(j).bargmann_inner(&g), f.bargmann_inner(&g.mode_diff(j)));
    }

    #[test]
    fn kplus_adjoint_to_kminus(f in small_poly(2, 5), g in small_poly(2, 5)) {
        prop_assert_eq!(f.mul_zw().bargmann_inner(&g), f.bargmann_inner(&g.contract()));
    }

    #[test]
    fn bidegree_parts_orthogonal_and_complete(f in small_poly(2, 8)) {
        let parts = f.bidegree_split();
        let sum = parts.values().fold(Polynomial::zero(), |a, b| &a + b);
        prop_assert_eq!(&sum, &f);
        for (a, fa) in &parts {
            prop_assert!(fa.bidegree().unwrap() == Some(*a));
            for (b, fb) in &parts {
                if a != b {
                    prop_assert!(fa.bargmann_inner(fb).is_zero());
                }
            }
        }
    }

    #[test]
    fn weight_round_trip(p in 0u32..12, q in 0u32..12, r in 0i64..12, s in 0i64..12) {
        let rep = IrrepLabel::new(p, q);
        let res = catalog::weight_conversion(rep, WeightInput::RS { r, s });
        if r as u32 > p || s as u32 > q {
            prop_assert!(res.is_err());
        } else {
            let w = res.unwrap();
            let back = catalog::weight_conversion(rep, WeightInput::IY { i2: w.i2 as i64, y3: w.y3 as i64 }).unwrap();
            prop_assert_eq!(w, back);
            prop_assert_eq!((back.r as i64, back.s as i64), (r, s));
        }
    }

    #[test]
    fn projector_properties(f in bihomogeneous(4)) {
        let f0 = traceless_project(&f).unwrap();
        prop_assert!(h0_membership(&f0));
        prop_assert_eq!(traceless_project(&f0).unwrap(), f0.clone());
        let (_, rem) = (&f - &f0).div_rem_zw();
        prop_assert!(rem.is_zero());
        prop_assert!(traceless_project(&f.mul_zw()).unwrap().is_zero());
        // orthogonal projector: f − f₀ ⟂ f₀
        prop_assert!((&f - &f0).bargmann_inner(&f0).is_zero());
    }

    #[test]
    fn induced_formula_matches_direct(f in bihomogeneous(3), g in bihomogeneous(3)) {
        let a = SphereFunction::new(traceless_project(&f).unwrap());
        let b = SphereFunction::new(traceless_project(&g).unwrap());
        prop_assert_eq!(induced_inner_formula(&a, &b).unwrap(), sphere_inner_direct(&a, &b).unwrap());
    }
}

/// The sphere moments equal Dirichlet integrals over the simplex
/// `t₁+t₂+t₃ = 1` (with `tⱼ = |ξⱼ|²`, phases integrated out). Composite
/// Simpson in collapsed coordinates on the triangle.
#[test]
fn sphere_moments_match_simplex_quadrature() {
    let n = 400;
    let h = 1.0 / n as f64;
    let simpson = |i: usize| -> f64 {
        if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        }
    };
    for a in [[0u32, 0, 0], [1, 0, 0], [2, 1, 0], [1, 1, 1], [3, 0, 2]] {
        let mut acc = 0.0;
        for i in 0..=n {
            let u = i as f64 * h;
            for j in 0..=n {
                let v = j as f64 * h;
                // t₁ = u, t₂ = (1−u)v, t₃ = (1−u)(1−v), Jacobian 1−u
                let t1 = u;
                let t2 = (1.0 - u) * v;
                let t3 = (1.0 - u) * (1.0 - v);
                let f =
                    t1.powi(a[0] as i32) * t2.powi(a[1] as i32) * t3.powi(a[2] as i32) * (1.0 - u);
                acc += simpson(i) * simpson(j) * f;
            }
        }
        acc *= h * h / 9.0;
        let exact = sphere_monomial_integral(a, a);
        let exact = schwinger_core::scalar::rational_to_f64(&exact);
        assert!((acc - exact).abs() < 1e-9, "{a:?}: {acc} vs {exact}");
    }
}

#[test]
fn cross_bidegree_traceless_orthogonal() {
    let chans: Vec<Polynomial> = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (2, 2)]
        .iter()
        .map(|&(p, q)| {
            let f = Monomial::of_bidegree(p, q)
                .into_iter()
                .enumerate()
                .fold(Polynomial::zero(), |acc, (i, m)| {
                    &acc + &Polynomial::term(m, Scalar::from_int(i as i64 % 5 - 2))
                });
            traceless_project(&f).unwrap()
        })
        .collect();
    for (i, a) in chans.iter().enumerate() {
        for (j, b) in chans.iter().enumerate() {
            if i != j {
                let v = sphere_inner_direct(
                    &SphereFunction::new(a.clone()),
                    &SphereFunction::new(b.clone()),
                )
                .unwrap();
                assert!(v.is_zero());
            }
        }
    }
    // a non-traceless function does overlap across channels
    let one = SphereFunction::new(Polynomial::one());
    let r2 = SphereFunction::new(Polynomial::zw());
    assert_eq!(
        sphere_inner_direct(&one, &r2).unwrap(),
        Scalar::from_rational(frac(1, 2))
    );
}
