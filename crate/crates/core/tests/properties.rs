use proptest::prelude::*;

use eulerob_core::behrend::{
    intersection_with_zero_section, kiem_li_localized, lagrangify, project, split_cone, BehrendData,
};
use eulerob_core::constructible::{
    eu_transform, inverse_transform, weighted_chi, weighted_chi_level_sets, weighted_chi_on, ConstructibleFunction,
    Cycle, EuEntry, EuMatrix, Provenance, StratifiedSpace, StratumSpec,
};
use eulerob_core::error::Error;
use eulerob_core::euler::{eu_at_point, eu_detailed, multiplicity_at};
use eulerob_core::gcd::is_squarefree;
use eulerob_core::groebner::{groebner_basis, is_groebner_basis, is_reduced, normal_form, s_polynomial};
use eulerob_core::ideal::{dimension_and_degree, saturate, Ideal};
use eulerob_core::nash::{gauss_graph, segre_fiber, Options};
use eulerob_core::poly::{parse_affine, q, Context, Monomial};
use eulerob_core::sample::{apply_matrix, change_coordinates, Sampler};
use eulerob_core::{Budget, MonomialOrder, Polynomial, Q};

fn small_budget() -> Budget {
    Budget::with_steps(200_000)
}

fn xyz() -> std::sync::Arc<Context> {
    Context::affine(&["x", "y", "z"]).unwrap()
}

fn in_vars(s: &str, vars: &[&str]) -> Polynomial {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    parse_affine(s, Some(&vars)).unwrap()
}

fn pt(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn arb_poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, 3), -5i64..=5), 1..=max_terms).prop_map(|terms| {
        let ctx = xyz();
        let terms = terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), q(c))).collect();
        Polynomial::from_terms(&ctx, terms)
    })
}

fn arb_order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::GrevLex), Just(MonomialOrder::Lex)]
}

/// Rebuilds the stratum list of `space`, so it can be edited.
fn specs_of(space: &StratifiedSpace) -> Vec<StratumSpec> {
    (0..space.len())
        .map(|i| {
            let s = space.stratum(i);
            let covers: Vec<&str> = space.covers(i).iter().map(|&j| space.stratum(j).name.as_str()).collect();
            StratumSpec::new(&s.name, s.dim, s.chi, s.fixed, &covers)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn buchberger_certificate(gens in prop::collection::vec(arb_poly(3, 2), 1..=3), ord in arb_order()) {
        let ctx = xyz();
        let gb = match groebner_basis(&ctx, &gens, &ord, &small_budget()) {
            Ok((gb, _)) => gb,
            Err(Error::ResourceLimit(_)) => return Err(TestCaseError::reject("budget")),
            Err(e) => panic!("{e}"),
        };
        prop_assert!(is_groebner_basis(&gb, &ord));
        prop_assert!(is_reduced(&gb, &ord));
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                prop_assert!(normal_form(&s_polynomial(&gb[i], &gb[j], &ord), &gb, &ord).is_zero());
            }
        }
        for g in &gens {
            prop_assert!(normal_form(g, &gb, &ord).is_zero());
        }
    }

    #[test]
    fn normal_form_is_linear(gens in prop::collection::vec(arb_poly(3, 2), 1..=2), f in arb_poly(5, 3), g in arb_poly(5, 3), ord in arb_order()) {
        let ctx = xyz();
        let Ok((gb, _)) = groebner_basis(&ctx, &gens, &ord, &small_budget()) else {
            return Err(TestCaseError::reject("budget"));
        };
        let lhs = normal_form(&(&f + &g), &gb, &ord);
        let rhs = &normal_form(&f, &gb, &ord) + &normal_form(&g, &gb, &ord);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn saturation_is_idempotent(gens in prop::collection::vec(arb_poly(3, 2), 1..=2), by in arb_poly(2, 1)) {
        prop_assume!(!by.is_zero());
        let ctx = xyz();
        let i = Ideal::new(&ctx, gens).unwrap();
        let j = Ideal::new(&ctx, vec![by]).unwrap();
        let once = match saturate(&i, &j, &small_budget()) {
            Ok(s) => s,
            Err(Error::ResourceLimit(_)) => return Err(TestCaseError::reject("budget")),
            Err(e) => panic!("{e}"),
        };
        let Ok(twice) = saturate(&once, &j, &small_budget()) else {
            return Err(TestCaseError::reject("budget"));
        };
        let a = once.basis(&MonomialOrder::GrevLex, &small_budget()).unwrap();
        let b = twice.basis(&MonomialOrder::GrevLex, &small_budget()).unwrap();
        prop_assert_eq!(&a.elements, &b.elements);
    }

    #[test]
    fn dimension_and_degree_under_coordinate_change(gens in prop::collection::vec(arb_poly(3, 2), 1..=2), seed in any::<u64>()) {
        let ctx = xyz();
        let i = Ideal::new(&ctx, gens.clone()).unwrap();
        let before = match dimension_and_degree(&i, &small_budget()) {
            Ok(v) => v,
            Err(Error::EmptyScheme) => return Ok(()),
            Err(_) => return Err(TestCaseError::reject("budget")),
        };
        let (a, _) = Sampler::new(seed).unimodular(3);
        let moved: Vec<Polynomial> = gens.iter().map(|g| change_coordinates(g, &a).unwrap()).collect();
        let Ok(after) = dimension_and_degree(&Ideal::new(&ctx, moved).unwrap(), &small_budget()) else {
            return Err(TestCaseError::reject("budget"));
        };
        prop_assert_eq!(before, after);
    }
}

/// Singular germs used by the invariance properties.
fn singular_germs() -> Vec<(Polynomial, Vec<Q>)> {
    vec![
        (in_vars("y^2 - x^3", &["x", "y"]), pt(&[0, 0])),
        (in_vars("x*y*(x - y)", &["x", "y"]), pt(&[0, 0])),
        (in_vars("(y - 1)^2 - (x + 2)^3", &["x", "y"]), pt(&[-2, 1])),
        (in_vars("x^2 + y^2 - z^2", &["x", "y", "z"]), pt(&[0, 0, 0])),
        (in_vars("y*u - x*v", &["x", "y", "u", "v"]), pt(&[0, 0, 0, 0])),
    ]
}

fn nonzero(t: i64) -> i64 {
    if t == 0 {
        7
    } else {
        t
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn generic_fiber_is_a_point(t in -6i64..=6, u in -6i64..=6, which in 0usize..4) {
        let t = nonzero(t);
        let (f, p) = match which {
            0 => (in_vars("y^2 - x^3", &["x", "y"]), pt(&[t * t, t * t * t])),
            1 => (in_vars("x*y*(x - y)", &["x", "y"]), pt(&[t, 0])),
            2 => (in_vars("x^2 + y^2 - z^2", &["x", "y", "z"]), pt(&[3 * t, 4 * t, 5 * t])),
            _ => (in_vars("y*u - x*v", &["x", "y", "u", "v"]), pt(&[t, u, t * u, u * u])),
        };
        let g = gauss_graph(&f, &Options::default().budget).unwrap();
        let s = segre_fiber(&g, &p, &Options::default()).unwrap();
        let mut want = vec![0; f.context().nvars()];
        want[0] = 1;
        prop_assert_eq!(s.0, want);
    }

    #[test]
    fn segre_and_eu_under_coordinate_change(seed in any::<u64>(), which in 0usize..5) {
        let (f, p) = singular_germs().swap_remove(which);
        let o = Options::default();
        let base = eu_detailed(&f, &p, &o).unwrap();
        let (a, inv) = Sampler::new(seed).unimodular(p.len());
        let g = change_coordinates(&f, &a).unwrap();
        let moved = eu_detailed(&g, &apply_matrix(&inv, &p), &o).unwrap();
        prop_assert_eq!(&moved.segre, &base.segre);
        prop_assert_eq!(moved.eu, base.eu);
    }

    #[test]
    fn segre_under_scaling(num in -9i64..=9, den in 1i64..=9, which in 0usize..5) {
        let (f, p) = singular_germs().swap_remove(which);
        let o = Options::default();
        let base = eu_detailed(&f, &p, &o).unwrap();
        let scaled = f.scale(&Q::new(nonzero(num).into(), den.into()));
        let r = eu_detailed(&scaled, &p, &o).unwrap();
        prop_assert_eq!(r.segre, base.segre);
    }

    #[test]
    fn seeds_agree_or_fail_loudly(seed in 0u64..1_000_000, which in 0usize..5) {
        let (f, p) = singular_germs().swap_remove(which);
        let base = eu_detailed(&f, &p, &Options::default()).unwrap();
        match eu_detailed(&f, &p, &Options { seed, ..Options::default() }) {
            Ok(r) => prop_assert_eq!(r.table.entries, base.table.entries),
            Err(e) => prop_assert!(matches!(e, Error::SeedInstability(_)), "{}", e),
        }
    }

    #[test]
    fn plane_curve_eu_is_multiplicity(slopes in prop::collection::btree_set(-4i64..=4, 1..=3), a in -3i64..=3, vertical in any::<bool>()) {
        // distinct lines through 0 plus a higher-order term
        let mut factors: Vec<String> = slopes.iter().map(|s| format!("(y - {s}*x)")).collect();
        if vertical {
            factors.push("x".into());
        }
        let k = factors.len();
        let f = in_vars(&format!("{} + {a}*x^{}", factors.join("*"), k + 1), &["x", "y"]);
        prop_assume!(is_squarefree(&f, &Budget::default()).unwrap());
        let m = multiplicity_at(&f, &pt(&[0, 0])).unwrap();
        prop_assert_eq!(m as usize, k);
        prop_assert_eq!(eu_at_point(&f, &pt(&[0, 0]), &Options::default()).unwrap(), i64::from(m));
    }

    #[test]
    fn eu_is_additive(s in -3i64..=3, t in -3i64..=3, a in 1i64..=3, b in 1i64..=3) {
        prop_assume!(s != t);
        let vars = ["x", "y"];
        let g = format!("y - {s}*x - {a}*x^2");
        let h = format!("y - {t}*x + {b}*x^3");
        let f = in_vars(&format!("({g})*({h})"), &vars);
        let o = Options::default();
        let p = pt(&[0, 0]);
        let whole = eu_at_point(&f, &p, &o).unwrap();
        let sum = eu_at_point(&in_vars(&g, &vars), &p, &o).unwrap() + eu_at_point(&in_vars(&h, &vars), &p, &o).unwrap();
        prop_assert_eq!(whole, sum);
    }

    #[test]
    fn cylinder_matches_the_curve(c in -5i64..=5, which in 0usize..3) {
        let curve = ["y^2 - x^3", "x*y", "y^3 - x^4"][which];
        let o = Options::default();
        let flat = eu_at_point(&in_vars(curve, &["x", "y"]), &pt(&[0, 0]), &o).unwrap();
        let cyl = eu_at_point(&in_vars(curve, &["x", "y", "z"]), &pt(&[0, 0, c]), &o).unwrap();
        prop_assert_eq!(flat, cyl);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eu_transform_round_trip(seed in any::<u64>(), bound in 1i64..=9) {
        let mut s = Sampler::new(seed);
        let space = s.space(6, false);
        let m = s.eu_matrix(&space);
        let c = s.cycle(&space, bound);
        let f = eu_transform(&space, &c, &m).unwrap();
        prop_assert_eq!(inverse_transform(&space, &f, &m).unwrap(), c);
    }

    #[test]
    fn weighted_chi_additive_and_consistent(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.space(6, false);
        let mut f = || ConstructibleFunction { values: (0..space.len()).map(|_| s.range(-5, 5)).collect::<Vec<i64>>() };
        let (a, b) = (f(), f());
        let sum = weighted_chi(&space, &a.add(&b)).unwrap();
        prop_assert_eq!(sum, weighted_chi(&space, &a).unwrap() + weighted_chi(&space, &b).unwrap());
        prop_assert_eq!(weighted_chi(&space, &a).unwrap(), weighted_chi_level_sets(&space, &a).unwrap());
    }

    #[test]
    fn transform_is_local_to_the_closure(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.space(6, false);
        let m = s.eu_matrix(&space);
        let z = s.range(0, space.len() as i64 - 1) as usize;
        let before = weighted_chi(&space, &eu_transform(&space, &Cycle::<i64>::prime(&space, z), &m).unwrap()).unwrap();
        // change everything outside the closure of z
        let inside = space.closure(z);
        let mut specs = specs_of(&space);
        for (i, spec) in specs.iter_mut().enumerate() {
            if !inside.contains(&i) {
                spec.chi = s.range(-9, 9);
            }
        }
        let other = StratifiedSpace::new(specs).unwrap();
        let mut entries = Vec::new();
        for on in 0..space.len() {
            for of in 0..space.len() {
                if on != of && space.leq(on, of) {
                    let value = if of == z { m.get(on, of) } else { s.range(-5, 5) };
                    entries.push(EuEntry { on, of, value, provenance: Provenance::Declared });
                }
            }
        }
        let m2 = EuMatrix::new(&other, &entries).unwrap();
        let after = weighted_chi(&other, &eu_transform(&other, &Cycle::<i64>::prime(&other, z), &m2).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn lagrangian_round_trip_and_key_diagram(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.space(6, false);
        let m = s.eu_matrix(&space);
        let c = s.cycle(&space, 9);
        let v = lagrangify(&space, &c);
        prop_assert_eq!(project(&space, &v), c.clone());
        let f = eu_transform(&space, &c, &m).unwrap();
        prop_assert_eq!(intersection_with_zero_section(&space, &m, &v).unwrap(), weighted_chi(&space, &f).unwrap());
    }

    #[test]
    fn cone_split_is_a_partition(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let space = s.space(6, true);
        let m = s.eu_matrix(&space);
        let cone = s.cone(&space);
        let bd = BehrendData::new(space, m, cone).unwrap();
        let fixed = bd.space.fixed_mask();
        let (c1, c2) = split_cone(&bd, &fixed).unwrap();
        prop_assert_eq!(c1.add(&c2), bd.canonical.clone());
        let r = kiem_li_localized(&bd, &fixed).unwrap();
        prop_assert_eq!(r.chi_f_nu1 + r.chi_f_nu2, weighted_chi_on(&bd.space, &bd.nu, &fixed).unwrap());
        prop_assert_eq!(r.chi_x_nu, r.chi_f_nu);
        prop_assert!(r.holds());
    }
}
