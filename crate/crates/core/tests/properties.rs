mod common;

use common::*;
use discloci::catalog::{self, FixtureKind};
use discloci::duality::{bidual_check, discriminant, pencil_verify, LinearSystem, Locus};
use discloci::ideals::parse_ideal;
use discloci::Error;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn groebner_basis_is_deterministic(gens in proptest::collection::vec(poly(ring(&["x", "y", "z"]), 3, 4), 1..=3)) {
        check_groebner_determinism(gens)?;
    }

    #[test]
    fn euler_identity(f in (0u16..=5).prop_flat_map(|d| form(ring(&["x", "y", "z"]), d, 6))) {
        check_euler(f)?;
    }

    #[test]
    fn leibniz_rule(f in poly(ring(&["x", "y", "z"]), 3, 5), g in poly(ring(&["x", "y", "z"]), 3, 5)) {
        check_leibniz(f, g)?;
    }

    #[test]
    fn saturation_laws(
        (a, b, h) in {
            let r = ring(&["x", "y", "z"]);
            (form(r.clone(), 2, 3), form(r.clone(), 2, 3), form(r, 1, 3))
        }
    ) {
        check_saturation(a, b, h)?;
    }

    #[test]
    fn bertini_and_codegree_bounds(sys in system()) {
        check_codegree_bounds(sys)?;
    }

    #[test]
    fn hyperplane_components_match_top_jumping_set(sys in system()) {
        check_hyperplane_law(sys)?;
    }

    #[test]
    fn immersions_have_dual_discriminant(d in 2u16..=3, cs in proptest::collection::vec(-9i64..=9, 12)) {
        check_immersion_law(d, cs)?;
    }

    #[test]
    fn milnor_one_iff_nondegenerate(q in proptest::array::uniform3(-3i64..=3), h in form(ring(&["x", "y"]), 3, 3)) {
        check_morse(q, h)?;
    }

    #[test]
    fn conics_and_cubics_are_their_own_bidual(f in (2u16..=3).prop_flat_map(|d| form(ring(&["x", "y", "z"]), d, 6))) {
        check_bidual(f)?;
    }

}

proptest! {
    // Dense quartics have degree-12 duals and cost seconds each. Sparse ones
    // are fast but mostly reducible, hence the reject budget.
    #![proptest_config(ProptestConfig { max_global_rejects: 8192, ..config() })]

    #[test]
    fn sparse_quartics_are_their_own_bidual(f in form(ring(&["x", "y", "z"]), 4, 4)) {
        check_bidual(f)?;
    }
}

fn check_bidual(f: discloci::Polynomial<F>) -> Result<(), TestCaseError> {
    match bidual_check(&f, 7) {
        Ok(b) => prop_assert!(b.holds, "bidual of {} is {}", f, b.bidual),
        // reducible, nonreduced or irreducibility not certified
        Err(Error::Invalid(_)) | Err(Error::Unsupported(_)) => return Err(TestCaseError::reject("not certified")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    }
    Ok(())
}

#[test]
fn dense_quartic_is_its_own_bidual() {
    let r = ring(&["x", "y", "z"]);
    let f = discloci::parse_polynomial::<F>(&r, "x^4 - 5*x^2*y*z + 3*y^3*z + 11*x*z^3 - y^4").unwrap();
    assert!(bidual_check(&f, 7).unwrap().holds);
}

fn symbolic_roster() -> Vec<(String, LinearSystem<F>)> {
    catalog::roster()
        .into_iter()
        .filter(|fx| fx.kind == FixtureKind::Symbolic)
        .map(|fx| (fx.id.clone(), LinearSystem::parse(&fx.body).unwrap()))
        .collect()
}

#[test]
fn roster_codegree_at_least_two_except_identity() {
    for (id, sys) in symbolic_roster() {
        let rep = discriminant(&sys).unwrap();
        if id == "identity-pn" {
            assert_eq!(rep.codegree, 0, "{id}");
        } else {
            assert!(rep.codegree >= 2, "{id}: codegree {}", rep.codegree);
        }
    }
}

#[test]
fn roster_pencil_identity() {
    let mut checked = 0;
    for (id, sys) in symbolic_roster() {
        if !sys.is_projective_space() || discriminant(&sys).unwrap().equation.is_none() {
            continue;
        }
        let p = pencil_verify(&sys, 11).unwrap_or_else(|e| panic!("{id}: {e}"));
        assert!(p.holds, "{id}: milnor sum {} vs c_n {}", p.milnor_sum, p.cn);
        assert_eq!(p.milnor_sum, p.scheme_total, "{id}");
        checked += 1;
    }
    assert!(checked >= 8, "only {checked} principal discriminants");
}

#[test]
fn roster_strata_cover_discriminant() {
    for (id, sys) in symbolic_roster() {
        let rep = discriminant(&sys).unwrap();
        // strata come from jumping sets, which exist on projective space only
        if rep.jumping.is_none() {
            continue;
        }
        let dr = sys.dual_ring();
        let d = rep.locus.ideal(&dr);
        let mut union: Option<Locus<F>> = None;
        for (i, s) in &rep.strata {
            assert!(d.radical_contains(&s.ideal(&dr)), "{id}: D_{i} not in D");
            union = Some(match union {
                None => s.clone(),
                Some(u) => u.union(s.clone(), &dr).unwrap(),
            });
        }
        match union {
            Some(u) => assert!(u.ideal(&dr).radical_equals(&d), "{id}: strata miss part of D"),
            None => assert!(rep.is_empty(), "{id}: no strata"),
        }
    }
}

#[test]
fn roster_plane_curves_are_their_own_bidual() {
    let mut checked = 0;
    for fx in catalog::roster().into_iter().filter(|fx| fx.kind == FixtureKind::Dual) {
        let x = parse_ideal::<F>(&fx.body).unwrap();
        let [f] = x.generators() else { continue };
        let deg = f.total_degree().unwrap_or(0);
        if f.ring().nvars() != 3 || !(2..=4).contains(&deg) {
            continue;
        }
        let b = bidual_check(f, 3).unwrap_or_else(|e| panic!("{}: {e}", fx.id));
        assert!(b.holds, "{}: bidual {}", fx.id, b.bidual);
        checked += 1;
    }
    assert!(checked >= 2, "only {checked} plane curves in the roster");
}
