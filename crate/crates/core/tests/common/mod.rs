//! Random inputs and invariant checks shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use discloci::duality::{discriminant, dual_variety, milnor, LinearSystem};
use discloci::ideals::Ideal;
use discloci::numerics::cn_jet_pn;
use discloci::{Field, Gf32003, Monomial, Polynomial, Ring, RingRef};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type F = Gf32003;

/// Property cases per suite.
pub const CASES: u32 = 256;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn ring(names: &[&str]) -> RingRef {
    Ring::grevlex(names).unwrap()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn exponents(n: usize, d: u16) -> Vec<Vec<u16>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn from_coeffs(ring: &RingRef, monos: &[Vec<u16>], coeffs: &[i64]) -> Polynomial<F> {
    let terms = monos
        .iter()
        .zip(coeffs)
        .map(|(e, c)| (Monomial::from_exponents(e), F::from_i64(*c)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Homogeneous form of degree `d` with at most `terms` random terms.
pub fn form(ring: RingRef, d: u16, terms: usize) -> BoxedStrategy<Polynomial<F>> {
    let monos = exponents(ring.nvars(), d);
    let k = monos.len();
    proptest::collection::vec((0..k, -20i64..=20), 1..=terms)
        .prop_map(move |picks| {
            let (idx, cs): (Vec<usize>, Vec<i64>) = picks.into_iter().unzip();
            let chosen: Vec<Vec<u16>> = idx.iter().map(|&i| monos[i].clone()).collect();
            from_coeffs(&ring, &chosen, &cs)
        })
        .boxed()
}

/// Polynomial of degree at most `d`.
pub fn poly(ring: RingRef, d: u16, terms: usize) -> BoxedStrategy<Polynomial<F>> {
    let monos: Vec<Vec<u16>> = (0..=d).flat_map(|k| exponents(ring.nvars(), k)).collect();
    let k = monos.len();
    proptest::collection::vec((0..k, -20i64..=20), 0..=terms)
        .prop_map(move |picks| {
            let (idx, cs): (Vec<usize>, Vec<i64>) = picks.into_iter().unzip();
            let chosen: Vec<Vec<u16>> = idx.iter().map(|&i| monos[i].clone()).collect();
            from_coeffs(&ring, &chosen, &cs)
        })
        .boxed()
}

/// Linear systems on `P^1` and `P^2`: dense random ones, monomial curves
/// (which may have cusps) and the plane nets with special jumping behaviour
/// under a random change of coordinates.
pub fn system() -> BoxedStrategy<LinearSystem<F>> {
    let line = (2u16..=4, 2usize..=3, proptest::collection::vec(-9i64..=9, 15))
        .prop_map(|(d, count, cs)| {
            let r = ring(&["s", "t"]);
            let monos = exponents(2, d);
            let k = monos.len();
            let sections: Vec<Polynomial<F>> = (0..count).map(|j| from_coeffs(&r, &monos, &cs[j * k..(j + 1) * k])).collect();
            text(&r, &sections)
        });
    let monomial = (3u16..=5, 1u16..=4).prop_map(|(d, k)| {
        let k = k.min(d - 1);
        format!("ring: [s, t]\nsection: s^{d}\nsection: s^{}*t^{k}\nsection: t^{d}\n", d - k)
    });
    let nets = (0usize..5, proptest::collection::vec(-9i64..=9, 9)).prop_map(|(which, m)| {
        let base = [
            "section: x^2\nsection: y^2\nsection: z^2\n",
            "section: x^2\nsection: y^2\nsection: z^2 + 2*x*y\n",
            "section: 2*x*z + y^2\nsection: 2*y*z\nsection: -x^2 - 2*y^2 + z^2 + 2*x*z\n",
            "section: x^3\nsection: y^3\nsection: z^3\n",
            "section: z^2\nsection: x^2\nsection: 2*x*y\nsection: y^2\n",
        ][which];
        let r = ring(&["x", "y", "z"]);
        let sys = LinearSystem::<F>::parse(&format!("ring: [x, y, z]\n{base}")).unwrap();
        let mat: Vec<Vec<F>> = (0..3).map(|i| (0..3).map(|j| F::from_i64(m[3 * i + j])).collect()).collect();
        match sys.transformed(&mat) {
            Ok(t) => text(&r, t.sections()),
            Err(_) => format!("ring: [x, y, z]\n{base}"),
        }
    });
    prop_oneof![line, monomial, nets]
        .prop_filter_map("base points or dependent sections", |t| {
            let sys = LinearSystem::<F>::parse(&t).ok()?;
            sys.ensure_base_point_free().ok()?;
            Some(sys)
        })
        .boxed()
}

fn text(r: &RingRef, sections: &[Polynomial<F>]) -> String {
    let mut t = format!("ring: [{}]\n", r.names().join(", "));
    for s in sections {
        t.push_str(&format!("section: {s}\n"));
    }
    t
}

pub fn check_groebner_determinism(gens: Vec<Polynomial<F>>) -> Result<(), TestCaseError> {
    prop_assume!(gens.iter().any(|g| !g.is_zero()));
    let r = gens[0].ring().clone();
    let a = Ideal::from_generators(&r, gens.clone());
    let mut shuffled: Vec<Polynomial<F>> = gens.iter().rev().map(|g| g.scale(&F::from_i64(-3))).collect();
    shuffled.push(&gens[0] + &gens[gens.len() - 1]);
    let b = Ideal::from_generators(&r, shuffled);
    let again = Ideal::from_generators(&r, gens.clone());
    prop_assert_eq!(a.groebner().elements(), again.groebner().elements());
    prop_assert_eq!(a.groebner().elements(), b.groebner().elements());
    for g in &gens {
        prop_assert!(a.member(g));
    }
    Ok(())
}

pub fn check_euler(f: Polynomial<F>) -> Result<(), TestCaseError> {
    prop_assume!(!f.is_zero());
    let d = f.homogeneous_degree().unwrap();
    let r = f.ring().clone();
    let mut acc = Polynomial::zero(&r);
    for i in 0..r.nvars() {
        acc = &acc + &(&Polynomial::var(&r, i) * &f.derivative(i));
    }
    prop_assert_eq!(acc, f.scale(&F::from_i64(d as i64)));
    Ok(())
}

pub fn check_leibniz(f: Polynomial<F>, g: Polynomial<F>) -> Result<(), TestCaseError> {
    let fg = &f * &g;
    for i in 0..f.ring().nvars() {
        let rhs = &(&f.derivative(i) * &g) + &(&f * &g.derivative(i));
        prop_assert_eq!(fg.derivative(i), rhs);
    }
    Ok(())
}

pub fn check_saturation(a: Polynomial<F>, b: Polynomial<F>, h: Polynomial<F>) -> Result<(), TestCaseError> {
    prop_assume!(!h.is_zero() && !(a.is_zero() && b.is_zero()));
    let r = a.ring().clone();
    let i = Ideal::from_generators(&r, vec![a.clone(), b.clone()]);
    let s = i.saturate(&h).unwrap();
    prop_assert!(i.is_subset_of(&s), "I is contained in I : h^inf");
    prop_assert!(s.saturate(&h).unwrap().equals(&s), "saturation is idempotent");
    let with_h = i.with_generators(std::slice::from_ref(&h));
    prop_assert!(with_h.saturate(&h).unwrap().is_unit(), "saturating by a member gives the unit ideal");
    // I : (h g)^inf = (I : h^inf) : g^inf
    let g = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
    let lhs = i.saturate(&(&h * &g)).unwrap();
    let rhs = s.saturate(&g).unwrap();
    prop_assert!(lhs.equals(&rhs), "product rule");
    Ok(())
}

/// Bertini, the lower bound on the codegree and the jet-class bound
/// `c_n >= codeg`.
pub fn check_codegree_bounds(sys: LinearSystem<F>) -> Result<(), TestCaseError> {
    let rep = discriminant(&sys).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(rep.defect >= 0, "defect {}", rep.defect);
    prop_assert!(rep.dimension < sys.big_n() as i64);
    if sys.degree() >= 2 {
        prop_assert!(rep.codegree >= 2, "codegree {}", rep.codegree);
    }
    let cn = cn_jet_pn(sys.dim() as u32, sys.degree());
    prop_assert!(cn >= rep.codegree, "c_n = {cn} < codegree {}", rep.codegree);
    Ok(())
}

/// A hyperplane component exists exactly when `J_n` is nonempty.
pub fn check_hyperplane_law(sys: LinearSystem<F>) -> Result<(), TestCaseError> {
    let rep = discriminant(&sys).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let j = rep.jumping.as_ref().unwrap();
    let jn = !j.get(sys.dim()).empty;
    let h = rep.hyperplanes.as_ref().unwrap();
    let has = !h.forms.is_empty() || h.unresolved > 0;
    prop_assert_eq!(jn, has, "J_n nonempty = {}, hyperplanes = {}", jn, has);
    if let Some(eq) = &rep.equation {
        for f in &h.forms {
            prop_assert!(eq.div_exact(f).is_some(), "hyperplane divides the discriminant");
        }
    }
    Ok(())
}

/// Image of `P^1` under three binary forms, as an ideal in the dual-named
/// coordinates of the target.
fn image_ideal(sys: &LinearSystem<F>, names: &[&str]) -> Ideal<F> {
    let mut all: Vec<&str> = vec!["s", "t"];
    all.extend(names);
    let big = Ring::new(&all, discloci::MonomialOrder::Elimination(2)).unwrap();
    let gens: Vec<Polynomial<F>> = sys
        .sections()
        .iter()
        .enumerate()
        .map(|(j, s)| &Polynomial::var(&big, 2 + j) - &s.map_by_name(&big).unwrap())
        .collect();
    let e = Ideal::from_generators(&big, gens).eliminate(2);
    e.map_by_name(&ring(names)).unwrap()
}

/// When `J_1` is empty and the image is a proper subvariety, the
/// discriminant is the dual of the image.
pub fn check_immersion_law(d: u16, cs: Vec<i64>) -> Result<(), TestCaseError> {
    let r = ring(&["s", "t"]);
    let monos = exponents(2, d);
    let k = monos.len();
    let sections: Vec<Polynomial<F>> = (0..3).map(|j| from_coeffs(&r, &monos, &cs[j * k..(j + 1) * k])).collect();
    let Ok(sys) = LinearSystem::new(&r, discloci::duality::Source::Projective, sections, None) else {
        return Err(TestCaseError::reject("dependent"));
    };
    prop_assume!(sys.ensure_base_point_free().is_ok());
    let rep = discriminant(&sys).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assume!(rep.jumping.as_ref().unwrap().get(1).empty);
    let names: Vec<String> = sys.dual_names().to_vec();
    let image = image_ideal(&sys, &["y0", "y1", "y2"]);
    prop_assume!(!image.is_zero());
    let dual = dual_variety(&image, Some(&names)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let dr = sys.dual_ring();
    let lhs = rep.locus.ideal(&dr);
    let rhs = dual.locus.ideal(&dual.ring).map_by_name(&dr).unwrap();
    prop_assert!(lhs.radical_equals(&rhs), "discriminant {:?} vs dual {:?}", rep.equation, dual.locus.equation());
    Ok(())
}

/// `μ = 1` exactly when the quadratic part is nondegenerate.
pub fn check_morse(q: [i64; 3], higher: Polynomial<F>) -> Result<(), TestCaseError> {
    let r = higher.ring().clone();
    let x = Polynomial::var(&r, 0);
    let y = Polynomial::var(&r, 1);
    let quad = &(&(&x * &x).scale(&F::from_i64(q[0])) + &(&x * &y).scale(&F::from_i64(q[1])))
        + &(&y * &y).scale(&F::from_i64(q[2]));
    let f = &quad + &higher;
    let hess = F::from_i64(4 * q[0] * q[2] - q[1] * q[1]);
    let mu = milnor(&f).milnor;
    if hess.is_zero() {
        prop_assert!(mu != Some(1), "degenerate quadratic part but mu = 1");
    } else {
        prop_assert_eq!(mu, Some(1));
    }
    Ok(())
}
