//! Pencils on curves: ramification via the Wronskian of a binary pencil and
//! branch values of covers `F(y; s, t) = 0` of the line.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::polyring::{gcd, interpolate, squarefree_part, Monomial, Polynomial, Ring, RingRef, UniPoly};

/// Coefficients `c_i` of `s^(d-i) t^i`, `i = 0..=d`.
fn binary_coeffs<F: Field>(f: &Polynomial<F>, d: u32) -> Vec<F> {
    let mut v = vec![F::zero(); d as usize + 1];
    for (m, c) in f.terms() {
        v[m.exp(1) as usize] = c.clone();
    }
    v
}

fn binary_from_coeffs<F: Field>(ring: &RingRef, c: &[F]) -> Polynomial<F> {
    let d = c.len() - 1;
    Polynomial::from_terms(
        ring,
        c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (Monomial::from_exponents(&[(d - i) as u16, i as u16]), x.clone()))
            .collect(),
    )
}

fn check_binary<F: Field>(f: &Polynomial<F>) -> Result<u32> {
    if f.ring().nvars() != 2 {
        return Err(Error::Invalid(format!("binary form expected, got a polynomial in {} variables", f.ring().nvars())));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree()
}

/// Squarefree decomposition of a binary form: `(factor, multiplicity)`.
pub fn binary_squarefree<F: Field>(f: &Polynomial<F>) -> Result<Vec<(Polynomial<F>, usize)>> {
    let d = check_binary(f)?;
    let ring = f.ring().clone();
    let c = binary_coeffs(f, d);
    // f(s, 1) = Σ c_i s^(d-i)
    let uni = UniPoly::new(c.iter().rev().cloned().collect());
    let affine = uni.degree().unwrap_or(0);
    let mut out: Vec<(Polynomial<F>, usize)> = uni
        .squarefree_decomposition()
        .into_iter()
        .map(|(p, k)| {
            let e = p.degree().unwrap();
            let coeffs: Vec<F> = (0..=e).map(|i| p.coeffs()[e - i].clone()).collect();
            (binary_from_coeffs(&ring, &coeffs), k)
        })
        .collect();
    let at_infinity = d as usize - affine;
    if at_infinity > 0 {
        out.push((Polynomial::var(&ring, 1), at_infinity));
    }
    out.sort_by_key(|(_, k)| *k);
    Ok(out)
}

/// Roots of a binary form in the field, as normalized points, and the
/// number of roots (with multiplicity one each) outside the field.
pub fn binary_roots<F: Field>(f: &Polynomial<F>) -> Result<(Vec<Vec<F>>, u64)> {
    check_binary(f)?;
    let sf = squarefree_part(f)?;
    let e = sf.total_degree().unwrap();
    let c = binary_coeffs(&sf, e);
    let uni = UniPoly::new(c.iter().rev().cloned().collect());
    let mut pts: Vec<Vec<F>> = uni.roots().into_iter().map(|r| vec![r, F::one()]).collect();
    if uni.degree().unwrap_or(0) < e as usize {
        pts.push(vec![F::one(), F::zero()]);
    }
    let unresolved = e as u64 - pts.len() as u64;
    Ok((pts, unresolved))
}

/// Sylvester resultant of two binary forms given by coefficient vectors.
fn binary_resultant<F: Field>(a: &[F], b: &[F]) -> F {
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    if n == 0 {
        return F::one();
    }
    let mut m = vec![vec![F::zero(); n]; n];
    for i in 0..db {
        for (j, c) in a.iter().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    linalg::determinant(&m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchValue<F: Field> {
    pub value: Vec<F>,
    /// Multiplicities of the points of the fibre, decreasing.
    pub profile: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct BranchLocus<F: Field> {
    /// Reduced binary form in `[u, v]` vanishing at the branch values.
    pub form: Polynomial<F>,
    pub values: Vec<BranchValue<F>>,
    /// Branch values not defined over the field.
    pub unresolved: u64,
    /// Number of distinct branch values.
    pub codegree: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationPoint<F: Field> {
    pub point: Vec<F>,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub struct WronskianReport<F: Field> {
    pub degree: u32,
    pub wronskian: Polynomial<F>,
    pub ramification: Vec<RamificationPoint<F>>,
    pub unresolved_ramification: u64,
    pub branch: BranchLocus<F>,
}

fn profile_of<F: Field>(fibre: &Polynomial<F>) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = Vec::new();
    for (g, k) in binary_squarefree(fibre)? {
        for _ in 0..g.total_degree().unwrap() {
            p.push(k);
        }
    }
    p.sort_unstable_by(|a, b| b.cmp(a));
    Ok(p)
}

fn branch_ring() -> RingRef {
    Ring::grevlex(&["u", "v"]).expect("valid names")
}

/// Branch data of the map `P^1 -> P^1`, `p -> (f(p) : g(p))`. The
/// ramification divisor is the Wronskian `f_s g_t - f_t g_s`; for each of its
/// squarefree factors `W_k` the branch values are the zeros of the resultant
/// of `W_k` and `v f - u g`.
pub fn wronskian_branch<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<WronskianReport<F>> {
    let d = check_binary(f)?;
    if check_binary(g)? != d || d == 0 {
        return Err(Error::Invalid("the forms must have the same positive degree".into()));
    }
    if g.ring() != f.ring() {
        return Err(Error::RingMismatch {
            left: f.ring().to_string(),
            right: g.ring().to_string(),
        });
    }
    let w = &(&f.derivative(0) * &g.derivative(1)) - &(&f.derivative(1) * &g.derivative(0));
    if w.is_zero() {
        return Err(Error::Invalid("the forms are proportional".into()));
    }
    if !gcd(f, g).is_constant() {
        return Err(Error::BasePoints {
            witness: gcd(f, g).monic().to_string(),
        });
    }
    let fc = binary_coeffs(f, d);
    let gc = binary_coeffs(g, d);
    let br = branch_ring();
    let mut form = Polynomial::one(&br);
    let mut ramification = Vec::new();
    let mut unresolved_ramification = 0;
    for (wk, k) in binary_squarefree(&w)? {
        let dk = wk.total_degree().unwrap();
        let wc = binary_coeffs(&wk, dk);
        let xs: Vec<F> = (0..=dk as i64).map(F::from_i64).collect();
        let ys: Vec<F> = xs
            .iter()
            .map(|u| {
                let fib: Vec<F> = fc.iter().zip(&gc).map(|(a, b)| a.clone() - u.clone() * b.clone()).collect();
                binary_resultant(&wc, &fib)
            })
            .collect();
        let p = interpolate(&xs, &ys);
        let mut terms = Vec::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(&[i as u16, (dk as usize - i) as u16]), c.clone()));
            }
        }
        form = &form * &Polynomial::from_terms(&br, terms);
        let (pts, un) = binary_roots(&wk)?;
        unresolved_ramification += un;
        ramification.extend(pts.into_iter().map(|point| RamificationPoint { point, index: k + 1 }));
    }
    ramification.sort_by_key(|r| format!("{:?}", r.point));
    let form = squarefree_part(&form)?.monic();
    let (values, unresolved) = binary_roots(&form)?;
    let values = values
        .into_iter()
        .map(|value| {
            let fib = &f.scale(&value[1]) - &g.scale(&value[0]);
            Ok(BranchValue {
                profile: profile_of(&fib)?,
                value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WronskianReport {
        degree: d,
        wronskian: w,
        ramification,
        unresolved_ramification,
        branch: BranchLocus {
            codegree: form.total_degree().unwrap() as u64,
            form,
            values,
            unresolved,
        },
    })
}

/// Branch values of the cover `F(y; s, t) = 0` of the line with coordinates
/// `(s : t)`: the reduced discriminant of `F` with respect to `y`.
pub fn cover_branch<F: Field>(cover: &Polynomial<F>, y: usize) -> Result<BranchLocus<F>> {
    let ring = cover.ring().clone();
    if ring.nvars() != 3 {
        return Err(Error::Invalid("a cover is given in three variables".into()));
    }
    let n = cover.degree_in(y).unwrap_or(0) as usize;
    if n < 2 {
        return Err(Error::Invalid("the cover must have degree at least 2 in y".into()));
    }
    let rest: Vec<usize> = (0..3).filter(|&i| i != y).collect();
    let base = Ring::grevlex(&[ring.name(rest[0]), ring.name(rest[1])])?;
    let coeffs_of = |p: &Polynomial<F>, deg: usize| -> Result<Vec<Polynomial<F>>> {
        let mut c = vec![Polynomial::zero(&base); deg + 1];
        for (m, a) in p.terms() {
            let e = m.exp(y) as usize;
            let mono = Monomial::from_exponents(&[m.exp(rest[0]), m.exp(rest[1])]);
            c[deg - e] = &c[deg - e] + &Polynomial::monomial(&base, mono, a.clone());
        }
        Ok(c)
    };
    let a = coeffs_of(cover, n)?;
    let b = coeffs_of(&cover.derivative(y), n - 1)?;
    let size = 2 * n - 1;
    let mut m = vec![vec![Polynomial::zero(&base); size]; size];
    for i in 0..n - 1 {
        for (j, c) in a.iter().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in b.iter().enumerate() {
            m[n - 1 + i][i + j] = c.clone();
        }
    }
    let disc = linalg::poly_determinant(&base, &m);
    if disc.is_zero() {
        return Err(Error::Invalid("the cover is not reduced".into()));
    }
    let br = branch_ring();
    let form = squarefree_part(&disc)?.monic().map_ring(&br, &[Some(0), Some(1)])?;
    check_binary(&form)?;
    let (values, unresolved) = binary_roots(&form)?;
    let yr = Ring::grevlex(&[ring.name(y)])?;
    let values = values
        .into_iter()
        .map(|value| {
            let mut at = vec![(rest[0], value[0].clone()), (rest[1], value[1].clone())];
            at.sort_by_key(|(i, _)| *i);
            let fib = cover.specialize(&at).map_by_name(&yr)?;
            let uni = UniPoly::from_polynomial(&fib, 0).expect("univariate fibre");
            let mut profile: Vec<usize> = Vec::new();
            for (p, k) in uni.squarefree_decomposition() {
                profile.extend(std::iter::repeat_n(k, p.degree().unwrap()));
            }
            let missing = n - uni.degree().unwrap_or(0);
            if missing > 0 {
                profile.push(missing);
            }
            profile.sort_unstable_by(|a, b| b.cmp(a));
            Ok(BranchValue { value, profile })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchLocus {
        codegree: form.total_degree().unwrap() as u64,
        form,
        values,
        unresolved,
    })
}

/// Projection of the rational normal curve of degree `r` from a general
/// `P^(r-2)` inside the osculating hyperplane at `(1:0)` containing its
/// intersection with the osculating `P^(r-2)` at `(0:1)`. In coordinates
/// `x_i = s^(r-i) t^i` that centre is spanned by `e_2, .., e_(r-1)` and a
/// random point `(a_0 : a_1 : 0 : .. : 0)`, so the projection is the pencil
/// `<a_1 x_0 - a_0 x_1, x_r>`. Redrawn until the ramification profile is
/// `(r), (r-1, 1), (2, 1, ..)`.
pub fn rnc_projection_pencil<F: Field>(
    ring: &RingRef,
    r: u32,
    seed: u64,
) -> Result<(Polynomial<F>, Polynomial<F>, WronskianReport<F>)> {
    if r < 3 {
        return Err(Error::Invalid("the construction needs r >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mono = |i: u32| Polynomial::monomial(ring, Monomial::from_exponents(&[(r - i) as u16, i as u16]), F::one());
    for _ in 0..10 {
        let a0 = F::random(&mut rng);
        let a1 = F::random(&mut rng);
        let f = &mono(0).scale(&a1) - &mono(1).scale(&a0);
        let g = mono(r);
        let Ok(rep) = wronskian_branch(&f, &g) else { continue };
        let mut profiles: Vec<Vec<usize>> = rep.branch.values.iter().map(|v| v.profile.clone()).collect();
        profiles.sort();
        let ones = |k: usize| vec![1; k];
        let mut expect = vec![
            vec![r as usize],
            [vec![r as usize - 1], ones(1)].concat(),
            [vec![2], ones(r as usize - 2)].concat(),
        ];
        expect.sort();
        if rep.branch.unresolved == 0 && profiles == expect {
            return Ok((f, g, rep));
        }
    }
    Err(Error::Unsupported("no general projection centre found in 10 draws".into()))
}
