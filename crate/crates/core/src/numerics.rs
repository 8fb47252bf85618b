//! Closed-form invariants: Chern numbers of first jet bundles, intersection
//! arithmetic on ruled surfaces, genus and class formulas, and the scans
//! behind the codegree-two exclusion.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Numerical data of a polarized surface `(S, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceNumerics {
    /// Topological Euler characteristic `e(S)`.
    pub e: i64,
    pub k2: i64,
    pub kl: i64,
    pub l2: i64,
    pub q: i64,
    /// Sectional genus `g(L)`.
    pub g: i64,
    pub chi: Option<i64>,
}

impl SurfaceNumerics {
    /// Checks the genus formula `2g - 2 = (K + L)L` and, when `χ(O_S)` is
    /// given, Noether's formula `12χ = K^2 + e`.
    pub fn new(e: i64, k2: i64, kl: i64, l2: i64, q: i64, g: i64, chi: Option<i64>) -> Result<Self> {
        if 2 * g - 2 != kl + l2 {
            return Err(Error::Invalid(format!(
                "genus formula fails: 2g-2 = {} but (K+L)L = {}",
                2 * g - 2,
                kl + l2
            )));
        }
        if let Some(c) = chi {
            if 12 * c != k2 + e {
                return Err(Error::Invalid(format!("Noether formula fails: 12χ = {} but K²+e = {}", 12 * c, k2 + e)));
            }
        }
        Ok(SurfaceNumerics { e, k2, kl, l2, q, g, chi })
    }

    /// Parses `key: value` lines with keys `e`, `K2`, `KL`, `L2`, `q`, `g`
    /// and optional `chi`. A missing `g` is computed from the genus formula.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vals: BTreeMap<&str, i64> = BTreeMap::new();
        for (n, line) in crate::ideals::content_lines(text) {
            let (k, v) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: n,
                column: 1,
                message: "expected `key: value`".into(),
            })?;
            let key = k.trim();
            if !matches!(key, "e" | "K2" | "KL" | "L2" | "q" | "g" | "chi") {
                return Err(Error::Parse {
                    line: n,
                    column: 1,
                    message: format!("unknown key `{key}`"),
                });
            }
            let val = v.trim().parse::<i64>().map_err(|_| Error::Parse {
                line: n,
                column: k.len() + 2,
                message: format!("expected an integer, found `{}`", v.trim()),
            })?;
            vals.insert(key, val);
        }
        let get = |k: &str| {
            vals.get(k)
                .copied()
                .ok_or_else(|| Error::Invalid(format!("missing key `{k}`")))
        };
        let (kl, l2) = (get("KL")?, get("L2")?);
        let g = match vals.get("g") {
            Some(&g) => g,
            None if (kl + l2) % 2 == 0 => (kl + l2) / 2 + 1,
            None => return Err(Error::Invalid("(K+L)L is odd".into())),
        };
        SurfaceNumerics::new(
            get("e")?,
            get("K2")?,
            kl,
            l2,
            vals.get("q").copied().unwrap_or(0),
            g,
            vals.get("chi").copied(),
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "e: {}\nK2: {}\nKL: {}\nL2: {}\nq: {}\ng: {}\n",
            self.e, self.k2, self.kl, self.l2, self.q, self.g
        );
        if let Some(c) = self.chi {
            s.push_str(&format!("chi: {c}\n"));
        }
        s
    }
}

/// `c_2(J_1(L)) = e(S) + 2 K·L + 3 L^2`.
pub fn c2_jet_surface(s: &SurfaceNumerics) -> i64 {
    s.e + 2 * s.kl + 3 * s.l2
}

/// `c_n(J_1(O(m)))` on `P^n`, equal to `(n+1)(m-1)^n`.
pub fn cn_jet_pn(n: u32, m: u32) -> u64 {
    assert!(n >= 1 && m >= 1);
    (n as u64 + 1) * (m as u64 - 1).pow(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicJet {
    pub c2: i64,
    /// Class `bd(bd-1)` of the branch curve.
    pub class: i64,
    /// Multiplier `c_2 / class`.
    pub multiplier: i64,
}

/// Cyclic `d`-fold cover of the plane branched along a smooth curve of
/// degree `bd`, polarized by the pullback of a line.
pub fn c2_jet_cyclic(d: i64, b: i64) -> CyclicJet {
    assert!(d >= 2 && b >= 1);
    let class = b * d * (b * d - 1);
    CyclicJet {
        c2: (d - 1) * class,
        class,
        multiplier: d - 1,
    }
}

/// Divisor class `a C_0 + b f` on a ruled surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuledClass {
    pub a: i64,
    pub b: i64,
}

impl RuledClass {
    pub fn new(a: i64, b: i64) -> Self {
        RuledClass { a, b }
    }
}

impl fmt::Display for RuledClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}C0{:+}f", self.a, self.b)
    }
}

/// `P^1`-bundle over a curve of genus `g` with invariant `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuledSurface {
    pub e: i64,
    pub g: i64,
}

impl RuledSurface {
    pub fn new(e: i64, g: i64) -> Self {
        RuledSurface { e, g }
    }

    /// `C_0^2 = -e`, `C_0·f = 1`, `f^2 = 0`.
    pub fn dot(&self, x: RuledClass, y: RuledClass) -> i64 {
        -x.a * y.a * self.e + x.a * y.b + x.b * y.a
    }

    /// `K = -2 C_0 + (2g - 2 - e) f`.
    pub fn canonical(&self) -> RuledClass {
        RuledClass::new(-2, 2 * self.g - 2 - self.e)
    }

    /// Sectional genus of `L` from `2g(L) - 2 = (K + L)L`; `None` on odd
    /// parity.
    pub fn sectional_genus(&self, l: RuledClass) -> Option<i64> {
        let k = self.canonical();
        let v = self.dot(RuledClass::new(k.a + l.a, k.b + l.b), l);
        (v % 2 == 0).then_some(v / 2 + 1)
    }

    /// Numerics of `(S, L)`: `e(S) = 4(1 - g)`, `K^2 = 8(1 - g)`.
    pub fn numerics(&self, l: RuledClass) -> Result<SurfaceNumerics> {
        let k = self.canonical();
        let gl = self
            .sectional_genus(l)
            .ok_or_else(|| Error::Invalid("odd (K+L)L".into()))?;
        SurfaceNumerics::new(
            4 * (1 - self.g),
            self.dot(k, k),
            self.dot(k, l),
            self.dot(l, l),
            self.g,
            gl,
            Some(1 - self.g),
        )
    }
}

pub fn ruled_dot(surface: RuledSurface, x: RuledClass, y: RuledClass) -> i64 {
    surface.dot(x, y)
}

pub fn ruled_canonical(g: i64, e: i64) -> RuledClass {
    RuledSurface::new(e, g).canonical()
}

/// Degree of the dual of a plane curve of degree `d` and geometric genus
/// `g` with only cusps and nodes among its singularities: `2(d + g - 1)`.
pub fn dual_degree_plane_curve(d: i64, g: i64) -> i64 {
    assert!(d >= 2 && g >= 0);
    2 * (d + g - 1)
}

/// A degree `d` cover of `P^1` by a curve with a single branch point of
/// ramification `m` would need `2g - 2 = -2d + (d - m)`, which has no
/// solution `g >= 0`.
pub fn single_branch_impossible(d: i64, m: i64) -> bool {
    assert!(d >= 2 && (1..=d).contains(&m));
    let rhs = -d - m + 2;
    !(rhs >= 0 && rhs % 2 == 0)
}

/// Families allowed by the codegree-two inequality on `P^1`-bundles over
/// `P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CodegreeTwoFamily {
    /// `a = 2`, any `e`.
    QuadricFibres,
    /// `e = 0`, `a = b = 3`.
    E0A3B3,
    /// `e = 1`, `a = 3`.
    E1A3,
}

impl CodegreeTwoFamily {
    pub fn of(e: i64, a: i64, b: i64) -> Option<Self> {
        match (e, a, b) {
            (_, 2, _) => Some(CodegreeTwoFamily::QuadricFibres),
            (0, 3, 3) => Some(CodegreeTwoFamily::E0A3B3),
            (1, 3, _) => Some(CodegreeTwoFamily::E1A3),
            _ => None,
        }
    }
}

/// The inequality `4 + 2ae - 4a - 4b + 6ab - 3a²e <= 4ab - 2a²e - 2`.
pub fn codegree_two_inequality(e: i64, a: i64, b: i64) -> bool {
    4 + 2 * a * e - 4 * a - 4 * b + 6 * a * b - 3 * a * a * e <= 4 * a * b - 2 * a * a * e - 2
}

/// Enumerates `a >= 2`, `e >= 0`, `b >= ae + 1` satisfying the inequality.
/// For `e = 0` and `a >= 3` the two rulings of `P^1 x P^1` are identified by
/// requiring `a <= b`.
pub fn scan_codegree_two(e_max: i64, a_max: i64, b_max: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for e in 0..=e_max {
        for a in 2..=a_max {
            for b in a * e + 1..=b_max {
                if e == 0 && a >= 3 && a > b {
                    continue;
                }
                if codegree_two_inequality(e, a, b) {
                    out.push((e, a, b));
                }
            }
        }
    }
    out
}

/// `c_n = Σ m_i d_i` and `Σ d_i <= c_n` for components of degree `d_i`
/// whose general member has Milnor sum `m_i`.
pub fn codegree_identity_check(components: &[(i64, i64)], cn: i64) -> bool {
    assert!(components.iter().all(|&(d, m)| d >= 1 && m >= 1));
    let weighted: i64 = components.iter().map(|(d, m)| d * m).sum();
    let plain: i64 = components.iter().map(|(d, _)| d).sum();
    weighted == cn && plain <= cn
}

/// Tame codegree: `codeg = c_n`.
pub fn tame_check(codeg: i64, cn: i64) -> bool {
    codeg == cn
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarchionnaVerdict {
    /// `codeg > deg φ_V(S)`.
    Pass,
    /// Equality, as for scrolls.
    Equality { scroll_consistent: bool },
    /// The exceptional pair `(P^2, O(2))`.
    Exception,
    Fail,
}

/// Compares the codegree with the degree of the image.
pub fn marchionna_check(codeg: i64, deg_image: i64, is_p2_o2: bool, is_scroll: bool) -> MarchionnaVerdict {
    if is_p2_o2 {
        MarchionnaVerdict::Exception
    } else if codeg > deg_image {
        MarchionnaVerdict::Pass
    } else if codeg == deg_image {
        MarchionnaVerdict::Equality {
            scroll_consistent: is_scroll,
        }
    } else {
        MarchionnaVerdict::Fail
    }
}

impl MarchionnaVerdict {
    pub fn passes(&self) -> bool {
        !matches!(self, MarchionnaVerdict::Fail)
    }
}

/// Stratum `X_i` of one factor: its dimension and number of components of
/// that dimension (`dim = -1` when empty).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumData {
    pub dim: i64,
    pub components: u64,
}

impl StratumData {
    pub const EMPTY: StratumData = StratumData { dim: -1, components: 0 };

    pub fn new(dim: i64, components: u64) -> Self {
        StratumData { dim, components }
    }
}

/// Strata of a Segre product: a point `(x_1, .., x_r)` with `x_j` in
/// `X_{i_j}` jumps by `Σ i_j`. Entry `k` is the stratum of index exactly
/// `k`.
pub fn product_jumping_profile(profiles: &[Vec<StratumData>]) -> Vec<StratumData> {
    assert!(profiles.len() >= 2, "a product needs at least two factors");
    let mut acc: Vec<StratumData> = vec![StratumData::new(0, 1)];
    for p in profiles {
        let mut next = vec![StratumData::EMPTY; acc.len() + p.len() - 1];
        for (i, x) in acc.iter().enumerate() {
            for (j, y) in p.iter().enumerate() {
                if x.dim < 0 || y.dim < 0 {
                    continue;
                }
                let cand = StratumData::new(x.dim + y.dim, x.components * y.components);
                let slot = &mut next[i + j];
                if cand.dim > slot.dim {
                    *slot = cand;
                } else if cand.dim == slot.dim {
                    slot.components += cand.components;
                }
            }
        }
        acc = next;
    }
    while acc.last().is_some_and(|s| s.dim < 0) {
        acc.pop();
    }
    acc
}

/// `J_k` of the product: the union of the strata of index `>= k`.
pub fn product_jumping_set(profile: &[StratumData], k: usize) -> StratumData {
    let mut best = StratumData::EMPTY;
    for s in profile.iter().skip(k) {
        if s.dim > best.dim {
            best = *s;
        } else if s.dim == best.dim && s.dim >= 0 {
            best.components += s.components;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jet_numbers() {
        let dp = SurfaceNumerics::new(11, 1, -2, 4, 0, 2, Some(1)).unwrap();
        assert_eq!(c2_jet_surface(&dp), 19);
        assert_eq!(cn_jet_pn(2, 2), 3);
        assert_eq!(cn_jet_pn(2, 3), 12);
        assert_eq!(cn_jet_pn(3, 1), 0);
        assert_eq!(c2_jet_cyclic(3, 1), CyclicJet { c2: 12, class: 6, multiplier: 2 });
    }

    #[test]
    fn ruled_arithmetic() {
        let s = RuledSurface::new(-1, 1);
        let l = RuledClass::new(2, 0);
        assert_eq!(s.dot(s.canonical(), l), -2);
        assert_eq!(s.dot(l, l), 4);
        let p1 = RuledSurface::new(3, 0);
        assert_eq!(p1.dot(RuledClass::new(1, 0), RuledClass::new(1, 0)), -3);
        for b in 4..10 {
            assert_eq!(p1.dot(RuledClass::new(2, b), RuledClass::new(2, b)), 4 * (b - 3));
        }
    }

    #[test]
    fn parse_numerics() {
        let s = SurfaceNumerics::parse("# double cone\ne: 11\nK2: 1\nKL: -2\nL2: 4\nchi: 1\n").unwrap();
        assert_eq!(s.g, 2);
        assert_eq!(SurfaceNumerics::parse(&s.to_text()).unwrap(), s);
        assert!(SurfaceNumerics::parse("e: 1\nK2: 1\nKL: -2\nL2: 3\n").is_err());
        assert!(SurfaceNumerics::parse("e: x\n").is_err());
    }

    #[test]
    fn codegree_two_boundary_points() {
        assert!(codegree_two_inequality(0, 2, 1));
        assert!(!(9..80).any(|b| codegree_two_inequality(2, 4, b)));
        let s = scan_codegree_two(5, 6, 40);
        assert!(s.contains(&(0, 3, 3)) && s.contains(&(1, 3, 4)));
    }

    #[test]
    fn segre_profiles() {
        // a pencil on a curve with 6 ramification points times P^1
        let curve = vec![StratumData::new(1, 1), StratumData::new(0, 6)];
        let line = vec![StratumData::new(1, 1)];
        let p = product_jumping_profile(&[curve.clone(), line]);
        assert_eq!(p[1], StratumData::new(1, 6));
        let two = product_jumping_profile(&[curve.clone(), vec![StratumData::new(1, 1), StratumData::new(0, 4)]]);
        assert_eq!(two[2], StratumData::new(0, 24));
        assert_eq!(product_jumping_set(&two, 1), StratumData::new(1, 10));
    }
}
