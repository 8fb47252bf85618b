use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 24;

/// Dense exponent vector with a cached total degree.
///
/// Slots beyond the ring's variable count are always zero, so derived
/// equality and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
        }
    }

    pub fn var(index: usize, power: u16) -> Self {
        let mut m = Self::one();
        m.exps[index] = power;
        m.degree = power as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.degree = self.degree - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..MAX_VARS {
            r.exps[i] += other.exps[i];
        }
        r.degree += other.degree;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        for i in 0..MAX_VARS {
            r.exps[i] -= self.exps[i];
        }
        r.degree -= self.degree;
        r
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = Self::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].max(other.exps[i]);
        }
        r.degree = r.exps.iter().map(|&e| e as u32).sum();
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = Self::one();
        for i in 0..MAX_VARS {
            r.exps[i] = self.exps[i].min(other.exps[i]);
        }
        r.degree = r.exps.iter().map(|&e| e as u32).sum();
        r
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut r = *self;
        for e in r.exps.iter_mut() {
            *e *= k;
        }
        r.degree *= k as u32;
        r
    }

    /// Total degree restricted to variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Supported monomial orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Graded reverse lexicographic inside each block, with the first `k`
    /// variables eliminated: any monomial involving them exceeds every
    /// monomial free of them.
    Elimination(usize),
}

impl MonomialOrder {
    /// Compares two monomials in a ring with `nvars` variables.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps[..nvars].cmp(&b.exps[..nvars]),
            MonomialOrder::GrevLex => grevlex(a, b, 0..nvars, a.degree, b.degree),
            MonomialOrder::Elimination(k) => {
                let k = k.min(nvars);
                let (da, db) = (a.partial_degree(0..k), b.partial_degree(0..k));
                grevlex(a, b, 0..k, da, db).then_with(|| {
                    grevlex(a, b, k..nvars, a.degree - da, b.degree - db)
                })
            }
        }
    }
}

#[inline]
fn grevlex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>, da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in range.rev() {
                match a.exps[i].cmp(&b.exps[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing variable wins
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}
