//! Sparse exact polynomials in the six oscillator variables.
//!
//! The same exponent vector serves three readings: Fock occupation numbers
//! `(a₁,a₂,a₃,b₁,b₂,b₃)`, Bargmann variables `(z₁,z₂,z₃,w₁,w₂,w₃)`, and sphere
//! coordinates `(ξ₁,ξ₂,ξ₃,ξ*₁,ξ*₂,ξ*₃)`. Creation operators act by multiplying
//! with a variable, annihilation operators by differentiating.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::factorial::{factorial, falling};
use crate::scalar::Scalar;

/// One of the six oscillator modes. Modes 1..3 are the `a`/`z` triplet,
/// 4..6 the `b`/`w` triplet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode(u8);

impl Mode {
    pub const A1: Mode = Mode(0);
    pub const A2: Mode = Mode(1);
    pub const A3: Mode = Mode(2);
    pub const B1: Mode = Mode(3);
    pub const B2: Mode = Mode(4);
    pub const B3: Mode = Mode(5);

    pub const ALL: [Mode; 6] = [Mode::A1, Mode::A2, Mode::A3, Mode::B1, Mode::B2, Mode::B3];

    /// Mode from its 1-based label.
    pub fn new(label: usize) -> Result<Mode> {
        if (1..=6).contains(&label) {
            Ok(Mode((label - 1) as u8))
        } else {
            Err(Error::Argument(alloc::format!(
                "mode index {label} outside 1..=6"
            )))
        }
    }

    /// `z_j` (equivalently `a_j`), `j` in 1..=3.
    pub fn z(j: usize) -> Mode {
        assert!((1..=3).contains(&j), "z index {j} outside 1..=3");
        Mode((j - 1) as u8)
    }

    /// `w_j` (equivalently `b_j`), `j` in 1..=3.
    pub fn w(j: usize) -> Mode {
        assert!((1..=3).contains(&j), "w index {j} outside 1..=3");
        Mode((j + 2) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn label(self) -> usize {
        self.0 as usize + 1
    }
}

/// Exponent vector over the six modes, ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; 6]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 6]);

    pub fn new(exps: [u32; 6]) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32; 6] {
        &self.0
    }

    pub fn exp(&self, mode: Mode) -> u32 {
        self.0[mode.index()]
    }

    pub fn z_degree(&self) -> u32 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn w_degree(&self) -> u32 {
        self.0[3] + self.0[4] + self.0[5]
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.z_degree(), self.w_degree())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn holo(&self) -> [u32; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn anti(&self) -> [u32; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    pub fn from_parts(holo: [u32; 3], anti: [u32; 3]) -> Self {
        Monomial([holo[0], holo[1], holo[2], anti[0], anti[1], anti[2]])
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn raised(&self, mode: Mode, by: u32) -> Monomial {
        let mut e = self.0;
        e[mode.index()] += by;
        Monomial(e)
    }

    /// `∏ exps_i!`: the squared Bargmann norm of this monomial.
    pub fn factorial_weight(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &e| acc * factorial(e))
    }

    /// All monomials of bidegree `(p, q)`, in ascending order.
    pub fn of_bidegree(p: u32, q: u32) -> Vec<Monomial> {
        let zs = compositions3(p);
        let ws = compositions3(q);
        let mut out = Vec::with_capacity(zs.len() * ws.len());
        for h in &zs {
            for a in &ws {
                out.push(Monomial::from_parts(*h, *a));
            }
        }
        out.sort();
        out
    }

    /// All monomials of total degree at most `d`.
    pub fn up_to_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for total in 0..=d {
            for p in 0..=total {
                out.extend(Monomial::of_bidegree(p, total - p));
            }
        }
        out
    }
}

/// Exponent triples summing to `n`.
pub fn compositions3(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=(n - a)).rev() {
            out.push([a, b, n - a - b]);
        }
    }
    out
}

/// Finite linear combination of monomials with Q(√3) coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Scalar::one())
    }

    pub fn var(mode: Mode) -> Self {
        Polynomial::monomial(Monomial::ONE.raised(mode, 1))
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    /// The invariant `z·w = z₁w₁ + z₂w₂ + z₃w₃` (the Sp(2,R) raising operator K₊).
    pub fn zw() -> Self {
        let mut p = Polynomial::zero();
        for j in 1..=3 {
            p.add_term(
                Monomial::ONE.raised(Mode::z(j), 1).raised(Mode::w(j), 1),
                &Scalar::one(),
            );
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// True when every coefficient lies in Q.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(Scalar::is_rational)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Polynomial {
        self.scale(&Scalar::from_rational(c.clone()))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by the variable of `mode` (creation operator).
    pub fn mode_mul(&self, mode: Mode) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.raised(mode, 1), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative in the variable of `mode` (annihilation operator).
    pub fn mode_diff(&self, mode: Mode) -> Polynomial {
        self.mode_diff_n(mode, 1)
    }

    /// `n`-th partial derivative in one variable.
    pub fn mode_diff_n(&self, mode: Mode, n: u32) -> Polynomial {
        if n == 0 {
            return self.clone();
        }
        let i = mode.index();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e < n {
                continue;
            }
            let mut exps = m.0;
            exps[i] -= n;
            let factor = BigRational::from_integer(falling(e, n));
            out.insert(Monomial(exps), c.scale_rational(&factor));
        }
        Polynomial { terms: out }
    }

    /// Multiplication by `z·w` (K₊).
    pub fn mul_zw(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for j in 1..=3 {
                out.add_term(m.raised(Mode::z(j), 1).raised(Mode::w(j), 1), c);
            }
        }
        out
    }

    /// The contraction `Σⱼ ∂²/∂zⱼ∂wⱼ` (K₋, the analytic trace).
    pub fn contract(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for j in 0..3 {
                let (ez, ew) = (m.0[j], m.0[j + 3]);
                if ez == 0 || ew == 0 {
                    continue;
                }
                let mut exps = m.0;
                exps[j] -= 1;
                exps[j + 3] -= 1;
                let f = BigRational::from_integer(BigInt::from(ez) * BigInt::from(ew));
                out.add_term(Monomial(exps), &c.scale_rational(&f));
            }
        }
        out
    }

    /// Bargmann inner product `⟨self, other⟩`.
    ///
    /// Monomials are orthogonal with squared norm `∏ exps!`, which is the
    /// exact value of the Gaussian integral defining the Bargmann space.
    /// Coefficients are real, so conjugation of `self` is the identity.
    pub fn bargmann_inner(&self, other: &Polynomial) -> Scalar {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (m, c) in &small.terms {
            if let Some(d) = large.terms.get(m) {
                let w = BigRational::from_integer(m.factorial_weight());
                acc += &(c * d).scale_rational(&w);
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Scalar {
        self.bargmann_inner(self)
    }

    /// Partition into bihomogeneous components keyed by `(z-degree, w-degree)`.
    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), Polynomial> {
        let mut out: BTreeMap<(u32, u32), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    /// The common bidegree of all terms; `Ok(None)` for the zero polynomial.
    pub fn bidegree(&self) -> Result<Option<(u32, u32)>> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.all(|b| b == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotBihomogeneous)
        }
    }

    /// Division by `z·w` with respect to the lexicographic monomial order.
    ///
    /// Returns `(quotient, remainder)`. A single polynomial is a Gröbner basis
    /// of the ideal it generates, so the remainder vanishes exactly when
    /// `z·w` divides `self`.
    pub fn div_rem_zw(&self) -> (Polynomial, Polynomial) {
        let zw = Polynomial::zw();
        let mut f = self.clone();
        let mut quot = Polynomial::zero();
        let mut rem = Polynomial::zero();
        while let Some((m, c)) = f.terms.pop_last() {
            if m.0[0] >= 1 && m.0[3] >= 1 {
                let mut e = m.0;
                e[0] -= 1;
                e[3] -= 1;
                let qm = Monomial(e);
                quot.add_term(qm, &c);
                // f -= c·qm·(z·w), whose leading term cancels the popped term
                for j in 1..=3 {
                    if j == 1 {
                        continue;
                    }
                    let mm = qm.raised(Mode::z(j), 1).raised(Mode::w(j), 1);
                    f.add_term(mm, &-&c);
                }
            } else {
                rem.add_term(m, &c);
            }
        }
        debug_assert!({
            let back = &(&quot * &zw) + &rem;
            back == *self
        });
        (quot, rem)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["z1", "z2", "z3", "w1", "w2", "w3"];
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", NAMES[i])?,
                    _ => write!(f, "*{}^{}", NAMES[i], e)?,
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, &c);
        }
        self
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// A polynomial split into real and imaginary parts, for results of operators
/// with imaginary coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ComplexPoly {
    pub re: Polynomial,
    pub im: Polynomial,
}

impl ComplexPoly {
    pub fn real(re: Polynomial) -> Self {
        ComplexPoly {
            re,
            im: Polynomial::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &crate::scalar::ComplexScalar) -> ComplexPoly {
        // (a + ib)(P + iQ) = (aP − bQ) + i(aQ + bP)
        ComplexPoly {
            re: &self.re.scale(&c.re) - &self.im.scale(&c.im),
            im: &self.im.scale(&c.re) + &self.re.scale(&c.im),
        }
    }
}

impl<'a> Add<&'a ComplexPoly> for &'a ComplexPoly {
    type Output = ComplexPoly;
    fn add(self, rhs: &'a ComplexPoly) -> ComplexPoly {
        ComplexPoly {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a ComplexPoly> for &'a ComplexPoly {
    type Output = ComplexPoly;
    fn sub(self, rhs: &'a ComplexPoly) -> ComplexPoly {
        ComplexPoly {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn z(j: usize) -> Polynomial {
        Polynomial::var(Mode::z(j))
    }
    fn w(j: usize) -> Polynomial {
        Polynomial::var(Mode::w(j))
    }

    #[test]
    fn additive_inverse_is_zero() {
        let f = z(1);
        assert!((&f - &f).is_zero());
        assert!((&f + &-&f).is_zero());
    }

    #[test]
    fn monomial_product() {
        let p = &(&z(1) * &w(1)) * &(&z(2) * &w(2));
        assert_eq!(p, Polynomial::monomial(Monomial([1, 1, 0, 1, 1, 0])));
    }

    #[test]
    fn scale_by_surd() {
        let c = Scalar::surd_only(frac(1, 3));
        let p = z(1).scale(&c);
        let (_, coeff) = p.terms().next().unwrap();
        assert_eq!(coeff.surd(), frac(1, 3));
        assert_eq!(coeff.rat(), &int(0));
    }

    #[test]
    fn mode_mul_examples() {
        assert_eq!(Polynomial::one().mode_mul(Mode::A1), z(1));
        assert_eq!(z(1).mode_mul(Mode::B1), &z(1) * &w(1));
        assert_eq!(z(3).pow(2).mode_mul(Mode::A3), z(3).pow(3));
    }

    #[test]
    fn mode_diff_examples() {
        assert_eq!(
            z(1).pow(2).mode_diff(Mode::A1),
            z(1).scale(&Scalar::from_int(2))
        );
        assert!(w(1).mode_diff(Mode::A1).is_zero());
    }

    #[test]
    fn bargmann_examples() {
        assert_eq!(z(1).pow(2).norm_sq(), Scalar::from_int(2));
        assert!(z(1).bargmann_inner(&w(1)).is_zero());
        let m = &(&z(1) * &z(2)) * &w(1);
        assert_eq!(m.norm_sq(), Scalar::from_int(1));
    }

    /// Gaussian moment ∫ |z|^{2n} e^{-|z|²} d²z/π = n!, evaluated in polar
    /// coordinates as ∫₀^∞ t^n e^{-t} dt by Simpson's rule.
    fn radial_moment(n: i32) -> f64 {
        let (a, b, steps) = (0.0f64, 60.0f64, 60_000);
        let h = (b - a) / steps as f64;
        let g = |t: f64| t.powi(n) * (-t).exp();
        let mut s = g(a) + g(b);
        for i in 1..steps {
            let t = a + i as f64 * h;
            s += if i % 2 == 1 { 4.0 } else { 2.0 } * g(t);
        }
        s * h / 3.0
    }

    #[test]
    fn bargmann_norm_matches_radial_quadrature() {
        // ⟨z₁², z₁²⟩ = ∫|z₁|⁴ e^{-|z₁|²} = 2
        assert!((radial_moment(2) - 2.0).abs() < 1e-9);
        for n in 0..6u32 {
            let exact = z(2).pow(n).norm_sq().to_f64();
            assert!((exact - radial_moment(n as i32)).abs() < 1e-8 * exact.max(1.0));
        }
    }

    #[test]
    fn bidegree_split_examples() {
        let f = &z(1) + &(&(&z(1) * &z(2)) * &w(3));
        let parts = f.bidegree_split();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(1, 0)], z(1));
        assert_eq!(parts[&(2, 1)], &(&z(1) * &z(2)) * &w(3));
        assert!(Polynomial::zero().bidegree_split().is_empty());
        let zw = Polynomial::zw();
        let parts = zw.bidegree_split();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&(1, 1)], zw);
    }

    #[test]
    fn contraction_of_zw_is_three() {
        assert_eq!(
            Polynomial::zw().contract(),
            Polynomial::constant(Scalar::from_int(3))
        );
        assert_eq!(Polynomial::one().mul_zw(), Polynomial::zw());
    }

    #[test]
    fn division_by_zw() {
        let g = &(&z(2) * &w(3)) + &z(1).pow(2);
        let f = &Polynomial::zw() * &g;
        let (q, r) = f.div_rem_zw();
        assert_eq!(q, g);
        assert!(r.is_zero());
        let (_, r) = (&z(1) * &w(1)).div_rem_zw();
        assert!(!r.is_zero());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(Monomial::of_bidegree(2, 3).len(), 6 * 10);
        // C(6+D, 6) monomials of degree ≤ D
        assert_eq!(Monomial::up_to_degree(4).len(), 210);
        assert_eq!(Monomial::up_to_degree(6).len(), 924);
    }

    #[test]
    fn mode_labels() {
        assert_eq!(Mode::new(4).unwrap(), Mode::B1);
        assert!(Mode::new(0).is_err());
        assert!(Mode::new(7).is_err());
    }
}
