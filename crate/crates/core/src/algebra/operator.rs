//! Formal linear combinations of normal-ordered boson words.
//!
//! A word is `∏ⱼ (c†ⱼ)^{nⱼ} ∏ⱼ (cⱼ)^{mⱼ}` with every creation operator to the
//! left. On Bargmann polynomials it acts by first differentiating `mⱼ` times in
//! each variable, then multiplying by the monomial of creation exponents.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::factorial::{binomial, factorial, falling};
use crate::poly::{ComplexPoly, Mode, Monomial, Polynomial};
use crate::scalar::{ComplexScalar, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub create: [u32; 6],
    pub annihilate: [u32; 6],
}

impl Word {
    pub const IDENTITY: Word = Word {
        create: [0; 6],
        annihilate: [0; 6],
    };

    pub fn creation(mode: Mode) -> Word {
        let mut w = Word::IDENTITY;
        w.create[mode.index()] = 1;
        w
    }

    pub fn annihilation(mode: Mode) -> Word {
        let mut w = Word::IDENTITY;
        w.annihilate[mode.index()] = 1;
        w
    }

    /// Action on a single monomial: `None` if some derivative kills it.
    pub fn apply_monomial(&self, m: &Monomial) -> Option<(Monomial, BigInt)> {
        let mut exps = *m.exps();
        let mut coeff = BigInt::from(1);
        for i in 0..6 {
            let k = self.annihilate[i];
            if exps[i] < k {
                return None;
            }
            if k > 0 {
                coeff *= falling(exps[i], k);
            }
            exps[i] = exps[i] - k + self.create[i];
        }
        Some((Monomial::new(exps), coeff))
    }

    /// Normal-ordered expansion of `self · other`.
    ///
    /// Per mode, `c^k (c†)^l = Σᵢ C(k,i) C(l,i) i! (c†)^{l−i} c^{k−i}`; modes
    /// commute, so the full product is the Cartesian product over modes.
    pub fn compose(&self, other: &Word) -> Vec<(Word, BigInt)> {
        let mut acc: Vec<(Word, BigInt)> = alloc::vec![(
            Word {
                create: self.create,
                annihilate: other.annihilate,
            },
            BigInt::from(1)
        )];
        for i in 0..6 {
            let k = self.annihilate[i];
            let l = other.create[i];
            let mut next = Vec::with_capacity(acc.len() * (k.min(l) as usize + 1));
            for (w, c) in &acc {
                for contractions in 0..=k.min(l) {
                    let weight = binomial(k, contractions)
                        * binomial(l, contractions)
                        * factorial(contractions);
                    let mut nw = *w;
                    nw.create[i] += l - contractions;
                    nw.annihilate[i] += k - contractions;
                    next.push((nw, c * weight));
                }
            }
            acc = next;
        }
        acc
    }
}

/// Linear combination of [`Word`]s with complex Q(√3) coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct OperatorExpr {
    terms: BTreeMap<Word, ComplexScalar>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::word(Word::IDENTITY, ComplexScalar::one())
    }

    pub fn word(w: Word, c: ComplexScalar) -> Self {
        let mut e = Self::zero();
        e.add_word(w, &c);
        e
    }

    /// `c†_i c_j`, the bilinear building block of every generator here.
    pub fn bilinear(create: Mode, annihilate: Mode, c: ComplexScalar) -> Self {
        let mut w = Word::creation(create);
        w.annihilate[annihilate.index()] += 1;
        Self::word(w, c)
    }

    pub fn creation(mode: Mode) -> Self {
        Self::word(Word::creation(mode), ComplexScalar::one())
    }

    pub fn annihilation(mode: Mode) -> Self {
        Self::word(Word::annihilation(mode), ComplexScalar::one())
    }

    pub fn scalar(c: ComplexScalar) -> Self {
        Self::word(Word::IDENTITY, c)
    }

    pub fn add_word(&mut self, w: Word, c: &ComplexScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ComplexScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &ComplexScalar) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_word(*w, &(v * c));
        }
        out
    }

    pub fn scale_real(&self, c: &Scalar) -> Self {
        self.scale(&ComplexScalar::real(c.clone()))
    }

    /// Symbolic product `self · other`, normal ordered.
    pub fn compose(&self, other: &OperatorExpr) -> OperatorExpr {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let c = c1 * c2;
                for (w, k) in w1.compose(w2) {
                    let kk = Scalar::from_rational(BigRational::from_integer(k));
                    out.add_word(w, &c.scale(&kk));
                }
            }
        }
        out
    }

    /// Symbolic commutator `[self, other]`.
    pub fn commutator(&self, other: &OperatorExpr) -> OperatorExpr {
        &self.compose(other) - &other.compose(self)
    }

    /// Formal adjoint: swaps creation and annihilation and conjugates
    /// coefficients, then re-normal-orders.
    pub fn adjoint(&self) -> OperatorExpr {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            // (c†^n c^m)† = c†^m c^n, already normal ordered
            let adj = Word {
                create: w.annihilate,
                annihilate: w.create,
            };
            out.add_word(adj, &c.conj());
        }
        out
    }

    pub fn pow(&self, n: u32) -> OperatorExpr {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// Action on a real polynomial. Imaginary coefficients populate the
    /// imaginary part of the result.
    pub fn apply(&self, f: &Polynomial) -> ComplexPoly {
        let mut re = Polynomial::zero();
        let mut im = Polynomial::zero();
        for (m, c) in f.terms() {
            for (w, k) in &self.terms {
                if let Some((mm, factor)) = w.apply_monomial(m) {
                    let base = c.scale_rational(&BigRational::from_integer(factor));
                    if !k.re.is_zero() {
                        re.add_term(mm, &(&base * &k.re));
                    }
                    if !k.im.is_zero() {
                        im.add_term(mm, &(&base * &k.im));
                    }
                }
            }
        }
        ComplexPoly { re, im }
    }

    pub fn apply_complex(&self, f: &ComplexPoly) -> ComplexPoly {
        let r = self.apply(&f.re);
        let i = self.apply(&f.im);
        // O(P + iQ) = O(P) + i·O(Q)
        ComplexPoly {
            re: &r.re - &i.im,
            im: &r.im + &i.re,
        }
    }

    /// Action when the result is known to be real; `None` otherwise.
    pub fn apply_real(&self, f: &Polynomial) -> Option<Polynomial> {
        let r = self.apply(f);
        r.is_real().then_some(r.re)
    }
}

impl fmt::Debug for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in w.create.iter().enumerate() {
                for _ in 0..e {
                    write!(f, " {}†", NAMES[i])?;
                }
            }
            for (i, &e) in w.annihilate.iter().enumerate() {
                for _ in 0..e {
                    write!(f, " {}", NAMES[i])?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: &'a OperatorExpr) -> OperatorExpr {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_word(*w, c);
        }
        out
    }
}

impl Add for OperatorExpr {
    type Output = OperatorExpr;
    fn add(self, rhs: OperatorExpr) -> OperatorExpr {
        &self + &rhs
    }
}

impl<'a> Sub<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: &'a OperatorExpr) -> OperatorExpr {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_word(*w, &-c);
        }
        out
    }
}

impl Sub for OperatorExpr {
    type Output = OperatorExpr;
    fn sub(self, rhs: OperatorExpr) -> OperatorExpr {
        &self - &rhs
    }
}

impl Neg for &OperatorExpr {
    type Output = OperatorExpr;
    fn neg(self) -> OperatorExpr {
        self.scale(&ComplexScalar::real(Scalar::from_int(-1)))
    }
}

impl<'a> Mul<&'a OperatorExpr> for &'a OperatorExpr {
    type Output = OperatorExpr;
    fn mul(self, rhs: &'a OperatorExpr) -> OperatorExpr {
        self.compose(rhs)
    }
}

/// A monomial on which a checked relation fails, with the residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub monomial: Monomial,
    pub residual: ComplexPoly,
}

/// Applies `[X, Y] − Z` to every monomial of total degree `≤ basis_degree`,
/// evaluating `XY` and `YX` by successive application (not by symbolic
/// composition). Returns the nonzero residuals; empty means verified.
pub fn commutator_defect(
    x: &OperatorExpr,
    y: &OperatorExpr,
    z_expected: &OperatorExpr,
    basis_degree: u32,
) -> Vec<Defect> {
    Monomial::up_to_degree(basis_degree)
        .into_iter()
        .filter_map(|m| {
            let f = Polynomial::monomial(m);
            let xy = x.apply_complex(&y.apply(&f));
            let yx = y.apply_complex(&x.apply(&f));
            let z = z_expected.apply(&f);
            let residual = &(&xy - &yx) - &z;
            (!residual.is_zero()).then_some(Defect {
                monomial: m,
                residual,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(j: usize) -> OperatorExpr {
        OperatorExpr::annihilation(Mode::new(j).unwrap())
    }
    fn ad(j: usize) -> OperatorExpr {
        OperatorExpr::creation(Mode::new(j).unwrap())
    }

    #[test]
    fn canonical_commutation_symbolic() {
        for j in 1..=6 {
            for k in 1..=6 {
                let c = a(j).commutator(&ad(k));
                if j == k {
                    assert_eq!(c, OperatorExpr::identity());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn canonical_commutation_applied() {
        for j in 1..=6 {
            let d = commutator_defect(&a(j), &ad(j), &OperatorExpr::identity(), 4);
            assert!(d.is_empty());
            let d = commutator_defect(&a(j), &ad(j % 6 + 1), &OperatorExpr::zero(), 4);
            assert!(d.is_empty());
        }
    }

    #[test]
    fn symbolic_product_matches_sequential_application() {
        // (a1 a1† a2†)(a2 a1 + a1†) on a few monomials
        let x = &a(1).compose(&ad(1)).compose(&ad(2)) + &ad(4);
        let y = &a(2).compose(&a(1)) + &ad(1);
        let xy = x.compose(&y);
        for m in Monomial::up_to_degree(3) {
            let f = Polynomial::monomial(m);
            assert_eq!(xy.apply(&f), x.apply_complex(&y.apply(&f)));
        }
    }

    #[test]
    fn adjoint_swaps_ladders() {
        let x = ad(1).compose(&a(2));
        assert_eq!(x.adjoint(), ad(2).compose(&a(1)));
        let i = OperatorExpr::scalar(ComplexScalar::i());
        assert_eq!(
            i.adjoint(),
            i.scale(&ComplexScalar::real(Scalar::from_int(-1)))
        );
    }

    #[test]
    fn imaginary_coefficients_go_to_imaginary_part() {
        let op = OperatorExpr::scalar(ComplexScalar::i());
        let f = Polynomial::var(Mode::A1);
        let r = op.apply(&f);
        assert!(r.re.is_zero());
        assert_eq!(r.im, f);
        assert_eq!(op.apply_complex(&r).re, -&f, "i·i = −1 on the real part");
    }
}
