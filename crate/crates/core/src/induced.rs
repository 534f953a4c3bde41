//! Functions on the unit sphere ξ†ξ = 1 in C³, the induced-representation
//! inner product, and the isometric map from the leading subspace H₀.
//!
//! A [`SphereFunction`] reuses [`Polynomial`]: modes 1–3 are ξ₁..ξ₃ and modes
//! 4–6 are ξ*₁..ξ*₃. The measure is `∏(d²ξⱼ/π) δ(ξ†ξ − 1)`, whose total
//! volume is 1/2.

use alloc::collections::BTreeMap;
use alloc::format;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::basis::h0_membership;
use crate::error::{Error, Result};
use crate::factorial::factorial_q;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// `∫ ∏ξⱼ^{aⱼ} (ξ*ⱼ)^{bⱼ}` over the sphere: zero unless `a = b`, else
/// `∏aⱼ! / (|a|+2)!`.
pub fn sphere_monomial_integral(holo: [u32; 3], anti: [u32; 3]) -> BigRational {
    if holo != anti {
        return BigRational::zero();
    }
    let total: u32 = holo.iter().sum();
    holo.iter()
        .map(|&a| factorial_q(a))
        .fold(BigRational::one(), |acc, f| acc * f)
        / factorial_q(total + 2)
}

/// The constant in front of the permutation sum of δ's for a `(p, q)` channel,
/// read off at the configuration with every upper index 1 and every lower
/// index 2: `∫|ξ₁|^{2p}|ξ₂|^{2q} / (p!q!)`.
pub fn normalising_factor(p: u32, q: u32) -> BigRational {
    sphere_monomial_integral([p, q, 0], [p, q, 0]) / (factorial_q(p) * factorial_q(q))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereFunction {
    /// Rational base coefficients.
    pub poly: Polynomial,
    pub traceless: bool,
    /// Exact squared scale per bidegree channel; missing channels have scale 1.
    /// The function is `Σ √scale_sq(p,q) · poly₍p,q₎`.
    pub channel_scale_sq: BTreeMap<(u32, u32), BigRational>,
}

impl SphereFunction {
    /// Wraps a polynomial; `traceless` is computed, not trusted.
    pub fn new(poly: Polynomial) -> Self {
        let traceless = is_traceless(&poly);
        SphereFunction {
            poly,
            traceless,
            channel_scale_sq: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        SphereFunction::new(Polynomial::zero())
    }

    pub fn scale_sq(&self, channel: (u32, u32)) -> BigRational {
        self.channel_scale_sq
            .get(&channel)
            .cloned()
            .unwrap_or_else(BigRational::one)
    }

    /// Coefficients of the function itself in floating point, scales applied.
    pub fn terms_f64(&self) -> alloc::vec::Vec<(Monomial, f64)> {
        self.poly
            .terms()
            .map(|(m, c)| {
                let s = crate::scalar::rational_to_f64(&self.scale_sq(m.bidegree()));
                (*m, c.to_f64() * libm::sqrt(s))
            })
            .collect()
    }
}

/// Every bihomogeneous component is annihilated by `Σⱼ ∂²/∂ξⱼ∂ξ*ⱼ`.
pub fn is_traceless(f: &Polynomial) -> bool {
    f.bidegree_split().values().all(|c| c.contract().is_zero())
}

fn channel_cross_scale(
    phi: &SphereFunction,
    a: (u32, u32),
    psi: &SphereFunction,
    b: (u32, u32),
) -> Result<Scalar> {
    let prod = phi.scale_sq(a) * psi.scale_sq(b);
    Scalar::sqrt_of_rational(&prod).ok_or_else(|| {
        Error::Irrational(format!(
            "channel scale product {prod} between {a:?} and {b:?} has no exact square root in Q(sqrt 3)"
        ))
    })
}

fn rational_coeff(c: &Scalar) -> Result<&BigRational> {
    c.as_rational()
        .ok_or_else(|| Error::Argument("sphere functions carry rational coefficients".into()))
}

/// `(φ, ψ)` by termwise sphere integration of `conj(φ)·ψ`.
pub fn sphere_inner_direct(phi: &SphereFunction, psi: &SphereFunction) -> Result<Scalar> {
    let left = phi.poly.bidegree_split();
    let right = psi.poly.bidegree_split();
    let mut total = Scalar::zero();
    for (ca, fa) in &left {
        for (cb, fb) in &right {
            let mut acc = BigRational::zero();
            for (ma, xa) in fa.terms() {
                let xa = rational_coeff(xa)?;
                for (mb, xb) in fb.terms() {
                    // conj swaps ξ and ξ*
                    let holo = add3(ma.anti(), mb.holo());
                    let anti = add3(ma.holo(), mb.anti());
                    if holo != anti {
                        continue;
                    }
                    acc += xa * rational_coeff(xb)? * sphere_monomial_integral(holo, anti);
                }
            }
            if !acc.is_zero() {
                total += &(&Scalar::from_rational(acc) * &channel_cross_scale(phi, *ca, psi, *cb)?);
            }
        }
    }
    Ok(total)
}

fn add3(a: [u32; 3], b: [u32; 3]) -> [u32; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// `(φ, ψ) = Σ p!q!/(p+q+2)! φ*^{j…}_{k…} ψ^{j…}_{k…}` over bidegree channels.
///
/// A monomial with index multiplicities `α`, `β` carries coefficient
/// `c = p!q!/(α!β!)·T`, so each channel reduces to `Σ c₁c₂ α!β!/(p+q+2)!`.
pub fn induced_inner_formula(phi: &SphereFunction, psi: &SphereFunction) -> Result<Scalar> {
    for f in [phi, psi] {
        if !f.traceless || !is_traceless(&f.poly) {
            return Err(Error::NotTraceless);
        }
    }
    let left = phi.poly.bidegree_split();
    let right = psi.poly.bidegree_split();
    let mut total = Scalar::zero();
    for (ch, fa) in &left {
        let Some(fb) = right.get(ch) else {
            continue;
        };
        let mut acc = BigRational::zero();
        for (m, xa) in fa.terms() {
            let xb = fb.coeff(m);
            if xb.is_zero() {
                continue;
            }
            let weight = BigRational::from_integer(m.factorial_weight());
            acc += rational_coeff(xa)? * rational_coeff(&xb)? * weight;
        }
        if acc.is_zero() {
            continue;
        }
        acc /= factorial_q(ch.0 + ch.1 + 2);
        total += &(&Scalar::from_rational(acc) * &channel_cross_scale(phi, *ch, psi, *ch)?);
    }
    Ok(total)
}

/// `ψ^{j…}_{k…} = √((p+q+2)!) f^{j…}_{k…}` channel by channel, with the
/// square-root factors kept as exact squared scales.
pub fn equivalence_map(f: &Polynomial) -> Result<SphereFunction> {
    if !h0_membership(f) {
        return Err(Error::NotTraceless);
    }
    let parts = f.bidegree_split();
    let channel_scale_sq = parts
        .keys()
        .map(|&(p, q)| ((p, q), factorial_q(p + q + 2)))
        .collect();
    Ok(SphereFunction {
        poly: f.clone(),
        traceless: true,
        channel_scale_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Mode;
    use crate::scalar::{frac, int};

    fn xi(j: usize) -> Polynomial {
        Polynomial::var(Mode::z(j))
    }
    fn xis(j: usize) -> Polynomial {
        Polynomial::var(Mode::w(j))
    }

    #[test]
    fn monomial_integral_examples() {
        assert_eq!(sphere_monomial_integral([0; 3], [0; 3]), frac(1, 2));
        assert_eq!(sphere_monomial_integral([1, 0, 0], [1, 0, 0]), frac(1, 6));
        assert!(sphere_monomial_integral([1, 0, 0], [0, 1, 0]).is_zero());
    }

    #[test]
    fn normalising_factor_anchor() {
        for p in 0..=6 {
            for q in 0..=(6 - p) {
                assert_eq!(normalising_factor(p, q), int(1) / factorial_q(p + q + 2));
            }
        }
    }

    #[test]
    fn direct_inner_examples() {
        let one = SphereFunction::new(Polynomial::one());
        assert_eq!(
            sphere_inner_direct(&one, &one).unwrap(),
            Scalar::from_frac(1, 2)
        );
        let a = SphereFunction::new(xi(1));
        let b = SphereFunction::new(xi(2));
        assert_eq!(
            sphere_inner_direct(&a, &a).unwrap(),
            Scalar::from_frac(1, 6)
        );
        assert!(sphere_inner_direct(&a, &b).unwrap().is_zero());
        // |ξ|² = 1 on the sphere
        let r2 = SphereFunction::new(Polynomial::zw());
        assert_eq!(
            sphere_inner_direct(&one, &r2).unwrap(),
            Scalar::from_frac(1, 2)
        );
    }

    #[test]
    fn formula_examples() {
        let one = SphereFunction::new(Polynomial::one());
        assert_eq!(
            induced_inner_formula(&one, &one).unwrap(),
            Scalar::from_frac(1, 2)
        );
        let a = SphereFunction::new(xi(1));
        assert_eq!(
            induced_inner_formula(&a, &a).unwrap(),
            Scalar::from_frac(1, 6)
        );
        let c = SphereFunction::new(&xi(1) * &xis(2));
        assert!(c.traceless);
        assert_eq!(
            induced_inner_formula(&c, &c).unwrap(),
            Scalar::from_frac(1, 24)
        );
        assert_eq!(
            sphere_inner_direct(&c, &c).unwrap(),
            Scalar::from_frac(1, 24)
        );
        let d = SphereFunction::new(&xi(1) * &xis(1));
        assert!(matches!(
            induced_inner_formula(&d, &d),
            Err(Error::NotTraceless)
        ));
    }

    #[test]
    fn equivalence_examples() {
        let psi = equivalence_map(&Polynomial::one()).unwrap();
        assert_eq!(psi.scale_sq((0, 0)), int(2));
        assert_eq!(induced_inner_formula(&psi, &psi).unwrap(), Scalar::one());
        let psi = equivalence_map(&xi(1)).unwrap();
        assert_eq!(psi.scale_sq((1, 0)), int(6));
        assert_eq!(induced_inner_formula(&psi, &psi).unwrap(), Scalar::one());
        assert!(equivalence_map(&Polynomial::zero()).unwrap().poly.is_zero());
        assert!(matches!(
            equivalence_map(&Polynomial::zw()),
            Err(Error::NotTraceless)
        ));
    }

    #[test]
    fn constraint_under_integral() {
        for h in [[0, 0, 0], [1, 2, 0], [2, 0, 1]] {
            let base = sphere_monomial_integral(h, h);
            let mut sum = BigRational::zero();
            for j in 0..3 {
                let mut hj = h;
                hj[j] += 1;
                sum += sphere_monomial_integral(hj, hj);
            }
            assert_eq!(sum, base);
        }
    }
}
