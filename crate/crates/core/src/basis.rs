//! Orthonormal SU(3) × Sp(2,R) basis states `|p,q; I M Y; m⟩` in the
//! Bargmann picture, the trace-removal projector, and the K₋-kernel
//! characterization of the leading subspace.
//!
//! States are stored as a rational polynomial with an exact rational
//! `norm_sq`; the normalized state is `poly / √norm_sq`. `norm_sq` is built
//! from the closed-form normalization constants, so comparing it with the
//! Bargmann norm of `poly` is a genuine unit-norm check.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::algebra::{sp2r_casimir, su2_ladder, Su2Ladder};
use crate::catalog::{self, IrrepLabel, WeightInput, WeightLabel};
use crate::error::{Error, Result};
use crate::factorial::factorial_q;
use crate::linalg::RationalMatrix;
use crate::poly::{Mode, Monomial, Polynomial};
use crate::scalar::{int, lcm_denominators, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub rep: IrrepLabel,
    pub weight: WeightLabel,
    /// `2m`, the doubled Sp(2,R) weight.
    pub m2: u32,
}

impl BasisKey {
    /// Validates every label: `(I, M, Y)` inside `(p, q)` and
    /// `m ∈ {k, k+1, …}` with `2k = p + q + 3`.
    pub fn new(p: u32, q: u32, i2: i64, iso_m2: i64, y3: i64, m2: i64) -> Result<Self> {
        let rep = IrrepLabel::new(p, q);
        let weight = catalog::weight(rep, i2, iso_m2, y3)?;
        let k2 = rep.k2() as i64;
        if m2 < k2 || (m2 - k2) % 2 != 0 {
            return Err(Error::Argument(format!(
                "m = {} must be one of k, k+1, ... with k = {}",
                catalog::half_str(m2 as i32),
                catalog::half_str(k2 as i32)
            )));
        }
        Ok(BasisKey {
            rep,
            weight,
            m2: m2 as u32,
        })
    }

    pub fn k2(&self) -> u32 {
        self.rep.k2()
    }

    /// `m − k`, the number of K₊ quanta.
    pub fn rho(&self) -> u32 {
        (self.m2 - self.k2()) / 2
    }
}

/// Every basis key of `(p, q)` with `m − k ≤ max_rho`, ordered by
/// `(ρ, r, s, M descending)`.
pub fn basis_keys(rep: IrrepLabel, max_rho: u32) -> Vec<BasisKey> {
    let mut out = Vec::new();
    for rho in 0..=max_rho {
        for e in catalog::iy_spectrum(rep) {
            let mut m2 = e.i2 as i32;
            while m2 >= -(e.i2 as i32) {
                out.push(BasisKey {
                    rep,
                    weight: WeightLabel {
                        i2: e.i2,
                        m2,
                        y3: e.y3,
                        r: e.r,
                        s: e.s,
                    },
                    m2: rep.k2() + 2 * rho,
                });
                m2 -= 2;
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedState {
    pub poly: Polynomial,
    pub norm_sq: BigRational,
    pub key: BasisKey,
}

impl NormalizedState {
    /// `⟨poly, poly⟩ / norm_sq`: exactly 1 for a correctly normalized state.
    pub fn normalized_norm_sq(&self) -> BigRational {
        let n = self.poly.norm_sq();
        n.as_rational()
            .expect("basis states have rational coefficients")
            / &self.norm_sq
    }

    /// Squared normalized overlap `⟨ŝ₁, ŝ₂⟩² = ⟨p₁, p₂⟩² / (n₁ n₂)`.
    pub fn overlap_sq(&self, other: &NormalizedState) -> BigRational {
        let ip = self.poly.bargmann_inner(&other.poly);
        let ip = ip.as_rational().expect("rational states").clone();
        &ip * &ip / (&self.norm_sq * &other.norm_sq)
    }

    /// Whether two states are the same normalized vector: `poly₁ = c·poly₂`
    /// with `c > 0` and `c² = n₁ / n₂`.
    pub fn same_vector(&self, other: &NormalizedState) -> bool {
        let (Some((m, c1)), false) = (self.poly.leading(), other.poly.is_zero()) else {
            return self.poly.is_zero() && other.poly.is_zero();
        };
        let c2 = other.poly.coeff(m);
        let Some(inv) = c2.inv() else {
            return false;
        };
        let ratio = c1 * &inv;
        let Some(c) = ratio.as_rational() else {
            return false;
        };
        c.is_positive()
            && self.poly == other.poly.scale_rational(c)
            && c * c * &other.norm_sq == self.norm_sq
    }

    /// Coefficients of `poly / √norm_sq` in floating point.
    pub fn normalized_terms_f64(&self) -> Vec<(Monomial, f64)> {
        let inv_norm = 1.0 / libm::sqrt(crate::scalar::rational_to_f64(&self.norm_sq));
        self.poly
            .terms()
            .map(|(m, c)| (*m, c.to_f64() * inv_norm))
            .collect()
    }
}

fn fact(n: u32) -> BigRational {
    factorial_q(n)
}

/// `C₀ … C_{n_max}` from the recursion `n(r+s+n+1)Cₙ = −(p−r−n+1)(q−s−n+1)Cₙ₋₁`,
/// `C₀ = 1`.
pub fn cn_recursion(p: u32, q: u32, r: u32, s: u32) -> Result<Vec<BigRational>> {
    check_rs(p, q, r, s)?;
    let n_max = (p - r).min(q - s);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(BigRational::one());
    for n in 1..=n_max {
        let lhs = int(n as i64) * int((r + s + n + 1) as i64);
        let rhs = -int((p - r - n + 1) as i64) * int((q - s - n + 1) as i64);
        let prev = out[(n - 1) as usize].clone();
        out.push(rhs * prev / lhs);
    }
    Ok(out)
}

/// Closed form `Cₙ = (−1)ⁿ/n! · (p−r)!(q−s)!(r+s+1)! / ((p−r−n)!(q−s−n)!(r+s+n+1)!)`.
pub fn cn_closed_form(p: u32, q: u32, r: u32, s: u32) -> Result<Vec<BigRational>> {
    check_rs(p, q, r, s)?;
    let n_max = (p - r).min(q - s);
    Ok((0..=n_max)
        .map(|n| {
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            sign * fact(p - r) * fact(q - s) * fact(r + s + 1)
                / (fact(n) * fact(p - r - n) * fact(q - s - n) * fact(r + s + n + 1))
        })
        .collect())
}

/// Both routes, failing loudly if they ever disagree.
pub fn cn_coeffs(p: u32, q: u32, r: u32, s: u32) -> Result<Vec<BigRational>> {
    let rec = cn_recursion(p, q, r, s)?;
    let closed = cn_closed_form(p, q, r, s)?;
    if rec != closed {
        return Err(Error::Consistency(format!(
            "C_n recursion and closed form disagree at (p,q,r,s) = ({p},{q},{r},{s})"
        )));
    }
    Ok(rec)
}

fn check_rs(p: u32, q: u32, r: u32, s: u32) -> Result<()> {
    if r > p || s > q {
        return Err(Error::Argument(format!(
            "(r, s) = ({r}, {s}) outside [0,{p}]x[0,{q}]"
        )));
    }
    Ok(())
}

/// `N²_{pqIY} = r! s! (r+s+1)! (p−r)! (q−s)! (p+s+1)! (q+r+1)! / (p+q+1)!`.
pub fn highest_weight_norm_constant_sq(p: u32, q: u32, r: u32, s: u32) -> BigRational {
    fact(r)
        * fact(s)
        * fact(r + s + 1)
        * fact(p - r)
        * fact(q - s)
        * fact(p + s + 1)
        * fact(q + r + 1)
        / fact(p + q + 1)
}

fn var_pow(mode: Mode, e: u32) -> Polynomial {
    Polynomial::monomial(Monomial::ONE.raised(mode, e))
}

/// `a†₁b†₁ + a†₂b†₂`: the isospin-scalar pair that builds the highest-weight
/// states (the third component is carried separately by `a†₃`, `b†₃`).
fn isospin_pair() -> Polynomial {
    let z1w1 = Monomial::ONE.raised(Mode::A1, 1).raised(Mode::B1, 1);
    let z2w2 = Monomial::ONE.raised(Mode::A2, 1).raised(Mode::B2, 1);
    Polynomial::from_terms([(z1w1, Scalar::one()), (z2w2, Scalar::one())])
}

fn clear_denominators(f: &Polynomial) -> (Polynomial, BigRational) {
    let rats: Vec<BigRational> = f
        .terms()
        .map(|(_, c)| c.as_rational().expect("rational").clone())
        .collect();
    let l = BigRational::from_integer(lcm_denominators(rats.iter()));
    (f.scale_rational(&l), l)
}

/// The K₋-annihilated state with `m = k` and `M = I`.
pub fn highest_weight_state(p: u32, q: u32, i2: i64, y3: i64) -> Result<NormalizedState> {
    let rep = IrrepLabel::new(p, q);
    let weight = catalog::weight_conversion(rep, WeightInput::IY { i2, y3 })?;
    let (r, s) = (weight.r, weight.s);
    let coeffs = cn_coeffs(p, q, r, s)?;
    let u = isospin_pair();
    let prefix = &var_pow(Mode::A1, r) * &var_pow(Mode::B2, s);
    let mut sum = Polynomial::zero();
    for (n, c) in coeffs.iter().enumerate() {
        let n = n as u32;
        let t = &(&u.pow(n) * &var_pow(Mode::A3, p - r - n)) * &var_pow(Mode::B3, q - s - n);
        sum = &sum + &t.scale_rational(c);
    }
    let raw = &prefix * &sum;
    let (poly, l) = clear_denominators(&raw);
    // raw = c0 · (the normalized-form sum without N), with C₀ = 1
    let c0 = fact(r) * fact(s) * fact(r + s + 1) * fact(p - r) * fact(q - s);
    let scale = &l * &c0;
    let norm_sq = &scale * &scale / highest_weight_norm_constant_sq(p, q, r, s);
    Ok(NormalizedState {
        poly,
        norm_sq,
        key: BasisKey {
            rep,
            weight,
            m2: rep.k2(),
        },
    })
}

/// Raises `m = k` to `m2_target / 2` with `(K₊)^{m−k}` and the normalization
/// `{(2k−1)! / ((m−k)!(m+k−1)!)}^{1/2}`.
pub fn sp2r_raise(state: &NormalizedState, m2_target: u32) -> Result<NormalizedState> {
    let k2 = state.key.k2();
    if state.key.m2 != k2 {
        return Err(Error::Argument(
            "sp2r_raise expects a state with m = k".into(),
        ));
    }
    if m2_target < k2 || (m2_target - k2) % 2 != 0 {
        return Err(Error::Argument(format!(
            "target m = {} incompatible with k = {}",
            catalog::half_str(m2_target as i32),
            catalog::half_str(k2 as i32)
        )));
    }
    let t = (m2_target - k2) / 2;
    let mut poly = state.poly.clone();
    for _ in 0..t {
        poly = poly.mul_zw();
    }
    let m_plus_k_minus_1 = (m2_target + k2 - 2) / 2;
    let norm_sq = &state.norm_sq * fact(t) * fact(m_plus_k_minus_1) / fact(k2 - 1);
    Ok(NormalizedState {
        poly,
        norm_sq,
        key: BasisKey {
            m2: m2_target,
            ..state.key
        },
    })
}

/// Lowers `M = I` to `M2_target / 2` with `(J₋)^{I−M}` and the normalization
/// `{(I+M)! / ((2I)!(I−M)!)}^{1/2}`.
pub fn su2_lower(state: &NormalizedState, iso_m2_target: i32) -> Result<NormalizedState> {
    let w = state.key.weight;
    if w.m2 != w.i2 as i32 {
        return Err(Error::Argument(
            "su2_lower expects a state with M = I".into(),
        ));
    }
    let weight = w
        .with_m2(iso_m2_target)
        .map_err(|e| Error::Argument(format!("{e}")))?;
    let t = ((w.i2 as i32 - iso_m2_target) / 2) as u32;
    let i_plus_m = ((w.i2 as i32 + iso_m2_target) / 2) as u32;
    let jm = su2_ladder(Su2Ladder::Jminus);
    let mut poly = state.poly.clone();
    for _ in 0..t {
        poly = jm.apply_real(&poly).expect("J₋ has real coefficients");
    }
    let norm_sq = &state.norm_sq * su2_lowering_norm_factor(w.i2, iso_m2_target);
    debug_assert!(i_plus_m <= w.i2);
    Ok(NormalizedState {
        poly,
        norm_sq,
        key: BasisKey {
            weight,
            ..state.key
        },
    })
}

/// `‖J₋^{I−M}|I,I⟩‖² / ‖|I,I⟩‖² = (2I)!(I−M)!/(I+M)!`.
pub fn su2_lowering_norm_factor(i2: u32, iso_m2: i32) -> BigRational {
    let t = ((i2 as i32 - iso_m2) / 2) as u32;
    let i_plus_m = ((i2 as i32 + iso_m2) / 2) as u32;
    fact(i2) * fact(t) / fact(i_plus_m)
}

/// `|p,q; I M Y; m⟩` by highest weight → K₊ raising → J₋ lowering.
pub fn basis_state(key: &BasisKey) -> Result<NormalizedState> {
    let w = key.weight;
    let hw = highest_weight_state(key.rep.p, key.rep.q, w.i2 as i64, w.y3 as i64)?;
    let raised = sp2r_raise(&hw, key.m2)?;
    su2_lower(&raised, w.m2)
}

/// The combined closed-form expression for `|p,q; I M Y; m⟩`, built directly
/// as a double sum without applying any ladder operators.
pub fn basis_state_closed_form(key: &BasisKey) -> Result<NormalizedState> {
    let (p, q) = (key.rep.p, key.rep.q);
    let w = key.weight;
    let (r, s) = (w.r, w.s);
    let i_minus_m = ((w.i2 as i32 - w.m2) / 2) as u32;
    let i_plus_m = ((w.i2 as i32 + w.m2) / 2) as u32;
    let k2 = key.k2();
    let rho = key.rho();
    let m_plus_k_minus_1 = (key.m2 + k2 - 2) / 2;

    let u = isospin_pair();
    let mut sum = Polynomial::zero();
    for l in 0..=i_minus_m {
        if l > r || s + l < i_minus_m {
            continue;
        }
        let b2 = s + l - i_minus_m;
        let b1 = i_minus_m - l;
        for n in 0..=(p - r).min(q - s) {
            let sign = if (n + i_minus_m - l) % 2 == 0 { 1 } else { -1 };
            let coeff = int(sign)
                / (fact(r + s + n + 1)
                    * fact(n)
                    * fact(p - r - n)
                    * fact(q - s - n)
                    * fact(r - l)
                    * fact(l)
                    * fact(b2)
                    * fact(b1));
            let mono = Monomial::new([r - l, l, p - r - n, b1, b2, q - s - n]);
            let t = &u.pow(n) * &Polynomial::monomial(mono);
            sum = &sum + &t.scale_rational(&coeff);
        }
    }
    let mut full = sum;
    for _ in 0..rho {
        full = full.mul_zw();
    }
    let (poly, l) = clear_denominators(&full);
    let prefactor_sq = highest_weight_norm_constant_sq(p, q, r, s)
        * fact(k2 - 1)
        * fact(i_plus_m)
        * fact(i_minus_m)
        / (fact(rho) * fact(m_plus_k_minus_1) * fact(w.i2));
    Ok(NormalizedState {
        poly,
        norm_sq: &l * &l / prefactor_sq,
        key: *key,
    })
}

/// Removes every trace from a bihomogeneous `f` of bidegree `(p, q)`:
/// `f₀ = f − Σₙ (−1)ⁿ⁻¹ (p+q+1−n)!/(n!(p+q+1)!) (z·w)ⁿ K₋ⁿ f`.
pub fn traceless_project(f: &Polynomial) -> Result<Polynomial> {
    let Some((p, q)) = f.bidegree()? else {
        return Ok(Polynomial::zero());
    };
    let total = p + q + 1;
    let mut out = f.clone();
    let mut kn = f.clone();
    for n in 1..=p.min(q) {
        kn = kn.contract();
        if kn.is_zero() {
            break;
        }
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        let alpha = sign * fact(total - n) / (fact(n) * fact(total));
        let mut term = kn.clone();
        for _ in 0..n {
            term = term.mul_zw();
        }
        out = &out - &term.scale_rational(&alpha);
    }
    Ok(out)
}

/// [`traceless_project`] applied to every bihomogeneous component.
pub fn traceless_part(f: &Polynomial) -> Polynomial {
    f.bidegree_split()
        .values()
        .map(|c| traceless_project(c).expect("bihomogeneous by construction"))
        .fold(Polynomial::zero(), |acc, c| acc + c)
}

/// Whether `f` lies in the leading subspace H₀ (`K₋ f = 0`).
pub fn h0_membership(f: &Polynomial) -> bool {
    f.contract().is_zero()
}

/// `k(1−k)` with `2k = k2`.
pub fn casimir_value(k2: u32) -> BigRational {
    let k = BigRational::new(BigInt::from(k2), BigInt::from(2));
    &k * (BigRational::one() - &k)
}

/// Eigenvalue of `K₁² + K₂² − J₀²` on the state, if it is an eigenvector.
pub fn sp2r_casimir_eigenvalue(state: &NormalizedState) -> Option<BigRational> {
    let image = sp2r_casimir().apply_real(&state.poly)?;
    let (m, c) = state.poly.leading()?;
    let lambda = &image.coeff(m) * &c.inv()?;
    let lambda = lambda.as_rational()?.clone();
    (image == state.poly.scale_rational(&lambda)).then_some(lambda)
}

pub fn sp2r_casimir_check(state: &NormalizedState) -> bool {
    sp2r_casimir_eigenvalue(state) == Some(casimir_value(state.key.k2()))
}

/// `K₊^{m−k} K₋^{m−k} |k,m⟩ = (m−k)!(m+k−1)!/(2k−1)! |k,m⟩`.
pub fn ladder_product_check(state: &NormalizedState) -> bool {
    let rho = state.key.rho();
    let k2 = state.key.k2();
    let mut f = state.poly.clone();
    for _ in 0..rho {
        f = f.contract();
    }
    for _ in 0..rho {
        f = f.mul_zw();
    }
    let factor = fact(rho) * fact((state.key.m2 + k2 - 2) / 2) / fact(k2 - 1);
    f == state.poly.scale_rational(&factor)
}

/// The matrix of K₋ from bidegree `(p, q)` to `(p−1, q−1)`, columns indexed
/// by [`Monomial::of_bidegree`].
pub fn k_minus_matrix(p: u32, q: u32) -> RationalMatrix {
    let cols = Monomial::of_bidegree(p, q);
    if p == 0 || q == 0 {
        return RationalMatrix::zeros(0, cols.len());
    }
    let rows = Monomial::of_bidegree(p - 1, q - 1);
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (c, mono) in cols.iter().enumerate() {
        for (target, v) in Polynomial::monomial(*mono).contract().terms() {
            let r = rows
                .binary_search(target)
                .expect("target has bidegree (p-1,q-1)");
            m.set(r, c, v.as_rational().expect("rational").clone());
        }
    }
    m
}

/// `dim ker K₋` on bidegree `(p, q)`.
pub fn k_minus_kernel_dim(p: u32, q: u32) -> usize {
    k_minus_matrix(p, q).nullity()
}

/// Rank of the Gram matrix of a set of states.
pub fn gram_rank(states: &[NormalizedState]) -> usize {
    let n = states.len();
    let mut g = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = states[i].poly.bargmann_inner(&states[j].poly);
            g.set(i, j, v.as_rational().expect("rational").clone());
        }
    }
    g.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn z(j: usize) -> Polynomial {
        Polynomial::var(Mode::z(j))
    }
    fn w(j: usize) -> Polynomial {
        Polynomial::var(Mode::w(j))
    }

    #[test]
    fn cn_examples() {
        assert_eq!(cn_coeffs(1, 1, 0, 0).unwrap(), [int(1), frac(-1, 2)]);
        assert_eq!(cn_coeffs(3, 2, 3, 2).unwrap(), [int(1)]);
        // n(r+s+n+1)C₁ = −(p−r)(q−s)C₀ → 2C₁ = −2
        assert_eq!(cn_coeffs(2, 1, 0, 0).unwrap(), [int(1), int(-1)]);
        assert!(cn_coeffs(1, 1, 2, 0).is_err());
    }

    #[test]
    fn highest_weight_examples() {
        let s = highest_weight_state(1, 1, 0, 0).unwrap();
        // z₃w₃ − ½(z₁w₁ + z₂w₂), cleared to 2z₃w₃ − z₁w₁ − z₂w₂
        let expect =
            &(&z(3) * &w(3)).scale(&Scalar::from_int(2)) - &(&(&z(1) * &w(1)) + &(&z(2) * &w(2)));
        assert_eq!(s.poly, expect);
        assert_eq!(s.normalized_norm_sq(), int(1));
        assert!(h0_membership(&s.poly));

        let s = highest_weight_state(1, 0, 1, 1).unwrap();
        assert_eq!(s.poly, z(1));
        assert_eq!(s.normalized_norm_sq(), int(1));

        let s = highest_weight_state(0, 0, 0, 0).unwrap();
        assert_eq!(s.poly, Polynomial::one());
        assert_eq!(s.norm_sq, int(1));
    }

    #[test]
    fn invalid_weight_rejected() {
        assert!(matches!(
            highest_weight_state(1, 0, 2, 3),
            Err(Error::InvalidWeight(_))
        ));
    }

    #[test]
    fn raise_examples() {
        let vac = highest_weight_state(0, 0, 0, 0).unwrap();
        let s = sp2r_raise(&vac, 5).unwrap();
        assert_eq!(s.poly, Polynomial::zw());
        assert_eq!(s.norm_sq, int(3));
        assert_eq!(Polynomial::zw().norm_sq(), Scalar::from_int(3));
        assert_eq!(sp2r_raise(&vac, 3).unwrap(), vac);
        assert!(sp2r_raise(&vac, 4).is_err());
        assert!(sp2r_raise(&vac, 1).is_err());
        let hw = highest_weight_state(1, 1, 0, 0).unwrap();
        let s = sp2r_raise(&hw, 7).unwrap();
        assert_eq!(s.normalized_norm_sq(), int(1));
    }

    #[test]
    fn lower_examples() {
        let s = highest_weight_state(1, 0, 1, 1).unwrap();
        let l = su2_lower(&s, -1).unwrap();
        assert_eq!(l.poly, z(2));
        assert_eq!(l.normalized_norm_sq(), int(1));
        assert_eq!(su2_lower(&s, 1).unwrap(), s);
        assert!(su2_lower(&s, 0).is_err());
        assert!(su2_lower(&s, -3).is_err());

        let s = highest_weight_state(0, 1, 1, -1).unwrap();
        assert_eq!(s.poly, w(2));
        let l = su2_lower(&s, -1).unwrap();
        assert_eq!(l.poly, -&w(1));
        assert_eq!(l.normalized_norm_sq(), int(1));
    }

    /// The lowering normalization reads `(I+M)!/((2I)!(I−M)!)`. The other
    /// grouping, `2·I!`, fails unit norm at I = 2 (4 ≠ 24).
    #[test]
    fn lowering_prefactor_grouping() {
        let hw = highest_weight_state(4, 0, 4, 4).unwrap();
        assert_eq!(hw.key.weight.i2, 4);
        let jm = su2_ladder(Su2Ladder::Jminus);
        for iso_m2 in [2, 0, -2, -4] {
            let t = (4 - iso_m2) / 2;
            let mut f = hw.poly.clone();
            for _ in 0..t {
                f = jm.apply_real(&f).unwrap();
            }
            let ratio =
                f.norm_sq().as_rational().unwrap() / hw.poly.norm_sq().as_rational().unwrap();
            let i_plus_m = ((4 + iso_m2) / 2) as u32;
            let two_i_fact = fact(4) * fact(t as u32) / fact(i_plus_m);
            let twice_i_fact = int(2) * fact(2) * fact(t as u32) / fact(i_plus_m);
            assert_eq!(ratio, two_i_fact);
            assert_ne!(ratio, twice_i_fact);
        }
    }

    #[test]
    fn basis_state_examples() {
        let k = BasisKey::new(0, 0, 0, 0, 0, 3).unwrap();
        assert_eq!(basis_state(&k).unwrap().poly, Polynomial::one());
        let k = BasisKey::new(1, 0, 1, -1, 1, 4).unwrap();
        let s = basis_state(&k).unwrap();
        assert_eq!(s.poly, z(2));
        assert_eq!(s.normalized_norm_sq(), int(1));
        let k = BasisKey::new(1, 1, 0, 0, 0, 5).unwrap();
        let s = basis_state(&k).unwrap();
        // √(2/3)(z₃w₃ − ½z₁w₁ − ½z₂w₂) = poly/√norm_sq with poly = 2z₃w₃ − z₁w₁ − z₂w₂
        assert_eq!(s.norm_sq, int(6));
        assert!(BasisKey::new(1, 1, 0, 0, 0, 4).is_err());
        assert!(BasisKey::new(1, 1, 0, 0, 0, 6).is_err());
    }

    #[test]
    fn closed_form_matches_ladder_construction() {
        for p in 0..=3 {
            for q in 0..=(3 - p) {
                for key in basis_keys(IrrepLabel::new(p, q), 2) {
                    let a = basis_state(&key).unwrap();
                    let b = basis_state_closed_form(&key).unwrap();
                    assert!(a.same_vector(&b), "{key:?}");
                }
            }
        }
    }

    #[test]
    fn project_examples() {
        assert!(traceless_project(&Polynomial::zw()).unwrap().is_zero());
        let f = &z(1) * &w(1);
        let f0 = traceless_project(&f).unwrap();
        assert_eq!(f0, &f - &Polynomial::zw().scale_rational(&frac(1, 3)));
        assert!(f0.contract().is_zero());
        let g = &(&z(1) * &w(2)) - &(&z(2) * &w(1));
        assert_eq!(traceless_project(&g).unwrap(), g);
        assert!(matches!(
            traceless_project(&(&z(1) + &w(1))),
            Err(Error::NotBihomogeneous)
        ));
    }

    #[test]
    fn membership_examples() {
        assert!(h0_membership(&(&(&z(1) * &w(2)) - &(&z(2) * &w(1)))));
        assert!(!h0_membership(&Polynomial::zw()));
        assert!(h0_membership(&Polynomial::constant(Scalar::from_int(7))));
    }

    #[test]
    fn casimir_examples() {
        let vac = basis_state(&BasisKey::new(0, 0, 0, 0, 0, 3).unwrap()).unwrap();
        assert_eq!(sp2r_casimir_eigenvalue(&vac), Some(frac(-3, 4)));
        let s = basis_state(&BasisKey::new(1, 0, 1, 1, 1, 4).unwrap()).unwrap();
        assert_eq!(sp2r_casimir_eigenvalue(&s), Some(int(-2)));
        let s = basis_state(&BasisKey::new(1, 1, 0, 0, 0, 7).unwrap()).unwrap();
        assert_eq!(sp2r_casimir_eigenvalue(&s), Some(frac(-15, 4)));
        assert!(sp2r_casimir_check(&s));
        assert!(ladder_product_check(&s));
    }

    #[test]
    fn kernel_dimension_small() {
        assert_eq!(k_minus_kernel_dim(1, 1), 8);
        assert_eq!(k_minus_kernel_dim(2, 0), 6);
        assert_eq!(k_minus_kernel_dim(2, 2), 27);
    }

    #[test]
    fn keys_per_sector_count_dimension() {
        for (p, q) in [(0, 0), (1, 0), (2, 1), (3, 3)] {
            let rep = IrrepLabel::new(p, q);
            assert_eq!(basis_keys(rep, 0).len() as u64, rep.dim());
            assert_eq!(basis_keys(rep, 2).len() as u64, 3 * rep.dim());
        }
    }
}
