//! Exact scalars in the quadratic field Q(√3) and complex pairs over it.
//!
//! The only irrational numbers that ever enter the operator algebra are the
//! `1/√3` entries of λ₈, so Q(√3) keeps every commutator check exact. Basis
//! states and projectors live entirely in the rational subfield.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `rat + surd·√3` with arbitrary-precision rational parts.
///
/// The surd part is stored as `None` when zero so that the rational subfield
/// costs no more than a plain `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: BigRational,
    surd: Option<BigRational>,
}

impl Scalar {
    pub fn new(rat: BigRational, surd: BigRational) -> Self {
        let surd = if surd.is_zero() { None } else { Some(surd) };
        Scalar { rat, surd }
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Scalar { rat, surd: None }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `c·√3` for rational `c`.
    pub fn surd_only(surd: BigRational) -> Self {
        Scalar::new(BigRational::zero(), surd)
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn surd(&self) -> BigRational {
        self.surd.clone().unwrap_or_else(BigRational::zero)
    }

    pub fn surd_ref(&self) -> Option<&BigRational> {
        self.surd.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_none()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_none()
    }

    /// The rational value, if the surd part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.surd.is_none() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// Multiplicative inverse; `None` for zero.
    ///
    /// `(a + b√3)⁻¹ = (a − b√3) / (a² − 3b²)`, and `a² − 3b²` vanishes only at
    /// zero because √3 is irrational.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match &self.surd {
            None => Some(Scalar::from_rational(self.rat.recip())),
            Some(b) => {
                let three = BigRational::from_integer(BigInt::from(3));
                let norm = &self.rat * &self.rat - three * b * b;
                Some(Scalar::new(&self.rat / &norm, -(b / &norm)))
            }
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Scalar {
        Scalar::new(&self.rat * c, self.surd() * c)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rat) + rational_to_f64(&self.surd()) * libm::sqrt(3.0)
    }

    /// Exact square root of a nonnegative rational, when it lies in Q(√3).
    ///
    /// That happens iff `r = a²` or `r = 3a²` for rational `a`.
    pub fn sqrt_of_rational(r: &BigRational) -> Option<Scalar> {
        if r.is_negative() {
            return None;
        }
        if let Some(a) = rational_sqrt(r) {
            return Some(Scalar::from_rational(a));
        }
        let third = r / BigRational::from_integer(BigInt::from(3));
        rational_sqrt(&third).map(Scalar::surd_only)
    }
}

/// Exact square root of a rational that is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        return v;
    }
    // Fallback for huge numerators/denominators: scale down by a power of two.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as usize;
    let n = r.numer() >> shift;
    let d = r.denom() >> shift;
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Least common multiple of the denominators of a set of rationals.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.surd {
            None => write!(f, "{}", self.rat),
            Some(b) if self.rat.is_zero() => write!(f, "{}√3", b),
            Some(b) => write!(f, "({} + {}√3)", self.rat, b),
        }
    }
}

// Ordering only makes sense for display/sorting of rationals; compare numerically.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        let diff = self - other;
        // sign of a + b√3: compare a² with 3b² accounting for signs
        let a = &diff.rat;
        let b = diff.surd();
        let sign_a = a.signum();
        let sign_b = b.signum();
        let positive = if sign_a >= BigRational::zero() && sign_b >= BigRational::zero() {
            true
        } else if sign_a <= BigRational::zero() && sign_b <= BigRational::zero() {
            false
        } else {
            let a2 = a * a;
            let b2 = &b * &b * int(3);
            if sign_a.is_positive() {
                a2 > b2
            } else {
                b2 > a2
            }
        };
        Some(if positive {
            Ordering::Greater
        } else {
            Ordering::Less
        })
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let surd = match (&self.surd, &rhs.surd) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => {
                let s = a + b;
                if s.is_zero() {
                    None
                } else {
                    Some(s)
                }
            }
        };
        Scalar {
            rat: &self.rat + &rhs.rat,
            surd,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -&self.rat,
            surd: self.surd.as_ref().map(|s| -s),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.surd, &rhs.surd) {
            (None, None) => Scalar::from_rational(&self.rat * &rhs.rat),
            (Some(b), None) => Scalar::new(&self.rat * &rhs.rat, b * &rhs.rat),
            (None, Some(d)) => Scalar::new(&self.rat * &rhs.rat, &self.rat * d),
            (Some(b), Some(d)) => {
                // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
                let rat = &self.rat * &rhs.rat + int(3) * b * d;
                let surd = &self.rat * d + b * &rhs.rat;
                Scalar::new(rat, surd)
            }
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

/// `re + i·im` with both parts in Q(√3). Used for operator coefficients only.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ComplexScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        ComplexScalar {
            re,
            im: Scalar::zero(),
        }
    }

    pub fn imag(im: Scalar) -> Self {
        ComplexScalar {
            re: Scalar::zero(),
            im,
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Scalar::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::imag(Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        ComplexScalar {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// Inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let n_inv = norm.inv()?;
        Some(self.conj().scale(&n_inv))
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl<'a> Add<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl<'a> Mul<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::new(frac(a.0, a.1), frac(b.0, b.1))
    }

    #[test]
    fn zero_iff_both_parts_zero() {
        assert!(Scalar::new(int(0), int(0)).is_zero());
        assert!(!Scalar::surd_only(frac(1, 3)).is_zero());
        let x = s((1, 2), (1, 3));
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn sqrt3_squared_is_three() {
        let r3 = Scalar::surd_only(int(1));
        assert_eq!(&r3 * &r3, Scalar::from_int(3));
    }

    #[test]
    fn inverse_in_field() {
        let x = s((2, 1), (-5, 7));
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
        assert!(Scalar::zero().inv().is_none());
        // 1/√3 = √3/3
        let r3 = Scalar::surd_only(int(1));
        assert_eq!(r3.inv().unwrap(), Scalar::surd_only(frac(1, 3)));
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(
            Scalar::sqrt_of_rational(&frac(4, 9)),
            Some(Scalar::from_frac(2, 3))
        );
        assert_eq!(
            Scalar::sqrt_of_rational(&int(12)),
            Some(Scalar::surd_only(int(2)))
        );
        assert_eq!(Scalar::sqrt_of_rational(&int(2)), None);
    }

    #[test]
    fn ordering_matches_floats() {
        let a = s((1, 1), (-1, 2)); // 1 - 0.866 > 0
        let b = s((-2, 1), (1, 1)); // -2 + 1.732 < 0
        assert!(a > Scalar::zero());
        assert!(b < Scalar::zero());
        assert!(a > b);
    }

    #[test]
    fn complex_mul_i_squared() {
        let i = ComplexScalar::i();
        assert_eq!(&i * &i, ComplexScalar::real(Scalar::from_int(-1)));
        let z = ComplexScalar::new(Scalar::from_int(3), Scalar::surd_only(int(1)));
        assert_eq!(&z * &z.inv().unwrap(), ComplexScalar::one());
    }
}
