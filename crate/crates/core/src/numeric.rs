//! Double-precision SU(3) action on Bargmann polynomials and symmetric
//! tensors. Group elements have irrational entries, so these checks run in
//! floating point against the exact constructions elsewhere in the crate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factorial::factorial;
use crate::induced::SphereFunction;
use crate::poly::{Mode, Monomial, Polynomial};
use crate::scalar::rational_to_f64;

pub const GROUP_TOLERANCE: f64 = 1e-12;

pub type Matrix = [[Complex64; 3]; 3];

fn c0() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[c0(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn det(a: &Matrix) -> Complex64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// An SU(3) matrix: `A†A = 1`, `det A = 1` within [`GROUP_TOLERANCE`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    m: Matrix,
}

impl GroupElement {
    pub fn new(m: Matrix) -> Result<Self> {
        let g = GroupElement { m };
        let (u, d) = g.defects();
        if u > GROUP_TOLERANCE || d > GROUP_TOLERANCE || !m.iter().flatten().all(|z| z.is_finite())
        {
            return Err(Error::Argument(format!(
                "not in SU(3): unitarity defect {u:e}, determinant defect {d:e}"
            )));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        let mut m = [[c0(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Complex64::new(1.0, 0.0);
        }
        GroupElement { m }
    }

    pub fn entries(&self) -> &Matrix {
        &self.m
    }

    /// `(max |A†A − 1|, |det A − 1|)`.
    pub fn defects(&self) -> (f64, f64) {
        let p = mat_mul(&self.dagger().m, &self.m);
        let mut u = 0.0f64;
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                u = u.max((x - target).norm());
            }
        }
        (u, (det(&self.m) - 1.0).norm())
    }

    pub fn dagger(&self) -> GroupElement {
        let mut m = [[c0(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = self.m[j][i].conj();
            }
        }
        GroupElement { m }
    }

    pub fn conj(&self) -> GroupElement {
        GroupElement {
            m: self.m.map(|row| row.map(|z| z.conj())),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        self.dagger()
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            m: mat_mul(&self.m, &other.m),
        }
    }
}

fn uniform_open(rng: &mut ChaCha8Rng) -> f64 {
    // 53 random bits, shifted off zero
    ((rng.next_u64() >> 11) as f64 + 0.5) / (1u64 << 53) as f64
}

fn gaussian_pair(rng: &mut ChaCha8Rng) -> Complex64 {
    let u1 = uniform_open(rng);
    let u2 = uniform_open(rng);
    let r = libm::sqrt(-libm::log(u1));
    let t = 2.0 * core::f64::consts::PI * u2;
    Complex64::new(r * libm::cos(t), r * libm::sin(t))
}

/// Haar-distributed SU(3) element, deterministic in `seed`.
///
/// Complex Gaussian matrix, Gram–Schmidt on columns (R has positive real
/// diagonal), then division by a cube root of the determinant.
pub fn haar_random_su3(seed: u64) -> GroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut cols = [[c0(); 3]; 3];
        for col in cols.iter_mut() {
            for x in col.iter_mut() {
                *x = gaussian_pair(&mut rng);
            }
        }
        let mut ok = true;
        for j in 0..3 {
            for i in 0..j {
                let proj: Complex64 = (0..3).map(|k| cols[i][k].conj() * cols[j][k]).sum();
                for k in 0..3 {
                    let v = cols[i][k];
                    cols[j][k] -= proj * v;
                }
            }
            let norm = libm::sqrt(cols[j].iter().map(|z| z.norm_sqr()).sum());
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for x in cols[j].iter_mut() {
                *x /= norm;
            }
        }
        if !ok {
            continue;
        }
        let mut m = [[c0(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = cols[j][i];
            }
        }
        let root = det(&m).powf(1.0 / 3.0);
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x /= root;
            }
        }
        if let Ok(g) = GroupElement::new(m) {
            return g;
        }
    }
}

/// Float shadow of [`Polynomial`] with complex coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NumericPolynomial {
    terms: BTreeMap<Monomial, Complex64>,
}

impl NumericPolynomial {
    pub fn zero() -> Self {
        NumericPolynomial::default()
    }

    pub fn one() -> Self {
        NumericPolynomial::term(Monomial::ONE, Complex64::new(1.0, 0.0))
    }

    pub fn term(m: Monomial, c: Complex64) -> Self {
        let mut out = NumericPolynomial::zero();
        out.add_term(m, c);
        out
    }

    pub fn var(mode: Mode) -> Self {
        NumericPolynomial::term(Monomial::ONE.raised(mode, 1), Complex64::new(1.0, 0.0))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Complex64)>) -> Result<Self> {
        let mut out = NumericPolynomial::zero();
        for (m, c) in iter {
            if !c.is_finite() {
                return Err(Error::Argument("non-finite coefficient".into()));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn from_exact(f: &Polynomial) -> Self {
        let mut out = NumericPolynomial::zero();
        for (m, c) in f.terms() {
            out.add_term(*m, Complex64::new(c.to_f64(), 0.0));
        }
        out
    }

    /// The sphere function with its channel scales applied.
    pub fn from_sphere(psi: &SphereFunction) -> Self {
        let mut out = NumericPolynomial::zero();
        for (m, c) in psi.terms_f64() {
            out.add_term(m, Complex64::new(c, 0.0));
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: Complex64) {
        if c == c0() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(c0);
        *e += c;
        if *e == c0() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or_else(c0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.values().all(|c| c.is_finite())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = NumericPolynomial::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = NumericPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    /// Sesquilinear Bargmann inner product `Σ conj(a)·b·∏ exps!`.
    pub fn bargmann_inner(&self, other: &Self) -> Complex64 {
        self.terms
            .iter()
            .filter_map(|(m, a)| {
                other.terms.get(m).map(|b| {
                    let w = m.exps().iter().map(|&e| fact_f64(e)).product::<f64>();
                    a.conj() * b * w
                })
            })
            .sum()
    }

    /// `Σⱼ ∂²/∂zⱼ∂wⱼ`.
    pub fn contract(&self) -> Self {
        let mut out = NumericPolynomial::zero();
        for (m, c) in &self.terms {
            for j in 1..=3 {
                let (a, b) = (m.exp(Mode::z(j)), m.exp(Mode::w(j)));
                if a > 0 && b > 0 {
                    let mut e = *m.exps();
                    e[j - 1] -= 1;
                    e[j + 2] -= 1;
                    out.add_term(Monomial::new(e), c * (a as f64) * (b as f64));
                }
            }
        }
        out
    }

    pub fn mul_zw(&self) -> Self {
        self.mul(&zw())
    }

    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), NumericPolynomial> {
        let mut out: BTreeMap<(u32, u32), NumericPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree()).or_default().add_term(*m, *c);
        }
        out
    }

    pub fn bidegree(&self) -> Result<Option<(u32, u32)>> {
        let mut it = self.terms.keys().map(|m| m.bidegree());
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.all(|b| b == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotBihomogeneous)
        }
    }
}

fn fact_f64(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn zw() -> NumericPolynomial {
    let mut out = NumericPolynomial::zero();
    for j in 1..=3 {
        out.add_term(
            Monomial::ONE.raised(Mode::z(j), 1).raised(Mode::w(j), 1),
            Complex64::new(1.0, 0.0),
        );
    }
    out
}

/// Substitutes each variable by a linear form and re-expands.
/// `U(A)` with the powers of its six substituted linear forms cached, for
/// applying one group element to many polynomials.
pub struct BargmannAction {
    powers: [Vec<NumericPolynomial>; 6],
}

impl BargmannAction {
    pub fn new(a: &GroupElement) -> Self {
        let inv = a.inverse();
        let m = inv.entries();
        let powers = core::array::from_fn(|i| {
            let (row, conj) = if i < 3 { (i, false) } else { (i - 3, true) };
            let mut form = NumericPolynomial::zero();
            for k in 0..3 {
                let c = if conj { m[row][k].conj() } else { m[row][k] };
                let mode = if conj { Mode::w(k + 1) } else { Mode::z(k + 1) };
                form.add_term(Monomial::ONE.raised(mode, 1), c);
            }
            vec![NumericPolynomial::one(), form]
        });
        BargmannAction { powers }
    }

    fn power(&mut self, i: usize, e: usize) -> &NumericPolynomial {
        let v = &mut self.powers[i];
        while v.len() <= e {
            let next = v[v.len() - 1].mul(&v[1]);
            v.push(next);
        }
        &v[e]
    }

    pub fn apply(&mut self, f: &NumericPolynomial) -> NumericPolynomial {
        let mut out = NumericPolynomial::zero();
        for (m, c) in f.terms() {
            let mut t = NumericPolynomial::term(Monomial::ONE, *c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(self.power(i, e as usize));
                }
            }
            for (mm, cc) in t.terms() {
                out.add_term(*mm, *cc);
            }
        }
        out
    }
}

/// `(U(A)f)(z, w) = f(A⁻¹z, conj(A⁻¹)w)`.
pub fn act_bargmann(a: &GroupElement, f: &NumericPolynomial) -> NumericPolynomial {
    BargmannAction::new(a).apply(f)
}

/// The induced action `(D(A)ψ)(ξ) = ψ(A⁻¹ξ)` on a sphere function, with
/// `ξ*` transforming by the complex conjugate.
pub fn act_induced(a: &GroupElement, psi: &NumericPolynomial) -> NumericPolynomial {
    act_bargmann(a, psi)
}

/// Float shadow of the equivalence map: each `(p, q)` channel scaled by
/// `√((p+q+2)!)`.
pub fn equivalence_shadow(f: &NumericPolynomial) -> NumericPolynomial {
    let mut out = NumericPolynomial::zero();
    for (m, c) in f.terms() {
        out.add_term(*m, c * libm::sqrt(fact_f64(m.degree() + 2)));
    }
    out
}

fn index_tuples(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..3).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn tuple_monomial(t: &[usize], p: usize) -> Monomial {
    let mut e = [0u32; 6];
    for (pos, &i) in t.iter().enumerate() {
        e[if pos < p { i } else { 3 + i }] += 1;
    }
    Monomial::new(e)
}

/// `T′^{j…}_{k…} = A^{j}_{j′}… A*^{k}_{k′}… T^{j′…}_{k′…}` on the dense
/// symmetric tensor of a bidegree-`(p, q)` polynomial.
///
/// With `f(z,w) = Σ T z_{j…} w_{k…}` this is `f(Aᵀz, A†w)`, which equals
/// `act_bargmann(conj(A), f)`.
pub fn tensor_transform(a: &GroupElement, f: &NumericPolynomial) -> Result<NumericPolynomial> {
    let Some((p, q)) = f.bidegree()? else {
        return Ok(NumericPolynomial::zero());
    };
    let (p, q) = (p as usize, q as usize);
    let n = p + q;
    let tuples = index_tuples(n);
    let pq_fact = fact_f64(p as u32) * fact_f64(q as u32);
    // tuples are in base-3 order with the last index fastest
    let mut tensor: Vec<Complex64> = tuples
        .iter()
        .map(|t| {
            let m = tuple_monomial(t, p);
            let w = rational_to_f64(&num_rational::BigRational::from_integer(
                factorial_weight_int(&m),
            ));
            f.coeff(&m) * (w / pq_fact)
        })
        .collect();
    let am = a.entries();
    let mut stride = 1usize;
    for axis in (0..n).rev() {
        let conj = axis >= p;
        let mut next = vec![c0(); tensor.len()];
        for (idx, out) in next.iter_mut().enumerate() {
            let j = (idx / stride) % 3;
            let base = idx - j * stride;
            let mut acc = c0();
            for jp in 0..3 {
                let coef = if conj { am[j][jp].conj() } else { am[j][jp] };
                acc += coef * tensor[base + jp * stride];
            }
            *out = acc;
        }
        tensor = next;
        stride *= 3;
    }
    let mut out = NumericPolynomial::zero();
    for (t, v) in tuples.iter().zip(tensor) {
        out.add_term(tuple_monomial(t, p), v);
    }
    Ok(out)
}

fn factorial_weight_int(m: &Monomial) -> num_bigint::BigInt {
    m.exps().iter().map(|&e| factorial(e)).product()
}

/// Float shadow of the exact trace-removal projector on a bihomogeneous input.
pub fn traceless_project_numeric(f: &NumericPolynomial) -> Result<NumericPolynomial> {
    let Some((p, q)) = f.bidegree()? else {
        return Ok(NumericPolynomial::zero());
    };
    let total = p + q + 1;
    let mut out = f.clone();
    let mut kn = f.clone();
    for n in 1..=p.min(q) {
        kn = kn.contract();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let alpha = sign * fact_f64(total - n) / (fact_f64(n) * fact_f64(total));
        let mut term = kn.clone();
        for _ in 0..n {
            term = term.mul_zw();
        }
        out = out.sub(&term.scale(Complex64::new(alpha, 0.0)));
    }
    Ok(out)
}

/// `max_f ‖P(U(A)f) − U(A)(Pf)‖_max` over the monomials of bidegree `(p, q)`.
pub fn equivariance_defect(a: &GroupElement, p: u32, q: u32) -> f64 {
    let mut ua = BargmannAction::new(a);
    Monomial::of_bidegree(p, q)
        .into_iter()
        .map(|m| {
            let f = NumericPolynomial::term(m, Complex64::new(1.0, 0.0));
            let lhs = traceless_project_numeric(&ua.apply(&f)).expect("bihomogeneous");
            let rhs = ua.apply(&traceless_project_numeric(&f).expect("bihomogeneous"));
            lhs.max_abs_diff(&rhs)
        })
        .fold(0.0, f64::max)
}

/// `max_f ‖U(A)U(B)f − U(AB)f‖_max` over monomials of bidegree ≤ `(p, q)`.
pub fn representation_defect(a: &GroupElement, b: &GroupElement, p: u32, q: u32) -> f64 {
    let (mut ua, mut ub, mut uab) = (
        BargmannAction::new(a),
        BargmannAction::new(b),
        BargmannAction::new(&a.mul(b)),
    );
    let mut worst = 0.0f64;
    for pp in 0..=p {
        for qq in 0..=q {
            for m in Monomial::of_bidegree(pp, qq) {
                let f = NumericPolynomial::term(m, Complex64::new(1.0, 0.0));
                let lhs = ua.apply(&ub.apply(&f));
                let rhs = uab.apply(&f);
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(j: usize) -> NumericPolynomial {
        NumericPolynomial::var(Mode::z(j))
    }

    #[test]
    fn haar_deterministic_and_in_group() {
        for seed in 0..20 {
            let a = haar_random_su3(seed);
            assert_eq!(a, haar_random_su3(seed));
            let (u, d) = a.defects();
            assert!(u <= GROUP_TOLERANCE && d <= GROUP_TOLERANCE);
        }
        assert_ne!(haar_random_su3(1), haar_random_su3(2));
    }

    #[test]
    fn haar_second_moment() {
        let n = 10_000;
        let mean: f64 = (0..n)
            .map(|s| haar_random_su3(s).entries()[0][0].norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 1.0 / 3.0).abs() < 0.02, "{mean}");
    }

    #[test]
    fn rejects_non_unitary() {
        let mut m = *GroupElement::identity().entries();
        m[0][0] = Complex64::new(2.0, 0.0);
        assert!(GroupElement::new(m).is_err());
    }

    #[test]
    fn action_basics() {
        let a = haar_random_su3(3);
        let f = z(1).mul(&z(2)).add(&NumericPolynomial::var(Mode::w(3)));
        assert!(act_bargmann(&GroupElement::identity(), &f).max_abs_diff(&f) == 0.0);
        assert!(act_bargmann(&a, &zw()).max_abs_diff(&zw()) < 1e-10);
        let g = z(3).mul(&NumericPolynomial::var(Mode::w(1)));
        let lhs = act_bargmann(&a, &f).bargmann_inner(&act_bargmann(&a, &g));
        assert!((lhs - f.bargmann_inner(&g)).norm() < 1e-10);
        let lhs = act_bargmann(&a, &g).bargmann_inner(&act_bargmann(&a, &g));
        assert!((lhs - g.bargmann_inner(&g)).norm() < 1e-10);
    }

    #[test]
    fn tensor_transform_conventions() {
        let a = haar_random_su3(5);
        // (1,0): coefficient vector transforms as A·c
        let f = z(1)
            .scale(Complex64::new(0.3, 0.0))
            .add(&z(3).scale(Complex64::new(0.0, 1.0)));
        let t = tensor_transform(&a, &f).unwrap();
        let am = a.entries();
        for j in 0..3 {
            let expect = am[j][0] * 0.3 + am[j][2] * Complex64::new(0.0, 1.0);
            assert!((t.coeff(&Monomial::ONE.raised(Mode::z(j + 1), 1)) - expect).norm() < 1e-14);
        }
        let f = z(1).mul(&z(2)).mul(&NumericPolynomial::var(Mode::w(2)));
        let t = tensor_transform(&a, &f).unwrap();
        assert!(t.max_abs_diff(&act_bargmann(&a.conj(), &f)) < 1e-12);
        assert!(
            tensor_transform(&GroupElement::identity(), &f)
                .unwrap()
                .max_abs_diff(&f)
                < 1e-15
        );
        assert!(tensor_transform(&a, &z(1).add(&NumericPolynomial::one())).is_err());
    }

    #[test]
    fn traceless_stays_traceless() {
        let a = haar_random_su3(11);
        let f = z(1).mul(&NumericPolynomial::var(Mode::w(2)));
        let t = tensor_transform(&a, &f).unwrap();
        assert!(t.contract().max_abs() < 1e-10);
    }

    #[test]
    fn equivariance_small() {
        assert_eq!(equivariance_defect(&GroupElement::identity(), 2, 2), 0.0);
        let a = haar_random_su3(9);
        assert!(equivariance_defect(&a, 1, 1) < 1e-10);
        let pz = traceless_project_numeric(&zw()).unwrap();
        assert!(pz.max_abs() < 1e-15);
        let b = haar_random_su3(10);
        assert!(representation_defect(&a, &b, 2, 1) < 1e-9);
    }
}
