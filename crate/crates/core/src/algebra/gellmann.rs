//! The standard Gell-Mann matrices and the su(3) structure constants derived
//! from them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{frac, ComplexScalar, Scalar};

pub type Matrix3 = [[ComplexScalar; 3]; 3];

fn zero_matrix() -> Matrix3 {
    core::array::from_fn(|_| core::array::from_fn(|_| ComplexScalar::zero()))
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = zero_matrix();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut acc = ComplexScalar::zero();
            for k in 0..3 {
                acc = &acc + &(&a[i][k] * &b[k][j]);
            }
            *entry = acc;
        }
    }
    out
}

pub fn mat_sub(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    core::array::from_fn(|i| core::array::from_fn(|j| &a[i][j] - &b[i][j]))
}

pub fn trace(a: &Matrix3) -> ComplexScalar {
    let t = &a[0][0] + &a[1][1];
    &t + &a[2][2]
}

pub fn conj_matrix(a: &Matrix3) -> Matrix3 {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][j].conj()))
}

/// λ₁..λ₈ together with `f_{αβγ}` computed as `tr([λ_α, λ_β] λ_γ) / 4i`.
#[derive(Clone, Debug)]
pub struct GellMannTable {
    lambdas: [Matrix3; 8],
    f_consts: BTreeMap<(usize, usize, usize), Scalar>,
}

impl GellMannTable {
    pub fn standard() -> Self {
        let re = |v: i64| ComplexScalar::real(Scalar::from_int(v));
        let im = |v: i64| ComplexScalar::imag(Scalar::from_int(v));
        let mut lambdas: [Matrix3; 8] = core::array::from_fn(|_| zero_matrix());
        lambdas[0][0][1] = re(1);
        lambdas[0][1][0] = re(1);
        lambdas[1][0][1] = im(-1);
        lambdas[1][1][0] = im(1);
        lambdas[2][0][0] = re(1);
        lambdas[2][1][1] = re(-1);
        lambdas[3][0][2] = re(1);
        lambdas[3][2][0] = re(1);
        lambdas[4][0][2] = im(-1);
        lambdas[4][2][0] = im(1);
        lambdas[5][1][2] = re(1);
        lambdas[5][2][1] = re(1);
        lambdas[6][1][2] = im(-1);
        lambdas[6][2][1] = im(1);
        // diag(1, 1, -2)/√3, with 1/√3 = √3/3
        let s = |c: i64| ComplexScalar::real(Scalar::surd_only(frac(c, 3)));
        lambdas[7][0][0] = s(1);
        lambdas[7][1][1] = s(1);
        lambdas[7][2][2] = s(-2);

        let mut f_consts = BTreeMap::new();
        let four_i_inv = ComplexScalar::imag(Scalar::from_int(4))
            .inv()
            .expect("nonzero");
        for a in 0..8 {
            for b in 0..8 {
                let comm = mat_sub(
                    &mat_mul(&lambdas[a], &lambdas[b]),
                    &mat_mul(&lambdas[b], &lambdas[a]),
                );
                for c in 0..8 {
                    let t = trace(&mat_mul(&comm, &lambdas[c]));
                    let f = &t * &four_i_inv;
                    assert!(f.im.is_zero(), "structure constants must be real");
                    if !f.re.is_zero() {
                        f_consts.insert((a + 1, b + 1, c + 1), f.re);
                    }
                }
            }
        }
        GellMannTable { lambdas, f_consts }
    }

    /// λ_α for α in 1..=8.
    pub fn lambda(&self, alpha: usize) -> Result<&Matrix3> {
        check_alpha(alpha)?;
        Ok(&self.lambdas[alpha - 1])
    }

    /// `f_{αβγ}`, zero when absent.
    pub fn f(&self, alpha: usize, beta: usize, gamma: usize) -> Scalar {
        self.f_consts
            .get(&(alpha, beta, gamma))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero structure constants with α < β < γ.
    pub fn independent_f(&self) -> Vec<((usize, usize, usize), Scalar)> {
        self.f_consts
            .iter()
            .filter(|((a, b, c), _)| a < b && b < c)
            .map(|(k, v)| (*k, v.clone()))
            .collect()
    }

    pub fn lambdas(&self) -> &[Matrix3; 8] {
        &self.lambdas
    }
}

pub fn check_alpha(alpha: usize) -> Result<()> {
    if (1..=8).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::Argument(alloc::format!(
            "generator index {alpha} outside 1..=8"
        )))
    }
}
