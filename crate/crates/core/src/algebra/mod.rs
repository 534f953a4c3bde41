//! su(3), sp(2,R) and the isospin ladder as exact boson bilinears.
//!
//! `Q_α^{(a)} = ½ a† λ_α a`, `Q_α^{(b)} = −½ b† λ*_α b`, and the Sp(2,R)
//! generators `J₀ = ½(N^{(a)} + N^{(b)} + 3)`, `K₊ = a†·b†`, `K₋ = a·b`.
//! The two algebras commute, which is what lets Sp(2,R) label the infinite
//! multiplicity of each SU(3) irrep in the six-oscillator Fock space.

pub mod gellmann;
pub mod operator;

use crate::error::Result;
use crate::poly::Mode;
use crate::scalar::{ComplexScalar, Scalar};

pub use gellmann::GellMannTable;
pub use operator::{commutator_defect, Defect, OperatorExpr, Word};

/// Which oscillator triplet an su(3) generator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    A,
    B,
    Total,
}

impl Sector {
    pub const ALL: [Sector; 3] = [Sector::A, Sector::B, Sector::Total];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sp2rGenerator {
    J0,
    K1,
    K2,
    Kplus,
    Kminus,
}

impl Sp2rGenerator {
    pub const ALL: [Sp2rGenerator; 5] = [
        Sp2rGenerator::J0,
        Sp2rGenerator::K1,
        Sp2rGenerator::K2,
        Sp2rGenerator::Kplus,
        Sp2rGenerator::Kminus,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Su2Ladder {
    Jplus,
    Jminus,
    J3,
}

/// Generator factory sharing one Gell-Mann table.
#[derive(Clone, Debug)]
pub struct Generators {
    table: GellMannTable,
}

impl Default for Generators {
    fn default() -> Self {
        Self::new()
    }
}

impl Generators {
    pub fn new() -> Self {
        Generators {
            table: GellMannTable::standard(),
        }
    }

    pub fn table(&self) -> &GellMannTable {
        &self.table
    }

    pub fn su3(&self, alpha: usize, sector: Sector) -> Result<OperatorExpr> {
        let lambda = self.table.lambda(alpha)?;
        let half = Scalar::from_frac(1, 2);
        let mut out = OperatorExpr::zero();
        if matches!(sector, Sector::A | Sector::Total) {
            for (j, row) in lambda.iter().enumerate() {
                for (k, entry) in row.iter().enumerate() {
                    out = &out
                        + &OperatorExpr::bilinear(
                            Mode::z(j + 1),
                            Mode::z(k + 1),
                            entry.scale(&half),
                        );
                }
            }
        }
        if matches!(sector, Sector::B | Sector::Total) {
            let minus_half = -&half;
            for (j, row) in lambda.iter().enumerate() {
                for (k, entry) in row.iter().enumerate() {
                    out = &out
                        + &OperatorExpr::bilinear(
                            Mode::w(j + 1),
                            Mode::w(k + 1),
                            entry.conj().scale(&minus_half),
                        );
                }
            }
        }
        Ok(out)
    }

    /// `Σ_γ i f_{αβγ} Q_γ`: the expected value of `[Q_α, Q_β]`.
    pub fn su3_commutator_rhs(
        &self,
        alpha: usize,
        beta: usize,
        sector: Sector,
    ) -> Result<OperatorExpr> {
        let mut out = OperatorExpr::zero();
        for gamma in 1..=8 {
            let f = self.table.f(alpha, beta, gamma);
            if f.is_zero() {
                continue;
            }
            out = &out + &self.su3(gamma, sector)?.scale(&ComplexScalar::imag(f));
        }
        Ok(out)
    }

    /// Hypercharge `Y = (2/√3) Q₈`, with eigenvalue 1/3 on `a†₁`.
    pub fn hypercharge(&self, sector: Sector) -> OperatorExpr {
        // 2/√3 = (2/3)√3
        let two_over_root3 = Scalar::surd_only(crate::scalar::frac(2, 3));
        self.su3(8, sector)
            .expect("α = 8 is valid")
            .scale_real(&two_over_root3)
    }
}

/// Convenience wrapper building a fresh table.
pub fn su3_generator(alpha: usize, sector: Sector) -> Result<OperatorExpr> {
    Generators::new().su3(alpha, sector)
}

fn k_plus() -> OperatorExpr {
    let mut out = OperatorExpr::zero();
    for j in 1..=3 {
        let mut w = Word::creation(Mode::z(j));
        w.create[Mode::w(j).index()] = 1;
        out.add_word(w, &ComplexScalar::one());
    }
    out
}

fn k_minus() -> OperatorExpr {
    k_plus().adjoint()
}

/// `N^{(a)}` (`a_triplet = true`) or `N^{(b)}`.
pub fn number_operator(a_triplet: bool) -> OperatorExpr {
    let mut out = OperatorExpr::zero();
    for j in 1..=3 {
        let m = if a_triplet { Mode::z(j) } else { Mode::w(j) };
        out = &out + &OperatorExpr::bilinear(m, m, ComplexScalar::one());
    }
    out
}

pub fn sp2r_generator(which: Sp2rGenerator) -> OperatorExpr {
    let half = Scalar::from_frac(1, 2);
    match which {
        Sp2rGenerator::J0 => {
            let n = &number_operator(true) + &number_operator(false);
            let n3 = &n + &OperatorExpr::scalar(ComplexScalar::real(Scalar::from_int(3)));
            n3.scale_real(&half)
        }
        Sp2rGenerator::Kplus => k_plus(),
        Sp2rGenerator::Kminus => k_minus(),
        Sp2rGenerator::K1 => (&k_plus() + &k_minus()).scale_real(&half),
        // (K₊ − K₋)/(2i) = −(i/2)(K₊ − K₋)
        Sp2rGenerator::K2 => (&k_plus() - &k_minus()).scale(&ComplexScalar::imag(-&half)),
    }
}

pub fn su2_ladder(which: Su2Ladder) -> OperatorExpr {
    let one = ComplexScalar::one;
    let minus = || ComplexScalar::real(Scalar::from_int(-1));
    match which {
        // J₋ = a†₂a₁ − b†₁b₂
        Su2Ladder::Jminus => {
            &OperatorExpr::bilinear(Mode::A2, Mode::A1, one())
                + &OperatorExpr::bilinear(Mode::B1, Mode::B2, minus())
        }
        // J₊ = a†₁a₂ − b†₂b₁
        Su2Ladder::Jplus => {
            &OperatorExpr::bilinear(Mode::A1, Mode::A2, one())
                + &OperatorExpr::bilinear(Mode::B2, Mode::B1, minus())
        }
        // J₃ = ½(N₁ᵃ − N₂ᵃ − N₁ᵇ + N₂ᵇ)
        Su2Ladder::J3 => {
            let h = || ComplexScalar::real(Scalar::from_frac(1, 2));
            let mh = || ComplexScalar::real(Scalar::from_frac(-1, 2));
            let mut out = OperatorExpr::bilinear(Mode::A1, Mode::A1, h());
            out = &out + &OperatorExpr::bilinear(Mode::A2, Mode::A2, mh());
            out = &out + &OperatorExpr::bilinear(Mode::B1, Mode::B1, mh());
            &out + &OperatorExpr::bilinear(Mode::B2, Mode::B2, h())
        }
    }
}

/// Sp(2,R) Casimir `K₁² + K₂² − J₀² = ½(K₊K₋ + K₋K₊) − J₀²`.
pub fn sp2r_casimir() -> OperatorExpr {
    let kp = k_plus();
    let km = k_minus();
    let j0 = sp2r_generator(Sp2rGenerator::J0);
    let sym = (&kp.compose(&km) + &km.compose(&kp)).scale_real(&Scalar::from_frac(1, 2));
    &sym - &j0.compose(&j0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, Polynomial};
    use crate::scalar::frac;

    fn z(j: usize) -> Polynomial {
        Polynomial::var(Mode::z(j))
    }
    fn w(j: usize) -> Polynomial {
        Polynomial::var(Mode::w(j))
    }

    #[test]
    fn q3_on_z1_is_half() {
        let q3 = su3_generator(3, Sector::A).unwrap();
        assert_eq!(
            q3.apply_real(&z(1)).unwrap(),
            z(1).scale(&Scalar::from_frac(1, 2))
        );
    }

    /// Brute-force oracle: the action of `½ a† λ a` on a linear polynomial
    /// `Σ c_k z_k` is the matrix product `½ λ c` on the coefficient vector.
    #[test]
    fn linear_action_matches_matrix_multiply() {
        let g = Generators::new();
        for alpha in 1..=8 {
            let lambda = g.table().lambda(alpha).unwrap();
            let q = g.su3(alpha, Sector::A).unwrap();
            for k in 1..=3 {
                let r = q.apply(&z(k));
                for j in 1..=3 {
                    let entry = lambda[j - 1][k - 1].scale(&Scalar::from_frac(1, 2));
                    assert_eq!(r.re.coeff(&Monomial::ONE.raised(Mode::z(j), 1)), entry.re);
                    assert_eq!(r.im.coeff(&Monomial::ONE.raised(Mode::z(j), 1)), entry.im);
                }
            }
        }
    }

    #[test]
    fn q8_on_z3() {
        let q8 = su3_generator(8, Sector::A).unwrap();
        let r = q8.apply_real(&z(3)).unwrap();
        // −1/√3 = −(1/3)√3
        assert_eq!(r, z(3).scale(&Scalar::surd_only(frac(-1, 3))));
    }

    #[test]
    fn vacuum_invariant() {
        for alpha in 1..=8 {
            let q = su3_generator(alpha, Sector::Total).unwrap();
            assert!(q.apply(&Polynomial::one()).is_zero());
        }
    }

    #[test]
    fn invalid_alpha() {
        assert!(su3_generator(0, Sector::A).is_err());
        assert!(su3_generator(9, Sector::Total).is_err());
    }

    #[test]
    fn sp2r_examples() {
        let j0 = sp2r_generator(Sp2rGenerator::J0);
        let f = &z(1) * &w(2);
        assert_eq!(
            j0.apply_real(&f).unwrap(),
            f.scale(&Scalar::from_frac(5, 2))
        );
        let km = sp2r_generator(Sp2rGenerator::Kminus);
        assert_eq!(
            km.apply_real(&Polynomial::zw()).unwrap(),
            Polynomial::constant(Scalar::from_int(3))
        );
        let kp = sp2r_generator(Sp2rGenerator::Kplus);
        assert_eq!(kp.apply_real(&Polynomial::one()).unwrap(), Polynomial::zw());
    }

    #[test]
    fn k_minus_operator_matches_contraction() {
        let km = sp2r_generator(Sp2rGenerator::Kminus);
        let kp = sp2r_generator(Sp2rGenerator::Kplus);
        for m in Monomial::up_to_degree(4) {
            let f = Polynomial::monomial(m);
            assert_eq!(km.apply_real(&f).unwrap(), f.contract());
            assert_eq!(kp.apply_real(&f).unwrap(), f.mul_zw());
        }
    }

    #[test]
    fn ladder_examples() {
        let jm = su2_ladder(Su2Ladder::Jminus);
        assert_eq!(jm.apply_real(&z(1)).unwrap(), z(2));
        assert_eq!(jm.apply_real(&w(2)).unwrap(), -&w(1));
        assert!(jm.apply(&z(3)).is_zero());
        assert_eq!(su2_ladder(Su2Ladder::Jplus), jm.adjoint());
    }

    #[test]
    fn hypercharge_of_single_quanta() {
        let y = Generators::new().hypercharge(Sector::Total);
        let cases = [
            (z(1), frac(1, 3)),
            (z(2), frac(1, 3)),
            (z(3), frac(-2, 3)),
            (w(1), frac(-1, 3)),
            (w(2), frac(-1, 3)),
            (w(3), frac(2, 3)),
        ];
        for (f, y_val) in cases {
            assert_eq!(y.apply_real(&f).unwrap(), f.scale_rational(&y_val));
        }
    }

    #[test]
    fn j3_equals_q3_total() {
        assert_eq!(
            su2_ladder(Su2Ladder::J3),
            su3_generator(3, Sector::Total).unwrap()
        );
    }

    #[test]
    fn su3_closure_spot_check() {
        let g = Generators::new();
        let x = g.su3(1, Sector::Total).unwrap();
        let y = g.su3(2, Sector::Total).unwrap();
        let z = g.su3(3, Sector::Total).unwrap().scale(&ComplexScalar::i());
        assert!(commutator_defect(&x, &y, &z, 4).is_empty());
        assert_eq!(x.commutator(&y), z);
    }

    #[test]
    fn sp2r_commutes_with_su3_symbolically() {
        let g = Generators::new();
        for which in Sp2rGenerator::ALL {
            let s = sp2r_generator(which);
            for alpha in 1..=8 {
                assert!(s
                    .commutator(&g.su3(alpha, Sector::Total).unwrap())
                    .is_zero());
            }
        }
    }

    #[test]
    fn kplus_kminus_gives_minus_two_j0() {
        let kp = sp2r_generator(Sp2rGenerator::Kplus);
        let km = sp2r_generator(Sp2rGenerator::Kminus);
        let j0 = sp2r_generator(Sp2rGenerator::J0);
        let rhs = j0.scale_real(&Scalar::from_int(-2));
        assert!(commutator_defect(&kp, &km, &rhs, 4).is_empty());
    }
}
