//! `λ'_e` and the surgery and connected-sum deltas.

use crate::algebra::rational::{int, Rational};
use crate::algebra::trivar::{embed, TriVarElem, Var};
use crate::algebra::OneVarFrac;
use crate::casson::{lambda_lens, SurgeryCoefficient};

use super::SurgeryError;

pub type Matrix = Vec<Vec<OneVarFrac>>;

/// Equivariant linking matrices of a symplectic basis `(a_i, b_i)` of a
/// Seifert surface of `J`, with the surgery slope `p/q`.
///
/// `laa[i][j] = lk_e(a_i, a_j^+)`, `lab[i][j] = lk_e(a_i, b_j^+)`,
/// `lba[i][j] = lk_e(b_i, a_j^+)`, `lbb[i][j] = lk_e(b_i, b_j^+)`.
/// `lk_e(b_i^+, a_i)(t)` defaults to `lab[i][i](t^{-1})`; `b_plus_a`
/// overrides it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryDatum {
    pub laa: Matrix,
    pub lab: Matrix,
    pub lba: Matrix,
    pub lbb: Matrix,
    pub b_plus_a: Option<Vec<OneVarFrac>>,
    pub coefficient: SurgeryCoefficient,
}

impl SurgeryDatum {
    pub fn new(
        laa: Matrix,
        lab: Matrix,
        lba: Matrix,
        lbb: Matrix,
        coefficient: SurgeryCoefficient,
    ) -> Result<Self, SurgeryError> {
        let d = SurgeryDatum { laa, lab, lba, lbb, b_plus_a: None, coefficient };
        d.validate()?;
        Ok(d)
    }

    /// Genus-`g` datum with constant entries.
    pub fn constant(
        laa: &[Vec<i64>],
        lab: &[Vec<i64>],
        lba: &[Vec<i64>],
        lbb: &[Vec<i64>],
        coefficient: SurgeryCoefficient,
    ) -> Result<Self, SurgeryError> {
        let lift = |m: &[Vec<i64>]| -> Matrix {
            m.iter().map(|row| row.iter().map(|&c| OneVarFrac::constant(int(c))).collect()).collect()
        };
        Self::new(lift(laa), lift(lab), lift(lba), lift(lbb), coefficient)
    }

    pub fn with_override(mut self, b_plus_a: Vec<OneVarFrac>) -> Result<Self, SurgeryError> {
        self.b_plus_a = Some(b_plus_a);
        self.validate()?;
        Ok(self)
    }

    pub fn genus(&self) -> usize {
        self.laa.len()
    }

    pub fn validate(&self) -> Result<(), SurgeryError> {
        let g = self.laa.len();
        for (name, m) in [("Laa", &self.laa), ("Lab", &self.lab), ("Lba", &self.lba), ("Lbb", &self.lbb)] {
            if m.len() != g || m.iter().any(|row| row.len() != g) {
                return Err(SurgeryError::Shape(format!("{name} is not {g}x{g}")));
            }
        }
        if let Some(v) = &self.b_plus_a {
            if v.len() != g {
                return Err(SurgeryError::Shape(format!("override has {} entries, expected {g}", v.len())));
            }
        }
        Ok(())
    }

    /// `lk_e(a_i, b_i^+)(t) - lk_e(b_i^+, a_i)(t)`.
    fn beta_factor(&self, i: usize) -> OneVarFrac {
        let back = match &self.b_plus_a {
            Some(v) => v[i].clone(),
            None => self.lab[i][i].invert_var(),
        };
        &self.lab[i][i] - &back
    }
}

/// `λ'_e = 1/12 Σ_{i,j} Σ_{S3} (α_ij(x,y) + α_ij(x^{-1},y^{-1}) + β_ij(x,y))`.
pub fn lambda_e_prime(d: &SurgeryDatum) -> Result<TriVarElem, SurgeryError> {
    d.validate()?;
    let g = d.genus();
    let mut inner = TriVarElem::zero();
    let betas: Vec<OneVarFrac> = (0..g).map(|i| d.beta_factor(i)).collect();
    for i in 0..g {
        for j in 0..g {
            let alpha = &(&embed(&d.laa[i][j], Var::X)? * &embed(&d.lbb[i][j], Var::Y)?)
                - &(&embed(&d.lab[i][j], Var::X)? * &embed(&d.lba[i][j], Var::Y)?);
            let beta = &embed(&betas[i], Var::X)? * &embed(&betas[j], Var::Y)?;
            inner = &inner + &(&(&alpha + &alpha.invert()) + &beta);
        }
    }
    Ok(inner.symmetrize().scale(&Rational::new(1.into(), 12.into())))
}

/// `6 (q/p) λ'_e + 6 λ(S³(U; p/q))`.
pub fn surgery_delta(d: &SurgeryDatum) -> Result<TriVarElem, SurgeryError> {
    let lp = lambda_e_prime(d)?;
    let c = &d.coefficient;
    let lens = TriVarElem::constant(lambda_lens(c) * int(6));
    Ok(&lp.scale(&(c.inverse_slope() * int(6))) + &lens)
}

/// `6 λ(N)` for a connected sum with a rational homology sphere `N`.
pub fn connected_sum_delta(lambda_n: &Rational) -> TriVarElem {
    TriVarElem::constant(lambda_n * int(6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HLPoly;

    fn coeff(p: i64, q: i64) -> SurgeryCoefficient {
        SurgeryCoefficient::new(p, q).unwrap()
    }

    fn trefoil(p: i64, q: i64) -> SurgeryDatum {
        SurgeryDatum::constant(&[vec![-1]], &[vec![1]], &[vec![0]], &[vec![-1]], coeff(p, q)).unwrap()
    }

    #[test]
    fn trivial_data() {
        let empty = SurgeryDatum::constant(&[], &[], &[], &[], coeff(1, 1)).unwrap();
        assert!(lambda_e_prime(&empty).unwrap().is_zero());
        assert!(surgery_delta(&empty).unwrap().is_zero());
        let z = vec![vec![0, 0], vec![0, 0]];
        let zero2 = SurgeryDatum::constant(&z, &z, &z, &z, coeff(1, 1)).unwrap();
        assert!(lambda_e_prime(&zero2).unwrap().is_zero());
    }

    #[test]
    fn trefoil_and_figure_eight() {
        assert_eq!(lambda_e_prime(&trefoil(1, 1)).unwrap(), TriVarElem::one());
        assert_eq!(surgery_delta(&trefoil(1, 1)).unwrap(), TriVarElem::constant(int(6)));
        let fig8 = SurgeryDatum::constant(&[vec![1]], &[vec![1]], &[vec![0]], &[vec![-1]], coeff(1, 1)).unwrap();
        assert_eq!(lambda_e_prime(&fig8).unwrap(), TriVarElem::constant(int(-1)));
    }

    #[test]
    fn doubling_q_doubles_the_kernel_term() {
        let d1 = surgery_delta(&trefoil(5, 1)).unwrap();
        let d2 = surgery_delta(&trefoil(5, 2)).unwrap();
        let lens1 = TriVarElem::constant(lambda_lens(&coeff(5, 1)) * int(6));
        let lens2 = TriVarElem::constant(lambda_lens(&coeff(5, 2)) * int(6));
        assert_eq!(&d2 - &lens2, (&d1 - &lens1).scale(&int(2)));
    }

    #[test]
    fn connected_sums_add() {
        assert!(connected_sum_delta(&int(0)).is_zero());
        assert_eq!(connected_sum_delta(&int(1)), TriVarElem::constant(int(6)));
        let a = crate::algebra::rational::rat(1, 3);
        let b = crate::algebra::rational::rat(-5, 7);
        assert_eq!(&connected_sum_delta(&a) + &connected_sum_delta(&b), connected_sum_delta(&(&a + &b)));
    }

    #[test]
    fn shape_errors() {
        let bad = SurgeryDatum::constant(&[vec![1]], &[vec![1, 2]], &[vec![0]], &[vec![1]], coeff(1, 1));
        assert!(matches!(bad, Err(SurgeryError::Shape(_))));
    }

    #[test]
    fn beta_terms_are_symmetric() {
        // lk_e(a, b^+) = t gives B(t) = t - t^{-1}
        let t = OneVarFrac::from_poly(HLPoly::t_pow(1));
        let one = OneVarFrac::one();
        let d = SurgeryDatum::new(vec![vec![one.clone()]], vec![vec![t]], vec![vec![one.clone()]], vec![vec![one]], coeff(2, 1))
            .unwrap();
        let l = lambda_e_prime(&d).unwrap();
        assert!(super::super::check_symmetry(&l));
        assert!(!l.as_constant().is_some());
    }
}
