//! Chern and Pontryagin data of `X` and `Y`, and the string obstruction integers.
//!
//! All classes are presented as polynomials in `h_1..h_k` before imposing the
//! relations of `H^*(X)`. The string check is therefore the sufficient
//! condition that the presented coefficients vanish.

use super::model::CIModel;
use crate::error::Result;
use crate::ringcore::{int, MPoly, Rational};
use num_integer::Integer;
use num_traits::One;

/// `c(TX) = prod_j (1 + C_j)`, truncated at the dimension of `X`.
pub fn chern_total_x(ci: &CIModel) -> Result<MPoly<Rational>> {
    let n = ci.ambient_dim();
    let k = ci.picard_rank();
    let one = MPoly::constant(k, n, Rational::one());
    let factors: Vec<MPoly<Rational>> = ci
        .divisor_forms()
        .iter()
        .map(|row| one.try_add(&ci.linear(row, &Rational::one())))
        .collect::<Result<_>>()?;
    MPoly::product(&factors, one)
}

fn column_sums(rows: &[Vec<i64>], k: usize) -> Vec<i64> {
    (0..k).map(|i| rows.iter().map(|r| r[i]).sum()).collect()
}

/// `c_1(TY) = sum_i h_i (1 + sum_{u not basis} m[u][i] - sum_l d[l][i])`.
pub fn c1_y(ci: &CIModel) -> MPoly<Rational> {
    let k = ci.picard_rank();
    let from_rays = column_sums(ci.divisor_forms(), k);
    let from_hyp = column_sums(&ci.degrees, k);
    let coeffs: Vec<i64> = (0..k).map(|i| from_rays[i] - from_hyp[i]).collect();
    ci.linear(&coeffs, &Rational::one())
}

/// `w_2(TY)` as the mod-2 reduction of the presented `c_1`.
pub fn w2_y(ci: &CIModel) -> MPoly<Rational> {
    c1_y(ci).map_coeffs(|c| {
        let two = int(2);
        let r = c.to_integer().mod_floor(two.numer());
        Rational::from_integer(r)
    })
}

/// `p_1(TY) = sum_j C_j^2 - sum_l E_l^2`; the `C_j` include the basis divisors `h_i`.
pub fn p1_y(ci: &CIModel) -> Result<MPoly<Rational>> {
    let n = ci.ambient_dim();
    let k = ci.picard_rank();
    let mut acc = MPoly::zero(k, n);
    for row in ci.divisor_forms() {
        let c = ci.linear(row, &Rational::one());
        acc = acc.try_add(&c.try_mul(&c)?)?;
    }
    for row in &ci.degrees {
        let e = ci.linear(row, &Rational::one());
        acc = acc.try_sub(&e.try_mul(&e)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringVerdict {
    /// Every presented coefficient of `p_1(TY)` vanishes, so `Y` is string.
    StringCertified,
    /// Some presented coefficient is nonzero; `Y` may or may not be string.
    NotCertified,
}

impl StringVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            StringVerdict::StringCertified => "string_certified",
            StringVerdict::NotCertified => "not_certified",
        }
    }

    pub fn is_certified(self) -> bool {
        self == StringVerdict::StringCertified
    }
}

/// Integers whose vanishing makes the residue integrand doubly periodic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    /// `O[i][l] = sum_t d[t][i] d[t][l] - sum_{u not basis} m[u][i] m[u][l]` for `i != l`; zero diagonal.
    pub offdiag: Vec<Vec<i64>>,
    /// `Delta_i = sum_t d[t][i]^2 - sum_{u not basis} m[u][i]^2 - 1`.
    pub diag: Vec<i64>,
    /// `(sum_t d[t][i] - sum_{u not basis} m[u][i] - 1) mod 2`.
    pub parity: Vec<i64>,
    pub verdict: StringVerdict,
}

impl ObstructionReport {
    /// True when the presented `w_2(TY)` vanishes.
    pub fn spin_certified(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }
}

/// Evaluates the string conditions on the degree and Picard matrices.
pub fn obstruction_integers(
    m_non_basis: &[Vec<i64>],
    degrees: &[Vec<i64>],
    k: usize,
) -> ObstructionReport {
    let gram =
        |rows: &[Vec<i64>], i: usize, l: usize| -> i64 { rows.iter().map(|r| r[i] * r[l]).sum() };
    let mut offdiag = vec![vec![0i64; k]; k];
    for i in 0..k {
        for l in 0..k {
            if i != l {
                offdiag[i][l] = gram(degrees, i, l) - gram(m_non_basis, i, l);
            }
        }
    }
    let diag: Vec<i64> = (0..k)
        .map(|i| gram(degrees, i, i) - gram(m_non_basis, i, i) - 1)
        .collect();
    let parity: Vec<i64> = (0..k)
        .map(|i| {
            let s: i64 = degrees.iter().map(|r| r[i]).sum::<i64>()
                - m_non_basis.iter().map(|r| r[i]).sum::<i64>()
                - 1;
            s.rem_euclid(2)
        })
        .collect();
    let certified = diag.iter().all(|&d| d == 0) && offdiag.iter().flatten().all(|&o| o == 0);
    ObstructionReport {
        offdiag,
        diag,
        parity,
        verdict: if certified {
            StringVerdict::StringCertified
        } else {
            StringVerdict::NotCertified
        },
    }
}

pub fn string_check(ci: &CIModel) -> ObstructionReport {
    let non_basis: Vec<Vec<i64>> = ci
        .pd
        .non_basis_rays()
        .map(|j| ci.pd.m_matrix[j].clone())
        .collect();
    obstruction_integers(&non_basis, &ci.degrees, ci.picard_rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::{product_projective, projective_space};

    fn model(fan: crate::toric::ValidatedFan, d: Vec<Vec<i64>>) -> CIModel {
        CIModel::from_fan(fan, d).unwrap()
    }

    fn single(k: usize, cap: usize, e: &[u32], c: i64) -> MPoly<Rational> {
        MPoly::from_terms(k, cap, vec![(e.to_vec(), int(c))])
    }

    #[test]
    fn total_chern_classes() {
        let p1 = model(projective_space(1).unwrap(), vec![]);
        let expect = MPoly::from_terms(1, 1, vec![(vec![0], int(1)), (vec![1], int(2))]);
        assert_eq!(chern_total_x(&p1).unwrap(), expect);

        let p2 = model(projective_space(2).unwrap(), vec![]);
        let expect = MPoly::from_terms(
            1,
            2,
            vec![(vec![0], int(1)), (vec![1], int(3)), (vec![2], int(3))],
        );
        assert_eq!(chern_total_x(&p2).unwrap(), expect);

        // In H^*(P^1 x P^1) the squares h_1^2 and h_2^2 vanish.
        let f0 = model(product_projective(&[1, 1]).unwrap(), vec![]);
        let c = chern_total_x(&f0).unwrap();
        let reduced = MPoly::from_terms(
            2,
            2,
            c.terms()
                .filter(|(e, _)| e.iter().all(|&a| a <= 1))
                .map(|(e, v)| (e.clone(), v.clone())),
        );
        let expect = MPoly::from_terms(
            2,
            2,
            vec![
                (vec![0, 0], int(1)),
                (vec![1, 0], int(2)),
                (vec![0, 1], int(2)),
                (vec![1, 1], int(4)),
            ],
        );
        assert_eq!(reduced, expect);
        assert_eq!(c.coeff(&[2, 0]), Some(&int(1)));
    }

    #[test]
    fn first_chern_class() {
        assert!(c1_y(&model(projective_space(3).unwrap(), vec![vec![4]])).is_zero());
        assert_eq!(
            c1_y(&model(projective_space(3).unwrap(), vec![vec![2]])),
            single(1, 3, &[1], 2)
        );
        assert_eq!(
            c1_y(&model(projective_space(2).unwrap(), vec![])),
            single(1, 2, &[1], 3)
        );
    }

    #[test]
    fn first_pontryagin_class() {
        assert!(p1_y(&model(projective_space(3).unwrap(), vec![vec![2]]))
            .unwrap()
            .is_zero());
        assert_eq!(
            p1_y(&model(projective_space(3).unwrap(), vec![vec![4]])).unwrap(),
            single(1, 3, &[2], -12)
        );
        let p3p3 = model(
            product_projective(&[3, 3]).unwrap(),
            vec![vec![2, 0], vec![0, 2]],
        );
        assert!(p1_y(&p3p3).unwrap().is_zero());
    }

    #[test]
    fn p1_coefficients_are_obstruction_integers() {
        let ci = model(
            product_projective(&[2, 3]).unwrap(),
            vec![vec![1, 2], vec![2, 1]],
        );
        let rep = string_check(&ci);
        let p1 = p1_y(&ci).unwrap();
        let coeff = |e: &[u32]| p1.coeff(e).cloned().unwrap_or_else(|| int(0));
        assert_eq!(coeff(&[2, 0]), int(-rep.diag[0]));
        assert_eq!(coeff(&[0, 2]), int(-rep.diag[1]));
        assert_eq!(coeff(&[1, 1]), int(-2 * rep.offdiag[0][1]));
    }

    #[test]
    fn string_examples() {
        let q = string_check(&model(projective_space(3).unwrap(), vec![vec![2]]));
        assert_eq!(q.diag, vec![0]);
        assert_eq!(q.verdict, StringVerdict::StringCertified);
        let quartic = string_check(&model(projective_space(3).unwrap(), vec![vec![4]]));
        assert_eq!(quartic.diag, vec![12]);
        assert_eq!(quartic.verdict.as_str(), "not_certified");
        let p3p3 = string_check(&model(
            product_projective(&[3, 3]).unwrap(),
            vec![vec![2, 0], vec![0, 2]],
        ));
        assert!(p3p3.verdict.is_certified());
        assert_eq!(p3p3.offdiag, vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn w2_is_c1_mod_two() {
        assert!(w2_y(&model(projective_space(3).unwrap(), vec![vec![2]])).is_zero());
        assert!(w2_y(&model(projective_space(3).unwrap(), vec![vec![4]])).is_zero());
        let cubic = model(projective_space(3).unwrap(), vec![vec![3]]);
        assert_eq!(w2_y(&cubic), single(1, 3, &[1], 1));
        let p2 = model(projective_space(2).unwrap(), vec![]);
        assert_eq!(w2_y(&p2), single(1, 2, &[1], 1));
    }
}
