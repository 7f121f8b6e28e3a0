//! Integration over a smooth complete toric variety by fixed-point localization.
//!
//! The equivariant class of `D_j` is `sum_i m[j][i] h_i - lambda_j`. At the
//! fixed point of a maximal cone `sigma`, the classes of rays outside `sigma`
//! restrict to zero; that `k x k` linear system pins down `h(sigma)`. The
//! tangent weights at `sigma` are the restrictions of the classes of the rays
//! in `sigma`. A monomial of degree exactly `n` in the `h_i` then integrates to
//! the same rational for every generic `lambda`.

use super::fan::ValidatedFan;
use super::picard::PicardData;
use crate::error::{Error, Result};
use crate::linalg::{det_i64, solve, to_rational};
use crate::ringcore::{int, Coefficient, Exponent, MPoly, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const LAMBDA_RANGE: i64 = 10_000;
const MAX_LAMBDA_ATTEMPTS: usize = 64;

/// One rational equivariant parameter per ray.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizationParams {
    pub lambda: Vec<Rational>,
}

impl LocalizationParams {
    pub fn new(lambda: Vec<Rational>) -> Self {
        LocalizationParams { lambda }
    }

    /// Integers drawn uniformly from `[-LAMBDA_RANGE, LAMBDA_RANGE]`.
    pub fn sample<R: Rng>(num_rays: usize, rng: &mut R) -> Self {
        LocalizationParams {
            lambda: (0..num_rays)
                .map(|_| int(rng.gen_range(-LAMBDA_RANGE..=LAMBDA_RANGE)))
                .collect(),
        }
    }
}

/// Restriction data at the fixed point of one maximal cone.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedPoint {
    pub cone: usize,
    /// Values of `h_1..h_k` at the fixed point.
    pub h: Vec<Rational>,
    /// Tangent weights, one per ray of the cone.
    pub weights: Vec<Rational>,
    /// Determinant of the restriction system, rays ascending and `h` in fixed order.
    pub det: i64,
}

/// Solves `sum_i m[j][i] h_i = lambda_j` over the rays `j` not in the cone.
pub fn fixed_point_restriction(
    fan: &ValidatedFan,
    pd: &PicardData,
    cone: usize,
    params: &LocalizationParams,
) -> Result<FixedPoint> {
    let r = fan.num_rays();
    if params.lambda.len() != r {
        return Err(Error::NonGeneric(format!(
            "expected {r} parameters, got {}",
            params.lambda.len()
        )));
    }
    let rays_in = &fan.max_cones()[cone];
    let outside: Vec<usize> = (0..r).filter(|j| !rays_in.contains(j)).collect();
    let system: Vec<Vec<i64>> = outside.iter().map(|&j| pd.m_matrix[j].clone()).collect();
    let det = det_i64(&system);
    let rhs: Vec<Rational> = outside.iter().map(|&j| params.lambda[j].clone()).collect();
    let h = solve(&to_rational(&system), &rhs).ok_or_else(|| {
        Error::NonGeneric(format!("restriction system of cone {cone} is singular"))
    })?;
    let weights: Vec<Rational> = rays_in
        .iter()
        .map(|&rho| class_at(&pd.m_matrix[rho], &h) - &params.lambda[rho])
        .collect();
    if let Some(pos) = weights.iter().position(Zero::is_zero) {
        return Err(Error::NonGeneric(format!(
            "tangent weight of ray {} vanishes at cone {cone}",
            rays_in[pos]
        )));
    }
    Ok(FixedPoint {
        cone,
        h,
        weights,
        det,
    })
}

fn class_at(row: &[i64], h: &[Rational]) -> Rational {
    row.iter()
        .zip(h)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, x)| x * int(c))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Fixed-point data for every maximal cone at one choice of `lambda`.
#[derive(Clone, Debug)]
pub struct Localizer {
    n: usize,
    k: usize,
    points: Vec<FixedPoint>,
    /// `1 / (|det| * prod weights)` per fixed point.
    inv_euler: Vec<Rational>,
}

impl Localizer {
    pub fn new(fan: &ValidatedFan, pd: &PicardData, params: &LocalizationParams) -> Result<Self> {
        let points = (0..fan.max_cones().len())
            .into_par_iter()
            .map(|c| fixed_point_restriction(fan, pd, c, params))
            .collect::<Result<Vec<_>>>()?;
        let inv_euler = points
            .iter()
            .map(|p| {
                let e = p.weights.iter().fold(int(p.det.abs()), |acc, w| acc * w);
                e.recip()
            })
            .collect();
        Ok(Localizer {
            n: fan.dim(),
            k: pd.k,
            points,
            inv_euler,
        })
    }

    /// Draws `lambda` from `rng` until every fixed point is generic.
    pub fn sample<R: Rng>(fan: &ValidatedFan, pd: &PicardData, rng: &mut R) -> Result<Self> {
        let mut last = None;
        for _ in 0..MAX_LAMBDA_ATTEMPTS {
            let params = LocalizationParams::sample(fan.num_rays(), rng);
            match Self::new(fan, pd, &params) {
                Ok(loc) => return Ok(loc),
                Err(e @ Error::NonGeneric(_)) => last = Some(e),
                Err(e) => return Err(e),
            }
        }
        Err(last.unwrap_or_else(|| Error::NonGeneric("no attempts made".into())))
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.points
    }

    /// Integral of `h^alpha` for `|alpha| = n`, summed over fixed points in parallel.
    pub fn integrate_monomial(&self, alpha: &[u32]) -> Result<Rational> {
        if alpha.len() != self.k {
            return Err(Error::ShapeMismatch {
                vars_a: alpha.len(),
                cap_a: 0,
                vars_b: self.k,
                cap_b: 0,
            });
        }
        let degree: usize = alpha.iter().map(|&a| a as usize).sum();
        if degree != self.n {
            return Err(Error::Unsupported(format!(
                "monomial of degree {degree} on a variety of dimension {}",
                self.n
            )));
        }
        Ok(self
            .points
            .par_iter()
            .zip(self.inv_euler.par_iter())
            .map(|(p, inv)| {
                let value = p.h.iter().zip(alpha).fold(Rational::one(), |acc, (x, &a)| {
                    acc * num_traits::pow(x.clone(), a as usize)
                });
                value * inv
            })
            .reduce(Rational::zero, |a, b| a + b))
    }
}

/// Integral of `h^alpha` with `|alpha| = n` at the given parameters.
pub fn integrate_monomial(
    fan: &ValidatedFan,
    pd: &PicardData,
    alpha: &[u32],
    params: &LocalizationParams,
) -> Result<Rational> {
    Localizer::new(fan, pd, params)?.integrate_monomial(alpha)
}

/// All exponent vectors of `k` variables with total degree `n`, lexicographically descending.
pub fn monomials_of_degree(k: usize, n: usize) -> Vec<Exponent> {
    fn rec(k: usize, n: usize, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if k == 1 {
            prefix.push(n as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=n).rev() {
            prefix.push(a as u32);
            rec(k - 1, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, n, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Top-degree intersection numbers `int_X h^alpha` for all `|alpha| = n`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionTable {
    pub dim: usize,
    pub num_vars: usize,
    pub entries: BTreeMap<Exponent, Rational>,
}

impl IntersectionTable {
    pub fn get(&self, alpha: &[u32]) -> Option<&Rational> {
        self.entries.get(alpha)
    }

    /// Linear extension to polynomials; only the degree-`n` part contributes.
    ///
    /// `zero` fixes the coefficient ring of the result.
    pub fn integrate<R: Coefficient>(&self, p: &MPoly<R>, zero: &R) -> Result<R> {
        if p.num_vars() != self.num_vars {
            return Err(Error::ShapeMismatch {
                vars_a: p.num_vars(),
                cap_a: p.cap(),
                vars_b: self.num_vars,
                cap_b: self.dim,
            });
        }
        let mut acc = zero.clone();
        for (e, c) in p.terms() {
            if let Some(v) = self.entries.get(e) {
                if !v.is_zero() {
                    acc = acc.ring_add(&c.scale(v));
                }
            }
        }
        Ok(acc)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|v| v.denom().is_one())
    }
}

fn table_at(loc: &Localizer, k: usize, n: usize) -> Result<IntersectionTable> {
    let entries = monomials_of_degree(k, n)
        .into_iter()
        .map(|alpha| {
            let v = loc.integrate_monomial(&alpha)?;
            Ok((alpha, v))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(IntersectionTable {
        dim: n,
        num_vars: k,
        entries,
    })
}

/// Intersection table computed at two independent generic `lambda`s drawn
/// from `seed`; the two runs must agree exactly.
pub fn intersection_table(
    fan: &ValidatedFan,
    pd: &PicardData,
    seed: u64,
) -> Result<IntersectionTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = table_at(&Localizer::sample(fan, pd, &mut rng)?, pd.k, fan.dim())?;
    let second = table_at(&Localizer::sample(fan, pd, &mut rng)?, pd.k, fan.dim())?;
    if first != second {
        return Err(Error::Inconsistency(
            "intersection numbers depend on the localization parameters".into(),
        ));
    }
    Ok(first)
}

/// Integral of a polynomial over the toric variety.
pub fn integrate<R: Coefficient>(table: &IntersectionTable, p: &MPoly<R>, zero: &R) -> Result<R> {
    table.integrate(p, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::rat;
    use crate::toric::fan::{hirzebruch, product_projective, projective_space};
    use crate::toric::picard::picard_data;

    fn lam(v: &[i64]) -> LocalizationParams {
        LocalizationParams::new(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn p1_fixed_points() {
        let fan = projective_space(1).unwrap();
        let pd = picard_data(&fan).unwrap();
        let params = lam(&[3, 11]);
        // Cone 0 is {0}: the other ray (index 1) forces h = lambda_2.
        let cone_of = |ray: usize| {
            fan.max_cones()
                .iter()
                .position(|c| c == &vec![ray])
                .unwrap()
        };
        let a = fixed_point_restriction(&fan, &pd, cone_of(0), &params).unwrap();
        assert_eq!(a.h, vec![int(11)]);
        let b = fixed_point_restriction(&fan, &pd, cone_of(1), &params).unwrap();
        assert_eq!(b.h, vec![int(3)]);
    }

    #[test]
    fn zero_lambda_gives_zero_restrictions() {
        let fan = product_projective(&[1, 2]).unwrap();
        let pd = picard_data(&fan).unwrap();
        let params = lam(&[0; 5]);
        for c in 0..fan.max_cones().len() {
            let err = fixed_point_restriction(&fan, &pd, c, &params).unwrap_err();
            assert_eq!(err.code(), "non_generic");
        }
        // The restriction itself is zero before the weight check.
        let outside: Vec<usize> = (0..5).filter(|j| !fan.max_cones()[0].contains(j)).collect();
        let system: Vec<Vec<i64>> = outside.iter().map(|&j| pd.m_matrix[j].clone()).collect();
        let h = solve(&to_rational(&system), &[int(0), int(0)]).unwrap();
        assert!(h.iter().all(Zero::is_zero));
    }

    #[test]
    fn p1_integral_is_one() {
        let fan = projective_space(1).unwrap();
        let pd = picard_data(&fan).unwrap();
        assert_eq!(
            integrate_monomial(&fan, &pd, &[1], &lam(&[2, 9])).unwrap(),
            int(1)
        );
    }

    #[test]
    fn p2_and_products() {
        let fan = projective_space(2).unwrap();
        let pd = picard_data(&fan).unwrap();
        assert_eq!(
            integrate_monomial(&fan, &pd, &[2], &lam(&[1, 5, -7])).unwrap(),
            int(1)
        );
        let fan = product_projective(&[1, 1]).unwrap();
        let pd = picard_data(&fan).unwrap();
        let params = lam(&[4, -3, 17, 2]);
        assert_eq!(
            integrate_monomial(&fan, &pd, &[2, 0], &params).unwrap(),
            int(0)
        );
        assert_eq!(
            integrate_monomial(&fan, &pd, &[1, 1], &params).unwrap(),
            int(1)
        );
    }

    #[test]
    fn hirzebruch_self_intersections() {
        for a in 0..4 {
            let fan = hirzebruch(a).unwrap();
            let pd = picard_data(&fan).unwrap();
            let t = intersection_table(&fan, &pd, 11).unwrap();
            assert_eq!(t.get(&[2, 0]), Some(&int(0)));
            assert_eq!(t.get(&[1, 1]), Some(&int(1)));
            assert_eq!(t.get(&[0, 2]), Some(&int(-a)));
        }
    }

    #[test]
    fn cone_determinants_are_units() {
        let fan = hirzebruch(2).unwrap();
        let pd = picard_data(&fan).unwrap();
        let loc = Localizer::new(&fan, &pd, &lam(&[5, -2, 7, 13])).unwrap();
        assert!(loc.fixed_points().iter().all(|p| p.det.abs() == 1));
        // Signed determinants are not all equal: the ordering convention matters.
        assert!(loc.fixed_points().iter().any(|p| p.det == -1));
    }

    #[test]
    fn wrong_degree_rejected() {
        let fan = projective_space(2).unwrap();
        let pd = picard_data(&fan).unwrap();
        let err = integrate_monomial(&fan, &pd, &[1], &lam(&[1, 2, 3])).unwrap_err();
        assert_eq!(err.code(), "unsupported");
    }

    #[test]
    fn polynomial_integration() {
        let fan = projective_space(2).unwrap();
        let pd = picard_data(&fan).unwrap();
        let t = intersection_table(&fan, &pd, 1).unwrap();
        let p = MPoly::from_terms(1, 2, vec![(vec![2], int(5)), (vec![1], int(3))]);
        assert_eq!(t.integrate(&p, &int(0)).unwrap(), int(5));
        let c = MPoly::constant(1, 2, rat(7, 3));
        assert_eq!(t.integrate(&c, &int(0)).unwrap(), int(0));

        let fan = product_projective(&[1, 1]).unwrap();
        let pd = picard_data(&fan).unwrap();
        let t = intersection_table(&fan, &pd, 1).unwrap();
        let s = MPoly::from_terms(2, 2, vec![(vec![1, 0], int(1)), (vec![0, 1], int(1))]);
        assert_eq!(
            t.integrate(&s.try_mul(&s).unwrap(), &int(0)).unwrap(),
            int(2)
        );
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(1, 3), vec![vec![3]]);
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
    }
}
