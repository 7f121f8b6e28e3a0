use super::classes::{p1_y, string_check, w2_y, ObstructionReport, StringVerdict};
use super::model::CIModel;
use crate::error::Result;
use crate::ringcore::{Coefficient, MPoly, QSeries, Rational};
use crate::theta::{ahat_char_series, witten_char_series, CharSeries};
use crate::toric::{intersection_table, IntersectionTable};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Seed for the localization parameters when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// `int_X prod_j F(C_j) * prod_l E_l F(E_l)^{-1}` for a characteristic series `F`.
fn pushforward_integral(
    ci: &CIModel,
    table: &IntersectionTable,
    cs: &CharSeries,
) -> Result<QSeries> {
    let n = ci.ambient_dim();
    let k = ci.picard_rank();
    let unit = QSeries::one(cs.q_order());
    let one = MPoly::constant(k, n, unit.clone());

    let mut multiplicity: BTreeMap<&[i64], u32> = BTreeMap::new();
    for row in ci.divisor_forms() {
        *multiplicity.entry(row.as_slice()).or_default() += 1;
    }
    let tangent: Vec<MPoly<QSeries>> = multiplicity
        .into_par_iter()
        .map(|(row, mult)| {
            let f = crate::ringcore::compose_series(&cs.series, &ci.linear(row, &unit))?;
            f.try_pow(mult)
        })
        .collect::<Result<_>>()?;
    let normal: Vec<MPoly<QSeries>> = ci
        .degrees
        .par_iter()
        .map(|row| {
            let e = ci.linear(row, &unit);
            let f = crate::ringcore::compose_series(&cs.series, &e)?;
            e.try_mul(&f.invert()?)
        })
        .collect::<Result<_>>()?;
    let mut factors = tangent;
    factors.extend(normal);
    let integrand = MPoly::product(&factors, one)?;
    table.integrate(&integrand, &unit.zero_like())
}

/// Witten genus of `Y` through `q^q_order`, integrated with `table`.
pub fn witten_genus(ci: &CIModel, table: &IntersectionTable, q_order: usize) -> Result<QSeries> {
    let cs = witten_char_series(q_order, 2 * ci.ambient_dim())?;
    pushforward_integral(ci, table, &cs)
}

/// Â-genus of `Y`, integrated with `table`.
pub fn ahat_genus(ci: &CIModel, table: &IntersectionTable) -> Result<Rational> {
    let cs = ahat_char_series(2 * ci.ambient_dim());
    Ok(pushforward_integral(ci, table, &cs)?.coeff(0).clone())
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Timings {
    pub table: Duration,
    pub witten: Duration,
    pub ahat: Duration,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenusMetadata {
    pub q_order: usize,
    pub seed: u64,
    pub complex_dim: usize,
    /// The Witten genus is a genus of `4m`-manifolds; other dimensions are computed anyway.
    pub real_dim_divisible_by_four: bool,
    pub timings: Timings,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenusReport {
    pub verdict: StringVerdict,
    pub obstructions: ObstructionReport,
    pub w2: MPoly<Rational>,
    pub p1: MPoly<Rational>,
    pub witten_genus: QSeries,
    pub ahat: Rational,
    pub table: IntersectionTable,
    pub metadata: GenusMetadata,
}

/// Runs the string check, the intersection table and both genera.
pub fn genus_report(ci: &CIModel, q_order: usize, seed: u64) -> Result<GenusReport> {
    let obstructions = string_check(ci);
    let start = Instant::now();
    let table = intersection_table(&ci.fan, &ci.pd, seed)?;
    let t_table = start.elapsed();
    let start = Instant::now();
    let witten = witten_genus(ci, &table, q_order)?;
    let t_witten = start.elapsed();
    let start = Instant::now();
    let ahat = ahat_genus(ci, &table)?;
    let t_ahat = start.elapsed();
    Ok(GenusReport {
        verdict: obstructions.verdict,
        w2: w2_y(ci),
        p1: p1_y(ci)?,
        obstructions,
        witten_genus: witten,
        ahat,
        table,
        metadata: GenusMetadata {
            q_order,
            seed,
            complex_dim: ci.complex_dim(),
            real_dim_divisible_by_four: ci.complex_dim() % 2 == 0,
            timings: Timings {
                table: t_table,
                witten: t_witten,
                ahat: t_ahat,
            },
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::{int, rat};
    use crate::toric::{product_projective, projective_space};

    fn run(ci: &CIModel, n: usize) -> QSeries {
        let table = intersection_table(&ci.fan, &ci.pd, 7).unwrap();
        witten_genus(ci, &table, n).unwrap()
    }

    fn ahat(ci: &CIModel) -> Rational {
        let table = intersection_table(&ci.fan, &ci.pd, 7).unwrap();
        ahat_genus(ci, &table).unwrap()
    }

    fn pn(n: usize, d: Vec<Vec<i64>>) -> CIModel {
        CIModel::from_fan(projective_space(n).unwrap(), d).unwrap()
    }

    #[test]
    fn quadric_surface_vanishes() {
        let g = run(&pn(3, vec![vec![2]]), 8);
        assert_eq!(g, QSeries::zero(8));
    }

    #[test]
    fn p1_vanishes() {
        assert!(run(&pn(1, vec![]), 4).is_zero());
    }

    #[test]
    fn quartic_surface() {
        let g = run(&pn(3, vec![vec![4]]), 2);
        assert_eq!(*g.coeff(0), int(2));
        assert!(!g.is_zero());
    }

    #[test]
    fn quartic_surface_is_twice_e2() {
        // E_2 = 1 - 24 sum sigma_1(m) q^m.
        let n = 6;
        let g = run(&pn(3, vec![vec![4]]), n);
        for m in 1..=n as i64 {
            let sigma: i64 = (1..=m).filter(|d| m % d == 0).sum();
            assert_eq!(*g.coeff(m as usize), int(-48 * sigma), "q^{m}");
        }
    }

    #[test]
    fn ahat_examples() {
        assert_eq!(ahat(&pn(2, vec![])), rat(-1, 8));
        assert_eq!(ahat(&pn(3, vec![vec![4]])), int(2));
        assert_eq!(ahat(&pn(3, vec![vec![2]])), int(0));
    }

    #[test]
    fn q0_is_ahat() {
        for ci in [
            pn(2, vec![]),
            pn(4, vec![vec![3]]),
            pn(5, vec![vec![2], vec![3]]),
        ] {
            assert_eq!(run(&ci, 1).coeff(0), &ahat(&ci));
        }
    }

    #[test]
    fn odd_dimension_rank_one_vanishes() {
        for ci in [
            pn(2, vec![vec![1]]),
            pn(4, vec![vec![3]]),
            pn(4, vec![vec![5]]),
            pn(3, vec![]),
        ] {
            assert!(run(&ci, 3).is_zero(), "{:?}", ci.degrees);
        }
    }

    #[test]
    fn genus_is_multiplicative() {
        let a = pn(2, vec![]);
        let b = CIModel::from_fan(product_projective(&[1, 1]).unwrap(), vec![vec![1, 2]]).unwrap();
        let c = pn(3, vec![vec![4]]);
        for (x, y) in [(&a, &a), (&a, &c), (&b, &a)] {
            let prod = x.product(y).unwrap();
            let lhs = run(&prod, 2);
            let rhs = run(x, 2).checked_mul(&run(y, 2)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn report_metadata() {
        let r = genus_report(&pn(3, vec![vec![2]]), 3, DEFAULT_SEED).unwrap();
        assert_eq!(r.verdict, StringVerdict::StringCertified);
        assert!(r.witten_genus.is_zero());
        assert!(r.p1.is_zero());
        assert!(r.w2.is_zero());
        assert_eq!(r.metadata.complex_dim, 2);
        assert!(r.metadata.real_dim_divisible_by_four);
    }
}
