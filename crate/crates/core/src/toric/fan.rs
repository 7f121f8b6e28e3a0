use crate::error::{Error, Result};
use crate::linalg::{det_i64, gcd_slice, unimodular_inverse};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::Deref;

/// Number of random directions used for the covering check.
pub const MEMBERSHIP_SAMPLES: usize = 256;
const MEMBERSHIP_SEED: u64 = 0x7a11_f00d;
const DIRECTION_RANGE: i64 = 1_000_000;

/// Rays and maximal cones of a toric variety.
///
/// Cone index lists are kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Checks structure only: ray lengths, cone indices, cone sizes, primitivity and distinctness.
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedFan("dimension must be at least 1".into()));
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(Error::MalformedFan(format!(
                    "ray {i} has {} entries, expected {dim}",
                    ray.len()
                )));
            }
            let g = gcd_slice(ray);
            if g != 1 {
                return Err(Error::NonPrimitiveRay { index: i, gcd: g });
            }
        }
        let distinct: BTreeSet<&Vec<i64>> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::MalformedFan("rays must be pairwise distinct".into()));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for (c, cone) in max_cones.into_iter().enumerate() {
            if let Some(&ray) = cone.iter().find(|&&j| j >= rays.len()) {
                return Err(Error::BadCone {
                    cone: c,
                    ray,
                    rays: rays.len(),
                });
            }
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cone.len() || sorted.len() != dim {
                return Err(Error::MalformedFan(format!(
                    "cone {c} must list {dim} distinct rays, got {cone:?}"
                )));
            }
            cones.push(sorted);
        }
        if cones.is_empty() {
            return Err(Error::MalformedFan("fan has no maximal cones".into()));
        }
        let used: BTreeSet<usize> = cones.iter().flatten().copied().collect();
        if let Some(j) = (0..rays.len()).find(|j| !used.contains(j)) {
            return Err(Error::MalformedFan(format!(
                "ray {j} lies in no maximal cone"
            )));
        }
        Ok(Fan {
            dim,
            rays,
            max_cones: cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Matrix whose rows are the rays of cone `c`.
    pub fn cone_matrix(&self, c: usize) -> Vec<Vec<i64>> {
        self.max_cones[c]
            .iter()
            .map(|&j| self.rays[j].clone())
            .collect()
    }

    /// Product fan: rays of `self` in the first coordinates, then rays of `other`.
    pub fn product(&self, other: &Fan) -> Fan {
        let dim = self.dim + other.dim;
        let mut rays = Vec::with_capacity(self.num_rays() + other.num_rays());
        for r in &self.rays {
            let mut v = r.clone();
            v.resize(dim, 0);
            rays.push(v);
        }
        for r in &other.rays {
            let mut v = vec![0; self.dim];
            v.extend_from_slice(r);
            rays.push(v);
        }
        let shift = self.num_rays();
        let mut max_cones = Vec::with_capacity(self.max_cones.len() * other.max_cones.len());
        for a in &self.max_cones {
            for b in &other.max_cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|j| j + shift));
                max_cones.push(c);
            }
        }
        Fan {
            dim,
            rays,
            max_cones,
        }
    }

    /// Checks smoothness and completeness.
    pub fn validate(self) -> Result<ValidatedFan> {
        for c in 0..self.max_cones.len() {
            let det = det_i64(&self.cone_matrix(c));
            if det.abs() != 1 {
                return Err(Error::NotSmooth { cone: c, det });
            }
        }
        self.check_facets()?;
        self.check_membership()?;
        Ok(ValidatedFan { fan: self })
    }

    fn check_facets(&self) -> Result<()> {
        let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for cone in &self.max_cones {
            for skip in 0..cone.len() {
                let facet: Vec<usize> = cone
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &j)| j)
                    .collect();
                *counts.entry(facet).or_default() += 1;
            }
        }
        if let Some((facet, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::NotComplete(format!(
                "facet {facet:?} lies in {n} maximal cones, expected 2"
            )));
        }
        Ok(())
    }

    /// Every generic direction must lie in the interior of exactly one maximal cone.
    fn check_membership(&self) -> Result<()> {
        let inverses: Vec<Vec<Vec<i64>>> = (0..self.max_cones.len())
            .map(|c| unimodular_inverse(&self.cone_matrix(c)).expect("checked unimodular"))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(MEMBERSHIP_SEED);
        let mut accepted = 0;
        let mut attempts = 0;
        while accepted < MEMBERSHIP_SAMPLES {
            attempts += 1;
            if attempts > 50 * MEMBERSHIP_SAMPLES {
                return Err(Error::Inconsistency(
                    "could not draw generic directions for the covering check".into(),
                ));
            }
            let d: Vec<i64> = (0..self.dim)
                .map(|_| rng.gen_range(-DIRECTION_RANGE..=DIRECTION_RANGE))
                .collect();
            // d = sum_s c_s u_s  <=>  c = d U^{-1}, with U's rows the cone's rays.
            let mut hits = 0;
            let mut degenerate = false;
            for inv in &inverses {
                let coords: Vec<i128> = (0..self.dim)
                    .map(|t| {
                        (0..self.dim)
                            .map(|s| d[s] as i128 * inv[s][t] as i128)
                            .sum()
                    })
                    .collect();
                if coords.contains(&0) {
                    degenerate = true;
                    break;
                }
                if coords.iter().all(|&x| x > 0) {
                    hits += 1;
                }
            }
            if degenerate {
                continue;
            }
            accepted += 1;
            if hits != 1 {
                return Err(Error::NotComplete(format!(
                    "direction {d:?} lies in {hits} maximal cones"
                )));
            }
        }
        Ok(())
    }
}

/// A fan that passed smoothness and completeness checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedFan {
    fan: Fan,
}

impl ValidatedFan {
    pub fn into_inner(self) -> Fan {
        self.fan
    }

    /// Product of validated fans is again smooth and complete.
    pub fn product(&self, other: &ValidatedFan) -> ValidatedFan {
        ValidatedFan {
            fan: self.fan.product(&other.fan),
        }
    }
}

impl Deref for ValidatedFan {
    type Target = Fan;
    fn deref(&self) -> &Fan {
        &self.fan
    }
}

pub fn validate_fan(fan: Fan) -> Result<ValidatedFan> {
    fan.validate()
}

/// Fan of `P^n`: rays `e_1..e_n, -(e_1+...+e_n)`, cones all `n`-subsets.
pub fn projective_space(n: usize) -> Result<ValidatedFan> {
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n)
        .rev()
        .map(|skip| (0..=n).filter(|&j| j != skip).collect())
        .collect();
    Fan::new(n, rays, cones)?.validate()
}

/// Fan of `P^{n_1} x ... x P^{n_t}`, rays grouped by factor.
pub fn product_projective(dims: &[usize]) -> Result<ValidatedFan> {
    let mut iter = dims.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::MalformedFan("product needs at least one factor".into()))?;
    let mut fan = projective_space(*first)?;
    for &n in iter {
        fan = fan.product(&projective_space(n)?);
    }
    Ok(fan)
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Result<ValidatedFan> {
    Fan::new(
        2,
        vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )?
    .validate()
}
