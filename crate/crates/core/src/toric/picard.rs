use super::fan::ValidatedFan;
use crate::error::{Error, Result};
use crate::linalg::unimodular_inverse;

/// Divisor classes of the torus-invariant divisors in a chosen basis of Pic.
///
/// `m_matrix` is indexed by the original ray order: row `j` expresses
/// `D_j = sum_i m[j][i] h_i`. Rows at basis positions are unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardData {
    pub k: usize,
    pub basis_rays: Vec<usize>,
    pub m_matrix: Vec<Vec<i64>>,
    /// Ray order with the basis rays first, then the rest ascending.
    pub reorder_map: Vec<usize>,
}

impl PicardData {
    fn from_parts(basis_rays: Vec<usize>, m_matrix: Vec<Vec<i64>>) -> Self {
        let r = m_matrix.len();
        let mut reorder_map = basis_rays.clone();
        reorder_map.extend((0..r).filter(|j| !basis_rays.contains(j)));
        PicardData {
            k: basis_rays.len(),
            basis_rays,
            m_matrix,
            reorder_map,
        }
    }

    pub fn num_rays(&self) -> usize {
        self.m_matrix.len()
    }

    /// Rows of `m_matrix` in `reorder_map` order: identity block first.
    pub fn m_reordered(&self) -> Vec<Vec<i64>> {
        self.reorder_map
            .iter()
            .map(|&j| self.m_matrix[j].clone())
            .collect()
    }

    /// Rays outside the basis, ascending.
    pub fn non_basis_rays(&self) -> impl Iterator<Item = usize> + '_ {
        self.reorder_map[self.k..].iter().copied()
    }

    /// Checks `sum_j <w, u_j> m[j] = 0` for every standard basis vector `w` of M.
    pub fn check_relations(&self, fan: &ValidatedFan) -> Result<()> {
        for t in 0..fan.dim() {
            for i in 0..self.k {
                let s: i64 = fan
                    .rays()
                    .iter()
                    .zip(&self.m_matrix)
                    .map(|(u, m)| u[t] * m[i])
                    .sum();
                if s != 0 {
                    return Err(Error::Inconsistency(format!(
                        "linear relation e_{t} does not annihilate divisor classes (component {i} = {s})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Block form for `P^{n_1} x ... x P^{n_t}` built by [`super::fan::product_projective`]:
    /// the first ray of each factor is a basis element and every ray of factor `i` has class `h_i`.
    pub fn product_projective_block(dims: &[usize]) -> Self {
        let t = dims.len();
        let mut basis = Vec::with_capacity(t);
        let mut m = Vec::new();
        for (i, &n) in dims.iter().enumerate() {
            basis.push(m.len());
            for _ in 0..=n {
                let mut row = vec![0; t];
                row[i] = 1;
                m.push(row);
            }
        }
        Self::from_parts(basis, m)
    }
}

/// Picks a Z-basis of Pic and expresses every invariant divisor in it.
///
/// For a smooth fan, the rays outside any maximal cone `sigma` give a basis:
/// the relations from the dual basis of `sigma`'s rays solve for each
/// `D_rho`, `rho in sigma`, as `-sum_b <w_rho, u_b> D_b`. Among all maximal
/// cones, the one whose complement is lexicographically smallest is used, so
/// the basis prefers low ray indices.
pub fn picard_data(fan: &ValidatedFan) -> Result<PicardData> {
    let r = fan.num_rays();
    let n = fan.dim();
    if r < n {
        return Err(Error::Inconsistency("fewer rays than the dimension".into()));
    }
    let complement =
        |cone: &[usize]| -> Vec<usize> { (0..r).filter(|j| !cone.contains(j)).collect() };
    let (cone_idx, basis) = fan
        .max_cones()
        .iter()
        .enumerate()
        .map(|(c, cone)| (c, complement(cone)))
        .min_by(|a, b| a.1.cmp(&b.1))
        .ok_or_else(|| Error::Inconsistency("fan has no maximal cones".into()))?;
    let cone = &fan.max_cones()[cone_idx];
    let inv = unimodular_inverse(&fan.cone_matrix(cone_idx))
        .ok_or_else(|| Error::Inconsistency("validated cone is not unimodular".into()))?;
    let k = basis.len();
    let mut m = vec![vec![0i64; k]; r];
    for (pos, &b) in basis.iter().enumerate() {
        m[b][pos] = 1;
    }
    for (t, &rho) in cone.iter().enumerate() {
        for (pos, &b) in basis.iter().enumerate() {
            // <w_t, u_b> with w_t the t-th column of the inverse cone matrix.
            let pairing: i64 = (0..n).map(|s| fan.rays()[b][s] * inv[s][t]).sum();
            m[rho][pos] = -pairing;
        }
    }
    let pd = PicardData::from_parts(basis, m);
    pd.check_relations(fan)?;
    Ok(pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::fan::{hirzebruch, product_projective, projective_space};

    #[test]
    fn projective_space_is_all_ones() {
        for n in 1..=5 {
            let pd = picard_data(&projective_space(n).unwrap()).unwrap();
            assert_eq!(pd.k, 1);
            assert_eq!(pd.m_matrix, vec![vec![1]; n + 1]);
        }
    }

    #[test]
    fn p1_times_p1() {
        let pd = picard_data(&product_projective(&[1, 1]).unwrap()).unwrap();
        assert_eq!(pd.k, 2);
        assert_eq!(
            pd.m_matrix,
            vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]]
        );
    }

    #[test]
    fn hirzebruch_classes() {
        for a in 0..5 {
            let pd = picard_data(&hirzebruch(a).unwrap()).unwrap();
            assert_eq!(pd.basis_rays, vec![0, 1]);
            assert_eq!(
                pd.m_matrix,
                vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![a, 1]]
            );
        }
    }

    #[test]
    fn block_form_matches_computed() {
        for dims in [vec![3], vec![1, 1], vec![2, 1], vec![3, 3], vec![1, 2, 3]] {
            let fan = product_projective(&dims).unwrap();
            assert_eq!(
                picard_data(&fan).unwrap(),
                PicardData::product_projective_block(&dims)
            );
        }
    }

    #[test]
    fn reordered_rows_start_with_identity() {
        let pd = picard_data(&product_projective(&[2, 1]).unwrap()).unwrap();
        let m = pd.m_reordered();
        assert_eq!(&m[..2], &[vec![1, 0], vec![0, 1]]);
        assert_eq!(&m[2..], &[vec![1, 0], vec![1, 0], vec![0, 1]]);
    }
}
