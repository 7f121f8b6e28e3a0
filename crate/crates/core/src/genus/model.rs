use crate::error::{Error, Result};
use crate::ringcore::{Coefficient, MPoly};
use crate::toric::{picard_data, PicardData, ValidatedFan};

/// A complete intersection `Y` of `s` hypersurfaces in a smooth complete toric variety `X`.
///
/// Row `l` of `degrees` gives the class `E_l = sum_i d[l][i] h_i` in the Picard basis of `pd`.
#[derive(Clone, Debug, PartialEq)]
pub struct CIModel {
    pub fan: ValidatedFan,
    pub pd: PicardData,
    pub degrees: Vec<Vec<i64>>,
}

impl CIModel {
    pub fn new(fan: ValidatedFan, pd: PicardData, degrees: Vec<Vec<i64>>) -> Result<Self> {
        if pd.num_rays() != fan.num_rays() {
            return Err(Error::InvalidModel(format!(
                "Picard data covers {} rays, fan has {}",
                pd.num_rays(),
                fan.num_rays()
            )));
        }
        if degrees.len() > fan.dim() {
            return Err(Error::InvalidModel(format!(
                "{} hypersurfaces in a variety of dimension {}",
                degrees.len(),
                fan.dim()
            )));
        }
        for (l, row) in degrees.iter().enumerate() {
            if row.len() != pd.k {
                return Err(Error::InvalidModel(format!(
                    "degree row {l} has {} entries, Picard rank is {}",
                    row.len(),
                    pd.k
                )));
            }
            if row.iter().all(|&d| d == 0) {
                return Err(Error::InvalidModel(format!(
                    "degree row {l} is zero: the hypersurface class is empty"
                )));
            }
        }
        Ok(CIModel { fan, pd, degrees })
    }

    /// Builds the model with Picard data computed from the fan.
    pub fn from_fan(fan: ValidatedFan, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let pd = picard_data(&fan)?;
        Self::new(fan, pd, degrees)
    }

    /// Complex dimension of the ambient variety.
    pub fn ambient_dim(&self) -> usize {
        self.fan.dim()
    }

    /// Complex dimension of `Y`.
    pub fn complex_dim(&self) -> usize {
        self.fan.dim() - self.degrees.len()
    }

    pub fn picard_rank(&self) -> usize {
        self.pd.k
    }

    pub fn num_hypersurfaces(&self) -> usize {
        self.degrees.len()
    }

    /// `C_j = sum_i m[j][i] h_i` as a linear form, for every ray.
    pub fn divisor_forms(&self) -> &[Vec<i64>] {
        &self.pd.m_matrix
    }

    /// Linear polynomial in the `h` variables, capped at the ambient dimension.
    pub fn linear<R: Coefficient>(&self, coeffs: &[i64], unit: &R) -> MPoly<R> {
        MPoly::linear_form(self.ambient_dim(), coeffs, unit)
    }

    /// Model on `X_1 x X_2` with the hypersurfaces of both factors pulled back.
    pub fn product(&self, other: &CIModel) -> Result<CIModel> {
        let fan = self.fan.product(&other.fan);
        let k1 = self.pd.k;
        let k2 = other.pd.k;
        let mut degrees = Vec::with_capacity(self.degrees.len() + other.degrees.len());
        for row in &self.degrees {
            let mut r = row.clone();
            r.resize(k1 + k2, 0);
            degrees.push(r);
        }
        for row in &other.degrees {
            let mut r = vec![0; k1];
            r.extend_from_slice(row);
            degrees.push(r);
        }
        let model = CIModel::from_fan(fan, degrees)?;
        // The lexicographic basis rule keeps factor bases in order; anything else is a bug.
        let mut expected = self.pd.basis_rays.clone();
        expected.extend(other.pd.basis_rays.iter().map(|b| b + self.fan.num_rays()));
        if model.pd.basis_rays != expected {
            return Err(Error::Inconsistency(
                "product basis does not restrict to the factor bases".into(),
            ));
        }
        Ok(model)
    }
}
