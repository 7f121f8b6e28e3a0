use super::{Coefficient, Rational};
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Exponent vector of a monomial `h_1^a_1 ... h_k^a_k`.
pub type Exponent = Vec<u32>;

pub fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

/// Multivariate polynomial in `h_1..h_k`, truncated above total degree `cap`.
///
/// Terms with zero coefficient are never stored, and no stored term exceeds
/// the cap. Products discard everything above the cap as they go.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<R> {
    num_vars: usize,
    cap: usize,
    terms: BTreeMap<Exponent, R>,
}

impl<R: Coefficient> MPoly<R> {
    pub fn zero(num_vars: usize, cap: usize) -> Self {
        MPoly {
            num_vars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, cap: usize, c: R) -> Self {
        let mut p = Self::zero(num_vars, cap);
        p.insert(vec![0; num_vars], c);
        p
    }

    /// `coeff * h_var`.
    pub fn variable(num_vars: usize, cap: usize, var: usize, coeff: R) -> Self {
        assert!(var < num_vars, "variable index {var} out of range");
        let mut e = vec![0; num_vars];
        e[var] = 1;
        let mut p = Self::zero(num_vars, cap);
        if cap >= 1 {
            p.insert(e, coeff);
        }
        p
    }

    /// Builds a polynomial from terms, merging duplicates and dropping terms above the cap.
    pub fn from_terms(
        num_vars: usize,
        cap: usize,
        terms: impl IntoIterator<Item = (Exponent, R)>,
    ) -> Self {
        let mut p = Self::zero(num_vars, cap);
        for (e, c) in terms {
            assert_eq!(e.len(), num_vars, "exponent length must equal num_vars");
            if total_degree(&e) <= cap {
                p.accumulate(e, &c);
            }
        }
        p
    }

    /// Linear form `sum_i coeffs[i] * h_i` with coefficients lifted through `unit`.
    pub fn linear_form(cap: usize, coeffs: &[i64], unit: &R) -> Self {
        let k = coeffs.len();
        let mut p = Self::zero(k, cap);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 && cap >= 1 {
                let mut e = vec![0; k];
                e[i] = 1;
                p.insert(e, unit.from_rational_like(super::int(c)));
            }
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&R> {
        self.terms.get(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Option<&R> {
        self.terms.get(&vec![0; self.num_vars])
    }

    pub fn has_constant_term(&self) -> bool {
        self.constant_term().is_some()
    }

    /// Terms of exactly the given total degree.
    pub fn homogeneous_part(&self, degree: usize) -> Self {
        MPoly {
            num_vars: self.num_vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| total_degree(e) == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn insert(&mut self, e: Exponent, c: R) {
        if !c.is_zero_coeff() {
            self.terms.insert(e, c);
        }
    }

    fn accumulate(&mut self, e: Exponent, c: &R) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero_coeff() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().ring_add(c);
                if sum.is_zero_coeff() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars || self.cap != other.cap {
            return Err(Error::ShapeMismatch {
                vars_a: self.num_vars,
                cap_a: self.cap,
                vars_b: other.num_vars,
                cap_b: other.cap,
            });
        }
        if let (Some(a), Some(b)) = (self.terms.values().next(), other.terms.values().next()) {
            if !a.compatible(b) {
                return Err(Error::Inconsistency(
                    "polynomial coefficients live in incompatible rings".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.ring_neg())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(factor))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, factor: &R) -> Self {
        self.map_coeffs(|c| c.ring_mul(factor))
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero(self.num_vars, self.cap);
        for (e, c) in &self.terms {
            out.insert(e.clone(), f(c));
        }
        out
    }

    /// Truncated product; terms above the cap are never formed.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.num_vars, self.cap);
        let rhs: Vec<(&Exponent, usize, &R)> = other
            .terms
            .iter()
            .map(|(e, c)| (e, total_degree(e), c))
            .collect();
        for (ea, ca) in &self.terms {
            let da = total_degree(ea);
            for &(eb, db, cb) in &rhs {
                if da + db > self.cap {
                    continue;
                }
                let e: Exponent = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.accumulate(e, &ca.ring_mul(cb));
            }
        }
        out
    }

    pub fn try_pow(&self, exp: u32) -> Result<Self> {
        if self.is_zero() && exp > 0 {
            return Ok(self.clone());
        }
        let one = self.one_like()?;
        let mut result = one;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(result)
    }

    /// The constant polynomial one in the same ring, inferred from any stored coefficient.
    fn one_like(&self) -> Result<Self> {
        let c = self.terms.values().next().ok_or_else(|| {
            Error::Inconsistency("cannot infer the coefficient ring of a zero polynomial".into())
        })?;
        Ok(Self::constant(self.num_vars, self.cap, c.one_like()))
    }

    /// Product of many factors, multiplied pairwise in a balanced tree.
    ///
    /// Exact arithmetic makes the result independent of the association order.
    pub fn product(factors: &[Self], one: Self) -> Result<Self> {
        for f in factors {
            one.check_shape(f)?;
        }
        Ok(factors
            .par_iter()
            .cloned()
            .reduce(|| one.clone(), |a, b| a.mul_unchecked(&b)))
    }

    /// Inverse of a polynomial whose constant term is a unit.
    ///
    /// Writes `p = c0 (1 + n)` with `n` nilpotent modulo the cap and sums the
    /// finite geometric series in `-n`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.constant_term().ok_or(Error::NotUnit)?;
        let inv0 = c0.inverse().ok_or(Error::NotUnit)?;
        let mut nil = self.scale_by(&inv0);
        nil.terms.remove(&vec![0; self.num_vars]);
        let neg_nil = nil.neg();
        let one = Self::constant(self.num_vars, self.cap, c0.one_like());
        // Horner: 1 + m(1 + m(1 + ...)) with m = -n, depth = cap.
        let mut acc = one.clone();
        for _ in 0..self.cap {
            acc = one.try_add(&neg_nil.mul_unchecked(&acc))?;
        }
        Ok(acc.scale_by(&inv0))
    }

    /// Evaluates every variable at rationals, for coefficient rings that accept rational scaling.
    pub fn evaluate(&self, point: &[Rational]) -> Option<R> {
        assert_eq!(point.len(), self.num_vars);
        let mut acc: Option<R> = None;
        for (e, c) in &self.terms {
            let mut m = Rational::from_integer(1.into());
            for (x, &a) in point.iter().zip(e.iter()) {
                m *= num_traits::pow(x.clone(), a as usize);
            }
            let term = c.scale(&m);
            acc = Some(match acc {
                None => term,
                Some(a) => a.ring_add(&term),
            });
        }
        acc
    }
}

/// Substitutes `p` into the one-variable series `f`: `sum_j f_j p^j`.
///
/// `p` must have zero constant term, so only `j <= cap` contributes and the
/// sum is finite. Evaluated by Horner's rule from degree `min(cap, deg f)` down.
pub fn compose_series<R: Coefficient>(f: &super::UniSeries<R>, p: &MPoly<R>) -> Result<MPoly<R>> {
    if p.has_constant_term() {
        return Err(Error::CompositionDomain);
    }
    let top = f.degree_cap().min(p.cap());
    let lift = |c: &R| MPoly::constant(p.num_vars(), p.cap(), c.clone());
    let mut acc = lift(f.coeff(top));
    for j in (0..top).rev() {
        acc = acc.try_mul(p)?.try_add(&lift(f.coeff(j)))?;
    }
    Ok(acc)
}
