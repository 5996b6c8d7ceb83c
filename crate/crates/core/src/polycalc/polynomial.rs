//! Sparse multivariate polynomials over complex double-precision coefficients.
//!
//! Term maps are BTreeMaps keyed by [`MultiIndex`] so every polynomial has a
//! canonical form: deterministic iteration, equality up to coefficient
//! tolerance, and stable JSON output. Coefficients below
//! `1e-14 × (largest coefficient)` are pruned after every arithmetic result.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CoreError, Result};
use crate::polycalc::multi_index::{binomial, MultiIndex};

/// Relative pruning threshold applied after arithmetic.
const PRUNE_REL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    dimension: usize,
    terms: BTreeMap<MultiIndex, Complex64>,
}

impl Polynomial {
    pub fn zero(dimension: usize) -> Self {
        Polynomial {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dimension: usize, c: Complex64) -> Self {
        let mut p = Polynomial::zero(dimension);
        if c != Complex64::new(0.0, 0.0) {
            p.terms.insert(MultiIndex::zero(dimension), c);
        }
        p
    }

    /// The coordinate polynomial ξ_j.
    pub fn variable(dimension: usize, j: usize) -> Result<Self> {
        if j >= dimension {
            return Err(CoreError::InvalidParam {
                name: "variable",
                reason: format!("index {j} out of range for dimension {dimension}"),
            });
        }
        let mut p = Polynomial::zero(dimension);
        p.terms
            .insert(MultiIndex::unit(dimension, j), Complex64::new(1.0, 0.0));
        Ok(p)
    }

    pub fn monomial(alpha: MultiIndex, c: Complex64) -> Self {
        let mut p = Polynomial::zero(alpha.dimension());
        if c != Complex64::new(0.0, 0.0) {
            p.terms.insert(alpha, c);
        }
        p
    }

    /// P₂(ξ) = Σ_{j<n} ξ_j².
    pub fn sum_of_squares(n: usize) -> Self {
        let mut p = Polynomial::zero(n);
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[j] = 2;
            p.terms
                .insert(MultiIndex::new(e), Complex64::new(1.0, 0.0));
        }
        p
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max total order of the stored terms (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|a| a.order()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Complex64 {
        self.terms
            .get(alpha)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if self.dimension != other.dimension {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension,
                got: other.dimension,
            });
        }
        Ok(())
    }

    fn prune(mut self) -> Self {
        let cutoff = PRUNE_REL * self.max_coeff_norm();
        self.terms.retain(|_, c| c.norm() > cutoff);
        self
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            *out.terms
                .entry(a.clone())
                .or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        Ok(out.prune())
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
        .prune()
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        let mut terms: BTreeMap<MultiIndex, Complex64> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let key = a.add(b)?;
                *terms.entry(key).or_insert(Complex64::new(0.0, 0.0)) += ca * cb;
            }
        }
        Ok(Polynomial {
            dimension: self.dimension,
            terms,
        }
        .prune())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::constant(self.dimension, Complex64::new(1.0, 0.0));
        for _ in 0..e {
            result = result.mul(self).expect("same dimension");
        }
        result
    }

    /// Exact mixed derivative ∂^α P (with respect to the symbol variables).
    pub fn derivative(&self, alpha: &MultiIndex) -> Result<Polynomial> {
        if alpha.dimension() != self.dimension {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension,
                got: alpha.dimension(),
            });
        }
        let mut terms: BTreeMap<MultiIndex, Complex64> = BTreeMap::new();
        'term: for (a, c) in &self.terms {
            let mut factor = 1.0;
            let mut entries = Vec::with_capacity(self.dimension);
            for j in 0..self.dimension {
                let p = a.entry(j);
                let k = alpha.entry(j);
                if p < k {
                    continue 'term;
                }
                // d^k/dx^k x^p = p(p-1)...(p-k+1) x^{p-k}
                for step in 0..k {
                    factor *= (p - step) as f64;
                }
                entries.push(p - k);
            }
            *terms
                .entry(MultiIndex::new(entries))
                .or_insert(Complex64::new(0.0, 0.0)) += c * factor;
        }
        Ok(Polynomial {
            dimension: self.dimension,
            terms,
        }
        .prune())
    }

    /// First partial derivative ∂_j P.
    pub fn partial(&self, j: usize) -> Result<Polynomial> {
        self.derivative(&MultiIndex::unit(self.dimension, j))
    }

    /// Conjugate every coefficient. Involution; fixes real polynomials.
    pub fn conjugate(&self) -> Polynomial {
        Polynomial {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.conj()))
                .collect(),
        }
    }

    /// The polynomial ξ ↦ P(ξ + w), expanded exactly one variable at a time
    /// by the binomial theorem.
    pub fn shift(&self, w: &[Complex64]) -> Result<Polynomial> {
        if w.len() != self.dimension {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension,
                got: w.len(),
            });
        }
        let mut p = self.clone();
        for (j, &wj) in w.iter().enumerate() {
            if wj != Complex64::new(0.0, 0.0) {
                p = p.shift_var(j, wj);
            }
        }
        Ok(p)
    }

    fn shift_var(&self, j: usize, w: Complex64) -> Polynomial {
        let mut terms: BTreeMap<MultiIndex, Complex64> = BTreeMap::new();
        for (a, c) in &self.terms {
            let p = a.entry(j);
            // precompute w^(p-q)
            let mut wpow = vec![Complex64::new(1.0, 0.0); (p + 1) as usize];
            for q in 1..=p as usize {
                wpow[q] = wpow[q - 1] * w;
            }
            for q in 0..=p {
                let coeff = c * binomial(p, q) * wpow[(p - q) as usize];
                let mut entries = a.entries().to_vec();
                entries[j] = q;
                *terms
                    .entry(MultiIndex::new(entries))
                    .or_insert(Complex64::new(0.0, 0.0)) += coeff;
            }
        }
        Polynomial {
            dimension: self.dimension,
            terms,
        }
        .prune()
    }

    /// Exact evaluation at a complex point, via per-variable power tables.
    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64> {
        if z.len() != self.dimension {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension,
                got: z.len(),
            });
        }
        let mut max_pow = vec![0u32; self.dimension];
        for a in self.terms.keys() {
            for j in 0..self.dimension {
                max_pow[j] = max_pow[j].max(a.entry(j));
            }
        }
        let tables: Vec<Vec<Complex64>> = (0..self.dimension)
            .map(|j| {
                let mut t = vec![Complex64::new(1.0, 0.0); (max_pow[j] + 1) as usize];
                for p in 1..=max_pow[j] as usize {
                    t[p] = t[p - 1] * z[j];
                }
                t
            })
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, c) in &self.terms {
            let mut prod = *c;
            for j in 0..self.dimension {
                prod *= tables[j][a.entry(j) as usize];
            }
            acc += prod;
        }
        Ok(acc)
    }

    pub fn evaluate_real(&self, x: &[f64]) -> Result<Complex64> {
        let z: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.evaluate(&z)
    }

    /// Re-embed into `new_dim` variables, mapping variable j to j + offset.
    pub fn embed(&self, new_dim: usize, offset: usize) -> Result<Polynomial> {
        if offset + self.dimension > new_dim {
            return Err(CoreError::InvalidParam {
                name: "embed",
                reason: format!(
                    "offset {offset} + dimension {} exceeds target {new_dim}",
                    self.dimension
                ),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| {
                let mut entries = vec![0u32; new_dim];
                entries[offset..offset + self.dimension].copy_from_slice(a.entries());
                (MultiIndex::new(entries), *c)
            })
            .collect();
        Ok(Polynomial {
            dimension: new_dim,
            terms,
        })
    }

    /// Substitute variable `j` by the polynomial `r` (same dimension as self).
    pub fn substitute(&self, j: usize, r: &Polynomial) -> Result<Polynomial> {
        self.check_dim(r)?;
        let max_pow = self
            .terms
            .keys()
            .map(|a| a.entry(j))
            .max()
            .unwrap_or(0);
        let mut rpow = Vec::with_capacity((max_pow + 1) as usize);
        rpow.push(Polynomial::constant(self.dimension, Complex64::new(1.0, 0.0)));
        for p in 1..=max_pow as usize {
            let next = rpow[p - 1].mul(r)?;
            rpow.push(next);
        }
        let mut out = Polynomial::zero(self.dimension);
        for (a, c) in &self.terms {
            let mut entries = a.entries().to_vec();
            let p = entries[j];
            entries[j] = 0;
            let rest = Polynomial::monomial(MultiIndex::new(entries), *c);
            out = out.add(&rest.mul(&rpow[p as usize])?)?;
        }
        Ok(out)
    }

    /// Equality after normalizing by the largest coefficient magnitude.
    pub fn approx_eq(&self, other: &Polynomial, tol: f64) -> bool {
        if self.dimension != other.dimension {
            return false;
        }
        let scale = self.max_coeff_norm().max(other.max_coeff_norm());
        if scale == 0.0 {
            return true;
        }
        let mut keys: Vec<&MultiIndex> = self.terms.keys().collect();
        keys.extend(other.terms.keys());
        keys.sort();
        keys.dedup();
        keys.iter()
            .all(|a| (self.coefficient(a) - other.coefficient(a)).norm() <= tol * scale)
    }

    /// Leading term under graded lexicographic order.
    fn leading_term_grlex(&self) -> Option<(MultiIndex, Complex64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.order().cmp(&b.order()).then_with(|| a.cmp(b)))
            .map(|(a, c)| (a.clone(), *c))
    }

    /// Single-divisor multivariate division with remainder under graded
    /// lexicographic order: `self = q·divisor + r` where no term of `r` is
    /// divisible by the leading term of `divisor`. For a single divisor the
    /// remainder vanishes exactly when `self` lies in the principal ideal.
    pub fn divide_with_remainder(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_dim(divisor)?;
        let (lt_idx, lt_coeff) = divisor.leading_term_grlex().ok_or(CoreError::InvalidParam {
            name: "divisor",
            reason: "division by the zero polynomial".into(),
        })?;
        let mut q = Polynomial::zero(self.dimension);
        let mut r = Polynomial::zero(self.dimension);
        let mut p = self.clone();
        while let Some((pa, pc)) = p.leading_term_grlex() {
            let divides = (0..self.dimension).all(|j| pa.entry(j) >= lt_idx.entry(j));
            if divides {
                let entries: Vec<u32> = (0..self.dimension)
                    .map(|j| pa.entry(j) - lt_idx.entry(j))
                    .collect();
                let t = Polynomial::monomial(MultiIndex::new(entries), pc / lt_coeff);
                q = q.add(&t)?;
                p = p.sub(&t.mul(divisor)?)?;
                // the leading monomial cancels exactly in exact arithmetic;
                // drop any floating-point residue so the loop strictly descends
                p.terms.remove(&pa);
            } else {
                r = r.add(&Polynomial::monomial(pa.clone(), pc))?;
                p.terms.remove(&pa);
            }
        }
        Ok((q, r))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| {
                let mono: String = a
                    .entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| {
                        if e == 1 {
                            format!("x{j}")
                        } else {
                            format!("x{j}^{e}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*");
                if mono.is_empty() {
                    format!("({:.4}{:+.4}i)", c.re, c.im)
                } else {
                    format!("({:.4}{:+.4}i)*{}", c.re, c.im, mono)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    alpha: Vec<u32>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    dimension: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rep = PolynomialJson {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| TermJson {
                    alpha: a.entries().to_vec(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        rep.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rep = PolynomialJson::deserialize(deserializer)?;
        let mut p = Polynomial::zero(rep.dimension);
        for t in rep.terms {
            if t.alpha.len() != rep.dimension {
                return Err(D::Error::custom(format!(
                    "term index length {} does not match dimension {}",
                    t.alpha.len(),
                    rep.dimension
                )));
            }
            let c = Complex64::new(t.re, t.im);
            *p.terms
                .entry(MultiIndex::new(t.alpha))
                .or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        Ok(p.prune())
    }
}
