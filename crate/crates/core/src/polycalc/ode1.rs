//! One-dimensional differential operators Σ cₖ(s) Dₛᵏ with polynomial
//! coefficients, in the fixed normal order "coefficients left, derivatives
//! right". Dₛ = −i d/ds, so [Dₛ, c(s)] = (Dₛc)(s).

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::Result;
use crate::polycalc::multi_index::binomial;
use crate::polycalc::polynomial::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ode1Operator {
    /// Derivative order k → coefficient polynomial cₖ(s) (dimension 1).
    coeffs: BTreeMap<u32, Polynomial>,
}

impl Ode1Operator {
    pub fn zero() -> Self {
        Ode1Operator {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, Polynomial::constant(1, Complex64::new(1.0, 0.0)));
        Ode1Operator { coeffs }
    }

    /// Build from explicit (order, coefficient) pairs.
    pub fn from_coeffs(pairs: Vec<(u32, Polynomial)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, p) in pairs {
            if !p.is_zero() {
                let entry = coeffs
                    .entry(k)
                    .or_insert_with(|| Polynomial::zero(1));
                *entry = entry.add(&p).expect("dimension 1");
            }
        }
        let mut op = Ode1Operator { coeffs };
        op.normalize();
        op
    }

    /// Dₛ ± iτ(1+s).
    pub fn conjugated_base(sign: Sign, tau: f64) -> Self {
        let one_plus_s = Polynomial::constant(1, Complex64::new(1.0, 0.0))
            .add(&Polynomial::variable(1, 0).unwrap())
            .unwrap();
        Ode1Operator::from_coeffs(vec![
            (1, Polynomial::constant(1, Complex64::new(1.0, 0.0))),
            (0, one_plus_s.scale(Complex64::new(0.0, sign.factor() * tau))),
        ])
    }

    /// (Dₛ ± iτ(1+s))^K by repeated composition; coefficient of Dₛᴷ is 1.
    pub fn conjugated_power(sign: Sign, tau: f64, k: u32) -> Self {
        let base = Ode1Operator::conjugated_base(sign, tau);
        let mut acc = Ode1Operator::identity();
        for _ in 0..k {
            acc = acc.compose(&base).expect("dimension 1 composition");
        }
        acc
    }

    fn normalize(&mut self) {
        self.coeffs.retain(|_, p| !p.is_zero());
    }

    pub fn order(&self) -> u32 {
        self.coeffs.keys().max().copied().unwrap_or(0)
    }

    pub fn coefficient(&self, k: u32) -> Polynomial {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(1))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &Polynomial)> {
        self.coeffs.iter()
    }

    fn add(&self, other: &Ode1Operator) -> Result<Ode1Operator> {
        let mut coeffs = self.coeffs.clone();
        for (k, p) in &other.coeffs {
            let entry = coeffs
                .entry(*k)
                .or_insert_with(|| Polynomial::zero(1));
            *entry = entry.add(p)?;
        }
        let mut op = Ode1Operator { coeffs };
        op.normalize();
        Ok(op)
    }

    /// Exact noncommutative product self ∘ other, re-normalized to
    /// "coefficients left, derivative powers right" with the Leibniz rule
    /// Dₛʲ(c·u) = Σᵣ C(j,r) (Dₛʳc)(Dₛ^{j−r}u), where Dₛʳc = (−i)ʳ c⁽ʳ⁾.
    pub fn compose(&self, other: &Ode1Operator) -> Result<Ode1Operator> {
        let mut out = Ode1Operator::zero();
        for (&j, a) in &self.coeffs {
            for (&k, b) in &other.coeffs {
                // derivatives of b up to order j
                let mut db = b.clone();
                for r in 0..=j {
                    if r > 0 {
                        db = db.partial(0)?.scale(Complex64::new(0.0, -1.0));
                        if db.is_zero() {
                            break;
                        }
                    }
                    let term = a.mul(&db)?.scale(Complex64::new(binomial(j, r), 0.0));
                    let mut single = Ode1Operator::zero();
                    if !term.is_zero() {
                        single.coeffs.insert(j - r + k, term);
                    }
                    out = out.add(&single)?;
                }
            }
        }
        Ok(out)
    }

    pub fn approx_eq(&self, other: &Ode1Operator, tol: f64) -> bool {
        let max_k = self.order().max(other.order());
        (0..=max_k).all(|k| self.coefficient(k).approx_eq(&other.coefficient(k), tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn var_s() -> Polynomial {
        Polynomial::variable(1, 0).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let b = Ode1Operator::conjugated_power(Sign::Plus, 2.5, 3);
        let composed = Ode1Operator::identity().compose(&b).unwrap();
        assert!(composed.approx_eq(&b, 1e-12));
        let composed = b.compose(&Ode1Operator::identity()).unwrap();
        assert!(composed.approx_eq(&b, 1e-12));
    }

    #[test]
    fn canonical_commutation() {
        // Dₛ ∘ (s·) = s·Dₛ + Dₛ(s) = s·Dₛ + (−i)
        let d = Ode1Operator::from_coeffs(vec![(1, Polynomial::constant(1, c(1.0, 0.0)))]);
        let mul_s = Ode1Operator::from_coeffs(vec![(0, var_s())]);
        let prod = d.compose(&mul_s).unwrap();
        let expected = Ode1Operator::from_coeffs(vec![
            (1, var_s()),
            (0, Polynomial::constant(1, c(0.0, -1.0))),
        ]);
        assert!(prod.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn conjugated_square_hand_expansion() {
        // (Dₛ + i(1+s))² = Dₛ² + 2i(1+s)Dₛ + 1 − (1+s)²
        let a = Ode1Operator::conjugated_base(Sign::Plus, 1.0);
        let sq = a.compose(&a).unwrap();

        let one_plus_s = Polynomial::constant(1, c(1.0, 0.0)).add(&var_s()).unwrap();
        let expected = Ode1Operator::from_coeffs(vec![
            (2, Polynomial::constant(1, c(1.0, 0.0))),
            (1, one_plus_s.scale(c(0.0, 2.0))),
            (
                0,
                Polynomial::constant(1, c(1.0, 0.0))
                    .sub(&one_plus_s.mul(&one_plus_s).unwrap())
                    .unwrap(),
            ),
        ]);
        assert!(sq.approx_eq(&expected, 1e-12));
        assert!(Ode1Operator::conjugated_power(Sign::Plus, 1.0, 2).approx_eq(&expected, 1e-12));
    }

    #[test]
    fn conjugated_power_base_cases() {
        assert!(Ode1Operator::conjugated_power(Sign::Plus, 3.0, 0)
            .approx_eq(&Ode1Operator::identity(), 1e-15));
        assert!(Ode1Operator::conjugated_power(Sign::Plus, 3.0, 1)
            .approx_eq(&Ode1Operator::conjugated_base(Sign::Plus, 3.0), 1e-15));
    }

    #[test]
    fn leading_coefficient_is_one() {
        for k in 0..=4 {
            let op = Ode1Operator::conjugated_power(Sign::Minus, 7.3, k);
            assert_eq!(op.order(), k);
            assert!(op
                .coefficient(k)
                .approx_eq(&Polynomial::constant(1, c(1.0, 0.0)), 1e-12));
        }
    }

    #[test]
    fn degree_additivity() {
        let a = Ode1Operator::conjugated_power(Sign::Plus, 2.0, 2);
        let b = Ode1Operator::conjugated_power(Sign::Minus, 1.0, 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.order(), 5);
    }

    #[test]
    fn compose_associativity_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = Polynomial::zero(1);
                for e in 0..=3u32 {
                    let coeff = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    p = p
                        .add(&Polynomial::monomial(
                            crate::polycalc::MultiIndex::new(vec![e]),
                            coeff,
                        ))
                        .unwrap();
                }
                p
            };
            let rand_op = |rng: &mut rand_chacha::ChaCha8Rng| {
                let order = rng.gen_range(0..=2u32);
                Ode1Operator::from_coeffs((0..=order).map(|k| (k, rand_poly(rng))).collect())
            };
            let (a, b, cc) = (rand_op(&mut rng), rand_op(&mut rng), rand_op(&mut rng));
            let left = a.compose(&b).unwrap().compose(&cc).unwrap();
            let right = a.compose(&b.compose(&cc).unwrap()).unwrap();
            assert!(left.approx_eq(&right, 1e-10));
        }
    }
}
