//! Multi-indices α ∈ ℕ^d encoding mixed partial derivatives and monomials.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

/// A vector of nonnegative integers; `order` is |α| = Σ αⱼ.
///
/// Ordering is lexicographic on the entries, which gives every term map a
/// canonical, deterministic iteration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    /// The zero multi-index in dimension `d`.
    pub fn zero(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    /// The unit vector e_j (a single 1 in slot `j`).
    pub fn unit(d: usize, j: usize) -> Self {
        debug_assert!(j < d);
        let mut e = vec![0; d];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entry(&self, j: usize) -> u32 {
        self.0[j]
    }

    /// |α| = Σ αⱼ.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum.
    pub fn add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.dimension() != other.dimension() {
            return Err(CoreError::DimensionMismatch {
                expected: self.dimension(),
                got: other.dimension(),
            });
        }
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// α! = Π αⱼ! as a float (orders stay small enough for exact f64).
    pub fn factorial(&self) -> f64 {
        self.0.iter().map(|&e| factorial(e)).product()
    }

    /// b^α = Π bⱼ^{αⱼ}.
    pub fn monomial_value(&self, b: &[f64]) -> f64 {
        self.0
            .iter()
            .zip(b)
            .map(|(&e, &bj)| bj.powi(e as i32))
            .product()
    }

    /// All multi-indices of dimension `d` with |α| ≤ `max_order`,
    /// in lexicographic order.
    pub fn enumerate(d: usize, max_order: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = vec![0u32; d];
        enumerate_rec(d, max_order, 0, &mut current, &mut out);
        out.sort();
        out
    }
}

fn enumerate_rec(d: usize, budget: u32, axis: usize, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if axis == d {
        out.push(MultiIndex(current.clone()));
        return;
    }
    for e in 0..=budget {
        current[axis] = e;
        enumerate_rec(d, budget - e, axis + 1, current, out);
    }
    current[axis] = 0;
}

pub(crate) fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_entry_sum() {
        let a = MultiIndex::new(vec![2, 0, 3]);
        assert_eq!(a.order(), 5);
        assert_eq!(a.dimension(), 3);
    }

    #[test]
    fn unit_vector() {
        let e2 = MultiIndex::unit(4, 2);
        assert_eq!(e2.entries(), &[0, 0, 1, 0]);
        assert_eq!(e2.order(), 1);
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(6), 720.0);
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(MultiIndex::new(vec![3, 2]).factorial(), 12.0);
    }

    #[test]
    fn enumerate_counts() {
        // |{α ∈ ℕ²: |α| ≤ 3}| = C(3+2,2) = 10
        let all = MultiIndex::enumerate(2, 3);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn monomial_value_with_zero_base() {
        let a = MultiIndex::new(vec![1, 0]);
        assert_eq!(a.monomial_value(&[0.0, 5.0]), 0.0);
        let z = MultiIndex::zero(2);
        assert_eq!(z.monomial_value(&[0.0, 0.0]), 1.0);
    }
}
