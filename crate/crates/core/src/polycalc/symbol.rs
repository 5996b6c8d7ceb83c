//! Fourier symbols of the two operator families under study.
//!
//! Variables are ordered (η, ξ₁, …, ξₙ): index 0 is the time frequency.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::polycalc::polynomial::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolKind {
    Parabolic,
    Schrodinger,
    Custom,
}

/// A space-time operator symbol P(η, ξ) in d = 1 + n variables.
#[derive(Debug, Clone)]
pub struct OperatorSymbol {
    pub kind: SymbolKind,
    pub m: u32,
    pub n: usize,
    symbol: Polynomial,
}

impl OperatorSymbol {
    /// iη + |ξ|^{2m}, the symbol of ∂_t + (−Δ)^m.
    pub fn parabolic(m: u32, n: usize) -> Result<Self> {
        check_orders(m, n)?;
        let d = 1 + n;
        let eta = Polynomial::variable(d, 0)?;
        let p2m = Polynomial::sum_of_squares(n).pow(m).embed(d, 1)?;
        let symbol = eta.scale(Complex64::new(0.0, 1.0)).add(&p2m)?;
        Ok(OperatorSymbol {
            kind: SymbolKind::Parabolic,
            m,
            n,
            symbol,
        })
    }

    /// η + |ξ|^{2m}, the symbol of D_t + (−Δ)^m.
    pub fn schrodinger(m: u32, n: usize) -> Result<Self> {
        check_orders(m, n)?;
        let d = 1 + n;
        let eta = Polynomial::variable(d, 0)?;
        let p2m = Polynomial::sum_of_squares(n).pow(m).embed(d, 1)?;
        let symbol = eta.add(&p2m)?;
        Ok(OperatorSymbol {
            kind: SymbolKind::Schrodinger,
            m,
            n,
            symbol,
        })
    }

    pub fn custom(symbol: Polynomial, m: u32, n: usize) -> Result<Self> {
        if symbol.dimension() != 1 + n {
            return Err(CoreError::DimensionMismatch {
                expected: 1 + n,
                got: symbol.dimension(),
            });
        }
        check_orders(m, n)?;
        Ok(OperatorSymbol {
            kind: SymbolKind::Custom,
            m,
            n,
            symbol,
        })
    }

    pub fn symbol(&self) -> &Polynomial {
        &self.symbol
    }

    /// Total space-time dimension 1 + n.
    pub fn dimension(&self) -> usize {
        1 + self.n
    }
}

fn check_orders(m: u32, n: usize) -> Result<()> {
    if m < 1 {
        return Err(CoreError::InvalidParam {
            name: "m",
            reason: "operator order m must be ≥ 1".into(),
        });
    }
    if n < 1 {
        return Err(CoreError::InvalidParam {
            name: "n",
            reason: "spatial dimension n must be ≥ 1".into(),
        });
    }
    Ok(())
}
