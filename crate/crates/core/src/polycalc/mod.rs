//! Exact symbolic calculus: multivariate polynomials over complex
//! coefficients, operator symbols, and one-dimensional differential
//! operators with polynomial coefficients.

mod multi_index;
mod ode1;
mod polynomial;
mod symbol;

pub use multi_index::MultiIndex;
pub use ode1::{Ode1Operator, Sign};
pub use polynomial::Polynomial;
pub use symbol::{OperatorSymbol, SymbolKind};
