//! Exact grammar calculus, normal ordering and box sorting for Eulerian-type
//! polynomials.

pub mod boxsort;
pub mod combinat;
pub mod families;
pub mod grammar;
pub mod normalorder;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod tableaux;
pub mod scalar;

pub use poly::{Monomial, Poly, PolyError, Polynomial, VarId};
pub use scalar::Coeff;
