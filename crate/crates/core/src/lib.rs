//! Exact computer-algebra kernel: polynomials over Q and F_p, Groebner bases,
//! graded linear algebra on the projective line, and the length computations
//! for Hilbert schemes of trivial infinitesimal extensions of P^1.

pub mod error;
pub mod groebner;
pub mod hilbext;
pub mod cases;
pub mod linalg;
pub mod p1linalg;
pub mod polyring;

pub use error::{Error, Result};
