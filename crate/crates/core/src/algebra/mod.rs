//! Exact arithmetic: rationals, polynomials over `Q`, number fields, sparse linear algebra
//! and the Smith normal form over `Q[τ]`.

pub mod factor;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod polymatrix;
pub mod rat;
pub mod snf;

pub use factor::{gcd_free_basis, rational_roots, squarefree_factors};
pub use field::{parse_scalar, Field, NumberField, RationalField, Scalar};
pub use poly::{IPoly, QPoly};
pub use polymatrix::PolyMatrix;
pub use rat::{format_rat, parse_rat, rat, rat_int, Rat};
pub use snf::{snf, SmithForm};
