//! Exact arithmetic in `F_q`, `F_q[t]` and `F_q(t)`.

pub mod factor;
pub mod field;
pub mod mul;
pub mod place;
pub mod poly;
pub mod ratfunc;

pub use factor::{
    count_distinct_irreducibles, exact_sqrt, factor, factor_with_rng, is_squarefree, max_power,
    squarefree_decomp, Factorization, SqfDecomp,
};
pub use field::{fq_sqrt, Field, Fq};
pub use place::{Place, PlaceSet};
pub use poly::Poly;
pub use ratfunc::{height, n_zero, valuation, RatFunc};
