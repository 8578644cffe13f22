//! Exact scalars, index vectors and sparse polynomial arithmetic.

mod index;
pub mod linalg;
mod poly;
mod rational;
mod sympoly;

pub use index::{
    dominance_leq, partitions_of_weight, partitions_up_to, shifted_plus, suffix_leq,
    suffix_order_key, to_partition, IntVec, Partition,
};
pub use poly::{grevlex_cmp, Poly};
pub use rational::{format_rat, gen_binomial, int, parse_rat, rat, Rat};
pub use sympoly::{distinct_permutations, evaluate, poly_add, poly_mul, poly_scale, SymPoly};
