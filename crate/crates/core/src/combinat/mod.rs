//! Chains in the Boolean lattice, the face-order data built from them,
//! draconian sequences and permutation statistics.

pub mod chain;
pub mod draconian;
pub mod perm;
pub mod subset;

pub use chain::{enumerate_chains, missing_ranks, r_set, r_set_and_order, Chain, Marker};
pub use draconian::{
    draconian_check, draconian_check_scan, enumerate_draconian, DraconianSeq, Mode,
};
pub use subset::Subset;
