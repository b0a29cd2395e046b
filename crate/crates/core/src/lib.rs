//! Maximum nonattacking pawn arrangements on even-sided boards.
//!
//! A `2n x 2m` board holds at most `2nm` pawns that do not attack one
//! another, and there are exactly `C(m + n, n)^2` ways to reach that bound.
//! This crate builds those arrangements from pairs of subsets through the
//! strip matrix ([`strip`], [`bijection`]) and checks everything against
//! search-based engines that only know the attack rule ([`oracle`]).

pub mod bijection;
pub mod board;
pub mod error;
pub mod oracle;
pub mod strip;
pub mod verify;

pub use bijection::{
    arrangement_count, index_seq_to_subsets, phi, phi_inverse, rank, subsets_to_index_seq, unrank,
    IndexSeq, SubsetPair,
};
pub use board::{attacks, Board, Cell};
pub use error::{BijectionError, BoardError, OracleError, StripError};
pub use oracle::{
    count_max_arrangements, count_via_strip_chains, enumerate_max_arrangements, max_pawn_count,
    CountResult,
};
pub use strip::{
    can_follow, can_stack_strips, enumerate_strips, first_row_strip, strip_entry, SquareType,
    Strip, StripMatrix,
};

pub use num_bigint::BigUint;
