// The guide chapters double as doc-tests: every Rust snippet in book/src
// compiles and runs under `cargo test --doc`, which keeps the book and the
// API in sync.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/spin-operators.md")]
pub mod spin_operators {}
#[doc = include_str!("../../../book/src/boundary-curves.md")]
pub mod boundary_curves {}
#[doc = include_str!("../../../book/src/criteria.md")]
pub mod criteria {}
#[doc = include_str!("../../../book/src/reference-states.md")]
pub mod reference_states {}
#[doc = include_str!("../../../book/src/fluctuating-n.md")]
pub mod fluctuating_n {}
