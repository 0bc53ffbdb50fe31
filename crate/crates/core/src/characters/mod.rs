//! Irreducible characters of `S_n` on hook shapes `(n − k, 1^k)`, their
//! dimensions, the tableau count `g` and the hook character ratio sweep.

mod hook;
mod ratio_sweep;
mod tableaux;

pub use hook::{hook_character, hook_dimension, HookCharacterTable, HookIndex};
pub use ratio_sweep::{lemma1_check, HookRatioReport, HookRatioRow};
pub use tableaux::{g_count, s_subset_count};
