//! Terminating hypergeometric sums and closed-form representations.

mod explicit;
mod finite_sum;
mod pfq;
mod quadratic;

pub use explicit::{explicit_eval, explicit_eval_formal, mpollaczek_explicit, Variant};
pub use finite_sum::{finite_sum_identity, ternary_transform_check, FiniteSumResult, SideValue};
pub use pfq::{pfq_f64, pfq_terminating, HyperSpec};
pub use quadratic::{amp_quadratic_form, DEFAULT_EPS, MAX_CANCELLATION, MAX_TERMS};
