//! Semigroupads (monads without a unit) on the skeleton of finite sets.
//!
//! Sets are `[k] = {0, …, k−1}`. A semigroupad gives each `[k]` a carrier
//! `T[k]`, lifts functions `f: [j] → [k]` to `T f: T[j] → T[k]`, and supplies
//! `μ_k: T T[k] → T[k]`. Naturality over all of Set is approximated by
//! exhaustive checks over all functions between small sets.
//!
//! Whiskering is written at component level: `lift(ξ_A)` is `T ξ` at `A`
//! (first `ξ` inside, then lifted) and `ξ_at(T A)` is `ξ T` at `A`. Some
//! texts swap the two names; the formulas here are the ones that matter.

mod constants;
mod function;
mod induced;
mod instances;
mod kleisli;

pub use constants::{
    constant_class, constants_transfer_check, enumerate_nat_families, ConstantClass, ConstantFlags,
    Implication, NatFamily, TransferReport, MAX_FAMILY_BOUND,
};
pub use function::{functions, FinFunction};
pub use induced::{
    bar_map, induced_operation, lemma_suite, right_translation, tilde_map, InducedContext,
    LemmaReport,
};
pub use instances::{NePow, Writer};
pub use kleisli::{
    check_k_axioms, kleisli_semicategory_check, kleisli_star, mu_from_star, star_with,
    validate_semigroupad, KAxiomReport, MuFromStarReport, SweepReport,
};

/// Largest table (carrier size) the sweeps will materialize.
pub const TABLE_CAP: usize = 1 << 16;

/// Functor data plus multiplication on the finite-set skeleton.
pub trait Semigroupad {
    fn name(&self) -> String;

    /// Size of `T[k]`.
    fn carrier(&self, k: usize) -> usize;

    /// `T f: T[dom f] → T[cod f]`.
    fn lift(&self, f: &FinFunction) -> FinFunction;

    /// `μ_k: T T[k] → T[k]`.
    fn mu(&self, k: usize) -> FinFunction;

    /// Printable form of an element of `T[k]`.
    fn describe(&self, k: usize, elem: usize) -> String;

    /// `T T[k]` is small enough to tabulate.
    fn tabulable(&self, k: usize) -> bool {
        let t = self.carrier(k);
        t <= TABLE_CAP && self.carrier(t) <= TABLE_CAP
    }
}
