//! The semigroup induced on `T S` by a semigroupad `T` and a semigroup `S`:
//! `p □ q = p̃(q)`, where `p̄(x) = T(·x)(p)` and `p̃ = (p̄)*`.

use super::{FinFunction, Semigroupad, TABLE_CAP};
use crate::error::{Error, Result};
use crate::semigroup::{validate_semigroup, FiniteSemigroup};

/// `(·y): x ↦ x·y`.
pub fn right_translation(s: &FiniteSemigroup, y: usize) -> FinFunction {
    FinFunction::from_fn(s.order(), s.order(), |x| s.mul(x, y))
}

/// `p̄: S → T S`, `x ↦ T(·x)(p)`.
pub fn bar_map<T: Semigroupad + ?Sized>(t: &T, s: &FiniteSemigroup, p: usize) -> FinFunction {
    let n = s.order();
    FinFunction::from_fn(n, t.carrier(n), |x| {
        t.lift(&right_translation(s, x)).apply(p)
    })
}

/// `p̃ = (p̄)*: T S → T S`.
pub fn tilde_map<T: Semigroupad + ?Sized>(t: &T, s: &FiniteSemigroup, p: usize) -> FinFunction {
    let n = s.order();
    t.lift(&bar_map(t, s, p)).then(&t.mu(n))
}

/// Precomputed lifts of all right translations and `μ` at `|S|`.
pub struct InducedContext<'a, T: Semigroupad + ?Sized> {
    t: &'a T,
    s: &'a FiniteSemigroup,
    lifted: Vec<FinFunction>,
    mu: FinFunction,
}

impl<'a, T: Semigroupad + ?Sized> InducedContext<'a, T> {
    pub fn new(t: &'a T, s: &'a FiniteSemigroup) -> Result<Self> {
        let n = s.order();
        if !t.tabulable(n) {
            return Err(Error::SizeBound {
                what: "nested carrier T T S",
                size: t.carrier(t.carrier(n).min(TABLE_CAP + 1)),
                limit: TABLE_CAP,
            });
        }
        let lifted = (0..n).map(|y| t.lift(&right_translation(s, y))).collect();
        Ok(InducedContext {
            t,
            s,
            lifted,
            mu: t.mu(n),
        })
    }

    pub fn carrier(&self) -> usize {
        self.t.carrier(self.s.order())
    }

    /// `T(·y)`.
    pub fn lifted_translation(&self, y: usize) -> &FinFunction {
        &self.lifted[y]
    }

    pub fn bar(&self, p: usize) -> FinFunction {
        FinFunction::from_fn(self.s.order(), self.carrier(), |x| self.lifted[x].apply(p))
    }

    pub fn tilde(&self, p: usize) -> FinFunction {
        self.t.lift(&self.bar(p)).then(&self.mu)
    }

    /// Unvalidated table of `□`.
    pub fn table(&self) -> FiniteSemigroup {
        let tildes: Vec<FinFunction> = (0..self.carrier()).map(|p| self.tilde(p)).collect();
        FiniteSemigroup::from_fn_unchecked(self.carrier(), |p, q| tildes[p].apply(q))
    }
}

/// The induced semigroup on `T S`, re-validated for associativity.
pub fn induced_operation<T: Semigroupad + ?Sized>(
    t: &T,
    s: &FiniteSemigroup,
) -> Result<FiniteSemigroup> {
    let table = InducedContext::new(t, s)?.table();
    validate_semigroup(&table.rows())
}

/// Violation counts for the commutation lemmas and `(p□q)~ = q̃ ; p̃`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checked: usize,
    /// `(·y) ; p̄ = p̄ ; T(·y)`
    pub bar_commutation: usize,
    /// `T(·y) ; p̃ = p̃ ; T(·y)`
    pub tilde_commutation: usize,
    /// `(p□q)‾ = q̄ ; p̃`
    pub bar_dot: usize,
    /// `(p□q)~ = q̃ ; p̃`
    pub tilde_dot: usize,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.bar_commutation + self.tilde_commutation + self.bar_dot + self.tilde_dot == 0
    }

    pub fn merge(&mut self, other: &LemmaReport) {
        self.checked += other.checked;
        self.bar_commutation += other.bar_commutation;
        self.tilde_commutation += other.tilde_commutation;
        self.bar_dot += other.bar_dot;
        self.tilde_dot += other.tilde_dot;
    }
}

/// Checks all four identities for every `y ∈ S` and `p, q ∈ T S`.
pub fn lemma_suite<T: Semigroupad + ?Sized>(t: &T, s: &FiniteSemigroup) -> Result<LemmaReport> {
    let ctx = InducedContext::new(t, s)?;
    let size = ctx.carrier();
    let bars: Vec<FinFunction> = (0..size).map(|p| ctx.bar(p)).collect();
    let tildes: Vec<FinFunction> = (0..size).map(|p| ctx.tilde(p)).collect();
    let translations: Vec<FinFunction> = s.elements().map(|y| right_translation(s, y)).collect();
    let mut r = LemmaReport::default();
    for p in 0..size {
        for y in s.elements() {
            r.checked += 1;
            let ty = ctx.lifted_translation(y);
            if translations[y].then(&bars[p]) != bars[p].then(ty) {
                r.bar_commutation += 1;
            }
            if ty.then(&tildes[p]) != tildes[p].then(ty) {
                r.tilde_commutation += 1;
            }
        }
        for q in 0..size {
            r.checked += 1;
            let pq = tildes[p].apply(q);
            if bars[pq] != bars[q].then(&tildes[p]) {
                r.bar_dot += 1;
            }
            if tildes[pq] != tildes[q].then(&tildes[p]) {
                r.tilde_dot += 1;
            }
        }
    }
    Ok(r)
}
