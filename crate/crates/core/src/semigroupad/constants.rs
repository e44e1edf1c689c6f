//! Natural transformations `ξ: 1 → T` and the four kinds of constants.

use super::{functions, induced_operation, star_with, FinFunction, Semigroupad};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Largest set size [`enumerate_nat_families`] accepts.
pub const MAX_FAMILY_BOUND: usize = 3;

/// Components `ξ_k: [k] → T[k]` for `k` up to a bound. Components beyond the
/// bound are obtained from `ξ_1` by naturality: `ξ_k(a) = T(pt_a)(ξ_1(0))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatFamily {
    components: Vec<FinFunction>,
}

impl NatFamily {
    pub fn bound(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[FinFunction] {
        &self.components
    }

    /// `ξ_k`, extended past the enumerated bound through `ξ_1`.
    pub fn component<T: Semigroupad + ?Sized>(&self, t: &T, k: usize) -> FinFunction {
        if k < self.components.len() {
            return self.components[k].clone();
        }
        let generic = self.components[1].apply(0);
        FinFunction::from_fn(k, t.carrier(k), |a| {
            t.lift(&FinFunction::point(k, a)).apply(generic)
        })
    }

    /// `ξ_1(0)` in printable form; it determines the whole family.
    pub fn describe<T: Semigroupad + ?Sized>(&self, t: &T) -> String {
        t.describe(1, self.components[1].apply(0))
    }
}

fn natural_against<T: Semigroupad + ?Sized>(
    t: &T,
    fixed: &[FinFunction],
    candidate: &FinFunction,
) -> bool {
    let k = fixed.len();
    for (j, xi_j) in fixed
        .iter()
        .enumerate()
        .chain(std::iter::once((k, candidate)))
    {
        // f: [j] → [k]
        for f in functions(j, k) {
            if xi_j.then(&t.lift(&f)) != f.then(candidate) {
                return false;
            }
        }
        // f: [k] → [j]
        for f in functions(k, j) {
            if candidate.then(&t.lift(&f)) != f.then(xi_j) {
                return false;
            }
        }
    }
    true
}

/// All families natural with respect to every function between sets of
/// size at most `bound` (1 ≤ bound ≤ 3).
pub fn enumerate_nat_families<T: Semigroupad + ?Sized>(
    t: &T,
    bound: usize,
) -> Result<Vec<NatFamily>> {
    if bound > MAX_FAMILY_BOUND || bound == 0 {
        return Err(Error::SizeBound {
            what: "natural family bound (1..=3)",
            size: bound,
            limit: MAX_FAMILY_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut stack = vec![Vec::<FinFunction>::new()];
    while let Some(prefix) = stack.pop() {
        let k = prefix.len();
        if k > bound {
            out.push(NatFamily { components: prefix });
            continue;
        }
        let candidates: Vec<FinFunction> = functions(k, t.carrier(k))
            .filter(|c| natural_against(t, &prefix, c))
            .collect();
        // reversed so the stack yields families in lexicographic order
        for c in candidates.into_iter().rev() {
            let mut next = prefix.clone();
            next.push(c);
            stack.push(next);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConstantFlags {
    pub left: bool,
    pub right: bool,
    pub central: bool,
    pub idempotent: bool,
}

impl std::fmt::Display for ConstantFlags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "left={} right={} central={} idempotent={}",
            yn(self.left),
            yn(self.right),
            yn(self.central),
            yn(self.idempotent)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantClass {
    /// From the component equations on `μ`.
    pub mu_form: ConstantFlags,
    /// From the Kleisli-lifting characterizations.
    pub star_form: ConstantFlags,
    /// `ξ_A ; T ξ_A = ξ_A ; ξ_{T A}` for every `A` in range.
    pub note_holds: bool,
}

impl ConstantClass {
    pub fn agree(&self) -> bool {
        self.mu_form == self.star_form
    }
}

/// Classifies `ξ` twice over sets of size up to `bound`:
///
/// * left: `T ξ_A ; μ_A = id` versus `(ξ_A)* = id`;
/// * right: `ξ_{TA} ; μ_A = id` versus `ξ_A ; f* = f` for all `f: A → T B`;
/// * central: `T ξ_A ; μ_A = ξ_{TA} ; μ_A` versus `ξ_A ; f* = f ; (ξ_B)*`;
/// * idempotent: `ξ_A ; T ξ_A ; μ_A = ξ_A` versus `ξ_A ; (ξ_A)* = ξ_A`.
pub fn constant_class<T: Semigroupad + ?Sized>(
    t: &T,
    xi: &NatFamily,
    bound: usize,
) -> ConstantClass {
    let mus: Vec<Option<FinFunction>> = (0..=bound)
        .map(|k| t.tabulable(k).then(|| t.mu(k)))
        .collect();
    let mut mu_form = ConstantFlags {
        left: true,
        right: true,
        central: true,
        idempotent: true,
    };
    let mut star_form = mu_form;
    let mut note_holds = true;

    for (k, mu_k) in mus.iter().enumerate() {
        let Some(mu_k) = mu_k else { continue };
        let xi_k = xi.component(t, k);
        let xi_tk = xi.component(t, t.carrier(k));
        let id = FinFunction::identity(t.carrier(k));
        let lifted = t.lift(&xi_k);
        let left = lifted.then(mu_k);
        let right = xi_tk.then(mu_k);
        mu_form.left &= left == id;
        mu_form.right &= right == id;
        mu_form.central &= left == right;
        mu_form.idempotent &= xi_k.then(&left) == xi_k;
        note_holds &= xi_k.then(&lifted) == xi_k.then(&xi_tk);

        let xi_star = star_with(t, &xi_k, mu_k);
        star_form.left &= xi_star == id;
        star_form.idempotent &= xi_k.then(&xi_star) == xi_k;
    }

    for (a, _) in mus.iter().enumerate() {
        let xi_a = xi.component(t, a);
        for (b, mu_b) in mus.iter().enumerate() {
            let Some(mu_b) = mu_b else { continue };
            let xi_b_star = star_with(t, &xi.component(t, b), mu_b);
            for f in functions(a, t.carrier(b)) {
                let lhs = xi_a.then(&star_with(t, &f, mu_b));
                star_form.right &= lhs == f;
                star_form.central &= lhs == f.then(&xi_b_star);
            }
        }
    }

    ConstantClass {
        mu_form,
        star_form,
        note_holds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Implication {
    Vacuous,
    Holds,
    Violated,
}

impl Implication {
    fn from(hypothesis: bool, conclusion: bool) -> Self {
        match (hypothesis, conclusion) {
            (false, _) => Implication::Vacuous,
            (true, true) => Implication::Holds,
            (true, false) => Implication::Violated,
        }
    }
}

/// The four transfer implications for `E = ξ_S(e)` in the induced semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub image: usize,
    pub left_identity: Implication,
    pub right_identity: Implication,
    pub central: Implication,
    pub idempotent: Implication,
}

impl TransferReport {
    pub fn items(&self) -> [Implication; 4] {
        [
            self.left_identity,
            self.right_identity,
            self.central,
            self.idempotent,
        ]
    }

    pub fn ok(&self) -> bool {
        !self.items().contains(&Implication::Violated)
    }

    /// Evaluates the implications given the constant flags of `ξ`, the
    /// induced table on `T S` and `image = ξ_S(e)`.
    pub fn evaluate(
        flags: ConstantFlags,
        induced: &FiniteSemigroup,
        s: &FiniteSemigroup,
        e: usize,
        image: usize,
    ) -> Self {
        TransferReport {
            image,
            left_identity: Implication::from(
                flags.left && s.is_left_identity(e),
                induced.is_left_identity(image),
            ),
            right_identity: Implication::from(
                flags.right && s.is_right_identity(e),
                induced.is_right_identity(image),
            ),
            central: Implication::from(flags.central && s.is_central(e), induced.is_central(image)),
            idempotent: Implication::from(
                flags.idempotent && s.is_idempotent(e),
                induced.is_idempotent(image),
            ),
        }
    }
}

/// Checks that constant properties of `ξ` and of `e ∈ S` transfer to
/// `ξ_S(e)` in the induced semigroup on `T S`.
pub fn constants_transfer_check<T: Semigroupad + ?Sized>(
    t: &T,
    xi: &NatFamily,
    s: &FiniteSemigroup,
    e: usize,
) -> Result<TransferReport> {
    let induced = induced_operation(t, s)?;
    let flags = constant_class(t, xi, xi.bound()).mu_form;
    let image = xi.component(t, s.order()).apply(e);
    Ok(TransferReport::evaluate(flags, &induced, s, e, image))
}
