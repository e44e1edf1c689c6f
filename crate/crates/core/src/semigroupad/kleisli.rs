//! Kleisli lifting `f* = T f ; μ` and the exhaustive law sweeps.

use super::{functions, FinFunction, Semigroupad, TABLE_CAP};
use crate::error::{Error, Result};

const MAX_RECORDED: usize = 8;

/// `f*: T[a] → T[b]` for `f: [a] → T[b]`.
pub fn kleisli_star<T: Semigroupad + ?Sized>(
    t: &T,
    f: &FinFunction,
    b: usize,
) -> Result<FinFunction> {
    if f.cod() != t.carrier(b) {
        return Err(Error::ShapeMismatch {
            expected: format!("codomain T[{b}] of size {}", t.carrier(b)),
            found: format!("codomain of size {}", f.cod()),
        });
    }
    Ok(star_with(t, f, &t.mu(b)))
}

/// `T f ; μ_b` with a precomputed `μ_b`.
pub fn star_with<T: Semigroupad + ?Sized>(
    t: &T,
    f: &FinFunction,
    mu_b: &FinFunction,
) -> FinFunction {
    t.lift(f).then(mu_b)
}

/// Outcome of an exhaustive sweep: how many instances were checked, how many
/// failed, the first few failures, and anything skipped for size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub skipped: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(what());
            }
        }
    }

    fn merge(&mut self, other: SweepReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(f);
            }
        }
        self.skipped.extend(other.skipped);
    }
}

fn mus<T: Semigroupad + ?Sized>(t: &T, bound: usize) -> Vec<Option<FinFunction>> {
    (0..=bound)
        .map(|k| t.tabulable(k).then(|| t.mu(k)))
        .collect()
}

/// Functor laws, naturality of `μ`, and the associativity square
/// `T μ_A ; μ_A = μ_{T A} ; μ_A`, over all sets of size up to `bound`.
/// Squares whose `T T T[k]` exceeds [`TABLE_CAP`] are skipped and listed.
pub fn validate_semigroupad<T: Semigroupad + ?Sized>(t: &T, bound: usize) -> SweepReport {
    let mut functor = SweepReport::default();
    for k in 0..=bound {
        functor.record(
            t.lift(&FinFunction::identity(k)) == FinFunction::identity(t.carrier(k)),
            || format!("lift(id_{k}) != id"),
        );
    }
    for i in 0..=bound {
        for j in 0..=bound {
            let gs: Vec<_> = (0..=bound).flat_map(|k| functions(j, k)).collect();
            for f in functions(i, j) {
                let tf = t.lift(&f);
                for g in &gs {
                    functor.record(t.lift(&f.then(g)) == tf.then(&t.lift(g)), || {
                        format!("lift({f} ; {g}) != lift({f}) ; lift({g})")
                    });
                }
            }
        }
    }

    let mu = mus(t, bound);
    let mut natural = SweepReport::default();
    for i in 0..=bound {
        for j in 0..=bound {
            let (Some(mu_i), Some(mu_j)) = (&mu[i], &mu[j]) else {
                natural
                    .skipped
                    .push(format!("naturality {i} -> {j}: carrier too large"));
                continue;
            };
            for f in functions(i, j) {
                let tf = t.lift(&f);
                let lhs = t.lift(&tf).then(mu_j);
                let rhs = mu_i.then(&tf);
                natural.record(lhs == rhs, || format!("mu not natural at {f}"));
            }
        }
    }

    let mut square = SweepReport::default();
    for (k, mu_k) in mu.iter().enumerate() {
        let tk = t.carrier(k);
        let Some(mu_k) = mu_k else {
            square
                .skipped
                .push(format!("associativity at [{k}]: carrier too large"));
            continue;
        };
        if !t.tabulable(tk) {
            square.skipped.push(format!(
                "associativity at [{k}]: T T T[{k}] exceeds {TABLE_CAP} elements"
            ));
            continue;
        }
        let lhs = t.lift(mu_k).then(mu_k);
        let rhs = t.mu(tk).then(mu_k);
        square.record(lhs == rhs, || {
            format!("associativity square fails at [{k}]")
        });
    }

    functor.merge(natural);
    functor.merge(square);
    functor
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KAxiomReport {
    pub k1: SweepReport,
    pub k2: SweepReport,
    pub k3: SweepReport,
}

impl KAxiomReport {
    pub fn ok(&self) -> bool {
        self.k1.ok() && self.k2.ok() && self.k3.ok()
    }
}

/// Exhaustive check over sets of size up to `bound` of
/// k1 `(f;g)* = T f ; g*`, k2 `(f ; T g)* = f* ; T g` and
/// k3 `(f ; g*)* = f* ; g*`.
pub fn check_k_axioms<T: Semigroupad + ?Sized>(t: &T, bound: usize) -> KAxiomReport {
    let mu = mus(t, bound);
    let mut report = KAxiomReport::default();
    for a in 0..=bound {
        for b in 0..=bound {
            for c in 0..=bound {
                let (Some(mu_b), Some(mu_c)) = (&mu[b], &mu[c]) else {
                    report
                        .k3
                        .skipped
                        .push(format!("sizes ({a},{b},{c}): carrier too large"));
                    continue;
                };
                let tb = t.carrier(b);
                let tc = t.carrier(c);
                let gs_tc: Vec<(FinFunction, FinFunction)> = functions(b, tc)
                    .map(|g| {
                        let gs = star_with(t, &g, mu_c);
                        (g, gs)
                    })
                    .collect();

                // k1
                for f in functions(a, b) {
                    let tf = t.lift(&f);
                    for (g, g_star) in &gs_tc {
                        let lhs = star_with(t, &f.then(g), mu_c);
                        report
                            .k1
                            .record(lhs == tf.then(g_star), || format!("k1 f={f} g={g}"));
                    }
                }

                let fs_tb: Vec<(FinFunction, FinFunction)> = functions(a, tb)
                    .map(|f| {
                        let fs = star_with(t, &f, mu_b);
                        (f, fs)
                    })
                    .collect();

                // k2
                for g in functions(b, c) {
                    let tg = t.lift(&g);
                    for (f, f_star) in &fs_tb {
                        let lhs = star_with(t, &f.then(&tg), mu_c);
                        report
                            .k2
                            .record(lhs == f_star.then(&tg), || format!("k2 f={f} g={g}"));
                    }
                }

                // k3
                for (f, f_star) in &fs_tb {
                    for (g, g_star) in &gs_tc {
                        let lhs = star_with(t, &f.then(g_star), mu_c);
                        report
                            .k3
                            .record(lhs == f_star.then(g_star), || format!("k3 f={f} g={g}"));
                    }
                }
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuFromStarReport {
    /// `μ_k := (id_{T[k]})*` for each `k` up to the bound.
    pub recovered: Vec<FinFunction>,
    /// Naturality of the recovered components.
    pub natural: SweepReport,
    /// Recovered `μ` equals the semigroupad's own `μ`.
    pub mu_roundtrip: bool,
    /// The lifting rebuilt from the recovered `μ` equals the given one on
    /// every `f: [a] → T[b]`.
    pub star_roundtrip: SweepReport,
}

impl MuFromStarReport {
    pub fn ok(&self) -> bool {
        self.natural.ok() && self.mu_roundtrip && self.star_roundtrip.ok()
    }
}

/// Recovers `μ` from a Kleisli lifting `star(f, b)` and checks that the
/// passage lifting → `μ` → lifting and `μ` → lifting → `μ` are identities.
/// Uses the functor part of `t` and, for the second roundtrip, `t.mu`.
pub fn mu_from_star<T, F>(t: &T, star: F, bound: usize) -> MuFromStarReport
where
    T: Semigroupad + ?Sized,
    F: Fn(&FinFunction, usize) -> FinFunction,
{
    let recovered: Vec<FinFunction> = (0..=bound)
        .map(|k| star(&FinFunction::identity(t.carrier(k)), k))
        .collect();

    let mut natural = SweepReport::default();
    for i in 0..=bound {
        for j in 0..=bound {
            for f in functions(i, j) {
                let tf = t.lift(&f);
                let lhs = t.lift(&tf).then(&recovered[j]);
                let rhs = recovered[i].then(&tf);
                natural.record(lhs == rhs, || format!("recovered mu not natural at {f}"));
            }
        }
    }

    let mu_roundtrip = (0..=bound).all(|k| recovered[k] == t.mu(k));

    let mut star_roundtrip = SweepReport::default();
    for a in 0..=bound {
        for (b, mu_b) in recovered.iter().enumerate() {
            for f in functions(a, t.carrier(b)) {
                let rebuilt = t.lift(&f).then(mu_b);
                star_roundtrip.record(rebuilt == star(&f, b), || {
                    format!("star roundtrip fails at {f}")
                });
            }
        }
    }

    MuFromStarReport {
        recovered,
        natural,
        mu_roundtrip,
        star_roundtrip,
    }
}

/// Associativity of the Kleisli composite `f ⋄ g = f ; g*` on all
/// composable triples `f: [a] → T[b]`, `g: [b] → T[c]`, `h: [c] → T[d]`.
pub fn kleisli_semicategory_check<T: Semigroupad + ?Sized>(t: &T, bound: usize) -> SweepReport {
    let mu = mus(t, bound);
    let mut report = SweepReport::default();
    let sizes = 0..=bound;
    for a in sizes.clone() {
        for b in sizes.clone() {
            for c in sizes.clone() {
                for d in sizes.clone() {
                    let (Some(_), Some(mu_c), Some(mu_d)) = (&mu[b], &mu[c], &mu[d]) else {
                        report
                            .skipped
                            .push(format!("sizes ({a},{b},{c},{d}): carrier too large"));
                        continue;
                    };
                    let hs: Vec<(FinFunction, FinFunction)> = functions(c, t.carrier(d))
                        .map(|h| {
                            let hs = star_with(t, &h, mu_d);
                            (h, hs)
                        })
                        .collect();
                    for g in functions(b, t.carrier(c)) {
                        let g_star = star_with(t, &g, mu_c);
                        for (h, h_star) in &hs {
                            let gh_star = star_with(t, &g.then(h_star), mu_d);
                            for f in functions(a, t.carrier(b)) {
                                let left = f.then(&g_star).then(h_star);
                                let right = f.then(&gh_star);
                                report.record(left == right, || format!("f={f} g={g} h={h}"));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}
