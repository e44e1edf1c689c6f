//! The principal identifier relation of a wired category.
//!
//! For `α: a → x` and `β: b → y`, `α Θ β` holds when the ladder diagram
//!
//! ```text
//!  a --w_ab--> b --w_ba--> a --w_ab--> b
//!  |α  \α      |β  \β      |α          |β
//!  v     \     v     \     v           v
//!  x --w_xy--> y --w_yx--> x --w_xy--> y
//! ```
//!
//! commutes, where the diagonals run from the first `a` to the second `x`
//! and from the first `b` to the second `y`. Commutativity is checked on
//! every pair of parallel paths.

use crate::category::WiredCategory;

const NODES: usize = 8;

struct Ladder {
    /// `(from, to, arrow)`; nodes 0..4 are the top row, 4..8 the bottom row.
    edges: [(usize, usize, usize); 12],
}

impl Ladder {
    fn new(c: &WiredCategory, alpha: usize, beta: usize) -> Self {
        let base = c.base();
        let (a, x) = (base.dom(alpha), base.cod(alpha));
        let (b, y) = (base.dom(beta), base.cod(beta));
        let (wab, wba) = (c.wire(a, b), c.wire(b, a));
        let (wxy, wyx) = (c.wire(x, y), c.wire(y, x));
        Ladder {
            edges: [
                (0, 1, wab),
                (1, 2, wba),
                (2, 3, wab),
                (4, 5, wxy),
                (5, 6, wyx),
                (6, 7, wxy),
                (0, 4, alpha),
                (1, 5, beta),
                (2, 6, alpha),
                (3, 7, beta),
                (0, 6, alpha),
                (1, 7, beta),
            ],
        }
    }

    /// Composites of all nonempty paths starting at `from`, grouped by target.
    fn composites_from(&self, c: &WiredCategory, from: usize) -> [Vec<usize>; NODES] {
        let mut out: [Vec<usize>; NODES] = Default::default();
        let mut stack: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| e.0 == from)
            .map(|e| (e.1, e.2))
            .collect();
        while let Some((node, arrow)) = stack.pop() {
            out[node].push(arrow);
            for e in self.edges.iter().filter(|e| e.0 == node) {
                stack.push((e.1, c.base().compose(arrow, e.2)));
            }
        }
        out
    }

    fn commutes(&self, c: &WiredCategory) -> bool {
        (0..NODES).all(|from| {
            self.composites_from(c, from)
                .iter()
                .all(|arrows| arrows.windows(2).all(|w| w[0] == w[1]))
        })
    }
}

/// `α Θ β`, by commutativity of the full diagram.
pub fn theta_holds(c: &WiredCategory, alpha: usize, beta: usize) -> bool {
    Ladder::new(c, alpha, beta).commutes(c)
}

/// `α Θ β` via the four equations
/// `α;w_xy = w_ab;β`, `β;w_yx = w_ba;α`, `w_ab;w_ba;α = α`, `w_ba;w_ab;β = β`.
pub fn theta_by_equations(c: &WiredCategory, alpha: usize, beta: usize) -> bool {
    let base = c.base();
    let (a, x) = (base.dom(alpha), base.cod(alpha));
    let (b, y) = (base.dom(beta), base.cod(beta));
    let (wab, wba) = (c.wire(a, b), c.wire(b, a));
    let (wxy, wyx) = (c.wire(x, y), c.wire(y, x));
    base.compose(alpha, wxy) == base.compose(wab, beta)
        && base.compose(beta, wyx) == base.compose(wba, alpha)
        && base.compose_path(&[wab, wba, alpha]) == alpha
        && base.compose_path(&[wba, wab, beta]) == beta
}

/// Dense boolean relation on arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    size: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                bits.push(f(i, j));
            }
        }
        Relation { size, bits }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.size + j]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size)
            .flat_map(move |i| (0..self.size).map(move |j| (i, j)))
            .filter(|&(i, j)| self.holds(i, j))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

pub fn theta(c: &WiredCategory) -> Relation {
    Relation::from_fn(c.arrow_count(), |a, b| theta_holds(c, a, b))
}

pub fn theta_equations_relation(c: &WiredCategory) -> Relation {
    Relation::from_fn(c.arrow_count(), |a, b| theta_by_equations(c, a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    pub arrows: usize,
    pub related_pairs: usize,
    pub reflexive: bool,
    pub symmetric: bool,
    /// Θ restricted to parallel arrows is equality.
    pub parallel_is_equality: bool,
    /// Path-enumeration Θ equals the four-equation Θ.
    pub matches_equations: bool,
    /// `(α, β, γ)` with `α Θ β`, `β Θ γ` and not `α Θ γ`.
    pub transitivity_counterexamples: Vec<(usize, usize, usize)>,
}

pub fn theta_properties(c: &WiredCategory) -> ThetaReport {
    let rel = theta(c);
    let n = rel.size();
    let base = c.base();
    let reflexive = (0..n).all(|i| rel.holds(i, i));
    let symmetric = rel.pairs().all(|(i, j)| rel.holds(j, i));
    let parallel_is_equality = rel
        .pairs()
        .all(|(i, j)| i == j || base.arrow(i) != base.arrow(j));
    let matches_equations = rel == theta_equations_relation(c);
    let mut transitivity_counterexamples = Vec::new();
    for (i, j) in rel.pairs() {
        for k in 0..n {
            if rel.holds(j, k) && !rel.holds(i, k) {
                transitivity_counterexamples.push((i, j, k));
            }
        }
    }
    ThetaReport {
        arrows: n,
        related_pairs: rel.count(),
        reflexive,
        symmetric,
        parallel_is_equality,
        matches_equations,
        transitivity_counterexamples,
    }
}
