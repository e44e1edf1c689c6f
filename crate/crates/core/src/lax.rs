//! Ordered semigroups and lax morphisms (subhomomorphisms)
//! `f(x)·f(y) ≤ f(x·y)`.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::subset::Subset;

/// Largest idempotent set accepted by [`rect_band_on_subset_pairs`] by default.
pub const DEFAULT_MAX_IDEMPOTENTS: usize = 5;

/// A finite semigroup with a partial order. The order need not be compatible
/// with multiplication; see [`OrderedSemigroup::is_compatible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSemigroup {
    base: FiniteSemigroup,
    leq: Vec<bool>,
}

impl OrderedSemigroup {
    /// `leq(x, y)` must be a partial order on the elements of `base`.
    pub fn new(base: FiniteSemigroup, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = base.order();
        let mut rel = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                rel[x * n + y] = leq(x, y);
            }
        }
        let s = OrderedSemigroup { base, leq: rel };
        s.check_partial_order()?;
        Ok(s)
    }

    fn check_partial_order(&self) -> Result<()> {
        let n = self.base.order();
        let bad = |msg: String| Err(Error::NotPartialOrder(msg));
        for x in 0..n {
            if !self.leq(x, x) {
                return bad(format!("not reflexive at {x}"));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return bad(format!("not antisymmetric at ({x}, {y})"));
                }
                for z in 0..n {
                    if self.leq(x, y) && self.leq(y, z) && !self.leq(x, z) {
                        return bad(format!("not transitive at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.base.order() + y]
    }

    /// `x ≤ y` implies `xz ≤ yz` and `zx ≤ zy`. Informational only.
    pub fn is_compatible(&self) -> bool {
        let s = &self.base;
        s.elements().all(|x| {
            s.elements().all(|y| {
                !self.leq(x, y)
                    || s.elements().all(|z| {
                        self.leq(s.mul(x, z), s.mul(y, z)) && self.leq(s.mul(z, x), s.mul(z, y))
                    })
            })
        })
    }
}

/// An element `(A, B)` of `P(E) × P(E)`, both sides as bitmasks over the
/// elements of the reference semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubsetPair {
    pub left: Subset,
    pub right: Subset,
}

impl std::fmt::Display for SubsetPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// The rectangular band `(A, B)·(C, D) = (A, D)` on pairs of subsets of a
/// fixed idempotent set, ordered componentwise by inclusion.
#[derive(Clone, Debug)]
pub struct SubsetPairBand {
    idempotents: Vec<usize>,
    ordered: OrderedSemigroup,
}

pub fn rect_band_on_subset_pairs(idempotents: &[usize]) -> Result<SubsetPairBand> {
    rect_band_bounded(idempotents, DEFAULT_MAX_IDEMPOTENTS)
}

pub fn rect_band_bounded(idempotents: &[usize], max: usize) -> Result<SubsetPairBand> {
    let k = idempotents.len();
    if k > max {
        return Err(Error::SizeBound {
            what: "idempotent set for subset-pair band",
            size: k,
            limit: max,
        });
    }
    let side = 1usize << k;
    // element index = left_local * side + right_local
    let base = FiniteSemigroup::from_fn_unchecked(side * side, |p, q| (p / side) * side + q % side);
    let ordered = OrderedSemigroup::new(base, |p, q| {
        let (a, b) = (p / side, p % side);
        let (c, d) = (q / side, q % side);
        a & !c == 0 && b & !d == 0
    })?;
    Ok(SubsetPairBand {
        idempotents: idempotents.to_vec(),
        ordered,
    })
}

impl SubsetPairBand {
    pub fn ordered(&self) -> &OrderedSemigroup {
        &self.ordered
    }

    pub fn order(&self) -> usize {
        self.ordered.base().order()
    }

    fn side(&self) -> usize {
        1 << self.idempotents.len()
    }

    fn to_local(&self, s: Subset) -> Option<usize> {
        let mut local = 0;
        for x in s.iter() {
            let pos = self.idempotents.iter().position(|&e| e == x)?;
            local |= 1 << pos;
        }
        Some(local)
    }

    fn subset_of_local(&self, local: usize) -> Subset {
        self.idempotents
            .iter()
            .enumerate()
            .filter(|(i, _)| local >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }

    /// Index of a pair, or `None` if it mentions a non-member of `E`.
    pub fn index_of(&self, pair: SubsetPair) -> Option<usize> {
        Some(self.to_local(pair.left)? * self.side() + self.to_local(pair.right)?)
    }

    pub fn pair_at(&self, index: usize) -> SubsetPair {
        SubsetPair {
            left: self.subset_of_local(index / self.side()),
            right: self.subset_of_local(index % self.side()),
        }
    }
}

/// `x ↦ ({e ∈ E : e·x = x}, {e ∈ E : x·e = x})`.
pub fn support_lax_morphism(s: &FiniteSemigroup) -> Vec<SubsetPair> {
    let idem = s.idempotents();
    s.elements()
        .map(|x| SubsetPair {
            left: idem.iter().copied().filter(|&e| s.mul(e, x) == x).collect(),
            right: idem.iter().copied().filter(|&e| s.mul(x, e) == x).collect(),
        })
        .collect()
}

/// The support map as indices into the subset-pair band over `E(S)`.
pub fn support_into_band(s: &FiniteSemigroup) -> Result<(SubsetPairBand, Vec<usize>)> {
    let band = rect_band_on_subset_pairs(&s.idempotents())?;
    let map = support_lax_morphism(s)
        .into_iter()
        .map(|p| {
            band.index_of(p)
                .expect("support sets contain only idempotents")
        })
        .collect();
    Ok((band, map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaxCheck {
    Ok,
    Violation { x: usize, y: usize },
}

/// Checks `f(x)·f(y) ≤ f(x·y)` for all pairs; `f[x]` is an element of `t`.
pub fn check_lax_morphism(f: &[usize], s: &FiniteSemigroup, t: &OrderedSemigroup) -> LaxCheck {
    assert_eq!(f.len(), s.order(), "element map must be total");
    for x in s.elements() {
        for y in s.elements() {
            if !t.leq(t.base().mul(f[x], f[y]), f[s.mul(x, y)]) {
                return LaxCheck::Violation { x, y };
            }
        }
    }
    LaxCheck::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_idempotent_set_is_trivial() {
        let band = rect_band_on_subset_pairs(&[]).unwrap();
        assert_eq!(band.order(), 1);
        assert_eq!(band.ordered().base().mul(0, 0), 0);
    }

    #[test]
    fn one_idempotent_gives_four_pairs() {
        let band = rect_band_on_subset_pairs(&[1]).unwrap();
        assert_eq!(band.order(), 4);
        let s = band.ordered().base();
        for p in 0..4 {
            for q in 0..4 {
                let (a, _) = (band.pair_at(p).left, band.pair_at(p).right);
                let d = band.pair_at(q).right;
                let expect = band.index_of(SubsetPair { left: a, right: d }).unwrap();
                assert_eq!(s.mul(p, q), expect);
            }
            assert_eq!(s.mul(p, p), p);
        }
        assert!(band.ordered().is_compatible());
    }

    #[test]
    fn band_size_bound() {
        assert!(matches!(
            rect_band_on_subset_pairs(&[0, 1, 2, 3, 4, 5]),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn support_examples() {
        let null2 = FiniteSemigroup::from_fn(2, |_, _| 0).unwrap();
        let sup = support_lax_morphism(&null2);
        assert_eq!(
            sup[1],
            SubsetPair {
                left: Subset::EMPTY,
                right: Subset::EMPTY
            }
        );

        let sl2 = FiniteSemigroup::from_fn(2, usize::min).unwrap();
        let sup = support_lax_morphism(&sl2);
        let both = Subset::from_elems([0, 1]);
        assert_eq!(
            sup[0],
            SubsetPair {
                left: both,
                right: both
            }
        );
    }

    #[test]
    fn homomorphism_is_lax() {
        let sl2 = FiniteSemigroup::from_fn(2, usize::min).unwrap();
        let t = OrderedSemigroup::new(sl2.clone(), |x, y| x <= y).unwrap();
        assert_eq!(check_lax_morphism(&[0, 1], &sl2, &t), LaxCheck::Ok);
    }

    #[test]
    fn constant_map_can_fail() {
        // bottom·bottom = top and top is not below bottom
        let t = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        let t = OrderedSemigroup::new(t, |x, y| x <= y).unwrap();
        let s = FiniteSemigroup::from_fn(1, |_, _| 0).unwrap();
        assert_eq!(
            check_lax_morphism(&[0], &s, &t),
            LaxCheck::Violation { x: 0, y: 0 }
        );
    }

    #[test]
    fn rejects_non_partial_order() {
        let t = FiniteSemigroup::from_fn(2, |_, _| 0).unwrap();
        assert!(OrderedSemigroup::new(t, |_, _| true).is_err());
    }
}
