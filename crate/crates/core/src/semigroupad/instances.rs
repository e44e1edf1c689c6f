//! The two shipped semigroupads: the writer `A ↦ A × S₀` and nonempty
//! finite subsets.

use super::{FinFunction, Semigroupad};
use crate::semigroup::{subset_at, subset_index, FiniteSemigroup};
use crate::subset::Subset;

/// `T[k] = [k] × S₀`, pair `(a, s)` at index `a·|S₀| + s`;
/// `T f (a, s) = (f a, s)` and `μ ((a, s₁), s₂) = (a, s₁·s₂)`.
///
/// The multiplication table need not be associative: over a magma `μ` is
/// still natural but the associativity square fails.
#[derive(Clone, Debug)]
pub struct Writer {
    label: String,
    order: usize,
    table: Vec<usize>,
}

impl Writer {
    pub fn new(s0: &FiniteSemigroup) -> Self {
        Writer {
            label: format!("writer(order {})", s0.order()),
            order: s0.order(),
            table: s0.flat().to_vec(),
        }
    }

    pub fn named(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Writer over an arbitrary binary operation on `0..order`.
    pub fn over_magma(order: usize, table: Vec<usize>) -> Self {
        assert_eq!(table.len(), order * order, "magma table must be square");
        assert!(table.iter().all(|&v| v < order), "magma entry out of range");
        Writer {
            label: format!("writer(magma of order {order})"),
            order,
            table,
        }
    }

    pub fn monoid_order(&self) -> usize {
        self.order
    }

    fn op(&self, s: usize, t: usize) -> usize {
        self.table[s * self.order + t]
    }
}

impl Semigroupad for Writer {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn carrier(&self, k: usize) -> usize {
        k * self.order
    }

    fn lift(&self, f: &FinFunction) -> FinFunction {
        let m = self.order;
        FinFunction::from_table_unchecked(
            f.cod() * m,
            (0..f.dom() * m)
                .map(|p| f.apply(p / m) * m + p % m)
                .collect(),
        )
    }

    fn mu(&self, k: usize) -> FinFunction {
        let m = self.order;
        // ((a, s1), s2) sits at (a·m + s1)·m + s2
        FinFunction::from_table_unchecked(
            k * m,
            (0..k * m * m)
                .map(|p| {
                    let (inner, s2) = (p / m, p % m);
                    let (a, s1) = (inner / m, inner % m);
                    a * m + self.op(s1, s2)
                })
                .collect(),
        )
    }

    fn describe(&self, _k: usize, elem: usize) -> String {
        format!("({},{})", elem / self.order, elem % self.order)
    }
}

/// `T[k]` = nonempty subsets of `[k]`, subset with bitmask `m` at index
/// `m − 1`; `T f` is direct image and `μ` is union.
#[derive(Clone, Copy, Debug, Default)]
pub struct NePow;

impl NePow {
    fn carrier_of(k: usize) -> usize {
        if k >= usize::BITS as usize {
            usize::MAX
        } else {
            (1usize << k) - 1
        }
    }
}

impl Semigroupad for NePow {
    fn name(&self) -> String {
        "nepow".into()
    }

    fn carrier(&self, k: usize) -> usize {
        Self::carrier_of(k)
    }

    fn lift(&self, f: &FinFunction) -> FinFunction {
        assert!(
            f.dom() <= 20 && f.cod() <= 63,
            "subset carrier too large to tabulate"
        );
        let table = (0..Self::carrier_of(f.dom()))
            .map(|i| subset_index(subset_at(i).iter().map(|x| f.apply(x)).collect()))
            .collect();
        FinFunction::from_table_unchecked(Self::carrier_of(f.cod()), table)
    }

    fn mu(&self, k: usize) -> FinFunction {
        let inner = Self::carrier_of(k);
        assert!(inner <= 20, "nested subset carrier too large to tabulate");
        let table = (0..Self::carrier_of(inner))
            .map(|i| {
                let union = subset_at(i)
                    .iter()
                    .fold(Subset::EMPTY, |acc, j| acc.union(subset_at(j)));
                subset_index(union)
            })
            .collect();
        FinFunction::from_table_unchecked(inner, table)
    }

    fn describe(&self, _k: usize, elem: usize) -> String {
        let s = subset_at(elem);
        let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}
