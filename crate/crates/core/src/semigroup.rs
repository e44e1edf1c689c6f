//! Finite semigroups given by Cayley tables over `0..n`.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Largest base order accepted by [`power_semigroup`] by default.
pub const DEFAULT_POWER_ORDER: usize = 6;

/// A validated finite semigroup. `mul(x, y)` is `table[x][y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<usize>,
}

/// Checks a raw Cayley table. On failure the first violating entry or triple
/// (in lexicographic order) is reported.
pub fn validate_semigroup(rows: &[Vec<usize>]) -> Result<FiniteSemigroup> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut table = Vec::with_capacity(n * n);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                n,
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(Error::OutOfRange { row, col, value, n });
            }
            table.push(value);
        }
    }
    let s = FiniteSemigroup { n, table };
    if let Some((x, y, z)) = s.first_non_associative() {
        return Err(Error::NonAssociative { x, y, z });
    }
    Ok(s)
}

impl FiniteSemigroup {
    /// Validating constructor from a flat row-major table.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = table.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
        if table.len() != n * n {
            return Err(Error::NotSquare {
                row: 0,
                len: table.len(),
                n: n * n,
            });
        }
        validate_semigroup(&rows)
    }

    /// Builds a semigroup from a product function that is known to be
    /// associative. Callers re-validate in tests.
    pub(crate) fn from_fn_unchecked(n: usize, mut mul: impl FnMut(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(mul(x, y));
            }
        }
        FiniteSemigroup { n, table }
    }

    /// Validating constructor from a product function.
    pub fn from_fn(n: usize, mul: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let s = Self::from_fn_unchecked(n, mul);
        validate_semigroup(&s.rows())?;
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn mul3(&self, x: usize, y: usize, z: usize) -> usize {
        self.mul(self.mul(x, y), z)
    }

    pub fn flat(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                let xy = self.mul(x, y);
                for z in 0..self.n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// `{e : e·e = e}` in increasing order.
    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    /// All `y` with `x·y·x = x`.
    pub fn pseudoinverses(&self, x: usize) -> Vec<usize> {
        self.elements()
            .filter(|&y| self.mul3(x, y, x) == x)
            .collect()
    }

    /// Regularity check. The witness map holds the least pseudoinverse of
    /// every element; on failure the first element without one is returned.
    pub fn regularity(&self) -> Regularity {
        let mut witness = Vec::with_capacity(self.n);
        for x in self.elements() {
            match self.pseudoinverses(x).first() {
                Some(&y) => witness.push(y),
                None => return Regularity::Irregular { element: x },
            }
        }
        Regularity::Regular {
            pseudoinverse: witness,
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self.regularity(), Regularity::Regular { .. })
    }

    /// Least idempotents `(e, f)` with `e·x·f = x`.
    pub fn support(&self, x: usize) -> Option<(usize, usize)> {
        let idem = self.idempotents();
        idem.iter()
            .flat_map(|&e| idem.iter().map(move |&f| (e, f)))
            .find(|&(e, f)| self.mul3(e, x, f) == x)
    }

    /// Every element is `e·x·f` for some idempotents `e`, `f`.
    pub fn enough_idempotents(&self) -> EnoughIdempotents {
        let mut witness = Vec::with_capacity(self.n);
        for x in self.elements() {
            match self.support(x) {
                Some(pair) => witness.push(pair),
                None => return EnoughIdempotents::Lacking { element: x },
            }
        }
        EnoughIdempotents::Enough { support: witness }
    }

    pub fn has_enough_idempotents(&self) -> bool {
        matches!(self.enough_idempotents(), EnoughIdempotents::Enough { .. })
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&e| self.is_identity(e))
    }

    pub fn is_left_identity(&self, e: usize) -> bool {
        self.elements().all(|x| self.mul(e, x) == x)
    }

    pub fn is_right_identity(&self, e: usize) -> bool {
        self.elements().all(|x| self.mul(x, e) == x)
    }

    pub fn is_identity(&self, e: usize) -> bool {
        self.is_left_identity(e) && self.is_right_identity(e)
    }

    pub fn is_central(&self, e: usize) -> bool {
        self.elements().all(|x| self.mul(e, x) == self.mul(x, e))
    }

    /// Direct product with pairs `(a, s)` encoded as `a * other.order() + s`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order();
        FiniteSemigroup::from_fn_unchecked(self.n * m, |p, q| {
            self.mul(p / m, q / m) * m + other.mul(p % m, q % m)
        })
    }

    /// The map `a ↦ image[a]` is a homomorphism into `target`.
    pub fn is_homomorphism(
        &self,
        image: &[usize],
        target: &FiniteSemigroup,
    ) -> Option<(usize, usize)> {
        for x in self.elements() {
            for y in self.elements() {
                if image[self.mul(x, y)] != target.mul(image[x], image[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular { pseudoinverse: Vec<usize> },
    Irregular { element: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnoughIdempotents {
    Enough { support: Vec<(usize, usize)> },
    Lacking { element: usize },
}

/// Index of a nonempty subset in a power semigroup (and in the nonempty
/// power-set carrier): bitmask minus one.
pub fn subset_index(s: Subset) -> usize {
    debug_assert!(!s.is_empty());
    s.bits() as usize - 1
}

pub fn subset_at(index: usize) -> Subset {
    Subset(index as u64 + 1)
}

/// Setwise product `{a·b : a ∈ A, b ∈ B}`.
pub fn setwise_product(s: &FiniteSemigroup, a: Subset, b: Subset) -> Subset {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| s.mul(x, y)))
        .collect()
}

/// Semigroup of nonempty subsets under setwise product. Element `i` is the
/// subset with bitmask `i + 1`.
pub fn power_semigroup(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    power_semigroup_bounded(s, DEFAULT_POWER_ORDER)
}

pub fn power_semigroup_bounded(s: &FiniteSemigroup, max_order: usize) -> Result<FiniteSemigroup> {
    if s.order() > max_order || s.order() > 16 {
        return Err(Error::SizeBound {
            what: "power semigroup base order",
            size: s.order(),
            limit: max_order.min(16),
        });
    }
    let size = (1usize << s.order()) - 1;
    let p = FiniteSemigroup::from_fn_unchecked(size, |i, j| {
        subset_index(setwise_product(s, subset_at(i), subset_at(j)))
    });
    validate_semigroup(&p.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[usize]]) -> Vec<Vec<usize>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn brute_first_violation(rows: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = rows.len();
        let mut out = None;
        // reverse order scan, keeps the smallest violation seen
        for x in (0..n).rev() {
            for y in (0..n).rev() {
                for z in (0..n).rev() {
                    if rows[rows[x][y]][z] != rows[x][rows[y][z]] {
                        out = Some((x, y, z));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn left_zero_is_valid() {
        assert!(validate_semigroup(&table(&[&[0, 0], &[1, 1]])).is_ok());
    }

    #[test]
    fn non_associative_witness() {
        let raw = table(&[&[1, 0], &[0, 0]]);
        let expected = brute_first_violation(&raw).unwrap();
        assert_eq!(expected, (0, 0, 1));
        match validate_semigroup(&raw) {
            Err(Error::NonAssociative { x, y, z }) => assert_eq!((x, y, z), expected),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(validate_semigroup(&[]), Err(Error::Empty)));
        assert!(matches!(
            validate_semigroup(&table(&[&[0, 1], &[0]])),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_semigroup(&table(&[&[0, 2], &[0, 0]])),
            Err(Error::OutOfRange {
                row: 0,
                col: 1,
                value: 2,
                ..
            })
        ));
    }

    #[test]
    fn min_semilattice() {
        let sl2 = FiniteSemigroup::from_fn(2, usize::min).unwrap();
        assert_eq!(sl2.idempotents(), vec![0, 1]);
        assert!(sl2.is_regular());
        assert_eq!(sl2.identity(), Some(1));
    }

    #[test]
    fn null_semigroup() {
        let null2 = FiniteSemigroup::from_fn(2, |_, _| 0).unwrap();
        assert_eq!(null2.idempotents(), vec![0]);
        assert!(null2.pseudoinverses(1).is_empty());
        assert_eq!(null2.regularity(), Regularity::Irregular { element: 1 });
        assert_eq!(
            null2.enough_idempotents(),
            EnoughIdempotents::Lacking { element: 1 }
        );
    }

    #[test]
    fn group_z2() {
        let z2 = FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2).unwrap();
        assert_eq!(z2.idempotents(), vec![0]);
        assert_eq!(z2.pseudoinverses(0), vec![0]);
        assert_eq!(z2.pseudoinverses(1), vec![1]);
        assert_eq!(z2.support(1), Some((0, 0)));
    }

    #[test]
    fn rectangular_band_every_y_is_pseudoinverse() {
        let rb = FiniteSemigroup::from_fn(4, |p, q| (p / 2) * 2 + q % 2).unwrap();
        for x in rb.elements() {
            assert_eq!(rb.pseudoinverses(x), vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn power_semigroup_of_z2() {
        let z2 = FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2).unwrap();
        let p = power_semigroup(&z2).unwrap();
        assert_eq!(p.order(), 3);
        let s0 = subset_index(Subset::from_elems([0]));
        let s1 = subset_index(Subset::from_elems([1]));
        let both = subset_index(Subset::from_elems([0, 1]));
        assert_eq!(p.mul(s0, s1), s1);
        assert_eq!(p.mul(both, both), both);
    }

    #[test]
    fn power_semigroup_bound() {
        let big = FiniteSemigroup::from_fn(7, |_, _| 0).unwrap();
        assert!(matches!(
            power_semigroup(&big),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn direct_product_indices() {
        let z2 = FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2).unwrap();
        let lz2 = FiniteSemigroup::from_fn(2, |x, _| x).unwrap();
        let p = z2.direct_product(&lz2);
        validate_semigroup(&p.rows()).unwrap();
        // (1,0)·(1,1) = (0,0)
        assert_eq!(p.mul(2, 3), 0);
    }
}
