//! Exhaustive labeled semigroups of small order and the named fixtures.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Largest order [`enumerate_semigroups`] accepts; order 4 means 4^16 tables.
pub const MAX_CORPUS_ORDER: usize = 3;

/// Every associative table on `0..order`, in lexicographic order of the
/// row-major table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub order: usize,
    pub tables: Vec<FiniteSemigroup>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn contains(&self, s: &FiniteSemigroup) -> bool {
        self.tables
            .binary_search_by(|t| t.flat().cmp(s.flat()))
            .is_ok()
    }
}

fn decode(order: usize, mut code: usize) -> Vec<usize> {
    let cells = order * order;
    let mut table = vec![0; cells];
    // last cell varies fastest, matching lexicographic order of tables
    for cell in table.iter_mut().rev() {
        *cell = code % order;
        code /= order;
    }
    table
}

/// Scans all `n^(n²)` tables and keeps the associative ones.
pub fn enumerate_semigroups(order: usize) -> Result<Corpus> {
    if order > MAX_CORPUS_ORDER {
        return Err(Error::SizeBound {
            what: "corpus order",
            size: order,
            limit: MAX_CORPUS_ORDER,
        });
    }
    if order == 0 {
        return Ok(Corpus {
            order,
            tables: Vec::new(),
        });
    }
    let candidates = order.pow((order * order) as u32);
    let tables = (0..candidates)
        .into_par_iter()
        .filter_map(|code| FiniteSemigroup::from_flat(order, decode(order, code)).ok())
        .collect();
    Ok(Corpus { order, tables })
}

/// Concatenation of the corpora of orders `1..=max_order`.
pub fn corpus_up_to(max_order: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_semigroups(n)?.tables);
    }
    Ok(out)
}

fn table(order: usize, mul: impl FnMut(usize, usize) -> usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(order, mul).expect("fixture tables are associative")
}

/// Full transformation monoid on two points. Element `i` is the map with
/// table `[i / 2, i % 2]`; the product applies the left factor first.
fn t2() -> FiniteSemigroup {
    let apply = |f: usize, p: usize| if p == 0 { f / 2 } else { f % 2 };
    table(4, |f, g| apply(g, apply(f, 0)) * 2 + apply(g, apply(f, 1)))
}

/// Named fixtures, keyed by stable names.
pub fn fixtures() -> BTreeMap<&'static str, FiniteSemigroup> {
    BTreeMap::from([
        ("CHAIN3", table(3, usize::min)),
        ("LZ2", table(2, |x, _| x)),
        ("NULL2", table(2, |_, _| 0)),
        // (a, b) at 2a + b
        ("RB22", table(4, |x, y| (x / 2) * 2 + y % 2)),
        ("SL2", table(2, usize::min)),
        ("T2", t2()),
        ("TRIV", table(1, |_, _| 0)),
        ("Z2", table(2, |x, y| (x + y) % 2)),
        ("Z3", table(3, |x, y| (x + y) % 3)),
    ])
}

/// Fixtures of order at most `max_order`, in name order.
pub fn small_fixtures(max_order: usize) -> Vec<(&'static str, FiniteSemigroup)> {
    fixtures()
        .into_iter()
        .filter(|(_, s)| s.order() <= max_order)
        .collect()
}
