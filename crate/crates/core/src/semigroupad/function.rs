use std::fmt;

use crate::error::{Error, Result};

/// A function `[dom] → [cod]` stored as its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinFunction {
    cod: usize,
    table: Vec<usize>,
}

impl FinFunction {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&v| v >= cod) {
            return Err(Error::ShapeMismatch {
                expected: format!("values below {cod}"),
                found: bad.to_string(),
            });
        }
        Ok(FinFunction { cod, table })
    }

    pub(crate) fn from_table_unchecked(cod: usize, table: Vec<usize>) -> Self {
        debug_assert!(table.iter().all(|&v| v < cod));
        FinFunction { cod, table }
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl FnMut(usize) -> usize) -> Self {
        let table: Vec<usize> = (0..dom).map(f).collect();
        assert!(table.iter().all(|&v| v < cod), "value out of codomain");
        FinFunction { cod, table }
    }

    pub fn identity(k: usize) -> Self {
        FinFunction {
            cod: k,
            table: (0..k).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.table.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Diagrammatic composite `self ; g`.
    pub fn then(&self, g: &FinFunction) -> FinFunction {
        assert_eq!(self.cod, g.dom(), "functions are not composable");
        FinFunction {
            cod: g.cod,
            table: self.table.iter().map(|&x| g.table[x]).collect(),
        }
    }

    /// The constant function `[1] → [k]` at `x`.
    pub fn point(k: usize, x: usize) -> Self {
        FinFunction::from_fn(1, k, |_| x)
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{}", self.table, self.cod)
    }
}

/// Every function `[dom] → [cod]`, in lexicographic order of tables.
pub fn functions(dom: usize, cod: usize) -> impl Iterator<Item = FinFunction> {
    let mut next = (dom == 0 || cod > 0).then(|| vec![0; dom]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        // last position varies fastest
        let mut i = dom;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < cod {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(FinFunction {
            cod,
            table: current,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn function_counts() {
        assert_eq!(functions(0, 0).count(), 1);
        assert_eq!(functions(0, 3).count(), 1);
        assert_eq!(functions(2, 0).count(), 0);
        assert_eq!(functions(3, 2).count(), 8);
        assert_eq!(functions(2, 3).count(), 9);
        let all: Vec<_> = functions(2, 2).map(|f| f.table().to_vec()).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn composition_is_diagrammatic() {
        let f = FinFunction::new(3, vec![2, 0]).unwrap();
        let g = FinFunction::new(2, vec![1, 1, 0]).unwrap();
        assert_eq!(f.then(&g).table(), &[0, 1]);
        assert!(FinFunction::new(2, vec![2]).is_err());
    }
}
