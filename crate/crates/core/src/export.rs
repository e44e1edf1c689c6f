//! JSON form of wired categories.
//!
//! ```json
//! {
//!   "objects": 2,
//!   "object_labels": ["0", "1"],
//!   "arrows": [{"dom": 0, "cod": 0, "label": "(0,0,0)"}, ...],
//!   "identities": [0, 4],
//!   "composition": [[f, g, f;g], ...],
//!   "wires": [[0, 1], [2, 4]]
//! }
//! ```
//!
//! Keys appear in the order above. `composition` lists every composable pair
//! in lexicographic order. Labels are optional and ignored on import.

use serde::{Deserialize, Serialize};

use crate::category::{validate_category, validate_wired, Arrow, RawCategory, WiredCategory};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub dom: usize,
    pub cod: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WiredCategoryDoc {
    pub objects: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_labels: Option<Vec<String>>,
    pub arrows: Vec<ArrowRecord>,
    pub identities: Vec<usize>,
    pub composition: Vec<[usize; 3]>,
    pub wires: Vec<Vec<usize>>,
}

impl WiredCategoryDoc {
    pub fn from_wired(c: &WiredCategory) -> Self {
        let base = c.base();
        let n = base.arrow_count();
        let mut composition = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(h) = base.try_compose(f, g) {
                    composition.push([f, g, h]);
                }
            }
        }
        WiredCategoryDoc {
            objects: base.objects(),
            object_labels: None,
            arrows: base
                .arrows()
                .iter()
                .map(|a| ArrowRecord {
                    dom: a.dom,
                    cod: a.cod,
                    label: None,
                })
                .collect(),
            identities: base.identities().to_vec(),
            composition,
            wires: c.wire_grid(),
        }
    }

    pub fn with_labels(mut self, objects: Vec<String>, arrows: Vec<String>) -> Self {
        self.object_labels = Some(objects);
        for (rec, label) in self.arrows.iter_mut().zip(arrows) {
            rec.label = Some(label);
        }
        self
    }

    pub fn into_wired(self) -> Result<WiredCategory> {
        let n = self.arrows.len();
        let mut comp = vec![vec![None; n]; n];
        for [f, g, h] in self.composition {
            if f >= n || g >= n {
                return Err(Error::BadComposite(f, g));
            }
            if comp[f][g].replace(h).is_some() {
                return Err(Error::BadComposite(f, g));
            }
        }
        let base = validate_category(RawCategory {
            objects: self.objects,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    dom: a.dom,
                    cod: a.cod,
                })
                .collect(),
            identity: self.identities,
            comp,
        })?;
        validate_wired(base, self.wires)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::indiscrete_wired;

    #[test]
    fn roundtrip_indiscrete() {
        let c = indiscrete_wired(2);
        let doc = WiredCategoryDoc::from_wired(&c);
        assert_eq!(doc.composition.len(), 8);
        let back = WiredCategoryDoc::from_json(&doc.to_json())
            .unwrap()
            .into_wired()
            .unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn key_order_is_stable() {
        let doc = WiredCategoryDoc::from_wired(&indiscrete_wired(1))
            .with_labels(vec!["e".into()], vec!["id".into()]);
        let json = doc.to_json();
        let keys = [
            "\"objects\"",
            "\"object_labels\"",
            "\"arrows\"",
            "\"identities\"",
            "\"composition\"",
            "\"wires\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn duplicate_composite_rejected() {
        let mut doc = WiredCategoryDoc::from_wired(&indiscrete_wired(1));
        doc.composition.push([0, 0, 0]);
        assert!(matches!(doc.into_wired(), Err(Error::BadComposite(0, 0))));
    }
}
