//! Finite categories with explicit composition tables, wired categories and
//! wired functors.
//!
//! Composition is diagrammatic throughout: `comp(f, g)` is "`f` then `g`" and
//! is defined exactly when `cod(f) == dom(g)`.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Default arrow bound for constructed categories; override with
/// `WIRECAT_MAX_ARROWS` in the CLI.
pub const DEFAULT_MAX_ARROWS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub dom: usize,
    pub cod: usize,
}

/// Unvalidated category data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: usize,
    pub arrows: Vec<Arrow>,
    pub identity: Vec<usize>,
    /// `comp[f][g]`, `None` where undefined.
    pub comp: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    comp: Vec<Option<usize>>,
}

pub fn validate_category(raw: RawCategory) -> Result<FiniteCategory> {
    let RawCategory {
        objects,
        arrows,
        identity,
        comp,
    } = raw;
    let n = arrows.len();
    for (i, a) in arrows.iter().enumerate() {
        if a.dom >= objects || a.cod >= objects {
            return Err(Error::BadArrow { arrow: i, objects });
        }
    }
    if identity.len() != objects {
        return Err(Error::BadIdentity(identity.len().min(objects)));
    }
    for (obj, &id) in identity.iter().enumerate() {
        if id >= n || arrows[id] != (Arrow { dom: obj, cod: obj }) {
            return Err(Error::BadIdentity(obj));
        }
    }
    if comp.len() != n {
        return Err(Error::BadComposite(comp.len().min(n), 0));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (f, row) in comp.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadComposite(f, row.len().min(n)));
        }
        for (g, &c) in row.iter().enumerate() {
            let composable = arrows[f].cod == arrows[g].dom;
            match c {
                Some(h) if composable && h < n => {
                    if arrows[h].dom != arrows[f].dom || arrows[h].cod != arrows[g].cod {
                        return Err(Error::BadComposite(f, g));
                    }
                }
                None if !composable => {}
                _ => return Err(Error::BadComposite(f, g)),
            }
            flat.push(c);
        }
    }
    let cat = FiniteCategory {
        objects,
        arrows,
        identity,
        comp: flat,
    };
    for f in 0..n {
        let Arrow { dom, cod } = cat.arrows[f];
        if cat.compose(cat.identity[dom], f) != f {
            return Err(Error::BadIdentity(dom));
        }
        if cat.compose(f, cat.identity[cod]) != f {
            return Err(Error::BadIdentity(cod));
        }
    }
    for f in 0..n {
        for g in cat.arrows_from(cat.arrows[f].cod) {
            let fg = cat.compose(f, g);
            for h in cat.arrows_from(cat.arrows[g].cod) {
                if cat.compose(fg, h) != cat.compose(f, cat.compose(g, h)) {
                    return Err(Error::NonAssociativeComposite(f, g, h));
                }
            }
        }
    }
    Ok(cat)
}

impl FiniteCategory {
    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, f: usize) -> Arrow {
        self.arrows[f]
    }

    pub fn dom(&self, f: usize) -> usize {
        self.arrows[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.arrows[f].cod
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identity[obj]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.dom(f)] == f
    }

    pub fn try_compose(&self, f: usize, g: usize) -> Option<usize> {
        self.comp[f * self.arrows.len() + g]
    }

    /// `f ; g`. Panics when `cod(f) != dom(g)`.
    #[inline]
    pub fn compose(&self, f: usize, g: usize) -> usize {
        self.try_compose(f, g)
            .unwrap_or_else(|| panic!("arrows {f} and {g} are not composable"))
    }

    /// Composite of a nonempty path, first arrow first.
    pub fn compose_path(&self, path: &[usize]) -> usize {
        let (first, rest) = path.split_first().expect("nonempty path");
        rest.iter().fold(*first, |acc, &g| self.compose(acc, g))
    }

    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        let target = Arrow { dom: a, cod: b };
        (0..self.arrows.len()).filter(move |&f| self.arrows[f] == target)
    }

    pub fn arrows_from(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&f| self.arrows[f].dom == a)
    }

    pub fn to_raw(&self) -> RawCategory {
        let n = self.arrows.len();
        RawCategory {
            objects: self.objects,
            arrows: self.arrows.clone(),
            identity: self.identity.clone(),
            comp: self
                .comp
                .chunks(n.max(1))
                .map(<[Option<usize>]>::to_vec)
                .take(n)
                .collect(),
        }
    }

    /// A monoid as a one-object category; arrow `i` is element `i`.
    pub fn from_monoid(m: &FiniteSemigroup) -> Result<Self> {
        let unit = m
            .identity()
            .ok_or_else(|| Error::NotMonoid(format!("semigroup of order {}", m.order())))?;
        let n = m.order();
        validate_category(RawCategory {
            objects: 1,
            arrows: vec![Arrow { dom: 0, cod: 0 }; n],
            identity: vec![unit],
            comp: (0..n)
                .map(|f| (0..n).map(|g| Some(m.mul(f, g))).collect())
                .collect(),
        })
    }

    /// Arrows `φ: a → b` with some `φ′: b → a`, `φ′ ; φ = 1_b`, paired with
    /// the least such `φ′`.
    pub fn split_epis(&self) -> Vec<(usize, usize)> {
        (0..self.arrow_count())
            .filter_map(|f| self.split_epi_witness(f).map(|w| (f, w)))
            .collect()
    }

    /// Arrows `μ: c → b` with some `μ′: b → c`, `μ ; μ′ = 1_c`, paired with
    /// the least such `μ′`.
    pub fn split_monos(&self) -> Vec<(usize, usize)> {
        (0..self.arrow_count())
            .filter_map(|f| self.split_mono_witness(f).map(|w| (f, w)))
            .collect()
    }

    pub fn split_epi_witness(&self, f: usize) -> Option<usize> {
        let Arrow { dom, cod } = self.arrows[f];
        self.hom(cod, dom)
            .find(|&g| self.compose(g, f) == self.identity[cod])
    }

    pub fn split_mono_witness(&self, f: usize) -> Option<usize> {
        let Arrow { dom, cod } = self.arrows[f];
        self.hom(cod, dom)
            .find(|&g| self.compose(f, g) == self.identity[dom])
    }

    pub fn is_iso(&self, f: usize) -> bool {
        let Arrow { dom, cod } = self.arrows[f];
        self.hom(cod, dom).any(|g| {
            self.compose(f, g) == self.identity[dom] && self.compose(g, f) == self.identity[cod]
        })
    }

    /// First `φ = ε ; μ` (in arrow-index order of `(ε, μ)`) with `ε` split
    /// epi and `μ` split mono.
    pub fn factorize_split(&self, f: usize) -> Option<SplitFactorization> {
        let Arrow { dom, cod } = self.arrows[f];
        for epi in self.arrows_from(dom) {
            let Some(epi_inverse) = self.split_epi_witness(epi) else {
                continue;
            };
            for mono in self.hom(self.cod(epi), cod) {
                if self.compose(epi, mono) != f {
                    continue;
                }
                if let Some(mono_inverse) = self.split_mono_witness(mono) {
                    return Some(SplitFactorization {
                        epi,
                        mono,
                        epi_inverse,
                        mono_inverse,
                    });
                }
            }
        }
        None
    }
}

/// `φ = epi ; mono` with `epi_inverse ; epi = 1` and `mono ; mono_inverse = 1`
/// at the middle object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitFactorization {
    pub epi: usize,
    pub mono: usize,
    pub epi_inverse: usize,
    pub mono_inverse: usize,
}

/// A finite category with a chosen arrow `wire(a, b): a → b` for every pair of
/// objects, identities on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiredCategory {
    base: FiniteCategory,
    wire: Vec<usize>,
}

pub fn validate_wired(base: FiniteCategory, wire: Vec<Vec<usize>>) -> Result<WiredCategory> {
    let m = base.objects();
    if wire.len() != m {
        return Err(Error::WireEndpoints(wire.len().min(m), 0));
    }
    let mut flat = Vec::with_capacity(m * m);
    for (a, row) in wire.iter().enumerate() {
        if row.len() != m {
            return Err(Error::WireEndpoints(a, row.len().min(m)));
        }
        for (b, &w) in row.iter().enumerate() {
            if w >= base.arrow_count() || base.arrow(w) != (Arrow { dom: a, cod: b }) {
                return Err(Error::WireEndpoints(a, b));
            }
            if a == b && w != base.identity(a) {
                return Err(Error::WireDiagonal(a));
            }
            flat.push(w);
        }
    }
    Ok(WiredCategory { base, wire: flat })
}

impl WiredCategory {
    /// Wires every pair with its least arrow (identities on the diagonal).
    pub fn with_least_wires(base: FiniteCategory) -> Result<Self> {
        let m = base.objects();
        let mut wire = vec![vec![0; m]; m];
        for (a, row) in wire.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = if a == b {
                    base.identity(a)
                } else {
                    base.hom(a, b).next().ok_or(Error::WireEndpoints(a, b))?
                };
            }
        }
        validate_wired(base, wire)
    }

    /// One-object wired category of a monoid.
    pub fn one_object(m: &FiniteSemigroup) -> Result<Self> {
        Self::with_least_wires(FiniteCategory::from_monoid(m)?)
    }

    pub fn base(&self) -> &FiniteCategory {
        &self.base
    }

    pub fn objects(&self) -> usize {
        self.base.objects()
    }

    pub fn arrow_count(&self) -> usize {
        self.base.arrow_count()
    }

    #[inline]
    pub fn wire(&self, a: usize, b: usize) -> usize {
        self.wire[a * self.base.objects() + b]
    }

    pub fn wire_grid(&self) -> Vec<Vec<usize>> {
        let m = self.objects();
        (0..m)
            .map(|a| (0..m).map(|b| self.wire(a, b)).collect())
            .collect()
    }

    /// `φ □ ψ = φ ; wire(cod φ, dom ψ) ; ψ`.
    pub fn box_product(&self, f: usize, g: usize) -> usize {
        let c = &self.base;
        let w = self.wire(c.cod(f), c.dom(g));
        c.compose(c.compose(f, w), g)
    }

    /// The semigroup on the arrow set under `□`; element `i` is arrow `i`.
    pub fn to_semigroup(&self) -> FiniteSemigroup {
        FiniteSemigroup::from_fn_unchecked(self.arrow_count(), |f, g| self.box_product(f, g))
    }
}

/// Free function form of [`WiredCategory::to_semigroup`].
pub fn wired_to_semigroup(c: &WiredCategory) -> FiniteSemigroup {
    c.to_semigroup()
}

/// Exactly one arrow between each ordered pair of `m` objects. Arrow
/// `a * m + b` goes `a → b`.
pub fn indiscrete_wired(m: usize) -> WiredCategory {
    assert!(m >= 1, "indiscrete category needs an object");
    let n = m * m;
    let arrows = (0..n)
        .map(|i| Arrow {
            dom: i / m,
            cod: i % m,
        })
        .collect();
    let comp = (0..n)
        .map(|f| {
            (0..n)
                .map(|g| (f % m == g / m).then_some((f / m) * m + g % m))
                .collect()
        })
        .collect();
    let base = validate_category(RawCategory {
        objects: m,
        arrows,
        identity: (0..m).map(|a| a * m + a).collect(),
        comp,
    })
    .expect("indiscrete category is valid");
    let wire = (0..m)
        .map(|a| (0..m).map(|b| a * m + b).collect())
        .collect();
    validate_wired(base, wire).expect("indiscrete wires are valid")
}

/// Object and arrow maps of a functor between wired categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiredFunctor {
    pub obj_map: Vec<usize>,
    pub arr_map: Vec<usize>,
}

impl WiredFunctor {
    pub fn identity(c: &WiredCategory) -> Self {
        WiredFunctor {
            obj_map: (0..c.objects()).collect(),
            arr_map: (0..c.arrow_count()).collect(),
        }
    }

    /// Checks endpoints, identities, composition and wires.
    pub fn validate(&self, src: &WiredCategory, dst: &WiredCategory) -> Result<()> {
        let (c, d) = (src.base(), dst.base());
        let bad = |msg: String| Err(Error::NotFunctor(msg));
        if self.obj_map.len() != c.objects() || self.arr_map.len() != c.arrow_count() {
            return bad("map sizes do not match the source".into());
        }
        if self.obj_map.iter().any(|&o| o >= d.objects())
            || self.arr_map.iter().any(|&f| f >= d.arrow_count())
        {
            return bad("image outside the target".into());
        }
        for f in 0..c.arrow_count() {
            let Arrow { dom, cod } = c.arrow(f);
            let expect = Arrow {
                dom: self.obj_map[dom],
                cod: self.obj_map[cod],
            };
            if d.arrow(self.arr_map[f]) != expect {
                return bad(format!("arrow {f} endpoints not preserved"));
            }
        }
        for a in 0..c.objects() {
            if self.arr_map[c.identity(a)] != d.identity(self.obj_map[a]) {
                return bad(format!("identity at {a} not preserved"));
            }
        }
        for f in 0..c.arrow_count() {
            for g in c.arrows_from(c.cod(f)) {
                if self.arr_map[c.compose(f, g)] != d.compose(self.arr_map[f], self.arr_map[g]) {
                    return bad(format!("composite of {f} and {g} not preserved"));
                }
            }
        }
        for a in 0..c.objects() {
            for b in 0..c.objects() {
                if self.arr_map[src.wire(a, b)] != dst.wire(self.obj_map[a], self.obj_map[b]) {
                    return bad(format!("wire {a} -> {b} not preserved"));
                }
            }
        }
        Ok(())
    }
}

/// The semigroup homomorphism underlying a wired functor: its arrow map,
/// checked to convert `□` into `□` on every pair.
pub fn s_on_functor(
    functor: &WiredFunctor,
    src: &WiredCategory,
    dst: &WiredCategory,
) -> Result<Vec<usize>> {
    let map = &functor.arr_map;
    for f in 0..src.arrow_count() {
        for g in 0..src.arrow_count() {
            if map[src.box_product(f, g)] != dst.box_product(map[f], map[g]) {
                return Err(Error::NotHomomorphism(f, g));
            }
        }
    }
    Ok(map.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::validate_semigroup;

    fn z2() -> FiniteSemigroup {
        FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2).unwrap()
    }

    fn discrete(m: usize) -> FiniteCategory {
        validate_category(RawCategory {
            objects: m,
            arrows: (0..m).map(|a| Arrow { dom: a, cod: a }).collect(),
            identity: (0..m).collect(),
            comp: (0..m)
                .map(|f| (0..m).map(|g| (f == g).then_some(f)).collect())
                .collect(),
        })
        .unwrap()
    }

    #[test]
    fn monoid_category_is_valid() {
        let c = FiniteCategory::from_monoid(&z2()).unwrap();
        assert_eq!(c.arrow_count(), 2);
        assert_eq!(c.identity(0), 0);
    }

    #[test]
    fn indiscrete_two_objects() {
        let c = indiscrete_wired(2);
        assert_eq!(c.arrow_count(), 4);
        assert!(validate_category(c.base().to_raw()).is_ok());
        assert_eq!(indiscrete_wired(1).arrow_count(), 1);
    }

    #[test]
    fn broken_identity_detected() {
        let mut raw = FiniteCategory::from_monoid(&z2()).unwrap().to_raw();
        raw.identity = vec![1];
        assert!(matches!(validate_category(raw), Err(Error::BadIdentity(0))));
    }

    #[test]
    fn broken_composite_detected() {
        let mut raw = indiscrete_wired(2).base().to_raw();
        raw.comp[0][1] = None;
        assert!(matches!(
            validate_category(raw),
            Err(Error::BadComposite(0, 1))
        ));
        let mut raw = indiscrete_wired(2).base().to_raw();
        raw.comp[0][3] = Some(0);
        assert!(matches!(
            validate_category(raw),
            Err(Error::BadComposite(0, 3))
        ));
    }

    #[test]
    fn non_associative_detected() {
        // one object, arrows {1, a, b}: a;a = b, everything else collapses to
        // b, except b;a = a which breaks (a;a);a = a;(a;a).
        let table = [[0, 1, 2], [1, 2, 2], [2, 1, 2]];
        let raw = RawCategory {
            objects: 1,
            arrows: vec![Arrow { dom: 0, cod: 0 }; 3],
            identity: vec![0],
            comp: table
                .iter()
                .map(|r| r.iter().map(|&c| Some(c)).collect())
                .collect(),
        };
        assert!(matches!(
            validate_category(raw),
            Err(Error::NonAssociativeComposite(1, 1, 1))
        ));
    }

    #[test]
    fn wire_validation() {
        let c = FiniteCategory::from_monoid(&z2()).unwrap();
        assert!(validate_wired(c.clone(), vec![vec![0]]).is_ok());
        assert!(matches!(
            validate_wired(c, vec![vec![1]]),
            Err(Error::WireDiagonal(0))
        ));
        assert!(matches!(
            WiredCategory::with_least_wires(discrete(2)),
            Err(Error::WireEndpoints(0, 1))
        ));
        assert!(matches!(
            validate_wired(discrete(2), vec![vec![0, 0], vec![1, 1]]),
            Err(Error::WireEndpoints(0, 1))
        ));
    }

    #[test]
    fn one_object_semigroup_is_the_monoid() {
        let m = z2();
        let s = WiredCategory::one_object(&m).unwrap().to_semigroup();
        assert_eq!(s, m);
    }

    #[test]
    fn indiscrete_semigroup_is_rectangular_band() {
        let c = indiscrete_wired(2);
        let s = c.to_semigroup();
        validate_semigroup(&s.rows()).unwrap();
        for f in 0..4 {
            for g in 0..4 {
                let expect = c.base().dom(f) * 2 + c.base().cod(g);
                assert_eq!(s.mul(f, g), expect);
            }
        }
    }

    #[test]
    fn box_extends_composition() {
        let c = indiscrete_wired(3);
        let s = c.to_semigroup();
        for f in 0..9 {
            for g in 0..9 {
                if let Some(h) = c.base().try_compose(f, g) {
                    assert_eq!(s.mul(f, g), h);
                }
            }
        }
    }

    #[test]
    fn split_arrows_in_group() {
        let c = FiniteCategory::from_monoid(&z2()).unwrap();
        assert_eq!(c.split_epis(), vec![(0, 0), (1, 1)]);
        assert_eq!(c.split_monos(), vec![(0, 0), (1, 1)]);
        assert!(c.is_iso(1));
    }

    #[test]
    fn identity_factorizes_trivially() {
        let c = indiscrete_wired(2);
        let id = c.base().identity(1);
        let fact = c.base().factorize_split(id).unwrap();
        assert_eq!(c.base().compose(fact.epi, fact.mono), id);
    }

    #[test]
    fn identity_and_terminal_functors() {
        let c = indiscrete_wired(2);
        let id = WiredFunctor::identity(&c);
        id.validate(&c, &c).unwrap();
        assert_eq!(s_on_functor(&id, &c, &c).unwrap(), vec![0, 1, 2, 3]);

        let one = indiscrete_wired(1);
        let to_one = WiredFunctor {
            obj_map: vec![0, 0],
            arr_map: vec![0; 4],
        };
        to_one.validate(&c, &one).unwrap();
        assert_eq!(s_on_functor(&to_one, &c, &one).unwrap(), vec![0; 4]);
    }

    #[test]
    fn functor_must_preserve_wires() {
        // arrow 1: 0 -> 1 is sent to an endomorphism
        let c = indiscrete_wired(2);
        let bad = WiredFunctor {
            obj_map: vec![0, 1],
            arr_map: vec![0, 0, 3, 3],
        };
        assert!(bad.validate(&c, &c).is_err());
    }
}
