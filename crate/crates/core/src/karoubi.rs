//! Karoubi envelopes as wired categories, and the adjunction between the
//! arrow-semigroup construction and the envelope.

use std::collections::HashMap;
use std::fmt;

use crate::category::{
    validate_category, validate_wired, Arrow, RawCategory, WiredCategory, WiredFunctor,
    DEFAULT_MAX_ARROWS,
};
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Arrow `(e, x, f): e → f` of the envelope, with `e`, `f` idempotent and
/// `e·x·f = x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KaroubiTriple {
    pub e: usize,
    pub x: usize,
    pub f: usize,
}

impl KaroubiTriple {
    pub fn new(e: usize, x: usize, f: usize) -> Self {
        KaroubiTriple { e, x, f }
    }

    pub fn is_valid(&self, s: &FiniteSemigroup) -> bool {
        s.is_idempotent(self.e)
            && s.is_idempotent(self.f)
            && s.mul3(self.e, self.x, self.f) == self.x
    }

    pub fn identity(e: usize) -> Self {
        KaroubiTriple { e, x: e, f: e }
    }
}

impl fmt::Display for KaroubiTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.e, self.x, self.f)
    }
}

/// `(e, x, f) ; (f, y, g) = (e, x·y, g)`; `None` unless the middle objects agree.
pub fn compose_triples(
    s: &FiniteSemigroup,
    p: KaroubiTriple,
    q: KaroubiTriple,
) -> Option<KaroubiTriple> {
    (p.f == q.e).then(|| KaroubiTriple::new(p.e, s.mul(p.x, q.x), q.f))
}

#[derive(Clone, Debug)]
pub struct KaroubiEnvelope {
    source: FiniteSemigroup,
    /// Object `i` is the idempotent `idempotents[i]`.
    idempotents: Vec<usize>,
    /// Arrows in lexicographic `(e, x, f)` order.
    triples: Vec<KaroubiTriple>,
    index: HashMap<KaroubiTriple, usize>,
    wired: WiredCategory,
}

pub fn karoubi_envelope(s: &FiniteSemigroup) -> Result<KaroubiEnvelope> {
    KaroubiEnvelope::with_arrow_bound(s, DEFAULT_MAX_ARROWS)
}

impl KaroubiEnvelope {
    pub fn with_arrow_bound(s: &FiniteSemigroup, max_arrows: usize) -> Result<Self> {
        let idempotents = s.idempotents();
        let mut triples = Vec::new();
        for &e in &idempotents {
            for x in s.elements() {
                for &f in &idempotents {
                    if s.mul3(e, x, f) == x {
                        // e·x = x and x·f = x follow from idempotency
                        debug_assert!(s.mul(e, x) == x && s.mul(x, f) == x);
                        triples.push(KaroubiTriple::new(e, x, f));
                    }
                }
            }
        }
        if triples.len() > max_arrows {
            return Err(Error::SizeBound {
                what: "Karoubi envelope arrows",
                size: triples.len(),
                limit: max_arrows,
            });
        }
        let index: HashMap<_, _> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let object_of: HashMap<usize, usize> = idempotents
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect();

        let arrows = triples
            .iter()
            .map(|t| Arrow {
                dom: object_of[&t.e],
                cod: object_of[&t.f],
            })
            .collect();
        let identity = idempotents
            .iter()
            .map(|&e| index[&KaroubiTriple::identity(e)])
            .collect();
        let comp = triples
            .iter()
            .map(|&p| {
                triples
                    .iter()
                    .map(|&q| compose_triples(s, p, q).map(|r| index[&r]))
                    .collect()
            })
            .collect();
        let base = validate_category(RawCategory {
            objects: idempotents.len(),
            arrows,
            identity,
            comp,
        })?;
        let wire = idempotents
            .iter()
            .map(|&e| {
                idempotents
                    .iter()
                    .map(|&f| index[&KaroubiTriple::new(e, s.mul(e, f), f)])
                    .collect()
            })
            .collect();
        let wired = validate_wired(base, wire)?;
        Ok(KaroubiEnvelope {
            source: s.clone(),
            idempotents,
            triples,
            index,
            wired,
        })
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    pub fn wired(&self) -> &WiredCategory {
        &self.wired
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn triples(&self) -> &[KaroubiTriple] {
        &self.triples
    }

    pub fn triple(&self, arrow: usize) -> KaroubiTriple {
        self.triples[arrow]
    }

    pub fn arrow_of(&self, t: KaroubiTriple) -> Option<usize> {
        self.index.get(&t).copied()
    }

    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.idempotents.iter().position(|&i| i == e)
    }

    pub fn object_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.triples.len()
    }

    /// Checks `(e,x,f) □ (g,y,h) = (e, x·g·y, h)` against the generic wire
    /// composition; returns the first mismatching pair.
    pub fn check_box_formula(&self) -> Option<(usize, usize)> {
        let s = &self.source;
        for (i, p) in self.triples.iter().enumerate() {
            for (j, q) in self.triples.iter().enumerate() {
                let expect = KaroubiTriple::new(p.e, s.mul3(p.x, q.e, q.x), q.f);
                if self.arrow_of(expect) != Some(self.wired.box_product(i, j)) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// The counit at `S`: `(e, x, f) ↦ x` from the arrow semigroup of `K(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counit {
    pub map: Vec<usize>,
    pub image: Vec<usize>,
    pub surjective: bool,
}

pub fn counit(k: &KaroubiEnvelope) -> Result<Counit> {
    let s = k.source();
    let map: Vec<usize> = k.triples().iter().map(|t| t.x).collect();
    let arrows = k.wired().to_semigroup();
    if let Some((f, g)) = arrows.is_homomorphism(&map, s) {
        return Err(Error::NotHomomorphism(f, g));
    }
    // composition goes to the product too
    let base = k.wired().base();
    for f in 0..base.arrow_count() {
        for g in base.arrows_from(base.cod(f)) {
            if map[base.compose(f, g)] != s.mul(map[f], map[g]) {
                return Err(Error::NotHomomorphism(f, g));
            }
        }
    }
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    Ok(Counit {
        surjective: image.len() == s.order(),
        map,
        image,
    })
}

/// The unit at `C`: a wired functor `C → K(S(C))` sending `a ↦ 1_a` and
/// `φ: a → b ↦ (1_a, φ, 1_b)`.
#[derive(Clone, Debug)]
pub struct Unit {
    pub target: KaroubiEnvelope,
    pub functor: WiredFunctor,
}

pub fn unit(c: &WiredCategory) -> Result<Unit> {
    unit_bounded(c, DEFAULT_MAX_ARROWS)
}

pub fn unit_bounded(c: &WiredCategory, max_arrows: usize) -> Result<Unit> {
    let s = c.to_semigroup();
    let target = KaroubiEnvelope::with_arrow_bound(&s, max_arrows)?;
    let base = c.base();
    let obj_map = (0..c.objects())
        .map(|a| {
            target
                .object_of(base.identity(a))
                .ok_or_else(|| Error::NotFunctor(format!("identity at {a} is not idempotent")))
        })
        .collect::<Result<Vec<_>>>()?;
    let arr_map = (0..c.arrow_count())
        .map(|f| {
            let t = KaroubiTriple::new(base.identity(base.dom(f)), f, base.identity(base.cod(f)));
            target.arrow_of(t).ok_or(Error::NotTriple {
                e: t.e,
                x: t.x,
                f: t.f,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = WiredFunctor { obj_map, arr_map };
    functor.validate(c, target.wired())?;
    Ok(Unit { target, functor })
}

/// Both triangle composites are identities: `counit(unit(φ)) = φ` on the
/// arrows of `C`, and `K(counit)(unit(t)) = t` on the arrows of `K(S)`.
pub fn triangle_identities(c: &WiredCategory, k: &KaroubiEnvelope) -> bool {
    let base = c.base();
    let first = (0..c.arrow_count()).all(|f| {
        let t = KaroubiTriple::new(base.identity(base.dom(f)), f, base.identity(base.cod(f)));
        t.x == f
    });
    let kb = k.wired().base();
    let second = (0..k.arrow_count()).all(|i| {
        let (a, b) = (kb.dom(i), kb.cod(i));
        let unit_triple = (kb.identity(a), i, kb.identity(b));
        let mapped = KaroubiTriple::new(
            k.triple(unit_triple.0).x,
            k.triple(unit_triple.1).x,
            k.triple(unit_triple.2).x,
        );
        mapped == k.triple(i)
    });
    first && second
}

/// Enumeration bounds for [`adjunction_bijection_check`].
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBounds {
    pub max_arrows: usize,
    pub max_order: usize,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            max_arrows: 6,
            max_order: 3,
        }
    }
}

/// All wired functors `C → K(S)`.
pub fn wired_functors_into(c: &WiredCategory, k: &KaroubiEnvelope) -> Vec<WiredFunctor> {
    let base = c.base();
    let kb = k.wired().base();
    let m = c.objects();
    let objs = k.object_count();
    let mut out = Vec::new();
    let mut obj_map = vec![0; m];
    loop {
        let choices: Vec<Vec<usize>> = (0..c.arrow_count())
            .map(|f| {
                let Arrow { dom, cod } = base.arrow(f);
                if base.is_identity(f) {
                    vec![kb.identity(obj_map[dom])]
                } else {
                    kb.hom(obj_map[dom], obj_map[cod]).collect()
                }
            })
            .collect();
        for arr_map in cartesian(&choices) {
            let candidate = WiredFunctor {
                obj_map: obj_map.clone(),
                arr_map,
            };
            if candidate.validate(c, k.wired()).is_ok() {
                out.push(candidate);
            }
        }
        if !odometer(&mut obj_map, objs) {
            break;
        }
    }
    out
}

/// All semigroup homomorphisms `from → to`, as element maps.
pub fn homomorphisms(from: &FiniteSemigroup, to: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let mut map = vec![0; from.order()];
    let mut out = Vec::new();
    loop {
        if from.is_homomorphism(&map, to).is_none() {
            out.push(map.clone());
        }
        if !odometer(&mut map, to.order()) {
            break;
        }
    }
    out
}

/// Advances a little-endian counter in base `radix`; false once it wraps.
fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    choices.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect()
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub functors: usize,
    pub homomorphisms: usize,
    pub violations: Vec<String>,
}

impl AdjunctionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `F ↦ (φ ↦ middle of F(φ))`.
pub fn functor_to_homomorphism(k: &KaroubiEnvelope, f: &WiredFunctor) -> Vec<usize> {
    f.arr_map.iter().map(|&a| k.triple(a).x).collect()
}

/// `h ↦ (a ↦ h(1_a), φ: a → b ↦ (h(1_a), h(φ), h(1_b)))`.
pub fn homomorphism_to_functor(
    c: &WiredCategory,
    k: &KaroubiEnvelope,
    h: &[usize],
) -> Result<WiredFunctor> {
    let base = c.base();
    let obj_map = (0..c.objects())
        .map(|a| {
            let e = h[base.identity(a)];
            k.object_of(e)
                .ok_or_else(|| Error::NotFunctor(format!("h(1_{a}) = {e} is not idempotent")))
        })
        .collect::<Result<Vec<_>>>()?;
    let arr_map = (0..c.arrow_count())
        .map(|f| {
            let Arrow { dom, cod } = base.arrow(f);
            let t = KaroubiTriple::new(h[base.identity(dom)], h[f], h[base.identity(cod)]);
            k.arrow_of(t).ok_or(Error::NotTriple {
                e: t.e,
                x: t.x,
                f: t.f,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WiredFunctor { obj_map, arr_map })
}

/// Enumerates wired functors `C → K(S)` and homomorphisms `S(C) → S` and
/// checks that the two translations are mutually inverse bijections.
pub fn adjunction_bijection_check(
    c: &WiredCategory,
    s: &FiniteSemigroup,
) -> Result<AdjunctionReport> {
    adjunction_bijection_check_bounded(c, s, EnumerationBounds::default())
}

pub fn adjunction_bijection_check_bounded(
    c: &WiredCategory,
    s: &FiniteSemigroup,
    bounds: EnumerationBounds,
) -> Result<AdjunctionReport> {
    if c.arrow_count() > bounds.max_arrows {
        return Err(Error::SizeBound {
            what: "arrows of the enumerated wired category",
            size: c.arrow_count(),
            limit: bounds.max_arrows,
        });
    }
    if s.order() > bounds.max_order {
        return Err(Error::SizeBound {
            what: "order of the enumerated semigroup",
            size: s.order(),
            limit: bounds.max_order,
        });
    }
    let k = karoubi_envelope(s)?;
    let arrows = c.to_semigroup();
    let functors = wired_functors_into(c, &k);
    let homs = homomorphisms(&arrows, s);
    let mut report = AdjunctionReport {
        functors: functors.len(),
        homomorphisms: homs.len(),
        violations: Vec::new(),
    };
    for f in &functors {
        let h = functor_to_homomorphism(&k, f);
        if arrows.is_homomorphism(&h, s).is_some() {
            report.violations.push(format!(
                "functor {:?} gives non-homomorphism {h:?}",
                f.arr_map
            ));
            continue;
        }
        match homomorphism_to_functor(c, &k, &h) {
            Ok(back) if &back == f => {}
            Ok(back) => report.violations.push(format!(
                "functor {:?} returns as {:?}",
                f.arr_map, back.arr_map
            )),
            Err(e) => report
                .violations
                .push(format!("functor {:?}: {e}", f.arr_map)),
        }
    }
    for h in &homs {
        match homomorphism_to_functor(c, &k, h) {
            Ok(f) => {
                if let Err(e) = f.validate(c, k.wired()) {
                    report.violations.push(format!("homomorphism {h:?}: {e}"));
                } else if &functor_to_homomorphism(&k, &f) != h {
                    report
                        .violations
                        .push(format!("homomorphism {h:?} does not return"));
                }
            }
            Err(e) => report.violations.push(format!("homomorphism {h:?}: {e}")),
        }
    }
    if functors.len() != homs.len() {
        report.violations.push(format!(
            "{} functors but {} homomorphisms",
            functors.len(),
            homs.len()
        ));
    }
    Ok(report)
}

/// Split factorization of `(e, x, f)` through the object `y·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegularFactorization {
    pub epi: KaroubiTriple,
    pub mono: KaroubiTriple,
    pub epi_inverse: KaroubiTriple,
    pub mono_inverse: KaroubiTriple,
}

/// For a pseudoinverse `y` of `t.x`:
/// `ε = (e, x, yx)`, `μ = (yx, yx, f)`, `ε′ = (yx, yxye, e)`, `μ′ = (f, fyx, yx)`.
pub fn regular_factorization(
    s: &FiniteSemigroup,
    t: KaroubiTriple,
    y: usize,
) -> Result<RegularFactorization> {
    let KaroubiTriple { e, x, f } = t;
    if s.mul3(x, y, x) != x {
        return Err(Error::NotPseudoinverse { x, y });
    }
    if !t.is_valid(s) {
        return Err(Error::NotTriple { e, x, f });
    }
    let yx = s.mul(y, x);
    Ok(RegularFactorization {
        epi: KaroubiTriple::new(e, x, yx),
        mono: KaroubiTriple::new(yx, yx, f),
        epi_inverse: KaroubiTriple::new(yx, s.mul3(yx, y, e), e),
        mono_inverse: KaroubiTriple::new(f, s.mul(f, yx), yx),
    })
}

impl RegularFactorization {
    /// Every failed requirement, empty when the factorization is sound.
    pub fn failures(&self, s: &FiniteSemigroup, t: KaroubiTriple) -> Vec<&'static str> {
        let mut out = Vec::new();
        let parts = [self.epi, self.mono, self.epi_inverse, self.mono_inverse];
        if !parts.iter().all(|p| p.is_valid(s)) {
            out.push("component is not a Karoubi triple");
            return out;
        }
        let middle = KaroubiTriple::identity(self.epi.f);
        if compose_triples(s, self.epi, self.mono) != Some(t) {
            out.push("epi ; mono != t");
        }
        if compose_triples(s, self.epi_inverse, self.epi) != Some(middle) {
            out.push("epi_inverse ; epi != identity");
        }
        if compose_triples(s, self.mono, self.mono_inverse) != Some(middle) {
            out.push("mono ; mono_inverse != identity");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityTheoremReport {
    pub regular: bool,
    pub enough_idempotents: bool,
    pub all_arrows_factor: bool,
    /// First arrow of `K(S)` without a split factorization.
    pub unfactored: Option<KaroubiTriple>,
}

impl RegularityTheoremReport {
    /// regular ⟺ enough idempotents ∧ every arrow factors
    pub fn holds(&self) -> bool {
        self.regular == (self.enough_idempotents && self.all_arrows_factor)
    }
}

pub fn theorem_regular_iff_factorization(s: &FiniteSemigroup) -> Result<RegularityTheoremReport> {
    let k = karoubi_envelope(s)?;
    let base = k.wired().base();
    let unfactored = (0..k.arrow_count())
        .find(|&f| base.factorize_split(f).is_none())
        .map(|f| k.triple(f));
    Ok(RegularityTheoremReport {
        regular: s.is_regular(),
        enough_idempotents: s.has_enough_idempotents(),
        all_arrows_factor: unfactored.is_none(),
        unfactored,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitFactRegular {
    /// Some arrow has no split factorization.
    HypothesisFails { arrow: usize },
    /// Every arrow `x = ε;μ` satisfies `x □ y □ x = x` with `y = μ′;ε′`.
    Regular { pseudoinverse: Vec<usize> },
    /// The constructed `y` failed for this arrow.
    Violation { arrow: usize, y: usize },
}

/// If every arrow of `C` split-factorizes, the arrow semigroup is regular
/// with the constructive pseudoinverse `μ′ ; ε′`.
pub fn splitfact_regular(c: &WiredCategory) -> SplitFactRegular {
    let base = c.base();
    let mut witnesses = Vec::with_capacity(c.arrow_count());
    for x in 0..c.arrow_count() {
        match base.factorize_split(x) {
            Some(fact) => witnesses.push(base.compose(fact.mono_inverse, fact.epi_inverse)),
            None => return SplitFactRegular::HypothesisFails { arrow: x },
        }
    }
    let s = c.to_semigroup();
    for (x, &y) in witnesses.iter().enumerate() {
        if s.mul3(x, y, x) != x {
            return SplitFactRegular::Violation { arrow: x, y };
        }
    }
    SplitFactRegular::Regular {
        pseudoinverse: witnesses,
    }
}
