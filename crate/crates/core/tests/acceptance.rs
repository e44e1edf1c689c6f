//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use wirecat::category::{indiscrete_wired, WiredCategory};
use wirecat::corpus::{corpus_up_to, fixtures, small_fixtures};
use wirecat::karoubi::{
    adjunction_bijection_check, counit, karoubi_envelope, splitfact_regular, SplitFactRegular,
};
use wirecat::semigroup::{subset_index, FiniteSemigroup};
use wirecat::semigroupad::{
    check_k_axioms, constant_class, enumerate_nat_families, induced_operation, lemma_suite,
    mu_from_star, validate_semigroupad, FinFunction, Implication, NePow, Semigroupad,
    TransferReport, Writer,
};
use wirecat::subset::Subset;
use wirecat::theta::theta_properties;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn fixture(name: &str) -> FiniteSemigroup {
    fixtures()[name].clone()
}

// Oracles straight from the definitions.

fn oracle_regular(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|x| s.elements().any(|y| s.mul(s.mul(x, y), x) == x))
}

fn oracle_enough(s: &FiniteSemigroup) -> bool {
    let idem: Vec<usize> = s.elements().filter(|&e| s.mul(e, e) == e).collect();
    s.elements().all(|x| {
        idem.iter()
            .any(|&e| idem.iter().any(|&f| s.mul(s.mul(e, x), f) == x))
    })
}

fn oracle_associative(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z)))))
}

fn oracle_power(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    let subsets: Vec<Vec<usize>> = (1..1usize << n)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    subsets
        .iter()
        .map(|a| {
            subsets
                .iter()
                .map(|b| {
                    let mut mask = 0usize;
                    for &x in a {
                        for &y in b {
                            mask |= 1 << s.mul(x, y);
                        }
                    }
                    mask - 1
                })
                .collect()
        })
        .collect()
}

fn oracle_product(s: &FiniteSemigroup, s0: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let m = s0.order();
    let size = s.order() * m;
    (0..size)
        .map(|p| {
            (0..size)
                .map(|q| s.mul(p / m, q / m) * m + s0.mul(p % m, q % m))
                .collect()
        })
        .collect()
}

fn oracle_hom_count(from: &FiniteSemigroup, to: &FiniteSemigroup) -> usize {
    let (n, m) = (from.order(), to.order());
    let mut count = 0;
    for code in 0..m.pow(n as u32) {
        let h: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        let hom = (0..n).all(|x| (0..n).all(|y| h[from.mul(x, y)] == to.mul(h[x], h[y])));
        count += hom as usize;
    }
    count
}

/// Closed-form Kleisli liftings, independent of `lift ; μ`.
fn writer_star(s0: &FiniteSemigroup) -> impl Fn(&FinFunction, usize) -> FinFunction + '_ {
    move |f, b| {
        let m = s0.order();
        FinFunction::from_fn(f.dom() * m, b * m, |p| {
            let v = f.apply(p / m);
            (v / m) * m + s0.mul(v % m, p % m)
        })
    }
}

fn magma_writer_star(
    order: usize,
    table: Vec<usize>,
) -> impl Fn(&FinFunction, usize) -> FinFunction {
    move |f, b| {
        FinFunction::from_fn(f.dom() * order, b * order, |p| {
            let v = f.apply(p / order);
            (v / order) * order + table[(v % order) * order + p % order]
        })
    }
}

fn nepow_star(f: &FinFunction, b: usize) -> FinFunction {
    FinFunction::from_fn((1 << f.dom()) - 1, (1 << b) - 1, |i| {
        let mut union = 0usize;
        for a in 0..f.dom() {
            if (i + 1) >> a & 1 == 1 {
                union |= f.apply(a) + 1;
            }
        }
        union - 1
    })
}

// Criteria.

fn regularity_theorem(corpus: &[FiniteSemigroup]) -> Outcome {
    let start = Instant::now();
    let mut regular = 0;
    for s in corpus {
        let k = karoubi_envelope(s).map_err(|e| e.to_string())?;
        let base = k.wired().base();
        let all_factor = (0..k.arrow_count()).all(|f| base.factorize_split(f).is_some());
        let reg = oracle_regular(s);
        regular += reg as usize;
        ensure(reg == (oracle_enough(s) && all_factor), || {
            format!("violated on {:?}", s.rows())
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} semigroups, {regular} regular, {secs:.2}s",
        corpus.len()
    ))
}

fn counit_criterion(corpus: &[FiniteSemigroup]) -> Outcome {
    let mut surjective = 0;
    for s in corpus {
        let k = karoubi_envelope(s).map_err(|e| e.to_string())?;
        let c = counit(&k).map_err(|e| format!("{:?}: {e}", s.rows()))?;
        surjective += c.surjective as usize;
        ensure(c.surjective == oracle_enough(s), || {
            format!("violated on {:?}", s.rows())
        })?;
    }
    Ok(format!(
        "{} semigroups, {surjective} surjective counits",
        corpus.len()
    ))
}

fn adjunction_criterion() -> Outcome {
    let mut sources: Vec<(String, WiredCategory)> = Vec::new();
    for (name, m) in fixtures() {
        if m.identity().is_some() {
            sources.push((
                name.to_string(),
                WiredCategory::one_object(&m).map_err(|e| e.to_string())?,
            ));
        }
    }
    sources.push(("indiscrete(2)".into(), indiscrete_wired(2)));
    let k_sl2 = karoubi_envelope(&fixture("SL2")).map_err(|e| e.to_string())?;
    sources.push(("K(SL2)".into(), k_sl2.wired().clone()));
    let mut pairs = 0;
    for (cname, c) in &sources {
        for (sname, s) in small_fixtures(3) {
            let r =
                adjunction_bijection_check(c, &s).map_err(|e| format!("{cname}, {sname}: {e}"))?;
            ensure(r.ok(), || format!("{cname}, {sname}: {}", r.violations[0]))?;
            let homs = oracle_hom_count(&c.to_semigroup(), &s);
            ensure(r.functors == homs, || {
                format!(
                    "{cname}, {sname}: {} functors, oracle {homs} homomorphisms",
                    r.functors
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (C, S) pairs"))
}

fn kleisli_criterion() -> Outcome {
    let z2 = fixture("Z2");
    let lz2 = fixture("LZ2");
    for s0 in [&z2, &lz2] {
        let w = Writer::new(s0);
        let k = check_k_axioms(&w, 3);
        ensure(k.ok(), || format!("{}: {:?}", w.name(), k.k3.failures))?;
        let laws = validate_semigroupad(&w, 3);
        ensure(laws.ok(), || format!("{}: {:?}", w.name(), laws.failures))?;
        let rt = mu_from_star(&w, writer_star(s0), 3);
        ensure(rt.ok(), || format!("{} roundtrip", w.name()))?;
    }
    let k = check_k_axioms(&NePow, 3);
    ensure(k.ok(), || format!("nepow: {:?}", k.k3.failures))?;
    let laws = validate_semigroupad(&NePow, 2);
    ensure(laws.ok(), || format!("nepow laws: {:?}", laws.failures))?;
    let rt = mu_from_star(&NePow, nepow_star, 3);
    ensure(rt.ok(), || "nepow roundtrip".into())?;

    let table = vec![1, 1, 0, 0];
    let magma = Writer::over_magma(2, table.clone());
    let k = check_k_axioms(&magma, 2);
    ensure(k.k1.ok() && k.k2.ok() && !k.k3.ok(), || {
        "magma writer k-axioms".into()
    })?;
    let rt = mu_from_star(&magma, magma_writer_star(2, table), 2);
    ensure(rt.ok(), || "magma writer roundtrip".into())?;
    Ok("writer(Z2), writer(LZ2), nepow; non-associative μ roundtrips".into())
}

fn induced_criterion() -> Outcome {
    let small = small_fixtures(3);
    let mut count = 0;
    for (sname, s) in &small {
        let induced = induced_operation(&NePow, s).map_err(|e| e.to_string())?;
        ensure(induced.rows() == oracle_power(s), || {
            format!("nepow on {sname}")
        })?;
        ensure(oracle_associative(&induced), || {
            format!("nepow on {sname} not associative")
        })?;
        count += 1;
        for (s0name, s0) in &small {
            let induced = induced_operation(&Writer::new(s0), s).map_err(|e| e.to_string())?;
            ensure(induced.rows() == oracle_product(s, s0), || {
                format!("writer({s0name}) on {sname}")
            })?;
            ensure(oracle_associative(&induced), || {
                format!("writer({s0name}) on {sname}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} (T, S) pairs"))
}

fn lemma_criterion(corpus: &[FiniteSemigroup]) -> Outcome {
    let mut checked = 0;
    let writers: Vec<(&str, Writer)> = small_fixtures(3)
        .into_iter()
        .map(|(n, s)| (n, Writer::new(&s)))
        .collect();
    for s in corpus {
        let r = lemma_suite(&NePow, s).map_err(|e| e.to_string())?;
        ensure(r.ok(), || format!("nepow on {:?}: {r:?}", s.rows()))?;
        checked += r.checked;
        for (name, w) in &writers {
            let r = lemma_suite(w, s).map_err(|e| e.to_string())?;
            ensure(r.ok(), || {
                format!("writer({name}) on {:?}: {r:?}", s.rows())
            })?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} instances"))
}

fn transfer_all<T: Semigroupad>(
    t: &T,
    corpus: &[FiniteSemigroup],
) -> Result<(usize, usize), String> {
    let families = enumerate_nat_families(t, 3).map_err(|e| e.to_string())?;
    let mut cases = 0;
    for xi in &families {
        let class = constant_class(t, xi, 3);
        ensure(class.agree(), || format!("{}: {class:?}", t.name()))?;
        ensure(class.note_holds, || format!("{}: note fails", t.name()))?;
        for s in corpus {
            let induced = induced_operation(t, s).map_err(|e| e.to_string())?;
            let comp = xi.component(t, s.order());
            for e in s.elements() {
                let r = TransferReport::evaluate(class.mu_form, &induced, s, e, comp.apply(e));
                ensure(r.ok(), || {
                    format!("{} on {:?}, e = {e}: {r:?}", t.name(), s.rows())
                })?;
                cases += 1;
            }
        }
    }
    Ok((families.len(), cases))
}

fn constants_criterion(corpus: &[FiniteSemigroup]) -> Outcome {
    let (fams, mut cases) = transfer_all(&NePow, corpus)?;
    ensure(fams == 1, || format!("nepow has {fams} families"))?;
    let fam = &enumerate_nat_families(&NePow, 3).map_err(|e| e.to_string())?[0];
    ensure(fam.component(&NePow, 3).table() == [0, 1, 3], || {
        "nepow family is not {a}".into()
    })?;
    let mut families = fams;
    for (name, s0) in small_fixtures(3) {
        let w = Writer::new(&s0);
        let (n, c) = transfer_all(&w, corpus)?;
        ensure(n == s0.order(), || {
            format!("writer({name}) has {n} families")
        })?;
        // the flags of ξ = (·, c) are those of c in S0
        for xi in enumerate_nat_families(&w, 3).map_err(|e| e.to_string())? {
            let c0 = xi.components()[1].apply(0);
            let f = constant_class(&w, &xi, 3).mu_form;
            let left = s0.elements().all(|x| s0.mul(c0, x) == x);
            let right = s0.elements().all(|x| s0.mul(x, c0) == x);
            let central = s0.elements().all(|x| s0.mul(x, c0) == s0.mul(c0, x));
            let idem = s0.mul(c0, c0) == c0;
            ensure(
                (f.left, f.right, f.central, f.idempotent) == (left, right, central, idem),
                || format!("writer({name}), c = {c0}: {f}"),
            )?;
        }
        families += n;
        cases += c;
    }
    // {0} is a two-sided identity of the power semigroup of Z3
    let z3 = fixture("Z3");
    let r = TransferReport::evaluate(
        constant_class(&NePow, fam, 3).mu_form,
        &induced_operation(&NePow, &z3).map_err(|e| e.to_string())?,
        &z3,
        0,
        subset_index(Subset::singleton(0)),
    );
    ensure(r.items() == [Implication::Holds; 4], || format!("{r:?}"))?;
    Ok(format!("{families} families, {cases} transfer cases"))
}

fn theta_criterion(corpus: &[FiniteSemigroup]) -> Outcome {
    let mut nontransitive = 0;
    for s in corpus {
        let k = karoubi_envelope(s).map_err(|e| e.to_string())?;
        let r = theta_properties(k.wired());
        ensure(r.reflexive && r.symmetric, || format!("{:?}", s.rows()))?;
        ensure(r.parallel_is_equality, || {
            format!("parallel on {:?}", s.rows())
        })?;
        nontransitive += !r.transitivity_counterexamples.is_empty() as usize;
    }
    Ok(format!(
        "{} envelopes; transitivity fails on {nontransitive} (informational)",
        corpus.len()
    ))
}

fn splitfact_criterion(corpus: &[FiniteSemigroup]) -> Outcome {
    let mut cats: Vec<WiredCategory> = corpus
        .iter()
        .map(|s| karoubi_envelope(s).map(|k| k.wired().clone()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    cats.extend((1..=3).map(indiscrete_wired));
    for (_, m) in fixtures() {
        if m.identity().is_some() {
            cats.push(WiredCategory::one_object(&m).map_err(|e| e.to_string())?);
        }
    }
    let mut applicable = 0;
    for c in &cats {
        let base = c.base();
        let all_split = (0..c.arrow_count()).all(|f| base.factorize_split(f).is_some());
        match splitfact_regular(c) {
            SplitFactRegular::Regular { pseudoinverse } => {
                ensure(all_split, || "reported regular without hypothesis".into())?;
                let s = c.to_semigroup();
                for (x, &y) in pseudoinverse.iter().enumerate() {
                    ensure(s.mul(s.mul(x, y), x) == x, || format!("x = {x}, y = {y}"))?;
                }
                ensure(oracle_regular(&s), || "oracle disagrees".into())?;
                applicable += 1;
            }
            SplitFactRegular::HypothesisFails { .. } => {
                ensure(!all_split, || "hypothesis misreported".into())?
            }
            SplitFactRegular::Violation { arrow, y } => {
                return Err(format!("arrow {arrow}, y = {y}"));
            }
        }
    }
    Ok(format!(
        "{} categories, {applicable} with every arrow split",
        cats.len()
    ))
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run_cli(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wirecat"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn golden(args: &[&str], path: &Path) -> Result<(), String> {
    let (out, code) = run_cli(args)?;
    ensure(code == 0, || format!("{args:?} exited {code}"))?;
    let want =
        std::fs::read(manifest_dir().join(path)).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure(out == want, || format!("{} differs", path.display()))
}

fn determinism_criterion() -> Outcome {
    let (first, code) = run_cli(&["verify", "--suite", "all", "--max-order", "3"])?;
    ensure(code == 0, || format!("verify exited {code}"))?;
    let (second, _) = run_cli(&["verify", "--suite", "all", "--max-order", "3"])?;
    ensure(first == second, || "two verify runs differ".into())?;
    let mut goldens = 0;
    for name in fixtures().keys() {
        let file = format!("tests/fixtures/{name}.txt");
        golden(
            &["analyze", &file],
            Path::new(&format!("tests/golden/analyze/{name}.txt")),
        )?;
        golden(
            &["karoubi", &file],
            Path::new(&format!("tests/golden/karoubi/{name}.txt")),
        )?;
        golden(
            &["induced", "--functor", "nepow", "--semigroup", &file],
            Path::new(&format!("tests/golden/induced/nepow_{name}.txt")),
        )?;
        golden(
            &[
                "induced",
                "--functor",
                "writer:tests/fixtures/Z2.txt",
                "--semigroup",
                &file,
            ],
            Path::new(&format!("tests/golden/induced/writer_Z2_{name}.txt")),
        )?;
        goldens += 4;
    }
    Ok(format!(
        "verify output byte-identical, {goldens} golden files match"
    ))
}

fn main() -> ExitCode {
    let corpus = corpus_up_to(3).expect("corpus");
    let criteria: Vec<Criterion> = vec![
        (
            "regularity theorem over order ≤ 3",
            Box::new(|| regularity_theorem(&corpus)),
        ),
        (
            "counit surjective iff enough idempotents",
            Box::new(|| counit_criterion(&corpus)),
        ),
        ("adjunction bijection", Box::new(adjunction_criterion)),
        (
            "Kleisli axioms and μ/lifting correspondence",
            Box::new(kleisli_criterion),
        ),
        (
            "induced semigroups match oracles",
            Box::new(induced_criterion),
        ),
        (
            "bar/tilde commutation and tilde-dot lemmas",
            Box::new(|| lemma_criterion(&corpus)),
        ),
        (
            "constants: classifications, note, transfer",
            Box::new(|| constants_criterion(&corpus)),
        ),
        (
            "Θ reflexive, symmetric, equality on parallels",
            Box::new(|| theta_criterion(&corpus)),
        ),
        (
            "split factorization implies regularity",
            Box::new(|| splitfact_criterion(&corpus)),
        ),
        (
            "determinism and golden files",
            Box::new(determinism_criterion),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
