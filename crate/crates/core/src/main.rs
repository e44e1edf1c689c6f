use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wirecat::category::DEFAULT_MAX_ARROWS;
use wirecat::cayley::{format_cayley, format_corpus, parse_cayley};
use wirecat::corpus::enumerate_semigroups;
use wirecat::export::WiredCategoryDoc;
use wirecat::karoubi::{regular_factorization, KaroubiEnvelope};
use wirecat::lax::support_lax_morphism;
use wirecat::semigroup::{EnoughIdempotents, FiniteSemigroup, Regularity};
use wirecat::semigroupad::{
    constant_class, enumerate_nat_families, induced_operation, Implication, InducedContext, NePow,
    Semigroupad, TransferReport, Writer,
};
use wirecat::subset::Subset;
use wirecat::theta::theta_properties;
use wirecat::verify::{run_suite, Suite, VerifyOptions};

const ARROW_ENV: &str = "WIRECAT_MAX_ARROWS";

#[derive(Parser)]
#[command(
    name = "wirecat",
    version,
    about = "Finite semigroups, Karoubi envelopes and semigroupads"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Idempotents, regularity, enough idempotents and the support map.
    Analyze { file: PathBuf },
    /// Builds the Karoubi envelope and optionally writes it as JSON.
    Karoubi {
        file: PathBuf,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// The relation Θ on the arrows of the Karoubi envelope.
    Theta { file: PathBuf },
    /// Split epi / split mono factorization of every Karoubi arrow.
    Factorize { file: PathBuf },
    /// Induced semigroup on T S, printed as a Cayley table.
    Induced {
        /// `nepow` or `writer:<cayley-file>`.
        #[arg(long)]
        functor: String,
        #[arg(long)]
        semigroup: PathBuf,
    },
    /// Natural families ξ, their constant flags and, given S, the transfer
    /// to T S.
    Constants {
        #[arg(long)]
        functor: String,
        #[arg(long)]
        semigroup: Option<PathBuf>,
    },
    /// All labeled semigroups of an order, as a `---`-separated corpus.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Print only the number of tables.
        #[arg(long)]
        count: bool,
    },
    /// Runs a verification suite over the corpus.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
}

/// Input and bound errors; reported with exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn read_semigroup(path: &Path) -> CliResult<FiniteSemigroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_cayley(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn max_arrows() -> CliResult<usize> {
    match std::env::var(ARROW_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            InputError(format!(
                "{ARROW_ENV} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ARROWS),
    }
}

fn envelope(path: &Path) -> CliResult<KaroubiEnvelope> {
    let s = read_semigroup(path)?;
    Ok(KaroubiEnvelope::with_arrow_bound(&s, max_arrows()?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn plural(n: usize, word: &str) -> String {
    format!("{n} {word}{}", if n == 1 { "" } else { "s" })
}

fn analyze(path: &Path) -> CliResult<String> {
    let s = read_semigroup(path)?;
    let mut out = String::new();
    writeln!(out, "order: {}", s.order())?;
    let idem: Subset = s.idempotents().into_iter().collect();
    writeln!(out, "idempotents: {idem}")?;
    match s.regularity() {
        Regularity::Regular { .. } => writeln!(out, "regular: yes")?,
        Regularity::Irregular { element } => {
            writeln!(out, "regular: no (element {element} has no pseudoinverse)")?
        }
    }
    match s.enough_idempotents() {
        EnoughIdempotents::Enough { .. } => writeln!(out, "enough idempotents: yes")?,
        EnoughIdempotents::Lacking { element } => writeln!(
            out,
            "enough idempotents: no (element {element} has no support)"
        )?,
    }
    match s.identity() {
        Some(e) => writeln!(out, "identity: {e}")?,
        None => writeln!(out, "identity: none")?,
    }
    writeln!(out, "support lax morphism:")?;
    for (x, pair) in support_lax_morphism(&s).iter().enumerate() {
        writeln!(out, "  {x} -> {pair}")?;
    }
    Ok(out)
}

fn karoubi(path: &Path, export: Option<&Path>) -> CliResult<String> {
    let k = envelope(path)?;
    let mut out = String::new();
    writeln!(
        out,
        "K(S): {}, {}",
        plural(k.object_count(), "object"),
        plural(k.arrow_count(), "arrow")
    )?;
    let objects: Vec<String> = k.idempotents().iter().map(|e| e.to_string()).collect();
    writeln!(out, "objects (idempotents): {}", objects.join(" "))?;
    writeln!(out, "arrows:")?;
    let base = k.wired().base();
    for (i, t) in k.triples().iter().enumerate() {
        writeln!(out, "  {i}: {t} : {} -> {}", base.dom(i), base.cod(i))?;
    }
    writeln!(out, "wires:")?;
    for (a, row) in k.wired().wire_grid().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|w| w.to_string()).collect();
        writeln!(out, "  {a}: {}", cells.join(" "))?;
    }
    if let Some(dest) = export {
        let labels = k.triples().iter().map(|t| t.to_string()).collect();
        let doc = WiredCategoryDoc::from_wired(k.wired()).with_labels(objects, labels);
        std::fs::write(dest, doc.to_json())
            .map_err(|e| InputError(format!("{}: {e}", dest.display())))?;
    }
    Ok(out)
}

fn theta(path: &Path) -> CliResult<String> {
    let k = envelope(path)?;
    let r = theta_properties(k.wired());
    let rel = wirecat::theta::theta(k.wired());
    let mut out = String::new();
    writeln!(out, "arrows: {}", r.arrows)?;
    writeln!(out, "related pairs: {}", r.related_pairs)?;
    writeln!(out, "reflexive: {}", yes_no(r.reflexive))?;
    writeln!(out, "symmetric: {}", yes_no(r.symmetric))?;
    writeln!(
        out,
        "parallel arrows related only when equal: {}",
        yes_no(r.parallel_is_equality)
    )?;
    writeln!(
        out,
        "agrees with four-equation form: {}",
        yes_no(r.matches_equations)
    )?;
    match r.transitivity_counterexamples.first() {
        Some(&(a, b, c)) => writeln!(
            out,
            "transitive: no ({} counterexamples, first {} ~ {} ~ {})",
            r.transitivity_counterexamples.len(),
            k.triple(a),
            k.triple(b),
            k.triple(c)
        )?,
        None => writeln!(out, "transitive: yes")?,
    }
    writeln!(out, "pairs:")?;
    for (i, j) in rel.pairs().filter(|(i, j)| i < j) {
        writeln!(out, "  {} ~ {}", k.triple(i), k.triple(j))?;
    }
    Ok(out)
}

fn factorize(path: &Path) -> CliResult<String> {
    let k = envelope(path)?;
    let s = k.source();
    let base = k.wired().base();
    let mut out = String::new();
    writeln!(out, "regular: {}", yes_no(s.is_regular()))?;
    for (i, &t) in k.triples().iter().enumerate() {
        if let Some(&y) = s.pseudoinverses(t.x).first() {
            let f = regular_factorization(s, t, y)?;
            writeln!(
                out,
                "{t} = {} ; {}  (y = {y}, epi' = {}, mono' = {})",
                f.epi, f.mono, f.epi_inverse, f.mono_inverse
            )?;
        } else if let Some(f) = base.factorize_split(i) {
            writeln!(
                out,
                "{t} = {} ; {}  (epi' = {}, mono' = {})",
                k.triple(f.epi),
                k.triple(f.mono),
                k.triple(f.epi_inverse),
                k.triple(f.mono_inverse)
            )?;
        } else {
            writeln!(out, "{t}: no split factorization")?;
        }
    }
    Ok(out)
}

fn functor(arg: &str) -> CliResult<Box<dyn Semigroupad + Sync>> {
    if arg == "nepow" {
        return Ok(Box::new(NePow));
    }
    match arg.strip_prefix("writer:") {
        Some(file) => {
            let s0 = read_semigroup(Path::new(file))?;
            Ok(Box::new(Writer::new(&s0)))
        }
        None => Err(InputError(format!(
            "unknown functor {arg:?}; expected nepow or writer:<cayley-file>"
        ))),
    }
}

fn induced(functor_arg: &str, path: &Path) -> CliResult<String> {
    let t = functor(functor_arg)?;
    let s = read_semigroup(path)?;
    Ok(format_cayley(&induced_operation(t.as_ref(), &s)?))
}

fn constants(functor_arg: &str, semigroup: Option<&Path>) -> CliResult<String> {
    let t = functor(functor_arg)?;
    let t = t.as_ref();
    let families = enumerate_nat_families(t, 3)?;
    let mut out = String::new();
    writeln!(
        out,
        "{}: {}",
        t.name(),
        plural(families.len(), "natural family")
    )?;
    let classes: Vec<_> = families.iter().map(|xi| constant_class(t, xi, 3)).collect();
    for (xi, c) in families.iter().zip(&classes) {
        writeln!(
            out,
            "ξ_1(0) = {}: {}; star form {}; ξ;Tξ = ξ;ξT {}",
            xi.describe(t),
            c.mu_form,
            if c.agree() { "agrees" } else { "DISAGREES" },
            if c.note_holds { "holds" } else { "FAILS" }
        )?;
    }
    if let Some(path) = semigroup {
        let s = read_semigroup(path)?;
        let induced = InducedContext::new(t, &s)?.table();
        writeln!(out, "transfer to T S (order {}):", induced.order())?;
        for (xi, c) in families.iter().zip(&classes) {
            let comp = xi.component(t, s.order());
            for e in s.elements() {
                let image = comp.apply(e);
                let r = TransferReport::evaluate(c.mu_form, &induced, &s, e, image);
                let items: Vec<&str> = r
                    .items()
                    .iter()
                    .map(|i| match i {
                        Implication::Vacuous => "vacuous",
                        Implication::Holds => "holds",
                        Implication::Violated => "VIOLATED",
                    })
                    .collect();
                writeln!(
                    out,
                    "  ξ_1(0) = {}, e = {e}, ξ_S(e) = {}: left {}, right {}, central {}, idempotent {}",
                    xi.describe(t),
                    t.describe(s.order(), image),
                    items[0],
                    items[1],
                    items[2],
                    items[3]
                )?;
            }
        }
    }
    Ok(out)
}

fn enumerate(order: usize, count: bool) -> CliResult<String> {
    let corpus = enumerate_semigroups(order)?;
    if count {
        Ok(format!("{}\n", corpus.len()))
    } else {
        Ok(format_corpus(&corpus.tables))
    }
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    let text = match cli.command {
        Command::Analyze { file } => analyze(&file)?,
        Command::Karoubi { file, export } => karoubi(&file, export.as_deref())?,
        Command::Theta { file } => theta(&file)?,
        Command::Factorize { file } => factorize(&file)?,
        Command::Induced { functor, semigroup } => induced(&functor, &semigroup)?,
        Command::Constants { functor, semigroup } => constants(&functor, semigroup.as_deref())?,
        Command::Enumerate { order, count } => enumerate(order, count)?,
        Command::Verify { suite, max_order } => {
            let opts = VerifyOptions {
                max_order,
                max_arrows: max_arrows()?,
            };
            let report = run_suite(suite, opts)?;
            return Ok((report.render(), report.passed()));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
