//! Command-line front end for the Beauville-structure library:
//! verification, exhaustive and randomized search, conjugacy
//! classification and word evaluation over bundled or user-supplied
//! permutation groups.
//!
//! Exit codes separate the claim from the machinery: 0 means the claim
//! was verified (or the search found something), 1 means it was refuted
//! (or the search proved/reported absence), 2 means the invocation never
//! got as far as a verdict.

use std::collections::VecDeque;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use beauville::dataset::{self, GroupDataset};
use beauville::search::{MixedSearch, StronglyRealSearch, UnmixedSearch};
use beauville::words::{Binding, WordExpr};
use beauville::{
    bray, check_order_certificate, search_mixed, search_strongly_real, search_unmixed, tables,
    verify_mixed, verify_strongly_real, verify_unmixed, Automorphism, BeauvilleStructure, Budget,
    ClassTable, GeneratingTriple, PermGroup, Permutation, Report,
};

/// Seed used by randomized commands when none is given, fixed so repeated
/// invocations reproduce identical output.
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(
    name = "beauville",
    version,
    about = "Construct and verify Beauville structures on finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an unmixed Beauville structure from four elements.
    VerifyUnmixed {
        #[command(flatten)]
        sel: GroupSel,
        /// The elements x1;y1;x2;y2, each a word in the dataset's
        /// generators or a cycle expression like (1,2)(3,4)
        #[arg(long, allow_hyphen_values = true)]
        words: String,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Verify a strongly real Beauville structure: unmixed plus an
    /// automorphism inverting all four elements.
    VerifyStronglyReal {
        #[command(flatten)]
        sel: GroupSel,
        /// The elements x1;y1;x2;y2 (words or cycle expressions)
        #[arg(long, allow_hyphen_values = true)]
        words: String,
        /// Inverting automorphism, as conj:ELEMENT (word or cycles)
        #[arg(long)]
        phi: String,
        /// Second inverting automorphism for the relaxed definition in
        /// which the triples have different inverters agreeing up to an
        /// inner automorphism
        #[arg(long)]
        phi2: Option<String>,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Verify a mixed Beauville structure: a triple in an index-2
    /// subgroup meeting the coset and square conditions.
    VerifyMixed {
        #[command(flatten)]
        sel: GroupSel,
        /// The elements x;y of the triple, in the index-2 subgroup
        #[arg(long, allow_hyphen_values = true)]
        words: String,
        /// Generators of the index-2 subgroup (words or cycles,
        /// ';'-separated); when omitted the subgroup containing the
        /// triple is located automatically
        #[arg(long)]
        subgroup_words: Option<String>,
        /// Strict footprint semantics: fuse under ambient conjugacy and
        /// reject coset involutions
        #[arg(long)]
        strict_sigma: bool,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Search a group for Beauville structures.  Exhaustive modes report
    /// absence as a proof; the bray mode is randomized and reports only
    /// what it found.
    Search {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Seed for randomized scans
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Allow the two triples to have different inverting
        /// automorphisms (strongly-real mode)
        #[arg(long)]
        distinct_inverters: bool,
        /// Restrict inverting automorphisms to inner ones even when the
        /// dataset links an overgroup (strongly-real mode)
        #[arg(long)]
        inner_only: bool,
        /// Strict footprint semantics (mixed mode)
        #[arg(long)]
        strict_sigma: bool,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// List conjugacy classes, optionally only the strongly real ones.
    Classes {
        #[command(flatten)]
        sel: GroupSel,
        /// Print only classes inverted by some involution
        #[arg(long)]
        strongly_real: bool,
        #[command(flatten)]
        budget: BudgetOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Check an order certificate: a file of lines `word expected-order`.
    Certificate {
        #[command(flatten)]
        sel: GroupSel,
        /// Certificate file; '#' comments, each line a word followed by
        /// the claimed element order
        cert: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate words in the group's named generators.
    EvalWord {
        #[command(flatten)]
        sel: GroupSel,
        /// Words or cycle expressions to evaluate
        #[arg(required = true)]
        words: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Describe a bundled group, or list everything bundled.
    Info {
        /// Bundled or family group name
        #[arg(long)]
        group: Option<String>,
        /// Path to a dataset file
        #[arg(long, conflicts_with = "group")]
        file: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSel {
    /// Bundled or family group name (A5, M11, J1, A7, S7, C12, D6, ...)
    #[arg(long)]
    group: Option<String>,
    /// Path to a .grp dataset file
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GroupSel {
    fn load(&self) -> Result<GroupDataset> {
        load_selector(self.group.as_deref(), self.file.as_deref())
    }
}

fn load_selector(group: Option<&str>, file: Option<&std::path::Path>) -> Result<GroupDataset> {
    match (group, file) {
        (Some(name), None) => {
            dataset::resolve(name).with_context(|| format!("resolving group '{name}'"))
        }
        (None, Some(path)) => {
            dataset::load_group(path).with_context(|| format!("loading {}", path.display()))
        }
        _ => bail!("exactly one of --group and --file must be given"),
    }
}

#[derive(Args)]
struct BudgetOpts {
    /// Trial budget for randomized scans
    #[arg(long, default_value_t = 200)]
    budget: u64,
    /// Cap on stored elements during enumerations
    #[arg(long, default_value_t = 10_000_000)]
    max_elements: usize,
    /// Cap on the group order accepted for exhaustive searches
    #[arg(long, default_value_t = 100_000)]
    max_group_order: u64,
}

impl BudgetOpts {
    fn to_budget(&self) -> Result<Budget> {
        if self.budget == 0 || self.max_elements == 0 || self.max_group_order == 0 {
            bail!("budgets must be positive");
        }
        Ok(Budget::default()
            .with_trials(self.budget)
            .with_max_elements(self.max_elements)
            .with_max_group_order(self.max_group_order))
    }
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; results do not depend on the count
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    Unmixed,
    StronglyReal,
    Mixed,
    Bray,
}

/// Outcome of a claim-checking command, mapped onto the exit code.
enum Verdict {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe goes away, as filters do.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn init_jobs(out: &OutputOpts) -> Result<()> {
    if let Some(n) = out.jobs {
        if n == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("initialising the worker pool")?;
    }
    Ok(())
}

/// Parses one element: cycle notation when the text opens a cycle with a
/// point number (or is the empty product), otherwise a word evaluated in
/// the binding.
fn parse_element(binding: &Binding, spec: &str) -> Result<Permutation> {
    let s = spec.trim();
    if s.is_empty() {
        bail!("empty element specification");
    }
    let cyclish = s.starts_with('(')
        && s[1..]
            .trim_start()
            .starts_with(|c: char| c.is_ascii_digit() || c == ')');
    if cyclish {
        Ok(Permutation::parse_cycles(binding.degree(), s)?)
    } else {
        let expr = WordExpr::parse(s)?;
        Ok(expr.eval(binding)?)
    }
}

/// Splits a ';'-separated element list and checks the count.
fn parse_elements(binding: &Binding, specs: &str, expect: usize) -> Result<Vec<Permutation>> {
    let parts: Vec<&str> = specs.split(';').collect();
    if parts.len() != expect {
        bail!(
            "expected {expect} ';'-separated elements, got {}",
            parts.len()
        );
    }
    parts.iter().map(|p| parse_element(binding, p)).collect()
}

/// Parses an automorphism specification `conj:ELEMENT`.
fn parse_automorphism(g: &PermGroup, binding: &Binding, spec: &str) -> Result<Automorphism> {
    let rest = spec
        .strip_prefix("conj:")
        .ok_or_else(|| anyhow!("automorphism must be given as conj:ELEMENT, got '{spec}'"))?;
    let by = parse_element(binding, rest)?;
    Ok(Automorphism::new(g, by)?)
}

fn emit_report(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
}

fn verdict(ok: bool) -> Result<Verdict> {
    Ok(if ok { Verdict::Pass } else { Verdict::Fail })
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::VerifyUnmixed {
            sel,
            words,
            budget,
            out,
        } => {
            init_jobs(&out)?;
            let budget = budget.to_budget()?;
            let ds = sel.load()?;
            let g = ds.build_group()?;
            let binding = ds.binding()?;
            let els = parse_elements(&binding, &words, 4)?;
            let t1 = GeneratingTriple::new(els[0].clone(), els[1].clone())?;
            let t2 = GeneratingTriple::new(els[2].clone(), els[3].clone())?;
            let report = verify_unmixed(&g, &t1, &t2, &budget)?;
            emit_report(&report, out.format);
            verdict(report.verified)
        }
        Command::VerifyStronglyReal {
            sel,
            words,
            phi,
            phi2,
            budget,
            out,
        } => {
            init_jobs(&out)?;
            let budget = budget.to_budget()?;
            let ds = sel.load()?;
            let g = ds.build_group()?;
            let binding = ds.binding()?;
            let els = parse_elements(&binding, &words, 4)?;
            let t1 = GeneratingTriple::new(els[0].clone(), els[1].clone())?;
            let t2 = GeneratingTriple::new(els[2].clone(), els[3].clone())?;
            let phi1 = parse_automorphism(&g, &binding, &phi)?;
            let phi2 = phi2
                .map(|s| parse_automorphism(&g, &binding, &s))
                .transpose()?;
            let report = verify_strongly_real(&g, &t1, &t2, &phi1, phi2.as_ref(), &budget)?;
            emit_report(&report, out.format);
            verdict(report.verified)
        }
        Command::VerifyMixed {
            sel,
            words,
            subgroup_words,
            strict_sigma,
            budget,
            out,
        } => {
            init_jobs(&out)?;
            let budget = budget.to_budget()?;
            let ds = sel.load()?;
            let g = ds.build_group()?;
            let binding = ds.binding()?;
            let els = parse_elements(&binding, &words, 2)?;
            let t = GeneratingTriple::new(els[0].clone(), els[1].clone())?;
            let g0 = match subgroup_words {
                Some(specs) => {
                    let parts: Vec<&str> = specs.split(';').collect();
                    let gens = parts
                        .iter()
                        .map(|p| parse_element(&binding, p))
                        .collect::<Result<Vec<_>>>()?;
                    PermGroup::from_generators(ds.degree, gens)?
                }
                None => locate_index_two_subgroup(&g, &t)?,
            };
            let report = verify_mixed(&g, &g0, &t, strict_sigma, &budget)?;
            emit_report(&report, out.format);
            verdict(report.verified)
        }
        Command::Search {
            sel,
            mode,
            seed,
            distinct_inverters,
            inner_only,
            strict_sigma,
            budget,
            out,
        } => {
            init_jobs(&out)?;
            let budget = budget.to_budget()?;
            let ds = sel.load()?;
            let g = ds.build_group()?;
            match mode {
                Mode::Unmixed => {
                    let found = search_unmixed(&g, &budget)?;
                    print_unmixed_search(&ds, &found, out.format);
                    verdict(found.structure.is_some())
                }
                Mode::StronglyReal => {
                    let source = if inner_only {
                        None
                    } else {
                        overgroup_of(&ds)?
                    };
                    let found =
                        search_strongly_real(&g, source.as_ref(), distinct_inverters, &budget)?;
                    print_strongly_real_search(&ds, source.is_some(), &found, out.format);
                    verdict(found.structure.is_some())
                }
                Mode::Mixed => {
                    let found = search_mixed(&g, strict_sigma, &budget)?;
                    print_mixed_search(&ds, &found, out.format);
                    verdict(found.found.is_some())
                }
                Mode::Bray => {
                    let t = distinguished_involution(&ds, &budget)?;
                    let finds = bray::bray_scan(&g, &t, &budget, seed)?;
                    print_bray_search(&ds, &t, &finds, seed, out.format);
                    verdict(!finds.is_empty())
                }
            }
        }
        Command::Classes {
            sel,
            strongly_real,
            budget,
            out,
        } => {
            init_jobs(&out)?;
            let budget = budget.to_budget()?;
            let ds = sel.load()?;
            let g = ds.build_group()?;
            let table = ClassTable::build(&g, budget.max_elements)?;
            let real: std::collections::BTreeSet<usize> =
                table.strongly_real_classes(&g)?.into_iter().collect();
            let rows: Vec<(usize, bool)> = (0..table.len())
                .map(|i| (i, real.contains(&i)))
                .filter(|(_, sr)| !strongly_real || *sr)
                .collect();
            match out.format {
                Format::Text => {
                    println!(
                        "{} classes of {} (order {}){}",
                        rows.len(),
                        ds.name,
                        g.order(),
                        if strongly_real { ", strongly real only" } else { "" }
                    );
                    println!("{:<8} {:>6} {:>10}  strongly-real", "label", "order", "size");
                    for (i, sr) in &rows {
                        let c = &table.classes()[*i];
                        println!(
                            "{:<8} {:>6} {:>10}  {}",
                            c.label,
                            c.order,
                            c.size,
                            if *sr { "yes" } else { "no" }
                        );
                    }
                }
                Format::Json => {
                    let classes: Vec<_> = rows
                        .iter()
                        .map(|(i, sr)| {
                            let c = &table.classes()[*i];
                            json!({
                                "label": c.label,
                                "order": c.order,
                                "size": c.size,
                                "strongly_real": sr,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "group": ds.name,
                            "group_order": g.order().to_string(),
                            "classes": classes,
                        }))?
                    );
                }
            }
            Ok(Verdict::Pass)
        }
        Command::Certificate { sel, cert, out } => {
            init_jobs(&out)?;
            let ds = sel.load()?;
            let binding = ds.binding()?;
            let text = std::fs::read_to_string(&cert)
                .with_context(|| format!("reading {}", cert.display()))?;
            let mut claims = Vec::new();
            for (idx, raw) in text.lines().enumerate() {
                let line = raw.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let (word, order) = line.rsplit_once(char::is_whitespace).ok_or_else(|| {
                    anyhow!("certificate line {}: expected 'word order'", idx + 1)
                })?;
                let expected: u64 = order.trim().parse().with_context(|| {
                    format!("certificate line {}: bad order '{order}'", idx + 1)
                })?;
                claims.push((WordExpr::parse(word.trim())?, expected));
            }
            let (ok, checks) = check_order_certificate(&binding, &claims)?;
            match out.format {
                Format::Text => {
                    for c in &checks {
                        println!(
                            "  [{}] o({}) = {} (claimed {})",
                            if c.passed() { "ok" } else { "FAIL" },
                            c.expr,
                            c.actual,
                            c.expected
                        );
                    }
                    println!("certificate: {}", if ok { "PASS" } else { "FAIL" });
                }
                Format::Json => {
                    let lines: Vec<_> = checks
                        .iter()
                        .map(|c| {
                            json!({
                                "word": c.expr,
                                "expected": c.expected,
                                "actual": c.actual,
                                "ok": c.passed(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "group": ds.name,
                            "verified": ok,
                            "checks": lines,
                        }))?
                    );
                }
            }
            verdict(ok)
        }
        Command::EvalWord { sel, words, out } => {
            init_jobs(&out)?;
            let ds = sel.load()?;
            let binding = ds.binding()?;
            let mut results = Vec::new();
            for w in &words {
                let p = parse_element(&binding, w)?;
                results.push((w, p));
            }
            match out.format {
                Format::Text => {
                    for (w, p) in &results {
                        println!("{w} = {p}  (order {})", p.order());
                    }
                }
                Format::Json => {
                    let items: Vec<_> = results
                        .iter()
                        .map(|(w, p)| {
                            let images: Vec<u32> =
                                (0..p.degree() as u32).map(|i| p.image(i) + 1).collect();
                            json!({
                                "word": w,
                                "cycles": p.to_string(),
                                "order": p.order(),
                                "images": images,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items)?);
                }
            }
            Ok(Verdict::Pass)
        }
        Command::Info { group, file, out } => {
            init_jobs(&out)?;
            match (group, file) {
                (None, None) => print_catalog(out.format)?,
                (g, f) => print_group_info(load_selector(g.as_deref(), f.as_deref())?, out.format)?,
            }
            Ok(Verdict::Pass)
        }
    }
}

/// Finds the index-2 subgroup containing the triple, for `verify-mixed`
/// invocations that do not name one.  Requires the answer to be unique.
fn locate_index_two_subgroup(g: &PermGroup, t: &GeneratingTriple) -> Result<PermGroup> {
    let mut hits = Vec::new();
    for sub in g.index_two_subgroups()? {
        if sub.contains(t.x())? && sub.contains(t.y())? {
            hits.push(sub);
        }
    }
    match hits.len() {
        0 => bail!("no index-2 subgroup contains the triple; give one with --subgroup-words"),
        1 => Ok(hits.pop().unwrap()),
        n => bail!("{n} index-2 subgroups contain the triple; disambiguate with --subgroup-words"),
    }
}

/// Builds the linked overgroup of a dataset, when there is one, for use
/// as the source of inverting automorphisms.
fn overgroup_of(ds: &GroupDataset) -> Result<Option<PermGroup>> {
    let Some(name) = &ds.overgroup else {
        return Ok(None);
    };
    let over = dataset::resolve(name)
        .with_context(|| format!("resolving the linked overgroup '{name}'"))?;
    if over.degree != ds.degree {
        bail!(
            "overgroup '{name}' acts on {} points but the group acts on {}",
            over.degree,
            ds.degree
        );
    }
    Ok(Some(over.build_group()?))
}

/// The involution used by the bray mode: the dataset's distinguished one
/// when declared, else the first involution met walking products of the
/// generators in breadth-first order (deterministic).
fn distinguished_involution(ds: &GroupDataset, budget: &Budget) -> Result<Permutation> {
    if let Some(t) = ds.involution_perm() {
        return Ok(t.clone());
    }
    let gens = ds.generators();
    let id = Permutation::identity(ds.degree);
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.clone());
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    queue.push_back(id);
    let mut visited = 0usize;
    while let Some(e) = queue.pop_front() {
        visited += 1;
        if visited > budget.max_elements {
            break;
        }
        let o = e.order();
        if o % 2 == 0 {
            return Ok(e.pow((o / 2) as i64));
        }
        for gen in &gens {
            let next = &e * gen;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    bail!("the group has no involution within the element budget")
}

fn triple_json(t: &GeneratingTriple) -> serde_json::Value {
    let (l, m, n) = t.triple_type();
    json!({
        "type": [l, m, n],
        "x": t.x().to_string(),
        "y": t.y().to_string(),
        "z": t.z().to_string(),
    })
}

fn print_triple(label: &str, t: &GeneratingTriple) {
    let (l, m, n) = t.triple_type();
    println!("  {label}: type ({l},{m},{n})");
    println!("    x = {}", t.x());
    println!("    y = {}", t.y());
    println!("    z = {}", t.z());
}

fn print_structure(s: &BeauvilleStructure) {
    print_triple("triple 1", &s.first);
    print_triple("triple 2", &s.second);
    if let Some((p1, p2)) = &s.inverters {
        if p1.conjugator() == p2.conjugator() {
            println!("  inverted by conjugation with {}", p1.conjugator());
        } else {
            println!(
                "  inverted by conjugation with {} and {}",
                p1.conjugator(),
                p2.conjugator()
            );
        }
    }
}

fn structure_json(s: &BeauvilleStructure) -> serde_json::Value {
    let inverters = s.inverters.as_ref().map(|(p1, p2)| {
        json!([p1.conjugator().to_string(), p2.conjugator().to_string()])
    });
    json!({
        "first": triple_json(&s.first),
        "second": triple_json(&s.second),
        "inverters": inverters,
    })
}

fn print_unmixed_search(ds: &GroupDataset, found: &UnmixedSearch, format: Format) {
    match format {
        Format::Text => match &found.structure {
            Some(s) => {
                println!(
                    "found: unmixed Beauville structure on {} ({} triples, {} pairs tested)",
                    ds.name, found.triples, found.pairs_tested
                );
                print_structure(s);
            }
            None => println!(
                "absent: {} admits no unmixed Beauville structure \
                 (exhausted {} hyperbolic generating triples, {} footprint pairs)",
                ds.name, found.triples, found.pairs_tested
            ),
        },
        Format::Json => {
            let v = json!({
                "group": ds.name,
                "mode": "unmixed",
                "exhaustive": true,
                "triples": found.triples,
                "pairs_tested": found.pairs_tested,
                "structure": found.structure.as_ref().map(structure_json),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
        }
    }
}

fn print_strongly_real_search(
    ds: &GroupDataset,
    used_overgroup: bool,
    found: &StronglyRealSearch,
    format: Format,
) {
    let source = if used_overgroup {
        "overgroup conjugations"
    } else {
        "inner automorphisms"
    };
    match format {
        Format::Text => match &found.structure {
            Some(s) => {
                println!(
                    "found: strongly real Beauville structure on {} via {source} \
                     ({} triples, {} invertible, {} pairs tested)",
                    ds.name, found.triples, found.invertible, found.pairs_tested
                );
                print_structure(s);
            }
            None => println!(
                "absent: {} admits no strongly real Beauville structure via {source} \
                 (exhausted {} triples, {} invertible, {} pairs tested)",
                ds.name, found.triples, found.invertible, found.pairs_tested
            ),
        },
        Format::Json => {
            let v = json!({
                "group": ds.name,
                "mode": "strongly-real",
                "exhaustive": true,
                "source": source,
                "triples": found.triples,
                "invertible": found.invertible,
                "pairs_tested": found.pairs_tested,
                "structure": found.structure.as_ref().map(structure_json),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
        }
    }
}

fn print_mixed_search(ds: &GroupDataset, found: &MixedSearch, format: Format) {
    match format {
        Format::Text => {
            println!(
                "{} index-2 subgroup(s) of {} scanned",
                found.scans.len(),
                ds.name
            );
            for (i, scan) in found.scans.iter().enumerate() {
                let note = if scan.skipped_by_order_filter {
                    "ruled out by the order filter".to_string()
                } else {
                    format!("{} candidate triples scanned", scan.triples)
                };
                println!(
                    "  subgroup {} (order {}): outer orders divisible by 4: {}; {}",
                    i + 1,
                    scan.subgroup.order(),
                    scan.outer_orders_divisible_by_four,
                    note
                );
            }
            match &found.found {
                Some((idx, m)) => {
                    let (l, mm, n) = m.triple.triple_type();
                    println!(
                        "found: mixed Beauville structure in subgroup {} with triple type ({l},{mm},{n})",
                        idx + 1
                    );
                    println!("    x = {}", m.triple.x());
                    println!("    y = {}", m.triple.y());
                    println!("    outer representative = {}", m.outer);
                }
                None => println!("absent: {} admits no mixed Beauville structure", ds.name),
            }
        }
        Format::Json => {
            let scans: Vec<_> = found
                .scans
                .iter()
                .map(|s| {
                    json!({
                        "subgroup_order": s.subgroup.order().to_string(),
                        "outer_orders_divisible_by_four": s.outer_orders_divisible_by_four,
                        "skipped_by_order_filter": s.skipped_by_order_filter,
                        "triples": s.triples,
                    })
                })
                .collect();
            let hit = found.found.as_ref().map(|(idx, m)| {
                let (l, mm, n) = m.triple.triple_type();
                json!({
                    "subgroup": idx + 1,
                    "type": [l, mm, n],
                    "x": m.triple.x().to_string(),
                    "y": m.triple.y().to_string(),
                    "outer": m.outer.to_string(),
                })
            });
            let v = json!({
                "group": ds.name,
                "mode": "mixed",
                "exhaustive": true,
                "scans": scans,
                "structure": hit,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
        }
    }
}

fn print_bray_search(
    ds: &GroupDataset,
    t: &Permutation,
    finds: &[BeauvilleStructure],
    seed: u64,
    format: Format,
) {
    match format {
        Format::Text => {
            if finds.is_empty() {
                println!(
                    "absent: randomized scan of {} found nothing (seed {seed}; \
                     absence here is not a proof)",
                    ds.name
                );
            } else {
                println!(
                    "found: {} strongly real structure(s) on {} inverted by t = {t} (seed {seed})",
                    finds.len(),
                    ds.name
                );
                print_structure(&finds[0]);
            }
        }
        Format::Json => {
            let v = json!({
                "group": ds.name,
                "mode": "bray",
                "exhaustive": false,
                "seed": seed,
                "involution": t.to_string(),
                "structures": finds.iter().map(structure_json).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serialises"));
        }
    }
}

fn print_catalog(format: Format) -> Result<()> {
    let rows = tables::bundled_rows()?;
    match format {
        Format::Text => {
            println!("bundled groups:");
            for name in dataset::bundled_names() {
                let ds = dataset::bundled(name)?;
                let order = ds
                    .declared_order
                    .as_ref()
                    .map(|o| o.to_string())
                    .unwrap_or_else(|| "?".into());
                let mut extras = Vec::new();
                if let Some(over) = &ds.overgroup {
                    extras.push(format!("overgroup {over}"));
                }
                if ds.involution.is_some() {
                    extras.push("distinguished involution".into());
                }
                let extras = if extras.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", extras.join(", "))
                };
                println!("  {name:<12} degree {:>3}, order {order}{extras}", ds.degree);
            }
            println!("word-table rows (strongly real structures for covering groups):");
            for row in &rows {
                let rep = dataset::bundled(&row.group).is_ok();
                let claim = row
                    .claimed_type
                    .map(|((l1, m1, n1), (l2, m2, n2))| {
                        format!("types ({l1},{m1},{n1}), ({l2},{m2},{n2})")
                    })
                    .unwrap_or_default();
                println!(
                    "  {:<10} {claim}{}",
                    row.group,
                    if rep { "  [bundled representation]" } else { "" }
                );
            }
        }
        Format::Json => {
            let mut groups = Vec::new();
            for name in dataset::bundled_names() {
                let ds = dataset::bundled(name)?;
                groups.push(json!({
                    "name": name,
                    "degree": ds.degree,
                    "order": ds.declared_order.as_ref().map(|o| o.to_string()),
                    "overgroup": ds.overgroup,
                    "involution": ds.involution.map(|c| c.to_string()),
                }));
            }
            let table: Vec<_> = rows
                .iter()
                .map(|row| {
                    json!({
                        "group": row.group,
                        "bundled_representation": dataset::bundled(&row.group).is_ok(),
                        "claimed_type": row.claimed_type.map(|(t1, t2)| {
                            json!([[t1.0, t1.1, t1.2], [t2.0, t2.1, t2.2]])
                        }),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "groups": groups,
                    "word_rows": table,
                }))?
            );
        }
    }
    Ok(())
}

fn print_group_info(ds: GroupDataset, format: Format) -> Result<()> {
    let g = ds.build_group()?;
    let gens: Vec<(char, u64)> = ds.perms.iter().map(|(n, p)| (*n, p.order())).collect();
    match format {
        Format::Text => {
            println!("{}: degree {}, order {}", ds.name, ds.degree, g.order());
            for (n, o) in &gens {
                let role = if ds.generator_names.contains(n) {
                    "generator"
                } else {
                    "distinguished element"
                };
                println!("  {n}: order {o} ({role})");
            }
            if let Some(over) = &ds.overgroup {
                let emb = ds.embedding.as_deref().unwrap_or("unspecified embedding");
                println!("  overgroup: {over} ({emb})");
            }
            if let Some(t) = ds.involution {
                println!("  distinguished involution: {t}");
            }
            if let Ok(row) = tables::bundled_row(&ds.name) {
                println!(
                    "  word-table row: x1={} x2={} u={} j1={} j2={}",
                    row.x1, row.x2, row.u, row.j1, row.j2
                );
            }
        }
        Format::Json => {
            let v = json!({
                "name": ds.name,
                "degree": ds.degree,
                "order": g.order().to_string(),
                "generators": gens
                    .iter()
                    .map(|(n, o)| json!({
                        "name": n.to_string(),
                        "order": o,
                        "generating": ds.generator_names.contains(n),
                    }))
                    .collect::<Vec<_>>(),
                "overgroup": ds.overgroup,
                "embedding": ds.embedding,
                "involution": ds.involution.map(|c| c.to_string()),
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(())
}
