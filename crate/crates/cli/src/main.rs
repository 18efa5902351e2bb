//! `salvetti`: command-line front end for the salvetti library.
//!
//! Exit status is 0 on success, 1 for usage errors (bad options or an
//! unparseable system) and 2 when a computation fails.

mod report;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use salvetti::artin::{build_complex_q, group_ring_square, specialize};
use salvetti::coxeter::{artin_presentation, classify_finite, components, finite_parabolics, parse_coxeter_spec};
use salvetti::export::{artin_complex_doc, face_poset_doc, resolution_doc, to_json};
use salvetti::group::{closed_form_string, enumerate, length_distribution, poincare_poly, section_psi};
use salvetti::homology::homology;
use salvetti::poset::face_poset_q;
use salvetti::resolution::{build_trivial_complex, enumerate_flags, flag_square, TableCache};
use salvetti::{CoxeterMatrix, Error, GeneratorSubset, HomologyModule, Rational, ZPoly, DEFAULT_BUDGET};

use report::{Format, Report};

const RESOLUTION_RANK_CAP: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "salvetti", version, about = "Salvetti complexes and Coxeter group homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result to a file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Maximum number of elements enumerated per finite parabolic.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Worker threads for complex assembly (falls back to SALVETTI_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Check that the relevant boundaries square to zero before reporting.
    #[arg(long, global = true)]
    verify: bool,
}

/// SYSTEM is a name such as `A3`, `~A2`, `I2(7)` or a block
/// `rank 3; m 1 2 = 3; m 2 3 = inf`. `@path` reads the text from a file and
/// `-` from standard input.
#[derive(Subcommand, Debug)]
enum Command {
    /// Components, finite types and finite parabolic subsets.
    Classify { system: String },
    /// Generators and braid relations of the Artin group.
    Presentation { system: String },
    /// Elements of a finite parabolic with lengths and reduced words.
    Enumerate {
        system: String,
        /// 1-based generator indices, e.g. `1,2,4`.
        #[arg(long)]
        subset: Option<String>,
        /// List every element rather than the length distribution.
        #[arg(long)]
        list: bool,
    },
    /// Poincaré polynomial of a finite parabolic.
    Poincare {
        system: String,
        #[arg(long)]
        subset: Option<String>,
    },
    /// Cells of the Salvetti complex, optionally with the face poset of Q.
    Cells {
        system: String,
        #[arg(long)]
        poset: bool,
    },
    /// Homology of the Artin group with the rank-one local system.
    ArtinHomology {
        system: String,
        #[arg(long, value_enum, default_value_t = Coeff::Laurent)]
        coeff: Coeff,
        /// Value of q for rational coefficients; -1 is the trivial system.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// Integral homology of the Coxeter group from the flag resolution.
    CoxeterHomology {
        system: String,
        /// Build the resolution through this degree; homology is reported
        /// in degrees below it.
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        /// Maximal flag length.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Full JSON document for a complex, resolution or face poset.
    Export {
        system: String,
        #[arg(long, value_enum, default_value_t = ExportKind::Artin)]
        kind: ExportKind,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Coeff {
    Laurent,
    Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Artin,
    Resolution,
    Poset,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax(_) | Error::Validation(_) | Error::NotSubset { .. } => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn thread_count(cli: &Cli) -> Outcome<Option<usize>> {
    if let Some(n) = cli.threads {
        return Ok(Some(n));
    }
    match std::env::var("SALVETTI_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("SALVETTI_THREADS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Outcome<()> {
    if let Some(n) = thread_count(cli)? {
        if n == 0 {
            return Err(Failure::Usage("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Compute(e.to_string()))?;
    }
    let report = match &cli.command {
        Command::Classify { system } => classify(&load(system)?),
        Command::Presentation { system } => presentation(&load(system)?),
        Command::Enumerate { system, subset, list } => {
            let m = load(system)?;
            enumerate_cmd(&m, &subset_arg(&m, subset.as_deref())?, *list, cli.budget)?
        }
        Command::Poincare { system, subset } => {
            let m = load(system)?;
            poincare(&m, &subset_arg(&m, subset.as_deref())?, cli.budget, cli.verify)?
        }
        Command::Cells { system, poset } => cells(&load(system)?, *poset, cli.budget)?,
        Command::ArtinHomology { system, coeff, q } => {
            artin_homology(&load(system)?, *coeff, q.as_deref(), cli.budget, cli.verify)?
        }
        Command::CoxeterHomology { system, kmax, depth } => {
            coxeter_homology(&load(system)?, *kmax, *depth, cli.budget, cli.verify)?
        }
        Command::Export { system, kind, kmax, depth } => {
            if cli.format == Format::Csv {
                return Err(Failure::Usage("export only writes JSON".into()));
            }
            let m = load(system)?;
            if cli.verify {
                match kind {
                    ExportKind::Artin => verify_artin(&m, cli.budget)?,
                    ExportKind::Resolution => verify_resolution(&m, *kmax, *depth, cli.budget)?,
                    ExportKind::Poset => {}
                }
            }
            let json = match kind {
                ExportKind::Artin => to_json(&artin_complex_doc(&m, cli.budget)?),
                ExportKind::Resolution => {
                    check_resolution_rank(&m)?;
                    to_json(&resolution_doc(&m, *kmax, *depth, cli.budget)?)
                }
                ExportKind::Poset => to_json(&face_poset_doc(&m, cli.budget)?),
            };
            return emit(cli, format!("{json}\n"));
        }
    };
    emit(cli, report.render(cli.format))
}

fn emit(cli: &Cli, text: String) -> Outcome<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(system: &str) -> Outcome<CoxeterMatrix> {
    let text = if system == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        s
    } else if let Some(path) = system.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?
    } else {
        system.to_string()
    };
    Ok(parse_coxeter_spec(&text)?)
}

fn subset_arg(m: &CoxeterMatrix, arg: Option<&str>) -> Outcome<GeneratorSubset> {
    let Some(arg) = arg else {
        return Ok(m.generators());
    };
    let mut members = Vec::new();
    for tok in arg.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| Failure::Usage(format!("bad generator index {tok:?}")))?;
        if i == 0 || i > m.rank() {
            return Err(Failure::Usage(format!("generator {i} outside 1..={}", m.rank())));
        }
        members.push(i - 1);
    }
    Ok(GeneratorSubset::new(members))
}

fn require_finite(m: &CoxeterMatrix, j: &GeneratorSubset) -> Outcome<Vec<salvetti::CoxeterType>> {
    classify_finite(m, j).ok_or_else(|| Failure::Compute(format!("W_J is infinite for J = {j}")))
}

fn type_string(types: &[salvetti::CoxeterType]) -> String {
    if types.is_empty() {
        return "trivial".into();
    }
    types.iter().map(ToString::to_string).collect::<Vec<_>>().join(" x ")
}

fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

#[derive(Serialize)]
struct ComponentDoc {
    generators: GeneratorSubset,
    #[serde(rename = "type")]
    kind: String,
    finite: bool,
}

#[derive(Serialize)]
struct ClassifyDoc {
    rank: usize,
    finite: bool,
    #[serde(rename = "type")]
    kind: Option<String>,
    order: Option<String>,
    components: Vec<ComponentDoc>,
    finite_parabolics: Vec<GeneratorSubset>,
    euler_characteristic: i64,
}

fn classify(m: &CoxeterMatrix) -> Report {
    let full = classify_finite(m, &m.generators());
    let components: Vec<ComponentDoc> = components(m, &m.generators())
        .into_iter()
        .map(|c| {
            let t = classify_finite(m, &c);
            ComponentDoc { kind: t.as_deref().map_or("infinite".into(), type_string), finite: t.is_some(), generators: c }
        })
        .collect();
    let parabolics = finite_parabolics(m);
    let doc = ClassifyDoc {
        rank: m.rank(),
        finite: full.is_some(),
        kind: full.as_deref().map(type_string),
        order: full.as_ref().map(|t| t.iter().map(|x| x.order()).product::<u128>().to_string()),
        euler_characteristic: salvetti::artin::euler_characteristic(m),
        finite_parabolics: parabolics.clone(),
        components,
    };
    let mut by_size = vec![0usize; parabolics.last().map_or(0, |j| j.len()) + 1];
    for j in &parabolics {
        by_size[j.len()] += 1;
    }
    let rows = doc
        .components
        .iter()
        .map(|c| vec![c.generators.to_string(), c.kind.clone(), c.finite.to_string()])
        .collect();
    Report::new(&doc)
        .field("rank", doc.rank)
        .field("type", doc.kind.clone().unwrap_or_else(|| "infinite".into()))
        .field("order", doc.order.clone().unwrap_or_else(|| "inf".into()))
        .field("finite subsets by size", by_size.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .field("euler characteristic", doc.euler_characteristic)
        .table(&["component", "type", "finite"], rows)
}

#[derive(Serialize)]
struct PresentationDoc {
    generators: Vec<String>,
    relations: Vec<[String; 2]>,
    abelianization_rank: usize,
}

fn presentation(m: &CoxeterMatrix) -> Report {
    let p = artin_presentation(m);
    let relations: Vec<[String; 2]> = p.relations.iter().map(|(l, r)| [p.format_word(l), p.format_word(r)]).collect();
    let doc = PresentationDoc {
        generators: p.generators.clone(),
        relations: relations.clone(),
        abelianization_rank: p.abelianization_rank(),
    };
    let rows = relations.into_iter().map(|[l, r]| vec![l, r]).collect();
    Report::new(&doc)
        .field("generators", p.generators.join(" "))
        .field("relations", p.relations.len())
        .field("abelianization rank", doc.abelianization_rank)
        .table(&["left", "right"], rows)
}

#[derive(Serialize)]
struct ElementDoc {
    index: usize,
    length: usize,
    word: String,
    psi: String,
}

#[derive(Serialize)]
struct EnumerateDoc {
    subset: GeneratorSubset,
    #[serde(rename = "type")]
    kind: String,
    order: usize,
    length_distribution: Vec<usize>,
    elements: Option<Vec<ElementDoc>>,
}

fn enumerate_cmd(m: &CoxeterMatrix, j: &GeneratorSubset, list: bool, budget: usize) -> Outcome<Report> {
    let types = require_finite(m, j)?;
    let t = enumerate(m, j, budget)?;
    let elements: Vec<ElementDoc> = (0..t.order())
        .map(|w| ElementDoc {
            index: w,
            length: t.length(w),
            word: word_string(&t.global_word(w)),
            psi: section_psi(&t, w).to_string(),
        })
        .collect();
    let distribution = length_distribution(&t);
    let rows = if list {
        elements.iter().map(|e| vec![e.index.to_string(), e.length.to_string(), e.word.clone(), e.psi.clone()]).collect()
    } else {
        distribution.iter().enumerate().map(|(l, c)| vec![l.to_string(), c.to_string()]).collect()
    };
    let columns: &[&str] = if list { &["index", "length", "word", "psi"] } else { &["length", "count"] };
    let doc = EnumerateDoc {
        subset: j.clone(),
        kind: type_string(&types),
        order: t.order(),
        length_distribution: distribution,
        elements: list.then_some(elements),
    };
    Ok(Report::new(&doc)
        .field("subset", j)
        .field("type", &doc.kind)
        .field("order", doc.order)
        .table(columns, rows))
}

#[derive(Serialize)]
struct PoincareDoc {
    subset: GeneratorSubset,
    #[serde(rename = "type")]
    kind: String,
    closed_form: String,
    polynomial: String,
    coefficients: Vec<String>,
    order: String,
}

fn poincare(m: &CoxeterMatrix, j: &GeneratorSubset, budget: usize, verify: bool) -> Outcome<Report> {
    let types = require_finite(m, j)?;
    let closed: ZPoly = salvetti::group::poincare_poly_closed_form(&types);
    if verify {
        let counted: ZPoly = poincare_poly(&enumerate(m, j, budget)?);
        if counted != closed {
            return Err(Failure::Compute(format!("enumeration gives {counted}, product formula {closed}")));
        }
    }
    let order = closed.eval(&1.into());
    let doc = PoincareDoc {
        subset: j.clone(),
        kind: type_string(&types),
        closed_form: closed_form_string(&types),
        polynomial: closed.to_string(),
        coefficients: closed.coeffs().iter().map(ToString::to_string).collect(),
        order: order.to_string(),
    };
    let rows = doc.coefficients.iter().enumerate().map(|(l, c)| vec![l.to_string(), c.clone()]).collect();
    Ok(Report::new(&doc)
        .field("subset", j)
        .field("type", &doc.kind)
        .field("W_J(q)", &doc.closed_form)
        .field("expanded", &doc.polynomial)
        .field("W_J(1)", &doc.order)
        .table(&["length", "count"], rows))
}

#[derive(Serialize)]
struct CellsDoc {
    ranks: Vec<usize>,
    cells: Vec<Vec<GeneratorSubset>>,
    euler_characteristic: i64,
    poset: Option<PosetSummary>,
}

#[derive(Serialize)]
struct PosetSummary {
    pieces: Vec<GeneratorSubset>,
    counts: Vec<usize>,
    orbits: Vec<OrbitSize>,
}

#[derive(Serialize)]
struct OrbitSize {
    gamma: GeneratorSubset,
    size: usize,
}

fn cells(m: &CoxeterMatrix, with_poset: bool, budget: usize) -> Outcome<Report> {
    let cells = salvetti::artin::artin_cells(m);
    let poset = if with_poset {
        let p = face_poset_q(m, budget)?;
        Some(PosetSummary {
            orbits: p.orbits().into_iter().map(|(gamma, c)| OrbitSize { gamma, size: c.len() }).collect(),
            counts: p.counts(),
            pieces: p.pieces,
        })
    } else {
        None
    };
    let doc = CellsDoc {
        ranks: cells.iter().map(Vec::len).collect(),
        euler_characteristic: salvetti::artin::euler_characteristic(m),
        cells,
        poset,
    };
    let mut report = Report::new(&doc).field("euler characteristic", doc.euler_characteristic);
    let mut rows: Vec<Vec<String>> = doc
        .cells
        .iter()
        .flatten()
        .map(|j| {
            let mut row = vec![j.len().to_string(), j.to_string()];
            if let Some(p) = &doc.poset {
                let n = p.orbits.iter().find(|o| o.gamma == *j).map_or(0, |o| o.size);
                row.push(n.to_string());
            }
            row
        })
        .collect();
    if let Some(p) = &doc.poset {
        report = report
            .field("pieces of Q", p.pieces.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .field("faces of Q by dimension", p.counts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        rows.sort_by_key(|r| r[0].parse::<usize>().unwrap_or(0));
        return Ok(report.table(&["degree", "cell", "faces of Q"], rows));
    }
    Ok(report.table(&["degree", "cell"], rows))
}

#[derive(Serialize)]
struct HomologyDoc<H: Serialize> {
    ring: String,
    q: Option<String>,
    ranks: Vec<usize>,
    verified: bool,
    homology: Vec<H>,
}

fn homology_report<R: salvetti::EuclideanDomain>(
    ring: &str,
    q: Option<String>,
    ranks: Vec<usize>,
    verified: bool,
    modules: Vec<HomologyModule<R>>,
) -> Report {
    let rows = modules
        .iter()
        .map(|h| {
            vec![h.degree.to_string(), ranks.get(h.degree).copied().unwrap_or(0).to_string(), h.to_string()]
        })
        .collect();
    let label = if ring == "Q[q,q^-1]" { format!("R = {ring}") } else { ring.to_string() };
    let mut report = Report::new(&HomologyDoc { ring: ring.to_string(), q: q.clone(), ranks, verified, homology: modules });
    report = report.field("ring", label);
    if let Some(q) = q {
        report = report.field("q", q);
    }
    if verified {
        report = report.field("boundary check", "passed");
    }
    report.table(&["k", "rank C_k", "H_k"], rows)
}

fn verify_artin(m: &CoxeterMatrix, budget: usize) -> Outcome<()> {
    build_complex_q(m)?.complex.check_square_zero()?;
    for j in finite_parabolics(m) {
        let t = enumerate(m, &j, budget)?;
        if group_ring_square(&t, &j)?.iter().any(|(_, c)| !c.is_zero()) {
            return Err(Failure::Compute(format!("group-ring boundary of e_{j} does not square to zero")));
        }
    }
    Ok(())
}

fn artin_homology(m: &CoxeterMatrix, coeff: Coeff, q: Option<&str>, budget: usize, verify: bool) -> Outcome<Report> {
    if verify {
        verify_artin(m, budget)?;
    }
    let built = build_complex_q(m)?;
    let ranks = built.ranks();
    match coeff {
        Coeff::Laurent => {
            if q.is_some() {
                return Err(Failure::Usage("--q applies only to --coeff rational".into()));
            }
            let h = homology(&built.complex)?;
            Ok(homology_report("Q[q,q^-1]", None, ranks, verify, h))
        }
        Coeff::Rational => {
            let q0: Rational = q
                .unwrap_or("-1")
                .parse()
                .map_err(|_| Failure::Usage(format!("--q expects a rational number, got {:?}", q.unwrap_or(""))))?;
            let h = homology(&specialize(&built.complex, &q0)?)?;
            Ok(homology_report("Q", Some(q0.to_string()), ranks, verify, h))
        }
    }
}

fn check_resolution_rank(m: &CoxeterMatrix) -> Outcome<()> {
    if m.rank() > RESOLUTION_RANK_CAP {
        return Err(Failure::Usage(format!(
            "the flag resolution is limited to rank {RESOLUTION_RANK_CAP} (got rank {})",
            m.rank()
        )));
    }
    Ok(())
}

fn verify_resolution(m: &CoxeterMatrix, kmax: usize, depth: Option<usize>, budget: usize) -> Outcome<()> {
    let cache = TableCache::new(m, budget);
    for k in 0..=kmax {
        for f in enumerate_flags(m, k, depth) {
            let t = cache.get(&f.top())?;
            if flag_square(&t, &f)?.iter().any(|(_, c)| !c.is_zero()) {
                return Err(Failure::Compute(format!("boundary of e{f} does not square to zero")));
            }
        }
    }
    Ok(())
}

fn coxeter_homology(m: &CoxeterMatrix, kmax: usize, depth: Option<usize>, budget: usize, verify: bool) -> Outcome<Report> {
    check_resolution_rank(m)?;
    if kmax == 0 {
        return Err(Failure::Usage("--kmax must be at least 1".into()));
    }
    if verify {
        verify_resolution(m, kmax, depth, budget)?;
    }
    let built = build_trivial_complex(m, kmax, depth, budget)?;
    let mut h = homology(&built.complex)?;
    h.truncate(kmax);
    let ranks = built.complex.ranks().to_vec();
    Ok(homology_report("Z", None, ranks, verify, h))
}
