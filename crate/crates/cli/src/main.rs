//! `gordian`: knot diagrams, transposition colorings, and dihedral cover invariants.
//!
//! Exit codes: 0 success, 1 domain error, 2 input or parse error, 3 search budget exceeded.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use gordian_core::coloring::{
    check_coloring, fox_coloring_space, gn_member, permutation_number, solve_class_colorings, Check, ClassColoring,
    ClassKind, ClassSpec, ColoringFile, GroupKind, SolveOptions,
};
use gordian_core::covers::{branched_homology, linking_set, lk_obstruction, reidemeister_schreier, three_colorings};
use gordian_core::diagram::PdFile;
use gordian_core::knots;
use gordian_core::knots::section_fixture;
use gordian_core::linalg::format_rational;
use gordian_core::paths::{CaseLabel, ClaspSection, SectionFile};
use gordian_core::{braid_closure, BraidWord, Error, PlanarDiagram};

#[derive(Parser)]
#[command(name = "gordian", version, about = "Transposition colorings and dihedral cover invariants of knot diagrams")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// PD JSON file (`-` for stdin).
    #[arg(long)]
    pd: Option<PathBuf>,
    /// Braid JSON, e.g. '{"strands":2,"word":[1,1,1]}'.
    #[arg(long)]
    braid: Option<String>,
    /// Built-in diagram name (see `build`).
    #[arg(long)]
    knot: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the PD JSON of a built-in diagram, e.g. `build trefoil-sum 2`.
    Build {
        name: String,
        param: Option<usize>,
        #[arg(long)]
        mirror: bool,
    },
    /// Surjective colorings by a conjugacy class, or check a given coloring.
    Color {
        #[command(flatten)]
        input: Input,
        /// Group, `S<n>` (transpositions) or `A<n>` (3-cycles).
        #[arg(long)]
        group: Option<String>,
        /// List every coloring instead of one per conjugacy orbit.
        #[arg(long)]
        all: bool,
        /// Coloring JSON to verify instead of searching.
        #[arg(long)]
        check: Option<PathBuf>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Permutation number.
    Pnum {
        #[command(flatten)]
        input: Input,
        /// Largest n to try (default: overpass count plus one).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Membership in G_n: a transposition coloring onto S_m for some m >= n.
    Gn {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Fox p-coloring space.
    Fox {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Rewrite a clasp section so the coloring of K_0 survives.
    Rewrite {
        #[command(flatten)]
        input: Input,
        /// Section JSON.
        #[arg(long)]
        section: Option<PathBuf>,
        /// Coloring JSON of the diagram with clasp A changed.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Built-in section: case1, case2a, case2b, case2c.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = gordian_core::paths::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Homology of the 3-fold irregular branched covers.
    Homology {
        #[command(flatten)]
        input: Input,
        /// A single 3-coloring (S3 transpositions); default: all up to color permutation.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Linking numbers of the branch lifts.
    Lk {
        #[command(flatten)]
        input: Input,
        /// Name used in the report.
        #[arg(long)]
        name: Option<String>,
    },
    /// Compare linking sets of a knot and a twice 3-colorable knot.
    Obstruct {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pd2: Option<PathBuf>,
        #[arg(long)]
        braid2: Option<String>,
        #[arg(long)]
        knot2: Option<String>,
    },
}

enum Failure {
    Input(String),
    Domain(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::InvalidDiagram(_) | Error::InvalidBraid(_) | Error::MultiComponentClosure(_) => {
                Failure::Input(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(Value, String, u8), Failure>;

fn read_source(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, origin: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("{origin}: {e}")))
}

fn diagram_from_pd_text(text: &str, origin: &str) -> Result<PlanarDiagram, Failure> {
    let pd: PdFile = parse_json(text, origin)?;
    PlanarDiagram::from_pd(&pd).map_err(|e| Failure::Input(format!("{origin}: {e}")))
}

fn resolve(
    pd: &Option<PathBuf>,
    braid: &Option<String>,
    knot: &Option<String>,
    stdin_ok: bool,
) -> Result<(PlanarDiagram, String), Failure> {
    match (pd, braid, knot) {
        (Some(p), None, None) => {
            let origin = p.display().to_string();
            let d = diagram_from_pd_text(&read_source(p)?, &origin)?;
            let name = p.file_stem().map_or("stdin".into(), |s| s.to_string_lossy().into_owned());
            Ok((d, if origin == "-" { "stdin".into() } else { name }))
        }
        (None, Some(b), None) => {
            let bw: BraidWord = parse_json(b, "--braid")?;
            let d = braid_closure(&bw).map_err(|e| Failure::Input(format!("--braid: {e}")))?;
            Ok((d, "braid".into()))
        }
        (None, None, Some(k)) => {
            let d = knots::by_name(k).ok_or_else(|| Failure::Input(format!("--knot: unknown diagram {k:?}")))?;
            Ok((d, k.clone()))
        }
        (None, None, None) if stdin_ok => {
            let d = diagram_from_pd_text(&read_source(&PathBuf::from("-"))?, "stdin")?;
            Ok((d, "stdin".into()))
        }
        (None, None, None) => Err(Failure::Input("no input diagram given".into())),
        _ => Err(Failure::Input("give only one of --pd, --braid, --knot".into())),
    }
}

fn input(i: &Input) -> Result<(PlanarDiagram, String), Failure> {
    resolve(&i.pd, &i.braid, &i.knot, true)
}

fn parse_group(g: &str) -> Result<ClassSpec, Failure> {
    let bad = || Failure::Input(format!("--group: expected S<n> or A<n>, got {g:?}"));
    let (kind, n) = g.split_at(1.min(g.len()));
    let n: usize = n.parse().map_err(|_| bad())?;
    let spec = match kind {
        "S" => ClassSpec::new(GroupKind::Symmetric, n, ClassKind::Transpositions),
        "A" => ClassSpec::new(GroupKind::Alternating, n, ClassKind::ThreeCycles),
        _ => return Err(bad()),
    };
    spec.map_err(|e| Failure::Input(format!("--group: {e}")))
}

fn read_coloring(path: &PathBuf) -> Result<ClassColoring, Failure> {
    let origin = path.display().to_string();
    let f: ColoringFile = parse_json(&read_source(path)?, &origin)?;
    ClassColoring::from_json(&f).map_err(|e| Failure::Input(format!("{origin}: {e}")))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Build { name, param, mirror } => {
            let full = match param {
                Some(k) => format!("{name}-{k}"),
                None => name,
            };
            let d = knots::by_name(&full).ok_or_else(|| Failure::Input(format!("unknown diagram {full:?}")))?;
            let d = if mirror { d.mirror() } else { d };
            let text = format!("{full}: {} crossings", d.crossing_count());
            Ok((to_value(&d.to_pd()), text, 0))
        }
        Command::Color { input: i, group, all, check, node_limit } => {
            let (d, _) = input(&i)?;
            if let Some(path) = check {
                let c = read_coloring(&path)?;
                let verdict = check_coloring(&d, &c)?;
                let surjective = c.is_surjective();
                let (v, text) = match verdict {
                    Check::Valid => {
                        (json!({"valid": true, "surjective": surjective}), format!("valid, surjective: {surjective}"))
                    }
                    Check::Violated { crossing } => {
                        (json!({"valid": false, "crossing": crossing}), format!("violated at crossing {crossing}"))
                    }
                };
                let code = if verdict.is_valid() && surjective { 0 } else { 1 };
                return Ok((v, text, code));
            }
            let spec = parse_group(group.as_deref().unwrap_or("S3"))?;
            let opts = SolveOptions { up_to_conjugation: !all, node_limit, seeds: vec![] };
            let out = solve_class_colorings(&d, spec, &opts)?;
            let colorings: Vec<ColoringFile> = out.colorings.iter().map(|c| c.to_json()).collect();
            let text = format!("{} surjective colorings onto {}", colorings.len(), spec.group_name());
            let v = json!({
                "group": spec.group_name(),
                "up_to_conjugation": !all,
                "count": colorings.len(),
                "colorings": colorings,
            });
            Ok((v, text, 0))
        }
        Command::Pnum { input: i, n_max, node_limit } => {
            let (d, _) = input(&i)?;
            let p = permutation_number(&d, n_max, node_limit);
            let v = json!({
                "p": p.value,
                "lower_bound_only": !p.complete,
                "bound": p.bound,
                "nodes": p.nodes,
                "witness": p.witness.to_json(),
            });
            let text =
                if p.complete { format!("p = {}", p.value) } else { format!("p >= {} (node limit reached)", p.value) };
            Ok((v, text, if p.complete { 0 } else { 3 }))
        }
        Command::Gn { input: i, n, node_limit } => {
            let (d, _) = input(&i)?;
            let member = gn_member(&d, n, node_limit)?;
            Ok((json!({"n": n, "member": member}), format!("in G_{n}: {member}"), 0))
        }
        Command::Fox { input: i, p } => {
            let (d, _) = input(&i)?;
            let f = fox_coloring_space(&d, p)?;
            let text = format!("dim over F_{p}: {}", f.dimension);
            let mut v = to_value(&f);
            v["twice_three_colorable"] = json!(f.twice_three_colorable());
            Ok((v, text, 0))
        }
        Command::Rewrite { input: i, section, coloring, fixture, budget } => {
            let (s, col) = match fixture {
                Some(f) => {
                    let case = match f.as_str() {
                        "case1" => CaseLabel::Case1,
                        "case2a" => CaseLabel::Case2a,
                        "case2b" => CaseLabel::Case2b,
                        "case2c" => CaseLabel::Case2c,
                        _ => return Err(Failure::Input(format!("--fixture: unknown section {f:?}"))),
                    };
                    section_fixture(case)
                }
                None => {
                    let (d, _) = input(&i)?;
                    let sp = section.ok_or_else(|| Failure::Input("--section is required".into()))?;
                    let cp = coloring.ok_or_else(|| Failure::Input("--coloring is required".into()))?;
                    let sf: SectionFile = parse_json(&read_source(&sp)?, &sp.display().to_string())?;
                    (ClaspSection::from_file(d, &sf)?, read_coloring(&cp)?)
                }
            };
            let rw = gordian_core::paths::synthesize_k1_tilde(&s, &col, budget)?;
            let verified = gordian_core::paths::verify_rewrite(&s, &col, &rw);
            let v = json!({
                "case": rw.case,
                "section": s.to_file(),
                "k1_word": s.braid_word(),
                "word": rw.word,
                "diagram": rw.diagram.to_pd(),
                "coloring": rw.coloring.to_json(),
                "to_k0": rw.to_k0,
                "to_k2": rw.to_k2,
                "verified": verified,
            });
            let text = format!("{:?}: section word {:?}, verified {verified}", rw.case, rw.word);
            Ok((v, text, if verified { 0 } else { 1 }))
        }
        Command::Homology { input: i, coloring } => {
            let (d, _) = input(&i)?;
            let cols = match coloring {
                Some(p) => vec![read_coloring(&p)?],
                None => three_colorings(&d),
            };
            let w = d.wirtinger();
            let mut covers = vec![];
            let mut lines = vec![];
            for c in &cols {
                let cp = reidemeister_schreier(&w, &d, c)?;
                let h = branched_homology(&cp);
                let u = cp.unbranched_homology();
                lines.push(format!(
                    "free rank {}, torsion {:?}",
                    h.free_rank,
                    h.invariant_factors.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                ));
                covers.push(json!({
                    "coloring": c.to_json(),
                    "generators": cp.generator_count(),
                    "relators": cp.relators.len(),
                    "branched": h,
                    "unbranched": u,
                }));
            }
            Ok((json!({"covers": covers}), lines.join("\n"), 0))
        }
        Command::Lk { input: i, name } => {
            let (d, default_name) = input(&i)?;
            let set = linking_set(&d);
            let report = set.to_report(&name.unwrap_or(default_name));
            let text = format!("lk = {{{}}}, undefined {}", report.lk.join(", "), report.undefined);
            Ok((to_value(&report), text, 0))
        }
        Command::Obstruct { input: i, pd2, braid2, knot2 } => {
            let (d1, n1) = resolve(&i.pd, &i.braid, &i.knot, false)?;
            let (d2, n2) = resolve(&pd2, &braid2, &knot2, false)?;
            let r = lk_obstruction(&d1, &d2)?;
            let fmt = |s: &std::collections::BTreeSet<_>| s.iter().map(format_rational).collect::<Vec<_>>();
            let v = json!({
                "first": r.first.to_report(&n1),
                "second": r.second.to_report(&n2),
                "common": fmt(&r.common),
                "disjoint": r.disjoint,
                "conclusion": if r.disjoint {
                    "not related by a crossing change, if monochromatic crossing changes preserve linking numbers"
                } else {
                    "no obstruction"
                },
            });
            let text = format!("common {:?}, disjoint {}", fmt(&r.common), r.disjoint);
            Ok((v, text, 0))
        }
    }
}

fn configure_threads() {
    if let Some(n) =
        std::env::var("GORDIAN_COLORS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let (out, code) = match run(cli.cmd) {
        Ok((v, text, code)) => (
            match cli.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("serializable"),
                Format::Text => text,
            },
            code,
        ),
        Err(f) => {
            let (msg, code) = match f {
                Failure::Input(m) => (m, 2),
                Failure::Domain(m) => (m, 1),
                Failure::Budget(m) => (m, 3),
            };
            eprintln!("gordian: {msg}");
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{out}");
    ExitCode::from(code)
}
