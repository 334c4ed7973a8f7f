use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use cubeflow::khcube::{build_complex, homology, RankTable};
use cubeflow::lattice::{check_duality, cube_cancellation, graph_of_lattice, refined_associahedron, refined_permutohedron, ProductLattice};
use cubeflow::oracles::{frobenius_kh_reduced, kauffman_jones, seifert_signature};
use cubeflow::pathalg::{dump_appendix, verify_lattice, AppendixLattice};
use cubeflow::specseq::{self, FilteredComplex, Page};
use cubeflow::{corpus, linkmat, LinkDiagram, Parallelism, DEFAULT_MAX_CROSSINGS};
use serde_json::json;

/// Reduced Khovanov homology over F2, link signatures, spectral sequences of
/// filtered complexes, graph associahedra and path-algebra identities.
#[derive(Parser)]
#[command(name = "cubeflow", version)]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Khovanov homology from the exterior-algebra cube.
    Kh {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long)]
        json: bool,
        /// Aligned table plus Poincaré and Euler polynomials.
        #[arg(long, conflicts_with = "json")]
        table: bool,
    },
    /// Signature, determinant and nullity from the arc linking matrix.
    Sig {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long)]
        compare_oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pages of the spectral sequence of a filtered complex.
    #[command(group(ArgGroup::new("input").required(true).args(["complex", "from_pd"])))]
    Ss {
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Build the Khovanov cube of a diagram as the filtered complex.
        #[arg(long)]
        from_pd: Option<PathBuf>,
        /// Number of pages; defaults to the page where the sequence converges.
        #[arg(long)]
        pages: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Graph associahedra of product lattices.
    #[command(group(ArgGroup::new("what").args(["fvector", "realize", "cancellation"])))]
    Polytope {
        /// Chain lengths, e.g. `1,1,1` for {0,1}³ or `2,2` for {0,1,∞}².
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        fvector: bool,
        #[arg(long)]
        realize: bool,
        #[arg(long)]
        cancellation: bool,
    },
    /// Word-level check of Ǎ(I,J) = Σ_K Ď(K,J)·Ď(I,K).
    #[command(group(ArgGroup::new("what").args(["verify", "dump"])))]
    Pathalg {
        /// Chain lengths, or `point`.
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        verify: bool,
        /// Print the written-out maps and compare them with the reference lists.
        #[arg(long)]
        dump: bool,
    },
    /// Independent reference computations.
    Oracle {
        which: OracleKind,
        #[arg(long)]
        pd: PathBuf,
    },
    /// Checks over the bundled knot and link corpus.
    Corpus {
        #[arg(long, required = true)]
        run_acceptance: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Kh,
    Jones,
    Sig,
}

/// Exit 1 is reserved for mathematical disagreement, 2 for bad input.
enum Failure {
    Mismatch(String),
    Input(String),
}

impl From<cubeflow::Error> for Failure {
    fn from(e: cubeflow::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.sequential { Parallelism::Sequential } else { Parallelism::Rayon };
    match run(cli.command, mode) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, mode: Parallelism) -> Outcome {
    match command {
        Command::Kh { pd, json, table } => kh(&pd, json, table, mode),
        Command::Sig { pd, compare_oracle, json } => sig(&pd, compare_oracle, json),
        Command::Ss { complex, from_pd, pages, json } => ss(complex.as_deref(), from_pd.as_deref(), pages, json, mode),
        Command::Polytope { lattice, realize, cancellation, .. } => polytope(&lattice, realize, cancellation),
        Command::Pathalg { lattice, dump, .. } => pathalg(&lattice, dump, mode),
        Command::Oracle { which, pd } => oracle(which, &pd),
        Command::Corpus { .. } => corpus_acceptance(mode),
    }
}

fn max_crossings() -> Result<usize, Failure> {
    match std::env::var("CUBEFLOW_MAX_CROSSINGS") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("CUBEFLOW_MAX_CROSSINGS={v} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_CROSSINGS),
    }
}

fn read_diagram(path: &Path) -> Result<LinkDiagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(LinkDiagram::from_json(&text)?)
}

fn rank_lines(table: &RankTable) -> String {
    table.iter().map(|(t, q, n)| format!("t={t} q={q} rank={n}\n")).collect()
}

fn kh(pd: &Path, json: bool, table: bool, mode: Parallelism) -> Outcome {
    let d = read_diagram(pd)?;
    let k = build_complex(&d, max_crossings()?, mode)?;
    let h = homology(&k, mode);
    let poincare: Vec<String> = h.iter().map(|(t, q, n)| monomial(n, t, q)).collect();
    if json {
        let ranks: serde_json::Value = serde_json::from_str(&h.to_json()).expect("valid JSON");
        let out = json!({
            "ranks": ranks["ranks"],
            "euler": h.euler_polynomial().to_pairs(),
            "total": h.total(),
        });
        println!("{out}");
    } else if table {
        print!("{}", h.to_text());
        println!("Poincaré: {}", poincare.join(" + "));
        println!("Euler: {}", h.euler_polynomial());
    } else {
        print!("{}", rank_lines(&h));
    }
    Ok(())
}

fn monomial(n: usize, t: i64, q: i64) -> String {
    let coef = if n == 1 { String::new() } else { n.to_string() };
    format!("{coef}t^{t}q^{q}")
}

fn sig(pd: &Path, compare: bool, json: bool) -> Outcome {
    let d = read_diagram(pd)?;
    let (sigma, det, nullity) = linkmat::signature_formula(&d)?;
    if json {
        println!("{}", linkmat::report_json(&d)?);
    } else {
        println!("σ={sigma} det={det} ν={nullity}");
    }
    if compare {
        let oracle = seifert_signature(&d)?;
        if oracle == (sigma, det, nullity) {
            println!("oracle: MATCH");
        } else {
            println!("oracle: MISMATCH (Seifert σ={} det={} ν={})", oracle.0, oracle.1, oracle.2);
            return Err(Failure::Mismatch("signature formula disagrees with the Seifert matrix".into()));
        }
    }
    Ok(())
}

fn page_json(p: &Page) -> serde_json::Value {
    json!({
        "r": p.r,
        "ranks": p.ranks.iter().map(|(k, n)| json!({"t": k.t, "delta": k.parity, "q": k.q, "rank": n})).collect::<Vec<_>>(),
        "differentials": p.differentials.iter().map(|d| json!({
            "from": {"t": d.from.t, "delta": d.from.parity, "q": d.from.q},
            "to": {"t": d.to.t, "delta": d.to.parity, "q": d.to.q},
            "rank": d.matrix.rank(),
        })).collect::<Vec<_>>(),
    })
}

fn ss(complex: Option<&Path>, from_pd: Option<&Path>, pages: Option<usize>, json: bool, mode: Parallelism) -> Outcome {
    let c = match (complex, from_pd) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            FilteredComplex::from_json(&text)?
        }
        (None, Some(path)) => {
            let d = read_diagram(path)?;
            let (sigma, _, nullity) = linkmat::signature_formula(&d)?;
            let k = build_complex(&d, max_crossings()?, mode)?;
            FilteredComplex::from_kh(&k, sigma, nullity, mode)?
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let r_max = pages.unwrap_or_else(|| c.convergence_page()).max(1);
    let ps = specseq::pages(&c, r_max, mode);
    if json {
        println!("{}", json!({ "pages": ps.iter().map(page_json).collect::<Vec<_>>() }));
        return Ok(());
    }
    for p in &ps {
        let nonzero = p.differentials.iter().filter(|d| !d.matrix.is_zero()).count();
        println!("E^{}: total rank {}, {} nonzero d^{} blocks", p.r, p.total(), nonzero, p.r);
        for (k, n) in &p.ranks {
            match k.q {
                Some(q) => println!("  t={} q={} δ̌={} rank={}", k.t, q, k.parity, n),
                None => println!("  t={} δ̌={} rank={}", k.t, k.parity, n),
            }
        }
    }
    Ok(())
}

fn polytope(lattice: &str, realize: bool, cancellation: bool) -> Outcome {
    let lat = ProductLattice::parse(lattice)?;
    let all_ones = lat.lengths().iter().all(|&n| n == 1);
    if cancellation {
        if !all_ones {
            return Err(Failure::Input("cube cancellation runs over {0,1}^l".into()));
        }
        let r = cube_cancellation(lat.len())?;
        println!("{}", serde_json::to_string(&r).expect("serializable"));
        return if r.ok() { Ok(()) } else { Err(Failure::Mismatch("cube cancellation".into())) };
    }
    if realize {
        let real = if all_ones {
            refined_permutohedron(lat.len())?
        } else if lat.len() == 1 {
            refined_associahedron(lat.lengths()[0] as usize + 1)?
        } else {
            return Err(Failure::Input("realizations are available for {0,1}^l and single chains".into()));
        };
        let cert = real.certify()?;
        let pts: Vec<Vec<String>> = real.integer_vertices().iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect();
        // Big integers are written as bare JSON numbers.
        let rows: Vec<String> = pts.iter().map(|p| format!("[{}]", p.join(","))).collect();
        println!("[{}]", rows.join(","));
        return if cert.ok() { Ok(()) } else { Err(Failure::Mismatch("realization certificate failed".into())) };
    }
    let g = graph_of_lattice(&lat);
    let f = g.f_vector()?;
    let mut out = json!({
        "lattice": lat.to_string(),
        "nodes": g.len(),
        "f_vector": f.iter().map(|&x| u64::try_from(x).unwrap_or(u64::MAX)).collect::<Vec<_>>(),
    });
    let duality = check_duality(&lat).ok();
    if let Some(r) = &duality {
        out["duality"] = json!(r.ok());
    }
    println!("{out}");
    match duality {
        Some(r) if !r.ok() => Err(Failure::Mismatch("hypersurface/tubing duality".into())),
        _ => Ok(()),
    }
}

fn pathalg(lattice: &str, dump: bool, mode: Parallelism) -> Outcome {
    let point = lattice.trim() == "point";
    let lat = if point { ProductLattice::cube(1) } else { ProductLattice::parse(lattice)? };
    if dump {
        let which = if point {
            AppendixLattice::Point
        } else {
            AppendixLattice::from_lattice(&lat)
                .ok_or_else(|| Failure::Input("reference lists exist for point, 1, 1,1, 1,1,1 and 2".into()))?
        };
        let report = dump_appendix(which);
        let (a, b) = which.endpoints();
        println!("{} over [{a}, {b}]", which.lattice());
        for block in &report.blocks {
            let status = if block.ok() { "MATCH" } else { "MISMATCH" };
            let fixes = if block.errata_applied > 0 { format!(", {} corrected", block.errata_applied) } else { String::new() };
            println!("{}: {} words{fixes}: {status}", block.block, block.generated);
            for w in block.missing.iter().chain(&block.malformed).chain(&block.duplicates) {
                println!("  transcribed only: {w}");
            }
            for w in &block.extra {
                println!("  generated only: {w}");
            }
        }
        return if report.ok() { Ok(()) } else { Err(Failure::Mismatch("reference word lists".into())) };
    }
    let v = verify_lattice(&lat, mode);
    if v.ok() {
        println!("Ǎ = Σ Ď·Ď: PASS (all {} intervals)", v.intervals);
        Ok(())
    } else {
        println!("Ǎ = Σ Ď·Ď: FAIL ({} of {} intervals)", v.failures.len(), v.intervals);
        Err(Failure::Mismatch(format!("{} intervals", v.failures.len())))
    }
}

fn oracle(which: OracleKind, pd: &Path) -> Outcome {
    let d = read_diagram(pd)?;
    match which {
        OracleKind::Kh => {
            if d.len() > max_crossings()? {
                return Err(cubeflow::Error::TooManyCrossings { got: d.len(), bound: max_crossings()? }.into());
            }
            print!("{}", rank_lines(&frobenius_kh_reduced(&d)));
        }
        OracleKind::Jones => println!("{}", kauffman_jones(&d)),
        OracleKind::Sig => {
            let (s, det, nul) = seifert_signature(&d)?;
            println!("σ={s} det={det} ν={nul}");
        }
    }
    Ok(())
}

fn corpus_acceptance(mode: Parallelism) -> Outcome {
    let mut failures = Vec::new();
    let mut failed = std::collections::BTreeSet::new();
    let mut count = 0;
    for k in corpus::knots() {
        let d = k.diagram();
        let sig = linkmat::signature_formula(&d)?;
        if sig != seifert_signature(&d)? || (sig.0, sig.1) != (k.sigma, k.det) {
            failures.push(format!("{}: signature {sig:?}", k.name));
        }
        let c = build_complex(&d, DEFAULT_MAX_CROSSINGS, mode)?;
        let h = homology(&c, mode);
        if !c.check_d_squared(mode) || h != frobenius_kh_reduced(&d) || h != RankTable::from_triples(k.kh_reduced_mod2.iter().copied()) {
            failures.push(format!("{}: Khovanov homology", k.name));
        }
        if specseq::euler_characteristic_delta(&h) != k.det {
            failures.push(format!("{}: δ-graded Euler characteristic", k.name));
        }
        count += 1;
    }
    for l in corpus::links() {
        let d = l.diagram();
        let sig = linkmat::signature_formula(&d)?;
        if sig != seifert_signature(&d)? || sig != (l.sigma, l.det, l.nullity) {
            failures.push(format!("{}: signature {sig:?}", l.name));
        }
        let c = build_complex(&d, DEFAULT_MAX_CROSSINGS, mode)?;
        if homology(&c, mode) != frobenius_kh_reduced(&d) {
            failures.push(format!("{}: Khovanov homology", l.name));
        }
        count += 1;
    }
    for f in &failures {
        println!("FAIL {f}");
        failed.insert(f.split(':').next().unwrap_or_default().to_string());
    }
    println!("corpus: {} of {count} diagrams agree with every oracle", count - failed.len());
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{} corpus checks", failures.len())))
    }
}
