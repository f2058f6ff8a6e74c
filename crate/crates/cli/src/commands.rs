use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use arrangement_pairing::arrangement::{
    bounded_complex, gale_arrangement, gale_arrangement_with_lift, is_simple, Arrangement,
    BoundedComplex, RegionOrder,
};
use arrangement_pairing::nerve::{independence_complex, nerve_complex, reduced_homology_ranks};
use arrangement_pairing::pairing::{gram_matrix, phi_matrix, psi_chains, verify_with_order, TheoremVerdict};
use arrangement_pairing::rational::{format_rational, quadratic_form, QVector, Rational};

use crate::format::{parse_list, ArrangementFile, GaleFile, ReportFile};
use crate::CliError;

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub json: bool,
    pub order: RegionOrder,
}

/// What a subcommand prints and the exit code it ends with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn load_arrangement(path: &Path) -> Result<Arrangement, CliError> {
    ArrangementFile::from_json(&read_text(path)?)?.to_arrangement()
}

fn complex(arr: &Arrangement, opts: Options) -> BoundedComplex {
    let mut bc = bounded_complex(arr);
    bc.reorder(opts.order);
    bc
}

fn point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serialises")
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

#[derive(Serialize)]
struct RegionEntry {
    index: usize,
    signs: String,
    vertex_count: usize,
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RegionsOut {
    regions: usize,
    face_counts: Vec<usize>,
    euler_characteristic: i64,
    list: Vec<RegionEntry>,
}

pub fn cmd_regions(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let bc = complex(&arr, opts);
    let list: Vec<RegionEntry> = bc
        .regions()
        .iter()
        .enumerate()
        .map(|(i, r)| RegionEntry {
            index: i + 1,
            signs: r.face.signs.to_string(),
            vertex_count: r.vertices().len(),
            vertices: r.vertices().iter().map(|v| v.point.iter().map(format_rational).collect()).collect(),
        })
        .collect();
    if opts.json {
        let out = RegionsOut {
            regions: list.len(),
            face_counts: bc.face_counts(),
            euler_characteristic: bc.euler_characteristic(),
            list,
        };
        return Ok(Outcome::ok(json(&out)));
    }
    let mut s = String::new();
    writeln!(s, "r = {}", list.len()).unwrap();
    writeln!(s, "face counts by dimension: {:?}", bc.face_counts()).unwrap();
    writeln!(s, "euler characteristic: {}", bc.euler_characteristic()).unwrap();
    for (entry, region) in list.iter().zip(bc.regions()) {
        let pts: Vec<String> = region.vertices().iter().map(|v| point(&v.point)).collect();
        writeln!(s, "F{}  {}  {} vertices: {}", entry.index, entry.signs, entry.vertex_count, pts.join(" "))
            .unwrap();
    }
    Ok(Outcome::ok(s))
}

pub fn cmd_phi(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let phi = phi_matrix(&arr, &complex(&arr, opts))?;
    if opts.json {
        #[derive(Serialize)]
        struct Out {
            phi: Vec<Vec<i64>>,
        }
        return Ok(Outcome::ok(json(&Out { phi: phi.rows() })));
    }
    Ok(Outcome::ok(phi.to_string()))
}

pub fn cmd_gram(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let gram = gram_matrix(&arr, &complex(&arr, opts))?;
    if opts.json {
        #[derive(Serialize)]
        struct Out {
            gram: Vec<Vec<i64>>,
        }
        return Ok(Outcome::ok(json(&Out { gram: gram.rows() })));
    }
    Ok(Outcome::ok(gram.to_string()))
}

pub fn cmd_psi(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let bc = complex(&arr, opts);
    if bc.regions().is_empty() {
        return Err(CliError::Failed("no bounded regions".into()));
    }
    let chains = psi_chains(&arr, &bc)?;
    if opts.json {
        #[derive(Serialize)]
        struct Term {
            simplex: Vec<usize>,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Entry {
            region: usize,
            degree: usize,
            terms: Vec<Term>,
        }
        let out: Vec<Entry> = chains
            .iter()
            .map(|c| Entry {
                region: c.region + 1,
                degree: c.chain.degree(),
                terms: c
                    .chain
                    .terms()
                    .map(|(s, v)| Term { simplex: one_based(s.indices()), coeff: format_rational(v) })
                    .collect(),
            })
            .collect();
        return Ok(Outcome::ok(json(&out)));
    }
    let mut s = String::new();
    for c in &chains {
        writeln!(s, "F{}: {}", c.region + 1, c.chain).unwrap();
    }
    Ok(Outcome::ok(s))
}

pub fn cmd_verify(path: &Path, opts: Options, report: Option<&Path>) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let rep = verify_with_order(&arr, opts.order)?;
    let file = ReportFile::from_report(&rep);
    if let Some(out) = report {
        fs::write(out, file.to_json())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
    }
    let code = if rep.theorem_verdict == TheoremVerdict::Verified { 0 } else { 1 };
    if opts.json {
        return Ok(Outcome { output: file.to_json(), code });
    }
    let mut s = String::new();
    let yes = |b: bool| if b { "yes" } else { "no" };
    let opt = |b: Option<bool>| b.map_or("n/a", yes);
    writeln!(s, "m = {}, s = {}, r = {}", rep.ambient_dim, rep.hyperplanes, rep.regions).unwrap();
    writeln!(s, "simple: {}", yes(rep.is_simple)).unwrap();
    writeln!(s, "coloop-free: {}", yes(rep.is_coloop_free)).unwrap();
    writeln!(s, "phi:\n{}", rep.phi).unwrap();
    if let Some(g) = &rep.gram {
        writeln!(s, "gram:\n{g}").unwrap();
    }
    writeln!(s, "phi = (-1)^m gram: {}", opt(rep.identity_holds)).unwrap();
    writeln!(s, "psi chains are cycles: {}", opt(rep.cycles_hold)).unwrap();
    match rep.psi_rank {
        Some(k) => writeln!(s, "psi rank: {k} (independent: {})", opt(rep.psi_independent)).unwrap(),
        None => writeln!(s, "psi rank: n/a").unwrap(),
    }
    writeln!(
        s,
        "top reduced homology rank: {} (matches r: {})",
        rep.homology_rank_top,
        yes(rep.rank_matches_r)
    )
    .unwrap();
    let minors: Vec<String> = rep.definiteness.minors.iter().map(format_rational).collect();
    writeln!(s, "(-1)^m phi: {} (leading minors {})", rep.definiteness.verdict, minors.join(", ")).unwrap();
    writeln!(s, "phi: {}", rep.phi_verdict).unwrap();
    if let Some(z) = &rep.definiteness.negative_witness {
        let value = quadratic_form(&rep.phi.scaled(sign_of_dim(rep.ambient_dim)).to_qmatrix(), z);
        writeln!(s, "witness z = {}  with z^T (-1)^m phi z = {}", point(z), format_rational(&value)).unwrap();
    }
    if !rep.failures.is_empty() {
        writeln!(s, "failed checks: {}", rep.failures.join(", ")).unwrap();
    }
    writeln!(s, "verdict: {}", rep.theorem_verdict).unwrap();
    Ok(Outcome { output: s, code })
}

fn sign_of_dim(m: usize) -> i64 {
    if m.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Serialize)]
struct ComplexSummary {
    f_vector: Vec<usize>,
    reduced_homology: Vec<usize>,
}

pub fn cmd_nerve(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let ind = independence_complex(&arr);
    let nerve = nerve_complex(&arr);
    let diff: Vec<Vec<usize>> = ind.difference(&nerve).iter().map(|s| one_based(s.indices())).collect();
    let summary = |k: &arrangement_pairing::nerve::SimplicialComplex| ComplexSummary {
        f_vector: k.f_vector(),
        reduced_homology: reduced_homology_ranks(k),
    };
    if opts.json {
        #[derive(Serialize)]
        struct Out {
            independence: ComplexSummary,
            nerve: ComplexSummary,
            equal: bool,
            differences: Vec<Vec<usize>>,
        }
        let out = Out {
            independence: summary(&ind),
            nerve: summary(&nerve),
            equal: diff.is_empty(),
            differences: diff,
        };
        return Ok(Outcome::ok(json(&out)));
    }
    let (a, b) = (summary(&ind), summary(&nerve));
    let mut s = String::new();
    writeln!(s, "independence complex: f-vector {:?}, reduced homology ranks {:?}", a.f_vector, a.reduced_homology)
        .unwrap();
    writeln!(s, "nerve complex: f-vector {:?}, reduced homology ranks {:?}", b.f_vector, b.reduced_homology)
        .unwrap();
    if diff.is_empty() {
        writeln!(s, "complexes equal").unwrap();
    } else {
        let labels: Vec<String> = diff.iter().map(|d| format!("{d:?}")).collect();
        writeln!(s, "complexes differ on: {}", labels.join(" ")).unwrap();
    }
    Ok(Outcome::ok(s))
}

pub fn cmd_homology(path: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    let ranks = reduced_homology_ranks(&independence_complex(&arr));
    let r = bounded_complex(&arr).regions().len();
    let top = ranks.get(arr.ambient_dim() - 1).copied().unwrap_or(0);
    if opts.json {
        #[derive(Serialize)]
        struct Out {
            reduced_homology: Vec<usize>,
            top_degree: usize,
            top_rank: usize,
            regions: usize,
            simple: bool,
        }
        let out = Out {
            reduced_homology: ranks,
            top_degree: arr.ambient_dim() - 1,
            top_rank: top,
            regions: r,
            simple: is_simple(&arr),
        };
        return Ok(Outcome::ok(json(&out)));
    }
    let mut s = String::new();
    writeln!(s, "reduced homology ranks of the independence complex: {ranks:?}").unwrap();
    writeln!(s, "rank in degree m-1 = {}: {top}", arr.ambient_dim() - 1).unwrap();
    writeln!(s, "bounded regions: {r}").unwrap();
    Ok(Outcome::ok(s))
}

/// `theta` and `psi` given on the command line override the file's values.
pub fn cmd_gale(
    path: &Path,
    theta: Option<&str>,
    psi: Option<&str>,
    out: Option<&Path>,
) -> Result<Outcome, CliError> {
    let file = GaleFile::from_json(&read_text(path)?)?;
    let a = file.matrix()?;
    let from_file = |v: &Option<Vec<String>>| -> Result<Option<QVector>, CliError> {
        v.as_ref().map(|xs| parse_list(&xs.join(","))).transpose()
    };
    let theta = match theta {
        Some(t) => Some(parse_list(t)?),
        None => from_file(&file.theta)?,
    };
    let theta = theta.ok_or_else(|| CliError::Input("theta is required".into()))?;
    let lift = match psi {
        Some(p) => Some(parse_list(p)?),
        None => from_file(&file.psi)?,
    };
    let arr = match lift {
        Some(lift) => gale_arrangement_with_lift(&a, &theta, &lift),
        None => gale_arrangement(&a, &theta),
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    let text = ArrangementFile::from_arrangement(&arr).to_json();
    if let Some(out) = out {
        fs::write(out, &text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
        return Ok(Outcome::ok(format!("wrote {}\n", out.display())));
    }
    Ok(Outcome::ok(text + "\n"))
}

pub fn cmd_render(path: &Path, out: &Path, opts: Options) -> Result<Outcome, CliError> {
    let arr = load_arrangement(path)?;
    if arr.ambient_dim() != 2 {
        return Err(CliError::Input("render supports m = 2 only".into()));
    }
    let doc = crate::render::render(&arr, &complex(&arr, opts));
    fs::write(out, doc).map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
    Ok(Outcome::ok(format!("wrote {}\n", out.display())))
}
