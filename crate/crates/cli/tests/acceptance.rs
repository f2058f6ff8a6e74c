//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any failed.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use arrangement_pairing::arrangement::{
    bounded_complex, closure_intersection, gale_arrangement, gale_arrangement_with_lift, is_coloop_free,
    is_simple, Arrangement, BoundedComplex, Hyperplane,
};
use arrangement_pairing::fixtures;
use arrangement_pairing::nerve::{independence_complex, nerve_complex, reduced_homology_ranks, Simplex};
use arrangement_pairing::pairing::{
    gram_from_chains, is_cycle, phi_matrix, psi_chains, vertex_coefficient, verify, RegionMatrix,
    TheoremVerdict,
};
use arrangement_pairing::rational::{definiteness, frac, int, ints, rank, QMatrix, QVector, Rational, Verdict};

const CONFIGS: [(usize, usize); 5] = [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)];
const PER_CONFIG: usize = 50;

/// Matrix entries keyed by the vertex sets of the two regions.
type Keyed = BTreeMap<(Vec<QVector>, Vec<QVector>), i64>;

struct Report {
    lines: Vec<(bool, String)>,
}

impl Report {
    fn record(&mut self, ok: bool, label: &str, detail: String) {
        self.lines.push((ok, format!("{label}: {detail}")));
    }
}

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn sign_power(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn random_arrangement(rng: &mut StdRng, m: usize, s: usize) -> Arrangement {
    let hs = (0..s)
        .map(|_| loop {
            let normal: QVector = (0..m).map(|_| int(rng.gen_range(-5..=5))).collect();
            if let Ok(h) = Hyperplane::new(normal, int(rng.gen_range(-5..=5))) {
                break h;
            }
        })
        .collect();
    Arrangement::new(m, hs).unwrap()
}

/// Random simple, coloop-free arrangements with at least one bounded region.
fn instances(m: usize, s: usize, count: usize) -> Vec<(Arrangement, BoundedComplex)> {
    let mut rng = StdRng::seed_from_u64(1000 * m as u64 + s as u64);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100 * count, "could not find enough instances for ({m},{s})");
        let arr = random_arrangement(&mut rng, m, s);
        if !is_simple(&arr) || !is_coloop_free(&arr) {
            continue;
        }
        let bc = bounded_complex(&arr);
        if bc.regions().is_empty() {
            continue;
        }
        out.push((arr, bc));
    }
    out
}

#[derive(Default)]
struct TheoremCounts {
    identity: usize,
    cycles: usize,
    psi_rank: usize,
    homology: usize,
    minors: usize,
    euler: usize,
    nerve: usize,
    vertex_law: usize,
    total: usize,
}

fn check_instance(arr: &Arrangement, bc: &BoundedComplex, counts: &mut TheoremCounts) {
    let m = arr.ambient_dim();
    let r = bc.regions().len();
    counts.total += 1;

    let phi = phi_matrix(arr, bc).unwrap();
    let chains = psi_chains(arr, bc).unwrap();
    let gram = gram_from_chains(&chains);
    if phi == gram.scaled(sign_power(m)) {
        counts.identity += 1;
    }

    let ind = independence_complex(arr);
    if chains.iter().all(|c| is_cycle(&ind, &c.chain).unwrap()) {
        counts.cycles += 1;
    }

    let support: Vec<Simplex> = {
        let mut all: Vec<Simplex> =
            chains.iter().flat_map(|c| c.chain.terms().map(|(s, _)| s.clone())).collect();
        all.sort();
        all.dedup();
        all
    };
    let rows = chains
        .iter()
        .map(|c| support.iter().map(|s| c.chain.coefficient(s)).collect())
        .collect();
    if rank(&QMatrix::from_rows(support.len(), rows).unwrap()) == r {
        counts.psi_rank += 1;
    }

    if reduced_homology_ranks(&ind).get(m - 1).copied() == Some(r) {
        counts.homology += 1;
    }

    let cert = definiteness(&phi.scaled(sign_power(m)).to_qmatrix()).unwrap();
    if cert.minors.iter().all(|d| *d > Rational::from_integer(0.into())) {
        counts.minors += 1;
    }

    if bc.euler_characteristic() == 1 {
        counts.euler += 1;
    }

    if ind == nerve_complex(arr) {
        counts.nerve += 1;
    }

    let mut law = true;
    for (i, fi) in bc.regions().iter().enumerate() {
        for fj in &bc.regions()[i..] {
            if let Some(sigma) = closure_intersection(arr, fi, fj) {
                let want = sign_power(m - sigma.dim) as i8;
                for v in &sigma.vertices {
                    let got = vertex_coefficient(arr, fi, v).unwrap() * vertex_coefficient(arr, fj, v).unwrap();
                    law &= got == want;
                }
            }
        }
    }
    if law {
        counts.vertex_law += 1;
    }
}

/// Region matrix re-indexed by each region's vertex set (shifted by `shift`),
/// so that arrangements whose sign vectors differ can be compared.
fn keyed(bc: &BoundedComplex, matrix: &RegionMatrix, shift: &[Rational]) -> Keyed {
    let keys: Vec<Vec<QVector>> = bc
        .regions()
        .iter()
        .map(|r| {
            let mut pts: Vec<QVector> = r
                .vertices()
                .iter()
                .map(|v| v.point.iter().zip(shift).map(|(p, c)| p - c).collect())
                .collect();
            pts.sort();
            pts
        })
        .collect();
    let mut out = BTreeMap::new();
    for i in 0..keys.len() {
        for j in 0..keys.len() {
            out.insert((keys[i].clone(), keys[j].clone()), matrix.get(i, j));
        }
    }
    out
}

struct Invariants {
    phi: Keyed,
    gram: Option<Keyed>,
    homology: Vec<usize>,
    verdicts: (TheoremVerdict, Verdict, Verdict),
}

fn invariants(arr: &Arrangement, shift: &[Rational]) -> Invariants {
    let bc = bounded_complex(arr);
    let rep = verify(arr).unwrap();
    let phi = keyed(&bc, &phi_matrix(arr, &bc).unwrap(), shift);
    let gram = is_simple(arr).then(|| keyed(&bc, &gram_from_chains(&psi_chains(arr, &bc).unwrap()), shift));
    Invariants {
        phi,
        gram,
        homology: reduced_homology_ranks(&independence_complex(arr)),
        verdicts: (rep.theorem_verdict, rep.definiteness.verdict, rep.phi_verdict),
    }
}

fn same(a: &Invariants, b: &Invariants) -> bool {
    a.phi == b.phi && a.gram == b.gram && a.homology == b.homology && a.verdicts == b.verdicts
}

fn criterion_1(report: &mut Report) {
    let start = Instant::now();
    let arr = fixtures::fig1();
    let bc = bounded_complex(&arr);
    let phi = phi_matrix(&arr, &bc).unwrap();
    let expected = vec![vec![3, -2, 1, 1], vec![-2, 3, 1, 1], vec![1, 1, 3, -2], vec![1, 1, -2, 3]];
    let form = phi.quadratic_form(&[1, 1, -1, -1]);
    let rep = verify(&arr).unwrap();
    let lib_time = start.elapsed();

    let cli_start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_arrpair"))
        .args(["--json", "verify"])
        .arg(fixture_path("fig1.json"))
        .output()
        .unwrap();
    let cli_time = cli_start.elapsed();
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();

    let ok = phi.rows() == expected
        && form == -4
        && rep.theorem_verdict == TheoremVerdict::HypothesesNotMet
        && out.status.code() == Some(1)
        && json["theorem_verdict"] == "hypotheses-not-met"
        && json["definiteness"]["negative_witness"] == serde_json::json!(["1", "1", "-1", "-1"])
        && lib_time < Duration::from_secs(1)
        && cli_time < Duration::from_secs(1);
    report.record(
        ok,
        "1 four-region regression",
        format!(
            "phi={:?}, z^T phi z={form}, exit={:?}, verdict={}, library {:?}, cli {:?}",
            phi.rows(),
            out.status.code(),
            json["theorem_verdict"],
            lib_time,
            cli_time
        ),
    );
}

fn criterion_2(report: &mut Report) {
    let tri = fixtures::tri();
    let tri_phi = phi_matrix(&tri, &bounded_complex(&tri)).unwrap();
    let tri_cert = definiteness(&tri_phi.to_qmatrix()).unwrap();
    let pts = fixtures::pts3();
    let pts_phi = phi_matrix(&pts, &bounded_complex(&pts)).unwrap();
    let pts_cert = definiteness(&pts_phi.to_qmatrix()).unwrap();
    let ok = tri_phi.rows() == vec![vec![3]]
        && tri_cert.verdict == Verdict::PositiveDefinite
        && pts_phi.rows() == vec![vec![-2, 1], vec![1, -2]]
        && pts_cert.verdict == Verdict::NegativeDefinite;
    report.record(
        ok,
        "2 sign law on fixtures",
        format!(
            "m=2 phi={:?} {}; m=1 phi={:?} {}",
            tri_phi.rows(),
            tri_cert.verdict,
            pts_phi.rows(),
            pts_cert.verdict
        ),
    );
}

fn criteria_3_4_5_8(report: &mut Report) {
    let start = Instant::now();
    let mut counts = TheoremCounts::default();
    for (m, s) in CONFIGS {
        for (arr, bc) in instances(m, s, PER_CONFIG) {
            check_instance(&arr, &bc, &mut counts);
        }
    }
    let elapsed = start.elapsed();
    let n = counts.total;
    let fixtures_euler = [fixtures::tri(), fixtures::pts3(), fixtures::fig1()]
        .iter()
        .all(|a| bounded_complex(a).euler_characteristic() == 1);

    let theorem_ok = n == CONFIGS.len() * PER_CONFIG
        && [counts.identity, counts.cycles, counts.psi_rank, counts.homology, counts.minors]
            .iter()
            .all(|&c| c == n)
        && elapsed < Duration::from_secs(60);
    report.record(
        theorem_ok,
        "3 randomized theorem suite",
        format!(
            "{n} instances: identity {}, cycles {}, psi rank {}, homology rank {}, minors {} ({elapsed:?})",
            counts.identity, counts.cycles, counts.psi_rank, counts.homology, counts.minors
        ),
    );
    report.record(
        counts.euler == n && fixtures_euler,
        "4 euler characteristic of bounded complex",
        format!("{}/{n} random, fixtures {}", counts.euler, if fixtures_euler { "ok" } else { "bad" }),
    );

    let fig = fixtures::fig1();
    let diff = independence_complex(&fig).difference(&nerve_complex(&fig));
    let want = vec![Simplex::new(vec![2, 3, 4]).unwrap()];
    report.record(
        counts.nerve == n && diff == want,
        "5 nerve equals independence complex",
        format!("{}/{n} random equal; four-region example differs on {:?}", counts.nerve, diff),
    );
    report.record(
        counts.vertex_law == n,
        "8 per-vertex sign law",
        format!("{}/{n} instances", counts.vertex_law),
    );
}

fn criterion_6(report: &mut Report) {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, arr) in [("tri", fixtures::tri()), ("pts3", fixtures::pts3()), ("fig1", fixtures::fig1())] {
        let m = arr.ambient_dim();
        let zero = vec![int(0); m];
        let base = invariants(&arr, &zero);
        for i in 0..arr.len() {
            let flipped = arr.with_hyperplane(i, arr.hyperplane(i).flipped()).unwrap();
            checked += 1;
            if !same(&base, &invariants(&flipped, &zero)) {
                failures.push(format!("{name} flip {}", i + 1));
            }
            let scaled = arr.with_hyperplane(i, arr.hyperplane(i).scaled(&frac(7, 3))).unwrap();
            checked += 1;
            if !same(&base, &invariants(&scaled, &zero)) {
                failures.push(format!("{name} scale {}", i + 1));
            }
        }
        let shift: QVector = [frac(1, 3), int(-2)][..m].to_vec();
        checked += 1;
        if !same(&base, &invariants(&arr.translated(&shift), &shift)) {
            failures.push(format!("{name} translate"));
        }
    }
    report.record(
        failures.is_empty(),
        "6 convention invariance",
        format!("{checked} transformed arrangements, failures: {failures:?}"),
    );
}

fn criterion_7(report: &mut Report) {
    let a = QMatrix::from_i64(&[&[1, 1, 1]]);
    let theta = ints(&[3]);
    let first = gale_arrangement(&a, &theta).unwrap();
    let second = gale_arrangement_with_lift(&a, &theta, &ints(&[1, 1, 1])).unwrap();
    let third = gale_arrangement_with_lift(&a, &theta, &[frac(1, 2), int(-1), frac(7, 2)]).unwrap();
    let phis: Vec<Vec<Vec<i64>>> = [&first, &second, &third]
        .iter()
        .map(|arr| phi_matrix(arr, &bounded_complex(arr)).unwrap().rows())
        .collect();
    let distinct = first != second && second != third;
    report.record(
        distinct && phis.iter().all(|p| *p == phis[0]),
        "7 lift invariance",
        format!("phi for three lifts: {phis:?}"),
    );
}

fn main() {
    let mut report = Report { lines: Vec::new() };
    criterion_1(&mut report);
    criterion_2(&mut report);
    criteria_3_4_5_8(&mut report);
    criterion_6(&mut report);
    criterion_7(&mut report);
    report.lines.sort_by(|a, b| a.1.cmp(&b.1));
    for (ok, line) in &report.lines {
        println!("[{}] criterion {line}", if *ok { "PASS" } else { "FAIL" });
    }
    let failed = report.lines.iter().filter(|(ok, _)| !ok).count();
    println!("{} criteria, {failed} failed", report.lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
