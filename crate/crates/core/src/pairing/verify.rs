use std::collections::BTreeSet;
use std::fmt;

use super::{gram_from_chains, is_cycle, phi_matrix, psi_chains, GramMatrix, PhiMatrix};
use crate::arrangement::{
    bounded_complex, is_coloop_free, is_simple, Arrangement, RegionOrder, SignVector,
};
use crate::error::Error;
use crate::nerve::{independence_complex, reduced_homology_ranks, Simplex};
use crate::rational::{definiteness, int, rank, DefinitenessCertificate, QMatrix, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremVerdict {
    /// Hypotheses hold and every check passed.
    Verified,
    /// Not simple or not coloop-free; only Φ and its definiteness are meaningful.
    HypothesesNotMet,
    /// Hypotheses hold but some check failed.
    CheckFailed,
}

impl TheoremVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremVerdict::Verified => "verified",
            TheoremVerdict::HypothesesNotMet => "hypotheses-not-met",
            TheoremVerdict::CheckFailed => "check-failed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [TheoremVerdict::Verified, TheoremVerdict::HypothesesNotMet, TheoremVerdict::CheckFailed]
            .into_iter()
            .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ambient_dim: usize,
    pub hyperplanes: usize,
    pub regions: usize,
    pub region_signs: Vec<SignVector>,
    pub is_simple: bool,
    pub is_coloop_free: bool,
    pub phi: PhiMatrix,
    /// Present only for simple arrangements.
    pub gram: Option<GramMatrix>,
    /// `Φ = (−1)^m · Gram`, when the Gram matrix exists.
    pub identity_holds: Option<bool>,
    /// Every Ψ chain has zero augmented boundary.
    pub cycles_hold: Option<bool>,
    pub psi_rank: Option<usize>,
    pub psi_independent: Option<bool>,
    pub homology_rank_top: usize,
    pub rank_matches_r: bool,
    /// Certificate for `(−1)^m · Φ`.
    pub definiteness: DefinitenessCertificate,
    /// Verdict for `Φ` itself.
    pub phi_verdict: Verdict,
    pub theorem_verdict: TheoremVerdict,
    /// Names of the checks that failed.
    pub failures: Vec<String>,
}

pub fn verify(arr: &Arrangement) -> Result<VerificationReport, Error> {
    verify_with_order(arr, RegionOrder::Lex)
}

pub fn verify_with_order(arr: &Arrangement, order: RegionOrder) -> Result<VerificationReport, Error> {
    let m = arr.ambient_dim();
    let mut complex = bounded_complex(arr);
    complex.reorder(order);
    let phi = phi_matrix(arr, &complex)?;
    let r = phi.size();
    let simple = is_simple(arr);
    let coloop_free = is_coloop_free(arr);
    let parity = if m.is_multiple_of(2) { 1 } else { -1 };

    let independence = independence_complex(arr);
    let homology = reduced_homology_ranks(&independence);
    let homology_rank_top = homology.get(m - 1).copied().unwrap_or(0);
    let rank_matches_r = homology_rank_top == r;

    let (mut gram, mut identity_holds, mut cycles_hold, mut psi_rank, mut psi_independent) =
        (None, None, None, None, None);
    if simple {
        let chains = psi_chains(arr, &complex)?;
        let g = gram_from_chains(&chains);
        identity_holds = Some(phi == g.scaled(parity));
        let mut cycles = true;
        for c in &chains {
            cycles &= is_cycle(&independence, &c.chain)?;
        }
        cycles_hold = Some(cycles);
        let support: Vec<Simplex> = chains
            .iter()
            .flat_map(|c| c.chain.terms().map(|(s, _)| s.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let rows = chains
            .iter()
            .map(|c| support.iter().map(|s| c.chain.coefficient(s)).collect())
            .collect();
        let k = rank(&QMatrix::from_rows(support.len(), rows)?);
        psi_rank = Some(k);
        psi_independent = Some(k == r);
        gram = Some(g);
    }

    let adjusted = phi.scaled(parity).to_qmatrix();
    let cert = definiteness(&adjusted)?;
    let phi_verdict = definiteness(&phi.to_qmatrix())?.verdict;
    debug_assert_eq!(adjusted, phi.to_qmatrix().scaled(&int(parity)));

    let mut failures = Vec::new();
    let mut check = |ok: Option<bool>, name: &str| {
        if ok == Some(false) {
            failures.push(name.to_string());
        }
    };
    check(identity_holds, "identity");
    check(cycles_hold, "cycles");
    check(psi_independent, "psi-independent");
    check(Some(rank_matches_r), "homology-rank");
    check(Some(cert.verdict == Verdict::PositiveDefinite), "definiteness");

    let theorem_verdict = if !(simple && coloop_free) {
        TheoremVerdict::HypothesesNotMet
    } else if failures.is_empty() {
        TheoremVerdict::Verified
    } else {
        TheoremVerdict::CheckFailed
    };

    Ok(VerificationReport {
        ambient_dim: m,
        hyperplanes: arr.len(),
        regions: r,
        region_signs: complex.regions().iter().map(|f| f.face.signs.clone()).collect(),
        is_simple: simple,
        is_coloop_free: coloop_free,
        phi,
        gram,
        identity_holds,
        cycles_hold,
        psi_rank,
        psi_independent,
        homology_rank_top,
        rank_matches_r,
        definiteness: cert,
        phi_verdict,
        theorem_verdict,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::ints;

    #[test]
    fn triangle_verifies() {
        let rep = verify(&fixtures::tri()).unwrap();
        assert_eq!(rep.theorem_verdict, TheoremVerdict::Verified);
        assert_eq!(rep.definiteness.verdict, Verdict::PositiveDefinite);
        assert_eq!(rep.homology_rank_top, 1);
        assert_eq!(rep.phi_verdict, Verdict::PositiveDefinite);
    }

    #[test]
    fn segments_verify_with_negative_phi() {
        let rep = verify(&fixtures::pts3()).unwrap();
        assert_eq!(rep.theorem_verdict, TheoremVerdict::Verified);
        assert_eq!(rep.definiteness.minors, ints(&[2, 3]));
        assert_eq!(rep.phi_verdict, Verdict::NegativeDefinite);
    }

    #[test]
    fn nongeneric_example_is_indefinite() {
        let rep = verify(&fixtures::fig1()).unwrap();
        assert_eq!(rep.theorem_verdict, TheoremVerdict::HypothesesNotMet);
        assert!(!rep.is_simple);
        assert!(rep.gram.is_none());
        assert_eq!(rep.definiteness.verdict, Verdict::Indefinite);
        assert_eq!(rep.definiteness.negative_witness, Some(ints(&[1, 1, -1, -1])));
    }

    #[test]
    fn no_regions_is_an_error() {
        let arr = Arrangement::from_i64(2, &[(&[1, 0], 0), (&[0, 1], 0)]).unwrap();
        assert_eq!(verify(&arr), Err(Error::NoBoundedRegions));
    }
}
