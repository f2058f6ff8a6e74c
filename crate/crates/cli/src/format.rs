//! JSON file formats. Rationals are always strings (`"2/3"`), never floats.

use serde::{Deserialize, Serialize};

use arrangement_pairing::arrangement::{Arrangement, Hyperplane, SignVector};
use arrangement_pairing::pairing::{RegionMatrix, TheoremVerdict, VerificationReport};
use arrangement_pairing::rational::{
    format_rational, parse_rational, DefinitenessCertificate, QMatrix, QVector, Rational, Verdict,
};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneEntry {
    pub normal: Vec<String>,
    pub offset: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub ambient_dim: usize,
    pub hyperplanes: Vec<HyperplaneEntry>,
}

fn parse_all(values: &[String]) -> Result<QVector, CliError> {
    values
        .iter()
        .map(|s| parse_rational(s).map_err(|e| CliError::Input(e.to_string())))
        .collect()
}

fn format_all(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

impl ArrangementFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed arrangement file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }

    pub fn to_arrangement(&self) -> Result<Arrangement, CliError> {
        if self.hyperplanes.is_empty() {
            return Err(CliError::Input("arrangement file has no hyperplanes".into()));
        }
        if self.ambient_dim == 0 {
            return Err(CliError::Input("ambient_dim must be positive".into()));
        }
        let mut hs = Vec::with_capacity(self.hyperplanes.len());
        for (i, entry) in self.hyperplanes.iter().enumerate() {
            if entry.normal.len() != self.ambient_dim {
                return Err(CliError::Input(format!(
                    "normal at index {} has length {}, expected {}",
                    i + 1,
                    entry.normal.len(),
                    self.ambient_dim
                )));
            }
            let normal = parse_all(&entry.normal)?;
            let offset = parse_rational(&entry.offset).map_err(|e| CliError::Input(e.to_string()))?;
            let h = Hyperplane::new(normal, offset)
                .map_err(|_| CliError::Input(format!("zero normal at index {}", i + 1)))?;
            hs.push(h);
        }
        Arrangement::new(self.ambient_dim, hs).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn from_arrangement(arr: &Arrangement) -> Self {
        ArrangementFile {
            ambient_dim: arr.ambient_dim(),
            hyperplanes: arr
                .hyperplanes()
                .iter()
                .map(|h| HyperplaneEntry {
                    normal: format_all(h.normal()),
                    offset: format_rational(h.offset()),
                })
                .collect(),
        }
    }
}

/// Input for `gale`: the `d × n` matrix `A`, and optionally `θ` and a lift `ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaleFile {
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<String>>,
}

impl GaleFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed matrix file: {e}")))
    }

    pub fn matrix(&self) -> Result<QMatrix, CliError> {
        let cols = self.matrix.first().map_or(0, Vec::len);
        let rows = self.matrix.iter().map(|r| parse_all(r)).collect::<Result<Vec<_>, _>>()?;
        QMatrix::from_rows(cols, rows).map_err(|e| CliError::Input(e.to_string()))
    }
}

/// Parses a comma-separated list of rationals, e.g. `"3"` or `"1,-1/2"`.
pub fn parse_list(text: &str) -> Result<QVector, CliError> {
    text.split(',')
        .map(|s| parse_rational(s).map_err(|e| CliError::Input(e.to_string())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub verdict: String,
    pub minors: Vec<String>,
    pub negative_witness: Option<Vec<String>>,
    pub positive_witness: Option<Vec<String>>,
}

/// Serialised [`VerificationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub ambient_dim: usize,
    pub hyperplanes: usize,
    pub regions: usize,
    pub region_signs: Vec<String>,
    pub is_simple: bool,
    pub is_coloop_free: bool,
    pub phi: Vec<Vec<i64>>,
    pub gram: Option<Vec<Vec<i64>>>,
    pub identity_holds: Option<bool>,
    pub cycles_hold: Option<bool>,
    pub psi_rank: Option<usize>,
    pub psi_independent: Option<bool>,
    pub homology_rank_top: usize,
    pub rank_matches_r: bool,
    /// Certificate for `(-1)^m * phi`.
    pub definiteness: CertificateEntry,
    pub phi_verdict: String,
    pub theorem_verdict: String,
    pub failures: Vec<String>,
}

impl ReportFile {
    pub fn from_report(rep: &VerificationReport) -> Self {
        let c = &rep.definiteness;
        ReportFile {
            ambient_dim: rep.ambient_dim,
            hyperplanes: rep.hyperplanes,
            regions: rep.regions,
            region_signs: rep.region_signs.iter().map(ToString::to_string).collect(),
            is_simple: rep.is_simple,
            is_coloop_free: rep.is_coloop_free,
            phi: rep.phi.rows(),
            gram: rep.gram.as_ref().map(RegionMatrix::rows),
            identity_holds: rep.identity_holds,
            cycles_hold: rep.cycles_hold,
            psi_rank: rep.psi_rank,
            psi_independent: rep.psi_independent,
            homology_rank_top: rep.homology_rank_top,
            rank_matches_r: rep.rank_matches_r,
            definiteness: CertificateEntry {
                verdict: c.verdict.to_string(),
                minors: format_all(&c.minors),
                negative_witness: c.negative_witness.as_deref().map(format_all),
                positive_witness: c.positive_witness.as_deref().map(format_all),
            },
            phi_verdict: rep.phi_verdict.to_string(),
            theorem_verdict: rep.theorem_verdict.to_string(),
            failures: rep.failures.clone(),
        }
    }

    pub fn to_report(&self) -> Result<VerificationReport, CliError> {
        let bad = |what: &str| CliError::Input(format!("invalid report field {what}"));
        let matrix = |rows: &Vec<Vec<i64>>, what: &str| {
            let m = RegionMatrix::from_rows(rows.clone()).map_err(|_| bad(what))?;
            if m.is_symmetric() {
                Ok(m)
            } else {
                Err(bad(what))
            }
        };
        let verdict = |s: &str| Verdict::parse(s).ok_or_else(|| bad("verdict"));
        let d = &self.definiteness;
        let witness = |w: &Option<Vec<String>>| w.as_ref().map(|v| parse_all(v)).transpose();
        Ok(VerificationReport {
            ambient_dim: self.ambient_dim,
            hyperplanes: self.hyperplanes,
            regions: self.regions,
            region_signs: self
                .region_signs
                .iter()
                .map(|s| SignVector::parse(s).ok_or_else(|| bad("region_signs")))
                .collect::<Result<_, _>>()?,
            is_simple: self.is_simple,
            is_coloop_free: self.is_coloop_free,
            phi: matrix(&self.phi, "phi")?,
            gram: self.gram.as_ref().map(|g| matrix(g, "gram")).transpose()?,
            identity_holds: self.identity_holds,
            cycles_hold: self.cycles_hold,
            psi_rank: self.psi_rank,
            psi_independent: self.psi_independent,
            homology_rank_top: self.homology_rank_top,
            rank_matches_r: self.rank_matches_r,
            definiteness: DefinitenessCertificate {
                verdict: verdict(&d.verdict)?,
                minors: parse_all(&d.minors)?,
                negative_witness: witness(&d.negative_witness)?,
                positive_witness: witness(&d.positive_witness)?,
            },
            phi_verdict: verdict(&self.phi_verdict)?,
            theorem_verdict: TheoremVerdict::parse(&self.theorem_verdict)
                .ok_or_else(|| bad("theorem_verdict"))?,
            failures: self.failures.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed report: {e}")))
    }
}
