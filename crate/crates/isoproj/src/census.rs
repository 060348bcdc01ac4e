//! Homogeneity of projected foliations, the per-n census on CP^n and the
//! number-theoretic existence predicates.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fkmproj::{self, clifford_family, delta, FkmFamily, Split};
use crate::rootsys::{Basis, TorusPoint};
use crate::symcat::{family_dim, family_rank, Label, SymmetricPairRecord};
use crate::voganproj::{admissible_points, count_classes};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Homogeneous {
    Yes,
    No,
    Unknown,
}

impl Homogeneous {
    pub fn as_str(self) -> &'static str {
        match self {
            Homogeneous::Yes => "yes",
            Homogeneous::No => "no",
            Homogeneous::Unknown => "unknown",
        }
    }
}

impl From<bool> for Homogeneous {
    fn from(b: bool) -> Self {
        if b {
            Homogeneous::Yes
        } else {
            Homogeneous::No
        }
    }
}

impl FromStr for Homogeneous {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "yes" => Ok(Homogeneous::Yes),
            "no" => Ok(Homogeneous::No),
            "unknown" => Ok(Homogeneous::Unknown),
            _ => Err(Error::Parse(format!("bad homogeneity flag `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceKind {
    Pair,
    Fkm,
    OpenGap,
}

impl SourceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SourceKind::Pair => "pair",
            SourceKind::Fkm => "fkm",
            SourceKind::OpenGap => "open-gap",
        }
    }
}

impl FromStr for SourceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pair" => Ok(SourceKind::Pair),
            "fkm" => Ok(SourceKind::Fkm),
            "open-gap" => Ok(SourceKind::OpenGap),
            _ => Err(Error::Parse(format!("bad source kind `{s}`"))),
        }
    }
}

mod rational_strings {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational64>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|t| t.parse().map_err(serde::de::Error::custom)).collect()
    }
}

/// One census row: a single congruence class of projected foliations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationRecord {
    pub source: String,
    pub kind: SourceKind,
    pub n: u64,
    pub codim: usize,
    pub homogeneous: Homogeneous,
    /// Number of classes contributed by the source; absent for the open gap.
    pub n_within_source: Option<usize>,
    pub basis: Option<Basis>,
    #[serde(with = "rational_strings")]
    pub representative: Vec<Rational64>,
    pub representative_text: String,
    /// Codimension-one row at an n that has both rank-two pair and FKM sources.
    pub overlap_candidate: bool,
    pub note: String,
}

impl FoliationRecord {
    pub fn representative_point(&self) -> Option<TorusPoint> {
        self.basis.and_then(|b| TorusPoint::new(b, self.representative.clone()).ok())
    }
}

/// Whether the projection of the foliation given by `t` is homogeneous: true for
/// rank one, and for Hermitian pairs exactly at ±h_ν.
pub fn homogeneity(rec: &SymmetricPairRecord, t: &TorusPoint) -> Result<bool> {
    if !admissible_points(rec).contains(t) {
        return Err(Error::NotAdmissible(format!("{} for {rec}", t.h_combination())));
    }
    if rec.is_rank_one() {
        return Ok(true);
    }
    if !rec.hermitian {
        return Ok(false);
    }
    let mut h = vec![0; rec.p];
    h[rec.nu - 1] = 1;
    let h = TorusPoint::from_ints(Basis::DualH, &h);
    Ok(*t == h || *t == h.neg())
}

/// Whether an inhomogeneous irreducible foliation of codimension q exists on CP^n.
pub fn inhomog_exists(n: u64, q: u64) -> bool {
    if q == 1 {
        return n % 2 == 1 && n >= 3;
    }
    let d = 2 * (n + 1);
    (q + 1) * (q + 1) <= d && d.is_multiple_of(q + 1)
}

/// Largest codimension q ≥ 2 allowed by (q+1)² ≤ 2(n+1); at least 1.
pub fn max_codim(n: u64) -> u64 {
    let d = 2 * (n + 1);
    let mut s = 0;
    while (s + 1) * (s + 1) <= d {
        s += 1;
    }
    (s.max(2)) - 1
}

pub fn all_homogeneous(n: u64) -> bool {
    (1..=max_codim(n)).all(|q| !inhomog_exists(n, q))
}

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The real Grassmannian SO(q+r+1)/SO(q+1)×SO(r) with r = 2(n+1)/(q+1), as a
/// catalog record, when it has rank q+1.
pub fn witness(n: u64, q: u64) -> Option<SymmetricPairRecord> {
    let d = 2 * (n + 1);
    let a = q + 1;
    if q < 2 || !d.is_multiple_of(a) {
        return None;
    }
    let b = d / a;
    if b < a {
        return None;
    }
    let (a, b) = (a as usize, b as usize);
    let total = a + b;
    let rec = if total % 2 == 1 {
        let even = if a % 2 == 0 { a } else { b };
        SymmetricPairRecord::new(Label::BI, (total - 1) / 2, even / 2)
    } else {
        SymmetricPairRecord::new(Label::DI, total / 2, a / 2)
    };
    rec.ok()
}

/// Catalog records with dim p = 2n+2 and rank ≥ 2, skipping duplicates and
/// records excluded from the census.
pub fn pair_sources(n: u64) -> Vec<SymmetricPairRecord> {
    let target = 2 * (n as usize + 1);
    let mut out = Vec::new();
    for label in Label::ALL {
        for (p, nu) in label.parameters(n as usize + 1) {
            if family_dim(label, p, nu) != target || family_rank(label, p, nu) < 2 {
                continue;
            }
            if let Ok(rec) = SymmetricPairRecord::new(label, p, nu) {
                if rec.duplicate_of.is_none() && rec.projective_census {
                    out.push(rec);
                }
            }
        }
    }
    out
}

/// FKM families with m₁ ≤ m₂ and dim V = 2n+2, one split per congruence class.
pub fn fkm_sources(n: u64) -> Vec<FkmFamily> {
    let dim_v = 2 * (n + 1);
    let mut out = Vec::new();
    let mut m = 1;
    while (m as u64) * 2 <= n {
        if let Some(d) = delta(m) {
            if dim_v.is_multiple_of(d) {
                let k = (dim_v / d) as usize;
                let splits: Vec<Split> = if m % 4 == 0 {
                    (0..=k / 2).map(|minus| Split::PlusMinus { plus: k - minus, minus }).collect()
                } else {
                    vec![Split::K(k)]
                };
                for s in splits {
                    if let Ok(f) = clifford_family(m, s) {
                        if f.in_scope {
                            out.push(f);
                        }
                    }
                }
            }
        }
        m += 1;
    }
    out
}

/// All congruence classes of irreducible isoparametric foliations on CP^n
/// coming from the catalog, the FKM families and the open (7,8) case.
pub fn enumerate_foliations(n: u64) -> Result<Vec<FoliationRecord>> {
    let pairs = pair_sources(n);
    let fkm = fkm_sources(n);
    let overlap = !fkm.is_empty() && pairs.iter().any(|r| family_rank(r.label, r.p, r.nu) == 2);
    let mut out = Vec::new();
    let mut pair_rows = |codim_one: bool| -> Result<()> {
        for rec in &pairs {
            let rank = family_rank(rec.label, rec.p, rec.nu);
            if (rank == 2) != codim_one {
                continue;
            }
            let count = count_classes(rec)?;
            for t in count.representatives() {
                let h = homogeneity(rec, &t)?;
                out.push(FoliationRecord {
                    source: rec.name(),
                    kind: SourceKind::Pair,
                    n,
                    codim: rank - 1,
                    homogeneous: h.into(),
                    n_within_source: Some(count.n),
                    basis: Some(t.basis()),
                    representative_text: t.h_combination(),
                    representative: t.coords().to_vec(),
                    overlap_candidate: codim_one && overlap,
                    note: String::new(),
                });
            }
        }
        Ok(())
    };
    pair_rows(false)?;
    pair_rows(true)?;
    for f in &fkm {
        let count = fkmproj::count_classes_fkm(f)?;
        let note = if f.empty_block { "empty block treated as even".to_string() } else { String::new() };
        for t in count.representatives() {
            out.push(FoliationRecord {
                source: f.name(),
                kind: SourceKind::Fkm,
                n,
                codim: 1,
                homogeneous: Homogeneous::Unknown,
                n_within_source: Some(count.n),
                basis: Some(t.basis()),
                representative_text: fkmproj::format_point(f, &t),
                representative: t.coords().to_vec(),
                overlap_candidate: overlap,
                note: note.clone(),
            });
        }
    }
    if n == 15 {
        out.push(FoliationRecord {
            source: "open-gap (7,8) on S^31".into(),
            kind: SourceKind::OpenGap,
            n,
            codim: 1,
            homogeneous: Homogeneous::Unknown,
            n_within_source: None,
            basis: None,
            representative: Vec::new(),
            representative_text: String::new(),
            overlap_candidate: false,
            note: "inhomogeneous multiplicities (7,8), unresolved".into(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Json => "json",
            ExportFormat::Csv => "csv",
        })
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "source",
    "kind",
    "n",
    "codim",
    "homogeneous",
    "n_within_source",
    "basis",
    "representative",
    "representative_text",
    "overlap_candidate",
    "note",
];

fn basis_str(b: Option<Basis>) -> &'static str {
    match b {
        Some(Basis::DualH) => "h",
        Some(Basis::Epsilon) => "e",
        None => "",
    }
}

pub fn export(records: &[FoliationRecord], format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => serde_json::to_string_pretty(records).map_err(|e| Error::Parse(e.to_string())),
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Parse(e.to_string());
            w.write_record(CSV_HEADER).map_err(io)?;
            for r in records {
                let rep: Vec<String> = r.representative.iter().map(|c| c.to_string()).collect();
                w.write_record([
                    r.source.clone(),
                    r.kind.as_str().to_string(),
                    r.n.to_string(),
                    r.codim.to_string(),
                    r.homogeneous.as_str().to_string(),
                    r.n_within_source.map(|x| x.to_string()).unwrap_or_default(),
                    basis_str(r.basis).to_string(),
                    rep.join(";"),
                    r.representative_text.clone(),
                    r.overlap_candidate.to_string(),
                    r.note.clone(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

pub fn parse(text: &str, format: ExportFormat) -> Result<Vec<FoliationRecord>> {
    match format {
        ExportFormat::Json => serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string())),
        ExportFormat::Csv => parse_csv(text),
    }
}

fn parse_csv(text: &str) -> Result<Vec<FoliationRecord>> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let perr = |e: &dyn fmt::Display| Error::Parse(e.to_string());
    let header = rd.headers().map_err(|e| perr(&e))?;
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Parse("unexpected CSV header".into()));
    }
    let mut out = Vec::new();
    for row in rd.records() {
        let row = row.map_err(|e| perr(&e))?;
        let f = |i: usize| row.get(i).unwrap_or("");
        let basis = match f(6) {
            "h" => Some(Basis::DualH),
            "e" => Some(Basis::Epsilon),
            "" => None,
            other => return Err(Error::Parse(format!("bad basis `{other}`"))),
        };
        let representative = if f(7).is_empty() {
            Vec::new()
        } else {
            f(7).split(';').map(|c| c.parse::<Rational64>().map_err(|e| perr(&e))).collect::<Result<_>>()?
        };
        let n_within_source = if f(5).is_empty() { None } else { Some(f(5).parse().map_err(|e| perr(&e))?) };
        out.push(FoliationRecord {
            source: f(0).to_string(),
            kind: f(1).parse()?,
            n: f(2).parse().map_err(|e| perr(&e))?,
            codim: f(3).parse().map_err(|e| perr(&e))?,
            homogeneous: f(4).parse()?,
            n_within_source,
            basis,
            representative,
            representative_text: f(8).to_string(),
            overlap_candidate: f(9).parse().map_err(|e| perr(&e))?,
            note: f(10).to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_codim_values() {
        assert_eq!(max_codim(1), 1);
        assert_eq!(max_codim(3), 1);
        assert_eq!(max_codim(7), 3);
    }

    #[test]
    fn empty_export() {
        assert_eq!(export(&[], ExportFormat::Json).unwrap(), "[]");
        assert_eq!(export(&[], ExportFormat::Csv).unwrap().trim_end(), CSV_HEADER.join(","));
    }
}
