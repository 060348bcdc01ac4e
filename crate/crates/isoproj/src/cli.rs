//! Command-line front end: `space`, `fkm`, `census` and `check`.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::census::{self, all_homogeneous, enumerate_foliations, export, homogeneity, ExportFormat, Homogeneous};
use crate::error::{Error, Result};
use crate::fkmproj::{self, clifford_family, Split};
use crate::golden::{check_tables, CheckOptions};
use crate::symcat::{build_extended_vogan, dims, Label, SymmetricPairRecord};
use crate::voganproj::{count_classes, diagram_automorphisms, induced_map};

#[derive(Debug, Parser)]
#[command(name = "isoproj", version, about = "Isoparametric foliations on complex projective spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the projections coming from one symmetric pair.
    Space {
        /// Cartan label, e.g. "E II" or "A III".
        #[arg(long)]
        label: String,
        /// Rank of g (required unless the label fixes it).
        #[arg(long)]
        p: Option<usize>,
        /// Painted node (required unless the label fixes it).
        #[arg(long)]
        nu: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classify the projections coming from one FKM family.
    Fkm {
        #[arg(long)]
        m: usize,
        /// Multiplicity for m not divisible by 4.
        #[arg(long, conflicts_with_all = ["kplus", "kminus"])]
        k: Option<usize>,
        /// k₊ for m divisible by 4.
        #[arg(long, requires = "kminus")]
        kplus: Option<usize>,
        /// k₋ for m divisible by 4.
        #[arg(long, requires = "kplus")]
        kminus: Option<usize>,
        /// Half-integer search bound for J∩C̄.
        #[arg(long, default_value_t = fkmproj::DEFAULT_BOUND)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List every irreducible isoparametric foliation class on CP^n.
    Census {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Verify the computations against the tabulated reference data.
    Check {
        /// Run the table verification.
        #[arg(long)]
        tables: bool,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        /// Largest m in the FKM sweep.
        #[arg(long, default_value_t = 18)]
        fkm_max_m: usize,
        /// Largest torus dimension p+q in the FKM sweep.
        #[arg(long, default_value_t = 9)]
        fkm_max_dim: usize,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                eprint!("{}", e.render());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => 1,
                _ => 2,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Invariant(format!("write failed: {e}"))
}

fn dispatch<W: Write>(cmd: Command, out: &mut W) -> Result<i32> {
    match cmd {
        Command::Space { label, p, nu, format } => space(&label, p, nu, format, out),
        Command::Fkm { m, k, kplus, kminus, bound, format } => {
            let split = match (k, kplus, kminus) {
                (Some(k), None, None) => Split::K(k),
                (None, Some(plus), Some(minus)) => Split::PlusMinus { plus, minus },
                _ => return Err(Error::SplitShape("give either --k or both --kplus and --kminus".into())),
            };
            fkm(m, split, bound, format, out)
        }
        Command::Census { n, format } => census_cmd(n, format, out),
        Command::Check { tables, max_rank, bound, fkm_max_m, fkm_max_dim, verbose } => {
            if !tables {
                return Err(Error::IllegalParameters {
                    label: "check".into(),
                    reason: "nothing to check; pass --tables".into(),
                });
            }
            let opts = CheckOptions { max_rank, bound, fkm_max_m, fkm_max_dim, ..CheckOptions::default() };
            check(&opts, verbose, out)
        }
    }
}

fn record_for(label: &str, p: Option<usize>, nu: Option<usize>) -> Result<SymmetricPairRecord> {
    let label: Label = label.parse()?;
    let (p, nu) = match (label.fixed(), p, nu) {
        (Some((fp, fnu)), None, None) => (fp, fnu),
        (Some((fp, fnu)), p, nu) if p.unwrap_or(fp) == fp && nu.unwrap_or(fnu) == fnu => (fp, fnu),
        (Some(_), _, _) => {
            return Err(Error::IllegalParameters { label: label.name().into(), reason: "p and ν are fixed".into() })
        }
        (None, Some(p), Some(nu)) => (p, nu),
        (None, _, _) => {
            return Err(Error::IllegalParameters {
                label: label.name().into(),
                reason: format!("needs --p and --nu ({})", label.constraint()),
            })
        }
    };
    SymmetricPairRecord::new(label, p, nu)
}

fn space<W: Write>(label: &str, p: Option<usize>, nu: Option<usize>, format: Format, out: &mut W) -> Result<i32> {
    let rec = record_for(label, p, nu)?;
    let d = dims(&rec);
    let count = count_classes(&rec)?;
    let auts = diagram_automorphisms(&build_extended_vogan(&rec));
    let mut gens = Vec::new();
    for a in &auts {
        gens.push((a.cycles(), induced_map(&rec, a)?.matrix));
    }
    let mut orbit_rows = Vec::new();
    for o in &count.orbits {
        let rep = &count.points[o[0]];
        let members: Vec<String> = o.iter().map(|&i| count.points[i].h_combination()).collect();
        orbit_rows.push((rep.h_combination(), members, homogeneity(&rec, rep)?));
    }
    match format {
        Format::Json => {
            let v = json!({
                "name": rec.name(),
                "cartan_type": rec.cartan_type.to_string(),
                "p": rec.p,
                "nu": rec.nu,
                "hermitian": rec.hermitian,
                "mu": rec.mu.coords(),
                "lambda": rec.lambda_nc.coords(),
                "dim_p": d.dim_p,
                "rank": d.rank,
                "n": d.n,
                "codim": d.codim,
                "duplicate_of": rec.duplicate_of,
                "admissible": count.points.iter().map(|t| t.h_combination()).collect::<Vec<_>>(),
                "automorphisms": gens.iter().map(|(c, m)| json!({"cycles": c, "matrix": m.rows()})).collect::<Vec<_>>(),
                "orbits": orbit_rows.iter().map(|(r, m, h)| json!({"representative": r, "members": m, "homogeneous": h})).collect::<Vec<_>>(),
                "N": count.n,
                "group_order": count.group_order,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?)
                .map_err(io)?;
        }
        Format::Csv => return Err(Error::UnknownFormat("csv (space supports table and json)".into())),
        Format::Table => {
            writeln!(
                out,
                "{}  type {}  {}",
                rec.name(),
                rec.cartan_type,
                if rec.hermitian { "Hermitian" } else { "non-Hermitian" }
            )
            .map_err(io)?;
            if let Some(dup) = &rec.duplicate_of {
                writeln!(out, "same space as {dup}").map_err(io)?;
            }
            writeln!(out, "mu {:?}  lambda {:?}", rec.mu.coords(), rec.lambda_nc.coords()).map_err(io)?;
            writeln!(out, "dim p {}  rank {}  CP^{}  codim {}", d.dim_p, d.rank, d.n, d.codim).map_err(io)?;
            let pts: Vec<String> = count.points.iter().map(|t| t.h_combination()).collect();
            writeln!(out, "J∩C̄: {{{}}}", pts.join(", ")).map_err(io)?;
            writeln!(out, "diagram automorphisms ({}):", auts.len()).map_err(io)?;
            for (c, m) in &gens {
                writeln!(out, "  {c}  {:?}", m.rows()).map_err(io)?;
            }
            writeln!(out, "orbits (group order {}):", count.group_order).map_err(io)?;
            for (r, m, h) in &orbit_rows {
                let flag = if *h { "homogeneous" } else { "inhomogeneous" };
                writeln!(out, "  {r}  [{}]  {flag}", m.join(", ")).map_err(io)?;
            }
            writeln!(out, "N={}", count.n).map_err(io)?;
        }
    }
    Ok(0)
}

fn fkm<W: Write>(m: usize, split: Split, bound: i64, format: Format, out: &mut W) -> Result<i32> {
    if bound < 1 {
        return Err(Error::IllegalParameters { label: "FKM".into(), reason: "bound must be positive".into() });
    }
    let f = clifford_family(m, split)?;
    f.require_scope()?;
    let pts = fkmproj::admissible_points_fkm_bounded(&f, bound)?;
    if pts != fkmproj::admissible_points_fkm(&f)? {
        return Err(Error::Invariant(format!("{f}: search bound {bound} changes J∩C̄")));
    }
    let count = fkmproj::count_classes_fkm(&f)?;
    let gens = fkmproj::outpm_generators(&f)?;
    let diag = fkmproj::lowest_weight_diagram(&f)?;
    let raw = fkmproj::diagram_automorphism_count(&f)?;
    let real = fkmproj::realizable_automorphisms(&f)?.len();
    let show = |t: &crate::rootsys::TorusPoint| fkmproj::format_point(&f, t);
    let orbits: Vec<Vec<String>> =
        count.orbits.iter().map(|o| o.iter().map(|&i| show(&count.points[i])).collect()).collect();
    let note = if f.empty_block { "empty block treated as even (extrapolation)" } else { "" };
    match format {
        Format::Json => {
            let v = json!({
                "name": f.name(),
                "m": f.m,
                "split": f.split,
                "delta": f.delta,
                "dim_v": f.dim_v,
                "n": f.n,
                "multiplicities": [f.mult.0, f.mult.1],
                "p": f.p,
                "q": f.q(),
                "descriptor": f.descriptor,
                "admissible": count.points.iter().map(show).collect::<Vec<_>>(),
                "generators": gens.iter().map(|g| json!({"name": g.name, "matrix": g.matrix.rows()})).collect::<Vec<_>>(),
                "orbits": orbits,
                "N": count.n,
                "group_order": count.group_order,
                "lowest_weights": diag.black.len(),
                "diagram_automorphisms": raw,
                "realizable_automorphisms": real,
                "note": note,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?)
                .map_err(io)?;
        }
        Format::Csv => return Err(Error::UnknownFormat("csv (fkm supports table and json)".into())),
        Format::Table => {
            writeln!(out, "{}  {}", f.name(), f.descriptor).map_err(io)?;
            writeln!(
                out,
                "delta {}  dim V {}  CP^{}  (m1,m2)=({},{})  p {}  q {}",
                f.delta,
                f.dim_v,
                f.n,
                f.mult.0,
                f.mult.1,
                f.p,
                f.q()
            )
            .map_err(io)?;
            let pts: Vec<String> = count.points.iter().map(show).collect();
            writeln!(out, "J∩C̄: {{{}}}", pts.join(", ")).map_err(io)?;
            writeln!(out, "generators ({}):", gens.len()).map_err(io)?;
            for g in &gens {
                writeln!(out, "  {}  {:?}", g.name, g.matrix.rows()).map_err(io)?;
            }
            writeln!(out, "lowest weights {}  diagram automorphisms {}  realizable {}", diag.black.len(), raw, real)
                .map_err(io)?;
            writeln!(out, "orbits (group order {}):", count.group_order).map_err(io)?;
            for o in &orbits {
                writeln!(out, "  [{}]", o.join(", ")).map_err(io)?;
            }
            writeln!(out, "N={}", count.n).map_err(io)?;
            if !note.is_empty() {
                writeln!(out, "note: {note}").map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn census_cmd<W: Write>(n: u64, format: Format, out: &mut W) -> Result<i32> {
    if n == 0 {
        return Err(Error::IllegalParameters { label: "census".into(), reason: "n must be at least 1".into() });
    }
    let rows = enumerate_foliations(n)?;
    match format {
        Format::Json => write!(out, "{}", export(&rows, ExportFormat::Json)?).map_err(io)?,
        Format::Csv => write!(out, "{}", export(&rows, ExportFormat::Csv)?).map_err(io)?,
        Format::Table => {
            writeln!(out, "CP^{n}: {} classes", rows.len()).map_err(io)?;
            for r in &rows {
                let nn = r.n_within_source.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
                let mut extra = String::new();
                if r.overlap_candidate {
                    extra.push_str("  overlap-candidate");
                }
                if !r.note.is_empty() {
                    extra.push_str(&format!("  ({})", r.note));
                }
                writeln!(
                    out,
                    "  {:28} codim {:2}  N {:>3}  {:8} {}{}",
                    r.source,
                    r.codim,
                    nn,
                    r.homogeneous.as_str(),
                    r.representative_text,
                    extra
                )
                .map_err(io)?;
            }
            let all = all_homogeneous(n);
            let prime = census::is_prime(n + 1);
            writeln!(out, "all_homogeneous={all}  n+1 prime={prime}").map_err(io)?;
            if rows.iter().all(|r| r.homogeneous == Homogeneous::Yes) {
                writeln!(out, "homogeneous-only").map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn check<W: Write>(opts: &CheckOptions, verbose: bool, out: &mut W) -> Result<i32> {
    let lines = check_tables(opts)?;
    let mut sections: Vec<(&str, usize, usize)> = Vec::new();
    for l in &lines {
        match sections.iter_mut().find(|s| s.0 == l.section) {
            Some(s) => {
                s.1 += 1;
                s.2 += usize::from(l.ok);
            }
            None => sections.push((l.section, 1, usize::from(l.ok))),
        }
        if verbose || !l.ok {
            let tag = if l.ok { "ok  " } else { "FAIL" };
            writeln!(out, "{tag} {:24} {:28} {}", l.section, l.name, l.detail).map_err(io)?;
        }
    }
    for (s, total, ok) in &sections {
        writeln!(out, "{s:24} {ok}/{total}").map_err(io)?;
    }
    let failed = lines.iter().filter(|l| !l.ok).count();
    if failed == 0 {
        writeln!(out, "all {} checks passed", lines.len()).map_err(io)?;
        Ok(0)
    } else {
        writeln!(out, "{failed} of {} checks failed", lines.len()).map_err(io)?;
        Ok(1)
    }
}
