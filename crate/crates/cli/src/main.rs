//! `stringmult`: invariant dimensions along strings of representations,
//! their generating functions, and reconstruction from sample windows.
//!
//! Exit codes: 0 success, 2 input error, 3 internal contract violation,
//! 4 window condition violated.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use stringmult::descriptor::{
    from_json, FamilyDescriptor, GfDescriptor, GroupDescriptor, StringDescriptor, SubgroupDescriptor,
    WindowDescriptor,
};
use stringmult::genfun::{genfun_checked, multiplicity_sequence_with, StringSpec};
use stringmult::reconstruct::{reconstruct_string, strong_multiplicity_test, SampleWindow, WindowReport};
use stringmult::repthy::weyl_dimension;
use stringmult::rootsys::{Series, DEFAULT_RANK_CAP};
use stringmult::spherical::{family_equivalence_test, sphere_family, su2_family, FamilyReport, WindowSpec};
use stringmult::subgroup::{Backend, FiniteSubgroupData, SubgroupEvaluator};
use stringmult::{Error, ErrorClass, RootSystemData, StringFamily, Verdict};

#[derive(Parser)]
#[command(name = "stringmult", version, about = "Exact invariant dimensions along strings of representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, global = true, value_enum, default_value = "cr")]
    backend: BackendArg,
    #[arg(long = "rank-cap", global = true, default_value_t = DEFAULT_RANK_CAP)]
    rank_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Cr,
    #[value(name = "weight_sum")]
    WeightSum,
    Both,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Cr => Backend::Cr,
            BackendArg::WeightSum => Backend::WeightSum,
            BackendArg::Both => Backend::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, Weyl group order and ρ of a root system.
    Describe {
        #[arg(long)]
        group: PathBuf,
    },
    /// n_k for k = 0..=kmax along a string.
    Mult {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
        #[arg(long)]
        string: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
    },
    /// Numerator of the generating function over (1 - z^q)^(N+1).
    Genfun {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
        #[arg(long)]
        string: PathBuf,
    },
    /// Solve for the numerator from a sample window and predict n_k.
    Reconstruct {
        #[arg(long)]
        window: PathBuf,
        #[arg(long)]
        kmax: Option<u64>,
    },
    /// Compare two windows, or two subgroups on a string or family.
    Compare {
        #[arg(long)]
        window: Vec<PathBuf>,
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long)]
        subgroup: Vec<PathBuf>,
        #[arg(long)]
        string: Option<PathBuf>,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Check the per-residue sample counts of a window.
    CheckWindow {
        #[arg(long)]
        window: PathBuf,
    },
    /// Equivalence of two subgroups on a built-in or supplied family.
    Spherical {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: Vec<PathBuf>,
        #[arg(long)]
        family: Option<PathBuf>,
        /// Also compare the two sequences directly for k = 0..=kmax.
        #[arg(long)]
        kmax: Option<u64>,
    },
}

struct Failure {
    code: u8,
    message: String,
    output: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.class() {
            ErrorClass::Input => 2,
            ErrorClass::Contract => 3,
            ErrorClass::Window => 4,
        };
        Failure {
            code,
            message: e.to_string(),
            output: None,
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: 2,
        message,
        output: None,
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path, rank_cap: usize) -> CliResult<RootSystemData> {
    Ok(read::<GroupDescriptor>(path)?.build(rank_cap)?)
}

fn load_subgroup(path: &Path, rs: &RootSystemData) -> CliResult<FiniteSubgroupData> {
    let g = read::<SubgroupDescriptor>(path)?.build(rs.rank())?;
    if g.uses_relaxed_modulus() {
        eprintln!(
            "warning: {}: modulus q = {} is not a multiple of |Γ| = {}",
            path.display(),
            g.modulus(),
            g.order()
        );
    }
    Ok(g)
}

fn load_string(path: &Path, rs: &RootSystemData) -> CliResult<StringSpec> {
    let s = read::<StringDescriptor>(path)?.build()?;
    s.check(rs)?;
    Ok(s)
}

fn load_family(path: &Path, rs: &RootSystemData) -> CliResult<StringFamily> {
    let f = read::<FamilyDescriptor>(path)?.build()?;
    f.check(rs)?;
    Ok(f)
}

fn two<T>(items: Vec<T>, what: &str) -> CliResult<(T, T)> {
    let n = items.len();
    let mut it = items.into_iter();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(input_error(format!("expected exactly two --{what} arguments, got {n}"))),
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|b| b.to_string()).collect()
}

fn tsv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}

fn render<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serialisable");
            s.push('\n');
            s
        }
        Format::Tsv => table(),
    }
}

fn window_json(r: &WindowReport) -> Value {
    json!({
        "satisfied": r.satisfied(),
        "q": r.q,
        "needed": r.needed,
        "counts": r.counts,
        "failing": r.failing,
    })
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::EquivalentOnString => json!({ "verdict": v.label() }),
        Verdict::DistinguishedAt { k } => json!({ "verdict": v.label(), "k": k }),
        Verdict::InsufficientWindow { first, second } => {
            json!({ "verdict": v.label(), "failing": [first, second] })
        }
    }
}

fn family_json(r: &FamilyReport) -> Value {
    json!({
        "label": r.label,
        "q": r.q,
        "N": r.big_n,
        "equivalent": r.equivalent(),
        "strings": r.strings.iter().map(|s| {
            let mut v = verdict_json(&s.verdict);
            let obj = v.as_object_mut().unwrap();
            obj.insert("direction".into(), json!(s.string.direction.coords()));
            obj.insert("base".into(), json!(s.string.base.coords()));
            obj.insert("window".into(), json!(s.window));
            obj.insert("first".into(), json!(strings(s.first.numerator())));
            obj.insert("second".into(), json!(strings(s.second.numerator())));
            v
        }).collect::<Vec<_>>(),
    })
}

fn family_tsv(r: &FamilyReport) -> String {
    tsv(
        &["string", "direction", "base", "verdict", "k"],
        r.strings.iter().enumerate().map(|(i, s)| {
            let k = match s.verdict {
                Verdict::DistinguishedAt { k } => k.to_string(),
                _ => String::new(),
            };
            vec![
                i.to_string(),
                s.string.direction.to_string(),
                s.string.base.to_string(),
                s.verdict.label().to_string(),
                k,
            ]
        }),
    )
}

fn describe(cli: &Cli, group: &Path) -> CliResult<String> {
    let rs = load_group(group, cli.rank_cap)?;
    let roots: Vec<&[i64]> = rs.positive_roots().iter().map(|r| r.coords()).collect();
    let value = json!({
        "series": rs.series().to_string(),
        "rank": rs.rank(),
        "N": rs.num_positive_roots(),
        "weyl_order": rs.weyl_order(),
        "rho": rs.rho().coords(),
        "cartan": rs.cartan(),
        "positive_roots": roots,
    });
    Ok(render(cli.format, &value, || {
        tsv(
            &["index", "root"],
            rs.positive_roots()
                .iter()
                .enumerate()
                .map(|(i, r)| vec![i.to_string(), r.to_string()]),
        )
    }))
}

fn mult(cli: &Cli, group: &Path, subgroup: &Path, string: &Path, kmax: u64) -> CliResult<String> {
    let rs = load_group(group, cli.rank_cap)?;
    let gamma = load_subgroup(subgroup, &rs)?;
    let s = load_string(string, &rs)?;
    let seq = multiplicity_sequence_with(&rs, &s, &gamma, kmax, cli.backend.into())?;
    let dims = (0..=kmax)
        .map(|k| weyl_dimension(&rs, &s.member(k)))
        .collect::<stringmult::Result<Vec<_>>>()?;
    let value = json!({
        "q": gamma.modulus(),
        "order": gamma.order(),
        "backend": Backend::from(cli.backend).to_string(),
        "values": seq.iter().zip(&dims).enumerate().map(|(k, (n, d))| json!({
            "k": k,
            "n": n.to_string(),
            "dim": d.to_string(),
        })).collect::<Vec<_>>(),
    });
    Ok(render(cli.format, &value, || {
        tsv(
            &["k", "n", "dim"],
            seq.iter()
                .zip(&dims)
                .enumerate()
                .map(|(k, (n, d))| vec![k.to_string(), n.to_string(), d.to_string()]),
        )
    }))
}

fn genfun(cli: &Cli, group: &Path, subgroup: &Path, string: &Path) -> CliResult<String> {
    let rs = load_group(group, cli.rank_cap)?;
    let gamma = load_subgroup(subgroup, &rs)?;
    let s = load_string(string, &rs)?;
    let gf = genfun_checked(&rs, &s, &gamma, cli.backend.into())?;
    let value = GfDescriptor::from_gf(&gf);
    Ok(render(cli.format, &value, || {
        tsv(
            &["degree", "coefficient"],
            gf.numerator()
                .iter()
                .enumerate()
                .map(|(d, b)| vec![d.to_string(), b.to_string()]),
        )
    }))
}

fn reconstruct(cli: &Cli, window: &Path, kmax: Option<u64>) -> CliResult<String> {
    let w: SampleWindow = read::<WindowDescriptor>(window)?.build()?;
    let report = reconstruct_string(&w)?;
    let gf = &report.gf;
    let kmax = kmax.unwrap_or_else(|| w.indices().max().unwrap_or(0) + w.q);
    let predictions: Vec<Value> = (0..=kmax)
        .map(|k| {
            let cert = report.certificate(k);
            json!({
                "k": k,
                "n": gf.coefficient(k).to_string(),
                "certificate": cert.terms.iter().map(|(s, c)| json!({
                    "sample": s,
                    "coefficient": c.to_string(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "q": gf.q(),
        "N": gf.big_n(),
        "numerator": strings(gf.numerator()),
        "verified_samples": report.verified_count(),
        "predictions": predictions,
    });
    Ok(render(cli.format, &value, || {
        tsv(
            &["k", "n", "sampled"],
            (0..=kmax).map(|k| {
                vec![
                    k.to_string(),
                    gf.coefficient(k).to_string(),
                    w.samples.get(&k).map(|v| v.to_string()).unwrap_or_default(),
                ]
            }),
        )
    }))
}

fn compare(
    cli: &Cli,
    windows: &[PathBuf],
    group: Option<&Path>,
    subgroups: &[PathBuf],
    string: Option<&Path>,
    family: Option<&Path>,
) -> CliResult<String> {
    if !windows.is_empty() {
        if group.is_some() || !subgroups.is_empty() || string.is_some() || family.is_some() {
            return Err(input_error("compare takes either two --window files or a subgroup configuration".into()));
        }
        let (a, b) = two(windows.to_vec(), "window")?;
        let wa = read::<WindowDescriptor>(&a)?.build()?;
        let wb = read::<WindowDescriptor>(&b)?.build()?;
        let verdict = strong_multiplicity_test(&wa, &wb)?;
        let value = verdict_json(&verdict);
        let out = render(cli.format, &value, || {
            let k = match verdict {
                Verdict::DistinguishedAt { k } => k.to_string(),
                _ => String::new(),
            };
            tsv(&["verdict", "k"], [vec![verdict.label().to_string(), k]])
        });
        return window_outcome(&verdict, out);
    }
    let group = group.ok_or_else(|| input_error("compare needs --group or two --window files".into()))?;
    let rs = load_group(group, cli.rank_cap)?;
    let (a, b) = two(subgroups.to_vec(), "subgroup")?;
    let (ga, gb) = (load_subgroup(&a, &rs)?, load_subgroup(&b, &rs)?);
    let fam = match (string, family) {
        (Some(s), None) => StringFamily::new("string", vec![load_string(s, &rs)?])?,
        (None, Some(f)) => load_family(f, &rs)?,
        _ => return Err(input_error("compare needs exactly one of --string or --family".into())),
    };
    let report = family_equivalence_test(&rs, &fam, &ga, &gb, &WindowSpec::Default, cli.backend.into())?;
    Ok(render(cli.format, &family_json(&report), || family_tsv(&report)))
}

fn window_outcome(verdict: &Verdict, out: String) -> CliResult<String> {
    if let Verdict::InsufficientWindow { .. } = verdict {
        return Err(Failure {
            code: 4,
            message: "window condition violated".into(),
            output: Some(out),
        });
    }
    Ok(out)
}

fn check_window(cli: &Cli, window: &Path) -> CliResult<String> {
    let w = read::<WindowDescriptor>(window)?.build()?;
    let report = w.condition();
    let out = render(cli.format, &window_json(&report), || {
        tsv(
            &["residue", "count", "needed"],
            report
                .counts
                .iter()
                .enumerate()
                .map(|(j, c)| vec![j.to_string(), c.to_string(), report.needed.to_string()]),
        )
    });
    if report.satisfied() {
        Ok(out)
    } else {
        Err(Failure {
            code: 4,
            message: format!("window condition violated: residues {:?}", report.failing),
            output: Some(out),
        })
    }
}

fn spherical(cli: &Cli, group: &Path, subgroups: &[PathBuf], family: Option<&Path>, kmax: Option<u64>) -> CliResult<String> {
    let rs = load_group(group, cli.rank_cap)?;
    let (a, b) = two(subgroups.to_vec(), "subgroup")?;
    let (ga, gb) = (load_subgroup(&a, &rs)?, load_subgroup(&b, &rs)?);
    let fam = match family {
        Some(f) => load_family(f, &rs)?,
        None => match (rs.series(), rs.rank()) {
            (Series::A, 1) => su2_family(),
            (Series::B, _) | (Series::D, _) => sphere_family(&rs)?,
            _ => {
                return Err(input_error(format!(
                    "no built-in family for {}{}; pass --family",
                    rs.series(),
                    rs.rank()
                )))
            }
        },
    };
    let backend: Backend = cli.backend.into();
    let report = family_equivalence_test(&rs, &fam, &ga, &gb, &WindowSpec::Default, backend)?;
    let mut value = family_json(&report);
    if let Some(kmax) = kmax {
        let ea = SubgroupEvaluator::new(&rs, &ga, backend)?;
        let eb = SubgroupEvaluator::new(&rs, &gb, backend)?;
        let mut disagreements = BTreeSet::new();
        for (i, s) in fam.strings.iter().enumerate() {
            for k in 0..=kmax {
                let m = s.member(k);
                if ea.invariant_dimension(&m)? != eb.invariant_dimension(&m)? {
                    disagreements.insert((i, k));
                }
            }
        }
        let obj = value.as_object_mut().unwrap();
        obj.insert("direct_check_kmax".into(), json!(kmax));
        obj.insert(
            "direct_disagreements".into(),
            json!(disagreements.iter().map(|(i, k)| json!([i, k])).collect::<Vec<_>>()),
        );
    }
    Ok(render(cli.format, &value, || family_tsv(&report)))
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Describe { group } => describe(cli, group),
        Command::Mult {
            group,
            subgroup,
            string,
            kmax,
        } => mult(cli, group, subgroup, string, *kmax),
        Command::Genfun {
            group,
            subgroup,
            string,
        } => genfun(cli, group, subgroup, string),
        Command::Reconstruct { window, kmax } => reconstruct(cli, window, *kmax),
        Command::Compare {
            window,
            group,
            subgroup,
            string,
            family,
        } => compare(
            cli,
            window,
            group.as_deref(),
            subgroup,
            string.as_deref(),
            family.as_deref(),
        ),
        Command::CheckWindow { window } => check_window(cli, window),
        Command::Spherical {
            group,
            subgroup,
            family,
            kmax,
        } => spherical(cli, group, subgroup, family.as_deref(), *kmax),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = f.output {
                print!("{out}");
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
