//! Batch runs over `gtklr`: one [`RunConfig`] in, an exit status and a
//! serialized report out.

mod table;

use std::collections::BTreeSet;

use clap::{Parser, ValueEnum};
use gtklr::cyclotomic::{
    cyclotomic_block, special_p, verify_branch, verify_cyclotomic_conjecture, verify_projection_identity, BlockReport,
    BranchReport, ConjectureReport, ProjectionReport, Sign,
};
use gtklr::klr::{graded_dim_free, KlrAlgebra};
use gtklr::patterns::{
    admissible_maps, branch_dim_check, enumerate_complete_patterns, enumerate_tau, map_to_tau, sub_weyl_dim,
    tau_to_map, CompletePattern, LatticeMap,
};
use gtklr::qmodule::{seq_of, Shapovalov};
use gtklr::{root_datum, DynkinLabels, Error, LieType, QPoly, Rational, RootDatum, WeightCoords};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Complete Gelfand-Tsetlin patterns of λ.
    Patterns,
    /// Branching to rank n−1 with dimensions.
    Branch,
    /// τ(λ) with the admissible map of each pair.
    Tau,
    /// Graded dimension of R(β), or of R^λ(β) when a weight is given.
    KlrDim,
    /// gdim e(j′)R^λe(j) against the q-Shapovalov form.
    VerifyKkw,
    /// Projection identities for every legal (±i, j, r).
    VerifyProjection,
    /// Branching checks at the level of cyclotomic blocks.
    VerifyBranch,
    /// Projective classes of R^λ(β) against weight multiplicities.
    VerifyConjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Weights on the command line are doubled ε-coordinates: `--weight 1,1`
/// is (1/2, 1/2). `--labels` takes Dynkin labels λ̄ instead.
#[derive(Clone, Debug, Parser)]
#[command(name = "gtklr", version, about = "Gelfand-Tsetlin patterns and KLR algebras for types B, C, D")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// B, C or D.
    pub lie_type: LieType,
    /// Rank n.
    pub rank: usize,
    /// Highest weight as doubled ε-coordinates, e.g. 2,0 for (1,0).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "labels")]
    pub weight: Option<Vec<i64>>,
    /// Highest weight as Dynkin labels.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<i64>>,
    /// β in simple-root coordinates (klr-dim).
    #[arg(long, value_delimiter = ',')]
    pub beta: Option<Vec<i64>>,
    /// Strand (height) cap for verify-kkw, verify-branch and verify-conjecture.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_strands: Option<u32>,
    /// Degree window ±max for klr-dim of the free algebra.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_degree: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled runs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// verify-kkw: check this many random (j, j′) pairs instead of all.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub samples: Option<u32>,
    /// verify-projection: only p_{±i}, given as a signed index (e.g. -3).
    #[arg(long, allow_negative_numbers = true)]
    pub index: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Falsified,
    Usage,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Falsified => 1,
            Status::Usage => 2,
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub output: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub nu: Vec<i64>,
    pub mu: Vec<i64>,
    pub dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchOutput {
    pub lie_type: LieType,
    pub rank: usize,
    pub weight: Vec<i64>,
    pub dim: String,
    pub summands: Vec<Summand>,
    pub total: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauRow {
    pub nu: Vec<i64>,
    pub mu: Vec<i64>,
    pub map: LatticeMap,
    pub round_trip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauOutput {
    pub lie_type: LieType,
    pub rank: usize,
    pub weight: Vec<i64>,
    pub rows: Vec<TauRow>,
    /// The maps form exactly the admissible set.
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeDimOutput {
    pub lie_type: LieType,
    pub rank: usize,
    pub beta: Vec<i64>,
    pub min_degree: i64,
    pub max_degree: i64,
    /// (degree, number of basis symbols).
    pub gdim: Vec<(i64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KlrDimOutput {
    Cyclotomic(BlockReport),
    Free(FreeDimOutput),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KkwMismatch {
    pub j: Vec<usize>,
    pub j_prime: Vec<usize>,
    pub hom: String,
    pub shapovalov: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KkwOutput {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda_bar: Vec<i64>,
    pub max_strands: u32,
    /// Set when pairs were sampled.
    pub seed: Option<u64>,
    pub cases: usize,
    pub mismatches: Vec<KkwMismatch>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionOutput {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda_bar: Vec<i64>,
    pub cases: Vec<ProjectionReport>,
    pub failures: usize,
    pub ok: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: String,
}

enum Failure {
    Usage(String),
    /// A computation contradicted the expected finiteness of a quotient.
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CutoffExceeded { .. } => Failure::Falsified(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn resolve_weight(dat: &RootDatum, cfg: &RunConfig) -> Result<Option<(WeightCoords, Vec<i64>)>, Failure> {
    let w = match (&cfg.weight, &cfg.labels) {
        (Some(twice), _) => dat.weight(twice.clone())?,
        (None, Some(l)) => dat.from_dynkin_labels(&DynkinLabels { labels: l.clone() })?,
        (None, None) => return Ok(None),
    };
    dat.check_dominant(&w)?;
    let labels = dat.to_dynkin_labels(&w)?.labels;
    Ok(Some((w, labels)))
}

fn require_weight(dat: &RootDatum, cfg: &RunConfig) -> Result<(WeightCoords, Vec<i64>), Failure> {
    resolve_weight(dat, cfg)?.ok_or_else(|| Failure::Usage("this command needs --weight or --labels".into()))
}

fn show_poly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms().map(|(e, c)| format!("{c}q^{e}")).collect::<Vec<_>>().join(" + ")
}

enum Report {
    Patterns(Vec<CompletePattern>),
    Branch(BranchOutput),
    Tau(TauOutput),
    KlrDim(KlrDimOutput),
    Kkw(KkwOutput),
    Projection(ProjectionOutput),
    VerifyBranch(BranchReport),
    Conjecture(ConjectureReport),
}

impl Report {
    fn passed(&self) -> bool {
        match self {
            Report::Patterns(_) | Report::KlrDim(_) => true,
            Report::Branch(b) => b.equal,
            Report::Tau(t) => t.bijective,
            Report::Kkw(k) => k.ok,
            Report::Projection(p) => p.ok,
            Report::VerifyBranch(b) => b.ok,
            Report::Conjecture(c) => c.ok,
        }
    }

    fn json(&self) -> String {
        let s = match self {
            Report::Patterns(x) => serde_json::to_string_pretty(x),
            Report::Branch(x) => serde_json::to_string_pretty(x),
            Report::Tau(x) => serde_json::to_string_pretty(x),
            Report::KlrDim(x) => serde_json::to_string_pretty(x),
            Report::Kkw(x) => serde_json::to_string_pretty(x),
            Report::Projection(x) => serde_json::to_string_pretty(x),
            Report::VerifyBranch(x) => serde_json::to_string_pretty(x),
            Report::Conjecture(x) => serde_json::to_string_pretty(x),
        };
        s.expect("reports serialize")
    }

    fn table(&self) -> String {
        match self {
            Report::Patterns(x) => table::patterns(x),
            Report::Branch(x) => table::branch(x),
            Report::Tau(x) => table::tau(x),
            Report::KlrDim(x) => table::klr_dim(x),
            Report::Kkw(x) => table::kkw(x),
            Report::Projection(x) => table::projection(x),
            Report::VerifyBranch(x) => table::verify_branch(x),
            Report::Conjecture(x) => table::conjecture(x),
        }
    }
}

fn compute(cfg: &RunConfig) -> Result<Report, Failure> {
    let lt = cfg.lie_type;
    let n = cfg.rank;
    let dat = root_datum(lt, n)?;
    if lt == LieType::A {
        return Err(Error::Unsupported(lt, n).into());
    }
    let report = match cfg.command {
        Command::Patterns => {
            let (w, _) = require_weight(&dat, cfg)?;
            Report::Patterns(enumerate_complete_patterns(&w)?)
        }
        Command::Branch => {
            let (w, _) = require_weight(&dat, cfg)?;
            let check = branch_dim_check(&w)?;
            let mut summands = Vec::new();
            for p in enumerate_tau(&w)? {
                let dim = sub_weyl_dim(lt, n - 1, &p.mu)?.to_string();
                summands.push(Summand { nu: p.nu, mu: p.mu, dim });
            }
            Report::Branch(BranchOutput {
                lie_type: lt,
                rank: n,
                weight: w.twice_coords.clone(),
                dim: check.lhs.to_string(),
                summands,
                total: check.rhs.to_string(),
                equal: check.equal,
            })
        }
        Command::Tau => {
            let (w, _) = require_weight(&dat, cfg)?;
            let lam = &w.twice_coords;
            let mut rows = Vec::new();
            for p in enumerate_tau(&w)? {
                let map = tau_to_map(lt, &p, lam)?;
                let round_trip = map_to_tau(lt, &map, lam).ok().as_ref() == Some(&p);
                rows.push(TauRow { nu: p.nu, mu: p.mu, map, round_trip });
            }
            let maps: BTreeSet<&LatticeMap> = rows.iter().map(|r| &r.map).collect();
            let admissible: BTreeSet<LatticeMap> = admissible_maps(lt, lam).into_iter().collect();
            let bijective = rows.iter().all(|r| r.round_trip)
                && maps.len() == rows.len()
                && maps.into_iter().cloned().collect::<BTreeSet<_>>() == admissible;
            Report::Tau(TauOutput { lie_type: lt, rank: n, weight: lam.clone(), rows, bijective })
        }
        Command::KlrDim => {
            let beta = cfg.beta.clone().ok_or_else(|| Failure::Usage("klr-dim needs --beta".into()))?;
            if beta.len() != n || beta.iter().any(|&b| b < 0) {
                return Err(Failure::Usage(format!("--beta needs {n} non-negative entries")));
            }
            match resolve_weight(&dat, cfg)? {
                Some((_, labels)) => {
                    Report::KlrDim(KlrDimOutput::Cyclotomic(cyclotomic_block(&dat, &labels, &beta)?.report()))
                }
                None => {
                    let m = cfg.max_degree as i64;
                    let gdim = graded_dim_free(&dat, &beta, -m, m).into_iter().collect();
                    Report::KlrDim(KlrDimOutput::Free(FreeDimOutput {
                        lie_type: lt,
                        rank: n,
                        beta,
                        min_degree: -m,
                        max_degree: m,
                        gdim,
                    }))
                }
            }
        }
        Command::VerifyKkw => {
            let (_, labels) = require_weight(&dat, cfg)?;
            Report::Kkw(kkw(&dat, &labels, cfg))
        }
        Command::VerifyProjection => {
            let (_, labels) = require_weight(&dat, cfg)?;
            let mut cases = Vec::new();
            for sign in [Sign::Minus, Sign::Plus] {
                for i in 1..=n {
                    let signed = if sign == Sign::Minus { -(i as i64) } else { i as i64 };
                    if cfg.index.is_some_and(|x| x != signed) || special_p(lt, n, sign, i).is_err() {
                        continue;
                    }
                    for j in 2..=n {
                        for r in 0..=labels[j - 1] {
                            cases.push(verify_projection_identity(lt, n, &labels, sign, i, j, r)?);
                        }
                    }
                }
            }
            if let Some(x) = cfg.index {
                let sign = if x < 0 { Sign::Minus } else { Sign::Plus };
                special_p(lt, n, sign, x.unsigned_abs() as usize)?;
            }
            let failures = cases.iter().filter(|c| !c.ok).count();
            Report::Projection(ProjectionOutput {
                lie_type: lt,
                rank: n,
                lambda_bar: labels,
                cases,
                failures,
                ok: failures == 0,
            })
        }
        Command::VerifyBranch => {
            let (_, labels) = require_weight(&dat, cfg)?;
            let cap = cfg.max_strands.unwrap_or(4) as usize;
            Report::VerifyBranch(verify_branch(lt, n, &labels, cap)?)
        }
        Command::VerifyConjecture => {
            let (_, labels) = require_weight(&dat, cfg)?;
            let cap = cfg.max_strands.unwrap_or(4) as usize;
            Report::Conjecture(verify_cyclotomic_conjecture(lt, n, &labels, cap)?)
        }
    };
    Ok(report)
}

fn kkw(dat: &RootDatum, labels: &[i64], cfg: &RunConfig) -> KkwOutput {
    let n = dat.rank;
    let max = cfg.max_strands.unwrap_or(3);
    let alg = KlrAlgebra::new(dat);
    let form = Shapovalov::<Rational>::new(dat, labels);
    let mut pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for beta in betas(n, max as i64) {
        let seqs = seq_of(&beta);
        for j in &seqs {
            for jp in &seqs {
                pairs.push((j.clone(), jp.clone()));
            }
        }
    }
    let seed = cfg.samples.map(|s| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        pairs = (0..s).map(|_| pairs[rng.gen_range(0..pairs.len())].clone()).collect();
        cfg.seed
    });
    let u8s = |s: &[usize]| s.iter().map(|&x| x as u8).collect::<Vec<u8>>();
    let mut mismatches = Vec::new();
    for (j, jp) in &pairs {
        let hom = gtklr::cyclotomic::pair_block(&alg, labels, &u8s(jp), &u8s(j)).expect("labels are in range").gdim;
        let shap = form.pair(j, jp);
        if hom != shap {
            mismatches.push(KkwMismatch {
                j: j.clone(),
                j_prime: jp.clone(),
                hom: show_poly(&hom),
                shapovalov: show_poly(&shap),
            });
        }
    }
    KkwOutput {
        lie_type: dat.lie_type,
        rank: n,
        lambda_bar: labels.to_vec(),
        max_strands: max,
        seed,
        cases: pairs.len(),
        ok: mismatches.is_empty(),
        mismatches,
    }
}

/// Nonzero β with 1 ≤ height ≤ `max`, in lexicographic order.
fn betas(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|b| (1..=max).contains(&b.iter().sum::<i64>()));
    out
}

/// Runs one configuration. The output is deterministic given `cfg`.
pub fn run(cfg: &RunConfig) -> Outcome {
    match compute(cfg) {
        Ok(report) => {
            let status = if report.passed() { Status::Pass } else { Status::Falsified };
            let output = match cfg.format {
                Format::Json => report.json(),
                Format::Table => report.table(),
            };
            Outcome { status, output }
        }
        Err(Failure::Falsified(msg)) => Outcome {
            status: Status::Falsified,
            output: serde_json::to_string_pretty(&ErrorOutput { error: msg }).expect("serializes"),
        },
        Err(Failure::Usage(msg)) => Outcome { status: Status::Usage, output: msg },
    }
}
