//! Plain-text rendering. Rows print as ordinary fractions, so `1/2` is a
//! spin coordinate.

use std::fmt::Write;

use gtklr::cyclotomic::{BranchReport, ConjectureReport};
use gtklr::patterns::{CompletePattern, LatticeMap};

use crate::{BranchOutput, KkwOutput, KlrDimOutput, ProjectionOutput, TauOutput};

fn half(x: i64) -> String {
    if x % 2 == 0 {
        (x / 2).to_string()
    } else {
        format!("{x}/2")
    }
}

fn row(v: &[i64]) -> String {
    format!("({})", v.iter().map(|&x| half(x)).collect::<Vec<_>>().join(", "))
}

fn gdim(terms: &[(i64, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(e, c)| format!("{c}q^{e}")).collect::<Vec<_>>().join(" + ")
}

fn map(m: &LatticeMap) -> String {
    let mut s = String::new();
    if m.c > 0 {
        write!(s, "xi_-1^{} ", m.c).unwrap();
    }
    write!(s, "xi_-{:?},+{:?}", m.minus, m.plus).unwrap();
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn patterns(ps: &[CompletePattern]) -> String {
    let mut s = String::new();
    for (k, p) in ps.iter().enumerate() {
        let rows: Vec<String> = p.rows.iter().map(|r| row(r)).collect();
        writeln!(s, "{:>4}  {}", k + 1, rows.join(" > ")).unwrap();
    }
    writeln!(s, "{} patterns", ps.len()).unwrap();
    s
}

pub fn branch(b: &BranchOutput) -> String {
    let mut s = String::new();
    writeln!(s, "{}{} lambda = {}  dim {}", b.lie_type, b.rank, row(&b.weight), b.dim).unwrap();
    for x in &b.summands {
        writeln!(s, "  nu = {:<24} mu = {:<24} dim {}", row(&x.nu), row(&x.mu), x.dim).unwrap();
    }
    writeln!(s, "total {}  {}", b.total, verdict(b.equal)).unwrap();
    s
}

pub fn tau(t: &TauOutput) -> String {
    let mut s = String::new();
    for r in &t.rows {
        writeln!(s, "nu = {:<24} mu = {:<24} {}", row(&r.nu), row(&r.mu), map(&r.map)).unwrap();
    }
    writeln!(s, "{} pairs, bijection {}", t.rows.len(), verdict(t.bijective)).unwrap();
    s
}

pub fn klr_dim(k: &KlrDimOutput) -> String {
    match k {
        KlrDimOutput::Cyclotomic(b) => format!(
            "R^lambda(beta), labels {:?}, beta {:?}\ngdim {}\ndim {}\n",
            b.lambda_bar,
            b.beta,
            gdim(&b.gdim),
            b.dim
        ),
        KlrDimOutput::Free(f) => {
            let mut s = format!("R(beta), beta {:?}, degrees {}..{}\n", f.beta, f.min_degree, f.max_degree);
            for (d, c) in &f.gdim {
                writeln!(s, "  {d:>4}  {c}").unwrap();
            }
            s
        }
    }
}

pub fn kkw(k: &KkwOutput) -> String {
    let mut s = String::new();
    for m in &k.mismatches {
        writeln!(s, "j = {:?} j' = {:?}: hom {} vs form {}", m.j, m.j_prime, m.hom, m.shapovalov).unwrap();
    }
    writeln!(s, "{} pairs, {} mismatches  {}", k.cases, k.mismatches.len(), verdict(k.ok)).unwrap();
    s
}

pub fn projection(p: &ProjectionOutput) -> String {
    let mut s = String::new();
    for c in &p.cases {
        let obs: Vec<String> = c.observed.iter().map(|(e, x)| format!("{x}*x^{e}")).collect();
        writeln!(
            s,
            "{}{:<2} j={} r={}  table {:>4}  rule {:>2}  observed [{}]  {}",
            c.sign,
            c.i,
            c.j,
            c.r,
            c.table_shift.map_or("-".into(), |x| x.to_string()),
            c.rule_shift,
            obs.join(", "),
            verdict(c.ok)
        )
        .unwrap();
    }
    writeln!(s, "{} cases, {} failures  {}", p.cases.len(), p.failures, verdict(p.ok)).unwrap();
    s
}

pub fn verify_branch(b: &BranchReport) -> String {
    let mut s = String::new();
    writeln!(s, "dimensions {} = {}  {}", b.dims.lhs, b.dims.rhs, verdict(b.dims.equal)).unwrap();
    writeln!(s, "restricted weights  {}", verdict(b.restriction.equal)).unwrap();
    for c in &b.surjections {
        writeln!(
            s,
            "  {} p={:?} nu'={:?}: {} >= {}  {}",
            map(&c.map),
            c.p,
            c.nu,
            c.source_dim,
            c.target_dim,
            verdict(c.ok)
        )
        .unwrap();
    }
    for x in &b.sums {
        writeln!(s, "  c={} beta={:?}: {} >= {}  {}", x.c, x.beta, x.source_dim, x.target_sum, verdict(x.ok)).unwrap();
    }
    writeln!(s, "{}", verdict(b.ok)).unwrap();
    s
}

pub fn conjecture(c: &ConjectureReport) -> String {
    let mut s = String::new();
    for r in &c.rows {
        writeln!(
            s,
            "beta {:?}: rank {}  weight space {}  gdim {}",
            r.beta,
            r.hom_rank,
            r.weight_space_dim,
            gdim(&r.gdim)
        )
        .unwrap();
    }
    writeln!(s, "covers module: {}  {}", c.covers_module, verdict(c.ok)).unwrap();
    s
}
