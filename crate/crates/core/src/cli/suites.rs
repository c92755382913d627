//! Seeded randomized equivalence suites.
//!
//! Each suite evaluates two (or three) independent verdicts on the registry data and on
//! random tables with entries in {−1, 0, 1}. Random tables are drawn sparse, and a share of
//! cases are rejection-sampled towards the positive side so both directions get exercised.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bialgebras::{
    build_standard_manin, check_bialgebra, check_matched_pair, standard_matched_pair, BialgebraData, BialgebraKind,
};
use crate::conformal::{affinize, build_cobracket, ccybe_defect, check_conformal_algebra, check_conformal_bialgebra};
use crate::costructures::{check_coalgebra, dualize_algebra, dualize_coalgebra, CoalgebraKind, CoalgebraStructure};
use crate::error::Result;
use crate::exactalg::{Scalar, Tensor2};
use crate::operators::{associated_gd_verdict, check_pre_gd, zinbiel_products, PreGdStructure};
use crate::structures::{check_algebra, is_gd, AlgebraKind, AlgebraStructure, Table};
use crate::yangbaxter::{check_gdybe, coboundary_maps, r_to_operator, RMatrix};

use super::format::StructureFile;
use super::registry::{
    pipeline_params, GD_LIE_TYPE, GD_NOVIKOV_TYPE, NOVIKOV_BIALGEBRA_2D, ZINBIEL3, ZINBIEL3_CORRECTED,
};

pub const RANDOM_CASES: usize = 120;
pub const DUALITY_TABLES: usize = 1000;

pub fn seed_from_env() -> Result<u64> {
    match std::env::var("GDLAB_SEED") {
        Ok(s) => {
            s.trim().parse().map_err(|_| crate::Error::Config(format!("GDLAB_SEED={s} is not an unsigned integer")))
        }
        Err(_) => Ok(0),
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Summary {
    pub name: &'static str,
    pub cases: usize,
    pub positives: usize,
    pub negatives: usize,
    pub disagreements: usize,
}

impl Summary {
    fn new(name: &'static str) -> Self {
        Summary { name, ..Default::default() }
    }

    /// Records one case; `verdicts` must all coincide.
    fn record(&mut self, verdicts: &[bool]) {
        self.cases += 1;
        if verdicts.iter().all(|&v| v == verdicts[0]) {
            if verdicts[0] {
                self.positives += 1;
            } else {
                self.negatives += 1;
            }
        } else {
            self.disagreements += 1;
        }
    }

    pub fn ok(&self) -> bool {
        self.disagreements == 0 && self.positives > 0 && self.negatives > 0
    }

    pub fn render(&self) -> String {
        format!(
            "suite {}: cases {} positives {} negatives {} disagreements {} => {}\n",
            self.name,
            self.cases,
            self.positives,
            self.negatives,
            self.disagreements,
            if self.ok() { "ok" } else { "FAILED" }
        )
    }
}

fn unit(rng: &mut ChaCha8Rng, density: f64) -> Scalar {
    if rng.gen_bool(density) {
        Scalar::from(*[-1i64, 1].choose(rng).expect("nonempty"))
    } else {
        Scalar::zero()
    }
}

fn random_table(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Table {
    let mut t = Table::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, unit(rng, density));
            }
        }
    }
    t
}

fn random_dim(rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(2..=3)
}

fn random_algebra(rng: &mut ChaCha8Rng, n: usize, density: f64) -> AlgebraStructure {
    let circ = random_table(rng, n, density);
    let mut bracket = random_table(rng, n, density);
    // Brackets are drawn antisymmetric so the Lie side is not rejected trivially.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = if i < j {
                    bracket.get(i, j, k).clone()
                } else if i > j {
                    -bracket.get(j, i, k).clone()
                } else {
                    Scalar::zero()
                };
                bracket.set(i, j, k, c);
            }
        }
    }
    AlgebraStructure::new(circ, bracket)
}

/// A GD algebra found by rejection sampling; the zero algebra if none turns up.
fn random_gd(rng: &mut ChaCha8Rng, n: usize) -> AlgebraStructure {
    for _ in 0..400 {
        let a = random_algebra(rng, n, 0.08);
        if is_gd(&a) {
            return a;
        }
    }
    AlgebraStructure::zero(n)
}

fn random_r(rng: &mut ChaCha8Rng, n: usize, skew: bool) -> RMatrix {
    let mut t = Tensor2::square(n);
    for i in 0..n {
        for j in 0..n {
            if !skew {
                t.set(i, j, unit(rng, 0.5));
            } else if i < j {
                let c = unit(rng, 0.6);
                t.set(j, i, -c.clone());
                t.set(i, j, c);
            }
        }
    }
    RMatrix::new(t)
}

fn random_coalgebra(rng: &mut ChaCha8Rng, n: usize, density: f64) -> CoalgebraStructure {
    dualize_algebra(&random_algebra(rng, n, density))
}

/// A GD algebra with a skew GDYBE solution, when one is found, and the coboundary bialgebra.
fn random_coboundary(rng: &mut ChaCha8Rng, n: usize) -> BialgebraData {
    let alg = random_gd(rng, n);
    for _ in 0..60 {
        let r = random_r(rng, n, true);
        if check_gdybe(&alg, &r).expect("GD").skew_solution() {
            let co = coboundary_maps(&alg, &r).expect("same dimension");
            return BialgebraData::new(alg, co).expect("same dimension");
        }
    }
    BialgebraData::new(alg, CoalgebraStructure::zero(n)).expect("same dimension")
}

fn registry_bialgebras() -> Vec<BialgebraData> {
    [GD_NOVIKOV_TYPE, GD_LIE_TYPE, NOVIKOV_BIALGEBRA_2D]
        .into_iter()
        .map(|s| StructureFile::parse(s).and_then(|f| f.bialgebra()).expect("registry data parses"))
        .collect()
}

fn registry_pre_gd() -> Vec<PreGdStructure> {
    let mut out = Vec::new();
    for src in [ZINBIEL3, ZINBIEL3_CORRECTED] {
        let f = StructureFile::parse(src).expect("registry data parses");
        for p in pipeline_params() {
            out.push(zinbiel_products(&f.zinbiel(p.xi.clone(), p.k.clone()).expect("parses")).expect("shapes agree"));
        }
    }
    out
}

fn conformal_jacobi(alg: &AlgebraStructure) -> bool {
    check_conformal_algebra(&affinize(alg)).passed
}

fn affinization_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("gd-iff-conformal-algebra");
    for d in registry_bialgebras() {
        s.record(&[is_gd(&d.alg), conformal_jacobi(&d.alg)]);
    }
    for c in 0..RANDOM_CASES {
        let n = random_dim(rng);
        let alg = if c % 2 == 0 { random_gd(rng, n) } else { random_algebra(rng, n, 0.3) };
        s.record(&[is_gd(&alg), conformal_jacobi(&alg)]);
    }
    s
}

fn conformal_bialgebra_verdict(d: &BialgebraData) -> bool {
    let (cs, _) = build_cobracket(&affinize(&d.alg), &d.co).expect("same dimension");
    check_conformal_bialgebra(&cs).expect("has a cobracket").passed
}

fn bialgebra_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("gd-bialgebra-iff-conformal-bialgebra");
    for d in registry_bialgebras() {
        s.record(&[check_bialgebra(&d, BialgebraKind::Gd).passed, conformal_bialgebra_verdict(&d)]);
    }
    for c in 0..RANDOM_CASES {
        let n = random_dim(rng);
        let d = match c % 3 {
            0 => random_coboundary(rng, n),
            1 => BialgebraData::new(random_gd(rng, n), random_coalgebra(rng, n, 0.1)).expect("same dimension"),
            _ => {
                BialgebraData::new(random_algebra(rng, n, 0.2), random_coalgebra(rng, n, 0.2)).expect("same dimension")
            }
        };
        s.record(&[check_bialgebra(&d, BialgebraKind::Gd).passed, conformal_bialgebra_verdict(&d)]);
    }
    s
}

fn operator_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("skew-gdybe-iff-operator-form");
    let mut cases: Vec<(AlgebraStructure, RMatrix)> = Vec::new();
    for d in registry_bialgebras() {
        let n = d.dim();
        cases.push((d.alg.clone(), RMatrix::skew_from_upper(n, &[Scalar::one()])));
        cases.push((d.alg, RMatrix::zero(n)));
    }
    for _ in 0..RANDOM_CASES {
        let n = random_dim(rng);
        let alg = random_gd(rng, n);
        cases.push((alg, random_r(rng, n, true)));
    }
    for (alg, r) in cases {
        let g = check_gdybe(&alg, &r).expect("GD").skew_solution();
        let (_, report) = r_to_operator(&alg, &r).expect("skew");
        s.record(&[g, report.passed]);
    }
    s
}

fn pre_gd_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("pre-gd-iff-associated-gd-and-rep");
    let record = |s: &mut Summary, p: &PreGdStructure| {
        let (a, r) = associated_gd_verdict(p);
        s.record(&[check_pre_gd(p).passed, a.passed && r.passed]);
    };
    for p in registry_pre_gd() {
        record(&mut s, &p);
    }
    for c in 0..RANDOM_CASES {
        let n = random_dim(rng);
        let density = if c % 2 == 0 { 0.04 } else { 0.25 };
        let p = PreGdStructure {
            dim: n,
            lhd: random_table(rng, n, density),
            rhd: random_table(rng, n, density),
            diamond: random_table(rng, n, density),
        };
        record(&mut s, &p);
    }
    s
}

fn ccybe_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("gdybe-iff-ccybe");
    let mut cases: Vec<(AlgebraStructure, RMatrix)> = Vec::new();
    for d in registry_bialgebras() {
        let n = d.dim();
        cases.push((d.alg.clone(), RMatrix::skew_from_upper(n, &[Scalar::one()])));
        cases.push((d.alg, RMatrix::zero(n)));
    }
    for c in 0..RANDOM_CASES {
        let n = random_dim(rng);
        let alg = random_gd(rng, n);
        cases.push((alg, random_r(rng, n, c % 2 == 0)));
    }
    for (alg, r) in cases {
        let g = check_gdybe(&alg, &r).expect("GD").solution();
        let conf = ccybe_defect(&affinize(&alg), &r).expect("same dimension").is_zero();
        s.record(&[g, conf]);
    }
    s
}

fn manin_suite(rng: &mut ChaCha8Rng) -> Summary {
    let mut s = Summary::new("bialgebra-iff-matched-pair-iff-manin");
    let mut cases = registry_bialgebras();
    for c in 0..RANDOM_CASES {
        let n = random_dim(rng);
        cases.push(match c % 3 {
            0 => random_coboundary(rng, n),
            1 => BialgebraData::new(random_gd(rng, n), random_coalgebra(rng, n, 0.1)).expect("same dimension"),
            _ => {
                BialgebraData::new(random_algebra(rng, n, 0.2), random_coalgebra(rng, n, 0.2)).expect("same dimension")
            }
        });
    }
    for d in cases {
        let b = check_bialgebra(&d, BialgebraKind::Gd).passed;
        let mp = check_matched_pair(&standard_matched_pair(&d)).expect("shapes agree").passed;
        let manin = build_standard_manin(&d).report.passed;
        s.record(&[b, mp, manin]);
    }
    s
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DualitySummary {
    pub tables: usize,
    pub involution_failures: usize,
    pub verdict_disagreements: usize,
}

impl DualitySummary {
    pub fn ok(&self) -> bool {
        self.involution_failures == 0 && self.verdict_disagreements == 0
    }

    pub fn render(&self) -> String {
        format!(
            "suite duality: tables {} involution-failures {} verdict-disagreements {} => {}\n",
            self.tables,
            self.involution_failures,
            self.verdict_disagreements,
            if self.ok() { "ok" } else { "FAILED" }
        )
    }
}

pub fn duality_suite(rng: &mut ChaCha8Rng) -> DualitySummary {
    let mut s = DualitySummary::default();
    let kinds = [
        (CoalgebraKind::Novikov, AlgebraKind::Novikov),
        (CoalgebraKind::Lie, AlgebraKind::Lie),
        (CoalgebraKind::Gd, AlgebraKind::Gd),
    ];
    for c in 0..DUALITY_TABLES {
        let n = random_dim(rng);
        let density = if c % 2 == 0 { 0.08 } else { 0.4 };
        let co = CoalgebraStructure::new(random_table(rng, n, density), random_table(rng, n, density));
        s.tables += 1;
        let alg = dualize_coalgebra(&co);
        if dualize_algebra(&alg) != co || dualize_coalgebra(&dualize_algebra(&alg)) != alg {
            s.involution_failures += 1;
        }
        if kinds.iter().any(|(ck, ak)| check_coalgebra(&co, *ck).passed != check_algebra(&alg, *ak).passed) {
            s.verdict_disagreements += 1;
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteRun {
    pub seed: u64,
    pub suites: Vec<Summary>,
    pub duality: DualitySummary,
}

impl SuiteRun {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(Summary::ok) && self.duality.ok()
    }

    pub fn render(&self) -> String {
        let mut out = format!("seed: {}\n", self.seed);
        for s in &self.suites {
            out.push_str(&s.render());
        }
        out.push_str(&self.duality.render());
        out
    }
}

/// Each suite gets its own stream derived from the seed, so suites can be run or reordered independently.
pub fn run_suites(seed: u64) -> SuiteRun {
    let stream = |k: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k);
        rng
    };
    let suites = vec![
        affinization_suite(&mut stream(1)),
        bialgebra_suite(&mut stream(2)),
        operator_suite(&mut stream(3)),
        pre_gd_suite(&mut stream(4)),
        ccybe_suite(&mut stream(5)),
        manin_suite(&mut stream(6)),
    ];
    SuiteRun { seed, suites, duality: duality_suite(&mut stream(7)) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts() {
        let mut s = Summary::new("t");
        s.record(&[true, true]);
        s.record(&[false, false, false]);
        assert!(s.ok());
        s.record(&[true, false]);
        assert_eq!((s.cases, s.positives, s.negatives, s.disagreements), (3, 1, 1, 1));
        assert!(!s.ok());
    }

    #[test]
    fn one_sided_suite_is_not_ok() {
        let mut s = Summary::new("t");
        s.record(&[true, true]);
        assert!(!s.ok());
    }

    #[test]
    fn random_gd_draws_are_gd() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2, 3] {
            assert!(is_gd(&random_gd(&mut rng, n)));
        }
    }
}
