//! Argument parsing and dispatch. Every command returns its exit code and output text
//! instead of printing, so it can be driven from tests.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bialgebras::{
    build_standard_manin, check_bialgebra, check_matched_pair, check_quadratic_gd, BialgebraData, BialgebraKind,
};
use crate::conformal::{
    affinize, build_cobracket, check_conformal_algebra, check_conformal_bialgebra, check_conformal_o_operator,
    coboundary_conformal, conformal_rep, render_bracket_table, render_cotensor, render_structure,
};
use crate::costructures::{check_coalgebra, dualize_algebra, dualize_coalgebra, CoalgebraKind};
use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::operators::{check_o_operator, check_pre_gd, check_representation, check_zinbiel, semidirect, RepKind};
use crate::structures::{check_algebra, AlgebraKind, AxiomReport, Defect};
use crate::yangbaxter::{check_gdybe, coboundary_maps};

use super::format::StructureFile;
use super::registry::{self, Golden, Params};
use super::search::search;
use super::suites::{run_suites, seed_from_env};
use super::text::{render_bialgebra, render_r, render_report};

#[derive(Parser, Debug)]
#[command(
    name = "gdlab",
    version,
    about = "Exact checks and constructions for Gel'fand–Dorfman algebras and bialgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a structure file against the identities of one kind.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        json: bool,
    },
    /// Build a new structure from a file.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Enumerate r with entries in a finite set solving the GDYBE.
    Search {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1")]
        coeffs: Vec<String>,
        #[arg(long)]
        skew: bool,
        #[arg(long)]
        json: bool,
    },
    /// The registry of worked examples and negative controls.
    Examples {
        #[command(subcommand)]
        what: Examples,
    },
    /// Randomized equivalence suites, seeded from GDLAB_SEED (default 0).
    Suites,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Novikov,
    Lie,
    Gd,
    NovikovCoalg,
    LieCoalg,
    GdCoalg,
    NovikovBialg,
    LieBialg,
    GdBialg,
    PreGd,
    Zinbiel,
    Quadratic,
    Rep,
    OOperator,
    MatchedPair,
    Conformal,
    ConformalBialg,
    ConformalOOperator,
    Gdybe,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        <Kind as ValueEnum>::from_str(s, false).map_err(|_| Error::Config(format!("unknown check kind {s:?}")))
    }
}

#[derive(clap::Args, Debug)]
pub struct Output {
    /// Write the resulting structure file here.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
    /// Print the text rendering.
    #[arg(long)]
    print: bool,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// The conformal algebra of a GD algebra (the file is unchanged; --print shows λ-brackets).
    Affinize {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// The conformal cobracket of a GD coalgebra on the affinized algebra.
    Cobracket {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// The double A ⊕ A* with the hyperbolic form.
    Double {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// The coboundary coalgebra (Δ_r, δ_r) of the file's r.
    Coboundary {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Swaps products and coproducts through the dual basis.
    Dualize {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// A ⋉ V for the file's representation.
    Semidirect {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Zinbiel algebra with derivation → pre-GD → double → canonical r → conformal bialgebra.
    PipelineZinbiel {
        file: PathBuf,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
pub enum Examples {
    List,
    Run {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn verdict(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command).unwrap_or_else(|e| Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { file, kind, json } => check(&file, kind, json),
        Command::Construct { what } => construct(what),
        Command::Search { file, coeffs, skew, json } => search_cmd(&file, &coeffs, skew, json),
        Command::Examples { what } => examples(what),
        Command::Suites => {
            let run = run_suites(seed_from_env()?);
            Ok(Outcome::verdict(run.ok(), run.render()))
        }
    }
}

fn report_json(kind: &str, report: &AxiomReport) -> String {
    let mut s = serde_json::to_string_pretty(
        &json!({ "kind": kind, "passed": report.passed, "violations": report.violations }),
    )
    .expect("reports serialize");
    s.push('\n');
    s
}

pub fn check_file(f: &StructureFile, kind: Kind) -> Result<(AxiomReport, String)> {
    let mut extra = String::new();
    let report = match kind {
        Kind::Novikov => check_algebra(&f.algebra()?, AlgebraKind::Novikov),
        Kind::Lie => check_algebra(&f.algebra()?, AlgebraKind::Lie),
        Kind::Gd => check_algebra(&f.algebra()?, AlgebraKind::Gd),
        Kind::NovikovCoalg => check_coalgebra(&f.coalgebra()?, CoalgebraKind::Novikov),
        Kind::LieCoalg => check_coalgebra(&f.coalgebra()?, CoalgebraKind::Lie),
        Kind::GdCoalg => check_coalgebra(&f.coalgebra()?, CoalgebraKind::Gd),
        Kind::NovikovBialg => check_bialgebra(&f.bialgebra()?, BialgebraKind::Novikov),
        Kind::LieBialg => check_bialgebra(&f.bialgebra()?, BialgebraKind::Lie),
        Kind::GdBialg => check_bialgebra(&f.bialgebra()?, BialgebraKind::Gd),
        Kind::PreGd => check_pre_gd(&f.pre_gd()?),
        Kind::Zinbiel => check_zinbiel(&f.zinbiel(Scalar::zero(), Scalar::one())?)?,
        Kind::Quadratic => check_quadratic_gd(&f.algebra()?, &f.bilinear_form()?)?,
        Kind::Rep => check_representation(&f.algebra()?, &f.representation()?, RepKind::Gd)?,
        Kind::OOperator => check_o_operator(&f.algebra()?, &f.representation()?, &f.operator_matrix()?)?,
        Kind::MatchedPair => {
            let r = check_matched_pair(&f.matched_pair_data()?)?;
            for v in &r.diagnostics.violations {
                extra.push_str(&format!("diagnostic: {} at {:?}\n", v.axiom, v.witness));
            }
            r.double
        }
        Kind::Conformal => check_conformal_algebra(&affinize(&f.algebra()?)),
        Kind::ConformalBialg => {
            let d = f.bialgebra()?;
            let (cs, _) = build_cobracket(&affinize(&d.alg), &d.co)?;
            check_conformal_bialgebra(&cs)?
        }
        Kind::ConformalOOperator => {
            let alg = f.algebra()?;
            let (crep, _) = conformal_rep(&alg, &f.representation()?)?;
            check_conformal_o_operator(&affinize(&alg), &crep, &f.operator_matrix()?)?
        }
        Kind::Gdybe => {
            let g = check_gdybe(&f.algebra()?, &f.r_matrix()?)?;
            let mut r = AxiomReport::new();
            for (id, ok) in [("gdybe.nybe", g.nybe_zero), ("gdybe.cybe", g.cybe_zero)] {
                if !ok {
                    r.fail(id, &[], Defect::Note("nonzero".into()));
                }
            }
            extra.push_str(&format!("skew: {}\n", if g.skew { "yes" } else { "no" }));
            r
        }
    };
    Ok((report, extra))
}

fn check(file: &Path, kind: Kind, json: bool) -> Result<Outcome> {
    let f = StructureFile::load(file)?;
    let (report, extra) = check_file(&f, kind)?;
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    let text =
        if json { report_json(&name, &report) } else { format!("kind: {name}\n{}{extra}", render_report(&report)) };
    Ok(Outcome::verdict(report.passed, text))
}

fn scalar(s: &str) -> Result<Scalar> {
    s.trim().parse().map_err(|_| Error::Config(format!("{s:?} is not a rational number")))
}

fn finish(output: &Output, file: Option<&StructureFile>, text: &str, report: &AxiomReport) -> Result<Outcome> {
    let mut out = String::new();
    if let (Some(path), Some(f)) = (&output.out, file) {
        std::fs::write(path, f.to_json())?;
        out.push_str(&format!("wrote {}\n", path.display()));
    }
    if output.print || output.out.is_none() {
        out.push_str(text);
    }
    out.push_str(&render_report(report));
    Ok(Outcome::verdict(report.passed, out))
}

fn construct(what: Construct) -> Result<Outcome> {
    match what {
        Construct::Affinize { file, output } => {
            let f = StructureFile::load(&file)?;
            let alg = f.algebra()?;
            let cs = affinize(&alg);
            let report = check_conformal_algebra(&cs);
            finish(&output, Some(&StructureFile::from_algebra(&alg)?), &render_bracket_table(&cs), &report)
        }
        Construct::Cobracket { file, output } => {
            let d = StructureFile::load(&file)?.bialgebra()?;
            let (cs, report) = build_cobracket(&affinize(&d.alg), &d.co)?;
            finish(&output, Some(&StructureFile::from_bialgebra(&d)?), &render_structure(&cs), &report)
        }
        Construct::Double { file, output } => {
            let d = StructureFile::load(&file)?.bialgebra()?;
            let m = build_standard_manin(&d);
            let mut f = StructureFile::from_algebra(&m.double)?;
            f.set_form(&m.form)?;
            let text = render_bialgebra(&BialgebraData::new(
                m.double.clone(),
                crate::costructures::CoalgebraStructure::zero(m.double.dim),
            )?);
            finish(&output, Some(&f), &text, &m.report)
        }
        Construct::Coboundary { file, output } => {
            let f = StructureFile::load(&file)?;
            let (alg, r) = (f.algebra()?, f.r_matrix()?);
            let co = coboundary_maps(&alg, &r)?;
            let d = BialgebraData::new(alg, co)?;
            let report = check_bialgebra(&d, BialgebraKind::Gd);
            let mut text = render_bialgebra(&d);
            if r.is_skew() {
                let cs = affinize(&d.alg);
                let labels = &d.alg.basis_labels;
                for (k, t) in coboundary_conformal(&cs, &r)?.iter().enumerate() {
                    text.push_str(&format!("δ({}) = {}\n", labels[k], render_cotensor(t, labels)));
                }
            }
            let mut out = StructureFile::from_bialgebra(&d)?;
            out.set_r(&r)?;
            finish(&output, Some(&out), &text, &report)
        }
        Construct::Dualize { file, output } => {
            let f = StructureFile::load(&file)?;
            let d = f.bialgebra()?;
            let mut alg = dualize_coalgebra(&d.co);
            alg.basis_labels = d.alg.basis_labels.iter().map(|l| format!("{l}*")).collect();
            let co = dualize_algebra(&d.alg);
            let dual = BialgebraData::new(alg, co)?;
            finish(&output, Some(&StructureFile::from_bialgebra(&dual)?), &render_bialgebra(&dual), &AxiomReport::new())
        }
        Construct::Semidirect { file, output } => {
            let f = StructureFile::load(&file)?;
            let (alg, rep) = (f.algebra()?, f.representation()?);
            let report = check_representation(&alg, &rep, RepKind::Gd)?;
            let sd = semidirect(&alg, &rep)?;
            let text = render_bialgebra(&BialgebraData::new(
                sd.clone(),
                crate::costructures::CoalgebraStructure::zero(sd.dim),
            )?);
            finish(&output, Some(&StructureFile::from_algebra(&sd)?), &text, &report)
        }
        Construct::PipelineZinbiel { file, xi, k, output } => {
            let f = StructureFile::load(&file)?;
            let p = Params { xi: scalar(&xi)?, k: scalar(&k)? };
            let chain = registry::zinbiel_chain(&f, &p)?;
            let mut out = StructureFile::from_bialgebra(&chain.output.bialgebra)?;
            out.set_r(&chain.output.r)?;
            let mut report = AxiomReport::new();
            for (name, ok) in &chain.checks {
                if !ok {
                    report.fail(format!("pipeline.{name}"), &[], Defect::Note("check failed".into()));
                }
            }
            finish(&output, Some(&out), &chain.text, &report)
        }
    }
}

fn search_cmd(file: &Path, coeffs: &[String], skew: bool, json: bool) -> Result<Outcome> {
    let alg = StructureFile::load(file)?.algebra()?;
    let coeffs = coeffs.iter().map(|c| scalar(c)).collect::<Result<Vec<_>>>()?;
    let res = search(&alg, &coeffs, skew)?;
    let labels = &alg.basis_labels;
    let text = if json {
        let sols: Vec<Vec<Vec<String>>> = res
            .solutions
            .iter()
            .map(|r| (0..r.dim).map(|i| (0..r.dim).map(|j| r.t.get(i, j).to_string()).collect()).collect())
            .collect();
        let mut s =
            serde_json::to_string_pretty(&json!({ "candidates": res.candidates, "skew": skew, "solutions": sols }))
                .expect("serializes");
        s.push('\n');
        s
    } else {
        let mut s = format!("candidates: {}\nsolutions: {}\n", res.candidates, res.solutions.len());
        for r in &res.solutions {
            s.push_str(&format!("r = {}\n", render_r(r, labels)));
        }
        s
    };
    Ok(Outcome::verdict(true, text))
}

fn examples(what: Examples) -> Result<Outcome> {
    match what {
        Examples::List => {
            let mut s = String::new();
            for e in registry::REGISTRY {
                s.push_str(&format!(
                    "{:<34} claim {:<4}  {}\n",
                    e.name,
                    if e.claim { "pass" } else { "fail" },
                    e.about
                ));
            }
            Ok(Outcome::verdict(true, s))
        }
        Examples::Run { all: true, .. } => {
            let outs = registry::run_all()?;
            let ok = outs.iter().all(|o| o.ok());
            let mut s: String = outs.iter().map(|o| o.render()).collect();
            s.push_str(&format!("summary: {} of {} ok\n", outs.iter().filter(|o| o.ok()).count(), outs.len()));
            Ok(Outcome::verdict(ok, s))
        }
        Examples::Run { name: Some(name), xi, k, .. } => {
            let ex = registry::find(&name).ok_or_else(|| Error::Config(format!("no example named {name:?}")))?;
            let mut p = Params::default();
            if let Some(x) = xi {
                p.xi = scalar(&x)?;
            }
            if let Some(x) = k {
                p.k = scalar(&x)?;
            }
            let o = registry::run_example(ex, &p)?;
            let ok = o.ok() && o.golden != Golden::Mismatch;
            Ok(Outcome::verdict(ok, o.render()))
        }
        Examples::Run { name: None, .. } => Err(Error::Config("give an example name or --all".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn help_and_usage_errors() {
        assert_eq!(run(["gdlab", "--help"]).code, 0);
        assert_eq!(run(["gdlab"]).code, 2);
        assert_eq!(run(["gdlab", "examples", "run"]).code, 2);
    }

    #[test]
    fn kind_names() {
        let names: Vec<String> =
            Kind::value_variants().iter().map(|k| k.to_possible_value().unwrap().get_name().to_string()).collect();
        for n in [
            "gd-bialg",
            "novikov-coalg",
            "pre-gd",
            "o-operator",
            "matched-pair",
            "conformal-bialg",
            "conformal-o-operator",
            "gdybe",
        ] {
            assert!(names.iter().any(|m| m == n), "{n}");
        }
    }

    #[test]
    fn rational_flags() {
        assert_eq!(scalar("-1/2").unwrap(), Scalar::ratio(-1, 2));
        assert!(scalar("0.5").is_err());
    }
}
