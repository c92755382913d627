//! Named reproductions with stored reference output.

use crate::bialgebras::{check_bialgebra, classify_special, BialgebraData, BialgebraKind};
use crate::conformal::{
    affinize, build_cobracket, ccybe_defect, check_conformal_bialgebra, coboundary_conformal, left_symmetric_conformal,
    render_cobracket_table, render_poly_vector, render_structure, ConformalStructure,
};
use crate::error::Result;
use crate::exactalg::Scalar;
use crate::operators::{canonical_construction, check_pre_gd, check_zinbiel, zinbiel_products, PipelineOutput};
use crate::structures::{check_algebra, AlgebraKind, AxiomReport};
use crate::yangbaxter::gdybe_unchecked;

use super::format::StructureFile;
use super::text::{render_bialgebra, render_pre_gd, render_r};

pub const GD_NOVIKOV_TYPE: &str = include_str!("../../examples/gd_novikov_type.json");
pub const GD_LIE_TYPE: &str = include_str!("../../examples/gd_lie_type.json");
pub const NOVIKOV_BIALGEBRA_2D: &str = include_str!("../../examples/novikov_bialgebra_2d.json");
pub const ZINBIEL3: &str = include_str!("../../examples/zinbiel3.json");
pub const ZINBIEL3_CORRECTED: &str = include_str!("../../examples/zinbiel3_corrected.json");

#[derive(Clone, Copy, Debug)]
enum Run {
    Bialgebra(&'static str),
    Conformal(&'static str),
    Zinbiel(&'static str),
    /// Base data with one table entry replaced: (section, tuple).
    Mutant(&'static str, &'static str, [i64; 5]),
}

#[derive(Clone, Copy, Debug)]
pub struct Example {
    pub name: &'static str,
    pub about: &'static str,
    /// Verdict asserted for the data in the literature; mutants claim failure.
    pub claim: bool,
    run: Run,
}

pub const REGISTRY: &[Example] = &[
    Example {
        name: "gd-novikov-type",
        about: "2-dim GD bialgebra of Novikov type",
        claim: true,
        run: Run::Bialgebra(GD_NOVIKOV_TYPE),
    },
    Example {
        name: "gd-lie-type",
        about: "2-dim GD bialgebra of Lie type",
        claim: true,
        run: Run::Bialgebra(GD_LIE_TYPE),
    },
    Example {
        name: "conformal-novikov-type",
        about: "conformal bialgebra of the Novikov-type data",
        claim: true,
        run: Run::Conformal(GD_NOVIKOV_TYPE),
    },
    Example {
        name: "conformal-lie-type",
        about: "conformal bialgebra of the Lie-type data",
        claim: true,
        run: Run::Conformal(GD_LIE_TYPE),
    },
    Example {
        name: "novikov-bialgebra-2d",
        about: "2-dim Novikov bialgebra with Δ(e1) = e2⊗e2",
        claim: true,
        run: Run::Bialgebra(NOVIKOV_BIALGEBRA_2D),
    },
    Example {
        name: "conformal-novikov-2d",
        about: "conformal bialgebra of the 2-dim Novikov bialgebra",
        claim: true,
        run: Run::Conformal(NOVIKOV_BIALGEBRA_2D),
    },
    Example {
        name: "zinbiel-pipeline",
        about: "3-dim Zinbiel algebra with derivation through the full chain (--xi, --k)",
        claim: true,
        run: Run::Zinbiel(ZINBIEL3),
    },
    Example {
        name: "zinbiel-corrected",
        about: "the same chain with e1·e2 = 2e3, valid for ξ ∈ {0, −1}",
        claim: true,
        run: Run::Zinbiel(ZINBIEL3_CORRECTED),
    },
    Example {
        name: "mutant-novikov-type-circ",
        about: "extra e2∘e2 = e1",
        claim: false,
        run: Run::Mutant(GD_NOVIKOV_TYPE, "circ", [2, 2, 1, 1, 1]),
    },
    Example {
        name: "mutant-novikov-type-circ-extra",
        about: "extra e1∘e1 = e1",
        claim: false,
        run: Run::Mutant(GD_NOVIKOV_TYPE, "circ", [1, 1, 1, 1, 1]),
    },
    Example {
        name: "mutant-novikov-type-delta0",
        about: "δ0(e2) loses its e2⊗e1 term",
        claim: false,
        run: Run::Mutant(GD_NOVIKOV_TYPE, "delta0", [2, 2, 1, 0, 1]),
    },
    Example {
        name: "mutant-novikov-type-delta0-extra",
        about: "extra δ0(e1) = e1⊗e2",
        claim: false,
        run: Run::Mutant(GD_NOVIKOV_TYPE, "delta0", [1, 1, 2, 1, 1]),
    },
    Example {
        name: "mutant-lie-type-bracket",
        about: "[e1, e2] = e2 without its antisymmetric partner",
        claim: false,
        run: Run::Mutant(GD_LIE_TYPE, "bracket", [2, 1, 2, 0, 1]),
    },
    Example {
        name: "mutant-lie-type-delta",
        about: "Δ(e2) gains e2⊗e1",
        claim: false,
        run: Run::Mutant(GD_LIE_TYPE, "Delta", [2, 2, 1, 1, 1]),
    },
    Example {
        name: "mutant-lie-type-delta-extra",
        about: "extra Δ(e1) = e1⊗e1",
        claim: false,
        run: Run::Mutant(GD_LIE_TYPE, "Delta", [1, 1, 1, 1, 1]),
    },
];

pub fn find(name: &str) -> Option<&'static Example> {
    REGISTRY.iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub xi: Scalar,
    pub k: Scalar,
}

impl Default for Params {
    fn default() -> Self {
        Params { xi: Scalar::zero(), k: Scalar::one() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Golden {
    Match,
    Mismatch,
    Missing,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub claim: bool,
    pub verdict: bool,
    /// One line per check of the claim chain.
    pub checks: Vec<(String, bool)>,
    pub emitted: String,
    pub golden: Golden,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.claim == self.verdict && self.golden != Golden::Mismatch
    }

    pub fn render(&self) -> String {
        let yn = |b: bool| if b { "pass" } else { "fail" };
        let mut s = format!("== {} ==\nclaim: {}\nverdict: {}\n", self.name, yn(self.claim), yn(self.verdict));
        for (c, ok) in &self.checks {
            s.push_str(&format!("check {c}: {}\n", yn(*ok)));
        }
        s.push_str("-- emitted --\n");
        s.push_str(&self.emitted);
        s.push_str(match self.golden {
            Golden::Match => "golden: match\n",
            Golden::Mismatch => "golden: MISMATCH\n",
            Golden::Missing => "golden: none\n",
        });
        s.push_str(&format!("result: {}\n", if self.ok() { "ok" } else { "UNEXPECTED" }));
        s
    }
}

const GOLDENS: &[(&str, &str)] = &[
    ("gd-novikov-type", include_str!("../../goldens/gd-novikov-type.txt")),
    ("gd-lie-type", include_str!("../../goldens/gd-lie-type.txt")),
    ("conformal-novikov-type", include_str!("../../goldens/conformal-novikov-type.txt")),
    ("conformal-lie-type", include_str!("../../goldens/conformal-lie-type.txt")),
    ("novikov-bialgebra-2d", include_str!("../../goldens/novikov-bialgebra-2d.txt")),
    ("conformal-novikov-2d", include_str!("../../goldens/conformal-novikov-2d.txt")),
    ("zinbiel-pipeline.xi0.k1", include_str!("../../goldens/zinbiel-pipeline.xi0.k1.txt")),
    ("zinbiel-pipeline.xi1.k1", include_str!("../../goldens/zinbiel-pipeline.xi1.k1.txt")),
    ("zinbiel-pipeline.xim1o2.k2", include_str!("../../goldens/zinbiel-pipeline.xim1o2.k2.txt")),
    ("zinbiel-corrected.xi0.k1", include_str!("../../goldens/zinbiel-corrected.xi0.k1.txt")),
];

fn tag(c: &Scalar) -> String {
    c.to_string().replace('-', "m").replace('/', "o")
}

fn golden_key(ex: &Example, p: &Params) -> String {
    match ex.run {
        Run::Zinbiel(_) => format!("{}.xi{}.k{}", ex.name, tag(&p.xi), tag(&p.k)),
        _ => ex.name.to_string(),
    }
}

pub fn golden_text(key: &str) -> Option<&'static str> {
    GOLDENS.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
}

fn mutate(base: &str, section: &str, tup: [i64; 5]) -> Result<StructureFile> {
    let mut f = StructureFile::parse(base)?;
    let list = match section {
        "circ" => &mut f.circ,
        "bracket" => &mut f.bracket,
        "Delta" => &mut f.coproduct,
        _ => &mut f.delta0,
    };
    let mut v = list.take().unwrap_or_default();
    v.retain(|t| t[..3] != tup[..3]);
    if tup[3] != 0 {
        v.push(tup);
    }
    v.sort();
    *list = Some(v);
    Ok(f)
}

fn bialgebra_run(d: &BialgebraData) -> (bool, Vec<(String, bool)>, String) {
    let report = check_bialgebra(d, BialgebraKind::Gd);
    let mut emitted = render_bialgebra(d);
    if let Ok(t) = classify_special(d) {
        emitted.push_str(&format!("special type: {}\n", t.name()));
    }
    (report.passed, report_checks("gd-bialgebra", &report), emitted)
}

fn report_checks(name: &str, r: &AxiomReport) -> Vec<(String, bool)> {
    let mut v = vec![(name.to_string(), r.passed)];
    for a in r.failed_axioms() {
        v.push((format!("  {a}"), false));
    }
    v
}

fn nonzero_brackets(cs: &ConformalStructure) -> String {
    let n = cs.dim;
    let mut s = String::new();
    for i in 0..n {
        for j in 0..n {
            let v = cs.entry(i, j);
            if !v.is_zero() {
                let l = &cs.basis_labels;
                s.push_str(&format!("[{} _λ {}] = {}\n", l[i], l[j], render_poly_vector(v, l)));
            }
        }
    }
    s
}

/// The full chain from a Zinbiel algebra with derivation: checks, emitted text and the assembled data.
pub fn zinbiel_chain(f: &StructureFile, p: &Params) -> Result<Chain> {
    let z = f.zinbiel(p.xi.clone(), p.k.clone())?;
    let mut checks = Vec::new();
    checks.push(("zinbiel".to_string(), check_zinbiel(&z)?.passed));
    let pre = zinbiel_products(&z)?;
    checks.push(("pre-gd".to_string(), check_pre_gd(&pre).passed));
    let out = canonical_construction(&pre);
    checks.push(("associated-gd".to_string(), check_algebra(&out.alg, AlgebraKind::Gd).passed));
    checks.push(("double-gd".to_string(), check_algebra(&out.double, AlgebraKind::Gd).passed));
    let g = gdybe_unchecked(&out.double, &out.r);
    checks.push(("r-skew".to_string(), g.skew));
    checks.push(("r-nybe".to_string(), g.nybe_zero));
    checks.push(("r-cybe".to_string(), g.cybe_zero));
    checks.push(("gd-bialgebra".to_string(), check_bialgebra(&out.bialgebra, BialgebraKind::Gd).passed));
    let cs = affinize(&out.double);
    let (conf, _) = build_cobracket(&cs, &out.bialgebra.co)?;
    checks.push(("conformal-bialgebra".to_string(), check_conformal_bialgebra(&conf)?.passed));
    checks.push(("ccybe".to_string(), ccybe_defect(&cs, &out.r)?.is_zero()));
    let cob = coboundary_conformal(&cs, &out.r)?;
    checks.push(("coboundary-cobracket-agrees".to_string(), Some(&cob) == conf.cobracket.as_ref()));
    checks.push(("left-symmetric-conformal".to_string(), left_symmetric_conformal(&pre).1.passed));
    let verdict = checks.iter().all(|(_, b)| *b);

    let mut s = format!("parameters: ξ = {}, k = {}\n", p.xi, p.k);
    s.push_str("-- pre-GD products --\n");
    s.push_str(&render_pre_gd(&pre, &f.labels()));
    s.push_str("-- double with Δ_r, δ_r --\n");
    s.push_str(&render_bialgebra(&out.bialgebra));
    s.push_str(&format!("r = {}\n", render_r(&out.r, &out.double.basis_labels)));
    s.push_str("-- conformal --\n");
    s.push_str(&nonzero_brackets(&conf));
    s.push_str(&render_cobracket_table(&conf));
    Ok(Chain { verdict, checks, text: s, output: out })
}

pub struct Chain {
    pub verdict: bool,
    pub checks: Vec<(String, bool)>,
    pub text: String,
    pub output: PipelineOutput,
}

pub fn run_example(ex: &Example, p: &Params) -> Result<Outcome> {
    let (verdict, checks, emitted) = match ex.run {
        Run::Bialgebra(src) => bialgebra_run(&StructureFile::parse(src)?.bialgebra()?),
        Run::Mutant(src, section, tup) => bialgebra_run(&mutate(src, section, tup)?.bialgebra()?),
        Run::Conformal(src) => {
            let d = StructureFile::parse(src)?.bialgebra()?;
            let (cs, _) = build_cobracket(&affinize(&d.alg), &d.co)?;
            let report = check_conformal_bialgebra(&cs)?;
            (report.passed, report_checks("conformal-bialgebra", &report), render_structure(&cs))
        }
        Run::Zinbiel(src) => {
            let c = zinbiel_chain(&StructureFile::parse(src)?, p)?;
            (c.verdict, c.checks, c.text)
        }
    };
    let key = golden_key(ex, p);
    let golden = match golden_text(&key) {
        Some(_) if std::env::var_os("GDLAB_BLESS").is_some() => {
            let path = format!("{}/goldens/{key}.txt", env!("CARGO_MANIFEST_DIR"));
            std::fs::write(path, &emitted)?;
            Golden::Match
        }
        Some("") | None => Golden::Missing,
        Some(g) if g == emitted => Golden::Match,
        Some(_) => Golden::Mismatch,
    };
    Ok(Outcome { name: key, claim: ex.claim, verdict, checks, emitted, golden })
}

/// Runs every entry; the parameterized chain is run at each pair with a stored reference.
pub fn run_all() -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for ex in REGISTRY {
        match ex.run {
            Run::Zinbiel(_) if ex.name == "zinbiel-pipeline" => {
                for p in pipeline_params() {
                    out.push(run_example(ex, &p)?);
                }
            }
            _ => out.push(run_example(ex, &Params::default())?),
        }
    }
    Ok(out)
}

/// The parameter pairs with stored reference output.
pub fn pipeline_params() -> Vec<Params> {
    [(0, 1, 1), (1, 1, 1), (-1, 2, 2)]
        .into_iter()
        .map(|(p, q, k)| Params { xi: Scalar::ratio(p, q), k: Scalar::from(k) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        for (i, a) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|b| b.name != a.name));
        }
    }

    #[test]
    fn mutants_fail_and_change_one_entry() {
        for ex in REGISTRY.iter().filter(|e| !e.claim) {
            let Run::Mutant(src, section, tup) = ex.run else { panic!("{} is not a mutant", ex.name) };
            let base = StructureFile::parse(src).unwrap();
            let m = mutate(src, section, tup).unwrap();
            assert_ne!(base, m);
            assert!(!run_example(ex, &Params::default()).unwrap().verdict, "{}", ex.name);
        }
    }

    #[test]
    fn golden_keys_encode_parameters() {
        let ex = find("zinbiel-pipeline").unwrap();
        let keys: Vec<String> = pipeline_params().iter().map(|p| golden_key(ex, p)).collect();
        assert_eq!(keys, ["zinbiel-pipeline.xi0.k1", "zinbiel-pipeline.xi1.k1", "zinbiel-pipeline.xim1o2.k2"]);
        assert!(keys.iter().all(|k| golden_text(k).is_some()));
    }

    #[test]
    fn unregistered_parameters_have_no_golden() {
        let ex = find("zinbiel-pipeline").unwrap();
        let p = Params { xi: Scalar::from(3), k: Scalar::one() };
        assert_eq!(run_example(ex, &p).unwrap().golden, Golden::Missing);
    }
}
