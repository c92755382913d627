//! JSON structure files: 1-based index tuples and integer-pair rationals.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bialgebras::{BialgebraData, BilinearForm, MatchedPairData};
use crate::costructures::CoalgebraStructure;
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Tensor2};
use crate::operators::{PreGdStructure, Representation, ZinbielData};
use crate::structures::{basis_labels, AlgebraStructure, Table};
use crate::yangbaxter::RMatrix;

/// A rational matrix entry: an integer or `[num, den]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Frac([i64; 2]),
}

pub type MatrixFile = Vec<Vec<Entry>>;

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub l: Vec<MatrixFile>,
    pub r: Vec<MatrixFile>,
    pub rho: Vec<MatrixFile>,
}

/// Second algebra and the two triples of actions; the first algebra is the enclosing file.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairFile {
    pub b: StructureFile,
    pub on_b: RepFile,
    pub on_a: RepFile,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circ: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<[i64; 5]>>,
    #[serde(default, rename = "Delta", skip_serializing_if = "Option::is_none")]
    pub coproduct: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta0: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhd: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhd: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diamond: Option<Vec<[i64; 5]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<Vec<[i64; 5]>>,
    #[serde(default, rename = "D", skip_serializing_if = "Option::is_none")]
    pub derivation: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<RepFile>,
    #[serde(default, rename = "T", skip_serializing_if = "Option::is_none")]
    pub operator: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<[i64; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<MatrixFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matched_pair: Option<Box<MatchedPairFile>>,
}

fn ratio(num: i64, den: i64) -> Result<Scalar> {
    if den <= 0 {
        return Err(Error::Parse(format!("denominator {den} is not positive")));
    }
    Ok(Scalar::ratio(num, den))
}

fn pair(c: &Scalar) -> Result<(i64, i64)> {
    c.to_i64_pair().ok_or_else(|| Error::Parse(format!("{c} does not fit in 64-bit integers")))
}

fn index(i: i64, n: usize) -> Result<usize> {
    if i < 1 || i as u64 > n as u64 {
        return Err(Error::Parse(format!("index {i} out of range 1..={n}")));
    }
    Ok(i as usize - 1)
}

/// Product tuples are [i, j, k, num, den]; coproduct tuples are [k, i, j, num, den].
/// Both are stored in the [`Table`] layout (i, j, k).
fn table_from(tuples: &Option<Vec<[i64; 5]>>, n: usize, coproduct: bool, what: &str) -> Result<Table> {
    let mut t = Table::zeros(n);
    let mut seen = BTreeSet::new();
    for tup in tuples.iter().flatten() {
        let [a, b, c, num, den] = *tup;
        let (a, b, c) = (index(a, n)?, index(b, n)?, index(c, n)?);
        let (i, j, k) = if coproduct { (b, c, a) } else { (a, b, c) };
        if !seen.insert((i, j, k)) {
            return Err(Error::Parse(format!("{what}: repeated entry {:?}", &tup[..3])));
        }
        t.set(i, j, k, ratio(num, den)?);
    }
    Ok(t)
}

fn tuples_of(t: &Table, coproduct: bool) -> Result<Option<Vec<[i64; 5]>>> {
    if t.is_zero() {
        return Ok(None);
    }
    let mut out = Vec::new();
    for (i, j, k, c) in t.entries() {
        let (num, den) = pair(c)?;
        let (i, j, k) = (i as i64 + 1, j as i64 + 1, k as i64 + 1);
        out.push(if coproduct { [k, i, j, num, den] } else { [i, j, k, num, den] });
    }
    out.sort();
    Ok(Some(out))
}

fn matrix_from(m: &MatrixFile, rows: usize, cols: usize, what: &str) -> Result<Matrix<Scalar>> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("{what}: expected a {rows}×{cols} matrix")));
    }
    let rows = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match *e {
                    Entry::Int(v) => Ok(Scalar::from(v)),
                    Entry::Frac([p, q]) => ratio(p, q),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn matrix_of(m: &Matrix<Scalar>) -> Result<MatrixFile> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let c = m.get(i, j);
                    let (p, q) = pair(c)?;
                    Ok(if q == 1 { Entry::Int(p) } else { Entry::Frac([p, q]) })
                })
                .collect()
        })
        .collect()
}

fn rep_from(f: &RepFile, alg_dim: usize, rep_dim: usize) -> Result<Representation> {
    let side = |ms: &Vec<MatrixFile>, what: &str| -> Result<Vec<Matrix<Scalar>>> {
        if ms.len() != alg_dim {
            return Err(Error::Parse(format!("rep.{what}: expected {alg_dim} matrices, found {}", ms.len())));
        }
        ms.iter().map(|m| matrix_from(m, rep_dim, rep_dim, &format!("rep.{what}"))).collect()
    };
    Ok(Representation { alg_dim, rep_dim, l: side(&f.l, "l")?, r: side(&f.r, "r")?, rho: side(&f.rho, "rho")? })
}

fn rep_file(rep: &Representation) -> Result<RepFile> {
    let side = |ms: &[Matrix<Scalar>]| ms.iter().map(matrix_of).collect::<Result<Vec<_>>>();
    Ok(RepFile { l: side(&rep.l)?, r: side(&rep.r)?, rho: side(&rep.rho)? })
}

/// Module dimension of a representation block: size of its first matrix.
fn rep_dim(f: &RepFile) -> Result<usize> {
    f.l.first()
        .or(f.r.first())
        .or(f.rho.first())
        .map(|m| m.len())
        .ok_or_else(|| Error::Parse("rep: cannot infer the module dimension from empty lists".into()))
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: StructureFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            o => o,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Converts every present section once so that errors surface at load time.
    fn validate(&self) -> Result<()> {
        if let Some(b) = &self.basis {
            if b.len() != self.dim {
                return Err(Error::Parse(format!("basis has {} labels for dimension {}", b.len(), self.dim)));
            }
        }
        self.algebra()?;
        self.coalgebra()?;
        self.pre_gd()?;
        table_from(&self.dot, self.dim, false, "dot")?;
        if let Some(d) = &self.derivation {
            matrix_from(d, self.dim, self.dim, "D")?;
        }
        if self.rep.is_some() {
            self.representation()?;
        }
        if self.operator.is_some() {
            self.operator_matrix()?;
        }
        self.r_matrix()?;
        if self.form.is_some() {
            self.bilinear_form()?;
        }
        if self.matched_pair.is_some() {
            self.matched_pair_data()?;
        }
        Ok(())
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.clone().unwrap_or_else(|| basis_labels(self.dim))
    }

    pub fn algebra(&self) -> Result<AlgebraStructure> {
        let circ = table_from(&self.circ, self.dim, false, "circ")?;
        let bracket = table_from(&self.bracket, self.dim, false, "bracket")?;
        Ok(AlgebraStructure::new(circ, bracket).with_labels(self.labels()))
    }

    pub fn coalgebra(&self) -> Result<CoalgebraStructure> {
        Ok(CoalgebraStructure::new(
            table_from(&self.coproduct, self.dim, true, "Delta")?,
            table_from(&self.delta0, self.dim, true, "delta0")?,
        ))
    }

    pub fn bialgebra(&self) -> Result<BialgebraData> {
        BialgebraData::new(self.algebra()?, self.coalgebra()?)
    }

    pub fn pre_gd(&self) -> Result<PreGdStructure> {
        Ok(PreGdStructure {
            dim: self.dim,
            lhd: table_from(&self.lhd, self.dim, false, "lhd")?,
            rhd: table_from(&self.rhd, self.dim, false, "rhd")?,
            diamond: table_from(&self.diamond, self.dim, false, "diamond")?,
        })
    }

    /// Zinbiel product and derivation; D defaults to zero.
    pub fn zinbiel(&self, xi: Scalar, k: Scalar) -> Result<ZinbielData> {
        let d = match &self.derivation {
            Some(m) => matrix_from(m, self.dim, self.dim, "D")?,
            None => Matrix::zeros(self.dim, self.dim),
        };
        Ok(ZinbielData { dim: self.dim, dot: table_from(&self.dot, self.dim, false, "dot")?, d, xi, k })
    }

    pub fn representation(&self) -> Result<Representation> {
        let f = self.rep.as_ref().ok_or_else(|| Error::Parse("missing key \"rep\"".into()))?;
        rep_from(f, self.dim, rep_dim(f)?)
    }

    /// T: V → A as a dim × (module dimension) matrix.
    pub fn operator_matrix(&self) -> Result<Matrix<Scalar>> {
        let m = self.operator.as_ref().ok_or_else(|| Error::Parse("missing key \"T\"".into()))?;
        let cols = m.first().map(|r| r.len()).unwrap_or(0);
        matrix_from(m, self.dim, cols, "T")
    }

    pub fn r_matrix(&self) -> Result<RMatrix> {
        let n = self.dim;
        let mut t = Tensor2::square(n);
        let mut seen = BTreeSet::new();
        for &[i, j, num, den] in self.r.iter().flatten() {
            let (i, j) = (index(i, n)?, index(j, n)?);
            if !seen.insert((i, j)) {
                return Err(Error::Parse(format!("r: repeated entry [{}, {}]", i + 1, j + 1)));
            }
            t.set(i, j, ratio(num, den)?);
        }
        Ok(RMatrix::new(t))
    }

    pub fn has_r(&self) -> bool {
        self.r.is_some()
    }

    pub fn bilinear_form(&self) -> Result<BilinearForm> {
        let m = self.form.as_ref().ok_or_else(|| Error::Parse("missing key \"form\"".into()))?;
        BilinearForm::new(matrix_from(m, self.dim, self.dim, "form")?)
    }

    pub fn matched_pair_data(&self) -> Result<MatchedPairData> {
        let f = self.matched_pair.as_ref().ok_or_else(|| Error::Parse("missing key \"matched_pair\"".into()))?;
        let a = self.algebra()?;
        let b = f.b.algebra()?;
        let (n, m) = (a.dim, b.dim);
        let on_b = rep_from(&f.on_b, n, m)?;
        let on_a = rep_from(&f.on_a, m, n)?;
        Ok(MatchedPairData {
            a,
            b,
            l_a: on_b.l,
            r_a: on_b.r,
            rho_a: on_b.rho,
            l_b: on_a.l,
            r_b: on_a.r,
            rho_b: on_a.rho,
        })
    }

    pub fn from_algebra(alg: &AlgebraStructure) -> Result<Self> {
        let mut f = StructureFile { dim: alg.dim, ..Default::default() };
        f.set_labels(&alg.basis_labels);
        f.circ = tuples_of(&alg.circ, false)?;
        f.bracket = tuples_of(&alg.bracket, false)?;
        Ok(f)
    }

    pub fn from_bialgebra(d: &BialgebraData) -> Result<Self> {
        let mut f = Self::from_algebra(&d.alg)?;
        f.set_coalgebra(&d.co)?;
        Ok(f)
    }

    pub fn set_coalgebra(&mut self, co: &CoalgebraStructure) -> Result<()> {
        self.coproduct = tuples_of(&co.coproduct, true)?;
        self.delta0 = tuples_of(&co.cobracket, true)?;
        Ok(())
    }

    pub fn set_pre_gd(&mut self, p: &PreGdStructure) -> Result<()> {
        self.lhd = tuples_of(&p.lhd, false)?;
        self.rhd = tuples_of(&p.rhd, false)?;
        self.diamond = tuples_of(&p.diamond, false)?;
        Ok(())
    }

    pub fn set_r(&mut self, r: &RMatrix) -> Result<()> {
        let mut out = Vec::new();
        for (i, j, c) in r.t.nonzero() {
            let (p, q) = pair(c)?;
            out.push([i as i64 + 1, j as i64 + 1, p, q]);
        }
        out.sort();
        self.r = Some(out);
        Ok(())
    }

    pub fn set_rep(&mut self, rep: &Representation) -> Result<()> {
        self.rep = Some(rep_file(rep)?);
        Ok(())
    }

    pub fn set_form(&mut self, form: &BilinearForm) -> Result<()> {
        self.form = Some(matrix_of(&form.gram)?);
        Ok(())
    }

    pub fn set_operator(&mut self, t: &Matrix<Scalar>) -> Result<()> {
        self.operator = Some(matrix_of(t)?);
        Ok(())
    }

    /// Labels are written only when they differ from e1, e2, ….
    fn set_labels(&mut self, labels: &[String]) {
        self.basis = (labels != basis_labels(self.dim).as_slice()).then(|| labels.to_vec());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const NOVIKOV_TYPE: &str =
        r#"{"dim": 2, "circ": [[1, 2, 2, 1, 1]], "delta0": [[2, 1, 2, 1, 1], [2, 2, 1, -1, 1]]}"#;

    #[test]
    fn parses_tables() {
        let f = StructureFile::parse(NOVIKOV_TYPE).unwrap();
        let d = f.bialgebra().unwrap();
        assert_eq!(d.alg.circ.get(0, 1, 1), &Scalar::one());
        assert_eq!(d.co.cobracket.get(0, 1, 1), &Scalar::one());
        assert_eq!(d.co.cobracket.get(1, 0, 1), &Scalar::from(-1));
    }

    #[test]
    fn round_trip() {
        let f = StructureFile::parse(NOVIKOV_TYPE).unwrap();
        let g = StructureFile::from_bialgebra(&f.bialgebra().unwrap()).unwrap();
        assert_eq!(f, g);
        assert_eq!(StructureFile::parse(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            r#"{"dim": 2, "cric": []}"#,
            r#"{"dim": 2, "circ": [[1, 3, 1, 1, 1]]}"#,
            r#"{"dim": 2, "circ": [[1, 1, 1, 1, 0]]}"#,
            r#"{"dim": 2, "circ": [[1, 1, 1, 1, 1], [1, 1, 1, 2, 1]]}"#,
            r#"{"dim": 2, "circ": [[1, 1, 1, 1.5, 1]]}"#,
            r#"{"dim": 2, "form": [[1, 0]]}"#,
            r#"{"dim": 2"#,
        ] {
            assert!(matches!(StructureFile::parse(text), Err(Error::Parse(_))), "{text}");
        }
    }

    #[test]
    fn fractions_in_matrices() {
        let f = StructureFile::parse(r#"{"dim": 1, "form": [[[1, 2]]]}"#).unwrap();
        assert_eq!(f.bilinear_form().unwrap().gram.get(0, 0), &Scalar::ratio(1, 2));
        let mut g = StructureFile { dim: 1, ..Default::default() };
        g.set_form(&f.bilinear_form().unwrap()).unwrap();
        assert_eq!(f, g);
    }
}
