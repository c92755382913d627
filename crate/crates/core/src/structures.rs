//! Algebras given by structure constants, multiplication operators, and the
//! Novikov / Lie / compatibility identity checks.

use serde::Serialize;

use crate::error::{dim_check, Result};
use crate::exactalg::{CoeffVector, MPoly, Matrix, Scalar, Tensor2, Tensor3};

pub type Vector = CoeffVector<Scalar>;

/// Bilinear table: entry `(i, j, k)` is the coefficient of `e_k` in the product of `e_i` and `e_j`.
/// The same layout stores coproducts, with `(i, j, k)` the coefficient of `e_i ⊗ e_j` in the image of `e_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table {
    n: usize,
    data: Vec<Scalar>,
}

impl Table {
    pub fn zeros(n: usize) -> Self {
        Table { n, data: vec![Scalar::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let x = self.idx(i, j, k);
        self.data[x] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, c: &Scalar) {
        let x = self.idx(i, j, k);
        self.data[x] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(i, j, k, c)`, 0-based, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(x, c)| (x / (n * n), (x / n) % n, x % n, c))
    }

    /// The vector stored at `(i, j, ·)`.
    pub fn row(&self, i: usize, j: usize) -> Vector {
        let s = self.idx(i, j, 0);
        CoeffVector::from_vec(self.data[s..s + self.n].to_vec())
    }

    pub fn set_row(&mut self, i: usize, j: usize, v: &Vector) {
        for k in 0..self.n {
            self.set(i, j, k, v.get(k).clone());
        }
    }

    /// `(i, j, ·)` entries read as a 2-tensor indexed by `(i, j)` for fixed `k`.
    pub fn slice(&self, k: usize) -> Tensor2<Scalar> {
        let mut t = Tensor2::square(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(i, j, self.get(i, j, k).clone());
            }
        }
        t
    }

    pub fn set_slice(&mut self, k: usize, t: &Tensor2<Scalar>) {
        for i in 0..self.n {
            for j in 0..self.n {
                self.set(i, j, k, t.get(i, j).clone());
            }
        }
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.n);
        for i in 0..self.n {
            let a = u.get(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..self.n {
                let b = v.get(j);
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for k in 0..self.n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.add_at(k, &(&ab * c));
                    }
                }
            }
        }
        out
    }

    /// Linear extension of the comultiplication `e_k ↦ Σ (i,j,k) e_i ⊗ e_j`.
    pub fn comul(&self, a: &Vector) -> Tensor2<Scalar> {
        let mut t = Tensor2::square(self.n);
        for (i, j, k, c) in self.entries() {
            let x = a.get(k);
            if !x.is_zero() {
                t.add_at(i, j, &(x * c));
            }
        }
        t
    }

    pub fn add(&self, o: &Table) -> Table {
        Table { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Table) -> Table {
        Table { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Table {
        Table { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Table of the opposite product `(a, b) ↦ b·a`.
    pub fn opposite(&self) -> Table {
        let mut t = Table::zeros(self.n);
        for (i, j, k, c) in self.entries() {
            t.set(j, i, k, c.clone());
        }
        t
    }
}

pub(crate) fn basis_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// A vector space with a product ∘ and a bracket [·,·], both by structure constants.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct AlgebraStructure {
    pub dim: usize,
    pub circ: Table,
    pub bracket: Table,
    pub basis_labels: Vec<String>,
}

impl AlgebraStructure {
    pub fn zero(dim: usize) -> Self {
        AlgebraStructure { dim, circ: Table::zeros(dim), bracket: Table::zeros(dim), basis_labels: basis_labels(dim) }
    }

    pub fn new(circ: Table, bracket: Table) -> Self {
        let dim = circ.dim();
        assert_eq!(dim, bracket.dim(), "table dimensions differ");
        AlgebraStructure { dim, circ, bracket, basis_labels: basis_labels(dim) }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.basis_labels = labels;
        self
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    pub fn circ(&self, a: &Vector, b: &Vector) -> Vector {
        self.circ.mul(a, b)
    }

    pub fn br(&self, a: &Vector, b: &Vector) -> Vector {
        self.bracket.mul(a, b)
    }

    pub fn star(&self, a: &Vector, b: &Vector) -> Vector {
        self.circ(a, b).add(&self.circ(b, a))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductKind {
    Circ,
    Bracket,
    Star,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    LeftCirc,
    RightCirc,
    LeftStar,
    Ad,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Novikov,
    Lie,
    GdCompat,
    Gd,
}

pub fn evaluate(alg: &AlgebraStructure, kind: ProductKind, a: &Vector, b: &Vector) -> Result<Vector> {
    dim_check("left operand", alg.dim, a.dim())?;
    dim_check("right operand", alg.dim, b.dim())?;
    Ok(match kind {
        ProductKind::Circ => alg.circ(a, b),
        ProductKind::Bracket => alg.br(a, b),
        ProductKind::Star => alg.star(a, b),
    })
}

pub fn operator_matrix(alg: &AlgebraStructure, kind: OperatorKind, a: &Vector) -> Result<Matrix<Scalar>> {
    dim_check("operator argument", alg.dim, a.dim())?;
    Ok(op(alg, kind, a))
}

pub(crate) fn op(alg: &AlgebraStructure, kind: OperatorKind, a: &Vector) -> Matrix<Scalar> {
    let cols: Vec<Vector> = (0..alg.dim)
        .map(|j| {
            let ej = alg.e(j);
            match kind {
                OperatorKind::LeftCirc => alg.circ(a, &ej),
                OperatorKind::RightCirc => alg.circ(&ej, a),
                OperatorKind::LeftStar => alg.star(a, &ej),
                OperatorKind::Ad => alg.br(a, &ej),
            }
        })
        .collect();
    Matrix::from_columns(&cols, alg.dim)
}

/// Operator matrix at the basis vector `e_i`.
pub(crate) fn op_e(alg: &AlgebraStructure, kind: OperatorKind, i: usize) -> Matrix<Scalar> {
    op(alg, kind, &alg.e(i))
}

/// The value by which an identity failed.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(tag = "type", content = "value")]
pub enum Defect {
    Scalar(Scalar),
    Vector(CoeffVector<Scalar>),
    Matrix(Matrix<Scalar>),
    Tensor2(Tensor2<Scalar>),
    Tensor3(Tensor3<Scalar>),
    PolyVector(CoeffVector<MPoly>),
    PolyMatrix(Matrix<MPoly>),
    PolyTensor2(Tensor2<MPoly>),
    PolyTensor3(Tensor3<MPoly>),
    Note(String),
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Violation {
    pub axiom: String,
    /// Basis indices, 1-based.
    pub witness: Vec<usize>,
    pub defect: Defect,
}

/// Outcome of an identity check. `passed` holds exactly when `violations` is empty.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl Default for AxiomReport {
    fn default() -> Self {
        AxiomReport { passed: true, violations: Vec::new() }
    }
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a violation; `witness` is 0-based and stored 1-based.
    pub fn fail(&mut self, axiom: impl Into<String>, witness: &[usize], defect: Defect) {
        self.passed = false;
        self.violations.push(Violation {
            axiom: axiom.into(),
            witness: witness.iter().map(|i| i + 1).collect(),
            defect,
        });
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.passed &= other.passed;
        self.violations.extend(other.violations);
    }

    pub fn merge_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        self.passed &= other.passed;
        self.violations.extend(other.violations.into_iter().map(|mut v| {
            v.axiom = format!("{prefix}{}", v.axiom);
            v
        }));
    }

    /// Distinct axiom ids that failed, in first-failure order.
    pub fn failed_axioms(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.axiom.as_str()) {
                out.push(&v.axiom);
            }
        }
        out
    }

    pub fn has_failure(&self, axiom_prefix: &str) -> bool {
        self.violations.iter().any(|v| v.axiom.starts_with(axiom_prefix))
    }

    pub(crate) fn check_vec(&mut self, axiom: &str, witness: &[usize], d: Vector) {
        if !d.is_zero() {
            self.fail(axiom, witness, Defect::Vector(d));
        }
    }

    pub(crate) fn check_mat(&mut self, axiom: &str, witness: &[usize], d: Matrix<Scalar>) {
        if !d.is_zero() {
            self.fail(axiom, witness, Defect::Matrix(d));
        }
    }

    pub(crate) fn check_t2(&mut self, axiom: &str, witness: &[usize], d: Tensor2<Scalar>) {
        if !d.is_zero() {
            self.fail(axiom, witness, Defect::Tensor2(d));
        }
    }

    pub(crate) fn check_t3(&mut self, axiom: &str, witness: &[usize], d: Tensor3<Scalar>) {
        if !d.is_zero() {
            self.fail(axiom, witness, Defect::Tensor3(d));
        }
    }
}

/// Novikov identities on one product table.
pub(crate) fn novikov_identities(t: &Table, report: &mut AxiomReport) {
    let n = t.dim();
    let e = |i| Vector::basis(n, i);
    for a in 0..n {
        for b in 0..n {
            let ab = t.row(a, b);
            let ba = t.row(b, a);
            for c in 0..n {
                let ab_c = t.mul(&ab, &e(c));
                let ac = t.row(a, c);
                let ac_b = t.mul(&ac, &e(b));
                let lhs = ab_c.sub(&t.mul(&e(a), &t.row(b, c)));
                let rhs = t.mul(&ba, &e(c)).sub(&t.mul(&e(b), &ac));
                report.check_vec("novikov.left-symmetry", &[a, b, c], lhs.sub(&rhs));
                report.check_vec("novikov.right-commutativity", &[a, b, c], ab_c.sub(&ac_b));
            }
        }
    }
}

/// Lie identities on one bracket table.
pub(crate) fn lie_identities(t: &Table, report: &mut AxiomReport) {
    let n = t.dim();
    let e = |i| Vector::basis(n, i);
    for a in 0..n {
        for b in a..n {
            report.check_vec("lie.antisymmetry", &[a, b], t.row(a, b).add(&t.row(b, a)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let j = t.mul(&e(a), &t.row(b, c)).add(&t.mul(&e(b), &t.row(c, a))).add(&t.mul(&e(c), &t.row(a, b)));
                report.check_vec("lie.jacobi", &[a, b, c], j);
            }
        }
    }
}

fn compat_identity(alg: &AlgebraStructure, report: &mut AxiomReport) {
    let n = alg.dim;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ea, eb, ec) = (alg.e(a), alg.e(b), alg.e(c));
                let d = alg
                    .br(&alg.circ.row(a, b), &ec)
                    .sub(&alg.br(&alg.circ.row(a, c), &eb))
                    .add(&alg.circ(&alg.bracket.row(a, b), &ec))
                    .sub(&alg.circ(&alg.bracket.row(a, c), &eb))
                    .sub(&alg.circ(&ea, &alg.bracket.row(b, c)));
                report.check_vec("gd.compatibility", &[a, b, c], d);
            }
        }
    }
}

/// Checks the identities of `kind` on all basis pairs/triples.
pub fn check_algebra(alg: &AlgebraStructure, kind: AlgebraKind) -> AxiomReport {
    let mut report = AxiomReport::new();
    match kind {
        AlgebraKind::Novikov => novikov_identities(&alg.circ, &mut report),
        AlgebraKind::Lie => lie_identities(&alg.bracket, &mut report),
        AlgebraKind::GdCompat => compat_identity(alg, &mut report),
        AlgebraKind::Gd => {
            novikov_identities(&alg.circ, &mut report);
            lie_identities(&alg.bracket, &mut report);
            compat_identity(alg, &mut report);
        }
    }
    report
}

pub fn is_gd(alg: &AlgebraStructure) -> bool {
    check_algebra(alg, AlgebraKind::Gd).passed
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    // e1∘e2 = e2
    fn novikov_2() -> AlgebraStructure {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        alg
    }

    #[test]
    fn evaluate_products() {
        let alg = novikov_2();
        let (e1, e2) = (alg.e(0), alg.e(1));
        assert_eq!(evaluate(&alg, ProductKind::Circ, &e1, &e2).unwrap(), e2);
        assert_eq!(evaluate(&alg, ProductKind::Star, &e1, &e2).unwrap(), e2);
        assert!(evaluate(&alg, ProductKind::Bracket, &e1, &e2).unwrap().is_zero());
        assert!(evaluate(&alg, ProductKind::Circ, &e1, &Vector::zeros(3)).is_err());
    }

    #[test]
    fn operator_columns() {
        let alg = novikov_2();
        let l = operator_matrix(&alg, OperatorKind::LeftCirc, &alg.e(0)).unwrap();
        // only column 2 is nonzero, and it is e2
        assert!(l.column(0).is_zero());
        assert_eq!(l.column(1), alg.e(1));
        assert!(operator_matrix(&alg, OperatorKind::RightCirc, &alg.e(0)).unwrap().is_zero());
        let star = operator_matrix(&alg, OperatorKind::LeftStar, &alg.e(1)).unwrap();
        let sum = op_e(&alg, OperatorKind::LeftCirc, 1).add(&op_e(&alg, OperatorKind::RightCirc, 1));
        assert_eq!(star, sum);
    }

    #[test]
    fn small_examples() {
        assert!(check_algebra(&novikov_2(), AlgebraKind::Novikov).passed);
        let mut lie = AlgebraStructure::zero(2);
        lie.bracket.set(0, 1, 1, s(1));
        lie.bracket.set(1, 0, 1, s(-1));
        assert!(check_algebra(&lie, AlgebraKind::Lie).passed);
        assert!(check_algebra(&lie, AlgebraKind::Gd).passed);
    }

    #[test]
    fn failing_novikov_has_expected_witness() {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 0, 0, s(1));
        alg.circ.set(0, 1, 0, s(1));
        let rep = check_algebra(&alg, AlgebraKind::Novikov);
        assert!(!rep.passed);
        assert!(rep.violations.iter().any(|v| v.witness == vec![1, 2, 1] || v.witness == vec![1, 1, 2]));
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let mut alg = AlgebraStructure::zero(2);
        alg.bracket.set(0, 1, 1, s(1));
        let rep = check_algebra(&alg, AlgebraKind::Lie);
        assert_eq!(rep.failed_axioms()[0], "lie.antisymmetry");
    }
}
