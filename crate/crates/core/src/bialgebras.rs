//! Bialgebra compatibility checks, special types, matched pairs, quadratic
//! forms and the standard Manin triple on A ⊕ A*.

use serde::Serialize;

use crate::costructures::{check_coalgebra, dualize_coalgebra, CoalgebraKind, CoalgebraStructure};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Tensor2};
use crate::operators::{check_representation, dual_action, RepKind, Representation};
use crate::structures::{
    check_algebra, op_e, AlgebraKind, AlgebraStructure, AxiomReport, Defect, OperatorKind, Table, Vector,
};

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BialgebraData {
    pub alg: AlgebraStructure,
    pub co: CoalgebraStructure,
}

impl BialgebraData {
    pub fn new(alg: AlgebraStructure, co: CoalgebraStructure) -> Result<Self> {
        if alg.dim != co.dim {
            return Err(Error::Dimension(format!("algebra dim {} vs coalgebra dim {}", alg.dim, co.dim)));
        }
        Ok(BialgebraData { alg, co })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BialgebraKind {
    Novikov,
    Lie,
    Gd,
}

/// Operator matrices at every basis vector.
pub(crate) struct Ops {
    pub lc: Vec<Matrix<Scalar>>,
    pub rc: Vec<Matrix<Scalar>>,
    pub ls: Vec<Matrix<Scalar>>,
    pub ad: Vec<Matrix<Scalar>>,
}

impl Ops {
    pub fn new(alg: &AlgebraStructure) -> Self {
        let all = |k| (0..alg.dim).map(|i| op_e(alg, k, i)).collect();
        Ops {
            lc: all(OperatorKind::LeftCirc),
            rc: all(OperatorKind::RightCirc),
            ls: all(OperatorKind::LeftStar),
            ad: all(OperatorKind::Ad),
        }
    }
}

pub(crate) fn on0(t: &Tensor2<Scalar>, m: &Matrix<Scalar>) -> Tensor2<Scalar> {
    t.apply_to_factor(0, m).expect("operator matches factor")
}

pub(crate) fn on1(t: &Tensor2<Scalar>, m: &Matrix<Scalar>) -> Tensor2<Scalar> {
    t.apply_to_factor(1, m).expect("operator matches factor")
}

/// a.(x ⊗ y) = [a,x] ⊗ y + x ⊗ [a,y]
pub(crate) fn dot_action(ad: &Matrix<Scalar>, t: &Tensor2<Scalar>) -> Tensor2<Scalar> {
    on0(t, ad).add(&on1(t, ad))
}

fn sym(t: &Tensor2<Scalar>) -> Tensor2<Scalar> {
    t.add(&t.flip(false))
}

fn novikov_compat(alg: &AlgebraStructure, co: &CoalgebraStructure, ops: &Ops, report: &mut AxiomReport) {
    let n = alg.dim;
    let big = |k: usize| co.big_delta_e(k);
    for a in 0..n {
        for b in 0..n {
            let (da, db) = (big(a), big(b));
            let lb5 = co.big_delta(&alg.circ.row(a, b)).sub(&on0(&da, &ops.rc[b])).sub(&on1(&sym(&db), &ops.ls[a]));
            report.check_t2("novikov-bialgebra.coproduct-of-product", &[a, b], lb5);

            let lhs = on0(&db, &ops.ls[a]).sub(&on1(&db.flip(false), &ops.ls[a]));
            let rhs = on0(&da, &ops.ls[b]).sub(&on1(&da.flip(false), &ops.ls[b]));
            report.check_t2("novikov-bialgebra.star-exchange", &[a, b], lhs.sub(&rhs));

            let side = |x: usize, t: &Tensor2<Scalar>| on1(&sym(t), &ops.rc[x]).sub(&on0(&sym(t), &ops.rc[x]));
            report.check_t2("novikov-bialgebra.right-exchange", &[a, b], side(a, &db).sub(&side(b, &da)));
        }
    }
}

fn lie_compat(alg: &AlgebraStructure, co: &CoalgebraStructure, ops: &Ops, report: &mut AxiomReport) {
    let n = alg.dim;
    for a in 0..n {
        for b in 0..n {
            let d = co
                .small_delta(&alg.bracket.row(a, b))
                .sub(&dot_action(&ops.ad[a], &co.small_delta_e(b)))
                .add(&dot_action(&ops.ad[b], &co.small_delta_e(a)));
            report.check_t2("lie-bialgebra.cocycle", &[a, b], d);
        }
    }
}

fn gd_compat(alg: &AlgebraStructure, co: &CoalgebraStructure, ops: &Ops, report: &mut AxiomReport) {
    let n = alg.dim;
    for a in 0..n {
        for b in 0..n {
            let (da, db) = (co.big_delta_e(a), co.big_delta_e(b));
            let (sa, sb) = (co.small_delta_e(a), co.small_delta_e(b));
            let d = co
                .small_delta(&alg.circ.row(b, a))
                .add(&co.big_delta(&alg.bracket.row(a, b)))
                .sub(&on0(&sb, &ops.rc[a]))
                .sub(&on0(&sa, &ops.lc[b]))
                .sub(&on1(&sa, &ops.ls[b]))
                .sub(&dot_action(&ops.ad[a], &db))
                .add(&on1(&sym(&da), &ops.ad[b]));
            report.check_t2("gd-bialgebra.compatibility", &[a, b], d);
        }
    }
}

pub fn check_bialgebra(d: &BialgebraData, kind: BialgebraKind) -> AxiomReport {
    let (alg, co) = (&d.alg, &d.co);
    let ops = Ops::new(alg);
    let mut report = AxiomReport::new();
    match kind {
        BialgebraKind::Novikov => {
            report.merge(check_algebra(alg, AlgebraKind::Novikov));
            report.merge(check_coalgebra(co, CoalgebraKind::Novikov));
            novikov_compat(alg, co, &ops, &mut report);
        }
        BialgebraKind::Lie => {
            report.merge(check_algebra(alg, AlgebraKind::Lie));
            report.merge(check_coalgebra(co, CoalgebraKind::Lie));
            lie_compat(alg, co, &ops, &mut report);
        }
        BialgebraKind::Gd => {
            report.merge(check_algebra(alg, AlgebraKind::Gd));
            report.merge(check_coalgebra(co, CoalgebraKind::Gd));
            novikov_compat(alg, co, &ops, &mut report);
            lie_compat(alg, co, &ops, &mut report);
            gd_compat(alg, co, &ops, &mut report);
        }
    }
    report
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialType {
    NovikovType,
    LieType,
    NovikovBialgebraOnly,
    LieBialgebraOnly,
    General,
}

impl SpecialType {
    pub fn name(self) -> &'static str {
        match self {
            SpecialType::NovikovType => "novikov_type",
            SpecialType::LieType => "lie_type",
            SpecialType::NovikovBialgebraOnly => "novikov_bialgebra_only",
            SpecialType::LieBialgebraOnly => "lie_bialgebra_only",
            SpecialType::General => "general",
        }
    }
}

/// Labels a valid bialgebra by which of its four tables vanish. Earlier labels win when
/// several apply (the zero bialgebra is `novikov_type`).
pub fn classify_special(d: &BialgebraData) -> Result<SpecialType> {
    let report = check_bialgebra(d, BialgebraKind::Gd);
    if !report.passed {
        return Err(Error::Precondition(format!("not a GD bialgebra (failed: {})", report.failed_axioms().join(", "))));
    }
    let (circ0, br0) = (d.alg.circ.is_zero(), d.alg.bracket.is_zero());
    let (big0, small0) = (d.co.coproduct.is_zero(), d.co.cobracket.is_zero());
    Ok(if big0 && br0 {
        SpecialType::NovikovType
    } else if circ0 && small0 {
        SpecialType::LieType
    } else if br0 && small0 {
        SpecialType::NovikovBialgebraOnly
    } else if circ0 && big0 {
        SpecialType::LieBialgebraOnly
    } else {
        SpecialType::General
    })
}

/// Two algebras acting on each other. `l_a[i]` is the action of the `i`-th basis vector
/// of `a` on `b` (an m×m matrix); `l_b[j]` acts on `a` (n×n).
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MatchedPairData {
    pub a: AlgebraStructure,
    pub b: AlgebraStructure,
    pub l_a: Vec<Matrix<Scalar>>,
    pub r_a: Vec<Matrix<Scalar>>,
    pub rho_a: Vec<Matrix<Scalar>>,
    pub l_b: Vec<Matrix<Scalar>>,
    pub r_b: Vec<Matrix<Scalar>>,
    pub rho_b: Vec<Matrix<Scalar>>,
}

impl MatchedPairData {
    /// Both algebras given, all actions zero.
    pub fn direct_sum(a: AlgebraStructure, b: AlgebraStructure) -> Self {
        let (n, m) = (a.dim, b.dim);
        MatchedPairData {
            l_a: vec![Matrix::zeros(m, m); n],
            r_a: vec![Matrix::zeros(m, m); n],
            rho_a: vec![Matrix::zeros(m, m); n],
            l_b: vec![Matrix::zeros(n, n); m],
            r_b: vec![Matrix::zeros(n, n); m],
            rho_b: vec![Matrix::zeros(n, n); m],
            a,
            b,
        }
    }

    fn validate(&self) -> Result<()> {
        let (n, m) = (self.a.dim, self.b.dim);
        let ok = |ms: &[Matrix<Scalar>], count: usize, size: usize| {
            ms.len() == count && ms.iter().all(|x| x.rows() == size && x.cols() == size)
        };
        if ok(&self.l_a, n, m)
            && ok(&self.r_a, n, m)
            && ok(&self.rho_a, n, m)
            && ok(&self.l_b, m, n)
            && ok(&self.r_b, m, n)
            && ok(&self.rho_b, m, n)
        {
            Ok(())
        } else {
            Err(Error::Dimension("matched pair action matrices have inconsistent shapes".into()))
        }
    }

    pub fn rep_of_a_on_b(&self) -> Representation {
        Representation {
            alg_dim: self.a.dim,
            rep_dim: self.b.dim,
            l: self.l_a.clone(),
            r: self.r_a.clone(),
            rho: self.rho_a.clone(),
        }
    }

    pub fn rep_of_b_on_a(&self) -> Representation {
        Representation {
            alg_dim: self.b.dim,
            rep_dim: self.a.dim,
            l: self.l_b.clone(),
            r: self.r_b.clone(),
            rho: self.rho_b.clone(),
        }
    }
}

fn act(ms: &[Matrix<Scalar>], x: &Vector, v: &Vector) -> Vector {
    let mut out = Vector::zeros(v.dim());
    for (i, m) in ms.iter().enumerate() {
        let c = x.get(i);
        if !c.is_zero() {
            out.add_scaled(c, &m.apply(v));
        }
    }
    out
}

/// The algebra on A ⊕ B (A-basis first) with the mixed product and bracket.
pub fn build_double(mp: &MatchedPairData) -> Result<AlgebraStructure> {
    mp.validate()?;
    let (n, m) = (mp.a.dim, mp.b.dim);
    let dim = n + m;
    let mut circ = Table::zeros(dim);
    let mut br = Table::zeros(dim);
    let split = |k: usize| -> (Vector, Vector) {
        if k < n {
            (Vector::basis(n, k), Vector::zeros(m))
        } else {
            (Vector::zeros(n), Vector::basis(m, k - n))
        }
    };
    let join = |a: &Vector, b: &Vector| -> Vector {
        Vector::from_vec(a.entries().iter().chain(b.entries()).cloned().collect())
    };
    for p in 0..dim {
        let (a, x) = split(p);
        for q in 0..dim {
            let (b, y) = split(q);
            let pa = mp.a.circ(&a, &b).add(&act(&mp.l_b, &x, &b)).add(&act(&mp.r_b, &y, &a));
            let pb = mp.b.circ(&x, &y).add(&act(&mp.l_a, &a, &y)).add(&act(&mp.r_a, &b, &x));
            circ.set_row(p, q, &join(&pa, &pb));
            let ba = mp.a.br(&a, &b).add(&act(&mp.rho_b, &x, &b)).sub(&act(&mp.rho_b, &y, &a));
            let bb = mp.b.br(&x, &y).add(&act(&mp.rho_a, &a, &y)).sub(&act(&mp.rho_a, &b, &x));
            br.set_row(p, q, &join(&ba, &bb));
        }
    }
    let labels = mp.a.basis_labels.iter().chain(&mp.b.basis_labels).cloned().collect();
    Ok(AlgebraStructure { dim, circ, bracket: br, basis_labels: labels })
}

/// Verdict from the double; the component conditions are kept as diagnostics.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MatchedPairReport {
    pub passed: bool,
    pub double: AxiomReport,
    pub diagnostics: AxiomReport,
}

fn match_conditions(mp: &MatchedPairData, report: &mut AxiomReport) {
    let (n, m) = (mp.a.dim, mp.b.dim);
    let (ea, eb) = (|i| Vector::basis(n, i), |i| Vector::basis(m, i));
    let (ca, ba) = (|u: &Vector, v: &Vector| mp.a.circ(u, v), |u: &Vector, v: &Vector| mp.a.br(u, v));
    let (cb, bb) = (|u: &Vector, v: &Vector| mp.b.circ(u, v), |u: &Vector, v: &Vector| mp.b.br(u, v));
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                let (a, b, x) = (ea(i), ea(j), eb(k));
                let m1 = ba(&a, &act(&mp.r_b, &x, &b))
                    .sub(&act(&mp.rho_b, &act(&mp.l_a, &b, &x), &a))
                    .sub(&act(&mp.rho_b, &x, &ca(&b, &a)))
                    .add(&act(&mp.r_b, &x, &ba(&b, &a)))
                    .add(&ca(&act(&mp.rho_b, &x, &b), &a))
                    .sub(&act(&mp.l_b, &act(&mp.rho_a, &b, &x), &a))
                    .add(&ca(&b, &act(&mp.rho_b, &x, &a)))
                    .sub(&act(&mp.r_b, &act(&mp.rho_a, &a, &x), &b));
                report.check_vec("match1", &[i, j, k], m1);
                let m2 = ba(&a, &act(&mp.l_b, &x, &b))
                    .sub(&act(&mp.rho_b, &act(&mp.r_a, &b, &x), &a))
                    .sub(&ba(&b, &act(&mp.l_b, &x, &a)))
                    .add(&act(&mp.rho_b, &act(&mp.r_a, &a, &x), &b))
                    .add(&ca(&act(&mp.rho_b, &x, &a), &b))
                    .sub(&act(&mp.l_b, &act(&mp.rho_a, &a, &x), &b))
                    .sub(&ca(&act(&mp.rho_b, &x, &b), &a))
                    .add(&act(&mp.l_b, &act(&mp.rho_a, &b, &x), &a))
                    .sub(&act(&mp.l_b, &x, &ba(&a, &b)));
                report.check_vec("match2", &[i, j, k], m2);
            }
        }
    }
    for i in 0..n {
        for j in 0..m {
            for k in 0..m {
                let (a, x, y) = (ea(i), eb(j), eb(k));
                let m3 = bb(&y, &act(&mp.r_a, &a, &x))
                    .sub(&act(&mp.rho_a, &a, &cb(&x, &y)))
                    .sub(&act(&mp.rho_a, &act(&mp.l_b, &x, &a), &y))
                    .add(&cb(&act(&mp.rho_a, &a, &x), &y))
                    .sub(&act(&mp.l_a, &act(&mp.rho_b, &x, &a), &y))
                    .add(&act(&mp.r_a, &a, &bb(&x, &y)))
                    .add(&cb(&x, &act(&mp.rho_a, &a, &y)))
                    .sub(&act(&mp.r_a, &act(&mp.rho_b, &y, &a), &x));
                report.check_vec("match3", &[i, j, k], m3);
                let m4 = bb(&x, &act(&mp.l_a, &a, &y))
                    .sub(&act(&mp.rho_a, &act(&mp.r_b, &y, &a), &x))
                    .sub(&bb(&y, &act(&mp.l_a, &a, &x)))
                    .add(&act(&mp.rho_a, &act(&mp.r_b, &x, &a), &y))
                    .add(&cb(&act(&mp.rho_a, &a, &x), &y))
                    .sub(&act(&mp.l_a, &act(&mp.rho_b, &x, &a), &y))
                    .sub(&cb(&act(&mp.rho_a, &a, &y), &x))
                    .add(&act(&mp.l_a, &act(&mp.rho_b, &y, &a), &x))
                    .sub(&act(&mp.l_a, &a, &bb(&x, &y)));
                report.check_vec("match4", &[i, j, k], m4);
            }
        }
    }
}

pub fn check_matched_pair(mp: &MatchedPairData) -> Result<MatchedPairReport> {
    let double = build_double(mp)?;
    let primary = check_algebra(&double, AlgebraKind::Gd);
    let mut diag = AxiomReport::new();
    diag.merge_prefixed("A.", check_algebra(&mp.a, AlgebraKind::Gd));
    diag.merge_prefixed("B.", check_algebra(&mp.b, AlgebraKind::Gd));
    diag.merge_prefixed("novikov-matched-pair.", check_algebra(&double, AlgebraKind::Novikov));
    diag.merge_prefixed("lie-matched-pair.", check_algebra(&double, AlgebraKind::Lie));
    diag.merge_prefixed("rep-of-A-on-B.", check_representation(&mp.a, &mp.rep_of_a_on_b(), RepKind::Gd)?);
    diag.merge_prefixed("rep-of-B-on-A.", check_representation(&mp.b, &mp.rep_of_b_on_a(), RepKind::Gd)?);
    match_conditions(mp, &mut diag);
    Ok(MatchedPairReport { passed: primary.passed, double: primary, diagnostics: diag })
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BilinearForm {
    pub dim: usize,
    pub gram: Matrix<Scalar>,
}

impl BilinearForm {
    pub fn new(gram: Matrix<Scalar>) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Dimension("Gram matrix is not square".into()));
        }
        Ok(BilinearForm { dim: gram.rows(), gram })
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm { dim: n, gram: Matrix::identity(n) }
    }

    /// (a + f, b + g) = ⟨f, b⟩ + ⟨g, a⟩ on A ⊕ A*.
    pub fn hyperbolic(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            g.set(i, n + i, Scalar::one());
            g.set(n + i, i, Scalar::one());
        }
        BilinearForm { dim: 2 * n, gram: g }
    }

    pub fn eval(&self, u: &Vector, v: &Vector) -> Scalar {
        let gv = self.gram.apply(v);
        let mut s = Scalar::zero();
        for i in 0..self.dim {
            if !u.get(i).is_zero() {
                s += &(u.get(i) * gv.get(i));
            }
        }
        s
    }

    pub(crate) fn symmetry_and_rank(&self, report: &mut AxiomReport) {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let d = self.gram.get(i, j) - self.gram.get(j, i);
                if !d.is_zero() {
                    report.fail("form.symmetry", &[i, j], Defect::Scalar(d));
                }
            }
        }
        if self.gram.determinant().is_zero() {
            report.fail("form.nondegeneracy", &[], Defect::Note("determinant is zero".into()));
        }
    }
}

/// A GD algebra with a symmetric nondegenerate form invariant for both products.
pub fn check_quadratic_gd(alg: &AlgebraStructure, form: &BilinearForm) -> Result<AxiomReport> {
    crate::error::dim_check("form dimension", alg.dim, form.dim)?;
    let mut report = AxiomReport::new();
    report.merge_prefixed("algebra.", check_algebra(alg, AlgebraKind::Gd));
    form.symmetry_and_rank(&mut report);
    let n = alg.dim;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ea, eb, ec) = (alg.e(a), alg.e(b), alg.e(c));
                let nov = &form.eval(&alg.circ.row(a, b), &ec) + &form.eval(&eb, &alg.star(&ea, &ec));
                if !nov.is_zero() {
                    report.fail("quadratic.novikov-invariance", &[a, b, c], Defect::Scalar(nov));
                }
                let lie = &form.eval(&alg.bracket.row(a, b), &ec) - &form.eval(&ea, &alg.bracket.row(b, c));
                if !lie.is_zero() {
                    report.fail("quadratic.lie-invariance", &[a, b, c], Defect::Scalar(lie));
                }
            }
        }
    }
    Ok(report)
}

/// The matched pair (A, A*, L⋆*, −R∘*, ad*, ...) attached to a bialgebra.
pub fn standard_matched_pair(d: &BialgebraData) -> MatchedPairData {
    let n = d.dim();
    let a = d.alg.clone();
    let mut b = dualize_coalgebra(&d.co);
    b.basis_labels = a.basis_labels.iter().map(|l| format!("{l}*")).collect();
    let coadjoint = |alg: &AlgebraStructure| {
        let ops = Ops::new(alg);
        let l: Vec<_> = ops.ls.iter().map(dual_action).collect();
        let r: Vec<_> = ops.rc.iter().map(|m| dual_action(m).neg()).collect();
        let rho: Vec<_> = ops.ad.iter().map(dual_action).collect();
        (l, r, rho)
    };
    let (l_a, r_a, rho_a) = coadjoint(&a);
    let (l_b, r_b, rho_b) = coadjoint(&b);
    debug_assert_eq!(l_a.len(), n);
    MatchedPairData { a, b, l_a, r_a, rho_a, l_b, r_b, rho_b }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ManinTriple {
    pub double: AlgebraStructure,
    pub form: BilinearForm,
    pub report: AxiomReport,
}

/// The double A ⊕ A* with the hyperbolic form, and its quadratic-GD verdict.
pub fn build_standard_manin(d: &BialgebraData) -> ManinTriple {
    let mp = standard_matched_pair(d);
    let double = build_double(&mp).expect("standard matched pair has consistent shapes");
    let form = BilinearForm::hyperbolic(d.dim());
    let report = check_quadratic_gd(&double, &form).expect("form matches double");
    ManinTriple { double, form, report }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn novikov_type() -> BialgebraData {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        let mut co = CoalgebraStructure::zero(2);
        co.cobracket.set(0, 1, 1, s(1));
        co.cobracket.set(1, 0, 1, s(-1));
        BialgebraData::new(alg, co).unwrap()
    }

    fn lie_type() -> BialgebraData {
        let mut alg = AlgebraStructure::zero(2);
        alg.bracket.set(0, 1, 1, s(1));
        alg.bracket.set(1, 0, 1, s(-1));
        let mut co = CoalgebraStructure::zero(2);
        co.coproduct.set(0, 1, 1, s(1));
        BialgebraData::new(alg, co).unwrap()
    }

    #[test]
    fn small_bialgebras_pass_and_classify() {
        assert!(check_bialgebra(&novikov_type(), BialgebraKind::Gd).passed);
        assert!(check_bialgebra(&lie_type(), BialgebraKind::Gd).passed);
        assert_eq!(classify_special(&novikov_type()).unwrap(), SpecialType::NovikovType);
        assert_eq!(classify_special(&lie_type()).unwrap(), SpecialType::LieType);
    }

    #[test]
    fn non_antisymmetric_cobracket_breaks_lie_side() {
        let mut d = novikov_type();
        d.co.cobracket.set(1, 0, 1, s(0));
        let r = check_bialgebra(&d, BialgebraKind::Lie);
        assert!(r.has_failure("lie-coalgebra.antisymmetry"));
        assert!(classify_special(&d).is_err());
    }

    #[test]
    fn coadjoint_maps_on_a_hand_computed_instance() {
        // A: e1∘e2 = e2. L⋆(e1) sends e2 ↦ e2 and e1 ↦ 0; its dual sends e2* ↦ −e2*.
        let d = novikov_type();
        let mp = standard_matched_pair(&d);
        let l = &mp.l_a[0];
        assert_eq!(l.get(1, 1), &s(-1));
        assert!(l.get(0, 0).is_zero() && l.get(0, 1).is_zero() && l.get(1, 0).is_zero());
        // R∘(e2) sends e1 ↦ e2; −R∘(e2)* sends e2* ↦ +e1*.
        let r = &mp.r_a[1];
        assert_eq!(r.get(0, 1), &s(1));
        assert_eq!(r.get(1, 0), &s(0));
        // the Lie side of A is abelian, so ad* vanishes
        assert!(mp.rho_a.iter().all(Matrix::is_zero));
    }

    #[test]
    fn identity_form_is_not_invariant() {
        let d = novikov_type();
        let r = check_quadratic_gd(&d.alg, &BilinearForm::identity(2)).unwrap();
        assert!(r.has_failure("quadratic.novikov-invariance"));
        let zero = AlgebraStructure::zero(2);
        assert!(check_quadratic_gd(&zero, &BilinearForm::identity(2)).unwrap().passed);
    }

    #[test]
    fn manin_verdicts_on_small_cases() {
        assert!(build_standard_manin(&novikov_type()).report.passed);
        let mut bad = novikov_type();
        bad.co.coproduct.set(0, 0, 0, s(1));
        assert!(!build_standard_manin(&bad).report.passed);
        let zero = BialgebraData::new(AlgebraStructure::zero(2), CoalgebraStructure::zero(2)).unwrap();
        assert!(build_standard_manin(&zero).report.passed);
    }
}
