//! Representations, semidirect products, dual representations, O-operators,
//! pre-GD algebras and the Zinbiel-with-derivation construction.

use serde::Serialize;

use crate::bialgebras::BialgebraData;
use crate::error::{dim_check, Error, Result};
use crate::exactalg::{Matrix, Scalar, Tensor2};
use crate::structures::{check_algebra, op_e, AlgebraKind, AlgebraStructure, AxiomReport, OperatorKind, Table, Vector};
use crate::yangbaxter::{coboundary_maps, RMatrix};

/// Maps `l, r, rho` from the basis of an `alg_dim`-dimensional algebra to `rep_dim`×`rep_dim` matrices.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Representation {
    pub alg_dim: usize,
    pub rep_dim: usize,
    pub l: Vec<Matrix<Scalar>>,
    pub r: Vec<Matrix<Scalar>>,
    pub rho: Vec<Matrix<Scalar>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepKind {
    Novikov,
    Lie,
    Gd,
}

impl Representation {
    pub fn zero(alg_dim: usize, rep_dim: usize) -> Self {
        let z = vec![Matrix::zeros(rep_dim, rep_dim); alg_dim];
        Representation { alg_dim, rep_dim, l: z.clone(), r: z.clone(), rho: z }
    }

    /// (L∘, R∘, ad) on A itself.
    pub fn adjoint(alg: &AlgebraStructure) -> Self {
        let all = |k| (0..alg.dim).map(|i| op_e(alg, k, i)).collect();
        Representation {
            alg_dim: alg.dim,
            rep_dim: alg.dim,
            l: all(OperatorKind::LeftCirc),
            r: all(OperatorKind::RightCirc),
            rho: all(OperatorKind::Ad),
        }
    }

    /// (L⋆*, −R∘*, ad*) on A*.
    pub fn coadjoint(alg: &AlgebraStructure) -> Self {
        let all = |k| (0..alg.dim).map(|i| dual_action(&op_e(alg, k, i))).collect::<Vec<_>>();
        Representation {
            alg_dim: alg.dim,
            rep_dim: alg.dim,
            l: all(OperatorKind::LeftStar),
            r: all(OperatorKind::RightCirc).iter().map(Matrix::neg).collect(),
            rho: all(OperatorKind::Ad),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |ms: &[Matrix<Scalar>]| {
            ms.len() == self.alg_dim && ms.iter().all(|m| m.rows() == self.rep_dim && m.cols() == self.rep_dim)
        };
        if ok(&self.l) && ok(&self.r) && ok(&self.rho) {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "representation needs {} matrices of size {}×{} per map",
                self.alg_dim, self.rep_dim, self.rep_dim
            )))
        }
    }
}

/// Linear combination Σ x_i ms[i].
pub(crate) fn combo(ms: &[Matrix<Scalar>], x: &Vector, size: usize) -> Matrix<Scalar> {
    let mut out = Matrix::zeros(size, size);
    for (i, m) in ms.iter().enumerate() {
        let c = x.get(i);
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Matrix of φ* under ⟨φ*(a) f, u⟩ = −⟨f, φ(a) u⟩, i.e. −φᵀ.
pub fn dual_action(m: &Matrix<Scalar>) -> Matrix<Scalar> {
    m.transpose().neg()
}

pub fn check_representation(alg: &AlgebraStructure, rep: &Representation, kind: RepKind) -> Result<AxiomReport> {
    dim_check("representation algebra dimension", alg.dim, rep.alg_dim)?;
    rep.validate()?;
    let n = alg.dim;
    let m = rep.rep_dim;
    let l = |x: &Vector| combo(&rep.l, x, m);
    let r = |x: &Vector| combo(&rep.r, x, m);
    let rho = |x: &Vector| combo(&rep.rho, x, m);
    let mut report = AxiomReport::new();
    for a in 0..n {
        for b in 0..n {
            let (la, lb, ra, rb, pa, pb) = (&rep.l[a], &rep.l[b], &rep.r[a], &rep.r[b], &rep.rho[a], &rep.rho[b]);
            let ab = alg.circ.row(a, b);
            let ba = alg.circ.row(b, a);
            if kind != RepKind::Lie {
                let d1 = l(&ab.sub(&ba)).sub(&la.mul(lb).sub(&lb.mul(la)));
                report.check_mat("rep.novikov.left-commutator", &[a, b], d1);
                let d2 = la.mul(rb).sub(&rb.mul(la)).sub(&r(&ab)).add(&rb.mul(ra));
                report.check_mat("rep.novikov.mixed", &[a, b], d2);
                report.check_mat("rep.novikov.left-of-product", &[a, b], l(&ab).sub(&rb.mul(la)));
                report.check_mat("rep.novikov.right-commute", &[a, b], ra.mul(rb).sub(&rb.mul(ra)));
            }
            if kind != RepKind::Novikov {
                let d = rho(&alg.bracket.row(a, b)).sub(&pa.mul(pb).sub(&pb.mul(pa)));
                report.check_mat("rep.lie", &[a, b], d);
            }
            if kind == RepKind::Gd {
                let g1 = pa.mul(lb).add(&rho(&ba)).add(&l(&alg.bracket.row(b, a))).sub(&ra.mul(pb)).sub(&lb.mul(pa));
                report.check_mat("rep.gd.first", &[a, b], g1);
                let g2 = pa.mul(rb).sub(&pb.mul(ra)).sub(&rb.mul(pa)).add(&ra.mul(pb)).sub(&r(&alg.bracket.row(a, b)));
                report.check_mat("rep.gd.second", &[a, b], g2);
            }
        }
    }
    Ok(report)
}

/// A ⋉ V: products on A ⊕ V with V an abelian ideal acted on by (l, r, ρ).
pub fn semidirect(alg: &AlgebraStructure, rep: &Representation) -> Result<AlgebraStructure> {
    dim_check("representation algebra dimension", alg.dim, rep.alg_dim)?;
    rep.validate()?;
    let (n, m) = (alg.dim, rep.rep_dim);
    let mut out = AlgebraStructure::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.circ.set(i, j, k, alg.circ.get(i, j, k).clone());
                out.bracket.set(i, j, k, alg.bracket.get(i, j, k).clone());
            }
        }
        for u in 0..m {
            for w in 0..m {
                // e_i • v_u = l(e_i) v_u,  v_u • e_i = r(e_i) v_u
                out.circ.set(i, n + u, n + w, rep.l[i].get(w, u).clone());
                out.circ.set(n + u, i, n + w, rep.r[i].get(w, u).clone());
                out.bracket.set(i, n + u, n + w, rep.rho[i].get(w, u).clone());
                out.bracket.set(n + u, i, n + w, -rep.rho[i].get(w, u));
            }
        }
    }
    out.basis_labels = alg.basis_labels.iter().cloned().chain((1..=m).map(|i| format!("v{i}"))).collect();
    Ok(out)
}

/// (V*, l* + r*, −r*, ρ*).
pub fn dual_rep(rep: &Representation) -> Representation {
    let d = |ms: &[Matrix<Scalar>]| ms.iter().map(dual_action).collect::<Vec<_>>();
    let ls = d(&rep.l);
    let rs = d(&rep.r);
    Representation {
        alg_dim: rep.alg_dim,
        rep_dim: rep.rep_dim,
        l: ls.iter().zip(&rs).map(|(a, b)| a.add(b)).collect(),
        r: rs.iter().map(Matrix::neg).collect(),
        rho: d(&rep.rho),
    }
}

fn check_t_shape(alg: &AlgebraStructure, rep: &Representation, t: &Matrix<Scalar>) -> Result<()> {
    dim_check("representation algebra dimension", alg.dim, rep.alg_dim)?;
    rep.validate()?;
    dim_check("operator rows", alg.dim, t.rows())?;
    dim_check("operator columns", rep.rep_dim, t.cols())
}

/// T(u)∘T(v) = T(l(Tu)v + r(Tv)u) and [Tu, Tv] = T(ρ(Tu)v − ρ(Tv)u) on basis pairs of V.
pub fn check_o_operator(alg: &AlgebraStructure, rep: &Representation, t: &Matrix<Scalar>) -> Result<AxiomReport> {
    check_t_shape(alg, rep, t)?;
    let m = rep.rep_dim;
    let mut report = AxiomReport::new();
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (Vector::basis(m, i), Vector::basis(m, j));
            let (tu, tv) = (t.column(i), t.column(j));
            let inner = combo(&rep.l, &tu, m).apply(&v).add(&combo(&rep.r, &tv, m).apply(&u));
            report.check_vec("o-operator.product", &[i, j], alg.circ(&tu, &tv).sub(&t.apply(&inner)));
            let inner = combo(&rep.rho, &tu, m).apply(&v).sub(&combo(&rep.rho, &tv, m).apply(&u));
            report.check_vec("o-operator.bracket", &[i, j], alg.br(&tu, &tv).sub(&t.apply(&inner)));
        }
    }
    Ok(report)
}

/// The skew tensor r_T − τ r_T in A ⋉ V*, where r_T = Σ_i T(v_i) ⊗ v_i*.
pub fn o_operator_to_r(
    alg: &AlgebraStructure,
    rep: &Representation,
    t: &Matrix<Scalar>,
) -> Result<(AlgebraStructure, RMatrix)> {
    check_t_shape(alg, rep, t)?;
    let (n, m) = (alg.dim, rep.rep_dim);
    let mut double = semidirect(alg, &dual_rep(rep))?;
    double.basis_labels = alg.basis_labels.iter().cloned().chain((1..=m).map(|i| format!("v{i}*"))).collect();
    let mut r = Tensor2::square(n + m);
    for i in 0..m {
        for j in 0..n {
            let c = t.get(j, i);
            if !c.is_zero() {
                r.add_at(j, n + i, c);
                r.add_at(n + i, j, &-c);
            }
        }
    }
    Ok((double, RMatrix::new(r)))
}

/// Three products ⊲, ⊳, ⋄ in the layout of [`Table`].
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PreGdStructure {
    pub dim: usize,
    pub lhd: Table,
    pub rhd: Table,
    pub diamond: Table,
}

impl PreGdStructure {
    pub fn zero(dim: usize) -> Self {
        PreGdStructure { dim, lhd: Table::zeros(dim), rhd: Table::zeros(dim), diamond: Table::zeros(dim) }
    }
}

pub fn check_pre_gd(p: &PreGdStructure) -> AxiomReport {
    let n = p.dim;
    let e = |i| Vector::basis(n, i);
    let lh = |x: &Vector, y: &Vector| p.lhd.mul(x, y);
    let rh = |x: &Vector, y: &Vector| p.rhd.mul(x, y);
    let dm = |x: &Vector, y: &Vector| p.diamond.mul(x, y);
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (e(i), e(j), e(k));
                let w = [i, j, k];
                let nd1 = rh(&a, &rh(&b, &c))
                    .sub(&rh(&rh(&a, &b).add(&lh(&a, &b)), &c))
                    .sub(&rh(&b, &rh(&a, &c)))
                    .add(&rh(&rh(&b, &a).add(&lh(&b, &a)), &c));
                report.check_vec("pre-gd.nd1", &w, nd1);
                let nd2 = rh(&a, &lh(&b, &c))
                    .sub(&lh(&rh(&a, &b), &c))
                    .sub(&lh(&b, &lh(&a, &c).add(&rh(&a, &c))))
                    .add(&lh(&lh(&b, &a), &c));
                report.check_vec("pre-gd.nd2", &w, nd2);
                let nd3 = rh(&lh(&a, &b).add(&rh(&a, &b)), &c).sub(&lh(&rh(&a, &c), &b));
                report.check_vec("pre-gd.nd3", &w, nd3);
                let nd4 = lh(&lh(&a, &b), &c).sub(&lh(&lh(&a, &c), &b));
                report.check_vec("pre-gd.nd4", &w, nd4);
                let ls =
                    dm(&dm(&a, &b), &c).sub(&dm(&a, &dm(&b, &c))).sub(&dm(&dm(&b, &a), &c)).add(&dm(&b, &dm(&a, &c)));
                report.check_vec("pre-gd.diamond-left-symmetry", &w, ls);
                let comm = dm(&a, &b).sub(&dm(&b, &a));
                let l1 = lh(&c, &comm)
                    .sub(&dm(&a, &lh(&c, &b)))
                    .sub(&lh(&dm(&b, &c), &a))
                    .add(&dm(&b, &lh(&c, &a)))
                    .add(&lh(&dm(&a, &c), &b));
                report.check_vec("pre-gd.lnd1", &w, l1);
                let l2 = rh(&comm, &c)
                    .add(&dm(&lh(&a, &b).add(&rh(&a, &b)), &c))
                    .sub(&rh(&a, &dm(&b, &c)))
                    .add(&dm(&b, &rh(&a, &c)))
                    .sub(&lh(&dm(&a, &c), &b));
                report.check_vec("pre-gd.lnd2", &w, l2);
            }
        }
    }
    report
}

/// a∘b = a⊲b + a⊳b, [a,b] = a⋄b − b⋄a, with the representation (L⊳, R⊲, L⋄) on A.
pub fn pregd_to_gd(p: &PreGdStructure) -> (AlgebraStructure, Representation) {
    let n = p.dim;
    let alg = AlgebraStructure::new(p.lhd.add(&p.rhd), p.diamond.sub(&p.diamond.opposite()));
    let mat = |f: &dyn Fn(usize, usize) -> Vector| -> Vec<Matrix<Scalar>> {
        (0..n).map(|i| Matrix::from_columns(&(0..n).map(|j| f(i, j)).collect::<Vec<_>>(), n)).collect()
    };
    let rep = Representation {
        alg_dim: n,
        rep_dim: n,
        l: mat(&|i, j| p.rhd.row(i, j)),
        r: mat(&|i, j| p.lhd.row(j, i)),
        rho: mat(&|i, j| p.diamond.row(i, j)),
    };
    (alg, rep)
}

/// u⊳v = l(Tu)v, u⊲v = r(Tv)u, u⋄v = ρ(Tu)v on V.
pub fn o_operator_pre_gd(rep: &Representation, t: &Matrix<Scalar>) -> Result<PreGdStructure> {
    rep.validate()?;
    dim_check("operator rows", rep.alg_dim, t.rows())?;
    dim_check("operator columns", rep.rep_dim, t.cols())?;
    let m = rep.rep_dim;
    let mut p = PreGdStructure::zero(m);
    for i in 0..m {
        for j in 0..m {
            let (u, v) = (Vector::basis(m, i), Vector::basis(m, j));
            let (tu, tv) = (t.column(i), t.column(j));
            p.rhd.set_row(i, j, &combo(&rep.l, &tu, m).apply(&v));
            p.lhd.set_row(i, j, &combo(&rep.r, &tv, m).apply(&u));
            p.diamond.set_row(i, j, &combo(&rep.rho, &tu, m).apply(&v));
        }
    }
    Ok(p)
}

/// Zinbiel product with a derivation and the two scalar parameters.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ZinbielData {
    pub dim: usize,
    pub dot: Table,
    pub d: Matrix<Scalar>,
    pub xi: Scalar,
    pub k: Scalar,
}

/// Zinbiel identity a·(b·c) = (b·a + a·b)·c and the derivation rule for D.
pub fn check_zinbiel(z: &ZinbielData) -> Result<AxiomReport> {
    dim_check("derivation rows", z.dim, z.d.rows())?;
    dim_check("derivation columns", z.dim, z.d.cols())?;
    let n = z.dim;
    let e = |i| Vector::basis(n, i);
    let dot = |x: &Vector, y: &Vector| z.dot.mul(x, y);
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (a, b, c) = (e(i), e(j), e(k));
                let d = dot(&a, &dot(&b, &c)).sub(&dot(&dot(&b, &a).add(&dot(&a, &b)), &c));
                report.check_vec("zinbiel.identity", &[i, j, k], d);
            }
            let (a, b) = (e(i), e(j));
            let d = z.d.apply(&dot(&a, &b)).sub(&dot(&z.d.apply(&a), &b)).sub(&dot(&a, &z.d.apply(&b)));
            report.check_vec("zinbiel.derivation", &[i, j], d);
        }
    }
    Ok(report)
}

/// The three products built from (·, D, ξ, k), without validating the input.
pub fn zinbiel_products(z: &ZinbielData) -> Result<PreGdStructure> {
    dim_check("derivation rows", z.dim, z.d.rows())?;
    dim_check("derivation columns", z.dim, z.d.cols())?;
    let n = z.dim;
    let dot = |x: &Vector, y: &Vector| z.dot.mul(x, y);
    let mut p = PreGdStructure::zero(n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (Vector::basis(n, i), Vector::basis(n, j));
            let (da, db) = (z.d.apply(&a), z.d.apply(&b));
            let (ab, ba) = (dot(&a, &b), dot(&b, &a));
            p.lhd.set_row(i, j, &dot(&db, &a).add(&ba.scale(&z.xi)));
            p.rhd.set_row(i, j, &dot(&a, &db).add(&ab.scale(&z.xi)));
            let dm = dot(&a, &db).sub(&dot(&da, &b)).add(&ab.sub(&ba).scale(&z.xi));
            p.diamond.set_row(i, j, &dm.scale(&z.k));
        }
    }
    Ok(p)
}

/// Like [`zinbiel_products`], but rejects input that is not Zinbiel or where D is not a derivation.
pub fn zinbiel_to_pregd(z: &ZinbielData) -> Result<PreGdStructure> {
    let report = check_zinbiel(z)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!(
            "{} fails at {:?} ({} violations in total)",
            v.axiom,
            v.witness,
            report.violations.len()
        )));
    }
    zinbiel_products(z)
}

/// Everything produced from a pre-GD structure on the way to a bialgebra.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PipelineOutput {
    pub alg: AlgebraStructure,
    pub rep: Representation,
    pub double: AlgebraStructure,
    pub r: RMatrix,
    pub bialgebra: BialgebraData,
}

/// The chain GD algebra → dual representation → A ⋉ A* → Σ(e_i⊗e_i* − e_i*⊗e_i) → (Δ_r, δ_r),
/// assembled without checking the input.
pub fn canonical_construction(p: &PreGdStructure) -> PipelineOutput {
    let n = p.dim;
    let (alg, rep) = pregd_to_gd(p);
    let (mut double, r) = o_operator_to_r(&alg, &rep, &Matrix::identity(n)).expect("identity has the right shape");
    double.basis_labels =
        alg.basis_labels.iter().cloned().chain(alg.basis_labels.iter().map(|l| format!("{l}*"))).collect();
    let co = coboundary_maps(&double, &r).expect("r lives on the double");
    let bialgebra = BialgebraData::new(double.clone(), co).expect("same dimension");
    PipelineOutput { alg, rep, double, r, bialgebra }
}

/// [`canonical_construction`] for a structure that passes [`check_pre_gd`].
pub fn pregd_pipeline(p: &PreGdStructure) -> Result<PipelineOutput> {
    let report = check_pre_gd(p);
    if !report.passed {
        return Err(Error::Precondition(format!(
            "not a pre-GD algebra (failed: {})",
            report.failed_axioms().join(", ")
        )));
    }
    Ok(canonical_construction(p))
}

/// The GD-level verdict pair of the associated algebra and representation.
pub fn associated_gd_verdict(p: &PreGdStructure) -> (AxiomReport, AxiomReport) {
    let (alg, rep) = pregd_to_gd(p);
    let a = check_algebra(&alg, AlgebraKind::Gd);
    let r = check_representation(&alg, &rep, RepKind::Gd).expect("shapes agree");
    (a, r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn gd_2() -> AlgebraStructure {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        alg
    }

    #[test]
    fn adjoint_of_gd_algebra_is_a_representation() {
        let alg = gd_2();
        assert!(check_representation(&alg, &Representation::adjoint(&alg), RepKind::Gd).unwrap().passed);
        assert!(check_representation(&alg, &Representation::zero(2, 3), RepKind::Gd).unwrap().passed);
    }

    #[test]
    fn adjoint_of_non_gd_algebra_fails() {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 0, 0, s(1));
        alg.circ.set(0, 1, 0, s(1));
        assert!(!check_representation(&alg, &Representation::adjoint(&alg), RepKind::Gd).unwrap().passed);
    }

    #[test]
    fn dual_of_adjoint_is_coadjoint() {
        let alg = gd_2();
        assert_eq!(dual_rep(&Representation::adjoint(&alg)), Representation::coadjoint(&alg));
    }

    #[test]
    fn zero_operator_is_an_o_operator() {
        let alg = gd_2();
        let rep = Representation::adjoint(&alg);
        assert!(check_o_operator(&alg, &rep, &Matrix::zeros(2, 2)).unwrap().passed);
        let (_, r) = o_operator_to_r(&alg, &rep, &Matrix::zeros(2, 2)).unwrap();
        assert!(r.t.is_zero());
    }

    #[test]
    fn semidirect_with_zero_rep_is_direct_sum() {
        let alg = gd_2();
        let sd = semidirect(&alg, &Representation::zero(2, 1)).unwrap();
        assert_eq!(sd.dim, 3);
        assert_eq!(sd.circ.entries().count(), 1);
        assert!(sd.bracket.is_zero());
    }

    #[test]
    fn zero_derivation_gives_zero_products() {
        let mut dot = Table::zeros(2);
        dot.set(0, 0, 1, s(1));
        let z = ZinbielData { dim: 2, dot, d: Matrix::zeros(2, 2), xi: s(0), k: s(1) };
        let p = zinbiel_products(&z).unwrap();
        assert_eq!(p, PreGdStructure::zero(2));
    }
}
