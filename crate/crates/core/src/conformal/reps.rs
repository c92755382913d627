use serde::Serialize;

use crate::bialgebras::BilinearForm;
use crate::error::{dim_check, Result};
use crate::exactalg::{MPoly, Matrix, Scalar, Var};
use crate::operators::{pregd_to_gd, semidirect, PreGdStructure, Representation};
use crate::structures::{AlgebraStructure, AxiomReport, Defect};

use super::algebra::{affinize, check_conformal_algebra, sesqui, var, ConformalStructure, PolyVector};

/// ρ(e_i)_λ as an m×m matrix over k[λ, ∂]; column j is the image of the generator v_j.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ConformalRep {
    pub alg_dim: usize,
    pub rep_dim: usize,
    pub action: Vec<Matrix<MPoly>>,
}

impl ConformalRep {
    /// Same layout as a bracket table: entry (i, j) is ρ(e_i)_λ v_j.
    fn table(&self) -> Vec<PolyVector> {
        let mut t = Vec::with_capacity(self.alg_dim * self.rep_dim);
        for m in &self.action {
            for j in 0..self.rep_dim {
                t.push(m.column(j));
            }
        }
        t
    }

    /// ρ(x)_p v for x ∈ k[∂]A and v ∈ k[∂]M.
    pub fn act(&self, x: &PolyVector, v: &PolyVector, p: &MPoly) -> Result<PolyVector> {
        dim_check("algebra element", self.alg_dim, x.dim())?;
        dim_check("module element", self.rep_dim, v.dim())?;
        Ok(sesqui(&self.table(), self.rep_dim, self.rep_dim, x, v, p))
    }
}

/// ρ(a)_λ = ∂ r(a) + λ(l(a) + r(a)) + ρ(a), with the module axioms checked through
/// the affinized semidirect product.
pub fn conformal_rep(alg: &AlgebraStructure, rep: &Representation) -> Result<(ConformalRep, AxiomReport)> {
    dim_check("representation algebra dimension", alg.dim, rep.alg_dim)?;
    rep.validate()?;
    let (d, l) = (var(Var::D), var(Var::Lambda));
    let action = (0..alg.dim)
        .map(|i| {
            let r = rep.r[i].to_poly();
            r.scale(&d).add(&rep.l[i].to_poly().add(&r).scale(&l)).add(&rep.rho[i].to_poly())
        })
        .collect();
    let report = check_conformal_algebra(&affinize(&semidirect(alg, rep)?));
    Ok((ConformalRep { alg_dim: alg.dim, rep_dim: rep.rep_dim, action }, report))
}

/// Direct module check: [a_λ b]_{λ+μ} v = a_λ(b_μ v) − b_μ(a_λ v) on generators.
pub fn check_conformal_module(cs: &ConformalStructure, crep: &ConformalRep) -> Result<AxiomReport> {
    dim_check("representation algebra dimension", cs.dim, crep.alg_dim)?;
    let (n, m) = (cs.dim, crep.rep_dim);
    let (l, mu) = (var(Var::Lambda), var(Var::Mu));
    let lm = &l + &mu;
    let table = crep.table();
    let act = |x: &PolyVector, v: &PolyVector, p: &MPoly| sesqui(&table, m, m, x, v, p);
    let mut report = AxiomReport::new();
    for a in 0..n {
        let ea = cs.generator(a);
        for b in 0..n {
            let eb = cs.generator(b);
            for c in 0..m {
                let v = PolyVector::basis(m, c);
                let defect = act(&ea, &act(&eb, &v, &mu), &l).sub(&act(&eb, &act(&ea, &v, &l), &mu)).sub(&act(
                    cs.entry(a, b),
                    &v,
                    &lm,
                ));
                if !defect.is_zero() {
                    report.fail("conformal-module.identity", &[a, b, c], Defect::PolyVector(defect));
                }
            }
        }
    }
    Ok(report)
}

/// The conformal dual module: ρ*(a)_λ has matrix −ρ(a)_λᵀ with ∂ ↦ −λ−∂.
pub fn conformal_dual(crep: &ConformalRep) -> ConformalRep {
    let back = -(&var(Var::Lambda) + &var(Var::D));
    let action = crep.action.iter().map(|m| m.transpose().map(|c| -c.substitute(Var::D, &back))).collect();
    ConformalRep { alg_dim: crep.alg_dim, rep_dim: crep.rep_dim, action }
}

/// [T(u)_λ T(v)] = T(ρ(T(u))_λ v − ρ(T(v))_{−λ−∂} u) on generators, for constant T: M → R.
pub fn check_conformal_o_operator(
    cs: &ConformalStructure,
    crep: &ConformalRep,
    t: &Matrix<Scalar>,
) -> Result<AxiomReport> {
    dim_check("representation algebra dimension", cs.dim, crep.alg_dim)?;
    dim_check("operator rows", cs.dim, t.rows())?;
    dim_check("operator columns", crep.rep_dim, t.cols())?;
    let m = crep.rep_dim;
    let (l, mu) = (var(Var::Lambda), var(Var::Mu));
    let back = -(&l + &var(Var::D));
    let tp = t.to_poly();
    let mut report = AxiomReport::new();
    for i in 0..m {
        let (vi, ti) = (PolyVector::basis(m, i), tp.column(i));
        for j in 0..m {
            let (vj, tj) = (PolyVector::basis(m, j), tp.column(j));
            let lhs = sesqui(&cs.bracket, cs.dim, cs.dim, &ti, &tj, &l);
            let second = crep.act(&tj, &vi, &mu)?.map(|c| c.substitute(Var::Mu, &back));
            let inner = crep.act(&ti, &vj, &l)?.sub(&second);
            let defect = lhs.sub(&tp.apply(&inner));
            if !defect.is_zero() {
                report.fail("conformal-o-operator", &[i, j], Defect::PolyVector(defect));
            }
        }
    }
    Ok(report)
}

/// a_λ b = ∂(b⊲a) + λ(a⊳b + b⊲a) + a⋄b, checked for left symmetry and against the
/// affinized associated GD algebra through the sub-adjacent bracket.
pub fn left_symmetric_conformal(p: &PreGdStructure) -> (Vec<PolyVector>, AxiomReport) {
    let n = p.dim;
    let (d, l, mu) = (var(Var::D), var(Var::Lambda), var(Var::Mu));
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ba = p.lhd.row(j, i).to_poly();
            let mut v = p.diamond.row(i, j).to_poly();
            v.add_scaled(&d, &ba);
            v.add_scaled(&l, &p.rhd.row(i, j).to_poly().add(&ba));
            table.push(v);
        }
    }
    let prod = |x: &PolyVector, y: &PolyVector, q: &MPoly| sesqui(&table, n, n, x, y, q);
    let e = |i| PolyVector::basis(n, i);
    let lm = &l + &mu;
    let mut report = AxiomReport::new();
    for a in 0..n {
        for b in 0..n {
            let ab = &table[a * n + b];
            let ba = table[b * n + a].map(|c| c.rename_one(Var::Lambda, Var::Mu));
            for c in 0..n {
                let defect = prod(ab, &e(c), &lm)
                    .sub(&prod(&e(a), &prod(&e(b), &e(c), &mu), &l))
                    .sub(&prod(&ba, &e(c), &lm))
                    .add(&prod(&e(b), &prod(&e(a), &e(c), &l), &mu));
                if !defect.is_zero() {
                    report.fail("left-symmetric-conformal.identity", &[a, b, c], Defect::PolyVector(defect));
                }
            }
        }
    }
    let cs = affinize(&pregd_to_gd(p).0);
    let back = -(&l + &d);
    for a in 0..n {
        for b in 0..n {
            let sub = table[a * n + b].sub(&prod(&e(b), &e(a), &back));
            let defect = sub.sub(cs.entry(a, b));
            if !defect.is_zero() {
                report.fail("left-symmetric-conformal.sub-adjacent", &[a, b], Defect::PolyVector(defect));
            }
        }
    }
    (table, report)
}

/// ⟨a, b⟩_λ = (a, b) on generators: symmetry, nondegeneracy and
/// ⟨[a_μ b], c⟩_λ = ⟨a, [b_{λ−∂} c]⟩_μ, together with the conformal algebra axioms.
pub fn check_conformal_bilinear(cs: &ConformalStructure, form: &BilinearForm) -> Result<AxiomReport> {
    dim_check("form dimension", cs.dim, form.dim)?;
    let n = cs.dim;
    let (l, mu) = (var(Var::Lambda), var(Var::Mu));
    let lmm = &l - &mu;
    let mut report = AxiomReport::new();
    report.merge(check_conformal_algebra(cs));
    form.symmetry_and_rank(&mut report);
    let neg_l = -&l;
    let g = |a: usize, b: usize| MPoly::constant(form.gram.get(a, b).clone());
    for a in 0..n {
        for b in 0..n {
            let amb = sesqui(&cs.bracket, n, n, &cs.generator(a), &cs.generator(b), &mu);
            for c in 0..n {
                let mut lhs = MPoly::zero();
                for (t, p) in amb.entries().iter().enumerate() {
                    lhs.add_assign_ref(&p.substitute(Var::D, &neg_l).mul_ref(&g(t, c)));
                }
                let mut rhs = MPoly::zero();
                for (t, q) in cs.entry(b, c).entries().iter().enumerate() {
                    let q = q.substitute(Var::D, &mu).substitute(Var::Lambda, &lmm);
                    rhs.add_assign_ref(&q.mul_ref(&g(a, t)));
                }
                let defect = &lhs - &rhs;
                if !defect.is_zero() {
                    report.fail(
                        "conformal-form.invariance",
                        &[a, b, c],
                        Defect::PolyVector(PolyVector::from_vec(vec![defect])),
                    );
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{check_o_operator, check_pre_gd, dual_rep, zinbiel_products, ZinbielData};
    use crate::structures::Table;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn novikov_type() -> AlgebraStructure {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        alg
    }

    #[test]
    fn adjoint_action_is_bracket_table() {
        let alg = novikov_type();
        let (crep, rep) = conformal_rep(&alg, &Representation::adjoint(&alg)).unwrap();
        assert!(rep.passed);
        let cs = affinize(&alg);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(&crep.action[i].column(j), cs.entry(i, j));
            }
        }
        assert!(check_conformal_module(&cs, &crep).unwrap().passed);
    }

    #[test]
    fn dual_matches_dual_rep() {
        let alg = novikov_type();
        let adj = Representation::adjoint(&alg);
        let (crep, _) = conformal_rep(&alg, &adj).unwrap();
        let (want, rep) = conformal_rep(&alg, &dual_rep(&adj)).unwrap();
        assert_eq!(conformal_dual(&crep), want);
        assert!(rep.passed);
        assert!(check_conformal_module(&affinize(&alg), &want).unwrap().passed);
    }

    #[test]
    fn zero_rep_and_zero_operator() {
        let alg = novikov_type();
        let (crep, rep) = conformal_rep(&alg, &Representation::zero(2, 3)).unwrap();
        assert!(rep.passed && crep.action.iter().all(|m| m.is_zero()));
        let t = Matrix::zeros(2, 3);
        assert!(check_conformal_o_operator(&affinize(&alg), &crep, &t).unwrap().passed);
    }

    #[test]
    fn o_operator_verdict_matches_gd_level() {
        let alg = novikov_type();
        let rep = Representation::coadjoint(&alg);
        let (crep, _) = conformal_rep(&alg, &rep).unwrap();
        let cs = affinize(&alg);
        for t in [
            Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(-1), s(0)]]).unwrap(),
            Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(0)]]).unwrap(),
            Matrix::from_rows(vec![vec![s(0), s(0)], vec![s(1), s(0)]]).unwrap(),
        ] {
            let gd = check_o_operator(&alg, &rep, &t).unwrap().passed;
            assert_eq!(check_conformal_o_operator(&cs, &crep, &t).unwrap().passed, gd);
        }
    }

    #[test]
    fn zero_pre_gd() {
        let (table, rep) = left_symmetric_conformal(&PreGdStructure::zero(2));
        assert!(rep.passed && table.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn pre_gd_from_zinbiel() {
        // e1·e1 = e2, e1·e2 = 2e3, e2·e1 = e3 with D = diag(1, 2, 3) at ξ = 0, k = 1.
        let mut dot = Table::zeros(3);
        dot.set(0, 0, 1, Scalar::one());
        dot.set(0, 1, 2, Scalar::from(2));
        dot.set(1, 0, 2, Scalar::one());
        let mut d = Matrix::zeros(3, 3);
        for i in 0..3 {
            d.set(i, i, Scalar::from(i as i64 + 1));
        }
        let z = ZinbielData { dim: 3, dot, d, xi: Scalar::zero(), k: Scalar::one() };
        let p = zinbiel_products(&z).unwrap();
        assert!(check_pre_gd(&p).passed);
        let (table, rep) = left_symmetric_conformal(&p);
        assert!(rep.passed, "{:?}", rep.failed_axioms());
        assert!(!table[0].is_zero());
        // Breaking ⋄ breaks the conformal identity as well.
        let mut bad = p.clone();
        bad.diamond.set(0, 0, 0, Scalar::one());
        assert!(!check_pre_gd(&bad).passed);
        assert!(!left_symmetric_conformal(&bad).1.passed);
    }

    #[test]
    fn bilinear_forms() {
        let alg = novikov_type();
        let cs = affinize(&alg);
        assert!(!check_conformal_bilinear(&cs, &BilinearForm::identity(2)).unwrap().passed);
        let zero = affinize(&AlgebraStructure::zero(2));
        assert!(check_conformal_bilinear(&zero, &BilinearForm::identity(2)).unwrap().passed);
    }
}
