use crate::costructures::CoalgebraStructure;
use crate::error::{dim_check, Error, Result};
use crate::exactalg::{Coeff, MPoly, Tensor2, Tensor3, Var};
use crate::structures::{AxiomReport, Defect};
use crate::yangbaxter::RMatrix;

use super::algebra::{var, ConformalStructure};

type PolyT2 = Tensor2<MPoly>;
type PolyT3 = Tensor3<MPoly>;

fn cobracket_of(cs: &ConformalStructure) -> Result<&[PolyT2]> {
    match &cs.cobracket {
        Some(c) if c.len() == cs.dim => Ok(c),
        Some(c) => Err(Error::Dimension(format!("cobracket has {} entries, expected {}", c.len(), cs.dim))),
        None => Err(Error::Precondition("the structure has no cobracket".into())),
    }
}

/// δ(e_k) = δ0(e_k) + (∂⊗id)Δ(e_k) − τ(∂⊗id)Δ(e_k), with the coalgebra axioms checked.
pub fn build_cobracket(cs: &ConformalStructure, co: &CoalgebraStructure) -> Result<(ConformalStructure, AxiomReport)> {
    dim_check("coalgebra dimension", cs.dim, co.dim)?;
    let d1 = var(Var::D1);
    let table = (0..cs.dim)
        .map(|k| {
            let big = co.big_delta_e(k).map(|c| d1.scale(c));
            co.small_delta_e(k).map(|c| MPoly::constant(c.clone())).add(&big).sub(&big.flip(true))
        })
        .collect();
    let mut out = cs.clone();
    out.cobracket = Some(table);
    let report = check_conformal_coalgebra(&out)?;
    Ok((out, report))
}

/// (id ⊗ δ) P: ∂ on the second factor splits as ∂2 + ∂3.
fn id_delta(delta: &[PolyT2], p: &PolyT2) -> PolyT3 {
    let n1 = p.dims()[0];
    let d23 = &var(Var::D2) + &var(Var::D3);
    let mut out = Tensor3::zeros(n1, delta[0].dims()[0], delta[0].dims()[1]);
    for (i, j, c) in p.nonzero() {
        let c = c.substitute(Var::D2, &d23);
        for (u, v, q) in delta[j].nonzero() {
            let q = q.move_slots(&[1, 2]);
            out.add_at(i, u, v, &c.mul_ref(&q));
        }
    }
    out
}

/// (δ ⊗ id) P: ∂ on the first factor splits as ∂1 + ∂2.
fn delta_id(delta: &[PolyT2], p: &PolyT2) -> PolyT3 {
    let d12 = &var(Var::D1) + &var(Var::D2);
    let m = delta[0].dims();
    let mut out = Tensor3::zeros(m[0], m[1], p.dims()[1]);
    for (i, j, c) in p.nonzero() {
        let c = c.rename_one(Var::D2, Var::D3).substitute(Var::D1, &d12);
        for (u, v, q) in delta[i].nonzero() {
            out.add_at(u, v, j, &c.mul_ref(q));
        }
    }
    out
}

/// Anti-cocommutativity and co-Jacobi of the cobracket.
pub fn check_conformal_coalgebra(cs: &ConformalStructure) -> Result<AxiomReport> {
    let delta = cobracket_of(cs)?;
    let mut report = AxiomReport::new();
    for (k, t) in delta.iter().enumerate() {
        let skew = t.add(&t.flip(true));
        if !skew.is_zero() {
            report.fail("conformal-coalgebra.skew-symmetry", &[k], Defect::PolyTensor2(skew));
        }
        let x = id_delta(delta, t);
        let jac = x.sub(&x.permute([1, 0, 2], true)).sub(&delta_id(delta, t));
        if !jac.is_zero() {
            report.fail("conformal-coalgebra.jacobi", &[k], Defect::PolyTensor3(jac));
        }
    }
    Ok(report)
}

/// a_p acting on R ⊗ R by the derivation rule, generator `a`, parameter `p` free of ∂-slots.
fn act_t2(cs: &ConformalStructure, a: usize, t: &PolyT2, p: &MPoly) -> PolyT2 {
    let [n1, n2] = t.dims();
    let mut out = Tensor2::zeros(n1, n2);
    for (slot, dv) in [(0usize, Var::D1), (1, Var::D2)] {
        let shift = p + &var(dv);
        for (u, v, c) in t.nonzero() {
            let c = c.substitute(dv, &shift);
            let g = if slot == 0 { u } else { v };
            for (w, b) in cs.entry(a, g).entries().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let b = b.rename_one(Var::D, dv).substitute(Var::Lambda, p);
                let val = c.mul_ref(&b);
                if slot == 0 {
                    out.add_at(w, v, &val);
                } else {
                    out.add_at(u, w, &val);
                }
            }
        }
    }
    out
}

/// Conformal algebra, coalgebra and the cocycle condition a_λδ(b) − b_{−λ−∂}δ(a) = δ([a_λ b]).
pub fn check_conformal_bialgebra(cs: &ConformalStructure) -> Result<AxiomReport> {
    let delta = cobracket_of(cs)?;
    let n = cs.dim;
    let mut report = super::algebra::check_conformal_algebra(cs);
    report.merge(check_conformal_coalgebra(cs)?);
    let (l, m) = (var(Var::Lambda), var(Var::Mu));
    let back = -(&(&l + &var(Var::D1)) + &var(Var::D2));
    let d12 = &var(Var::D1) + &var(Var::D2);
    for a in 0..n {
        for b in 0..n {
            let lhs =
                act_t2(cs, a, &delta[b], &l).sub(&act_t2(cs, b, &delta[a], &m).map(|c| c.substitute(Var::Mu, &back)));
            let mut rhs = Tensor2::zeros(n, n);
            for (w, c) in cs.entry(a, b).entries().iter().enumerate() {
                if !c.is_zero() {
                    let c = c.substitute(Var::D, &d12);
                    rhs.add_assign(&delta[w].map(|q| c.mul_ref(q)));
                }
            }
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                report.fail("conformal-bialgebra.cocycle", &[a, b], Defect::PolyTensor2(defect));
            }
        }
    }
    Ok(report)
}

/// [[r, r]] for a constant r, reduced modulo ∂⊗3 by ∂3 ↦ −∂1 − ∂2.
pub fn ccybe_defect(cs: &ConformalStructure, r: &RMatrix) -> Result<PolyT3> {
    dim_check("r dimension", cs.dim, r.dim)?;
    let n = cs.dim;
    let mut out = Tensor3::cube(n);
    // (λ, ∂) ↦ (slot variable for μ, slot variable for ∂)
    let at = |i: usize, j: usize, mu: Var, d: Var| -> Vec<MPoly> {
        cs.entry(i, j)
            .entries()
            .iter()
            .map(|c| {
                c.rename(|v| {
                    if v == Var::Lambda {
                        mu
                    } else if v == Var::D {
                        d
                    } else {
                        v
                    }
                })
            })
            .collect()
    };
    for (i, j, a) in r.t.nonzero() {
        for (k, l, b) in r.t.nonzero() {
            let c = a * b;
            for (w, p) in at(i, k, Var::D2, Var::D1).into_iter().enumerate() {
                out.add_at(w, j, l, &p.scale(&c));
            }
            for (w, p) in at(k, j, Var::D3, Var::D2).into_iter().enumerate() {
                out.add_at(i, w, l, &p.scale(&-&c));
            }
            for (w, p) in at(l, j, Var::D2, Var::D3).into_iter().enumerate() {
                out.add_at(i, k, w, &p.scale(&-&c));
            }
        }
    }
    let red = -(&var(Var::D1) + &var(Var::D2));
    Ok(out.map(|c| c.substitute(Var::D3, &red)))
}

/// δ(a) = a_λ r at λ = −∂1 − ∂2, for skew-symmetric constant r.
pub fn coboundary_conformal(cs: &ConformalStructure, r: &RMatrix) -> Result<Vec<PolyT2>> {
    dim_check("r dimension", cs.dim, r.dim)?;
    if !r.is_skew() {
        return Err(Error::Precondition("r is not skew-symmetric".into()));
    }
    let l = var(Var::Lambda);
    let at = -(&var(Var::D1) + &var(Var::D2));
    let rp = r.t.map(|c| MPoly::constant(c.clone()));
    Ok((0..cs.dim).map(|a| act_t2(cs, a, &rp, &l).map(|c| c.substitute(Var::Lambda, &at))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::algebra::affinize;
    use crate::exactalg::Scalar;
    use crate::structures::AlgebraStructure;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn novikov_type() -> (AlgebraStructure, CoalgebraStructure) {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        let mut co = CoalgebraStructure::zero(2);
        co.cobracket.set(0, 1, 1, s(1));
        co.cobracket.set(1, 0, 1, s(-1));
        (alg, co)
    }

    #[test]
    fn zero_cobracket_passes() {
        let (alg, _) = novikov_type();
        let cs = affinize(&alg);
        let (cs, rep) = build_cobracket(&cs, &CoalgebraStructure::zero(2)).unwrap();
        assert!(rep.passed);
        assert!(cs.cobracket.as_ref().unwrap().iter().all(|t| t.is_zero()));
        assert!(check_conformal_bialgebra(&cs).unwrap().passed);
    }

    #[test]
    fn missing_cobracket_is_an_error() {
        let (alg, _) = novikov_type();
        assert!(check_conformal_bialgebra(&affinize(&alg)).is_err());
    }

    #[test]
    fn zero_r() {
        let (alg, _) = novikov_type();
        let cs = affinize(&alg);
        assert!(ccybe_defect(&cs, &RMatrix::zero(2)).unwrap().is_zero());
        assert!(coboundary_conformal(&cs, &RMatrix::zero(2)).unwrap().iter().all(|t| t.is_zero()));
    }

    #[test]
    fn skew_non_solution_has_nonzero_ccybe() {
        let (alg, _) = novikov_type();
        let cs = affinize(&alg);
        let r = RMatrix::skew_from_upper(2, &[s(1)]);
        assert!(!ccybe_defect(&cs, &r).unwrap().is_zero());
    }
}
