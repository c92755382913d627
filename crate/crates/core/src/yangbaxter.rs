//! Yang–Baxter defects N(r), C(r), coboundary coproducts built from r, the
//! coboundary condition list, and the operator form of r.

use serde::Serialize;

use crate::bialgebras::{check_bialgebra, on0, on1, BialgebraData, BialgebraKind, Ops};
use crate::costructures::CoalgebraStructure;
use crate::error::{dim_check, Error, Result};
use crate::exactalg::{Matrix, Scalar, Tensor2, Tensor3};
use crate::operators::{check_o_operator, combo, Representation};
use crate::structures::{is_gd, AlgebraStructure, AxiomReport, Table, Vector};

/// Constant tensor r = Σ r_ij e_i ⊗ e_j.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RMatrix {
    pub dim: usize,
    pub t: Tensor2<Scalar>,
}

impl RMatrix {
    pub fn new(t: Tensor2<Scalar>) -> Self {
        let [a, b] = t.dims();
        assert_eq!(a, b, "r must live in A ⊗ A");
        RMatrix { dim: a, t }
    }

    pub fn zero(n: usize) -> Self {
        RMatrix::new(Tensor2::square(n))
    }

    /// Σ x_i (e_i ⊗ e_j − e_j ⊗ e_i) over the strict upper triangle.
    pub fn skew_from_upper(n: usize, upper: &[Scalar]) -> Self {
        let mut t = Tensor2::square(n);
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let c = it.next().expect("enough upper-triangle entries");
                t.set(i, j, c.clone());
                t.set(j, i, -c);
            }
        }
        RMatrix::new(t)
    }

    pub fn is_skew(&self) -> bool {
        self.t.add(&self.t.flip(false)).is_zero()
    }

    pub fn flipped(&self) -> Self {
        RMatrix::new(self.t.flip(false))
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        RMatrix::new(self.t.scale(c))
    }
}

/// Placements of a product between two 2-tensors P = Σ p1⊗p2 and Q = Σ q1⊗q2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Place {
    /// Σ (p1·q1) ⊗ p2 ⊗ q2
    P12Q13,
    /// Σ p1 ⊗ (p2·q1) ⊗ q2
    P12Q23,
    /// Σ p1 ⊗ q1 ⊗ (p2·q2)
    P13Q23,
    /// Σ (p1·q1) ⊗ q2 ⊗ p2
    P13Q12,
    /// Σ q1 ⊗ p1 ⊗ (p2·q2)
    P23Q13,
}

pub(crate) fn place(prod: &Table, p: &Tensor2<Scalar>, q: &Tensor2<Scalar>, how: Place) -> Tensor3<Scalar> {
    let n = prod.dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in p.nonzero() {
        for (k, l, b) in q.nonzero() {
            let c = a * b;
            let (x, y) = match how {
                Place::P12Q13 | Place::P13Q12 => (i, k),
                Place::P12Q23 => (j, k),
                Place::P13Q23 | Place::P23Q13 => (j, l),
            };
            for t in 0..n {
                let s = prod.get(x, y, t);
                if s.is_zero() {
                    continue;
                }
                let v = &c * s;
                match how {
                    Place::P12Q13 => out.add_at(t, j, l, &v),
                    Place::P12Q23 => out.add_at(i, t, l, &v),
                    Place::P13Q23 => out.add_at(i, k, t, &v),
                    Place::P13Q12 => out.add_at(t, l, j, &v),
                    Place::P23Q13 => out.add_at(k, i, t, &v),
                }
            }
        }
    }
    out
}

fn star_table(alg: &AlgebraStructure) -> Table {
    alg.circ.add(&alg.circ.opposite())
}

fn n_of(alg: &AlgebraStructure, r: &Tensor2<Scalar>) -> Tensor3<Scalar> {
    let star = star_table(alg);
    place(&alg.circ, r, r, Place::P13Q23).add(&place(&star, r, r, Place::P12Q23)).add(&place(
        &alg.circ,
        r,
        r,
        Place::P13Q12,
    ))
}

fn c_of(alg: &AlgebraStructure, r: &Tensor2<Scalar>) -> Tensor3<Scalar> {
    let b = &alg.bracket;
    place(b, r, r, Place::P12Q13).add(&place(b, r, r, Place::P12Q23)).add(&place(b, r, r, Place::P13Q23))
}

/// N(r) = r13∘r23 + r12⋆r23 + r13∘r12.
pub fn nybe_defect(alg: &AlgebraStructure, r: &RMatrix) -> Result<Tensor3<Scalar>> {
    dim_check("r dimension", alg.dim, r.dim)?;
    Ok(n_of(alg, &r.t))
}

/// C(r) = [r12, r13] + [r12, r23] + [r13, r23].
pub fn cybe_defect(alg: &AlgebraStructure, r: &RMatrix) -> Result<Tensor3<Scalar>> {
    dim_check("r dimension", alg.dim, r.dim)?;
    Ok(c_of(alg, &r.t))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GdybeReport {
    pub skew: bool,
    pub nybe_zero: bool,
    pub cybe_zero: bool,
}

impl GdybeReport {
    pub fn solution(&self) -> bool {
        self.nybe_zero && self.cybe_zero
    }

    pub fn skew_solution(&self) -> bool {
        self.skew && self.solution()
    }
}

pub(crate) fn require_gd(alg: &AlgebraStructure) -> Result<()> {
    if is_gd(alg) {
        Ok(())
    } else {
        Err(Error::Precondition("the algebra is not a GD algebra".into()))
    }
}

pub fn check_gdybe(alg: &AlgebraStructure, r: &RMatrix) -> Result<GdybeReport> {
    dim_check("r dimension", alg.dim, r.dim)?;
    require_gd(alg)?;
    Ok(gdybe_unchecked(alg, r))
}

/// [`check_gdybe`] without the GD precondition.
pub fn gdybe_unchecked(alg: &AlgebraStructure, r: &RMatrix) -> GdybeReport {
    GdybeReport { skew: r.is_skew(), nybe_zero: n_of(alg, &r.t).is_zero(), cybe_zero: c_of(alg, &r.t).is_zero() }
}

/// Δ_r(a) = −(L∘(a)⊗id + id⊗L⋆(a)) r and δ_r(a) = (ad(a)⊗id + id⊗ad(a)) r.
pub fn coboundary_maps(alg: &AlgebraStructure, r: &RMatrix) -> Result<CoalgebraStructure> {
    dim_check("r dimension", alg.dim, r.dim)?;
    let ops = Ops::new(alg);
    let mut co = CoalgebraStructure::zero(alg.dim);
    for k in 0..alg.dim {
        let big = on0(&r.t, &ops.lc[k]).add(&on1(&r.t, &ops.ls[k])).neg();
        let small = on0(&r.t, &ops.ad[k]).add(&on1(&r.t, &ops.ad[k]));
        co.coproduct.set_slice(k, &big);
        co.cobracket.set_slice(k, &small);
    }
    Ok(co)
}

fn on3(t: &Tensor3<Scalar>, f: usize, m: &Matrix<Scalar>) -> Tensor3<Scalar> {
    t.apply_to_factor(f, m).expect("operator matches factor")
}

/// Σ over factors of m acting on one factor at a time.
fn derive3(t: &Tensor3<Scalar>, ms: [&Matrix<Scalar>; 3]) -> Tensor3<Scalar> {
    on3(t, 0, ms[0]).add(&on3(t, 1, ms[1])).add(&on3(t, 2, ms[2]))
}

/// (A ⊗ B) t for a 2-tensor.
fn both(t: &Tensor2<Scalar>, a: &Matrix<Scalar>, b: &Matrix<Scalar>) -> Tensor2<Scalar> {
    on1(&on0(t, a), b)
}

/// Per-condition verdicts of the coboundary list, with the bialgebra verdict for comparison.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CoboundaryReport {
    pub conditions: AxiomReport,
    pub bialgebra: AxiomReport,
    pub agree: bool,
}

/// Evaluates the coboundary condition list on basis elements and compares it
/// with the bialgebra check of (A, Δ_r, δ_r). The token `R_A(b)` in the third
/// condition is read as R∘(b).
pub fn check_coboundary_conditions(alg: &AlgebraStructure, r: &RMatrix) -> Result<CoboundaryReport> {
    dim_check("r dimension", alg.dim, r.dim)?;
    require_gd(alg)?;
    let n = alg.dim;
    let ops = Ops::new(alg);
    let rt = &r.t;
    let tr = rt.flip(false);
    let s = rt.add(&tr);
    let star = star_table(alg);
    let circ = &alg.circ;
    let br = &alg.bracket;
    let lc_of = |v: &Vector| combo(&ops.lc, v, n);
    let comm = |a: &Matrix<Scalar>, b: &Matrix<Scalar>| a.mul(b).sub(&b.mul(a));
    let mut rep = AxiomReport::new();

    for a in 0..n {
        for b in 0..n {
            let (lca, lcb, lsa, lsb, rca, rcb) =
                (&ops.lc[a], &ops.lc[b], &ops.ls[a], &ops.ls[b], &ops.rc[a], &ops.rc[b]);
            let c1 = on1(&s, &lc_of(&circ.row(b, a)).add(&lca.mul(lcb))).add(&both(&s, lsa, lsb));
            rep.check_t2("cob1", &[a, b], c1);
            let c2 = both(&s, lsa, lsb).sub(&both(&s, lsb, lsa));
            rep.check_t2("cob2", &[a, b], c2);
            let k = comm(lca, lcb);
            let c3 = both(&s, lsb, rca)
                .neg()
                .add(&both(&s, lsa, rcb))
                .add(&both(&s, rca, lcb))
                .sub(&both(&s, rcb, lca))
                .add(&on1(&s, &k))
                .sub(&on0(&s, &k));
            rep.check_t2("cob3", &[a, b], c3);
            let c6 = on0(&s, &ops.ad[b]).add(&on1(&s, &ops.ad[b]));
            if a == 0 {
                rep.check_t2("cob6", &[b], c6);
            }
            let cc2 = on0(&on1(&s, &ops.ad[b]), lsa).add(&on1(&s, &ops.ad[b].mul(lca)));
            rep.check_t2("co-cond2", &[a, b], cc2);
        }
    }

    let nr = n_of(alg, rt);
    let cr = c_of(alg, rt);
    let x4 = place(circ, &tr, rt, Place::P12Q13).add(&place(circ, rt, rt, Place::P12Q23)).add(&place(
        &star,
        rt,
        rt,
        Place::P13Q23,
    ));
    let tau12 = |t: &Tensor3<Scalar>| t.permute([1, 0, 2], false);
    let inner4 = {
        let m = place(circ, rt, rt, Place::P13Q12).add(&place(&star, rt, rt, Place::P12Q23));
        place(circ, rt, rt, Place::P23Q13).sub(&place(circ, rt, rt, Place::P13Q23)).sub(&m.sub(&tau12(&m)))
    };
    let inner5 = place(circ, rt, &tr, Place::P13Q23).sub(&place(&star, rt, rt, Place::P12Q23)).sub(&place(
        circ,
        rt,
        rt,
        Place::P13Q12,
    ));
    let x1 = place(circ, rt, rt, Place::P12Q23).add(&place(circ, &tr, rt, Place::P12Q13)).add(&place(
        &star,
        rt,
        rt,
        Place::P13Q23,
    ));
    for a in 0..n {
        let (lca, lsa, ada) = (&ops.lc[a], &ops.ls[a], &ops.ad[a]);
        let c4 = on3(&x4, 0, lca)
            .sub(&on3(&x4, 1, lca))
            .add(&place(circ, &on1(&s, lca), rt, Place::P12Q23))
            .sub(&place(circ, &on0(rt, lca), &s, Place::P13Q12))
            .add(&on3(&inner4, 2, lsa));
        rep.check_t3("cob4", &[a], c4);
        let y = on3(&inner5, 2, lsa);
        rep.check_t3("cob5", &[a], y.sub(&y.permute([0, 2, 1], false)));
        rep.check_t3("cob7", &[a], derive3(&cr, [ada, ada, ada]));
        let mut sum_beta = Tensor3::cube(n);
        for (k, l, c) in rt.nonzero() {
            let m = ops.rc[k].mul(ada);
            let p = on0(&s, &m);
            for (i, j, d) in p.nonzero() {
                sum_beta.add_at(i, j, l, &(c * d));
            }
        }
        let cc1 = derive3(&cr, [lca, lsa, lsa])
            .sub(&on3(&place(br, rt, &s, Place::P13Q23), 1, lsa))
            .sub(&sum_beta)
            .sub(&on3(&x1, 1, ada))
            .sub(&on3(&nr, 2, ada));
        rep.check_t3("co-cond1", &[a], cc1);
    }

    let co = coboundary_maps(alg, r)?;
    let bialgebra = check_bialgebra(&BialgebraData::new(alg.clone(), co)?, BialgebraKind::Gd);
    let agree = rep.passed == bialgebra.passed;
    Ok(CoboundaryReport { conditions: rep, bialgebra, agree })
}

/// T^r(f) = Σ ⟨f, x_α⟩ y_α as a matrix A* → A, and its O-operator report for (L⋆*, −R∘*, ad*).
pub fn r_to_operator(alg: &AlgebraStructure, r: &RMatrix) -> Result<(Matrix<Scalar>, AxiomReport)> {
    dim_check("r dimension", alg.dim, r.dim)?;
    if !r.is_skew() {
        return Err(Error::Precondition("r is not skew-symmetric".into()));
    }
    let t = operator_of(r);
    let report = check_o_operator(alg, &Representation::coadjoint(alg), &t)?;
    Ok((t, report))
}

/// Column i of the matrix is T^r(e_i*) = Σ_j r_ij e_j.
pub fn operator_of(r: &RMatrix) -> Matrix<Scalar> {
    let n = r.dim;
    let mut m = Matrix::zeros(n, n);
    for (i, j, c) in r.t.nonzero() {
        m.set(j, i, c.clone());
    }
    m
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
    fn zero_r() {
        let alg = gd_2();
        let r = RMatrix::zero(2);
        assert!(nybe_defect(&alg, &r).unwrap().is_zero());
        let g = check_gdybe(&alg, &r).unwrap();
        assert!(g.skew && g.solution());
        assert_eq!(coboundary_maps(&alg, &r).unwrap(), CoalgebraStructure::zero(2));
        let (t, rep) = r_to_operator(&alg, &r).unwrap();
        assert!(t.is_zero() && rep.passed);
        assert!(check_coboundary_conditions(&alg, &r).unwrap().conditions.passed);
    }

    #[test]
    fn e2_e2_is_symmetric_with_zero_defects() {
        let alg = gd_2();
        let mut t = Tensor2::square(2);
        t.set(1, 1, s(1));
        let g = check_gdybe(&alg, &RMatrix::new(t)).unwrap();
        assert!(!g.skew && g.nybe_zero && g.cybe_zero);
    }

    #[test]
    fn non_skew_r_has_no_operator_form() {
        let mut t = Tensor2::square(2);
        t.set(0, 1, s(1));
        assert!(r_to_operator(&gd_2(), &RMatrix::new(t)).is_err());
    }

    #[test]
    fn non_gd_algebra_is_rejected() {
        let mut alg = AlgebraStructure::zero(2);
        alg.bracket.set(0, 0, 0, s(1));
        assert!(check_gdybe(&alg, &RMatrix::zero(2)).is_err());
    }
}
