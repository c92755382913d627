//! Coproduct Δ and cobracket δ on A, coalgebra identity checks, and the
//! transpose duality with algebras on A*.

use serde::Serialize;

use crate::error::{dim_check, Result};
use crate::exactalg::{Scalar, Tensor2, Tensor3};
use crate::structures::{basis_labels, AlgebraStructure, AxiomReport, Table, Vector};

/// Δ (Novikov side) and δ (Lie side) by structure constants:
/// `coproduct.get(i, j, k)` is the coefficient of `e_i ⊗ e_j` in Δ(e_k).
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CoalgebraStructure {
    pub dim: usize,
    pub coproduct: Table,
    pub cobracket: Table,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductKind {
    /// Δ
    Coproduct,
    /// δ
    Cobracket,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoalgebraKind {
    Novikov,
    Lie,
    Gd,
}

impl CoalgebraStructure {
    pub fn zero(dim: usize) -> Self {
        CoalgebraStructure { dim, coproduct: Table::zeros(dim), cobracket: Table::zeros(dim) }
    }

    pub fn new(coproduct: Table, cobracket: Table) -> Self {
        assert_eq!(coproduct.dim(), cobracket.dim(), "table dimensions differ");
        CoalgebraStructure { dim: coproduct.dim(), coproduct, cobracket }
    }

    pub fn big_delta(&self, a: &Vector) -> Tensor2<Scalar> {
        self.coproduct.comul(a)
    }

    pub fn small_delta(&self, a: &Vector) -> Tensor2<Scalar> {
        self.cobracket.comul(a)
    }

    pub fn big_delta_e(&self, k: usize) -> Tensor2<Scalar> {
        self.coproduct.slice(k)
    }

    pub fn small_delta_e(&self, k: usize) -> Tensor2<Scalar> {
        self.cobracket.slice(k)
    }
}

pub fn comultiply(co: &CoalgebraStructure, kind: CoproductKind, a: &Vector) -> Result<Tensor2<Scalar>> {
    dim_check("comultiply argument", co.dim, a.dim())?;
    Ok(match kind {
        CoproductKind::Coproduct => co.big_delta(a),
        CoproductKind::Cobracket => co.small_delta(a),
    })
}

/// (id ⊗ φ) t, with φ given by a coproduct-layout table.
pub(crate) fn id_x(t: &Tensor2<Scalar>, phi: &Table) -> Tensor3<Scalar> {
    let n = phi.dim();
    let mut out = Tensor3::cube(n);
    for (i, j, c) in t.nonzero() {
        for (p, q, k, d) in phi.entries() {
            if k == j {
                out.add_at(i, p, q, &(c * d));
            }
        }
    }
    out
}

/// (φ ⊗ id) t.
pub(crate) fn x_id(t: &Tensor2<Scalar>, phi: &Table) -> Tensor3<Scalar> {
    let n = phi.dim();
    let mut out = Tensor3::cube(n);
    for (i, j, c) in t.nonzero() {
        for (p, q, k, d) in phi.entries() {
            if k == i {
                out.add_at(p, q, j, &(c * d));
            }
        }
    }
    out
}

/// τ ⊗ id on a 3-tensor.
pub(crate) fn tau12(t: &Tensor3<Scalar>) -> Tensor3<Scalar> {
    t.permute([1, 0, 2], false)
}

pub(crate) fn novikov_coidentities(d: &Table, report: &mut AxiomReport) {
    for a in 0..d.dim() {
        let da = d.slice(a);
        let id_d = id_x(&da, d);
        let d_id = x_id(&da, d);
        let lc3 = id_d.sub(&tau12(&id_d)).sub(&d_id).add(&tau12(&d_id));
        report.check_t3("novikov-coalgebra.left-symmetry", &[a], lc3);
        let lc4 = tau12(&id_x(&da.flip(false), d)).sub(&d_id);
        report.check_t3("novikov-coalgebra.right-commutativity", &[a], lc4);
    }
}

pub(crate) fn lie_coidentities(d: &Table, report: &mut AxiomReport) {
    for a in 0..d.dim() {
        let da = d.slice(a);
        report.check_t2("lie-coalgebra.antisymmetry", &[a], da.add(&da.flip(false)));
        let id_d = id_x(&da, d);
        let j = id_d.sub(&tau12(&id_d)).sub(&x_id(&da, d));
        report.check_t3("lie-coalgebra.jacobi", &[a], j);
    }
}

fn compat_coidentity(co: &CoalgebraStructure, report: &mut AxiomReport) {
    let (big, small) = (&co.coproduct, &co.cobracket);
    for a in 0..co.dim {
        let da = big.slice(a);
        let sa = small.slice(a);
        let lc2 = id_x(&da, small)
            .sub(&tau12(&id_x(&sa, big)))
            .add(&tau12(&id_x(&da.flip(false), small)))
            .sub(&x_id(&sa, big))
            .sub(&x_id(&da, small));
        report.check_t3("gd-coalgebra.compatibility", &[a], lc2);
    }
}

/// Checks the coalgebra identities of `kind` on every basis element.
pub fn check_coalgebra(co: &CoalgebraStructure, kind: CoalgebraKind) -> AxiomReport {
    let mut report = AxiomReport::new();
    match kind {
        CoalgebraKind::Novikov => novikov_coidentities(&co.coproduct, &mut report),
        CoalgebraKind::Lie => lie_coidentities(&co.cobracket, &mut report),
        CoalgebraKind::Gd => {
            novikov_coidentities(&co.coproduct, &mut report);
            lie_coidentities(&co.cobracket, &mut report);
            compat_coidentity(co, &mut report);
        }
    }
    report
}

/// Algebra on A* with `e_i* ∘ e_j* = Σ_k c_ij^k e_k*` and likewise for the bracket.
pub fn dualize_coalgebra(co: &CoalgebraStructure) -> AlgebraStructure {
    AlgebraStructure {
        dim: co.dim,
        circ: co.coproduct.clone(),
        bracket: co.cobracket.clone(),
        basis_labels: basis_labels(co.dim),
    }
}

/// Inverse of [`dualize_coalgebra`].
pub fn dualize_algebra(alg: &AlgebraStructure) -> CoalgebraStructure {
    CoalgebraStructure { dim: alg.dim, coproduct: alg.circ.clone(), cobracket: alg.bracket.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_algebra, AlgebraKind};

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn comultiply_small_cases() {
        let mut co = CoalgebraStructure::zero(2);
        co.cobracket.set(0, 1, 1, s(1));
        co.cobracket.set(1, 0, 1, s(-1));
        co.coproduct.set(0, 1, 1, s(1));
        let e2 = Vector::basis(2, 1);
        let d = comultiply(&co, CoproductKind::Cobracket, &e2).unwrap();
        assert_eq!(d.nonzero().count(), 2);
        assert_eq!(d.get(0, 1), &s(1));
        assert_eq!(d.get(1, 0), &s(-1));
        let big = comultiply(&co, CoproductKind::Coproduct, &e2).unwrap();
        assert_eq!(big.nonzero().map(|(i, j, c)| (i, j, c.clone())).collect::<Vec<_>>(), vec![(0, 1, s(1))]);
        assert!(comultiply(&CoalgebraStructure::zero(2), CoproductKind::Coproduct, &e2).unwrap().is_zero());
    }

    #[test]
    fn dual_bracket_from_cobracket() {
        let mut co = CoalgebraStructure::zero(2);
        co.cobracket.set(0, 1, 1, s(1));
        co.cobracket.set(1, 0, 1, s(-1));
        let alg = dualize_coalgebra(&co);
        assert_eq!(alg.bracket.row(0, 1), Vector::basis(2, 1));
        assert_eq!(alg.bracket.row(1, 0), Vector::basis(2, 1).neg());
        assert_eq!(dualize_algebra(&alg), co);
    }

    #[test]
    fn zero_maps_pass() {
        let co = CoalgebraStructure::zero(3);
        for k in [CoalgebraKind::Novikov, CoalgebraKind::Lie, CoalgebraKind::Gd] {
            assert!(check_coalgebra(&co, k).passed);
        }
    }

    #[test]
    fn duality_on_a_fixed_case() {
        // Δ(e2) = e2⊗e2 in dimension 2
        let mut co = CoalgebraStructure::zero(2);
        co.coproduct.set(1, 1, 1, s(1));
        let a = check_coalgebra(&co, CoalgebraKind::Novikov).passed;
        let b = check_algebra(&dualize_coalgebra(&co), AlgebraKind::Novikov).passed;
        assert_eq!(a, b);
    }
}
