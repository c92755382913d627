use serde::Serialize;

use crate::error::{dim_check, Error, Result};
use crate::exactalg::{CoeffVector, MPoly, Var};
use crate::structures::{basis_labels, AlgebraStructure, AxiomReport, Defect};

pub type PolyVector = CoeffVector<MPoly>;

/// Free k[∂]-module on `dim` generators with a λ-bracket table and an optional cobracket.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ConformalStructure {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// [e_i λ e_j] at position `i * dim + j`, polynomial in λ and ∂.
    pub bracket: Vec<PolyVector>,
    /// δ(e_k) with ∂1 acting on the left factor and ∂2 on the right.
    pub cobracket: Option<Vec<crate::exactalg::Tensor2<MPoly>>>,
}

impl ConformalStructure {
    pub fn zero(dim: usize) -> Self {
        ConformalStructure {
            dim,
            basis_labels: basis_labels(dim),
            bracket: vec![PolyVector::zeros(dim); dim * dim],
            cobracket: None,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &PolyVector {
        &self.bracket[i * self.dim + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: PolyVector) {
        self.bracket[i * self.dim + j] = v;
    }

    pub fn generator(&self, i: usize) -> PolyVector {
        PolyVector::basis(self.dim, i)
    }
}

pub(crate) fn var(v: Var) -> MPoly {
    MPoly::var(v)
}

/// Σ x_i(−p) y_j(p+∂) T_ij(λ ↦ p) for a table of `cols` columns with values in a module of
/// dimension `out`. This is the sesquilinear extension shared by brackets, module actions
/// and λ-products.
pub(crate) fn sesqui(
    table: &[PolyVector],
    cols: usize,
    out: usize,
    x: &PolyVector,
    y: &PolyVector,
    p: &MPoly,
) -> PolyVector {
    let neg = -p;
    let shift = p + &var(Var::D);
    let mut res = PolyVector::zeros(out);
    for (i, xi) in x.entries().iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let xs = xi.substitute(Var::D, &neg);
        for (j, yj) in y.entries().iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let coef = xs.mul_ref(&yj.substitute(Var::D, &shift));
            for (w, t) in table[i * cols + j].entries().iter().enumerate() {
                if !t.is_zero() {
                    res.add_at(w, &coef.mul_ref(&t.substitute(Var::Lambda, p)));
                }
            }
        }
    }
    res
}

/// [x_μ y] with μ replaced by `p`. Coefficients of `x` and `y` may carry other variables.
pub fn bracket_with_param(cs: &ConformalStructure, x: &PolyVector, y: &PolyVector, p: &MPoly) -> Result<PolyVector> {
    dim_check("left argument", cs.dim, x.dim())?;
    dim_check("right argument", cs.dim, y.dim())?;
    Ok(sesqui(&cs.bracket, cs.dim, cs.dim, x, y, p))
}

/// [x λ y] for x, y ∈ k[∂]A.
pub fn lambda_bracket(cs: &ConformalStructure, x: &PolyVector, y: &PolyVector) -> Result<PolyVector> {
    for v in x.entries().iter().chain(y.entries()) {
        if Var::ALL.iter().any(|&w| w != Var::D && v.uses(w)) {
            return Err(Error::Precondition("arguments must be polynomials in ∂ only".into()));
        }
    }
    bracket_with_param(cs, x, y, &var(Var::Lambda))
}

/// [a λ b] = ∂(b∘a) + λ(a⋆b) + [a,b] on generators.
pub fn affinize(alg: &AlgebraStructure) -> ConformalStructure {
    let n = alg.dim;
    let mut cs = ConformalStructure::zero(n);
    cs.basis_labels = alg.basis_labels.clone();
    let (d, l) = (var(Var::D), var(Var::Lambda));
    for i in 0..n {
        for j in 0..n {
            let ba = alg.circ.row(j, i).to_poly();
            let st = alg.star(&alg.e(i), &alg.e(j)).to_poly();
            let br = alg.bracket.row(i, j).to_poly();
            let mut v = br;
            v.add_scaled(&d, &ba);
            v.add_scaled(&l, &st);
            cs.set_entry(i, j, v);
        }
    }
    cs
}

/// Skew-symmetry and Jacobi identity on generators.
pub fn check_conformal_algebra(cs: &ConformalStructure) -> AxiomReport {
    let n = cs.dim;
    let (l, m, d) = (var(Var::Lambda), var(Var::Mu), var(Var::D));
    let br = |x: &PolyVector, y: &PolyVector, p: &MPoly| sesqui(&cs.bracket, n, n, x, y, p);
    let e = |i| cs.generator(i);
    let mut report = AxiomReport::new();
    let flip = -(&l + &d);
    for i in 0..n {
        for j in 0..n {
            let defect = cs.entry(i, j).add(&br(&e(j), &e(i), &flip));
            if !defect.is_zero() {
                report.fail("conformal.skew-symmetry", &[i, j], Defect::PolyVector(defect));
            }
        }
    }
    let lm = &l + &m;
    for a in 0..n {
        for b in 0..n {
            let ab = cs.entry(a, b).clone();
            for c in 0..n {
                let lhs = br(&e(a), &br(&e(b), &e(c), &m), &l);
                let defect = lhs.sub(&br(&ab, &e(c), &lm)).sub(&br(&e(b), cs.entry(a, c), &m));
                if !defect.is_zero() {
                    report.fail("conformal.jacobi", &[a, b, c], Defect::PolyVector(defect));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;
    use crate::structures::is_gd;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn novikov_type() -> AlgebraStructure {
        let mut alg = AlgebraStructure::zero(2);
        alg.circ.set(0, 1, 1, s(1));
        alg
    }

    fn pv(entries: Vec<MPoly>) -> PolyVector {
        PolyVector::from_vec(entries)
    }

    #[test]
    fn affinized_table() {
        let cs = affinize(&novikov_type());
        let l = var(Var::Lambda);
        assert_eq!(cs.entry(0, 1), &pv(vec![MPoly::zero(), l.clone()]));
        assert!(cs.entry(0, 0).is_zero() && cs.entry(1, 1).is_zero());
        // e1∘e2 = e2 feeds the ∂ term of [e2 λ e1]
        assert_eq!(cs.entry(1, 0), &pv(vec![MPoly::zero(), &var(Var::D) + &l]));
    }

    #[test]
    fn sesquilinearity_rules() {
        let cs = affinize(&novikov_type());
        let (l, d) = (var(Var::Lambda), var(Var::D));
        let de1 = pv(vec![d.clone(), MPoly::zero()]);
        let e2 = cs.generator(1);
        let got = lambda_bracket(&cs, &de1, &e2).unwrap();
        assert_eq!(got, pv(vec![MPoly::zero(), -(&l * &l)]));
        let de2 = pv(vec![MPoly::zero(), d.clone()]);
        let got = lambda_bracket(&cs, &cs.generator(0), &de2).unwrap();
        assert_eq!(got, pv(vec![MPoly::zero(), &(&l + &d) * &l]));
        assert!(lambda_bracket(&cs, &PolyVector::zeros(2), &e2).unwrap().is_zero());
    }

    #[test]
    fn lambda_in_argument_rejected() {
        let cs = affinize(&novikov_type());
        let x = pv(vec![var(Var::Lambda), MPoly::zero()]);
        assert!(lambda_bracket(&cs, &x, &cs.generator(0)).is_err());
    }

    #[test]
    fn jacobi_tracks_gd() {
        let alg = novikov_type();
        assert!(is_gd(&alg));
        assert!(check_conformal_algebra(&affinize(&alg)).passed);
        let mut bad = AlgebraStructure::zero(2);
        bad.circ.set(0, 0, 1, s(1));
        bad.circ.set(1, 0, 0, s(1));
        assert!(!is_gd(&bad));
        assert!(!check_conformal_algebra(&affinize(&bad)).passed);
        assert!(check_conformal_algebra(&ConformalStructure::zero(3)).passed);
    }
}
