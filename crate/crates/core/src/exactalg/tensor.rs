use std::fmt;

use serde::Serialize;

use super::mpoly::{MPoly, Var};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Ring operations shared by the two coefficient types.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn c_add(&self, o: &Self) -> Self;
    fn c_sub(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_neg(&self) -> Self;
    /// Renames slot variables ∂1, ∂2, ∂3 so that slot `s` becomes slot `slot_map[s]`.
    /// Constants are unaffected.
    fn move_slots(&self, slot_map: &[usize]) -> Self;

    fn c_add_assign(&mut self, o: &Self) {
        *self = self.c_add(o);
    }
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn c_neg(&self) -> Self {
        -self
    }
    fn move_slots(&self, _: &[usize]) -> Self {
        self.clone()
    }
    fn c_add_assign(&mut self, o: &Self) {
        *self += o;
    }
}

impl Coeff for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn c_neg(&self) -> Self {
        -self
    }
    fn move_slots(&self, slot_map: &[usize]) -> Self {
        self.rename(|v| match v {
            Var::D1 | Var::D2 | Var::D3 => {
                let s = v as usize - Var::D1 as usize;
                if s < slot_map.len() {
                    Var::slot(slot_map[s])
                } else {
                    v
                }
            }
            o => o,
        })
    }
    fn c_add_assign(&mut self, o: &Self) {
        self.add_assign_ref(o);
    }
}

/// Element of a free module on a finite basis.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CoeffVector<C> {
    entries: Vec<C>,
}

impl<C: Coeff> CoeffVector<C> {
    pub fn zeros(dim: usize) -> Self {
        CoeffVector { entries: vec![C::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = C::one();
        v
    }

    pub fn from_vec(entries: Vec<C>) -> Self {
        CoeffVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &C {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, c: C) {
        self.entries[i] = c;
    }

    pub fn add_at(&mut self, i: usize, c: &C) {
        self.entries[i].c_add_assign(c);
    }

    pub fn entries(&self) -> &[C] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(C::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        CoeffVector { entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.c_add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CoeffVector { entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.c_sub(b)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(C::c_neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| c.c_mul(x))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> CoeffVector<D> {
        CoeffVector { entries: self.entries.iter().map(f).collect() }
    }

    pub fn add_scaled(&mut self, c: &C, o: &Self) {
        for (a, b) in self.entries.iter_mut().zip(&o.entries) {
            if !b.is_zero() {
                a.c_add_assign(&c.c_mul(b));
            }
        }
    }
}

impl CoeffVector<Scalar> {
    pub fn to_poly(&self) -> CoeffVector<MPoly> {
        self.map(|c| MPoly::constant(c.clone()))
    }
}

/// Dense matrix; column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(cols: &[CoeffVector<C>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for i in 0..rows {
                m.set(i, j, col.get(i).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        self.data[i * self.cols + j] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &C) {
        self.data[i * self.cols + j].c_add_assign(c);
    }

    pub fn column(&self, j: usize) -> CoeffVector<C> {
        CoeffVector::from_vec((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, C::c_add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, C::c_sub)
    }

    pub fn neg(&self) -> Self {
        self.map(C::c_neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| c.c_mul(x))
    }

    fn zip(&self, o: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self · o`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &a.c_mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &CoeffVector<C>) -> CoeffVector<C> {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        let mut out = CoeffVector::zeros(self.rows);
        for j in 0..self.cols {
            let x = v.get(j);
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.add_at(i, &a.c_mul(x));
                }
            }
        }
        out
    }
}

impl Matrix<Scalar> {
    pub fn to_poly(&self) -> Matrix<MPoly> {
        self.map(|c| MPoly::constant(c.clone()))
    }

    /// Exact determinant by fraction-free-free Gaussian elimination over Q.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                for j in 0..n {
                    let t = a.get(p, j).clone();
                    a.set(p, j, a.get(col, j).clone());
                    a.set(col, j, t);
                }
                det = -det;
            }
            let piv = a.get(col, col).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a.get(r, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, v);
                }
            }
        }
        det
    }
}

/// Rank-2 tensor; entry `(i, j)` is the coefficient of `e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Tensor2<C> {
    dims: [usize; 2],
    data: Vec<C>,
}

/// Rank-3 tensor; entry `(i, j, k)` is the coefficient of `e_i ⊗ e_j ⊗ e_k`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Tensor3<C> {
    dims: [usize; 3],
    data: Vec<C>,
}

impl<C: Coeff> Tensor2<C> {
    pub fn zeros(n1: usize, n2: usize) -> Self {
        Tensor2 { dims: [n1, n2], data: vec![C::zero(); n1 * n2] }
    }

    pub fn square(n: usize) -> Self {
        Self::zeros(n, n)
    }

    pub fn dims(&self) -> [usize; 2] {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.dims[1] + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        let n = self.dims[1];
        self.data[i * n + j] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &C) {
        let n = self.dims[1];
        self.data[i * n + j].c_add_assign(c);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    /// Nonzero entries in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &C)> {
        let n = self.dims[1];
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(x, c)| (x / n, x % n, c))
    }

    pub fn outer(u: &CoeffVector<C>, v: &CoeffVector<C>) -> Self {
        let mut t = Self::zeros(u.dim(), v.dim());
        for i in 0..u.dim() {
            if u.get(i).is_zero() {
                continue;
            }
            for j in 0..v.dim() {
                t.set(i, j, u.get(i).c_mul(v.get(j)));
            }
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        Tensor2 { dims: self.dims, data: self.data.iter().zip(&o.data).map(|(a, b)| a.c_add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        Tensor2 { dims: self.dims, data: self.data.iter().zip(&o.data).map(|(a, b)| a.c_sub(b)).collect() }
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                a.c_add_assign(b);
            }
        }
    }

    pub fn neg(&self) -> Self {
        self.map(C::c_neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| c.c_mul(x))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Tensor2<D> {
        Tensor2 { dims: self.dims, data: self.data.iter().map(f).collect() }
    }

    /// τ: `e_i ⊗ e_j ↦ e_j ⊗ e_i`, optionally swapping ∂1 and ∂2 in every coefficient.
    pub fn flip(&self, var_swap: bool) -> Self {
        let mut out = Self::zeros(self.dims[1], self.dims[0]);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let c = if var_swap { c.move_slots(&[1, 0]) } else { c.clone() };
                out.set(j, i, c);
            }
        }
        out
    }

    /// Applies `m` to tensor factor `factor` (0 or 1).
    pub fn apply_to_factor(&self, factor: usize, m: &Matrix<C>) -> Result<Self> {
        if factor > 1 {
            return Err(Error::Dimension(format!("factor {factor} out of range for a 2-tensor")));
        }
        crate::error::dim_check("matrix columns vs factor", self.dims[factor], m.cols())?;
        let mut dims = self.dims;
        dims[factor] = m.rows();
        let mut out = Self::zeros(dims[0], dims[1]);
        for (i, j, c) in self.nonzero() {
            let src = if factor == 0 { i } else { j };
            for r in 0..m.rows() {
                let a = m.get(r, src);
                if a.is_zero() {
                    continue;
                }
                let v = a.c_mul(c);
                if factor == 0 {
                    out.add_at(r, j, &v);
                } else {
                    out.add_at(i, r, &v);
                }
            }
        }
        Ok(out)
    }
}

impl<C: Coeff> Tensor3<C> {
    pub fn zeros(n1: usize, n2: usize, n3: usize) -> Self {
        Tensor3 { dims: [n1, n2, n3], data: vec![C::zero(); n1 * n2 * n3] }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &C {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: C) {
        let x = self.idx(i, j, k);
        self.data[x] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, c: &C) {
        let x = self.idx(i, j, k);
        self.data[x].c_add_assign(c);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &C)> {
        let [_, n2, n3] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(x, c)| ([x / (n2 * n3), (x / n3) % n2, x % n3], c))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&o.data).map(|(a, b)| a.c_add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&o.data).map(|(a, b)| a.c_sub(b)).collect() }
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!(self.dims, o.dims, "tensor shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                a.c_add_assign(b);
            }
        }
    }

    pub fn neg(&self) -> Self {
        self.map(C::c_neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| c.c_mul(x))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Tensor3<D> {
        Tensor3 { dims: self.dims, data: self.data.iter().map(f).collect() }
    }

    /// Permutes factors: output factor `q` is input factor `perm[q]`. With `var_swap`
    /// the slot variables travel with their factors.
    pub fn permute(&self, perm: [usize; 3], var_swap: bool) -> Self {
        let mut seen = [false; 3];
        for &p in &perm {
            assert!(p < 3 && !seen[p], "invalid permutation {perm:?}");
            seen[p] = true;
        }
        let mut inv = [0usize; 3];
        for (q, &p) in perm.iter().enumerate() {
            inv[p] = q;
        }
        let d = self.dims;
        let mut out = Self::zeros(d[perm[0]], d[perm[1]], d[perm[2]]);
        for (ix, c) in self.nonzero() {
            let c = if var_swap { c.move_slots(&inv) } else { c.clone() };
            out.set(ix[perm[0]], ix[perm[1]], ix[perm[2]], c);
        }
        out
    }

    /// Applies `m` to tensor factor `factor` (0, 1 or 2).
    pub fn apply_to_factor(&self, factor: usize, m: &Matrix<C>) -> Result<Self> {
        if factor > 2 {
            return Err(Error::Dimension(format!("factor {factor} out of range for a 3-tensor")));
        }
        crate::error::dim_check("matrix columns vs factor", self.dims[factor], m.cols())?;
        let mut dims = self.dims;
        dims[factor] = m.rows();
        let mut out = Self::zeros(dims[0], dims[1], dims[2]);
        for (ix, c) in self.nonzero() {
            for r in 0..m.rows() {
                let a = m.get(r, ix[factor]);
                if a.is_zero() {
                    continue;
                }
                let mut jx = ix;
                jx[factor] = r;
                out.add_at(jx[0], jx[1], jx[2], &a.c_mul(c));
            }
        }
        Ok(out)
    }
}

/// Tensors that support τ-type factor permutations.
pub trait Flip: Sized {
    fn flip_with(&self, perm: &[usize], var_swap: bool) -> Result<Self>;
}

impl<C: Coeff> Flip for Tensor2<C> {
    fn flip_with(&self, perm: &[usize], var_swap: bool) -> Result<Self> {
        match perm {
            [0, 1] => Ok(self.clone()),
            [1, 0] => Ok(self.flip(var_swap)),
            _ => Err(Error::Dimension(format!("invalid permutation {perm:?} for a 2-tensor"))),
        }
    }
}

impl<C: Coeff> Flip for Tensor3<C> {
    fn flip_with(&self, perm: &[usize], var_swap: bool) -> Result<Self> {
        let p: [usize; 3] =
            perm.try_into().map_err(|_| Error::Dimension(format!("invalid permutation {perm:?} for a 3-tensor")))?;
        let mut s = p;
        s.sort_unstable();
        if s != [0, 1, 2] {
            return Err(Error::Dimension(format!("invalid permutation {perm:?} for a 3-tensor")));
        }
        Ok(self.permute(p, var_swap))
    }
}

/// Permutes tensor factors; see [`Tensor3::permute`] for the convention.
pub fn tensor_flip<T: Flip>(t: &T, perm: &[usize], var_swap: bool) -> Result<T> {
    t.flip_with(perm, var_swap)
}

/// Tensors that a matrix can act on one factor at a time.
pub trait FactorAction<C>: Sized {
    fn act(&self, factor: usize, m: &Matrix<C>) -> Result<Self>;
}

impl<C: Coeff> FactorAction<C> for Tensor2<C> {
    fn act(&self, factor: usize, m: &Matrix<C>) -> Result<Self> {
        self.apply_to_factor(factor, m)
    }
}

impl<C: Coeff> FactorAction<C> for Tensor3<C> {
    fn act(&self, factor: usize, m: &Matrix<C>) -> Result<Self> {
        self.apply_to_factor(factor, m)
    }
}

/// Applies `m` to factor `factor` (0-based).
pub fn apply_to_factor<C: Coeff, T: FactorAction<C>>(t: &T, factor: usize, m: &Matrix<C>) -> Result<T> {
    t.act(factor, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn e(n: usize, i: usize) -> CoeffVector<Scalar> {
        CoeffVector::basis(n, i)
    }

    #[test]
    fn flip_plain() {
        let t = Tensor2::outer(&e(2, 0), &e(2, 1));
        let f = tensor_flip(&t, &[1, 0], false).unwrap();
        assert_eq!(f, Tensor2::outer(&e(2, 1), &e(2, 0)));
    }

    #[test]
    fn flip_swaps_slot_variables() {
        let mut t: Tensor2<MPoly> = Tensor2::square(2);
        t.set(0, 1, MPoly::var(Var::D1));
        let f = t.flip(true);
        let mut want: Tensor2<MPoly> = Tensor2::square(2);
        want.set(1, 0, MPoly::var(Var::D2));
        assert_eq!(f, want);
    }

    #[test]
    fn permute_moves_variables_with_factors() {
        let mut t: Tensor3<MPoly> = Tensor3::cube(2);
        t.set(0, 1, 1, MPoly::var(Var::D1).mul_ref(&MPoly::var(Var::D3)));
        // output factor q is input factor perm[q]: input slot 0 goes to output slot 2
        let p = t.permute([1, 2, 0], true);
        let mut want: Tensor3<MPoly> = Tensor3::cube(2);
        want.set(1, 1, 0, MPoly::var(Var::D3).mul_ref(&MPoly::var(Var::D2)));
        assert_eq!(p, want);
    }

    #[test]
    fn identity_and_zero_actions() {
        let mut t: Tensor3<Scalar> = Tensor3::cube(2);
        t.set(0, 1, 0, s(3));
        t.set(1, 1, 1, s(-2));
        assert_eq!(apply_to_factor(&t, 1, &Matrix::identity(2)).unwrap(), t);
        assert!(apply_to_factor(&t, 2, &Matrix::zeros(2, 2)).unwrap().is_zero());
        assert!(apply_to_factor(&t, 0, &Matrix::<Scalar>::zeros(2, 3)).is_err());
    }

    #[test]
    fn determinant_small() {
        let m = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        assert_eq!(m.determinant(), s(-1));
        let m = Matrix::from_rows(vec![vec![s(1), s(2)], vec![s(2), s(4)]]).unwrap();
        assert_eq!(m.determinant(), s(0));
    }
}
