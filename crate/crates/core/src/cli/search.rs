//! Brute-force enumeration of GDYBE solutions over a finite coefficient set.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Tensor2};
use crate::structures::AlgebraStructure;
use crate::yangbaxter::{check_gdybe, RMatrix};

pub const MAX_DIM: usize = 4;
/// Upper bound on the grid size when all n² entries are free.
pub const MAX_CANDIDATES: u64 = 5_000_000;

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub candidates: u64,
    /// Solutions in enumeration order.
    pub solutions: Vec<RMatrix>,
}

/// Positions enumerated: the strictly upper triangle for skew r, else every entry, row-major.
fn positions(n: usize, skew: bool) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !skew || i < j {
                v.push((i, j));
            }
        }
    }
    v
}

fn candidate(n: usize, pos: &[(usize, usize)], coeffs: &[Scalar], mut idx: u64, skew: bool) -> RMatrix {
    let base = coeffs.len() as u64;
    let mut digits = vec![0usize; pos.len()];
    // The last position varies fastest.
    for d in digits.iter_mut().rev() {
        *d = (idx % base) as usize;
        idx /= base;
    }
    let mut t = Tensor2::square(n);
    for (&(i, j), &d) in pos.iter().zip(&digits) {
        let c = coeffs[d].clone();
        if skew {
            t.set(j, i, -c.clone());
        }
        t.set(i, j, c);
    }
    RMatrix::new(t)
}

/// Every r over `coeffs` (lexicographic in the coefficient order given) solving the GDYBE;
/// with `skew`, only skew-symmetric r and solutions are kept.
pub fn search(alg: &AlgebraStructure, coeffs: &[Scalar], skew: bool) -> Result<SearchResult> {
    let n = alg.dim;
    if n > MAX_DIM {
        return Err(Error::Precondition(format!("search is limited to dimension ≤ {MAX_DIM}, got {n}")));
    }
    if coeffs.is_empty() {
        return Err(Error::Config("empty coefficient list".into()));
    }
    let pos = positions(n, skew);
    let candidates =
        (coeffs.len() as u64).checked_pow(pos.len() as u32).filter(|&c| c <= MAX_CANDIDATES).ok_or_else(|| {
            Error::Precondition(format!("grid of {}^{} candidates is too large", coeffs.len(), pos.len()))
        })?;
    // Validates that the algebra is GD before fanning out.
    check_gdybe(alg, &RMatrix::zero(n))?;
    let mut hits: Vec<(u64, RMatrix)> = (0..candidates)
        .into_par_iter()
        .filter_map(|idx| {
            let r = candidate(n, &pos, coeffs, idx, skew);
            let g = check_gdybe(alg, &r).expect("algebra already validated");
            let ok = if skew { g.skew_solution() } else { g.solution() };
            ok.then_some((idx, r))
        })
        .collect();
    hits.sort_by_key(|(i, _)| *i);
    Ok(SearchResult { candidates, solutions: hits.into_iter().map(|(_, r)| r).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::format::StructureFile;
    use crate::cli::registry::GD_NOVIKOV_TYPE;

    fn unit() -> Vec<Scalar> {
        [-1, 0, 1].into_iter().map(Scalar::from).collect()
    }

    #[test]
    fn novikov_type_grid() {
        let alg = StructureFile::parse(GD_NOVIKOV_TYPE).unwrap().algebra().unwrap();
        let res = search(&alg, &unit(), true).unwrap();
        assert_eq!(res.candidates, 3);
        assert!(res.solutions.iter().any(|r| r.t.is_zero()));
        assert!(!res.solutions.iter().any(|r| r.t.get(0, 1) == &Scalar::one()));
    }

    #[test]
    fn zero_algebra_accepts_everything() {
        let res = search(&AlgebraStructure::zero(3), &unit(), true).unwrap();
        assert_eq!(res.candidates, 27);
        assert_eq!(res.solutions.len(), 27);
    }

    #[test]
    fn dimension_guard() {
        assert!(matches!(search(&AlgebraStructure::zero(5), &unit(), true), Err(Error::Precondition(_))));
    }
}
