use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::scalar::Scalar;
use crate::error::Error;

/// The fixed variable alphabet. Declaration order is the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    D,
    D1,
    D2,
    D3,
    Lambda,
    Mu,
}

pub const NVARS: usize = 6;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::D, Var::D1, Var::D2, Var::D3, Var::Lambda, Var::Mu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::D => "∂",
            Var::D1 => "∂1",
            Var::D2 => "∂2",
            Var::D3 => "∂3",
            Var::Lambda => "λ",
            Var::Mu => "μ",
        }
    }

    /// The ∂-variable attached to tensor slot `slot` (0-based).
    pub fn slot(slot: usize) -> Var {
        [Var::D1, Var::D2, Var::D3][slot]
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var, Error> {
        Ok(match s {
            "∂" | "d" | "D" => Var::D,
            "∂1" | "d1" | "D1" => Var::D1,
            "∂2" | "d2" | "D2" => Var::D2,
            "∂3" | "d3" | "D3" => Var::D3,
            "λ" | "lambda" => Var::Lambda,
            "μ" | "mu" => Var::Mu,
            _ => return Err(Error::Config(format!("unknown variable {s:?}"))),
        })
    }
}

/// Exponent vector over the fixed alphabet, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u8 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Multivariate polynomial with rational coefficients; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        MPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(Scalar::from(c))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Scalar::one(), Monomial::var(v))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term.
    pub fn constant_part(&self) -> Scalar {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree_in(&self, v: Var) -> u8 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &MPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, c);
        }
    }

    pub fn sub_assign_ref(&mut self, o: &MPoly) {
        for (m, c) in &o.terms {
            self.add_term(*m, &-c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_ref(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Replaces every occurrence of `var` by `rep`. The replacement may mention `var` itself;
    /// the substitution is applied once, not recursively.
    pub fn substitute(&self, var: Var, rep: &MPoly) -> MPoly {
        let vi = var.index();
        let maxe = self.degree_in(var) as usize;
        if maxe == 0 {
            return self.clone();
        }
        let mut powers = vec![MPoly::one()];
        for i in 1..=maxe {
            let next = powers[i - 1].mul_ref(rep);
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[vi] as usize;
            let mut rest = *m;
            rest.0[vi] = 0;
            let base = MPoly::term(c.clone(), rest);
            out.add_assign_ref(&base.mul_ref(&powers[e]));
        }
        out
    }

    /// Simultaneous variable renaming: the exponent of `v` moves to `map(v)`.
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut e = [0u8; NVARS];
            for v in Var::ALL {
                e[map(v).index()] += m.0[v.index()];
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Renames a single variable (`from` ↦ `to`), leaving all others fixed.
    pub fn rename_one(&self, from: Var, to: Var) -> MPoly {
        self.rename(|v| if v == from { to } else { v })
    }
}

/// Substitutes `var ↦ rep` in `p`.
pub fn poly_substitute(p: &MPoly, var: Var, rep: &MPoly) -> MPoly {
    p.substitute(var, rep)
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut x = self.clone();
        x.add_assign_ref(o);
        x
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut x = self.clone();
        x.sub_assign_ref(o);
        x
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.mul_ref(o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&Scalar::from(-1))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, o: MPoly) -> MPoly {
        self.add_assign_ref(&o);
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, o: MPoly) -> MPoly {
        self.sub_assign_ref(&o);
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        self.mul_ref(&o)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Scalar> for MPoly {
    fn from(c: Scalar) -> Self {
        MPoly::constant(c)
    }
}

pub(crate) fn superscript(e: u8) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    e.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Writes a monomial as e.g. `∂λ²`; the unit monomial writes nothing.
pub(crate) fn monomial_text(m: &Monomial) -> String {
    let mut s = String::new();
    for v in Var::ALL {
        let e = m.exp(v);
        if e > 0 {
            s.push_str(v.name());
            if e > 1 {
                s.push_str(&superscript(e));
            }
        }
    }
    s
}

/// Coefficient written as a multiplier in front of a nonempty symbol, without sign.
pub(crate) fn magnitude_prefix(c: &Scalar) -> String {
    let a = c.abs();
    if a.is_one() {
        String::new()
    } else if a.is_integer() {
        a.to_string()
    } else {
        format!("({a})")
    }
}

impl MPoly {
    /// Compact text, highest monomial first, e.g. `∂+2λ−1`.
    pub fn compact(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('−');
                }
            } else {
                s.push(if neg { '−' } else { '+' });
            }
            if m.is_one() {
                s.push_str(&c.abs().to_string());
            } else {
                s.push_str(&magnitude_prefix(c));
                s.push_str(&monomial_text(m));
            }
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.compact())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn substitute_square() {
        let lam2 = v(Var::Lambda).pow(2);
        let rep = -&(&v(Var::D1) + &v(Var::D2));
        let got = lam2.substitute(Var::Lambda, &rep);
        let want =
            &(&v(Var::D1).pow(2) + &v(Var::D1).mul_ref(&v(Var::D2)).scale(&Scalar::from(2))) + &v(Var::D2).pow(2);
        assert_eq!(got, want);
    }

    #[test]
    fn substitute_constant_is_fixed() {
        let c = MPoly::constant(Scalar::ratio(3, 2));
        assert_eq!(c.substitute(Var::Mu, &v(Var::D)), c);
    }

    #[test]
    fn substitute_linear() {
        let p = &v(Var::Lambda).mul_ref(&v(Var::D)) + &v(Var::Mu);
        let rep = -&(&v(Var::Lambda) + &v(Var::D));
        let got = p.substitute(Var::Mu, &rep);
        let want = &(&v(Var::Lambda).mul_ref(&v(Var::D)) - &v(Var::Lambda)) - &v(Var::D);
        assert_eq!(got, want);
    }

    #[test]
    fn self_referential_replacement_is_applied_once() {
        let p = v(Var::D).pow(2);
        let got = p.substitute(Var::D, &(&v(Var::D) + &v(Var::Lambda)));
        assert_eq!(got, (&v(Var::D) + &v(Var::Lambda)).pow(2));
    }

    #[test]
    fn swap_by_rename() {
        let p = &v(Var::D1) + &v(Var::D2).pow(2);
        let q = p.rename(|x| match x {
            Var::D1 => Var::D2,
            Var::D2 => Var::D1,
            o => o,
        });
        assert_eq!(q, &v(Var::D2) + &v(Var::D1).pow(2));
    }

    #[test]
    fn compact_text() {
        let p = &v(Var::D) + &v(Var::Lambda).scale(&Scalar::from(2));
        assert_eq!(p.compact(), "∂+2λ");
        let q = &(&v(Var::D) - &v(Var::Lambda)) - &MPoly::int(1);
        assert_eq!(q.compact(), "∂−λ−1");
        assert_eq!(v(Var::Lambda).pow(2).neg().compact(), "−λ²");
    }

    #[test]
    fn unknown_variable_name() {
        assert!(matches!("x".parse::<Var>(), Err(Error::Config(_))));
        assert_eq!("λ".parse::<Var>().unwrap(), Var::Lambda);
    }
}
