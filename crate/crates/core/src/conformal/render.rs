//! Canonical text for λ-brackets and cobrackets. Polynomials print highest monomial first
//! with their content factored out; antisymmetric cobrackets print as pairs X − τX.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactalg::{magnitude_prefix, monomial_text, superscript, MPoly, Monomial, Scalar, Tensor2, Var};

use super::algebra::{ConformalStructure, PolyVector};

/// Signed content of a nonzero polynomial; the quotient has coprime integer coefficients
/// and a positive leading coefficient.
fn content(p: &MPoly) -> Scalar {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        g = g.gcd(c.numer());
        l = l.lcm(c.denom());
    }
    let c = Scalar::from_big(g, l).expect("nonzero denominator");
    match p.terms().next_back() {
        Some((_, lead)) if lead.is_negative() => -c,
        _ => c,
    }
}

struct Joiner(String);

impl Joiner {
    fn push(&mut self, negative: bool, body: &str) {
        match (self.0.is_empty(), negative) {
            (true, true) => self.0.push('−'),
            (true, false) => {}
            (false, true) => self.0.push_str(" − "),
            (false, false) => self.0.push_str(" + "),
        }
        self.0.push_str(body);
    }

    fn finish(self) -> String {
        if self.0.is_empty() {
            "0".into()
        } else {
            self.0
        }
    }
}

/// One basis term `p e` of a λ-bracket value, without its sign.
fn coefficient_term(p: &MPoly, label: &str) -> (bool, String) {
    if p.num_terms() == 1 {
        let (m, c) = p.terms().next().expect("one term");
        let body = if m.is_one() {
            format!("{}{label}", magnitude_prefix(c))
        } else {
            format!("{}{} {label}", magnitude_prefix(c), monomial_text(m))
        };
        return (c.is_negative(), body);
    }
    let c = content(p);
    let q = p.scale(&c.inv().expect("nonzero content"));
    (c.is_negative(), format!("{}({}) {label}", magnitude_prefix(&c), q.compact()))
}

pub fn render_poly_vector(v: &PolyVector, labels: &[String]) -> String {
    let mut out = Joiner(String::new());
    for (i, p) in v.entries().iter().enumerate() {
        if !p.is_zero() {
            let (neg, body) = coefficient_term(p, &labels[i]);
            out.push(neg, &body);
        }
    }
    out.finish()
}

/// One line per ordered generator pair, `[ei _λ ej] = …`.
pub fn render_bracket_table(cs: &ConformalStructure) -> String {
    render_product_table(&cs.bracket, &cs.basis_labels, true)
}

/// Same layout for a λ-product table; `bracket` selects `[a _λ b]` over `a _λ b`.
pub fn render_product_table(table: &[PolyVector], labels: &[String], bracket: bool) -> String {
    let n = labels.len();
    let mut s = String::new();
    for i in 0..n {
        for j in 0..n {
            let v = render_poly_vector(&table[i * n + j], labels);
            if bracket {
                s.push_str(&format!("[{} _λ {}] = {v}\n", labels[i], labels[j]));
            } else {
                s.push_str(&format!("{} _λ {} = {v}\n", labels[i], labels[j]));
            }
        }
    }
    s
}

fn factor(e: u8, label: &str) -> String {
    match e {
        0 => label.to_string(),
        1 => format!("∂{label}"),
        _ => format!("∂{}{label}", superscript(e)),
    }
}

/// Text of a tensor in k[∂1, ∂2] ⊗ A ⊗ A, with ∂1 written on the left factor and ∂2 on the right.
pub fn render_cotensor(t: &Tensor2<MPoly>, labels: &[String]) -> String {
    let mut terms: BTreeMap<(usize, usize, Monomial), Scalar> = BTreeMap::new();
    for (i, j, c) in t.nonzero() {
        for (m, a) in c.terms() {
            terms.insert((i, j, *m), a.clone());
        }
    }
    let simple =
        terms.keys().all(|(_, _, m)| Var::ALL.iter().all(|&v| matches!(v, Var::D1 | Var::D2) || m.exp(v) == 0));
    if simple && t.add(&t.flip(true)).is_zero() {
        render_pairs(terms, labels)
    } else {
        render_terms(&terms, labels)
    }
}

fn swap(m: &Monomial) -> Monomial {
    let mut e = m.0;
    e.swap(Var::D1.index(), Var::D2.index());
    Monomial(e)
}

fn render_pairs(mut terms: BTreeMap<(usize, usize, Monomial), Scalar>, labels: &[String]) -> String {
    let mut groups = Vec::new();
    while let Some(((i, j, m), c)) = terms.pop_first() {
        let partner = (j, i, swap(&m));
        terms.remove(&partner);
        let (a, b) = (m.exp(Var::D1), m.exp(Var::D2));
        let keep = a > b || (a == b && !c.is_negative());
        let (i, j, a, b, c) = if keep { (i, j, a, b, c) } else { (j, i, b, a, -c) };
        groups.push(((a + b, i, j, a), b, c));
    }
    groups.sort_by_key(|g| g.0);
    let mut out = Joiner(String::new());
    for ((_, i, j, a), b, c) in groups {
        let body = format!(
            "{}⊗{} − {}⊗{}",
            factor(a, &labels[i]),
            factor(b, &labels[j]),
            factor(b, &labels[j]),
            factor(a, &labels[i])
        );
        let text = match (c.abs().is_one(), c.is_negative()) {
            (true, false) => body,
            (true, true) => format!("({body})"),
            _ => format!("{}({body})", magnitude_prefix(&c)),
        };
        out.push(c.is_negative(), &text);
    }
    out.finish()
}

fn render_terms(terms: &BTreeMap<(usize, usize, Monomial), Scalar>, labels: &[String]) -> String {
    let mut out = Joiner(String::new());
    let mut keys: Vec<_> = terms.keys().collect();
    keys.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)).then(y.2.cmp(&x.2)));
    for k in keys {
        let (i, j, m) = k;
        let c = &terms[k];
        let mut rest = m.0;
        rest[Var::D1.index()] = 0;
        rest[Var::D2.index()] = 0;
        let extra = monomial_text(&Monomial(rest));
        let body = format!(
            "{}{}{}⊗{}",
            magnitude_prefix(c),
            if extra.is_empty() { String::new() } else { format!("{extra} ") },
            factor(m.exp(Var::D1), &labels[*i]),
            factor(m.exp(Var::D2), &labels[*j])
        );
        out.push(c.is_negative(), &body);
    }
    out.finish()
}

/// One line per generator, `δ(ek) = …`; empty when the structure has no cobracket.
pub fn render_cobracket_table(cs: &ConformalStructure) -> String {
    let mut s = String::new();
    if let Some(table) = &cs.cobracket {
        for (k, t) in table.iter().enumerate() {
            s.push_str(&format!("δ({}) = {}\n", cs.basis_labels[k], render_cotensor(t, &cs.basis_labels)));
        }
    }
    s
}

/// Bracket lines followed by cobracket lines.
pub fn render_structure(cs: &ConformalStructure) -> String {
    let mut s = render_bracket_table(cs);
    s.push_str(&render_cobracket_table(cs));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::basis_labels;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn vector_terms() {
        let labels = basis_labels(2);
        let (l, d) = (v(Var::Lambda), v(Var::D));
        let two = MPoly::int(2);
        let x = PolyVector::from_vec(vec![&two * &(&d + &(&two * &l)), MPoly::zero()]);
        assert_eq!(render_poly_vector(&x, &labels), "2(∂+2λ) e1");
        let x = PolyVector::from_vec(vec![MPoly::zero(), l.clone()]);
        assert_eq!(render_poly_vector(&x, &labels), "λ e2");
        let x = PolyVector::from_vec(vec![-MPoly::one(), MPoly::int(2)]);
        assert_eq!(render_poly_vector(&x, &labels), "−e1 + 2e2");
        let x = PolyVector::from_vec(vec![-(&d + &l), MPoly::zero()]);
        assert_eq!(render_poly_vector(&x, &labels), "−(∂+λ) e1");
        assert_eq!(render_poly_vector(&PolyVector::zeros(2), &labels), "0");
    }

    #[test]
    fn antisymmetric_pairs() {
        let labels = basis_labels(2);
        let mut t = Tensor2::square(2);
        t.set(0, 1, v(Var::D1));
        t.set(1, 0, -v(Var::D2));
        assert_eq!(render_cotensor(&t, &labels), "∂e1⊗e2 − e2⊗∂e1");
        let mut t = Tensor2::square(2);
        t.set(0, 1, MPoly::int(-2));
        t.set(1, 0, MPoly::int(2));
        assert_eq!(render_cotensor(&t, &labels), "2(e2⊗e1 − e1⊗e2)");
        assert_eq!(render_cotensor(&Tensor2::square(2), &labels), "0");
    }

    #[test]
    fn plain_terms() {
        let labels = basis_labels(2);
        let mut t = Tensor2::square(2);
        t.set(0, 1, MPoly::one());
        assert_eq!(render_cotensor(&t, &labels), "e1⊗e2");
    }
}
