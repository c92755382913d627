//! Plain-text reports for the command line.

use crate::bialgebras::BialgebraData;
use crate::conformal::{render_cotensor, render_poly_vector};
use crate::exactalg::{MPoly, Scalar, Tensor2};
use crate::operators::PreGdStructure;
use crate::structures::{AxiomReport, Table};
use crate::yangbaxter::RMatrix;

fn product_lines(out: &mut String, t: &Table, labels: &[String], fmt: impl Fn(&str, &str) -> String) {
    let n = labels.len();
    for i in 0..n {
        for j in 0..n {
            let v = t.row(i, j);
            if !v.is_zero() {
                out.push_str(&format!(
                    "{} = {}\n",
                    fmt(&labels[i], &labels[j]),
                    render_poly_vector(&v.to_poly(), labels)
                ));
            }
        }
    }
}

fn coproduct_lines(out: &mut String, t: &Table, labels: &[String], name: &str) {
    for (k, label) in labels.iter().enumerate() {
        let s = t.slice(k);
        if !s.is_zero() {
            out.push_str(&format!("{name}({label}) = {}\n", render_constant_tensor(&s, labels)));
        }
    }
}

pub fn render_constant_tensor(t: &Tensor2<Scalar>, labels: &[String]) -> String {
    render_cotensor(&t.map(|c| MPoly::constant(c.clone())), labels)
}

/// Nonzero products, brackets, coproducts and cobrackets on basis vectors.
pub fn render_bialgebra(d: &BialgebraData) -> String {
    let labels = &d.alg.basis_labels;
    let mut s = String::new();
    product_lines(&mut s, &d.alg.circ, labels, |a, b| format!("{a}∘{b}"));
    product_lines(&mut s, &d.alg.bracket, labels, |a, b| format!("[{a}, {b}]"));
    coproduct_lines(&mut s, &d.co.coproduct, labels, "Δ");
    coproduct_lines(&mut s, &d.co.cobracket, labels, "δ0");
    s
}

pub fn render_pre_gd(p: &PreGdStructure, labels: &[String]) -> String {
    let mut s = String::new();
    product_lines(&mut s, &p.lhd, labels, |a, b| format!("{a}⊲{b}"));
    product_lines(&mut s, &p.rhd, labels, |a, b| format!("{a}⊳{b}"));
    product_lines(&mut s, &p.diamond, labels, |a, b| format!("{a}⋄{b}"));
    s
}

pub fn render_r(r: &RMatrix, labels: &[String]) -> String {
    render_constant_tensor(&r.t, labels)
}

/// `verdict: pass|fail` followed by one line per violation with its 1-based witness.
pub fn render_report(report: &AxiomReport) -> String {
    let mut s = format!("verdict: {}\n", if report.passed { "pass" } else { "fail" });
    for v in &report.violations {
        let w: Vec<String> = v.witness.iter().map(|i| i.to_string()).collect();
        s.push_str(&format!("violation: {} at ({})\n", v.axiom, w.join(",")));
    }
    s
}
