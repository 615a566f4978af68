use std::fmt::Write;

use crate::field::Field;
use crate::hwmodule::HWModule;
use crate::linalg::Matrix;

use super::rep::SchurRep;

fn word_text(w: &[usize]) -> String {
    if w.is_empty() {
        "v+".into()
    } else {
        let parts: Vec<String> = w.iter().map(|j| format!("F{}", j + 1)).collect();
        format!("{} v+", parts.join(" "))
    }
}

fn matrix_block<F: Field>(out: &mut String, name: &str, m: &Matrix<F>) {
    let nnz = m.triplets().count();
    let _ = writeln!(out, "matrix {name} {}x{} nnz={nnz}", m.rows(), m.cols());
    for (r, c, x) in m.triplets() {
        let _ = writeln!(out, "[{r}, {c}, {x}]");
    }
}

/// Header, basis table and sparse matrices of a simple module.
pub fn module_dump(m: &HWModule) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# module");
    let _ = writeln!(out, "cartan {}", m.cartan());
    let _ = writeln!(out, "highest {}", m.highest_weight());
    let _ = writeln!(out, "dim {}", m.dim());
    let _ = writeln!(out, "basis");
    for (k, b) in m.basis().iter().enumerate() {
        let _ = writeln!(out, "{k} {} {} {}", b.weight, b.index, word_text(&b.word));
    }
    for i in 0..m.cartan().rank() {
        matrix_block(&mut out, &format!("E{}", i + 1), m.e(i));
        matrix_block(&mut out, &format!("F{}", i + 1), m.f(i));
    }
    matrix_block(&mut out, "gram", m.gram());
    out
}

/// Header, idempotent ranks and sparse generator matrices of an assembled
/// representation.
pub fn rep_dump(r: &SchurRep) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# rep");
    let _ = writeln!(out, "cartan {}", r.cartan());
    let _ = writeln!(out, "pi {}", r.pi());
    let _ = writeln!(out, "wpi {}", r.wpi());
    let _ = writeln!(out, "dim {}", r.dim());
    let _ = writeln!(out, "predicted_algebra_dim {}", r.predicted_dimension());
    for m in r.summands() {
        let _ = writeln!(out, "summand {} dim {}", m.highest_weight(), m.dim());
    }
    let _ = writeln!(out, "basis");
    for (k, (s, b)) in r.labels().iter().enumerate() {
        let hw = r.summands()[*s].highest_weight();
        let _ = writeln!(
            out,
            "{k} {hw} {} {} {}",
            b.weight,
            b.index,
            word_text(&b.word)
        );
    }
    let _ = writeln!(out, "idempotents");
    for (mu, x) in &r.matrices().idem {
        let _ = writeln!(out, "{mu} rank {}", x.triplets().count());
    }
    for i in 0..r.cartan().rank() {
        matrix_block(&mut out, &format!("E{}", i + 1), r.e(i));
        matrix_block(&mut out, &format!("F{}", i + 1), r.f(i));
    }
    if let Ok((k, _)) = super::rep::k_elements(r) {
        for (i, x) in k.iter().enumerate() {
            matrix_block(&mut out, &format!("K{}", i + 1), x);
        }
    }
    for (mu, x) in &r.matrices().idem {
        matrix_block(&mut out, &format!("i{mu}"), x);
    }
    matrix_block(&mut out, "gram", r.gram());
    out
}
