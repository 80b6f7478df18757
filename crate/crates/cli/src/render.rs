//! Plain-text tables for terminal output.

use std::fmt::Write;

use quiverfold::cartan::IntMatrix;
use quiverfold::enumerate::{ClassEntry, IiSummary, KacReport, MainReport, SpeciesReport};
use quiverfold::io::{ClassifyReport, FoldReport, RootsReport};
use quiverfold::quiver::QuiverFile;
use quiverfold::roots::{RootKind, Sign, Verdict};

pub fn kind(k: Option<RootKind>) -> &'static str {
    match k {
        Some(RootKind::Real) => "real",
        Some(RootKind::Imaginary) => "imaginary",
        None => "not a root",
    }
}

fn matrix(out: &mut String, name: &str, m: &IntMatrix) {
    let width = m.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    for (k, row) in m.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        let lead = if k == 0 { format!("{name} =") } else { String::new() };
        let _ = writeln!(out, "{lead:<4}[ {} ]", cells.join("  "));
    }
}

pub fn fold(r: &FoldReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "orbits: {}", r.orbits.join("  "));
    let d: Vec<String> = r.d.iter().map(i64::to_string).collect();
    let _ = writeln!(out, "D = diag({})", d.join(", "));
    matrix(&mut out, "B", &r.b);
    matrix(&mut out, "C", &r.c);
    for e in &r.edges {
        let _ = writeln!(
            out,
            "edge {} -> {}: {} arrow(s), valuation ({},{})",
            e.from, e.to, e.arrows, e.pair.0, e.pair.1
        );
    }
    out
}

pub fn quiver_file(f: &QuiverFile, order: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} vertices: {}", f.vertices.len(), f.vertices.join(" "));
    let _ = writeln!(out, "{} arrows", f.arrows.len());
    for a in &f.arrows {
        let _ = writeln!(out, "  {}: {} -> {}", a.id, a.from, a.to);
    }
    let _ = writeln!(out, "automorphism of order {order}");
    out
}

pub fn roots(r: &RootsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} positive roots up to height {} over ({})", r.roots.len(), r.height, r.labels.join(", "));
    for e in &r.roots.roots {
        let _ = writeln!(out, "  {:?}  {}", e.vector, kind(Some(e.kind)));
    }
    if let Some(n) = &r.null_root {
        let _ = writeln!(out, "null root {n:?}");
    }
    out
}

pub fn classify(r: &ClassifyReport) -> String {
    let c = &r.classification;
    let sign = match c.sign {
        Sign::Positive => "positive",
        Sign::Negative => "negative",
    };
    match &c.verdict {
        Verdict::Real { witness, simple } => format!(
            "{:?}: real ({sign}); reflections at {:?} reach e_{}\n",
            r.vector, witness, r.labels[*simple]
        ),
        Verdict::Imaginary { witness, landing } => format!(
            "{:?}: imaginary ({sign}); reflections at {:?} reach {:?} in the fundamental region\n",
            r.vector, witness, landing
        ),
        Verdict::NonRoot { reason } => format!("{:?}: not a root ({reason})\n", r.vector),
    }
}

pub fn indecs(dims: &[usize], field: &str, total: usize, classes: &[ClassEntry]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dimension {dims:?} over F_{field}: {total} classes, {} indecomposable",
        classes.len()
    );
    for (k, c) in classes.iter().enumerate() {
        let maps: Vec<String> = c.maps.iter().map(|(id, m)| format!("{id}={m:?}")).collect();
        let _ = writeln!(out, "  #{k}  {}  (orbit size {})", maps.join("  "), c.orbit_size);
    }
    out
}

pub fn ii(dims: &[usize], folded: &[i64], root: Option<RootKind>, classes: &[IiSummary]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dimension {dims:?} folds to {folded:?} ({}): {} ii-indecomposable class(es)",
        kind(root),
        classes.len()
    );
    for c in classes {
        let _ = writeln!(out, "  {} summand(s): {:?}", c.period, c.summands);
    }
    out
}

fn verdict(out: &mut String, passed: bool, failures: &[String]) {
    let _ = writeln!(out, "{}", if passed { "PASS" } else { "FAIL" });
    for f in failures {
        let _ = writeln!(out, "  {f}");
    }
}

pub fn kac(r: &KacReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "indecomposables over F_{} up to height {}", r.field, r.height);
    for e in r.entries.iter().filter(|e| e.root.is_some() || e.indecomposables > 0) {
        let _ = writeln!(out, "  {:?}  {:<10}  {}", e.dims, kind(e.root), e.indecomposables);
    }
    verdict(&mut out, r.passed, &r.failures);
    out
}

pub fn main_report(r: &MainReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ii-indecomposables over F_{} up to folded height {}", r.field, r.height);
    if let Some(w) = &r.warning {
        let _ = writeln!(out, "warning: {w}");
    }
    for e in r.entries.iter().filter(|e| e.root.is_some() || !e.classes.is_empty()) {
        let periods: Vec<usize> = e.classes.iter().map(|c| c.period).collect();
        let _ = writeln!(
            out,
            "  {:?}  {:<10}  length {:<4}  classes {}  summands {:?}",
            e.folded,
            kind(e.root),
            e.root_length,
            e.classes.len(),
            periods
        );
    }
    if !r.unique_imaginary.is_empty() {
        let _ = writeln!(out, "imaginary roots with a single class: {:?}", r.unique_imaginary);
    }
    verdict(&mut out, r.passed, &r.failures);
    out
}

pub fn species(r: &SpeciesReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "species indecomposables over F_{} up to height {}", r.q, r.height);
    for e in r.entries.iter().filter(|e| e.root.is_some() || e.count > 0) {
        let _ = writeln!(out, "  {:?}  {:<10}  {}", e.alpha, kind(e.root), e.count);
    }
    verdict(&mut out, r.passed, &r.failures);
    out
}
