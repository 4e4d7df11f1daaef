use std::path::Path;

use serde::Serialize;
use slgt_core::json::{FamilyDoc, MatrixDoc, PatternDoc, RaiseDoc, WeightDoc};
use slgt_core::matrix_market::write_matrix_market;
use slgt_core::patterns::parse_rows_top_down;
use slgt_core::{
    dimension, monomial_family, operator_matrix_in, raising_exponents_with, simplicity_certificate,
    validate, verify_raise_with, verify_sln_relations, weight_decomposition, GeneratorSpec,
    GtPattern, OperatorMatrix, PatternBasis, Schedule,
};

use crate::table::{render, tuple};
use crate::{Failure, Format, Output, PartitionArg};

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Verification(format!("cannot serialize output: {e}")))
}

/// Bottom-up `p1,p2;q` style label of the rows under the top row.
fn lower_label(n: usize) -> &'static str {
    if n == 3 {
        "p1,p2;q"
    } else {
        "lower rows"
    }
}

pub fn dim(p: &PartitionArg, fmt: Format) -> Result<Output, Failure> {
    let d = dimension(&p.partition);
    let text = match fmt {
        Format::Json => json(&serde_json::json!({ "partition": p.partition.parts(), "dim": d }))?,
        _ => format!("{d}\n"),
    };
    Ok(Output::ok(text))
}

pub fn patterns(p: &PartitionArg, fmt: Format) -> Result<Output, Failure> {
    let basis = PatternBasis::new(&p.partition);
    let docs: Vec<PatternDoc> = basis.patterns().iter().enumerate().map(|(i, x)| PatternDoc::new(i, x)).collect();
    if fmt == Format::Json {
        return Ok(Output::ok(json(&docs)?));
    }
    let n = p.partition.n();
    let rows: Vec<Vec<String>> = docs
        .iter()
        .map(|d| {
            vec![
                d.index.to_string(),
                d.pattern.to_string(),
                d.pattern.lower_rows_string(),
                tuple(&d.kappa),
                d.epsilon_string.clone(),
            ]
        })
        .collect();
    Ok(Output::ok(render(&["#", "pattern", lower_label(n), "kappa", "weight"], &rows)))
}

fn spec_for(p: &PartitionArg, generator: &str, index: usize) -> Result<GeneratorSpec, Failure> {
    let spec = GeneratorSpec::from_family(generator, index)?;
    spec.check(p.partition.n())?;
    Ok(spec)
}

fn matrix_table(spec: GeneratorSpec, basis: &PatternBasis, m: &OperatorMatrix) -> String {
    let mut out = format!("{spec} on {} (dim {}), basis order:\n", basis.partition(), m.dim());
    for (i, x) in basis.patterns().iter().enumerate() {
        out.push_str(&format!("  [{i}] {x}\n"));
    }
    out.push('\n');
    let labels: Vec<String> = (0..m.dim()).map(|c| format!("[{c}]")).collect();
    let mut headers = vec![""];
    headers.extend(labels.iter().map(String::as_str));
    let rows: Vec<Vec<String>> = m
        .rows()
        .enumerate()
        .map(|(r, row)| std::iter::once(format!("[{r}]")).chain(row.iter().map(|v| v.to_string())).collect())
        .collect();
    out.push_str(&render(&headers, &rows));
    out
}

pub fn matrix(p: &PartitionArg, generator: &str, index: usize, fmt: Format) -> Result<Output, Failure> {
    let spec = spec_for(p, generator, index)?;
    let basis = PatternBasis::new(&p.partition);
    let m = operator_matrix_in(spec, &basis)?;
    let text = match fmt {
        Format::Json => json(&MatrixDoc::new(&p.partition, spec, &m))?,
        Format::Matrixmarket => write_matrix_market(&m, &p.partition, spec),
        Format::Table => matrix_table(spec, &basis, &m),
    };
    Ok(Output::ok(text))
}

pub fn verify(p: &PartitionArg, fmt: Format) -> Result<Output, Failure> {
    let rel = verify_sln_relations(&p.partition)?;
    let simp = simplicity_certificate(&p.partition)?;
    let ok = rel.all_passed() && simp.certified();
    if fmt == Format::Json {
        let doc = serde_json::json!({ "passed": ok, "relations": rel, "simplicity": simp });
        return Ok(Output { text: json(&doc)?, ok });
    }
    let mut text = format!(
        "relations: {} ({}/{}), simplicity: {} ({}/{}, rank {})\n",
        if rel.all_passed() { "PASS" } else { "FAIL" },
        rel.passed_count(),
        rel.checks.len(),
        if simp.certified() { "CERTIFIED" } else { "NOT CERTIFIED" },
        simp.raised,
        simp.dim,
        simp.rank
    );
    for c in rel.failures() {
        text.push_str(&format!("  relation {} failed", c.name));
        if let Some(m) = &c.mismatch {
            text.push_str(&format!(" at ({}, {}): expected {}, got {}", m.row, m.col, m.expected, m.actual));
        }
        text.push('\n');
    }
    for f in &simp.failures {
        text.push_str(&format!("  pattern {} does not raise: {}\n", f.pattern, f.reason));
    }
    if simp.rank < simp.dim {
        text.push_str(&format!("  canonical monomials span rank {} < {}\n", simp.rank, simp.dim));
    }
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct WeightSpaceDoc {
    #[serde(flatten)]
    weight: WeightDoc,
    multiplicity: usize,
    patterns: Vec<GtPattern>,
}

pub fn weights(p: &PartitionArg, fmt: Format) -> Result<Output, Failure> {
    let spaces: Vec<WeightSpaceDoc> = weight_decomposition(&p.partition)
        .into_iter()
        .rev()
        .map(|(w, pats)| WeightSpaceDoc {
            weight: WeightDoc::from(&w),
            multiplicity: pats.len(),
            patterns: pats,
        })
        .collect();
    if fmt == Format::Json {
        return Ok(Output::ok(json(&spaces)?));
    }
    let rows: Vec<Vec<String>> = spaces
        .iter()
        .map(|s| {
            let pats: Vec<String> = s.patterns.iter().map(ToString::to_string).collect();
            vec![
                tuple(&s.weight.kappa),
                tuple(&s.weight.fundamental),
                s.weight.epsilon_string.clone(),
                s.multiplicity.to_string(),
                pats.join(" "),
            ]
        })
        .collect();
    Ok(Output::ok(render(&["kappa", "fundamental", "weight", "mult", "patterns"], &rows)))
}

/// Parses a top-down pattern typed against the un-normalized partition.
fn parse_pattern(p: &PartitionArg, text: &str) -> Result<GtPattern, Failure> {
    let mut rows = parse_rows_top_down(text)?;
    for row in &mut rows {
        for e in row.iter_mut() {
            *e -= p.shift;
        }
    }
    rows.reverse();
    Ok(validate(&rows, &p.partition)?)
}

pub fn raise(p: &PartitionArg, pattern: &str, schedule: &Schedule, fmt: Format) -> Result<Output, Failure> {
    let xi = parse_pattern(p, pattern)?;
    let exps = raising_exponents_with(&xi, schedule)?;
    let lambda = verify_raise_with(&xi, schedule)?;
    let doc = RaiseDoc::new(&xi, &exps, lambda);
    if fmt == Format::Json {
        return Ok(Output::ok(json(&doc)?));
    }
    let empty = if exps.is_zero() { " (empty word)" } else { "" };
    Ok(Output::ok(format!(
        "pattern: {}\nword: {}{empty}\nexponents (written order): {}\nλ_β: {}\n",
        doc.pattern,
        doc.word,
        tuple(&doc.exponents),
        doc.lambda
    )))
}

pub fn monomials(p: &PartitionArg, schedule: &Schedule, strict: bool, fmt: Format) -> Result<Output, Failure> {
    let family = monomial_family(&p.partition, schedule)?;
    let doc = FamilyDoc::new(&family)?;
    let ok = doc.is_basis || !strict;
    if fmt == Format::Json {
        return Ok(Output { text: json(&doc)?, ok });
    }
    let rows: Vec<Vec<String>> = doc
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            vec![
                i.to_string(),
                e.pattern.to_string(),
                e.word.clone(),
                e.duplicate_of.map(|j| format!("duplicate of #{j}")).unwrap_or_default(),
            ]
        })
        .collect();
    let mut text = format!("monomials of {}, schedule {}\n", p.partition, schedule);
    text.push_str(&render(&["#", "pattern", "word", ""], &rows));
    for (first, repeat) in family.duplicate_pairs() {
        text.push_str(&format!(
            "duplicate: #{repeat} ({}) repeats #{first} ({}): {}\n",
            doc.entries[repeat].pattern, doc.entries[first].pattern, doc.entries[first].word
        ));
    }
    let verdict = if doc.is_basis {
        "BASIS".to_string()
    } else if family.has_duplicates() {
        format!("NOT A BASIS (discrepancy: only {} distinct monomials)", doc.distinct_words())
    } else {
        "NOT A BASIS (discrepancy: monomials are linearly dependent)".to_string()
    };
    text.push_str(&format!(
        "{} words, {} distinct, rank {} of {}: {verdict}\n",
        doc.entries.len(),
        doc.distinct_words(),
        doc.rank,
        family.len()
    ));
    Ok(Output { text, ok })
}

/// The simple generators, in the order E, F, H, cartan.
fn simple_generators(n: usize) -> Vec<GeneratorSpec> {
    let mut out: Vec<GeneratorSpec> = (1..n).map(GeneratorSpec::Raise).collect();
    out.extend((1..n).map(GeneratorSpec::Lower));
    out.extend((1..=n).map(GeneratorSpec::Diag));
    out.extend((1..n).map(GeneratorSpec::Cartan));
    out
}

#[derive(Serialize)]
struct ExportDoc {
    partition: Vec<i64>,
    dim: usize,
    basis: Vec<GtPattern>,
    generators: Vec<MatrixDoc>,
}

pub fn export(p: &PartitionArg, fmt: Format, out: Option<&Path>) -> Result<Output, Failure> {
    let basis = PatternBasis::new(&p.partition);
    let specs = simple_generators(p.partition.n());
    let mut mats = Vec::with_capacity(specs.len());
    for &s in &specs {
        mats.push((s, operator_matrix_in(s, &basis)?));
    }
    match fmt {
        Format::Json => {
            let doc = ExportDoc {
                partition: p.partition.parts().to_vec(),
                dim: basis.dim(),
                basis: basis.patterns().to_vec(),
                generators: mats.iter().map(|(s, m)| MatrixDoc::new(&p.partition, *s, m)).collect(),
            };
            Ok(Output::ok(json(&doc)?))
        }
        Format::Matrixmarket => {
            let dir = out.ok_or_else(|| {
                Failure::Usage("export --format matrixmarket needs --output DIR".into())
            })?;
            let io = |e: std::io::Error| Failure::Usage(format!("cannot write to {}: {e}", dir.display()));
            std::fs::create_dir_all(dir).map_err(io)?;
            let listing: String = basis.patterns().iter().map(|x| format!("{x}\n")).collect();
            std::fs::write(dir.join("basis.txt"), listing).map_err(io)?;
            for (s, m) in &mats {
                std::fs::write(dir.join(format!("{s}.mtx")), write_matrix_market(m, &p.partition, *s)).map_err(io)?;
            }
            Ok(Output::ok(format!("wrote basis.txt and {} .mtx files to {}\n", mats.len(), dir.display())))
        }
        Format::Table => Err(Failure::Usage("export writes json or matrixmarket, not table".into())),
    }
}
