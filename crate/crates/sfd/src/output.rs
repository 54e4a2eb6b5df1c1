//! Deterministic text renderings: markdown, CSV and JSON.

use std::fmt::Write as _;

use serde_json::json;
use sfd_core::exact::{format_complex, IntPolynomial, TruncatedSeries};
use sfd_core::molien::FakeDegreeTable;
use sfd_core::spinchar::SpinCharacterTable;

use crate::data::ClassDataset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Md,
    Csv,
    Json,
}

fn csv_text(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

/// `1 + t + t^5 + t^6`; the zero polynomial prints as `0`.
pub fn format_polynomial(p: &IntPolynomial) -> String {
    let mut out = String::new();
    for (k, &c) in p.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let a = c.unsigned_abs();
        match (k, a) {
            (0, _) => write!(out, "{a}").unwrap(),
            (_, 1) => {}
            _ => write!(out, "{a}").unwrap(),
        }
        match k {
            0 => {}
            1 => out.push('t'),
            _ => write!(out, "t^{k}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn top_degree(fake: &FakeDegreeTable, half: bool) -> usize {
    if half {
        fake.n / 2
    } else {
        fake.n
    }
}

pub fn fake_table(fake: &FakeDegreeTable, half: bool, format: OutputFormat) -> String {
    let top = top_degree(fake, half);
    let labels: Vec<&str> = fake.rows.iter().map(|r| r.label.as_str()).collect();
    match format {
        OutputFormat::Md => {
            let mut out = format!("| k | {} |\n|---|{}\n", labels.join(" | "), "---|".repeat(labels.len()));
            for k in 0..=top {
                let cells: Vec<String> =
                    fake.rows.iter().map(|r| if r.p.coeff(k) == 0 { String::new() } else { r.p.coeff(k).to_string() }).collect();
                writeln!(out, "| {k} | {} |", cells.join(" | ")).unwrap();
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![labels.iter().map(|l| l.to_string()).collect::<Vec<_>>()];
            rows.extend((0..=top).map(|k| fake.row_at(k).iter().map(i64::to_string).collect()));
            csv_text(&rows)
        }
        OutputFormat::Json => {
            let degrees: Vec<u32> = sfd_core::RootSystem::new(fake.cartan).map(|rs| rs.degrees().to_vec()).unwrap_or_default();
            let characters: Vec<_> = fake
                .rows
                .iter()
                .map(|r| {
                    let coeffs: Vec<i64> = (0..=top).map(|k| r.p.coeff(k)).collect();
                    json!({ "label": r.label, "type": r.kind.to_string(), "degree": r.graded_degree, "coefficients": coeffs })
                })
                .collect();
            let doc = json!({
                "type": fake.cartan.to_string(),
                "N": fake.n,
                "degrees": degrees,
                "normalization": fake.normalization.to_string(),
                "characters": characters,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    }
}

pub fn molien_series(fake: &FakeDegreeTable, format: OutputFormat) -> String {
    let series: Vec<(&str, &TruncatedSeries<i64>)> = fake.rows.iter().map(|r| (r.label.as_str(), &r.h)).collect();
    match format {
        OutputFormat::Md => {
            let labels: Vec<&str> = series.iter().map(|s| s.0).collect();
            let mut out = format!("| k | {} |\n|---|{}\n", labels.join(" | "), "---|".repeat(labels.len()));
            for k in 0..=fake.n {
                let cells: Vec<String> = series.iter().map(|s| s.1.coeff(k).to_string()).collect();
                writeln!(out, "| {k} | {} |", cells.join(" | ")).unwrap();
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![series.iter().map(|s| s.0.to_string()).collect::<Vec<_>>()];
            rows.extend((0..=fake.n).map(|k| series.iter().map(|s| s.1.coeff(k).to_string()).collect()));
            csv_text(&rows)
        }
        OutputFormat::Json => {
            let rows: Vec<_> =
                series.iter().map(|(label, h)| json!({ "label": label, "coefficients": h.coeffs()[..=fake.n] })).collect();
            let doc = json!({ "type": fake.cartan.to_string(), "N": fake.n, "series": rows });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    }
}

pub fn character_table(t: &SpinCharacterTable, format: OutputFormat) -> String {
    let headers: Vec<String> = t.classes.iter().map(|c| c.name.clone()).collect();
    match format {
        OutputFormat::Md => {
            let mut out = format!("| | {} |\n|---|{}\n", headers.join(" | "), "---|".repeat(headers.len()));
            let parity: Vec<String> = t.classes.iter().map(|c| c.parity.to_string()).collect();
            let sizes: Vec<String> = t.classes.iter().map(|c| c.size.to_string()).collect();
            writeln!(out, "| parity | {} |", parity.join(" | ")).unwrap();
            writeln!(out, "| size | {} |", sizes.join(" | ")).unwrap();
            for ch in &t.characters {
                let values: Vec<String> = ch.values.iter().map(format_complex).collect();
                writeln!(out, "| {} ({}) | {} |", ch.label, ch.kind, values.join(" | ")).unwrap();
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![["label".to_string(), "type".to_string()].into_iter().chain(headers.iter().cloned()).collect()];
            for ch in &t.characters {
                rows.push([ch.label.clone(), ch.kind.to_string()].into_iter().chain(ch.values.iter().map(format_complex)).collect());
            }
            csv_text(&rows)
        }
        OutputFormat::Json => {
            let classes: Vec<_> = t
                .classes
                .iter()
                .map(|c| json!({ "name": c.name, "parity": c.parity.to_string(), "size": c.size, "word": c.word }))
                .collect();
            let characters: Vec<_> = t
                .characters
                .iter()
                .map(|ch| {
                    let values: Vec<String> = ch.values.iter().map(format_complex).collect();
                    json!({ "label": ch.label, "type": ch.kind.to_string(), "values": values })
                })
                .collect();
            let doc = json!({ "type": t.cartan.to_string(), "classes": classes, "characters": characters });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    }
}

pub fn classes(ds: &ClassDataset, format: OutputFormat) -> String {
    let word = |w: &[u8]| w.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
    match format {
        OutputFormat::Md => {
            let mut out = String::from("| name | size | parity | split | word |\n|---|---|---|---|---|\n");
            for e in &ds.entries {
                let split = if e.split { "yes" } else { "no" };
                writeln!(out, "| {} | {} | {} | {split} | {} |", e.name, e.size, e.parity, word(&e.word)).unwrap();
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = vec![["name", "size", "parity", "split", "word"].map(String::from).to_vec()];
            for e in &ds.entries {
                let split = if e.split { "yes" } else { "no" };
                rows.push(vec![e.name.clone(), e.size.to_string(), e.parity.to_string(), split.to_string(), word(&e.word)]);
            }
            csv_text(&rows)
        }
        OutputFormat::Json => {
            let entries: Vec<_> = ds
                .entries
                .iter()
                .map(|e| {
                    json!({ "name": e.name, "size": e.size, "parity": e.parity.to_string(), "split": e.split, "word": e.word, "carter": e.carter })
                })
                .collect();
            let doc = json!({ "type": ds.weyl_type.to_string(), "order": ds.order, "classes": entries });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_text() {
        assert_eq!(format_polynomial(&IntPolynomial::new(vec![1, 1, 0, 0, 0, 1, 1])), "1 + t + t^5 + t^6");
        assert_eq!(format_polynomial(&IntPolynomial::new(vec![2, 0, 3])), "2 + 3t^2");
        assert_eq!(format_polynomial(&IntPolynomial::new(vec![0, -1])), "-t");
        assert_eq!(format_polynomial(&IntPolynomial::zero()), "0");
    }
}
