//! Published half-tables of spin fake degrees, embedded at build time.
//!
//! Each table lists coefficients 0..=N/2 of every column; the rest follows
//! from palindromicity. Blank cells are zero.

use sfd_core::molien::FakeDegreeTable;
use sfd_core::spinchar::CharKind;
use sfd_core::CartanType;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub cartan: CartanType,
    pub labels: Vec<String>,
    /// `rows[k][j]` is the coefficient of t^k in column j.
    pub rows: Vec<Vec<i64>>,
}

const SOURCES: [(&str, &str); 9] = [
    ("G2", include_str!("../reference/G2.txt")),
    ("B2", include_str!("../reference/B2.txt")),
    ("A4", include_str!("../reference/A4.txt")),
    ("B4", include_str!("../reference/B4.txt")),
    ("D4", include_str!("../reference/D4.txt")),
    ("F4", include_str!("../reference/F4.txt")),
    ("E6", include_str!("../reference/E6.txt")),
    ("E7", include_str!("../reference/E7.txt")),
    ("E8", include_str!("../reference/E8.txt")),
];

pub fn reference_table(t: CartanType) -> Option<ReferenceTable> {
    let name = t.to_string();
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, text)| parse(text).expect("embedded reference table is well formed"))
}

pub fn parse(text: &str) -> Result<ReferenceTable, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let cartan = lines
        .next()
        .and_then(|l| l.strip_prefix("type "))
        .ok_or("missing type line")?
        .trim()
        .parse()
        .map_err(|e| format!("{e}"))?;
    let labels: Vec<String> =
        lines.next().and_then(|l| l.strip_prefix("labels ")).ok_or("missing labels line")?.split('|').map(str::to_string).collect();
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let mut cells = line.split('|');
        let degree: usize = cells.next().and_then(|d| d.trim().parse().ok()).ok_or_else(|| format!("bad degree in `{line}`"))?;
        if degree != k {
            return Err(format!("expected degree {k}, found {degree}"));
        }
        let row = cells
            .map(|c| if c.trim().is_empty() { Ok(0) } else { c.trim().parse::<i64>().map_err(|_| format!("bad cell `{c}`")) })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != labels.len() {
            return Err(format!("degree {k}: {} cells for {} columns", row.len(), labels.len()));
        }
        rows.push(row);
    }
    Ok(ReferenceTable { cartan, labels, rows })
}

impl ReferenceTable {
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Highest listed degree.
    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn declared_kind(&self, j: usize) -> CharKind {
        if self.labels[j].ends_with("^Q") {
            CharKind::Q
        } else {
            CharKind::M
        }
    }
}

/// Outcome of matching computed columns against a reference table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatch {
    /// `computed[j]` is the computed row matched to reference column j.
    pub computed: Vec<usize>,
    /// Groups of reference labels whose columns coincide.
    pub ties: Vec<Vec<String>>,
    /// Reference labels whose `^Q` tag disagrees with the computed type.
    pub kind_mismatches: Vec<String>,
}

/// Matches every reference column to a distinct computed column with the
/// same coefficients in degrees 0..=N/2. Fails with the unmatched labels.
pub fn match_columns(table: &FakeDegreeTable, reference: &ReferenceTable) -> Result<ColumnMatch, Vec<String>> {
    let top = reference.max_degree();
    let computed_cols: Vec<Vec<i64>> = table.rows.iter().map(|r| (0..=top).map(|k| r.p.coeff(k)).collect()).collect();
    let mut used = vec![false; computed_cols.len()];
    let mut computed = Vec::with_capacity(reference.labels.len());
    let mut missing = Vec::new();
    for j in 0..reference.labels.len() {
        let col = reference.column(j);
        match (0..computed_cols.len()).find(|&i| !used[i] && computed_cols[i] == col) {
            Some(i) => {
                used[i] = true;
                computed.push(i);
            }
            None => missing.push(reference.labels[j].clone()),
        }
    }
    if reference.labels.len() != computed_cols.len() {
        missing.push(format!("{} reference columns for {} computed characters", reference.labels.len(), computed_cols.len()));
    }
    if !missing.is_empty() {
        return Err(missing);
    }
    let mut ties: Vec<Vec<String>> = Vec::new();
    let mut seen = vec![false; reference.labels.len()];
    for a in 0..reference.labels.len() {
        if seen[a] {
            continue;
        }
        let group: Vec<usize> = (a..reference.labels.len()).filter(|&b| reference.column(b) == reference.column(a)).collect();
        if group.len() > 1 {
            group.iter().for_each(|&b| seen[b] = true);
            ties.push(group.iter().map(|&b| reference.labels[b].clone()).collect());
        }
    }
    let kind_mismatches = (0..reference.labels.len())
        .filter(|&j| reference.declared_kind(j) != table.rows[computed[j]].kind)
        .map(|j| reference.labels[j].clone())
        .collect();
    Ok(ColumnMatch { computed, ties, kind_mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        for (name, _) in SOURCES {
            let t = reference_table(name.parse().unwrap()).unwrap();
            assert!(!t.labels.is_empty(), "{name}");
            assert!(t.rows[0].iter().all(|&c| c >= 0));
        }
        let e8 = reference_table("E8".parse().unwrap()).unwrap();
        assert_eq!(e8.max_degree(), 60);
        assert_eq!(e8.labels.len(), 30);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(parse("type G2\nlabels a|b\n0|1\n").is_err());
        assert!(parse("type G2\nlabels a\n1|1\n").is_err());
        assert!(parse("labels a\n").is_err());
    }
}
