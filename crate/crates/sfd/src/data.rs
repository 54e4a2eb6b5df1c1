//! Line-oriented dataset formats for class data and spin character tables.
//!
//! Class data:
//! ```text
//! weyl_type E6
//! order 51840
//! class name=C1 size=1 word= parity=even split=yes
//! class name=C2 size=36 word=1 parity=odd split=no carter=A1
//! ```
//! Spin tables:
//! ```text
//! weyl_type G2
//! classes C1:even C4:even ...
//! char label=2_s type=M values=2;0;-1;...
//! ```

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use sfd_core::exact::{format_complex, parse_complex, QuadComplex, Ring};
use sfd_core::molien::{FakeDegreeTable, QNormalization};
use sfd_core::spinchar::{CharKind, SpinCharacter, SpinCharacterTable, SplitClass, SpinComputation};
use sfd_core::weyl::{group_order, GroupElement, Parity};
use sfd_core::{CartanType, Error, Result, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub name: String,
    pub size: u64,
    pub word: Vec<u8>,
    pub parity: Parity,
    pub split: bool,
    pub carter: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDataset {
    pub weyl_type: CartanType,
    pub order: u64,
    pub entries: Vec<ClassEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRow {
    pub label: String,
    pub kind: CharKind,
    pub values: Vec<QuadComplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinTableDataset {
    pub weyl_type: CartanType,
    pub classes: Vec<(String, Parity)>,
    pub rows: Vec<SpinRow>,
}

pub fn class_path(dir: &Path, t: CartanType) -> PathBuf {
    dir.join(format!("{t}.classes"))
}

pub fn spin_path(dir: &Path, t: CartanType) -> PathBuf {
    dir.join(format!("{t}.spin"))
}

fn syntax(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

/// Significant lines with their 1-based numbers; `#` starts a comment.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn key_values<'a>(line: usize, fields: impl Iterator<Item = &'a str>) -> Result<Vec<(&'a str, &'a str)>> {
    fields.map(|f| f.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, found `{f}`")))).collect()
}

fn parse_parity(line: usize, s: &str) -> Result<Parity> {
    match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        _ => Err(syntax(line, format!("parity must be even or odd, found `{s}`"))),
    }
}

fn parse_word(line: usize, s: &str, rank: usize) -> Result<Vec<u8>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|g| match g.trim().parse::<u8>() {
            Ok(g) if g >= 1 && g as usize <= rank => Ok(g),
            _ => Err(syntax(line, format!("generator `{g}` out of range 1..={rank}"))),
        })
        .collect()
}

fn format_word(word: &[u8]) -> String {
    word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_type(line: usize, rest: &str) -> Result<CartanType> {
    rest.trim().parse().map_err(|e| syntax(line, e))
}

/// Node count of a Carter label such as `D5(a1)`, `A4+A1`, `2A2` or `1`.
pub fn carter_nodes(label: &str) -> Option<usize> {
    if label == "1" || label == "-" || label.is_empty() {
        return Some(0);
    }
    let mut total = 0;
    for part in label.split('+') {
        let part = part.split('(').next()?.trim_end_matches(['\'', '~']);
        let digits_end = part.find(|c: char| !c.is_ascii_digit())?;
        let mult = if digits_end == 0 { 1 } else { part[..digits_end].parse().ok()? };
        let rest = &part[digits_end..];
        let mut chars = rest.chars();
        if !matches!(chars.next()?, 'A'..='G') {
            return None;
        }
        let rank: usize = chars.as_str().trim_end_matches(['\'', '~']).parse().ok()?;
        total += mult * rank;
    }
    Some(total)
}

impl ClassDataset {
    pub fn parse(text: &str) -> Result<Self> {
        let mut weyl_type = None;
        let mut order = None;
        let mut entries = Vec::new();
        for (line, rec) in records(text) {
            let (head, rest) = rec.split_once(char::is_whitespace).unwrap_or((rec, ""));
            match head {
                "weyl_type" => weyl_type = Some(parse_type(line, rest)?),
                "order" => order = Some(rest.trim().parse::<u64>().map_err(|_| syntax(line, "bad order"))?),
                "class" => {
                    let t: CartanType = weyl_type.ok_or_else(|| syntax(line, "class before weyl_type"))?;
                    let kv = key_values(line, rest.split_whitespace())?;
                    let get = |k: &str| kv.iter().find(|(key, _)| *key == k).map(|(_, v)| *v);
                    let need = |k: &str| get(k).ok_or_else(|| syntax(line, format!("missing `{k}`")));
                    let split = match need("split")? {
                        "yes" => true,
                        "no" => false,
                        s => return Err(syntax(line, format!("split must be yes or no, found `{s}`"))),
                    };
                    entries.push(ClassEntry {
                        name: need("name")?.to_string(),
                        size: need("size")?.parse().map_err(|_| syntax(line, "bad size"))?,
                        word: parse_word(line, need("word")?, t.rank())?,
                        parity: parse_parity(line, need("parity")?)?,
                        split,
                        carter: get("carter").map(str::to_string),
                    });
                }
                _ => return Err(syntax(line, format!("unknown record `{head}`"))),
            }
        }
        let weyl_type = weyl_type.ok_or_else(|| Error::Parse("missing weyl_type".into()))?;
        let order = order.ok_or_else(|| Error::Parse("missing order".into()))?;
        let ds = ClassDataset { weyl_type, order, entries };
        ds.validate()?;
        Ok(ds)
    }

    /// Sizes, orders, word parities, Carter parities and the det(I + x) = 0
    /// condition for even non-split classes.
    pub fn validate(&self) -> Result<()> {
        let rs = RootSystem::new(self.weyl_type)?;
        let expected = group_order(&rs);
        if self.order as u128 != expected {
            return Err(Error::Verification(format!("declared order {} but |W({})| = {expected}", self.order, self.weyl_type)));
        }
        let total: u64 = self.entries.iter().map(|e| e.size).sum();
        if total != self.order {
            let gap = self.order as i128 - total as i128;
            return Err(Error::Verification(format!(
                "class sizes sum to {total}, expected {} (deficit {gap})",
                self.order
            )));
        }
        for e in &self.entries {
            let word_parity = Parity::of_length(e.word.len());
            if word_parity != e.parity {
                return Err(Error::Verification(format!(
                    "class {}: word of length {} is {word_parity} but declared {}",
                    e.name,
                    e.word.len(),
                    e.parity
                )));
            }
            if let Some(label) = &e.carter {
                let nodes = carter_nodes(label)
                    .ok_or_else(|| Error::Verification(format!("class {}: unreadable Carter label `{label}`", e.name)))?;
                if Parity::of_length(nodes) != e.parity {
                    return Err(Error::Verification(format!(
                        "class {}: Carter label {label} has {nodes} nodes but the class is {}",
                        e.name, e.parity
                    )));
                }
            }
            if e.parity == Parity::Even && !e.split {
                let x = GroupElement::from_word(&rs, &e.word)?;
                if x.charpoly(&rs).eval(&-1) != 0 {
                    return Err(Error::Verification(format!(
                        "class {}: declared non-split but det(I + x) ≠ 0",
                        e.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("weyl_type {}\norder {}\n", self.weyl_type, self.order);
        for e in &self.entries {
            let _ = write!(
                out,
                "class name={} size={} word={} parity={} split={}",
                e.name,
                e.size,
                format_word(&e.word),
                e.parity,
                if e.split { "yes" } else { "no" }
            );
            if let Some(c) = &e.carter {
                let _ = write!(out, " carter={c}");
            }
            out.push('\n');
        }
        out
    }

    /// Every conjugacy class of an enumerated group.
    pub fn from_computation(c: &SpinComputation) -> Self {
        let g = c.cover.weyl();
        let entries = c
            .classes
            .weyl
            .classes
            .iter()
            .enumerate()
            .map(|(k, cls)| ClassEntry {
                name: format!("C{}", k + 1),
                size: cls.size as u64,
                word: g.element(cls.rep_index).word().to_vec(),
                parity: cls.parity,
                split: c.classes.is_split(k),
                carter: cls.carter_label.clone(),
            })
            .collect();
        ClassDataset { weyl_type: g.root_system().cartan(), order: g.order() as u64, entries }
    }
}

impl SpinTableDataset {
    pub fn parse(text: &str) -> Result<Self> {
        let mut weyl_type = None;
        let mut classes: Option<Vec<(String, Parity)>> = None;
        let mut rows = Vec::new();
        for (line, rec) in records(text) {
            let (head, rest) = rec.split_once(char::is_whitespace).unwrap_or((rec, ""));
            match head {
                "weyl_type" => weyl_type = Some(parse_type(line, rest)?),
                "classes" => {
                    let list = rest
                        .split_whitespace()
                        .map(|c| {
                            let (name, parity) =
                                c.split_once(':').ok_or_else(|| syntax(line, format!("expected name:parity, found `{c}`")))?;
                            Ok((name.to_string(), parse_parity(line, parity)?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    classes = Some(list);
                }
                "char" => {
                    let n = classes.as_ref().ok_or_else(|| syntax(line, "char before classes"))?.len();
                    let kv = key_values(line, rest.split_whitespace())?;
                    let get = |k: &str| {
                        kv.iter().find(|(key, _)| *key == k).map(|(_, v)| *v).ok_or_else(|| syntax(line, format!("missing `{k}`")))
                    };
                    let values = get("values")?
                        .split(';')
                        .map(|v| parse_complex(v).map_err(|e| syntax(line, e)))
                        .collect::<Result<Vec<_>>>()?;
                    if values.len() != n {
                        return Err(syntax(line, format!("{} values for {n} classes", values.len())));
                    }
                    rows.push(SpinRow {
                        label: get("label")?.to_string(),
                        kind: get("type")?.parse().map_err(|e| syntax(line, e))?,
                        values,
                    });
                }
                _ => return Err(syntax(line, format!("unknown record `{head}`"))),
            }
        }
        Ok(SpinTableDataset {
            weyl_type: weyl_type.ok_or_else(|| Error::Parse("missing weyl_type".into()))?,
            classes: classes.ok_or_else(|| Error::Parse("missing classes".into()))?,
            rows,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("weyl_type {}\nclasses", self.weyl_type);
        for (name, parity) in &self.classes {
            let _ = write!(out, " {name}:{parity}");
        }
        out.push('\n');
        for r in &self.rows {
            let values: Vec<String> = r.values.iter().map(format_complex).collect();
            let _ = writeln!(out, "char label={} type={} values={}", r.label, r.kind, values.join(";"));
        }
        out
    }

    pub fn from_table(t: &SpinCharacterTable) -> Self {
        SpinTableDataset {
            weyl_type: t.cartan,
            classes: t.classes.iter().map(|c| (c.name.clone(), c.parity)).collect(),
            rows: t
                .characters
                .iter()
                .map(|c| SpinRow { label: c.label.clone(), kind: c.kind, values: c.values.clone() })
                .collect(),
        }
    }
}

pub fn load_class_dataset(path: &Path) -> Result<ClassDataset> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ClassDataset::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_spin_dataset(path: &Path) -> Result<SpinTableDataset> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    SpinTableDataset::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Joins a spin table with its class data. Values refer to the lift of each
/// class word.
pub fn assemble(ds: &SpinTableDataset, cds: &ClassDataset) -> Result<SpinCharacterTable> {
    if ds.weyl_type != cds.weyl_type {
        return Err(Error::Verification(format!("spin table is for {} but class data for {}", ds.weyl_type, cds.weyl_type)));
    }
    let rs = RootSystem::new(ds.weyl_type)?;
    let mut classes = Vec::with_capacity(ds.classes.len());
    for (name, parity) in &ds.classes {
        let e = cds
            .entries
            .iter()
            .find(|e| &e.name == name)
            .ok_or_else(|| Error::Verification(format!("class {name} is not in the class data")))?;
        if e.parity != *parity {
            return Err(Error::Verification(format!("class {name}: parity {parity} disagrees with the class data")));
        }
        if !e.split {
            return Err(Error::Verification(format!("class {name} is declared non-split in the class data")));
        }
        let mut c = SplitClass::from_word(&rs, name.clone(), e.size, e.word.clone())?;
        c.carter = e.carter.clone();
        classes.push(c);
    }
    let characters =
        ds.rows.iter().map(|r| SpinCharacter { label: r.label.clone(), kind: r.kind, values: r.values.clone() }).collect();
    Ok(SpinCharacterTable { cartan: ds.weyl_type, weyl_order: cds.order, classes, characters })
}

/// Orthogonality, type M vanishing, count recipe, split-class coverage and
/// the word-level trace identity; one line per finding.
pub fn validate_spin_table(ds: &SpinTableDataset, cds: &ClassDataset) -> Vec<String> {
    let table = match assemble(ds, cds) {
        Ok(t) => t,
        Err(e) => return vec![e.to_string()],
    };
    let mut report = table.check();
    let declared_split = cds.entries.iter().filter(|e| e.split).count();
    if declared_split != table.classes.len() {
        report.push(format!(
            "spin table lists {} classes but the class data has {declared_split} split classes",
            table.classes.len()
        ));
    }
    report.extend(trace_identity_failures(&table));
    report
}

/// In even rank the basic spin trace squares to det(I + x) on every even
/// split class.
pub fn trace_identity_failures(table: &SpinCharacterTable) -> Vec<String> {
    if table.cartan.rank() % 2 == 1 {
        return Vec::new();
    }
    table
        .classes
        .iter()
        .filter(|c| c.parity == Parity::Even)
        .filter(|c| {
            let det = QuadComplex::from_i64(c.charpoly.eval(&-1));
            let tr = QuadComplex::real(c.trace.clone());
            &tr * &tr != det
        })
        .map(|c| format!("class {}: trace² ≠ det(I + x)", c.name))
        .collect()
}

/// Fake degrees from curated data; requires an empty validation report.
pub fn fake_degrees_from_dataset(ds: &SpinTableDataset, cds: &ClassDataset, normalization: QNormalization) -> Result<FakeDegreeTable> {
    let report = validate_spin_table(ds, cds);
    if !report.is_empty() {
        return Err(Error::Verification(report.join("; ")));
    }
    let table = assemble(ds, cds)?;
    let rs = RootSystem::new(ds.weyl_type)?;
    FakeDegreeTable::compute(&table, rs.degrees(), normalization)
}
