//! `sfd table|chartable|classes|verify|basic|molien <TYPE>`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sfd_core::molien::{basic_spin_closed_form, QNormalization};
use sfd_core::spinchar::identify_basic_spin;
use sfd_core::{CartanType, RootSystem};

use crate::data::{ClassDataset, SpinTableDataset};
use crate::output::{self, format_polynomial, OutputFormat};
use crate::pipeline::{prepare, verify, Failure, Options, Prepared, Source, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "sfd", version, about = "Spin fake degrees of finite Weyl groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Directory holding curated `<TYPE>.classes` and `<TYPE>.spin` files.
    #[arg(long, global = true, env = "SFD_DATA_DIR", default_value = "data")]
    pub data_dir: PathBuf,
    /// Largest group order enumerated from scratch.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Allow E7 from scratch (slow, memory hungry).
    #[arg(long, global = true)]
    pub extended: bool,
    #[arg(long, global = true, value_enum, default_value = "md")]
    pub format: OutputFormat,
    /// Force a type Q normalization instead of selecting it by the published table.
    #[arg(long, global = true, value_enum)]
    pub q_normalization: Option<Normalization>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Normalization {
    Sum,
    Half,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spin fake degree table.
    Table {
        cartan: CartanType,
        /// Only degrees 0 through N/2.
        #[arg(long)]
        half: bool,
    },
    /// Spin character table on the split classes.
    Chartable {
        cartan: CartanType,
        /// Emit the spin table dataset format.
        #[arg(long)]
        export: bool,
    },
    /// Conjugacy classes with sizes, parities and split flags.
    Classes {
        cartan: CartanType,
        /// Emit the class dataset format.
        #[arg(long)]
        export: bool,
    },
    /// Run every consistency check.
    Verify {
        cartan: CartanType,
        /// Also compare against the full-cover Molien average.
        #[arg(long)]
        deep: bool,
    },
    /// Closed form of the basic spin column.
    Basic {
        cartan: CartanType,
        /// Also run the full pipeline and compare.
        #[arg(long)]
        deep: bool,
    },
    /// Multiplicity series H(χ, t) through t^N.
    Molien { cartan: CartanType },
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Cli {
    fn options(&self) -> Options {
        Options {
            data_dir: self.data_dir.clone(),
            budget: self.budget,
            extended: self.extended,
            normalization: self.q_normalization.map(|n| match n {
                Normalization::Sum => QNormalization::Sum,
                Normalization::Half => QNormalization::Half,
            }),
        }
    }
}

fn notes(p: &Prepared, err: &mut String) {
    for n in &p.notes {
        writeln!(err, "note: {n}").unwrap();
    }
    if p.matched.is_none() && crate::reference::reference_table(p.rs.cartan()).is_some() {
        writeln!(err, "warning: columns emitted in canonical order").unwrap();
    }
}

fn basic(cartan: CartanType, deep: bool, cli: &Cli, out: &mut Outcome) -> Result<(), Failure> {
    let rs = RootSystem::new(cartan)?;
    let p = basic_spin_closed_form(rs.rank(), rs.degrees());
    let n: usize = rs.degrees().iter().map(|&d| d as usize - 1).sum();
    out.stdout = match cli.format {
        OutputFormat::Md => format!("{}\n", format_polynomial(&p)),
        OutputFormat::Csv => {
            let mut s = String::from("basic\n");
            for k in 0..=n {
                writeln!(s, "{}", p.coeff(k)).unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let coeffs: Vec<i64> = (0..=n).map(|k| p.coeff(k)).collect();
            let doc = json!({ "type": cartan.to_string(), "N": n, "degrees": rs.degrees(), "coefficients": coeffs });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
    };
    if deep {
        let prepared = prepare(cartan, &cli.options())?;
        let row = identify_basic_spin(&prepared.spin)?;
        if prepared.fake.rows[row].p != p {
            return Err(Failure::Failed(format!(
                "basic spin column {} differs from the closed form: {}",
                prepared.fake.rows[row].label,
                format_polynomial(&prepared.fake.rows[row].p)
            )));
        }
        writeln!(out.stderr, "basic spin column {} agrees with the closed form", prepared.fake.rows[row].label).unwrap();
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut Outcome) -> Result<(), Failure> {
    let opts = cli.options();
    match &cli.command {
        Command::Table { cartan, half } => {
            let p = prepare(*cartan, &opts)?;
            notes(&p, &mut out.stderr);
            out.stdout = output::fake_table(&p.fake, *half, cli.format);
        }
        Command::Chartable { cartan, export } => {
            let p = prepare(*cartan, &opts)?;
            notes(&p, &mut out.stderr);
            out.stdout = if *export {
                SpinTableDataset::from_table(&p.spin).to_text()
            } else {
                output::character_table(&p.spin, cli.format)
            };
        }
        Command::Classes { cartan, export } => {
            let p = prepare(*cartan, &opts)?;
            let cds: &ClassDataset = p.class_data.as_ref().expect("prepared tables carry class data");
            out.stdout = if *export { cds.to_text() } else { output::classes(cds, cli.format) };
        }
        Command::Verify { cartan, deep } => {
            let p = prepare(*cartan, &opts)?;
            let checks = verify(&p, *deep);
            let source = match p.source {
                Source::Scratch => "computed from scratch",
                Source::Dataset => "loaded from curated data",
            };
            writeln!(out.stdout, "{cartan}: spin table {source}").unwrap();
            for c in &checks {
                writeln!(out.stdout, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            for n in &p.notes {
                writeln!(out.stdout, "note: {n}").unwrap();
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Failed(format!("{cartan}: verification failed")));
            }
        }
        Command::Basic { cartan, deep } => basic(*cartan, *deep, cli, out)?,
        Command::Molien { cartan } => {
            let p = prepare(*cartan, &opts)?;
            notes(&p, &mut out.stderr);
            out.stdout = output::molien_series(&p.fake, cli.format);
        }
    }
    Ok(())
}

/// Runs one invocation; exit code 0 on success, 1 on failure, 2 when
/// curated data is missing.
pub fn run(cli: &Cli) -> Outcome {
    let mut out = Outcome::default();
    match execute(cli, &mut out) {
        Ok(()) => {}
        Err(Failure::MissingData(m)) => {
            writeln!(out.stderr, "error: {m}").unwrap();
            out.code = 2;
        }
        Err(Failure::Failed(m)) => {
            writeln!(out.stderr, "error: {m}").unwrap();
            out.code = 1;
        }
    }
    out
}
