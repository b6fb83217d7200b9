//! Named triangles and their text renderings.

use std::fmt::Display;
use std::str::FromStr;

use losanitsch_core::triangles::{
    e_o_tables, epsilon_table, lambda_table, losanitsch_tables, qbinom_minus1_table, IntTriangle, ResidueTriangle,
    Triangle,
};

use crate::bfile::BFile;
use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleName {
    E,
    O,
    L,
    LBar,
    QBinomMinus1,
    Epsilon,
    Lambda,
    EModP,
    LModP,
}

impl TriangleName {
    pub const NAMES: &'static [&'static str] =
        &["e", "o", "L", "Lbar", "qbinom_minus1", "epsilon", "lambda", "e_mod_p", "L_mod_p"];

    pub fn as_str(self) -> &'static str {
        use TriangleName::*;
        match self {
            E => "e",
            O => "o",
            L => "L",
            LBar => "Lbar",
            QBinomMinus1 => "qbinom_minus1",
            Epsilon => "epsilon",
            Lambda => "lambda",
            EModP => "e_mod_p",
            LModP => "L_mod_p",
        }
    }

    pub fn needs_p(self) -> bool {
        matches!(self, Self::Epsilon | Self::Lambda | Self::EModP | Self::LModP)
    }
}

impl FromStr for TriangleName {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        use TriangleName::*;
        let all = [E, O, L, LBar, QBinomMinus1, Epsilon, Lambda, EModP, LModP];
        all.into_iter().find(|t| t.as_str() == s).ok_or_else(|| {
            CliError::Usage(format!("unknown triangle {s:?}; expected one of {}", Self::NAMES.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    BFile,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Self::Table),
            "csv" => Ok(Self::Csv),
            "bfile" => Ok(Self::BFile),
            _ => Err(CliError::Usage(format!("unknown format {s:?}; expected table, csv or bfile"))),
        }
    }
}

/// A built triangle: integer entries or residues modulo `q^p - 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Built {
    Int(IntTriangle),
    Residue(ResidueTriangle),
}

/// Builds rows `0..=rows` of the named triangle. `j` selects one residue
/// coefficient; `e_mod_p` and `L_mod_p` default to `j = 0`.
pub fn build(name: TriangleName, rows: usize, p: Option<usize>, j: Option<usize>) -> Result<Built> {
    use TriangleName::*;
    if name.needs_p() && p.is_none() {
        return Err(CliError::Usage(format!("triangle {} requires --p", name.as_str())));
    }
    if !name.needs_p() && (j.is_some() || p.is_some()) {
        return Err(CliError::Usage(format!("--p and --j apply only to residue triangles, not {}", name.as_str())));
    }
    Ok(match name {
        E => Built::Int(e_o_tables(rows).0),
        O => Built::Int(e_o_tables(rows).1),
        L => Built::Int(losanitsch_tables(rows).0),
        LBar => Built::Int(losanitsch_tables(rows).1),
        QBinomMinus1 => Built::Int(qbinom_minus1_table(rows)),
        Epsilon | Lambda | EModP | LModP => {
            let p = p.expect("checked above");
            let t = if matches!(name, Epsilon | EModP) { epsilon_table(rows, p)? } else { lambda_table(rows, p)? };
            let j = if matches!(name, EModP | LModP) { Some(j.unwrap_or(0)) } else { j };
            match j {
                Some(j) => Built::Int(t.coefficient(j)?),
                None => Built::Residue(t),
            }
        }
    })
}

fn join_rows<T: Display>(t: &Triangle<T>, sep: &str) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(sep));
        out.push('\n');
    }
    out
}

/// Space-separated rows, comma-separated rows, or a read-by-rows b-file.
/// Residue entries print as `c0+c1q+c2q^2` with zero terms omitted.
pub fn render(built: &Built, format: Format) -> Result<String> {
    match (built, format) {
        (Built::Int(t), Format::Table) => Ok(join_rows(t, " ")),
        (Built::Residue(t), Format::Table) => Ok(join_rows(t, " ")),
        (Built::Int(t), Format::Csv) => Ok(join_rows(t, ",")),
        (Built::Residue(t), Format::Csv) => Ok(join_rows(t, ",")),
        (Built::Int(t), Format::BFile) => Ok(BFile::from_values(None, 0, t.read_by_rows()).render()),
        (Built::Residue(_), Format::BFile) => {
            Err(CliError::Usage("b-file output needs integer entries; pick a coefficient with --j".into()))
        }
    }
}
