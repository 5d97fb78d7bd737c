use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One value per line.
    Plain,
    /// `index,value` per line.
    Csv,
    /// OEIS b-file: `index value` per line.
    Bfile,
}

/// Writes `terms` with indices starting at `offset`.
pub fn write_terms<W: Write>(
    out: &mut W,
    terms: &[BigInt],
    format: Format,
    offset: u64,
) -> io::Result<()> {
    for (i, value) in terms.iter().enumerate() {
        let index = offset + i as u64;
        match format {
            Format::Plain => writeln!(out, "{value}")?,
            Format::Csv => writeln!(out, "{index},{value}")?,
            Format::Bfile => writeln!(out, "{index} {value}")?,
        }
    }
    Ok(())
}
