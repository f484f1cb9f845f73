//! Reading codes, words, spin lists and group lists from the command line.

use std::fs;
use std::path::Path;

use framed_core::catalog;
use framed_core::extension::StructureCodes;
use framed_core::gf2::CodeLiteral;
use framed_core::pointed::AbelianGroup;
use framed_core::{BinaryCode, BitWord};

use crate::CliError;

/// A code from a JSON file, or from the catalog when written `@name`.
pub fn load_code(arg: &str) -> Result<BinaryCode, CliError> {
    if let Some(name) = arg.strip_prefix('@') {
        return Ok(catalog::code(name)?);
    }
    let text = fs::read_to_string(Path::new(arg))
        .map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?;
    parse_code(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")))
}

pub fn parse_code(text: &str) -> Result<BinaryCode, CliError> {
    let lit: CodeLiteral =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad code file: {e}")))?;
    Ok(BinaryCode::try_from(lit)?)
}

/// The pair `(C, D)` from `--catalog`, or from whichever of `--c-code` and
/// `--d-code` were given, filling a missing one with the dual of the other.
pub fn structure_codes(
    catalog_name: Option<&str>,
    c: Option<&str>,
    d: Option<&str>,
) -> Result<StructureCodes, CliError> {
    if let Some(name) = catalog_name {
        if c.is_some() || d.is_some() {
            return Err(CliError::Input("--catalog cannot be combined with --c-code/--d-code".into()));
        }
        return Ok(catalog::pair(name)?);
    }
    match (c, d) {
        (Some(c), Some(d)) => Ok(StructureCodes::new(load_code(c)?, load_code(d)?)?),
        (Some(c), None) => {
            let c = load_code(c)?;
            let d = c.dual();
            Ok(StructureCodes::new(c, d)?)
        }
        (None, Some(d)) => Ok(StructureCodes::from_d(load_code(d)?)),
        (None, None) => Err(CliError::Input(
            "give --catalog, --c-code or --d-code".into(),
        )),
    }
}

pub fn parse_word(s: &str, length: usize) -> Result<BitWord, CliError> {
    let w: BitWord = s
        .trim()
        .parse()
        .map_err(|e: framed_core::Error| CliError::Input(format!("bad --beta: {e}")))?;
    w.ensure_len(length)?;
    Ok(w)
}

/// Comma-separated spin exponents in sixteenths, e.g. `0,2,8,2`.
pub fn parse_spins(s: &str) -> Result<Vec<u8>, CliError> {
    s.split(',')
        .map(|x| {
            let x = x.trim();
            x.parse::<i64>()
                .map(|v| v.rem_euclid(16) as u8)
                .map_err(|_| CliError::Input(format!("bad spin `{x}`")))
        })
        .collect()
}

/// Groups separated by `;`, each a comma-separated list of cyclic orders,
/// e.g. `4;2,2` for `Z4` and `Z2xZ2`.
pub fn parse_groups(s: &str) -> Result<Vec<AbelianGroup>, CliError> {
    s.split(';')
        .map(|g| {
            let orders = g
                .split(',')
                .map(|x| {
                    let x = x.trim();
                    x.parse::<u32>()
                        .map_err(|_| CliError::Input(format!("bad group order `{x}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AbelianGroup::new(orders)?)
        })
        .collect()
}
