//! Built-in codes and structure-code pairs.
//!
//! Code names: `repN` (repetition code of length `N`), `rm<r>-<m>`,
//! `toy2`, `all-one-16`, `case2-d`, and any of these with a `-dual`
//! suffix.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::StructureCodes;
use crate::gf2::{make_code, reed_muller, BinaryCode, BitWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub code: BinaryCode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogPair {
    pub name: String,
    pub description: String,
    pub c_name: String,
    pub d_name: String,
}

pub fn repetition(n: usize) -> Result<BinaryCode> {
    make_code(n, &[BitWord::ones(n)?])
}

/// `⟨(1)_8⟩ ⊕ ⟨(1)_8⟩`.
pub fn case2_d() -> Result<BinaryCode> {
    let r = repetition(8)?;
    r.direct_sum(&r)
}

fn base_code(name: &str) -> Result<BinaryCode> {
    match name {
        "toy2" => repetition(2),
        "all-one-16" => repetition(16),
        "case2-d" => case2_d(),
        _ => {
            if let Some(n) = name.strip_prefix("rep") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Input(format!("unknown catalog code `{name}`")))?;
                if n == 0 {
                    return Err(Error::Input("repetition code needs positive length".into()));
                }
                return repetition(n);
            }
            if let Some(rest) = name.strip_prefix("rm") {
                if let Some((r, m)) = rest.split_once('-') {
                    if let (Ok(r), Ok(m)) = (r.parse(), m.parse()) {
                        return reed_muller(r, m);
                    }
                }
            }
            Err(Error::Input(format!("unknown catalog code `{name}`")))
        }
    }
}

/// Look up a code by name.
pub fn code(name: &str) -> Result<BinaryCode> {
    match name.strip_suffix("-dual") {
        Some(base) => Ok(base_code(base)?.dual()),
        None => base_code(name),
    }
}

pub fn entries() -> Result<Vec<CatalogEntry>> {
    let list: [(&str, &str); 14] = [
        ("toy2", "length-2 repetition code {00, 11}"),
        ("rep4", "repetition code of length 4"),
        ("rep8", "repetition code of length 8"),
        ("all-one-16", "the all-one code <(1)_16>"),
        ("all-one-16-dual", "even-weight code of length 16"),
        ("rm0-4", "Reed-Muller RM(0,4)"),
        ("rm1-4", "Reed-Muller RM(1,4), triply even"),
        ("rm2-4", "Reed-Muller RM(2,4), dual of RM(1,4)"),
        ("rm3-4", "Reed-Muller RM(3,4), even-weight code"),
        ("rm4-4", "Reed-Muller RM(4,4), full space"),
        ("case2-d", "<(1)_8> + <(1)_8>, triply even"),
        ("case2-d-dual", "dual of <(1)_8> + <(1)_8>"),
        ("rep32", "repetition code of length 32"),
        ("rep32-dual", "even-weight code of length 32"),
    ];
    list.iter()
        .map(|(name, description)| {
            Ok(CatalogEntry {
                name: name.to_string(),
                description: description.to_string(),
                code: code(name)?,
            })
        })
        .collect()
}

pub fn pairs() -> Vec<CatalogPair> {
    let list: [(&str, &str, &str, &str); 5] = [
        ("toy2", "C = D = {00, 11}", "toy2", "toy2"),
        ("rep16", "D = <(1)_16>, C = D-dual", "all-one-16-dual", "all-one-16"),
        ("case2", "D = <(1)_8> + <(1)_8>, C = D-dual", "case2-d-dual", "case2-d"),
        ("rm4", "D = RM(1,4), C = RM(2,4)", "rm2-4", "rm1-4"),
        ("rep32", "D = <(1)_32>, C = D-dual", "rep32-dual", "rep32"),
    ];
    list.iter()
        .map(|(name, description, c, d)| CatalogPair {
            name: name.to_string(),
            description: description.to_string(),
            c_name: c.to_string(),
            d_name: d.to_string(),
        })
        .collect()
}

/// Look up a structure-code pair by name.
pub fn pair(name: &str) -> Result<StructureCodes> {
    let p = pairs()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::Input(format!("unknown catalog pair `{name}`")))?;
    StructureCodes::new(code(&p.c_name)?, code(&p.d_name)?)
}
