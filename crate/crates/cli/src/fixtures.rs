//! The four worked labelings shipped as certificate files.

use grouplabel_core::constructions::construct_ant_path;
use grouplabel_core::constructions::figures::figure;

use crate::cert::{Certificate, Property};
use crate::error::{CliError, CliResult};

const FIXTURES: [&str; 4] = [
    include_str!("../fixtures/figure1.json"),
    include_str!("../fixtures/figure2.json"),
    include_str!("../fixtures/figure3.json"),
    include_str!("../fixtures/figure4.json"),
];

/// The property each figure illustrates.
pub fn figure_property(number: u8) -> Option<Property> {
    match number {
        1 => Some(Property::AStarAntimagic),
        2 | 3 => Some(Property::EaCordial),
        4 => Some(Property::AAntimagic),
        _ => None,
    }
}

pub fn fixture_text(number: u8) -> Option<&'static str> {
    FIXTURES.get(usize::from(number).checked_sub(1)?).copied()
}

/// Loads a fixture and checks it three ways: it re-verifies, it matches
/// the library's copy of the figure, and for Figures 2 and 3 it equals the
/// block construction's output.
pub fn load_figure(number: u8) -> CliResult<Certificate> {
    let corrupt = |why: String| CliError::Fixture(number, why);
    let text = fixture_text(number).ok_or_else(|| CliError::Usage(format!("no figure {number}; choose 1-4")))?;
    let cert: Certificate = serde_json::from_str(text).map_err(|e| corrupt(e.to_string()))?;
    let check = cert.recheck().map_err(|e| corrupt(e.to_string()))?;
    if !check.sound() {
        return Err(corrupt(format!("does not re-verify ({:?})", check.verdict.violation)));
    }
    let fig = figure(number).expect("numbers 1-4 exist");
    let expected = Certificate::from_edge_labeling(
        figure_property(number).expect("numbers 1-4 have a property"),
        &fig.graph,
        &fig.labeling,
    )?;
    if cert.edge_labels != expected.edge_labels || cert.graph != expected.graph || cert.group != expected.group {
        return Err(corrupt("differs from the library's figure".into()));
    }
    if number == 2 || number == 3 {
        let spec = cert.group_spec()?;
        if construct_ant_path(&spec)? != fig.labeling {
            return Err(corrupt("block construction no longer reproduces it".into()));
        }
    }
    Ok(cert)
}
