//! The NSCLC drug-resistance networks shipped with the crate.

use super::Network;

pub const NAMES: [&str; 5] = ["net31", "net29", "net14", "net09", "net09_fitted"];

const NET31: &str = include_str!("../../nets/net31.bn");
const NET29: &str = include_str!("../../nets/net29.bn");
const NET14: &str = include_str!("../../nets/net14.bn");
const NET09: &str = include_str!("../../nets/net09.bn");
const NET09_FITTED: &str = include_str!("../../nets/net09_fitted.bn");

/// Rule-file text of a bundled network.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "net31" => NET31,
        "net29" => NET29,
        "net14" => NET14,
        "net09" => NET09,
        "net09_fitted" => NET09_FITTED,
        _ => return None,
    })
}

pub fn get(name: &str) -> Option<Network> {
    let text = source(name)?;
    Some(Network::from_text(name, text).expect("bundled network parses"))
}

/// 31-node reconstruction; DNA_Damage free, four phenotype outputs.
pub fn net31() -> Network {
    get("net31").unwrap()
}

/// 29-node reduction (Sirt_1 and p53_INP1 removed).
pub fn net29() -> Network {
    get("net29").unwrap()
}

pub fn net14() -> Network {
    get("net14").unwrap()
}

pub fn net09() -> Network {
    get("net09").unwrap()
}

/// 9-node core with the fitted BMI1 rule.
pub fn net09_fitted() -> Network {
    get("net09_fitted").unwrap()
}
