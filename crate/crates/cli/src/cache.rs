//! On-disk cache of enumerated balls, one file per (type, rank, N).
//!
//! A file is `{"format","version","type","rank","maxlen","hash","elements"}`
//! where `elements` is the list of length shells and `hash` is the SHA-256 of
//! its compact JSON text. Anything that fails to match is ignored and
//! regenerated.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use affhecke::serial::element_from_json;
use affhecke::{AffineWeylGroup, Ball};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;

const FORMAT: &str = "affhecke-ball";
const VERSION: u64 = 1;

pub fn cache_file(dir: &Path, group: &AffineWeylGroup, max_length: usize) -> PathBuf {
    dir.join(format!("ball-{}-N{max_length}.json", group.cartan_type()))
}

fn digest(elements: &Value) -> String {
    let bytes = Sha256::digest(elements.to_string().as_bytes());
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn shells_json(group: &AffineWeylGroup, ball: &Ball) -> Value {
    Value::Array(
        ball.shells
            .iter()
            .map(|shell| {
                Value::Array(
                    shell
                        .iter()
                        .map(|x| affhecke::serial::element_to_json(group, x))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Load a cached ball, or `None` when the file is missing, stale or corrupt.
pub fn load(path: &Path, group: &AffineWeylGroup, max_length: usize) -> Option<Ball> {
    let text = fs::read_to_string(path).ok()?;
    let doc: Value = serde_json::from_str(&text).ok()?;
    let ct = group.cartan_type();
    let header_ok = doc["format"] == FORMAT
        && doc["version"] == VERSION
        && doc["type"] == ct.lie_type().letter().to_string()
        && doc["rank"] == ct.rank()
        && doc["maxlen"] == max_length;
    let elements = &doc["elements"];
    if !header_ok || doc["hash"].as_str()? != digest(elements) {
        return None;
    }
    let shells = elements.as_array()?;
    if shells.len() != max_length + 1 {
        return None;
    }
    let mut out = Vec::with_capacity(shells.len());
    for (length, shell) in shells.iter().enumerate() {
        let mut members = Vec::new();
        for v in shell.as_array()? {
            let x = element_from_json(group, v).ok()?;
            if group.length(&x) != length {
                return None;
            }
            members.push(x);
        }
        out.push(members);
    }
    Some(Ball {
        max_length,
        shells: out,
    })
}

/// Write the ball atomically: a temporary file in the same directory, then
/// a rename over the target.
pub fn store(path: &Path, group: &AffineWeylGroup, ball: &Ball) -> Result<(), CliError> {
    let ct = group.cartan_type();
    let elements = shells_json(group, ball);
    let doc = json!({
        "format": FORMAT,
        "version": VERSION,
        "type": ct.lie_type().letter().to_string(),
        "rank": ct.rank(),
        "maxlen": ball.max_length,
        "hash": digest(&elements),
        "elements": elements,
    });
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(doc.to_string().as_bytes())?;
        f.sync_all()
    };
    write().map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use affhecke::RootSystem;

    #[test]
    fn round_trip_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let g = AffineWeylGroup::new(RootSystem::new("A2".parse().unwrap()));
        let ball = g.enumerate_ball(3, 1000).unwrap();
        let path = cache_file(dir.path(), &g, 3);
        assert!(load(&path, &g, 3).is_none());
        store(&path, &g, &ball).unwrap();
        assert_eq!(load(&path, &g, 3), Some(ball));
        assert!(load(&path, &g, 2).is_none());

        let text =
            fs::read_to_string(&path)
                .unwrap()
                .replacen("\"lambda\":[0,0]", "\"lambda\":[0,1]", 1);
        fs::write(&path, text).unwrap();
        assert!(load(&path, &g, 3).is_none());
    }
}
