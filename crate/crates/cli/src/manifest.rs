//! Run manifests: enough recorded state to reproduce any invocation —
//! the argument vector, a digest of the input, the effective parameters,
//! digests of every output written, the seed if one was used, and the
//! versions involved. No timestamps or environment state, so a manifest is
//! itself deterministic.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in digest {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

pub struct RunManifest {
    pub command: Vec<String>,
    pub input_digest: Option<String>,
    pub parameters: Value,
    pub outputs: Vec<(String, String)>,
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn to_json(&self) -> Value {
        let outputs: Vec<Value> = self
            .outputs
            .iter()
            .map(|(path, digest)| json!({ "path": path, "sha256": digest }))
            .collect();
        json!({
            "command": self.command,
            "input_sha256": self.input_digest,
            "parameters": self.parameters,
            "outputs": outputs,
            "seed": self.seed,
            "versions": {
                "geochroma": geochroma::VERSION,
                "geochroma-cli": env!("CARGO_PKG_VERSION"),
            },
        })
    }
}
