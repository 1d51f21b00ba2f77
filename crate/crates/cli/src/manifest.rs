use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// What was run and a digest of what it produced. The digest covers only the
/// result, so reruns with the same inputs give the same digest.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub wall_clock_ms: u128,
    pub result_digest: String,
}

impl RunManifest {
    pub fn new(command: &str, parameters: Value, seed: Option<u64>, wall_clock_ms: u128, result: &Value) -> Self {
        RunManifest {
            command: command.into(),
            parameters,
            version: env!("CARGO_PKG_VERSION").into(),
            seed,
            wall_clock_ms,
            result_digest: digest(result),
        }
    }
}

/// sha256 of the compact JSON encoding; object keys are already sorted.
pub fn digest(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("JSON values always serialize");
    hex::encode(Sha256::digest(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_key_order_and_time() {
        let a = json!({"x": 1, "y": [1, 2]});
        let b: Value = serde_json::from_str(r#"{"y":[1,2],"x":1}"#).unwrap();
        assert_eq!(digest(&a), digest(&b));
        let m1 = RunManifest::new("c", json!({}), None, 5, &a);
        let m2 = RunManifest::new("c", json!({}), None, 900, &b);
        assert_eq!(m1.result_digest, m2.result_digest);
        assert_eq!(m1.result_digest.len(), 64);
    }
}
