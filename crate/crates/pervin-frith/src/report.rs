//! The uniform pass/fail record every law check emits.
//!
//! A report accumulates instance identifiers as a check sweeps its family;
//! the first failure freezes a human-readable witness.  Witness digests give
//! golden files something short and stable to store.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instances: Vec<String>,
    pub pass: bool,
    pub witness: Option<String>,
}

impl LawReport {
    pub fn new(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            instances: Vec::new(),
            pass: true,
            witness: None,
        }
    }

    /// Record that the check visited an instance.
    pub fn instance(&mut self, id: impl Into<String>) {
        self.instances.push(id.into());
    }

    /// Record one verdict; the first failure keeps its witness.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
        self.pass &= ok;
    }

    /// Fold another report into this one, prefixing its law name onto any
    /// carried witness.
    pub fn absorb(&mut self, other: LawReport) {
        self.instances.extend(other.instances);
        if !other.pass && self.pass {
            self.pass = false;
            self.witness = Some(match other.witness {
                Some(w) => format!("{}: {}", other.law, w),
                None => other.law,
            });
        }
        self.pass &= other.pass;
    }
}

/// Short stable digest of a witness string.
pub fn witness_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest[..6].iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_keeps_its_witness() {
        let mut rep = LawReport::new("demo");
        rep.instance("a");
        rep.require(true, || unreachable!());
        rep.require(false, || "first".to_string());
        rep.require(false, || "second".to_string());
        assert!(!rep.pass);
        assert_eq!(rep.witness.as_deref(), Some("first"));
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(witness_hash("x"), witness_hash("x"));
        assert_ne!(witness_hash("x"), witness_hash("y"));
        assert_eq!(witness_hash("x").len(), 12);
    }
}
