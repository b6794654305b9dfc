//! Built-in example algebras, stored in canonical form.

use crate::graded::AlgebraSpec;
use crate::identities::{IdentityId, Suite, Target};

use super::parse_spec;

pub struct CorpusEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
    /// Identities and suites the entry passes.
    pub targets: &'static [Target],
}

impl CorpusEntry {
    pub fn spec(&self) -> AlgebraSpec {
        parse_spec(self.text).expect("corpus entries are valid")
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "E1",
        summary: "K[t]/(t^2) with zero bracket, trivial grading, hyperbolic form B",
        text: include_str!("../../corpus/e1.json"),
        targets: &[
            Target::Suite(Suite::FManifoldColor),
            Target::Suite(Suite::Coherence),
            Target::Suite(Suite::InvariantForm),
        ],
    },
    CorpusEntry {
        name: "E2",
        summary: "super algebra: e even, f odd, e·e = e, e·f = f·e = f, [e,f] = f",
        text: include_str!("../../corpus/e2.json"),
        targets: &[Target::Suite(Suite::FManifoldColor)],
    },
    CorpusEntry {
        name: "E3",
        summary: "sl2 with zero dot, trivial grading, trace form B",
        text: include_str!("../../corpus/e3.json"),
        targets: &[
            Target::Suite(Suite::FManifoldColor),
            Target::Suite(Suite::Coherence),
            Target::Suite(Suite::InvariantForm),
        ],
    },
    CorpusEntry {
        name: "E4",
        summary: "Zinbiel algebra a◇a = b, trivial grading",
        text: include_str!("../../corpus/e4.json"),
        targets: &[Target::Identity(IdentityId::ZinbielColor)],
    },
    CorpusEntry {
        name: "E5",
        summary: "E4's Zinbiel product with zero pre-Lie product",
        text: include_str!("../../corpus/e5.json"),
        targets: &[Target::Suite(Suite::PreFManifoldColor)],
    },
];

/// Case-insensitive lookup.
pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}
