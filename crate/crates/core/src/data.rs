//! Data files shipped with the crate: dialect profiles, lexicons, the survey
//! question bank, and the gold rule fixtures.

use crate::profile::{load_profile, DialectProfile};

pub const MASS_NOUNS: &str = include_str!("../../../lexicons/mass_nouns.txt");
pub const IRREGULAR_PAST: &str = include_str!("../../../lexicons/irregular_past.tsv");
pub const QUESTION_BANK: &str = include_str!("../../../survey/bank.tsv");
pub const RULE_EXAMPLES_TSV: &str = include_str!("../../../fixtures/rule_examples.tsv");
pub const RULE_EXAMPLES_CONLLU: &str = include_str!("../../../fixtures/rule_examples.conllu");

/// Shipped profile names, in display order.
pub const PROFILE_NAMES: [&str; 8] = ["SAE", "AppE", "ChcE", "CollAmE", "CollSgE", "IndE", "UAAVE", "Multi"];

const PROFILE_FILES: [(&str, &str); 8] = [
    ("SAE", include_str!("../../../profiles/SAE.tsv")),
    ("AppE", include_str!("../../../profiles/AppE.tsv")),
    ("ChcE", include_str!("../../../profiles/ChcE.tsv")),
    ("CollAmE", include_str!("../../../profiles/CollAmE.tsv")),
    ("CollSgE", include_str!("../../../profiles/CollSgE.tsv")),
    ("IndE", include_str!("../../../profiles/IndE.tsv")),
    ("UAAVE", include_str!("../../../profiles/UAAVE.tsv")),
    ("Multi", include_str!("../../../profiles/Multi.tsv")),
];

/// Dialects whose union forms the `Multi` pseudo-dialect.
pub const MULTI_SOURCES: [&str; 5] = ["AppE", "ChcE", "IndE", "CollSgE", "UAAVE"];

/// Looks up a shipped profile by name (case-insensitive).
pub fn shipped_profile(name: &str) -> Option<DialectProfile> {
    PROFILE_FILES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(n, text)| load_profile(n, text).expect("shipped profiles are well-formed"))
}

pub fn shipped_profiles() -> Vec<DialectProfile> {
    PROFILE_NAMES.iter().filter_map(|n| shipped_profile(n)).collect()
}

/// One row of the rule fixture table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleExample {
    pub feature: u16,
    pub sae: String,
    pub expected: String,
    pub fixture_id: String,
}

pub fn parse_rule_examples(text: &str) -> Vec<RuleExample> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            assert_eq!(cols.len(), 4, "rule example row: {l:?}");
            RuleExample {
                feature: cols[0].parse().expect("feature number"),
                sae: cols[1].to_owned(),
                expected: cols[2].to_owned(),
                fixture_id: cols[3].to_owned(),
            }
        })
        .collect()
}

pub fn rule_examples() -> Vec<RuleExample> {
    parse_rule_examples(RULE_EXAMPLES_TSV)
}
