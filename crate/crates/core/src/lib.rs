//! Rule-based dialect perturbation of dependency-parsed English.
//!
//! Sentences come in as CoNLL-U, a [`DialectProfile`] assigns each grammar
//! feature a probability, and the transform applies the cataloged rules with
//! seeded randomness, recording every change as a character-level [`Edit`].

pub mod analytics;
pub mod conllu;
pub mod data;
pub mod dataset;
pub mod error;
pub mod eval;
pub mod model;
pub mod morphology;
pub mod profile;
pub mod provenance;
pub mod rules;
pub mod survey;
pub mod transform;
pub mod working;

pub use analytics::{
    catalog_universe, density_report, feature_vector, manhattan_distance, parse_universe, DensityReport, FeatureVector,
};
pub use conllu::{detokenize, parse_conllu, serialize_conllu, serialize_sentence, Document};
pub use dataset::{transform_dataset, DatasetOutput, FieldSelector};
pub use error::{Error, Result};
pub use eval::{exact_match, paired_bootstrap, token_f1, BootstrapResult};
pub use model::{ParsedSentence, Token};
pub use profile::{load_profile, merge_multi, pervasiveness_to_probability, DialectProfile, FeatureId, Pervasiveness};
pub use provenance::{replay_edits, Edit, Provenance};
pub use rules::{catalog, match_sites, Category, PerturbationRule, Rewrite, Site, Skip};
pub use survey::{
    binarize, select_feature, update_candidates, BinaryProfile, Question, Selection, Session, SessionView, SurveyState,
};
pub use transform::{
    derive_seed, transform, transform_document, transform_sentence, DocumentOutput, SentenceOutput, SplitMix64,
    TransformConfig,
};
