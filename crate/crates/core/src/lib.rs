//! Centering-theory analysis of annotated discourse: corpus model,
//! clause-to-unit segmentation, transition classification, null-subject
//! resolution, and pronoun-distribution statistics.

pub mod centering;
pub mod corpus;
pub mod interpret;
pub mod segment;
pub mod stats;

pub use centering::{
    analyze, compute_cb, rank_cf, states_to_json_lines, Bigram, CenteringState, GlobalFocus,
    Transition,
};
pub use corpus::{
    eligible_pronouns, parse_document, serialize_document, validate_document, Clause, ClauseKind,
    CliticPosition, Document, Entity, Form, Gender, Mention, Number, ParseError, Person, Role,
    Sentence, VerbalComplex, Violation,
};
pub use interpret::{
    audit, audit_to_json_lines, extract_clues, predict_form, resolve_null_subject, AuditRecord,
    ClueSet, FormChoice, Resolution, ResolveError,
};
pub use segment::{segment, unit_count, CenteringUnit, SegmentConfig, SegmentError};
pub use stats::{
    chi_square, ContingencyTable, DistributionTable, LabeledRecord, PBracket, PronounForm,
    StatsError, TransitionClass,
};
