//! Annotated-discourse data model: entities, mentions, clauses, documents.
//!
//! Documents arrive as UTF-8 JSON, one document per file. Parsing resolves
//! entity references eagerly and rejects duplicate ids; structural invariants
//! are checked separately by [`validate_document`], which reports violations
//! as data rather than errors.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gender {
    #[serde(rename = "masc")]
    Masculine,
    #[serde(rename = "fem")]
    Feminine,
    #[serde(rename = "unspec")]
    Unspecified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Number {
    #[serde(rename = "sg")]
    Singular,
    #[serde(rename = "pl")]
    Plural,
    #[serde(rename = "unspec")]
    Unspecified,
}

/// Grammatical person, serialized as the bare integer 1, 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Person {
    First,
    Second,
    Third,
}

impl TryFrom<u8> for Person {
    type Error = String;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(Person::First),
            2 => Ok(Person::Second),
            3 => Ok(Person::Third),
            other => Err(format!("person must be 1, 2 or 3, got {other}")),
        }
    }
}

impl From<Person> for u8 {
    fn from(value: Person) -> Self {
        match value {
            Person::First => 1,
            Person::Second => 2,
            Person::Third => 3,
        }
    }
}

/// A discourse referent: an individual, a set of referents, or a situational
/// participant (speaker/addressee).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entity {
    pub id: String,
    pub animate: bool,
    pub gender: Gender,
    pub number: Number,
    pub person: Person,
    pub is_set: bool,
    pub members: Vec<String>,
    pub deictic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Form {
    #[serde(rename = "null")]
    NullSubject,
    #[serde(rename = "strong")]
    StrongPronoun,
    #[serde(rename = "clitic")]
    WeakClitic,
    #[serde(rename = "np")]
    FullNp,
    #[serde(rename = "name")]
    Name,
    #[serde(rename = "other")]
    OtherAnaphor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Subject,
    Object2,
    Object,
    Oblique,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CliticPosition {
    Climbed,
    InSitu,
}

/// One realization of an entity inside a clause.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Mention {
    pub id: String,
    pub entity: String,
    pub form: Form,
    pub role: Role,
    pub surface_pos: u32,
    pub empathy: bool,
    pub qis_or_arb: bool,
    pub clitic_position: Option<CliticPosition>,
    pub possessor: Option<String>,
    pub constrained: bool,
}

/// The verbal forms carrying tense and agreement: the "early clue" window
/// for null-subject interpretation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerbalComplex {
    pub tensed: bool,
    pub agr_gender: Gender,
    pub agr_number: Number,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseKind {
    Main,
    Conjunct,
    TensedAdjunct,
    TenselessAdjunct,
    Complement,
    Relative,
    Impersonal,
}

impl ClauseKind {
    /// Kinds whose attach_to field must be present.
    pub fn requires_attachment(self) -> bool {
        matches!(
            self,
            ClauseKind::TensedAdjunct
                | ClauseKind::TenselessAdjunct
                | ClauseKind::Complement
                | ClauseKind::Relative
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Clause {
    pub id: String,
    pub kind: ClauseKind,
    pub attach_to: Option<String>,
    pub order: i64,
    pub other_construction: bool,
    pub verbal_complex: VerbalComplex,
    pub mentions: Vec<Mention>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sentence {
    pub id: String,
    pub clauses: Vec<Clause>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub doc_id: String,
    pub entities: Vec<Entity>,
    pub sentences: Vec<Sentence>,
}

impl Document {
    pub fn entity(&self, id: &str) -> Option<&Entity> {
        self.entities.iter().find(|e| e.id == id)
    }

    /// Clauses in document order (sentence order, then surface order within
    /// each sentence).
    pub fn clauses_in_order(&self) -> Vec<&Clause> {
        let mut out = Vec::new();
        for sentence in &self.sentences {
            let mut clauses: Vec<&Clause> = sentence.clauses.iter().collect();
            clauses.sort_by_key(|c| c.order);
            out.extend(clauses);
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("reference to undeclared entity `{id}`")]
    DanglingReference { id: String },
}

/// Parses and reference-checks a document file.
///
/// Syntax errors carry line/column from the JSON reader. Duplicate ids and
/// dangling entity references (mention entities, possessors, set members)
/// are rejected here; everything else is a matter for [`validate_document`].
pub fn parse_document(bytes: &[u8]) -> Result<Document, ParseError> {
    let doc: Document = serde_json::from_slice(bytes).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut entity_ids = HashSet::new();
    for entity in &doc.entities {
        if !entity_ids.insert(entity.id.as_str()) {
            return Err(ParseError::DuplicateId {
                kind: "entity",
                id: entity.id.clone(),
            });
        }
    }
    let mut sentence_ids = HashSet::new();
    let mut clause_ids = HashSet::new();
    let mut mention_ids = HashSet::new();
    for sentence in &doc.sentences {
        if !sentence_ids.insert(sentence.id.as_str()) {
            return Err(ParseError::DuplicateId {
                kind: "sentence",
                id: sentence.id.clone(),
            });
        }
        for clause in &sentence.clauses {
            if !clause_ids.insert(clause.id.as_str()) {
                return Err(ParseError::DuplicateId {
                    kind: "clause",
                    id: clause.id.clone(),
                });
            }
            for mention in &clause.mentions {
                if !mention_ids.insert(mention.id.as_str()) {
                    return Err(ParseError::DuplicateId {
                        kind: "mention",
                        id: mention.id.clone(),
                    });
                }
                if !entity_ids.contains(mention.entity.as_str()) {
                    return Err(ParseError::DanglingReference {
                        id: mention.entity.clone(),
                    });
                }
                if let Some(possessor) = &mention.possessor {
                    if !entity_ids.contains(possessor.as_str()) {
                        return Err(ParseError::DanglingReference {
                            id: possessor.clone(),
                        });
                    }
                }
            }
        }
    }
    for entity in &doc.entities {
        for member in &entity.members {
            if !entity_ids.contains(member.as_str()) {
                return Err(ParseError::DanglingReference { id: member.clone() });
            }
        }
    }
    Ok(doc)
}

/// Serializes a document in the canonical field order, pretty-printed.
pub fn serialize_document(doc: &Document) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(doc).expect("document serialization is infallible");
    bytes.push(b'\n');
    bytes
}

/// A single invariant violation, naming the offending id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub offender: String,
    pub message: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.offender, self.message)
    }
}

fn violation(offender: &str, message: impl Into<String>) -> Violation {
    Violation {
        offender: offender.to_string(),
        message: message.into(),
    }
}

/// Checks every structural invariant and returns the violations found.
/// An empty list means the document is well formed.
pub fn validate_document(doc: &Document) -> Vec<Violation> {
    let mut out = Vec::new();
    let entity_map: HashMap<&str, &Entity> =
        doc.entities.iter().map(|e| (e.id.as_str(), e)).collect();

    for entity in &doc.entities {
        if entity.is_set && entity.members.is_empty() {
            out.push(violation(&entity.id, "is_set entity has no members"));
        }
        if !entity.is_set && !entity.members.is_empty() {
            out.push(violation(&entity.id, "non-set entity declares members"));
        }
        if entity.deictic && entity.person == Person::Third {
            out.push(violation(&entity.id, "third-person entity marked deictic"));
        }
        if set_membership_cycles(entity, &entity_map) {
            out.push(violation(&entity.id, "set membership cycle"));
        }
    }

    for sentence in &doc.sentences {
        let clause_map: HashMap<&str, &Clause> = sentence
            .clauses
            .iter()
            .map(|c| (c.id.as_str(), c))
            .collect();
        let mut orders = HashSet::new();
        for clause in &sentence.clauses {
            if !orders.insert(clause.order) {
                out.push(violation(
                    &clause.id,
                    format!("duplicate clause order {} within sentence", clause.order),
                ));
            }
            match (&clause.attach_to, clause.kind.requires_attachment()) {
                (None, true) => out.push(violation(
                    &clause.id,
                    "subordinate clause is missing attach_to",
                )),
                (Some(_), false) => out.push(violation(
                    &clause.id,
                    "attach_to set on a clause kind that takes none",
                )),
                (Some(target), true) if !clause_map.contains_key(target.as_str()) => out.push(
                    violation(&clause.id, format!("attach_to `{target}` does not resolve")),
                ),
                _ => {}
            }
            if !clause.verbal_complex.tensed
                && (clause.verbal_complex.agr_gender != Gender::Unspecified
                    || clause.verbal_complex.agr_number != Number::Unspecified)
            {
                out.push(violation(
                    &clause.id,
                    "untensed verbal complex carries agreement features",
                ));
            }
            let subjects = clause
                .mentions
                .iter()
                .filter(|m| m.role == Role::Subject)
                .count();
            if subjects > 1 {
                out.push(violation(&clause.id, "clause has more than one subject"));
            }
            for mention in &clause.mentions {
                let is_clitic = mention.form == Form::WeakClitic;
                if is_clitic != mention.clitic_position.is_some() {
                    out.push(violation(
                        &mention.id,
                        "clitic_position set iff form is clitic",
                    ));
                }
                if mention.possessor.as_deref() == Some(mention.entity.as_str()) {
                    out.push(violation(&mention.id, "possessor equals the entity itself"));
                }
            }
        }
        // Attachment cycles, only among resolvable links.
        for clause in &sentence.clauses {
            if attachment_cycles(clause, &clause_map) {
                out.push(violation(&clause.id, "attachment cycle"));
            }
        }
    }
    out
}

fn set_membership_cycles(start: &Entity, entities: &HashMap<&str, &Entity>) -> bool {
    let mut seen = HashSet::new();
    let mut stack: Vec<&str> = start.members.iter().map(String::as_str).collect();
    while let Some(id) = stack.pop() {
        if id == start.id {
            return true;
        }
        if !seen.insert(id) {
            continue;
        }
        if let Some(entity) = entities.get(id) {
            stack.extend(entity.members.iter().map(String::as_str));
        }
    }
    false
}

fn attachment_cycles(start: &Clause, clauses: &HashMap<&str, &Clause>) -> bool {
    let mut seen = HashSet::new();
    let mut current = start;
    while let Some(target) = &current.attach_to {
        if target == &start.id {
            return true;
        }
        if !seen.insert(target.as_str()) {
            return false; // cycle elsewhere, reported for its own start
        }
        match clauses.get(target.as_str()) {
            Some(next) => current = next,
            None => return false,
        }
    }
    false
}

/// The subject pronouns that enter the distribution counts: third-person
/// animate null or strong subjects, not constrained by contraindexing, and
/// not inside impersonal constructions or relative clauses.
pub fn eligible_pronouns(doc: &Document) -> Vec<&Mention> {
    let mut out = Vec::new();
    for clause in doc.clauses_in_order() {
        if matches!(clause.kind, ClauseKind::Impersonal | ClauseKind::Relative) {
            continue;
        }
        let mut mentions: Vec<&Mention> = clause.mentions.iter().collect();
        mentions.sort_by_key(|m| m.surface_pos);
        for mention in mentions {
            if mention.role != Role::Subject {
                continue;
            }
            if !matches!(mention.form, Form::NullSubject | Form::StrongPronoun) {
                continue;
            }
            if mention.constrained {
                continue;
            }
            let entity = doc
                .entity(&mention.entity)
                .expect("references resolved at parse time");
            if entity.person == Person::Third && entity.animate {
                out.push(mention);
            }
        }
    }
    out
}
