//! Null-subject interpretation from verbal-complex clues.
//!
//! The clue window for resolving a null subject is the syntactic context up
//! to and including the verbal forms carrying tense and agreement: finite
//! and participial agreement features, plus clitics that precede those
//! forms (climbed clitics). A clitic sitting on a lower infinitive arrives
//! too late to guide the initial interpretation; when it forces a revision,
//! the effect is a garden path.

use serde::Serialize;
use thiserror::Error;

use crate::centering::{analyze, Bigram, CenteringState, Transition};
use crate::corpus::{CliticPosition, Document, Entity, Form, Gender, Number, Role};
use crate::segment::{segment, CenteringUnit, SegmentConfig, SegmentError};

/// The clues available at the verbal complex, plus the late-arriving ones.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClueSet {
    pub agr_gender: Gender,
    pub agr_number: Number,
    /// Entities of clitics preceding the tensed/agreeing verb forms.
    pub climbed: Vec<String>,
    /// Entities of clitics sitting in situ on a lower infinitive.
    pub late: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub referent: String,
    pub default_was_overridden: bool,
    pub garden_path: bool,
}

#[derive(Debug, Error)]
pub enum ResolveError {
    #[error("no candidate on the previous Cf list is compatible with the clues")]
    Unresolved,
    #[error("unit `{0}` has no null-subject mention")]
    NoNullSubject(String),
}

/// Collects agreement features and partitions clitics into early (climbed)
/// vs late (in situ on an infinitive). A clitic entity appearing in both
/// positions counts as early.
pub fn extract_clues(unit: &CenteringUnit) -> ClueSet {
    let mut climbed = Vec::new();
    let mut late = Vec::new();
    for mention in &unit.mentions {
        if mention.form != Form::WeakClitic {
            continue;
        }
        match mention.clitic_position {
            Some(CliticPosition::Climbed) => {
                if !climbed.contains(&mention.entity) {
                    climbed.push(mention.entity.clone());
                }
            }
            Some(CliticPosition::InSitu) => {
                if !late.contains(&mention.entity) {
                    late.push(mention.entity.clone());
                }
            }
            None => {}
        }
    }
    late.retain(|e| !climbed.contains(e));
    ClueSet {
        agr_gender: unit.verbal_complex.agr_gender,
        agr_number: unit.verbal_complex.agr_number,
        climbed,
        late,
    }
}

fn gender_unifies(entity: Gender, agr: Gender) -> bool {
    entity == Gender::Unspecified || agr == Gender::Unspecified || entity == agr
}

fn number_unifies(entity: Number, agr: Number) -> bool {
    entity == Number::Unspecified || agr == Number::Unspecified || entity == agr
}

/// Compatibility at the verbal complex: agreement unification plus
/// clause-mate contraindexing against climbed clitics.
pub fn compatible_at_verbal_complex(entity: &Entity, clues: &ClueSet) -> bool {
    gender_unifies(entity.gender, clues.agr_gender)
        && number_unifies(entity.number, clues.agr_number)
        && !clues.climbed.iter().any(|e| e == &entity.id)
}

fn compatible_final(entity: &Entity, clues: &ClueSet) -> bool {
    compatible_at_verbal_complex(entity, clues) && !clues.late.iter().any(|e| e == &entity.id)
}

/// Resolves a unit's null subject against the previous Cf list.
///
/// Candidates are scanned in Cf order; the referent is the highest one that
/// survives both the early clues and the late clitics. The garden-path flag
/// fires when the previous Cb was still viable at the verbal complex and
/// only a late clitic ruled it out.
pub fn resolve_null_subject(
    unit: &CenteringUnit,
    prev: &CenteringState,
    clues: &ClueSet,
    doc: &Document,
) -> Result<Resolution, ResolveError> {
    if !unit
        .mentions
        .iter()
        .any(|m| m.role == Role::Subject && m.form == Form::NullSubject)
    {
        return Err(ResolveError::NoNullSubject(unit.id.clone()));
    }
    let candidates: Vec<&Entity> = prev
        .cf
        .iter()
        .filter_map(|id| doc.entity(id))
        .collect();
    let referent = candidates
        .iter()
        .find(|e| compatible_final(e, clues))
        .map(|e| e.id.clone())
        .ok_or(ResolveError::Unresolved)?;

    let default = prev
        .cb
        .as_deref()
        .filter(|cb| prev.cf.iter().any(|e| e == cb));
    let default_was_overridden = default.map(|cb| cb != referent).unwrap_or(false);
    let garden_path = default
        .and_then(|cb| doc.entity(cb))
        .map(|cb| compatible_at_verbal_complex(cb, clues) && clues.late.iter().any(|e| e == &cb.id))
        .unwrap_or(false);
    Ok(Resolution {
        referent,
        default_was_overridden,
        garden_path,
    })
}

/// Recommended pronominal form for the subject slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FormChoice {
    #[serde(rename = "null")]
    NullSubject,
    #[serde(rename = "strong")]
    StrongPronoun,
    #[serde(rename = "either")]
    Either,
}

/// Predicts the pronominal form the transition calls for.
///
/// A CONTINUE takes the null subject, except after a RETAIN, where the
/// corpus shows no categorical preference. A retain or shift takes the
/// null subject only when the early clues already exclude the previous Cb;
/// otherwise it wants the strong pronoun.
pub fn predict_form(
    transition: Transition,
    bigram: Option<Bigram>,
    clues: &ClueSet,
    prev: Option<&CenteringState>,
    doc: &Document,
) -> FormChoice {
    match transition {
        Transition::Continue => {
            if bigram == Some(Bigram::RetCont) {
                FormChoice::Either
            } else {
                FormChoice::NullSubject
            }
        }
        Transition::Retain | Transition::SmoothShift | Transition::RoughShift => {
            let excluded = prev
                .and_then(|p| p.cb.as_deref())
                .and_then(|cb| doc.entity(cb))
                .map(|cb| !compatible_at_verbal_complex(cb, clues))
                .unwrap_or(false);
            if excluded {
                FormChoice::NullSubject
            } else {
                FormChoice::StrongPronoun
            }
        }
        Transition::First | Transition::CentEst | Transition::Other => FormChoice::Either,
    }
}

/// One prediction/realization mismatch found by the audit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub mention: String,
    pub transition: Transition,
    pub bigram: Option<Bigram>,
    pub predicted: FormChoice,
    pub actual: FormChoice,
    pub clues: ClueSet,
}

/// Compares every eligible pronoun's actual form against [`predict_form`]
/// and reports the mismatches in document order.
pub fn audit(doc: &Document, config: SegmentConfig) -> Result<Vec<AuditRecord>, SegmentError> {
    let units = segment(doc, config)?;
    let states = analyze(doc, config)?;
    let mut out = Vec::new();
    for (idx, unit) in units.iter().enumerate() {
        let state = &states[idx];
        let prev = if idx > 0 { Some(&states[idx - 1]) } else { None };
        let clues = extract_clues(unit);
        for mention in &unit.mentions {
            if mention.role != Role::Subject || mention.constrained {
                continue;
            }
            let actual = match mention.form {
                Form::NullSubject => FormChoice::NullSubject,
                Form::StrongPronoun => FormChoice::StrongPronoun,
                _ => continue,
            };
            let eligible = doc
                .entity(&mention.entity)
                .map(|e| e.person == crate::corpus::Person::Third && e.animate)
                .unwrap_or(false);
            if !eligible {
                continue;
            }
            let predicted = predict_form(state.transition, state.bigram, &clues, prev, doc);
            if predicted != FormChoice::Either && predicted != actual {
                out.push(AuditRecord {
                    mention: mention.id.clone(),
                    transition: state.transition,
                    bigram: state.bigram,
                    predicted,
                    actual,
                    clues: clues.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Serializes audit output as JSON lines, one record per mismatch.
pub fn audit_to_json_lines(records: &[AuditRecord]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("record serialization is infallible"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::VerbalComplex;

    fn unit_with(vc: VerbalComplex, mentions: Vec<crate::corpus::Mention>) -> CenteringUnit {
        CenteringUnit {
            id: "u".into(),
            source_clauses: vec!["u".into()],
            mentions,
            verbal_complex: vc,
            other_construction: false,
            position: 1,
        }
    }

    fn mention(id: &str, entity: &str, form: Form, role: Role, clitic: Option<CliticPosition>) -> crate::corpus::Mention {
        crate::corpus::Mention {
            id: id.into(),
            entity: entity.into(),
            form,
            role,
            surface_pos: 0,
            empathy: false,
            qis_or_arb: false,
            clitic_position: clitic,
            possessor: None,
            constrained: false,
        }
    }

    fn entity(id: &str, gender: Gender) -> Entity {
        Entity {
            id: id.into(),
            animate: true,
            gender,
            number: Number::Singular,
            person: crate::corpus::Person::Third,
            is_set: false,
            members: vec![],
            deictic: false,
        }
    }

    fn doc_with(entities: Vec<Entity>) -> Document {
        Document {
            doc_id: "d".into(),
            entities,
            sentences: vec![],
        }
    }

    fn prev_state(cf: &[&str], cb: Option<&str>) -> CenteringState {
        CenteringState {
            unit: "p".into(),
            cf: cf.iter().map(|s| s.to_string()).collect(),
            cb: cb.map(String::from),
            cp: cf.first().map(|s| s.to_string()),
            transition: Transition::Continue,
            bigram: None,
        }
    }

    #[test]
    fn clue_partition_separates_early_and_late_clitics() {
        let unit = unit_with(
            VerbalComplex {
                tensed: true,
                agr_gender: Gender::Masculine,
                agr_number: Number::Singular,
            },
            vec![
                mention("m1", "a", Form::NullSubject, Role::Subject, None),
                mention("m2", "b", Form::WeakClitic, Role::Object, Some(CliticPosition::Climbed)),
                mention("m3", "c", Form::WeakClitic, Role::Object2, Some(CliticPosition::InSitu)),
            ],
        );
        let clues = extract_clues(&unit);
        assert_eq!(clues.climbed, vec!["b"]);
        assert_eq!(clues.late, vec!["c"]);
        assert_eq!(clues.agr_gender, Gender::Masculine);
    }

    #[test]
    fn unmarked_agreement_keeps_the_default_referent() {
        let doc = doc_with(vec![entity("maria", Gender::Feminine), entity("gianni", Gender::Masculine)]);
        let unit = unit_with(
            VerbalComplex {
                tensed: true,
                agr_gender: Gender::Unspecified,
                agr_number: Number::Unspecified,
            },
            vec![mention("m1", "maria", Form::NullSubject, Role::Subject, None)],
        );
        let clues = extract_clues(&unit);
        let prev = prev_state(&["maria", "gianni"], Some("maria"));
        let res = resolve_null_subject(&unit, &prev, &clues, &doc).unwrap();
        assert_eq!(res.referent, "maria");
        assert!(!res.default_was_overridden);
        assert!(!res.garden_path);
    }

    #[test]
    fn masculine_agreement_overrides_the_default() {
        let doc = doc_with(vec![entity("maria", Gender::Feminine), entity("gianni", Gender::Masculine)]);
        let unit = unit_with(
            VerbalComplex {
                tensed: true,
                agr_gender: Gender::Masculine,
                agr_number: Number::Unspecified,
            },
            vec![mention("m1", "gianni", Form::NullSubject, Role::Subject, None)],
        );
        let clues = extract_clues(&unit);
        let prev = prev_state(&["maria", "gianni"], Some("maria"));
        let res = resolve_null_subject(&unit, &prev, &clues, &doc).unwrap();
        assert_eq!(res.referent, "gianni");
        assert!(res.default_was_overridden);
        assert!(!res.garden_path);
    }

    #[test]
    fn no_compatible_candidate_is_an_error() {
        let doc = doc_with(vec![entity("maria", Gender::Feminine)]);
        let unit = unit_with(
            VerbalComplex {
                tensed: true,
                agr_gender: Gender::Masculine,
                agr_number: Number::Unspecified,
            },
            vec![mention("m1", "maria", Form::NullSubject, Role::Subject, None)],
        );
        let clues = extract_clues(&unit);
        let prev = prev_state(&["maria"], Some("maria"));
        assert!(matches!(
            resolve_null_subject(&unit, &prev, &clues, &doc),
            Err(ResolveError::Unresolved)
        ));
    }

    #[test]
    fn predict_form_never_strong_for_cont_cont() {
        let doc = doc_with(vec![]);
        let clues = ClueSet {
            agr_gender: Gender::Unspecified,
            agr_number: Number::Unspecified,
            climbed: vec![],
            late: vec![],
        };
        assert_eq!(
            predict_form(Transition::Continue, Some(Bigram::ContCont), &clues, None, &doc),
            FormChoice::NullSubject
        );
        assert_eq!(
            predict_form(Transition::Continue, Some(Bigram::RetCont), &clues, None, &doc),
            FormChoice::Either
        );
        assert_eq!(
            predict_form(Transition::Retain, None, &clues, None, &doc),
            FormChoice::StrongPronoun
        );
    }
}
