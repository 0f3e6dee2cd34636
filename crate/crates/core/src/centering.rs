//! Cb/Cf/Cp computation and transition classification.
//!
//! The Cf ranking is the extended ordering
//! `empathy > subject > object2 > object > others > qis/pro_arb`,
//! with possessors ranked adjacent to the possessed NP and situational
//! deictics kept off the list entirely. Transitions cover the classic four
//! plus CENT-EST (center establishment from global focus) and OTHER
//! (annotated parallelism/set-building constructions), and every CONTINUE
//! is sub-labelled by the transition that precedes it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::corpus::{Document, Form, Mention, Person, Role};
use crate::segment::{segment, CenteringUnit, SegmentConfig, SegmentError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Transition {
    First,
    Continue,
    Retain,
    SmoothShift,
    RoughShift,
    CentEst,
    Other,
}

/// A CONTINUE classified by the transition preceding it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Bigram {
    ContCont,
    RetCont,
    ShiftCont,
}

/// Per-unit centering result. Serializes as one JSON-lines record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenteringState {
    pub unit: String,
    pub cf: Vec<String>,
    pub cb: Option<String>,
    pub cp: Option<String>,
    pub transition: Transition,
    pub bigram: Option<Bigram>,
}

/// Entities available beyond the previous unit's Cf list: everything
/// mentioned earlier in the document, plus all situational deictics.
#[derive(Debug, Clone, Default)]
pub struct GlobalFocus {
    entities: BTreeSet<String>,
}

impl GlobalFocus {
    /// Seeds the focus with the document's deictic entities.
    pub fn new(doc: &Document) -> Self {
        GlobalFocus {
            entities: doc
                .entities
                .iter()
                .filter(|e| e.deictic)
                .map(|e| e.id.clone())
                .collect(),
        }
    }

    pub fn contains(&self, entity: &str) -> bool {
        self.entities.contains(entity)
    }

    /// Adds everything the unit realizes (mention entities and possessors).
    pub fn absorb(&mut self, unit: &CenteringUnit) {
        for mention in &unit.mentions {
            self.entities.insert(mention.entity.clone());
            if let Some(possessor) = &mention.possessor {
                self.entities.insert(possessor.clone());
            }
        }
    }

    pub fn entities(&self) -> impl Iterator<Item = &str> {
        self.entities.iter().map(String::as_str)
    }
}

fn rank_class(mention: &Mention) -> u8 {
    if mention.qis_or_arb {
        5
    } else if mention.empathy {
        0
    } else {
        match mention.role {
            Role::Subject => 1,
            Role::Object2 => 2,
            Role::Object => 3,
            Role::Oblique | Role::Other => 4,
        }
    }
}

/// The ranked Cf list of a unit, highest first.
///
/// Ties within a rank class follow the unit's merged mention order (surface
/// order, host clause first). A possessor is inserted immediately before the
/// possessed entity when the latter is inanimate, immediately after when
/// animate. Deictic entities are omitted; duplicates keep their
/// highest-ranked occurrence.
pub fn rank_cf(unit: &CenteringUnit, doc: &Document) -> Vec<String> {
    let mut ranked: Vec<(u8, usize, &Mention)> = unit
        .mentions
        .iter()
        .enumerate()
        .map(|(idx, m)| (rank_class(m), idx, m))
        .collect();
    ranked.sort_by_key(|(class, idx, _)| (*class, *idx));

    let is_deictic = |id: &str| doc.entity(id).map(|e| e.deictic).unwrap_or(false);
    let mut cf: Vec<String> = Vec::new();
    let push = |cf: &mut Vec<String>, id: &str| {
        if !is_deictic(id) && !cf.iter().any(|e| e == id) {
            cf.push(id.to_string());
        }
    };
    for (_, _, mention) in ranked {
        let possessed = mention.entity.as_str();
        match mention.possessor.as_deref() {
            Some(possessor) => {
                let possessed_animate = doc
                    .entity(possessed)
                    .map(|e| e.animate)
                    .unwrap_or(false);
                if possessed_animate {
                    push(&mut cf, possessed);
                    push(&mut cf, possessor);
                } else {
                    push(&mut cf, possessor);
                    push(&mut cf, possessed);
                }
            }
            None => push(&mut cf, possessed),
        }
    }
    cf
}

/// Entities a unit realizes: mention entities plus possessors. Set members
/// do not count as realizations of the set (or vice versa).
pub fn realized_entities(unit: &CenteringUnit) -> BTreeSet<&str> {
    let mut out = BTreeSet::new();
    for mention in &unit.mentions {
        out.insert(mention.entity.as_str());
        if let Some(possessor) = &mention.possessor {
            out.insert(possessor.as_str());
        }
    }
    out
}

/// The backward-looking center: the highest-ranked element of the previous
/// unit's Cf list realized in this unit.
pub fn compute_cb(unit: &CenteringUnit, prev: Option<&CenteringState>) -> Option<String> {
    let prev = prev?;
    let realized = realized_entities(unit);
    prev.cf
        .iter()
        .find(|e| realized.contains(e.as_str()))
        .cloned()
}

/// The unit's eligible subject pronoun, if any: a third-person animate
/// null or strong subject not constrained by contraindexing.
pub fn eligible_subject_pronoun<'a>(unit: &'a CenteringUnit, doc: &Document) -> Option<&'a Mention> {
    unit.mentions.iter().find(|m| {
        m.role == Role::Subject
            && matches!(m.form, Form::NullSubject | Form::StrongPronoun)
            && !m.constrained
            && doc
                .entity(&m.entity)
                .map(|e| e.person == Person::Third && e.animate)
                .unwrap_or(false)
    })
}

/// Classifies the transition into the unit.
///
/// OTHER is an explicit annotation and takes precedence over CENT-EST.
/// CENT-EST fires when the unit's eligible pronoun picks up an entity that
/// is off the previous Cf list but in global focus — including a member of
/// a set entity on the previous Cf list — or when no backward-looking
/// center exists at all despite a preceding unit.
pub fn classify_transition(
    prev: Option<&CenteringState>,
    unit: &CenteringUnit,
    cb: Option<&str>,
    cf: &[String],
    focus: &GlobalFocus,
    doc: &Document,
) -> Transition {
    let prev = match prev {
        None => return Transition::First,
        Some(prev) => prev,
    };
    if unit.other_construction {
        return Transition::Other;
    }
    if let Some(pronoun) = eligible_subject_pronoun(unit, doc) {
        let entity = pronoun.entity.as_str();
        if !prev.cf.iter().any(|e| e == entity) {
            let set_member = prev.cf.iter().any(|s| {
                doc.entity(s)
                    .map(|e| e.is_set && e.members.iter().any(|m| m == entity))
                    .unwrap_or(false)
            });
            if focus.contains(entity) || set_member {
                return Transition::CentEst;
            }
        }
    }
    let cb = match cb {
        None => return Transition::CentEst,
        Some(cb) => cb,
    };
    let cp = cf.first().map(String::as_str);
    let cb_is_cp = cp == Some(cb);
    let cb_unchanged = prev.cb.as_deref() == Some(cb);
    match (prev.cb.is_none() || cb_unchanged, cb_is_cp) {
        (true, true) => Transition::Continue,
        (_, _) if cb_unchanged && !cb_is_cp => Transition::Retain,
        (_, true) => Transition::SmoothShift,
        (_, false) => Transition::RoughShift,
    }
}

/// Sub-labels a CONTINUE by the transition preceding it.
pub fn bigram_label(prev_transition: Transition, current: Transition) -> Option<Bigram> {
    if current != Transition::Continue {
        return None;
    }
    match prev_transition {
        Transition::Continue => Some(Bigram::ContCont),
        Transition::Retain => Some(Bigram::RetCont),
        Transition::SmoothShift | Transition::RoughShift => Some(Bigram::ShiftCont),
        _ => None,
    }
}

/// Segments a document and folds the centering computation left to right.
pub fn analyze(doc: &Document, config: SegmentConfig) -> Result<Vec<CenteringState>, SegmentError> {
    let units = segment(doc, config)?;
    let mut focus = GlobalFocus::new(doc);
    let mut states: Vec<CenteringState> = Vec::with_capacity(units.len());
    for unit in &units {
        let prev = states.last();
        let cf = rank_cf(unit, doc);
        let cb = compute_cb(unit, prev);
        let transition = classify_transition(prev, unit, cb.as_deref(), &cf, &focus, doc);
        let bigram = prev.and_then(|p| bigram_label(p.transition, transition));
        let cp = cf.first().cloned();
        let state = CenteringState {
            unit: unit.id.clone(),
            cf,
            cb,
            cp,
            transition,
            bigram,
        };
        focus.absorb(unit);
        states.push(state);
    }
    Ok(states)
}

/// Serializes analysis output as JSON lines, one object per unit.
pub fn states_to_json_lines(states: &[CenteringState]) -> String {
    let mut out = String::new();
    for state in states {
        out.push_str(&serde_json::to_string(state).expect("state serialization is infallible"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_document;

    fn analyze_str(text: &str) -> Vec<CenteringState> {
        let doc = parse_document(text.as_bytes()).unwrap();
        analyze(&doc, SegmentConfig::default()).unwrap()
    }

    // Three sentences, one entity: the degenerate continue chain.
    #[test]
    fn single_entity_document_is_first_then_continues() {
        let text = r#"{
          "doc_id": "d", "entities": [
            {"id": "a", "animate": true, "gender": "fem", "number": "sg", "person": 3,
             "is_set": false, "members": [], "deictic": false}],
          "sentences": [
            {"id": "s1", "clauses": [{"id": "c1", "kind": "main", "attach_to": null, "order": 0,
              "other_construction": false,
              "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
              "mentions": [{"id": "m1", "entity": "a", "form": "name", "role": "subject",
                "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                "clitic_position": null, "possessor": null, "constrained": false}]}]},
            {"id": "s2", "clauses": [{"id": "c2", "kind": "main", "attach_to": null, "order": 0,
              "other_construction": false,
              "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
              "mentions": [{"id": "m2", "entity": "a", "form": "null", "role": "subject",
                "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                "clitic_position": null, "possessor": null, "constrained": false}]}]},
            {"id": "s3", "clauses": [{"id": "c3", "kind": "main", "attach_to": null, "order": 0,
              "other_construction": false,
              "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
              "mentions": [{"id": "m3", "entity": "a", "form": "null", "role": "subject",
                "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                "clitic_position": null, "possessor": null, "constrained": false}]}]}
          ]}"#;
        let states = analyze_str(text);
        let transitions: Vec<Transition> = states.iter().map(|s| s.transition).collect();
        assert_eq!(
            transitions,
            vec![Transition::First, Transition::Continue, Transition::Continue]
        );
        assert_eq!(states[1].cb.as_deref(), Some("a"));
        assert_eq!(states[2].bigram, Some(Bigram::ContCont));
    }

    #[test]
    fn bigram_is_defined_only_for_continue() {
        assert_eq!(
            bigram_label(Transition::Retain, Transition::Continue),
            Some(Bigram::RetCont)
        );
        assert_eq!(
            bigram_label(Transition::Continue, Transition::Continue),
            Some(Bigram::ContCont)
        );
        assert_eq!(
            bigram_label(Transition::SmoothShift, Transition::Continue),
            Some(Bigram::ShiftCont)
        );
        assert_eq!(bigram_label(Transition::Continue, Transition::Retain), None);
        assert_eq!(bigram_label(Transition::First, Transition::Continue), None);
        assert_eq!(bigram_label(Transition::CentEst, Transition::Continue), None);
    }

    #[test]
    fn state_serializes_in_declared_key_order() {
        let state = CenteringState {
            unit: "u1".into(),
            cf: vec!["a".into()],
            cb: None,
            cp: Some("a".into()),
            transition: Transition::First,
            bigram: None,
        };
        assert_eq!(
            serde_json::to_string(&state).unwrap(),
            r#"{"unit":"u1","cf":["a"],"cb":null,"cp":"a","transition":"FIRST","bigram":null}"#
        );
    }
}
