//! Flattens a document into the linear sequence of centering units.
//!
//! Main clauses, conjuncts and tensed adjuncts each head a unit. Tenseless
//! adjuncts merge into their host's unit, with their mentions appended after
//! the host's. Tensed complements merge into the matrix unit unless
//! `split_complements` is set. Relative and impersonal clauses contribute
//! nothing: their mentions are dropped from centering.

use thiserror::Error;

use crate::corpus::{Clause, ClauseKind, Document, Mention, VerbalComplex};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SegmentConfig {
    pub split_complements: bool,
}

/// The unit over which Cb/Cf/Cp are computed.
#[derive(Debug, Clone, PartialEq)]
pub struct CenteringUnit {
    /// Id of the head clause.
    pub id: String,
    pub source_clauses: Vec<String>,
    /// Merged mention list: head clause first, then merged clauses in
    /// surface order, each clause's mentions ordered by surface_pos.
    pub mentions: Vec<Mention>,
    pub verbal_complex: VerbalComplex,
    pub other_construction: bool,
    pub position: usize,
}

#[derive(Debug, Error)]
pub enum SegmentError {
    #[error("clause `{clause}` attaches to unresolvable clause `{target}`")]
    DanglingAttach { clause: String, target: String },
    #[error("attachment cycle involving clause `{0}`")]
    AttachmentCycle(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Disposition {
    Head,
    MergeInto(usize),
    Drop,
}

fn resolve_disposition(
    idx: usize,
    clauses: &[&Clause],
    config: SegmentConfig,
    memo: &mut [Option<Disposition>],
    depth: usize,
) -> Result<Disposition, SegmentError> {
    if let Some(d) = memo[idx] {
        return Ok(d);
    }
    if depth > clauses.len() {
        return Err(SegmentError::AttachmentCycle(clauses[idx].id.clone()));
    }
    let clause = clauses[idx];
    let disposition = match clause.kind {
        ClauseKind::Main | ClauseKind::Conjunct | ClauseKind::TensedAdjunct => Disposition::Head,
        ClauseKind::Relative | ClauseKind::Impersonal => Disposition::Drop,
        ClauseKind::Complement if config.split_complements => Disposition::Head,
        ClauseKind::Complement | ClauseKind::TenselessAdjunct => {
            let target = clause
                .attach_to
                .as_deref()
                .ok_or_else(|| SegmentError::DanglingAttach {
                    clause: clause.id.clone(),
                    target: String::from("<missing>"),
                })?;
            let target_idx = clauses.iter().position(|c| c.id == target).ok_or_else(|| {
                SegmentError::DanglingAttach {
                    clause: clause.id.clone(),
                    target: target.to_string(),
                }
            })?;
            match resolve_disposition(target_idx, clauses, config, memo, depth + 1)? {
                Disposition::Head => Disposition::MergeInto(target_idx),
                Disposition::MergeInto(h) => Disposition::MergeInto(h),
                Disposition::Drop => Disposition::Drop,
            }
        }
    };
    memo[idx] = Some(disposition);
    Ok(disposition)
}

/// Segments a document into centering units in surface order.
pub fn segment(doc: &Document, config: SegmentConfig) -> Result<Vec<CenteringUnit>, SegmentError> {
    let mut units = Vec::new();
    for sentence in &doc.sentences {
        let mut clauses: Vec<&Clause> = sentence.clauses.iter().collect();
        clauses.sort_by_key(|c| c.order);
        let mut memo = vec![None; clauses.len()];
        for idx in 0..clauses.len() {
            resolve_disposition(idx, &clauses, config, &mut memo, 0)?;
        }
        // Heads in surface order, then merged clauses appended to their
        // head's unit, likewise in surface order.
        let mut sentence_units: Vec<(usize, CenteringUnit)> = Vec::new();
        for (idx, clause) in clauses.iter().enumerate() {
            if memo[idx] == Some(Disposition::Head) {
                let mut mentions = clause.mentions.clone();
                mentions.sort_by_key(|m| m.surface_pos);
                sentence_units.push((
                    idx,
                    CenteringUnit {
                        id: clause.id.clone(),
                        source_clauses: vec![clause.id.clone()],
                        mentions,
                        verbal_complex: clause.verbal_complex.clone(),
                        other_construction: clause.other_construction,
                        position: 0,
                    },
                ));
            }
        }
        for (idx, clause) in clauses.iter().enumerate() {
            if let Some(Disposition::MergeInto(head)) = memo[idx] {
                let unit = sentence_units
                    .iter_mut()
                    .find(|(h, _)| *h == head)
                    .map(|(_, u)| u)
                    .expect("merge target resolved to a head");
                let mut mentions = clause.mentions.clone();
                mentions.sort_by_key(|m| m.surface_pos);
                unit.source_clauses.push(clause.id.clone());
                unit.other_construction |= clause.other_construction;
                unit.mentions.extend(mentions);
            }
        }
        units.extend(sentence_units.into_iter().map(|(_, u)| u));
    }
    for (position, unit) in units.iter_mut().enumerate() {
        unit.position = position;
    }
    Ok(units)
}

/// Number of centering units the document flattens into.
pub fn unit_count(doc: &Document, config: SegmentConfig) -> Result<usize, SegmentError> {
    Ok(segment(doc, config)?.len())
}
