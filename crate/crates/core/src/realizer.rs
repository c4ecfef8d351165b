//! Linearization of trees into token lists.

use crate::syntax::{ActiveTree, NounPhrase, PassiveTree, PrepPhrase, AGENT_MARKER, NEGATION};

fn push_np(out: &mut Vec<String>, np: &NounPhrase) {
    match np {
        NounPhrase::Pro { pronoun, pp } => {
            out.push(pronoun.clone());
            if let Some(pp) = pp {
                push_pp(out, pp);
            }
        }
        NounPhrase::Full {
            det,
            adjectives,
            noun,
            pp,
        } => {
            out.extend(det.iter().cloned());
            out.extend(adjectives.iter().cloned());
            out.push(noun.clone());
            if let Some(pp) = pp {
                push_pp(out, pp);
            }
        }
    }
}

fn push_pp(out: &mut Vec<String>, pp: &PrepPhrase) {
    out.push(pp.prep.clone());
    push_np(out, &pp.np);
}

/// Modal or auxiliaries, with "not" after the first of them.
fn push_auxiliaries(out: &mut Vec<String>, modal: Option<&String>, aux: &[String], negative: bool) {
    let mut chain = modal.into_iter().chain(aux);
    if let Some(first) = chain.next() {
        out.push(first.clone());
        if negative {
            out.push(NEGATION.to_owned());
        }
    }
    out.extend(chain.cloned());
}

pub fn realize_np(np: &NounPhrase) -> Vec<String> {
    let mut out = Vec::new();
    push_np(&mut out, np);
    out
}

pub fn realize_active(tree: &ActiveTree) -> Vec<String> {
    let mut out = Vec::new();
    push_np(&mut out, &tree.subject);
    push_auxiliaries(
        &mut out,
        tree.modal.as_ref(),
        &tree.aux,
        tree.polarity.is_negative(),
    );
    out.push(tree.verb.clone());
    push_np(&mut out, &tree.object);
    if let Some(pp) = &tree.final_pp {
        push_pp(&mut out, pp);
    }
    out
}

pub fn realize_passive(tree: &PassiveTree) -> Vec<String> {
    let mut out = Vec::new();
    push_np(&mut out, &tree.subject);
    push_auxiliaries(
        &mut out,
        tree.modal.as_ref(),
        &tree.aux,
        tree.polarity.is_negative(),
    );
    out.extend(tree.aux_tense.iter().cloned());
    out.push(tree.verb.clone());
    out.push(AGENT_MARKER.to_owned());
    push_np(&mut out, &tree.agent);
    if let Some(pp) = &tree.final_pp {
        push_pp(&mut out, pp);
    }
    out
}
