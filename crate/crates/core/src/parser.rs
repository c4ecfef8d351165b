//! Nondeterministic parsing of token lists into active and passive trees.
//!
//! Every reading is returned. Parses are ordered by tense group, then by
//! tense, then modal readings after tensed ones, and finally readings where
//! a trailing PP attaches inside the last noun phrase come before readings
//! where it is a sentence-level PP.

use crate::lexicon::{
    active_verb_form, aux_chain, aux_tense_token, do_support_aux, finite_passive_aux, Lexicon,
    VerbForm,
};
use crate::syntax::{
    ActiveTree, Agreement, NounPhrase, PassiveTree, Polarity, PrepPhrase, Role, Tense,
    AGENT_MARKER, NEGATION,
};

pub type Token = String;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActiveParse {
    pub tree: ActiveTree,
    pub tense: Tense,
    pub subj_agr: Agreement,
    pub obj_agr: Agreement,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PassiveParse {
    pub tree: PassiveTree,
    pub tense: Tense,
    pub subj_agr: Agreement,
    pub agent_agr: Agreement,
}

/// Lowercases, splits on whitespace and drops one trailing period.
pub fn tokenize(line: &str) -> Vec<Token> {
    let lowered = line.trim().to_lowercase();
    let body = lowered.strip_suffix('.').unwrap_or(&lowered);
    body.split_whitespace().map(str::to_owned).collect()
}

/// Every noun phrase that can start `tokens`, with its agreement and the
/// unconsumed suffix. Pronouns are only accepted in the case form of `role`.
pub fn parse_np<'t>(
    tokens: &'t [Token],
    role: Role,
    lexicon: &Lexicon,
) -> Vec<(NounPhrase, Agreement, &'t [Token])> {
    let mut out = Vec::new();
    for (np, agr, rest) in parse_bare_np(tokens, role, lexicon) {
        let attached = match rest.split_first() {
            Some((prep, after)) if lexicon.is_preposition(prep) => {
                parse_np(after, Role::Object, lexicon)
                    .into_iter()
                    .map(|(inner, _, rest)| {
                        (
                            np.clone().with_pp(PrepPhrase::new(prep.clone(), inner)),
                            agr,
                            rest,
                        )
                    })
                    .collect()
            }
            _ => Vec::new(),
        };
        out.push((np, agr, rest));
        out.extend(attached);
    }
    out
}

/// Noun phrases without a trailing PP.
fn parse_bare_np<'t>(
    tokens: &'t [Token],
    role: Role,
    lexicon: &Lexicon,
) -> Vec<(NounPhrase, Agreement, &'t [Token])> {
    let mut out = Vec::new();
    let Some((first, rest)) = tokens.split_first() else {
        return out;
    };
    if let Some(entry) = lexicon.pronoun_by_form(first, role) {
        out.push((NounPhrase::pro(first.clone()), entry.agreement, rest));
    }
    if lexicon.is_determiner(first) {
        nominal(Some(first), rest, Vec::new(), lexicon, &mut out);
    }
    nominal(None, tokens, Vec::new(), lexicon, &mut out);
    out
}

/// adjective* noun
fn nominal<'t>(
    det: Option<&Token>,
    tokens: &'t [Token],
    adjectives: Vec<Token>,
    lexicon: &Lexicon,
    out: &mut Vec<(NounPhrase, Agreement, &'t [Token])>,
) {
    let Some((word, rest)) = tokens.split_first() else {
        return;
    };
    for agr in lexicon.noun_agreements(word) {
        out.push((
            NounPhrase::Full {
                det: det.cloned(),
                adjectives: adjectives.clone(),
                noun: word.clone(),
                pp: None,
            },
            agr,
            rest,
        ));
    }
    if lexicon.is_adjective(word) {
        let mut more = adjectives;
        more.push(word.clone());
        nominal(det, rest, more, lexicon, out);
    }
}

/// Consumes the auxiliary chain, with "not" after its first element when
/// negative. An empty chain cannot carry negation.
fn match_auxiliaries<'t>(
    tokens: &'t [Token],
    chain: &[&str],
    negative: bool,
) -> Option<&'t [Token]> {
    let (first, others) = match chain.split_first() {
        Some(split) => split,
        None => return (!negative).then_some(tokens),
    };
    let mut rest = expect(tokens, first)?;
    if negative {
        rest = expect(rest, NEGATION)?;
    }
    others.iter().try_fold(rest, |rest, aux| expect(rest, aux))
}

fn expect<'t>(tokens: &'t [Token], word: &str) -> Option<&'t [Token]> {
    match tokens.split_first() {
        Some((head, rest)) if head == word => Some(rest),
        _ => None,
    }
}

/// A noun phrase in object case, optionally followed by a sentence-level PP,
/// that together consume all of `tokens`.
fn parse_tail(
    tokens: &[Token],
    lexicon: &Lexicon,
) -> Vec<(NounPhrase, Agreement, Option<PrepPhrase>)> {
    let mut out = Vec::new();
    for (np, agr, rest) in parse_np(tokens, Role::Object, lexicon) {
        if rest.is_empty() {
            out.push((np, agr, None));
            continue;
        }
        let (prep, after) = rest.split_first().expect("non-empty");
        if !lexicon.is_preposition(prep) {
            continue;
        }
        for (inner, _, remaining) in parse_np(after, Role::Object, lexicon) {
            if remaining.is_empty() {
                out.push((np.clone(), agr, Some(PrepPhrase::new(prep.clone(), inner))));
            }
        }
    }
    out
}

/// The auxiliary configuration of one clause reading.
struct Frame {
    tense: Tense,
    polarity: Polarity,
    modal: Option<Token>,
}

fn frames<'a>(
    after_subject: &'a [Token],
    lexicon: &'a Lexicon,
) -> impl Iterator<Item = Frame> + 'a {
    let tensed = Tense::ALL.into_iter().flat_map(|tense| {
        Polarity::ALL.into_iter().map(move |polarity| Frame {
            tense,
            polarity,
            modal: None,
        })
    });
    let modal = after_subject
        .first()
        .filter(|t| lexicon.is_modal(t))
        .cloned()
        .into_iter()
        .flat_map(|m| {
            Polarity::ALL.into_iter().map(move |polarity| Frame {
                tense: Tense::SimplePresent,
                polarity,
                modal: Some(m.clone()),
            })
        });
    tensed.chain(modal)
}

fn order_key(tense: Tense, modal: bool, final_pp: bool) -> (u8, usize, bool, bool) {
    (tense.group(), tense.index(), modal, final_pp)
}

/// All active readings of `tokens`.
pub fn parse_active(tokens: &[Token], lexicon: &Lexicon) -> Vec<ActiveParse> {
    let mut out = Vec::new();
    for (subject, subj_agr, after_subject) in parse_np(tokens, Role::Subject, lexicon) {
        for frame in frames(after_subject, lexicon) {
            let negative = frame.polarity.is_negative();
            let (chain, form): (Vec<&str>, VerbForm) = match (&frame.modal, frame.tense.group()) {
                (Some(m), _) => (vec![m.as_str()], VerbForm::Base),
                (None, 1) if negative => (
                    vec![do_support_aux(frame.tense, subj_agr).expect("simple tense")],
                    VerbForm::Base,
                ),
                (None, _) => (
                    aux_chain(frame.tense, subj_agr),
                    active_verb_form(frame.tense, subj_agr),
                ),
            };
            let Some(at_verb) = match_auxiliaries(after_subject, &chain, negative) else {
                continue;
            };
            let Some((verb, after_verb)) = at_verb.split_first() else {
                continue;
            };
            if !lexicon.has_verb_form(verb, form) {
                continue;
            }
            let aux: Vec<Token> = if frame.modal.is_some() {
                Vec::new()
            } else {
                chain.iter().map(|s| (*s).to_owned()).collect()
            };
            for (object, obj_agr, final_pp) in parse_tail(after_verb, lexicon) {
                out.push(ActiveParse {
                    tree: ActiveTree {
                        subject: subject.clone(),
                        modal: frame.modal.clone(),
                        aux: aux.clone(),
                        polarity: frame.polarity,
                        verb: verb.clone(),
                        object,
                        final_pp,
                    },
                    tense: frame.tense,
                    subj_agr,
                    obj_agr,
                });
            }
        }
    }
    out.sort_by_key(|p| order_key(p.tense, p.tree.modal.is_some(), p.tree.final_pp.is_some()));
    out
}

/// All passive readings of `tokens`.
pub fn parse_passive(tokens: &[Token], lexicon: &Lexicon) -> Vec<PassiveParse> {
    let mut out = Vec::new();
    for (subject, subj_agr, after_subject) in parse_np(tokens, Role::Subject, lexicon) {
        for frame in frames(after_subject, lexicon) {
            let negative = frame.polarity.is_negative();
            let (chain, aux_tense): (Vec<&str>, Option<&str>) =
                match (&frame.modal, frame.tense.group()) {
                    (Some(m), _) => (vec![m.as_str()], Some("be")),
                    (None, 1) => (
                        vec![finite_passive_aux(frame.tense, subj_agr).expect("simple tense")],
                        None,
                    ),
                    (None, _) => (
                        aux_chain(frame.tense, subj_agr),
                        aux_tense_token(frame.tense),
                    ),
                };
            let Some(mut rest) = match_auxiliaries(after_subject, &chain, negative) else {
                continue;
            };
            if let Some(marker) = aux_tense {
                let Some(r) = expect(rest, marker) else {
                    continue;
                };
                rest = r;
            }
            let Some((verb, after_verb)) = rest.split_first() else {
                continue;
            };
            if !lexicon.has_verb_form(verb, VerbForm::PastParticiple) {
                continue;
            }
            let Some(after_by) = expect(after_verb, AGENT_MARKER) else {
                continue;
            };
            let aux: Vec<Token> = if frame.modal.is_some() {
                Vec::new()
            } else {
                chain.iter().map(|s| (*s).to_owned()).collect()
            };
            for (agent, agent_agr, final_pp) in parse_tail(after_by, lexicon) {
                out.push(PassiveParse {
                    tree: PassiveTree {
                        subject: subject.clone(),
                        modal: frame.modal.clone(),
                        aux: aux.clone(),
                        polarity: frame.polarity,
                        aux_tense: aux_tense.map(str::to_owned),
                        verb: verb.clone(),
                        agent,
                        final_pp,
                    },
                    tense: frame.tense,
                    subj_agr,
                    agent_agr,
                });
            }
        }
    }
    out.sort_by_key(|p| order_key(p.tense, p.tree.modal.is_some(), p.tree.final_pp.is_some()));
    out
}
