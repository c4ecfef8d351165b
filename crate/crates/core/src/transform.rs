//! The representation-level relation between active and passive trees.
//!
//! Both directions rebuild the auxiliaries from the tense and the agreement
//! of the *new* subject; everything else (determiners, adjectives, PPs,
//! polarity, modal) is carried across untouched.

use crate::error::Error;
use crate::lexicon::{
    active_verb_form, aux_chain, aux_tense_token, do_support_aux, finite_passive_aux, Lexicon,
    VerbForm,
};
use crate::syntax::{agreement_of, ActiveTree, NounPhrase, PassiveTree, Role, Tense};

/// An active tree, its passive counterpart and the shared tense.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VoicePair {
    pub active: ActiveTree,
    pub passive: PassiveTree,
    pub tense: Tense,
}

/// Puts a pronoun into the case of `target`. Full noun phrases, and any PP a
/// pronoun carries, are returned unchanged.
pub fn swap_role(np: &NounPhrase, target: Role, lexicon: &Lexicon) -> NounPhrase {
    match np {
        NounPhrase::Pro { pronoun, pp } => {
            let pronoun = lexicon
                .pronoun_by_any_form(pronoun)
                .map_or_else(|| pronoun.clone(), |entry| entry.form(target).to_owned());
            NounPhrase::Pro {
                pronoun,
                pp: pp.clone(),
            }
        }
        full @ NounPhrase::Full { .. } => full.clone(),
    }
}

fn owned(tokens: Vec<&str>) -> Vec<String> {
    tokens.into_iter().map(str::to_owned).collect()
}

fn push_unique<T: PartialEq>(out: &mut Vec<T>, item: T) {
    if !out.contains(&item) {
        out.push(item);
    }
}

/// Active to passive. One tree per distinct participle the active verb form
/// maps to (normally exactly one).
pub fn passivize(
    tree: &ActiveTree,
    tense: Tense,
    lexicon: &Lexicon,
) -> Result<Vec<PassiveTree>, Error> {
    let subj_agr = agreement_of(&tree.subject, lexicon)?;
    let form = if tree.modal.is_some() || (tense.group() == 1 && tree.polarity.is_negative()) {
        VerbForm::Base
    } else {
        active_verb_form(tense, subj_agr)
    };
    let mut participles = Vec::new();
    for entry in lexicon.verbs_with_form(&tree.verb, form) {
        push_unique(&mut participles, entry.past_participle.clone());
    }
    if participles.is_empty() {
        return Err(Error::UnknownWord(tree.verb.clone()));
    }

    let subject = swap_role(&tree.object, Role::Subject, lexicon);
    let agent = swap_role(&tree.subject, Role::Object, lexicon);
    let agr = agreement_of(&subject, lexicon)?;
    let (aux, aux_tense) = if tree.modal.is_some() {
        (Vec::new(), Some("be".to_owned()))
    } else if tense.group() == 1 {
        (vec![finite_passive_aux(tense, agr)?.to_owned()], None)
    } else {
        (
            owned(aux_chain(tense, agr)),
            aux_tense_token(tense).map(str::to_owned),
        )
    };

    Ok(participles
        .into_iter()
        .map(|verb| PassiveTree {
            subject: subject.clone(),
            modal: tree.modal.clone(),
            aux: aux.clone(),
            polarity: tree.polarity,
            aux_tense: aux_tense.clone(),
            verb,
            agent: agent.clone(),
            final_pp: tree.final_pp.clone(),
        })
        .collect())
}

/// Passive to active. A participle shared by several verbs yields one
/// active tree per verb.
pub fn activize(
    tree: &PassiveTree,
    tense: Tense,
    lexicon: &Lexicon,
) -> Result<Vec<ActiveTree>, Error> {
    let entries = lexicon.verbs_with_form(&tree.verb, VerbForm::PastParticiple);
    if entries.is_empty() {
        return Err(Error::UnknownParticiple(tree.verb.clone()));
    }

    let subject = swap_role(&tree.agent, Role::Subject, lexicon);
    let object = swap_role(&tree.subject, Role::Object, lexicon);
    let agr = agreement_of(&subject, lexicon)?;
    let negative = tree.polarity.is_negative();
    let (aux, form) = if tree.modal.is_some() {
        (Vec::new(), VerbForm::Base)
    } else if tense.group() == 1 && negative {
        (vec![do_support_aux(tense, agr)?.to_owned()], VerbForm::Base)
    } else {
        (owned(aux_chain(tense, agr)), active_verb_form(tense, agr))
    };

    let mut out = Vec::new();
    for entry in entries {
        push_unique(
            &mut out,
            ActiveTree {
                subject: subject.clone(),
                modal: tree.modal.clone(),
                aux: aux.clone(),
                polarity: tree.polarity,
                verb: entry.form(form).to_owned(),
                object: object.clone(),
                final_pp: tree.final_pp.clone(),
            },
        );
    }
    Ok(out)
}

/// Passivizes and pairs each result with its source.
pub fn voice_pairs(
    tree: &ActiveTree,
    tense: Tense,
    lexicon: &Lexicon,
) -> Result<Vec<VoicePair>, Error> {
    Ok(passivize(tree, tense, lexicon)?
        .into_iter()
        .map(|passive| VoicePair {
            active: tree.clone(),
            passive,
            tense,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::parse_lexicon_source;
    use crate::parser::{parse_active, parse_passive, tokenize};
    use crate::realizer::{realize_active, realize_passive};
    use crate::syntax::{Polarity, PrepPhrase};

    fn passive_of(s: &str) -> Vec<String> {
        let lex = Lexicon::builtin();
        let p = &parse_active(&tokenize(s), &lex)[0];
        let out = passivize(&p.tree, p.tense, &lex).unwrap();
        assert_eq!(out.len(), 1);
        realize_passive(&out[0])
    }

    fn active_of(s: &str) -> Vec<String> {
        let lex = Lexicon::builtin();
        let p = &parse_passive(&tokenize(s), &lex)[0];
        let out = activize(&p.tree, p.tense, &lex).unwrap();
        assert_eq!(out.len(), 1);
        realize_active(&out[0])
    }

    #[test]
    fn swap_role_examples() {
        let lex = Lexicon::builtin();
        assert_eq!(
            swap_role(&NounPhrase::pro("he"), Role::Object, &lex),
            NounPhrase::pro("him")
        );
        let man = NounPhrase::simple("the", "man");
        assert_eq!(swap_role(&man, Role::Object, &lex), man);
        assert_eq!(
            swap_role(&NounPhrase::pro("them"), Role::Subject, &lex),
            NounPhrase::pro("they")
        );
        let with_pp = NounPhrase::pro("he").with_pp(PrepPhrase::new("in", NounPhrase::pro("it")));
        assert_eq!(
            swap_role(&with_pp, Role::Object, &lex),
            NounPhrase::pro("him").with_pp(PrepPhrase::new("in", NounPhrase::pro("it")))
        );
    }

    #[test]
    fn passivize_examples() {
        assert_eq!(
            passive_of("the man buys an apple"),
            tokenize("an apple is bought by the man")
        );
        assert_eq!(
            passive_of("the man has bought an apple"),
            tokenize("an apple has been bought by the man")
        );
        assert_eq!(
            passive_of("the man does not buy an apple"),
            tokenize("an apple is not bought by the man")
        );
        assert_eq!(passive_of("they love me"), tokenize("i am loved by them"));
        assert_eq!(
            passive_of("the man buys apples"),
            tokenize("apples are bought by the man")
        );
    }

    #[test]
    fn passivize_keeps_sentence_pp_at_the_end() {
        let lex = Lexicon::builtin();
        let parses = parse_active(&tokenize("the boy should bring a pen to the class"), &lex);
        let sentence_pp = parses.iter().find(|p| p.tree.final_pp.is_some()).unwrap();
        let passive = &passivize(&sentence_pp.tree, sentence_pp.tense, &lex).unwrap()[0];
        assert_eq!(
            realize_passive(passive),
            tokenize("a pen should be brought by the boy to the class")
        );
    }

    #[test]
    fn activize_examples() {
        assert_eq!(
            active_of("a small apple should not be bought by him"),
            tokenize("he should not buy a small apple")
        );
        assert_eq!(
            active_of("an apple is bought by the man"),
            tokenize("the man buys an apple")
        );
        assert_eq!(active_of("i am loved by them"), tokenize("they love me"));
        assert_eq!(
            active_of("an apple was not bought by me"),
            tokenize("i did not buy an apple")
        );
        assert_eq!(
            active_of("apples are not bought by me"),
            tokenize("i do not buy apples")
        );
    }

    #[test]
    fn shared_participle_is_enumerated() {
        let lex = parse_lexicon_source(
            "det the\nnoun man men\nverb hang hangs hung hung hanging\n\
             verb hung hungs hung hung hunging",
        )
        .unwrap();
        let passive = PassiveTree {
            subject: NounPhrase::simple("the", "man"),
            modal: None,
            aux: vec!["was".into()],
            polarity: Polarity::Positive,
            aux_tense: None,
            verb: "hung".into(),
            agent: NounPhrase::simple("the", "men"),
            final_pp: None,
        };
        // both past forms are "hung", so the two readings collapse
        let actives = activize(&passive, Tense::SimplePast, &lex).unwrap();
        assert_eq!(actives.len(), 1);
        assert_eq!(actives[0].verb, "hung");
        let actives = activize(&passive, Tense::SimplePresent, &lex).unwrap();
        let verbs: Vec<_> = actives.iter().map(|a| a.verb.as_str()).collect();
        assert_eq!(verbs, ["hang", "hung"]);
    }

    #[test]
    fn unknown_verb_errors() {
        let lex = Lexicon::builtin();
        let mut tree = parse_active(&tokenize("he buys it"), &lex)[0].tree.clone();
        tree.verb = "zaps".into();
        assert!(matches!(
            passivize(&tree, Tense::SimplePresent, &lex),
            Err(Error::UnknownWord(_))
        ));
        let mut passive = parse_passive(&tokenize("it is bought by him"), &lex)[0]
            .tree
            .clone();
        passive.verb = "zapped".into();
        assert!(matches!(
            activize(&passive, Tense::SimplePresent, &lex),
            Err(Error::UnknownParticiple(_))
        ));
    }

    #[test]
    fn involution_across_tenses() {
        let lex = Lexicon::builtin();
        for tense in Tense::ALL {
            for polarity in Polarity::ALL {
                for subject in ["i", "he", "they", "the man"] {
                    let subject_np = if subject.contains(' ') {
                        NounPhrase::simple("the", "man")
                    } else {
                        NounPhrase::pro(subject)
                    };
                    let agr = agreement_of(&subject_np, &lex).unwrap();
                    let negative = polarity.is_negative();
                    let (aux, form) = if tense.group() == 1 && negative {
                        (vec![do_support_aux(tense, agr).unwrap()], VerbForm::Base)
                    } else {
                        (aux_chain(tense, agr), active_verb_form(tense, agr))
                    };
                    let buy = lex.verbs().next().unwrap();
                    let active = ActiveTree {
                        subject: subject_np,
                        modal: None,
                        aux: owned(aux),
                        polarity,
                        verb: buy.form(form).to_owned(),
                        object: NounPhrase::pro("me"),
                        final_pp: None,
                    };
                    let passives = passivize(&active, tense, &lex).unwrap();
                    assert_eq!(passives.len(), 1);
                    let back = activize(&passives[0], tense, &lex).unwrap();
                    assert_eq!(back, vec![active.clone()], "{tense} {polarity:?} {subject}");
                    let realized = realize_passive(&passives[0]);
                    assert!(!realized
                        .iter()
                        .any(|t| ["do", "does", "did"].contains(&t.as_str())));
                    assert_eq!(realized[0], "i");
                }
            }
        }
    }
}
