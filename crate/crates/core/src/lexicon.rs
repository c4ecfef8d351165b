//! Word inventory, inflection, pronoun case, and the auxiliary tables that
//! select tense auxiliaries by agreement.
//!
//! The open-class vocabulary is data and can be loaded from a line-based
//! text file:
//!
//! ```text
//! # comment
//! det the
//! noun man men
//! pro he him singular
//! adj small
//! verb buy buys bought bought buying
//! prep on
//! modal should
//! ```
//!
//! Auxiliaries (`is`, `have`, `been`, ...) and `not` are closed-class and
//! live in the tables at the bottom of this module.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::OnceLock;

use indexmap::{IndexMap, IndexSet};

use crate::error::Error;
use crate::syntax::{Agreement, Role, Tense, NEGATION};

const BUILTIN_SOURCE: &str = include_str!("../data/builtin.lex");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerbForm {
    Base,
    ThirdSg,
    Past,
    PastParticiple,
    PresentParticiple,
}

impl VerbForm {
    pub const ALL: [VerbForm; 5] = [
        VerbForm::Base,
        VerbForm::ThirdSg,
        VerbForm::Past,
        VerbForm::PastParticiple,
        VerbForm::PresentParticiple,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerbEntry {
    pub base: String,
    pub third_sg: String,
    pub past: String,
    pub past_participle: String,
    pub present_participle: String,
}

impl VerbEntry {
    pub fn new(
        base: &str,
        third_sg: &str,
        past: &str,
        past_participle: &str,
        present_participle: &str,
    ) -> Self {
        VerbEntry {
            base: base.to_owned(),
            third_sg: third_sg.to_owned(),
            past: past.to_owned(),
            past_participle: past_participle.to_owned(),
            present_participle: present_participle.to_owned(),
        }
    }

    /// A verb that forms its past and past participle with `-ed`.
    pub fn regular(base: &str) -> Self {
        let ed = format!("{base}ed");
        VerbEntry::new(base, &format!("{base}s"), &ed, &ed, &format!("{base}ing"))
    }

    pub fn form(&self, form: VerbForm) -> &str {
        match form {
            VerbForm::Base => &self.base,
            VerbForm::ThirdSg => &self.third_sg,
            VerbForm::Past => &self.past,
            VerbForm::PastParticiple => &self.past_participle,
            VerbForm::PresentParticiple => &self.present_participle,
        }
    }

    fn has_form(&self, token: &str) -> bool {
        VerbForm::ALL.iter().any(|&f| self.form(f) == token)
    }
}

pub fn inflect(entry: &VerbEntry, form: VerbForm) -> &str {
    entry.form(form)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PronounEntry {
    pub subject_form: String,
    pub object_form: String,
    pub agreement: Agreement,
}

impl PronounEntry {
    pub fn form(&self, role: Role) -> &str {
        match role {
            Role::Subject => &self.subject_form,
            Role::Object => &self.object_form,
        }
    }
}

pub fn pronoun_form(entry: &PronounEntry, role: Role) -> &str {
    entry.form(role)
}

/// One inflected noun form with its number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NounEntry {
    pub surface: String,
    pub agreement: Agreement,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    determiners: IndexSet<String>,
    /// singular -> plural
    nouns: IndexMap<String, String>,
    /// keyed by subject form
    pronouns: IndexMap<String, PronounEntry>,
    adjectives: IndexSet<String>,
    verbs: IndexMap<String, VerbEntry>,
    prepositions: IndexSet<String>,
    modals: IndexSet<String>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// The builtin vocabulary, covering every word of the reference examples.
    pub fn builtin() -> Lexicon {
        builtin_ref().clone()
    }

    pub fn add_determiner(&mut self, token: &str) {
        self.determiners.insert(token.to_owned());
    }

    pub fn add_noun(&mut self, singular: &str, plural: &str) {
        self.nouns.insert(singular.to_owned(), plural.to_owned());
    }

    /// Adds a pronoun, replacing any entry that shares its subject or
    /// object form.
    pub fn add_pronoun(&mut self, entry: PronounEntry) {
        self.pronouns.retain(|subject, p| {
            *subject == entry.subject_form || p.object_form != entry.object_form
        });
        self.pronouns.insert(entry.subject_form.clone(), entry);
    }

    pub fn add_adjective(&mut self, token: &str) {
        self.adjectives.insert(token.to_owned());
    }

    pub fn add_verb(&mut self, entry: VerbEntry) {
        self.verbs.insert(entry.base.clone(), entry);
    }

    pub fn add_preposition(&mut self, token: &str) {
        self.prepositions.insert(token.to_owned());
    }

    pub fn add_modal(&mut self, token: &str) {
        self.modals.insert(token.to_owned());
    }

    pub fn is_determiner(&self, token: &str) -> bool {
        self.determiners.contains(token)
    }

    pub fn is_adjective(&self, token: &str) -> bool {
        self.adjectives.contains(token)
    }

    pub fn is_preposition(&self, token: &str) -> bool {
        self.prepositions.contains(token)
    }

    pub fn is_modal(&self, token: &str) -> bool {
        self.modals.contains(token)
    }

    pub fn determiners(&self) -> impl Iterator<Item = &str> {
        self.determiners.iter().map(String::as_str)
    }

    pub fn adjectives(&self) -> impl Iterator<Item = &str> {
        self.adjectives.iter().map(String::as_str)
    }

    pub fn prepositions(&self) -> impl Iterator<Item = &str> {
        self.prepositions.iter().map(String::as_str)
    }

    pub fn modals(&self) -> impl Iterator<Item = &str> {
        self.modals.iter().map(String::as_str)
    }

    pub fn verbs(&self) -> impl Iterator<Item = &VerbEntry> {
        self.verbs.values()
    }

    pub fn pronouns(&self) -> impl Iterator<Item = &PronounEntry> {
        self.pronouns.values()
    }

    /// Noun forms in file order, singular before plural for each line.
    pub fn nouns(&self) -> impl Iterator<Item = NounEntry> + '_ {
        self.nouns.iter().flat_map(|(sg, pl)| {
            [
                NounEntry {
                    surface: sg.clone(),
                    agreement: Agreement::Singular,
                },
                NounEntry {
                    surface: pl.clone(),
                    agreement: Agreement::Plural,
                },
            ]
        })
    }

    /// Every number reading of a noun form (empty if it is not a noun).
    pub fn noun_agreements(&self, token: &str) -> Vec<Agreement> {
        let mut out = Vec::new();
        if self.nouns.contains_key(token) {
            out.push(Agreement::Singular);
        }
        if self.nouns.values().any(|pl| pl == token) {
            out.push(Agreement::Plural);
        }
        out
    }

    /// The pronoun whose case form for `role` is `token`.
    pub fn pronoun_by_form(&self, token: &str, role: Role) -> Option<&PronounEntry> {
        match role {
            Role::Subject => self.pronouns.get(token),
            Role::Object => self.pronouns.values().find(|p| p.object_form == token),
        }
    }

    pub fn pronoun_by_any_form(&self, token: &str) -> Option<&PronounEntry> {
        self.pronoun_by_form(token, Role::Subject)
            .or_else(|| self.pronoun_by_form(token, Role::Object))
    }

    /// Verb entries having `token` as their `form`.
    ///
    /// An unlisted token `X` + "ed" is also read as the past or past
    /// participle of a known base `X`.
    pub fn verbs_with_form(&self, token: &str, form: VerbForm) -> Vec<&VerbEntry> {
        let listed: Vec<&VerbEntry> = self
            .verbs
            .values()
            .filter(|v| v.form(form) == token)
            .collect();
        if !listed.is_empty() || !matches!(form, VerbForm::Past | VerbForm::PastParticiple) {
            return listed;
        }
        match token.strip_suffix("ed") {
            Some(base) if !self.verbs.values().any(|v| v.has_form(token)) => {
                self.verbs.get(base).into_iter().collect()
            }
            _ => listed,
        }
    }

    pub fn has_verb_form(&self, token: &str, form: VerbForm) -> bool {
        !self.verbs_with_form(token, form).is_empty()
    }

    fn is_verb_token(&self, token: &str) -> bool {
        self.verbs.values().any(|v| v.has_form(token)) || self.has_verb_form(token, VerbForm::Past)
    }

    /// True if `token` belongs to any category, open or closed.
    pub fn knows(&self, token: &str) -> bool {
        self.is_determiner(token)
            || self.is_adjective(token)
            || self.is_preposition(token)
            || self.is_modal(token)
            || !self.noun_agreements(token).is_empty()
            || self.pronoun_by_any_form(token).is_some()
            || self.is_verb_token(token)
            || is_closed_class(token)
    }

    /// Canonical text form; loading it back yields an equal lexicon.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for d in &self.determiners {
            let _ = writeln!(out, "det {d}");
        }
        for (sg, pl) in &self.nouns {
            let _ = writeln!(out, "noun {sg} {pl}");
        }
        for p in self.pronouns.values() {
            let _ = writeln!(
                out,
                "pro {} {} {}",
                p.subject_form, p.object_form, p.agreement
            );
        }
        for a in &self.adjectives {
            let _ = writeln!(out, "adj {a}");
        }
        for v in self.verbs.values() {
            let _ = writeln!(
                out,
                "verb {} {} {} {} {}",
                v.base, v.third_sg, v.past, v.past_participle, v.present_participle
            );
        }
        for p in &self.prepositions {
            let _ = writeln!(out, "prep {p}");
        }
        for m in &self.modals {
            let _ = writeln!(out, "modal {m}");
        }
        out
    }
}

pub fn builtin_ref() -> &'static Lexicon {
    static BUILTIN: OnceLock<Lexicon> = OnceLock::new();
    BUILTIN.get_or_init(|| {
        parse_lexicon_source(BUILTIN_SOURCE).expect("builtin lexicon is well-formed")
    })
}

impl FromStr for Lexicon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_lexicon_source(s)
    }
}

/// Parses the line-based lexicon format. Later lines replace earlier
/// entries with the same key.
pub fn parse_lexicon_source(text: &str) -> Result<Lexicon, Error> {
    let mut lex = Lexicon::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").to_lowercase();
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = fields.split_first() else {
            continue;
        };
        let arity = match keyword {
            "det" | "adj" | "prep" | "modal" => 1,
            "noun" => 2,
            "pro" => 3,
            "verb" => 5,
            other => {
                return Err(Error::Load {
                    line: line_no,
                    message: format!("unknown category `{other}`"),
                })
            }
        };
        if args.len() != arity {
            return Err(Error::Load {
                line: line_no,
                message: format!("`{keyword}` takes {arity} field(s), found {}", args.len()),
            });
        }
        match keyword {
            "det" => lex.add_determiner(args[0]),
            "adj" => lex.add_adjective(args[0]),
            "prep" => lex.add_preposition(args[0]),
            "modal" => lex.add_modal(args[0]),
            "noun" => lex.add_noun(args[0], args[1]),
            "pro" => {
                let agreement = args[2].parse().map_err(|_| Error::Load {
                    line: line_no,
                    message: format!("bad agreement `{}`", args[2]),
                })?;
                lex.add_pronoun(PronounEntry {
                    subject_form: args[0].to_owned(),
                    object_form: args[1].to_owned(),
                    agreement,
                });
            }
            "verb" => lex.add_verb(VerbEntry::new(args[0], args[1], args[2], args[3], args[4])),
            _ => unreachable!(),
        }
    }
    Ok(lex)
}

// Auxiliary tables.

/// Auxiliaries, do-support and negation. These are never lexicon entries.
pub const CLOSED_CLASS: &[&str] = &[
    "am", "is", "are", "was", "were", "be", "being", "been", "have", "has", "had", "do", "does",
    "did", "will", NEGATION,
];

pub fn is_closed_class(token: &str) -> bool {
    CLOSED_CLASS.contains(&token)
}

fn be_present(agr: Agreement) -> &'static str {
    match agr {
        Agreement::Singular => "is",
        Agreement::Plural => "are",
        Agreement::FirstSingular => "am",
    }
}

fn be_past(agr: Agreement) -> &'static str {
    match agr {
        Agreement::Singular | Agreement::FirstSingular => "was",
        Agreement::Plural => "were",
    }
}

fn have_present(agr: Agreement) -> &'static str {
    match agr {
        Agreement::Singular => "has",
        Agreement::Plural | Agreement::FirstSingular => "have",
    }
}

/// Active-voice auxiliaries for a tense; `tense.group() - 1` tokens.
pub fn aux_chain(tense: Tense, agr: Agreement) -> Vec<&'static str> {
    match tense {
        Tense::SimplePast | Tense::SimplePresent => vec![],
        Tense::SimpleFuture => vec!["will"],
        Tense::ContinuousPast => vec![be_past(agr)],
        Tense::ContinuousPresent => vec![be_present(agr)],
        Tense::PerfectPast => vec!["had"],
        Tense::PerfectPresent => vec![have_present(agr)],
        Tense::ContinuousFuture => vec!["will", "be"],
        Tense::PerfectFuture => vec!["will", "have"],
        Tense::PerfectContinuousPast => vec!["had", "been"],
        Tense::PerfectContinuousPresent => vec![have_present(agr), "been"],
        Tense::PerfectContinuousFuture => vec!["will", "have", "been"],
    }
}

/// The passive-only auxiliary placed right before the participle.
pub fn aux_tense_token(tense: Tense) -> Option<&'static str> {
    match tense {
        Tense::SimplePast | Tense::SimplePresent => None,
        Tense::SimpleFuture => Some("be"),
        Tense::PerfectPast | Tense::PerfectPresent | Tense::PerfectFuture => Some("been"),
        Tense::ContinuousPast
        | Tense::ContinuousPresent
        | Tense::ContinuousFuture
        | Tense::PerfectContinuousPast
        | Tense::PerfectContinuousPresent
        | Tense::PerfectContinuousFuture => Some("being"),
    }
}

/// The finite "be" of a simple-tense passive.
pub fn finite_passive_aux(tense: Tense, agr: Agreement) -> Result<&'static str, Error> {
    match tense {
        Tense::SimplePresent => Ok(be_present(agr)),
        Tense::SimplePast => Ok(be_past(agr)),
        other => Err(Error::NotSimpleTense(other)),
    }
}

/// The "do" carried by a negative simple-tense active.
pub fn do_support_aux(tense: Tense, agr: Agreement) -> Result<&'static str, Error> {
    match tense {
        Tense::SimplePresent => Ok(match agr {
            Agreement::Singular => "does",
            Agreement::Plural | Agreement::FirstSingular => "do",
        }),
        Tense::SimplePast => Ok("did"),
        other => Err(Error::NotSimpleTense(other)),
    }
}

/// Form of the main verb in a positive active sentence of `tense`.
pub fn active_verb_form(tense: Tense, agr: Agreement) -> VerbForm {
    match tense {
        Tense::SimplePresent if agr == Agreement::Singular => VerbForm::ThirdSg,
        Tense::SimplePresent | Tense::SimpleFuture => VerbForm::Base,
        Tense::SimplePast => VerbForm::Past,
        Tense::PerfectPast | Tense::PerfectPresent | Tense::PerfectFuture => {
            VerbForm::PastParticiple
        }
        Tense::ContinuousPast
        | Tense::ContinuousPresent
        | Tense::ContinuousFuture
        | Tense::PerfectContinuousPast
        | Tense::PerfectContinuousPresent
        | Tense::PerfectContinuousFuture => VerbForm::PresentParticiple,
    }
}
