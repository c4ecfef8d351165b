//! Sentence trees for both voices, the tense inventory and the term notation.
//!
//! Trees are the compact, flattened form: the verb phrase is not a node of its
//! own, so an active sentence is `s(NP, [modal], [aux...], [pol(not)], V, NP)`
//! and a passive one adds the tense auxiliary and the `agent(by)` marker.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::lexicon::Lexicon;

/// The token that introduces the agent of a passive sentence.
pub const AGENT_MARKER: &str = "by";

/// Token used for negation.
pub const NEGATION: &str = "not";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tense {
    SimplePast,
    SimplePresent,
    SimpleFuture,
    ContinuousPast,
    ContinuousPresent,
    ContinuousFuture,
    PerfectPast,
    PerfectPresent,
    PerfectFuture,
    PerfectContinuousPast,
    PerfectContinuousPresent,
    PerfectContinuousFuture,
}

impl Tense {
    /// All tenses in the fixed enumeration order used for parse ordering.
    pub const ALL: [Tense; 12] = [
        Tense::SimplePast,
        Tense::SimplePresent,
        Tense::SimpleFuture,
        Tense::ContinuousPast,
        Tense::ContinuousPresent,
        Tense::ContinuousFuture,
        Tense::PerfectPast,
        Tense::PerfectPresent,
        Tense::PerfectFuture,
        Tense::PerfectContinuousPast,
        Tense::PerfectContinuousPresent,
        Tense::PerfectContinuousFuture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tense::SimplePast => "simple_past",
            Tense::SimplePresent => "simple_present",
            Tense::SimpleFuture => "simple_future",
            Tense::ContinuousPast => "continuous_past",
            Tense::ContinuousPresent => "continuous_present",
            Tense::ContinuousFuture => "continuous_future",
            Tense::PerfectPast => "perfect_past",
            Tense::PerfectPresent => "perfect_present",
            Tense::PerfectFuture => "perfect_future",
            Tense::PerfectContinuousPast => "perfect_continuous_past",
            Tense::PerfectContinuousPresent => "perfect_continuous_present",
            Tense::PerfectContinuousFuture => "perfect_continuous_future",
        }
    }

    /// Position in [`Tense::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    /// Tense group: one more than the number of auxiliaries the active form
    /// of the tense needs.
    pub fn group(self) -> u8 {
        match self {
            Tense::SimplePast | Tense::SimplePresent => 1,
            Tense::SimpleFuture
            | Tense::ContinuousPast
            | Tense::ContinuousPresent
            | Tense::PerfectPast
            | Tense::PerfectPresent => 2,
            Tense::ContinuousFuture
            | Tense::PerfectFuture
            | Tense::PerfectContinuousPast
            | Tense::PerfectContinuousPresent => 3,
            Tense::PerfectContinuousFuture => 4,
        }
    }
}

/// Free-function form of [`Tense::group`].
pub fn tense_group(tense: Tense) -> u8 {
    tense.group()
}

impl fmt::Display for Tense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tense {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tense::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTense(s.to_owned()))
    }
}

/// Number/person feature of a noun phrase. `FirstSingular` is the row used
/// by "i"/"me", which selects am/was/have/do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Agreement {
    Singular,
    Plural,
    FirstSingular,
}

impl Agreement {
    pub fn name(self) -> &'static str {
        match self {
            Agreement::Singular => "singular",
            Agreement::Plural => "plural",
            Agreement::FirstSingular => "first_singular",
        }
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Agreement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "singular" => Ok(Agreement::Singular),
            "plural" => Ok(Agreement::Plural),
            "first_singular" => Ok(Agreement::FirstSingular),
            _ => Err(Error::UnknownAgreement(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub const ALL: [Polarity; 2] = [Polarity::Positive, Polarity::Negative];

    pub fn is_negative(self) -> bool {
        self == Polarity::Negative
    }
}

/// Grammatical position of a noun phrase; decides pronoun case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Subject,
    Object,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrepPhrase {
    pub prep: String,
    pub np: Box<NounPhrase>,
}

impl PrepPhrase {
    pub fn new(prep: impl Into<String>, np: NounPhrase) -> Self {
        PrepPhrase {
            prep: prep.into(),
            np: Box::new(np),
        }
    }
}

/// A noun phrase. Pronouns hold the surface case form for the position they
/// occupy (`he` as subject, `him` as object or inside a PP).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NounPhrase {
    Pro {
        pronoun: String,
        pp: Option<PrepPhrase>,
    },
    Full {
        det: Option<String>,
        adjectives: Vec<String>,
        noun: String,
        pp: Option<PrepPhrase>,
    },
}

impl NounPhrase {
    pub fn pro(pronoun: impl Into<String>) -> Self {
        NounPhrase::Pro {
            pronoun: pronoun.into(),
            pp: None,
        }
    }

    /// `det noun` with no adjectives or PP.
    pub fn simple(det: impl Into<String>, noun: impl Into<String>) -> Self {
        NounPhrase::Full {
            det: Some(det.into()),
            adjectives: Vec::new(),
            noun: noun.into(),
            pp: None,
        }
    }

    pub fn full<I, S>(det: Option<&str>, adjectives: I, noun: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        NounPhrase::Full {
            det: det.map(str::to_owned),
            adjectives: adjectives.into_iter().map(Into::into).collect(),
            noun: noun.into(),
            pp: None,
        }
    }

    pub fn with_pp(mut self, pp: PrepPhrase) -> Self {
        match &mut self {
            NounPhrase::Pro { pp: slot, .. } | NounPhrase::Full { pp: slot, .. } => {
                *slot = Some(pp)
            }
        }
        self
    }

    pub fn pp(&self) -> Option<&PrepPhrase> {
        match self {
            NounPhrase::Pro { pp, .. } | NounPhrase::Full { pp, .. } => pp.as_ref(),
        }
    }

    /// Depth of PP nesting below this phrase.
    pub fn pp_depth(&self) -> usize {
        self.pp().map_or(0, |pp| 1 + pp.np.pp_depth())
    }
}

/// Compact active representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActiveTree {
    pub subject: NounPhrase,
    pub modal: Option<String>,
    pub aux: Vec<String>,
    pub polarity: Polarity,
    pub verb: String,
    pub object: NounPhrase,
    pub final_pp: Option<PrepPhrase>,
}

/// Compact passive representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PassiveTree {
    pub subject: NounPhrase,
    pub modal: Option<String>,
    pub aux: Vec<String>,
    pub polarity: Polarity,
    pub aux_tense: Option<String>,
    pub verb: String,
    pub agent: NounPhrase,
    pub final_pp: Option<PrepPhrase>,
}

impl PassiveTree {
    pub fn agent_marker(&self) -> &'static str {
        AGENT_MARKER
    }
}

/// Output of one conversion: both sentences, both terms, and the tense the
/// input was parsed in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConversionResult {
    pub active_tokens: Vec<String>,
    pub active_term: String,
    pub passive_tokens: Vec<String>,
    pub passive_term: String,
    pub tense: Tense,
}

const AUX_FUNCTORS: [&str; 3] = ["aux", "aux1", "aux2"];

impl fmt::Display for PrepPhrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pp(pre({}),{})", self.prep, self.np)
    }
}

impl fmt::Display for NounPhrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NounPhrase::Pro { pronoun, pp } => {
                write!(f, "np(pro({pronoun})")?;
                if let Some(pp) = pp {
                    write!(f, ",{pp}")?;
                }
            }
            NounPhrase::Full {
                det,
                adjectives,
                noun,
                pp,
            } => {
                f.write_str("np(")?;
                if let Some(det) = det {
                    write!(f, "det({det}),")?;
                }
                if !adjectives.is_empty() {
                    write!(f, "adj([{}]),", adjectives.join(","))?;
                }
                write!(f, "n({noun})")?;
                if let Some(pp) = pp {
                    write!(f, ",{pp}")?;
                }
            }
        }
        f.write_str(")")
    }
}

fn write_aux_chain(f: &mut fmt::Formatter<'_>, aux: &[String]) -> fmt::Result {
    for (functor, token) in AUX_FUNCTORS.iter().zip(aux) {
        write!(f, ",{functor}({token})")?;
    }
    Ok(())
}

impl fmt::Display for ActiveTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({}", self.subject)?;
        if let Some(modal) = &self.modal {
            write!(f, ",modal({modal})")?;
        }
        write_aux_chain(f, &self.aux)?;
        if self.polarity.is_negative() {
            f.write_str(",pol(not)")?;
        }
        write!(f, ",v({}),{}", self.verb, self.object)?;
        if let Some(pp) = &self.final_pp {
            write!(f, ",{pp}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for PassiveTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({}", self.subject)?;
        if let Some(modal) = &self.modal {
            write!(f, ",modal({modal})")?;
        }
        write_aux_chain(f, &self.aux)?;
        if self.polarity.is_negative() {
            f.write_str(",pol(not)")?;
        }
        if let Some(aux_tense) = &self.aux_tense {
            // After a modal the bare "be" is printed as a plain auxiliary.
            let functor = if self.modal.is_some() {
                "aux"
            } else {
                "auxTense"
            };
            write!(f, ",{functor}({aux_tense})")?;
        }
        write!(
            f,
            ",v({}),agent({}),{}",
            self.verb, AGENT_MARKER, self.agent
        )?;
        if let Some(pp) = &self.final_pp {
            write!(f, ",{pp}")?;
        }
        f.write_str(")")
    }
}

impl ActiveTree {
    pub fn to_term_string(&self) -> String {
        self.to_string()
    }
}

impl PassiveTree {
    pub fn to_term_string(&self) -> String {
        self.to_string()
    }
}

/// Agreement of a noun phrase: the pronoun's row, or the head noun's number.
/// Adjectives and embedded PPs play no part.
pub fn agreement_of(np: &NounPhrase, lexicon: &Lexicon) -> Result<Agreement, Error> {
    match np {
        NounPhrase::Pro { pronoun, .. } => lexicon
            .pronoun_by_any_form(pronoun)
            .map(|entry| entry.agreement)
            .ok_or_else(|| Error::UnknownWord(pronoun.clone())),
        NounPhrase::Full { noun, .. } => lexicon
            .noun_agreements(noun)
            .first()
            .copied()
            .ok_or_else(|| Error::UnknownWord(noun.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn active_he_buys_an_apple() -> ActiveTree {
        ActiveTree {
            subject: NounPhrase::pro("he"),
            modal: None,
            aux: vec![],
            polarity: Polarity::Positive,
            verb: "buys".into(),
            object: NounPhrase::simple("an", "apple"),
            final_pp: None,
        }
    }

    #[test]
    fn group_examples() {
        assert_eq!(tense_group(Tense::SimplePast), 1);
        assert_eq!(tense_group(Tense::PerfectFuture), 3);
        assert_eq!(tense_group(Tense::PerfectContinuousFuture), 4);
    }

    #[test]
    fn groups_partition_as_2_5_4_1() {
        let mut sizes = [0usize; 4];
        for t in Tense::ALL {
            sizes[(t.group() - 1) as usize] += 1;
        }
        assert_eq!(sizes, [2, 5, 4, 1]);
    }

    #[test]
    fn tense_names_round_trip() {
        for t in Tense::ALL {
            assert_eq!(t.name().parse::<Tense>().unwrap(), t);
            assert_eq!(Tense::ALL[t.index()], t);
        }
        assert!("future_perfect".parse::<Tense>().is_err());
    }

    #[test]
    fn active_term_simple() {
        assert_eq!(
            active_he_buys_an_apple().to_term_string(),
            "s(np(pro(he)),v(buys),np(det(an),n(apple)))"
        );
    }

    #[test]
    fn passive_term_group_one() {
        let tree = PassiveTree {
            subject: NounPhrase::simple("an", "apple"),
            modal: None,
            aux: vec!["is".into()],
            polarity: Polarity::Positive,
            aux_tense: None,
            verb: "bought".into(),
            agent: NounPhrase::pro("him"),
            final_pp: None,
        };
        assert_eq!(
            tree.to_term_string(),
            "s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))"
        );
        assert_eq!(tree.agent_marker(), "by");
    }

    #[test]
    fn active_term_modal_negative_with_adjective() {
        let tree = ActiveTree {
            subject: NounPhrase::pro("he"),
            modal: Some("should".into()),
            aux: vec![],
            polarity: Polarity::Negative,
            verb: "buy".into(),
            object: NounPhrase::full(Some("a"), ["small"], "apple"),
            final_pp: None,
        };
        assert_eq!(
            tree.to_term_string(),
            "s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),n(apple)))"
        );
    }

    #[test]
    fn aux_chain_functors_and_tense_marker() {
        let tree = PassiveTree {
            subject: NounPhrase::simple("an", "apple"),
            modal: None,
            aux: vec!["will".into(), "have".into(), "been".into()],
            polarity: Polarity::Negative,
            aux_tense: Some("being".into()),
            verb: "bought".into(),
            agent: NounPhrase::pro("them"),
            final_pp: Some(PrepPhrase::new("in", NounPhrase::simple("the", "school"))),
        };
        assert_eq!(
            tree.to_term_string(),
            "s(np(det(an),n(apple)),aux(will),aux1(have),aux2(been),pol(not),\
             auxTense(being),v(bought),agent(by),np(pro(them)),\
             pp(pre(in),np(det(the),n(school))))"
        );
    }

    #[test]
    fn bare_noun_and_pronoun_with_pp() {
        let np = NounPhrase::pro("him").with_pp(PrepPhrase::new(
            "to",
            NounPhrase::full(None, Vec::<String>::new(), "school"),
        ));
        assert_eq!(np.to_string(), "np(pro(him),pp(pre(to),np(n(school))))");
        assert_eq!(np.pp_depth(), 1);
    }

    #[test]
    fn agreement_examples() {
        let lex = Lexicon::builtin();
        assert_eq!(
            agreement_of(&NounPhrase::pro("i"), &lex).unwrap(),
            Agreement::FirstSingular
        );
        assert_eq!(
            agreement_of(&NounPhrase::simple("the", "man"), &lex).unwrap(),
            Agreement::Singular
        );
        assert_eq!(
            agreement_of(&NounPhrase::simple("the", "men"), &lex).unwrap(),
            Agreement::Plural
        );
        assert!(agreement_of(&NounPhrase::simple("the", "dog"), &lex).is_err());
    }

    #[test]
    fn agreement_ignores_adjectives_and_pp() {
        let lex = Lexicon::builtin();
        let np = NounPhrase::full(Some("the"), ["big", "small"], "apples")
            .with_pp(PrepPhrase::new("on", NounPhrase::simple("the", "table")));
        assert_eq!(agreement_of(&np, &lex).unwrap(), Agreement::Plural);
    }
}
