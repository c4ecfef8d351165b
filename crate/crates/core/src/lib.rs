//! English active/passive voice conversion.
//!
//! A sentence is parsed into a compact tree, the tree is mapped to its
//! counterpart in the other voice, and the counterpart is realized back into
//! tokens:
//!
//! ```
//! use voiceshift::{convert_from_active, tokenize, Lexicon};
//!
//! let lexicon = Lexicon::builtin();
//! let results = convert_from_active(&tokenize("he buys an apple"), &lexicon);
//! assert_eq!(results[0].passive_tokens.join(" "), "an apple is bought by him");
//! assert_eq!(
//!     results[0].passive_term,
//!     "s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))"
//! );
//! ```
//!
//! The grammar covers twelve tenses, modals, negation, subject/object
//! pronoun case and number agreement. Parsing is exhaustive: every reading
//! is returned, in a fixed order.

pub mod enumerate;
pub mod error;
pub mod lexicon;
pub mod parser;
pub mod pipeline;
pub mod realizer;
pub mod suite;
pub mod syntax;
pub mod transform;

pub use enumerate::{Bounds, TreeSpace};
pub use error::Error;
pub use lexicon::{parse_lexicon_source, Lexicon, PronounEntry, VerbEntry, VerbForm};
pub use parser::{parse_active, parse_np, parse_passive, tokenize, ActiveParse, PassiveParse};
pub use pipeline::{
    convert_from_active, convert_from_active_with, convert_from_passive, convert_from_passive_with,
    enumerate_pairs, SolutionMode,
};
pub use realizer::{realize_active, realize_passive};
pub use syntax::{
    agreement_of, tense_group, ActiveTree, Agreement, ConversionResult, NounPhrase, PassiveTree,
    Polarity, PrepPhrase, Role, Tense,
};
pub use transform::{activize, passivize, swap_role};
