//! Parse, transform, realize: the conversion in both directions, plus
//! generation of every pair within bounds.

use crate::enumerate::{Bounds, TreeSpace};
use crate::lexicon::Lexicon;
use crate::parser::{parse_active, parse_passive, Token};
use crate::realizer::{realize_active, realize_passive};
use crate::syntax::{ActiveTree, ConversionResult, PassiveTree, Tense};
use crate::transform::{activize, passivize};

/// Whether to keep every solution or stop at the first one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum SolutionMode {
    #[default]
    All,
    First,
}

fn package(active: &ActiveTree, passive: &PassiveTree, tense: Tense) -> ConversionResult {
    ConversionResult {
        active_tokens: realize_active(active),
        active_term: active.to_term_string(),
        passive_tokens: realize_passive(passive),
        passive_term: passive.to_term_string(),
        tense,
    }
}

fn finish(mut results: Vec<ConversionResult>, mode: SolutionMode) -> Vec<ConversionResult> {
    let mut seen = std::collections::HashSet::new();
    results.retain(|r| seen.insert(r.clone()));
    if mode == SolutionMode::First {
        results.truncate(1);
    }
    results
}

pub fn convert_from_active(tokens: &[Token], lexicon: &Lexicon) -> Vec<ConversionResult> {
    convert_from_active_with(tokens, lexicon, SolutionMode::All)
}

/// Converts an active sentence. An empty result means the tokens are not a
/// convertible active sentence.
pub fn convert_from_active_with(
    tokens: &[Token],
    lexicon: &Lexicon,
    mode: SolutionMode,
) -> Vec<ConversionResult> {
    let mut results = Vec::new();
    for parse in parse_active(tokens, lexicon) {
        // a parse always names a known verb, so this cannot fail on parser output
        let Ok(passives) = passivize(&parse.tree, parse.tense, lexicon) else {
            continue;
        };
        for passive in passives {
            results.push(package(&parse.tree, &passive, parse.tense));
        }
        if mode == SolutionMode::First && !results.is_empty() {
            break;
        }
    }
    finish(results, mode)
}

pub fn convert_from_passive(tokens: &[Token], lexicon: &Lexicon) -> Vec<ConversionResult> {
    convert_from_passive_with(tokens, lexicon, SolutionMode::All)
}

pub fn convert_from_passive_with(
    tokens: &[Token],
    lexicon: &Lexicon,
    mode: SolutionMode,
) -> Vec<ConversionResult> {
    let mut results = Vec::new();
    for parse in parse_passive(tokens, lexicon) {
        let Ok(actives) = activize(&parse.tree, parse.tense, lexicon) else {
            continue;
        };
        for active in actives {
            results.push(package(&active, &parse.tree, parse.tense));
        }
        if mode == SolutionMode::First && !results.is_empty() {
            break;
        }
    }
    finish(results, mode)
}

/// Every active tree within `bounds`, converted, in [`TreeSpace`] order and
/// cut off after `limit` results.
pub fn enumerate_pairs<'l>(
    lexicon: &'l Lexicon,
    bounds: &Bounds,
    limit: usize,
) -> impl Iterator<Item = ConversionResult> + 'l {
    let space = TreeSpace::new(lexicon, bounds);
    (0..space.len())
        .flat_map(move |i| {
            let (active, tense) = space.get(i);
            passivize(&active, tense, lexicon)
                .unwrap_or_default()
                .into_iter()
                .map(move |passive| package(&active, &passive, tense))
        })
        .take(limit)
}
