//! Built-in regression suite: reference conversions plus a round-trip batch
//! over enumerated pairs. Backs the `test-suite` command of the CLI.

use crate::enumerate::Bounds;
use crate::lexicon::Lexicon;
use crate::parser::tokenize;
use crate::pipeline::{convert_from_active, convert_from_passive, enumerate_pairs};
use crate::syntax::{ConversionResult, Tense};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Active,
    Passive,
}

/// Which half of the suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Active,
    Passive,
    All,
}

impl Which {
    fn includes(self, direction: Direction) -> bool {
        matches!(
            (self, direction),
            (Which::All, _)
                | (Which::Active, Direction::Active)
                | (Which::Passive, Direction::Passive)
        )
    }
}

/// One reference conversion. `expected: None` means the input must not
/// convert at all.
#[derive(Debug, Clone)]
pub struct Golden {
    pub direction: Direction,
    pub input: &'static str,
    pub expected: Option<&'static str>,
    pub tense: Option<Tense>,
    pub active_term: Option<&'static str>,
    pub passive_term: Option<&'static str>,
    /// The expectation must hold for the first solution, not just some solution.
    pub first: bool,
}

const fn golden(direction: Direction, input: &'static str, expected: &'static str) -> Golden {
    Golden {
        direction,
        input,
        expected: Some(expected),
        tense: None,
        active_term: None,
        passive_term: None,
        first: false,
    }
}

const fn rejected(direction: Direction, input: &'static str) -> Golden {
    Golden {
        direction,
        input,
        expected: None,
        tense: None,
        active_term: None,
        passive_term: None,
        first: false,
    }
}

pub fn goldens() -> Vec<Golden> {
    use Direction::*;
    vec![
        Golden {
            tense: Some(Tense::PerfectPresent),
            active_term: Some("s(np(det(a),adj([beautiful]),n(woman)),aux(has),v(bought),np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))))"),
            passive_term: Some("s(np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),n(table)))),aux(has),auxTense(been),v(bought),agent(by),np(det(a),adj([beautiful]),n(woman)))"),
            first: true,
            ..golden(
                Active,
                "a beautiful woman has bought a small apple on the big beautiful table.",
                "a small apple on the big beautiful table has been bought by a beautiful woman",
            )
        },
        Golden {
            tense: Some(Tense::SimplePresent),
            active_term: Some("s(np(pro(he)),v(buys),np(det(an),n(apple)))"),
            passive_term: Some("s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))"),
            first: true,
            ..golden(Active, "he buys an apple", "an apple is bought by him")
        },
        golden(Active, "the man buys an apple", "an apple is bought by the man"),
        golden(Active, "the man has bought an apple", "an apple has been bought by the man"),
        golden(Active, "the man does not buy an apple", "an apple is not bought by the man"),
        golden(
            Active,
            "the boy should bring a pen to the class",
            "a pen should be brought by the boy to the class",
        ),
        golden(
            Active,
            "a man buys an apple in the supermarket",
            "an apple is bought by a man in the supermarket",
        ),
        golden(
            Active,
            "you will have been loving them",
            "they will have been being loved by you",
        ),
        rejected(Active, "the man goes to school"),
        rejected(Active, "he goes"),
        rejected(Active, "an apple is bought by him"),
        Golden {
            tense: Some(Tense::SimplePresent),
            active_term: Some("s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),n(apple)))"),
            passive_term: Some("s(np(det(a),adj([small]),n(apple)),modal(should),pol(not),aux(be),v(bought),agent(by),np(pro(him)))"),
            first: true,
            ..golden(
                Passive,
                "a small apple should not be bought by him.",
                "he should not buy a small apple",
            )
        },
        golden(Passive, "an apple is bought by him", "he buys an apple"),
        golden(Passive, "an apple is bought by the man", "the man buys an apple"),
        golden(Passive, "an apple has been bought by the man", "the man has bought an apple"),
        golden(Passive, "an apple will be bought by the man", "the man will buy an apple"),
        golden(Passive, "an apple was being bought by a man", "a man was buying an apple"),
        golden(Passive, "an apple will be being bought by him", "he will be buying an apple"),
        golden(
            Passive,
            "an apple will have been bought by the man",
            "the man will have bought an apple",
        ),
        golden(Passive, "an apple is not bought by the man", "the man does not buy an apple"),
        golden(
            Passive,
            "a pen should be brought by the boy to the class",
            "the boy should bring a pen to the class",
        ),
        rejected(Passive, "he buys an apple"),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.outcomes.len() - self.passed()
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }
}

fn converted(result: &ConversionResult, direction: Direction) -> String {
    match direction {
        Direction::Active => result.passive_tokens.join(" "),
        Direction::Passive => result.active_tokens.join(" "),
    }
}

pub fn check_golden(case: &Golden, lexicon: &Lexicon) -> Outcome {
    let tokens = tokenize(case.input);
    let results = match case.direction {
        Direction::Active => convert_from_active(&tokens, lexicon),
        Direction::Passive => convert_from_passive(&tokens, lexicon),
    };
    let prefix = match case.direction {
        Direction::Active => "active",
        Direction::Passive => "passive",
    };
    let name = format!("{prefix}: {}", case.input);
    let Some(expected) = case.expected else {
        return Outcome {
            name,
            passed: results.is_empty(),
            detail: format!("{} solution(s), expected none", results.len()),
        };
    };
    let candidates: &[ConversionResult] = if case.first {
        results.get(..1).unwrap_or(&[])
    } else {
        &results
    };
    let hit = candidates.iter().find(|r| {
        converted(r, case.direction) == expected
            && case.tense.is_none_or(|t| r.tense == t)
            && case.active_term.is_none_or(|t| r.active_term == t)
            && case.passive_term.is_none_or(|t| r.passive_term == t)
    });
    Outcome {
        name,
        passed: hit.is_some(),
        detail: if hit.is_some() {
            String::new()
        } else {
            let got: Vec<String> = results
                .iter()
                .map(|r| converted(r, case.direction))
                .collect();
            format!("expected `{expected}`, got {got:?}")
        },
    }
}

/// Number of enumerated pairs the round-trip batch checks.
pub const ROUND_TRIP_PAIRS: usize = 500;

fn round_trip(lexicon: &Lexicon, direction: Direction) -> Outcome {
    let mut failures = Vec::new();
    for pair in enumerate_pairs(lexicon, &Bounds::default(), ROUND_TRIP_PAIRS) {
        let ok = match direction {
            Direction::Active => convert_from_passive(&pair.passive_tokens, lexicon)
                .iter()
                .any(|r| r.active_tokens == pair.active_tokens),
            Direction::Passive => convert_from_active(&pair.active_tokens, lexicon)
                .iter()
                .any(|r| r.passive_tokens == pair.passive_tokens),
        };
        if !ok {
            failures.push(pair.active_tokens.join(" "));
        }
    }
    let label = match direction {
        Direction::Active => "active -> passive -> active",
        Direction::Passive => "passive -> active -> passive",
    };
    Outcome {
        name: format!("round trip {label} ({ROUND_TRIP_PAIRS} pairs)"),
        passed: failures.is_empty(),
        detail: failures.into_iter().take(3).collect::<Vec<_>>().join("; "),
    }
}

pub fn run(lexicon: &Lexicon, which: Which) -> Report {
    let mut outcomes: Vec<Outcome> = goldens()
        .iter()
        .filter(|g| which.includes(g.direction))
        .map(|g| check_golden(g, lexicon))
        .collect();
    for direction in [Direction::Active, Direction::Passive] {
        if which.includes(direction) {
            outcomes.push(round_trip(lexicon, direction));
        }
    }
    Report { outcomes }
}
