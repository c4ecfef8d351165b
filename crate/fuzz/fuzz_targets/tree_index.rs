#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;
use voiceshift::lexicon::builtin_ref;
use voiceshift::{
    activize, parse_active, parse_passive, passivize, realize_active, realize_passive, Bounds,
    TreeSpace,
};

fn space() -> &'static TreeSpace<'static> {
    static SPACE: OnceLock<TreeSpace<'static>> = OnceLock::new();
    SPACE.get_or_init(|| {
        let bounds = Bounds {
            max_adjectives: 3,
            max_pp_depth: 2,
            ..Bounds::default()
        };
        TreeSpace::new(builtin_ref(), &bounds)
    })
}

fuzz_target!(|index: u128| {
    let lex = builtin_ref();
    let (active, tense) = space().get(index % space().len());
    assert!(parse_active(&realize_active(&active), lex)
        .iter()
        .any(|p| p.tree == active && p.tense == tense));
    for passive in passivize(&active, tense, lex).unwrap() {
        assert!(parse_passive(&realize_passive(&passive), lex)
            .iter()
            .any(|p| p.tree == passive && p.tense == tense));
        assert!(activize(&passive, tense, lex).unwrap().contains(&active));
    }
});
