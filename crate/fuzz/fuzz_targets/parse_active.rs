#![no_main]

use libfuzzer_sys::fuzz_target;
use voiceshift::lexicon::builtin_ref;
use voiceshift::{convert_from_active, parse_active, parse_passive, realize_active, tokenize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let lex = builtin_ref();
    let tokens = tokenize(text);
    let parses = parse_active(&tokens, lex);
    for p in &parses {
        assert_eq!(realize_active(&p.tree), tokens);
    }
    if !parses.is_empty() {
        assert!(parse_passive(&tokens, lex).is_empty());
    }
    for r in convert_from_active(&tokens, lex) {
        assert!(parse_passive(&r.passive_tokens, lex)
            .iter()
            .any(|p| p.tree.to_term_string() == r.passive_term));
    }
});
