#![no_main]

use libfuzzer_sys::fuzz_target;
use voiceshift::lexicon::builtin_ref;
use voiceshift::{convert_from_passive, parse_active, parse_passive, realize_passive, tokenize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let lex = builtin_ref();
    let tokens = tokenize(text);
    let parses = parse_passive(&tokens, lex);
    for p in &parses {
        assert_eq!(realize_passive(&p.tree), tokens);
    }
    if !parses.is_empty() {
        assert!(parse_active(&tokens, lex).is_empty());
    }
    for r in convert_from_passive(&tokens, lex) {
        assert!(parse_active(&r.active_tokens, lex)
            .iter()
            .any(|p| p.tree.to_term_string() == r.active_term));
    }
});
