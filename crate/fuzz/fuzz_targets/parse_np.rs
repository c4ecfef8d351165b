#![no_main]

use libfuzzer_sys::fuzz_target;
use voiceshift::lexicon::builtin_ref;
use voiceshift::{parse_np, tokenize, Role};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let tokens = tokenize(text);
    for role in [Role::Subject, Role::Object] {
        for (np, _, rest) in parse_np(&tokens, role, builtin_ref()) {
            let consumed = tokens.len() - rest.len();
            assert!(consumed > 0);
            assert_eq!(&tokens[consumed..], rest);
            assert!(np.pp_depth() < tokens.len());
        }
    }
});
