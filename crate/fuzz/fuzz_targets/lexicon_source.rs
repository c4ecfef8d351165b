#![no_main]

use libfuzzer_sys::fuzz_target;
use voiceshift::parse_lexicon_source;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lexicon) = parse_lexicon_source(text) {
        let dumped = lexicon.dump();
        let reloaded = parse_lexicon_source(&dumped).expect("dump must reload");
        assert_eq!(reloaded, lexicon);
        assert_eq!(reloaded.dump(), dumped);
    }
});
