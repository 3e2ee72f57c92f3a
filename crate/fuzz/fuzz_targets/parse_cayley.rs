#![no_main]

use libfuzzer_sys::fuzz_target;
use ordgroupoid::semigroup::{parse_cayley, write_cayley};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = parse_cayley(text) {
        let again = parse_cayley(&write_cayley(&s)).expect("written tables parse");
        assert_eq!(s, again);
    }
});
