#![no_main]

use libfuzzer_sys::fuzz_target;
use ordgroupoid::graphs::{load_graph, parse_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_edge_list(text);
    if let Ok(g) = load_graph(text) {
        assert_eq!(load_graph(&g.to_edge_list()).expect("written graphs load"), g);
    }
});
