//! Pinned generator output: identical parameters must reproduce this file
//! byte for byte on any platform.

use ograph::format;
use ograph::generators::random_pseudo_transitive;

#[test]
fn seeded_generation_matches_the_golden_file() {
    let golden = include_str!("data/random-n6-d0.5-f0.5-s1.ograph");
    let g = random_pseudo_transitive(6, 0.5, 0.5, 1);
    assert_eq!(format::write_ograph(&g, None), golden);

    let (parsed, _) = format::parse_ograph(golden).unwrap();
    assert!(parsed.is_pseudo_transitive().is_ok());
}
