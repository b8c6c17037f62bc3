//! Published example data: boards, vectors and expansions used by tests and `selftest`.

use std::collections::BTreeSet;

use crate::switchboard::Switchboard;
use crate::word::Word;

pub const LEN5_N3: &str = include_str!("fixtures/len5_n3.board");
pub const SPLIT: &str = include_str!("fixtures/split.board");
pub const JOINED: &str = include_str!("fixtures/joined.board");
pub const NONPOSITIVE: &str = include_str!("fixtures/nonpositive.board");
pub const LLT_SMALL: [&str; 4] = [
    include_str!("fixtures/llt_small_t0.board"),
    include_str!("fixtures/llt_small_t1.board"),
    include_str!("fixtures/llt_small_t2.board"),
    include_str!("fixtures/llt_small_t3.board"),
];
pub const LLT_LEVEL3: &str = include_str!("fixtures/llt_level3.board");
pub const NILPLACTIC_32154: &str = include_str!("fixtures/nilplactic_32154.board");
pub const HECKE: [&str; 3] = [
    include_str!("fixtures/hecke_top.board"),
    include_str!("fixtures/hecke_middle.board"),
    include_str!("fixtures/hecke_bottom.board"),
];
pub const TRIPLES_COMPONENT: &str = include_str!("fixtures/triples_component.board");

/// Parse one of the bundled boards.
pub fn board(text: &str) -> Switchboard {
    Switchboard::parse(text).expect("bundled board parses")
}

pub fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|s| Word::parse(s).expect("bundled word")).collect()
}

pub fn word_set(list: &[&str]) -> BTreeSet<Word> {
    words(list).into_iter().collect()
}

/// Fundamental expansion of the length-5 board, by descent set.
pub const LEN5_N3_QLIST: &[(&[usize], i64)] = &[
    (&[2], 1),
    (&[3], 1),
    (&[1, 2], 1),
    (&[1, 3], 3),
    (&[1, 4], 2),
    (&[2, 3], 2),
    (&[2, 4], 3),
    (&[3, 4], 1),
    (&[1, 2, 4], 1),
    (&[1, 3, 4], 1),
];

/// The 20-word vector in the switchboard-ideal perp with non-Schur-positive F.
pub const NONPOSITIVE_VECTOR: [&str; 20] = [
    "432165", "432615", "426315", "264315", "264153", "261543", "216543", "426351", "624153",
    "425631", "462351", "624513", "641253", "452631", "462513", "641523", "456231", "456213",
    "465123", "645123",
];

/// Seven plus, two minus monomials congruent to the (2,2,2) function mod IS + Ist.
pub const J222_SIGNED: [(i8, &str); 9] = [
    (1, "321654"),
    (1, "426513"),
    (1, "562143"),
    (1, "436512"),
    (1, "563412"),
    (1, "462315"),
    (1, "452316"),
    (-1, "462351"),
    (-1, "452361"),
];

/// The positive five-term expressions modulo the intersection of Assaf ideals.
pub const J222_ASSAF_CAP: [[&str; 5]; 4] = [
    ["321654", "426513", "562143", "431652", "563412"],
    ["321654", "462153", "521643", "436512", "563412"],
    ["321654", "462513", "521643", "436152", "563412"],
    ["321654", "462513", "526143", "431652", "563412"],
];

/// Rotation triples of the S_5 triples switchboard.
pub const TRIPLES_ROTATION: [[u8; 3]; 3] = [[1, 2, 4], [2, 4, 5], [3, 4, 5]];

/// Component symmetric functions of the S_5 triples switchboard, with multiplicity.
pub const TRIPLES_COMPONENT_FUNCTIONS: [(&str, usize); 11] = [
    ("s41+s32+s311+s221", 1),
    ("s32+s311+s221+s2111", 1),
    ("s41+s32", 1),
    ("s221+s2111", 1),
    ("s5", 1),
    ("s41", 2),
    ("s32", 2),
    ("s311", 4),
    ("s221", 2),
    ("s2111", 2),
    ("s11111", 1),
];

/// Reduced words of 32154.
pub const RED_32154: [&str; 8] = ["4212", "4121", "1421", "1241", "1214", "2124", "2142", "2412"];

/// The running LLT tuple and its shifted contents as (component, row, column, value).
pub const SHIFTED_TUPLE: &str = "2/1;33/11;33/21";
pub const SHIFTED_CONTENTS: [(usize, usize, usize, i64); 8] = [
    (0, 1, 2, 3),
    (1, 1, 2, 4),
    (1, 1, 3, 7),
    (1, 2, 2, 1),
    (1, 2, 3, 4),
    (2, 1, 3, 8),
    (2, 2, 2, 2),
    (2, 2, 3, 5),
];

/// Words from the running LLT example with their 3-inversion numbers.
pub const INV3_TABLE: [(&str, usize); 5] = [
    ("42173845", 4),
    ("34174285", 5),
    ("83412745", 5),
    ("48714235", 6),
    ("28534174", 6),
];

/// q-Schur expansions of the two small LLT examples, keyed by q-degree.
pub const LLT_SMALL_EXPANSION: [(i32, &str); 4] =
    [(0, "s4"), (1, "s31"), (2, "s31+s22"), (3, "s211")];
pub const LLT_LARGE_EXPANSION: [(i32, &str); 4] =
    [(2, "s42"), (3, "s33+s321"), (4, "s321+s222"), (5, "s2211")];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_boards_parse() {
        for t in [LEN5_N3, SPLIT, JOINED, NONPOSITIVE, LLT_LEVEL3, NILPLACTIC_32154, TRIPLES_COMPONENT]
            .into_iter()
            .chain(LLT_SMALL)
            .chain(HECKE)
        {
            let b = board(t);
            assert!(!b.vertices().is_empty());
        }
        assert_eq!(board(NONPOSITIVE).vertices(), &word_set(&NONPOSITIVE_VECTOR));
    }
}
