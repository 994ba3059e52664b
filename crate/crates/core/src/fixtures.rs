//! Small named networks used throughout the tests, the CLI corpus and the docs.

use crate::graph::TwoTerminalDag;

/// The edge graph K_{12}.
pub fn k12() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(&[("1", "2")], "1", "2").expect("valid fixture")
}

/// Four routes over seven vertices, containing a robust 3-path through (o, 2, 4, d).
pub fn four_route() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(
        &[("o", "1"), ("1", "2"), ("2", "d"), ("2", "4"), ("4", "d"), ("o", "3"), ("3", "4"), ("3", "5"), ("5", "d")],
        "o",
        "d",
    )
    .expect("valid fixture")
}

/// The Wheatstone bridge: the smallest non-series-parallel two-terminal graph.
pub fn braess() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(&[("i0", "i1"), ("i0", "i2"), ("i1", "i2"), ("i1", "i3"), ("i2", "i3")], "i0", "i3")
        .expect("valid fixture")
}

/// `(o → a → d) || (o → b → d)`.
pub fn diamond() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(&[("o", "a"), ("a", "d"), ("o", "b"), ("b", "d")], "o", "d").expect("valid fixture")
}

/// `(K_{i0 i1} → K_{i1 i3}) || (K_{i0 i2} → K_{i2 i3})`.
pub fn split_pairs() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(&[("i0", "i1"), ("i1", "i3"), ("i0", "i2"), ("i2", "i3")], "i0", "i3")
        .expect("valid fixture")
}

/// Three chained triangles along i0 → i1 → i2 → i3 → i4 with skip edges
/// i0 → i2, i1 → i3 and i2 → i4; carries a robust 4-path.
pub fn chained_triangles() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(
        &[("i0", "i1"), ("i1", "i2"), ("i2", "i3"), ("i3", "i4"), ("i0", "i2"), ("i1", "i3"), ("i2", "i4")],
        "i0",
        "i4",
    )
    .expect("valid fixture")
}

/// `o → h → d`.
pub fn two_edge_path() -> TwoTerminalDag {
    TwoTerminalDag::from_edges(&[("o", "h"), ("h", "d")], "o", "d").expect("valid fixture")
}
