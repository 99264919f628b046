//! The drawn example graphs, shipped as JSON under `fixtures/`.
//!
//! Colours are read as blue = +1, red = -1. Figure 1 only has the expected
//! spectrum under this reading (the opposite reading gives `[2^6, -3^4]`).

use crate::graph::SignedGraph;
use crate::io;

pub const FIGURE1_JSON: &str = include_str!("../fixtures/figure1.json");
pub const FIGURE2_JSON: &str = include_str!("../fixtures/figure2.json");
pub const FIGURE3_JSON: &str = include_str!("../fixtures/figure3.json");

/// Figure 1: `-Λ(K5)` up to switching, spectrum `[3^4, -2^6]`.
pub fn figure1() -> SignedGraph {
    io::parse_json(FIGURE1_JSON).expect("figure1 fixture parses")
}

/// Figure 2: 12-vertex 8-regular graph, spectrum `[4^4, -2^8]`.
pub fn figure2() -> SignedGraph {
    io::parse_json(FIGURE2_JSON).expect("figure2 fixture parses")
}

/// Figure 3: the signed `K6` "pentagon", spectrum `[√5^3, -√5^3]`.
pub fn pentagon() -> SignedGraph {
    io::parse_json(FIGURE3_JSON).expect("figure3 fixture parses")
}

/// Look a fixture up by name (`figure1`, `figure2`, `figure3`/`pentagon`).
pub fn by_name(name: &str) -> Option<SignedGraph> {
    match name {
        "figure1" => Some(figure1()),
        "figure2" => Some(figure2()),
        "figure3" | "pentagon" => Some(pentagon()),
        _ => None,
    }
}
