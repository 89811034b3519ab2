//! The four worked labelings, as data.

use alloc::vec::Vec;

use crate::group::GroupSpec;
use crate::labeling::{EdgeLabeling, SimpleGraph};

/// A labeled graph bundled with the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure {
    pub number: u8,
    pub graph: SimpleGraph,
    pub labeling: EdgeLabeling,
}

const FIGURE1_EDGES: [(usize, usize); 7] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (3, 6), (4, 7)];
const FIGURE1_LABELS: [[u64; 3]; 7] = [
    [1, 1, 1],
    [1, 0, 1],
    [0, 1, 1],
    [0, 0, 1],
    [1, 0, 0],
    [0, 1, 0],
    [1, 1, 0],
];

#[rustfmt::skip]
const FIGURE2_LABELS: [[u64; 2]; 23] = [
    [0, 0], [4, 0], [1, 0], [5, 0], [2, 0], [7, 0], [3, 0],
    [0, 1],
    [4, 1], [1, 1], [5, 1], [2, 1], [6, 1], [3, 1], [7, 1],
    [4, 2],
    [0, 2], [5, 2], [1, 2], [6, 2], [2, 2], [7, 2], [3, 2],
];

const FIGURE3_LABELS: [u64; 23] = [
    0, 12, 1, 13, 2, 14, 3, 15, 4, 16, 5, 17, 6, 19, 7, 20, 8, 21, 9, 22, 10, 23, 11,
];

const FIGURE4_LABELS: [[u64; 3]; 7] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 1, 0],
    [1, 1, 1],
    [1, 0, 1],
];

fn labels<const W: usize>(group: &GroupSpec, rows: &[[u64; W]]) -> EdgeLabeling {
    let labels = rows
        .iter()
        .map(|r| group.element(r.to_vec()).expect("figure data is reduced"))
        .collect::<Vec<_>>();
    EdgeLabeling {
        group: group.clone(),
        labels,
    }
}

/// Tree on 8 vertices with a `((Z_2)^3)^*`-antimagic labeling; vertex 0 is
/// the degree-4 root.
pub fn figure1() -> Figure {
    Figure {
        number: 1,
        graph: SimpleGraph::tree(8, FIGURE1_EDGES.to_vec()).expect("valid tree"),
        labeling: labels(&GroupSpec::elementary_two(3), &FIGURE1_LABELS),
    }
}

/// `P_24` over `Z_8 ⊕ Z_3`.
pub fn figure2() -> Figure {
    let group = GroupSpec::new(alloc::vec![8, 3]).expect("valid");
    Figure {
        number: 2,
        graph: SimpleGraph::path(24).expect("valid"),
        labeling: labels(&group, &FIGURE2_LABELS),
    }
}

/// `P_24` over `Z_24`.
pub fn figure3() -> Figure {
    Figure {
        number: 3,
        graph: SimpleGraph::path(24).expect("valid"),
        labeling: EdgeLabeling::cyclic(24, &FIGURE3_LABELS).expect("valid"),
    }
}

/// `P_8` over `(Z_2)^3`, A-antimagic.
pub fn figure4() -> Figure {
    Figure {
        number: 4,
        graph: SimpleGraph::path(8).expect("valid"),
        labeling: labels(&GroupSpec::elementary_two(3), &FIGURE4_LABELS),
    }
}

pub fn figure(number: u8) -> Option<Figure> {
    match number {
        1 => Some(figure1()),
        2 => Some(figure2()),
        3 => Some(figure3()),
        4 => Some(figure4()),
        _ => None,
    }
}
