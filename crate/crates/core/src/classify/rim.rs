use serde::Serialize;

use crate::error::{Error, Result};

use super::Partition;

/// A node of a Young diagram, 1-based row and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RimNode {
    pub row: usize,
    pub col: usize,
}

/// Rim nodes `(i, j)` with `(i+1, j+1)` outside the diagram, read from
/// left to right: by column, and bottom to top within a column.
pub fn rim(lambda: &Partition) -> Vec<RimNode> {
    let mut nodes = Vec::new();
    for i in 1..=lambda.len() {
        let first = lambda.part(i).max(1);
        for j in first..=lambda.part(i - 1) {
            nodes.push(RimNode { row: i, col: j });
        }
    }
    nodes.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)));
    nodes
}

/// The `p`-segments of the rim. Each segment takes up to `p` rim nodes,
/// starting at the column right after the last node of the previous one.
pub fn p_segments(lambda: &Partition, p: usize) -> Vec<Vec<RimNode>> {
    let nodes = rim(lambda);
    let mut segments = Vec::new();
    let mut start_col = 1;
    loop {
        let seg: Vec<RimNode> = nodes.iter().filter(|n| n.col >= start_col).take(p).copied().collect();
        let Some(last) = seg.last() else { break };
        start_col = last.col + 1;
        segments.push(seg);
    }
    segments
}

/// The `p`-rim: the union of the `p`-segments, in reading order.
pub fn p_rim(lambda: &Partition, p: usize) -> Vec<RimNode> {
    p_segments(lambda, p).concat()
}

/// `J(lambda)`: removes every `p`-rim node at the end of its row that is not
/// the `p`-th node of its segment.
pub fn big_j(lambda: &Partition, p: usize) -> Partition {
    let mut parts = lambda.parts().to_vec();
    for seg in p_segments(lambda, p) {
        for (k, node) in seg.iter().enumerate() {
            let row_end = node.col == lambda.part(node.row - 1);
            if row_end && k + 1 != p {
                parts[node.row - 1] -= 1;
            }
        }
    }
    Partition::try_new(parts).expect("J removes a valid set of nodes")
}

/// `j(lambda) = |lambda| - |J(lambda)|`.
pub fn small_j(lambda: &Partition, p: usize) -> usize {
    lambda.size() - big_j(lambda, p).size()
}

/// The Mullineux map `M(lambda) = (j(lambda), j(J lambda), j(J^2 lambda), ...)`
/// on `p`-restricted partitions.
pub fn mullineux(lambda: &Partition, p: usize) -> Result<Partition> {
    if !lambda.is_restricted(p) {
        return Err(Error::NotRestricted(format!("{lambda} is not {p}-restricted")));
    }
    let mut parts = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_empty() {
        let next = big_j(&cur, p);
        parts.push(cur.size() - next.size());
        cur = next;
    }
    Partition::try_new(parts).ok_or_else(|| Error::Mismatch(format!("M({lambda}) is not a partition")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn single_box() {
        assert_eq!(p_rim(&p(&[1]), 3), vec![RimNode { row: 1, col: 1 }]);
        assert_eq!(big_j(&p(&[1]), 3), Partition::empty());
        assert_eq!(small_j(&p(&[1]), 3), 1);
        assert_eq!(mullineux(&p(&[1]), 3).unwrap(), p(&[1]));
    }

    #[test]
    fn rim_is_a_ribbon() {
        let lam = p(&[4, 2, 2, 1]);
        let nodes = rim(&lam);
        assert_eq!(nodes.len(), lam.part(0) + lam.len() - 1);
        assert_eq!(nodes.first(), Some(&RimNode { row: 4, col: 1 }));
        assert_eq!(nodes.last(), Some(&RimNode { row: 1, col: 4 }));
    }

    #[test]
    fn large_p_is_conjugation() {
        for r in 1..7 {
            for lam in Partition::all(r) {
                assert_eq!(mullineux(&lam, 11).unwrap(), lam.conjugate(), "{lam:?}");
            }
        }
    }

    #[test]
    fn rejects_unrestricted() {
        assert!(mullineux(&p(&[3]), 3).is_err());
    }
}
