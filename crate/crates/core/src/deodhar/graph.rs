use std::collections::BTreeSet;

use super::{defect_set, DefectRecord, Mask};
use crate::error::{Error, Result};
use crate::heap::{build_heap, HeapEmbedding};
use crate::perm::Word;

/// The three zeros responsible for a zero-defect, as 1-based positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalZeros {
    /// Closest zero on the lower-left boundary ray of the lower cone.
    pub lcz: usize,
    /// Closest zero on the lower-right boundary ray.
    pub rcz: usize,
    /// The defect itself.
    pub mcz: usize,
}

impl CriticalZeros {
    pub fn as_set(&self) -> BTreeSet<usize> {
        BTreeSet::from([self.lcz, self.rcz, self.mcz])
    }
}

fn closest_zero(h: &HeapEmbedding, m: &Mask, j: usize, dc: i32) -> Option<usize> {
    h.diagonal_run(j, dc, -1)
        .take_while(|&a| a < j)
        .find(|&a| !m.bit(a))
}

fn zeros_for(h: &HeapEmbedding, m: &Mask, j: usize) -> Result<CriticalZeros> {
    let missing = |side: &str| Error::Internal(format!("defect {j} has no {side} critical zero"));
    Ok(CriticalZeros {
        lcz: closest_zero(h, m, j, -1).ok_or_else(|| missing("left"))?,
        rcz: closest_zero(h, m, j, 1).ok_or_else(|| missing("right"))?,
        mcz: j,
    })
}

pub fn critical_zeros(a: &Word, m: &Mask, j: usize) -> Result<CriticalZeros> {
    let rec = defect_set(a, m)?;
    if !rec.zero_defects.contains(&j) {
        return Err(Error::NotZeroDefect(j));
    }
    let h = build_heap(a)?;
    zeros_for(&h, m, j)
}

/// Graph on the zero-defects of a mask, joining two defects when their
/// critical-zero triples meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectGraph {
    pub vertices: Vec<usize>,
    pub critical_zeros: Vec<CriticalZeros>,
    /// Pairs of indices into `vertices`.
    pub edges: Vec<(usize, usize)>,
}

impl DefectGraph {
    pub fn from_heap(h: &HeapEmbedding, m: &Mask, rec: &DefectRecord) -> Result<Self> {
        let vertices: Vec<usize> = rec.zero_defects.iter().copied().collect();
        let critical_zeros = vertices
            .iter()
            .map(|&j| zeros_for(h, m, j))
            .collect::<Result<Vec<_>>>()?;
        let sets: Vec<_> = critical_zeros.iter().map(CriticalZeros::as_set).collect();
        let mut edges = Vec::new();
        for u in 0..vertices.len() {
            for v in u + 1..vertices.len() {
                if !sets[u].is_disjoint(&sets[v]) {
                    edges.push((u, v));
                }
            }
        }
        Ok(Self {
            vertices,
            critical_zeros,
            edges,
        })
    }

    /// A bare graph, for callers that only need the forest test.
    pub fn from_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        Self {
            vertices: (1..=vertex_count).collect(),
            critical_zeros: Vec::new(),
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of distinct positions that serve as a critical zero.
    pub fn critical_zero_count(&self) -> usize {
        self.critical_zeros
            .iter()
            .flat_map(|c| [c.lcz, c.rcz, c.mcz])
            .collect::<BTreeSet<_>>()
            .len()
    }
}

pub fn defect_graph(a: &Word, m: &Mask) -> Result<DefectGraph> {
    let h = build_heap(a)?;
    let rec = defect_set(a, m)?;
    DefectGraph::from_heap(&h, m, &rec)
}

pub fn is_forest(g: &DefectGraph) -> bool {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in &g.edges {
        let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s, None).unwrap()
    }

    #[test]
    fn forest_examples() {
        assert!(is_forest(&DefectGraph::from_edges(0, vec![])));
        assert!(is_forest(&DefectGraph::from_edges(1, vec![])));
        assert!(is_forest(&DefectGraph::from_edges(3, vec![(0, 1), (1, 2)])));
        assert!(!is_forest(&DefectGraph::from_edges(
            3,
            vec![(0, 1), (1, 2), (0, 2)]
        )));
    }

    #[test]
    fn mask_without_defects_gives_empty_graph() {
        let a = word("2 1 3 2");
        let g = defect_graph(&a, &Mask::ones(4)).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert!(is_forest(&g));
    }

    #[test]
    fn minimal_diamond_defect() {
        // zeros at the two middle letters and the top one: the top is a
        // zero-defect whose critical zeros are its diagonal neighbours
        let a = word("2 1 3 2");
        let m: Mask = "(1,0,0,0)".parse().unwrap();
        let rec = defect_set(&a, &m).unwrap();
        assert_eq!(rec.zero_defects, BTreeSet::from([4]));
        let cz = critical_zeros(&a, &m, 4).unwrap();
        assert_eq!(
            cz,
            CriticalZeros {
                lcz: 2,
                rcz: 3,
                mcz: 4
            }
        );
        let g = defect_graph(&a, &m).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn non_defect_position_is_rejected() {
        let a = word("2 1 3 2");
        let m: Mask = "(1,0,0,0)".parse().unwrap();
        assert_eq!(critical_zeros(&a, &m, 2), Err(Error::NotZeroDefect(2)));
    }

    #[test]
    fn string_diagram_example() {
        let a = word("4 3 2 1 5 4 3 2 6 5 4 7 6 5");
        let m: Mask = "(1,0,1,0,1,1,0,1,0,0,0,1,0,0)".parse().unwrap();
        let rec = defect_set(&a, &m).unwrap();
        assert_eq!(rec.product.to_string(), "1,2,3,6,5,4,8,7");
        let g = defect_graph(&a, &m).unwrap();
        assert_eq!(g.vertex_count(), rec.zero_defects.len());
        for (cz, &j) in g.critical_zeros.iter().zip(&g.vertices) {
            assert!(cz.lcz < j && cz.rcz < j);
            assert!(!m.bit(cz.lcz) && !m.bit(cz.rcz));
        }
        assert!(is_forest(&g));
    }
}
