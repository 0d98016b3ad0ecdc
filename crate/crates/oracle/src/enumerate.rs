//! Depth-first generation of planar diagrams.
//!
//! Starting from a root (the external vertex, or one internal vertex for
//! vacuum diagrams) the smallest unpaired half-edge is either paired with
//! an unpaired half-edge in the same partial face, or attached to a newly
//! discovered vertex. Every connected planar diagram arises exactly once
//! with its vertices numbered in discovery order.

use rayon::prelude::*;

use crate::diagram::{rotate, RibbonDiagram, VertexKind};
use crate::OracleError;

/// Largest total order the enumerator accepts.
pub const HARD_CAP: usize = 6;

const NONE: usize = usize::MAX;

/// How vertex rotations are accounted for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// A new cross vertex is attached at position 0 only, an avoid vertex
    /// at positions 0 and 1; every structure has weight 1.
    Reduced,
    /// New vertices are attached at all four positions and the count is
    /// multiplied by `4^{-j} 2^{-k}` (non-root vertices only).
    Labeled,
}

impl Normalization {
    fn positions(self, kind: VertexKind) -> &'static [usize] {
        match (self, kind) {
            (Normalization::Reduced, VertexKind::Cross) => &[0],
            (Normalization::Reduced, VertexKind::Avoid) => &[0, 1],
            (Normalization::Labeled, _) => &[0, 1, 2, 3],
        }
    }

    /// Weight of one generated structure with `j`, `k` non-root vertices,
    /// as `1 / denominator`.
    pub fn denominator(self, j: usize, k: usize) -> u64 {
        match self {
            Normalization::Reduced => 1,
            Normalization::Labeled => 4u64.pow(j as u32) * 2u64.pow(k as u32),
        }
    }
}

/// Starting point of the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Root {
    /// External vertex with the given number of legs.
    Legs(usize),
    /// Internal vertex 0 of the given kind, for vacuum diagrams.
    Vertex(VertexKind),
}

/// Accumulator fed with every complete diagram.
pub trait Tally: Default + Send {
    fn visit(&mut self, d: &RibbonDiagram);
    fn merge(&mut self, other: Self);
}

struct Walker<'a, T> {
    d: RibbonDiagram,
    max_vertices: usize,
    mode: Normalization,
    allowed: &'a [VertexKind],
    tally: &'a mut T,
}

impl<T: Tally> Walker<'_, T> {
    fn smallest_open(&self) -> Option<usize> {
        self.d.pairing.iter().position(|&p| p == NONE)
    }

    /// Partial-face label of every half-edge; unpaired half-edges are
    /// treated as leaves.
    fn face_labels(&self) -> Vec<usize> {
        let h = self.d.pairing.len();
        let mut label = vec![NONE; h];
        for start in 0..h {
            if label[start] != NONE {
                continue;
            }
            let mut cur = start;
            while label[cur] == NONE {
                label[cur] = start;
                let p = self.d.pairing[cur];
                cur = rotate(self.d.legs, if p == NONE { cur } else { p });
            }
        }
        label
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.d.pairing[a] = b;
        self.d.pairing[b] = a;
    }

    fn unpair(&mut self, a: usize, b: usize) {
        self.d.pairing[a] = NONE;
        self.d.pairing[b] = NONE;
    }

    fn push_vertex(&mut self, kind: VertexKind) -> usize {
        let base = self.d.pairing.len();
        self.d.kinds.push(kind);
        self.d.pairing.extend([NONE; 4]);
        base
    }

    fn pop_vertex(&mut self) {
        self.d.kinds.pop();
        let len = self.d.pairing.len() - 4;
        self.d.pairing.truncate(len);
    }

    /// Choices available for the smallest open half-edge `h`.
    fn choices(&self, h: usize) -> Vec<Choice> {
        let mut out = Vec::new();
        let open: Vec<usize> = (h + 1..self.d.pairing.len())
            .filter(|&i| self.d.pairing[i] == NONE)
            .collect();
        if !open.is_empty() {
            let faces = self.face_labels();
            out.extend(open.into_iter().filter(|&i| faces[i] == faces[h]).map(Choice::Pair));
        }
        if self.d.kinds.len() < self.max_vertices {
            for &kind in self.allowed {
                for &p in self.mode.positions(kind) {
                    out.push(Choice::Attach(kind, p));
                }
            }
        }
        out
    }

    fn apply(&mut self, h: usize, c: Choice) {
        match c {
            Choice::Pair(o) => self.pair(h, o),
            Choice::Attach(kind, p) => {
                let base = self.push_vertex(kind);
                self.pair(h, base + p);
            }
        }
    }

    fn undo(&mut self, h: usize, c: Choice) {
        match c {
            Choice::Pair(o) => self.unpair(h, o),
            Choice::Attach(..) => {
                let o = self.d.pairing[h];
                self.unpair(h, o);
                self.pop_vertex();
            }
        }
    }

    fn run(&mut self) {
        let Some(h) = self.smallest_open() else {
            self.tally.visit(&self.d);
            return;
        };
        for c in self.choices(h) {
            self.apply(h, c);
            self.run();
            self.undo(h, c);
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Choice {
    Pair(usize),
    Attach(VertexKind, usize),
}

fn initial(root: Root) -> RibbonDiagram {
    match root {
        Root::Legs(l) => RibbonDiagram {
            legs: l,
            kinds: vec![],
            pairing: vec![NONE; l],
        },
        Root::Vertex(kind) => RibbonDiagram {
            legs: 0,
            kinds: vec![kind],
            pairing: vec![NONE; 4],
        },
    }
}

/// Runs the enumeration with at most `max_vertices` internal vertices
/// (the root vertex included for vacuum diagrams).
///
/// Work is split over the first decision; partial tallies are merged in
/// the order of the choices, so the result does not depend on scheduling.
pub fn enumerate<T: Tally>(root: Root, max_vertices: usize, mode: Normalization) -> Result<T, OracleError> {
    enumerate_restricted(root, max_vertices, mode, &[VertexKind::Cross, VertexKind::Avoid])
}

/// As [`enumerate`], discovering only vertices of the `allowed` kinds.
pub fn enumerate_restricted<T: Tally>(
    root: Root,
    max_vertices: usize,
    mode: Normalization,
    allowed: &[VertexKind],
) -> Result<T, OracleError> {
    if max_vertices > HARD_CAP {
        return Err(OracleError::OrderCapExceeded {
            requested: max_vertices,
            cap: HARD_CAP,
        });
    }
    let start = initial(root);
    let mut scratch = T::default();
    let first = {
        let w = Walker {
            d: start.clone(),
            max_vertices,
            mode,
            allowed,
            tally: &mut scratch,
        };
        match w.smallest_open() {
            Some(h) => w.choices(h).into_iter().map(|c| (h, c)).collect::<Vec<_>>(),
            None => {
                let mut tally = T::default();
                tally.visit(&start);
                return Ok(tally);
            }
        }
    };
    let parts: Vec<T> = first
        .into_par_iter()
        .map(|(h, c)| {
            let mut tally = T::default();
            let mut w = Walker {
                d: start.clone(),
                max_vertices,
                mode,
                allowed,
                tally: &mut tally,
            };
            w.apply(h, c);
            w.run();
            tally
        })
        .collect();
    let mut total = T::default();
    for p in parts {
        total.merge(p);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[derive(Default)]
    struct ByVertices(BTreeMap<(usize, usize), u64>, bool);

    impl Tally for ByVertices {
        fn visit(&mut self, d: &RibbonDiagram) {
            if d.genus().ok() != Some(0) {
                self.1 = true;
            }
            *self
                .0
                .entry((d.count(VertexKind::Cross), d.count(VertexKind::Avoid)))
                .or_default() += 1;
        }
        fn merge(&mut self, other: Self) {
            for (k, v) in other.0 {
                *self.0.entry(k).or_default() += v;
            }
            self.1 |= other.1;
        }
    }

    #[test]
    fn quartic_two_point_counts() {
        // rooted planar maps of the quartic one-matrix model: 1, 2, 9, 54, 378
        let t: ByVertices = enumerate(Root::Legs(2), 4, Normalization::Reduced).unwrap();
        assert!(!t.1, "non-planar diagram generated");
        let cross_only: Vec<u64> = (0..=4).map(|j| t.0.get(&(j, 0)).copied().unwrap_or(0)).collect();
        // with only cross vertices the strands never matter for counting
        assert_eq!(cross_only, vec![1, 2, 9, 54, 378]);
        let avoid_only: Vec<u64> = (0..=4).map(|k| t.0.get(&(0, k)).copied().unwrap_or(0)).collect();
        // two positions per avoid vertex: weight 2^k against half the symmetry
        assert_eq!(avoid_only, vec![1, 4, 36, 432, 6048]);
    }

    #[test]
    fn labeled_agrees_with_reduced() {
        let r: ByVertices = enumerate(Root::Legs(4), 3, Normalization::Reduced).unwrap();
        let l: ByVertices = enumerate(Root::Legs(4), 3, Normalization::Labeled).unwrap();
        for (&(j, k), &n) in &r.0 {
            let lab = l.0[&(j, k)];
            assert_eq!(lab, n * Normalization::Labeled.denominator(j, k));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = enumerate::<ByVertices>(Root::Legs(2), 7, Normalization::Reduced);
        assert!(matches!(e, Err(OracleError::OrderCapExceeded { .. })));
    }
}
