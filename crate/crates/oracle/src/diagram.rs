//! Ribbon graphs with a distinguished external vertex.

use crate::OracleError;

/// Interaction vertex of the two-coupling model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    /// `tr(M_a M_b M_a M_b)`: strands join opposite half-edges.
    Cross,
    /// `tr(M_a M_a M_b M_b)`: strands join half-edges (0,1) and (2,3).
    Avoid,
}

impl VertexKind {
    /// Position joined to `p` by a color strand.
    pub fn strand_partner(self, p: usize) -> usize {
        match self {
            VertexKind::Cross => (p + 2) % 4,
            VertexKind::Avoid => p ^ 1,
        }
    }
}

/// How the external strands of a four-leg diagram are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LegPairing {
    /// {0,2}{1,3}: diagonally opposite legs share a strand.
    Diagonal,
    /// {0,3}{1,2}: upper and lower strands.
    UpperLower,
    /// {0,1}{2,3}: left and right strands.
    LeftRight,
}

/// Planar Feynman diagram as a rotation system.
///
/// Half-edges `0..legs` sit on the external vertex in cyclic order
/// (for four legs: top-left, bottom-left, bottom-right, top-right);
/// internal vertex `v` owns half-edges `legs + 4v .. legs + 4v + 4`,
/// listed counterclockwise. `pairing` is the edge involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonDiagram {
    pub legs: usize,
    pub kinds: Vec<VertexKind>,
    pub pairing: Vec<usize>,
}

impl RibbonDiagram {
    pub fn new(legs: usize, kinds: Vec<VertexKind>, pairing: Vec<usize>) -> Result<Self, OracleError> {
        let d = RibbonDiagram { legs, kinds, pairing };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), OracleError> {
        let h = self.half_edges();
        if self.pairing.len() != h {
            return Err(OracleError::Malformed(format!(
                "{} half-edges but pairing of length {}",
                h,
                self.pairing.len()
            )));
        }
        for (i, &j) in self.pairing.iter().enumerate() {
            if j >= h || j == i || self.pairing[j] != i {
                return Err(OracleError::Malformed(format!("pairing is not an involution at {i}")));
            }
        }
        Ok(())
    }

    pub fn half_edges(&self) -> usize {
        self.legs + 4 * self.kinds.len()
    }

    pub fn count(&self, kind: VertexKind) -> usize {
        self.kinds.iter().filter(|&&k| k == kind).count()
    }

    /// Next half-edge counterclockwise around the same vertex.
    pub fn rotate(&self, h: usize) -> usize {
        rotate(self.legs, h)
    }

    /// Internal vertex owning `h`, `None` for a leg.
    pub fn vertex_of(&self, h: usize) -> Option<usize> {
        (h >= self.legs).then(|| (h - self.legs) / 4)
    }

    pub fn vertices(&self) -> usize {
        self.kinds.len() + usize::from(self.legs > 0)
    }

    pub fn edges(&self) -> usize {
        self.half_edges() / 2
    }

    pub fn faces(&self) -> usize {
        let h = self.half_edges();
        let mut seen = vec![false; h];
        let mut faces = 0;
        for start in 0..h {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.rotate(self.pairing[cur]);
            }
        }
        faces
    }

    /// Genus from `V − E + F = 2 − 2g`, or an error if that is not a
    /// nonnegative integer (the map must then be disconnected).
    pub fn genus(&self) -> Result<usize, OracleError> {
        let chi = self.vertices() as i64 - self.edges() as i64 + self.faces() as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(OracleError::Malformed(format!("Euler characteristic {chi}")));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Closed color loops and, for four legs, the external strand pairing.
    pub fn strands(&self) -> (usize, Option<LegPairing>) {
        let h = self.half_edges();
        let mut uf = UnionFind::new(h);
        for (i, &j) in self.pairing.iter().enumerate() {
            uf.union(i, j);
        }
        for (v, kind) in self.kinds.iter().enumerate() {
            let base = self.legs + 4 * v;
            for p in 0..4 {
                uf.union(base + p, base + kind.strand_partner(p));
            }
        }
        let comps = uf.components();
        let loops = comps - self.legs / 2;
        let pairing = (self.legs == 4).then(|| {
            if uf.find(0) == uf.find(2) {
                LegPairing::Diagonal
            } else if uf.find(0) == uf.find(3) {
                LegPairing::UpperLower
            } else {
                LegPairing::LeftRight
            }
        });
        (loops, pairing)
    }

    /// Whether the diagram stays connected once the external vertex is removed.
    pub fn connected_without_root(&self) -> bool {
        let n = self.legs + self.kinds.len();
        if n == 0 {
            return true;
        }
        let owner = |h: usize| {
            if h < self.legs {
                h
            } else {
                self.legs + (h - self.legs) / 4
            }
        };
        let mut uf = UnionFind::new(n);
        for (i, &j) in self.pairing.iter().enumerate() {
            uf.union(owner(i), owner(j));
        }
        uf.components() == 1
    }
}

pub(crate) fn rotate(legs: usize, h: usize) -> usize {
    if h < legs {
        (h + 1) % legs
    } else {
        let base = h - (h - legs) % 4;
        base + (h - base + 1) % 4
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_crossing() {
        // the external vertex is seen from outside, so leg i meets position -i
        let d = RibbonDiagram::new(4, vec![VertexKind::Cross], vec![4, 7, 6, 5, 0, 3, 2, 1]).unwrap();
        assert_eq!(d.genus().unwrap(), 0);
        assert_eq!(d.strands(), (0, Some(LegPairing::Diagonal)));
        assert!(d.connected_without_root());
    }

    #[test]
    fn mirrored_attachment_is_not_planar() {
        let d = RibbonDiagram::new(4, vec![VertexKind::Cross], vec![4, 5, 6, 7, 0, 1, 2, 3]).unwrap();
        assert_eq!(d.genus().unwrap(), 1);
    }

    #[test]
    fn nonplanar_self_pairing_has_genus_one() {
        // a lone cross vertex with opposite half-edges paired
        let d = RibbonDiagram::new(0, vec![VertexKind::Cross], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(d.vertices(), 1);
        assert_eq!(d.edges(), 2);
        assert_eq!(d.faces(), 1);
        assert_eq!(d.genus().unwrap(), 1);
    }

    #[test]
    fn bare_propagators() {
        let d = RibbonDiagram::new(4, vec![], vec![3, 2, 1, 0]).unwrap();
        assert!(!d.connected_without_root());
        assert_eq!(d.strands(), (0, Some(LegPairing::UpperLower)));
        assert!(RibbonDiagram::new(2, vec![], vec![0, 1]).is_err());
    }
}
