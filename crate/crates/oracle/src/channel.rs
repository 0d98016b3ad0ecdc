//! Two-propagator cuts of four-leg diagrams.

use crate::diagram::{RibbonDiagram, UnionFind};
use crate::OracleError;

/// Reducibility of a connected four-leg diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Channels {
    /// Some two-propagator cut separates legs {0,1} from {2,3}.
    pub h_reducible: bool,
    /// Some two-propagator cut separates legs {0,3} from {1,2}.
    pub v_reducible: bool,
    /// Some two-propagator cut disconnects the internal graph.
    pub two_particle_reducible: bool,
}

/// Tests every unordered pair of internal propagators.
///
/// A cut counts for a channel only if it leaves exactly two pieces, each
/// holding one of the two leg pairs.
pub fn channel_classify(d: &RibbonDiagram) -> Result<Channels, OracleError> {
    if d.legs != 4 {
        return Err(OracleError::WrongLegCount {
            expected: 4,
            got: d.legs,
        });
    }
    let nv = d.kinds.len();
    let mut attach = [0usize; 4];
    for (leg, slot) in attach.iter_mut().enumerate() {
        *slot = d
            .vertex_of(d.pairing[leg])
            .ok_or_else(|| OracleError::Malformed("legs joined directly".into()))?;
    }
    let edges: Vec<(usize, usize)> = (d.legs..d.half_edges())
        .filter(|&h| d.pairing[h] > h)
        .map(|h| {
            (
                d.vertex_of(h).expect("internal"),
                d.vertex_of(d.pairing[h]).expect("internal"),
            )
        })
        .collect();
    let mut out = Channels::default();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let mut uf = UnionFind::new(nv);
            for (i, &(u, v)) in edges.iter().enumerate() {
                if i != a && i != b {
                    uf.union(u, v);
                }
            }
            let comps = uf.components();
            if comps < 2 {
                continue;
            }
            out.two_particle_reducible = true;
            if comps != 2 {
                continue;
            }
            let c: Vec<usize> = attach.iter().map(|&v| uf.find(v)).collect();
            if c[0] == c[1] && c[2] == c[3] && c[0] != c[2] {
                out.h_reducible = true;
            }
            if c[0] == c[3] && c[1] == c[2] && c[0] != c[1] {
                out.v_reducible = true;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::VertexKind::Cross;

    #[test]
    fn single_crossing_is_irreducible() {
        let d = RibbonDiagram::new(4, vec![Cross], vec![4, 7, 6, 5, 0, 3, 2, 1]).unwrap();
        assert_eq!(channel_classify(&d).unwrap(), Channels::default());
    }

    #[test]
    fn two_crossings_chain_in_one_channel_each() {
        use crate::enumerate::{enumerate, Normalization, Root, Tally};

        #[derive(Default)]
        struct Seen(Vec<Channels>);
        impl Tally for Seen {
            fn visit(&mut self, d: &RibbonDiagram) {
                if d.count(Cross) == 2 && d.kinds.len() == 2 && d.connected_without_root() {
                    self.0.push(channel_classify(d).unwrap());
                }
            }
            fn merge(&mut self, other: Self) {
                self.0.extend(other.0);
            }
        }
        let seen: Seen = enumerate(Root::Legs(4), 2, Normalization::Reduced).unwrap();
        let h = seen.0.iter().filter(|c| c.h_reducible).count();
        let v = seen.0.iter().filter(|c| c.v_reducible).count();
        assert!(h > 0 && h == v);
        assert!(seen.0.iter().all(|c| !(c.h_reducible && c.v_reducible)));
    }

    #[test]
    fn wrong_legs() {
        let d = RibbonDiagram::new(2, vec![], vec![1, 0]).unwrap();
        assert_eq!(
            channel_classify(&d),
            Err(OracleError::WrongLegCount { expected: 4, got: 2 })
        );
    }
}
