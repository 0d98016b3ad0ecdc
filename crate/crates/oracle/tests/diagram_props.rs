use proptest::prelude::*;
use std::sync::OnceLock;

use tangle_oracle::{channel_classify, enumerate, Normalization, RibbonDiagram, Root, Tally, VertexKind};

#[derive(Default)]
struct Collect(Vec<RibbonDiagram>);

impl Tally for Collect {
    fn visit(&mut self, d: &RibbonDiagram) {
        if d.connected_without_root() {
            self.0.push(d.clone());
        }
    }
    fn merge(&mut self, other: Self) {
        self.0.extend(other.0);
    }
}

fn planar_pool() -> &'static [RibbonDiagram] {
    static P: OnceLock<Vec<RibbonDiagram>> = OnceLock::new();
    P.get_or_init(|| {
        enumerate::<Collect>(Root::Legs(4), 3, Normalization::Labeled)
            .unwrap()
            .0
    })
}

fn random_diagram() -> impl Strategy<Value = RibbonDiagram> {
    (
        prop::collection::vec(any::<bool>(), 0..4),
        any::<u64>(),
        prop::sample::select(vec![0usize, 2, 4]),
    )
        .prop_map(|(kinds, seed, legs)| {
            let kinds: Vec<VertexKind> = kinds
                .into_iter()
                .map(|c| if c { VertexKind::Cross } else { VertexKind::Avoid })
                .collect();
            let h = legs + 4 * kinds.len();
            // deterministic shuffle from the seed
            let mut order: Vec<usize> = (0..h).collect();
            let mut s = seed | 1;
            for i in (1..h).rev() {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                order.swap(i, (s % (i as u64 + 1)) as usize);
            }
            let mut pairing = vec![0; h];
            for c in order.chunks(2) {
                pairing[c[0]] = c[1];
                pairing[c[1]] = c[0];
            }
            RibbonDiagram::new(legs, kinds, pairing).unwrap()
        })
}

fn connected(d: &RibbonDiagram) -> bool {
    // components of the map as a whole (the external vertex included)
    let h = d.half_edges();
    if h == 0 {
        return true;
    }
    let mut seen = vec![false; h];
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        if std::mem::replace(&mut seen[x], true) {
            continue;
        }
        stack.push(d.pairing[x]);
        stack.push(d.rotate(x));
    }
    seen.iter().all(|&s| s)
}

proptest! {
    #[test]
    fn euler_genus_is_nonnegative(d in random_diagram()) {
        prop_assume!(connected(&d));
        prop_assert!(d.genus().is_ok());
    }

    #[test]
    fn planar_four_leg_diagrams_reduce_in_one_channel_at_most(i in any::<prop::sample::Index>()) {
        let d = i.get(planar_pool());
        prop_assert_eq!(d.genus().ok(), Some(0));
        let c = channel_classify(d).unwrap();
        prop_assert!(!(c.h_reducible && c.v_reducible));
        prop_assert!(c.two_particle_reducible || !(c.h_reducible || c.v_reducible));
    }
}
