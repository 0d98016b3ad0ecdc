//! Canonical discovery against a literal sum over labeled Wick pairings.

use tangle_oracle::{bare_four_point, bare_two_point, LegPairing, Normalization, RibbonDiagram, VertexKind};
use tangle_ring::{NPoly, Rational};

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Sum over all perfect matchings of the half-edges, vertices labeled.
fn brute(legs: usize, j: usize, k: usize, four_pairing: Option<LegPairing>) -> NPoly {
    let mut kinds = vec![VertexKind::Cross; j];
    kinds.extend(vec![VertexKind::Avoid; k]);
    let h = legs + 4 * (j + k);
    let mut pairing = vec![usize::MAX; h];
    let mut acc = NPoly::new();
    fn rec(pairing: &mut Vec<usize>, legs: usize, kinds: &[VertexKind], want: Option<LegPairing>, acc: &mut NPoly) {
        let Some(a) = pairing.iter().position(|&p| p == usize::MAX) else {
            let d = RibbonDiagram::new(legs, kinds.to_vec(), pairing.clone()).unwrap();
            if !reachable(&d) || d.genus().ok() != Some(0) {
                return;
            }
            if legs == 4 && !d.connected_without_root() {
                return;
            }
            let (loops, pair) = d.strands();
            if legs == 4 && pair != want {
                return;
            }
            acc.add_term(loops as u32, Rational::from(1));
            return;
        };
        for b in a + 1..pairing.len() {
            if pairing[b] == usize::MAX {
                pairing[a] = b;
                pairing[b] = a;
                rec(pairing, legs, kinds, want, acc);
                pairing[a] = usize::MAX;
                pairing[b] = usize::MAX;
            }
        }
    }
    rec(&mut pairing, legs, &kinds, four_pairing, &mut acc);
    let den = factorial(j as u64) * factorial(k as u64) * 4u64.pow(j as u32) * 2u64.pow(k as u32);
    acc.scale(&Rational::from((1, den)))
}

/// Every vertex is connected to the external vertex.
fn reachable(d: &RibbonDiagram) -> bool {
    let nv = d.kinds.len();
    let mut seen = vec![false; nv];
    let mut stack: Vec<usize> = (0..d.legs).filter_map(|l| d.vertex_of(d.pairing[l])).collect();
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        for p in 0..4 {
            if let Some(w) = d.vertex_of(d.pairing[d.legs + 4 * v + p]) {
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[test]
fn two_point_matches_labeled_sum() {
    let s = bare_two_point(2, Normalization::Reduced).unwrap();
    for j in 0..=2usize {
        for k in 0..=(2 - j) {
            assert_eq!(
                s.coeff(j as u32, k as u32).unwrap(),
                brute(2, j, k, None),
                "j={j} k={k}"
            );
        }
    }
}

#[test]
fn four_point_matches_labeled_sum() {
    for mode in [Normalization::Reduced, Normalization::Labeled] {
        let f = bare_four_point(3, mode).unwrap();
        for j in 0..=3usize {
            for k in 0..=(3 - j) {
                if j + k == 0 {
                    continue;
                }
                for p in [LegPairing::Diagonal, LegPairing::UpperLower] {
                    let got = f.gamma[&p].coeff(j as u32, k as u32).unwrap();
                    assert_eq!(got, brute(4, j, k, Some(p)), "{mode:?} j={j} k={k} {p:?}");
                }
            }
        }
    }
}
