//! Generating functions assembled from enumerated diagrams.

use std::collections::BTreeMap;

use tangle_ring::{NPoly, Rational};
use tangle_series::{BiSeries, TruncSeries, Var};

use crate::channel::{channel_classify, Channels};
use crate::diagram::{LegPairing, RibbonDiagram, VertexKind};
use crate::enumerate::{enumerate, enumerate_restricted, Normalization, Root, Tally};
use crate::OracleError;

/// Default total order of the oracle.
pub const DEFAULT_ORDER: usize = 5;

/// Quantity whose coefficients the oracle computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleObservable {
    /// Connected two-point function.
    G,
    /// Four-point function with diagonally opposite legs on one strand.
    Gamma1,
    /// Four-point function with upper and lower strands.
    Gamma2,
    /// Vacuum (free energy) diagrams.
    F,
}

impl OracleObservable {
    pub fn legs(self) -> usize {
        match self {
            OracleObservable::G => 2,
            OracleObservable::Gamma1 | OracleObservable::Gamma2 => 4,
            OracleObservable::F => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OracleObservable::G => "G",
            OracleObservable::Gamma1 => "Gamma1",
            OracleObservable::Gamma2 => "Gamma2",
            OracleObservable::F => "F",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "G" => Some(OracleObservable::G),
            "Gamma1" | "Γ1" => Some(OracleObservable::Gamma1),
            "Gamma2" | "Γ2" => Some(OracleObservable::Gamma2),
            "F" => Some(OracleObservable::F),
            _ => None,
        }
    }
}

/// Counts by vertex content and closed loops.
#[derive(Debug, Default)]
pub struct LoopTally(pub BTreeMap<(usize, usize, usize), u64>);

impl Tally for LoopTally {
    fn visit(&mut self, d: &RibbonDiagram) {
        let (loops, _) = d.strands();
        *self
            .0
            .entry((d.count(VertexKind::Cross), d.count(VertexKind::Avoid), loops))
            .or_default() += 1;
    }

    fn merge(&mut self, other: Self) {
        for (k, v) in other.0 {
            *self.0.entry(k).or_default() += v;
        }
    }
}

/// Classification key of a connected four-leg diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FourPointKey {
    pub j: usize,
    pub k: usize,
    pub pairing: LegPairing,
    pub channels: Channels,
    pub loops: usize,
}

/// Four-leg diagrams that stay connected without the external vertex.
#[derive(Debug, Default)]
pub struct FourPointTally(pub BTreeMap<FourPointKey, u64>);

impl Tally for FourPointTally {
    fn visit(&mut self, d: &RibbonDiagram) {
        if !d.connected_without_root() {
            return;
        }
        let (loops, pairing) = d.strands();
        let key = FourPointKey {
            j: d.count(VertexKind::Cross),
            k: d.count(VertexKind::Avoid),
            pairing: pairing.expect("four legs"),
            channels: channel_classify(d).expect("four legs"),
            loops,
        };
        *self.0.entry(key).or_default() += 1;
    }

    fn merge(&mut self, other: Self) {
        for (k, v) in other.0 {
            *self.0.entry(k).or_default() += v;
        }
    }
}

fn add_term(s: &mut BiSeries<NPoly>, j: usize, k: usize, loops: usize, w: Rational) {
    let (j, k) = (j as u32, k as u32);
    let cur = s.coeff(j, k).expect("within order");
    s.set(j, k, &cur + &NPoly::monomial(loops as u32, w));
}

fn weight(count: u64, den: u64) -> Rational {
    Rational::from((count, den))
}

/// Bare (`t = 1`) two-point function through total order `order`.
pub fn bare_two_point(order: usize, mode: Normalization) -> Result<BiSeries<NPoly>, OracleError> {
    let tally: LoopTally = enumerate(Root::Legs(2), order, mode)?;
    let mut s = BiSeries::zero((1, 1), order as u32);
    for (&(j, k, loops), &c) in &tally.0 {
        add_term(&mut s, j, k, loops, weight(c, mode.denominator(j, k)));
    }
    Ok(s)
}

/// Bare two-point function with cross vertices only, in the single coupling `g`.
pub fn bare_two_point_crossings(order: usize, mode: Normalization) -> Result<TruncSeries<NPoly>, OracleError> {
    let tally: LoopTally = enumerate_restricted(Root::Legs(2), order, mode, &[VertexKind::Cross])?;
    let mut c = vec![NPoly::new(); order + 1];
    for (&(j, _, loops), &n) in &tally.0 {
        c[j] = &c[j] + &NPoly::monomial(loops as u32, weight(n, mode.denominator(j, 0)));
    }
    Ok(TruncSeries::new(Var::G, c))
}

/// Bare vacuum generating function through total order `order`.
///
/// Diagrams are rooted at a half-edge of a cross vertex (or of an avoid
/// vertex when there are none) and the rooting multiplicity is divided out.
pub fn bare_vacuum(order: usize, mode: Normalization) -> Result<BiSeries<NPoly>, OracleError> {
    let mut s = BiSeries::zero((1, 1), order as u32);
    if order == 0 {
        return Ok(s);
    }
    let cross: LoopTally = enumerate(Root::Vertex(VertexKind::Cross), order, mode)?;
    for (&(j, k, loops), &c) in &cross.0 {
        add_term(
            &mut s,
            j,
            k,
            loops,
            weight(c, 4 * j as u64 * mode.denominator(j - 1, k)),
        );
    }
    let avoid: LoopTally = enumerate(Root::Vertex(VertexKind::Avoid), order, mode)?;
    for (&(j, k, loops), &c) in &avoid.0 {
        if j == 0 {
            add_term(
                &mut s,
                j,
                k,
                loops,
                weight(c, 2 * k as u64 * mode.denominator(0, k - 1)),
            );
        }
    }
    Ok(s)
}

/// Bare four-point functions split by strand pairing and channel.
#[derive(Debug, Clone)]
pub struct BareFourPoint {
    pub order: usize,
    /// All connected diagrams, by pairing.
    pub gamma: BTreeMap<LegPairing, BiSeries<NPoly>>,
    /// Horizontally irreducible diagrams, by pairing.
    pub h: BTreeMap<LegPairing, BiSeries<NPoly>>,
    /// Vertically irreducible diagrams, by pairing.
    pub v: BTreeMap<LegPairing, BiSeries<NPoly>>,
    /// Two-particle irreducible diagrams, by pairing.
    pub tpi: BTreeMap<LegPairing, BiSeries<NPoly>>,
}

const PAIRINGS: [LegPairing; 3] = [LegPairing::Diagonal, LegPairing::UpperLower, LegPairing::LeftRight];

pub fn bare_four_point(order: usize, mode: Normalization) -> Result<BareFourPoint, OracleError> {
    let tally: FourPointTally = enumerate(Root::Legs(4), order, mode)?;
    let empty = || {
        PAIRINGS
            .iter()
            .map(|&p| (p, BiSeries::zero((1, 1), order as u32)))
            .collect::<BTreeMap<_, _>>()
    };
    let mut out = BareFourPoint {
        order,
        gamma: empty(),
        h: empty(),
        v: empty(),
        tpi: empty(),
    };
    for (key, &c) in &tally.0 {
        let w = weight(c, mode.denominator(key.j, key.k));
        let p = key.pairing;
        add_term(
            out.gamma.get_mut(&p).expect("pairing"),
            key.j,
            key.k,
            key.loops,
            w.clone(),
        );
        if !key.channels.h_reducible {
            add_term(out.h.get_mut(&p).expect("pairing"), key.j, key.k, key.loops, w.clone());
        }
        if !key.channels.v_reducible {
            add_term(out.v.get_mut(&p).expect("pairing"), key.j, key.k, key.loops, w.clone());
        }
        if !key.channels.two_particle_reducible {
            add_term(out.tpi.get_mut(&p).expect("pairing"), key.j, key.k, key.loops, w);
        }
    }
    Ok(out)
}

/// Exact bare coefficient of `g1^j g2^k` at `t = 1`.
pub fn enumerate_coefficient(obs: OracleObservable, j: usize, k: usize) -> Result<NPoly, OracleError> {
    enumerate_coefficient_with(obs, j, k, Normalization::Reduced)
}

pub fn enumerate_coefficient_with(
    obs: OracleObservable,
    j: usize,
    k: usize,
    mode: Normalization,
) -> Result<NPoly, OracleError> {
    let order = j + k;
    let s = match obs {
        OracleObservable::G => bare_two_point(order, mode)?,
        OracleObservable::F => bare_vacuum(order, mode)?,
        OracleObservable::Gamma1 => bare_four_point(order, mode)?.gamma[&LegPairing::Diagonal].clone(),
        OracleObservable::Gamma2 => bare_four_point(order, mode)?.gamma[&LegPairing::UpperLower].clone(),
    };
    Ok(s.coeff(j as u32, k as u32)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn np(c: &[i64]) -> NPoly {
        NPoly::from_ints(c)
    }

    #[test]
    fn lowest_orders() {
        assert_eq!(enumerate_coefficient(OracleObservable::Gamma1, 1, 0).unwrap(), np(&[1]));
        assert_eq!(enumerate_coefficient(OracleObservable::Gamma2, 0, 1).unwrap(), np(&[1]));
        assert_eq!(enumerate_coefficient(OracleObservable::Gamma1, 0, 1).unwrap(), np(&[0]));
        // a cross vertex closed on itself carries one loop, with weight 2/4
        let f = enumerate_coefficient(OracleObservable::F, 1, 0).unwrap();
        assert_eq!(f, NPoly::monomial(1, Rational::from((1, 2))));
    }

    #[test]
    fn single_coupling_two_point_is_the_diagonal() {
        let one = bare_two_point_crossings(3, Normalization::Reduced).unwrap();
        let two = bare_two_point(3, Normalization::Reduced).unwrap();
        for j in 0..=3 {
            assert_eq!(one.coeff(j).unwrap(), &two.coeff(j as u32, 0).unwrap());
        }
    }

    #[test]
    fn vacuum_roots_agree() {
        // a coefficient with both vertex kinds is reachable from either root
        let mode = Normalization::Reduced;
        let avoid: LoopTally = enumerate(Root::Vertex(VertexKind::Avoid), 3, mode).unwrap();
        let cross = bare_vacuum(3, mode).unwrap();
        for j in 1..=2usize {
            for k in 1..=(3 - j) {
                let mut from_avoid = NPoly::new();
                for (&(jj, kk, loops), &c) in &avoid.0 {
                    if (jj, kk) == (j, k) {
                        from_avoid = &from_avoid + &NPoly::monomial(loops as u32, weight(c, 2 * k as u64));
                    }
                }
                assert_eq!(cross.coeff(j as u32, k as u32).unwrap(), from_avoid, "j={j} k={k}");
            }
        }
    }
}
