//! Exact polynomial interpolation in `x = cos θ`.

use tangle_ring::{Poly, Rational, Ring};

/// Newton divided differences through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    let n = xs.len();
    let mut coef: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = Rational::from(&coef[i] - &coef[i - 1]);
            let den = Rational::from(&xs[i] - &xs[i - j]);
            coef[i] = num / den;
        }
    }
    let mut dense = vec![Rational::new()];
    for i in (0..n).rev() {
        // dense ← dense·(x − xs[i]) + coef[i]
        let mut next = vec![Rational::new(); dense.len() + 1];
        for (k, c) in dense.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= Rational::from(c * &xs[i]);
        }
        next[0] += &coef[i];
        dense = next;
    }
    let mut p = Poly::new();
    for (k, c) in dense.into_iter().enumerate() {
        if !c.is_zero() {
            p.add_term(k as u32, c);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::rat;

    #[test]
    fn recovers_a_cubic() {
        let p = Poly::from_ints(&[3, 0, -2, 5]);
        let xs: Vec<Rational> = (1..=6).map(|i| rat(1, i)).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), p);
    }
}
