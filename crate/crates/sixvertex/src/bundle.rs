//! The bare series bundle in `τ = q²` with coefficients in `ℚ[cos θ, sin θ]`.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use tangle_ring::{rat, Poly, Rational, Ring, ThetaElem};
use tangle_series::{TruncSeries, Var};

use crate::interp::interpolate;
use crate::point::{point_series, PointSeries};
use crate::relations::dprimes_n2;
use crate::SixVertexError;

type Ts = TruncSeries<ThetaElem>;

/// Bare two-color model data as `τ`-series.
///
/// `F` is fixed by `F(b_0 = 0) = 0`. `w1` is the first moment of the
/// eigenvalue density, `W_1 = −2(1 + cos θ) b_0 G`.
#[derive(Debug, Clone, PartialEq)]
pub struct BareSeriesBundle {
    pub order: usize,
    pub b0: Ts,
    pub w1: Ts,
    pub g: Ts,
    pub f: Ts,
    pub h: Ts,
    pub b: Ts,
    pub gamma_b: Ts,
    pub gamma_c: Ts,
    pub dprime_b: Ts,
    pub dprime_c: Ts,
    /// `G` as a series in `b_0`, one order beyond the `τ`-series.
    pub g_of_b0: Ts,
}

/// Series names in serialization order.
pub const SERIES_NAMES: [&str; 11] = [
    "b0", "w1", "g", "f", "h", "b", "gamma_b", "gamma_c", "dprime_b", "dprime_c", "g_of_b0",
];

fn theta(p: Poly) -> ThetaElem {
    ThetaElem::from_even(p)
}

fn two_x() -> ThetaElem {
    ThetaElem::x().scale(&Rational::from(2))
}

/// Builds the bundle through `τ^order`.
///
/// The bare series are computed exactly at `order + 4` rational values of
/// `cos θ` and interpolated; the two surplus points must agree with the
/// degree bounds, and the result is checked against the low-order anchors.
pub fn bare_bundle_n2(order: usize) -> Result<BareSeriesBundle, SixVertexError> {
    if order < 2 {
        return Err(SixVertexError::OrderTooLow(order));
    }
    let k = order + 1;
    let points: Vec<PointSeries> = (0..k + 3)
        .map(|i| point_series(&rat(1, i as i64 + 2), k))
        .collect::<Result<_, _>>()?;
    let xs: Vec<Rational> = points.iter().map(|p| p.x.clone()).collect();
    let fit = |series: &'static str, pick: &dyn Fn(&PointSeries) -> &[Rational], bound: &dyn Fn(usize) -> usize| {
        (0..=k)
            .map(|j| {
                let ys: Vec<Rational> = points.iter().map(|p| pick(p)[j].clone()).collect();
                let poly = interpolate(&xs, &ys);
                match poly.degree() {
                    Some(d) if d as usize > bound(j) => Err(SixVertexError::InterpolationDegree {
                        series,
                        k: j,
                        degree: d as usize,
                        bound: bound(j),
                    }),
                    _ => Ok(poly),
                }
            })
            .collect::<Result<Vec<Poly>, _>>()
    };
    let b0 = fit("b0", &|p| &p.b0_tau, &|j| j.saturating_sub(1))?;
    let g = fit("G(b0)", &|p| &p.g_b0, &|j| j)?;
    let bundle = BareSeriesBundle::from_bare(order, b0, g)?;
    bundle.check_parity()?;
    bundle.check_anchors(&anchors())?;
    Ok(bundle)
}

impl BareSeriesBundle {
    /// Extraction chain from `b_0(τ)` and `G(b_0)`, both through order `order + 1`.
    fn from_bare(order: usize, b0: Vec<Poly>, g_b0: Vec<Poly>) -> Result<Self, SixVertexError> {
        let b0 = Ts::new(Var::Tau, b0.into_iter().map(theta).collect());
        let g_of_b0 = Ts::new(Var::B0, g_b0.into_iter().map(theta).collect());
        // F = ∫ (G − 1)/(2 b_0) db_0
        let mut f_b0 = vec![ThetaElem::zero()];
        for (j, c) in g_of_b0.coeffs().iter().enumerate().skip(1) {
            f_b0.push(c.scale(&rat(1, 2 * j as i64)));
        }
        let f_b0 = Ts::new(Var::B0, f_b0);
        let h_b0 = f_b0.map(|c| c.dtheta());

        let g = g_of_b0.compose(&b0)?;
        let f = f_b0.compose(&b0)?;
        let h = h_b0.compose(&b0)?;
        let b = b0.mul(&g).mul(&g);
        let h_over_s = h.try_map(|c| c.div_sin())?;
        let one = ThetaElem::one();
        let num_b = g
            .add_scalar(&one.neg_ref())
            .scale(&rat(1, 2))
            .add(&h_over_s.mul_scalar(&ThetaElem::x()));
        let gamma_b = num_b.div(&b)?.add_scalar(&one.neg_ref());
        let gamma_c = h_over_s.neg().div(&b)?.add_scalar(&ThetaElem::from_i64(-2));
        let w1 = b0
            .mul(&g)
            .mul_scalar(&ThetaElem::x().add_ref(&one).scale(&Rational::from(-2)));

        let cut = |s: Ts| s.truncate(order);
        let gamma_b = cut(gamma_b)?;
        let gamma_c = cut(gamma_c)?;
        let b = cut(b)?;
        let c = b.mul_scalar(&two_x());
        let (dprime_b, dprime_c) = dprimes_n2(&gamma_b, &gamma_c, &b, &c)?;
        Ok(BareSeriesBundle {
            order,
            b0: cut(b0)?,
            w1: cut(w1)?,
            g: cut(g)?,
            f: cut(f)?,
            h: cut(h)?,
            b,
            gamma_b,
            gamma_c,
            dprime_b: cut(dprime_b)?,
            dprime_c: cut(dprime_c)?,
            g_of_b0,
        })
    }

    /// `c = 2 b cos θ`.
    pub fn c(&self) -> Ts {
        self.b.mul_scalar(&two_x())
    }

    pub fn series(&self, name: &str) -> Option<&Ts> {
        Some(match name {
            "b0" => &self.b0,
            "w1" => &self.w1,
            "g" => &self.g,
            "f" => &self.f,
            "h" => &self.h,
            "b" => &self.b,
            "gamma_b" => &self.gamma_b,
            "gamma_c" => &self.gamma_c,
            "dprime_b" => &self.dprime_b,
            "dprime_c" => &self.dprime_c,
            "g_of_b0" => &self.g_of_b0,
            _ => return None,
        })
    }

    /// The same bundle through a lower order.
    pub fn truncate(&self, order: usize) -> Result<Self, SixVertexError> {
        if order > self.order {
            return Err(SixVertexError::Series(tangle_series::SeriesError::BeyondTruncation {
                requested: order,
                order: self.order,
            }));
        }
        let cut = |s: &Ts| s.truncate(order);
        Ok(BareSeriesBundle {
            order,
            b0: cut(&self.b0)?,
            w1: cut(&self.w1)?,
            g: cut(&self.g)?,
            f: cut(&self.f)?,
            h: cut(&self.h)?,
            b: cut(&self.b)?,
            gamma_b: cut(&self.gamma_b)?,
            gamma_c: cut(&self.gamma_c)?,
            dprime_b: cut(&self.dprime_b)?,
            dprime_c: cut(&self.dprime_c)?,
            g_of_b0: self.g_of_b0.truncate(order + 1)?,
        })
    }

    /// `H` is odd in `θ`, every other series even.
    pub fn check_parity(&self) -> Result<(), SixVertexError> {
        for name in SERIES_NAMES {
            let s = self.series(name).expect("known name");
            let odd = name == "h";
            for (k, c) in s.coeffs().iter().enumerate() {
                let ok = if odd { c.is_odd() } else { c.is_even() };
                if !ok {
                    return Err(SixVertexError::Parity { series: name, k });
                }
            }
        }
        Ok(())
    }

    /// Checks every anchor within the truncation order.
    pub fn check_anchors(&self, anchors: &[Anchor]) -> Result<(), SixVertexError> {
        for a in anchors {
            let s = self.series(a.series).expect("anchor names a bundle series");
            if a.power > s.order() {
                continue;
            }
            let found = s.coeff(a.power)?;
            if found != &a.value {
                return Err(SixVertexError::AnchorMismatch {
                    anchor: format!("{} at tau^{}", a.series, a.power),
                    expected: a.value.to_string(),
                    found: found.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let series: serde_json::Map<String, Value> = SERIES_NAMES
            .iter()
            .map(|n| (n.to_string(), self.series(n).expect("known name").to_json()))
            .collect();
        json!({ "order": self.order, "series": series })
    }

    /// Parses a serialized bundle and re-runs the parity and anchor checks.
    pub fn from_json(v: &Value) -> Result<Self, SixVertexError> {
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| SixVertexError::Parse("missing order".into()))? as usize;
        let series = v
            .get("series")
            .ok_or_else(|| SixVertexError::Parse("missing series".into()))?;
        let get = |name: &str| -> Result<Ts, SixVertexError> {
            let s = series
                .get(name)
                .ok_or_else(|| SixVertexError::Parse(format!("missing series {name}")))?;
            Ok(Ts::from_json(s)?)
        };
        let bundle = BareSeriesBundle {
            order,
            b0: get("b0")?,
            w1: get("w1")?,
            g: get("g")?,
            f: get("f")?,
            h: get("h")?,
            b: get("b")?,
            gamma_b: get("gamma_b")?,
            gamma_c: get("gamma_c")?,
            dprime_b: get("dprime_b")?,
            dprime_c: get("dprime_c")?,
            g_of_b0: get("g_of_b0")?,
        };
        for name in SERIES_NAMES {
            let s = bundle.series(name).expect("known name");
            let want = if name == "g_of_b0" { order + 1 } else { order };
            if s.order() != want {
                return Err(SixVertexError::Parse(format!(
                    "{name} has order {}, expected {want}",
                    s.order()
                )));
            }
        }
        bundle.check_parity()?;
        bundle.check_anchors(&anchors())?;
        Ok(bundle)
    }
}

/// Known coefficient of one bundle series.
#[derive(Debug, Clone, PartialEq)]
pub struct Anchor {
    pub series: &'static str,
    pub power: usize,
    pub value: ThetaElem,
}

fn anchor(series: &'static str, power: usize, value: ThetaElem) -> Anchor {
    Anchor { series, power, value }
}

fn lin(c0: i64, c1: i64) -> ThetaElem {
    theta(Poly::from_ints(&[c0, c1]))
}

fn cos_combination(terms: &[(u32, i64)]) -> ThetaElem {
    let terms: Vec<(u32, Rational)> = terms.iter().map(|&(k, c)| (k, Rational::from(c))).collect();
    ThetaElem::from_cos_combination(&terms)
}

/// Low-order closed forms the engine must reproduce.
///
/// The `τ²` coefficient of `Γ_c` is `2 − 4x`: it follows from
/// `Γ_c = −H/(b sin θ) − 2` with the other anchors, and equals the
/// diagram count of `2Γ_2` at two colors.
pub fn anchors() -> Vec<Anchor> {
    let mut out = literal_anchors();
    for a in &mut out {
        if a.series == "gamma_c" && a.power == 2 {
            a.value = lin(2, -4);
        }
    }
    out
}

/// The anchor list in its customary form, with `Γ_c = 2xτ + 2(1−x)τ² + …`.
pub fn literal_anchors() -> Vec<Anchor> {
    let zero = ThetaElem::zero();
    let mut out = vec![
        anchor("b0", 0, zero.clone()),
        anchor("b0", 1, ThetaElem::one()),
        anchor("b0", 2, lin(-6, -12)),
        anchor("g", 0, ThetaElem::one()),
        anchor("g", 1, lin(2, 4)),
        anchor("gamma_b", 0, zero.clone()),
        anchor("gamma_b", 1, ThetaElem::one()),
        anchor("gamma_b", 2, ThetaElem::from_i64(-1)),
        anchor("gamma_c", 0, zero.clone()),
        anchor("gamma_c", 1, lin(0, 2)),
        anchor("gamma_c", 2, lin(2, -2)),
    ];
    for k in 0..5 {
        out.push(anchor("dprime_b", k, zero.clone()));
        out.push(anchor("dprime_c", k, zero.clone()));
    }
    out.push(anchor(
        "dprime_b",
        5,
        cos_combination(&[(0, 6), (1, 12), (2, 4), (3, 4)]),
    ));
    out.push(anchor(
        "dprime_c",
        5,
        cos_combination(&[(0, 8), (1, 24), (2, 8), (3, 10), (5, 2)]),
    ));
    out
}

/// Cache file for a bundle of the given order.
pub fn cache_path(dir: &Path, order: usize) -> PathBuf {
    dir.join(format!("bundle_n2_{order}.json"))
}

/// [`bare_bundle_n2`] through an on-disk cache keyed by order.
///
/// A cached bundle of higher order is truncated. Unreadable or
/// inconsistent cache files are recomputed and overwritten.
pub fn bare_bundle_n2_cached(order: usize, dir: &Path) -> Result<BareSeriesBundle, SixVertexError> {
    if order < 2 {
        return Err(SixVertexError::OrderTooLow(order));
    }
    let mut cached: Vec<usize> = fs::read_dir(dir)
        .map(|rd| {
            rd.filter_map(|e| e.ok())
                .filter_map(|e| {
                    let name = e.file_name().into_string().ok()?;
                    name.strip_prefix("bundle_n2_")?.strip_suffix(".json")?.parse().ok()
                })
                .filter(|&k: &usize| k >= order)
                .collect()
        })
        .unwrap_or_default();
    cached.sort_unstable();
    for k in cached {
        let loaded = fs::read_to_string(cache_path(dir, k))
            .ok()
            .and_then(|text| serde_json::from_str::<Value>(&text).ok())
            .and_then(|v| BareSeriesBundle::from_json(&v).ok());
        if let Some(b) = loaded {
            return b.truncate(order);
        }
    }
    let bundle = bare_bundle_n2(order)?;
    fs::create_dir_all(dir).map_err(|e| SixVertexError::Io(e.to_string()))?;
    let text = serde_json::to_string(&bundle.to_json()).map_err(|e| SixVertexError::Io(e.to_string()))?;
    let path = cache_path(dir, order);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text).map_err(|e| SixVertexError::Io(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| SixVertexError::Io(e.to_string()))?;
    Ok(bundle)
}

/// Ratio-test estimate of the radius of convergence from real
/// coefficients: the last linear extrapolation `k r_k − (k−1) r_{k−1}` of
/// `r_k = c_{k−1}/c_k`.
pub fn ratio_estimate(coeffs: &[f64]) -> Option<f64> {
    let n = coeffs.len();
    if n < 3 || coeffs[n - 1] == 0.0 || coeffs[n - 2] == 0.0 {
        return None;
    }
    let r = |k: usize| coeffs[k - 1] / coeffs[k];
    let k = (n - 1) as f64;
    Some(k * r(n - 1) - (k - 1.0) * r(n - 2))
}

impl BareSeriesBundle {
    /// Ratio-test estimate of the `b_0` radius of `G` at a numeric `θ`.
    pub fn singularity_estimate(&self, theta: f64) -> Option<f64> {
        let c: Vec<f64> = self.g_of_b0.coeffs().iter().map(|c| c.eval_f64(theta)).collect();
        ratio_estimate(&c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_differ_only_in_one_place() {
        let a = anchors();
        let l = literal_anchors();
        let diff: Vec<_> = a.iter().zip(&l).filter(|(x, y)| x != y).collect();
        assert_eq!(diff.len(), 1);
        assert_eq!((diff[0].0.series, diff[0].0.power), ("gamma_c", 2));
    }

    #[test]
    fn order_floor() {
        assert_eq!(bare_bundle_n2(1), Err(SixVertexError::OrderTooLow(1)));
    }

    #[test]
    fn ratio_of_geometric_series() {
        let c: Vec<f64> = (0..10).map(|k| 0.5f64.powi(k)).collect();
        assert!((ratio_estimate(&c).unwrap() - 2.0).abs() < 1e-12);
    }
}
