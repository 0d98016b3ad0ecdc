/// Multiple precision binary float (MPFR), used only for numeric evaluation.
pub type Real = rug::Float;

/// A value at `prec` bits.
pub fn real<T>(prec: u32, v: T) -> Real
where
    Real: rug::Assign<T>,
{
    let mut r = Real::new(prec);
    rug::Assign::assign(&mut r, v);
    r
}

pub fn real_pi(prec: u32) -> Real {
    Real::with_val(prec, rug::float::Constant::Pi)
}
