use num_traits::Zero;

use crate::puiseux::{PuiseuxPoly, Variable};

/// `f_x f_y² f_xxy - f_x² f_y f_xyy + f_xy f_x² f_yy - f_xy f_y² f_xx`,
/// which vanishes exactly on `Cl_1`.
pub fn delta1(f: &PuiseuxPoly) -> PuiseuxPoly {
    let d = |g: &PuiseuxPoly, v| g.partial_derivative(v);
    let fx = d(f, Variable::X);
    let fy = d(f, Variable::Y);
    let fxx = d(&fx, Variable::X);
    let fxy = d(&fx, Variable::Y);
    let fyy = d(&fy, Variable::Y);
    let fxxy = d(&fxx, Variable::Y);
    let fxyy = d(&fxy, Variable::Y);
    let fx2 = fx.mul(&fx);
    let fy2 = fy.mul(&fy);
    let a = fx.mul(&fy2).mul(&fxxy);
    let b = fx2.mul(&fy).mul(&fxyy);
    let c = fxy.mul(&fx2).mul(&fyy);
    let e = fxy.mul(&fy2).mul(&fxx);
    &(&(&a - &b) + &c) - &e
}

/// Depends on at most one variable: every exponent of `x`, or every exponent
/// of `y`, is zero.
pub fn is_cl0(f: &PuiseuxPoly) -> bool {
    f.terms().all(|(p, _)| p.s.is_zero()) || f.terms().all(|(p, _)| p.t.is_zero())
}

pub fn is_cl1(f: &PuiseuxPoly) -> bool {
    delta1(f).is_zero()
}
