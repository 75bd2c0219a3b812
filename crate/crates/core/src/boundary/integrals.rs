use crate::specfun::sph_j_pair;

/// `int_0^R r^2 (j_n^2(pr) + j_{n+1}^2(pr)) / 2 dr` in closed form.
pub fn radial_integral_plus(n: u32, p: f64, radius: f64) -> f64 {
    let x = p * radius;
    let (a, b) = sph_j_pair(n, x);
    let r3 = radius * radius * radius;
    0.5 * r3 * (b * b - 2.0 * f64::from(n + 1) / x * a * b + a * a)
}

/// `int_0^R r^2 (j_n^2(pr) - j_{n+1}^2(pr)) / 2 dr` in closed form.
pub fn radial_integral_minus(n: u32, p: f64, radius: f64) -> f64 {
    let (a, b) = sph_j_pair(n, p * radius);
    radius * radius / (2.0 * p) * a * b
}
