//! SVG rendering of slice geodesics.
//!
//! For every word of length 1..=depth the geodesic of the corresponding
//! slice is drawn: a semicircular arc over its boundary interval, or a
//! vertical segment (the ray clipped to the window) when the slice is
//! unbounded. Geometry stays exact until the final coordinate formatting,
//! which renders each rational with 20 significant decimal digits.

use std::fmt::Write as _;

use moebius_forest::{Error, ExtendedRational, Matrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Pixels per quadrant unit.
const SCALE: u32 = 100;

const SIGNIFICANT_DIGITS: usize = 20;

/// Window and depth for one rendering; depth is capped so the element
/// count 2^(depth+1) - 2 stays renderable.
#[derive(Debug, Clone)]
pub struct RenderSpec {
    depth: u32,
    x_max: ExtendedRational,
    y_max: ExtendedRational,
}

impl RenderSpec {
    pub const MAX_DEPTH: u32 = 12;

    pub fn new(
        depth: u32,
        x_max: ExtendedRational,
        y_max: ExtendedRational,
    ) -> Result<Self, Error> {
        if depth > Self::MAX_DEPTH {
            return Err(Error::Parse(format!(
                "depth {depth} exceeds the maximum of {}",
                Self::MAX_DEPTH
            )));
        }
        for (name, v) in [("x-max", &x_max), ("y-max", &y_max)] {
            if v.is_infinite() || v.is_zero() {
                return Err(Error::Parse(format!("{name} must be a positive rational")));
            }
        }
        Ok(Self {
            depth,
            x_max,
            y_max,
        })
    }
}

/// Truncated decimal rendering with 20 significant digits; exact values
/// with short expansions print exactly.
fn decimal(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let abs = r.abs();
    let int = abs.to_integer();
    let int_str = int.to_string();
    let mut rem = &abs - BigRational::from_integer(int.clone());
    let mut started = !int.is_zero();
    let mut significant = if started { int_str.len() } else { 0 };
    let mut frac = String::new();
    while !rem.is_zero() && significant < SIGNIFICANT_DIGITS && frac.len() < 256 {
        rem *= BigInt::from(10);
        let digit = rem.to_integer();
        rem -= BigRational::from_integer(digit.clone());
        frac.push(char::from(b'0' + digit.to_u8().expect("single digit")));
        if started || !digit.is_zero() {
            started = true;
            significant += 1;
        }
    }
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_str}")
    } else {
        format!("{sign}{int_str}.{frac}")
    }
}

fn big(u: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(u))
}

/// Renders the slices of all words of length 1..=depth over the pair,
/// emitting exactly `2^(depth+1) - 2` elements with class `geodesic`,
/// in level order with `L` before `R`.
pub fn render_svg(left: &Matrix, right: &Matrix, spec: &RenderSpec) -> String {
    let scale = big(SCALE);
    let x_max = spec.x_max.to_rational().expect("finite window");
    let y_max = spec.y_max.to_rational().expect("finite window");
    let width = &x_max * &scale;
    let height = &y_max * &scale;
    // math (x, y) -> svg (x * scale, height - y * scale)
    let sx = |x: &BigRational| decimal(&(x * &scale));
    let baseline = decimal(&height);

    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = decimal(&width),
        h = decimal(&height),
    )
    .unwrap();
    writeln!(
        svg,
        r#"  <rect class="window" x="0" y="0" width="{w}" height="{h}" fill="white" stroke="black" stroke-width="1"/>"#,
        w = decimal(&width),
        h = decimal(&height),
    )
    .unwrap();
    writeln!(
        svg,
        r#"  <g fill="none" stroke="steelblue" stroke-width="1">"#
    )
    .unwrap();

    let mut level = vec![left.clone(), right.clone()];
    for _ in 1..=spec.depth {
        for m in &level {
            let slice = m.slice();
            let lo = slice.lo().to_rational().expect("low endpoint is finite");
            if let Some(hi) = slice.hi().to_rational() {
                let radius = (&hi - &lo) / big(2) * &scale;
                writeln!(
                    svg,
                    r#"    <path class="geodesic" d="M {x1} {y} A {r} {r} 0 0 1 {x2} {y}"/>"#,
                    x1 = sx(&lo),
                    x2 = sx(&hi),
                    y = baseline,
                    r = decimal(&radius),
                )
                .unwrap();
            } else {
                writeln!(
                    svg,
                    r#"    <line class="geodesic" x1="{x}" y1="{y}" x2="{x}" y2="0"/>"#,
                    x = sx(&lo),
                    y = baseline,
                )
                .unwrap();
            }
        }
        level = level.iter().flat_map(|m| [m * left, m * right]).collect();
    }

    writeln!(svg, "  </g>").unwrap();
    writeln!(svg, "</svg>").unwrap();
    svg
}
