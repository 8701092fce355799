//! Closed forms `N1/D + N2/D^2` of the rational part for the lowest degrees.
//! They are typed in independently of `g` and serve as a cross-check.

use super::Family;
use crate::error::{Error, Result};

pub fn has_explicit_form(family: Family, m: usize) -> bool {
    matches!((family, m), (Family::II, 1..=3) | (Family::III, 2))
}

pub fn explicit_rational_part(family: Family, m: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    let u = b * (-x).exp();
    let (n1, n2, d) = match (family, m) {
        (Family::II, 1) => {
            let s = 2.0 * a + 1.0;
            (2.0 * s, 2.0 * s * s, 2.0 * u - s)
        }
        (Family::II, 2) => (
            8.0 * a * (u + 1.0),
            8.0 * a * a * (4.0 * u - 2.0 * a + 1.0),
            2.0 * u * u - 4.0 * a * u + a * (2.0 * a - 1.0),
        ),
        (Family::II, 3) => {
            let t = 2.0 * a - 1.0;
            (
                3.0 * t * (4.0 * u * u - 2.0 * (2.0 * a - 5.0) * u + 3.0 * (2.0 * a + 1.0)),
                9.0 * t
                    * t
                    * (2.0 * (2.0 * a + 7.0) * u * u - 4.0 * (a - 1.0) * (2.0 * a + 3.0) * u
                        + (a - 1.0) * (2.0 * a - 3.0) * (2.0 * a + 1.0)),
                4.0 * u * u * u - 6.0 * t * u * u + 6.0 * (a - 1.0) * t * u - (a - 1.0) * t * (2.0 * a - 3.0),
            )
        }
        (Family::III, 2) => {
            let s = a + 1.0;
            (
                8.0 * s * (u - 1.0),
                -8.0 * s * s * (4.0 * u - 2.0 * a - 3.0),
                2.0 * u * u - 4.0 * s * u + s * (2.0 * a + 3.0),
            )
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no closed form for family {family} with m = {m}"
            )))
        }
    };
    Ok(n1 / d + n2 / (d * d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{build_extension, ExtensionSpec};
    use crate::rational::{q, qi, to_f64, Q};

    #[test]
    fn example_value() {
        let v = explicit_rational_part(Family::II, 1, -0.75, 1.0, 0.0).unwrap();
        assert!((v + 0.32).abs() < 1e-15);
        assert!(explicit_rational_part(Family::III, 4, 2.0, 1.0, 0.0).is_err());
        assert!(explicit_rational_part(Family::II, 4, -0.5, 1.0, 0.0).is_err());
    }

    #[test]
    fn matches_generic_construction() {
        let cases: [(Family, Q, usize); 6] = [
            (Family::II, q(-3, 4), 1),
            (Family::II, q(-1, 2), 2),
            (Family::II, q(-1, 5), 2),
            (Family::II, q(1, 4), 3),
            (Family::III, qi(2), 2),
            (Family::III, q(7, 2), 2),
        ];
        for (family, a, m) in cases {
            let b = q(3, 2);
            let ext = build_extension(ExtensionSpec::new(family, a.clone(), b.clone(), m).unwrap()).unwrap();
            for i in 0..=400 {
                let x = -5.0 + 20.0 * i as f64 / 400.0;
                let generic = ext.rational_part(x);
                let af = to_f64(&a);
                let closed = explicit_rational_part(family, m, af, 1.5, x).unwrap();
                assert!(
                    (generic - closed).abs() <= 1e-12 * (1.0 + generic.abs()),
                    "{family} m={m} x={x}: {generic} vs {closed}"
                );
            }
        }
    }
}
