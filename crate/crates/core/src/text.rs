//! Shared formatting for linear combinations.

use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

/// Formats `c1*f1 + c2*f2 - ...`.
///
/// A `None` factor is a pure scalar term. Coefficients that are integers or
/// integer multiples of `I` are written bare, anything else in parentheses:
/// `2*e3`, `I*u0`, `(1/2)*x1`, `(1+I)*p2`. The empty sum prints as `0`.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a GaussianRational, Option<&'a str>)>,
{
    let mut out = String::new();
    for (coeff, factor) in terms {
        let negative = coeff.is_negative_leading();
        let mag = if negative { -coeff } else { coeff.clone() };
        let body = match factor {
            None if !mag.re.is_zero() && !mag.is_real() => {
                format!("({mag})")
            }
            None => mag.to_string(),
            Some(f) if mag.is_one() => f.to_string(),
            Some(f) if mag.is_simple() => format!("{mag}*{f}"),
            Some(f) => format!("({mag})*{f}"),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
