//! Value syntax shared by all subcommands.
//!
//! - real lists: `0.5`, `0,0.5,1`, or an inclusive grid `start:stop:step`;
//! - complex numbers: `a+bi`, `a-bi`, `bi`, `i`, `-0.5`;
//! - integer lists and grids the same way as reals.

use num_complex::Complex64 as Complex;

pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number '{s}'");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|re| Complex::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not the leading one and not an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex>, String> {
    s.split(',').map(parse_complex).collect()
}

pub fn parse_real_grid(s: &str) -> Result<Vec<f64>, String> {
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| format!("cannot parse number '{x}' in '{s}'"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (a, b, h) = (num(start)?, num(stop)?, num(step)?);
            if !(h > 0.0) || !a.is_finite() || !b.is_finite() {
                return Err(format!("grid '{s}' needs finite bounds and a positive step"));
            }
            // small slack so that e.g. 0:3:0.1 includes 3
            let n = ((b - a) / h + 1e-9).floor();
            if n < 0.0 {
                return Err(format!("grid '{s}' is empty"));
            }
            if n > 1e7 {
                return Err(format!("grid '{s}' has too many points"));
            }
            Ok((0..=n as usize).map(|k| a + k as f64 * h).collect())
        }
        [_] => s.split(',').map(num).collect(),
        _ => Err(format!("expected start:stop:step or a comma list, got '{s}'")),
    }
}

pub fn parse_int_grid(s: &str) -> Result<Vec<i64>, String> {
    let num = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("cannot parse integer '{x}' in '{s}'"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (a, b, h) = (num(start)?, num(stop)?, num(step)?);
            if h <= 0 || b < a {
                return Err(format!("grid '{s}' needs start <= stop and a positive step"));
            }
            Ok((a..=b).step_by(h as usize).collect())
        }
        [_] => s.split(',').map(num).collect(),
        _ => Err(format!("expected start:stop:step or a comma list, got '{s}'")),
    }
}

pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let v = parse_real_grid(s)?;
    v.try_into().map_err(|_| format!("expected three comma-separated numbers, got '{s}'"))
}

pub fn parse_triple<T: Copy>(v: Vec<T>, what: &str) -> Result<[T; 3], String> {
    v.try_into().map_err(|_| format!("{what} needs exactly three entries"))
}

/// Formats as a+bi with 17 significant digits in each part.
pub fn format_complex(z: Complex) -> String {
    format!("{:.16e}{}{:.16e}i", z.re, if z.im < 0.0 || z.im.is_sign_negative() { "-" } else { "+" }, z.im.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("-0.5+2i").unwrap(), Complex::new(-0.5, 2.0));
        assert_eq!(parse_complex("1e-3-2e-1i").unwrap(), Complex::new(1e-3, -0.2));
        assert_eq!(parse_complex("2i").unwrap(), Complex::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("3").unwrap(), Complex::new(3.0, 0.0));
        assert_eq!(parse_complex("1.5E+2+1i").unwrap(), Complex::new(150.0, 1.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2").is_err());
    }

    #[test]
    fn round_trip_formatting() {
        let z = Complex::new(-0.1, -1e-30);
        assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
    }

    #[test]
    fn grids() {
        assert_eq!(parse_real_grid("0:3:0.5").unwrap().len(), 7);
        assert_eq!(parse_real_grid("0:0.3:0.1").unwrap().len(), 4);
        assert_eq!(parse_real_grid("1,2.5").unwrap(), vec![1.0, 2.5]);
        assert!(parse_real_grid("0:1:0").is_err());
        assert_eq!(parse_int_grid("-2:2:2").unwrap(), vec![-2, 0, 2]);
        assert_eq!(parse_int_grid("3").unwrap(), vec![3]);
        assert!(parse_vec3("1,2").is_err());
    }
}
