use confluent_core::ComplexValue;

fn real(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("invalid number {s:?}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("non-finite number {s:?}"))
    }
}

/// Parse `re`, `re+imi`, `re-imi` or `imi`.
pub fn parse_complex(s: &str) -> Result<ComplexValue, String> {
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return real(t).map(|x| ComplexValue::new(x, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (real(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => real(im).map_err(|_| format!("invalid complex number {s:?}"))?,
    };
    Ok(ComplexValue::new(re, im))
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let z = parse_complex(s)?;
    if z.im != 0.0 {
        return Err(format!("expected a real number, got {s:?}"));
    }
    Ok(z.re)
}

pub fn parse_count(s: &str) -> Result<usize, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("expected a non-negative integer, got {s:?}"))
}

/// Shortest round-trip decimal, switching to exponent form outside [1e-5, 1e16).
pub fn fmt_real(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) || !a.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn fmt_complex(z: ComplexValue) -> String {
    if z.im == 0.0 {
        return fmt_real(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", fmt_real(z.re), sign, fmt_real(z.im.abs()))
}
