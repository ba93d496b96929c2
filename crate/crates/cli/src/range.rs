//! Axis specifications for `scan`: `start:stop:step` (stop included when hit)
//! or an explicit comma-separated list.

use cuboid_core::arith::parse_rational;
use cuboid_core::{BigInt, BigRational};
use num_traits::{Signed, Zero};

/// Upper bound on the points of a single axis.
pub const MAX_AXIS_POINTS: usize = 1_000_000;

pub fn parse_axis(spec: &str) -> Result<Vec<BigRational>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("empty range".into());
    }
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(format!("`{spec}`: expected start:stop:step"));
        };
        let start = parse_rational(start).map_err(|e| format!("range start: {e}"))?;
        let stop = parse_rational(stop).map_err(|e| format!("range stop: {e}"))?;
        let step = parse_rational(step).map_err(|e| format!("range step: {e}"))?;
        return arithmetic(start, stop, step);
    }
    spec.split(',')
        .enumerate()
        .map(|(i, tok)| parse_rational(tok).map_err(|e| format!("list entry {}: {e}", i + 1)))
        .collect()
}

fn arithmetic(
    start: BigRational,
    stop: BigRational,
    step: BigRational,
) -> Result<Vec<BigRational>, String> {
    if step.is_zero() {
        return Err("range step must be nonzero".into());
    }
    let span = (&stop - &start) / &step;
    if span.is_negative() {
        return Ok(Vec::new());
    }
    let count: BigInt = span.floor().to_integer() + 1;
    let count: usize = count
        .try_into()
        .ok()
        .filter(|&n| n <= MAX_AXIS_POINTS)
        .ok_or_else(|| format!("range has more than {MAX_AXIS_POINTS} points"))?;
    let mut out = Vec::with_capacity(count);
    let mut v = start;
    for _ in 0..count {
        out.push(v.clone());
        v += &step;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cuboid_core::arith::{int, rat};

    #[test]
    fn inclusive_ranges() {
        assert_eq!(parse_axis("0:2:1").unwrap(), vec![int(0), int(1), int(2)]);
        assert_eq!(parse_axis("1:2:1/2").unwrap(), vec![int(1), rat(3, 2), int(2)]);
        assert_eq!(parse_axis("0:1:2/3").unwrap(), vec![int(0), rat(2, 3)]);
        assert_eq!(parse_axis("2:0:-1").unwrap(), vec![int(2), int(1), int(0)]);
        assert_eq!(parse_axis("-1:-1:1").unwrap(), vec![int(-1)]);
    }

    #[test]
    fn empty_and_invalid() {
        assert!(parse_axis("2:0:1").unwrap().is_empty());
        assert!(parse_axis("0:1:0").unwrap_err().contains("nonzero"));
        assert!(parse_axis("0:1").is_err());
        assert!(parse_axis("0:1:1/0").unwrap_err().contains("zero denominator"));
        assert!(parse_axis("0:10000000:1").is_err());
        assert!(parse_axis("").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_axis("3").unwrap(), vec![int(3)]);
        assert_eq!(parse_axis("1/2, -3,4").unwrap(), vec![rat(1, 2), int(-3), int(4)]);
        assert!(parse_axis("1,x").unwrap_err().contains("entry 2"));
    }
}
