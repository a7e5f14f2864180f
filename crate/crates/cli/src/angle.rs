//! Angle arguments: the literal tokens `0`, `pi/2`, `pi`, `3pi/2`, or
//! decimal radians.

use qca_zeta::scalar::Angle;

/// Decimal radians within this distance of a quarter turn are taken as exact.
pub const CLI_SNAP_TOL: f64 = 1e-6;

pub fn parse_angle(token: &str) -> Result<Angle, String> {
    let t = token.trim().to_ascii_lowercase().replace(' ', "");
    let quarter = match t.as_str() {
        "0" => Some(0),
        "pi/2" => Some(1),
        "pi" => Some(2),
        "3pi/2" => Some(3),
        _ => None,
    };
    if let Some(k) = quarter {
        return Ok(Angle::QuarterTurns(k));
    }
    let x: f64 = t.parse().map_err(|_| {
        format!("cannot read {token:?} as an angle; use 0, pi/2, pi, 3pi/2 or radians")
    })?;
    if !x.is_finite() {
        return Err(format!("angle {token:?} is not finite"));
    }
    Ok(Angle::from_radians_snapped(x, CLI_SNAP_TOL))
}

/// The token form of an angle, used in report echoes.
pub fn angle_label(a: Angle) -> String {
    match a {
        Angle::QuarterTurns(k) => ["0", "pi/2", "pi", "3pi/2"][usize::from(k % 4)].to_string(),
        Angle::Radians(x) => format!("{x}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(parse_angle("pi/2").unwrap(), Angle::QuarterTurns(1));
        assert_eq!(parse_angle("3pi/2").unwrap(), Angle::QuarterTurns(3));
        assert_eq!(parse_angle("0").unwrap(), Angle::QuarterTurns(0));
    }

    #[test]
    fn decimal_snaps() {
        assert_eq!(parse_angle("1.5707963").unwrap(), Angle::QuarterTurns(1));
        assert_eq!(parse_angle("3.14159265").unwrap(), Angle::QuarterTurns(2));
        assert!(matches!(parse_angle("1.4").unwrap(), Angle::Radians(_)));
        assert!(parse_angle("half").is_err());
        assert!(parse_angle("inf").is_err());
    }

    #[test]
    fn labels_round_trip() {
        for t in ["0", "pi/2", "pi", "3pi/2"] {
            assert_eq!(angle_label(parse_angle(t).unwrap()), t);
        }
    }
}
