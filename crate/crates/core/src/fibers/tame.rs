use super::{FiberError, KodairaType, Result};

/// Kodaira type from (v(c4), v(c6), v(Δ)) when the residue characteristic is
/// 0 or at least 5. `None` means the quantity vanishes identically.
pub fn classify_tame(v_c4: Option<u32>, v_c6: Option<u32>, v_delta: u32) -> Result<KodairaType> {
    use KodairaType::*;
    if v_delta == 0 {
        return Ok(I(0));
    }
    if v_c4 == Some(0) {
        return Ok(I(v_delta));
    }
    let c4 = v_c4.unwrap_or(u32::MAX);
    let c6 = v_c6.unwrap_or(u32::MAX);
    if c4 >= 4 && c6 >= 6 && v_delta >= 12 {
        return Err(FiberError::NonMinimal);
    }
    let inconsistent = || FiberError::Inconsistent {
        v_c4,
        v_c6,
        v_delta,
    };
    Ok(match v_delta {
        2 => II,
        3 => III,
        4 => IV,
        6 => IStar(0),
        n if n > 6 && c4 == 2 => IStar(n - 6),
        8 => IVStar,
        9 => IIIStar,
        10 => IIStar,
        _ => return Err(inconsistent()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use KodairaType::*;

    #[test]
    fn table_rows() {
        assert_eq!(classify_tame(Some(0), Some(0), 3), Ok(I(3)));
        assert_eq!(classify_tame(Some(1), Some(1), 3), Ok(III));
        assert_eq!(classify_tame(Some(2), Some(3), 8), Ok(IStar(2)));
        assert_eq!(classify_tame(None, Some(2), 4), Ok(IV));
        assert_eq!(classify_tame(Some(3), None, 9), Ok(IIIStar));
        assert_eq!(classify_tame(Some(4), Some(5), 10), Ok(IIStar));
        assert_eq!(classify_tame(Some(3), Some(4), 8), Ok(IVStar));
        assert_eq!(classify_tame(Some(2), Some(3), 6), Ok(IStar(0)));
        assert_eq!(classify_tame(Some(0), Some(0), 0), Ok(I(0)));
    }

    #[test]
    fn non_minimal_and_impossible_signatures() {
        assert_eq!(
            classify_tame(Some(4), Some(6), 12),
            Err(FiberError::NonMinimal)
        );
        assert_eq!(
            classify_tame(None, Some(6), 12),
            Err(FiberError::NonMinimal)
        );
        assert!(matches!(
            classify_tame(Some(1), Some(1), 1),
            Err(FiberError::Inconsistent { .. })
        ));
        assert!(matches!(
            classify_tame(Some(3), Some(5), 7),
            Err(FiberError::Inconsistent { .. })
        ));
    }
}
