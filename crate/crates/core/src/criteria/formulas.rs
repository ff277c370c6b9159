//! Closed-form reference values: group orders and the case formula for
//! non-nilpotent subgroup counts of `SL₂(q)`.

use num_integer::Integer;

use crate::arith::{checked_pow, is_power_of, prime_power, require_prime};
use crate::error::{GroupError, Result};

/// `|PSL₂(q)| = q(q−1)(q+1) / gcd(2, q−1)` with `q = p^f`.
pub fn psl2_order(p: u64, f: u32) -> Result<u64> {
    require_prime(p)?;
    if f == 0 {
        return Err(GroupError::InvalidParameter(
            "psl2_order requires f >= 1".into(),
        ));
    }
    let q = checked_pow(p, f, "p^f")?;
    let full = q
        .checked_mul(q - 1)
        .and_then(|x| x.checked_mul(q + 1))
        .ok_or(GroupError::Overflow("|PSL₂(q)|"))?;
    Ok(full / (q - 1).gcd(&2))
}

/// `|Sz(q)| = (q² + 1) q² (q − 1)` for `q = 2^(2m+1)`, `m > 0`.
pub fn suzuki_order(q: u64) -> Result<u64> {
    let odd_power_of_two = q.is_power_of_two() && q.trailing_zeros() % 2 == 1;
    if !odd_power_of_two || q < 8 {
        return Err(GroupError::InvalidParameter(format!(
            "suzuki_order requires q = 2^(2m+1) with m > 0, got {q}"
        )));
    }
    let q2 = q.checked_mul(q).ok_or(GroupError::Overflow("q²"))?;
    (q2 + 1)
        .checked_mul(q2)
        .and_then(|x| x.checked_mul(q - 1))
        .ok_or(GroupError::Overflow("|Sz(q)|"))
}

/// Which case of the reference formula applies to `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DicksonCase {
    PowerOfTwo,
    PowerOfTwoPlusOne,
    PowerOfTwoMinusOne,
    Neither,
}

/// Cases are tried in the order listed; the first match wins.
pub fn dickson_case(q: u64) -> Result<DicksonCase> {
    if q < 4 || prime_power(q).is_none() {
        return Err(GroupError::InvalidParameter(format!(
            "reference formula requires a prime power q >= 4, got {q}"
        )));
    }
    Ok(if is_power_of(q, 2) {
        DicksonCase::PowerOfTwo
    } else if is_power_of(q - 1, 2) {
        DicksonCase::PowerOfTwoPlusOne
    } else if is_power_of(q + 1, 2) {
        DicksonCase::PowerOfTwoMinusOne
    } else {
        DicksonCase::Neither
    })
}

/// Reference count of non-nilpotent subgroups of `SL₂(q)`:
/// `q² + 1`, `(q² − q + 2)/2`, `(q² + q + 2)/2`, or `q² + 1`.
pub fn dickson_nonnilpotent_reference(q: u64) -> Result<u64> {
    let case = dickson_case(q)?;
    let q2 = q.checked_mul(q).ok_or(GroupError::Overflow("q²"))?;
    Ok(match case {
        DicksonCase::PowerOfTwo | DicksonCase::Neither => q2 + 1,
        DicksonCase::PowerOfTwoPlusOne => (q2 - q + 2) / 2,
        DicksonCase::PowerOfTwoMinusOne => (q2 + q + 2) / 2,
    })
}
