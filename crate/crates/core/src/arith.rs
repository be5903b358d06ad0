//! Checked 64-bit score arithmetic. Builders go through these helpers so
//! that any parameterization whose weights or totals would overflow a
//! signed 64-bit score is rejected instead of wrapping.

use crate::error::CoreError;

pub fn add(a: i64, b: i64, context: &'static str) -> Result<i64, CoreError> {
    a.checked_add(b).ok_or(CoreError::Overflow { context })
}

pub fn mul(a: i64, b: i64, context: &'static str) -> Result<i64, CoreError> {
    a.checked_mul(b).ok_or(CoreError::Overflow { context })
}

pub fn sum<I: IntoIterator<Item = i64>>(
    items: I,
    context: &'static str,
) -> Result<i64, CoreError> {
    let mut total = 0i64;
    for item in items {
        total = add(total, item, context)?;
    }
    Ok(total)
}
