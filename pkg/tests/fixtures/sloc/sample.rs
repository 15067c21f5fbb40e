//! module docs

/// doubles the input
pub fn double(x: i64) -> i64 {
    x * 2 // shift would also work
}

/* scratch:
   triple once needed */
pub fn triple(x: i64) -> i64 {
    x * 3
}
