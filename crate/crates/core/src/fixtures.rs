//! The three reference arrangements used throughout the tests and docs.

use crate::arrangement::Arrangement;

/// Lines `x = 0`, `y = 0`, `x + y = 1`: one bounded triangle.
pub fn tri() -> Arrangement {
    Arrangement::from_i64(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], -1)]).unwrap()
}

/// Points `0, 1, 2` on the line: two bounded segments.
pub fn pts3() -> Arrangement {
    Arrangement::from_i64(1, &[(&[1], 0), (&[1], -1), (&[1], -2)]).unwrap()
}

/// `y = ±1`, `y = ±x`, `x = 0`: four bounded triangles, three lines through
/// the origin, so not simple.
pub fn fig1() -> Arrangement {
    Arrangement::from_i64(
        2,
        &[(&[0, 1], -1), (&[0, 1], 1), (&[-1, 1], 0), (&[1, 1], 0), (&[1, 0], 0)],
    )
    .unwrap()
}
