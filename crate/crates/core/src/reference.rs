//! Published reference values, used to label emitted table rows as
//! reproduced from the literature or merely computed.

/// Coefficients (constant term first) of `v(m, n)` as a polynomial in `n`,
/// for `m = 1..=7`.
pub const VOLUME_N_FORM: [&[i64]; 7] = [
    &[0, 1],
    &[-1, 0, 2],
    &[-6, -9, 0, 6],
    &[-54, -96, -72, 0, 24],
    &[-840, -1350, -1200, -600, 0, 120],
    &[-21150, -30240, -24300, -14400, -5400, 0, 720],
    &[
        -782460, -1036350, -740880, -396900, -176400, -52920, 0, 5040,
    ],
];

/// Coefficients (constant term first) of `v(m, n)` as a polynomial in
/// `N = n - m + 1`, for `m = 1..=6`.
pub const VOLUME_BIG_N_FORM: [&[i64]; 6] = [
    &[0, 1],
    &[1, 4, 2],
    &[24, 63, 36, 6],
    &[954, 2064, 1224, 288, 24],
    &[59040, 113850, 68400, 18600, 2400, 120],
    &[5295150, 9446760, 5699700, 1677600, 264600, 21600, 720],
];

/// `(m, volume-mode count, Ehrhart-mode count)` of draconian sequences, where
/// published; `None` where only one of the two is quoted.
pub const DRACONIAN_COUNTS: [(usize, Option<usize>, Option<usize>); 3] = [
    (2, Some(4), Some(8)),
    (3, None, Some(51)),
    (4, None, Some(455)),
];

pub const GOLDEN: &str = "golden-verified";
pub const COMPUTED: &str = "computed";
