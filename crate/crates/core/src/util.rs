//! Small integer helpers.

/// `⌊√x⌋`.
pub fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// `⌈√x⌉`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = isqrt(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}
