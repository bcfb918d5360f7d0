//! Small combinatorial and arithmetic helpers shared by the sweeps.

/// Visits every set partition of {0, .., n-1} in restricted growth string
/// order (Knuth 7.2.1.5). The visitor receives the growth string: element
/// i belongs to block `rgs[i]`, block labels are first-use minimal, so
/// `rgs[0] == 0` and `rgs[i] <= max(rgs[..i]) + 1`.
pub fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[u32])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut rgs = vec![0u32; n];
    loop {
        visit(&rgs);
        // Advance: find the rightmost position that can still grow.
        let mut j = n - 1;
        loop {
            if j == 0 {
                return;
            }
            let prefix_max = rgs[..j].iter().copied().max().unwrap();
            if rgs[j] <= prefix_max {
                rgs[j] += 1;
                for slot in rgs[j + 1..].iter_mut() {
                    *slot = 0;
                }
                break;
            }
            j -= 1;
        }
    }
}

/// Number of blocks named by a restricted growth string.
pub fn rgs_block_count(rgs: &[u32]) -> usize {
    rgs.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Exact binomial coefficient; panics on overflow (callers stay tiny).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0);
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod a prime p.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(is_prime(p) && !a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}
