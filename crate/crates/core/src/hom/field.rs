//! Arithmetic in the field of `p` elements.

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut out = 1;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        out = out * small_binom(a, b, p) % p;
        n /= p;
        k /= p;
    }
    out
}

fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1;
    let mut den = 1;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * inverse(den, p) % p
}

/// The multinomial `(x_1 + x_2 + ...)! / (x_1! x_2! ...) mod p`.
pub fn multinomial_mod(xs: &[u64], p: u64) -> u64 {
    let mut total = 0;
    let mut out = 1;
    for &x in xs {
        total += x;
        out = out * binom_mod(total, x, p) % p;
        if out == 0 {
            return 0;
        }
    }
    out
}

pub fn inverse(a: u64, p: u64) -> u64 {
    pow(a % p, p - 2, p)
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut out = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            out = out * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    out
}

/// `-a mod p`.
pub fn neg(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

/// The element of `F_p` represented by a signed integer.
pub fn from_signed(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// The representative in `(-p/2, p/2]`, used for reporting `±1`.
pub fn signed(a: u64, p: u64) -> i64 {
    if a > p / 2 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}
