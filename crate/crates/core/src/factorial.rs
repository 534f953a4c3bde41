use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

const SMALL: [u64; 21] = {
    let mut t = [1u64; 21];
    let mut i = 1;
    while i < 21 {
        t[i] = t[i - 1] * i as u64;
        i += 1;
    }
    t
};

pub fn factorial(n: u32) -> BigInt {
    if (n as usize) < SMALL.len() {
        return BigInt::from(SMALL[n as usize]);
    }
    let mut acc = BigInt::from(SMALL[20]);
    for k in 21..=n {
        acc *= k;
    }
    acc
}

pub fn factorial_q(n: u32) -> BigRational {
    BigRational::from_integer(factorial(n))
}

/// `n! / (n-k)!`
pub fn falling(n: u32, k: u32) -> BigInt {
    debug_assert!(k <= n);
    let mut acc = BigInt::one();
    for j in (n - k + 1)..=n {
        acc *= j;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    falling(n, k) / factorial(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_big_agree() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(22), BigInt::from(21u64 * 22) * factorial(20));
        assert_eq!(falling(6, 2), BigInt::from(30));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }
}
