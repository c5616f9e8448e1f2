use num_bigint::BigUint;

/// Number of deterministic update schedules on `n` nodes, i.e. ordered set
/// partitions (Fubini numbers): `T_n = sum_{k<n} C(n, k) T_k`, `T_0 = 1`.
pub fn count_schedules(n: usize) -> BigUint {
    let mut t: Vec<BigUint> = Vec::with_capacity(n + 1);
    t.push(BigUint::from(1u32));
    for m in 1..=n {
        let mut binom = BigUint::from(1u32);
        let mut sum = BigUint::from(0u32);
        for (k, tk) in t.iter().enumerate() {
            sum += &binom * tk;
            binom = binom * (m - k) / (k + 1);
        }
        t.push(sum);
    }
    t.swap_remove(n)
}
