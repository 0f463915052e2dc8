use num_traits::Zero;

use super::{is_prime, is_primitive_root, mul_mod, Natural};
use crate::error::{Error, Result};

fn check_root(p: u64, g: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::param(format!("{p} is not prime")));
    }
    if !is_primitive_root(g, p) {
        return Err(Error::param(format!("{g} is not a primitive root mod {p}")));
    }
    Ok(())
}

fn check_order(p: u64, m: u64) -> Result<()> {
    if m == 0 || !(p - 1).is_multiple_of(m) {
        return Err(Error::param(format!("order {m} does not divide {p} - 1")));
    }
    Ok(())
}

/// Discrete logarithms base `g`: `table[x] = ind_g(x)` for `1 <= x < p`; `table[0]` is unused.
pub fn index_table(p: u64, g: u64) -> Result<Vec<u64>> {
    check_root(p, g)?;
    let mut table = vec![0u64; p as usize];
    let mut x = 1u64;
    for i in 0..p - 1 {
        table[x as usize] = i;
        x = mul_mod(x, g, p);
    }
    Ok(table)
}

/// `idx[x] = ind_g(x) mod m`, the cyclotomic class of `x`; `idx[0]` is unused.
pub fn class_index(p: u64, m: u64, g: u64) -> Result<Vec<usize>> {
    check_order(p, m)?;
    Ok(index_table(p, g)?
        .into_iter()
        .map(|i| (i % m) as usize)
        .collect())
}

/// Cyclotomic classes `g^l <g^m>` of order `m`, each sorted ascending.
pub fn cyclotomic_classes(p: u64, m: u64, g: u64) -> Result<Vec<Vec<u64>>> {
    let idx = class_index(p, m, g)?;
    let mut classes = vec![Vec::with_capacity(((p - 1) / m) as usize); m as usize];
    for x in 1..p {
        classes[idx[x as usize]].push(x);
    }
    Ok(classes)
}

/// Cyclotomic numbers of order 3 together with the decomposition `4p = c^2 + 27 d^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicTable3 {
    pub p: u64,
    pub g: u64,
    pub c: i64,
    /// Sign fixed so that the closed-form table reproduces `counts`.
    pub d: i64,
    /// `counts[i][j] = |(C_i + 1) ∩ C_j|`.
    pub counts: [[u64; 3]; 3],
}

impl CyclotomicTable3 {
    /// `(A, B, C, D)` from the closed forms, or `None` if a value is not integral.
    pub fn closed_form(p: u64, c: i64, d: i64) -> Option<[i64; 4]> {
        let p = p as i64;
        let num = [
            (p - 8 + c, 9),
            (2 * p - 4 - c - 9 * d, 18),
            (2 * p - 4 - c + 9 * d, 18),
            (p + 1 + c, 9),
        ];
        let mut out = [0i64; 4];
        for (slot, (n, den)) in out.iter_mut().zip(num) {
            if n % den != 0 {
                return None;
            }
            *slot = n / den;
        }
        Some(out)
    }

    /// Lays `(A, B, C, D)` out in the 3x3 pattern of cyclotomic numbers.
    pub fn pattern([a, b, c, d]: [i64; 4]) -> [[i64; 3]; 3] {
        [[a, b, c], [b, c, d], [c, d, b]]
    }

    pub fn formula_table(&self) -> Option<[[i64; 3]; 3]> {
        Self::closed_form(self.p, self.c, self.d).map(Self::pattern)
    }

    pub fn matches_formula(&self) -> bool {
        self.formula_table().is_some_and(|t| {
            (0..3).all(|i| (0..3).all(|j| t[i][j] == self.counts[i][j] as i64))
        })
    }

    /// `(A, B, C, D)` read off the census.
    pub fn abcd(&self) -> [u64; 4] {
        [
            self.counts[0][0],
            self.counts[0][1],
            self.counts[0][2],
            self.counts[1][2],
        ]
    }
}

/// Solutions `(c, |d|)` of `4p = c^2 + 27 d^2` with `c ≡ 1 (mod 3)`.
fn cd_decompositions(p: u64) -> Vec<(i64, i64)> {
    let four_p = 4 * p as i64;
    let mut out = Vec::new();
    let mut d = 0i64;
    while 27 * d * d <= four_p {
        let rest = four_p - 27 * d * d;
        let root = (rest as f64).sqrt().round() as i64;
        for r in [root - 1, root, root + 1] {
            if r >= 0 && r * r == rest {
                for c in [r, -r] {
                    if c.rem_euclid(3) == 1 {
                        out.push((c, d));
                    }
                }
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn cyclotomic_numbers_order3(p: u64, g: u64) -> Result<CyclotomicTable3> {
    if p % 3 != 1 {
        return Err(Error::param(format!("{p} is not congruent to 1 mod 3")));
    }
    let idx = class_index(p, 3, g)?;
    let mut counts = [[0u64; 3]; 3];
    for a in 1..p - 1 {
        counts[idx[a as usize]][idx[a as usize + 1]] += 1;
    }
    for (c, d_abs) in cd_decompositions(p) {
        for d in [d_abs, -d_abs] {
            let table = CyclotomicTable3 {
                p,
                g,
                c,
                d,
                counts,
            };
            if table.matches_formula() {
                return Ok(table);
            }
        }
    }
    Err(Error::Internal(format!(
        "no decomposition 4*{p} = c^2 + 27d^2 reproduces the census"
    )))
}

/// `sum_{i in D_l} 4^(2i) mod modulus`, with `D_l` the class of index `l` of order `m` w.r.t. `g`.
pub fn gauss_period(p: u64, m: u64, l: u64, g: u64, modulus: &Natural) -> Result<Natural> {
    if l >= m {
        return Err(Error::param(format!("class index {l} out of range for order {m}")));
    }
    if *modulus < Natural::from(2u32) {
        return Err(Error::param("modulus must be at least 2"));
    }
    let idx = class_index(p, m, g)?;
    // Each term is a distinct power of two, so the exact sum is a bitmask.
    let mut sum = Natural::zero();
    for i in 1..p {
        if idx[i as usize] == l as usize {
            sum.set_bit(4 * i, true);
        }
    }
    Ok(sum % modulus)
}

/// Checks `eta_m eta_{m+k} = sum_h (k,h) eta_{h+m} + (p-1)/3 [k = 0]` modulo `(4^(2p) - 1)/15`
/// for all `m, k` in `0..3`.
pub fn period_product_relation_holds(p: u64, g: u64) -> Result<bool> {
    let table = cyclotomic_numbers_order3(p, g)?;
    let modulus = (super::pow4_minus1(2 * p)) / 15u32;
    let eta: Vec<Natural> = (0..3)
        .map(|l| gauss_period(p, 3, l, g, &modulus))
        .collect::<Result<_>>()?;
    let f = Natural::from((p - 1) / 3);
    for m in 0..3 {
        for k in 0..3 {
            let lhs = (&eta[m] * &eta[(m + k) % 3]) % &modulus;
            let mut rhs = Natural::zero();
            for h in 0..3 {
                rhs += &eta[(h + m) % 3] * table.counts[k][h];
            }
            if k == 0 {
                rhs += &f;
            }
            if lhs != rhs % &modulus {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::{pow4_minus1, pow4_plus1, primitive_root};

    #[test]
    fn classes_of_order_three_mod_seven() {
        let classes = cyclotomic_classes(7, 3, 3).unwrap();
        assert_eq!(classes, vec![vec![1, 6], vec![3, 4], vec![2, 5]]);
        let singletons = cyclotomic_classes(7, 6, 3).unwrap();
        assert!(singletons.iter().all(|c| c.len() == 1));
        assert_eq!(cyclotomic_classes(7, 1, 3).unwrap(), vec![(1..7).collect::<Vec<_>>()]);
    }

    #[test]
    fn classes_partition_the_unit_group() {
        for p in [13u64, 31, 43, 97] {
            let g = primitive_root(p).unwrap();
            for m in (1..p).filter(|m| (p - 1) % m == 0) {
                let classes = cyclotomic_classes(p, m, g).unwrap();
                let mut all: Vec<u64> = classes.iter().flatten().copied().collect();
                assert!(classes.iter().all(|c| c.len() as u64 == (p - 1) / m));
                all.sort_unstable();
                assert_eq!(all, (1..p).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn order_must_divide() {
        assert!(cyclotomic_classes(7, 4, 3).is_err());
        assert!(cyclotomic_classes(7, 3, 2).is_err()); // 2 has order 3 mod 7
    }

    #[test]
    fn census_for_p31() {
        let t = cyclotomic_numbers_order3(31, 3).unwrap();
        assert_eq!((t.c, t.d), (4, -2));
        assert_eq!(t.abcd(), [3, 4, 2, 4]);
        assert!(t.matches_formula());
    }

    #[test]
    fn census_for_p7() {
        let t = cyclotomic_numbers_order3(7, 3).unwrap();
        assert_eq!(t.c, 1);
        assert_eq!(t.abcd()[3], 1);
    }

    #[test]
    fn row_sums_count_shifted_class_elements() {
        for p in (7..200u64).filter(|&p| is_prime(p) && p % 3 == 1) {
            let g = primitive_root(p).unwrap();
            let t = cyclotomic_numbers_order3(p, g).unwrap();
            let idx = class_index(p, 3, g).unwrap();
            for i in 0..3 {
                let class_size = (p - 1) / 3;
                let minus_one_here = (idx[(p - 1) as usize] == i) as u64;
                assert_eq!(t.counts[i].iter().sum::<u64>(), class_size - minus_one_here);
            }
        }
    }

    #[test]
    fn formula_matches_census_up_to_500() {
        for p in (7..=500u64).filter(|&p| is_prime(p) && p % 3 == 1) {
            let g = primitive_root(p).unwrap();
            let t = cyclotomic_numbers_order3(p, g).unwrap();
            assert!(t.matches_formula(), "p = {p}");
            assert_eq!(4 * p as i64, t.c * t.c + 27 * t.d * t.d);
        }
    }

    #[test]
    fn gauss_period_small_case() {
        let m = pow4_plus1(7);
        let eta0 = gauss_period(7, 3, 0, 3, &m).unwrap();
        let direct = (Natural::from(16u32) + Natural::from(4u32).pow(12)) % &m;
        assert_eq!(eta0, direct);
    }

    #[test]
    fn periods_partition_geometric_series() {
        for p in [7u64, 13, 31] {
            let g = primitive_root(p).unwrap();
            let m = pow4_minus1(2 * p);
            let total: Natural = (0..3)
                .map(|l| gauss_period(p, 3, l, g, &m).unwrap())
                .sum::<Natural>()
                % &m;
            let expected = (&m / 15u32 - 1u32) % &m;
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn order_six_periods_pair_up() {
        let p = 31;
        let g = 3;
        for modulus in [pow4_plus1(p), pow4_minus1(2 * p), Natural::from(1_000_003u32)] {
            for l in 0..3 {
                let eta = gauss_period(p, 3, l, g, &modulus).unwrap();
                let xi = gauss_period(p, 6, l, g, &modulus).unwrap()
                    + gauss_period(p, 6, l + 3, g, &modulus).unwrap();
                assert_eq!(eta, xi % &modulus);
            }
        }
    }

    #[test]
    fn period_products() {
        for p in [7u64, 13, 31] {
            let g = primitive_root(p).unwrap();
            assert!(period_product_relation_holds(p, g).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn gauss_period_rejects_bad_input() {
        let m = Natural::from(100u32);
        assert!(gauss_period(7, 3, 3, 3, &m).is_err());
        assert!(gauss_period(7, 4, 0, 3, &m).is_err());
        assert!(gauss_period(7, 3, 0, 3, &Natural::from(1u32)).is_err());
    }
}
