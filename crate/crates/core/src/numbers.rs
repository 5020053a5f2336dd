//! Raney, Fuss-Catalan and Catalan numbers.
//!
//! `R_{p,r}(k) = r / (kp + r) * C(kp + r, k)` is evaluated three ways:
//!
//! * [`raney`]: the closed form, by exact integer cancellation;
//! * [`raney_by_recurrence`]: the two convolution recurrences seeded with
//!   `R_{p,r}(0) = 1` and `R_{p,0}(k + 1) = 0`;
//! * [`raney_by_convolution`]: the `r`-fold convolution of Fuss-Catalan
//!   numbers over weak compositions of `k`.
//!
//! The three routes share nothing except [`binomial`], and the recurrence
//! route does not even use that.

use crate::{Error, Natural, Result};

/// Parameters `(p, r, k)` of a Raney number, with `p >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RaneyParams {
    p: u32,
    r: u32,
    k: u32,
}

impl RaneyParams {
    pub fn new(p: u32, r: u32, k: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        Ok(RaneyParams { p, r, k })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    // after step i the accumulator is C(n - k + i, i), so every division is exact
    let mut acc = Natural::one();
    for i in 1..=k {
        acc *= &Natural::from(n - k + i);
        acc = acc
            .div_exact(&Natural::from(i))
            .expect("partial binomial products divide exactly");
    }
    acc
}

/// Closed-form Raney number.
///
/// `R_{p,0}(0)` is taken to be 1 and `R_{p,0}(k)` is 0 for `k > 0`.
pub fn raney(params: RaneyParams) -> Natural {
    let RaneyParams { p, r, k } = params;
    if r == 0 {
        return if k == 0 {
            Natural::one()
        } else {
            Natural::zero()
        };
    }
    let n = u64::from(k) * u64::from(p) + u64::from(r);
    let numerator = &Natural::from(r) * &binomial(n, u64::from(k));
    match numerator.div_exact(&Natural::from(n)) {
        Some(value) => value,
        None => panic!("(kp + r) must divide r * C(kp + r, k) for p={p}, r={r}, k={k}"),
    }
}

/// Catalan number `C_k = C(2k, k) / (k + 1)`.
pub fn catalan(k: u32) -> Natural {
    let k = u64::from(k);
    binomial(2 * k, k)
        .div_exact(&Natural::from(k + 1))
        .expect("k + 1 divides C(2k, k)")
}

/// Fuss-Catalan number `C_p(k) = C(kp, k) / ((p - 1)k + 1)`.
pub fn fuss_catalan(p: u32, k: u32) -> Result<Natural> {
    if p == 0 {
        return Err(Error::ZeroParameter("p"));
    }
    let (p, k) = (u64::from(p), u64::from(k));
    let denominator = Natural::from((p - 1) * k + 1);
    Ok(binomial(k * p, k)
        .div_exact(&denominator)
        .expect("(p - 1)k + 1 divides C(kp, k)"))
}

/// Memo table of `R_{p,r}(k)` for one fixed `p`, filled bottom-up in `k`.
///
/// Row `k` is completed before row `k + 1`: first `R_{p,1}(k)` from
/// `R_{p,1}(k) = sum_{i<k} R_{p,1}(i) R_{p,p-1}(k-1-i)`, then
/// `R_{p,r}(k) = sum_{i<=k} R_{p,1}(i) R_{p,r-1}(k-i)` for `r = 2, 3, ...`.
#[derive(Debug, Clone)]
pub struct RaneyTable {
    p: u32,
    max_r: u32,
    rows: Vec<Vec<Natural>>,
}

impl RaneyTable {
    /// Table covering `r <= max_r` and `k <= max_k`.
    pub fn new(p: u32, max_r: u32, max_k: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::ZeroParameter("p"));
        }
        // the r = 1 recurrence reads column p - 1
        let max_r = max_r.max(p - 1).max(1);
        let width = max_r as usize + 1;
        let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(max_k as usize + 1);
        rows.push(vec![Natural::one(); width]);

        for k in 1..=max_k as usize {
            let mut row = vec![Natural::zero(); width];
            row[1] = (0..k)
                .map(|i| &rows[i][1] * &rows[k - 1 - i][p as usize - 1])
                .sum();
            for r in 2..width {
                // the i = 0 and i = k terms read the row being filled
                let mut acc = &rows[0][1] * &row[r - 1];
                acc += &row[1] * &rows[0][r - 1];
                for i in 1..k {
                    acc += &rows[i][1] * &rows[k - i][r - 1];
                }
                row[r] = acc;
            }
            rows.push(row);
        }
        Ok(RaneyTable { p, max_r, rows })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn get(&self, r: u32, k: u32) -> Option<&Natural> {
        if r > self.max_r {
            return None;
        }
        self.rows.get(k as usize).map(|row| &row[r as usize])
    }
}

/// Raney number from the recurrences alone.
pub fn raney_by_recurrence(params: RaneyParams) -> Natural {
    let table = RaneyTable::new(params.p, params.r, params.k).expect("p validated by RaneyParams");
    table
        .get(params.r, params.k)
        .cloned()
        .expect("table covers the requested entry")
}

/// Raney number as a sum over weak compositions of `k` into `r` parts of
/// products of Fuss-Catalan numbers.
pub fn raney_by_convolution(params: RaneyParams) -> Result<Natural> {
    let RaneyParams { p, r, k } = params;
    if r == 0 {
        return if k == 0 {
            Ok(Natural::one())
        } else {
            Err(Error::EmptyConvolution { k })
        };
    }
    let fuss = (0..=k)
        .map(|i| fuss_catalan(p, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeakCompositions::new(k, r as usize)
        .map(|parts| {
            parts
                .iter()
                .map(|&i| &fuss[i as usize])
                .product::<Natural>()
        })
        .sum())
}

/// Weak compositions of `total` into `parts` nonnegative summands, in
/// lexicographic order.
///
/// `parts = 0` yields the empty composition when `total = 0` and nothing
/// otherwise.
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    total: u32,
    current: Option<Vec<u32>>,
}

impl WeakCompositions {
    pub fn new(total: u32, parts: usize) -> Self {
        let current = match parts {
            0 if total == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut first = vec![0; parts];
                first[parts - 1] = total;
                Some(first)
            }
        };
        WeakCompositions { total, current }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        // lexicographic successor: move one unit from the suffix after the
        // rightmost j with a nonzero suffix into j, and park the rest last
        let n = out.len();
        let mut suffix = 0;
        for j in (0..n.saturating_sub(1)).rev() {
            suffix += out[j + 1];
            if suffix > 0 {
                let mut next = out.clone();
                next[j] += 1;
                next[j + 1..].fill(0);
                next[n - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
        }
        debug_assert!(out.iter().sum::<u32>() == self.total);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(p: u32, r: u32, k: u32) -> RaneyParams {
        RaneyParams::new(p, r, k).unwrap()
    }

    fn pascal_row(n: usize) -> Vec<u64> {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row
    }

    // Dyck words of semilength k, by brute force over all 2^(2k) words
    fn dyck_count(k: u32) -> u64 {
        let len = 2 * k;
        (0u64..1 << len)
            .filter(|word| {
                let mut height = 0i32;
                for bit in 0..len {
                    height += if word >> bit & 1 == 1 { 1 } else { -1 };
                    if height < 0 {
                        return false;
                    }
                }
                height == 0
            })
            .count() as u64
    }

    // preorder codes of p-ary trees: internal node +(p-1), leaf -1
    fn pary_tree_count(p: u32, k: u32) -> u64 {
        let len = p * k + 1;
        (0u64..1 << len)
            .filter(|code| code.count_ones() == k)
            .filter(|code| {
                let mut open = 1i64;
                for bit in 0..len {
                    if open == 0 {
                        return false;
                    }
                    open += if code >> bit & 1 == 1 {
                        i64::from(p) - 1
                    } else {
                        -1
                    };
                }
                open == 0
            })
            .count() as u64
    }

    #[test]
    fn binomial_matches_pascal() {
        assert_eq!(pascal_row(10)[3], 120);
        assert_eq!(binomial(10, 3), 120u64);
        for n in 0..30usize {
            let row = pascal_row(n);
            for (k, &value) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), value, "C({n},{k})");
            }
        }
        assert_eq!(binomial(7, 0), 1u64);
        assert_eq!(binomial(0, 0), 1u64);
        assert_eq!(binomial(3, 5), 0u64);
    }

    #[test]
    fn binomial_is_exact_for_large_arguments() {
        let expected: Natural = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial(100, 49), expected);
    }

    #[test]
    fn raney_examples() {
        assert_eq!(dyck_count(3), 5);
        assert_eq!(raney(rp(2, 1, 3)), 5u64);
        for p in 1..5 {
            for r in 0..5 {
                assert_eq!(raney(rp(p, r, 0)), 1u64);
            }
        }
        assert_eq!(raney(rp(2, 3, 3)), 28u64);
        assert_eq!(raney(rp(3, 1, 3)), 12u64);
        assert_eq!(raney(rp(3, 2, 2)), 7u64);
        assert_eq!(raney(rp(4, 0, 3)), 0u64);
    }

    #[test]
    fn rejects_zero_p() {
        assert_eq!(RaneyParams::new(0, 1, 1), Err(Error::ZeroParameter("p")));
        assert!(fuss_catalan(0, 2).is_err());
        assert!(RaneyTable::new(0, 1, 1).is_err());
    }

    #[test]
    fn catalan_against_dyck_paths() {
        assert_eq!(catalan(0), 1u64);
        for k in 0..=8 {
            assert_eq!(catalan(k), dyck_count(k), "C_{k}");
        }
        assert_eq!(catalan(6), 132u64);
    }

    #[test]
    fn fuss_catalan_against_tree_codes() {
        assert_eq!(pary_tree_count(3, 2), 3);
        assert_eq!(fuss_catalan(3, 2).unwrap(), 3u64);
        assert_eq!(fuss_catalan(2, 4).unwrap(), 14u64);
        for p in 1..=4 {
            assert_eq!(fuss_catalan(p, 0).unwrap(), 1u64);
            for k in 0..=4 {
                assert_eq!(
                    fuss_catalan(p, k).unwrap(),
                    pary_tree_count(p, k),
                    "p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(raney_by_recurrence(rp(1, 1, 7)), 1u64);
        assert_eq!(raney_by_recurrence(rp(2, 1, 4)), 14u64);
        assert_eq!(raney_by_recurrence(rp(3, 2, 2)), 7u64);
        assert_eq!(raney_by_recurrence(rp(5, 0, 0)), 1u64);
        assert_eq!(raney_by_recurrence(rp(5, 0, 4)), 0u64);
    }

    #[test]
    fn catalan_recurrence_row() {
        let table = RaneyTable::new(2, 1, 10).unwrap();
        let mut c = vec![1u64];
        for k in 1..=10usize {
            c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
        }
        for (k, &value) in c.iter().enumerate() {
            assert_eq!(*table.get(1, k as u32).unwrap(), value);
        }
        assert!(table.get(5, 1).is_none());
    }

    #[test]
    fn convolution_examples() {
        // C_0 C_2 + C_1 C_1 + C_2 C_0
        assert_eq!(raney_by_convolution(rp(2, 2, 2)).unwrap(), 5u64);
        assert_eq!(raney(rp(2, 2, 2)), 5u64);
        assert_eq!(raney_by_convolution(rp(3, 1, 2)).unwrap(), 3u64);
        for p in 1..4 {
            for r in 1..4 {
                assert_eq!(raney_by_convolution(rp(p, r, 0)).unwrap(), 1u64);
            }
        }
        assert_eq!(raney_by_convolution(rp(2, 0, 0)).unwrap(), 1u64);
        assert_eq!(
            raney_by_convolution(rp(2, 0, 3)),
            Err(Error::EmptyConvolution { k: 3 })
        );
    }

    #[test]
    fn specializations() {
        for k in 0..=15 {
            assert_eq!(catalan(k), raney(rp(2, 1, k)));
        }
        for p in 1..=6 {
            for k in 0..=10 {
                assert_eq!(fuss_catalan(p, k).unwrap(), raney(rp(p, 1, k)));
                if p > 1 && k >= 1 {
                    assert_eq!(raney(rp(p, 1, k)), raney(rp(p, p, k - 1)));
                }
            }
        }
    }

    #[test]
    fn weak_compositions_lexicographic() {
        let all: Vec<_> = WeakCompositions::new(2, 2).collect();
        assert_eq!(all, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let three: Vec<_> = WeakCompositions::new(2, 3).collect();
        assert_eq!(
            three,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0]
            ]
        );
        assert_eq!(WeakCompositions::new(0, 0).count(), 1);
        assert_eq!(WeakCompositions::new(3, 0).count(), 0);
        assert_eq!(
            WeakCompositions::new(5, 1).collect::<Vec<_>>(),
            vec![vec![5]]
        );
        for total in 0..6u32 {
            for parts in 1..5usize {
                let v: Vec<_> = WeakCompositions::new(total, parts).collect();
                let expected = binomial(u64::from(total) + parts as u64 - 1, parts as u64 - 1);
                assert_eq!(Natural::from(v.len()), expected);
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                assert!(v.iter().all(|c| c.iter().sum::<u32>() == total));
            }
        }
    }
}
