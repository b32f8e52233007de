//! Arithmetic in GF(p) for small primes.

/// `a^-1 mod p` by Fermat; `a` must be nonzero mod `p`.
pub fn inverse(a: u8, p: u8) -> u8 {
    let (mut base, mut exp, mut acc) = (a as u32 % p as u32, p as u32 - 2, 1u32);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u32;
        }
        base = base * base % p as u32;
        exp >>= 1;
    }
    acc as u8
}

/// Rank over GF(p) by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<u8>], p: u8) -> usize {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as u32 % p as u32).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let p = p as u32;
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inverse(m[rank][col] as u8, p as u8) as u32;
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][col] != 0 {
                let f = m[i][col];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u8, 3, 5, 7] {
            for a in 1..p {
                assert_eq!(a as u32 * inverse(a, p) as u32 % p as u32, 1);
            }
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 2), 2);
        assert_eq!(rank_mod_p(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3), 3);
        assert_eq!(rank_mod_p(&[vec![2, 4], vec![1, 2]], 5), 1);
        assert_eq!(rank_mod_p(&[], 5), 0);
    }
}
