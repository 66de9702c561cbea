use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::elem::{has_element_order, psl2_order, Psl2Elem};
use super::field::{is_prime, non_residue};
use crate::error::{Error, Result};
use crate::perm_core::{lcm, PermGroup, StabChain};

/// Default number of candidate pairs tried per seed.
pub const DEFAULT_PAIR_BUDGET: u64 = 200_000;

/// Number of consecutive seeds tried before giving up.
pub const SEED_SPAN: u64 = 16;

/// Checks that `(p, q, r)` is finite and hyperbolic. A period of `0` stands
/// for `∞`.
pub fn check_hyperbolic(p: u64, q: u64, r: u64) -> Result<()> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::NotCocompact);
    }
    if q * r + p * r + p * q >= p * q * r {
        return Err(Error::NotHyperbolic(p, q, r));
    }
    Ok(())
}

/// `l = lcm(2p, 2q, 2r)` and the least prime `n ≡ −1 (mod l)`.
pub fn modulus_for_type(p: u64, q: u64, r: u64) -> Result<(u64, u64)> {
    check_hyperbolic(p, q, r)?;
    let l = lcm(lcm(2 * p, 2 * q), 2 * r);
    let n = (1..)
        .map(|k| k * l - 1)
        .find(|&n| is_prime(n))
        .expect("Dirichlet");
    Ok((l, n))
}

/// One representative per conjugacy class of elements of order `o`
/// (companion matrices, plus both unipotent classes when `o = n`).
pub fn class_representatives(o: u64, n: u64) -> Vec<Psl2Elem> {
    if o == 1 {
        return vec![Psl2Elem::identity(n)];
    }
    let mut reps = Vec::new();
    if o == n {
        reps.push(Psl2Elem::new(1, 1, 0, 1, n).unwrap());
        reps.push(Psl2Elem::new(1, non_residue(n), 0, 1, n).unwrap());
        return reps;
    }
    for t in 0..=(n - 1) / 2 {
        if t == 2 {
            continue;
        }
        let g = Psl2Elem::companion(t, n);
        if g.order() == o {
            reps.push(g);
        }
    }
    reps
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingPair {
    pub x: Psl2Elem,
    pub y: Psl2Elem,
    pub prime: u64,
    pub seed: u64,
    /// Candidates examined before success (1-based).
    pub attempts: u64,
}

fn check_prime(n: u64) -> Result<()> {
    if n < 5 || !is_prime(n) {
        return Err(Error::BadPrime(n));
    }
    Ok(())
}

/// Checks element-order preconditions for `(p, q, r)` in `PSL(2, n)`.
pub fn check_orders(p: u64, q: u64, r: u64, n: u64) -> Result<()> {
    check_prime(n)?;
    for o in [p, q, r] {
        if o == 0 || !has_element_order(o, n) {
            return Err(Error::OrderNotPresent { order: o, prime: n });
        }
    }
    Ok(())
}

/// Seeded search for `x, y` of orders `p, q` with `xy` of order `r`
/// generating `PSL(2, n)`. `x` cycles through class representatives and `y`
/// runs over random conjugates of a fixed order-`q` element.
pub fn find_generating_pair_seeded(
    p: u64,
    q: u64,
    r: u64,
    n: u64,
    seed: u64,
    budget: u64,
) -> Result<GeneratingPair> {
    check_orders(p, q, r, n)?;
    let xs = class_representatives(p, n);
    let y0 = class_representatives(q, n)[0];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = psl2_order(n);
    for attempt in 0..budget {
        let x = xs[(attempt % xs.len() as u64) as usize];
        let h = Psl2Elem::random(n, &mut rng);
        let y = y0.conjugate_by(&h);
        if x.mul(&y).order() != r {
            continue;
        }
        if generates_psl2(&x, &y, target) {
            return Ok(GeneratingPair {
                x,
                y,
                prime: n,
                seed,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::NoPairFound { seed, budget })
}

fn generates_psl2(x: &Psl2Elem, y: &Psl2Elem, target: u128) -> bool {
    let g = PermGroup::new(x.modulus() as usize + 1, vec![x.to_perm(), y.to_perm()])
        .expect("same degree");
    g.is_transitive() && StabChain::new(&g).order() == target
}

/// Tries seeds `seed, seed+1, …` (up to [`SEED_SPAN`] of them) and returns
/// the result for the lowest successful seed. With `jobs > 1` seeds are
/// searched concurrently in batches; the answer does not depend on `jobs`.
pub fn find_generating_pair(
    p: u64,
    q: u64,
    r: u64,
    n: u64,
    seed: u64,
    budget: u64,
    jobs: usize,
) -> Result<GeneratingPair> {
    check_orders(p, q, r, n)?;
    let jobs = jobs.max(1) as u64;
    let mut start = seed;
    while start < seed + SEED_SPAN {
        let end = (start + jobs).min(seed + SEED_SPAN);
        let results: Vec<Result<GeneratingPair>> = if jobs == 1 {
            vec![find_generating_pair_seeded(p, q, r, n, start, budget)]
        } else {
            std::thread::scope(|s| {
                let handles: Vec<_> = (start..end)
                    .map(|sd| s.spawn(move || find_generating_pair_seeded(p, q, r, n, sd, budget)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("search thread panicked"))
                    .collect()
            })
        };
        if let Some(found) = results.into_iter().find_map(|r| r.ok()) {
            return Ok(found);
        }
        start = end;
    }
    Err(Error::NoPairFound { seed, budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_examples() {
        assert_eq!(modulus_for_type(3, 2, 7).unwrap(), (84, 83));
        assert_eq!(modulus_for_type(4, 3, 5).unwrap().0, 120);
        assert_eq!(modulus_for_type(4, 3, 5).unwrap().1, 239);
        assert_eq!(modulus_for_type(2, 3, 6), Err(Error::NotHyperbolic(2, 3, 6)));
        assert_eq!(modulus_for_type(2, 0, 7), Err(Error::NotCocompact));
    }

    #[test]
    fn class_representatives_have_the_order() {
        for g in class_representatives(7, 83) {
            assert_eq!(g.order(), 7);
        }
        // Order-7 elements of PSL(2,83) fall into φ(7)/2 = 3 classes.
        assert_eq!(class_representatives(7, 83).len(), 3);
        assert_eq!(class_representatives(2, 83).len(), 1);
        assert_eq!(class_representatives(13, 13).len(), 2);
    }

    #[test]
    fn missing_order_is_reported() {
        assert_eq!(
            find_generating_pair(3, 2, 7, 5, 0, 10, 1),
            Err(Error::OrderNotPresent { order: 7, prime: 5 })
        );
        assert_eq!(find_generating_pair(3, 2, 7, 9, 0, 10, 1), Err(Error::BadPrime(9)));
    }

    #[test]
    fn small_pair_and_fanout_agree() {
        // PSL(2,13) is a Hurwitz group.
        let a = find_generating_pair(2, 3, 7, 13, 7, 5_000, 1).unwrap();
        let b = find_generating_pair(2, 3, 7, 13, 7, 5_000, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.x.order(), a.y.order(), a.x.mul(&a.y).order()), (2, 3, 7));
    }
}
