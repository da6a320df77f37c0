#![allow(dead_code)]

use mixladder::ladder::Ladder;
use mixladder::Cell;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};

/// Draws ladders from `rng` until one passes validation.
pub fn random_valid_ladder(rng: &mut StdRng, max_dim: i32, max_t: u32) -> Ladder {
    loop {
        let m = rng.gen_range(2..=max_dim);
        let n = rng.gen_range(2..=max_dim);
        let k = rng.gen_range(1..=3usize);
        let h = rng.gen_range(1..=3usize);
        let extra = (h - 1).min((m - 1) as usize).min((n - 1) as usize);
        let mut bs: Vec<i32> = sample(rng, (m - 1) as usize, extra).into_iter().map(|x| x as i32 + 2).collect();
        let mut as_: Vec<i32> = sample(rng, (n - 1) as usize, extra).into_iter().map(|x| x as i32 + 1).collect();
        bs.sort();
        as_.sort();
        let upper: Vec<Cell> = std::iter::once(1)
            .chain(bs)
            .zip(as_.into_iter().chain(std::iter::once(n)))
            .map(|(r, c)| Cell::new(r, c))
            .collect();
        let mut ds: Vec<i32> = (0..k - 1).map(|_| rng.gen_range(1..=m)).collect();
        let mut cs: Vec<i32> = (0..k - 1).map(|_| rng.gen_range(1..=n)).collect();
        ds.sort();
        cs.sort();
        ds.push(m);
        cs.insert(0, 1);
        let lower = ds.into_iter().zip(cs).map(|(r, c)| Cell::new(r, c)).collect();
        let t = (0..k).map(|_| rng.gen_range(1..=max_t)).collect();
        if let Ok(l) = Ladder::new(m, n, upper, lower, t) {
            if l.validate().is_ok() {
                return l;
            }
        }
    }
}

pub fn arb_ladder(max_dim: i32, max_t: u32) -> impl Strategy<Value = Ladder> {
    any::<u64>().prop_map(move |seed| random_valid_ladder(&mut StdRng::seed_from_u64(seed), max_dim, max_t))
}
