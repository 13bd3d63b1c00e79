//! Timing probe for sphere recognition and corpus parameter scans.
//! Run with: cargo run --release -p simplex-forge --example bench_recursion

use std::time::Instant;

use simplex_forge::generators::{cross_polytope, random_whitney};
use simplex_forge::homotopy::HomotopyEngine;

fn main() {
    let engine = HomotopyEngine::default();
    for d in [1i64, 2, 3] {
        let g = cross_polytope(d as usize);
        let t = Instant::now();
        let ok = engine.is_sphere(&g, d).unwrap();
        println!("is_sphere(cross{d}, {d}) = {ok} in {:?}", t.elapsed());
    }

    // Corpus parameter scan: dimension and size ranges per density tier.
    let t = Instant::now();
    let mut max_elements = 0usize;
    let mut dim_hist = std::collections::BTreeMap::<usize, u32>::new();
    let mut oversize = Vec::new();
    for i in 0..100u64 {
        let n = 12 + (i % 9) as u32;
        let tier = (i / 9) % 4;
        let m = match tier {
            0 => (n as u64 * 2).min(n as u64 * (n as u64 - 1) / 2),
            1 => (n as u64 * 5) / 2,
            2 => n as u64 * 3,
            _ => (n as u64 * 7) / 2,
        };
        let g = random_whitney(n, m, 1000 + i).unwrap();
        let d = g.dimension().unwrap_or(0);
        *dim_hist.entry(d).or_insert(0) += 1;
        max_elements = max_elements.max(g.len());
        if g.len() > 400 {
            oversize.push((n, m, 1000 + i, g.len()));
        }
    }
    println!(
        "corpus scan in {:?}: dims {:?}, max elements {max_elements}, oversize {:?}",
        t.elapsed(),
        dim_hist,
        oversize
    );
}
