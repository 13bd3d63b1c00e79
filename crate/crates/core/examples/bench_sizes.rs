//! Rough timing probe for determinant/rank work across complex sizes.
//! Run with: cargo run --release -p simplex-forge --example bench_sizes

use std::time::Instant;

use simplex_forge::energy::{
    connection_laplacian_with_limit, green_matrix_with_limit, sphere_matrix_with_limit,
};
use simplex_forge::generators::random_whitney;
use simplex_forge::hodge::{betti, mckean_singer_check};
use simplex_forge::valuations::f_vector;

fn main() {
    let cases = [
        (12u32, 30u64, 1u64),
        (14, 40, 2),
        (16, 50, 3),
        (16, 60, 4),
        (18, 70, 5),
        (20, 80, 6),
        (20, 100, 7),
    ];
    for (n, m, seed) in cases {
        let g = random_whitney(n, m, seed).unwrap();
        let size = g.len();
        let fv = f_vector(&g);
        let t0 = Instant::now();
        let l = connection_laplacian_with_limit(&g, 2000).unwrap();
        let gm = green_matrix_with_limit(&g, 2000).unwrap();
        let build = t0.elapsed();

        let t0 = Instant::now();
        let ok = l.mul(&gm).is_identity();
        let mul = t0.elapsed();

        let t0 = Instant::now();
        let det = gm.determinant().unwrap();
        let det_t = t0.elapsed();

        let t0 = Instant::now();
        let s = sphere_matrix_with_limit(&g, 2000).unwrap();
        let nullity = s.nullity().unwrap();
        let null_t = t0.elapsed();

        let t0 = Instant::now();
        let b = betti(&g).unwrap();
        let betti_t = t0.elapsed();

        let t0 = Instant::now();
        let ms = mckean_singer_check(&g, 5).unwrap();
        let ms_t = t0.elapsed();

        println!(
            "n={n} m={m} elements={size} f={:?} | build {build:?} mul {mul:?} (ok={ok}) det {det_t:?} (det={det}) nullity {null_t:?} (nul={nullity}) betti {betti_t:?} {b:?} mckean {ms_t:?} (ok={ms})",
            fv.counts()
        );
    }
}
