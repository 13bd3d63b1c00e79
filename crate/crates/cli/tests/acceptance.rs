//! Acceptance suite: one test per criterion, each printing a pass line
//! with the quantities it verified. Every assertion is exact integer or
//! rational equality; there are no tolerances anywhere.
//!
//! The shared corpus is 100 seeded random Whitney complexes on 12..=20
//! vertices with edge counts spanning dimensions 2 through 5, plus the
//! named example complexes.

use std::process::Command;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use simplex_forge::curvature::{
    gauss_bonnet_polynomial_check, index_expectation, levitt_curvature, poincare_hopf_check,
    sard_check_with_engine, symmetric_index, ExpectationMode, VertexFunction,
};
use simplex_forge::energy::{
    connection_laplacian, green_matrix, is_unimodular, sphere_matrix, super_trace,
    total_sphere_energy, total_star_energy,
};
use simplex_forge::generators::{
    cross_polytope, disjoint_union, join, named_skeleton, projective_plane, random_whitney,
    suspension, Skeleton,
};
use simplex_forge::hodge::{betti, euler_poincare_check, exterior_derivative, mckean_singer_check};
use simplex_forge::homotopy::{barycentric_refinement, HomotopyEngine};
use simplex_forge::valuations::{
    alternating_eigenvector_check, apply_barycentric_operator, ds_residual, f_vector,
    is_dehn_sommerville,
};
use simplex_forge::{Simplex, SimplicialComplex};

const MATRIX_LIMIT: usize = 400;

struct CorpusEntry {
    name: String,
    seed: u64,
    complex: SimplicialComplex,
}

fn named_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let pp = projective_plane();
    vec![
        (
            "triangle",
            SimplicialComplex::from_facets([vec![1u32, 2, 3]]).unwrap(),
        ),
        ("two-points", cross_polytope(0)),
        ("cycle-4", named_skeleton(Skeleton::Cycle(4)).unwrap()),
        ("cycle-5", named_skeleton(Skeleton::Cycle(5)).unwrap()),
        ("star-5-disk", named_skeleton(Skeleton::Star(5)).unwrap()),
        ("cube-skeleton", named_skeleton(Skeleton::Cube).unwrap()),
        (
            "dodecahedron-skeleton",
            named_skeleton(Skeleton::Dodecahedron).unwrap(),
        ),
        ("octahedron", cross_polytope(2)),
        ("cross-polytope-3", cross_polytope(3)),
        ("cross-polytope-4", cross_polytope(4)),
        ("projective-plane", pp.clone()),
        (
            "suspended-projective-planes",
            suspension(&disjoint_union(&pp, &pp)),
        ),
    ]
}

/// 100 random Whitney complexes: n cycles through 12..=20 and the edge
/// count through four density tiers, covering dimensions 2..=5.
fn random_corpus_params() -> Vec<(u32, u64, u64)> {
    (0..100u64)
        .map(|i| {
            let n = 12 + (i % 9) as u32;
            let tier = (i / 9) % 4;
            let m = match tier {
                0 => n as u64 * 2,
                1 => (n as u64 * 5) / 2,
                2 => n as u64 * 3,
                _ => (n as u64 * 7) / 2,
            };
            (n, m, 1000 + i)
        })
        .collect()
}

static CORPUS: LazyLock<Vec<CorpusEntry>> = LazyLock::new(|| {
    let mut entries: Vec<CorpusEntry> = named_corpus()
        .into_iter()
        .map(|(name, complex)| CorpusEntry {
            name: name.to_string(),
            seed: 0,
            complex,
        })
        .collect();
    for (n, m, seed) in random_corpus_params() {
        entries.push(CorpusEntry {
            name: format!("random-n{n}-m{m}-s{seed}"),
            seed,
            complex: random_whitney(n, m, seed).unwrap(),
        });
    }
    entries
});

#[test]
fn criterion_01_energy_formula() {
    for e in CORPUS.iter() {
        assert_eq!(
            total_star_energy(&e.complex),
            e.complex.euler_characteristic(),
            "energy formula fails on {}",
            e.name
        );
    }
    println!(
        "criterion 1 (energy formula) PASS on {} complexes",
        CORPUS.len()
    );
}

#[test]
fn criterion_02_sphere_formula() {
    for e in CORPUS.iter() {
        assert_eq!(
            total_sphere_energy(&e.complex),
            0,
            "sphere formula fails on {}",
            e.name
        );
    }
    println!(
        "criterion 2 (sphere formula) PASS on {} complexes",
        CORPUS.len()
    );
}

#[test]
fn criterion_03_unit_ball_lemma() {
    let mut balls = 0usize;
    for e in CORPUS.iter() {
        for x in e.complex.elements() {
            assert_eq!(
                e.complex.unit_ball(x).unwrap().euler_characteristic(),
                1,
                "unit ball lemma fails at {x} in {}",
                e.name
            );
            balls += 1;
        }
    }
    println!("criterion 3 (unit ball lemma) PASS on {balls} unit balls");
}

#[test]
fn criterion_04_unimodularity() {
    let mut checked = 0usize;
    for e in CORPUS.iter().filter(|e| e.complex.len() <= MATRIX_LIMIT) {
        let l = connection_laplacian(&e.complex).unwrap();
        let g = green_matrix(&e.complex).unwrap();
        assert!(l.mul(&g).is_identity(), "L*g != I on {}", e.name);
        let det = g.determinant().unwrap();
        assert!(is_unimodular(&det), "det(g) = {det} on {}", e.name);
        checked += 1;
    }
    println!("criterion 4 (unimodularity, L*g = I) PASS on {checked} complexes (<= {MATRIX_LIMIT} elements)");
}

#[test]
fn criterion_05_sphere_supertrace_and_nullity_census() {
    let mut csv = String::from("seed,n,f0,f1,f2,f3,f4,f5,chi,det_g,nullity_s\n");
    let mut recorded = 0usize;
    let mut singular = 0usize;
    for e in CORPUS.iter() {
        // Super trace of the sphere Green matrix vanishes. The diagonal is
        // w(x) χ(S(x)), so the oversize members are checked through the
        // same numbers without materializing the matrix.
        let (det_s, nul_s);
        if e.complex.len() <= MATRIX_LIMIT {
            let s = sphere_matrix(&e.complex).unwrap();
            assert_eq!(
                super_trace(&e.complex, &s).unwrap(),
                BigInt::zero(),
                "sphere supertrace fails on {}",
                e.name
            );
            let g = green_matrix(&e.complex).unwrap();
            det_s = g.determinant().unwrap().to_string();
            let nullity = s.nullity().unwrap();
            if nullity > 0 {
                singular += 1;
            }
            nul_s = nullity.to_string();
            recorded += 1;
        } else {
            assert_eq!(
                total_sphere_energy(&e.complex),
                0,
                "sphere supertrace fails on {}",
                e.name
            );
            det_s = "NA".to_string();
            nul_s = "NA".to_string();
        }
        let fv = f_vector(&e.complex);
        let mut padded = [0u64; 6];
        for (k, &c) in fv.counts().iter().enumerate() {
            padded[k] = c;
        }
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            e.seed,
            e.complex.len(),
            padded[0],
            padded[1],
            padded[2],
            padded[3],
            padded[4],
            padded[5],
            e.complex.euler_characteristic(),
            det_s,
            nul_s
        ));
    }
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance_nullity.csv");
    std::fs::write(&path, &csv).unwrap();
    println!(
        "criterion 5 (sphere supertrace = 0; nullity census) PASS: {recorded} nullities recorded \
         ({singular} singular, observed not asserted), CSV at {}",
        path.display()
    );
}

#[test]
fn criterion_06_paper_constants() {
    // Cube skeleton: χ = −4, vertex curvature −1/2, sphere tallies 8*3 = 12*2.
    let cube = named_skeleton(Skeleton::Cube).unwrap();
    assert_eq!(cube.euler_characteristic(), -4);
    let k = levitt_curvature(&cube).unwrap();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    assert!(k.per_vertex().iter().all(|(_, v)| *v == minus_half));
    let mut tally0 = 0i64;
    let mut tally1 = 0i64;
    for x in cube.elements() {
        let chi_s = cube.unit_sphere(x).unwrap().euler_characteristic();
        match x.dimension() {
            0 => {
                assert_eq!(chi_s, 3);
                tally0 += chi_s;
            }
            _ => {
                assert_eq!(chi_s, 2);
                tally1 += chi_s;
            }
        }
    }
    assert_eq!((tally0, tally1), (24, 24));

    // Dodecahedron skeleton: χ = −10 from twenty curvatures −1/2.
    let dod = named_skeleton(Skeleton::Dodecahedron).unwrap();
    assert_eq!(dod.euler_characteristic(), -10);
    let kd = levitt_curvature(&dod).unwrap();
    assert!(kd.per_vertex().iter().all(|(_, v)| *v == minus_half));
    assert_eq!(*kd.total(), BigRational::from_integer(BigInt::from(-10)));

    // Smallest 4-sphere: f-vector and the Dehn-Sommerville residual.
    let c4s = cross_polytope(4);
    assert_eq!(f_vector(&c4s).counts(), &[10, 40, 80, 80, 32]);
    assert_eq!(ds_residual(&c4s, &[0, -22, 33, -40, 45]), 0);

    // Projective plane f-vector.
    assert_eq!(f_vector(&projective_plane()).counts(), &[15, 42, 28]);

    // Suspension of two projective planes: χ = 0, every unit sphere has
    // χ = 2, curvature vanishes identically.
    let pp = projective_plane();
    let susp = suspension(&disjoint_union(&pp, &pp));
    assert_eq!(susp.euler_characteristic(), 0);
    for x in susp.elements() {
        assert_eq!(
            susp.unit_sphere(x).unwrap().euler_characteristic(),
            2,
            "unit sphere chi at {x}"
        );
    }
    let ks = levitt_curvature(&susp).unwrap();
    assert!(ks.per_vertex().iter().all(|(_, v)| v.is_zero()));

    println!("criterion 6 (paper constants) PASS: cube, dodecahedron, 4-sphere, projective plane, suspension");
}

#[test]
fn criterion_07_euler_gem_and_dehn_sommerville() {
    let engine = HomotopyEngine::default();
    assert!(engine.is_sphere(&SimplicialComplex::empty(), -1).unwrap());
    for d in 0..=3i64 {
        let g = cross_polytope(d as usize);
        assert!(engine.is_sphere(&g, d).unwrap(), "cross-polytope {d}");
        assert_eq!(
            g.euler_characteristic(),
            1 + if d % 2 == 0 { 1 } else { -1 },
            "Euler gem at d={d}"
        );
    }
    let sphere3 = cross_polytope(3);
    let sphere5 = join(&sphere3, &named_skeleton(Skeleton::Cycle(4)).unwrap());
    assert!(is_dehn_sommerville(&sphere3).unwrap());
    assert!(is_dehn_sommerville(&sphere5).unwrap());
    assert!(!is_dehn_sommerville(&named_skeleton(Skeleton::Star(5)).unwrap()).unwrap());
    println!(
        "criterion 7 (Euler gem d <= 3; 3- and 5-sphere Dehn-Sommerville, disk not) PASS"
    );
}

#[test]
fn criterion_08_gauss_bonnet() {
    for e in CORPUS.iter() {
        assert!(
            gauss_bonnet_polynomial_check(&e.complex).unwrap(),
            "polynomial Gauss-Bonnet fails on {}",
            e.name
        );
        let k = levitt_curvature(&e.complex).unwrap();
        assert_eq!(
            *k.total(),
            BigRational::from_integer(BigInt::from(e.complex.euler_characteristic())),
            "curvature total fails on {}",
            e.name
        );
    }
    println!(
        "criterion 8 (Gauss-Bonnet polynomial identity and curvature totals) PASS on {} complexes",
        CORPUS.len()
    );
}

#[test]
fn criterion_09_poincare_hopf_and_index_expectation() {
    let mut functions = 0usize;
    for e in CORPUS.iter() {
        for trial in 0..20u64 {
            let f = VertexFunction::random_seeded(&e.complex, e.seed * 31 + trial);
            // ph_index internally computes both the sub-level-link form and
            // the max-attribution form and errors if they ever disagree.
            assert!(
                poincare_hopf_check(&e.complex, &f).unwrap(),
                "Poincaré-Hopf sum fails on {} trial {trial}",
                e.name
            );
            functions += 1;
        }
    }

    // Exhaustive index expectation equals curvature exactly on every small
    // named complex.
    let mut exhaustive = 0usize;
    for (name, g) in named_corpus() {
        if g.vertex_labels().len() > 8 {
            continue;
        }
        let e = index_expectation(&g, 1, 0).unwrap();
        assert_eq!(e.mode, ExpectationMode::Exhaustive, "{name}");
        let k = levitt_curvature(&g).unwrap();
        for ((v, got), (w, want)) in e.per_vertex.iter().zip(k.per_vertex()) {
            assert_eq!(v, w);
            assert_eq!(got, want, "expectation != curvature at vertex {v} of {name}");
        }
        exhaustive += 1;
    }
    println!(
        "criterion 9 (Poincaré-Hopf, both index forms) PASS on {functions} random functions; \
         exhaustive index expectation = curvature on {exhaustive} small complexes"
    );
}

#[test]
fn criterion_10_discrete_sard_and_odd_symmetric_index() {
    let engine = HomotopyEngine::default();
    let mut levels = 0usize;
    for d in 1..=3i64 {
        let g = cross_polytope(d as usize);
        for trial in 0..10u64 {
            let f = VertexFunction::random_seeded(&g, 7000 + d as u64 * 100 + trial);
            let c = f.median_midpoint().unwrap();
            assert!(
                sard_check_with_engine(&engine, &g, &f, &c).unwrap(),
                "Sard fails on cross-polytope {d} trial {trial}"
            );
            levels += 1;
        }
    }
    // Odd-dimensional manifold: the symmetric index vanishes everywhere.
    let s3 = cross_polytope(3);
    for trial in 0..10u64 {
        let f = VertexFunction::random_seeded(&s3, 9000 + trial);
        for v in s3.vertex_labels() {
            assert!(
                symmetric_index(&s3, &f, v).unwrap().is_zero(),
                "j_f({v}) != 0 on the 3-sphere, trial {trial}"
            );
        }
    }
    println!(
        "criterion 10 (discrete Sard on {levels} level sets; symmetric index vanishes on the 3-sphere) PASS"
    );
}

#[test]
fn criterion_11_hodge() {
    for e in CORPUS.iter() {
        let d = exterior_derivative(&e.complex).unwrap();
        assert!(d.mul(&d).is_zero(), "d^2 != 0 on {}", e.name);
        assert!(
            mckean_singer_check(&e.complex, 5).unwrap(),
            "McKean-Singer fails on {}",
            e.name
        );
        assert!(
            euler_poincare_check(&e.complex).unwrap(),
            "Euler-Poincaré fails on {}",
            e.name
        );
    }
    assert_eq!(
        betti(&named_skeleton(Skeleton::Cycle(4)).unwrap()).unwrap(),
        vec![1, 1]
    );
    assert_eq!(betti(&cross_polytope(2)).unwrap(), vec![1, 0, 1]);
    assert_eq!(betti(&projective_plane()).unwrap(), vec![1, 0, 0]);
    assert_eq!(betti(&cross_polytope(3)).unwrap(), vec![1, 0, 0, 1]);
    println!(
        "criterion 11 (d^2 = 0, str(L^m) = 0 for m <= 5, Euler-Poincaré, named Betti vectors) PASS on {} complexes",
        CORPUS.len()
    );
}

#[test]
fn criterion_12_barycentric_operator() {
    let mut refined = 0usize;
    for e in CORPUS.iter() {
        if e.complex.dimension().is_none_or(|d| d > 3) {
            continue;
        }
        let direct = f_vector(&barycentric_refinement(&e.complex));
        let via_operator = apply_barycentric_operator(&f_vector(&e.complex));
        assert_eq!(direct, via_operator, "operator mismatch on {}", e.name);
        refined += 1;
    }
    for d in 0..=6 {
        assert!(alternating_eigenvector_check(d), "alternating vector at d={d}");
    }
    println!(
        "criterion 12 (Barycentric operator matches explicit refinement on {refined} complexes; \
         Q^T fixes the alternating vector) PASS"
    );
}

#[test]
fn criterion_13_cli_contract() {
    use simplex_forge_cli::doc::{parse_complex, serialize_complex};

    // Round trip: parse(serialize(G)) = G.
    for (name, g) in named_corpus() {
        let back = parse_complex(&serialize_complex(&g)).unwrap();
        assert_eq!(back, g, "round trip fails for {name}");
    }
    for seed in [1u64, 2, 3] {
        let g = random_whitney(10, 24, seed).unwrap();
        let back = parse_complex(&serialize_complex(&g)).unwrap();
        assert_eq!(back, g);
    }

    let bin = env!("CARGO_BIN_EXE_simplex-forge");
    let tmp = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));

    // Deterministic CSV for fixed seeds.
    let csv_a = tmp.join("exp_a.csv");
    let csv_b = tmp.join("exp_b.csv");
    for out in [&csv_a, &csv_b] {
        let status = Command::new(bin)
            .args([
                "experiment-nullity",
                "--count",
                "3",
                "--vertices",
                "10",
                "--edges",
                "24",
                "--seed",
                "5",
                "--output",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let bytes_a = std::fs::read(&csv_a).unwrap();
    assert_eq!(bytes_a, std::fs::read(&csv_b).unwrap());
    assert!(String::from_utf8(bytes_a)
        .unwrap()
        .starts_with("seed,n,f0,f1,f2,f3,f4,f5,chi,det_g,nullity_s\n"));

    // Exit 0 on a passing check.
    let ok = Command::new(bin)
        .args(["check", "--generate", "cross-polytope", "2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    // Exit 2 on a non-subset-closed document.
    let bad = tmp.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"format":"simplex-forge/1","elements":[[1,2],[1]]}"#,
    )
    .unwrap();
    let out = Command::new(bin)
        .args(["check", "--input"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "non-subset-closed input must exit 2");

    // Exit 2 on malformed facet text.
    let mangled = tmp.join("bad.txt");
    std::fs::write(&mangled, "1 2\nnot-a-label 3\n").unwrap();
    let out = Command::new(bin)
        .args(["check", "--input"])
        .arg(&mangled)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    println!("criterion 13 (CLI round trip, deterministic CSV, exit codes) PASS");
}
