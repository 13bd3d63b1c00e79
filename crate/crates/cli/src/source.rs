//! Complex sources: files, named generators, and seeded random graphs.

use std::path::Path;

use simplex_forge::generators::{
    cross_polytope, disjoint_union, named_skeleton, projective_plane, random_whitney, suspension,
    Skeleton,
};
use simplex_forge::SimplicialComplex;

use crate::{doc, CliError, Result};

/// Names accepted by `--generate`, for usage messages.
pub const GENERATOR_NAMES: &[&str] = &[
    "cross-polytope <d>",
    "cube-skeleton",
    "dodecahedron-skeleton",
    "cycle <n>",
    "star <n>",
    "projective-plane",
    "suspended-projective-planes",
];

fn param<T: std::str::FromStr>(params: &[String], what: &str) -> Result<T> {
    let raw = params.first().ok_or_else(|| {
        CliError::Usage(format!("this generator needs a {what} parameter"))
    })?;
    raw.parse().map_err(|_| {
        CliError::Usage(format!("invalid {what} parameter {raw:?}"))
    })
}

/// Builds a named complex.
pub fn generate_by_name(name: &str, params: &[String]) -> Result<SimplicialComplex> {
    let g = match name {
        "cross-polytope" => cross_polytope(param::<usize>(params, "dimension")?),
        "cube-skeleton" => named_skeleton(Skeleton::Cube)?,
        "dodecahedron-skeleton" => named_skeleton(Skeleton::Dodecahedron)?,
        "cycle" => named_skeleton(Skeleton::Cycle(param::<u32>(params, "length")?))?,
        "star" => named_skeleton(Skeleton::Star(param::<u32>(params, "vertex count")?))?,
        "projective-plane" => projective_plane(),
        "suspended-projective-planes" => {
            let p = projective_plane();
            suspension(&disjoint_union(&p, &p))
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown generator {other:?}; known: {}",
                GENERATOR_NAMES.join(", ")
            )))
        }
    };
    Ok(g)
}

/// Resolves the complex named by `--input`, `--generate`, or `--random`,
/// together with a short description for report headers.
pub fn resolve(
    input: Option<&Path>,
    generate: Option<&[String]>,
    random: Option<(u32, u64)>,
    seed: u64,
) -> Result<(SimplicialComplex, String)> {
    let picked = [input.is_some(), generate.is_some(), random.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if picked != 1 {
        return Err(CliError::Usage(
            "pick exactly one of --input, --generate, --random".into(),
        ));
    }
    if let Some(path) = input {
        let text = std::fs::read_to_string(path)?;
        let g = doc::parse_complex(&text)?;
        return Ok((g, path.display().to_string()));
    }
    if let Some(spec) = generate {
        let name = &spec[0];
        let g = generate_by_name(name, &spec[1..])?;
        return Ok((g, spec.join(" ")));
    }
    let (n, m) = random.expect("checked above");
    let g = random_whitney(n, m, seed)?;
    Ok((g, format!("random n={n} m={m} seed={seed}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_names_resolve() {
        assert_eq!(
            generate_by_name("cross-polytope", &["3".into()]).unwrap().len(),
            80
        );
        assert_eq!(generate_by_name("cube-skeleton", &[]).unwrap().len(), 20);
        assert_eq!(
            generate_by_name("projective-plane", &[]).unwrap().len(),
            85
        );
        let susp = generate_by_name("suspended-projective-planes", &[]).unwrap();
        assert_eq!(susp.euler_characteristic(), 0);
        assert!(generate_by_name("klein-bottle", &[]).is_err());
        assert!(generate_by_name("cross-polytope", &[]).is_err());
        assert!(generate_by_name("cycle", &["x".into()]).is_err());
    }
}
