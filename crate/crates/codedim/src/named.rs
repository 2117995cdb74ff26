//! Named fixture complexes reachable from the command line.

use anyhow::{bail, Context};

use codedim_core::generators::{
    complete_bipartite_clique, cone, cross_polytope, hollow_simplex, l26_code, random_complex,
};
use codedim_core::SimplicialComplex;

/// Generator name plus its size parameters.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GeneratorSpec {
    pub name: String,
    pub i: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub density: Option<f64>,
    pub seed: Option<u64>,
}

pub const GENERATOR_NAMES: &[&str] = &[
    "cross-polytope",
    "cone-cross-polytope",
    "square",
    "octahedron",
    "cone-square",
    "complete-bipartite",
    "hollow-simplex",
    "full-simplex",
    "l26",
    "random",
];

impl GeneratorSpec {
    pub fn named(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    pub fn build(&self) -> anyhow::Result<SimplicialComplex> {
        let need = |v: Option<usize>, flag: &str| {
            v.with_context(|| format!("generator `{}` needs --{flag}", self.name))
        };
        let complex = match self.name.as_str() {
            "cross-polytope" => cross_polytope(need(self.i, "i")?)?,
            "cone-cross-polytope" => cone(&cross_polytope(need(self.i, "i")?)?)?,
            "square" => cross_polytope(1)?,
            "octahedron" => cross_polytope(2)?,
            "cone-square" => cone(&cross_polytope(1)?)?,
            "complete-bipartite" => complete_bipartite_clique(need(self.r, "r")?)?,
            "hollow-simplex" => hollow_simplex(need(self.m, "m")?)?,
            "full-simplex" => SimplicialComplex::full_simplex(need(self.n, "n")?)?,
            "l26" => SimplicialComplex::from_code(&l26_code()),
            "random" => random_complex(
                need(self.n, "n")?,
                self.density.unwrap_or(0.5),
                self.seed.unwrap_or(0),
            )?,
            other => bail!(
                "unknown generator `{other}`; known: {}",
                GENERATOR_NAMES.join(", ")
            ),
        };
        Ok(complex)
    }
}
