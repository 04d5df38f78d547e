use serde::{Deserialize, Serialize};

use super::{
    construct_q, construct_r, construct_s, construct_s_prime, GfMatrix, Matroid, MatroidError,
    MatroidKind, SubsetMask,
};

/// Serialized matroid description. Elements are 1-based.
///
/// ```json
/// {"type":"uniform","r":2,"n":4}
/// {"type":"bases","n":3,"bases":[[1,2],[1,3]]}
/// {"type":"vector","p":2,"matrix":[[1,0,1],[0,1,1]]}
/// {"type":"R","r":3,"n":6}
/// {"type":"S_prime","n":3}
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum MatroidSpec {
    #[serde(rename = "uniform")]
    Uniform {
        r: usize,
        n: usize,
    },
    #[serde(rename = "bases")]
    Bases {
        n: usize,
        bases: Vec<Vec<usize>>,
    },
    #[serde(rename = "vector")]
    Vector {
        p: u64,
        matrix: Vec<Vec<u64>>,
    },
    R {
        r: usize,
        n: usize,
    },
    Q {
        r: usize,
        n: usize,
    },
    S {
        n: usize,
    },
    #[serde(rename = "S_prime")]
    SPrime {
        n: usize,
    },
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self, MatroidError> {
        serde_json::from_str(text).map_err(|e| MatroidError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matroid spec serializes")
    }

    /// Parses the short names `U:2,4`, `R:3,6`, `Q:3,6`, `S:3`, `Sprime:3`.
    pub fn from_builtin(name: &str) -> Result<Self, MatroidError> {
        let bad = || MatroidError::Parse(format!("unknown builtin matroid {name:?}"));
        let (kind, args) = name.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("U", &[r, n]) => Ok(MatroidSpec::Uniform { r, n }),
            ("R", &[r, n]) => Ok(MatroidSpec::R { r, n }),
            ("Q", &[r, n]) => Ok(MatroidSpec::Q { r, n }),
            ("S", &[n]) => Ok(MatroidSpec::S { n }),
            ("Sprime", &[n]) | ("S_prime", &[n]) => Ok(MatroidSpec::SPrime { n }),
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidSpec::Bases { n, bases } => {
                let masks = bases
                    .iter()
                    .map(|b| SubsetMask::from_elements(b.iter().copied(), *n))
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::from_bases(*n, &masks)
            }
            MatroidSpec::Vector { p, matrix } => {
                Matroid::vector(GfMatrix::new(*p, matrix.clone())?)
            }
            MatroidSpec::R { r, n } => construct_r(*r, *n),
            MatroidSpec::Q { r, n } => construct_q(*r, *n),
            MatroidSpec::S { n } => construct_s(*n),
            MatroidSpec::SPrime { n } => construct_s_prime(*n),
        }
    }

    /// Describes a matroid. Uniform and vector matroids keep their form;
    /// everything else is written as a sorted basis list.
    pub fn from_matroid(matroid: &Matroid) -> Self {
        match matroid.kind() {
            MatroidKind::Uniform { rank } => MatroidSpec::Uniform {
                r: *rank,
                n: matroid.ground_set_size(),
            },
            MatroidKind::Vector(m) => MatroidSpec::Vector {
                p: m.prime(),
                matrix: m.rows().to_vec(),
            },
            _ => {
                let mut bases: Vec<Vec<usize>> =
                    matroid.bases().into_iter().map(|b| b.to_vec()).collect();
                bases.sort();
                MatroidSpec::Bases {
                    n: matroid.ground_set_size(),
                    bases,
                }
            }
        }
    }
}
