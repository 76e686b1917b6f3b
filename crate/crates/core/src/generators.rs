//! Deterministic and seeded-random signed-graph constructors.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded through
//! `SeedableRng::seed_from_u64`. A uniform draw in `[0, 1)` takes the top 53
//! bits of one `next_u64`. Seeds are part of the output contract: the same
//! arguments always give the same graph, on every platform.

use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::graph::{Sign, SignedGraph, SignedGraphBuilder};

/// Rejection-sampling budget for `require_connected`.
pub const MAX_CONNECT_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("invalid order {n} for {family} (needs n >= {min})")]
    InvalidOrder {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("no connected sample after {0} attempts")]
    ConnectivityUnreachable(usize),
    #[error("unknown sign pattern {0:?}")]
    UnknownPattern(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignPattern {
    AllPlus,
    AllMinus,
    /// `+` on even construction indices, `-` on odd ones.
    Alternating,
    Random {
        p_plus: f64,
        seed: u64,
    },
}

impl SignPattern {
    fn validate(&self) -> Result<(), GeneratorError> {
        match *self {
            SignPattern::Random { p_plus, .. } => check_probability(p_plus),
            _ => Ok(()),
        }
    }

    /// Parses `plus`, `minus`, `alternating`, `random:<p>` or
    /// `random:<p>:<seed>`; a missing seed falls back to `default_seed`.
    pub fn parse(text: &str, default_seed: u64) -> Result<SignPattern, GeneratorError> {
        let unknown = || GeneratorError::UnknownPattern(text.to_string());
        let mut parts = text.split(':');
        let pattern = match parts.next().unwrap_or_default() {
            "plus" | "all-plus" => SignPattern::AllPlus,
            "minus" | "all-minus" => SignPattern::AllMinus,
            "alternating" => SignPattern::Alternating,
            "random" => {
                let p_plus = parts
                    .next()
                    .and_then(|p| f64::from_str(p).ok())
                    .ok_or_else(unknown)?;
                let seed = match parts.next() {
                    Some(s) => s.parse().map_err(|_| unknown())?,
                    None => default_seed,
                };
                SignPattern::Random { p_plus, seed }
            }
            _ => return Err(unknown()),
        };
        if parts.next().is_some() {
            return Err(unknown());
        }
        pattern.validate()?;
        Ok(pattern)
    }
}

fn check_probability(p: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GeneratorError::InvalidProbability(p))
    }
}

fn unit_draw(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Hands out signs in construction order.
struct SignStream {
    pattern: SignPattern,
    index: usize,
}

impl SignStream {
    fn new(pattern: SignPattern) -> Self {
        SignStream { pattern, index: 0 }
    }

    /// `rng` is consulted only by the random pattern.
    fn next(&mut self, rng: &mut ChaCha8Rng) -> Sign {
        let i = self.index;
        self.index += 1;
        match self.pattern {
            SignPattern::AllPlus => Sign::Plus,
            SignPattern::AllMinus => Sign::Minus,
            SignPattern::Alternating if i.is_multiple_of(2) => Sign::Plus,
            SignPattern::Alternating => Sign::Minus,
            SignPattern::Random { p_plus, .. } => {
                if unit_draw(rng) < p_plus {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }
}

fn from_pairs(
    n: usize,
    pairs: impl IntoIterator<Item = (usize, usize)>,
    pattern: SignPattern,
) -> Result<SignedGraph, GeneratorError> {
    pattern.validate()?;
    let seed = match pattern {
        SignPattern::Random { seed, .. } => seed,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut signs = SignStream::new(pattern);
    let mut builder = SignedGraphBuilder::new(n);
    for (u, v) in pairs {
        builder
            .add_edge(u, v, signs.next(&mut rng))
            .expect("generated pairs are simple and in range");
    }
    Ok(builder.finish())
}

fn require_order(family: &'static str, n: usize, min: usize) -> Result<(), GeneratorError> {
    if n < min {
        Err(GeneratorError::InvalidOrder { family, n, min })
    } else {
        Ok(())
    }
}

/// Edges `(0,1), (1,2), …`.
pub fn path(n: usize, pattern: SignPattern) -> Result<SignedGraph, GeneratorError> {
    require_order("path", n, 1)?;
    from_pairs(n, (1..n).map(|i| (i - 1, i)), pattern)
}

/// Path edges followed by the closing edge `(0, n-1)`.
pub fn cycle(n: usize, pattern: SignPattern) -> Result<SignedGraph, GeneratorError> {
    require_order("cycle", n, 3)?;
    from_pairs(
        n,
        (1..n)
            .map(|i| (i - 1, i))
            .chain(std::iter::once((0, n - 1))),
        pattern,
    )
}

/// Edges in lexicographic order.
pub fn complete(n: usize, pattern: SignPattern) -> Result<SignedGraph, GeneratorError> {
    require_order("complete", n, 1)?;
    from_pairs(n, lexicographic_pairs(n), pattern)
}

/// Centre 0, edges `(0, i)` for `i = 1..n-1`.
pub fn star(n: usize, pattern: SignPattern) -> Result<SignedGraph, GeneratorError> {
    require_order("star", n, 1)?;
    from_pairs(n, (1..n).map(|i| (0, i)), pattern)
}

fn lexicographic_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Parameters for [`random_signed`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub edge_probability: f64,
    pub pattern: SignPattern,
    pub seed: u64,
    pub require_connected: bool,
}

/// Erdős–Rényi G(n, p) with signs.
///
/// A single ChaCha8 stream seeded with `spec.seed` visits pairs in
/// lexicographic order, drawing presence and then, for a present edge under
/// a random pattern, its sign. The pattern's own seed is not used here.
/// With `require_connected`, rejected samples are redrawn from the same
/// stream, at most [`MAX_CONNECT_ATTEMPTS`] times.
pub fn random_signed(spec: &RandomGraphSpec) -> Result<SignedGraph, GeneratorError> {
    require_order("random", spec.n, 1)?;
    check_probability(spec.edge_probability)?;
    spec.pattern.validate()?;

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let attempts = if spec.require_connected {
        MAX_CONNECT_ATTEMPTS
    } else {
        1
    };
    for _ in 0..attempts {
        let mut signs = SignStream::new(spec.pattern);
        let mut builder = SignedGraphBuilder::new(spec.n);
        for (u, v) in lexicographic_pairs(spec.n) {
            if unit_draw(&mut rng) < spec.edge_probability {
                let sign = signs.next(&mut rng);
                builder
                    .add_edge(u, v, sign)
                    .expect("generated pairs are simple and in range");
            }
        }
        let graph = builder.finish();
        if !spec.require_connected || graph.is_connected() {
            return Ok(graph);
        }
    }
    Err(GeneratorError::ConnectivityUnreachable(attempts))
}
