//! Common-ancestor model for related sequences.
//!
//! An i.i.d. ancestor `Z` is drawn letter by letter. At every ancestor
//! position the X copy and the Y copy mutate independently through the same
//! channel matrix `M` (`M[z][a]` = P(z becomes a)), and each copy survives
//! an independent Bernoulli(`keep_prob`) deletion. Positions are generated
//! until both sequences reach the target length, then both are cut to it.
//!
//! # Random streams
//!
//! All randomness comes from `ChaCha8Rng`. A single call seeded with `seed`
//! uses `ChaCha8Rng::seed_from_u64(seed)`; the independent-pair generator
//! draws X from stream 0 and Y from stream 1 of that key. Replicate `r` of an
//! experiment uses the seed [`replicate_seed`]`(seed, r)`, which is the first
//! `u64` of stream `r + 1` under the experiment key. Draw order within a
//! related-pair position is: ancestor letter, X letter, Y letter, X keep
//! flag, Y keep flag.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::seqio::{Alphabet, NucleotideSequence};

/// Largest expected number of ancestor positions a generation may need.
pub const MAX_EXPECTED_ANCESTOR_LEN: f64 = 1e9;

/// Parameters of the common-ancestor model.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerativeParams<T: Scalar> {
    alphabet: Alphabet,
    ancestor_dist: Vec<T>,
    /// Row-major `k x k`.
    channel: Vec<T>,
    keep_prob: T,
    pub target_len: usize,
    pub seed: u64,
}

impl<T: Scalar> GenerativeParams<T> {
    pub fn new(
        alphabet: Alphabet,
        ancestor_dist: Vec<T>,
        channel: Vec<T>,
        keep_prob: T,
        target_len: usize,
        seed: u64,
    ) -> Result<Self> {
        let k = alphabet.len();
        check_distribution("ancestor_dist", &ancestor_dist, k)?;
        if channel.len() != k * k {
            return Err(Error::model(
                "channel",
                format!(
                    "expected {} entries ({k}x{k}), got {}",
                    k * k,
                    channel.len()
                ),
            ));
        }
        for (z, row) in channel.chunks(k).enumerate() {
            check_distribution(&format!("channel row {z}"), row, k)?;
        }
        if !(keep_prob > T::zero() && keep_prob <= T::one()) {
            return Err(Error::model(
                "keep_prob",
                format!("{keep_prob} is not in (0, 1]"),
            ));
        }
        if target_len == 0 {
            return Err(Error::model("target_len", "must be at least 1"));
        }
        Ok(GenerativeParams {
            alphabet,
            ancestor_dist,
            channel,
            keep_prob,
            target_len,
            seed,
        })
    }

    /// Uniform ancestor with a symmetric channel: a letter is kept with
    /// probability `stay` and otherwise replaced by one of the other letters
    /// uniformly.
    pub fn symmetric(
        alphabet: Alphabet,
        stay: T,
        keep_prob: T,
        target_len: usize,
        seed: u64,
    ) -> Result<Self> {
        let k = alphabet.len();
        let kt = T::from_usize(k).expect("small alphabet");
        let off = (T::one() - stay) / (kt - T::one());
        let channel = (0..k * k)
            .map(|c| if c / k == c % k { stay } else { off })
            .collect();
        Self::new(
            alphabet,
            vec![T::one() / kt; k],
            channel,
            keep_prob,
            target_len,
            seed,
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ancestor_dist(&self) -> &[T] {
        &self.ancestor_dist
    }

    /// Row-major channel matrix.
    pub fn channel(&self) -> &[T] {
        &self.channel
    }

    pub fn channel_row(&self, z: usize) -> &[T] {
        let k = self.alphabet.len();
        &self.channel[z * k..(z + 1) * k]
    }

    pub fn keep_prob(&self) -> T {
        self.keep_prob
    }

    /// Law of a single X (or Y) letter: `p(a) = sum_z P(Z=z) M[z][a]`.
    pub fn letter_marginal(&self) -> Vec<T> {
        let k = self.alphabet.len();
        (0..k)
            .map(|a| {
                (0..k).fold(T::zero(), |acc, z| {
                    acc + self.ancestor_dist[z] * self.channel[z * k + a]
                })
            })
            .collect()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_target_len(mut self, target_len: usize) -> Self {
        self.target_len = target_len;
        self
    }
}

pub(crate) fn check_distribution<T: Scalar>(field: &str, dist: &[T], k: usize) -> Result<()> {
    if dist.len() != k {
        return Err(Error::model(
            field,
            format!("expected {k} probabilities, got {}", dist.len()),
        ));
    }
    if let Some(p) = dist.iter().find(|p| !(p.is_finite() && **p >= T::zero())) {
        return Err(Error::model(
            field,
            format!("entry {p} is not a probability"),
        ));
    }
    let total = dist.iter().fold(T::zero(), |a, &b| a + b);
    if (total - T::one()).abs() > T::normalization_tol() {
        return Err(Error::model(field, format!("sums to {total}, not 1")));
    }
    Ok(())
}

/// Inverse-CDF sampler over `0..k`.
#[derive(Debug, Clone)]
struct Categorical<T> {
    cdf: Vec<T>,
    last_positive: usize,
}

impl<T: Scalar> Categorical<T> {
    fn new(probs: &[T]) -> Self {
        let mut acc = T::zero();
        let cdf = probs
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect();
        let last_positive = probs.iter().rposition(|&p| p > T::zero()).unwrap_or(0);
        Categorical { cdf, last_positive }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let u = T::lit(rng.gen::<f64>());
        // rounding can leave the cdf just below 1; fall back to the last letter with mass
        self.cdf
            .iter()
            .position(|&c| u < c)
            .unwrap_or(self.last_positive)
    }
}

fn bernoulli<T: Scalar, R: Rng>(rng: &mut R, p: T) -> bool {
    T::lit(rng.gen::<f64>()) < p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelTag {
    Related,
    Independent,
}

impl std::fmt::Display for ModelTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelTag::Related => "related",
            ModelTag::Independent => "independent",
        })
    }
}

/// Two sequences of equal length produced by one of the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct RelatedPair {
    pub x: NucleotideSequence,
    pub y: NucleotideSequence,
    /// Ancestor positions consumed; 0 for independent pairs.
    pub ancestor_len_used: usize,
    pub model_tag: ModelTag,
}

/// Seed of replicate `replicate` under the experiment seed `seed`.
pub fn replicate_seed(seed: u64, replicate: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate.wrapping_add(1));
    rng.next_u64()
}

/// Draws a related pair from the common-ancestor model.
pub fn generate_related_pair<T: Scalar>(params: &GenerativeParams<T>) -> Result<RelatedPair> {
    let n = params.target_len;
    let expected = n as f64 / params.keep_prob.to_f64().expect("finite");
    if expected > MAX_EXPECTED_ANCESTOR_LEN {
        return Err(Error::DegenerateModel(format!(
            "keep_prob {} needs about {expected:.3e} ancestor letters for n = {n}",
            params.keep_prob
        )));
    }

    let k = params.alphabet.len();
    let ancestor = Categorical::new(&params.ancestor_dist);
    let rows: Vec<Categorical<T>> = (0..k)
        .map(|z| Categorical::new(params.channel_row(z)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut used = 0usize;
    while x.len() < n || y.len() < n {
        let z = ancestor.sample(&mut rng);
        let a = rows[z].sample(&mut rng);
        let b = rows[z].sample(&mut rng);
        let keep_x = bernoulli(&mut rng, params.keep_prob);
        let keep_y = bernoulli(&mut rng, params.keep_prob);
        used += 1;
        if keep_x && x.len() < n {
            x.push(params.alphabet.symbol(a));
        }
        if keep_y && y.len() < n {
            y.push(params.alphabet.symbol(b));
        }
    }

    Ok(RelatedPair {
        x: NucleotideSequence::from_symbols("x", x, &params.alphabet),
        y: NucleotideSequence::from_symbols("y", y, &params.alphabet),
        ancestor_len_used: used,
        model_tag: ModelTag::Related,
    })
}

/// Two independent i.i.d. sequences of length `n` with letter law `dist`.
pub fn generate_independent_pair<T: Scalar>(
    alphabet: &Alphabet,
    dist: &[T],
    n: usize,
    seed: u64,
) -> Result<RelatedPair> {
    check_distribution("dist", dist, alphabet.len())?;
    if n == 0 {
        return Err(Error::model("n", "must be at least 1"));
    }
    let law = Categorical::new(dist);
    let draw = |stream: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        (0..n)
            .map(|_| alphabet.symbol(law.sample(&mut rng)))
            .collect::<Vec<u8>>()
    };
    Ok(RelatedPair {
        x: NucleotideSequence::from_symbols("x", draw(0), alphabet),
        y: NucleotideSequence::from_symbols("y", draw(1), alphabet),
        ancestor_len_used: 0,
        model_tag: ModelTag::Independent,
    })
}

/// Either generator, with everything but length and seed fixed.
#[derive(Debug, Clone, PartialEq)]
pub enum PairGenerator<T: Scalar> {
    Related(GenerativeParams<T>),
    Independent { alphabet: Alphabet, dist: Vec<T> },
}

impl<T: Scalar> PairGenerator<T> {
    /// Independent pairs with the same letter marginals as `params`.
    pub fn independent_like(params: &GenerativeParams<T>) -> Self {
        PairGenerator::Independent {
            alphabet: params.alphabet.clone(),
            dist: params.letter_marginal(),
        }
    }

    pub fn tag(&self) -> ModelTag {
        match self {
            PairGenerator::Related(_) => ModelTag::Related,
            PairGenerator::Independent { .. } => ModelTag::Independent,
        }
    }

    pub fn generate(&self, n: usize, seed: u64) -> Result<RelatedPair> {
        match self {
            PairGenerator::Related(p) => {
                let params = GenerativeParams {
                    target_len: n,
                    seed,
                    ..p.clone()
                };
                if n == 0 {
                    return Err(Error::model("n", "must be at least 1"));
                }
                generate_related_pair(&params)
            }
            PairGenerator::Independent { alphabet, dist } => {
                generate_independent_pair(alphabet, dist, n, seed)
            }
        }
    }
}

/// Channel given either row-major flat or as nested rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChannelSpec {
    Rows(Vec<Vec<f64>>),
    Flat(Vec<f64>),
}

/// On-disk model description (JSON).
///
/// ```json
/// { "alphabet": "ACGT",
///   "ancestor_dist": [0.25, 0.25, 0.25, 0.25],
///   "channel": [[0.85, 0.05, 0.05, 0.05], ...],
///   "keep_prob": 0.95 }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default)]
    pub name: Option<String>,
    pub alphabet: String,
    pub ancestor_dist: Vec<f64>,
    pub channel: ChannelSpec,
    pub keep_prob: f64,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            let field = e.to_string();
            Error::model(
                "<file>",
                format!("line {}, column {}: {field}", e.line(), e.column()),
            )
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_params<T: Scalar>(
        &self,
        target_len: usize,
        seed: u64,
    ) -> Result<GenerativeParams<T>> {
        let alphabet =
            Alphabet::new(&self.alphabet).map_err(|e| Error::model("alphabet", e.to_string()))?;
        let k = alphabet.len();
        let channel: Vec<f64> = match &self.channel {
            ChannelSpec::Flat(v) => v.clone(),
            ChannelSpec::Rows(rows) => {
                if rows.len() != k || rows.iter().any(|r| r.len() != k) {
                    return Err(Error::model(
                        "channel",
                        format!("expected {k} rows of {k} entries"),
                    ));
                }
                rows.concat()
            }
        };
        let cast = |field: &str, v: &[f64]| -> Result<Vec<T>> {
            v.iter()
                .map(|&x| {
                    T::from_f64(x)
                        .ok_or_else(|| Error::model(field, format!("{x} is not representable")))
                })
                .collect()
        };
        GenerativeParams::new(
            alphabet,
            cast("ancestor_dist", &self.ancestor_dist)?,
            cast("channel", &channel)?,
            T::from_f64(self.keep_prob)
                .ok_or_else(|| Error::model("keep_prob", "not representable"))?,
            target_len,
            seed,
        )
    }

    pub fn from_params<T: Scalar>(name: Option<String>, params: &GenerativeParams<T>) -> Self {
        let f = |v: &[T]| {
            v.iter()
                .map(|x| x.to_f64().expect("finite"))
                .collect::<Vec<_>>()
        };
        let k = params.alphabet.len();
        ModelFile {
            name,
            alphabet: params.alphabet.as_str().to_owned(),
            ancestor_dist: f(&params.ancestor_dist),
            channel: ChannelSpec::Rows(params.channel.chunks(k).map(f).collect()),
            keep_prob: params.keep_prob.to_f64().expect("finite"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna() -> Alphabet {
        Alphabet::dna()
    }

    fn identity(k: usize) -> Vec<f64> {
        (0..k * k)
            .map(|c| if c / k == c % k { 1.0 } else { 0.0 })
            .collect()
    }

    #[test]
    fn no_mutation_no_deletion_copies_ancestor() {
        let p = GenerativeParams::new(dna(), vec![0.25; 4], identity(4), 1.0, 200, 11).unwrap();
        let pair = generate_related_pair(&p).unwrap();
        assert_eq!(pair.x.letters(), pair.y.letters());
        assert_eq!(pair.ancestor_len_used, 200);
        assert_eq!(pair.x.len(), 200);
        assert_eq!(pair.model_tag, ModelTag::Related);
    }

    #[test]
    fn deterministic_given_seed() {
        let p = GenerativeParams::<f64>::symmetric(dna(), 0.85, 0.95, 300, 5).unwrap();
        let a = generate_related_pair(&p).unwrap();
        assert_eq!(a, generate_related_pair(&p).unwrap());
        let b = generate_related_pair(&p.clone().with_seed(6)).unwrap();
        assert_ne!(a.x, b.x);

        let i1 = generate_independent_pair(&dna(), &[0.25; 4], 5, 42).unwrap();
        let i2 = generate_independent_pair(&dna(), &[0.25; 4], 5, 42).unwrap();
        assert_eq!(i1, i2);
        assert_eq!(i1.model_tag, ModelTag::Independent);
        assert_ne!(i1.x, i1.y);
    }

    #[test]
    fn point_mass_gives_constant_sequences() {
        let pair = generate_independent_pair(&dna(), &[1.0, 0.0, 0.0, 0.0], 50, 3).unwrap();
        assert_eq!(pair.x.as_str(), "A".repeat(50));
        assert_eq!(pair.y.as_str(), "A".repeat(50));
        // a trailing zero-mass letter is never produced, even at u close to 1
        let pair = generate_independent_pair(&dna(), &[0.0, 0.0, 1.0, 0.0], 50, 3).unwrap();
        assert_eq!(pair.x.as_str(), "G".repeat(50));
    }

    #[test]
    fn parameter_validation() {
        let bad_sum = GenerativeParams::new(dna(), vec![0.3; 4], identity(4), 1.0, 10, 0);
        assert!(
            matches!(bad_sum, Err(Error::InvalidModel { ref field, .. }) if field == "ancestor_dist")
        );
        let mut ch = identity(4);
        ch[1] = 0.5;
        assert!(matches!(
            GenerativeParams::new(dna(), vec![0.25; 4], ch, 1.0, 10, 0),
            Err(Error::InvalidModel { ref field, .. }) if field == "channel row 0"
        ));
        for p in [0.0, -0.1, 1.5, f64::NAN] {
            assert!(GenerativeParams::new(dna(), vec![0.25; 4], identity(4), p, 10, 0).is_err());
        }
        assert!(GenerativeParams::new(dna(), vec![0.25; 4], identity(4), 1.0, 0, 0).is_err());
        assert!(GenerativeParams::new(dna(), vec![0.25; 4], identity(3), 1.0, 10, 0).is_err());
        assert!(generate_independent_pair(&dna(), &[0.5, 0.5], 10, 0).is_err());
    }

    #[test]
    fn tiny_keep_prob_is_rejected() {
        let p = GenerativeParams::new(dna(), vec![0.25; 4], identity(4), 1e-7, 1000, 0).unwrap();
        assert!(matches!(
            generate_related_pair(&p),
            Err(Error::DegenerateModel(_))
        ));
    }

    #[test]
    fn f32_params_generate() {
        let p = GenerativeParams::<f32>::symmetric(dna(), 0.9, 0.9, 100, 1).unwrap();
        let pair = generate_related_pair(&p).unwrap();
        assert_eq!((pair.x.len(), pair.y.len()), (100, 100));
    }

    #[test]
    fn replicate_seeds_are_distinct_and_stable() {
        let seeds: Vec<u64> = (0..100).map(|r| replicate_seed(7, r)).collect();
        let mut uniq = seeds.clone();
        uniq.sort_unstable();
        uniq.dedup();
        assert_eq!(uniq.len(), 100);
        assert_eq!(seeds[3], replicate_seed(7, 3));
        assert_ne!(replicate_seed(7, 0), replicate_seed(8, 0));
    }

    #[test]
    fn model_file_round_trip() {
        let json = r#"{
            "alphabet": "ACGT",
            "ancestor_dist": [0.25, 0.25, 0.25, 0.25],
            "channel": [[0.85, 0.05, 0.05, 0.05], [0.05, 0.85, 0.05, 0.05],
                        [0.05, 0.05, 0.85, 0.05], [0.05, 0.05, 0.05, 0.85]],
            "keep_prob": 0.95
        }"#;
        let file = ModelFile::from_json(json).unwrap();
        let p: GenerativeParams<f64> = file.to_params(100, 1).unwrap();
        let sym = GenerativeParams::<f64>::symmetric(dna(), 0.85, 0.95, 100, 1).unwrap();
        for (a, b) in p.channel().iter().zip(sym.channel()) {
            assert!((a - b).abs() < 1e-15);
        }
        let back = ModelFile::from_json(&ModelFile::from_params(None, &p).to_json()).unwrap();
        assert_eq!(back.to_params::<f64>(100, 1).unwrap(), p);

        let flat =
            r#"{"alphabet":"AB","ancestor_dist":[0.5,0.5],"channel":[1,0,0,1],"keep_prob":1}"#;
        assert!(ModelFile::from_json(flat)
            .unwrap()
            .to_params::<f64>(5, 0)
            .is_ok());
    }

    #[test]
    fn model_file_diagnostics() {
        let unknown = r#"{"alphabet":"AB","ancestor_dist":[0.5,0.5],"channel":[1,0,0,1],"keep_prob":1,"extra":2}"#;
        assert!(ModelFile::from_json(unknown).is_err());
        let short =
            r#"{"alphabet":"AB","ancestor_dist":[0.5,0.5],"channel":[[1,0]],"keep_prob":1}"#;
        let err = ModelFile::from_json(short)
            .unwrap()
            .to_params::<f64>(5, 0)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidModel { ref field, .. } if field == "channel"));
        let bad_alpha = r#"{"alphabet":"A","ancestor_dist":[1],"channel":[1],"keep_prob":1}"#;
        let err = ModelFile::from_json(bad_alpha)
            .unwrap()
            .to_params::<f64>(5, 0)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidModel { ref field, .. } if field == "alphabet"));
    }
}
