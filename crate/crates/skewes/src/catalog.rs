//! Tables of nontrivial zeta-zero ordinates: loading, persistence, indexed
//! queries, and the zero-sum lemma machinery (Backlund's density bracket and
//! the inverse-power sum estimates).
//!
//! A catalog stores the positive imaginary parts γ₁ < γ₂ < … of nontrivial
//! zeros ρ = 1/2 + iγ together with one accuracy bound ε ≥ |γ* − γ| valid for
//! every entry. Catalogs are immutable after construction and safe to share
//! across threads.

use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::quad;
use crate::sum::Neumaier;

/// Magic bytes of the binary catalog format.
const MAGIC: &[u8; 4] = b"ZZC1";

/// Default per-zero accuracy assumed for text tables without a header.
pub const DEFAULT_ACCURACY: f64 = 1e-9;

/// Lower bound 14.1 < γ₁ satisfied by all nontrivial zeros.
pub const GAMMA_FLOOR: f64 = 14.1;

/// 2πe, the domain edge of the summation lemmas.
pub const TWO_PI_E: f64 = 2.0 * std::f64::consts::PI * std::f64::consts::E;

/// Immutable, strictly increasing table of zero ordinates.
#[derive(Clone, Debug)]
pub struct ZeroCatalog {
    ordinates: Vec<f64>,
    accuracy: f64,
    source: String,
}

/// Unit in the last place of a positive finite double.
fn ulp(x: f64) -> f64 {
    debug_assert!(x.is_finite() && x > 0.0);
    f64::from_bits(x.to_bits() + 1) - x
}

impl ZeroCatalog {
    /// Build a catalog from raw parts, enforcing every structural invariant.
    pub fn new(ordinates: Vec<f64>, accuracy: f64, source: impl Into<String>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::Catalog("catalog must be non-empty".into()));
        }
        if !(accuracy >= 0.0 && accuracy.is_finite()) {
            return Err(Error::Catalog(format!(
                "accuracy must be a finite non-negative real, got {accuracy}"
            )));
        }
        if !(ordinates[0] > GAMMA_FLOOR) {
            return Err(Error::Catalog(format!(
                "first ordinate {} must exceed {GAMMA_FLOOR}",
                ordinates[0]
            )));
        }
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[0] < w[1]) {
                return Err(Error::Catalog(format!(
                    "ordinates must be strictly increasing: entry {} = {} !< entry {} = {}",
                    i + 1,
                    w[0],
                    i + 2,
                    w[1]
                )));
            }
        }
        if !ordinates.iter().all(|g| g.is_finite()) {
            return Err(Error::Catalog("ordinates must all be finite".into()));
        }
        Ok(Self {
            ordinates,
            accuracy,
            source: source.into(),
        })
    }

    /// The ordinates, ascending.
    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    /// Number of zeros in the table.
    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    /// Whether the table is empty (never true for a constructed catalog).
    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Smallest ordinate γ₁.
    pub fn first(&self) -> f64 {
        self.ordinates[0]
    }

    /// Largest ordinate.
    pub fn last(&self) -> f64 {
        *self.ordinates.last().expect("catalog is non-empty")
    }

    /// The accuracy bound ε exactly as supplied by the data source.
    pub fn accuracy(&self) -> f64 {
        self.accuracy
    }

    /// The accuracy bound with the binary64 representation error folded in:
    /// ε plus one unit in the last place of the largest ordinate. Use this
    /// wherever ε feeds a rigorous bound (ΔS₁/ΔS₂).
    pub fn effective_accuracy(&self) -> f64 {
        self.accuracy + ulp(self.last())
    }

    /// Provenance string (file path or caller-supplied description).
    pub fn source(&self) -> &str {
        &self.source
    }

    /// Parse a text table: one ASCII decimal ordinate per line, `#` comment
    /// lines, and an optional `# accuracy: <value>` header.
    pub fn load_text(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path)?;
        let reader = BufReader::new(file);
        let mut ordinates = Vec::new();
        let mut accuracy = DEFAULT_ACCURACY;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(comment) = trimmed.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(value) = comment.strip_prefix("accuracy:") {
                    accuracy = value.trim().parse::<f64>().map_err(|e| Error::Parse {
                        line: lineno,
                        msg: format!("bad accuracy header {comment:?}: {e}"),
                    })?;
                }
                continue;
            }
            let gamma: f64 = trimmed.parse().map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("bad ordinate {trimmed:?}: {e}"),
            })?;
            if let Some(&prev) = ordinates.last() {
                if gamma <= prev {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("non-monotone input: {gamma} follows {prev}"),
                    });
                }
            }
            ordinates.push(gamma);
        }
        Self::new(ordinates, accuracy, path.display().to_string())
    }

    /// Write the catalog as a text table (accuracy header + one ordinate per
    /// line with full round-trip precision).
    pub fn save_text(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::fs::File::create(path.as_ref())?;
        let mut w = BufWriter::new(file);
        writeln!(w, "# accuracy: {:e}", self.accuracy)?;
        for g in &self.ordinates {
            // {:?} on f64 prints the shortest representation that round-trips.
            writeln!(w, "{g:?}")?;
        }
        w.flush()?;
        Ok(())
    }

    /// Serialize to the binary format: magic `ZZC1`, little-endian u64 count,
    /// little-endian f64 accuracy, then the ordinates as little-endian f64.
    pub fn save_binary(&self, path: impl AsRef<Path>) -> Result<()> {
        let file = std::fs::File::create(path.as_ref())?;
        let mut w = BufWriter::new(file);
        w.write_all(MAGIC)?;
        w.write_all(&(self.ordinates.len() as u64).to_le_bytes())?;
        w.write_all(&self.accuracy.to_le_bytes())?;
        for g in &self.ordinates {
            w.write_all(&g.to_le_bytes())?;
        }
        w.flush()?;
        Ok(())
    }

    /// Load the binary format written by [`Self::save_binary`]; the round
    /// trip is bit-exact.
    pub fn load_binary(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path)?;
        let mut r = BufReader::new(file);
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)
            .map_err(|_| Error::Catalog("truncated file: missing magic".into()))?;
        if &magic != MAGIC {
            return Err(Error::Catalog(format!(
                "bad magic {:?}, expected {:?}",
                String::from_utf8_lossy(&magic),
                String::from_utf8_lossy(MAGIC)
            )));
        }
        let mut buf8 = [0u8; 8];
        r.read_exact(&mut buf8)
            .map_err(|_| Error::Catalog("truncated file: missing count".into()))?;
        let count = u64::from_le_bytes(buf8);
        r.read_exact(&mut buf8)
            .map_err(|_| Error::Catalog("truncated file: missing accuracy".into()))?;
        let accuracy = f64::from_le_bytes(buf8);
        let mut ordinates = Vec::with_capacity(count as usize);
        for i in 0..count {
            r.read_exact(&mut buf8).map_err(|_| {
                Error::Catalog(format!("truncated file: ordinate {} of {count} missing", i + 1))
            })?;
            ordinates.push(f64::from_le_bytes(buf8));
        }
        Self::new(ordinates, accuracy, path.display().to_string())
    }

    /// Load a catalog from either on-disk format, sniffing the leading magic
    /// bytes: files starting with `ZZC1` are binary, everything else text.
    pub fn load_auto(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut head = [0u8; 4];
        let is_binary = {
            use std::io::Read as _;
            let mut file = std::fs::File::open(path)?;
            match file.read_exact(&mut head) {
                Ok(()) => &head == MAGIC,
                Err(_) => false, // shorter than the magic: treat as text
            }
        };
        if is_binary {
            Self::load_binary(path)
        } else {
            Self::load_text(path)
        }
    }

    /// Number of ordinates ≤ T (binary search).
    pub fn count_below(&self, t: f64) -> usize {
        assert!(t > 0.0, "height must be positive");
        self.ordinates.partition_point(|&g| g <= t)
    }

    /// Compensated partial sum `Σ_{0<γ≤T} 1/γⁿ` in ascending order of γ.
    pub fn inverse_power_sum(&self, n: u32, t: f64) -> Result<f64> {
        assert!(n >= 1, "exponent must be at least 1");
        if t > self.last() {
            return Err(Error::CatalogExhausted {
                requested: t,
                last: self.last(),
            });
        }
        let k = self.count_below(t);
        let mut acc = Neumaier::new();
        for &g in &self.ordinates[..k] {
            acc.add(g.powi(-(n as i32)));
        }
        Ok(acc.total())
    }

    /// Tail bound `Σ_{T<γ} 1/γⁿ < T^{1−n}·log T` for T ≥ 2πe, n ≥ 2.
    pub fn tail_power_bound(n: u32, t: f64) -> Result<f64> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "tail power bound requires n ≥ 2, got {n}"
            )));
        }
        if !(t >= TWO_PI_E) {
            return Err(Error::Precondition(format!(
                "tail power bound requires T ≥ 2πe ≈ {TWO_PI_E:.5}, got {t}"
            )));
        }
        Ok(t.powi(1 - n as i32) * t.ln())
    }

    /// Bracket for the full reciprocal sum:
    /// `Σ_{0<γ≤T} 1/γ = (1/4π)·log²(T/2π) ± 0.9321` for T ≥ 2πe.
    pub fn reciprocal_sum_bracket(t: f64) -> Result<(f64, f64)> {
        if !(t >= TWO_PI_E) {
            return Err(Error::Precondition(format!(
                "reciprocal sum bracket requires T ≥ 2πe ≈ {TWO_PI_E:.5}, got {t}"
            )));
        }
        let center =
            (t / (2.0 * std::f64::consts::PI)).ln().powi(2) / (4.0 * std::f64::consts::PI);
        Ok((center - 0.9321, center + 0.9321))
    }

    /// Backlund's density bracket for a positive monotone-decreasing `f`:
    ///
    /// `Σ_{T1≤γ≤T2} f(γ) = (1/2π)·∫ f(x)·log(x/2π) dx  ±  (4·f(T1)·log T1 + 2·∫ f(x)/x dx)`
    ///
    /// over [T1, T2], with both integrals evaluated adaptively to relative
    /// tolerance 10⁻¹⁰ and the quadrature error estimates added to the slack
    /// so the bracket stays valid.
    pub fn zero_density_bracket(
        f: impl Fn(f64) -> f64,
        t1: f64,
        t2: f64,
    ) -> Result<(f64, f64)> {
        if !(TWO_PI_E <= t1 && t1 < t2) {
            return Err(Error::Precondition(format!(
                "density bracket requires 2πe ≤ T1 < T2, got T1={t1}, T2={t2}"
            )));
        }
        let f1 = f(t1);
        let f2 = f(t2);
        if !(f1 > 0.0 && f2 > 0.0 && f2 <= f1) {
            return Err(Error::Precondition(
                "weight must be positive and monotone decreasing on [T1, T2]".into(),
            ));
        }
        let main = quad::integrate(
            &|x: f64| f(x) * (x / (2.0 * std::f64::consts::PI)).ln(),
            t1,
            t2,
            1e-10,
        )?;
        let corr = quad::integrate(&|x: f64| f(x) / x, t1, t2, 1e-10)?;
        let center = main.value / (2.0 * std::f64::consts::PI);
        let slack = 4.0 * f1 * t1.ln()
            + 2.0 * corr.value
            + main.error / (2.0 * std::f64::consts::PI)
            + 2.0 * corr.error;
        Ok((center - slack, center + slack))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> ZeroCatalog {
        // First five zero ordinates, rounded to published precision.
        ZeroCatalog::new(
            vec![
                14.134725142,
                21.022039639,
                25.010857580,
                30.424876126,
                32.935061588,
            ],
            1e-9,
            "toy",
        )
        .unwrap()
    }

    #[test]
    fn construction_enforces_invariants() {
        assert!(ZeroCatalog::new(vec![], 1e-9, "x").is_err());
        assert!(ZeroCatalog::new(vec![14.0], 1e-9, "x").is_err()); // ≤ 14.1
        assert!(ZeroCatalog::new(vec![21.0, 14.2], 1e-9, "x").is_err()); // non-monotone
        assert!(ZeroCatalog::new(vec![14.2, 14.2], 1e-9, "x").is_err()); // tie
        assert!(ZeroCatalog::new(vec![14.2], -1.0, "x").is_err()); // bad ε
        assert!(ZeroCatalog::new(vec![14.2, 21.0], 1e-9, "x").is_ok());
    }

    #[test]
    fn text_round_trip_and_header() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("zeros.txt");
        std::fs::write(&p, "# a comment\n# accuracy: 1e-12\n14.134725142\n21.022039639\n")
            .unwrap();
        let cat = ZeroCatalog::load_text(&p).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.accuracy(), 1e-12);
        assert!((cat.first() - 14.134725142).abs() < 1e-9);

        // Default accuracy without a header.
        std::fs::write(&p, "14.134725142\n").unwrap();
        assert_eq!(ZeroCatalog::load_text(&p).unwrap().accuracy(), DEFAULT_ACCURACY);

        // save_text → load_text is bit-exact for the ordinates.
        let cat = toy();
        let q = dir.path().join("roundtrip.txt");
        cat.save_text(&q).unwrap();
        let back = ZeroCatalog::load_text(&q).unwrap();
        assert_eq!(back.ordinates(), cat.ordinates());
        assert_eq!(back.accuracy(), cat.accuracy());
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.txt");
        std::fs::write(&p, "14.13\nnot-a-number\n").unwrap();
        match ZeroCatalog::load_text(&p) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        std::fs::write(&p, "21.0\n14.1\n").unwrap();
        match ZeroCatalog::load_text(&p) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected non-monotone error, got {other:?}"),
        }
        // First ordinate at/below the floor is rejected at construction.
        std::fs::write(&p, "14.05\n21.0\n").unwrap();
        assert!(ZeroCatalog::load_text(&p).is_err());
    }

    #[test]
    fn binary_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("zeros.zzc");
        let cat = toy();
        cat.save_binary(&p).unwrap();
        let back = ZeroCatalog::load_binary(&p).unwrap();
        assert_eq!(back.len(), cat.len());
        for (a, b) in back.ordinates().iter().zip(cat.ordinates()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        assert_eq!(back.accuracy().to_bits(), cat.accuracy().to_bits());
    }

    #[test]
    fn binary_rejects_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.zzc");
        std::fs::write(&p, b"XXXX").unwrap();
        assert!(matches!(ZeroCatalog::load_binary(&p), Err(Error::Catalog(_))));

        // Count-0 payload.
        let mut bytes = Vec::new();
        bytes.extend_from_slice(MAGIC);
        bytes.extend_from_slice(&0u64.to_le_bytes());
        bytes.extend_from_slice(&1e-9f64.to_le_bytes());
        std::fs::write(&p, &bytes).unwrap();
        assert!(ZeroCatalog::load_binary(&p).is_err());

        // Truncated ordinate payload.
        let mut bytes = Vec::new();
        bytes.extend_from_slice(MAGIC);
        bytes.extend_from_slice(&2u64.to_le_bytes());
        bytes.extend_from_slice(&1e-9f64.to_le_bytes());
        bytes.extend_from_slice(&14.2f64.to_le_bytes());
        std::fs::write(&p, &bytes).unwrap();
        assert!(ZeroCatalog::load_binary(&p).is_err());

        // Non-monotone payload.
        let mut bytes = Vec::new();
        bytes.extend_from_slice(MAGIC);
        bytes.extend_from_slice(&2u64.to_le_bytes());
        bytes.extend_from_slice(&1e-9f64.to_le_bytes());
        bytes.extend_from_slice(&21.0f64.to_le_bytes());
        bytes.extend_from_slice(&14.2f64.to_le_bytes());
        std::fs::write(&p, &bytes).unwrap();
        assert!(ZeroCatalog::load_binary(&p).is_err());
    }

    #[test]
    fn count_below_boundaries() {
        let cat = toy();
        assert_eq!(cat.count_below(14.0), 0);
        assert_eq!(cat.count_below(14.134725142), 1); // inclusive
        assert_eq!(cat.count_below(14.134725142 + 1e-6), 1);
        assert_eq!(cat.count_below(1e9), 5);
        // Agreement with a linear scan.
        for t in [15.0, 21.022039639, 25.0, 33.0] {
            let linear = cat.ordinates().iter().filter(|&&g| g <= t).count();
            assert_eq!(cat.count_below(t), linear, "t={t}");
        }
    }

    #[test]
    fn inverse_power_sum_small_cases() {
        let cat = ZeroCatalog::new(vec![14.2], 0.0, "one").unwrap();
        let s = cat.inverse_power_sum(2, 14.2).unwrap();
        assert!((s - 1.0 / (14.2 * 14.2)).abs() < 1e-18);
        // Height above the data is an exhaustion error.
        assert!(matches!(
            cat.inverse_power_sum(2, 15.0),
            Err(Error::CatalogExhausted { .. })
        ));
        // Sum below the first zero is empty.
        let cat = toy();
        assert_eq!(cat.inverse_power_sum(1, 14.11).unwrap(), 0.0);
    }

    #[test]
    fn tail_power_bound_closed_form() {
        let b = ZeroCatalog::tail_power_bound(2, TWO_PI_E).unwrap();
        assert!((b - TWO_PI_E.ln() / TWO_PI_E).abs() < 1e-15);
        let b = ZeroCatalog::tail_power_bound(3, 100.0).unwrap();
        assert!((b - 1e-4 * 100.0f64.ln()).abs() < 1e-18);
        assert!(ZeroCatalog::tail_power_bound(2, 10.0).is_err());
        assert!(ZeroCatalog::tail_power_bound(1, 100.0).is_err());
    }

    #[test]
    fn reciprocal_bracket_closed_form() {
        let (lo, hi) = ZeroCatalog::reciprocal_sum_bracket(TWO_PI_E).unwrap();
        let center = 1.0 / (4.0 * std::f64::consts::PI);
        assert!((lo - (center - 0.9321)).abs() < 1e-15);
        assert!((hi - (center + 0.9321)).abs() < 1e-15);
        assert!(ZeroCatalog::reciprocal_sum_bracket(17.0).is_err());
    }

    #[test]
    fn density_bracket_contains_toy_sums() {
        let cat = toy();
        // f = 1/x over [2πe, 33]: direct sum over the five ordinates in range.
        let (lo, hi) = ZeroCatalog::zero_density_bracket(|x| 1.0 / x, TWO_PI_E, 33.0).unwrap();
        let direct: f64 = cat
            .ordinates()
            .iter()
            .filter(|&&g| (TWO_PI_E..=33.0).contains(&g))
            .map(|g| 1.0 / g)
            .sum();
        assert!(lo <= direct && direct <= hi, "direct={direct} not in [{lo}, {hi}]");
        // Degenerate interval and bad weight are rejected.
        assert!(ZeroCatalog::zero_density_bracket(|x| 1.0 / x, 100.0, 100.0).is_err());
        assert!(ZeroCatalog::zero_density_bracket(|x| x, TWO_PI_E, 100.0).is_err());
    }

    #[test]
    fn effective_accuracy_includes_representation_error() {
        let cat = toy();
        assert!(cat.effective_accuracy() > cat.accuracy());
        assert!(cat.effective_accuracy() - cat.accuracy() < 1e-13);
    }
}
