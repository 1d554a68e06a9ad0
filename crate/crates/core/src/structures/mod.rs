//! Representations of triangle-orbifold fundamental groups and their
//! marked Hilbert length spectra.
//!
//! The test bed is a one-parameter Vinberg reflection family of convex
//! projective structures on the (p, q, r) triangle orbifold. The single
//! modulus s sits on the A12/A21 pair of the Cartan matrix; the products
//! A_jk A_kj stay fixed, so the group relations hold for every s > 0 and
//! s = 1 is the hyperbolic point. (The full deformation space of
//! S^2(3,3,4) is two dimensional; this is a one-parameter slice through
//! the hyperbolic structure.)
//!
//! Spectra are tabulated over canonical conjugacy-class words up to a
//! word-length depth. Depth-k agreement of two spectra is reported as
//! "isospectral to depth k" and never as a proof of isospectrality.

mod words;

pub use words::{
    canonical_form, cyclic_reduce, free_reduce, invert_word, reduced_words, word_from_text,
    word_to_text, Word,
};

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::spectral::{
    duality_map, hilbert_translation_length, rational_to_f64, SpectralError, SquareMatrix,
};
use crate::FormatError;

/// Two words are declared the same group element when their holonomies
/// agree entrywise to this relative tolerance.
pub const DEDUP_TOL: f64 = 1e-8;

/// A matrix power this close to +-I counts as torsion. Far looser than
/// the relator residuals (~1e-12) and far tighter than any genuine
/// infinite-order holonomy gets.
const TORSION_SCREEN_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructuresError {
    #[error("InvalidOrders: triangle orders need p,q,r >= 2 with 1/p + 1/q + 1/r < 1 and s > 0")]
    InvalidOrders,
    #[error("UnexpectedNonProximal: infinite-order class {word} did not classify proximal ({reason})")]
    UnexpectedNonProximal { word: String, reason: SpectralError },
    #[error("TableMismatch: spectrum tables cover different conjugacy classes")]
    TableMismatch,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// A finitely generated matrix group with presentation metadata.
/// Generators are labeled `a`, `b`, ... in order; a word letter indexes
/// them as in [`word_from_text`]. Entries are exact rationals (floating
/// inputs are lifted bit-exactly), so holonomy, traces, and duals are
/// computed without roundoff; only the stated relations themselves may
/// hold approximately.
#[derive(Debug, Clone)]
pub struct Representation {
    generators: Vec<SquareMatrix>,
    inverses: Vec<SquareMatrix>,
    pub relators: Vec<Word>,
    pub torsion_lcm: u64,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.relators == other.relators
            && self.torsion_lcm == other.torsion_lcm
    }
}

impl Representation {
    pub fn new(
        generators: Vec<SquareMatrix>,
        relators: Vec<Word>,
        torsion_lcm: u64,
    ) -> Result<Self, FormatError> {
        let n = generators.len();
        if n == 0 || n > 26 {
            return Err(FormatError("need between 1 and 26 generators".into()));
        }
        let dim = generators[0].dim();
        if generators.iter().any(|g| g.dim() != dim) {
            return Err(FormatError("generators disagree in dimension".into()));
        }
        if torsion_lcm == 0 {
            return Err(FormatError("torsion_lcm must be positive".into()));
        }
        for w in &relators {
            if w.iter().any(|&v| v == 0 || v.unsigned_abs() as usize > n) {
                return Err(FormatError("relator letter out of generator range".into()));
            }
        }
        let inverses = generators
            .iter()
            .map(|g| {
                g.inverse()
                    .map_err(|_| FormatError("generator is singular".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation {
            generators,
            inverses,
            relators,
            torsion_lcm,
        })
    }

    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn generators(&self) -> &[SquareMatrix] {
        &self.generators
    }

    pub fn labels(&self) -> Vec<char> {
        (0..self.generators.len() as u8).map(|i| (b'a' + i) as char).collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, FormatError> {
        word_from_text(text, self.generators.len())
    }

    /// Exact product of generators along the word; the empty word is the
    /// identity.
    pub fn holonomy(&self, word: &[i16]) -> SquareMatrix {
        let mut acc = SquareMatrix::identity(self.dim());
        for &v in word {
            let g = if v > 0 {
                &self.generators[(v - 1) as usize]
            } else {
                &self.inverses[(-v - 1) as usize]
            };
            acc = acc.mul(g);
        }
        acc
    }
}

/// Largest relator residual: max over relators of the entrywise distance
/// of the holonomy from +-I, whichever is closer.
pub fn verify_relators(rep: &Representation) -> f64 {
    let dim = rep.dim();
    let id = DMatrix::<f64>::identity(dim, dim);
    rep.relators
        .iter()
        .map(|w| {
            let h = rep.holonomy(w).to_dmatrix();
            (&h - &id).amax().min((&h + &id).amax())
        })
        .fold(0.0, f64::max)
}

/// Orders (p, q, r) of the triangle rotations and the deformation
/// parameter s of the Vinberg family. s = 1 is the hyperbolic structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleGroupParams {
    pub orders: (u32, u32, u32),
    pub s: f64,
}

impl TriangleGroupParams {
    fn validate(&self) -> Result<(), StructuresError> {
        let (p, q, r) = self.orders;
        if p < 2 || q < 2 || r < 2 || !self.s.is_finite() || self.s <= 0.0 {
            return Err(StructuresError::InvalidOrders);
        }
        // Hyperbolic type: 1/p + 1/q + 1/r < 1, decided in integers.
        let (p, q, r) = (u64::from(p), u64::from(q), u64::from(r));
        if q * r + p * r + p * q >= p * q * r {
            return Err(StructuresError::InvalidOrders);
        }
        Ok(())
    }
}

/// Reflection representation sigma_k = I - b_k alpha_k built from the
/// Cartan matrix with A_kk = 2, A12 = -2cos(pi/p) s, A21 = -2cos(pi/p)/s
/// and the remaining off-diagonal pairs symmetric, -2cos(pi/q) and
/// -2cos(pi/r). Here alpha_k is the k-th coordinate functional and b_k
/// the k-th column of A, so sigma_k is the identity outside column k.
/// The reflections square to I exactly (A_kk = 2 survives the float
/// lift); the braid relations hold to about 1e-12.
pub fn triangle_reflection_rep(
    params: &TriangleGroupParams,
) -> Result<Representation, StructuresError> {
    params.validate()?;
    let (p, q, r) = params.orders;
    let c = |m: u32| -2.0 * (std::f64::consts::PI / f64::from(m)).cos();
    let s = params.s;
    let a = [
        [2.0, c(p) * s, c(r)],
        [c(p) / s, 2.0, c(q)],
        [c(r), c(q), 2.0],
    ];
    let mut generators = Vec::with_capacity(3);
    // Reflection k only rewrites column k, so the index is the point.
    #[allow(clippy::needless_range_loop)]
    for k in 0..3 {
        let rows: Vec<Vec<f64>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let mut v = if i == j { 1.0 } else { 0.0 };
                        if j == k {
                            v -= a[i][k];
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        generators.push(SquareMatrix::from_f64_rows(&rows)?);
    }
    let braid = |i: i16, j: i16, m: u32| -> Word {
        std::iter::repeat_n([i, j], m as usize).flatten().collect()
    };
    let relators = vec![
        vec![1, 1],
        vec![2, 2],
        vec![3, 3],
        braid(1, 2, p),
        braid(2, 3, q),
        braid(1, 3, r),
    ];
    let torsion = 2u64.lcm(&u64::from(p)).lcm(&u64::from(q)).lcm(&u64::from(r));
    Ok(Representation::new(generators, relators, torsion).expect("construction is well formed"))
}

fn braid_order(rep: &Representation, i: i16, j: i16) -> Option<u32> {
    rep.relators.iter().find_map(|w| {
        let ok = w.len() >= 4
            && w.len() % 2 == 0
            && w.iter().step_by(2).all(|&v| v == i)
            && w.iter().skip(1).step_by(2).all(|&v| v == j);
        ok.then_some((w.len() / 2) as u32)
    })
}

/// Orientation-preserving subgroup of a triangle reflection group:
/// g1 = sigma1 sigma2 and g2 = sigma2 sigma3, with relators g1^p, g2^q,
/// (g1 g2)^r (note g1 g2 = sigma1 sigma3) and torsion_lcm = lcm(p, q, r).
///
/// Panics if the input does not carry the three braid relators of a
/// triangle reflection representation.
pub fn rotation_subgroup_rep(ref_rep: &Representation) -> Representation {
    assert_eq!(
        ref_rep.generators.len(),
        3,
        "expected a triangle reflection representation"
    );
    let p = braid_order(ref_rep, 1, 2).expect("missing (s1 s2)^p relator");
    let q = braid_order(ref_rep, 2, 3).expect("missing (s2 s3)^q relator");
    let r = braid_order(ref_rep, 1, 3).expect("missing (s1 s3)^r relator");
    let g1 = ref_rep.generators[0].mul(&ref_rep.generators[1]);
    let g2 = ref_rep.generators[1].mul(&ref_rep.generators[2]);
    let relators = vec![
        vec![1; p as usize],
        vec![2; q as usize],
        std::iter::repeat_n([1, 2], r as usize).flatten().collect(),
    ];
    let torsion = u64::from(p).lcm(&u64::from(q)).lcm(&u64::from(r));
    Representation::new(vec![g1, g2], relators, torsion)
        .expect("rotation subgroup inherits validity")
}

/// Canonical conjugacy-class words up to `max_len`, deduplicated as group
/// elements at the default tolerance [`DEDUP_TOL`].
pub fn enumerate_conjugacy_words(rep: &Representation, max_len: usize) -> Vec<Word> {
    enumerate_conjugacy_words_with_tol(rep, max_len, DEDUP_TOL)
}

/// The identification of words as group elements is numeric: holonomies
/// within `dedup_tol` (relative to the larger entry scale) are declared
/// equal, the earlier canonical word winning. This is approximate, but
/// the gap between the tolerance and both sides (float noise around
/// 1e-13, distinct-element separation of order one) leaves wide slack.
pub fn enumerate_conjugacy_words_with_tol(
    rep: &Representation,
    max_len: usize,
    dedup_tol: f64,
) -> Vec<Word> {
    assert!(max_len >= 1, "word ball needs max_len >= 1");
    let mut canon: BTreeMap<Vec<u16>, Word> = BTreeMap::new();
    for w in reduced_words(rep.generators.len(), max_len) {
        let c = canonical_form(&w);
        canon.entry(words::word_key(&c)).or_insert(c);
    }
    let gens_f: Vec<DMatrix<f64>> = rep.generators.iter().map(SquareMatrix::to_dmatrix).collect();
    let invs_f: Vec<DMatrix<f64>> = rep.inverses.iter().map(SquareMatrix::to_dmatrix).collect();
    let dim = rep.dim();
    let mut kept: Vec<(Word, DMatrix<f64>, f64, f64)> = Vec::new();
    'words: for w in canon.into_values() {
        let mut m = DMatrix::<f64>::identity(dim, dim);
        for &v in &w {
            let g = if v > 0 {
                &gens_f[(v - 1) as usize]
            } else {
                &invs_f[(-v - 1) as usize]
            };
            m *= g;
        }
        let tr = m.trace();
        let scale = m.amax();
        for (_, km, ktr, kscale) in &kept {
            let thresh = dedup_tol * (1.0 + scale.max(*kscale));
            if (tr - ktr).abs() <= dim as f64 * thresh && (&m - km).amax() <= thresh {
                continue 'words;
            }
        }
        kept.push((w, m, tr, scale));
    }
    kept.into_iter().map(|(w, _, _, _)| w).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub word: Word,
    pub length: f64,
    pub trace: f64,
    pub trace_inv: f64,
}

/// Marked length spectrum over a word ball: one entry per canonical
/// conjugacy-class word, carrying the Hilbert translation length and the
/// traces of the holonomy and its inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub max_len: usize,
    pub tol: f64,
    pub entries: Vec<SpectrumEntry>,
}

fn is_torsion(hol: &SquareMatrix, k: u64) -> bool {
    let g = hol.to_dmatrix();
    let n = g.nrows();
    let id = DMatrix::<f64>::identity(n, n);
    let mut acc = id.clone();
    for _ in 0..k {
        acc *= &g;
    }
    (&acc - &id).amax() < TORSION_SCREEN_TOL || (&acc + &id).amax() < TORSION_SCREEN_TOL
}

/// Tabulate the spectrum to depth `max_len`. A word whose holonomy
/// raised to torsion_lcm lands on +-I is elliptic and gets length zero;
/// everything else must classify proximal (tolerance `tol`) with length
/// log(lambda_top/lambda_bottom), anything short of that being reported
/// as UnexpectedNonProximal: in a convex projective holonomy group the
/// infinite-order elements are exactly the proximal ones.
pub fn marked_spectrum(
    rep: &Representation,
    max_len: usize,
    tol: f64,
) -> Result<SpectrumTable, StructuresError> {
    let mut entries = Vec::new();
    for word in enumerate_conjugacy_words(rep, max_len) {
        let hol = rep.holonomy(&word);
        let trace = rational_to_f64(&hol.trace());
        let trace_inv = rational_to_f64(&hol.inverse()?.trace());
        let length = if is_torsion(&hol, rep.torsion_lcm) {
            0.0
        } else {
            hilbert_translation_length(&hol, tol).map_err(|reason| {
                StructuresError::UnexpectedNonProximal {
                    word: word_to_text(&word),
                    reason,
                }
            })?
        };
        entries.push(SpectrumEntry {
            word,
            length,
            trace,
            trace_inv,
        });
    }
    Ok(SpectrumTable {
        max_len,
        tol,
        entries,
    })
}

/// Apply the duality map A -> (A^t)^{-1} to every generator. The map is
/// a group automorphism, so the presentation carries over unchanged.
pub fn dual_rep(rep: &Representation) -> Result<Representation, StructuresError> {
    let duals = rep
        .generators
        .iter()
        .map(duality_map)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Representation::new(duals, rep.relators.clone(), rep.torsion_lcm)
        .expect("duality preserves validity"))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumComparison {
    /// Every class in the word ball agrees within tolerance. Says nothing
    /// beyond the tabulated depth.
    IsospectralToDepth,
    /// First disagreeing class in canonical order, with |delta length|.
    Mismatch { word: Word, delta: f64 },
}

/// Entrywise comparison of two tables over the same word ball, keyed by
/// canonical word.
pub fn compare_spectra(
    a: &SpectrumTable,
    b: &SpectrumTable,
    tol: f64,
) -> Result<SpectrumComparison, StructuresError> {
    if a.entries.len() != b.entries.len()
        || a.entries.iter().zip(&b.entries).any(|(x, y)| x.word != y.word)
    {
        return Err(StructuresError::TableMismatch);
    }
    for (x, y) in a.entries.iter().zip(&b.entries) {
        let delta = (x.length - y.length).abs();
        if delta > tol {
            return Ok(SpectrumComparison::Mismatch {
                word: x.word.clone(),
                delta,
            });
        }
    }
    Ok(SpectrumComparison::IsospectralToDepth)
}

/// max |trace(hol(w)) - trace(hol(w)^{-1})| over the word ball, exact up
/// to the final float conversion. Zero for self-dual (hyperbolic)
/// structures, since a conjugacy with the dual forces equal traces; a
/// large defect certifies non-self-duality.
pub fn self_duality_defect(rep: &Representation, max_len: usize) -> Result<f64, StructuresError> {
    let mut defect: f64 = 0.0;
    for word in enumerate_conjugacy_words(rep, max_len) {
        let hol = rep.holonomy(&word);
        let diff = (hol.trace() - hol.inverse()?.trace()).abs();
        defect = defect.max(rational_to_f64(&diff));
    }
    Ok(defect)
}

/// Worst self-duality defect together with a word attaining it.
pub fn self_duality_witness(
    rep: &Representation,
    max_len: usize,
) -> Result<(f64, Word), StructuresError> {
    let mut best: (f64, Word) = (-1.0, Vec::new());
    for word in enumerate_conjugacy_words(rep, max_len) {
        let hol = rep.holonomy(&word);
        let d = rational_to_f64(&(hol.trace() - hol.inverse()?.trace()).abs());
        if d > best.0 {
            best = (d, word);
        }
    }
    Ok(best)
}

pub fn rep_to_json(rep: &Representation) -> String {
    let mut generators = serde_json::Map::new();
    for (label, g) in rep.labels().iter().zip(&rep.generators) {
        let rows: Vec<serde_json::Value> = g
            .rows()
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|e| serde_json::Value::String(e.to_string()))
                        .collect(),
                )
            })
            .collect();
        generators.insert(label.to_string(), serde_json::Value::Array(rows));
    }
    serde_json::json!({
        "dim": rep.dim(),
        "generators": generators,
        "relators": rep.relators.iter().map(|w| word_to_text(w)).collect::<Vec<_>>(),
        "torsion_lcm": rep.torsion_lcm,
    })
    .to_string()
}

/// Parse `{"dim":3,"generators":{"a":[[...]],...},"relators":["aaa"],
/// "torsion_lcm":12}`. Generator keys must be the letters a, b, ... in
/// order; entries are rational strings or integers, as in the matrix
/// JSON format.
pub fn rep_from_json(text: &str) -> Result<Representation, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| FormatError(format!("invalid representation JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| FormatError("representation JSON must be an object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(serde_json::Value::as_u64)
        .ok_or_else(|| FormatError("representation JSON needs an integer \"dim\"".into()))?
        as usize;
    let gens_obj = obj
        .get("generators")
        .and_then(serde_json::Value::as_object)
        .ok_or_else(|| FormatError("representation JSON needs a \"generators\" object".into()))?;
    let n = gens_obj.len();
    let mut generators = Vec::with_capacity(n);
    for (i, (label, rows_v)) in gens_obj.iter().enumerate() {
        let expected = ((b'a' + i as u8) as char).to_string();
        if *label != expected {
            return Err(FormatError(format!(
                "generator labels must be a, b, ... in order; found {label:?}"
            )));
        }
        let rows_v = rows_v
            .as_array()
            .ok_or_else(|| FormatError(format!("generator {label} must be a row array")))?;
        if rows_v.len() != dim {
            return Err(FormatError(format!("generator {label} must have {dim} rows")));
        }
        let mut rows = Vec::with_capacity(dim);
        for row_v in rows_v {
            let row_v = row_v
                .as_array()
                .ok_or_else(|| FormatError(format!("generator {label} rows must be arrays")))?;
            if row_v.len() != dim {
                return Err(FormatError(format!("generator {label} rows must have {dim} entries")));
            }
            rows.push(
                row_v
                    .iter()
                    .map(crate::spectral::rational_from_value)
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        generators.push(SquareMatrix::from_rows(rows)?);
    }
    let relators = obj
        .get("relators")
        .and_then(serde_json::Value::as_array)
        .map(|rels| {
            rels.iter()
                .map(|rv| {
                    rv.as_str()
                        .ok_or_else(|| FormatError("relators must be word strings".into()))
                        .and_then(|t| word_from_text(t, n))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?
        .unwrap_or_default();
    let torsion_lcm = obj
        .get("torsion_lcm")
        .and_then(serde_json::Value::as_u64)
        .ok_or_else(|| FormatError("representation JSON needs an integer \"torsion_lcm\"".into()))?;
    Representation::new(generators, relators, torsion_lcm)
}

/// Spectrum as a JSON array of {word, length, trace, trace_inv} with
/// fixed 12-decimal numbers; byte-deterministic.
pub fn spectrum_to_json(table: &SpectrumTable) -> String {
    let mut out = String::from("[");
    for (i, e) in table.entries.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"word\":{},\"length\":{},\"trace\":{},\"trace_inv\":{}}}",
            serde_json::Value::String(word_to_text(&e.word)),
            crate::fixed12(e.length),
            crate::fixed12(e.trace),
            crate::fixed12(e.trace_inv),
        ));
    }
    out.push(']');
    out
}

/// Tab-separated mirror of [`spectrum_to_json`] with a header row.
pub fn spectrum_to_tsv(table: &SpectrumTable) -> String {
    let mut out = String::from("word\tlength\ttrace\ttrace_inv\n");
    for e in &table.entries {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            word_to_text(&e.word),
            crate::fixed12(e.length),
            crate::fixed12(e.trace),
            crate::fixed12(e.trace_inv),
        ));
    }
    out
}

/// Parse a spectrum table back from its JSON form. The depth is inferred
/// from the longest word; the classification tolerance is not recorded
/// in the artifact and comes back as 0.
pub fn spectrum_from_json(text: &str) -> Result<SpectrumTable, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| FormatError(format!("invalid spectrum JSON: {e}")))?;
    let arr = value
        .as_array()
        .ok_or_else(|| FormatError("spectrum JSON must be an array".into()))?;
    let mut entries = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| FormatError("spectrum entries must be objects".into()))?;
        let field = |k: &str| -> Result<f64, FormatError> {
            obj.get(k)
                .and_then(serde_json::Value::as_f64)
                .ok_or_else(|| FormatError(format!("spectrum entry needs a number {k:?}")))
        };
        let word = obj
            .get("word")
            .and_then(serde_json::Value::as_str)
            .ok_or_else(|| FormatError("spectrum entry needs a string \"word\"".into()))?;
        entries.push(SpectrumEntry {
            word: word_from_text(word, 26)?,
            length: field("length")?,
            trace: field("trace")?,
            trace_inv: field("trace_inv")?,
        });
    }
    let max_len = entries.iter().map(|e| e.word.len()).max().unwrap_or(0);
    Ok(SpectrumTable {
        max_len,
        tol: 0.0,
        entries,
    })
}
