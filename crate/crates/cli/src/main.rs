//! Batch front end for the hilspec library: polynomial root-ratio
//! computations, matrix classification and translation lengths, Hilbert
//! distances on convex domains, and triangle-family length spectra.
//!
//! Exit status 0 on success, 1 on a domain error (the module's error
//! name goes to stderr verbatim), 2 on malformed input.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hilspec::exact::{format_poly, parse_poly, Rational, UniPoly};
use hilspec::hilbert::{hilbert_distance, ConvexDomain, HilbertError};
use hilspec::rootratio::{common_root_ratio_poly, root_ratio_poly, RootRatioError};
use hilspec::spectral::{
    classify_proximal, common_eigenvalue_ratio, duality_map, hilbert_translation_length,
    matrix_from_json, matrix_to_json, ProximalityClass, ProximalityTag, SpectralError,
    SquareMatrix, DEFAULT_PROXIMALITY_TOL, DEFAULT_ROOT_TOL,
};
use hilspec::structures::{
    compare_spectra, marked_spectrum, rep_from_json, rep_to_json, rotation_subgroup_rep,
    self_duality_witness, spectrum_from_json, spectrum_to_json, spectrum_to_tsv,
    triangle_reflection_rep, word_to_text, Representation, SpectrumComparison, StructuresError,
    TriangleGroupParams,
};
use hilspec::{fixed12, FormatError};

#[derive(Parser)]
#[command(name = "hilspec", version, about = "Hilbert length spectra of convex projective structures", max_term_width = 100)]
struct Cli {
    /// Tolerance override; each subcommand has its own default
    /// (proximality 1e-9, root residual 1e-12, spectrum comparison 1e-8).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Word-ball depth for spectrum and selfdual.
    #[arg(long, global = true, default_value_t = 8)]
    max_len: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root-ratio polynomial R_p(r) of a monic rational polynomial.
    Rrpoly { poly: String },
    /// Common root-ratio resultant C_{p,q} of two polynomials.
    Crrpoly { poly_p: String, poly_q: String },
    /// Characteristic polynomial of a matrix JSON file.
    Charpoly { matrix: String },
    /// All pairwise eigenvalue ratios of a matrix.
    Eigenratios { matrix: String },
    /// Proximality class of a matrix.
    Classify { matrix: String },
    /// Hilbert translation length log(lambda_top/lambda_bottom).
    Length { matrix: String },
    /// Do two matrices share an eigenvalue ratio? Decided exactly.
    Commonratio { matrix_a: String, matrix_b: String },
    /// Duality map A -> (A^t)^{-1}, exact.
    Dual { matrix: String },
    /// Hilbert distance between two interior points of a domain JSON.
    /// Points are comma-separated coordinates, e.g. 0.5,0.
    Distance { domain: String, p: String, q: String },
    /// Triangle-group representation JSON for orders p q r at parameter s.
    Triangle {
        #[arg(long, num_args = 3, value_names = ["P", "Q", "R"])]
        orders: Vec<u32>,
        #[arg(long, default_value_t = 1.0)]
        param: f64,
        /// Emit the full reflection group instead of its rotation subgroup.
        #[arg(long)]
        reflection: bool,
    },
    /// Marked length spectrum of a representation JSON over a word ball.
    Spectrum { rep: String },
    /// Compare two spectrum JSON artifacts entry by entry.
    Compare { spectrum_a: String, spectrum_b: String },
    /// Self-duality defect max |trace - trace of inverse| with a witness word.
    Selfdual { rep: String },
}

/// Errors sorted by exit status: domain errors keep the module error name
/// in front of the message, input errors cover anything that never became
/// a value.
enum Failure {
    Domain(String),
    Input(String),
}

impl From<RootRatioError> for Failure {
    fn from(e: RootRatioError) -> Self {
        Failure::Domain(e.to_string())
    }
}
impl From<SpectralError> for Failure {
    fn from(e: SpectralError) -> Self {
        Failure::Domain(e.to_string())
    }
}
impl From<HilbertError> for Failure {
    fn from(e: HilbertError) -> Self {
        Failure::Domain(e.to_string())
    }
}
impl From<StructuresError> for Failure {
    fn from(e: StructuresError) -> Self {
        match e {
            StructuresError::Format(f) => Failure::Input(f.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}
impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe downstream is not our error; just stop.
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{out}");
            let _ = stdout.flush();
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))
}

fn parse_poly_arg(text: &str) -> Result<UniPoly<Rational>, Failure> {
    let (poly, _) = parse_poly(text).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(poly)
}

fn load_matrix(path: &str) -> Result<SquareMatrix, Failure> {
    Ok(matrix_from_json(&read_file(path)?)?)
}

fn load_rep(path: &str) -> Result<Representation, Failure> {
    Ok(rep_from_json(&read_file(path)?)?)
}

fn parse_point(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Input(format!("bad coordinate {c:?} in point {text:?}")))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Some(t) = cli.tol {
        if t.is_nan() || t <= 0.0 {
            return Err(Failure::Input(format!("tolerance must be positive, got {t}")));
        }
    }
    let tol = |default: f64| cli.tol.unwrap_or(default);

    match &cli.cmd {
        Cmd::Rrpoly { poly } => {
            let p = parse_poly_arg(poly)?;
            let result = root_ratio_poly(&p)?;
            let display = format_poly(&result.poly, "r");
            Ok(match cli.format {
                Format::Json => serde_json::json!({
                    "poly": display,
                    "source_degree": result.source_degree,
                })
                .to_string(),
                _ => display,
            })
        }
        Cmd::Crrpoly { poly_p, poly_q } => {
            let p = parse_poly_arg(poly_p)?;
            let q = parse_poly_arg(poly_q)?;
            let c = common_root_ratio_poly(&p, &q)?;
            Ok(match cli.format {
                Format::Json => serde_json::json!({
                    "resultant": c.to_string(),
                    "shared_ratio": c == Rational::from_integer(0.into()),
                })
                .to_string(),
                _ => c.to_string(),
            })
        }
        Cmd::Charpoly { matrix } => {
            let m = load_matrix(matrix)?;
            let display = format_poly(m.char_poly(), "x");
            Ok(match cli.format {
                Format::Json => serde_json::json!({ "charpoly": display }).to_string(),
                _ => display,
            })
        }
        Cmd::Eigenratios { matrix } => {
            let m = load_matrix(matrix)?;
            let ratios = m.eigen_ratios(tol(DEFAULT_ROOT_TOL))?;
            Ok(match cli.format {
                Format::Json => {
                    let items: Vec<String> = ratios
                        .iter()
                        .map(|z| format!("{{\"re\":{},\"im\":{}}}", fixed12(z.re), fixed12(z.im)))
                        .collect();
                    format!("[{}]", items.join(","))
                }
                Format::Tsv => {
                    let mut out = String::from("re\tim");
                    for z in &ratios {
                        write!(out, "\n{}\t{}", fixed12(z.re), fixed12(z.im)).unwrap();
                    }
                    out
                }
                Format::Text => ratios
                    .iter()
                    .map(|z| format!("{} {}", fixed12(z.re), fixed12(z.im)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
        Cmd::Classify { matrix } => {
            let m = load_matrix(matrix)?;
            let class = classify_proximal(&m, tol(DEFAULT_PROXIMALITY_TOL))?;
            Ok(render_class(&class, cli.format))
        }
        Cmd::Length { matrix } => {
            let m = load_matrix(matrix)?;
            let len = hilbert_translation_length(&m, tol(DEFAULT_PROXIMALITY_TOL))?;
            Ok(match cli.format {
                Format::Json => format!("{{\"length\":{}}}", fixed12(len)),
                _ => fixed12(len),
            })
        }
        Cmd::Commonratio { matrix_a, matrix_b } => {
            let a = load_matrix(matrix_a)?;
            let b = load_matrix(matrix_b)?;
            let shared = common_eigenvalue_ratio(&a, &b)?;
            Ok(match cli.format {
                Format::Json => format!("{{\"common_ratio\":{shared}}}"),
                _ => shared.to_string(),
            })
        }
        Cmd::Dual { matrix } => {
            let m = load_matrix(matrix)?;
            Ok(matrix_to_json(&duality_map(&m)?))
        }
        Cmd::Distance { domain, p, q } => {
            let dom = ConvexDomain::from_json(&read_file(domain)?)?;
            let pv = parse_point(p)?;
            let qv = parse_point(q)?;
            if pv.len() != dom.dim() || qv.len() != dom.dim() {
                return Err(Failure::Input(format!(
                    "points must have dimension {}",
                    dom.dim()
                )));
            }
            let d = hilbert_distance(&dom, &pv, &qv)?;
            Ok(match cli.format {
                Format::Json => format!("{{\"distance\":{}}}", fixed12(d)),
                _ => fixed12(d),
            })
        }
        Cmd::Triangle {
            orders,
            param,
            reflection,
        } => {
            let params = TriangleGroupParams {
                orders: (orders[0], orders[1], orders[2]),
                s: *param,
            };
            let ref_rep = triangle_reflection_rep(&params)?;
            let rep = if *reflection {
                ref_rep
            } else {
                rotation_subgroup_rep(&ref_rep)
            };
            Ok(rep_to_json(&rep))
        }
        Cmd::Spectrum { rep } => {
            let rep = load_rep(rep)?;
            let table = marked_spectrum(&rep, cli.max_len, tol(DEFAULT_PROXIMALITY_TOL))?;
            Ok(match cli.format {
                Format::Json => spectrum_to_json(&table),
                _ => {
                    let mut t = spectrum_to_tsv(&table);
                    t.truncate(t.trim_end().len());
                    t
                }
            })
        }
        Cmd::Compare {
            spectrum_a,
            spectrum_b,
        } => {
            let a = spectrum_from_json(&read_file(spectrum_a)?)?;
            let b = spectrum_from_json(&read_file(spectrum_b)?)?;
            let verdict = compare_spectra(&a, &b, tol(1e-8))?;
            Ok(match (&verdict, cli.format) {
                (SpectrumComparison::IsospectralToDepth, Format::Json) => {
                    "{\"verdict\":\"isospectral-to-depth\"}".into()
                }
                (SpectrumComparison::IsospectralToDepth, _) => "isospectral-to-depth".into(),
                (SpectrumComparison::Mismatch { word, delta }, Format::Json) => format!(
                    "{{\"verdict\":\"mismatch\",\"word\":\"{}\",\"delta\":{}}}",
                    word_to_text(word),
                    fixed12(*delta)
                ),
                (SpectrumComparison::Mismatch { word, delta }, _) => {
                    format!("mismatch {} {}", word_to_text(word), fixed12(*delta))
                }
            })
        }
        Cmd::Selfdual { rep } => {
            let rep = load_rep(rep)?;
            let (defect, word) = self_duality_witness(&rep, cli.max_len)?;
            Ok(match cli.format {
                Format::Json => format!(
                    "{{\"defect\":{},\"word\":\"{}\"}}",
                    fixed12(defect),
                    word_to_text(&word)
                ),
                _ => format!("{} {}", fixed12(defect), word_to_text(&word)),
            })
        }
    }
}

fn class_explanation(class: &ProximalityClass) -> String {
    match class.tag {
        ProximalityTag::Identity => "scalar matrix: acts trivially on projective space".into(),
        ProximalityTag::Proximal => format!(
            "simple real leading eigenvalue at both ends with equal signs (top {}, bottom {})",
            fixed12(class.top.unwrap()),
            fixed12(class.bottom.unwrap())
        ),
        ProximalityTag::SemiProximalOnly => match (class.top, class.bottom) {
            (Some(t), Some(b)) => format!(
                "simple real leading eigenvalue at both ends, but {} and {} differ in sign",
                fixed12(t),
                fixed12(b)
            ),
            _ => "simple real leading eigenvalue at the top end only; the inverse's is a complex pair"
                .into(),
        },
        ProximalityTag::NotSemiProximal => {
            "the largest-modulus eigenvalues form a complex pair".into()
        }
    }
}

fn render_class(class: &ProximalityClass, format: Format) -> String {
    let tag = class.tag.to_string();
    let explanation = class_explanation(class);
    match format {
        Format::Json => {
            let opt = |v: Option<f64>| v.map_or("null".to_string(), fixed12);
            format!(
                "{{\"class\":\"{tag}\",\"top\":{},\"bottom\":{},\"explanation\":\"{explanation}\"}}",
                opt(class.top),
                opt(class.bottom)
            )
        }
        _ => format!("{tag}\n{explanation}"),
    }
}
