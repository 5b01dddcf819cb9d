//! Command-line front end.
//!
//! Every subcommand reads one document from `--input` and writes its result
//! to `--output` (`-` means the standard streams, and is the default).
//! Documents use the plain-text format of the core library: a `kind:` and
//! `n:` header followed by payload rows.  Output is deterministic, byte for
//! byte; diagnostics go to standard error only.  Exit codes: 0 on success,
//! 1 when a checked property or value-level invariant fails, 2 on malformed
//! or mismatched input.

use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octarsk_core::algebraic::{det_elimination, dodgson_condensation, AlgebraicPyramid};
use octarsk_core::document::{self, Document, ParseError};
use octarsk_core::grid::{CornerGrid, SquareArray};
use octarsk_core::pyramid::PyramidTable;
use octarsk_core::rsk::{
    diagonal_sum, plane_partition_from_tableaux, rsk_forward, rsk_inverse, shape, PlanePartition,
};
use octarsk_core::tropical::{integrate, or_map, or_map_inverse, phi, phi_bruteforce, TropicalPyramid};
use octarsk_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "octarsk",
    version,
    about = "Octahedron recurrence toolkit: exact determinant pyramids, max-plus propagation, and the induced tableau correspondence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a non-negative integer array to its plane partition and tableau
    /// pair, or a plane partition back to its array
    Rsk {
        /// Treat the input as a plane partition and recover the array
        #[arg(long)]
        inverse: bool,
        /// Also emit the intermediate corner grids in pipeline order
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Exact determinant of a rational matrix
    Det {
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Check a property of a document: silent success, first counterexample
    /// on standard error otherwise
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, default_value = "-")]
        input: String,
        /// Accepted for interface uniformity; verify writes no document
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Push a corner grid through the pyramid to the opposite corner grid
    Ormap {
        /// Propagate from the far faces back to the near ones
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Grow the max-plus value file of a square array
    Phi {
        /// Evaluate by exhaustive path-tuple search instead of propagation
        #[arg(long)]
        bruteforce: bool,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Print a built-in worked example end to end
    Demo {
        name: String,
        /// Assert every printed value against the stored fixture
        #[arg(long)]
        check: bool,
        #[arg(long, default_value = "-")]
        output: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dodgson,
    Elimination,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    #[value(name = "t-polarized")]
    TPolarized,
    #[value(name = "a-polarized")]
    APolarized,
    Supermodular,
    Inframodular,
    #[value(name = "theorem3")]
    Theorem3,
    Bijection,
}

// Failure carries the process exit code; 1 for violated properties and
// value-level invariants, 2 for input problems.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn violation(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

fn core_error_code(e: &CoreError) -> u8 {
    match e {
        CoreError::InvalidSize
        | CoreError::ShapeError(_)
        | CoreError::SizeLimitExceeded { .. }
        | CoreError::ShapeMismatch => 2,
        _ => 1,
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure { code: core_error_code(&e), message: e.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let code = match &e {
            ParseError::Domain(inner) => core_error_code(inner),
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(format!("cannot write standard output: {e}")))
    } else {
        fs::write(path, text).map_err(|e| Failure::input(format!("cannot write {path}: {e}")))
    }
}

fn read_document(path: &str) -> Result<Document, Failure> {
    Ok(document::parse(&read_input(path)?)?)
}

fn kind_mismatch(expected: &str, doc: &Document) -> Failure {
    Failure::input(format!(
        "expected {expected} document, found kind `{}`",
        doc.kind_name()
    ))
}

fn expect_array(doc: Document) -> Result<SquareArray, Failure> {
    match doc {
        Document::Array(s) => Ok(s),
        other => Err(kind_mismatch("an array", &other)),
    }
}

fn expect_corner_grid(doc: Document) -> Result<CornerGrid, Failure> {
    match doc {
        Document::CornerGrid(g) => Ok(g),
        other => Err(kind_mismatch("a corner-grid", &other)),
    }
}

fn expect_matrix(doc: Document) -> Result<octarsk_core::algebraic::RationalMatrix, Failure> {
    match doc {
        Document::Matrix(m) => Ok(m),
        other => Err(kind_mismatch("a matrix", &other)),
    }
}

fn expect_plane_partition(doc: Document) -> Result<PlanePartition, Failure> {
    match doc {
        Document::PlanePartition(p) => Ok(p),
        other => Err(kind_mismatch("a plane-partition", &other)),
    }
}

fn expect_pyramid(doc: Document) -> Result<PyramidTable, Failure> {
    match doc {
        Document::Pyramid(t) => Ok(t),
        other => Err(kind_mismatch("a pyramid", &other)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("{}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Rsk { inverse, trace, input, output } => cmd_rsk(inverse, trace, &input, &output),
        Command::Det { method, input, output } => cmd_det(method, &input, &output),
        Command::Verify { property, input, .. } => cmd_verify(property, &input),
        Command::Ormap { inverse, input, output } => cmd_ormap(inverse, &input, &output),
        Command::Phi { bruteforce, input, output } => cmd_phi(bruteforce, &input, &output),
        Command::Demo { name, check, output } => cmd_demo(&name, check, &output),
    }
}

fn cmd_rsk(inverse: bool, trace: bool, input: &str, output: &str) -> Result<(), Failure> {
    let doc = read_document(input)?;
    let mut docs = Vec::new();
    if inverse {
        let p = expect_plane_partition(doc)?;
        if trace {
            let h = diagonal_sum(&p);
            let g = or_map_inverse(&h);
            docs.push(Document::CornerGrid(h));
            docs.push(Document::CornerGrid(g));
        }
        docs.push(Document::Array(rsk_inverse(&p)));
    } else {
        let s = expect_array(doc)?;
        let (p, lower, upper) = rsk_forward(&s)?;
        if trace {
            let g = integrate(&s);
            let h = or_map(&g);
            docs.push(Document::CornerGrid(g));
            docs.push(Document::CornerGrid(h));
        }
        docs.push(Document::PlanePartition(p));
        docs.push(Document::TableauPair(lower, upper));
    }
    write_output(output, &document::to_text_all(&docs))
}

fn cmd_det(method: Method, input: &str, output: &str) -> Result<(), Failure> {
    let m = expect_matrix(read_document(input)?)?;
    let value = match method {
        Method::Elimination => det_elimination(&m),
        Method::Dodgson | Method::Auto => match dodgson_condensation(&m) {
            Some(v) => v,
            None => {
                eprintln!("condensation hit a zero divisor; falling back to elimination");
                det_elimination(&m)
            }
        },
    };
    write_output(output, &format!("{}\n", document::format_rational(&value)))
}

fn cmd_verify(property: Property, input: &str) -> Result<(), Failure> {
    let doc = read_document(input)?;
    match property {
        Property::TPolarized => {
            let f = TropicalPyramid::from_table(expect_pyramid(doc)?);
            match f.first_polarization_violation() {
                None => Ok(()),
                Some(v) => Err(Failure::violation(v.to_string())),
            }
        }
        Property::APolarized => {
            let f = AlgebraicPyramid::from_table(expect_pyramid(doc)?);
            match f.first_polarization_violation() {
                None => Ok(()),
                Some(v) => Err(Failure::violation(v.to_string())),
            }
        }
        Property::Supermodular => {
            let g = expect_corner_grid(doc)?;
            match g.first_supermodular_violation() {
                None => Ok(()),
                Some((i, j)) => Err(Failure::violation(format!(
                    "mixed second difference is negative at cell ({i}, {j})"
                ))),
            }
        }
        Property::Inframodular => {
            let g = expect_corner_grid(doc)?;
            match g.first_inframodular_violation() {
                None => Ok(()),
                Some((i, j)) => Err(Failure::violation(format!(
                    "inframodularity fails at cell ({i}, {j})"
                ))),
            }
        }
        Property::Theorem3 => {
            // the exchange must hold as an equivalence on this instance
            let g = match doc {
                Document::Array(s) => integrate(&s),
                Document::CornerGrid(g) => g,
                other => return Err(kind_mismatch("an array or corner-grid", &other)),
            };
            let n = g.n();
            let h = or_map(&g);
            let forward = h.is_inframodular() && h.get(n - 1, n - 1) <= h.get(n, n);
            if g.is_supermodular() == forward {
                Ok(())
            } else {
                Err(Failure::violation(format!(
                    "exchange failed: supermodular is {}, image inframodular with corner is {}",
                    g.is_supermodular(),
                    forward
                )))
            }
        }
        Property::Bijection => match doc {
            Document::Array(s) => {
                let (p, _, _) = rsk_forward(&s)?;
                if rsk_inverse(&p) == s {
                    Ok(())
                } else {
                    Err(Failure::violation("inverse did not recover the array"))
                }
            }
            Document::PlanePartition(p) => {
                let s = rsk_inverse(&p);
                let (back, lower, upper) = rsk_forward(&s)?;
                if back != p {
                    return Err(Failure::violation(
                        "forward map did not recover the plane partition",
                    ));
                }
                if plane_partition_from_tableaux(&lower, &upper)? != p {
                    return Err(Failure::violation(
                        "tableau pair did not rebuild the plane partition",
                    ));
                }
                Ok(())
            }
            other => Err(kind_mismatch("an array or plane-partition", &other)),
        },
    }
}

fn cmd_ormap(inverse: bool, input: &str, output: &str) -> Result<(), Failure> {
    let g = expect_corner_grid(read_document(input)?)?;
    let result = if inverse { or_map_inverse(&g) } else { or_map(&g) };
    write_output(output, &document::to_text(&Document::CornerGrid(result)))
}

fn cmd_phi(bruteforce: bool, input: &str, output: &str) -> Result<(), Failure> {
    let s = expect_array(read_document(input)?)?;
    let f = if bruteforce { phi_bruteforce(&s)? } else { phi(&s) };
    write_output(output, &document::to_text(&Document::Pyramid(f.table().clone())))
}

// Payload rows of a document, without the kind and size headers.
fn payload(doc: &Document) -> String {
    let text = document::to_text(doc);
    let mut lines = text.lines();
    lines.next();
    lines.next();
    let mut out: String = lines.collect::<Vec<_>>().join("\n");
    out.push('\n');
    out
}

fn cmd_demo(name: &str, check: bool, output: &str) -> Result<(), Failure> {
    if name != "example5" {
        return Err(Failure::input(format!("unknown demo name `{name}`")));
    }

    let s = SquareArray::from_int_rows(&[&[2, 3, 1], &[1, 1, 5], &[1, 2, 2]])
        .expect("fixture rows are square");
    let g = integrate(&s);
    let f = phi(&s);
    let h = or_map(&g);
    let (p, lower, upper) = rsk_forward(&s)?;
    let sh = shape(&p)?;

    let mut out = String::new();
    out.push_str("array s:\n");
    out.push_str(&payload(&Document::Array(s.clone())));
    out.push_str("\ncorner data g:\n");
    out.push_str(&payload(&Document::CornerGrid(g.clone())));
    out.push_str("\npyramid file:\n");
    out.push_str(&payload(&Document::Pyramid(f.table().clone())));
    out.push_str("\ncorner data h:\n");
    out.push_str(&payload(&Document::CornerGrid(h.clone())));
    out.push_str("\nplane partition p:\n");
    out.push_str(&payload(&Document::PlanePartition(p.clone())));
    out.push_str("\ntableau pair:\n");
    out.push_str(&payload(&Document::TableauPair(lower.clone(), upper.clone())));
    out.push_str(&format!("\nshape: {sh}\n"));
    out.push_str(&format!("apex: {}\n", document::format_rational(f.apex())));

    if check {
        let expected_g = CornerGrid::from_int_rows(&[&[2, 5, 6], &[3, 7, 13], &[4, 10, 18]])
            .expect("fixture rows are square");
        let expected_h = CornerGrid::from_int_rows(&[&[11, 7, 4], &[8, 17, 10], &[6, 13, 18]])
            .expect("fixture rows are square");
        let expected_p = PlanePartition::from_int_rows(&[&[11, 7, 4], &[8, 6, 3], &[6, 5, 1]])
            .expect("fixture rows are a plane partition");
        let expected_lower = vec![
            vec![1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3],
            vec![2, 2, 2, 3, 3, 3],
            vec![3],
        ];
        let expected_upper = vec![
            vec![1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3],
            vec![2, 2, 2, 2, 2, 3],
            vec![3],
        ];
        let checks = [
            (g == expected_g, "corner data g"),
            (h == expected_h, "corner data h"),
            (p == expected_p, "plane partition"),
            (lower.rows() == expected_lower, "first tableau"),
            (upper.rows() == expected_upper, "second tableau"),
            (sh.to_string() == "(11, 6, 1)", "shape"),
            (f.apex() == &octarsk_core::rat(18), "apex"),
            (rsk_inverse(&p) == s, "round trip"),
        ];
        for (ok, what) in checks {
            if !ok {
                return Err(Failure::violation(format!(
                    "demo check failed: {what} does not match the fixture"
                )));
            }
        }
    }

    write_output(output, &out)
}
