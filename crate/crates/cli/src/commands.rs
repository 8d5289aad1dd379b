use std::fmt::Write;

use rsbf::format::{
    matrix_csv, orbits_csv, spectrum_csv, spectrum_entries, MatrixDoc, OrbitTableDoc,
    SearchReportDoc,
};
use rsbf::{
    count_orbits_burnside, eigen_multiplicities, oracle, search_bent_within, sigma_sum_closed_form,
    spectrum_via_matrix, trace_via_sigma_sums, Budget, CyclicShift, EigenReport, OrbitTable,
    RsbfFunction, RsbfMatrix, SearchMode,
};
use serde::Serialize;

use crate::args::{Command, Format};
use crate::CliError;

/// Rendered command output plus whether every check passed.
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes") + "\n"
}

fn table(n: u32, budget: &Budget) -> Result<OrbitTable, CliError> {
    Ok(OrbitTable::enumerate_within(n, budget)?)
}

fn matrix(n: u32, budget: &Budget) -> Result<RsbfMatrix, CliError> {
    Ok(RsbfMatrix::build_within(table(n, budget)?, budget)?)
}

pub fn run(command: &Command, format: Option<Format>, budget: &Budget) -> Result<Output, CliError> {
    match command {
        Command::Orbits { dim, elements } => {
            let t = table(dim.n, budget)?;
            Ok(Output::ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&OrbitTableDoc::new(&t, *elements)),
                Format::Csv => orbits_csv(&t),
                Format::Pretty => {
                    let mut out = format!("n = {}, g = {}\n", t.n(), t.g());
                    for (i, o) in t.orbits().iter().enumerate() {
                        let _ = write!(out, "{i:>6}  {}  size {}", o.representative(), o.size());
                        if *elements {
                            let elems: Vec<String> = o.elements().map(|e| e.to_string()).collect();
                            let _ = write!(out, "  {{{}}}", elems.join(", "));
                        }
                        out.push('\n');
                    }
                    out
                }
            }))
        }
        Command::Matrix { dim } => {
            let m = matrix(dim.n, budget)?;
            Ok(Output::ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&MatrixDoc::new(&m)),
                Format::Csv => matrix_csv(&m),
                Format::Pretty => {
                    let width = m
                        .entries()
                        .iter()
                        .map(|a| a.to_string().len())
                        .max()
                        .unwrap_or(1);
                    let mut out = String::new();
                    for (rep, row) in m.representatives().zip(m.rows()) {
                        let cells: Vec<String> =
                            row.iter().map(|a| format!("{a:>width$}")).collect();
                        let _ = writeln!(out, "{rep}  {}", cells.join(" "));
                    }
                    out
                }
            }))
        }
        Command::Verify {
            dim,
            square,
            trace,
            eigen,
            oracle,
        } => {
            let all = !(*square || *trace || *eigen || *oracle);
            // eigenvalue counts are only claimed for n > 2; the default run skips them below that
            let report = verify(
                dim.n,
                Checks {
                    square: all || *square,
                    trace: all || *trace,
                    eigen: (all && dim.n > 2) || *eigen,
                    oracle: all || *oracle,
                },
                budget,
            )?;
            let passed = report.passed;
            let text = match format.unwrap_or(Format::Json) {
                Format::Json => json(&report),
                Format::Csv => report.csv(),
                Format::Pretty => report.pretty(),
            };
            Ok(Output { text, passed })
        }
        Command::Spectrum { dim, function } => {
            let m = matrix(dim.n, budget)?;
            let source = read_function(function)?;
            let f = RsbfFunction::parse(m.table(), &source, budget)?;
            let s = spectrum_via_matrix(&f, &m)?;
            Ok(Output::ok(match format.unwrap_or(Format::Csv) {
                Format::Json => json(&spectrum_entries(&s, m.table())),
                Format::Csv => spectrum_csv(&s, m.table()),
                Format::Pretty => {
                    let mut out = format!("f = {f}\n");
                    for e in spectrum_entries(&s, m.table()) {
                        let _ = writeln!(out, "W({}) = {}", e.representative, e.walsh_value);
                    }
                    let _ = writeln!(out, "bent: {}", s.is_bent());
                    out
                }
            }))
        }
        Command::Eigen { dim } => {
            let r = eigen_multiplicities(dim.n)?;
            Ok(Output::ok(render_eigen(&r, format.unwrap_or(Format::Json))))
        }
        Command::BentSearch {
            dim,
            exhaustive,
            sample,
            seed,
        } => {
            let mode = match (exhaustive, sample) {
                (_, Some(count)) => SearchMode::Sampled {
                    count: *count,
                    seed: *seed,
                },
                _ => SearchMode::Exhaustive,
            };
            let report = search_bent_within(dim.n, mode, budget)?;
            let doc = SearchReportDoc::new(&report);
            Ok(Output::ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&doc),
                Format::Csv => doc.bent.iter().map(|s| format!("{s}\n")).collect(),
                Format::Pretty => {
                    let mut out = format!(
                        "n = {}, mode {}, tested {}, bent {}\n",
                        doc.n, doc.mode, doc.functions_tested, doc.bent_count
                    );
                    if let Some(seed) = doc.seed {
                        let _ = writeln!(out, "seed {seed}");
                    }
                    if let Some(reason) = &doc.reason {
                        let _ = writeln!(out, "{reason}");
                    }
                    for s in &doc.bent {
                        let _ = writeln!(out, "{s}");
                    }
                    out
                }
            }))
        }
        Command::Oracle { dim } => {
            let report = oracle_report(dim.n, budget)?;
            Ok(Output::ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&report),
                Format::Csv => report
                    .sigma_sums
                    .iter()
                    .map(|s| format!("{},{}\n", s.k, s.value))
                    .collect(),
                Format::Pretty => {
                    let mut out = format!(
                        "n = {}, g = {}, trace = {}\n",
                        report.n, report.g, report.trace
                    );
                    for s in &report.sigma_sums {
                        let _ = writeln!(out, "S(rho^{}) = {}", s.k, s.value);
                    }
                    out
                }
            }))
        }
    }
}

fn read_function(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read function file {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn render_eigen(r: &EigenReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => format!(
            "n,g,trace,positive,negative\n{},{},{},{},{}\n",
            r.n, r.g, r.trace, r.positive, r.negative
        ),
        Format::Pretty => format!(
            "n = {}, g = {}\ntrace = {}\n+2^(n/2): {}\n-2^(n/2): {}\n",
            r.n, r.g, r.trace, r.positive, r.negative
        ),
    }
}

#[derive(Debug, Serialize)]
struct SigmaSum {
    k: u32,
    value: i64,
}

#[derive(Debug, Serialize)]
struct OracleReport {
    n: u32,
    g: u64,
    trace: i64,
    sigma_sums: Vec<SigmaSum>,
}

fn oracle_report(n: u32, budget: &Budget) -> Result<OracleReport, CliError> {
    let g = oracle::orbit_count_brute_within(n, budget)?;
    let sigma_sums = (0..n)
        .map(|k| {
            Ok(SigmaSum {
                k,
                value: oracle::sigma_sum_brute_within(n, k, budget)?,
            })
        })
        .collect::<Result<Vec<_>, rsbf::Error>>()?;
    let trace = oracle::trace_brute_within(n, budget)?;
    Ok(OracleReport {
        n,
        g,
        trace,
        sigma_sums,
    })
}

struct Checks {
    square: bool,
    trace: bool,
    eigen: bool,
    oracle: bool,
}

#[derive(Debug, Serialize)]
struct SquareFailureDoc {
    row: usize,
    col: usize,
    got: i64,
    expected: i64,
}

#[derive(Debug, Serialize)]
struct SquareDoc {
    holds: bool,
    failure: Option<SquareFailureDoc>,
}

#[derive(Debug, Serialize)]
struct TraceDoc {
    direct: i64,
    via_sigma_sums: i64,
    agree: bool,
}

#[derive(Debug, Serialize)]
struct EigenDoc {
    #[serde(flatten)]
    report: EigenReport,
    consistent: bool,
}

#[derive(Debug, Serialize)]
struct SigmaCheck {
    k: u32,
    closed_form: i64,
    brute: i64,
}

#[derive(Debug, Serialize)]
struct OracleDoc {
    burnside: u64,
    orbit_count_brute: u64,
    trace_brute: i64,
    trace_direct: i64,
    sigma_sums: Vec<SigmaCheck>,
    agree: bool,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    n: u32,
    g: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    square_identity: Option<SquareDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigen: Option<EigenDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDoc>,
}

impl VerifyReport {
    fn results(&self) -> Vec<(&'static str, bool)> {
        let mut rows = Vec::new();
        if let Some(s) = &self.square_identity {
            rows.push(("square_identity", s.holds));
        }
        if let Some(t) = &self.trace {
            rows.push(("trace", t.agree));
        }
        if let Some(e) = &self.eigen {
            rows.push(("eigen", e.consistent));
        }
        if let Some(o) = &self.oracle {
            rows.push(("oracle", o.agree));
        }
        rows
    }

    fn csv(&self) -> String {
        let mut out = String::from("check,passed\n");
        for (name, ok) in self.results() {
            let _ = writeln!(out, "{name},{ok}");
        }
        out
    }

    fn pretty(&self) -> String {
        let mut out = format!("n = {}, g = {}\n", self.n, self.g);
        if let Some(s) = &self.square_identity {
            match &s.failure {
                None => {
                    let _ = writeln!(out, "square identity: holds (A*A = {} I)", 1u64 << self.n);
                }
                Some(f) => {
                    let _ = writeln!(
                        out,
                        "square identity: FAILS at ({}, {}): got {}, expected {}",
                        f.row, f.col, f.got, f.expected
                    );
                }
            }
        }
        if let Some(t) = &self.trace {
            let _ = writeln!(
                out,
                "trace: direct {}, via sigma sums {} ({})",
                t.direct,
                t.via_sigma_sums,
                if t.agree { "agree" } else { "DISAGREE" }
            );
        }
        if let Some(e) = &self.eigen {
            let _ = writeln!(
                out,
                "eigen: +{} / -{} ({})",
                e.report.positive,
                e.report.negative,
                if e.consistent {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            );
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle: g {} / {}, trace {} / {} ({})",
                o.burnside,
                o.orbit_count_brute,
                o.trace_direct,
                o.trace_brute,
                if o.agree { "agree" } else { "DISAGREE" }
            );
        }
        let _ = writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn verify(n: u32, checks: Checks, budget: &Budget) -> Result<VerifyReport, CliError> {
    let m = matrix(n, budget)?;
    let direct = m.trace_direct();

    let square_identity = if checks.square {
        let c = m.verify_square_identity_within(budget)?;
        Some(SquareDoc {
            holds: c.holds,
            failure: c.failure.map(|f| SquareFailureDoc {
                row: f.row,
                col: f.col,
                got: f.got,
                expected: f.expected,
            }),
        })
    } else {
        None
    };

    let trace = if checks.trace {
        let via_sigma_sums = trace_via_sigma_sums(n)?;
        Some(TraceDoc {
            direct,
            via_sigma_sums,
            agree: direct == via_sigma_sums,
        })
    } else {
        None
    };

    let eigen = if checks.eigen {
        let report = eigen_multiplicities(n)?;
        let scale = 1i64 << (n / 2);
        let difference = report.positive as i64 - report.negative as i64;
        let consistent = report.positive + report.negative == m.g() as u64
            && if n % 2 == 1 {
                report.positive == report.negative && direct == 0
            } else {
                direct % scale == 0 && direct / scale == difference
            };
        Some(EigenDoc { report, consistent })
    } else {
        None
    };

    let oracle = if checks.oracle {
        let burnside = count_orbits_burnside(n)?;
        let orbit_count_brute = oracle::orbit_count_brute_within(n, budget)?;
        let trace_brute = oracle::trace_brute_within(n, budget)?;
        let mut sigma_sums = Vec::new();
        for k in 0..n {
            sigma_sums.push(SigmaCheck {
                k,
                closed_form: sigma_sum_closed_form(CyclicShift::new(n, k)?) as i64,
                brute: oracle::sigma_sum_brute_within(n, k, budget)?,
            });
        }
        let agree = burnside == orbit_count_brute
            && burnside == m.g() as u64
            && trace_brute == direct
            && sigma_sums.iter().all(|s| s.closed_form == s.brute);
        Some(OracleDoc {
            burnside,
            orbit_count_brute,
            trace_brute,
            trace_direct: direct,
            sigma_sums,
            agree,
        })
    } else {
        None
    };

    let mut report = VerifyReport {
        n,
        g: m.g(),
        passed: true,
        square_identity,
        trace,
        eigen,
        oracle,
    };
    report.passed = report.results().iter().all(|(_, ok)| *ok);
    Ok(report)
}
