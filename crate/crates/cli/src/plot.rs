//! `zetaval plot ...`: sampled partial-sum polynomials.

use std::fs;
use std::io::Write;

use serde::Serialize;
use zetaval_core::sums::{phi, s_n, s_na};
use zetaval_core::{PartialSumSpec, Polynomial, Rational};

use crate::decimal::round_sig;
use crate::{CliError, CliResult, PlotArgs, PlotFormat, PlotTarget, EXIT_OK};

/// Significant digits of the decimal columns.
pub const DIGITS: u32 = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSeries {
    pub label: String,
    pub samples: Vec<(Rational, Rational)>,
}

#[derive(Serialize)]
struct JsonPoint {
    x: String,
    y: String,
    xf: f64,
    yf: f64,
}

#[derive(Serialize)]
struct JsonSeries {
    label: String,
    points: Vec<JsonPoint>,
}

#[derive(Serialize)]
struct JsonPlot {
    series: Vec<JsonSeries>,
}

pub fn parse_plot_range(s: &str) -> CliResult<(Rational, Rational)> {
    let bad = |why: &str| CliError::Usage(format!("bad range {s:?}: {why}"));
    let (lo, hi) = s.split_once("..").ok_or_else(|| bad("expected lo..hi"))?;
    let lo: Rational = lo.trim().parse().map_err(|_| bad("endpoints must be rationals"))?;
    let hi: Rational = hi.trim().parse().map_err(|_| bad("endpoints must be rationals"))?;
    if lo >= hi {
        return Err(bad("lo must be below hi"));
    }
    Ok((lo, hi))
}

/// `samples` equally spaced abscissae from `lo` to `hi` inclusive.
pub fn abscissae(lo: &Rational, hi: &Rational, samples: usize) -> Vec<Rational> {
    let step = (hi - lo) / Rational::from(samples as u64 - 1);
    (0..samples).map(|i| lo + &step * Rational::from(i as u64)).collect()
}

pub fn build_series(args: &PlotArgs) -> CliResult<Vec<PlotSeries>> {
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let (lo, hi) = parse_plot_range(&args.range)?;
    let xs = abscissae(&lo, &hi, args.samples);
    let mut series = Vec::new();
    for &n in &args.n {
        let (label, poly): (String, Polynomial<Rational>) = match args.target {
            PlotTarget::Sn => (format!("S_{n}"), s_n(n)),
            PlotTarget::Sna => {
                let a = args
                    .a
                    .clone()
                    .ok_or_else(|| CliError::Usage("`plot sna` needs --a".into()))?;
                let spec = PartialSumSpec::new(n, a.clone())?;
                (format!("S_{n}(a={a})"), s_na(&spec))
            }
            PlotTarget::Phi => (format!("phi_{n}"), phi(n)),
        };
        let samples = xs.iter().map(|x| (x.clone(), poly.evaluate(x))).collect();
        series.push(PlotSeries { label, samples });
    }
    Ok(series)
}

fn float(q: &Rational) -> f64 {
    round_sig(q, DIGITS).parse().expect("decimal rendering parses")
}

pub fn render(series: &[PlotSeries], format: PlotFormat) -> String {
    match format {
        PlotFormat::Csv => {
            let mut s = String::from("label,x,y,xf,yf\n");
            for ser in series {
                for (x, y) in &ser.samples {
                    s += &format!(
                        "{},{x},{y},{},{}\n",
                        ser.label,
                        round_sig(x, DIGITS),
                        round_sig(y, DIGITS)
                    );
                }
            }
            s
        }
        PlotFormat::Json => {
            let plot = JsonPlot {
                series: series
                    .iter()
                    .map(|ser| JsonSeries {
                        label: ser.label.clone(),
                        points: ser
                            .samples
                            .iter()
                            .map(|(x, y)| JsonPoint {
                                x: x.to_string(),
                                y: y.to_string(),
                                xf: float(x),
                                yf: float(y),
                            })
                            .collect(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&plot).expect("plot serializes") + "\n"
        }
    }
}

pub fn cmd_plot(args: &PlotArgs, out: &mut dyn Write) -> CliResult<i32> {
    let series = build_series(args)?;
    let from_extension = args
        .out
        .as_ref()
        .and_then(|p| p.extension())
        .is_some_and(|e| e == "json");
    let format = args.format.unwrap_or(if from_extension {
        PlotFormat::Json
    } else {
        PlotFormat::Csv
    });
    let text = render(&series, format);
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))?;
            writeln!(out, "wrote {} series to {}", series.len(), path.display())?;
        }
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn spacing() {
        assert_eq!(abscissae(&q("0"), &q("1"), 3), vec![q("0"), q("1/2"), q("1")]);
        assert_eq!(abscissae(&q("1/2"), &q("3/2"), 2), vec![q("1/2"), q("3/2")]);
    }

    #[test]
    fn range_errors() {
        assert!(parse_plot_range("1..0").is_err());
        assert!(parse_plot_range("0-1").is_err());
        assert_eq!(parse_plot_range("-1/2..1").unwrap(), (q("-1/2"), q("1")));
    }
}
