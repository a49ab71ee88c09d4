//! `zetaval value ...`

use std::io::Write;

use zetaval_core::bernoulli::{bernoulli_number, EulerParameter};
use zetaval_core::dirichlet::generalized_bernoulli_number;
use zetaval_core::lvalues::{
    chi4_value, hurwitz_value, l_value, lerch_special, twisted_value, zeta_even_positive, zeta_value,
};
use zetaval_core::{CharacterLiteral, DirichletCharacter, Rational, Route};

use crate::{CliError, CliResult, ValueArgs, ValueKind, EXIT_OK};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require<T: Clone>(v: &Option<T>, flag: &str, kind: ValueKind) -> CliResult<T> {
    v.clone()
        .ok_or_else(|| usage(format!("`value {kind:?}` needs {flag}").to_lowercase()))
}

/// `s ≤ 0` as the index `n = -s`.
fn non_positive(s: i64) -> CliResult<usize> {
    if s > 0 {
        return Err(usage(format!(
            "--n {s}: only non-positive arguments have exact rational values here"
        )));
    }
    Ok(s.unsigned_abs() as usize)
}

fn non_negative(n: i64) -> CliResult<usize> {
    usize::try_from(n).map_err(|_| usage(format!("--n {n}: index must be non-negative")))
}

fn character(args: &ValueArgs) -> CliResult<DirichletCharacter<Rational>> {
    let literal: CharacterLiteral = require(&args.character, "--char", args.kind)?.parse()?;
    Ok(literal.build()?)
}

pub fn cmd_value(args: &ValueArgs, out: &mut dyn Write) -> CliResult<i32> {
    let route: Option<Route> = args.route.as_deref().map(str::parse).transpose()?;
    let chosen = route.unwrap_or(Route::ClosedForm);
    let n = || require(&args.n, "--n", args.kind);
    let value: String = match args.kind {
        ValueKind::Zeta => {
            let s = n()?;
            if s > 0 {
                if s % 2 == 1 || chosen != Route::ClosedForm {
                    return Err(usage(format!(
                        "ζ({s}) has no exact closed form here; use s ≤ 0 or a positive even s"
                    )));
                }
                zeta_even_positive(s as usize / 2)?.to_string()
            } else {
                zeta_value(non_positive(s)?, chosen)?.value.to_string()
            }
        }
        ValueKind::Hurwitz => {
            let a = require(&args.a, "--a", args.kind)?;
            hurwitz_value(non_positive(n()?)?, &a, chosen)?.value.to_string()
        }
        ValueKind::Lvalue => l_value(&character(args)?, non_positive(n()?)?, chosen)?
            .value
            .to_string(),
        ValueKind::Twisted => {
            let a = args.a.clone().unwrap_or_else(Rational::one);
            twisted_value(&character(args)?, non_positive(n()?)?, &a, chosen)?
                .value
                .to_string()
        }
        ValueKind::Chi4 => chi4_value(non_positive(n()?)?, chosen)?.value.to_string(),
        ValueKind::Lerch => {
            if route.is_some_and(|r| r != Route::EulerPoly) {
                return Err(usage("lerch values are only available by the euler-poly route"));
            }
            let k = require(&args.k, "--k", args.kind)? as usize;
            let a = require(&args.a, "--a", args.kind)?;
            let c = args.c.clone().unwrap_or_else(Rational::one);
            lerch_special(&EulerParameter::new(c)?, k, &a)?.to_string()
        }
        ValueKind::Bernoulli => {
            reject_route(route)?;
            bernoulli_number(non_negative(n()?)?).to_string()
        }
        ValueKind::Gbernoulli => {
            reject_route(route)?;
            generalized_bernoulli_number(&character(args)?, non_negative(n()?)?).to_string()
        }
    };
    writeln!(out, "{value}")?;
    if let Some(r) = route {
        writeln!(out, "route: {r}")?;
    }
    Ok(EXIT_OK)
}

fn reject_route(route: Option<Route>) -> CliResult<()> {
    match route {
        Some(r) if r != Route::ClosedForm => Err(usage(format!("route {r} does not apply to Bernoulli numbers"))),
        _ => Ok(()),
    }
}
