use schlicht_core::conformal::{
    eta, eta_deriv, inverse_koebe, inverse_koebe_deriv, koebe, koebe_deriv, omega_slit, omega_slit_deriv,
    psi_map, real_slit_map, real_slit_map_deriv, two_slit_deriv, two_slit_map, zeta, zeta_deriv, SlitParams,
    TwoSlitParams, UnitRotation,
};
use schlicht_core::geometry::{largest_disk, witness_disk, Domain, InscribedSearch, LargestDisk, SlitDiskDomain};
use schlicht_core::radius::{
    bloch_lower_bound, bloch_seminorm, classical_constants, divergence_profile, moebius_image_circle,
    refutation_report, registry, two_pole_report,
};
use schlicht_core::{Complex64, NumericSettings};
use serde::Serialize;

use crate::args::{Cli, Command, DomainKind, FnArgs, MapEvalArgs, MapKind, RadiusArgs};
use crate::error::CliError;
use crate::output::{num, Output, Table};
use crate::verify;

fn need(v: Option<f64>, flag: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Input(format!("--{flag} is required here")))
}

fn function(args: &FnArgs) -> Result<schlicht_core::conformal::FunctionHandle, CliError> {
    Ok(registry::builtin(&args.name, args.p, args.mu.value())?)
}

pub fn dispatch(cli: &Cli, settings: &NumericSettings) -> Result<Output, CliError> {
    match &cli.command {
        Command::MapEval(a) => map_eval(a, settings),
        Command::MapVerify(a) => verify::run(a, cli.seed, settings),
        Command::Seminorm(a) => {
            let f = function(&a.function)?;
            let est = bloch_seminorm(&f, &a.grid.spec())?;
            Output::new(&Labeled { function_label: f.label(), body: est })
        }
        Command::Divergence(a) => {
            let f = function(&a.function)?;
            let prof = divergence_profile(&f, a.depth)?;
            let rows = prof.points.iter().map(|p| vec![p.k.to_string(), num(p.t), num(p.value)]).collect();
            Ok(Output::new(&Labeled { function_label: f.label(), body: &prof })?
                .with_table(Table { header: vec!["k", "t", "value"], rows }))
        }
        Command::Radius(a) => radius(a, settings),
        Command::Refute(a) => Output::new(&refutation_report(a.p, a.target, cli.seed, settings)?),
        Command::TwoPole(a) => {
            let mu = a.mu.value().ok_or_else(|| CliError::Input("--mu-re/--mu-im are required".into()))?;
            Output::new(&two_pole_report(a.p, mu, a.target, settings)?)
        }
        Command::Constants => {
            let table = classical_constants();
            let rows = table
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.name.clone(),
                        e.symbol.clone(),
                        num(e.lower.value),
                        num(e.upper.value),
                        e.lower.printed.clone(),
                        e.upper.printed.clone(),
                        e.lower.citation.clone(),
                        e.upper.citation.clone(),
                    ]
                })
                .collect();
            Ok(Output::new(&table)?.with_table(Table {
                header: vec![
                    "name",
                    "symbol",
                    "lower",
                    "upper",
                    "lower_printed",
                    "upper_printed",
                    "lower_citation",
                    "upper_citation",
                ],
                rows,
            }))
        }
    }
}

#[derive(Serialize)]
struct Labeled<'a, T: Serialize> {
    function_label: &'a str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct MapValue {
    map: &'static str,
    z: Complex64,
    value: Complex64,
    derivative: Complex64,
}

fn map_eval(a: &MapEvalArgs, settings: &NumericSettings) -> Result<Output, CliError> {
    let z = Complex64::new(a.z_re, a.z_im);
    let theta = || need(a.theta, "theta");
    let (name, value, derivative) = match a.map {
        MapKind::Koebe => {
            let u = UnitRotation::from_angle(a.theta.unwrap_or(0.0));
            ("koebe", koebe(u, z)?, koebe_deriv(u, z)?)
        }
        MapKind::InverseKoebe => {
            let u = UnitRotation::from_angle(a.theta.unwrap_or(0.0));
            ("inverse-koebe", inverse_koebe(u, z)?, inverse_koebe_deriv(u, z)?)
        }
        MapKind::OmegaSlit => {
            let params = SlitParams::new(need(a.x, "x")?, theta()?, settings)?;
            ("omega-slit", omega_slit(&params, z)?, omega_slit_deriv(&params, z)?)
        }
        MapKind::Eta => {
            let p = need(a.p, "p")?;
            ("eta", eta(p, z)?, eta_deriv(p, z)?)
        }
        MapKind::Zeta => {
            let p = need(a.p, "p")?;
            ("zeta", zeta(p, z)?, zeta_deriv(p, z)?)
        }
        MapKind::RealSlit => {
            let p = need(a.p, "p")?;
            ("real-slit", real_slit_map(p, z)?, real_slit_map_deriv(p, z)?)
        }
        MapKind::TwoSlit => {
            let p = need(a.p, "p")?;
            let params = match a.mu.value() {
                Some(mu) => TwoSlitParams::from_poles(p, mu, settings)?,
                None => TwoSlitParams::new(p, need(a.x, "x")?, theta()?, settings)?,
            };
            ("two-slit", two_slit_map(&params, z)?, two_slit_deriv(&params, z)?)
        }
        MapKind::Psi => {
            let m = psi_map(need(a.p, "p")?, need(a.q, "q")?)?;
            ("psi", m.apply(z)?, m.deriv(z)?)
        }
    };
    Output::new(&MapValue { map: name, z, value, derivative })
}

fn radius(a: &RadiusArgs, settings: &NumericSettings) -> Result<Output, CliError> {
    let domain: Option<Domain> = if let Some(path) = &a.domain_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let d: Domain = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("invalid domain file {}: {e}", path.display())))?;
        d.validate()?;
        Some(d)
    } else if let Some(kind) = a.domain {
        let p = need(a.function.p, "p")?;
        Some(match kind {
            DomainKind::OmegaP => SlitDiskDomain::omega_p(p)?.into(),
            DomainKind::TwoSlit => {
                let mu = a.function.mu.value().ok_or_else(|| CliError::Input("--mu-re/--mu-im are required".into()))?;
                SlitDiskDomain::two_slit(&TwoSlitParams::from_poles(p, mu, settings)?, settings).into()
            }
            DomainKind::MoebiusImage => moebius_image_circle(p)?.domain.into(),
        })
    } else {
        None
    };

    let Some(domain) = domain else {
        let f = function(&a.function)?;
        return Output::new(&bloch_lower_bound(&f, &a.grid.spec())?);
    };
    #[derive(Serialize)]
    struct DomainRadius {
        domain: Domain,
        largest: LargestDisk,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<schlicht_core::geometry::DiskWitness>,
    }
    let largest = largest_disk(&domain, &InscribedSearch::default());
    let witness = match (&largest, a.target) {
        (LargestDisk::Unbounded, Some(r)) => Some(witness_disk(&domain, r)?),
        _ => None,
    };
    Output::new(&DomainRadius { domain, largest, witness })
}
