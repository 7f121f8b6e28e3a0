use crate::error::CliError;
use crate::model::ModelFile;
use crate::report::{
    coefficients, table_entries, terms, ClassSection, ModelSection, OracleSection, ReportFile,
    ResidueSection, ThetaEntry, ThetaSection, TranslationResidual, WittenSection,
};
use num_complex::Complex64;
use std::collections::BTreeMap;
use std::time::Instant;
use witgen_core::genus::{
    c1_y, genus_report, p1_y, residue_sum_demo, string_check, w2_y, witten_bundle_oracle,
    ResidueOptions, DEFAULT_SEED, ORACLE_MAX_Q_ORDER,
};
use witgen_core::ringcore::rational_to_string;
use witgen_core::theta::{
    jacobi_identity_residual, translation_law_residual, ThetaKind, DEFAULT_PRODUCT_TERMS,
};

/// A report together with an optional failure that should set the exit status.
pub struct CommandOutput {
    pub report: ReportFile,
    pub failure: Option<CliError>,
}

impl From<ReportFile> for CommandOutput {
    fn from(report: ReportFile) -> Self {
        CommandOutput {
            report,
            failure: None,
        }
    }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn cmd_check(model: &ModelFile) -> Result<CommandOutput, CliError> {
    let ci = model.build()?;
    let obstructions = string_check(&ci);
    Ok(ReportFile {
        command: "check".into(),
        model: Some(ModelSection::new(&ci)),
        obstructions: Some((&obstructions).into()),
        classes: Some(ClassSection {
            c1: terms(&c1_y(&ci)),
            w2: terms(&w2_y(&ci)),
            p1: terms(&p1_y(&ci)?),
        }),
        ..Default::default()
    }
    .into())
}

#[derive(Clone, Debug, Default)]
pub struct WittenArgs {
    pub q_order: Option<usize>,
    pub seed: Option<u64>,
    pub with_oracle: bool,
    pub with_table: bool,
    pub timings: bool,
}

pub fn cmd_witten(model: &ModelFile, args: &WittenArgs) -> Result<CommandOutput, CliError> {
    let start = Instant::now();
    let ci = model.build()?;
    let q_order = args
        .q_order
        .or(model.options.q_order)
        .unwrap_or(if ci.picard_rank() == 1 { 8 } else { 4 });
    let seed = args.seed.or(model.options.seed).unwrap_or(DEFAULT_SEED);
    let rep = genus_report(&ci, q_order, seed)?;

    let mut failure = None;
    let mut timings = BTreeMap::new();
    let oracle = if args.with_oracle {
        let t = Instant::now();
        let n = q_order.min(ORACLE_MAX_Q_ORDER);
        let o = witten_bundle_oracle(&ci, &rep.table, n)?;
        timings.insert("oracle".to_string(), ms(t));
        let agrees = o.coeffs() == &rep.witten_genus.coeffs()[..=n];
        if !agrees {
            failure = Some(CliError::inconsistency(format!(
                "bundle oracle disagrees with the theta pipeline through q^{n}"
            )));
        }
        Some(OracleSection {
            q_order: n,
            coefficients: coefficients(&o),
            agrees,
        })
    } else {
        None
    };
    timings.insert(
        "table".into(),
        rep.metadata.timings.table.as_secs_f64() * 1e3,
    );
    timings.insert(
        "witten".into(),
        rep.metadata.timings.witten.as_secs_f64() * 1e3,
    );
    timings.insert("ahat".into(), rep.metadata.timings.ahat.as_secs_f64() * 1e3);
    timings.insert("total".into(), ms(start));

    let report = ReportFile {
        command: "witten".into(),
        model: Some(ModelSection::new(&ci)),
        obstructions: Some((&rep.obstructions).into()),
        classes: Some(ClassSection {
            c1: terms(&c1_y(&ci)),
            w2: terms(&rep.w2),
            p1: terms(&rep.p1),
        }),
        witten: Some(WittenSection {
            q_order,
            seed,
            coefficients: coefficients(&rep.witten_genus),
            ahat: rational_to_string(&rep.ahat),
            real_dim_divisible_by_four: rep.metadata.real_dim_divisible_by_four,
            oracle,
            table: args.with_table.then(|| table_entries(&rep.table)),
        }),
        timings_ms: args.timings.then_some(timings),
        ..Default::default()
    };
    Ok(CommandOutput { report, failure })
}

/// Points where the translation laws are sampled.
pub const THETA_SAMPLE_POINTS: [(f64, f64); 3] = [(0.13, 0.07), (0.41, -0.23), (-0.29, 0.11)];

pub fn cmd_theta_verify(taus: &[Complex64], tol: f64) -> Result<CommandOutput, CliError> {
    let mut entries = Vec::with_capacity(taus.len());
    for &tau in taus {
        let jacobi = jacobi_identity_residual(tau, DEFAULT_PRODUCT_TERMS)?;
        let mut translations = Vec::new();
        for kind in ThetaKind::ALL {
            for m in -1..=1 {
                for n in -1..=1 {
                    let mut worst: f64 = 0.0;
                    for &(re, im) in &THETA_SAMPLE_POINTS {
                        let v = Complex64::new(re, im);
                        worst = worst.max(translation_law_residual(
                            kind,
                            v,
                            tau,
                            m,
                            n,
                            DEFAULT_PRODUCT_TERMS,
                        )?);
                    }
                    translations.push(TranslationResidual {
                        kind: kind.name().into(),
                        m,
                        n,
                        residual: worst,
                    });
                }
            }
        }
        let max_translation = translations.iter().map(|t| t.residual).fold(0.0, f64::max);
        entries.push(ThetaEntry {
            tau: [tau.re, tau.im],
            jacobi_residual: jacobi,
            max_translation_residual: max_translation,
            pass: jacobi < tol && max_translation < tol,
            translations,
        });
    }
    let pass = entries.iter().all(|e| e.pass);
    let failure = (!pass)
        .then(|| CliError::inconsistency(format!("theta identities exceed tolerance {tol:e}")));
    Ok(CommandOutput {
        report: ReportFile {
            command: "theta-verify".into(),
            theta: Some(ThetaSection { tol, entries, pass }),
            ..Default::default()
        },
        failure,
    })
}

pub fn cmd_residue_demo(model: &ModelFile, tau: Complex64) -> Result<CommandOutput, CliError> {
    let ci = model.build()?;
    let r = residue_sum_demo(&ci, tau, &ResidueOptions::default())?;
    Ok(ReportFile {
        command: "residue-demo".into(),
        model: Some(ModelSection::new(&ci)),
        obstructions: Some((&string_check(&ci)).into()),
        residue: Some(ResidueSection {
            tau: [tau.re, tau.im],
            is_elliptic: r.is_elliptic,
            max_deviation: r.max_deviation,
            residue_sum: [r.residue_sum.re, r.residue_sum.im],
            poles: r.poles.iter().map(|p| [p.re, p.im]).collect(),
        }),
        ..Default::default()
    }
    .into())
}
