//! Implementations of the `bms` subcommands.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bms_cli::io::{FunctionalJson, MatrixJson};
use bms_cli::verify::{self, Level};
use bms_core::little::{self, CharacterRep, LittleGroup};
use bms_core::{fourier, Error};

use crate::{EXIT_DOMAIN_ERROR, EXIT_INPUT_ERROR, EXIT_VERIFY_FAIL};

fn input_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT_ERROR)
}

fn domain_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_DOMAIN_ERROR)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn emit(out: Option<PathBuf>, text: &str) -> Result<(), ExitCode> {
    if let Some(path) = out {
        std::fs::write(&path, text)
            .map_err(|e| input_err(format!("cannot write {}: {e}", path.display())))?;
    }
    print!("{text}");
    Ok(())
}

pub fn verify(seed: u64, level: &str, out: Option<PathBuf>, mutate_kappa: bool) -> ExitCode {
    let Some(level) = Level::parse(level) else {
        return input_err(format!("unknown level {level:?}; expected quick or full"));
    };
    let started = Instant::now();
    let report = verify::run(seed, level, mutate_kappa);
    // wall time goes to stderr so stdout stays deterministic for a fixed seed
    eprintln!("elapsed: {:.2}s", started.elapsed().as_secs_f64());
    let text = report.render();
    if let Err(code) = emit(out, &text) {
        return code;
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    }
}

pub fn little_group(input: &Path, tol: Option<f64>) -> ExitCode {
    let json: FunctionalJson = match read_json(input) {
        Ok(j) => j,
        Err(e) => return input_err(e),
    };
    let f = json.to_functional();
    let tol = tol.unwrap_or_else(|| little::default_support_tol(&f));
    match little::detect_stabilizer_in_so2(&f, tol) {
        Ok(group) => {
            let (name, residual) = match group {
                LittleGroup::So2 => (
                    serde_json::json!("SO2"),
                    little::invariance_residual(&f, LittleGroup::So2),
                ),
                LittleGroup::Cyclic(n) => (
                    serde_json::json!({ "Cn": n }),
                    little::invariance_residual(&f, LittleGroup::Cyclic(n)),
                ),
            };
            println!(
                "{}",
                serde_json::json!({ "little_group": name, "residual": residual })
            );
            ExitCode::SUCCESS
        }
        Err(e @ Error::ZeroFunctional) => domain_err(e),
        Err(e) => domain_err(e),
    }
}

pub fn blueshift(matrix: &Path, samples: usize, out: Option<PathBuf>) -> ExitCode {
    let json: MatrixJson = match read_json(matrix) {
        Ok(j) => j,
        Err(e) => return input_err(e),
    };
    let g = match json.to_matrix() {
        Ok(g) => g,
        Err(e) => return input_err(e),
    };
    if samples == 0 {
        return input_err("samples must be positive");
    }
    let mut text = String::from("theta,kappa,kappa_inv_sq\n");
    for j in 0..samples {
        let theta = std::f64::consts::TAU * j as f64 / samples as f64;
        let k = g.kappa(bms_core::ProjectivePoint::new(theta));
        text.push_str(&format!("{theta:.17e},{k:.17e},{:.17e}\n", k.powi(-2)));
    }
    match emit(out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

pub fn act(
    matrix: &Path,
    functional: &Path,
    dual: bool,
    modes: usize,
    quad: Option<usize>,
) -> ExitCode {
    let mj: MatrixJson = match read_json(matrix) {
        Ok(j) => j,
        Err(e) => return input_err(e),
    };
    let g = match mj.to_matrix() {
        Ok(g) => g,
        Err(e) => return input_err(e),
    };
    let fj: FunctionalJson = match read_json(functional) {
        Ok(j) => j,
        Err(e) => return input_err(e),
    };
    let f = fj.to_functional();
    if modes == 0 {
        return input_err("modes must be positive");
    }
    let quad = quad.unwrap_or(8 * modes.max(4));
    if quad <= 2 * modes {
        return input_err("quad must exceed twice the mode count");
    }
    let output = if dual {
        fourier::act_dual(&g, &f, modes, quad)
    } else {
        fourier::act(&g, &f, modes, quad)
    };
    eprintln!("tail_energy: {:.3e}", output.tail_energy);
    if output.truncation_warning() {
        eprintln!("warning: truncation tail exceeds 1e-8 of the output norm; raise --modes");
    }
    println!(
        "{}",
        serde_json::to_string(&FunctionalJson::from_functional(&output.functional)).unwrap()
    );
    ExitCode::SUCCESS
}

pub fn character_table(group: &str, labels: Option<&str>, out: Option<PathBuf>) -> ExitCode {
    let parsed = if group.eq_ignore_ascii_case("so2") {
        LittleGroup::So2
    } else {
        match group.parse::<u32>() {
            // odd orders are an input error: no such little group exists
            Ok(n) => match LittleGroup::cyclic(n) {
                Ok(g) => g,
                Err(e) => return input_err(e),
            },
            Err(_) => return input_err(format!("group must be \"so2\" or an even integer, got {group:?}")),
        }
    };
    let (lo, hi) = match labels {
        Some(text) => match parse_range(text) {
            Some(r) => r,
            None => return input_err(format!("labels must look like \"lo..hi\", got {text:?}")),
        },
        None => match parsed {
            LittleGroup::So2 => (-3, 3),
            LittleGroup::Cyclic(n) => (0, n as i64 - 1),
        },
    };
    if lo > hi {
        return input_err("empty label range");
    }

    let mut text = String::new();
    match parsed {
        LittleGroup::So2 => {
            text.push_str("label,theta,re,im\n");
            for label in lo..=hi {
                let rep = CharacterRep::new(LittleGroup::So2, label);
                for j in 0..8 {
                    let theta = std::f64::consts::TAU * j as f64 / 8.0;
                    let v = rep.eval_angle(theta);
                    text.push_str(&format!("{label},{theta:.17e},{:.17e},{:.17e}\n", v.re, v.im));
                }
            }
        }
        LittleGroup::Cyclic(n) => {
            text.push_str("label,j,re,im\n");
            for label in lo..=hi {
                let rep = CharacterRep::new(parsed, label);
                for j in 0..n {
                    let v = rep.eval_index(j).unwrap();
                    text.push_str(&format!("{label},{j},{:.17e},{:.17e}\n", v.re, v.im));
                }
            }
            // orthogonality footer over the requested labels
            let mut worst = 0.0f64;
            for l1 in lo..=hi {
                for l2 in lo..=hi {
                    let r1 = CharacterRep::new(parsed, l1);
                    let r2 = CharacterRep::new(parsed, l2);
                    let sum: num_complex::Complex64 = (0..n)
                        .map(|j| r1.eval_index(j).unwrap() * r2.eval_index(j).unwrap().conj())
                        .sum();
                    let avg = sum / n as f64;
                    let expect = if (l1 - l2).rem_euclid(n as i64) == 0 {
                        1.0
                    } else {
                        0.0
                    };
                    worst = worst.max((avg - expect).norm());
                }
            }
            text.push_str(&format!("# orthogonality_max_error={worst:.3e}\n"));
        }
    }
    match emit(out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}

fn parse_range(text: &str) -> Option<(i64, i64)> {
    let (lo, hi) = text.split_once("..")?;
    Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?))
}
