//! CSV and JSON writers.

use std::io::{self, Write};

use rotsphere_core::condensate::Subtraction;
use rotsphere_core::{BoundaryKind, CondensateGrid, QuantizedMode};
use serde_json::{json, Value};

use crate::config::Format;

fn bc_fields(bc: BoundaryKind) -> (&'static str, Option<i32>) {
    match bc {
        BoundaryKind::Spectral => ("spectral", None),
        BoundaryKind::Mit(v) => ("mit", Some(v.as_i32())),
    }
}

fn write_json<W: Write>(mut w: W, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)
}

/// Zeros `xi_{n,1..count}` of `j_n`.
pub fn write_zeros<W: Write>(mut w: W, format: Format, order: u32, zeros: &[f64]) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(w, "order,i,zero")?;
            for (k, z) in zeros.iter().enumerate() {
                writeln!(w, "{order},{},{z}", k + 1)?;
            }
            Ok(())
        }
        Format::Json => write_json(w, &json!({ "order": order, "zeros": zeros })),
    }
}

/// Modes in the given order with header `esign,two_j,two_mj,kappa,i,pR,E,Etilde,C`.
pub fn write_spectrum<W: Write>(
    mut w: W,
    format: Format,
    radius: f64,
    modes: &[QuantizedMode],
) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(w, "esign,two_j,two_mj,kappa,i,pR,E,Etilde,C")?;
            for m in modes {
                let q = &m.qn;
                writeln!(
                    w,
                    "{},{},{},{},{},{},{},{},{}",
                    q.esign().as_i8(),
                    q.two_j(),
                    q.two_mj(),
                    q.kappa(),
                    q.radial_index(),
                    m.pr(radius),
                    m.energy,
                    m.corotating_energy,
                    m.norm
                )?;
            }
            Ok(())
        }
        Format::Json => {
            let rows: Vec<Value> = modes
                .iter()
                .map(|m| {
                    let q = &m.qn;
                    json!({
                        "esign": q.esign().as_i8(),
                        "two_j": q.two_j(),
                        "two_mj": q.two_mj(),
                        "kappa": q.kappa(),
                        "i": q.radial_index(),
                        "pR": m.pr(radius),
                        "E": m.energy,
                        "Etilde": m.corotating_energy,
                        "C": m.norm,
                    })
                })
                .collect();
            write_json(w, &Value::Array(rows))
        }
    }
}

fn grid_metadata(grid: &CondensateGrid, label: Option<&str>) -> Value {
    let (bc, varsigma) = bc_fields(grid.boundary);
    let p = &grid.params;
    json!({
        "curve": label,
        "bc": bc,
        "varsigma": varsigma,
        "M": p.mass,
        "R": p.radius,
        "Omega": p.omega,
        "beta": p.beta,
        "mu": p.mu,
        "two_j_max": grid.truncation.two_j_max,
        "i_max": grid.truncation.i_max,
        "subtraction": match grid.subtraction {
            Subtraction::Vacuum => "vacuum",
            Subtraction::Raw => "raw",
        },
        "tail_estimate": grid.tail_estimate,
    })
}

/// Condensate grid as `r,theta,value` rows preceded by `#` metadata lines,
/// or a JSON object with the same metadata and rows.
pub fn write_condensate<W: Write>(
    mut w: W,
    format: Format,
    grid: &CondensateGrid,
    label: Option<&str>,
) -> io::Result<()> {
    let meta = grid_metadata(grid, label);
    match format {
        Format::Csv => {
            if let Value::Object(map) = &meta {
                for (k, v) in map {
                    if !v.is_null() {
                        writeln!(w, "# {k} = {v}")?;
                    }
                }
            }
            writeln!(w, "r,theta,value")?;
            for (ti, &theta) in grid.theta_values.iter().enumerate() {
                for (ri, &r) in grid.r_values.iter().enumerate() {
                    writeln!(w, "{r},{theta},{:e}", grid.values[ti][ri])?;
                }
            }
            Ok(())
        }
        Format::Json => {
            let mut rows = Vec::with_capacity(grid.r_values.len() * grid.theta_values.len());
            for (ti, &theta) in grid.theta_values.iter().enumerate() {
                for (ri, &r) in grid.r_values.iter().enumerate() {
                    rows.push(json!({ "r": r, "theta": theta, "value": grid.values[ti][ri] }));
                }
            }
            write_json(w, &json!({ "parameters": meta, "rows": rows }))
        }
    }
}
