//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (infeasible designs, bad
//! design files), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::contact::{
    holding_max_offset, max_capacities, required_grip_force, GraspConfig, GraspState, HoldingOffset,
};
use crate::design::{parse_design, Design};
use crate::error::{Error, Result};
use crate::format::{deg, num, INFEASIBLE};
use crate::grid::{Interval, SweepRange};
use crate::payload::{can_lift, max_payload, payload_sweep, ObjectSpec};
use crate::pose::gamma_sweep;
use crate::sizing::{check_feasible, SizingProblem, SizingResult};

#[derive(Debug, Parser)]
#[command(
    name = "gripkit",
    version,
    about = "Design analysis for a spring-loaded parallel gripper tool"
)]
struct Cli {
    /// Worker threads for sweeps and grid searches (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a design against the interference and installation constraints.
    Validate { design: PathBuf },
    /// Holding limit, grip force in both configurations and payload limit.
    Analyze { design: PathBuf },
    /// Payload limit over a grid of tool angles and grasp offsets (CSV).
    PayloadSweep {
        design: PathBuf,
        /// Tool angle range, start:stop:step (append `deg` for degrees).
        #[arg(long)]
        alpha: String,
        /// Grasp offset range in metres, start:stop:step.
        #[arg(long)]
        d: String,
    },
    /// Maximise the stroke for the design's fixed open width.
    Optimize {
        design: PathBuf,
        /// Base gap bounds lo:hi in metres [default: d_axis+2r_edge:w_init/2].
        #[arg(long)]
        m: Option<String>,
        /// Linkage length bounds lo:hi in metres [default: d_axis+2r_edge:w_init].
        #[arg(long)]
        r: Option<String>,
        /// Opening angle bounds lo:hi (append `deg` for degrees).
        #[arg(long, default_value = "5:85deg")]
        theta_init: String,
        /// Largest acceptable grip force over the stroke in newtons, or `inf`.
        #[arg(long, default_value = "inf")]
        grip_budget: String,
    },
    /// Torque margin over the hand-tool angle (CSV).
    PoseSweep {
        design: PathBuf,
        /// Number of uniformly spaced samples on [0, 90] degrees.
        #[arg(long, default_value_t = 91)]
        samples: usize,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 1;
        }
    };
    let mut buf = Vec::new();
    let mut notes = Vec::new();
    let outcome = pool.install(|| dispatch(&cli.command, &mut buf, &mut notes));
    let _ = out.write_all(&buf);
    let _ = err.write_all(&notes);
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<Design> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        key: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_design(&text)
}

fn object_of(design: &Design) -> Result<ObjectSpec> {
    design.object.ok_or_else(|| Error::Parse {
        line: 0,
        key: "object".into(),
        message: "this command needs an [object] section".into(),
    })
}

type Out<'a> = &'a mut Vec<u8>;

fn dispatch(command: &Command, out: Out, notes: Out) -> Result<i32> {
    match command {
        Command::Validate { design } => validate(&load(design)?, out),
        Command::Analyze { design } => analyze(&load(design)?, out, notes),
        Command::PayloadSweep { design, alpha, d } => {
            let alphas: SweepRange = alpha.parse()?;
            let ds: SweepRange = d.parse()?;
            write_payload_sweep(&load(design)?, &alphas, &ds, out)
        }
        Command::Optimize {
            design,
            m,
            r,
            theta_init,
            grip_budget,
        } => {
            let design = load(design)?;
            let problem =
                sizing_problem(&design, m.as_deref(), r.as_deref(), theta_init, grip_budget)?;
            let result = problem.maximize_stroke()?;
            write_sizing(&result, out);
            Ok(0)
        }
        Command::PoseSweep { design, samples } => {
            write_pose_sweep(&load(design)?, *samples, out, notes)
        }
    }
}

fn line(out: Out, key: &str, value: impl AsRef<str>) {
    let _ = writeln!(out, "{key} = {}", value.as_ref());
}

fn validate(design: &Design, out: Out) -> Result<i32> {
    let violations = check_feasible(&design.tool);
    line(out, "violations", violations.len().to_string());
    for v in &violations {
        line(out, v.constraint.name(), num(v.margin));
    }
    Ok(if violations.is_empty() { 0 } else { 1 })
}

/// Analysis report lines, in output order. Quantities that cannot be
/// computed carry the error instead.
pub fn analysis(design: &Design) -> Result<Vec<(&'static str, Result<String>)>> {
    let object = object_of(design)?;
    let (max_f, max_t) = max_capacities(&design.contact, design.grasp.f_n);
    let mut rows: Vec<(&'static str, Result<String>)> = vec![
        ("max_friction_n", Ok(num(max_f))),
        ("max_torque_nm", Ok(num(max_t))),
        (
            "holding_max_offset_m",
            holding_max_offset(&design.contact, &design.grasp).map(|h| match h {
                HoldingOffset::Bounded(d) => num(d),
                HoldingOffset::Unbounded => "unbounded".into(),
            }),
        ),
    ];
    for (key, config) in [
        ("required_grip_force_backward_n", GraspConfig::BackwardBase),
        ("required_grip_force_forward_n", GraspConfig::ForwardBase),
    ] {
        let state = GraspState {
            config,
            ..design.grasp
        };
        rows.push((
            key,
            required_grip_force(&design.tool, &design.spring, &state).map(num),
        ));
    }
    let payload = max_payload(&design.contact, &design.grasp, object.d_obj);
    rows.push((
        "max_payload_n",
        payload
            .as_ref()
            .map(|p| num(p.max_weight))
            .map_err(Clone::clone),
    ));
    rows.push((
        "payload_clamped",
        payload
            .as_ref()
            .map(|p| p.clamped.to_string())
            .map_err(Clone::clone),
    ));
    rows.push((
        "object_liftable",
        Ok(can_lift(&design.contact, &design.grasp, &object).to_string()),
    ));
    Ok(rows)
}

fn analyze(design: &Design, out: Out, notes: Out) -> Result<i32> {
    let mut code = 0;
    for (key, value) in analysis(design)? {
        match value {
            Ok(v) => line(out, key, v),
            Err(e) => {
                line(out, key, INFEASIBLE);
                let _ = writeln!(notes, "{key}: {e}");
                code = code.max(e.exit_code());
            }
        }
    }
    Ok(code)
}

fn write_payload_sweep(
    design: &Design,
    alphas: &SweepRange,
    ds: &SweepRange,
    out: Out,
) -> Result<i32> {
    let object = object_of(design)?;
    let cells = payload_sweep(&design.contact, &design.grasp, object.d_obj, alphas, ds);
    let _ = writeln!(out, "alpha_deg,d_m,max_weight_n");
    for cell in cells {
        let weight = match cell.outcome {
            Ok(p) => num(p.max_weight),
            Err(_) => INFEASIBLE.to_string(),
        };
        let _ = writeln!(out, "{},{},{}", deg(cell.alpha), num(cell.d), weight);
    }
    Ok(0)
}

fn parse_budget(text: &str) -> Result<f64> {
    match text.trim() {
        "inf" | "infinity" | "none" => Ok(f64::INFINITY),
        other => other
            .parse::<f64>()
            .ok()
            .filter(|b| *b > 0.0)
            .ok_or_else(|| {
                Error::Usage(format!(
                    "grip budget must be a positive number or inf, got {text:?}"
                ))
            }),
    }
}

fn sizing_problem(
    design: &Design,
    m: Option<&str>,
    r: Option<&str>,
    theta_init: &str,
    grip_budget: &str,
) -> Result<SizingProblem> {
    let tool = &design.tool;
    let span = tool.d_axis + 2.0 * tool.r_edge;
    let m_bounds = match m {
        Some(text) => text.parse()?,
        None => Interval::new(span, (tool.w_init / 2.0).max(span))?,
    };
    let r_bounds = match r {
        Some(text) => text.parse()?,
        None => Interval::new(span, tool.w_init.max(span))?,
    };
    Ok(SizingProblem {
        d_axis: tool.d_axis,
        r_edge: tool.r_edge,
        k: tool.k,
        w_init: tool.w_init,
        v: tool.v,
        m_bounds,
        r_bounds,
        theta_init_bounds: theta_init.parse()?,
        grip_budget: parse_budget(grip_budget)?,
        spring: design.spring,
        grasp: design.grasp,
    })
}

fn write_sizing(result: &SizingResult, out: Out) {
    let d = &result.dims;
    line(out, "stroke_m", num(result.stroke));
    let active: Vec<&str> = result.active_constraints.iter().map(|c| c.name()).collect();
    line(out, "active_constraints", active.join(","));
    let _ = writeln!(out, "[tool]");
    for (key, value) in [
        ("m", num(d.m)),
        ("r", num(d.r)),
        ("theta_init", format!("{}deg", deg(d.theta_init))),
        ("theta_end", format!("{}deg", deg(d.theta_end))),
        ("h", num(d.h)),
        ("p", num(d.p)),
        ("q", num(d.q)),
        ("k", num(d.k)),
        ("d_axis", num(d.d_axis)),
        ("r_edge", num(d.r_edge)),
        ("v", num(d.v)),
        ("w_init", num(d.w_init)),
    ] {
        line(out, key, value);
    }
}

fn write_pose_sweep(design: &Design, samples: usize, out: Out, notes: Out) -> Result<i32> {
    let curve = gamma_sweep(&design.contact, &design.grasp, samples)?;
    let _ = writeln!(out, "gamma_deg,margin_nm");
    for s in &curve.samples {
        let margin = s.margin.map_or_else(|| INFEASIBLE.to_string(), num);
        let _ = writeln!(out, "{},{}", deg(s.gamma), margin);
    }
    let _ = writeln!(
        notes,
        "peak_gamma_deg = {}, peak_margin_nm = {}",
        deg(curve.peak_gamma),
        num(curve.peak_margin)
    );
    Ok(0)
}
