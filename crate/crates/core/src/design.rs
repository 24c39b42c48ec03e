//! Design files: INI-style `key = value` text in `[tool]`, `[spring]`,
//! `[contact]`, `[grasp]` and optional `[object]` sections, with `#`
//! comments.
//!
//! Angle keys take radians, or degrees with a `deg` suffix. Force keys take
//! newtons, or a mass with a `kg` suffix converted at standard gravity.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::contact::{ContactModel, GraspConfig, GraspState};
use crate::error::{Error, Result};
use crate::mechanism::{SpringSpec, ToolDimensions};
use crate::payload::ObjectSpec;

/// Standard gravity, m/s².
pub const STANDARD_GRAVITY: f64 = 9.80665;

#[derive(Debug, Clone, PartialEq)]
pub struct Design {
    pub tool: ToolDimensions,
    pub spring: SpringSpec,
    pub contact: ContactModel,
    pub grasp: GraspState,
    pub object: Option<ObjectSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Plain,
    Angle,
    Force,
    Config,
}

struct Key {
    name: &'static str,
    kind: Kind,
    default: Option<f64>,
}

const fn key(name: &'static str, kind: Kind) -> Key {
    Key {
        name,
        kind,
        default: None,
    }
}

const TOOL: &[Key] = &[
    key("m", Kind::Plain),
    key("r", Kind::Plain),
    key("theta_init", Kind::Angle),
    key("theta_end", Kind::Angle),
    key("h", Kind::Plain),
    key("p", Kind::Plain),
    // Defaults to d_axis + 2 r_edge when omitted.
    Key {
        name: "q",
        kind: Kind::Plain,
        default: Some(f64::NAN),
    },
    key("k", Kind::Plain),
    key("d_axis", Kind::Plain),
    key("r_edge", Kind::Plain),
    Key {
        name: "v",
        kind: Kind::Plain,
        default: Some(1.0),
    },
    key("w_init", Kind::Plain),
];
const SPRING: &[Key] = &[key("kappa", Kind::Plain), key("beta", Kind::Angle)];
const CONTACT: &[Key] = &[key("mu", Kind::Plain), key("e", Kind::Plain)];
const GRASP: &[Key] = &[
    key("f_n", Kind::Force),
    key("g_tool", Kind::Force),
    key("alpha", Kind::Angle),
    key("gamma", Kind::Angle),
    key("d", Kind::Plain),
    key("d_com", Kind::Plain),
    key("theta", Kind::Angle),
    key("config", Kind::Config),
];
const OBJECT: &[Key] = &[key("g_obj", Kind::Force), key("d_obj", Kind::Plain)];

const SECTIONS: &[(&str, &[Key])] = &[
    ("tool", TOOL),
    ("spring", SPRING),
    ("contact", CONTACT),
    ("grasp", GRASP),
    ("object", OBJECT),
];

fn parse_error(line: usize, key: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        key: key.to_string(),
        message: message.into(),
    }
}

struct Entry {
    line: usize,
    raw: String,
}

struct Section {
    line: usize,
    entries: BTreeMap<String, Entry>,
}

fn parse_value(kind: Kind, raw: &str, line: usize, name: &str) -> Result<f64> {
    let (body, scale) = match kind {
        Kind::Angle => match raw.strip_suffix("deg") {
            Some(b) => (b, PI / 180.0),
            None => (raw.strip_suffix("rad").unwrap_or(raw), 1.0),
        },
        Kind::Force => match raw.strip_suffix("kg") {
            Some(b) => (b, STANDARD_GRAVITY),
            None => (raw.strip_suffix('N').unwrap_or(raw), 1.0),
        },
        Kind::Plain => (raw, 1.0),
        Kind::Config => {
            return match raw {
                "backward" => Ok(0.0),
                "forward" => Ok(1.0),
                _ => Err(parse_error(
                    line,
                    name,
                    format!("expected backward or forward, got {raw:?}"),
                )),
            }
        }
    };
    let value: f64 = body
        .trim()
        .parse()
        .map_err(|_| parse_error(line, name, format!("not a number: {raw:?}")))?;
    if !value.is_finite() {
        return Err(parse_error(line, name, "value must be finite"));
    }
    Ok(value * scale)
}

struct Values<'a> {
    section: &'a Section,
    values: BTreeMap<&'static str, f64>,
}

impl Values<'_> {
    fn get(&self, name: &str) -> f64 {
        self.values[name]
    }

    fn line_of(&self, name: &str) -> usize {
        self.section
            .entries
            .get(name)
            .map_or(self.section.line, |e| e.line)
    }

    /// Re-labels a type-invariant failure with the line of the offending key.
    fn locate(&self, err: Error) -> Error {
        match err {
            Error::InvalidParameter { field, .. } => {
                parse_error(self.line_of(field), field, err.to_string())
            }
            other => other,
        }
    }
}

fn read_section<'a>(
    sections: &'a BTreeMap<String, Section>,
    name: &str,
    schema: &[Key],
) -> Result<Option<Values<'a>>> {
    let Some(section) = sections.get(name) else {
        return Ok(None);
    };
    let mut values = BTreeMap::new();
    for key in schema {
        let value = match (section.entries.get(key.name), key.default) {
            (Some(entry), _) => parse_value(key.kind, &entry.raw, entry.line, key.name)?,
            (None, Some(default)) => default,
            (None, None) => {
                return Err(parse_error(
                    section.line,
                    key.name,
                    format!("missing required key in [{name}]"),
                ))
            }
        };
        values.insert(key.name, value);
    }
    Ok(Some(Values { section, values }))
}

fn required<'a>(
    sections: &'a BTreeMap<String, Section>,
    name: &str,
    schema: &[Key],
) -> Result<Values<'a>> {
    read_section(sections, name, schema)?
        .ok_or_else(|| parse_error(0, name, format!("missing section [{name}]")))
}

/// Parses and validates a design file.
pub fn parse_design(text: &str) -> Result<Design> {
    let mut sections: BTreeMap<String, Section> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim();
            if !SECTIONS.iter().any(|(s, _)| *s == name) {
                return Err(parse_error(line, name, "unknown section"));
            }
            if sections.contains_key(name) {
                return Err(parse_error(line, name, "duplicate section"));
            }
            sections.insert(
                name.to_string(),
                Section {
                    line,
                    entries: BTreeMap::new(),
                },
            );
            current = Some(name.to_string());
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(parse_error(line, content, "expected key = value"));
        };
        let (key, value) = (key.trim(), value.trim());
        let Some(section_name) = current.as_deref() else {
            return Err(parse_error(line, key, "key outside of any section"));
        };
        let schema = SECTIONS
            .iter()
            .find(|(s, _)| *s == section_name)
            .map(|(_, k)| *k)
            .unwrap_or(&[]);
        if !schema.iter().any(|k| k.name == key) {
            return Err(parse_error(
                line,
                key,
                format!("unknown key in [{section_name}]"),
            ));
        }
        let section = sections.get_mut(section_name).expect("section registered");
        if section.entries.contains_key(key) {
            return Err(parse_error(line, key, "duplicate key"));
        }
        section.entries.insert(
            key.to_string(),
            Entry {
                line,
                raw: value.to_string(),
            },
        );
    }

    let t = required(&sections, "tool", TOOL)?;
    let q = match t.get("q") {
        q if q.is_nan() => t.get("d_axis") + 2.0 * t.get("r_edge"),
        q => q,
    };
    let tool = ToolDimensions {
        m: t.get("m"),
        r: t.get("r"),
        theta_init: t.get("theta_init"),
        theta_end: t.get("theta_end"),
        h: t.get("h"),
        p: t.get("p"),
        q,
        k: t.get("k"),
        d_axis: t.get("d_axis"),
        r_edge: t.get("r_edge"),
        v: t.get("v"),
        w_init: t.get("w_init"),
    };
    tool.validate().map_err(|e| t.locate(e))?;

    let s = required(&sections, "spring", SPRING)?;
    let spring = SpringSpec {
        kappa: s.get("kappa"),
        beta: s.get("beta"),
    };
    spring.validate().map_err(|e| s.locate(e))?;

    let c = required(&sections, "contact", CONTACT)?;
    let contact = ContactModel {
        mu: c.get("mu"),
        e: c.get("e"),
    };
    contact.validate().map_err(|e| c.locate(e))?;

    let g = required(&sections, "grasp", GRASP)?;
    let grasp = GraspState {
        f_n: g.get("f_n"),
        g_tool: g.get("g_tool"),
        alpha: g.get("alpha"),
        gamma: g.get("gamma"),
        d: g.get("d"),
        d_com: g.get("d_com"),
        theta: g.get("theta"),
        config: if g.get("config") == 0.0 {
            GraspConfig::BackwardBase
        } else {
            GraspConfig::ForwardBase
        },
    };
    grasp.validate().map_err(|e| g.locate(e))?;

    let object = match read_section(&sections, "object", OBJECT)? {
        Some(o) => {
            let object = ObjectSpec {
                g_obj: o.get("g_obj"),
                d_obj: o.get("d_obj"),
            };
            object.validate().map_err(|e| o.locate(e))?;
            Some(object)
        }
        None => None,
    };

    Ok(Design {
        tool,
        spring,
        contact,
        grasp,
        object,
    })
}

/// Writes `design` back out in radians with round-trip exact numbers.
pub fn serialize_design(design: &Design) -> String {
    let mut out = String::new();
    let t = &design.tool;
    let mut section = |name: &str, pairs: &[(&str, String)]| {
        let _ = writeln!(out, "[{name}]");
        for (k, v) in pairs {
            let _ = writeln!(out, "{k} = {v}");
        }
        out.push('\n');
    };
    let f = |x: f64| format!("{x:?}");
    section(
        "tool",
        &[
            ("m", f(t.m)),
            ("r", f(t.r)),
            ("theta_init", f(t.theta_init)),
            ("theta_end", f(t.theta_end)),
            ("h", f(t.h)),
            ("p", f(t.p)),
            ("q", f(t.q)),
            ("k", f(t.k)),
            ("d_axis", f(t.d_axis)),
            ("r_edge", f(t.r_edge)),
            ("v", f(t.v)),
            ("w_init", f(t.w_init)),
        ],
    );
    section(
        "spring",
        &[
            ("kappa", f(design.spring.kappa)),
            ("beta", f(design.spring.beta)),
        ],
    );
    section(
        "contact",
        &[("mu", f(design.contact.mu)), ("e", f(design.contact.e))],
    );
    let g = &design.grasp;
    section(
        "grasp",
        &[
            ("f_n", f(g.f_n)),
            ("g_tool", f(g.g_tool)),
            ("alpha", f(g.alpha)),
            ("gamma", f(g.gamma)),
            ("d", f(g.d)),
            ("d_com", f(g.d_com)),
            ("theta", f(g.theta)),
            ("config", g.config.name().to_string()),
        ],
    );
    if let Some(o) = &design.object {
        section("object", &[("g_obj", f(o.g_obj)), ("d_obj", f(o.d_obj))]);
    }
    out
}
