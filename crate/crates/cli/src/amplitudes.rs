use std::collections::BTreeMap;
use std::path::Path;

use fuzzy_core::numerics::{BasisTag, StateVector};
use fuzzy_core::Complex64;

use crate::config::Space;
use crate::error::CliError;

/// Reads `n re im` (circle) or `l m re im` (sphere) lines; blank lines and
/// `#` comments are skipped, missing labels are zero. Returns the cutoff
/// implied by the largest label and the normalized state.
pub fn read_amplitudes(path: &Path, space: Space) -> Result<(usize, StateVector), CliError> {
    let text = std::fs::read_to_string(path)?;
    let bad = |line: usize, msg: String| CliError::Amplitudes { path: path.to_path_buf(), line, msg };
    let mut entries: BTreeMap<(i64, i64), Complex64> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let labels = match space {
            Space::Circle => 1,
            Space::Sphere => 2,
        };
        if fields.len() != labels + 2 {
            return Err(bad(line, format!("expected {} fields, found {}", labels + 2, fields.len())));
        }
        let ints: Vec<i64> = fields[..labels]
            .iter()
            .map(|f| f.parse::<i64>().map_err(|e| bad(line, format!("label {f:?}: {e}"))))
            .collect::<Result<_, _>>()?;
        let re: f64 = fields[labels].parse().map_err(|e| bad(line, format!("real part: {e}")))?;
        let im: f64 = fields[labels + 1].parse().map_err(|e| bad(line, format!("imaginary part: {e}")))?;
        if !(re.is_finite() && im.is_finite()) {
            return Err(bad(line, "non-finite amplitude".into()));
        }
        let key = match space {
            Space::Circle => (ints[0], 0),
            Space::Sphere => {
                let (l, m) = (ints[0], ints[1]);
                if l < 0 || m.abs() > l {
                    return Err(bad(line, format!("no basis vector with l = {l}, m = {m}")));
                }
                (l, m)
            }
        };
        if entries.insert(key, Complex64::new(re, im)).is_some() {
            return Err(bad(line, "duplicate label".into()));
        }
    }
    let lambda = match space {
        Space::Circle => entries.keys().map(|k| k.0.unsigned_abs() as usize).max(),
        Space::Sphere => entries.keys().map(|k| k.0 as usize).max(),
    }
    .ok_or_else(|| bad(0, "no amplitudes".into()))?
    .max(1);
    let (dim, tag) = match space {
        Space::Circle => (2 * lambda + 1, BasisTag::Circle { lambda }),
        Space::Sphere => ((lambda + 1) * (lambda + 1), BasisTag::Sphere { lambda }),
    };
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    for ((a, b), z) in entries {
        let idx = match space {
            Space::Circle => (a + lambda as i64) as usize,
            Space::Sphere => (a * a + a + b) as usize,
        };
        amps[idx] = z;
    }
    Ok((lambda, StateVector::new(amps, tag)?))
}
