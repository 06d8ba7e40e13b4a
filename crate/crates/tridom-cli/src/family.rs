//! Family names and parameter spellings shared by the command line and the
//! pattern-document format.

use tridom::constructions::{Family, LineAxis};

pub const FAMILY_NAMES: [&str; 8] = [
    "perfect-code",
    "spds-isolated",
    "spds-lines",
    "k3-qpds",
    "k2-parallel",
    "k2-t-linear",
    "k2-sandwiched",
    "k2-diagonal",
];

pub fn family_name(f: &Family) -> &'static str {
    match f {
        Family::PerfectCode { .. } => "perfect-code",
        Family::SpdsIsolated => "spds-isolated",
        Family::SpdsLines { .. } => "spds-lines",
        Family::K3Qpds => "k3-qpds",
        Family::K2Parallel { .. } => "k2-parallel",
        Family::K2TLinear { .. } => "k2-t-linear",
        Family::K2Sandwiched { .. } => "k2-sandwiched",
        Family::K2Diagonal { .. } => "k2-diagonal",
    }
}

/// Canonical parameter list: building it back through build_family returns
/// the same family value.
pub fn family_params(f: &Family) -> Vec<(String, String)> {
    let p = |k: &str, v: String| (k.to_string(), v);
    match f {
        Family::PerfectCode { mirror } => {
            if *mirror {
                vec![p("mirror", "true".into())]
            } else {
                vec![]
            }
        }
        Family::SpdsIsolated | Family::K3Qpds => vec![],
        Family::SpdsLines { axis } => {
            let v = match axis {
                LineAxis::Rows => "rows",
                LineAxis::Cols => "cols",
            };
            vec![p("axis", v.into())]
        }
        Family::K2Parallel { hex_type } => vec![p("hex-type", hex_type.to_string())],
        Family::K2TLinear { t, types: (i, j) } => {
            vec![p("t", t.to_string()), p("types", format!("{i},{j}"))]
        }
        Family::K2Sandwiched { xi } => vec![p("xi", word_to_string(xi))],
        Family::K2Diagonal { axis, eta } => {
            vec![p("axis", axis.to_string()), p("eta", word_to_string(eta))]
        }
    }
}

pub fn word_to_string(word: &[u8]) -> String {
    word.iter().map(|d| char::from(b'0' + d)).collect()
}

fn parse_word(s: &str) -> Result<Vec<u8>, String> {
    if s.is_empty() {
        return Err("empty word".to_string());
    }
    s.chars()
        .map(|c| match c {
            '1'..='9' => Ok(c as u8 - b'0'),
            _ => Err(format!("word `{s}` must be a string of digits")),
        })
        .collect()
}

pub fn build_family(name: &str, params: &[(String, String)]) -> Result<Family, String> {
    let mut seen = std::collections::BTreeSet::new();
    for (k, _) in params {
        if !seen.insert(k.as_str()) {
            return Err(format!("duplicate parameter `{k}`"));
        }
    }
    let get = |k: &str| params.iter().find(|(p, _)| p == k).map(|(_, v)| v.as_str());
    let need = |k: &str| get(k).ok_or_else(|| format!("family `{name}` requires parameter `{k}`"));
    let allow = |keys: &[&str]| -> Result<(), String> {
        for (k, _) in params {
            if !keys.contains(&k.as_str()) {
                return Err(format!("parameter `{k}` does not apply to family `{name}`"));
            }
        }
        Ok(())
    };
    let num = |k: &str, v: &str| -> Result<u8, String> {
        v.parse().map_err(|_| format!("parameter `{k}` must be a small integer, got `{v}`"))
    };

    match name {
        "perfect-code" => {
            allow(&["mirror"])?;
            let mirror = match get("mirror") {
                None | Some("false") => false,
                Some("true") => true,
                Some(v) => return Err(format!("parameter `mirror` must be true or false, got `{v}`")),
            };
            Ok(Family::PerfectCode { mirror })
        }
        "spds-isolated" => {
            allow(&[])?;
            Ok(Family::SpdsIsolated)
        }
        "spds-lines" => {
            allow(&["axis"])?;
            let axis = match need("axis")? {
                "rows" => LineAxis::Rows,
                "cols" => LineAxis::Cols,
                v => return Err(format!("parameter `axis` must be rows or cols, got `{v}`")),
            };
            Ok(Family::SpdsLines { axis })
        }
        "k3-qpds" => {
            allow(&[])?;
            Ok(Family::K3Qpds)
        }
        "k2-parallel" => {
            allow(&["hex-type"])?;
            let hex_type = num("hex-type", need("hex-type")?)?;
            Ok(Family::K2Parallel { hex_type })
        }
        "k2-t-linear" => {
            allow(&["t", "types"])?;
            let t: u32 = need("t")?
                .parse()
                .map_err(|_| format!("parameter `t` must be a positive integer, got `{}`", get("t").unwrap()))?;
            let tv = need("types")?;
            let (i, j) = tv
                .split_once(',')
                .ok_or_else(|| format!("parameter `types` must look like i,j, got `{tv}`"))?;
            Ok(Family::K2TLinear {
                t,
                types: (num("types", i.trim())?, num("types", j.trim())?),
            })
        }
        "k2-sandwiched" => {
            allow(&["xi"])?;
            Ok(Family::K2Sandwiched { xi: parse_word(need("xi")?)? })
        }
        "k2-diagonal" => {
            allow(&["axis", "eta"])?;
            Ok(Family::K2Diagonal {
                axis: num("axis", need("axis")?)?,
                eta: parse_word(need("eta")?)?,
            })
        }
        other => Err(format!(
            "unknown family `{other}`; expected one of {}",
            FAMILY_NAMES.join(", ")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roster() -> Vec<Family> {
        vec![
            Family::PerfectCode { mirror: false },
            Family::PerfectCode { mirror: true },
            Family::SpdsIsolated,
            Family::SpdsLines { axis: LineAxis::Rows },
            Family::SpdsLines { axis: LineAxis::Cols },
            Family::K3Qpds,
            Family::K2Parallel { hex_type: 3 },
            Family::K2TLinear { t: 2, types: (2, 1) },
            Family::K2Sandwiched { xi: vec![2, 3, 3] },
            Family::K2Diagonal { axis: 3, eta: vec![1, 2, 2] },
        ]
    }

    #[test]
    fn params_round_trip_every_family() {
        for f in roster() {
            let rebuilt = build_family(family_name(&f), &family_params(&f)).unwrap();
            assert_eq!(rebuilt, f);
        }
    }

    #[test]
    fn misapplied_parameters_are_rejected() {
        let p = |k: &str, v: &str| vec![(k.to_string(), v.to_string())];
        assert!(build_family("k3-qpds", &p("xi", "23")).is_err());
        assert!(build_family("k2-sandwiched", &[]).is_err());
        assert!(build_family("spds-lines", &p("axis", "diag")).is_err());
        assert!(build_family("perfect-code", &p("mirror", "yes")).is_err());
        assert!(build_family("no-such-family", &[]).is_err());
        let dup = vec![
            ("xi".to_string(), "2".to_string()),
            ("xi".to_string(), "3".to_string()),
        ];
        assert!(build_family("k2-sandwiched", &dup).is_err());
    }

    #[test]
    fn words_are_digit_strings() {
        assert_eq!(parse_word("233").unwrap(), vec![2, 3, 3]);
        assert!(parse_word("2,3").is_err());
        assert!(parse_word("").is_err());
    }
}
